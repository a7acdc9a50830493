"""Decision-tree ingestion: class formulas over pivot symbols, Booleanization.

Trees arrive as JSON: declared pivots (feature <= threshold tests), a class
list, and a binary tree of pivot references with class-labelled leaves.  A
class formula is the disjunction over all root-to-leaf paths ending in that
class of the conjunction of branch literals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Union

from .cnf import PartialAssignment
from .formula import BOTTOM, Formula, Not, Atom, Symbol, Vocabulary, conjoin, disjoin

__all__ = [
    "Pivot",
    "Leaf",
    "Inner",
    "TreeModel",
    "TreeSchemaError",
    "load_tree",
    "load_instance",
    "class_formula",
    "booleanize",
    "classify",
]


class TreeSchemaError(ValueError):
    """Malformed tree or instance JSON."""


@dataclass(frozen=True)
class Pivot:
    id: str
    feature: str
    threshold: float


@dataclass(frozen=True)
class Leaf:
    label: str


@dataclass(frozen=True)
class Inner:
    pivot_id: str
    on_true: "TreeNode"
    on_false: "TreeNode"


TreeNode = Union[Leaf, Inner]


@dataclass(frozen=True)
class TreeModel:
    pivots: tuple[Pivot, ...]
    classes: tuple[str, ...]
    root: TreeNode
    vocabulary: Vocabulary

    def pivot_symbol(self, pivot_id: str) -> Symbol:
        return self.vocabulary.get(pivot_id)

    def pivot_by_id(self, pivot_id: str) -> Pivot:
        for pivot in self.pivots:
            if pivot.id == pivot_id:
                return pivot
        raise KeyError(pivot_id)

    def symbols(self) -> tuple[Symbol, ...]:
        return self.vocabulary.symbols()


def _parse_node(data: object, pivot_ids: set[str], classes: set[str]) -> TreeNode:
    if not isinstance(data, Mapping):
        raise TreeSchemaError(f"tree node must be an object, got {type(data).__name__}")
    if "leaf" in data:
        label = data["leaf"]
        if label not in classes:
            raise TreeSchemaError(f"unknown class at leaf: {label!r}")
        return Leaf(label)
    if "pivot" in data:
        pivot_id = data["pivot"]
        if pivot_id not in pivot_ids:
            raise TreeSchemaError(f"dangling pivot reference: {pivot_id!r}")
        missing = {"true", "false"} - set(data)
        if missing:
            raise TreeSchemaError(f"inner node on {pivot_id!r} lacks branches: {sorted(missing)}")
        return Inner(
            pivot_id,
            _parse_node(data["true"], pivot_ids, classes),
            _parse_node(data["false"], pivot_ids, classes),
        )
    raise TreeSchemaError("tree node needs either 'leaf' or 'pivot'")


def load_tree(data: bytes | str | Mapping) -> TreeModel:
    """Parse and validate the tree JSON schema."""
    if isinstance(data, (bytes, str)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise TreeSchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, Mapping):
        raise TreeSchemaError("tree JSON must be an object")
    for key in ("pivots", "classes", "root"):
        if key not in data:
            raise TreeSchemaError(f"missing key {key!r}")
    pivots = []
    for raw in data["pivots"]:
        if not isinstance(raw, Mapping) or not {"id", "feature", "threshold"} <= set(raw):
            raise TreeSchemaError(f"malformed pivot entry: {raw!r}")
        if raw.get("op", "<=") != "<=":
            raise TreeSchemaError(f"unsupported pivot op {raw['op']!r}; only '<=' splits")
        pivots.append(Pivot(str(raw["id"]), str(raw["feature"]), float(raw["threshold"])))
    ids = [p.id for p in pivots]
    if len(set(ids)) != len(ids):
        raise TreeSchemaError("pivot ids must be unique")
    classes = [str(c) for c in data["classes"]]
    if len(set(classes)) != len(classes):
        raise TreeSchemaError("class names must be unique")
    root = _parse_node(data["root"], set(ids), set(classes))
    vocab = Vocabulary(ids)
    return TreeModel(tuple(pivots), tuple(classes), root, vocab)


def load_instance(data: bytes | str | Mapping) -> tuple[dict[str, float], str | None]:
    """Parse instance JSON: feature map plus an optional label."""
    if isinstance(data, (bytes, str)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise TreeSchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, Mapping) or "features" not in data:
        raise TreeSchemaError("instance JSON must be an object with 'features'")
    features = {str(k): float(v) for k, v in data["features"].items()}
    label = data.get("label")
    return features, None if label is None else str(label)


def class_formula(model: TreeModel, cls: str) -> Formula:
    """Disjunction over paths to ``cls`` leaves of the branch-literal conjunctions."""
    if cls not in model.classes:
        raise ValueError(f"unknown class {cls!r}")
    paths: list[Formula] = []

    def walk(node: TreeNode, trail: list[Formula]) -> None:
        if isinstance(node, Leaf):
            if node.label == cls:
                paths.append(conjoin(trail))
            return
        atom = Atom(model.pivot_symbol(node.pivot_id))
        trail.append(atom)
        walk(node.on_true, trail)
        trail.pop()
        trail.append(Not(atom))
        walk(node.on_false, trail)
        trail.pop()

    walk(model.root, [])
    if not paths:
        return BOTTOM
    return disjoin(paths)


def booleanize(model: TreeModel, features: Mapping[str, float]) -> PartialAssignment:
    """Pivot symbol -> 1 iff the feature value is <= the pivot threshold (inclusive)."""
    bindings = {}
    for pivot in model.pivots:
        if pivot.feature not in features:
            raise KeyError(f"missing feature {pivot.feature!r}")
        bindings[model.pivot_symbol(pivot.id)] = features[pivot.feature] <= pivot.threshold
    return PartialAssignment.of(bindings)


def classify(model: TreeModel, instance: PartialAssignment) -> str:
    """The class at the leaf reached by following the Boolean pivot values."""
    values = {sym.name: value for sym, value in instance.bindings}
    node = model.root
    while isinstance(node, Inner):
        if node.pivot_id not in values:
            raise KeyError(f"instance does not bind pivot {node.pivot_id!r}")
        node = node.on_true if values[node.pivot_id] else node.on_false
    return node.label

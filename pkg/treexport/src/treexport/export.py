"""Train depth-tuned decision trees and export them as pivot-based JSON.

The export schema is the contrastive-explanation suite's tree/instance
interface: declared pivots (feature <= threshold), a class list, and a binary
tree whose inner nodes reference pivots ("true" = the <= branch).  Distinct
tree nodes testing the same (feature, threshold) share one pivot symbol.

Feature values are stored rounded through float32 because that is the
precision scikit-learn casts inputs to before comparing against (float64)
split thresholds; exporting the rounded values makes a plain `value <=
threshold` re-implementation agree with the library bit for bit.  Thresholds
themselves are exported exactly, without rounding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np
from sklearn.model_selection import train_test_split
from sklearn.tree import DecisionTreeClassifier

__all__ = [
    "DatasetUnavailable",
    "DegenerateTree",
    "ExportConfig",
    "load_dataset",
    "select_depth",
    "tree_to_json",
    "export_instance",
    "train_and_export",
]


class DatasetUnavailable(RuntimeError):
    pass


class DegenerateTree(RuntimeError):
    pass


@dataclass(frozen=True)
class ExportConfig:
    dataset: str
    split_seed: int = 0
    train_fraction: float = 0.8
    max_depth_grid: tuple[int, ...] = tuple(range(1, 9))

    def __post_init__(self) -> None:
        if not self.max_depth_grid:
            raise ValueError("depth grid must be non-empty")
        if not 0.0 < self.train_fraction < 1.0:
            raise ValueError("train fraction must be a proper fraction")


def load_dataset(name: str):
    """(X, y, feature_names, class_names) for iris, wine or glass."""
    if name == "iris":
        from sklearn.datasets import load_iris

        data = load_iris()
    elif name == "wine":
        from sklearn.datasets import load_wine

        data = load_wine()
    elif name == "glass":
        try:
            from sklearn.datasets import fetch_openml

            data = fetch_openml("glass", version=1, as_frame=False, parser="auto")
            X = np.asarray(data.data, dtype=float)
            y_names = [str(v) for v in data.target]
            classes = sorted(set(y_names))
            y = np.array([classes.index(v) for v in y_names])
            features = [str(f) for f in data.feature_names]
            return X, y, features, classes
        except Exception as exc:  # no cache and no network, or schema drift
            raise DatasetUnavailable(f"glass dataset unavailable: {exc}") from exc
    else:
        raise DatasetUnavailable(f"unknown dataset {name!r}")
    return (
        np.asarray(data.data, dtype=float),
        np.asarray(data.target),
        [str(f) for f in data.feature_names],
        [str(c) for c in data.target_names],
    )


def select_depth(X_train, y_train, X_test, y_test, grid: Iterable[int], seed: int):
    """Smallest depth from the grid attaining the highest test accuracy."""
    scored: list[tuple[int, float, DecisionTreeClassifier]] = []
    for depth in sorted(set(grid)):
        clf = DecisionTreeClassifier(max_depth=depth, random_state=seed)
        clf.fit(X_train, y_train)
        scored.append((depth, float(clf.score(X_test, y_test)), clf))
    best_accuracy = max(acc for _, acc, _ in scored)
    depth, accuracy, clf = next(t for t in scored if t[1] == best_accuracy)
    return clf, depth, accuracy


def tree_to_json(clf: DecisionTreeClassifier, feature_names: list[str], class_names: list[str]) -> dict:
    """Export a fitted tree in the pivot-based schema; thresholds are exact."""
    tree = clf.tree_
    if tree.node_count <= 1:
        raise DegenerateTree("the fitted tree is a single leaf")
    pivots: list[dict] = []
    pivot_ids: dict[tuple[int, float], str] = {}

    def pivot_for(node: int) -> str:
        key = (int(tree.feature[node]), float(tree.threshold[node]))
        pid = pivot_ids.get(key)
        if pid is None:
            pid = f"p{len(pivot_ids) + 1}"
            pivot_ids[key] = pid
            pivots.append(
                {
                    "id": pid,
                    "feature": feature_names[key[0]],
                    "op": "<=",
                    "threshold": key[1],
                }
            )
        return pid

    def walk(node: int) -> dict:
        if tree.children_left[node] == -1:
            label = class_names[int(np.argmax(tree.value[node][0]))]
            return {"leaf": label}
        return {
            "pivot": pivot_for(node),
            "true": walk(int(tree.children_left[node])),
            "false": walk(int(tree.children_right[node])),
        }

    root = walk(0)
    return {"pivots": pivots, "classes": list(class_names), "root": root}


def export_instance(
    clf: DecisionTreeClassifier,
    feature_names: list[str],
    class_names: list[str],
    row: np.ndarray,
    label: str,
) -> dict:
    """One test row: float32-rounded features, true label, tree prediction."""
    features = {name: float(np.float32(value)) for name, value in zip(feature_names, row)}
    predicted = class_names[int(clf.predict(row.reshape(1, -1))[0])]
    return {"features": features, "label": label, "predicted": predicted}


def train_and_export(cfg: ExportConfig, out_dir: Path | str) -> dict:
    """Train on an 80/20 split, pick the depth, write tree/instances/metrics JSON."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    X, y, feature_names, class_names = load_dataset(cfg.dataset)
    X_train, X_test, y_train, y_test = train_test_split(
        X, y, train_size=cfg.train_fraction, random_state=cfg.split_seed
    )
    if len(set(y_train.tolist())) < 2:
        raise DegenerateTree("training split holds a single class")
    clf, depth, accuracy = select_depth(
        X_train, y_train, X_test, y_test, cfg.max_depth_grid, cfg.split_seed
    )
    tree_json = tree_to_json(clf, feature_names, class_names)
    instances = [
        export_instance(clf, feature_names, class_names, row, class_names[int(label)])
        for row, label in zip(X_test, y_test)
    ]
    metrics = {
        "dataset": cfg.dataset,
        "seed": cfg.split_seed,
        "train_fraction": cfg.train_fraction,
        "depth_grid": list(cfg.max_depth_grid),
        "chosen_depth": depth,
        "test_accuracy": accuracy,
        "n_train": int(len(X_train)),
        "n_test": int(len(X_test)),
        "n_pivots": len(tree_json["pivots"]),
    }
    (out_dir / "tree.json").write_text(json.dumps(tree_json, indent=2))
    (out_dir / "instances.json").write_text(json.dumps({"instances": instances}, indent=2))
    (out_dir / "metrics.json").write_text(json.dumps(metrics, indent=2))
    return metrics

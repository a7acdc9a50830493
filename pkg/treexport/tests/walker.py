"""Self-contained interpreter for the exported tree JSON.

Deliberately independent of the solver package: re-implements Booleanization
and classification straight off the schema, so export faithfulness is checked
against the documented interface rather than against shared code.
"""

from __future__ import annotations


def booleanize(tree_json: dict, features: dict[str, float]) -> dict[str, bool]:
    return {
        pivot["id"]: features[pivot["feature"]] <= pivot["threshold"]
        for pivot in tree_json["pivots"]
    }


def classify(tree_json: dict, values: dict[str, bool]) -> str:
    node = tree_json["root"]
    while "pivot" in node:
        node = node["true"] if values[node["pivot"]] else node["false"]
    return node["leaf"]


def classify_features(tree_json: dict, features: dict[str, float]) -> str:
    return classify(tree_json, booleanize(tree_json, features))


def leaf_classes(tree_json: dict) -> set[str]:
    out: set[str] = set()

    def walk(node: dict) -> None:
        if "leaf" in node:
            out.add(node["leaf"])
        else:
            walk(node["true"])
            walk(node["false"])

    walk(tree_json["root"])
    return out

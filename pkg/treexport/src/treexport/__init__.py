"""Decision-tree training and export in the contrastive-explanation JSON schema."""

from .export import (
    DatasetUnavailable,
    DegenerateTree,
    ExportConfig,
    export_instance,
    load_dataset,
    select_depth,
    train_and_export,
    tree_to_json,
)

__all__ = [
    "DatasetUnavailable",
    "DegenerateTree",
    "ExportConfig",
    "export_instance",
    "load_dataset",
    "select_depth",
    "train_and_export",
    "tree_to_json",
]

"""CLI: treexport --dataset iris --seed 7 --out dir/"""

from __future__ import annotations

import argparse
import sys

from .export import DatasetUnavailable, DegenerateTree, ExportConfig, train_and_export


def main() -> None:
    parser = argparse.ArgumentParser(
        prog="treexport",
        description="Train a depth-tuned decision tree and export it as pivot JSON.",
    )
    parser.add_argument("--dataset", choices=("iris", "wine", "glass"), required=True)
    parser.add_argument("--seed", type=int, default=0, help="train/test split seed")
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument(
        "--depth-grid",
        default="1,2,3,4,5,6,7,8",
        help="comma-separated max_depth values to try",
    )
    args = parser.parse_args()
    grid = tuple(int(d) for d in args.depth_grid.split(",") if d.strip())
    cfg = ExportConfig(dataset=args.dataset, split_seed=args.seed, max_depth_grid=grid)
    try:
        metrics = train_and_export(cfg, args.out)
    except (DatasetUnavailable, DegenerateTree) as exc:
        print(f"treexport: {exc}", file=sys.stderr)
        sys.exit(1)
    print(
        f"exported {args.dataset} (seed {args.seed}): depth {metrics['chosen_depth']}, "
        f"test accuracy {metrics['test_accuracy']:.3f}, {metrics['n_pivots']} pivots -> {args.out}"
    )


if __name__ == "__main__":
    main()

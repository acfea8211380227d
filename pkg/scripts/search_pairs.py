"""Search a catalog group for Gassmann-equivalent, non-conjugate subgroup pairs.

Usage:
    python3 scripts/search_pairs.py orbifold-h --order 4
    python3 scripts/search_pairs.py genus2 --order 8 --smooth
    python3 scripts/search_pairs.py genus3 --order 12 --no-dedupe --limit 5
"""

from __future__ import annotations

import argparse
import time

from sunada import SearchConfig, catalog_entry, catalog_names, find_sunada_pairs


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("name", choices=list(catalog_names()), help="catalog group to search")
    parser.add_argument("--order", type=int, required=True, help="subgroup order to enumerate")
    parser.add_argument(
        "--smooth",
        action="store_true",
        help="keep only pairs whose quotients of the catalog polygon are smooth",
    )
    parser.add_argument(
        "--no-dedupe",
        action="store_true",
        help="report every pair instead of one per simultaneous conjugacy class",
    )
    parser.add_argument(
        "--max-subgroups",
        type=int,
        default=20000,
        help="abort if the enumeration exceeds this many subgroups (default: 20000)",
    )
    parser.add_argument("--limit", type=int, default=None, help="print at most this many pairs")
    args = parser.parse_args(argv)

    entry = catalog_entry(args.name)
    config = SearchConfig(
        order=args.order,
        require_smooth=entry.polygon if args.smooth else None,
        max_subgroups=args.max_subgroups,
        dedupe=not args.no_dedupe,
    )
    started = time.perf_counter()
    pairs = find_sunada_pairs(entry.group, config)
    elapsed = time.perf_counter() - started

    print(
        f"{args.name}: group order {entry.group.order}, subgroup order {config.order},"
        f" {len(pairs)} pair(s) in {elapsed:.2f}s"
    )
    shown = pairs if args.limit is None else pairs[: args.limit]
    for u, v, report in shown:
        print(
            f"  orders {report.order_u}/{report.order_v},"
            f" sunada triple: {report.is_sunada_triple},"
            f" U = {u.members}, V = {v.members}"
        )
    if args.limit is not None and len(pairs) > args.limit:
        print(f"  ... {len(pairs) - args.limit} more")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

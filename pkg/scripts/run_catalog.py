"""Walk the built-in catalog and print verdicts, covering data, and spectra.

Usage:
    python3 scripts/run_catalog.py
    python3 scripts/run_catalog.py --names genus2 orbifold-h --tol 1e-10
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from sunada import (
    CatalogEntry,
    adjacency_matrix,
    catalog_entry,
    catalog_names,
    covering_report,
    eigenvalues_symmetric,
    graph_isomorphic,
    is_sunada_triple,
    schreier_graph,
    spectra_equal,
)


@dataclass(frozen=True)
class DemoConfig:
    names: tuple[str, ...]
    tol: float


def describe_subgroup(entry: CatalogEntry, sub_name: str, sub) -> None:
    report = covering_report(entry.group, sub, entry.polygon)
    cones = ", ".join(
        f"{c.label}: order {c.order} x{c.multiplicity}" for c in report.cone_points
    )
    genus = str(report.genus) if report.genus is not None else f"n/a ({report.note})"
    print(
        f"  {sub_name}: index {report.index}, chi_orb {report.chi_orb},"
        f" chi_top {report.chi_top}, genus {genus}, smooth {report.smooth}"
    )
    print(f"    cone points: {cones or 'none'}")


def describe_graphs(entry: CatalogEntry, labels: tuple[tuple[str, int], ...]) -> None:
    graph_u = schreier_graph(entry.group, entry.subgroup_u, labels)
    graph_v = schreier_graph(entry.group, entry.subgroup_v, labels)
    direct = graph_isomorphic(graph_u, graph_v, mode="direct")
    rev = graph_isomorphic(graph_u, graph_v, mode="reversed")
    shown = ",".join(name for name, _ in labels)
    print(
        f"  graphs on {{{shown}}}: {graph_u.vertex_count} vertices,"
        f" {len(graph_u.arcs)} arcs, direct iso {direct is not None},"
        f" reversed iso {rev is not None}"
    )


def describe_entry(name: str, tol: float) -> None:
    entry = catalog_entry(name)
    verdict = is_sunada_triple(entry.group, entry.subgroup_u, entry.subgroup_v)
    print(f"== {name} ==")
    print(
        f"  group order {verdict.group_order}, subgroups {entry.u_name}/{entry.v_name}"
        f" of orders {verdict.order_u}/{verdict.order_v}"
    )
    print(
        f"  gassmann equivalent: {verdict.gassmann},"
        f" conjugate: {verdict.conjugator is not None},"
        f" sunada triple: {verdict.is_sunada_triple}"
    )
    describe_subgroup(entry, entry.u_name, entry.subgroup_u)
    describe_subgroup(entry, entry.v_name, entry.subgroup_v)
    # Full label set first, then the first two labels: dropping the redundant
    # relator generator is where reversed isomorphisms show up.
    describe_graphs(entry, entry.generator_labels)
    if len(entry.generator_labels) > 2:
        describe_graphs(entry, entry.generator_labels[:2])
    graph_u = schreier_graph(entry.group, entry.subgroup_u, entry.generator_labels)
    graph_v = schreier_graph(entry.group, entry.subgroup_v, entry.generator_labels)
    spec_u = eigenvalues_symmetric(adjacency_matrix(graph_u))
    spec_v = eigenvalues_symmetric(adjacency_matrix(graph_v))
    same = spectra_equal(spec_u.eigenvalues, spec_v.eigenvalues, tol=tol)
    head = ", ".join(f"{x:.6f}" for x in spec_u.eigenvalues[:4])
    print(f"  spectra match within {tol:g}: {same}")
    print(f"  lowest eigenvalues: {head}, ...")
    print()


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--names",
        nargs="+",
        default=list(catalog_names()),
        choices=list(catalog_names()),
        help="catalog entries to summarize (default: all)",
    )
    parser.add_argument(
        "--tol",
        type=float,
        default=1e-9,
        help="tolerance for comparing sorted spectra (default: 1e-9)",
    )
    args = parser.parse_args(argv)
    config = DemoConfig(names=tuple(args.names), tol=args.tol)
    for name in config.names:
        describe_entry(name, config.tol)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

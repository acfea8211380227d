"""Right coset tables, Schreier coset graphs, and labeled digraph isomorphism.

Cosets are right cosets U\\G with G acting by right multiplication; vertex 0 is
the coset of the identity.  The same coset action drives the orbit counting in
the covering module, so the two stay consistent by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

from .algebra import FiniteGroup, UsageError
from .gassmann import Subgroup, check_parent

__all__ = [
    "CosetTable",
    "coset_table",
    "coset_action",
    "SchreierGraph",
    "schreier_graph",
    "graph_isomorphic",
    "to_dot",
    "graph_json_dict",
]


@dataclass(frozen=True)
class CosetTable:
    """Enumeration of right cosets of a subgroup.

    ``transversal[i]`` is the element index representing coset i (coset 0 is
    represented by the identity) and ``coset_of[e]`` is the coset index of the
    coset containing element e.
    """

    subgroup: Subgroup = field(repr=False)
    transversal: tuple[int, ...]
    coset_of: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.transversal)


def coset_table(group: FiniteGroup, sub: Subgroup) -> CosetTable:
    """Enumerate U\\G breadth-first from U along the group generators."""
    check_parent(group, sub)
    n = group.order
    coset_of = [-1] * n
    transversal = [group.identity]
    for u in sub.members:
        coset_of[u] = 0
    head = 0
    while head < len(transversal):
        rep = transversal[head]
        head += 1
        for g in group.generators:
            e = group.mul(rep, g)
            if coset_of[e] < 0:
                cid = len(transversal)
                transversal.append(e)
                for u in sub.members:
                    coset_of[group.mul(u, e)] = cid
    if any(c < 0 for c in coset_of):
        raise UsageError("generators do not reach every coset")
    return CosetTable(sub, tuple(transversal), tuple(coset_of))


def coset_action(group: FiniteGroup, table: CosetTable, element_index: int) -> tuple[int, ...]:
    """Permutation of coset indices induced by right multiplication with the
    given element."""
    return tuple(table.coset_of[group.mul(rep, element_index)]
                 for rep in table.transversal)


@dataclass(frozen=True)
class SchreierGraph:
    """Labeled digraph on coset vertices; per label, every vertex has exactly
    one outgoing and one incoming arc."""

    vertex_count: int
    labels: tuple[str, ...]
    arcs: tuple[tuple[int, int, str], ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise UsageError("arc labels must be unique")
        for label in self.labels:
            outs = [dst for src, dst, lab in self.arcs if lab == label]
            srcs = sorted(src for src, dst, lab in self.arcs if lab == label)
            if srcs != list(range(self.vertex_count)) or sorted(outs) != list(range(self.vertex_count)):
                raise UsageError(f"label {label!r} does not define a permutation of the vertices")

    def out_map(self, label: str) -> tuple[int, ...]:
        """The permutation src -> dst of one label."""
        out = [-1] * self.vertex_count
        for src, dst, lab in self.arcs:
            if lab == label:
                out[src] = dst
        return tuple(out)


def schreier_graph(group: FiniteGroup, sub: Subgroup,
                   labels: Sequence[tuple[str, int]]) -> SchreierGraph:
    """Schreier coset graph of U\\G with one arc family per (label, element)."""
    table = coset_table(group, sub)
    names = tuple(name for name, _ in labels)
    arcs: list[tuple[int, int, str]] = []
    actions = {name: coset_action(group, table, e) for name, e in labels}
    for src in range(table.count):
        for name in names:
            arcs.append((src, actions[name][src], name))
    return SchreierGraph(table.count, names, tuple(arcs))


def _inverse_perm(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, img in enumerate(perm):
        inv[img] = i
    return inv


def graph_isomorphic(g1: SchreierGraph, g2: SchreierGraph,
                     mode: Literal["direct", "reversed"] = "direct") -> tuple[int, ...] | None:
    """Label-preserving vertex bijection from g1 to g2, or None.

    In "direct" mode arcs map to arcs; in "reversed" mode an arc u -> v of g1
    must map to an arc phi(v) -> phi(u) of g2.  The search is deterministic
    and returns the first bijection in candidate order, so a graph tested
    against itself in direct mode yields the identity.
    """
    if mode not in ("direct", "reversed"):
        raise UsageError(f"unknown isomorphism mode {mode!r}")
    n = g1.vertex_count
    if n != g2.vertex_count or sorted(g1.labels) != sorted(g2.labels):
        return None
    labels = g1.labels
    out1 = {lab: g1.out_map(lab) for lab in labels}
    in1 = {lab: _inverse_perm(out1[lab]) for lab in labels}
    target = {lab: g2.out_map(lab) for lab in labels}
    if mode == "reversed":
        target = {lab: tuple(_inverse_perm(perm)) for lab, perm in target.items()}
    target_inv = {lab: _inverse_perm(target[lab]) for lab in labels}

    # Connected components of g1, each explored from its least vertex.  Within
    # a component the image of the root forces every other image, so the
    # search branches only over root candidates.
    comp_roots: list[int] = []
    comp_id = [-1] * n
    for start in range(n):
        if comp_id[start] >= 0:
            continue
        comp_roots.append(start)
        stack = [start]
        comp_id[start] = len(comp_roots) - 1
        while stack:
            v = stack.pop()
            for lab in labels:
                for w in (out1[lab][v], in1[lab][v]):
                    if comp_id[w] < 0:
                        comp_id[w] = comp_id[start]
                        stack.append(w)

    phi = [-1] * n
    used = [False] * n

    def propagate(root: int, image: int) -> list[int] | None:
        assigned: list[int] = []

        def assign(v: int, w: int) -> bool:
            if phi[v] >= 0:
                return phi[v] == w
            if used[w]:
                return False
            phi[v] = w
            used[w] = True
            assigned.append(v)
            queue.append(v)
            return True

        queue: list[int] = []
        if not assign(root, image):
            return None
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for lab in labels:
                if not assign(out1[lab][v], target[lab][phi[v]]):
                    break
                if not assign(in1[lab][v], target_inv[lab][phi[v]]):
                    break
            else:
                continue
            for v in assigned:
                used[phi[v]] = False
                phi[v] = -1
            return None
        return assigned

    def solve(ci: int) -> bool:
        if ci == len(comp_roots):
            return True
        root = comp_roots[ci]
        for cand in range(n):
            if used[cand]:
                continue
            assigned = propagate(root, cand)
            if assigned is None:
                continue
            if solve(ci + 1):
                return True
            for v in assigned:
                used[phi[v]] = False
                phi[v] = -1
        return False

    return tuple(phi) if solve(0) else None


def _sorted_arcs(graph: SchreierGraph) -> list[tuple[int, int, str]]:
    return sorted(graph.arcs, key=lambda arc: (arc[0], arc[2]))


def to_dot(graph: SchreierGraph) -> str:
    """Graphviz text; vertices ascending, arcs in (source, label) order, so the
    output is byte-stable."""
    lines = ["digraph schreier {"]
    for v in range(graph.vertex_count):
        lines.append(f"  v{v};")
    for src, dst, label in _sorted_arcs(graph):
        escaped = label.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  v{src} -> v{dst} [label="{escaped}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json_dict(graph: SchreierGraph) -> dict:
    """Adjacency listing in the same deterministic arc order as the dot text."""
    return {
        "vertices": graph.vertex_count,
        "labels": list(graph.labels),
        "arcs": [{"src": src, "dst": dst, "label": label}
                 for src, dst, label in _sorted_arcs(graph)],
    }

"""Coset tables, Schreier coset graphs, and labeled digraph isomorphism."""

from __future__ import annotations

import random

import pytest

from sunada import (
    Perm,
    SchreierGraph,
    UsageError,
    coset_action,
    coset_table,
    full_subgroup,
    graph_isomorphic,
    graph_json_dict,
    schreier_graph,
    subgroup_from_members,
    subgroup_generate,
    to_dot,
)


def _verify_bijection(g1, g2, phi, mode):
    """Definitional check: phi carries each label action of g1 onto the label
    action (direct) or inverse action (reversed) of g2."""
    n = g1.vertex_count
    for label in g1.labels:
        s1 = g1.out_map(label)
        s2 = g2.out_map(label)
        if mode == "reversed":
            inv = [0] * n
            for i, x in enumerate(s2):
                inv[x] = i
            s2 = tuple(inv)
        for v in range(n):
            if phi[s1[v]] != s2[phi[v]]:
                return False
    return True


# --------------------------------------------------------------- coset tables


def test_coset_table_partitions_group(genus2):
    g, u = genus2.group, genus2.subgroup_u
    table = coset_table(g, u)
    assert table.count == 12
    assert table.transversal[0] == g.identity
    # each coset has |U| elements and contains its representative
    from collections import Counter

    counts = Counter(table.coset_of)
    assert set(counts.values()) == {u.order}
    for k, rep in enumerate(table.transversal):
        assert table.coset_of[rep] == k
        for m in u.members:
            assert table.coset_of[g.mul(m, rep)] == k


def test_coset_action_is_right_action(genus2):
    g, u = genus2.group, genus2.subgroup_u
    table = coset_table(g, u)
    rng = random.Random(3)
    for _ in range(10):
        x, y = rng.randrange(g.order), rng.randrange(g.order)
        ax, ay = coset_action(g, table, x), coset_action(g, table, y)
        axy = coset_action(g, table, g.mul(x, y))
        assert axy == tuple(ay[ax[v]] for v in range(table.count))
    assert coset_action(g, table, g.identity) == tuple(range(table.count))


def test_coset_action_values_are_permutations(orbifold_h):
    g, u = orbifold_h.group, orbifold_h.subgroup_u
    table = coset_table(g, u)
    for e in range(g.order):
        action = coset_action(g, table, e)
        assert sorted(action) == list(range(table.count))


# -------------------------------------------------------------- graph building


def test_schreier_graph_sizes(genus2):
    g, u = genus2.group, genus2.subgroup_u
    two = schreier_graph(g, u, genus2.generator_labels[:2])
    assert two.vertex_count == 12
    assert len(two.arcs) == 24
    three = schreier_graph(g, u, genus2.generator_labels)
    assert three.vertex_count == 12
    assert len(three.arcs) == 36
    assert three.labels == ("a", "b", "c")


def test_schreier_graph_per_label_degrees(genus2):
    g = schreier_graph(genus2.group, genus2.subgroup_u, genus2.generator_labels)
    for label in g.labels:
        out = g.out_map(label)
        # functional and injective: out-degree and in-degree are both 1
        assert sorted(out) == list(range(g.vertex_count))


def test_schreier_graph_arc_order_is_deterministic(genus2):
    g, u = genus2.group, genus2.subgroup_u
    graph = schreier_graph(g, u, genus2.generator_labels)
    maps = {label: graph.out_map(label) for label in graph.labels}
    expected = tuple(
        (src, maps[label][src], label)
        for src in range(graph.vertex_count)
        for label in graph.labels
    )
    assert graph.arcs == expected


def test_schreier_graph_rejects_duplicate_labels(genus2):
    g, u = genus2.group, genus2.subgroup_u
    (_, ia), (_, ib) = genus2.generator_labels[:2]
    with pytest.raises(UsageError):
        schreier_graph(g, u, [("a", ia), ("a", ib)])


def test_full_quotient_is_single_vertex_with_loops(genus2):
    g = schreier_graph(genus2.group, full_subgroup(genus2.group), genus2.generator_labels)
    assert g.vertex_count == 1
    assert g.arcs == ((0, 0, "a"), (0, 0, "b"), (0, 0, "c"))


# ---------------------------------------------------------------- isomorphism


def test_genus2_graphs_direct_absent_reversed_present(genus2):
    labels = genus2.generator_labels[:2]
    g1 = schreier_graph(genus2.group, genus2.subgroup_u, labels)
    g2 = schreier_graph(genus2.group, genus2.subgroup_v, labels)
    assert graph_isomorphic(g1, g2, "direct") is None
    phi = graph_isomorphic(g1, g2, "reversed")
    assert phi is not None
    assert sorted(phi) == list(range(12))
    assert _verify_bijection(g1, g2, phi, "reversed")


def test_genus2_three_label_graphs_admit_no_isomorphism(genus2):
    # with c = (a b)^-1 present a reversed bijection would force the two coset
    # actions of ab and ba to agree, which they do not here
    g1 = schreier_graph(genus2.group, genus2.subgroup_u, genus2.generator_labels)
    g2 = schreier_graph(genus2.group, genus2.subgroup_v, genus2.generator_labels)
    assert graph_isomorphic(g1, g2, "direct") is None
    assert graph_isomorphic(g1, g2, "reversed") is None


def test_isomorphism_is_symmetric(genus2):
    labels = genus2.generator_labels[:2]
    g1 = schreier_graph(genus2.group, genus2.subgroup_u, labels)
    g2 = schreier_graph(genus2.group, genus2.subgroup_v, labels)
    fwd = graph_isomorphic(g1, g2, "reversed")
    back = graph_isomorphic(g2, g1, "reversed")
    assert fwd is not None and back is not None
    assert _verify_bijection(g2, g1, back, "reversed")


def test_self_isomorphism_returns_identity(genus2):
    g1 = schreier_graph(genus2.group, genus2.subgroup_u, genus2.generator_labels)
    assert graph_isomorphic(g1, g1, "direct") == tuple(range(12))


def test_conjugate_subgroups_give_directly_isomorphic_graphs(s4):
    rng = random.Random(17)
    labels = [(f"g{k}", idx) for k, idx in enumerate(s4.generators)]
    for _ in range(5):
        sub = subgroup_generate(s4, rng.sample(range(s4.order), 2))
        g = rng.randrange(s4.order)
        conj = subgroup_from_members(s4, [s4.conjugate(g, x) for x in sub.members])
        g1 = schreier_graph(s4, sub, labels)
        g2 = schreier_graph(s4, conj, labels)
        phi = graph_isomorphic(g1, g2, "direct")
        assert phi is not None
        assert _verify_bijection(g1, g2, phi, "direct")


def test_isomorphism_requires_matching_shape(genus2, s4):
    g1 = schreier_graph(genus2.group, genus2.subgroup_u, genus2.generator_labels[:2])
    labels = [(f"g{k}", idx) for k, idx in enumerate(s4.generators)]
    g3 = schreier_graph(s4, subgroup_generate(s4, []), labels)
    assert graph_isomorphic(g1, g3, "direct") is None
    with pytest.raises(UsageError):
        graph_isomorphic(g1, g1, "sideways")


# -------------------------------------------------------------------- exports


def test_to_dot_single_vertex_exact_bytes(genus2):
    g = schreier_graph(genus2.group, full_subgroup(genus2.group), genus2.generator_labels[:1])
    assert to_dot(g) == 'digraph schreier {\n  v0;\n  v0 -> v0 [label="a"];\n}\n'


def test_to_dot_genus2_structure(genus2):
    g = schreier_graph(genus2.group, genus2.subgroup_u, genus2.generator_labels)
    dot = to_dot(g)
    lines = dot.splitlines()
    assert lines[0] == "digraph schreier {"
    assert lines[-1] == "}"
    assert dot.endswith("}\n")
    arc_lines = [ln for ln in lines if " -> " in ln]
    assert len(arc_lines) == 36
    sigma_a = g.out_map("a")
    assert f'  v0 -> v{sigma_a[0]} [label="a"];' in arc_lines


def test_to_dot_escapes_label_text(s3):
    sub = full_subgroup(s3)
    g = schreier_graph(s3, sub, [('q"\\', s3.generators[0])])
    assert '[label="q\\"\\\\"];' in to_dot(g)


def test_graph_json_dict_round_trip(genus2):
    g = schreier_graph(genus2.group, genus2.subgroup_u, genus2.generator_labels)
    d = graph_json_dict(g)
    assert d["vertices"] == 12
    assert d["labels"] == ["a", "b", "c"]
    assert len(d["arcs"]) == 36
    assert all(set(a) == {"src", "dst", "label"} for a in d["arcs"])
    rebuilt = SchreierGraph(
        vertex_count=d["vertices"],
        labels=tuple(d["labels"]),
        arcs=tuple((a["src"], a["dst"], a["label"]) for a in d["arcs"]),
    )
    assert graph_isomorphic(g, rebuilt, "direct") == tuple(range(12))

"""Built-in worked examples: construction checks and expected invariants."""

from __future__ import annotations

from fractions import Fraction

import pytest

from sunada import (
    CatalogError,
    Mat2,
    Perm,
    SemiPair,
    catalog_entry,
    catalog_names,
    covering_report,
    element_order,
    is_sunada_triple,
)
from sunada.specfile import document_from_catalog, parse_document


def test_catalog_names_are_stable():
    assert catalog_names() == ("genus2", "genus3", "orbifold-h")
    with pytest.raises(CatalogError):
        catalog_entry("bogus")


def test_entries_carry_distinct_subgroups():
    for name in catalog_names():
        entry = catalog_entry(name)
        assert entry.subgroup_u.member_set != entry.subgroup_v.member_set
        assert entry.subgroup_u.order == entry.subgroup_v.order
        assert entry.subgroups == {entry.u_name: entry.subgroup_u,
                                   entry.v_name: entry.subgroup_v}


@pytest.mark.parametrize(
    "name, element_type",
    [("genus2", Perm), ("genus3", Mat2), ("orbifold-h", SemiPair)],
)
def test_entry_element_families(name, element_type):
    entry = catalog_entry(name)
    assert all(isinstance(e, element_type) for e in entry.group.elements)


def test_expectations_match_computation():
    for name in catalog_names():
        entry = catalog_entry(name)
        exp = entry.expected
        assert entry.group.order == exp.group_order
        assert entry.subgroup_u.order == exp.subgroup_order
        assert entry.subgroup_u.index == exp.index
        orders = tuple(
            element_order(entry.group.element(idx)) for _, idx in entry.polygon.cycles
        )
        assert orders == exp.cycle_orders

        verdict = is_sunada_triple(entry.group, entry.subgroup_u, entry.subgroup_v)
        assert verdict.is_sunada_triple

        for sub in (entry.subgroup_u, entry.subgroup_v):
            report = covering_report(entry.group, sub, entry.polygon)
            assert report.chi_orb == exp.chi_orb
            assert report.smooth == exp.smooth
            if exp.genus is not None:
                assert report.genus == exp.genus


def test_expected_constants_pinned():
    assert catalog_entry("genus2").expected.chi_orb == Fraction(-2)
    assert catalog_entry("genus2").expected.genus == 2
    assert catalog_entry("genus3").expected.chi_orb == Fraction(-4)
    assert catalog_entry("genus3").expected.genus == 3
    h = catalog_entry("orbifold-h").expected
    assert h.chi_orb == Fraction(-2)
    assert h.smooth is False
    assert h.genus is None


def test_generator_labels_resolve(genus2, genus3, orbifold_h):
    for entry in (genus2, genus3, orbifold_h):
        for name, idx in entry.generator_labels:
            assert 0 <= idx < entry.group.order
        names = [name for name, _ in entry.generator_labels]
        assert len(set(names)) == len(names)


def test_document_round_trip_preserves_structure():
    for name in catalog_names():
        entry = catalog_entry(name)
        loaded = parse_document(document_from_catalog(entry))
        assert loaded.group.order == entry.group.order
        # identical subgroup member sets, compared as elements
        for sub_name, sub in entry.subgroups.items():
            original = {entry.group.element(i) for i in sub.members}
            rebuilt = {
                loaded.group.element(i) for i in loaded.subgroups[sub_name].members
            }
            assert original == rebuilt
        # polygon survives with the same labels and elements
        assert loaded.polygon is not None
        assert len(loaded.polygon.cycles) == len(entry.polygon.cycles)
        for (lab_a, idx_a), (lab_b, idx_b) in zip(entry.polygon.cycles, loaded.polygon.cycles):
            assert lab_a == lab_b
            assert entry.group.element(idx_a) == loaded.group.element(idx_b)


def test_polygon_words_cover_every_cycle():
    for name in catalog_names():
        entry = catalog_entry(name)
        word_labels = [label for label, _ in entry.polygon_words]
        cycle_labels = [label for label, _ in entry.polygon.cycles]
        assert word_labels == cycle_labels

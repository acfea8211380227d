"""Exhaustive subgroup enumeration and Sunada pair search for small groups.

Subgroups of a target order are found by growing cyclic subgroups: every
subgroup is reachable by repeatedly adjoining one element and closing, and
every intermediate stage is itself a subgroup of the target, so the lattice
walk below is complete.  Sizes are kept small by abandoning any closure that
grows past the target order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import FiniteGroup, ResourceError, element_order
from .covering import PolygonSpec, smoothness
from .gassmann import (SunadaReport, Subgroup, class_intersection_profile,
                       conjugate_members, is_sunada_triple)

__all__ = [
    "SearchConfig",
    "enumerate_subgroups",
    "find_sunada_pairs",
    "simultaneous_conjugator",
]

DEFAULT_SUBGROUP_CAP = 20000


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters: target subgroup order, an optional polygon whose
    quotients must be smooth, a cap on distinct subgroups explored, and
    whether to deduplicate pairs up to simultaneous conjugacy."""

    order: int
    require_smooth: PolygonSpec | None = None
    max_subgroups: int = DEFAULT_SUBGROUP_CAP
    dedupe: bool = True


def _closure_capped(group: FiniteGroup, seed: frozenset[int], extra: int,
                    cap: int) -> frozenset[int] | None:
    """Closure of seed + {extra} under the product, or None once it passes cap."""
    members = set(seed)
    members.add(extra)
    gens = sorted(members)
    work = list(gens)
    head = 0
    while head < len(work):
        x = work[head]
        head += 1
        for g in gens:
            p = group.mul(x, g)
            if p not in members:
                if len(members) >= cap:
                    return None
                members.add(p)
                work.append(p)
    return frozenset(members)


def enumerate_subgroups(group: FiniteGroup, order: int,
                        max_subgroups: int = DEFAULT_SUBGROUP_CAP,
                        up_to_conjugacy: bool = False) -> list[Subgroup]:
    """All subgroups of the given order, sorted by member tuple.

    A non-divisor order yields an empty list.  ``up_to_conjugacy`` keeps one
    representative per conjugacy orbit (the least member tuple).  Raises
    ResourceError when the walk exceeds ``max_subgroups`` distinct subgroups.
    """
    if order < 1:
        return []
    if group.order % order != 0:
        return []
    identity = group.identity
    if order == 1:
        return [Subgroup(group, (identity,))]

    def admissible(size: int) -> bool:
        return order % size == 0

    seen: set[frozenset[int]] = set()
    frontier: list[frozenset[int]] = []

    def record(members: frozenset[int]) -> None:
        if members in seen:
            return
        if len(seen) >= max_subgroups:
            raise ResourceError(
                f"subgroup enumeration exceeded max_subgroups = {max_subgroups}")
        seen.add(members)
        if len(members) < order:
            frontier.append(members)

    # Elements of non-dividing order cannot lie in a subgroup of this order.
    usable = [e for e in range(group.order)
              if admissible(element_order(group.element(e)))]
    for e in usable:
        cyclic = {identity}
        x = e
        while x != identity:
            cyclic.add(x)
            x = group.mul(x, e)
        if admissible(len(cyclic)):
            record(frozenset(cyclic))

    head = 0
    while head < len(frontier):
        base = frontier[head]
        head += 1
        for e in usable:
            if e in base:
                continue
            grown = _closure_capped(group, base, e, order)
            if grown is not None and admissible(len(grown)):
                record(grown)

    found = sorted((tuple(sorted(members)) for members in seen
                    if len(members) == order))
    subgroups = [Subgroup(group, members) for members in found]
    if up_to_conjugacy:
        subgroups = _conjugacy_representatives(group, subgroups)
    return subgroups


def _conjugacy_representatives(group: FiniteGroup, subgroups: list[Subgroup]) -> list[Subgroup]:
    by_members = {sub.member_set: sub for sub in subgroups}
    remaining = set(by_members)
    reps: list[Subgroup] = []
    for sub in subgroups:
        if sub.member_set not in remaining:
            continue
        reps.append(sub)
        for g in range(group.order):
            remaining.discard(conjugate_members(group, sub.members, g))
    return reps


def simultaneous_conjugator(group: FiniteGroup, pair1: tuple[Subgroup, Subgroup],
                            pair2: tuple[Subgroup, Subgroup]) -> int | None:
    """First g with {g U1 g^-1, g V1 g^-1} = {U2, V2} as unordered pairs, or None."""
    u1, v1 = pair1
    u2, v2 = pair2
    targets = (u2.member_set, v2.member_set)
    for g in range(group.order):
        cu = conjugate_members(group, u1.members, g)
        if cu == targets[0]:
            if conjugate_members(group, v1.members, g) == targets[1]:
                return g
        elif cu == targets[1]:
            if conjugate_members(group, v1.members, g) == targets[0]:
                return g
    return None


def find_sunada_pairs(group: FiniteGroup,
                      config: SearchConfig) -> list[tuple[Subgroup, Subgroup, SunadaReport]]:
    """All Gassmann equivalent, non-conjugate subgroup pairs of the target order.

    Pairs are scanned in sorted member order, optionally filtered so both
    quotients are smooth under ``config.require_smooth``, and deduplicated up
    to simultaneous conjugacy when ``config.dedupe`` is set.  Every returned
    report re-verifies the pair as a Sunada triple.
    """
    subgroups = enumerate_subgroups(group, config.order, config.max_subgroups)
    if config.require_smooth is not None:
        subgroups = [sub for sub in subgroups
                     if all(smoothness(group, sub, config.require_smooth))]
    profiles = [class_intersection_profile(group, sub) for sub in subgroups]
    results: list[tuple[Subgroup, Subgroup, SunadaReport]] = []
    kept: list[tuple[Subgroup, Subgroup]] = []
    for i in range(len(subgroups)):
        for j in range(i + 1, len(subgroups)):
            if profiles[i] != profiles[j]:
                continue
            report = is_sunada_triple(group, subgroups[i], subgroups[j])
            if not report.is_sunada_triple:
                continue
            pair = (subgroups[i], subgroups[j])
            if config.dedupe and any(
                    simultaneous_conjugator(group, pair, seen) is not None
                    for seen in kept):
                continue
            kept.append(pair)
            results.append((subgroups[i], subgroups[j], report))
    return results

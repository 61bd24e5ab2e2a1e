"""Brute-force oracles for independence and criticality invariants.

Everything here enumerates set families exhaustively and is the authority
that the polynomial-time routines in :mod:`indeplab.fast` are tested
against.  All routines honor a vertex cap; ``INDEPLAB_ORACLE_CAP``
overrides the default of 20.  The all-subsets critical difference is
additionally capped at 16 vertices since it admits no independence pruning.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from . import kernels
from .errors import CapExceededError, InvariantViolationError
from .graph import Graph, VertexSet, neighborhood_mask

ORACLE_CAP_DEFAULT = 20
ALL_SUBSETS_CAP = 16


def oracle_cap() -> int:
    raw = os.environ.get("INDEPLAB_ORACLE_CAP")
    return int(raw) if raw else ORACLE_CAP_DEFAULT


def _check_cap(what: str, G: Graph, cap: int | None = None) -> None:
    limit = oracle_cap() if cap is None else cap
    if G.n > limit:
        raise CapExceededError(what, G.n, limit)


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free collection of vertex subsets of one host graph."""

    host_order: int
    masks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[VertexSet]:
        return (VertexSet(self.host_order, m) for m in self.masks)

    def __contains__(self, S: VertexSet) -> bool:
        return S.host_order == self.host_order and S.mask in self.masks

    def union(self) -> VertexSet:
        acc = 0
        for m in self.masks:
            acc |= m
        return VertexSet(self.host_order, acc)

    def intersection(self) -> VertexSet:
        if not self.masks:
            raise ValueError("intersection of an empty family")
        acc = (1 << self.host_order) - 1
        for m in self.masks:
            acc &= m
        return VertexSet(self.host_order, acc)


@dataclass(frozen=True)
class CriticalityProfile:
    """Critical difference data: d, d_I, and the (maximum) critical families.

    ``d`` is the maximum of |X| - |N(X)| over all vertex subsets and ``d_I``
    the same maximum over independent sets only; they coincide on every
    graph, and the constructor path enforces that whenever the all-subsets
    maximum is computed.
    """

    d: int
    d_I: int
    crit_family: SetFamily
    mcrit_family: SetFamily


def independent_sets(G: Graph) -> Iterator[VertexSet]:
    """All independent sets of G, the empty set included, each once."""
    _check_cap("independent_sets", G)
    for m in kernels.independent_set_masks(G.adj, G.n):
        yield VertexSet(G.n, m)


def alpha(G: Graph) -> int:
    _check_cap("alpha", G)
    a, _ = kernels.omega_masks(G.adj, G.n)
    return a


def omega_family(G: Graph) -> SetFamily:
    """All maximum independent sets of G."""
    _check_cap("omega_family", G)
    _, fam = kernels.omega_masks(G.adj, G.n)
    return SetFamily(G.n, tuple(fam))


def core(G: Graph) -> VertexSet:
    """Intersection of all maximum independent sets."""
    return omega_family(G).intersection()


def corona(G: Graph) -> VertexSet:
    """Union of all maximum independent sets."""
    return omega_family(G).union()


def critical_profile(G: Graph) -> CriticalityProfile:
    """Exhaustive criticality data.

    The independent-sets maximum d_I is always computed; the all-subsets
    maximum d is recomputed and cross-asserted when n allows (<= 16), and
    taken equal to d_I beyond that.
    """
    _check_cap("critical_profile", G)
    d_i, crit = kernels.critical_masks(G.adj, G.n)
    if G.n <= ALL_SUBSETS_CAP:
        d_all = kernels.subset_max_difference(G.adj, G.n)
        if d_all != d_i:
            raise InvariantViolationError(
                f"critical difference mismatch: all-subsets {d_all} vs "
                f"independent-sets {d_i}")
    else:
        d_all = d_i
    top = max(m.bit_count() for m in crit)
    mcrit = tuple(m for m in crit if m.bit_count() == top)
    return CriticalityProfile(d_all, d_i, SetFamily(G.n, tuple(crit)),
                              SetFamily(G.n, mcrit))


def ker(G: Graph) -> VertexSet:
    """Intersection of all critical independent sets."""
    return critical_profile(G).crit_family.intersection()


def nucleus(G: Graph) -> VertexSet:
    """Intersection of all maximum critical independent sets."""
    return critical_profile(G).mcrit_family.intersection()


def diadem(G: Graph) -> VertexSet:
    """Union of all critical independent sets.

    The union over maximum critical sets is the same set; this is asserted
    on every call.
    """
    profile = critical_profile(G)
    full_union = profile.crit_family.union()
    top_union = profile.mcrit_family.union()
    if full_union.mask != top_union.mask:
        raise InvariantViolationError(
            "union of critical sets differs from union of maximum ones")
    return full_union


def is_2_bicritical_oracle(G: Graph) -> bool:
    """Whether every nonempty independent set S satisfies |N(S)| > |S|."""
    _check_cap("is_2_bicritical_oracle", G)
    for m in kernels.independent_set_masks(G.adj, G.n):
        if m and neighborhood_mask(G, m).bit_count() <= m.bit_count():
            return False
    return True

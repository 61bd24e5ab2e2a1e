"""Registry of machine-checkable structure statements.

Each registered check evaluates one proved statement about independence and
criticality structure on a concrete graph and returns a verdict carrying
either instantiating witnesses or a counterexample payload.  Since every
registered statement is a theorem, a failing verdict on any graph means an
implementation bug; corpus scans over all small labeled graphs are the
package's strongest regression suite.

Check ids (``T``/``L``/``C`` prefixes number theorems, lemmas, and
corollaries of the underlying theory) are part of the CLI contract.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Optional

from . import kernels
from .decomposition import is_almost_bipartite, larson
from .errors import CapExceededError
from .graph import Graph, _bits, is_bipartite, neighborhood_mask
from .graph6 import encode_graph6, parse_graph6
from .matching import _enum_max_matchings_masks, max_matching

MATCHING_ENUM_CAP = 14
GE_MATCHING_CAP = 12
GE_SUBSET_CAP = 12
ODD_CYCLE_CAP = 12


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    holds: bool
    applicable: bool = True
    witness: Optional[dict] = None
    counterexample: Optional[dict] = None

    @property
    def failed(self) -> bool:
        return self.applicable and not self.holds

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "holds": self.holds,
            "applicable": self.applicable,
            "witness": self.witness,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class RegistryReport:
    graph6: str
    verdicts: tuple[TheoremVerdict, ...]
    timings: Optional[dict] = None

    @property
    def failures(self) -> list[TheoremVerdict]:
        return [v for v in self.verdicts if v.failed]

    def to_dict(self, include_timings: bool = False) -> dict:
        out = {
            "graph6": self.graph6,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }
        if include_timings and self.timings is not None:
            out["timings"] = self.timings
        return out


def _members(mask: int) -> list[int]:
    return list(_bits(mask))


def _saturates(adj, source_mask: int, into_mask: int) -> bool:
    """Whether a matching saturating ``source_mask`` into ``into_mask``
    exists; plain augmenting-path matching on bitmask adjacency."""
    lefts = _members(source_mask)
    rights = {v: i for i, v in enumerate(_bits(into_mask))}
    radj = [[rights[u] for u in _bits(adj[v] & into_mask)] for v in lefts]
    match_r = [-1] * len(rights)

    def augment(i: int, seen: list[bool]) -> bool:
        for j in radj[i]:
            if not seen[j]:
                seen[j] = True
                if match_r[j] < 0 or augment(match_r[j], seen):
                    match_r[j] = i
                    return True
        return False

    return all(augment(i, [False] * len(rights)) for i in range(len(lefts)))


class GraphContext:
    """Lazy per-graph cache of the families shared by the checks."""

    def __init__(self, G: Graph, g6: Optional[str] = None,
                 detail: bool = False):
        self.G = G
        self.n = G.n
        self.adj = G.adj
        self.full = (1 << G.n) - 1
        self.detail = detail
        self._g6 = g6

    @property
    def g6(self) -> str:
        if self._g6 is None:
            self._g6 = encode_graph6(self.G)
        return self._g6

    @cached_property
    def mu(self):
        if self.n > 16:
            raise CapExceededError("theorem checks (matching table)", self.n,
                                   16)
        return kernels.mu_table(self.adj, self.n)

    @cached_property
    def mu_full(self) -> int:
        return self.mu[self.full]

    @cached_property
    def ind_masks(self) -> list[int]:
        return kernels.independent_set_masks(self.adj, self.n)

    @cached_property
    def ind_nbrs(self) -> list[int]:
        adj = self.adj
        out = []
        for m in self.ind_masks:
            nb = 0
            for v in _bits(m):
                nb |= adj[v]
            out.append(nb)
        return out

    @cached_property
    def alpha(self) -> int:
        a, fam = kernels.omega_masks(self.adj, self.n)
        self.__dict__["omega"] = fam
        return a

    @cached_property
    def omega(self) -> list[int]:
        a, fam = kernels.omega_masks(self.adj, self.n)
        self.__dict__["alpha"] = a
        return fam

    @cached_property
    def core(self) -> int:
        acc = self.full
        for m in self.omega:
            acc &= m
        return acc

    @cached_property
    def corona(self) -> int:
        acc = 0
        for m in self.omega:
            acc |= m
        return acc

    @cached_property
    def crit(self) -> list[int]:
        d, fam = kernels.critical_masks(self.adj, self.n)
        self.__dict__["d"] = d
        return fam

    @cached_property
    def d(self) -> int:
        d, fam = kernels.critical_masks(self.adj, self.n)
        self.__dict__["crit"] = fam
        return d

    @cached_property
    def mcrit(self) -> list[int]:
        top = max(m.bit_count() for m in self.crit)
        return [m for m in self.crit if m.bit_count() == top]

    @cached_property
    def ker(self) -> int:
        acc = self.full
        for m in self.crit:
            acc &= m
        return acc

    @cached_property
    def nucleus(self) -> int:
        acc = self.full
        for m in self.mcrit:
            acc &= m
        return acc

    @cached_property
    def diadem(self) -> int:
        acc = 0
        for m in self.crit:
            acc |= m
        return acc

    @cached_property
    def is_ke(self) -> bool:
        return self.alpha + self.mu_full == self.n

    @cached_property
    def parts(self):
        return larson(self.G)

    @property
    def L(self) -> int:
        return self.parts.L.mask

    @property
    def Lc(self) -> int:
        return self.parts.Lc.mask

    @property
    def boundary(self) -> int:
        return self.parts.boundary.mask

    def nb(self, mask: int) -> int:
        return neighborhood_mask(self.G, mask)

    def region_omega(self, region: int) -> tuple[int, list[int]]:
        """Independence number and maximum independent sets of the induced
        subgraph on ``region``, in host coordinates."""
        best = 0
        fam = [0]
        for m in self.ind_masks:
            if m & ~region:
                continue
            c = m.bit_count()
            if c > best:
                best = c
                fam = [m]
            elif c == best and m:
                fam.append(m)
        return best, fam

    @cached_property
    def omega_L(self) -> list[int]:
        _, fam = self.region_omega(self.L)
        return fam

    @cached_property
    def core_Lc(self) -> int:
        _, fam = self.region_omega(self.Lc)
        acc = self.full
        for m in fam:
            acc &= m
        return acc

    @cached_property
    def filtered_omega_L(self) -> list[int]:
        """Members of omega(L side) with no edge into the complement side."""
        lc = self.Lc
        return [m for m in self.omega_L if not self.nb(m) & lc]

    @cached_property
    def d_L(self) -> int:
        lmask = self.L
        best = 0
        for m, nbm in zip(self.ind_masks, self.ind_nbrs):
            if m & ~lmask:
                continue
            val = m.bit_count() - (nbm & lmask).bit_count()
            if val > best:
                best = val
        return best

    def _ge_of_region(self, region: int) -> tuple[int, int, int]:
        mu = self.mu
        mu_r = mu[region]
        dmask = 0
        for v in _bits(region):
            if mu[region ^ (1 << v)] == mu_r:
                dmask |= 1 << v
        amask = self.nb(dmask) & region & ~dmask
        cmask = region & ~dmask & ~amask
        return dmask, amask, cmask

    @cached_property
    def ge_G(self) -> tuple[int, int, int]:
        return self._ge_of_region(self.full)

    @cached_property
    def ge_L(self) -> tuple[int, int, int]:
        return self._ge_of_region(self.L)

    def max_matchings_in(self, region: int) -> list[tuple]:
        """Edge tuples of every maximum matching inside ``region``."""
        if region.bit_count() > MATCHING_ENUM_CAP:
            raise CapExceededError("maximum-matching enumeration",
                                   region.bit_count(), MATCHING_ENUM_CAP)
        mu = self.mu
        return list(_enum_max_matchings_masks(self.adj, region, mu,
                                              mu[region], ()))

    @cached_property
    def max_matchings_L(self) -> list[tuple]:
        return self.max_matchings_in(self.L)

    def image(self, edges: tuple, mask: int) -> int:
        """Image of ``mask`` under the involution of an edge list."""
        img = mask
        for a, b in edges:
            hit_a = mask >> a & 1
            hit_b = mask >> b & 1
            if hit_a != hit_b:
                if hit_a:
                    img = img & ~(1 << a) | 1 << b
                else:
                    img = img & ~(1 << b) | 1 << a
            elif hit_a:
                img |= (1 << a) | (1 << b)
        return img

    @cached_property
    def almost_bipartite(self) -> bool:
        return is_almost_bipartite(self.G)


# ---------------------------------------------------------------------------
# Registered checks.  Each takes a context and returns a TheoremVerdict.
# Passing verdicts in scan mode reuse shared constants; witness payloads are
# built only in detail mode and counterexamples only on failure.


def _ok(tid: str, witness: Optional[dict] = None) -> TheoremVerdict:
    if witness is None:
        return _OK_VERDICTS[tid]
    return TheoremVerdict(tid, True, True, witness, None)


def _fail(ctx: GraphContext, tid: str, counterexample: dict) -> TheoremVerdict:
    return TheoremVerdict(tid, False, True, None,
                          {"graph6": ctx.g6, **counterexample})


def _na(tid: str, reason: str) -> TheoremVerdict:
    key = (tid, reason)
    verdict = _NA_VERDICTS.get(key)
    if verdict is None:
        verdict = TheoremVerdict(tid, True, False,
                                 {"not_applicable": reason}, None)
        _NA_VERDICTS[key] = verdict
    return verdict


_NA_VERDICTS: dict[tuple[str, str], TheoremVerdict] = {}


def check_T1_1(ctx: GraphContext) -> TheoremVerdict:
    """Surplus law: every nonempty independent set S has |N(S)| > |S| iff
    no single-vertex deletion leaves a positive critical difference."""
    if ctx.n < 3:
        return _na("T1.1", "order below 3")
    set_side = True
    del_side = True
    bad = None
    for m, nbm in zip(ctx.ind_masks, ctx.ind_nbrs):
        if not m:
            continue
        pm = m.bit_count()
        pn = nbm.bit_count()
        if pn <= pm:
            if set_side:
                set_side = False
                bad = m
            if pn == pm or m != ctx.full:
                del_side = False
    if set_side == del_side:
        return _ok("T1.1", {"two_bicritical": set_side} if ctx.detail
                   else None)
    return _fail(ctx, "T1.1", {
        "surplus_side": set_side, "deletion_side": del_side,
        "violating_set": _members(bad) if bad is not None else None})


def check_T1_2(ctx: GraphContext) -> TheoremVerdict:
    """The core is a critical independent set iff the complement side of
    the decomposition has empty core."""
    core = ctx.core
    lhs = core.bit_count() - ctx.nb(core).bit_count() == ctx.d
    rhs = ctx.core_Lc == 0
    if lhs == rhs:
        return _ok("T1.2", {"core": _members(core), "core_is_critical": lhs}
                   if ctx.detail else None)
    return _fail(ctx, "T1.2", {
        "core_is_critical": lhs,
        "core_of_complement_side": _members(ctx.core_Lc)})


def check_L3_3(ctx: GraphContext) -> TheoremVerdict:
    """Every critical independent set I admits a matching of N(I) into I."""
    for m in ctx.crit:
        nbm = ctx.nb(m)
        if not _saturates(ctx.adj, nbm, m):
            return _fail(ctx, "L3.3", {
                "critical_set": _members(m),
                "unsaturated_neighborhood": _members(nbm)})
    return _ok("L3.3", {"critical_sets_checked": len(ctx.crit)}
               if ctx.detail else None)


def check_L3_4(ctx: GraphContext) -> TheoremVerdict:
    """core G splits as the complement-side core plus its trace on L; the
    trace is the intersection of all maximum-set traces and sits inside
    the nucleus."""
    core, lmask = ctx.core, ctx.L
    trace = core & lmask
    eq1 = core == ctx.core_Lc | trace
    inter = lmask
    for m in ctx.omega:
        inter &= m
    eq2 = trace == inter
    eq3 = trace & ~ctx.nucleus == 0
    if eq1 and eq2 and eq3:
        return _ok("L3.4", {"core_trace_on_L": _members(trace)}
                   if ctx.detail else None)
    return _fail(ctx, "L3.4", {"split_holds": eq1, "trace_identity": eq2,
                               "trace_in_nucleus": eq3})


def check_T3_5(ctx: GraphContext) -> TheoremVerdict:
    """ker G equals the D-part of the Gallai-Edmonds split of the L side."""
    d_l = ctx.ge_L[0]
    if ctx.ker == d_l:
        return _ok("T3.5", {"ker": _members(ctx.ker)} if ctx.detail else None)
    return _fail(ctx, "T3.5", {"ker": _members(ctx.ker),
                               "D_of_L": _members(d_l)})


def check_L3_6_T3_7(ctx: GraphContext) -> TheoremVerdict:
    """For every maximum critical independent set I and every maximum
    matching M of the L side: the core trace on L is M(N(I) - corona)
    joined with the D-part of L, and core G adds the complement-side core
    and ker G."""
    core, corona = ctx.core, ctx.corona
    trace = core & ctx.L
    d_l = ctx.ge_L[0]
    for imask in ctx.mcrit:
        moved = ctx.nb(imask) & ~corona
        for edges in ctx.max_matchings_L:
            img = ctx.image(edges, moved)
            if trace != img | d_l or core != ctx.core_Lc | img | ctx.ker:
                return _fail(ctx, "L3.6/T3.7", {
                    "witness_set": _members(imask),
                    "matching": sorted(edges),
                    "image": _members(img)})
    return _ok("L3.6/T3.7",
               {"pairs_checked": len(ctx.mcrit) * len(ctx.max_matchings_L)}
               if ctx.detail else None)


def check_T3_8(ctx: GraphContext) -> TheoremVerdict:
    """alpha + mu = n holds iff every maximum independent set is critical."""
    all_critical = all(
        m.bit_count() - ctx.nb(m).bit_count() == ctx.d for m in ctx.omega)
    if ctx.is_ke == all_critical:
        return _ok("T3.8", {"koenig_egervary": ctx.is_ke} if ctx.detail
                   else None)
    return _fail(ctx, "T3.8", {
        "koenig_egervary": ctx.is_ke,
        "every_maximum_set_critical": all_critical})


def check_T3_9(ctx: GraphContext) -> TheoremVerdict:
    """On alpha + mu = n graphs the maximum critical sets are exactly the
    maximum independent sets."""
    if not ctx.is_ke:
        return _na("T3.9", "not a Koenig-Egervary graph")
    if ctx.mcrit == ctx.omega:
        return _ok("T3.9", {"family_size": len(ctx.omega)} if ctx.detail
                   else None)
    return _fail(ctx, "T3.9", {
        "mcrit": [_members(m) for m in ctx.mcrit],
        "omega": [_members(m) for m in ctx.omega]})


def check_T3_10(ctx: GraphContext) -> TheoremVerdict:
    """The critical difference is inherited by the L side."""
    if ctx.d == ctx.d_L:
        return _ok("T3.10", {"critical_difference": ctx.d} if ctx.detail
                   else None)
    return _fail(ctx, "T3.10", {"d": ctx.d, "d_of_L_side": ctx.d_L})


def check_T3_11(ctx: GraphContext) -> TheoremVerdict:
    """Maximum critical sets are the maximum independent sets of the L side
    with no edge into the complement side."""
    if ctx.mcrit == ctx.filtered_omega_L:
        return _ok("T3.11", {"family_size": len(ctx.mcrit)} if ctx.detail
                   else None)
    return _fail(ctx, "T3.11", {
        "mcrit": [_members(m) for m in ctx.mcrit],
        "filtered_omega_of_L": [_members(m) for m in ctx.filtered_omega_L]})


def check_C3_12(ctx: GraphContext) -> TheoremVerdict:
    """Nucleus and diadem are the intersection and union of the filtered
    family, and the diadem stays inside corona intersected with L."""
    fam = ctx.filtered_omega_L
    if not fam:
        return _fail(ctx, "C3.12", {"filtered_family": []})
    inter = ctx.full
    union = 0
    for m in fam:
        inter &= m
        union |= m
    if (ctx.nucleus == inter and ctx.diadem == union
            and union & ~(ctx.corona & ctx.L) == 0):
        return _ok("C3.12", {"nucleus": _members(ctx.nucleus),
                             "diadem": _members(ctx.diadem)}
                   if ctx.detail else None)
    return _fail(ctx, "C3.12", {
        "nucleus": _members(ctx.nucleus), "diadem": _members(ctx.diadem),
        "family_intersection": _members(inter),
        "family_union": _members(union)})


def check_T3_13(ctx: GraphContext) -> TheoremVerdict:
    """M(N(I) - (corona - boundary)) together with ker G always lands
    inside the nucleus."""
    keep_out = ctx.corona & ~ctx.boundary
    for imask in ctx.mcrit:
        moved = ctx.nb(imask) & ~keep_out
        for edges in ctx.max_matchings_L:
            img = ctx.image(edges, moved) | ctx.ker
            if img & ~ctx.nucleus:
                return _fail(ctx, "T3.13", {
                    "witness_set": _members(imask),
                    "matching": sorted(edges),
                    "escaping": _members(img & ~ctx.nucleus)})
    return _ok("T3.13",
               {"pairs_checked": len(ctx.mcrit) * len(ctx.max_matchings_L)}
               if ctx.detail else None)


def check_T3_14(ctx: GraphContext) -> TheoremVerdict:
    """On alpha + mu = n graphs the nucleus is M(N(I) - corona) plus ker G."""
    if not ctx.is_ke:
        return _na("T3.14", "not a Koenig-Egervary graph")
    for imask in ctx.mcrit:
        moved = ctx.nb(imask) & ~ctx.corona
        for edges in ctx.max_matchings_L:
            img = ctx.image(edges, moved) | ctx.ker
            if img != ctx.nucleus:
                return _fail(ctx, "T3.14", {
                    "witness_set": _members(imask),
                    "matching": sorted(edges),
                    "image_plus_ker": _members(img),
                    "nucleus": _members(ctx.nucleus)})
    return _ok("T3.14",
               {"pairs_checked": len(ctx.mcrit) * len(ctx.max_matchings_L)}
               if ctx.detail else None)


def check_T3_15(ctx: GraphContext) -> TheoremVerdict:
    """When corona avoids the boundary, maximum critical sets are the
    L-traces of maximum independent sets, and nucleus/diadem reduce to the
    core/corona traces."""
    if ctx.corona & ctx.boundary:
        return _na("T3.15", "corona meets the boundary")
    traces = sorted({m & ctx.L for m in ctx.omega})
    if (ctx.mcrit == traces and ctx.nucleus == ctx.core & ctx.L
            and ctx.diadem == ctx.corona & ctx.L):
        return _ok("T3.15", {"traces": len(traces)} if ctx.detail else None)
    return _fail(ctx, "T3.15", {
        "mcrit": [_members(m) for m in ctx.mcrit],
        "omega_traces": [_members(m) for m in traces]})


def check_T3_16(ctx: GraphContext) -> TheoremVerdict:
    """Main characterization: core G = nucleus G iff the complement side
    has empty core and corona avoids the boundary."""
    lhs = ctx.core == ctx.nucleus
    rhs = ctx.core_Lc == 0 and ctx.corona & ctx.boundary == 0
    if lhs == rhs:
        return _ok("T3.16", {
            "core_equals_nucleus": lhs,
            "core_of_complement_side": _members(ctx.core_Lc),
            "corona_on_boundary": _members(ctx.corona & ctx.boundary)}
            if ctx.detail else None)
    return _fail(ctx, "T3.16", {
        "core_equals_nucleus": lhs,
        "core_of_complement_side": _members(ctx.core_Lc),
        "corona_on_boundary": _members(ctx.corona & ctx.boundary)})


def check_C3_17(ctx: GraphContext) -> TheoremVerdict:
    """diadem G equals the corona trace on L iff corona avoids the
    boundary."""
    lhs = ctx.diadem == ctx.corona & ctx.L
    rhs = ctx.corona & ctx.boundary == 0
    if lhs == rhs:
        return _ok("C3.17", {"diadem": _members(ctx.diadem)} if ctx.detail
                   else None)
    return _fail(ctx, "C3.17", {
        "diadem_is_corona_trace": lhs,
        "corona_on_boundary": _members(ctx.corona & ctx.boundary)})


def check_C3_18(ctx: GraphContext) -> TheoremVerdict:
    """core G = nucleus G iff the complement side has empty core and the
    diadem is the corona trace on L."""
    lhs = ctx.core == ctx.nucleus
    rhs = ctx.core_Lc == 0 and ctx.diadem == ctx.corona & ctx.L
    if lhs == rhs:
        return _ok("C3.18", {"core_equals_nucleus": lhs} if ctx.detail
                   else None)
    return _fail(ctx, "C3.18", {
        "core_equals_nucleus": lhs,
        "core_of_complement_side": _members(ctx.core_Lc),
        "diadem": _members(ctx.diadem)})


def _connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        fresh = G.adj[v] & ~seen
        seen |= fresh
        stack.extend(_bits(fresh))
    return seen == (1 << G.n) - 1


def check_almost_bipartite(ctx: GraphContext) -> TheoremVerdict:
    """For graphs with exactly one odd cycle that are not Koenig-Egervary:
    the L side is bipartite, the complement side is the odd cycle, and
    core G = nucleus G iff the C-part of the L side avoids corona on the
    boundary."""
    if ctx.n > ODD_CYCLE_CAP:
        return _na("almost-bipartite", "odd-cycle enumeration cap")
    if not ctx.almost_bipartite:
        return _na("almost-bipartite", "not almost-bipartite")
    if ctx.is_ke:
        return _na("almost-bipartite", "Koenig-Egervary graph")
    flag, _ = is_bipartite(ctx.parts.L_graph)
    lc = ctx.parts.Lc_graph
    is_odd_cycle = (lc.n >= 3 and lc.n % 2 == 1
                    and all(a.bit_count() == 2 for a in lc.adj)
                    and _connected(lc))
    d_l, a_l, c_l = ctx.ge_L
    lead_in = (flag and is_odd_cycle and ctx.core_Lc == 0
               and d_l & ctx.boundary == 0 and a_l & ctx.corona == 0)
    lhs = ctx.core == ctx.nucleus
    rhs = c_l & ctx.corona & ctx.boundary == 0
    if lead_in and lhs == rhs:
        return _ok("almost-bipartite", {
            "odd_cycle_order": lc.n, "core_equals_nucleus": lhs}
            if ctx.detail else None)
    return _fail(ctx, "almost-bipartite", {
        "L_side_bipartite": flag,
        "complement_is_odd_cycle": is_odd_cycle,
        "core_of_complement_side": _members(ctx.core_Lc),
        "D_on_boundary": _members(d_l & ctx.boundary),
        "A_on_corona": _members(a_l & ctx.corona),
        "core_equals_nucleus": lhs,
        "C_corona_boundary": _members(c_l & ctx.corona & ctx.boundary)})


def check_conclusions_identity(ctx: GraphContext) -> TheoremVerdict:
    """diadem G = corona G iff the graph is Koenig-Egervary."""
    lhs = ctx.diadem == ctx.corona
    if lhs == ctx.is_ke:
        return _ok("conclusions-identity",
                   {"koenig_egervary": ctx.is_ke} if ctx.detail else None)
    return _fail(ctx, "conclusions-identity", {
        "diadem_equals_corona": lhs, "koenig_egervary": ctx.is_ke})


def check_GE_structure(ctx: GraphContext) -> TheoremVerdict:
    """Gallai-Edmonds clauses on the whole graph: factor-critical D
    components; every maximum matching covers C, matches A into distinct
    components, and restricts to a near-perfect matching on each
    component; every nonempty subset of A touches strictly more
    components."""
    dmask, amask, cmask = ctx.ge_G
    comps = []
    rest = dmask
    while rest:
        start = rest & -rest
        seen = start
        stack = [start.bit_length() - 1]
        while stack:
            v = stack.pop()
            fresh = ctx.adj[v] & dmask & ~seen
            seen |= fresh
            stack.extend(_bits(fresh))
        comps.append(seen)
        rest &= ~seen
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in _bits(comp):
            comp_of[v] = i

    for comp in comps:
        size = comp.bit_count()
        if size % 2 == 0:
            return _fail(ctx, "GE-structure",
                         {"even_component": _members(comp)})
        target = (size - 1) // 2
        for v in _bits(comp):
            if ctx.mu[comp ^ (1 << v)] != target:
                return _fail(ctx, "GE-structure", {
                    "component": _members(comp),
                    "not_factor_critical_at": v})

    sampled = False
    if ctx.n <= GE_MATCHING_CAP:
        matchings = ctx.max_matchings_in(ctx.full)
    else:
        matchings = [tuple(max_matching(ctx.G).edges())]
        sampled = True
    for edges in matchings:
        pair = {}
        for a, b in edges:
            pair[a] = b
            pair[b] = a
        for c in _bits(cmask):
            if c not in pair:
                return _fail(ctx, "GE-structure", {
                    "matching": sorted(edges), "uncovered_C_vertex": c})
        seen_comps = set()
        for a in _bits(amask):
            p = pair.get(a, a)
            if p == a or not dmask >> p & 1 or comp_of[p] in seen_comps:
                return _fail(ctx, "GE-structure", {
                    "matching": sorted(edges), "A_vertex": a})
            seen_comps.add(comp_of[p])
        for comp in comps:
            inside = sum(1 for a, b in edges
                         if comp >> a & 1 and comp >> b & 1)
            if inside != (comp.bit_count() - 1) // 2:
                return _fail(ctx, "GE-structure", {
                    "matching": sorted(edges), "component": _members(comp),
                    "inside_edges": inside})

    if amask.bit_count() <= GE_SUBSET_CAP:
        comp_nbs = [ctx.nb(comp) for comp in comps]
        s = amask
        while s:
            touched = sum(1 for cn in comp_nbs if cn & s)
            if touched < s.bit_count() + 1:
                return _fail(ctx, "GE-structure", {
                    "A_subset": _members(s), "components_touched": touched})
            s = (s - 1) & amask

    return _ok("GE-structure", {
        "components": len(comps), "matchings_checked": len(matchings),
        "sampled": sampled} if ctx.detail else None)


REGISTRY: list[tuple[str, Callable[[GraphContext], TheoremVerdict]]] = [
    ("T1.1", check_T1_1),
    ("T1.2", check_T1_2),
    ("L3.3", check_L3_3),
    ("L3.4", check_L3_4),
    ("T3.5", check_T3_5),
    ("L3.6/T3.7", check_L3_6_T3_7),
    ("T3.8", check_T3_8),
    ("T3.9", check_T3_9),
    ("T3.10", check_T3_10),
    ("T3.11", check_T3_11),
    ("C3.12", check_C3_12),
    ("T3.13", check_T3_13),
    ("T3.14", check_T3_14),
    ("T3.15", check_T3_15),
    ("T3.16", check_T3_16),
    ("C3.17", check_C3_17),
    ("C3.18", check_C3_18),
    ("almost-bipartite", check_almost_bipartite),
    ("conclusions-identity", check_conclusions_identity),
    ("GE-structure", check_GE_structure),
]

CHECKS = dict(REGISTRY)
CHECK_IDS = [tid for tid, _ in REGISTRY]
_OK_VERDICTS = {tid: TheoremVerdict(tid, True, True, None, None)
                for tid in CHECK_IDS}


def evaluate(G: Graph, check_ids: Optional[Iterable[str]] = None,
             detail: bool = False,
             g6: Optional[str] = None) -> list[TheoremVerdict]:
    """Run the selected checks (all by default) on one graph."""
    ids = list(check_ids) if check_ids is not None else CHECK_IDS
    unknown = [i for i in ids if i not in CHECKS]
    if unknown:
        raise KeyError(f"unknown theorem ids {unknown}; valid: {CHECK_IDS}")
    ctx = GraphContext(G, g6=g6, detail=detail)
    return [CHECKS[i](ctx) for i in ids]


def check_all(G: Graph, detail: bool = True) -> RegistryReport:
    """Full registry run with per-check wall times."""
    ctx = GraphContext(G, detail=detail)
    verdicts = []
    timings = {}
    for tid, fn in REGISTRY:
        t0 = time.perf_counter()
        verdicts.append(fn(ctx))
        timings[tid] = time.perf_counter() - t0
    return RegistryReport(ctx.g6, tuple(verdicts), timings)


# ---------------------------------------------------------------------------
# Corpus scanning


@dataclass
class ScanOutcome:
    graphs: int
    failures: int
    not_applicable: int
    failure_reports: list[dict]


def _scan_one(args) -> tuple[int, int, int, Optional[dict]]:
    index, line, ids = args
    G = parse_graph6(line)
    verdicts = evaluate(G, ids, detail=False, g6=line)
    nf = sum(1 for v in verdicts if v.failed)
    na = sum(1 for v in verdicts if not v.applicable)
    payload = None
    if nf:
        payload = {
            "graph6": line,
            "verdicts": [v.to_dict()
                         for v in evaluate(G, ids, detail=True, g6=line)
                         if v.failed],
        }
    return index, nf, na, payload


def scan_graph6(lines: Iterable[str],
                check_ids: Optional[Iterable[str]] = None,
                jobs: int = 1,
                on_failure: Optional[Callable[[dict], None]] = None,
                max_reports: int = 1000) -> ScanOutcome:
    """Evaluate checks over a stream of graph6 lines.

    Parallelizes across graphs; results are consumed in input order, so the
    outcome and any failure stream are independent of ``jobs``.
    """
    ids = list(check_ids) if check_ids is not None else CHECK_IDS
    unknown = [i for i in ids if i not in CHECKS]
    if unknown:
        raise KeyError(f"unknown theorem ids {unknown}; valid: {CHECK_IDS}")
    tasks = ((i, line, ids) for i, line in enumerate(lines))
    total = failures = nas = 0
    reports: list[dict] = []

    def consume(result):
        nonlocal total, failures, nas
        _, nf, na, payload = result
        total += 1
        failures += nf
        nas += na
        if payload is not None:
            if len(reports) < max_reports:
                reports.append(payload)
            if on_failure is not None:
                on_failure(payload)

    if jobs <= 1:
        for task in tasks:
            consume(_scan_one(task))
    else:
        import multiprocessing as mp
        with mp.get_context("fork").Pool(jobs) as pool:
            for result in pool.imap(_scan_one, tasks, chunksize=64):
                consume(result)
    return ScanOutcome(total, failures, nas, reports)

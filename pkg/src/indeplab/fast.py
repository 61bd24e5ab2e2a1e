"""Polynomial-time criticality machinery via the bipartite double cover.

The double cover B of G has two copies x_v, y_v of each vertex and an edge
x_u y_v for every edge uv of G.  Its independence number satisfies
``alpha(B) = n + d(G)``: any independent I of G yields the independent set
{y_v : v in I} | {x_v : v not in N(I)} of size n + |I| - |N(I)|, and
conversely the vertices with both copies inside a maximum independent set
of B form an independent set of G attaining the critical difference.  All
postconditions here are enforced against the exhaustive oracle by tests,
not assumed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvariantViolationError
from .graph import Graph, VertexSet, _bits, build_graph, neighborhood_mask
from .matching import hopcroft_karp


@dataclass(frozen=True)
class DoubleCover:
    """Bipartite double cover of a graph of order n.

    Vertex v of the base graph appears as ``x = v`` on the left and
    ``y = n + v`` on the right.
    """

    graph: Graph
    left: VertexSet
    right: VertexSet

    @property
    def base_order(self) -> int:
        return self.graph.n // 2

    def x_of(self, v: int) -> int:
        return v

    def y_of(self, v: int) -> int:
        return self.base_order + v


def double_cover(G: Graph) -> DoubleCover:
    n = G.n
    edges = [(u, n + v) for u in range(n) for v in _bits(G.adj[u])]
    B = build_graph(2 * n, edges)
    return DoubleCover(B, VertexSet(2 * n, (1 << n) - 1),
                       VertexSet(2 * n, ((1 << n) - 1) << n))


def _cover_matching(G: Graph, alive: int) -> tuple[int, list[int], list[int]]:
    """Hopcroft-Karp on the double cover restricted to ``alive`` vertices.

    Left/right ids are positions within the alive set, in ascending vertex
    order; returns (size, match_left, match_right).
    """
    verts = list(_bits(alive))
    index = {v: i for i, v in enumerate(verts)}
    adj = [[index[u] for u in _bits(G.adj[v] & alive)] for v in verts]
    return hopcroft_karp(len(verts), len(verts), adj)


def critical_difference_fast(G: Graph) -> int:
    """d(G) computed as alpha(B) - n = n - mu(B) on the double cover B."""
    full = (1 << G.n) - 1
    size, _, _ = _cover_matching(G, full)
    return G.n - size


def extract_critical_set(G: Graph) -> VertexSet:
    """An independent set attaining the critical difference.

    Runs Hopcroft-Karp on the double cover, converts the matching into a
    minimum vertex cover by alternating reachability, and keeps the
    vertices whose two copies both avoid the cover.
    """
    n = G.n
    full = (1 << n) - 1
    verts = list(range(n))
    _, match_l, match_r = _cover_matching(G, full)
    # Alternating BFS from exposed left vertices: left -> any edge,
    # right -> matched edge.  Cover = (L - Z) | (R & Z); the complement is
    # a maximum independent set of the cover graph.
    z_left = 0
    z_right = 0
    q = deque(v for v in verts if match_l[v] < 0)
    for v in q:
        z_left |= 1 << v
    while q:
        v = q.popleft()
        for u in _bits(G.adj[v] & ~z_right):
            z_right |= 1 << u
            w = match_r[u]
            if w >= 0 and not z_left >> w & 1:
                z_left |= 1 << w
                q.append(w)
    mask = z_left & ~z_right
    result = VertexSet(n, mask)
    _assert_critical(G, mask)
    return result


def _assert_critical(G: Graph, mask: int) -> None:
    if mask & neighborhood_mask(G, mask):
        raise InvariantViolationError("extracted set is not independent")
    d = mask.bit_count() - neighborhood_mask(G, mask).bit_count()
    if d != critical_difference_fast(G):
        raise InvariantViolationError(
            f"extracted set misses the critical difference: {d}")


def _extendable(G: Graph, fmask: int, d_full: int) -> bool:
    """Whether some critical independent set contains all of ``fmask``.

    Uses the identity: F extends to a critical independent set iff F is
    independent and d_G(F) + d(G - N[F]) = d(G), evaluated with the
    matching-based difference on the residual graph.
    """
    nb = neighborhood_mask(G, fmask)
    if nb & fmask:
        return False
    alive = (1 << G.n) - 1 & ~(fmask | nb)
    size, _, _ = _cover_matching(G, alive)
    d_rest = alive.bit_count() - size
    return fmask.bit_count() - nb.bit_count() + d_rest == d_full


def is_critical_vertex(G: Graph, v: int) -> bool:
    """Whether v belongs to some critical independent set."""
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range")
    d_full = critical_difference_fast(G)
    return _extendable(G, 1 << v, d_full)


def max_critical_independent_set_fast(G: Graph) -> VertexSet:
    """The lexicographically least maximum critical independent set.

    Greedy forcing: scan vertices in increasing id and keep v whenever the
    forced set still extends to a critical independent set.  Since every
    critical independent set is contained in a maximum one, the greedy
    limit is inclusion-maximal and therefore of maximum cardinality, and
    preferring small ids first makes it the lexicographic minimum.
    """
    d_full = critical_difference_fast(G)
    fmask = 0
    blocked = 0
    for v in range(G.n):
        bit = 1 << v
        if blocked & bit:
            continue
        if _extendable(G, fmask | bit, d_full):
            fmask |= bit
            blocked |= G.adj[v]
    return VertexSet(G.n, fmask)

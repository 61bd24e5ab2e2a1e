"""Maximum matchings: general graphs (blossom), bipartite graphs
(Hopcroft-Karp), and exhaustive enumeration of maximum matchings.

A matching is presented as an involution on the vertex set: ``M(v)`` is the
partner of ``v`` when matched and ``v`` itself when exposed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import kernels
from .errors import CapExceededError, HostMismatchError, PartitionError
from .graph import Graph, VertexSet, _bits

ENUM_CAP = 14


@dataclass(frozen=True)
class Matching:
    """Involution view of a matching on ``0..host_order-1``."""

    host_order: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        p = self.pairing
        if len(p) != self.host_order or any(p[p[v]] != v for v in range(len(p))):
            raise ValueError("pairing is not an involution on the host")

    @property
    def size(self) -> int:
        return sum(1 for v, u in enumerate(self.pairing) if u != v) // 2

    def __call__(self, v: int) -> int:
        return self.pairing[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v, u in enumerate(self.pairing) if v < u]

    def is_exposed(self, v: int) -> bool:
        return self.pairing[v] == v

    def covers(self, S: VertexSet) -> bool:
        return all(self.pairing[v] != v for v in S)


def _matching_from_array(n: int, match: list[int]) -> Matching:
    return Matching(n, tuple(match[v] if match[v] >= 0 else v
                             for v in range(n)))


def validate_matching(G: Graph, M: Matching) -> None:
    """Structural check: involution, edges real, pairs disjoint."""
    if M.host_order != G.n:
        raise HostMismatchError("matching host does not match graph order")
    for v, u in enumerate(M.pairing):
        if u != v and not G.has_edge(u, v):
            raise ValueError(f"matched pair ({v}, {u}) is not an edge")


# ---------------------------------------------------------------------------
# General maximum matching (blossom contraction, O(V^3)).
# https://en.wikipedia.org/wiki/Blossom_algorithm


def _find_augmenting(adj: list[list[int]], match: list[int], root: int,
                     n: int) -> int:
    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    q = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] < 0:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    while q:
        v = q.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] >= 0 and p[match[to]] >= 0):
                # odd cycle through the root of the alternating forest:
                # contract the blossom and keep searching
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif p[to] < 0:
                p[to] = v
                if match[to] < 0:
                    # augmenting path found; flip it
                    while to >= 0:
                        pv = p[to]
                        nxt = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = nxt
                    return 1
                used[match[to]] = True
                q.append(match[to])
    return 0


def max_matching(G: Graph) -> Matching:
    """A maximum matching of G, deterministic for a fixed graph.

    Vertices are seeded greedily and augmented in increasing id order, so
    repeated runs return the identical involution.
    """
    n = G.n
    adj = [list(_bits(G.adj[v])) for v in range(n)]
    match = [-1] * n
    for v in range(n):
        if match[v] < 0:
            for u in adj[v]:
                if match[u] < 0:
                    match[v] = u
                    match[u] = v
                    break
    for v in range(n):
        if match[v] < 0:
            _find_augmenting(adj, match, v, n)
    return _matching_from_array(n, match)


def matching_number(G: Graph) -> int:
    return max_matching(G).size


# ---------------------------------------------------------------------------
# Bipartite maximum matching (Hopcroft-Karp).
# https://en.wikipedia.org/wiki/Hopcroft%E2%80%93Karp_algorithm


def hopcroft_karp(nleft: int, nright: int,
                  adj: list[list[int]]) -> tuple[int, list[int], list[int]]:
    """Maximum matching of a bipartite graph given left-side adjacency.

    Returns ``(size, match_left, match_right)`` with -1 for exposed
    vertices.  Deterministic: layers and scans run in ascending id order.
    """
    INF = nleft + nright + 1
    match_l = [-1] * nleft
    match_r = [-1] * nright
    dist = [0] * nleft

    def bfs() -> bool:
        q = deque()
        for u in range(nleft):
            if match_l[u] < 0:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w < 0:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = match_r[v]
            if w < 0 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = INF
        return False

    size = 0
    while bfs():
        for u in range(nleft):
            if match_l[u] < 0 and dfs(u):
                size += 1
    return size, match_l, match_r


def max_bipartite_matching(G: Graph, left: VertexSet,
                           right: VertexSet) -> Matching:
    """Maximum matching of a bipartite graph with a given bipartition.

    ``left`` and ``right`` must partition the vertices; an edge inside one
    side is reported by name.
    """
    if left.host_order != G.n or right.host_order != G.n:
        raise HostMismatchError("bipartition hosts do not match the graph")
    if left.mask & right.mask or (left.mask | right.mask) != (1 << G.n) - 1:
        raise PartitionError("left and right do not partition the vertices")
    for u, v in G.edges():
        if left.mask >> u & 1 and left.mask >> v & 1:
            raise PartitionError(f"edge ({u}, {v}) lies inside the left side",
                                 edge=(u, v))
        if right.mask >> u & 1 and right.mask >> v & 1:
            raise PartitionError(f"edge ({u}, {v}) lies inside the right side",
                                 edge=(u, v))
    lefts = left.members
    rights = right.members
    rindex = {v: i for i, v in enumerate(rights)}
    adj = [[rindex[u] for u in _bits(G.adj[v] & right.mask)] for v in lefts]
    _, match_l, _ = hopcroft_karp(len(lefts), len(rights), adj)
    match = [-1] * G.n
    for i, v in enumerate(lefts):
        if match_l[i] >= 0:
            u = rights[match_l[i]]
            match[v] = u
            match[u] = v
    return _matching_from_array(G.n, match)


def matched_image(M: Matching, S: VertexSet) -> VertexSet:
    """Image of S under the matching involution; exposed vertices are fixed."""
    if M.host_order != S.host_order:
        raise HostMismatchError("matching and vertex set hosts differ")
    return VertexSet.of(M.host_order, (M.pairing[v] for v in S))


def saturating_matching_exists(G: Graph, source: VertexSet,
                               into: VertexSet) -> bool:
    """Whether some matching saturates ``source`` using edges into ``into``."""
    if source.host_order != G.n or into.host_order != G.n:
        raise HostMismatchError("vertex set hosts do not match the graph")
    if source.mask & into.mask:
        raise PartitionError("source and target sets overlap")
    lefts = source.members
    rights = into.members
    rindex = {v: i for i, v in enumerate(rights)}
    adj = [[rindex[u] for u in _bits(G.adj[v] & into.mask)] for v in lefts]
    size, _, _ = hopcroft_karp(len(lefts), len(rights), adj)
    return size == len(lefts)


# ---------------------------------------------------------------------------
# Exhaustive enumeration of maximum matchings.


def _enum_max_matchings_masks(adj, mask: int, mu, k: int, acc: tuple):
    """Yield the edge tuples of all k-edge matchings inside ``mask``.

    Branches on the role of the lowest vertex (exposed, or matched to each
    feasible neighbor), so every matching appears exactly once; ``mu``
    prunes branches that cannot reach k edges.
    """
    if k == 0:
        yield acc
        return
    low = mask & -mask
    v = low.bit_length() - 1
    rest = mask ^ low
    if mu[rest] >= k:
        yield from _enum_max_matchings_masks(adj, rest, mu, k, acc)
    nbrs = adj[v] & rest
    while nbrs:
        ul = nbrs & -nbrs
        u = ul.bit_length() - 1
        if mu[rest ^ ul] >= k - 1:
            yield from _enum_max_matchings_masks(adj, rest ^ ul, mu, k - 1,
                                                 acc + ((v, u),))
        nbrs ^= ul


def enumerate_maximum_matchings(G: Graph):
    """Every maximum matching of G exactly once (requires n <= 14)."""
    if G.n > ENUM_CAP:
        raise CapExceededError("enumerate_maximum_matchings", G.n, ENUM_CAP)
    mu = kernels.mu_table(G.adj, G.n)
    full = (1 << G.n) - 1
    for edges in _enum_max_matchings_masks(G.adj, full, mu, mu[full], ()):
        match = list(range(G.n))
        for v, u in edges:
            match[v] = u
            match[u] = v
        yield Matching(G.n, tuple(match))

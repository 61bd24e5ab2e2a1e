"""Simple-graph core: vertex sets, construction, neighborhoods, generators.

Vertices are dense 0-based ids.  Adjacency is kept as one neighbor bitmask
per vertex, so edge tests are O(1) and neighborhood unions are single OR
chains.  ``Graph`` and ``VertexSet`` are immutable and hashable.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapExceededError, GraphInputError, HostMismatchError

EXHAUSTIVE_CAP = 7


def _mask_of(members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of a host graph of order ``host_order``."""

    host_order: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.host_order:
            raise GraphInputError(
                f"vertex set {self.mask:#x} out of range for order "
                f"{self.host_order}"
            )

    @classmethod
    def of(cls, host_order: int, members: Iterable[int]) -> "VertexSet":
        return cls(host_order, _mask_of(members))

    @classmethod
    def empty(cls, host_order: int) -> "VertexSet":
        return cls(host_order, 0)

    @classmethod
    def full(cls, host_order: int) -> "VertexSet":
        return cls(host_order, (1 << host_order) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.host_order and bool(self.mask >> v & 1)

    def _check_host(self, other: "VertexSet") -> None:
        if self.host_order != other.host_order:
            raise HostMismatchError(
                f"vertex sets have host orders {self.host_order} and "
                f"{other.host_order}"
            )

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_host(other)
        return VertexSet(self.host_order, self.mask & other.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_host(other)
        return VertexSet(self.host_order, self.mask | other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_host(other)
        return VertexSet(self.host_order, self.mask & ~other.mask)

    def __le__(self, other: "VertexSet") -> bool:
        self._check_host(other)
        return self.mask & ~other.mask == 0

    def complement(self) -> "VertexSet":
        return VertexSet(self.host_order,
                         ((1 << self.host_order) - 1) & ~self.mask)

    def __repr__(self) -> str:
        return f"VertexSet({self.host_order}, {{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class EdgeCut:
    """Unordered vertex pairs collected from between two vertex sets."""

    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor bitmask of ``v``; the relation is symmetric
    and irreflexive by construction.
    """

    n: int
    adj: tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u])
                if u < v]

    def vertex_set(self, members: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, members)

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, loops are rejected."""
    if n < 0:
        raise GraphInputError(f"negative order {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) out of range for order {n}")
        if u == v:
            raise GraphInputError(f"self-loop ({u}, {v}) is not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _check_host(G: Graph, S: VertexSet) -> None:
    if S.host_order != G.n:
        raise HostMismatchError(
            f"vertex set of host order {S.host_order} used with graph of "
            f"order {G.n}"
        )


def neighborhood_mask(G: Graph, mask: int) -> int:
    nb = 0
    for v in _bits(mask):
        nb |= G.adj[v]
    return nb


def neighborhood(G: Graph, S: VertexSet) -> VertexSet:
    """N(S), the union of the neighborhoods of the members of S."""
    _check_host(G, S)
    return VertexSet(G.n, neighborhood_mask(G, S.mask))


def induced_subgraph(G: Graph, S: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by S plus the order-preserving relabel map.

    The map sends each member of S to its rank among the members, so the
    result has vertices ``0..len(S)-1``.
    """
    _check_host(G, S)
    members = S.members
    relabel = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        sub = 0
        inner = G.adj[v] & S.mask
        for u in _bits(inner):
            sub |= 1 << relabel[u]
        adj.append(sub)
    return Graph(len(members), tuple(adj)), relabel


def edges_between(G: Graph, X: VertexSet, Y: VertexSet) -> EdgeCut:
    """Edges with one endpoint in X and the other in Y, each reported once."""
    _check_host(G, X)
    _check_host(G, Y)
    pairs = []
    for u in range(G.n):
        row = G.adj[u]
        for v in _bits(row & ~((1 << (u + 1)) - 1)):
            if (X.mask >> u & 1 and Y.mask >> v & 1) or (
                    Y.mask >> u & 1 and X.mask >> v & 1):
                pairs.append((u, v))
    return EdgeCut(tuple(pairs))


def is_bipartite(G: Graph) -> tuple[bool, VertexSet]:
    """2-colorability test; returns (flag, one color class)."""
    color = [-1] * G.n
    left = 0
    for start in range(G.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        left |= 1 << start
        queue = [start]
        while queue:
            v = queue.pop()
            for u in _bits(G.adj[v]):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    if color[u] == 0:
                        left |= 1 << u
                    queue.append(u)
                elif color[u] == color[v]:
                    return False, VertexSet.empty(G.n)
    return True, VertexSet(G.n, left)


# ---------------------------------------------------------------------------
# Generators


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return build_graph(k + 1, [(0, i + 1) for i in range(k)])


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def figure1() -> Graph:
    """Five-vertex fixture: triangle {0,1,2} with pendant path 2-3-4."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])


def _keyed_rng(*key) -> random.Random:
    material = ":".join(repr(k) for k in key).encode()
    digest = hashlib.sha256(material).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a fixed (n, p, seed) key."""
    if not 0.0 <= p <= 1.0:
        raise GraphInputError(f"edge probability {p} outside [0, 1]")
    rng = _keyed_rng("gnp", n, p, seed)
    edges = [(u, v) for v in range(n) for u in range(v)
             if rng.random() < p]
    return build_graph(n, edges)


def gnp_stream(n: int, p: float, count: int, seed: int) -> Iterator[Graph]:
    """``count`` independent G(n, p) samples keyed by (n, p, seed, index)."""
    if not 0.0 <= p <= 1.0:
        raise GraphInputError(f"edge probability {p} outside [0, 1]")
    for i in range(count):
        rng = _keyed_rng("gnp", n, p, seed, i)
        yield build_graph(n, [(u, v) for v in range(n) for u in range(v)
                              if rng.random() < p])


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, in deterministic order.

    Edge bits follow the upper-triangle column order used by graph6, with
    bit 0 the least significant of the code.  Refuses n above
    ``EXHAUSTIVE_CAP`` since the corpus has 2^(n(n-1)/2) members.  The cap
    check happens eagerly, before the first graph is produced.
    """
    if n > EXHAUSTIVE_CAP:
        raise CapExceededError("enumerate_labeled_graphs", n, EXHAUSTIVE_CAP)
    pairs = [(u, v) for v in range(n) for u in range(v)]

    def produce() -> Iterator[Graph]:
        for code in range(1 << len(pairs)):
            adj = [0] * n
            for i, (u, v) in enumerate(pairs):
                if code >> i & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
            yield Graph(n, tuple(adj))

    return produce()

import itertools
import os

import pytest
from hypothesis import strategies as st

from indeplab.graph import Graph, build_graph

EXTENDED = bool(os.environ.get("INDEPLAB_EXTENDED"))

requires_extended = pytest.mark.skipif(
    not EXTENDED, reason="extended mode only (set INDEPLAB_EXTENDED=1)")


@st.composite
def graphs(draw, max_n=8, min_n=0):
    """Random small graphs for property tests."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    picks = draw(st.lists(st.sampled_from(pairs), unique=True)
                 if pairs else st.just([]))
    return build_graph(n, picks)


def brute_matching_number(G: Graph) -> int:
    """Branch on edges with disjointness only; independent of the blossom
    and DP routes."""
    edges = G.edges()
    best = 0

    def rec(i: int, used: int, k: int) -> None:
        nonlocal best
        if k > best:
            best = k
        for j in range(i, len(edges)):
            u, v = edges[j]
            if not (used >> u & 1 or used >> v & 1):
                rec(j + 1, used | 1 << u | 1 << v, k + 1)

    rec(0, 0, 0)
    return best


def brute_independent_masks(G: Graph) -> list[int]:
    """All independent subsets by direct subset filtering."""
    out = []
    for mask in range(1 << G.n):
        ok = True
        for u in range(G.n):
            if mask >> u & 1 and G.adj[u] & mask:
                ok = False
                break
        if ok:
            out.append(mask)
    return out

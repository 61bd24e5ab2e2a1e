import pytest
from hypothesis import given

from indeplab.errors import CapExceededError, GraphInputError, \
    HostMismatchError
from indeplab.graph import (VertexSet, build_graph, complete,
                            complete_bipartite, cycle, edges_between,
                            empty_graph, enumerate_labeled_graphs, figure1,
                            gnp, gnp_stream, induced_subgraph, is_bipartite,
                            neighborhood, path, star)

from .conftest import graphs


def test_build_k1():
    G = build_graph(1, [])
    assert G.n == 1 and G.m == 0


def test_build_figure1():
    G = build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
    assert G == figure1()
    assert G.m == 5
    assert G.has_edge(2, 3) and not G.has_edge(2, 4)


def test_build_c4():
    G = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert G == cycle(4)


def test_build_collapses_duplicates():
    G = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert G.m == 1


def test_build_rejects_out_of_range():
    with pytest.raises(GraphInputError, match=r"\(0, 5\)"):
        build_graph(3, [(0, 5)])


def test_build_rejects_self_loop():
    with pytest.raises(GraphInputError, match="self-loop"):
        build_graph(3, [(1, 1)])


def test_neighborhood_fixture():
    G = figure1()
    assert neighborhood(G, G.vertex_set([4])).members == (3,)
    assert neighborhood(G, G.vertex_set([0, 2])).members == (0, 1, 2, 3)
    assert neighborhood(G, G.vertex_set([])).members == ()


def test_neighborhood_host_mismatch():
    with pytest.raises(HostMismatchError):
        neighborhood(figure1(), VertexSet.of(4, [1]))


def test_induced_subgraph_fixture():
    G = figure1()
    tri, relabel = induced_subgraph(G, G.vertex_set([0, 1, 2]))
    assert tri == complete(3)
    assert relabel == {0: 0, 1: 1, 2: 2}
    tail, relabel = induced_subgraph(G, G.vertex_set([3, 4]))
    assert tail == path(2)
    assert relabel == {3: 0, 4: 1}
    nothing, _ = induced_subgraph(G, G.vertex_set([]))
    assert nothing.n == 0


def test_induced_subgraph_full_is_identity():
    G = figure1()
    sub, relabel = induced_subgraph(G, G.vertices())
    assert sub == G
    assert relabel == {v: v for v in range(5)}


def test_edges_between_fixture():
    G = figure1()
    assert edges_between(G, G.vertex_set([3]),
                         G.vertex_set([0, 1, 2])).pairs == ((2, 3),)
    assert edges_between(G, G.vertex_set([4]),
                         G.vertex_set([0, 1, 2])).pairs == ()
    assert edges_between(G, G.vertex_set([]), G.vertices()).pairs == ()


def test_edges_between_overlap_reported_once():
    G = complete(3)
    cut = edges_between(G, G.vertex_set([0, 1]), G.vertex_set([1, 2]))
    assert cut.pairs == ((0, 1), (0, 2), (1, 2))


def test_generators():
    assert cycle(5).m == 5
    assert star(3).neighbors(0) == (1, 2, 3)
    assert complete_bipartite(3, 3).m == 9
    assert path(1).m == 0
    assert empty_graph(4).m == 0


def test_gnp_deterministic():
    assert gnp(8, 0.5, 42) == gnp(8, 0.5, 42)
    assert list(gnp_stream(6, 0.5, 3, 1)) == list(gnp_stream(6, 0.5, 3, 1))


def test_gnp_extremes():
    assert gnp(5, 0.0, 1).m == 0
    assert gnp(5, 1.0, 1) == complete(5)
    with pytest.raises(GraphInputError):
        gnp(5, 1.5, 1)


def test_enumerate_counts():
    assert sum(1 for _ in enumerate_labeled_graphs(2)) == 2
    assert sum(1 for _ in enumerate_labeled_graphs(3)) == 8
    assert sum(1 for _ in enumerate_labeled_graphs(4)) == 64
    seen = set(enumerate_labeled_graphs(4))
    assert len(seen) == 64


def test_enumerate_cap_is_eager():
    with pytest.raises(CapExceededError):
        enumerate_labeled_graphs(8)


def test_vertex_set_algebra():
    a = VertexSet.of(5, [0, 2])
    b = VertexSet.of(5, [2, 3])
    assert (a | b).members == (0, 2, 3)
    assert (a & b).members == (2,)
    assert (a - b).members == (0,)
    assert a.complement().members == (1, 3, 4)
    assert 2 in a and 1 not in a
    assert len(a) == 2
    with pytest.raises(GraphInputError):
        VertexSet.of(3, [5])


def test_order_zero_graph_is_legal():
    G = build_graph(0, [])
    assert G.n == 0 and G.m == 0
    assert neighborhood(G, G.vertices()).members == ()
    sub, relabel = induced_subgraph(G, G.vertices())
    assert sub.n == 0 and relabel == {}


def test_is_bipartite():
    assert is_bipartite(complete_bipartite(2, 3))[0]
    assert not is_bipartite(cycle(5))[0]
    assert is_bipartite(empty_graph(0))[0]
    flag, left = is_bipartite(path(4))
    assert flag and left.members == (0, 2)


@given(graphs())
def test_neighborhood_monotone(G):
    import random
    rng = random.Random(G.n * 31 + G.m)
    small = [v for v in range(G.n) if rng.random() < 0.4]
    big = sorted(set(small) | {v for v in range(G.n) if rng.random() < 0.4})
    ns = neighborhood(G, G.vertex_set(small))
    nb = neighborhood(G, G.vertex_set(big))
    assert ns <= nb


@given(graphs())
def test_independent_sets_avoid_their_neighborhoods(G):
    from indeplab.exact import independent_sets
    for S in independent_sets(G):
        assert (neighborhood(G, S) & S).mask == 0

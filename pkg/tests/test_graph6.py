import pathlib

import pytest
from hypothesis import given

from indeplab.errors import GraphInputError
from indeplab.graph import (build_graph, complete, enumerate_labeled_graphs,
                            path)
from indeplab.graph6 import encode_graph6, parse_graph6

from .conftest import graphs

DATA = pathlib.Path(__file__).parent / "data"


def test_known_encodings():
    assert encode_graph6(complete(1)) == "@"
    assert encode_graph6(complete(3)) == "Bw"
    assert encode_graph6(path(3)) == "Bg"
    assert parse_graph6("@") == complete(1)
    assert parse_graph6("Bw") == complete(3)
    assert parse_graph6("Bg") == path(3)


def test_header_is_stripped():
    assert parse_graph6(">>graph6<<Bw") == complete(3)


def test_roundtrip_exhaustive_small():
    for n in range(0, 7):
        for G in enumerate_labeled_graphs(n):
            assert parse_graph6(encode_graph6(G)) == G


def test_external_corpus_roundtrip():
    lines = (DATA / "external_corpus.g6").read_text().splitlines()
    assert len(lines) == 1000
    for line in lines:
        assert encode_graph6(parse_graph6(line)) == line


def test_agrees_with_networkx_on_random_graphs():
    nx = pytest.importorskip("networkx")
    for seed in range(50):
        H = nx.gnp_random_graph(seed % 13, 0.4, seed=seed)
        line = nx.to_graph6_bytes(H, header=False).decode().strip()
        G = parse_graph6(line)
        assert sorted(G.edges()) == sorted(
            (min(e), max(e)) for e in H.edges())
        assert encode_graph6(G) == line


def test_rejects_long_form():
    with pytest.raises(GraphInputError, match="long-form") as ei:
        parse_graph6("~??~?????")
    assert ei.value.offset == 0


def test_rejects_bad_length_byte():
    with pytest.raises(GraphInputError) as ei:
        parse_graph6("\x1f")
    assert ei.value.offset == 0


def test_rejects_trailing_garbage():
    good = encode_graph6(complete(3))
    with pytest.raises(GraphInputError, match="trailing") as ei:
        parse_graph6(good + "w")
    assert ei.value.offset == len(good)


def test_rejects_truncation():
    with pytest.raises(GraphInputError, match="truncated"):
        parse_graph6("D")


def test_rejects_nonzero_padding():
    # K3 payload is 111000; flipping a padding bit is malformed
    bad = "B" + chr(63 + 0b111001)
    with pytest.raises(GraphInputError, match="padding"):
        parse_graph6(bad)


def test_rejects_empty():
    with pytest.raises(GraphInputError):
        parse_graph6("   ")


def test_encode_refuses_order_above_62():
    with pytest.raises(GraphInputError):
        encode_graph6(build_graph(63, []))


def test_order_62_roundtrip():
    G = build_graph(62, [(0, 61), (30, 31)])
    assert parse_graph6(encode_graph6(G)) == G


@given(graphs(max_n=12))
def test_roundtrip_random(G):
    assert parse_graph6(encode_graph6(G)) == G

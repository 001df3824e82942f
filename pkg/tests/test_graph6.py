"""graph6 serialization round-trips and bit-exactness."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genturan.graph6 import Graph6Error, decode_graph6, encode_graph6
from genturan.graphs import Graph, complete, empty_graph, turan

from conftest import random_graph


def hand_encode(g: Graph) -> str:
    """Independent re-implementation straight from the format definition."""
    assert g.n <= 62
    bits = ""
    for j in range(1, g.n):
        for i in range(j):
            bits += "1" if g.adj[i] >> j & 1 else "0"
    bits += "0" * (-len(bits) % 6)
    out = chr(g.n + 63)
    for k in range(0, len(bits), 6):
        out += chr(int(bits[k:k + 6], 2) + 63)
    return out


def test_k3_is_Bw():
    assert encode_graph6(complete(3)) == "Bw"


def test_known_encodings_match_hand_encoder():
    for g in [complete(4), complete(5), turan(7, 3), empty_graph(6), turan(5, 2)]:
        assert encode_graph6(g) == hand_encode(g)


def test_roundtrip_turan():
    g = turan(7, 3)
    assert decode_graph6(encode_graph6(g)) == g


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 9), st.integers(0, 12), st.floats(0, 1))
def test_roundtrip_random(seed, n, p):
    g = random_graph(random.Random(seed), n, p)
    assert decode_graph6(encode_graph6(g)) == g


def test_large_n_prefix_roundtrip():
    g = empty_graph(63)
    assert decode_graph6(encode_graph6(g)) == g
    g = complete(64)
    assert decode_graph6(encode_graph6(g)) == g


def test_decode_rejects_garbage():
    with pytest.raises(Graph6Error):
        decode_graph6("garbage!")
    with pytest.raises(Graph6Error):
        decode_graph6("")
    with pytest.raises(Graph6Error):
        decode_graph6("D")      # truncated body for n=5
    with pytest.raises(Graph6Error):
        decode_graph6("Bwz")    # oversized body
    with pytest.raises(Graph6Error):
        decode_graph6("B" + chr(63 + 1))  # nonzero padding for n=3 needs care

import random

import pytest

from fracext import Graph6Error, complete, cycle, emit_graph6, iter_graph6_lines, parse_graph6
from helpers import random_graph


def test_frozen_decodings():
    assert parse_graph6("C~") == complete(4)
    p3 = parse_graph6("Bg")
    assert p3.n == 3 and p3.edges() == [(0, 1), (1, 2)]
    k1 = parse_graph6("@")
    assert k1.n == 1 and k1.edge_count() == 0
    empty = parse_graph6("?")
    assert empty.n == 0


def test_frozen_encodings():
    assert emit_graph6(complete(4)) == "C~"
    assert emit_graph6(complete(6)) == "E~~w"
    assert emit_graph6(cycle(5)) == "Dhc"


def test_round_trip_random():
    rng = random.Random(20260822)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 32), rng.random())
        assert parse_graph6(emit_graph6(g)) == g
    g62 = random_graph(rng, 62, 0.5)
    assert parse_graph6(emit_graph6(g62)) == g62


def test_order_limit():
    with pytest.raises(Graph6Error):
        emit_graph6(complete(63))
    with pytest.raises(Graph6Error):
        parse_graph6("~??~")  # multi-byte size header


def test_bytes_and_whitespace():
    assert parse_graph6(b"C~\n") == complete(4)
    assert parse_graph6("C~ \t\r\n") == complete(4)


def test_malformed_offsets():
    with pytest.raises(Graph6Error) as e:
        parse_graph6("")
    assert e.value.offset == 0
    with pytest.raises(Graph6Error) as e:
        parse_graph6(chr(20) + "abc")
    assert e.value.offset == 0
    with pytest.raises(Graph6Error) as e:
        parse_graph6("C")          # payload missing
    assert e.value.offset == 1
    with pytest.raises(Graph6Error) as e:
        parse_graph6("C~~")        # one byte too many
    assert e.value.offset == 2
    with pytest.raises(Graph6Error):
        parse_graph6("B" + chr(126))  # padding bits set


def test_iter_graph6_lines():
    lines = ["# comment", "", "C~", "  ", "Bg", "# trailing"]
    got = list(iter_graph6_lines(lines))
    assert [lineno for lineno, _ in got] == [3, 5]
    assert got[0][1] == complete(4)
    assert got[1][1].n == 3

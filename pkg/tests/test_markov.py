from fractions import Fraction as F

import pytest

from manetti.markov import (classify_type, is_markov, markov_triangle, mutate_triple, n_coords,
                            parse_word, persistence_certificate, predicted_n_coords, mu,
                            syntactic_type, topograph, word_str, word_triple)


def test_seed_triangle():
    T = markov_triangle("")
    assert T.vertices == ((0, 0), (20, 0), (0, F(16, 5)))
    assert T.triple == (1, 2, 5)


def test_wahl_vertex_at_20_0():
    v = markov_triangle("").wahl(1)
    assert (v.u1, v.u2, v.index, v.eigendirection) == ((-25, 4), (-1, 0), 2, (-13, 2))
    assert v.monodromy.rows() == ((-25, -169), (4, 27))


def test_first_mutations():
    assert markov_triangle("0").vertices == ((F(-16, 5), 0), (20, 0), (F(80, 29), F(80, 29)))
    assert markov_triangle("0").triple == (5, 2, 29)
    assert markov_triangle("1").vertices == ((0, 0), (F(104, 5), 0), (0, F(40, 13)))
    assert markov_triangle("1").triple == (1, 5, 13)


def test_triples_and_words():
    assert is_markov((5, 29, 433)) and not is_markov((1, 2, 3))
    assert mutate_triple((1, 2, 5), "a") == (29, 2, 5)
    assert word_triple("110") == (34, 13, 1325)
    assert parse_word("0110") == (0, 1, 1, 0) and word_str((1, 0)) == "10"
    with pytest.raises(ValueError):
        parse_word("012")
    with pytest.raises(ValueError):
        mutate_triple((1, 2, 3), 0)


def test_topograph():
    nodes = topograph(6)
    assert len(nodes) == 33
    triples = {tuple(sorted(n.triple)) for n in nodes}
    assert {(1, 1, 1), (1, 1, 2), (1, 2, 5), (29, 169, 14701)} <= triples
    assert [n.depth for n in nodes[:3]] == [0, 1, 2]


def test_types():
    assert classify_type("111").tag == "A"
    assert classify_type("110").tag == "B"
    assert classify_type("01").tag == "C"
    assert syntactic_type("") == "Five"
    # short all-ones words are A by their point sets, with a note
    assert classify_type("1").flag is not None


def test_persistence_certificates():
    c = persistence_certificate("00", (-1, 1))
    assert (c.coords.n0, c.coords.n2) == (2, 0) and c.left and c.holds
    c = persistence_certificate("111", (14, 1))
    assert (c.coords.n1, c.coords.n2) == (-3, 1) and c.right
    with pytest.raises(ValueError):
        persistence_certificate("", (100, 100))


def test_n_transform_rule():
    T = markov_triangle("01")
    before = n_coords(T, (13, 1))
    for bit in (0, 1):
        assert n_coords(mu(T, bit), (13, 1)) == predicted_n_coords(T, before, bit)

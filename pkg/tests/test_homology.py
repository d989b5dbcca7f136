import random

import pytest
from hypothesis import given, strategies as st

from conftest import corpus_diagrams
from khparam.complex import BRACKET, build_complex
from khparam.diagram import braid_closure, parse_pd
from khparam.homology import SparseInt, homology_at, smith_normal_form, total_rank
from oracles import minor_gcd_factors

TREFOIL = parse_pd("X(1,4,2,5)- X(3,6,4,1)- X(5,2,6,3)-")
braid_words = st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=5)
matrices = st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_snf_examples():
    assert smith_normal_form([[2, 4], [6, 8]]) == ([2, 4], 2)
    assert smith_normal_form([[0, 0], [0, 0]]) == ([], 0)
    assert smith_normal_form([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == ([1, 3], 2)
    assert smith_normal_form(SparseInt.from_dense([[6, 0], [0, 4]])) == ([2, 12], 2)


@given(matrices)
def test_snf_matches_minors(a):
    factors, rank = smith_normal_form(a)
    assert factors == minor_gcd_factors(a)
    assert rank == len(factors)
    assert all(factors[k + 1] % factors[k] == 0 for k in range(len(factors) - 1))


def test_snf_seeded_batch(seed):
    rng = random.Random(seed)
    for _ in range(100):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        a = [[rng.randint(-9, 9) if rng.random() < 0.7 else 0 for _ in range(c)] for _ in range(r)]
        assert smith_normal_form(a)[0] == minor_gcd_factors(a)


def test_unknot():
    h = homology_at(build_complex(parse_pd("O(1)")), 0, 0)
    assert h.nonzero() == {(0, -1): (1, []), (0, 1): (1, [])}
    assert h.bigraded


def test_trefoil_frozen():
    # values computed by this package and checked against the Jones polynomial
    c = build_complex(TREFOIL)
    assert homology_at(c, 0, 0).nonzero() == {
        (-3, -9): (1, []), (-2, -7): (0, [2]), (-2, -5): (1, []), (0, -3): (1, []), (0, -1): (1, [])}
    assert homology_at(c, 0, 1).nonzero() == {-2: (0, [2, 2]), 0: (2, [])}
    assert homology_at(c, 1, 0).nonzero() == {0: (2, [])}
    assert homology_at(c, 2, -3).nonzero() == {-2: (0, [2, 4]), 0: (2, [])}


def test_json_report():
    h = homology_at(build_complex(TREFOIL), 0, 0)
    rep = h.to_json()
    assert rep["parameters"] == {"s": 0, "t": 0}
    assert rep["groups"][1] == {"i": -2, "j": -7, "betti": 0, "torsion": [2]}
    hb = homology_at(build_complex(TREFOIL, BRACKET), 0, 0).to_json()
    assert set(hb["groups"][0]) == {"doubled_I", "J", "betti", "torsion"}
    h1 = homology_at(build_complex(TREFOIL), 0, 1).to_json()
    assert "j" not in h1["groups"][0]


@pytest.mark.parametrize("name, d", sorted(corpus_diagrams().items()))
def test_generic_rank(name, d):
    # whenever s^2 + 4t != 0 the rank is 2^(number of components)
    c = build_complex(d)
    for s, t in ((0, 1), (1, 0), (2, -3), (1, 1)):
        assert total_rank(homology_at(c, s, t)) == 2 ** d.components()


@given(braid_words, st.sampled_from([(0, 0), (0, 1), (1, 0), (2, -3)]))
def test_euler_characteristic(word, st_pair):
    d = braid_closure(word)
    c = build_complex(d)
    h = homology_at(c, *st_pair)
    chi_h = sum((-1) ** (k[0] if h.bigraded else k) * b for k, (b, _) in h.groups.items())
    chi_c = sum((-1) ** deg * c.dim(deg) for deg in c.degrees)
    assert chi_h == chi_c


@given(braid_words)
def test_lee_rank_random(word):
    d = braid_closure(word)
    assert total_rank(homology_at(build_complex(d), 0, 1)) == 2 ** d.components()


def test_equality_ignores_zero_groups():
    c = build_complex(TREFOIL)
    a, b = homology_at(c, 0, 0), homology_at(c, 0, 0)
    b.groups[(5, 5)] = (0, [])
    assert a == b

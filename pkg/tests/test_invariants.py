import pytest
from hypothesis import given, strategies as st

from conftest import corpus_diagrams
from khparam.complex import BRACKET, build_complex
from khparam.diagram import CrossingData, LinkDiagram, braid_closure, parse_pd
from khparam.invariants import (bracket_enhanced_sum, bracket_from_bracket_homology, bracket_skein_oracle,
                                bracket_state_sum, invariant_report, jones_chain_level, jones_from_chain,
                                jones_skein_oracle, rotate_bracket)
from khparam.ring import LaurentPoly

TREFOIL = parse_pd("X(1,4,2,5)- X(3,6,4,1)- X(5,2,6,3)-")
braid_words = st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=6)
A = LaurentPoly.monomial(1, 1, "A")
A_INV = LaurentPoly.monomial(-1, 1, "A")


def smoothed(d, cid, positive):
    """The diagram with crossing cid replaced by one of its smoothings (signs are irrelevant)."""
    c = d.crossing(cid)
    pairs = ((0, 1), (2, 3)) if positive else ((0, 3), (1, 2))
    parent = {e: e for e in d.edge_labels()}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(c.edges[a]), find(c.edges[b])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    rest = [CrossingData(k + 1, tuple(find(e) for e in x.edges), x.sign)
            for k, x in enumerate(y for y in d.crossings if y.id != cid)]
    used = {e for x in rest for e in x.edges}
    loops = sorted({find(e) for e in d.loops} | {find(e) for e in c.edges if find(e) not in used})
    return LinkDiagram(tuple(rest), tuple(loops))


def test_unknot_values():
    assert jones_skein_oracle(parse_pd("O(1)")) == LaurentPoly({1: 1, -1: 1})
    assert str(jones_skein_oracle(parse_pd("O(1)"))) == "q + q^-1"
    assert jones_skein_oracle(parse_pd("X(2,2,1,1)+")) == LaurentPoly({1: 1, -1: 1})
    assert bracket_state_sum(parse_pd("O(1)")) == LaurentPoly({2: -1, -2: -1}, "A")


def test_trefoil_frozen():
    assert str(jones_from_chain(build_complex(TREFOIL))) == "q^-1 + q^-3 + q^-5 - q^-9"
    assert str(bracket_state_sum(TREFOIL)) == "-A^9 + A + A^-3 + A^-7"


@pytest.mark.parametrize("name, d", sorted(corpus_diagrams().items()))
def test_oracle_square(name, d):
    rep = invariant_report(d)
    assert rep.jones_agree and rep.bracket_agree
    assert rep.to_json()["jones_agree"] is True


@given(braid_words)
def test_oracle_square_random(word):
    d = braid_closure(word)
    c = build_complex(d)
    assert jones_from_chain(c) == jones_skein_oracle(d) == jones_chain_level(c)
    assert bracket_state_sum(d) == bracket_skein_oracle(d) == bracket_enhanced_sum(d)


@pytest.mark.parametrize("name, d", sorted(corpus_diagrams().items()))
def test_skein_relation_per_crossing(name, d):
    total = bracket_state_sum(d)
    for cid in d.crossing_ids():
        d0, d1 = smoothed(d, cid, True), smoothed(d, cid, False)
        assert total == A * bracket_state_sum(d0) + A_INV * bracket_state_sum(d1)


@given(braid_words)
def test_mirror_reverses(word):
    d = braid_closure(word)
    assert jones_skein_oracle(d.mirror()) == jones_skein_oracle(d).reversed()


@pytest.mark.parametrize("name, d", sorted(corpus_diagrams().items()))
def test_bracket_homology_euler(name, d):
    # sum of omega^(2I) A^J rank H over the bracket grading gives <D>(omega A), omega^2 = -1
    c = build_complex(d, BRACKET)
    got = bracket_from_bracket_homology(c)
    want = {e: v for e, v in rotate_bracket(bracket_state_sum(d)).items() if v != (0, 0)}
    assert got == want


def test_scheme_guard():
    with pytest.raises(ValueError):
        jones_chain_level(build_complex(TREFOIL, BRACKET))
    with pytest.raises(ValueError):
        bracket_from_bracket_homology(build_complex(TREFOIL))

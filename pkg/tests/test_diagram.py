import pytest
from hypothesis import given, strategies as st

from conftest import random_braid_diagrams
from khparam.diagram import (CrossingData, IllegalSite, LinkDiagram, MoveRequest, ParseError, SiteNotFound,
                             ValidationError, apply_move, apply_r3, braid_closure, find_r3, insert_r1,
                             insert_r2, parse_pd, remove_r1, remove_r2, writhe)

TREFOIL = "X(1,4,2,5)- X(3,6,4,1)- X(5,2,6,3)-"

braid_words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=1, max_size=6)


def test_parse_trefoil():
    d = parse_pd(TREFOIL)
    assert d.n == 3
    assert d.writhe() == writhe(d) == -3
    assert d.edge_labels() == [1, 2, 3, 4, 5, 6]
    assert d.components() == 1
    assert d.render() == TREFOIL


def test_comments_and_loops():
    d = parse_pd("# two unknots\nO(1)\nO(2)  # second one\n")
    assert d.n == 0 and d.loops == (1, 2)
    assert d.render() == "O(1) O(2)"


@pytest.mark.parametrize("text, exc", [
    ("X(1,2,3)+", ParseError),
    ("X(1,2,3,4)", ParseError),
    ("Y(1)", ParseError),
    ("X(1,a,2,2)+", ParseError),
    ("X(0,0,1,1)+", ParseError),
    ("O(1)+", ParseError),
    ("X(1,1,2,3)+", ValidationError),
    ("O(1) O(1)", ValidationError),
    ("X(1,2,2,1)+ O(1)", ValidationError),
])
def test_bad_input(text, exc):
    with pytest.raises(exc):
        parse_pd(text)


def test_orientation_check_catches_flipped_sign():
    d = parse_pd(TREFOIL)
    assert d.check_orientation()
    flipped = LinkDiagram((CrossingData(1, (1, 4, 2, 5), 1),) + d.crossings[1:], ())
    assert not flipped.check_orientation()


def test_hopf_and_figure_eight(corpus):
    assert corpus["hopf"].components() == 2 and corpus["hopf"].writhe() == 2
    assert corpus["figure8"].writhe() == 0 and corpus["figure8"].components() == 1


def test_corpus_orientation(corpus):
    assert all(d.check_orientation() for d in corpus.values())


@given(braid_words)
def test_render_round_trip(word):
    d = braid_closure(word)
    assert parse_pd(d.render()) == d
    assert d.check_orientation()


@given(braid_words)
def test_mirror(word):
    d = braid_closure(word)
    m = d.mirror()
    assert m.writhe() == -d.writhe()
    assert m.check_orientation()
    assert m.mirror() == d


def test_braid_components():
    assert braid_closure([1, 1]).components() == 2
    assert braid_closure([1, 1, 1]).components() == 1
    assert braid_closure([1], 3).components() == 2  # one free strand becomes a loop
    assert braid_closure([1], 3).loops


def test_relabeled():
    d = parse_pd("X(10,40,20,50)- X(30,60,40,10)- X(50,20,60,30)-")
    r = d.relabeled()
    assert r.render() == "X(1,2,3,4)- X(5,6,2,1)- X(4,3,6,5)-"
    assert r.edge_labels() == [1, 2, 3, 4, 5, 6]


# ---------------------------------------------------------------- moves

def test_r1_on_unknot():
    d2, site = insert_r1(parse_pd("O(1)"), 1)
    assert d2.render() == "X(2,2,1,1)+"
    assert site.crossings == (1,) and site.edges["loop"] == 2


@given(braid_words, st.integers(0, 20))
def test_r1_round_trip(word, k):
    d = braid_closure(word)
    e = d.edge_labels()[k % len(d.edge_labels())]
    d2, site = insert_r1(d, e)
    assert d2.n == d.n + 1 and d2.writhe() == d.writhe() + 1
    assert d2.check_orientation()
    back, _ = remove_r1(d2, site.crossings[0])
    assert back == d


@given(braid_words, st.integers(0, 20), st.integers(0, 20))
def test_r2_round_trip(word, i, j):
    d = braid_closure(word)
    labels = d.edge_labels()
    e, f = labels[i % len(labels)], labels[j % len(labels)]
    try:
        d2, site = insert_r2(d, e, f)
    except SiteNotFound:
        return
    assert d2.n == d.n + 2 and d2.writhe() == d.writhe()
    assert d2.check_orientation()
    back, _ = remove_r2(d2, *site.crossings)
    assert back == d


def test_r2_needs_a_shared_face():
    d = parse_pd(TREFOIL)
    hits = 0
    for e in d.edge_labels():
        for f in d.edge_labels():
            try:
                insert_r2(d, e, f)
                hits += 1
            except SiteNotFound:
                pass
    assert 0 < hits < 36


def test_missing_sites():
    d = parse_pd(TREFOIL)
    with pytest.raises(SiteNotFound):
        insert_r1(d, 99)
    with pytest.raises(SiteNotFound):
        remove_r1(d, 1)
    with pytest.raises(SiteNotFound):
        find_r3(d)


def test_right_twisted_kink_is_rejected():
    kink = parse_pd("X(2,2,1,1)+").mirror()
    assert kink.render() == "X(1,2,2,1)-"
    with pytest.raises(IllegalSite):
        remove_r1(kink, 1)


def test_r3_twice_is_identity(corpus):
    d = corpus["braid_r3"]
    d2, site = apply_r3(d)
    assert d2 != d and d2.check_orientation()
    assert d2.writhe() == d.writhe()
    d3, _ = apply_r3(d2, site.crossings)
    assert d3 == d


def test_apply_move_dispatch():
    d = parse_pd(TREFOIL)
    d2, site = apply_move(d, MoveRequest("r2", edge=1))
    assert site.kind == "R2"
    back, _ = apply_move(d2, MoveRequest("R2", crossings=site.crossings, remove=True))
    assert back == d
    with pytest.raises(ValueError):
        apply_move(d, MoveRequest("r4"))


def test_random_fixture_is_valid(random_diagrams):
    assert len(random_diagrams) == 20
    for _, d in random_diagrams:
        assert d.n <= 8 and d.check_orientation()
    assert random_braid_diagrams(1) == random_braid_diagrams(1)

"""Acceptance criteria 1-8, all checked with exact arithmetic."""

import random
import time

from conftest import corpus_diagrams, random_braid_diagrams, record
from khparam.complex import BRACKET, JONES, build_complex, check_d2
from khparam.diagram import apply_r3, find_r3, insert_r1, insert_r2, parse_pd
from khparam.homology import homology_at, smith_normal_form
from khparam.invariants import (bracket_skein_oracle, bracket_state_sum, jones_from_chain,
                                jones_skein_oracle)
from khparam.reidemeister import GRID, build_maps, verify_maps
from khparam.ring import LaurentPoly
from oracles import incidence_00, minor_gcd_factors

UNKNOT = parse_pd("O(1)")
TREFOIL = parse_pd("X(1,4,2,5)- X(3,6,4,1)- X(5,2,6,3)-")

# frozen after the first derivation by this package
TREFOIL_KH = {
    (-3, -9): (1, []), (-2, -7): (0, [2]), (-2, -5): (1, []), (0, -3): (1, []), (0, -1): (1, []),
}


def _named_sites():
    """The move instances named in the acceptance list."""
    return [
        ("R1 kinked unknot", insert_r1(UNKNOT, 1)[1]),
        ("R2 poked unknot", insert_r2(UNKNOT, 1)[1]),
        ("R2 poked trefoil strand", insert_r2(TREFOIL, 1)[1]),
        ("R2 finger between trefoil strands", insert_r2(TREFOIL, 2, 4)[1]),
        ("R3 triangle", apply_r3(corpus_diagrams()["braid_r3"])[1]),
    ]


def _corpus_sites():
    out = []
    for name, d in corpus_diagrams().items():
        e = d.edge_labels()[0]
        out.append((f"{name} R1", insert_r1(d, e)[1]))
        out.append((f"{name} R2", insert_r2(d, e)[1]))
        try:
            find_r3(d)
        except (LookupError, ValueError):
            continue
        out.append((f"{name} R3", apply_r3(d)[1]))
    return out


def test_criterion_1_d_squared(seed):
    start = time.perf_counter()
    diagrams = list(corpus_diagrams().items())
    diagrams += [(str(w), d) for w, d in random_braid_diagrams(seed, 20, 8)]
    bad = [name for name, d in diagrams
           for scheme in (JONES, BRACKET) if not check_d2(build_complex(d, scheme)).ok]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record(1, ok, f"{len(diagrams)} diagrams x 2 gradings, failures {bad}, {elapsed:.1f}s")
    assert ok


def test_criterion_2_oracle_square(seed):
    diagrams = list(corpus_diagrams().items())
    diagrams += [(str(w), d) for w, d in random_braid_diagrams(seed, 20, 8)]
    bad = []
    for name, d in diagrams:
        if jones_from_chain(build_complex(d)) != jones_skein_oracle(d):
            bad.append(name + " jones")
        if bracket_state_sum(d) != bracket_skein_oracle(d):
            bad.append(name + " bracket")
    unknot = jones_from_chain(build_complex(UNKNOT))
    ok = not bad and unknot == LaurentPoly({1: 1, -1: 1}) and str(unknot) == "q + q^-1"
    record(2, ok, f"{len(diagrams)} diagrams, failures {bad}, unknot {unknot}")
    assert ok


def test_criterion_3_homotopy_identities():
    start = time.perf_counter()
    results = [(name, verify_maps(build_maps(site), grid=())) for name, site in _named_sites()]
    bad = [name for name, rep in results if not rep.identity_residual_zero]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record(3, ok, f"{len(results)} move instances, nonzero residuals {bad}, {elapsed:.1f}s")
    assert ok


def test_criterion_4_retraction():
    keys = ("subcomplexes", "rho_inj_identity", "idempotent", "direct_sum", "isom_bijective",
            "isom_rho_chain_map")
    bad = []
    sites = _named_sites() + _corpus_sites()
    for name, site in sites:
        rep = verify_maps(build_maps(site), grid=())
        missing = [k for k in keys if not rep.details.get(k)]
        if missing or not (rep.retraction_ok and rep.chain_map_ok):
            bad.append((name, missing))
    record(4, not bad, f"{len(sites)} move instances, failures {bad}")
    assert not bad


def test_criterion_5_invariance():
    bad = []
    sites = _named_sites() + _corpus_sites()
    for name, site in sites:
        rep = verify_maps(build_maps(site), grid=GRID)
        bad += [(name, x["s"], x["t"]) for x in rep.homology_match if not x["ok"]]
    kink = insert_r1(UNKNOT, 1)[0]
    h1 = homology_at(build_complex(kink), 0, 0).nonzero()
    h0 = homology_at(build_complex(UNKNOT), 0, 0).nonzero()
    unknot_ok = h1 == h0 == {(0, -1): (1, []), (0, 1): (1, [])}
    ok = not bad and unknot_ok
    record(5, ok, f"{len(sites)} move pairs at {len(GRID)} specializations, mismatches {bad}, "
                  f"1-crossing unknot {'matches' if unknot_ok else 'differs'}")
    assert ok


def test_criterion_6_presentations():
    c = corpus_diagrams()
    groups = {name: homology_at(build_complex(c[name]), 0, 0).nonzero()
              for name in ("trefoil", "trefoil_kink", "trefoil_poke")}
    sizes = {name: c[name].n for name in groups}
    ok = all(g == TREFOIL_KH for g in groups.values())
    record(6, ok, f"crossings {sizes}, Z/2 at (i,j)=(-2,-7) in each: "
                  f"{all(g.get((-2, -7)) == (0, [2]) for g in groups.values())}")
    assert ok


def test_criterion_7_snf(seed):
    rng = random.Random(seed)
    bad = 0
    for _ in range(500):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        a = [[rng.randint(-9, 9) if rng.random() < 0.75 else 0 for _ in range(c)] for _ in range(r)]
        if smith_normal_form(a)[0] != minor_gcd_factors(a):
            bad += 1
    record(7, bad == 0, f"500 seeded trials up to 5x5, seed {seed}, mismatches {bad}")
    assert bad == 0


def test_criterion_8_frobenius_reduction():
    bad = []
    checked = 0
    for name, d in corpus_diagrams().items():
        cx = build_complex(d)
        for deg, m in cx.differentials.items():
            src, tgt = cx.generators[deg], cx.generators[cx.next_degree(deg)]
            for col, S in enumerate(src):
                for row, T in enumerate(tgt):
                    v = m.get(row, col).specialize(0, 0)
                    checked += 1
                    if v not in (-1, 0, 1) or abs(v) != incidence_00(d, S, T):
                        bad.append((name, deg, row, col))
    record(8, not bad, f"{checked} entries over the corpus, mismatches {len(bad)}")
    assert not bad

"""Kauffman bracket and Jones polynomial, from states, from the complex and
from an independent skein recursion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .complex import BRACKET, JONES, ChainComplex
from .diagram import LinkDiagram
from .homology import homology_at
from .ring import LaurentPoly, laurent_substitute_q_for_A
from .state import all_states, circle_count, enumerate_enhanced, gradings

LOOP_A = LaurentPoly({2: -1, -2: -1}, "A")  # value of one circle


def _smooth(quads: Tuple[Tuple[int, int, int, int], ...], k: int, positive: bool):
    """Smooth crossing k; return (remaining crossings, closed circles)."""
    q = quads[k]
    rest = quads[:k] + quads[k + 1:]
    pairs = ((q[0], q[1]), (q[2], q[3])) if positive else ((q[0], q[3]), (q[1], q[2]))
    parent = {e: e for e in q}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    present = {e for c in rest for e in c}
    classes: Dict[int, List[int]] = {}
    for e in q:
        classes.setdefault(find(e), []).append(e)
    closed = sum(1 for members in classes.values() if not present.intersection(members))
    ren = {e: find(e) for e in q}
    rest = tuple(tuple(ren.get(e, e) for e in c) for c in rest)
    return rest, closed


def _canon(quads) -> Tuple:
    mapping: Dict[int, int] = {}
    for c in quads:
        for e in c:
            mapping.setdefault(e, len(mapping))
    return tuple(sorted(tuple(mapping[e] for e in c) for c in quads))


def bracket_skein_oracle(d: LinkDiagram) -> LaurentPoly:
    """<D> by recursion on crossings, memoized on a canonical key."""
    memo: Dict[Tuple, LaurentPoly] = {}
    a = LaurentPoly.monomial(1, 1, "A")
    a_inv = LaurentPoly.monomial(-1, 1, "A")

    def rec(quads) -> LaurentPoly:
        if not quads:
            return LaurentPoly.const(1, "A")
        key = _canon(quads)
        if key in memo:
            return memo[key]
        r0, c0 = _smooth(quads, 0, True)
        r1, c1 = _smooth(quads, 0, False)
        val = a * (LOOP_A ** c0) * rec(r0) + a_inv * (LOOP_A ** c1) * rec(r1)
        memo[key] = val
        return val

    quads = tuple(c.edges for c in d.crossings)
    return rec(quads) * (LOOP_A ** len(d.loops))


def bracket_state_sum(d: LinkDiagram) -> LaurentPoly:
    total = LaurentPoly({}, "A")
    for markers in all_states(d):
        total = total + LaurentPoly.monomial(sum(markers), 1, "A") * LOOP_A ** circle_count(d, markers)
    return total


def bracket_enhanced_sum(d: LinkDiagram) -> LaurentPoly:
    """Sum over enhanced states of (-1)^tau A^(sigma - 2 tau)."""
    out: Dict[int, int] = {}
    for S in enumerate_enhanced(d):
        g = gradings(d, S)
        out[g.J] = out.get(g.J, 0) + (-1 if g.tau % 2 else 1)
    return LaurentPoly(out, "A")


def jones_skein_oracle(d: LinkDiagram) -> LaurentPoly:
    w = d.writhe()
    factor = LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1, "A")  # (-A)^(-3w)
    return laurent_substitute_q_for_A(factor * bracket_skein_oracle(d))


def jones_chain_level(c: ChainComplex) -> LaurentPoly:
    if c.scheme != JONES:
        raise ValueError("needs the Jones grading scheme")
    out: Dict[int, int] = {}
    for deg in c.degrees:
        sgn = -1 if deg % 2 else 1
        for j in c.secondary[deg]:
            out[j] = out.get(j, 0) + sgn
    return LaurentPoly(out, "q")


def jones_from_chain(c: ChainComplex) -> LaurentPoly:
    """Graded Euler characteristic of the (0,0) homology."""
    h = homology_at(c, 0, 0)
    out: Dict[int, int] = {}
    for (i, j), (b, _) in h.groups.items():
        out[j] = out.get(j, 0) + (-b if i % 2 else b)
    return LaurentPoly(out, "q")


# Gaussian-integer Laurent polynomials: exponent -> (re, im)
_OMEGA = {0: (1, 0), 1: (0, 1), 2: (-1, 0), 3: (0, -1)}


def bracket_from_bracket_homology(c: ChainComplex) -> Dict[int, Tuple[int, int]]:
    """Sum of omega^(2I) A^J rank H over the bracket-graded homology, omega^2 = -1."""
    if c.scheme != BRACKET:
        raise ValueError("needs the bracket grading scheme")
    h = homology_at(c, 0, 0)
    out: Dict[int, Tuple[int, int]] = {}
    for (dI, J), (b, _) in h.groups.items():
        re, im = _OMEGA[dI % 4]
        r0, i0 = out.get(J, (0, 0))
        out[J] = (r0 + b * re, i0 + b * im)
    return {k: v for k, v in out.items() if v != (0, 0)}


def rotate_bracket(p: LaurentPoly) -> Dict[int, Tuple[int, int]]:
    """p(omega A) with omega^2 = -1, as Gaussian coefficients."""
    out = {}
    for e, c in p.terms.items():
        re, im = _OMEGA[e % 4]
        out[e] = (c * re, c * im)
    return out


@dataclass
class InvariantReport:
    jones_from_chain: LaurentPoly
    jones_from_skein: LaurentPoly
    bracket_from_states: LaurentPoly
    bracket_from_skein: LaurentPoly

    @property
    def jones_agree(self) -> bool:
        return self.jones_from_chain == self.jones_from_skein

    @property
    def bracket_agree(self) -> bool:
        return self.bracket_from_states == self.bracket_from_skein

    def to_json(self) -> dict:
        return {
            "jones_from_chain": self.jones_from_chain.to_json(),
            "jones_from_skein": self.jones_from_skein.to_json(),
            "bracket_from_states": self.bracket_from_states.to_json(),
            "bracket_from_skein": self.bracket_from_skein.to_json(),
            "jones_agree": self.jones_agree,
            "bracket_agree": self.bracket_agree,
        }


def invariant_report(d: LinkDiagram, c: ChainComplex = None) -> InvariantReport:
    from .complex import build_complex

    if c is None:
        c = build_complex(d, JONES)
    return InvariantReport(jones_from_chain(c), jones_skein_oracle(d),
                           bracket_state_sum(d), bracket_skein_oracle(d))

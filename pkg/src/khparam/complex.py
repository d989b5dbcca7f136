"""The parametrized Khovanov complex of a diagram.

Generators are enhanced states.  Each one stands for S (x) [x] where x is
the list of its negative-marker crossings in ascending id order; that
ordering is the canonical orientation.  Appending a crossing a to x costs
the sign (-1)^#{c in x : c > a}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .diagram import LinkDiagram
from .frobenius import add_into, merge, split
from .matrix import SparseMatrix
from .ring import PolyST
from .state import EnhancedState, all_states, circle_of_edges, circle_count, gradings

JONES = "jones"
BRACKET = "bracket"


class DuplicateCrossing(ValueError):
    pass


def canonical_sign(order: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
    """Sort crossing ids; also return the parity sign of the sorting permutation."""
    order = list(order)
    if len(set(order)) != len(order):
        raise DuplicateCrossing(f"repeated crossing in {order}")
    inversions = 0
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if order[i] > order[j]:
                inversions += 1
    return tuple(sorted(order)), (-1 if inversions % 2 else 1)


def neg_order(d: LinkDiagram, S: EnhancedState) -> Tuple[int, ...]:
    return tuple(c.id for c, m in zip(d.crossings, S.markers) if m < 0)


@lru_cache(maxsize=200000)
def _edge_data(d: LinkDiagram, markers: Tuple[int, ...], p: int):
    """Local change when the positive marker at position p turns negative.

    Returns (new_markers, kind, src_circles, tgt_circles, carry, n_tgt)
    where carry maps each untouched source circle to its target circle.
    """
    new = markers[:p] + (-1,) + markers[p + 1:]
    n_src, src = circle_of_edges(d, markers)
    n_tgt, tgt = circle_of_edges(d, new)
    e = d.crossings[p].edges
    c1, c2 = src[e[0]], src[e[2]]
    rep = {}
    for lab, k in src.items():
        rep.setdefault(k, lab)
    touched = {c1, c2}
    carry = tuple((k, tgt[rep[k]]) for k in range(n_src) if k not in touched)
    if c1 != c2:
        return new, "merge", (c1, c2), (tgt[e[0]],), carry, n_tgt
    return new, "split", (c1,), (tgt[e[0]], tgt[e[1]]), carry, n_tgt


def local_differential(d: LinkDiagram, g: EnhancedState, p: int) -> Dict[EnhancedState, PolyST]:
    """Incidence numbers (g : T) for the marker change at position p.

    The permutation sign of the tensor factor is not included.
    """
    out: Dict[EnhancedState, PolyST] = {}
    if g.markers[p] < 0:
        return out
    new, kind, src, tgt, carry, n_tgt = _edge_data(d, g.markers, p)
    base = [0] * n_tgt
    for k, t in carry:
        base[t] = g.signs[k]
    if kind == "merge":
        for r, coeff in merge(g.signs[src[0]], g.signs[src[1]]).items():
            signs = list(base)
            signs[tgt[0]] = r
            add_into(out, EnhancedState(new, tuple(signs)), coeff)
    else:
        for (r1, r2), coeff in split(g.signs[src[0]]).items():
            signs = list(base)
            signs[tgt[0]] = r1
            signs[tgt[1]] = r2
            add_into(out, EnhancedState(new, tuple(signs)), coeff)
    return out


def differential_of(d: LinkDiagram, g: EnhancedState) -> Dict[EnhancedState, PolyST]:
    """delta(g) as a map generator -> coefficient (canonical orientation)."""
    out: Dict[EnhancedState, PolyST] = {}
    markers = g.markers
    negs_after = 0
    for p in range(len(markers) - 1, -1, -1):
        if markers[p] < 0:
            negs_after += 1
            continue
        sign = -1 if negs_after % 2 else 1
        for T, coeff in local_differential(d, g, p).items():
            add_into(out, T, coeff if sign > 0 else -coeff)
    return out


@dataclass
class ChainComplex:
    diagram: LinkDiagram
    scheme: str
    degrees: List[int]
    generators: Dict[int, List[EnhancedState]]
    differentials: Dict[int, SparseMatrix]
    secondary: Dict[int, List[int]]
    index: Dict[EnhancedState, Tuple[int, int]] = field(default_factory=dict)

    def step(self) -> int:
        return 1 if self.scheme == JONES else -2

    def next_degree(self, deg: int) -> int:
        return deg + self.step()

    def prev_degree(self, deg: int) -> int:
        return deg - self.step()

    def dim(self, deg: int) -> int:
        return len(self.generators.get(deg, ()))

    def differential(self, deg: int) -> SparseMatrix:
        """Matrix from degree deg to next_degree(deg) (possibly empty)."""
        if deg in self.differentials:
            return self.differentials[deg]
        return SparseMatrix.zero(self.dim(self.next_degree(deg)), self.dim(deg))

    def total_dim(self) -> int:
        return sum(len(v) for v in self.generators.values())

    def counts(self) -> Dict[Tuple[int, int], int]:
        out: Dict[Tuple[int, int], int] = {}
        for deg in self.degrees:
            for j in self.secondary[deg]:
                out[(deg, j)] = out.get((deg, j), 0) + 1
        return out

    def to_json(self, full: bool = False) -> dict:
        key2 = "j" if self.scheme == JONES else "J"
        key1 = "i" if self.scheme == JONES else "doubled_I"
        rep = {
            "scheme": self.scheme,
            "generators": [{key1: a, key2: b, "count": n} for (a, b), n in sorted(self.counts().items())],
            "differentials": [
                {key1: deg, "rows": m.nrows, "cols": m.ncols, "nnz": m.nnz(),
                 "density": (m.nnz() / (m.nrows * m.ncols)) if m.nrows * m.ncols else 0.0}
                for deg, m in sorted(self.differentials.items())
            ],
        }
        if full:
            rep["matrices"] = {str(deg): m.to_json() for deg, m in sorted(self.differentials.items())}
        return rep


def _degree_key(d: LinkDiagram, S: EnhancedState, scheme: str) -> Tuple[int, int]:
    g = gradings(d, S)
    if scheme == JONES:
        return g.i, g.j
    return g.doubled_I, g.J


def build_complex(d: LinkDiagram, scheme: str = JONES) -> ChainComplex:
    if scheme not in (JONES, BRACKET):
        raise ValueError(f"unknown grading scheme {scheme!r}")
    gens: Dict[int, List[EnhancedState]] = {}
    second: Dict[int, List[int]] = {}

    # enumerate in a fixed order: states in product order, signs in product order
    for markers in all_states(d):
        k = circle_count(d, markers)
        for signs in itertools.product((1, -1), repeat=k):
            S = EnhancedState(markers, signs)
            deg, j = _degree_key(d, S, scheme)
            gens.setdefault(deg, []).append(S)
            second.setdefault(deg, []).append(j)
    degrees = sorted(gens, reverse=(scheme == BRACKET))
    index = {}
    for deg in degrees:
        for pos, S in enumerate(gens[deg]):
            index[S] = (deg, pos)
    cx = ChainComplex(d, scheme, degrees, gens, {}, second, index)
    for deg in degrees:
        nxt = cx.next_degree(deg)
        if nxt not in gens:
            continue
        m = SparseMatrix(len(gens[nxt]), len(gens[deg]))
        for col, S in enumerate(gens[deg]):
            for T, coeff in differential_of(d, S).items():
                m.cols[col][index[T][1]] = coeff
        cx.differentials[deg] = m
    return cx


@dataclass
class D2Report:
    ok: bool
    degree: Optional[int] = None
    row: Optional[int] = None
    col: Optional[int] = None
    entry: Optional[PolyST] = None

    def to_json(self) -> dict:
        out = {"ok": self.ok}
        if not self.ok:
            out["first_violation"] = {"degree": self.degree, "row": self.row, "col": self.col,
                                      "entry": self.entry.to_json()}
        return out


def check_d2(c: ChainComplex) -> D2Report:
    for deg in c.degrees:
        nxt = c.next_degree(deg)
        if deg not in c.differentials or nxt not in c.differentials:
            continue
        prod = c.differentials[nxt] @ c.differentials[deg]
        hit = prod.first_nonzero()
        if hit is not None:
            r, col, v = hit
            return D2Report(False, deg, r, col, v)
    return D2Report(True)


@dataclass
class FlatComplex:
    """All degrees of a complex laid end to end, with one big differential."""

    cx: ChainComplex
    gens: List[EnhancedState]
    index: Dict[EnhancedState, int]
    degree: List[int]
    offsets: Dict[int, int]
    delta: SparseMatrix

    def locate(self, k: int) -> Tuple[int, int]:
        deg = self.degree[k]
        return deg, k - self.offsets[deg]


def flatten(c: ChainComplex) -> FlatComplex:
    gens: List[EnhancedState] = []
    degree: List[int] = []
    offsets: Dict[int, int] = {}
    for deg in c.degrees:
        offsets[deg] = len(gens)
        gens.extend(c.generators[deg])
        degree.extend([deg] * len(c.generators[deg]))
    index = {g: k for k, g in enumerate(gens)}
    n = len(gens)
    delta = SparseMatrix(n, n)
    for deg, m in c.differentials.items():
        r0 = offsets[c.next_degree(deg)]
        c0 = offsets[deg]
        for j, col in enumerate(m.cols):
            delta.cols[c0 + j] = {r0 + r: v for r, v in col.items()}
    return FlatComplex(c, gens, index, degree, offsets, delta)

"""Integer homology of the complex at integer values of (s, t)."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Sequence, Tuple, Union

from .complex import ChainComplex, JONES
from .kernels import eliminate_unit_pivots

IntegerMatrix = Union[Sequence[Sequence[int]], "SparseInt"]


@dataclass
class SparseInt:
    """Integer matrix stored as columns {row: value}."""

    nrows: int
    ncols: int
    cols: List[Dict[int, int]]

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> "SparseInt":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        cols = [{r: rows[r][c] for r in range(nr) if rows[r][c]} for c in range(nc)]
        return cls(nr, nc, cols)


def _dense_diagonal(cols: List[Dict[int, int]]) -> List[int]:
    """Diagonal of an SNF-equivalent form (not yet a divisibility chain)."""
    rows = sorted({r for c in cols for r in c})
    if not rows:
        return []
    rpos = {r: k for k, r in enumerate(rows)}
    A = [[0] * len(cols) for _ in rows]
    for j, c in enumerate(cols):
        for r, v in c.items():
            A[rpos[r]][j] = v
    m, n = len(A), len(cols)
    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                v = Ai[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        if j != t:
            for row in A:
                row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        Ai, At = A[i], A[t]
                        for j in range(t, n):
                            if At[j]:
                                Ai[j] -= q * At[j]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for row in A[t:]:
                            if row[t]:
                                row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if done:
                break
            # bring the smallest remainder in row/col t to the pivot
            best = None
            for i in range(t + 1, m):
                v = A[i][t]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, t)
            for j in range(t + 1, n):
                v = A[t][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), t, j)
            _, i, j = best
            if i != t:
                A[t], A[i] = A[i], A[t]
            else:
                for row in A:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def _divisibility_chain(diag: List[int]) -> List[int]:
    d = sorted(x for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return d


def smith_normal_form(m) -> Tuple[List[int], int]:
    """Invariant factors d1 | d2 | ... (non-zero only) and the rank."""
    if isinstance(m, SparseInt):
        cols = [dict(c) for c in m.cols]
        nrows = m.nrows
    else:
        sp = SparseInt.from_dense(m)
        cols, nrows = sp.cols, sp.nrows
    units, rest = eliminate_unit_pivots(cols, nrows)
    factors = [1] * units + _divisibility_chain(_dense_diagonal(rest))
    factors.sort()
    return _divisibility_chain(factors), len(factors)


@dataclass
class GradedHomology:
    s: int
    t: int
    scheme: str
    bigraded: bool
    groups: Dict = field(default_factory=dict)  # key -> (betti, [torsion])

    def nonzero(self) -> Dict:
        return {k: v for k, v in self.groups.items() if v[0] or v[1]}

    def to_json(self) -> dict:
        k1 = "i" if self.scheme == JONES else "doubled_I"
        k2 = "j" if self.scheme == JONES else "J"
        rows = []
        for key, (b, tor) in sorted(self.nonzero().items()):
            row = {k1: key[0] if self.bigraded else key}
            if self.bigraded:
                row[k2] = key[1]
            row["betti"] = b
            row["torsion"] = list(tor)
            rows.append(row)
        return {"parameters": {"s": self.s, "t": self.t}, "groups": rows}

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedHomology) and self.nonzero() == other.nonzero()


def _block_homology(c: ChainComplex, s: int, t: int, select) -> Dict[int, Tuple[int, List[int]]]:
    """Homology degree by degree restricted to generators passing ``select``."""
    keep = {deg: [k for k, j in enumerate(c.secondary[deg]) if select(j)] for deg in c.degrees}
    rank: Dict[int, int] = {}
    tors: Dict[int, List[int]] = {}
    for deg in c.degrees:
        nxt = c.next_degree(deg)
        if deg not in c.differentials or not keep[deg] or not keep.get(nxt):
            continue
        m = c.differentials[deg]
        rows = keep[nxt]
        rpos = {r: k for k, r in enumerate(rows)}
        cols = []
        for col in keep[deg]:
            d = {}
            for r, v in m.cols[col].items():
                if r in rpos:
                    x = v.specialize(s, t)
                    if x:
                        d[rpos[r]] = x
            cols.append(d)
        f, r = smith_normal_form(SparseInt(len(rows), len(cols), cols))
        rank[deg] = r
        tors[nxt] = [x for x in f if x > 1]
    out = {}
    for deg in c.degrees:
        dim = len(keep[deg])
        if not dim:
            continue
        b = dim - rank.get(deg, 0) - rank.get(c.prev_degree(deg), 0)
        out[deg] = (b, tors.get(deg, []))
    return out


def homology_at(c: ChainComplex, s_val: int = 0, t_val: int = 0) -> GradedHomology:
    h = GradedHomology(s_val, t_val, c.scheme, bigraded=(s_val == 0 and t_val == 0))
    if h.bigraded:
        js = sorted({j for deg in c.degrees for j in c.secondary[deg]})
        for j in js:
            for deg, val in _block_homology(c, 0, 0, lambda x, j=j: x == j).items():
                h.groups[(deg, j)] = val
    else:
        h.groups = _block_homology(c, s_val, t_val, lambda x: True)
    return h


def total_rank(h: GradedHomology) -> int:
    return sum(b for b, _ in h.groups.values())

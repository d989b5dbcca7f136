"""Column-major sparse matrices with PolyST entries.

Arithmetic runs on the raw term dicts of PolyST to keep the inner loops
free of object churn; results are wrapped back into PolyST.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Tuple

from .ring import ONE, PolyST


def _acc(target: Dict, terms: Dict, scale: Dict) -> None:
    """target += terms * scale (all raw term dicts)."""
    for (a1, b1), c1 in terms.items():
        for (a2, b2), c2 in scale.items():
            key = (a1 + a2, b1 + b2)
            v = target.get(key, 0) + c1 * c2
            if v:
                target[key] = v
            else:
                target.pop(key, None)


class SparseMatrix:
    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Optional[List[Dict[int, PolyST]]] = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else [dict() for _ in range(ncols)]

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, [{k: ONE} for k in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls(nrows, ncols)

    def add_entry(self, r: int, c: int, v: PolyST) -> None:
        if v.is_zero():
            return
        col = self.cols[c]
        if r in col:
            nv = col[r] + v
            if nv.is_zero():
                del col[r]
            else:
                col[r] = nv
        else:
            col[r] = v

    def get(self, r: int, c: int) -> PolyST:
        return self.cols[c].get(r, PolyST())

    def entries(self) -> Iterable[Tuple[int, int, PolyST]]:
        for c, col in enumerate(self.cols):
            for r, v in sorted(col.items()):
                yield r, c, v

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def first_nonzero(self) -> Optional[Tuple[int, int, PolyST]]:
        for c, col in enumerate(self.cols):
            if col:
                r = min(col)
                return r, c, col[r]
        return None

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        out = []
        mine = self.cols
        for col in other.cols:
            acc: Dict[int, Dict] = {}
            for k, v in col.items():
                vt = v.terms
                for r, u in mine[k].items():
                    slot = acc.get(r)
                    if slot is None:
                        slot = acc[r] = {}
                    _acc(slot, u.terms, vt)
            out.append({r: PolyST(t) for r, t in acc.items() if t})
        return SparseMatrix(self.nrows, other.ncols, out)

    def _combine(self, other: "SparseMatrix", sign: int) -> "SparseMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in addition")
        out = []
        for a, b in zip(self.cols, other.cols):
            col = dict(a)
            for r, v in b.items():
                if sign < 0:
                    v = -v
                nv = col[r] + v if r in col else v
                if nv.is_zero():
                    col.pop(r, None)
                else:
                    col[r] = nv
            out.append(col)
        return SparseMatrix(self.nrows, self.ncols, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return SparseMatrix(self.nrows, self.ncols, [{r: -v for r, v in c.items()} for c in self.cols])

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.cols == other.cols)

    def specialize(self, s_val: int, t_val: int) -> List[Dict[int, int]]:
        out = []
        for col in self.cols:
            d = {}
            for r, v in col.items():
                x = v.specialize(s_val, t_val)
                if x:
                    d[r] = x
            out.append(d)
        return out

    def submatrix(self, rows: List[int], cols: List[int]) -> "SparseMatrix":
        rpos = {r: k for k, r in enumerate(rows)}
        out = []
        for c in cols:
            out.append({rpos[r]: v for r, v in self.cols[c].items() if r in rpos})
        return SparseMatrix(len(rows), len(cols), out)

    def to_json(self) -> dict:
        return {"rows": self.nrows, "cols": self.ncols,
                "entries": [[r, c, v.to_json()] for r, c, v in self.entries()]}

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

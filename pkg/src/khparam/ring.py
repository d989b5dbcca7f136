"""Exact polynomial arithmetic.

Two small immutable types live here:

* :class:`PolyST` -- polynomials in the deformation parameters ``s`` and
  ``t`` with integer coefficients.  Differential entries are PolyST values.
* :class:`LaurentPoly` -- single-variable Laurent polynomials (in ``q`` or
  ``A``) used for the Jones polynomial and the Kauffman bracket.

Coefficients are Python ints, so nothing ever overflows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple


class OddExponent(ValueError):
    """Raised when an odd power of A cannot be rewritten in q."""


def _clean(terms: Iterable[Tuple[object, int]]) -> Dict:
    out: Dict = {}
    for k, v in terms:
        if v:
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


class PolyST:
    """Element of Z[s, t]; ``terms`` maps (deg_s, deg_t) to a non-zero int."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Tuple[int, int], int] | None = None):
        self.terms = _clean((terms or {}).items())
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c: int) -> "PolyST":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, ds: int = 0, dt: int = 0, c: int = 1) -> "PolyST":
        if ds < 0 or dt < 0:
            raise ValueError("PolyST exponents must be non-negative")
        return cls({(ds, dt): c})

    # predicates
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # arithmetic
    def __add__(self, other):
        other = _as_polyst(other)
        if other is NotImplemented:
            return other
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged.get(k, 0) + v
        return PolyST(merged)

    __radd__ = __add__

    def __neg__(self) -> "PolyST":
        return PolyST({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = _as_polyst(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_polyst(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return ZERO
        out: Dict[Tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return PolyST(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _as_polyst(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def specialize(self, s_val: int, t_val: int) -> int:
        return sum(c * s_val ** a * t_val ** b for (a, b), c in self.terms.items())

    def to_json(self) -> list:
        return [[a, b, c] for (a, b), c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data) -> "PolyST":
        return cls({(a, b): c for a, b, c in data})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            mono = ""
            if a:
                mono += "s" if a == 1 else f"s^{a}"
            if b:
                mono += "t" if b == 1 else f"t^{b}"
            parts.append(_signed_term(c, mono, first=not parts))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"PolyST({self})"


def _as_polyst(x):
    if isinstance(x, PolyST):
        return x
    if isinstance(x, int):
        return PolyST.const(x)
    return NotImplemented


ZERO = PolyST()
ONE = PolyST.const(1)
S = PolyST.monomial(1, 0)
T = PolyST.monomial(0, 1)


def poly_mul(a: PolyST, b: PolyST) -> PolyST:
    return a * b


def specialize(p: PolyST, s_val: int, t_val: int) -> int:
    return p.specialize(s_val, t_val)


def _signed_term(c: int, mono: str, first: bool) -> str:
    mag = abs(c)
    if mono:
        body = mono if mag == 1 else f"{mag}{mono}"
    else:
        body = str(mag)
    if first:
        return ("-" if c < 0 else "") + body
    return (" - " if c < 0 else " + ") + body


class LaurentPoly:
    """Laurent polynomial with integer coefficients in one named variable."""

    __slots__ = ("var", "terms")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "q"):
        self.var = var
        self.terms = _clean((terms or {}).items())

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "q") -> "LaurentPoly":
        return cls({exp: coeff}, var)

    @classmethod
    def const(cls, c: int, var: str = "q") -> "LaurentPoly":
        return cls({0: c}, var)

    def _check(self, other: "LaurentPoly") -> None:
        if self.terms and other.terms and self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly.const(other, self.var)
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged.get(k, 0) + v
        return LaurentPoly(merged, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("monomial inverse needs a unit coefficient")
            return LaurentPoly({-e * -n: c ** -n}, self.var)
        out = LaurentPoly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return False
        if not self.terms and not other.terms:
            return True
        return self.var == other.var and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self.terms.items())))

    def evaluate(self, x) -> Fraction:
        """Evaluate at a non-zero rational point (exact)."""
        x = Fraction(x)
        return sum((c * x ** e for e, c in self.terms.items()), Fraction(0))

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.terms.items()}, self.var)

    def reversed(self) -> "LaurentPoly":
        """Substitute var -> var^-1."""
        return LaurentPoly({-e: c for e, c in self.terms.items()}, self.var)

    def min_degree(self) -> int:
        return min(self.terms) if self.terms else 0

    def max_degree(self) -> int:
        return max(self.terms) if self.terms else 0

    def to_json(self) -> list:
        return [[e, c] for e, c in sorted(self.terms.items(), reverse=True)]

    @classmethod
    def from_json(cls, data, var: str = "q") -> "LaurentPoly":
        return cls({e: c for e, c in data}, var)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = self.var
            else:
                mono = f"{self.var}^{e}"
            parts.append(_signed_term(c, mono, first=not parts))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self!s}, var={self.var!r})"


def laurent_substitute_q_for_A(p: LaurentPoly) -> LaurentPoly:
    """Rewrite p(A) in q using A^2 = -q^-1 (i.e. q = -A^-2).

    Every exponent of ``p`` must be even; otherwise :class:`OddExponent`.
    """
    out: Dict[int, int] = {}
    for e, c in p.terms.items():
        if e % 2:
            raise OddExponent(f"A^{e} has no expression in q")
        k = e // 2
        sign = -1 if k % 2 else 1
        out[-k] = out.get(-k, 0) + sign * c
    return LaurentPoly(out, "q")

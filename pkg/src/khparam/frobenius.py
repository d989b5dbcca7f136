"""Merge and split rules on signed circles, with coefficients in Z[s, t].

Signs are the ints +1 and -1.  The "-" circle is the unit of the algebra
and "+" plays the role of X, with X*X = s X + t.
"""

from __future__ import annotations

import json
from typing import Dict, Tuple

from .ring import ONE, ZERO, PolyST, S, T

PLUS = 1
MINUS = -1
SIGNS = (PLUS, MINUS)

# SignSum: {sign: PolyST}; SignPairSum: {(sign1, sign2): PolyST}
SignSum = Dict[int, PolyST]
SignPairSum = Dict[Tuple[int, int], PolyST]


def _check(p: int) -> None:
    if p not in SIGNS:
        raise ValueError(f"sign must be +1 or -1, got {p!r}")


MERGE_TABLE: Dict[Tuple[int, int], SignSum] = {
    (MINUS, MINUS): {MINUS: ONE},
    (PLUS, MINUS): {PLUS: ONE},
    (MINUS, PLUS): {PLUS: ONE},
    (PLUS, PLUS): {PLUS: S, MINUS: T},
}

SPLIT_TABLE: Dict[int, SignPairSum] = {
    PLUS: {(PLUS, PLUS): ONE, (MINUS, MINUS): T},
    MINUS: {(MINUS, PLUS): ONE, (PLUS, MINUS): ONE, (MINUS, MINUS): -S},
}


def merge(p: int, q: int) -> SignSum:
    """m(p : q) as a map sign -> coefficient."""
    _check(p)
    _check(q)
    return dict(MERGE_TABLE[(p, q)])


def split(p: int) -> SignPairSum:
    """Delta(p) as a map (sign1, sign2) -> coefficient."""
    _check(p)
    return dict(SPLIT_TABLE[p])


def split_secondary_sign(p: int, fixed_second: int) -> SignSum:
    """Terms of split(p) whose second circle is ``fixed_second``."""
    _check(fixed_second)
    return {a: c for (a, b), c in split(p).items() if b == fixed_second}


def sign_char(p: int) -> str:
    return "+" if p == PLUS else "-"


def table_json() -> str:
    """The rule table as deterministic JSON."""
    data = {
        "merge": {
            sign_char(p) + sign_char(q): {sign_char(r): c.to_json() for r, c in v.items()}
            for (p, q), v in sorted(MERGE_TABLE.items(), reverse=True)
        },
        "split": {
            sign_char(p): {sign_char(a) + sign_char(b): c.to_json() for (a, b), c in v.items()}
            for p, v in sorted(SPLIT_TABLE.items(), reverse=True)
        },
    }
    return json.dumps(data, sort_keys=True)


def add_into(acc: dict, key, coeff: PolyST) -> None:
    """acc[key] += coeff, dropping zeros."""
    if coeff.is_zero():
        return
    new = acc.get(key, ZERO) + coeff
    if new.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = new

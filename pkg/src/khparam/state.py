"""Kauffman states, their circles, enhanced states and gradings.

A state is a tuple of markers aligned with ``d.crossings`` (sorted by id):
+1 is the positive marker (joins slots 0-1 and 2-3), -1 the negative one
(joins 0-3 and 1-2).  Circles are numbered by the smallest edge label
they contain, and an enhanced state carries one sign per circle in that
order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Tuple, Union

from .diagram import LinkDiagram
from .kernels import resolve_circles


class MarkerMismatch(ValueError):
    pass


@dataclass(frozen=True)
class CircleArrangement:
    circle_count: int
    edge_to_circle: Mapping[int, int]

    def circles(self) -> List[Tuple[int, ...]]:
        out: List[List[int]] = [[] for _ in range(self.circle_count)]
        for e, k in sorted(self.edge_to_circle.items()):
            out[k].append(e)
        return [tuple(c) for c in out]


@dataclass(frozen=True)
class EnhancedState:
    markers: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __str__(self) -> str:
        ch = lambda v: "+" if v > 0 else "-"
        return "markers:%s signs:%s" % ("".join(map(ch, self.markers)), "".join(map(ch, self.signs)))


@dataclass(frozen=True)
class Gradings:
    sigma: int
    tau: int
    i: int
    j: int
    doubled_I: int
    J: int


class _Layout:
    """Edge indexing shared by every state of one diagram."""

    def __init__(self, d: LinkDiagram):
        self.labels = d.edge_labels()
        self.index = {e: k for k, e in enumerate(self.labels)}
        self.quads = [tuple(self.index[e] for e in c.edges) for c in d.crossings]


@lru_cache(maxsize=64)
def _layout(d: LinkDiagram) -> _Layout:
    return _Layout(d)


def _markers_tuple(d: LinkDiagram, s: Union[Mapping[int, int], Tuple[int, ...]]) -> Tuple[int, ...]:
    if isinstance(s, Mapping):
        if set(s) != set(d.crossing_ids()):
            raise MarkerMismatch("state does not cover the diagram's crossings")
        return tuple(s[c] for c in d.crossing_ids())
    s = tuple(s)
    if len(s) != d.n:
        raise MarkerMismatch(f"{len(s)} markers for {d.n} crossings")
    return s


def resolve(d: LinkDiagram, s) -> CircleArrangement:
    """Circles of the smoothing of ``d`` along the markers ``s``."""
    markers = _markers_tuple(d, s)
    if any(m not in (1, -1) for m in markers):
        raise MarkerMismatch("markers must be +1 or -1")
    lay = _layout(d)
    count, labels = resolve_circles(lay.quads, markers, len(lay.labels))
    return CircleArrangement(count, {e: labels[k] for k, e in enumerate(lay.labels)})


@lru_cache(maxsize=65536)
def _resolve_cached(d: LinkDiagram, markers: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    lay = _layout(d)
    count, labels = resolve_circles(lay.quads, markers, len(lay.labels))
    return count, tuple(labels)


def circle_of_edges(d: LinkDiagram, markers: Tuple[int, ...]) -> Tuple[int, Dict[int, int]]:
    count, labels = _resolve_cached(d, markers)
    lay = _layout(d)
    return count, dict(zip(lay.labels, labels))


def circle_count(d: LinkDiagram, markers: Tuple[int, ...]) -> int:
    return _resolve_cached(d, markers)[0]


def all_states(d: LinkDiagram) -> Iterator[Tuple[int, ...]]:
    # all-positive first, then in product order
    return itertools.product((1, -1), repeat=d.n)


def enumerate_enhanced(d: LinkDiagram) -> Iterator[EnhancedState]:
    for markers in all_states(d):
        k = circle_count(d, markers)
        for signs in itertools.product((1, -1), repeat=k):
            yield EnhancedState(markers, signs)


def sigma_of(markers) -> int:
    return sum(markers)


def tau_of(signs) -> int:
    return -sum(signs)


def gradings(d: LinkDiagram, S: EnhancedState) -> Gradings:
    w = d.writhe()
    sigma = sigma_of(S.markers)
    tau = tau_of(S.signs)
    if (w - sigma) % 2:
        raise AssertionError("writhe and sigma have different parity")
    i = (w - sigma) // 2
    j = w + i + tau
    return Gradings(sigma, tau, i, j, sigma, sigma - 2 * tau)

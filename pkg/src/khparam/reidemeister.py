"""Explicit chain maps for the Reidemeister moves, checked as matrices.

For a move site in a diagram D the complex splits as C(D) = C + C_contr.
We build, generator by generator:

* ``inj``  -- basis vectors of C written in C(D),
* ``rho``  -- the projection C(D) -> C in basis coordinates,
* ``h``    -- a homotopy of degree -1 with  dh + hd = id - inj rho,
* ``isom`` -- C -> C(D') onto the complex of the other diagram.

Tensor factors are handled through local representatives: a generator
S (x) [x + locals] with the site's crossings appended in a fixed order
after the others.  ``_Local.rep_sign`` converts between that and the
canonical (sorted) order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .complex import (FlatComplex, build_complex, canonical_sign, flatten,
                      local_differential)
from .diagram import LinkDiagram, MoveSite, find_r3
from .frobenius import MINUS, PLUS, add_into, merge
from .homology import homology_at
from .matrix import SparseMatrix
from .ring import ONE, PolyST
from .state import EnhancedState, circle_of_edges, gradings

Vec = Dict[EnhancedState, PolyST]

GRID = ((0, 0), (0, 1), (1, 0), (2, -3))


class SiteMismatch(ValueError):
    pass


# ---------------------------------------------------------------- helpers

def _sgn(v: int) -> PolyST:
    return PolyST.const(v)


def _axpy(acc: Vec, vec: Vec, scale: PolyST) -> None:
    for k, v in vec.items():
        add_into(acc, k, v * scale)


class _Local:
    """Bookkeeping shared by all three moves on one diagram."""

    def __init__(self, D: LinkDiagram, local_ids: Sequence[int], internal: Sequence[int]):
        self.D = D
        self.ids = D.crossing_ids()
        self.pos = {cid: k for k, cid in enumerate(self.ids)}
        self.local = list(local_ids)
        self.internal = set(internal)
        self.exterior = [e for e in D.edge_labels() if e not in self.internal]

    def marker(self, S: EnhancedState, cid: int) -> int:
        return S.markers[self.pos[cid]]

    def x_of(self, S: EnhancedState) -> List[int]:
        """Negative crossings away from the site, ascending."""
        return [cid for cid, m in zip(self.ids, S.markers) if m < 0 and cid not in self.local]

    def rep_sign(self, S: EnhancedState, locals_in_order: Sequence[int]) -> int:
        """S (canonical) = sign * S (x) [x + locals_in_order]."""
        return canonical_sign(self.x_of(S) + list(locals_in_order))[1]

    def set_markers(self, S: EnhancedState, changes: Dict[int, int]) -> Tuple[int, ...]:
        m = list(S.markers)
        for cid, v in changes.items():
            m[self.pos[cid]] = v
        return tuple(m)

    def circle_of(self, S: EnhancedState, edge: int) -> int:
        return circle_of_edges(self.D, S.markers)[1][edge]

    def delta_at(self, S: EnhancedState, cid: int) -> Vec:
        return local_differential(self.D, S, self.pos[cid])


def transplant(D_src: LinkDiagram, S: EnhancedState, D_tgt: LinkDiagram, markers_tgt: Tuple[int, ...],
               emap: Dict[int, int], fill: Optional[int] = None) -> EnhancedState:
    """Carry circle signs across a change of smoothing through shared edges.

    ``emap`` pairs edges of D_src with edges of D_tgt that lie outside the
    move's disk.  Exterior circles must correspond one to one; target
    circles with no exterior edge get ``fill``.
    """
    _, src = circle_of_edges(D_src, S.markers)
    n_tgt, tgt = circle_of_edges(D_tgt, markers_tgt)
    fwd: Dict[int, int] = {}
    back: Dict[int, int] = {}
    for x, y in emap.items():
        cs, ct = src[x], tgt[y]
        if fwd.setdefault(cs, ct) != ct or back.setdefault(ct, cs) != cs:
            raise SiteMismatch("exterior circles do not correspond")
    signs = [0] * n_tgt
    for ct, cs in back.items():
        signs[ct] = S.signs[cs]
    free = [k for k in range(n_tgt) if not signs[k]]
    if free:
        if fill is None or len(free) != 1:
            raise SiteMismatch(f"{len(free)} target circles without exterior edges")
        signs[free[0]] = fill
    return EnhancedState(markers_tgt, tuple(signs))


def _crossing_markers(site: MoveSite, S: EnhancedState, D: LinkDiagram, D2: LinkDiagram,
                      rename: Optional[Dict[int, int]] = None) -> Tuple[int, ...]:
    """Markers on D2 copied from S through the crossing correspondence."""
    inv = {v: k for k, v in site.crossing_map.items()}
    pos = {cid: k for k, cid in enumerate(D.crossing_ids())}
    out = []
    for cid2 in D2.crossing_ids():
        src = inv[cid2]
        if rename:
            src = rename.get(src, src)
        out.append(S.markers[pos[src]])
    return tuple(out)


# ---------------------------------------------------------------- map sets

@dataclass
class ChainMapSet:
    kind: str
    site: MoveSite
    source: FlatComplex
    target: FlatComplex
    basis: List[EnhancedState]
    rho: SparseMatrix            # C(D) -> C, basis coordinates
    inj: SparseMatrix            # C -> C(D)
    h: SparseMatrix              # C(D) -> C(D), degree -1
    isom: SparseMatrix           # C -> C(D')
    labels: Dict[EnhancedState, str] = field(default_factory=dict)
    prime: Optional["ChainMapSet"] = None  # maps built on D' (third move only)

    def rho_full(self) -> SparseMatrix:
        return self.inj @ self.rho


def _columns(F: FlatComplex, fn: Callable[[EnhancedState], Vec], rows: Dict[EnhancedState, int],
             nrows: int) -> SparseMatrix:
    m = SparseMatrix(nrows, len(F.gens))
    for k, S in enumerate(F.gens):
        for T, v in fn(S).items():
            if T not in rows:
                raise SiteMismatch(f"image generator {T} outside the target")
            m.add_entry(rows[T], k, v)
    return m


def _basis_matrix(basis: List[EnhancedState], fn: Callable[[EnhancedState], Vec],
                  rows: Dict[EnhancedState, int], nrows: int) -> SparseMatrix:
    m = SparseMatrix(nrows, len(basis))
    for k, L in enumerate(basis):
        for T, v in fn(L).items():
            m.add_entry(rows[T], k, v)
    return m


# ---------------------------------------------------------------- R1

def classify_r1(loc: _Local, loop: int, S: EnhancedState) -> str:
    a = loc.local[0]
    if loc.marker(S, a) < 0:
        return "neg-marker"
    return "(p,+)" if S.signs[loc.circle_of(S, loop)] > 0 else "(p,-)"


def build_r1_maps(site: MoveSite) -> ChainMapSet:
    if site.kind != "R1":
        raise SiteMismatch(f"expected an R1 site, got {site.kind}")
    D, D2 = site.D, site.D_prime
    a = site.crossings[0]
    loop = site.edges["loop"]
    loc = _Local(D, [a], [loop])
    ext_self = {e: e for e in loc.exterior}
    ext_prime = {e: site.edge_map[e] for e in loc.exterior}
    F, F2 = flatten(build_complex(D)), flatten(build_complex(D2))
    labels = {S: classify_r1(loc, loop, S) for S in F.gens}
    basis = [S for S in F.gens if labels[S] == "(p,+)"]
    bidx = {S: k for k, S in enumerate(basis)}

    end = site.edges["ends"][0]

    def g(L: EnhancedState) -> Vec:
        out: Vec = {L: ONE}
        small = loc.circle_of(L, loop)
        big = loc.circle_of(L, end)
        p = L.signs[big]
        for r, coeff in merge(p, PLUS).items():
            signs = list(L.signs)
            signs[big] = r
            signs[small] = MINUS
            add_into(out, EnhancedState(L.markers, tuple(signs)), -coeff)
        return out

    def rho(S: EnhancedState) -> Vec:
        return {S: ONE} if labels[S] == "(p,+)" else {}

    def h(S: EnhancedState) -> Vec:
        if labels[S] != "neg-marker":
            return {}
        eps = loc.rep_sign(S, [a])
        T = transplant(D, S, D, loc.set_markers(S, {a: 1}), ext_self, fill=MINUS)
        return {T: _sgn(eps)}

    def isom(L: EnhancedState) -> Vec:
        T = transplant(D, L, D2, _crossing_markers(site, L, D, D2), ext_prime)
        return {T: ONE}

    return ChainMapSet(
        "R1", site, F, F2, basis,
        rho=_columns(F, rho, bidx, len(basis)),
        inj=_basis_matrix(basis, g, F.index, len(F.gens)),
        h=_columns(F, h, F.index, len(F.gens)),
        isom=_basis_matrix(basis, isom, F2.index, len(F2.gens)),
        labels=labels,
    )


# ---------------------------------------------------------------- R2 / R3 core

class _BigonCore:
    """The shared R2-type formulas; for the third move c is held positive."""

    def __init__(self, D: LinkDiagram, a: int, b: int, c: Optional[int], small_edge: int, internal):
        self.D = D
        self.a, self.b, self.c = a, b, c
        local = [a, b] + ([c] if c is not None else [])
        self.loc = _Local(D, local, internal)
        self.small_edge = small_edge
        self.ext_self = {e: e for e in self.loc.exterior}

    def classify(self, S: EnhancedState) -> str:
        loc = self.loc
        if self.c is not None and loc.marker(S, self.c) < 0:
            return "**-"
        ma, mb = loc.marker(S, self.a), loc.marker(S, self.b)
        tail = "+" if self.c is not None else ""
        if ma > 0 and mb > 0:
            return "++" + tail
        if ma < 0 and mb > 0:
            return "-+" + tail
        if ma < 0 and mb < 0:
            return "--" + tail
        n, cmap = circle_of_edges(self.D, S.markers)
        small = cmap[self.small_edge]
        if any(cmap[e] == small for e in loc.exterior):
            raise SiteMismatch("small circle touches the exterior")
        return "+-" + tail + ("," + ("+" if S.signs[small] > 0 else "-"))

    def _canon(self, T: EnhancedState, order: Sequence[int]) -> PolyST:
        return _sgn(canonical_sign(self.loc.x_of(T) + list(order))[1])

    def corr(self, L: EnhancedState) -> Vec:
        """Correction for a lead of type -+ (canonical), from delta_b."""
        loc, a, b = self.loc, self.a, self.b
        eps = loc.rep_sign(L, [a])
        out: Vec = {}
        for T, coeff in loc.delta_at(L, b).items():
            Tt = transplant(self.D, T, self.D, loc.set_markers(T, {a: 1}), self.ext_self, fill=MINUS)
            add_into(out, Tt, coeff * self._canon(Tt, [b]) * _sgn(eps))
        return out

    def g(self, L: EnhancedState) -> Vec:
        out: Vec = {L: ONE}
        _axpy(out, self.corr(L), ONE)
        return out

    def rho(self, S: EnhancedState, label: str) -> Vec:
        loc, a, b, c = self.loc, self.a, self.b, self.c
        out: Vec = {}
        if label.startswith("-+"):
            return {S: ONE}
        if label == "**-":
            return {S: ONE}
        if label.startswith("+-") and label.endswith(",+"):
            eps = loc.rep_sign(S, [b])
            Y = transplant(self.D, S, self.D, loc.set_markers(S, {b: 1}), self.ext_self)
            for T, coeff in loc.delta_at(Y, a).items():
                add_into(out, T, -coeff * _sgn(eps) * self._canon(T, [a]))
            if c is not None:
                for T, coeff in loc.delta_at(Y, c).items():
                    add_into(out, T, -coeff * _sgn(eps) * self._canon(T, [c]))
            return out
        if c is not None and label == "--+":
            eps = loc.rep_sign(S, [a, b])
            W = transplant(self.D, S, self.D, loc.set_markers(S, {a: 1}), self.ext_self, fill=MINUS)
            for T, coeff in loc.delta_at(W, c).items():
                add_into(out, T, coeff * _sgn(eps) * self._canon(T, [b, c]))
            return out
        return out

    def h(self, S: EnhancedState, label: str) -> Vec:
        loc, a, b = self.loc, self.a, self.b
        if label.startswith("--"):
            eps = loc.rep_sign(S, [a, b])
            W = transplant(self.D, S, self.D, loc.set_markers(S, {a: 1}), self.ext_self, fill=MINUS)
            return {W: -_sgn(eps) * self._canon(W, [b])}
        if label.startswith("+-") and label.endswith(",+"):
            eps = loc.rep_sign(S, [b])
            Y = transplant(self.D, S, self.D, loc.set_markers(S, {b: 1}), self.ext_self)
            return {Y: _sgn(eps)}
        return {}


def _core_maps(core: _BigonCore, F: FlatComplex):
    labels = {S: core.classify(S) for S in F.gens}
    basis = [S for S in F.gens if labels[S].startswith("-+") or labels[S] == "**-"]
    bidx = {S: k for k, S in enumerate(basis)}

    def inj(L):
        return core.g(L) if labels[L].startswith("-+") else {L: ONE}

    rho = _columns(F, lambda S: core.rho(S, labels[S]), bidx, len(basis))
    h = _columns(F, lambda S: core.h(S, labels[S]), F.index, len(F.gens))
    inj_m = _basis_matrix(basis, inj, F.index, len(F.gens))
    return labels, basis, rho, inj_m, h


def build_r2_maps(site: MoveSite, isom_sign: bool = True) -> ChainMapSet:
    """Maps for the second move; ``isom_sign=False`` drops the (-1)^i factor."""
    if site.kind != "R2":
        raise SiteMismatch(f"expected an R2 site, got {site.kind}")
    D, D2 = site.D, site.D_prime
    a, b = site.crossings
    internal = [site.edges["over"], site.edges["under"]]
    core = _BigonCore(D, a, b, None, site.edges["over"], internal)
    F, F2 = flatten(build_complex(D)), flatten(build_complex(D2))
    labels, basis, rho, inj, h = _core_maps(core, F)
    ext_prime = {e: site.edge_map[e] for e in core.loc.exterior}

    def isom(L):
        eps = core.loc.rep_sign(L, [a])
        if isom_sign and gradings(D, L).i % 2:
            eps = -eps
        T = transplant(D, L, D2, _crossing_markers(site, L, D, D2), ext_prime)
        return {T: _sgn(eps)}

    iso = _basis_matrix(basis, isom, F2.index, len(F2.gens))
    return ChainMapSet("R2", site, F, F2, basis, rho, inj, h, iso, labels)


def r3_site_for(D: LinkDiagram, crossings=None) -> MoveSite:
    st, a, b, c = find_r3(D, crossings)
    inner = {role: st[role]["edge"] for role in ("T", "M", "B")}
    return MoveSite("R3", D, None, (a, b, c), inner)


def _r3_core(site: MoveSite) -> _BigonCore:
    a, b, c = site.crossings
    return _BigonCore(site.D, a, b, c, site.edges["T"], list(site.edges[k] for k in ("T", "M", "B")))


def build_r3_maps(site: MoveSite) -> ChainMapSet:
    """Maps for the third move.

    Both D and D' split; C(D) and C(D') share crossing ids and all edge
    labels outside the triangle.  ``isom`` sends a lead of C to the matching
    lead of C' (written in C(D')), and a generator with negative marker at c
    to the one of D' with the markers of a and b exchanged.
    """
    if site.kind != "R3":
        raise SiteMismatch(f"expected an R3 site, got {site.kind}")
    D, D2 = site.D, site.D_prime
    a, b, c = site.crossings
    site2 = r3_site_for(D2, (a, b, c))
    site2.D_prime = D
    core, core2 = _r3_core(site), _r3_core(site2)
    F, F2 = flatten(build_complex(D)), flatten(build_complex(D2))
    labels, basis, rho, inj, h = _core_maps(core, F)
    labels2, basis2, rho2, inj2, h2 = _core_maps(core2, F2)
    ext = {e: e for e in core.loc.exterior}
    a2, b2, _ = site2.crossings
    # with c smoothed negatively the two pictures agree once a and b trade places
    rename = {a2: b, b2: a}
    ident = {cid: cid for cid in D.crossing_ids()}

    def isom(L):
        if labels[L] == "**-":
            pos = core.loc.pos
            markers2 = tuple(L.markers[pos[rename.get(cid, cid)]] for cid in D2.crossing_ids())
            T = transplant(D, L, D2, markers2, ext)
            locs = [x for x in (a, b) if core.loc.marker(L, x) < 0]
            eps = core.loc.rep_sign(L, locs + [c])
            inv = {v: k for k, v in rename.items()}
            order2 = core2.loc.x_of(T) + [inv.get(x, x) for x in locs] + [c]
            return {T: _sgn(eps * canonical_sign(order2)[1])}
        markers2 = tuple(L.markers[core.loc.pos[cid]] for cid in D2.crossing_ids())
        T = transplant(D, L, D2, markers2, ext)
        if labels2.get(T, "").startswith("-+") is False:
            raise SiteMismatch("lead does not land on a lead")
        eps = core.loc.rep_sign(L, [a]) * core2.loc.rep_sign(T, [a2])
        return {k: v * _sgn(eps) for k, v in core2.g(T).items()}

    site.crossing_map = site.crossing_map or ident
    iso = _basis_matrix(basis, isom, F2.index, len(F2.gens))
    prime = ChainMapSet("R3", site2, F2, F, basis2, rho2, inj2, h2, SparseMatrix(0, len(basis2)), labels2)
    return ChainMapSet("R3", site, F, F2, basis, rho, inj, h, iso, labels, prime)


def build_maps(site: MoveSite) -> ChainMapSet:
    return {"R1": build_r1_maps, "R2": build_r2_maps, "R3": build_r3_maps}[site.kind](site)


def classify(site: MoveSite, g: EnhancedState) -> str:
    """Generator type of g with respect to the site (see the builders)."""
    if site.kind == "R1":
        loc = _Local(site.D, site.crossings, [site.edges["loop"]])
        return classify_r1(loc, site.edges["loop"], g)
    if site.kind == "R2":
        a, b = site.crossings
        core = _BigonCore(site.D, a, b, None, site.edges["over"], [site.edges["over"], site.edges["under"]])
        return core.classify(g)
    return _r3_core(site).classify(g)


# ---------------------------------------------------------------- verification

@dataclass
class Violation:
    degree: int
    row: int
    col: int
    entry: PolyST

    def to_json(self) -> dict:
        return {"degree": self.degree, "row": self.row, "col": self.col, "entry": self.entry.to_json()}


@dataclass
class CheckReport:
    ok: bool
    violation: Optional[Violation] = None


def _first(m: SparseMatrix, rows: Optional[FlatComplex], cols: Optional[FlatComplex]) -> CheckReport:
    hit = m.first_nonzero()
    if hit is None:
        return CheckReport(True)
    r, c, v = hit
    deg, cpos = cols.locate(c) if cols is not None else (0, c)
    rpos = rows.locate(r)[1] if rows is not None else r
    return CheckReport(False, Violation(deg, rpos, cpos, v))


def verify_chain_map(f: SparseMatrix, source: FlatComplex, target: FlatComplex) -> CheckReport:
    """delta_target f = f delta_source, entry by entry."""
    if f.ncols != len(source.gens) or f.nrows != len(target.gens):
        raise ValueError("map shape does not match the complexes")
    return _first(target.delta @ f - f @ source.delta, target, source)


def homotopy_residual(maps: ChainMapSet, F: Optional[FlatComplex] = None) -> SparseMatrix:
    """delta h + h delta + inj rho - id as one matrix over the flattened complex."""
    F = F or maps.source
    n = len(F.gens)
    return F.delta @ maps.h + maps.h @ F.delta + maps.inj @ maps.rho - SparseMatrix.identity(n)


def verify_homotopy_identity(maps: ChainMapSet, F: Optional[FlatComplex] = None) -> CheckReport:
    """Is delta h + h delta + inj rho - id zero?"""
    F = F or maps.source
    return _first(homotopy_residual(maps, F), F, F)


def h_degree_ok(maps: ChainMapSet) -> bool:
    F = maps.source
    step = F.cx.step()
    for r, c, _ in maps.h.entries():
        if F.degree[r] != F.degree[c] - step:
            return False
    return True


def _retraction(maps: ChainMapSet) -> Dict[str, bool]:
    F = maps.source
    k = len(maps.basis)
    P = maps.inj @ maps.rho
    out = {
        "rho_inj_identity": (maps.rho @ maps.inj) == SparseMatrix.identity(k),
        "idempotent": (P @ P) == P,
        "subcomplexes": (P @ F.delta) == (F.delta @ P),
        "h_degree": h_degree_ok(maps),
    }
    # each basis vector of C has coefficient 1 on its own lead and no other
    # basis vector touches that lead; with rho inj = id this gives
    # C(D) = im(inj) + ker(rho) as a direct sum
    leads = {F.index[L]: j for j, L in enumerate(maps.basis)}
    out["direct_sum"] = all(
        col.get(F.index[maps.basis[j]]) == ONE and all(leads.get(r, j) == j for r in col)
        for j, col in enumerate(maps.inj.cols))
    return out


def _signed_permutation(m: SparseMatrix) -> bool:
    if m.nrows != m.ncols:
        return False
    seen = set()
    for col in m.cols:
        if len(col) != 1:
            return False
        (r, v), = col.items()
        if v not in (ONE, -ONE) or r in seen:
            return False
        seen.add(r)
    return True


def _inverse_signed_permutation(m: SparseMatrix) -> SparseMatrix:
    out = SparseMatrix(m.ncols, m.nrows)
    for c, col in enumerate(m.cols):
        for r, v in col.items():
            out.cols[r][c] = v
    return out


def _homology_key_map(h):
    return h.nonzero()


def homology_match(D: LinkDiagram, D2: LinkDiagram, grid=GRID) -> List[dict]:
    c1, c2 = build_complex(D), build_complex(D2)
    out = []
    for s, t in grid:
        ok = homology_at(c1, s, t).nonzero() == homology_at(c2, s, t).nonzero()
        out.append({"s": s, "t": t, "ok": ok})
    return out


@dataclass
class MoveReport:
    move: str
    identity_residual_zero: bool
    chain_map_ok: bool
    retraction_ok: bool
    homology_match: List[dict]
    first_violation: Optional[Violation] = None
    details: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (self.identity_residual_zero and self.chain_map_ok and self.retraction_ok
                and all(x["ok"] for x in self.homology_match))

    def to_json(self) -> dict:
        out = {
            "move": self.move,
            "identity_residual_zero": self.identity_residual_zero,
            "chain_map_ok": self.chain_map_ok,
            "retraction_ok": self.retraction_ok,
            "homology_match": self.homology_match,
            "details": dict(sorted(self.details.items())),
        }
        if self.first_violation is not None:
            out["first_violation"] = self.first_violation.to_json()
        return out


def verify_maps(maps: ChainMapSet, grid=GRID) -> MoveReport:
    details: Dict[str, bool] = {}
    first = None
    res = verify_homotopy_identity(maps)
    details["residual_D"] = res.ok
    first = first or res.violation
    retr = _retraction(maps)
    details.update(retr)
    F, F2 = maps.source, maps.target
    composite = maps.isom @ maps.rho
    cm = verify_chain_map(composite, F, F2)
    details["isom_rho_chain_map"] = cm.ok
    first = first or cm.violation
    if maps.prime is not None:
        res2 = verify_homotopy_identity(maps.prime)
        details["residual_D_prime"] = res2.ok
        first = first or res2.violation
        retr2 = _retraction(maps.prime)
        details.update({k + "_prime": v for k, v in retr2.items()})
        # isom in basis coordinates of C' must be a signed permutation
        coords = maps.prime.rho @ maps.isom
        details["isom_bijective"] = _signed_permutation(coords) and (maps.prime.inj @ coords) == maps.isom
    else:
        bij = _signed_permutation(maps.isom)
        details["isom_bijective"] = bij
        if bij:
            inv = _inverse_signed_permutation(maps.isom)
            round_trip = maps.isom @ maps.rho @ maps.inj @ inv
            details["isom_round_trip"] = round_trip == SparseMatrix.identity(len(F2.gens))
    residual_zero = details["residual_D"] and details.get("residual_D_prime", True)
    retraction_ok = all(v for k, v in details.items() if k.startswith(
        ("rho_inj", "idempotent", "subcomplexes", "h_degree", "direct_sum")))
    chain_ok = details["isom_rho_chain_map"] and details["isom_bijective"] and details.get("isom_round_trip", True)
    hm = homology_match(maps.site.D, maps.target.cx.diagram, grid)
    return MoveReport(maps.kind, residual_zero, chain_ok, retraction_ok, hm, first, details)


def verify_site(site: MoveSite, grid=GRID) -> MoveReport:
    return verify_maps(build_maps(site), grid)

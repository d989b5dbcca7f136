"""Oriented link diagrams in PD notation, and Reidemeister moves on them.

Conventions
-----------
``X(i,j,k,l)`` lists the four edges at a crossing starting with the
incoming under-strand and going counterclockwise.  The under-strand runs
slot 0 -> slot 2.  The over-strand joins slots 1 and 3; the crossing is
positive when it runs slot 3 -> slot 1 and negative when it runs
slot 1 -> slot 3.  ``O(e)`` is a crossingless circle carrying edge label e.

Crossing ids are 1..n in text order.  Edge labels are arbitrary positive
integers.  Inserting crossings appends ids; removing crossings renumbers
the remaining ones densely, keeping their order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple


class ParseError(ValueError):
    pass


class ValidationError(ValueError):
    pass


class SiteNotFound(LookupError):
    pass


class IllegalSite(ValueError):
    pass


@dataclass(frozen=True)
class CrossingData:
    id: int
    edges: Tuple[int, int, int, int]
    sign: int

    def out_slots(self) -> Tuple[int, int]:
        """Slots where the oriented strands leave the crossing."""
        return (2, 1) if self.sign > 0 else (2, 3)

    def in_slots(self) -> Tuple[int, int]:
        return (0, 3) if self.sign > 0 else (0, 1)

    def render(self) -> str:
        return "X(%d,%d,%d,%d)%s" % (self.edges + ("+" if self.sign > 0 else "-",))


@dataclass(frozen=True)
class LinkDiagram:
    crossings: Tuple[CrossingData, ...] = ()
    loops: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(sorted(self.crossings, key=lambda c: c.id)))
        object.__setattr__(self, "loops", tuple(sorted(self.loops)))

    # basic queries
    @property
    def n(self) -> int:
        return len(self.crossings)

    def crossing(self, cid: int) -> CrossingData:
        for c in self.crossings:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def crossing_ids(self) -> List[int]:
        return [c.id for c in self.crossings]

    def edge_labels(self) -> List[int]:
        labels = {e for c in self.crossings for e in c.edges}
        labels.update(self.loops)
        return sorted(labels)

    @property
    def num_edges(self) -> int:
        return len(self.edge_labels())

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def occurrences(self) -> Dict[int, List[Tuple[int, int]]]:
        """edge label -> [(crossing id, slot), ...]"""
        occ: Dict[int, List[Tuple[int, int]]] = {}
        for c in self.crossings:
            for k, e in enumerate(c.edges):
                occ.setdefault(e, []).append((c.id, k))
        return occ

    def components(self) -> int:
        parent = {e: e for e in self.edge_labels()}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.crossings:
            for a, b in ((0, 2), (1, 3)):
                ra, rb = find(c.edges[a]), find(c.edges[b])
                if ra != rb:
                    parent[ra] = rb
        return len({find(e) for e in parent})

    def render(self) -> str:
        parts = [c.render() for c in self.crossings]
        parts += ["O(%d)" % e for e in self.loops]
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render() or "<empty>"

    def mirror(self) -> "LinkDiagram":
        out = []
        for c in self.crossings:
            i, j, k, l = c.edges
            if c.sign > 0:
                out.append(CrossingData(c.id, (l, i, j, k), -1))
            else:
                out.append(CrossingData(c.id, (j, k, l, i), 1))
        return LinkDiagram(tuple(out), self.loops)

    def relabeled(self) -> "LinkDiagram":
        """Same diagram with edge labels renumbered 1..m in first-use order."""
        mapping: Dict[int, int] = {}
        for c in self.crossings:
            for e in c.edges:
                mapping.setdefault(e, len(mapping) + 1)
        for e in self.loops:
            mapping.setdefault(e, len(mapping) + 1)
        return LinkDiagram(
            tuple(CrossingData(c.id, tuple(mapping[e] for e in c.edges), c.sign) for c in self.crossings),
            tuple(mapping[e] for e in self.loops),
        )

    def edge_is_along(self, cid: int, slot: int) -> bool:
        """True when the edge at (cid, slot) is oriented away from the crossing."""
        return slot in self.crossing(cid).out_slots()

    def check_orientation(self) -> bool:
        """Every edge should leave one crossing end and enter the other."""
        heads: Dict[int, int] = {}
        tails: Dict[int, int] = {}
        for c in self.crossings:
            for k, e in enumerate(c.edges):
                if k in c.out_slots():
                    tails[e] = tails.get(e, 0) + 1
                else:
                    heads[e] = heads.get(e, 0) + 1
        for c in self.crossings:
            for e in c.edges:
                if heads.get(e, 0) != 1 or tails.get(e, 0) != 1:
                    return False
        return True


def writhe(d: LinkDiagram) -> int:
    return d.writhe()


_TOKEN = re.compile(r"\s*(?:([XO])\s*\(([^)]*)\)\s*([+-])?)")


def parse_pd(text: str, validate: bool = True) -> LinkDiagram:
    """Parse PD text.  See the module docstring for the format."""
    body_lines = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        body_lines.append(line)
    body = " ".join(body_lines).strip()
    crossings: List[CrossingData] = []
    loops: List[int] = []
    pos = 0
    while pos < len(body):
        if body[pos].isspace() or body[pos] == ",":
            pos += 1
            continue
        m = _TOKEN.match(body, pos)
        if not m:
            raise ParseError(f"unexpected input at column {pos + 1}: {body[pos:pos + 20]!r}")
        kind, args, sign = m.groups()
        try:
            vals = [int(a) for a in args.split(",")] if args.strip() else []
        except ValueError:
            raise ParseError(f"non-integer edge label in {m.group(0).strip()!r}") from None
        if any(v <= 0 for v in vals):
            raise ParseError(f"edge labels must be positive in {m.group(0).strip()!r}")
        if kind == "X":
            if len(vals) != 4:
                raise ParseError(f"crossing needs 4 edges, got {len(vals)} in {m.group(0).strip()!r}")
            if sign is None:
                raise ParseError(f"crossing {m.group(0).strip()!r} lacks a +/- sign")
            crossings.append(CrossingData(len(crossings) + 1, tuple(vals), 1 if sign == "+" else -1))
        else:
            if len(vals) != 1:
                raise ParseError(f"loop needs 1 edge label in {m.group(0).strip()!r}")
            if sign is not None:
                raise ParseError("loops take no sign")
            loops.append(vals[0])
        pos = m.end()
    d = LinkDiagram(tuple(crossings), tuple(loops))
    if validate:
        validate_diagram(d)
    return d


def validate_diagram(d: LinkDiagram) -> None:
    counts: Dict[int, int] = {}
    for c in d.crossings:
        for e in c.edges:
            counts[e] = counts.get(e, 0) + 1
    for e, k in sorted(counts.items()):
        if k != 2:
            raise ValidationError(f"edge {e} appears {k} times (expected 2)")
    seen = set()
    for e in d.loops:
        if e in counts or e in seen:
            raise ValidationError(f"loop label {e} is already used")
        seen.add(e)


def load_pd(path) -> LinkDiagram:
    with open(path) as fh:
        return parse_pd(fh.read())


# ---------------------------------------------------------------- faces
# A dart (cid, slot) leaves crossing cid along the edge at that slot; the
# face being traced lies on its left.  Loop darts are ("O", e, +1 | -1).

Dart = tuple


def _next_dart(d: LinkDiagram, occ, dart: Dart) -> Dart:
    cid, k = dart
    e = d.crossing(cid).edges[k]
    a, b = occ[e]
    other = b if a == (cid, k) else a
    c2, k2 = other
    return (c2, (k2 - 1) % 4)


def faces(d: LinkDiagram) -> List[List[Dart]]:
    occ = d.occurrences()
    seen = set()
    out: List[List[Dart]] = []
    for c in d.crossings:
        for k in range(4):
            start = (c.id, k)
            if start in seen:
                continue
            face = []
            cur = start
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                cur = _next_dart(d, occ, cur)
            out.append(face)
    for e in d.loops:
        out.append([("O", e, 1)])
        out.append([("O", e, -1)])
    return out


def dart_edge(d: LinkDiagram, dart: Dart) -> int:
    if dart[0] == "O":
        return dart[1]
    return d.crossing(dart[0]).edges[dart[1]]


def dart_along(d: LinkDiagram, dart: Dart) -> bool:
    """Does the dart run with the edge's orientation?"""
    if dart[0] == "O":
        return dart[2] > 0
    return d.edge_is_along(dart[0], dart[1])


# ---------------------------------------------------------------- sites

@dataclass
class MoveSite:
    """Where a move happened.

    ``D`` is the diagram holding the local crossings in the move's reference
    picture (the kinked / poked side for R1 and R2), ``D_prime`` the other.
    ``crossings`` are the ids of a (R1); a, b (R2); a, b, c (R3) in ``D``.
    ``edge_map`` sends each edge label of ``D`` to its label in ``D_prime``,
    or None for edges inside the disk.
    """

    kind: str
    D: LinkDiagram
    D_prime: LinkDiagram
    crossings: Tuple[int, ...]
    edges: Dict[str, int] = field(default_factory=dict)
    edge_map: Dict[int, Optional[int]] = field(default_factory=dict)
    crossing_map: Dict[int, int] = field(default_factory=dict)


def _fresh(d: LinkDiagram, k: int) -> List[int]:
    top = max(d.edge_labels(), default=0)
    return list(range(top + 1, top + 1 + k))


def _replace_at(crossings: Dict[int, List[int]], where: Tuple[int, int], label: int) -> None:
    cid, k = where
    crossings[cid][k] = label


def _rebuild(d: LinkDiagram, edges: Dict[int, List[int]], extra: Sequence[CrossingData], loops) -> LinkDiagram:
    cs = [CrossingData(c.id, tuple(edges[c.id]), c.sign) for c in d.crossings]
    return LinkDiagram(tuple(cs) + tuple(extra), tuple(loops))


def _build_crossing(cid: int, arms: Dict[str, int], under_in: str, over_in: str) -> CrossingData:
    order = ["E", "N", "W", "S"]
    start = order.index(under_in)
    rot = [order[(start + i) % 4] for i in range(4)]
    slot_of_over_in = rot.index(over_in)
    if slot_of_over_in not in (1, 3):
        raise AssertionError("over strand must occupy odd slots")
    sign = 1 if slot_of_over_in == 3 else -1
    return CrossingData(cid, tuple(arms[r] for r in rot), sign)


def a_joins(c: CrossingData, slots) -> bool:
    """Does the positive-marker smoothing at c join these two slots?"""
    return frozenset(slots) in (frozenset((0, 1)), frozenset((2, 3)))


def _delete_crossings(d: LinkDiagram, ids: Iterable[int]) -> Tuple[LinkDiagram, Dict[int, int], Dict[int, int]]:
    """Remove crossings, letting both strands pass straight through.

    Each merged edge takes the smallest label among its pieces.  Returns the
    new diagram, the old->new edge map and the old->new crossing-id map.
    """
    ids = set(ids)
    parent = {e: e for e in d.edge_labels()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        if c.id in ids:
            for a, b in ((0, 2), (1, 3)):
                ra, rb = find(c.edges[a]), find(c.edges[b])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    emap = {e: find(e) for e in parent}
    keep = [c for c in d.crossings if c.id not in ids]
    cmap = {c.id: i + 1 for i, c in enumerate(keep)}
    used = {emap[e] for c in keep for e in c.edges}
    loops = set(emap[e] for e in d.loops)
    for e in parent:
        r = emap[e]
        if r not in used:
            loops.add(r)
    cs = tuple(CrossingData(cmap[c.id], tuple(emap[e] for e in c.edges), c.sign) for c in keep)
    return LinkDiagram(cs, tuple(sorted(loops))), emap, cmap


# ---------------------------------------------------------------- R1

def insert_r1(d: LinkDiagram, edge: int) -> Tuple[LinkDiagram, MoveSite]:
    """Add a left-twisted kink on ``edge``."""
    occ = d.occurrences()
    if edge not in occ and edge not in d.loops:
        raise SiteNotFound(f"edge {edge} not in diagram")
    loop, e2 = _fresh(d, 2)
    e1 = edge
    new_id = d.n + 1
    edges = {c.id: list(c.edges) for c in d.crossings}
    loops = list(d.loops)
    if edge in d.loops:
        loops.remove(edge)
        e2 = e1
        loop = _fresh(d, 1)[0]
    else:
        # the head-side occurrence of the edge now carries e2
        head = [o for o in occ[edge] if not d.edge_is_along(*o)]
        _replace_at(edges, head[0], e2)
    c = CrossingData(new_id, (loop, loop, e2, e1), 1)
    d2 = _rebuild(d, edges, [c], loops)
    site = _r1_site(d2, new_id)
    site.D_prime = d
    site.edge_map = {e1: edge, e2: edge, loop: None}
    for e in d.edge_labels():
        site.edge_map.setdefault(e, e)
    site.crossing_map = {x: x for x in d.crossing_ids()}
    return d2, site


def _r1_site(d: LinkDiagram, cid: int) -> MoveSite:
    c = d.crossing(cid)
    e = c.edges
    for pair, rest in (((0, 1), (2, 3)), ((2, 3), (0, 1))):
        if e[pair[0]] == e[pair[1]] and e[rest[0]] != e[pair[0]]:
            loop = e[pair[0]]
            return MoveSite("R1", d, None, (cid,), {"loop": loop, "ends": (e[rest[0]], e[rest[1]])})
    for pair in ((1, 2), (3, 0)):
        if e[pair[0]] == e[pair[1]]:
            raise IllegalSite(f"crossing {cid} is a right-twisted kink")
    raise SiteNotFound(f"crossing {cid} is not a kink")


def remove_r1(d: LinkDiagram, cid: int) -> Tuple[LinkDiagram, MoveSite]:
    site = _r1_site(d, cid)
    d2, emap, cmap = _delete_crossings(d, [cid])
    site.D_prime = d2
    site.edge_map = {e: (None if e == site.edges["loop"] else v) for e, v in emap.items()}
    site.crossing_map = {k: v for k, v in cmap.items()}
    return d2, site


# ---------------------------------------------------------------- R2

def _face_with(d: LinkDiagram, e: int, f: int) -> Tuple[Dart, Dart]:
    if e in d.loops or f in d.loops:
        # split components: nest the loop inside a face touching the other edge
        de = ("O", e, 1) if e in d.loops else _first_dart(d, e)
        df = ("O", f, 1) if f in d.loops else _first_dart(d, f)
        return de, df
    for face in faces(d):
        es = [x for x in face if dart_edge(d, x) == e]
        fs = [x for x in face if dart_edge(d, x) == f]
        if e == f and es:
            return es[0], es[0]
        if es and fs:
            return es[0], fs[0]
    raise SiteNotFound(f"edges {e} and {f} share no face")


def _first_dart(d: LinkDiagram, e: int) -> Dart:
    occ = d.occurrences()
    if e not in occ:
        raise SiteNotFound(f"edge {e} not in diagram")
    return occ[e][0]


def insert_r2(d: LinkDiagram, over: int, under: Optional[int] = None) -> Tuple[LinkDiagram, MoveSite]:
    """Push a finger of edge ``over`` across edge ``under`` (default: itself)."""
    if under is None:
        under = over
    if over not in d.edge_labels() or under not in d.edge_labels():
        raise SiteNotFound(f"edges {over}/{under} not in diagram")
    de, df = _face_with(d, over, under)
    occ = d.occurrences()
    edges = {c.id: list(c.edges) for c in d.crossings}
    loops = list(d.loops)
    P, Q = d.n + 1, d.n + 2

    if over == under:
        along = dart_along(d, de)
        if over in d.loops:
            n1, n2, n3 = _fresh(d, 3)
            s = [over, n1, n2, n3, over]
            loops.remove(over)
        else:
            n1, n2, n3, n4 = _fresh(d, 4)
            if along:
                s = [over, n1, n2, n3, n4]
            else:
                s = [n1, n2, n3, n4, over]
            other = [o for o in occ[over] if o != de][0]
            _replace_at(edges, de, s[0])
            _replace_at(edges, other, s[4])
        e1, e2, e3 = s[2], s[1], s[0]
        f1, f2, f3 = s[2], s[3], s[4]
        e_up, f_up = not along, along
    else:
        e_up = not dart_along(d, de)
        f_up = dart_along(d, df)
        fresh = iter(_fresh(d, 4))
        e1, e2, e3 = _pieces(d, over, e_up, fresh, edges, occ, loops, de, top_at_dart=True)
        f1, f2, f3 = _pieces(d, under, f_up, fresh, edges, occ, loops, df, top_at_dart=False)

    arms_p = {"E": e2, "N": f2, "W": e1, "S": f1}
    arms_q = {"E": e2, "N": f3, "W": e3, "S": f2}
    under_in = "S" if f_up else "N"
    cp = _build_crossing(P, arms_p, under_in, "W" if e_up else "E")
    cq = _build_crossing(Q, arms_q, under_in, "E" if e_up else "W")
    d2 = _rebuild(d, edges, [cp, cq], loops)
    site = _r2_site(d2, P, Q, inner=(e2, f2))
    site.D_prime = d
    emap: Dict[int, Optional[int]] = {e: e for e in d.edge_labels()}
    for x in (e1, e3):
        emap[x] = over
    for x in (f1, f3):
        emap[x] = under
    emap[e2] = None
    emap[f2] = None
    site.edge_map = emap
    site.crossing_map = {x: x for x in d.crossing_ids()}
    return d2, site


def _pieces(d, label, up, fresh, edges, occ, loops, dart, top_at_dart):
    """Labels (bottom, middle, top) for a cut edge; rewrites its endpoints."""
    if label in d.loops:
        loops.remove(label)
        return label, next(fresh), label
    mid = next(fresh)
    new = next(fresh)
    bottom, top = (label, new) if up else (new, label)
    other = [o for o in occ[label] if o != dart][0]
    at_dart, at_other = (top, bottom) if top_at_dart else (bottom, top)
    _replace_at(edges, dart, at_dart)
    _replace_at(edges, other, at_other)
    return bottom, mid, top


def _bigon_info(d: LinkDiagram, P: int, Q: int):
    """Shared edges between P and Q and their slots at each crossing."""
    cp, cq = d.crossing(P), d.crossing(Q)
    shared = []
    occ = d.occurrences()
    for e, places in occ.items():
        ids = sorted(o[0] for o in places)
        if ids == sorted((P, Q)) and P != Q:
            sp = [o[1] for o in places if o[0] == P][0]
            sq = [o[1] for o in places if o[0] == Q][0]
            shared.append((e, sp, sq))
    return cp, cq, shared


def _r2_site(d: LinkDiagram, P: int, Q: int, inner: Optional[Sequence[int]] = None) -> MoveSite:
    """R2 site at crossings P, Q; ``inner`` pins the bigon when there are two."""
    cp, cq, shared = _bigon_info(d, P, Q)
    if len(shared) < 2:
        raise SiteNotFound(f"crossings {P},{Q} do not bound a bigon")
    # pick a pair of shared edges forming a bigon face
    pair = None
    face_edges = []
    for face in faces(d):
        if len(face) == 2 and {face[0][0], face[1][0]} == {P, Q}:
            face_edges.append(face)
    for face in face_edges:
        es = [dart_edge(d, x) for x in face]
        if inner is not None and set(es) != set(inner):
            continue
        cand = [s for s in shared if s[0] in es]
        if len(cand) == 2:
            over = [s for s in cand if s[1] % 2 == 1 and s[2] % 2 == 1]
            under = [s for s in cand if s[1] % 2 == 0 and s[2] % 2 == 0]
            if over and under:
                pair = (over[0], under[0])
                break
    if pair is None:
        raise SiteNotFound(f"crossings {P},{Q} do not form an R2 bigon")
    if cp.sign == cq.sign:
        raise IllegalSite("R2 crossings must have opposite signs")
    (eo, po, qo), (eu, pu, qu) = pair
    if a_joins(cp, (po, pu)):
        a, b = P, Q
    else:
        a, b = Q, P
    return MoveSite("R2", d, None, (a, b), {"over": eo, "under": eu})


def remove_r2(d: LinkDiagram, P: int, Q: int) -> Tuple[LinkDiagram, MoveSite]:
    site = _r2_site(d, P, Q)
    d2, emap, cmap = _delete_crossings(d, [P, Q])
    site.D_prime = d2
    inner = {site.edges["over"], site.edges["under"]}
    site.edge_map = {e: (None if e in inner else v) for e, v in emap.items()}
    site.crossing_map = cmap
    return d2, site


# ---------------------------------------------------------------- R3

def _triangle(d: LinkDiagram, face: List[Dart]):
    """Describe a 3-cycle face, or None if it is not an R3 triangle."""
    if len(face) != 3 or len({x[0] for x in face}) != 3 or face[0][0] == "O":
        return None
    occ = d.occurrences()
    sides = []
    for cid, k in face:
        e = d.crossing(cid).edges[k]
        a, b = occ[e]
        other = b if a == (cid, k) else a
        sides.append({"edge": e, "ends": ((cid, k), other)})
    strands = {}
    for s in sides:
        (x, kx), (y, ky) = s["ends"]
        over = (kx % 2 == 1, ky % 2 == 1)
        if over == (True, True):
            role = "T"
        elif over == (False, False):
            role = "B"
        else:
            role = "M"
        if role in strands:
            return None
        strands[role] = s
    return strands


def find_r3(d: LinkDiagram, crossings: Optional[Sequence[int]] = None, strict: bool = True):
    """Locate an R3 triangle; returns (strands, a, b, c).

    With ``strict`` a triangle of the mirrored kind raises IllegalSite.
    """
    bad = None
    for face in faces(d):
        st = _triangle(d, face)
        if st is None:
            continue
        ids = {x[0] for x in face}
        if crossings is not None and ids != set(crossings):
            continue
        top = {st["T"]["ends"][0][0], st["T"]["ends"][1][0]}
        c = (ids - top).pop()
        cc = d.crossing(c)
        int_slots = {cid_k[1] for s in st.values() for cid_k in s["ends"] if cid_k[0] == c}
        ok = a_joins(cc, int_slots)
        roles = []
        for x in sorted(top):
            slots = {cid_k[1] for s in st.values() for cid_k in s["ends"] if cid_k[0] == x}
            roles.append((a_joins(d.crossing(x), slots), x))
        joins = [x for j, x in roles if j]
        if ok and len(joins) == 1:
            a = joins[0]
            b = (top - {a}).pop()
            return st, a, b, c
        bad = ids
    if bad is not None and strict:
        raise IllegalSite(f"triangle at crossings {sorted(bad)} is the mirrored R3 configuration")
    raise SiteNotFound("no R3 triangle found")


def apply_r3(d: LinkDiagram, crossings: Optional[Sequence[int]] = None) -> Tuple[LinkDiagram, MoveSite]:
    st, a, b, c = find_r3(d, crossings)
    edges = {cr.id: list(cr.edges) for cr in d.crossings}
    inner = []
    for s in st.values():
        (x, kx), (y, ky) = s["ends"]
        ext_x, ext_y = (kx + 2) % 4, (ky + 2) % 4
        Ex = d.crossing(x).edges[ext_x]
        Ey = d.crossing(y).edges[ext_y]
        e = s["edge"]
        inner.append(e)
        edges[x][kx] = Ey
        edges[y][ky] = Ex
        edges[x][ext_x] = e
        edges[y][ext_y] = e
    d2 = _rebuild(d, edges, [], d.loops)
    emap: Dict[int, Optional[int]] = {e: (None if e in inner else e) for e in d.edge_labels()}
    site = MoveSite("R3", d, d2, (a, b, c), {"T": st["T"]["edge"], "M": st["M"]["edge"], "B": st["B"]["edge"]},
                    emap, {x: x for x in d.crossing_ids()})
    return d2, site


# ---------------------------------------------------------------- dispatch

@dataclass(frozen=True)
class MoveRequest:
    kind: str                      # "r1" | "r2" | "r3"
    edge: Optional[int] = None      # r1 / r2 insertion edge (over strand for r2)
    edge2: Optional[int] = None     # r2 under strand
    crossings: Optional[Tuple[int, ...]] = None  # r3 triangle or removal site
    remove: bool = False


def apply_move(d: LinkDiagram, req: MoveRequest) -> Tuple[LinkDiagram, MoveSite]:
    kind = req.kind.lower()
    if kind == "r1":
        if req.remove:
            return remove_r1(d, req.crossings[0])
        return insert_r1(d, req.edge)
    if kind == "r2":
        if req.remove:
            return remove_r2(d, *req.crossings)
        return insert_r2(d, req.edge, req.edge2)
    if kind == "r3":
        return apply_r3(d, req.crossings)
    raise ValueError(f"unknown move {req.kind!r}")


# ---------------------------------------------------------------- braids

def braid_closure(word: Sequence[int], strands: Optional[int] = None) -> LinkDiagram:
    """Closure of a braid word (generator k > 0 for sigma_k, -k for its inverse)."""
    m = strands or (max((abs(g) for g in word), default=0) + 1)
    nxt = [1]

    def fresh():
        v = nxt[0]
        nxt[0] += 1
        return v

    start = [fresh() for _ in range(m)]
    cur = list(start)
    crossings = []
    for g in word:
        k = abs(g) - 1
        a, b = cur[k], cur[k + 1]
        c, dd = fresh(), fresh()
        if g > 0:
            crossings.append((b, dd, c, a, 1))
        else:
            crossings.append((a, b, dd, c, -1))
        cur[k], cur[k + 1] = c, dd
    # close up: the outgoing label at the top replaces the incoming one at the bottom
    rename = {start[i]: cur[i] for i in range(m)}
    used = set()
    out = []
    for i, (w, x, y, z, s) in enumerate(crossings):
        es = tuple(rename.get(e, e) for e in (w, x, y, z))
        used.update(es)
        out.append(CrossingData(i + 1, es, s))
    loops = [cur[i] for i in range(m) if cur[i] not in used]
    return LinkDiagram(tuple(out), tuple(loops)).relabeled()

"""Command line front end.

    khparam homology --pd trefoil.pd --s 0 --t 0 --format json
    khparam jones --pd trefoil.pd
    khparam verify-move --move r2 --pd unknot.pd --at-edge 1
    khparam corpus

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional

from . import __version__
from .complex import BRACKET, JONES, build_complex, check_d2
from .diagram import (IllegalSite, LinkDiagram, MoveRequest, ParseError, SiteNotFound, ValidationError,
                      apply_move, find_r3, insert_r1, insert_r2, parse_pd)
from .homology import homology_at
from .invariants import bracket_skein_oracle, bracket_state_sum, jones_from_chain, jones_skein_oracle
from .reidemeister import GRID, SiteMismatch, verify_site

SCHEMA_VERSION = 1
CORPUS_ENV = "KHPARAM_CORPUS"
MAX_CROSSINGS = 14
BUNDLED = Path(__file__).with_name("corpus")


class InputError(Exception):
    """Anything that should end with exit status 2."""


def _emit(obj: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        obj = {"schema_version": SCHEMA_VERSION, **obj}
        sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _load(args) -> LinkDiagram:
    if args.inline is not None:
        text, source = args.inline, "<inline>"
    elif args.pd is not None:
        path = Path(args.pd)
        if not path.exists() and (BUNDLED / path.name).exists():
            path = BUNDLED / path.name
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {args.pd}: {exc.strerror}") from None
        source = args.pd
    else:
        raise InputError("give --pd FILE or --inline TEXT")
    try:
        d = parse_pd(text)
    except (ParseError, ValidationError) as exc:
        raise InputError(f"{source}: {type(exc).__name__}: {exc}") from None
    _check_size(d, args.max_crossings)
    return d


def _check_size(d: LinkDiagram, limit: int) -> None:
    if d.n > limit:
        raise InputError(f"{d.n} crossings exceeds the limit of {limit} (raise it with --max-crossings)")


# ---------------------------------------------------------------- subcommands

def _homology_text(h) -> str:
    lines = [f"# s={h.s} t={h.t}"]
    for row in h.to_json()["groups"]:
        keys = [k for k in row if k not in ("betti", "torsion")]
        pos = " ".join(f"{k}={row[k]}" for k in keys)
        parts = [f"Z^{row['betti']}" if row["betti"] > 1 else "Z"] if row["betti"] else []
        parts += [f"Z/{x}" for x in row["torsion"]]
        lines.append(f"{pos}: {' + '.join(parts)}")
    return "\n".join(lines)


def cmd_homology(args) -> int:
    d = _load(args)
    h = homology_at(build_complex(d, args.scheme), args.s, args.t)
    _emit({"homology": h.to_json(), "scheme": args.scheme}, args.format, _homology_text(h))
    return 0


def cmd_jones(args) -> int:
    d = _load(args)
    chain = jones_from_chain(build_complex(d, JONES))
    skein = jones_skein_oracle(d)
    ok = chain == skein
    _emit({"polynomial": chain.to_json(), "text": str(chain), "oracle_agree": ok},
          args.format, str(chain) if ok else f"{chain}\n# skein oracle disagrees: {skein}")
    return 0 if ok else 1


def cmd_bracket(args) -> int:
    d = _load(args)
    states = bracket_state_sum(d)
    skein = bracket_skein_oracle(d)
    ok = states == skein
    _emit({"polynomial": states.to_json(), "text": str(states), "oracle_agree": ok},
          args.format, str(states) if ok else f"{states}\n# skein oracle disagrees: {skein}")
    return 0 if ok else 1


def cmd_check_d2(args) -> int:
    d = _load(args)
    rep = check_d2(build_complex(d, args.scheme))
    text = "d^2 = 0" if rep.ok else f"d^2 != 0 at degree {rep.degree}, row {rep.row}, col {rep.col}: {rep.entry}"
    _emit({"check_d2": rep.to_json(), "scheme": args.scheme}, args.format, text)
    return 0 if rep.ok else 1


def _parse_ids(text: Optional[str]):
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"bad crossing list {text!r}") from None


def _move_request(args) -> MoveRequest:
    kind = args.move.lower()
    crossings = _parse_ids(args.crossings)
    if kind in ("r1", "r2") and not args.remove and args.at_edge is None:
        raise InputError(f"--move {kind} needs --at-edge")
    if args.remove and crossings is None:
        raise InputError("--remove needs --crossings")
    return MoveRequest(kind, args.at_edge, args.edge2, crossings, args.remove)


def _move_text(rep) -> str:
    lines = [f"move {rep.move}: {'ok' if rep.ok else 'FAILED'}"]
    lines.append(f"  homotopy residual zero: {rep.identity_residual_zero}")
    lines.append(f"  chain map: {rep.chain_map_ok}")
    lines.append(f"  retraction: {rep.retraction_ok}")
    for x in rep.homology_match:
        lines.append(f"  homology at (s,t)=({x['s']},{x['t']}): {'match' if x['ok'] else 'MISMATCH'}")
    if rep.first_violation is not None:
        v = rep.first_violation
        lines.append(f"  first violation: degree {v.degree}, row {v.row}, col {v.col}: {v.entry}")
    return "\n".join(lines)


def cmd_verify_move(args) -> int:
    d = _load(args)
    try:
        _, site = apply_move(d, _move_request(args))
    except (SiteNotFound, IllegalSite, ValueError) as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from None
    _check_size(site.D, args.max_crossings)
    try:
        rep = verify_site(site)
    except SiteMismatch as exc:
        raise InputError(f"SiteMismatch: {exc}") from None
    _emit(rep.to_json(), args.format, _move_text(rep))
    return 0 if rep.ok else 1


# ---------------------------------------------------------------- corpus

def _corpus_row(path: str, limit: int, moves: bool) -> dict:
    name = Path(path).stem
    row = {"name": name}
    try:
        d = parse_pd(Path(path).read_text())
    except (ParseError, ValidationError) as exc:
        return {**row, "error": f"{type(exc).__name__}: {exc}", "ok": False}
    if d.n > limit:
        return {**row, "error": f"{d.n} crossings exceeds the limit", "ok": False}
    checks = {"orientation": d.check_orientation()}
    checks["d2_jones"] = check_d2(build_complex(d, JONES)).ok
    checks["d2_bracket"] = check_d2(build_complex(d, BRACKET)).ok
    checks["jones_oracle"] = jones_from_chain(build_complex(d, JONES)) == jones_skein_oracle(d)
    checks["bracket_oracle"] = bracket_state_sum(d) == bracket_skein_oracle(d)
    if moves and d.edge_labels():
        e = d.edge_labels()[0]
        for kind, fn in (("r1", lambda: insert_r1(d, e)), ("r2", lambda: insert_r2(d, e))):
            try:
                checks[kind] = verify_site(fn()[1], GRID).ok
            except (SiteNotFound, IllegalSite, SiteMismatch):
                checks[kind] = False
        try:
            _, a, b, c = find_r3(d)
        except (SiteNotFound, IllegalSite):
            pass
        else:
            try:
                checks["r3"] = verify_site(apply_move(d, MoveRequest("r3", crossings=(a, b, c)))[1], GRID).ok
            except SiteMismatch:
                checks["r3"] = False
    row["checks"] = checks
    row["ok"] = all(checks.values())
    return row


def cmd_corpus(args) -> int:
    where = Path(args.dir or os.environ.get(CORPUS_ENV) or BUNDLED)
    if not where.is_dir():
        raise InputError(f"corpus directory {where} does not exist")
    files = sorted(str(p) for p in where.glob("*.pd"))
    if not files:
        raise InputError(f"no .pd files in {where}")
    jobs = [(f, args.max_crossings, not args.no_moves) for f in files]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_corpus_row, *zip(*jobs)))
    else:
        rows = [_corpus_row(*j) for j in jobs]
    ok = all(r["ok"] for r in rows)
    lines = []
    for r in rows:
        if "error" in r:
            lines.append(f"FAIL {r['name']}: {r['error']}")
            continue
        marks = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in r["checks"].items())
        lines.append(f"{'pass' if r['ok'] else 'FAIL'} {r['name']}: {marks}")
    _emit({"corpus": str(where), "rows": rows, "ok": ok}, args.format, "\n".join(lines))
    return 0 if ok else 1


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="khparam", description="Parametrized Khovanov homology over Z[s,t].")
    p.add_argument("--version", action="version", version=f"khparam {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-crossings", type=int, default=MAX_CROSSINGS,
                        help=f"refuse larger diagrams (default {MAX_CROSSINGS})")
    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("--pd", help="PD file")
    src.add_argument("--inline", help="PD text given directly")
    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--s", type=int, default=0)
    params.add_argument("--t", type=int, default=0)
    params.add_argument("--scheme", choices=(JONES, BRACKET), default=JONES)

    sub = p.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("homology", parents=[common, src, params], help="homology at integer (s, t)")
    sp.set_defaults(func=cmd_homology)
    sp = sub.add_parser("jones", parents=[common, src], help="Jones polynomial from the complex")
    sp.set_defaults(func=cmd_jones)
    sp = sub.add_parser("bracket", parents=[common, src], help="Kauffman bracket")
    sp.set_defaults(func=cmd_bracket)
    sp = sub.add_parser("check-d2", parents=[common, src, params], help="verify d o d = 0 over Z[s,t]")
    sp.set_defaults(func=cmd_check_d2)
    sp = sub.add_parser("verify-move", parents=[common, src], help="build and check the maps for a move")
    sp.add_argument("--move", required=True, choices=("r1", "r2", "r3"))
    sp.add_argument("--at-edge", type=int, help="edge for an r1 kink or the moving strand of r2")
    sp.add_argument("--edge2", type=int, help="second strand for r2 (default: the same edge)")
    sp.add_argument("--crossings", help="comma separated crossing ids (r3 triangle or removal site)")
    sp.add_argument("--remove", action="store_true", help="remove the crossings instead of inserting")
    sp.set_defaults(func=cmd_verify_move)
    sp = sub.add_parser("corpus", parents=[common], help="run every check over a directory of PD files")
    sp.add_argument("--dir", help=f"corpus directory (default ${CORPUS_ENV} or the bundled one)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--no-moves", action="store_true", help="skip the move verifications")
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"khparam: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface: ``fenceq <command> ...``; output is JSON lines.

Exit codes: 0 ok, 1 theorem violations found by a scan, 2 input error,
3 construction error, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Iterable, List, Optional, Tuple

from .arcposet import NoCrossings, fence_poset_of_arc, verify_expansion
from .cluster import ClusterError, c_polynomial, f_polynomial_q
from .fixtures import CPOLY_FIXTURES, FIXTURES
from .polyseq import InexactDivision, IntPoly, NegativeCoefficient, seq_report
from .poset import (
    Composition,
    InvalidComposition,
    PosetError,
    check_notched_decompositions,
    circular_fence,
    compositions,
    fence,
    ij_fence,
    notched,
    rank_sequence,
    rank_sequence_fence_fast,
)
from .scan import MODES, EnumerationMismatch, ScanConfig, ScanConfigError, default_workers, run_scan
from .surface import Arc, InvalidArc, InvalidCurve, InvalidTriangulation, MultiLamination, PolygonTriangulation

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT, EXIT_CONSTRUCTION, EXIT_INTERNAL = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


class ConstructionError(Exception):
    pass


# --- output ------------------------------------------------------------------


def _emit(obj: Any, pretty: bool, out=None) -> None:
    out = out or sys.stdout
    if pretty:
        out.write(_render(obj) + "\n")
    else:
        out.write(json.dumps(obj, sort_keys=False) + "\n")


def _render(obj: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        width = max((len(str(k)) for k in obj), default=0)
        for k, v in obj.items():
            if isinstance(v, (dict,)) or (isinstance(v, list) and v and isinstance(v[0], (dict, list))):
                lines.append(f"{pad}{k}:")
                lines.append(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{str(k).ljust(width)}  {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_render(v, indent) if isinstance(v, dict) else f"{pad}{_scalar(v)}" for v in obj)
    return pad + _scalar(obj)


def _scalar(v: Any) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def _poly_payload(poly: IntPoly, key: str = "poly") -> dict:
    return {key: poly.to_list(), "report": seq_report(poly).to_dict()}


# --- parsing helpers ---------------------------------------------------------


def _alpha(text: str) -> Composition:
    try:
        return Composition.parse(text)
    except InvalidComposition as exc:
        raise InputError(str(exc)) from None


def _n_range(text: str) -> Tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise InputError(f"cannot parse size range {text!r}; use e.g. 5..9") from None


def _load_json(args) -> dict:
    if getattr(args, "fixture", None):
        try:
            return CPOLY_FIXTURES[args.fixture].input
        except KeyError:
            raise InputError(f"unknown fixture {args.fixture!r}; choose from {', '.join(CPOLY_FIXTURES)}") from None
    if args.json is not None:
        text = args.json
    elif args.input is not None:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(str(exc)) from None
    else:
        raise InputError("give --input FILE, --json TEXT or --fixture NAME")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def _geometry(data: dict, need_lams: bool):
    try:
        t = PolygonTriangulation.from_json(data["triangulation"])
        g = Arc.of(data["arc"]).check(t.n)
        ml = MultiLamination.from_json(data.get("laminations", [])).check(t.n) if need_lams else None
    except KeyError as exc:
        raise InputError(f"missing field {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from None
    return t, ml, g


# --- commands ----------------------------------------------------------------


def cmd_rank(args) -> int:
    alpha = _alpha(args.alpha)
    v = args.variant
    if v == "plain":
        poly = rank_sequence_fence_fast(alpha) if args.fast else rank_sequence(fence(alpha))
    elif v == "circular":
        poly = rank_sequence(circular_fence(alpha))
    elif v.startswith("notched-"):
        poly = rank_sequence(notched(alpha, v.split("-", 1)[1]))
    else:
        if args.i is None or args.j is None:
            raise InputError("variant ij needs --i and --j")
        poly = rank_sequence(ij_fence(alpha, args.i, args.j))
    _emit({"alpha": alpha.to_list(), "variant": v, **_poly_payload(poly)}, args.pretty)
    return EXIT_OK


def cmd_cpoly(args) -> int:
    t, ml, g = _geometry(_load_json(args), need_lams=True)
    _emit(_poly_payload(c_polynomial(t, ml, g), "c_poly"), args.pretty)
    return EXIT_OK


def cmd_fpoly(args) -> int:
    t, _, g = _geometry(_load_json(args), need_lams=False)
    _emit(_poly_payload(f_polynomial_q(t, g), "f_poly"), args.pretty)
    return EXIT_OK


def cmd_arc_poset(args) -> int:
    t, _, g = _geometry(_load_json(args), need_lams=False)
    res = fence_poset_of_arc(t, g)
    payload = res.to_json()
    payload["rank"] = rank_sequence(res.poset).to_list()
    payload["matches_f_poly"] = verify_expansion(t, g)
    _emit(payload, args.pretty)
    return EXIT_OK


def cmd_verify_identities(args) -> int:
    if args.alpha:
        alphas: Iterable[Composition] = [_alpha(args.alpha)]
    else:
        lo, hi = _n_range(args.n)
        alphas = (a for n in range(lo, hi + 1) for a in compositions(n))
    failures = degenerate = checked = 0
    for alpha in alphas:
        try:
            rep = check_notched_decompositions(alpha)
        except PosetError:
            if args.alpha:
                raise
            continue
        checked += 1
        ok = all(rep.checks.values())
        if not rep.in_domain:
            degenerate += 1
        elif not ok:
            failures += 1
        if args.alpha or args.verbose or (rep.in_domain and not ok):
            _emit(rep.to_dict(), args.pretty)
    if not args.alpha:
        _emit({"checked": checked, "in_domain_failures": failures, "degenerate": degenerate}, args.pretty)
    return EXIT_VIOLATIONS if failures else EXIT_OK


def cmd_scan(args) -> int:
    lo, hi = _n_range(args.n)
    try:
        workers = args.workers if args.workers is not None else default_workers()
        cfg = ScanConfig(lo, hi, args.mode, args.sample_limit, args.seed, workers)
    except ScanConfigError as exc:
        raise InputError(str(exc)) from None
    report = run_scan(cfg)
    for s in report.per_size:
        _emit({"size": s.to_dict()}, args.pretty)
    _emit(report.to_dict(timing=args.timing), args.pretty)
    print(f"elapsed {report.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def cmd_reproduce(args) -> int:
    bad = 0
    for f in FIXTURES:
        res = f.run()
        _emit(res, args.pretty)
        if res["status"] == "fail" or (args.strict and res["status"] == "erratum"):
            bad += 1
    _emit({"fixtures": len(FIXTURES), "failed": bad, "strict": args.strict}, args.pretty)
    return EXIT_OK if bad == 0 else EXIT_VIOLATIONS


# --- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fenceq", description="Rank polynomials of fence posets and c-polynomials of arcs.")
    p.add_argument("--pretty", action="store_true", help="render human-readable tables instead of JSON lines")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("rank", help="rank polynomial of a fence-type poset")
    r.add_argument("--alpha", required=True, help="composition, e.g. 1,2,1,2 or [1,2,1,2]")
    r.add_argument("--variant", default="plain",
                   choices=["plain", "circular", "notched-first", "notched-last", "notched-both", "ij"])
    r.add_argument("--i", type=int)
    r.add_argument("--j", type=int)
    r.add_argument("--fast", action="store_true", help="use the linear recurrence for plain fences")
    r.set_defaults(func=cmd_rank)

    for name, func, helptext in (
        ("cpoly", cmd_cpoly, "c-polynomial of an arc for given laminations"),
        ("fpoly", cmd_fpoly, "F-polynomial of an arc with every y set to q"),
        ("arc-poset", cmd_arc_poset, "fence poset of an arc"),
    ):
        c = sub.add_parser(name, help=helptext)
        src = c.add_mutually_exclusive_group()
        src.add_argument("--input", help="JSON file, or - for stdin")
        src.add_argument("--json", help="inline JSON")
        src.add_argument("--fixture", help="a built-in fixture: " + ", ".join(CPOLY_FIXTURES))
        c.set_defaults(func=func)

    v = sub.add_parser("verify-identities", help="rebuild the notched decompositions and check them")
    grp = v.add_mutually_exclusive_group(required=True)
    grp.add_argument("--alpha")
    grp.add_argument("--n", help="size range, e.g. 1..12")
    v.add_argument("--verbose", action="store_true", help="print every report, not only failures")
    v.set_defaults(func=cmd_verify_identities)

    s = sub.add_parser("scan", help="exhaustive or sampled theorem and conjecture scans")
    s.add_argument("--mode", required=True, choices=list(MODES))
    s.add_argument("--n", required=True, help="size range, e.g. 5..9")
    s.add_argument("--sample-limit", type=int, help="random instances per size instead of all of them")
    s.add_argument("--seed", type=int, default=ScanConfig.__dataclass_fields__["seed"].default)
    s.add_argument("--workers", type=int, help="worker processes (default: FENCEQ_WORKERS or 1)")
    s.add_argument("--timing", action="store_true", help="include elapsed seconds in the report")
    s.set_defaults(func=cmd_scan)

    rp = sub.add_parser("reproduce-paper", help="run the golden fixtures")
    rp.add_argument("--strict", action="store_true", help="count documented errata as failures")
    rp.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, InvalidComposition, InvalidArc, InvalidTriangulation, InvalidCurve, NoCrossings) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PosetError, ConstructionError) as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except (InexactDivision, NegativeCoefficient, ClusterError, EnumerationMismatch) as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

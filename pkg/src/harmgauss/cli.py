"""Command-line front end.

Exit statuses:
    0  success (for ``verify``: zero failures)
    1  non-harmonic input, null-condition violation, or verification failures
    2  unreadable / unparsable input or bad arguments
    3  unknown verification suite
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from . import export, io, verify
from .errors import DegenerateSurface, HarmGaussError, NotHarmonic, NullViolation
from .gauss import Planar, planarity_classify
from .harmonic import Poly2, harmonic_residual
from .rational import parse_rational
from .report import jsonable
from .surface import Domain, surface_from_polys
from .weierstrass import PhiTriple, integrate, phi_from_pq

SUITES = ("thm1-exact", "thm1-numeric", "dilatation", "remark14", "thm3", "n-identity", "curvature")


class UsageError(Exception):
    pass


def _parse_grid(text: str):
    try:
        nx, ny = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise UsageError(f"--grid expects NXxNY, got {text!r}") from None
    if nx < 2 or ny < 2:
        raise UsageError("--grid needs at least 2 nodes per axis")
    return nx, ny


def _parse_domain(text: str) -> Domain:
    try:
        vals = [parse_rational(v) for v in text.split(",")]
        if len(vals) != 4:
            raise ValueError
        return Domain(*vals)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--domain expects xlo,xhi,ylo,yhi with rational entries, got {text!r}") from None


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_surface(path: str):
    data = io.load_json(path)
    return io.decode_surface(data)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_check(args) -> int:
    data = io.load_json(args.surface)
    if not isinstance(data, dict) or not all(k in data for k in "abc"):
        raise io.ParseError("surface JSON needs keys a, b, c")
    polys = io.raw_surface_polys(data)
    domain = io.decode_domain(data.get("domain"))
    residuals = {k: harmonic_residual(p) for k, p in polys.items()}
    harmonic = all(r.is_zero() for r in residuals.values())
    lines = ["harmonic: " + "/".join(_yes(residuals[k].is_zero()) for k in "abc")]
    result = {"harmonic": {k: residuals[k].is_zero() for k in "abc"}}
    if not harmonic:
        for k in "abc":
            if not residuals[k].is_zero():
                lines.append(f"residual {k}: {residuals[k]}")
        result["residual"] = {k: str(residuals[k]) for k in "abc"}
    else:
        s = surface_from_polys(polys["a"], polys["b"], polys["c"], domain)
        try:
            cls = planarity_classify(s)
        except DegenerateSurface:
            lines.append("planar: degenerate (Y_x x Y_y vanishes identically)")
            result["planar"] = None
        else:
            planar = isinstance(cls, Planar)
            lines.append(f"planar: {_yes(planar)}")
            result["planar"] = planar
            if planar:
                lines.append("normal: (" + ", ".join(f"{c:.17g}" for c in cls.normal) + ")")
                result["normal"] = list(cls.normal)
                result["direction"] = jsonable(cls.direction)
        lines.append(f"normalized: {_yes(s.is_normalized())}")
        result["normalized"] = s.is_normalized()
    if args.format == "json":
        _emit(io.dump_json(result), args.out)
    else:
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if harmonic else 1


def cmd_sweep(args) -> int:
    s = _load_surface(args.surface)
    nx, ny = _parse_grid(args.grid or "9x9")
    dom = _parse_domain(args.domain) if args.domain else s.domain
    pts = dom.grid(nx, ny)
    rows = verify._ordered_map(_SweepJob(s), pts)
    if args.format == "json":
        _emit(export.rows_to_json(rows, args.float), args.out)
    else:
        _emit(export.rows_to_csv(rows, args.float), args.out)
    return 0


class _SweepJob:
    def __init__(self, s):
        self.s = s

    def __call__(self, pt):
        return export.sweep_row(self.s, pt)


def _suite_surface(args):
    if args.surface:
        return _load_surface(args.surface)
    x, y = Poly2.x(), Poly2.y()
    return surface_from_polys(x, y, x * y)


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        sys.stderr.write(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}\n")
        return 3
    seed = 1 if args.seed is None else args.seed
    degree = 4 if args.degree is None else args.degree
    height = 10 if args.height is None else args.height
    if args.suite == "thm1-exact":
        spec = verify.RandomSurfaceSpec(degree, height, seed, not args.general)
        report = verify.distortion_identity_suite(args.count or 100, spec, args.pts or 5)
    elif args.suite in ("thm1-numeric", "dilatation"):
        s = _suite_surface(args)
        nx, ny = _parse_grid(args.grid or "9x9")
        dom = _parse_domain(args.domain) if args.domain else s.domain
        fn = verify.fd_bridge_suite if args.suite == "thm1-numeric" else verify.dilatation_bridge_check
        report = fn(s, dom.grid(nx, ny), args.fd_step, args.tol)
    elif args.suite == "remark14":
        report = verify.branch_line_counterexample()
        sys.stderr.write(f"M = {report.extra['m_factored'] or report.extra['m_symbolic']}\n")
    elif args.suite == "thm3":
        spec = verify.RandomSurfaceSpec(degree, height, 7 if args.seed is None else seed, True)
        report = verify.planar_family_suite(count_nonplanar=50 if args.count is None else args.count, spec=spec)
    elif args.suite == "n-identity":
        report = verify.n_identity_suite(args.count or 100, 6 if args.degree is None else degree, height, seed)
    else:
        report = verify.curvature_sign_suite(args.count or 20, args.pts or 25, degree, height, seed,
                                             normalized=not args.general)
    _emit(report.to_json(), args.out)
    summary = report.summary
    sys.stderr.write(f"{report.suite}: {summary['passed']} passed, {summary['failures']} failed, "
                     f"{summary['skipped']} skipped\n")
    return 0 if report.ok else 1


def cmd_weierstrass(args) -> int:
    data = io.decode_weierstrass(io.load_json(args.pqfile))
    triple = data if isinstance(data, PhiTriple) else phi_from_pq(data)
    dom = _parse_domain(args.domain) if args.domain else None
    try:
        s = integrate(triple, dom) if dom else integrate(triple)
    except NullViolation as exc:
        sys.stderr.write(f"{exc}\n")
        return 1
    _emit(io.dump_json(io.encode_surface(s)), args.out)
    if args.mesh:
        nx, ny = _parse_grid(args.grid or "33x33")
        Path(args.mesh).write_text(export.mesh_text(s, nx, ny))
    return 0


def cmd_mesh(args) -> int:
    s = _load_surface(args.surface)
    nx, ny = _parse_grid(args.grid or "33x33")
    dom = _parse_domain(args.domain) if args.domain else None
    _emit(export.mesh_text(s, nx, ny, dom), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--float", action="store_true", help="render exact values as 17-digit decimals")
    common.add_argument("--grid", metavar="NXxNY")
    common.add_argument("--domain", metavar="xlo,xhi,ylo,yhi")

    parser = argparse.ArgumentParser(prog="harmgauss", description="Exact Gauss-map geometry of harmonic surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="harmonicity, planarity and normalization of a surface")
    p.add_argument("surface")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", parents=[common], help="exact field values on a grid")
    p.add_argument("surface")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=" | ".join(SUITES))
    p.add_argument("--count", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--height", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--pts", type=int, help="random points per surface")
    p.add_argument("--fd-step", type=float, default=verify.DEFAULT_FD_STEP)
    p.add_argument("--tol", type=float, default=verify.DEFAULT_TOL)
    p.add_argument("--surface", help="surface JSON for thm1-numeric / dilatation (default: (x, y, xy))")
    p.add_argument("--general", action="store_true", help="random surfaces with a random first coordinate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("weierstrass", parents=[common], help="integrate Weierstrass data to a surface")
    p.add_argument("pqfile")
    p.add_argument("--mesh", metavar="PATH", help="also write a triangle mesh")
    p.set_defaults(func=cmd_weierstrass)

    p = sub.add_parser("mesh", parents=[common], help="triangle mesh of a surface")
    p.add_argument("surface")
    p.set_defaults(func=cmd_mesh)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except NotHarmonic as exc:
        sys.stderr.write(f"{exc}\n")
        return 1
    except (io.ParseError, UsageError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except HarmGaussError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

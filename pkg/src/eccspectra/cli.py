"""``ecc-spectra`` command line.

Exit codes: 0 success, 1 a check was falsified, 2 parse error, 3 validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__, closed_forms, verify
from ._accel import backend
from .enumerate import free_trees, trees_with_diameter
from .errors import ParseError, ValidationError
from .families import FamilySpec
from .formats import graph6_decode, graph6_encode, read_graph_file
from .graph import distance_profile
from .spectra import eccentricity_matrix_from_profile, eigenvalues_symmetric, perron_pair, support_is_connected

EXIT_OK, EXIT_FALSIFIED, EXIT_PARSE, EXIT_INVALID = 0, 1, 2, 3
MIN_TOL = 1e-14


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _dumps(obj) -> str:
    return json.dumps(verify.sig12(obj), sort_keys=True)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(args):
    if args.graph6 is not None:
        return graph6_decode(args.graph6)
    if args.file is not None:
        try:
            return read_graph_file(args.file)
        except OSError as exc:
            raise ParseError(f"cannot read {args.file}: {exc}") from exc
    return FamilySpec.parse(args.family).build()


def cmd_spectrum(args) -> int:
    tol = args.tol if args.tol is not None else 1e-12
    if tol < MIN_TOL:
        raise ValidationError(f"--tol must be >= {MIN_TOL}")
    g = _load_graph(args)
    prof = distance_profile(g)
    em = eccentricity_matrix_from_profile(prof)
    spec = eigenvalues_symmetric(em, rel_tol=tol)
    irreducible = support_is_connected(em) if g.n >= 2 else False
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "eigenvalue"])
        for i, v in enumerate(spec.values, 1):
            w.writerow([i, f"{v:.12g}"])
        _emit(buf.getvalue(), args.output)
        return EXIT_OK
    out = {
        "n": g.n,
        "graph6": graph6_encode(g),
        "eccentricities": prof.ecc.tolist(),
        "diameter": prof.diameter,
        "spectrum": spec.values.tolist(),
        "eps1": spec.largest,
        "eps_n": spec.least,
        "spectral_radius": spec.spectral_radius,
        "irreducible": irreducible,
        "sweeps": spec.iterations,
        "backend": backend(),
    }
    if args.matrix:
        out["matrix"] = em.m.tolist()
    if args.perron and irreducible:
        value, vec = perron_pair(em)
        out["perron"] = {"value": value, "vector": vec.tolist()}
    _emit(_dumps(out) + "\n", args.output)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    trees = free_trees(args.n) if args.diameter is None else trees_with_diameter(args.n, args.diameter)
    buf = io.StringIO()
    if args.with_spectrum:
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph6", "n", "diameter", "eps1", "eps_n"])
        for s in verify.summarize_all(trees, args.jobs):
            w.writerow([s.graph6, s.n, s.diameter, f"{s.eps1:.12g}", f"{s.eps_n:.12g}"])
    else:
        for g in trees:
            buf.write(graph6_encode(g) + "\n")
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


def _odd(lo, hi):
    return [d for d in range(lo, hi + 1) if d % 2 == 1]


def _plan(args):
    """(callable, kwargs) pairs for the requested check, validating parameters first."""
    n_max, d_max, jobs = args.n_max, args.d_max, args.jobs
    check = args.check
    plan = []
    if check in ("bounds", "all"):
        plan.append((verify.verify_basic_bounds, {"n_max": n_max, "jobs": jobs, "seed": args.seed}))
    if check in ("diam3-max", "all"):
        ns = [args.n] if args.n is not None and check != "all" else range(4, n_max + 1)
        plan += [(verify.verify_diam3_max, {"n": n, "jobs": jobs}) for n in ns]
    if check in ("odd-diam-max", "all"):
        ds = [args.d] if args.d is not None and check != "all" else _odd(5, min(d_max, 9))
        for d in ds:
            ns = [args.n] if args.n is not None and check != "all" else range(d + 1, n_max + 1)
            plan += [(verify.verify_odd_diam_max, {"n": n, "d": d, "jobs": jobs}) for n in ns]
    if check in ("least-interval", "all"):
        plan.append((verify.verify_least_interval, {"n_max": n_max, "jobs": jobs}))
    if check in ("transforms", "all"):
        ds = [args.d] if args.d is not None and check != "all" else _odd(5, min(d_max, 7))
        for d in ds:
            ns = [args.n] if args.n is not None and check != "all" else range(d + 1, min(n_max, 12) + 1)
            plan += [(verify.verify_transforms, {"n": n, "d": d}) for n in ns]
    if check in ("closed-forms", "all"):
        plan.append((verify.verify_closed_forms, {}))
    if check in ("interlacing", "all"):
        plan.append((verify.verify_interlacing, {"samples": args.samples, "seed": args.seed}))
    return plan


def _validate_verify(args) -> None:
    if args.check in ("odd-diam-max", "transforms") and args.d is not None and args.d % 2 == 0:
        raise verify.EvenDiameter(f"diameter must be odd, got {args.d}")
    if not 3 <= args.n_max <= verify.MAX_VERIFY_ORDER:
        raise ValidationError(f"--n-max must lie in [3, {verify.MAX_VERIFY_ORDER}]")
    if args.jobs is not None and args.jobs < 1:
        raise ValidationError("--jobs must be >= 1")


def cmd_verify(args) -> int:
    _validate_verify(args)
    plan = _plan(args)
    # Surface parameter errors before any report is written.
    for fn, kw in plan:
        _precheck(fn, kw)
    worst = EXIT_OK
    sink = open(args.output, "a") if args.output else sys.stdout
    try:
        for fn, kw in plan:
            rep = fn(**kw)
            sink.write(rep.to_json(timing=not args.no_timing) + "\n")
            sink.flush()
            print(f"[{rep.status}] {rep.check_id} {json.dumps(rep.parameters, sort_keys=True)} instances={rep.instances}", file=sys.stderr)
            if not rep.ok:
                worst = EXIT_FALSIFIED
    finally:
        if sink is not sys.stdout:
            sink.close()
    return worst


def _precheck(fn, kw) -> None:
    if fn is verify.verify_odd_diam_max:
        d, n = kw["d"], kw["n"]
        if d % 2 == 0:
            raise verify.EvenDiameter(f"diameter must be odd, got {d}")
        verify._check_order_cap("d", d, 5, 9)
        verify._check_order_cap("n", n, d + 1, verify.MAX_VERIFY_ORDER)
    elif fn is verify.verify_transforms:
        d, n = kw["d"], kw["n"]
        if d % 2 == 0:
            raise verify.EvenDiameter(f"diameter must be odd, got {d}")
        verify._check_order_cap("d", d, 5, 7)
        verify._check_order_cap("n", n, d + 1, 12)
    elif fn is verify.verify_diam3_max:
        verify._check_order_cap("n", kw["n"], 4, verify.MAX_VERIFY_ORDER)
    elif fn is verify.verify_interlacing and kw["samples"] < 1:
        raise ValidationError("--samples must be >= 1")


def _need(args, *names):
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise ValidationError(f"formula {args.formula} needs {' '.join(missing)}")


def cmd_formula(args) -> int:
    f = args.formula
    if f == "fa":
        _need(args, "n", "a")
        qt = closed_forms.f_a_quartic(args.n, args.a)
        out = {"coefficients": {"c4": qt.c4, "c2": qt.c2, "c0": qt.c0}, "roots": qt.roots(), "largest_root": qt.largest_root()}
    elif f == "gamma":
        _need(args, "d")
        out = {"d": args.d, "gamma": closed_forms.gamma_d(args.d)}
    elif f == "rho2":
        _need(args, "n", "d", "a", "b")
        data = closed_forms.rho_squared_broom(args.n, args.d, args.a, args.b)
        out = {"gamma": data.gamma, "x": data.x, "base": data.base, "delta": data.delta, "rho_squared": data.rho_squared, "rho": data.rho}
    elif f == "candidates":
        _need(args, "n", "d")
        c = closed_forms.broom_argmax_candidates(args.n, args.d)
        out = {"x_low": c.x_low, "rho_low": c.rho_low, "x_high": c.x_high, "rho_high": c.rho_high, "best": c.best}
    elif f == "hpoly":
        _need(args, "p", "q")
        fp = closed_forms.h_eps_poly(args.p, args.q)
        out = {
            "zero_multiplicity": fp.zero_multiplicity,
            "repeated_quadratic": list(fp.repeated_quadratic),
            "repeated_multiplicity": fp.repeated_multiplicity,
            "main_quadratic": list(fp.main_quadratic),
            "degree": fp.degree,
            "roots": fp.roots(),
        }
    elif f == "hleast":
        _need(args, "p", "q")
        out = {"p": args.p, "q": args.q, "least": closed_forms.h_least_eigenvalue(args.p, args.q)}
    else:
        _need(args, "p", "q")
        out = {"p": args.p, "q": args.q, "equality": closed_forms.h_equality_condition(args.p, args.q)}
    _emit(_dumps(out) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    jobs_default = verify.default_jobs()
    p = _Parser(prog="ecc-spectra", description="Eccentricity-matrix spectra of graphs and trees.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("spectrum", help="eccentricities, ε-matrix and spectrum of one graph")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="inline graph6 string")
    src.add_argument("--file", help="graph6 file (first line) or .json edge list")
    src.add_argument("--family", help="path:n | star:n | broom:n,d,a,b | spider:p,q")
    sp.add_argument("--matrix", action="store_true", help="include the ε-matrix")
    sp.add_argument("--perron", action="store_true", help="include the Perron pair")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--tol", type=float, help="Jacobi relative stopping tolerance (>= 1e-14)")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_spectrum)

    ep = sub.add_parser("enumerate", help="non-isomorphic trees, one graph6 per line")
    ep.add_argument("--n", type=int, required=True)
    ep.add_argument("--diameter", type=int)
    ep.add_argument("--with-spectrum", action="store_true", help="CSV with eps1 and eps_n columns")
    ep.add_argument("--jobs", type=int, default=jobs_default)
    ep.add_argument("--output", "-o")
    ep.set_defaults(func=cmd_enumerate)

    vp = sub.add_parser("verify", help="run exhaustive checks, appending JSONL reports")
    vp.add_argument("--check", required=True, choices=verify.CHECK_IDS + ("all",))
    vp.add_argument("--n-max", type=int, default=10)
    vp.add_argument("--d-max", type=int, default=7)
    vp.add_argument("--n", type=int)
    vp.add_argument("--d", type=int)
    vp.add_argument("--samples", type=int, default=200)
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--jobs", type=int, default=jobs_default)
    vp.add_argument("--no-timing", action="store_true", help="omit elapsed time for byte-stable output")
    vp.add_argument("--output", "-o", help="JSONL file to append to (default: stdout)")
    vp.set_defaults(func=cmd_verify)

    fp = sub.add_parser("formula", help="evaluate a closed form")
    fp.add_argument("formula", choices=("fa", "gamma", "rho2", "candidates", "hpoly", "hleast", "hcond"))
    for name in ("n", "d", "a", "b", "p", "q"):
        fp.add_argument(f"--{name}", type=int)
    fp.add_argument("--output", "-o")
    fp.set_defaults(func=cmd_formula)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"ecc-spectra: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"ecc-spectra: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

"""`axc` command-line front end.

Exit codes: 0 success / predicate true; 1 predicate false or not a solution;
2 input error; 3 solver inconsistency.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import errors
from .clifford import OperatorTag, apply_operator, oscillator_eigencheck
from .forms import Form
from .hodge import codifferential, hodge_star, hodge_star_inv
from .homotopy import (
    DecompositionMode,
    SpaceTag,
    cohomotopy_h,
    copotential,
    decompose,
    homotopy_H,
    membership,
    potential,
)
from .identities import CHECKS, run_identities
from .polyring import Context
from .solvers import (
    SolveReport,
    VacuumDiracKind,
    dirac_source_solve,
    kalb_ramond_solve,
    maxwell_solve,
    maxwell_solve_magnetic,
    vacuum_dirac_classify,
)
from .textio import load_form_text, print_form

_OPS = {
    "d": lambda w: w.d(),
    "delta": codifferential,
    "H": homotopy_H,
    "h": cohomotopy_h,
    "star": hodge_star,
    "star-inv": hodge_star_inv,
    "eta": lambda w: w.eta(),
    "dirac": lambda w: apply_operator(OperatorTag.DIRAC, w),
    "antidirac": lambda w: apply_operator(OperatorTag.ANTI_DIRAC, w),
    "laplace": lambda w: apply_operator(OperatorTag.LAPLACE_BELTRAMI, w),
    "hbar": lambda w: apply_operator(OperatorTag.OSCILLATOR_HBAR, w),
}

_SPACES = {
    "E": SpaceTag.EXACT,
    "A": SpaceTag.ANTIEXACT,
    "C": SpaceTag.COEXACT,
    "Y": SpaceTag.ANTICOEXACT,
    "harmonic": SpaceTag.HODGE_HARMONIC,
    "antiharmonic": SpaceTag.HODGE_ANTIHARMONIC,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="axc", description="exact exterior-calculus kernel")
    parser.add_argument("--dim", type=int, default=2, help="chart dimension n")
    parser.add_argument("--metric", default=None, help="signature string of + and -, e.g. +---")
    parser.add_argument("--center", default=None, help="comma-separated rationals for the star center")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", help="apply an operator to a form")
    p.add_argument("--op", required=True, choices=sorted(_OPS))
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("decompose", help="split into (co)exact and anti(co)exact parts")
    p.add_argument("--mode", required=True, choices=["exact", "coexact"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("member", help="space membership predicate (exit code carries the verdict)")
    p.add_argument("--space", required=True, choices=sorted(_SPACES))
    p.add_argument("--in", dest="infile", required=True)

    for name in ("potential", "copotential"):
        p = sub.add_parser(name, help=f"canonical {name} of a closed/coclosed form")
        p.add_argument("--in", dest="infile", required=True)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("identities", help="run the randomized exact identity suite")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("solve", help="field-equation pipelines")
    p.add_argument("system", choices=["maxwell", "maxwell-magnetic", "kalb-ramond", "dirac-source"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--approach", type=int, choices=[1, 2], default=1)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="classify candidate solutions")
    p.add_argument("what", choices=["vacuum-dirac"])
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--grade", type=int, default=None)

    p = sub.add_parser("oscillator", help="cohomotopic oscillator eigencheck")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--json", action="store_true")
    return parser


def _context_from_args(args) -> Context:
    n = args.dim
    if args.metric is not None:
        sig = tuple(1 if c == "+" else -1 for c in args.metric)
        if set(args.metric) - {"+", "-"}:
            raise errors.DimensionMismatch(f"bad metric string {args.metric!r}")
        n = len(sig)
    else:
        sig = (1,) * n
    if args.center is not None:
        center = tuple(Fraction(c) for c in args.center.split(","))
    else:
        center = (Fraction(0),) * n
    return Context(n, center, sig)


def _read_form(path: str, ctx: Context) -> Form:
    with open(path, "r", encoding="utf-8") as fh:
        return load_form_text(fh.read(), ctx)


def _emit(omega: Form, as_json: bool):
    print(print_form(omega, "json" if as_json else "text"))


def _emit_report(report: SolveReport, as_json: bool) -> int:
    if as_json:
        import json as _json

        from .textio import form_to_json
        doc = {
            "outputs": {k: form_to_json(v) for k, v in report.outputs.items()},
            "residuals": {k: form_to_json(v) for k, v in report.residuals.items()},
            "gauge_notes": report.gauge_notes,
            "success": report.success,
        }
        print(_json.dumps(doc, indent=2, sort_keys=True))
    else:
        for name, form in report.outputs.items():
            print(f"{name} = {print_form(form)}")
        for name, form in report.residuals.items():
            print(f"residual {name} = {print_form(form)}")
        for note in report.gauge_notes:
            print(f"gauge: {note}")
        print("status: " + ("success" if report.success else "FAILED " + ",".join(report.failed)))
    return 0 if report.success else 1


def _run(args) -> int:
    ctx = _context_from_args(args)

    if args.command == "apply":
        _emit(_OPS[args.op](_read_form(args.infile, ctx)), args.json)
        return 0

    if args.command == "decompose":
        mode = (DecompositionMode.EXACT_ANTIEXACT if args.mode == "exact"
                else DecompositionMode.COEXACT_ANTICOEXACT)
        dec = decompose(_read_form(args.infile, ctx), mode)
        names = ("exact", "antiexact") if args.mode == "exact" else ("coexact", "anticoexact")
        if args.json:
            import json as _json

            from .textio import form_to_json
            print(_json.dumps({names[0]: form_to_json(dec.first),
                               names[1]: form_to_json(dec.second)}, indent=2, sort_keys=True))
        else:
            print(f"{names[0]} = {print_form(dec.first)}")
            print(f"{names[1]} = {print_form(dec.second)}")
        return 0

    if args.command == "member":
        verdict = membership(_read_form(args.infile, ctx), _SPACES[args.space])
        print("true" if verdict else "false")
        return 0 if verdict else 1

    if args.command == "potential":
        _emit(potential(_read_form(args.infile, ctx)), args.json)
        return 0

    if args.command == "copotential":
        _emit(copotential(_read_form(args.infile, ctx)), args.json)
        return 0

    if args.command == "identities":
        results = run_identities(ctx, args.samples, args.max_degree, args.seed)
        width = max(len(name) for name in CHECKS)
        ok = True
        for r in results:
            status = "ok  " if r.passed else "FAIL"
            extra = "" if r.passed else f"  (sample {r.first_failure})"
            print(f"{status} {r.name.ljust(width)} samples={r.samples}{extra}")
            ok = ok and r.passed
        return 0 if ok else 1

    if args.command == "solve":
        source = _read_form(args.infile, ctx)
        if args.system == "maxwell":
            report = maxwell_solve(source)
        elif args.system == "maxwell-magnetic":
            report = maxwell_solve_magnetic(source)
        elif args.system == "kalb-ramond":
            report = kalb_ramond_solve(source)
        else:
            report = dirac_source_solve(source, args.approach)
        return _emit_report(report, args.json)

    if args.command == "classify":
        alpha = _read_form(args.alpha, ctx)
        beta = _read_form(args.beta, ctx)
        result = vacuum_dirac_classify(alpha, beta, args.grade)
        print(result.kind.value)
        for name, passed in result.harmonic_checks.items():
            print(f"check {name}: {'true' if passed else 'false'}")
        if result.kind is VacuumDiracKind.NOT_A_SOLUTION:
            for name, form in result.residuals.items():
                if not form.is_zero:
                    print(f"residual {name} = {print_form(form)}")
            return 1
        return 0

    if args.command == "oscillator":
        report = oscillator_eigencheck(_read_form(args.infile, ctx))
        if report.is_eigenvector:
            print(f"eigenvector with eigenvalue {report.eigenvalue:+d}")
        else:
            print("not an eigenvector")
            print(f"coexact part = {print_form(report.coexact_part)}")
            print(f"anticoexact part = {print_form(report.anticoexact_part)}")
        verified = report.coexact_verified and report.anticoexact_verified
        print("spectral check: " + ("passed" if verified else "FAILED"))
        return 0 if verified else 1

    raise AssertionError("unreachable")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _run(args)
    except errors.NotASolution as exc:
        print(f"not a solution: {exc}", file=sys.stderr)
        return 1
    except errors.InconsistentSystem as exc:
        print(f"inconsistent system: {exc}", file=sys.stderr)
        return 3
    except errors.AxcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

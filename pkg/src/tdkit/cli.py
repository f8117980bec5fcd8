"""``tdkit`` command line: JSON in, JSON report out.

Exit codes: 0 all checks pass, 1 checks ran and failed, 2 input or usage error.
Sequences containing negative fractions must follow ``--`` (``-1/2`` otherwise
looks like an option).
"""

import argparse
import json
import os
import sys

from .field import rat_parse, rat_str
from .generators import aw_fixture, hermite_fixture, krawtchouk_pair, paper_4x4, uq_sl2_pair
from .jsonio import (
    closed_form_to_json,
    dumps,
    generated_to_json,
    mat_from_json,
    pair_from_json,
    params_to_json,
    report_to_json,
    solution_to_json,
    special_case_to_json,
)
from .polymod import (
    AWParams,
    DegenerateParams,
    aw_poly,
    aw_recurrence_coeffs,
    derivative,
    graded_td_residual,
    hermite_poly,
    phi43_value,
)
from .relations import ParamSeq, detect_special_case, solve_param_sequence
from .spectral import SequenceError, fit_closed_form, params_from_sequences, verify_td_pair

DEFAULT_DEGREE = 16
PASS, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _max_degree():
    raw = os.environ.get("TDKIT_MAX_DEGREE")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"TDKIT_MAX_DEGREE must be an integer, got {raw!r}") from None


def _degree(N):
    if N < 0:
        raise UsageError("degree must be nonnegative")
    cap = _max_degree()
    if cap is not None and N > cap:
        raise UsageError(f"degree {N} exceeds TDKIT_MAX_DEGREE={cap}")
    return N


def _rat_arg(text):
    try:
        return rat_parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from None


def _read_pair(files):
    try:
        if len(files) == 2:
            return mat_from_json(_load_json(files[0])), mat_from_json(_load_json(files[1]))
        if len(files) <= 1:
            return pair_from_json(_load_json(files[0] if files else "-"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError("give either a pair document or two matrix files")


def _check_pair_shapes(A, Astar):
    if not (A.is_square and A.shape == Astar.shape):
        raise UsageError(f"need square matrices of equal size, got {A.shape} and {Astar.shape}")


def cmd_verify_pair(args):
    A, Astar = _read_pair(args.files)
    _check_pair_shapes(A, Astar)
    report = verify_td_pair(A, Astar)
    verdict = report_to_json(report)
    return {"files": args.files}, verdict, report.is_td_pair


def cmd_solve_params(args):
    A, Astar = _read_pair(args.files)
    _check_pair_shapes(A, Astar)
    sol = solve_param_sequence(A, Astar)
    verdict = {"solution": solution_to_json(sol), "special_case": None}
    if sol.kind == "unique":
        verdict["special_case"] = special_case_to_json(detect_special_case(sol.particular))
    return {"files": args.files}, verdict, sol.kind != "none"


def _fit(seq):
    try:
        return closed_form_to_json(fit_closed_form(seq)), None
    except SequenceError as exc:
        return None, str(exc)


def cmd_fit_eigenvalues(args):
    theta = args.sequence
    dual = theta
    if args.dual is not None:
        try:
            dual = [rat_parse(t) for t in args.dual.split(",")]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if len(set(theta)) != len(theta) or len(set(dual)) != len(dual):
        raise UsageError("eigenvalue sequences must have distinct entries")
    if len(theta) != len(dual):
        raise UsageError("sequence and dual sequence lengths differ")
    cf, err = _fit(theta)
    cf_star, err_star = _fit(dual)
    verdict = {"closed_form": cf, "dual_closed_form": cf_star, "params": None, "errors": []}
    for e in (err, err_star):
        if e:
            verdict["errors"].append(e)
    ok = not verdict["errors"]
    if len(theta) >= 2:
        try:
            verdict["params"] = solution_to_json(params_from_sequences(theta, dual))
        except SequenceError as exc:
            verdict["errors"].append(str(exc))
            ok = False
    inputs = {"sequence": [rat_str(t) for t in theta], "dual": [rat_str(t) for t in dual]}
    return inputs, verdict, ok


def _generate(family, rest):
    try:
        if family == "paper-4x4":
            if rest:
                raise UsageError("paper-4x4 takes no arguments")
            return paper_4x4()
        if family == "krawtchouk":
            if len(rest) != 1:
                raise UsageError("usage: gen-example krawtchouk D")
            return krawtchouk_pair(int(rest[0]))
        if family == "uq-sl2":
            if len(rest) != 5:
                raise UsageError("usage: gen-example uq-sl2 D EPS P ALPHA ALPHA_STAR")
            d, eps = int(rest[0]), int(rest[1])
            p, alpha, alpha_star = (rat_parse(t) for t in rest[2:])
            return uq_sl2_pair(d, eps, p, alpha, alpha_star)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown family {family!r}; choose paper-4x4, krawtchouk or uq-sl2")


def cmd_gen_example(args):
    g = _generate(args.family, args.params)
    return {"family": args.family, "params": args.params}, generated_to_json(g), True


def _check(name, failures, total):
    return {"name": name, "checked": total, "failures": failures}


def _residual_summary(res, N):
    nonzero = [i for i, r in enumerate(res) if not r.is_zero()]
    return {"name": "td_residuals", "checked": len(res),
            "failures": [{"relation": 1 + i // (N + 1), "monomial_degree": i % (N + 1)} for i in nonzero]}


def cmd_aw_check(args):
    N = _degree(args.N)
    try:
        params = AWParams(args.q, args.a, args.b, args.c, args.d)
        fx = aw_fixture(params, N)
    except DegenerateParams as exc:
        raise UsageError(f"degenerate Askey-Wilson parameters: {exc}") from None
    D = fx.Astar
    polys = [aw_poly(n, params) for n in range(N + 2)]
    checks = []
    checks.append(_check("eigen_equation",
                         [n for n in range(N + 1) if D(polys[n]) != polys[n] * params.theta_star(n)], N + 1))
    bad = []
    for n in range(N + 1):
        bn, an, cn = aw_recurrence_coeffs(n, params)
        lhs = polys[n].shift(1) - polys[n + 1] * bn - polys[n] * an
        if n:
            lhs = lhs - polys[n - 1] * cn
        if not lhs.is_zero():
            bad.append(n)
    checks.append(_check("three_term_recurrence", bad, N + 1))
    samples = [rat_parse(s) for s in ("2", "-3", "5/2")]
    bad = [[n, rat_str(y)] for n in range(N + 1) for y in samples
           if phi43_value(n, params, y) != polys[n](y + 1 / y)]
    checks.append(_check("phi43_cross_definition", bad, (N + 1) * len(samples)))
    bad = []
    for n in range(1, N + 1):
        if aw_recurrence_coeffs(n - 1, params)[0] * aw_recurrence_coeffs(n, params)[2] == 0:
            bad.append(n)
    thetas = [params.theta_star(n) for n in range(N + 1)]
    if len(set(thetas)) != len(thetas):
        bad.append("theta_star_not_distinct")
    checks.append(_check("irreducibility_conditions", bad, N + 1))
    checks.append(_residual_summary(graded_td_residual(fx.A, D, fx.params, N), N))
    ok = all(not c["failures"] for c in checks)
    inputs = {"q": rat_str(params.q), "a": rat_str(params.a), "b": rat_str(params.b),
              "c": rat_str(params.c), "d": rat_str(params.d), "N": N}
    return inputs, {"params": params_to_json(fx.params), "checks": checks}, ok


def cmd_hermite_check(args):
    N = _degree(args.N)
    fx = hermite_fixture(N)
    H = [hermite_poly(n) for n in range(N + 2)]
    checks = [
        _check("eigen_equation", [n for n in range(N + 1) if fx.Astar(H[n]) != H[n] * n], N + 1),
        _check("derivative", [n for n in range(1, N + 1) if derivative(H[n]) != H[n - 1] * n], N),
        _check("three_term_recurrence",
               [n for n in range(N + 1) if H[n].shift(1) != H[n + 1] + (H[n - 1] * (2 * n) if n else 0)], N + 1),
        _residual_summary(graded_td_residual(fx.A, fx.Astar, fx.params, N), N),
    ]
    # negative control: a wrong rho must leave a nonzero residual
    wrong = ParamSeq(2, 0, 0, 1, 1)
    detected = any(not r.is_zero() for r in graded_td_residual(fx.A, fx.Astar, wrong, N))
    checks.append(_check("perturbed_params_detected", [] if detected else ["no nonzero residual"], 1))
    ok = all(not c["failures"] for c in checks)
    return {"N": N}, {"params": params_to_json(fx.params), "checks": checks}, ok


def build_parser():
    parser = argparse.ArgumentParser(prog="tdkit", description="Exact Leonard pair / TD pair toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-pair", help="check the TD-pair conditions for A, A*")
    p.add_argument("files", nargs="*", help="A.json Astar.json, one pair document, or none for stdin")
    p.set_defaults(func=cmd_verify_pair)

    p = sub.add_parser("solve-params", help="solve for the TD-relation parameter sequence")
    p.add_argument("files", nargs="*", help="A.json Astar.json, one pair document, or none for stdin")
    p.set_defaults(func=cmd_solve_params)

    p = sub.add_parser("fit-eigenvalues", help="fit an eigenvalue sequence to its closed form")
    p.add_argument("sequence", nargs="+", type=_rat_arg)
    p.add_argument("--dual", help="comma-separated dual sequence (defaults to the sequence itself)")
    p.set_defaults(func=cmd_fit_eigenvalues)

    p = sub.add_parser("gen-example", help="emit a generated pair as JSON")
    p.add_argument("family", help="paper-4x4 | krawtchouk | uq-sl2")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_gen_example)

    p = sub.add_parser("aw-check", help="run the Askey-Wilson module identities")
    for name in ("q", "a", "b", "c", "d"):
        p.add_argument(name, type=_rat_arg)
    p.add_argument("N", type=int, nargs="?", default=DEFAULT_DEGREE)
    p.set_defaults(func=cmd_aw_check)

    p = sub.add_parser("hermite-check", help="run the Hermite module identities")
    p.add_argument("N", type=int, nargs="?", default=DEFAULT_DEGREE)
    p.set_defaults(func=cmd_hermite_check)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else PASS
    try:
        inputs, verdict, ok = args.func(args)
    except UsageError as exc:
        print(dumps({"command": args.command, "error": str(exc)}), file=sys.stderr)
        return USAGE
    status = PASS if ok else FAIL
    print(dumps({"command": args.command, "inputs": inputs, "verdict": verdict,
                 "status": "pass" if ok else "fail"}))
    return status

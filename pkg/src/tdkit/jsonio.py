"""JSON encodings shared by the CLI and any file-based consumer.

Rationals are always strings (``"p/q"`` or ``"p"``).
"""

import json

from .field import rat, rat_str
from .linalg import Mat
from .polymod import LaurentPoly, XPoly
from .relations import DolanGrady, Generic, ParamSeq, QSerre
from .spectral import PairReport


def _r(x):
    return None if x is None else rat_str(x)


def mat_to_json(M):
    return {"rows": M.rows, "cols": M.cols, "entries": [[rat_str(x) for x in r] for r in M.tolist()]}


def mat_from_json(obj):
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"matrix object needs rows, cols and entries: {exc}") from None
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ValueError(f"entries do not match declared shape {rows}x{cols}")
    return Mat([[_parse_scalar(x) for x in r] for r in entries])


def _parse_scalar(x):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ValueError(f"rational must be a 'p/q' string or an integer, got {x!r}")
    return rat(x)


def params_to_json(p):
    if p is None:
        return None
    return {"beta": rat_str(p.beta), "gamma": rat_str(p.gamma), "gamma_star": rat_str(p.gamma_star),
            "rho": rat_str(p.rho), "rho_star": rat_str(p.rho_star)}


def params_from_json(obj):
    try:
        return ParamSeq(*(_parse_scalar(obj[k]) for k in ("beta", "gamma", "gamma_star", "rho", "rho_star")))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad parameter sequence: {exc}") from None


def solution_to_json(sol):
    return {
        "kind": sol.kind,
        "particular": params_to_json(sol.particular),
        "null_basis": [[rat_str(x) for x in v] for v in sol.null_basis],
    }


def special_case_to_json(case):
    if isinstance(case, DolanGrady):
        return {"case": "DolanGrady", "b_sq": rat_str(case.b_sq), "bstar_sq": rat_str(case.bstar_sq),
                "degenerate": case.degenerate}
    if isinstance(case, QSerre):
        return {"case": "QSerre", "beta": rat_str(case.beta)}
    assert isinstance(case, Generic)
    return {"case": "Generic"}


def closed_form_to_json(cf):
    return {"case": cf.case, "beta": _r(cf.beta), "a": _r(cf.a), "b": _r(cf.b), "c": _r(cf.c), "q": _r(cf.q)}


def _diag(d):
    return {"code": d.code, "subject": d.subject, "detail": d.detail}


def report_to_json(r: PairReport):
    return {
        "is_td_pair": r.is_td_pair,
        "is_leonard_pair": r.is_leonard_pair,
        "diameter": r.diameter,
        "eig_seq": [rat_str(x) for x in r.eig_seq],
        "dual_eig_seq": [rat_str(x) for x in r.dual_eig_seq],
        "shape": list(r.shape),
        "params": solution_to_json(r.params),
        "diagnostics": [_diag(d) for d in r.diagnostics],
        "notes": [_diag(d) for d in r.notes],
        "word_span": r.word_span,
        "invariant_subspace": (None if r.invariant_subspace is None
                               else [[rat_str(x) for x in v] for v in r.invariant_subspace]),
    }


def xpoly_to_json(f):
    return {"coeffs": [rat_str(c) for c in f.coeffs]}


def xpoly_from_json(obj):
    return XPoly([_parse_scalar(c) for c in obj["coeffs"]])


def laurent_to_json(g):
    return {"terms": {str(k): rat_str(v) for k, v in sorted(g.terms.items())}}


def laurent_from_json(obj):
    return LaurentPoly({int(k): _parse_scalar(v) for k, v in obj["terms"].items()})


def generated_to_json(g):
    return {
        "label": g.label,
        "A": mat_to_json(g.A),
        "Astar": mat_to_json(g.Astar),
        "witness": None if g.witness is None else mat_to_json(g.witness),
        "expected_params": params_to_json(g.expected_params),
    }


def pair_from_json(obj):
    """Read ``(A, A*)`` from a pair document or a ``gen-example`` report."""
    if isinstance(obj, dict) and "verdict" in obj and isinstance(obj["verdict"], dict):
        obj = obj["verdict"]
    if not isinstance(obj, dict) or "A" not in obj or "Astar" not in obj:
        raise ValueError("pair document needs 'A' and 'Astar' matrices")
    return mat_from_json(obj["A"]), mat_from_json(obj["Astar"])


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


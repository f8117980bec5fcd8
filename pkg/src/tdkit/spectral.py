"""Eigenvalue sequences: ordering, pair verification and parameter recovery."""

from dataclasses import dataclass
from itertools import permutations

import gmpy2
from gmpy2 import mpq

from .field import rat
from .linalg import (
    Mat,
    common_invariant_subspace,
    in_span,
    rational_spectrum,
    solve_linear,
    word_span_dimension,
)
from .relations import ParamSeq, ParamSolution, solve_param_sequence

BRUTE_FORCE_MAX_DIAMETER = 6


class OrderingError(ValueError):
    """No path ordering exists; ``code`` is DEGREE_GT_2, CYCLE or DISCONNECTED."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class SequenceError(ValueError):
    """An eigenvalue sequence violates a constancy condition."""


def _as_seq(values):
    seq = tuple(rat(v) for v in values)
    if len(set(seq)) != len(seq):
        raise ValueError(f"eigenvalue sequence has repeated entries: {[str(v) for v in seq]}")
    return seq


def adjacency_poly(theta, mu, beta, gamma, rho):
    """``p(x, y) = x^2 - beta x y + y^2 - gamma (x + y) - rho`` at ``(theta, mu)``."""
    x, y = rat(theta), rat(mu)
    return x * x - rat(beta) * x * y + y * y - rat(gamma) * (x + y) - rat(rho)


def order_eigenvalues(thetas, beta, gamma, rho):
    """Order distinct eigenvalues along the path cut out by the adjacency polynomial.

    Two values are adjacent when they differ and ``adjacency_poly`` vanishes.
    The graph must be a single simple path; it is walked starting from the
    larger endpoint. Raises :class:`OrderingError` otherwise.
    """
    vals = _as_seq(thetas)
    if len(vals) <= 1:
        return vals
    nbrs = {v: [w for w in vals if w != v and adjacency_poly(v, w, beta, gamma, rho) == 0] for v in vals}
    for v, ws in nbrs.items():
        if len(ws) > 2:
            raise OrderingError("DEGREE_GT_2", f"{v} is adjacent to {len(ws)} eigenvalues")
    # connected components
    seen, components = set(), []
    for v in vals:
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in nbrs[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        components.append(comp)
    for comp in components:
        edges = sum(len(nbrs[u]) for u in comp) // 2
        if edges >= len(comp) and len(comp) > 2:
            raise OrderingError("CYCLE", "adjacency graph contains a cycle")
    if len(components) > 1:
        raise OrderingError("DISCONNECTED", f"adjacency graph has {len(components)} components")
    start = max(v for v in vals if len(nbrs[v]) == 1)
    path, prev = [start], None
    while len(path) < len(vals):
        nxt = next(w for w in nbrs[path[-1]] if w != prev)
        prev = path[-1]
        path.append(nxt)
    return tuple(path)


@dataclass(frozen=True)
class Diagnostic:
    code: str
    subject: str = ""
    detail: str = ""


@dataclass(frozen=True)
class PairReport:
    is_td_pair: bool
    is_leonard_pair: bool
    diameter: int
    eig_seq: tuple
    dual_eig_seq: tuple
    shape: tuple
    params: ParamSolution
    diagnostics: tuple = ()
    notes: tuple = ()
    word_span: int = 0
    invariant_subspace: tuple = None

    def has(self, code):
        return any(d.code == code for d in self.diagnostics)


def _inclusion_holds(order, spec, other):
    """``other V_i`` lies in ``V_{i-1} + V_i + V_{i+1}`` for every i."""
    spaces = [spec.eigenspace(t) for t in order]
    for i, Vi in enumerate(spaces):
        nearby = [v for j in (i - 1, i, i + 1) if 0 <= j < len(spaces) for v in spaces[j]]
        for v in Vi:
            if not in_span(nearby, other @ v):
                return False
    return True


def _find_ordering(spec, other, candidate):
    if candidate is not None and _inclusion_holds(candidate, spec, other):
        return candidate
    vals = spec.values
    if len(vals) - 1 > BRUTE_FORCE_MAX_DIAMETER:
        return None
    for perm in permutations(vals):
        if len(perm) > 1 and perm[0] < perm[-1]:
            continue
        if _inclusion_holds(perm, spec, other):
            return perm
    return None


def _candidate(values, solution, gamma, rho):
    if solution.kind == "none":
        return None
    p = solution.particular
    try:
        return order_eigenvalues(values, p.beta, getattr(p, gamma), getattr(p, rho))
    except OrderingError:
        return None


def _symmetric_unimodal(shape):
    d = len(shape) - 1
    if any(shape[i] != shape[d - i] for i in range(d + 1)):
        return False
    return all(shape[i - 1] <= shape[i] for i in range(1, d // 2 + 1))


# over Q, q + 1/q is rational for a root of unity q only at these values
_ROOT_OF_UNITY_BETAS = frozenset(mpq(k) for k in (-2, -1, 0, 1, 2))


def verify_td_pair(A, Astar):
    """Check the four TD-pair conditions exactly and collect the pair's data."""
    if not (A.is_square and A.shape == Astar.shape):
        raise ValueError(f"need square matrices of equal size, got {A.shape} and {Astar.shape}")
    n = A.rows
    diags, notes = [], []
    spec_a, spec_s = rational_spectrum(A), rational_spectrum(Astar)
    for name, spec in (("A", spec_a), ("ASTAR", spec_s)):
        if not spec.splits:
            diags.append(Diagnostic("SPECTRUM_NOT_SPLIT", name, "characteristic polynomial has non-rational roots"))
        elif not spec.diagonalizable:
            diags.append(Diagnostic("NOT_DIAGONALIZABLE", name, "eigenspaces do not span"))
    cond_i = not diags
    if not cond_i:
        diags.append(Diagnostic("COND_I_FAIL"))

    params = solve_param_sequence(A, Astar)
    if params.kind == "none":
        diags.append(Diagnostic("NO_PARAMETER_SEQUENCE", detail="TD relations have no solution"))

    eig_seq = dual_seq = ()
    if cond_i:
        found = _find_ordering(spec_a, Astar, _candidate(spec_a.values, params, "gamma", "rho"))
        if found is None:
            diags.append(Diagnostic("COND_II_FAIL", "A", "no eigenspace ordering of A is tridiagonal for A*"))
        else:
            eig_seq = tuple(found)
        found = _find_ordering(spec_s, A, _candidate(spec_s.values, params, "gamma_star", "rho_star"))
        if found is None:
            diags.append(Diagnostic("COND_III_FAIL", "ASTAR", "no eigenspace ordering of A* is tridiagonal for A"))
        else:
            dual_seq = tuple(found)

    span = word_span_dimension(A, Astar)
    witness = None
    if span < n * n:
        diags.append(Diagnostic("COND_IV_FAIL", detail=f"word span dimension {span} < {n * n}"))
        if cond_i:
            witness = common_invariant_subspace(A, Astar)
            if witness is not None:
                notes.append(Diagnostic("INVARIANT_SUBSPACE_FOUND", detail=f"dimension {len(witness)}"))

    shape = ()
    if eig_seq and dual_seq:
        if len(eig_seq) != len(dual_seq):
            diags.append(Diagnostic("DIAMETER_MISMATCH", detail=f"{len(eig_seq) - 1} vs {len(dual_seq) - 1}"))
        else:
            shape = tuple(len(spec_a.eigenspace(t)) for t in eig_seq)
            dual_shape = tuple(len(spec_s.eigenspace(t)) for t in dual_seq)
            if shape != dual_shape:
                diags.append(Diagnostic("SHAPE_MISMATCH", detail=f"{shape} vs {dual_shape}"))
            elif not _symmetric_unimodal(shape):
                diags.append(Diagnostic("SHAPE_NOT_SYMMETRIC_UNIMODAL", detail=str(shape)))

    is_td = not diags
    if is_td and params.kind == "unique" and params.particular.beta in _ROOT_OF_UNITY_BETAS:
        notes.append(Diagnostic("OUTSIDE_TMOD_HYPOTHESIS",
                                detail="beta = q + 1/q with q a root of unity; ordering found directly"))
    if is_td and params.kind == "family":
        notes.append(Diagnostic("PARAMS_UNDERDETERMINED", detail="diameter < 3"))
    diameter = len(spec_a.values) - 1 if spec_a.splits else -1
    return PairReport(
        is_td_pair=is_td,
        is_leonard_pair=is_td and all(r == 1 for r in shape),
        diameter=diameter,
        eig_seq=eig_seq,
        dual_eig_seq=dual_seq,
        shape=shape,
        params=params,
        diagnostics=tuple(diags),
        notes=tuple(notes),
        word_span=span,
        invariant_subspace=tuple(witness) if witness else None,
    )


def beta_from_sequence(theta):
    """``beta`` such that every ``(t[i-2] - t[i+1]) / (t[i-1] - t[i])`` equals ``beta + 1``."""
    t = _as_seq(theta)
    if len(t) < 4:
        raise SequenceError(f"beta is unconstrained by a sequence of length {len(t)} (need >= 4)")
    ratios = {(t[i - 2] - t[i + 1]) / (t[i - 1] - t[i]) for i in range(2, len(t) - 1)}
    if len(ratios) != 1:
        raise SequenceError(f"ratios are not constant: {sorted(str(r) for r in ratios)}")
    return ratios.pop() - 1


def params_from_sequences(theta, theta_star):
    """Parameter sequences consistent with an eigenvalue / dual eigenvalue pair.

    Every condition linking the sequences to (beta, gamma, gamma*, rho, rho*)
    is linear in those five scalars, so the answer is the solution set of a
    linear system: unique for length >= 4, a family for shorter sequences.
    """
    t, ts = _as_seq(theta), _as_seq(theta_star)
    if len(t) != len(ts):
        raise ValueError(f"sequence lengths differ: {len(t)} vs {len(ts)}")
    if len(t) < 2:
        raise ValueError("need sequences of length >= 2")
    rows, rhs = [], []

    def eq(coeffs, value):
        row = [mpq(0)] * 5
        for k, c in coeffs.items():
            row[k] = c
        rows.append(row)
        rhs.append(value)

    d = len(t) - 1
    for seq, g, r in ((t, 1, 3), (ts, 2, 4)):
        for i in range(2, d):
            diff = seq[i - 1] - seq[i]
            eq({0: diff}, seq[i - 2] - seq[i + 1] - diff)
        for i in range(1, d):
            eq({g: mpq(1), 0: seq[i]}, seq[i - 1] + seq[i + 1])
        for i in range(1, d + 1):
            a, b = seq[i - 1], seq[i]
            eq({r: mpq(1), 0: a * b, g: a + b}, a * a + b * b)
    sol = solve_linear(Mat(rows), rhs)
    if sol.kind == "inconsistent":
        raise SequenceError("sequences admit no parameter sequence")
    return ParamSolution("unique" if sol.kind == "unique" else "family",
                         ParamSeq.of(sol.particular), tuple(sol.null_basis))


@dataclass(frozen=True)
class ClosedForm:
    """``theta_i`` as one of the three closed forms.

    ``case`` is ``"I"``, ``"II"``, ``"III"``, or ``None`` when the sequence is
    too short to determine beta. For case I with ``q`` outside Q only
    ``beta`` is filled in.
    """

    case: str
    beta: mpq = None
    a: mpq = None
    b: mpq = None
    c: mpq = None
    q: mpq = None

    def __post_init__(self):
        for name in ("beta", "a", "b", "c", "q"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, rat(v))

    def value(self, i):
        if self.case == "I":
            return self.a + self.b * self.q**i + self.c * self.q**-i
        if self.case == "II":
            return self.a + self.b * i + self.c * mpq(i * (i - 1), 2)
        if self.case == "III":
            s = 1 if i % 2 == 0 else -1
            return self.a + self.b * s + self.c * i * s
        raise ValueError("closed form has no coefficients")

    @property
    def is_complete(self):
        return self.a is not None


def _rational_sqrt(x):
    if x < 0:
        return None
    num, den = int(x.numerator), int(x.denominator)
    if gmpy2.is_square(num) and gmpy2.is_square(den):
        return mpq(int(gmpy2.isqrt(num)), int(gmpy2.isqrt(den)))
    return None


def fit_closed_form(theta):
    """Fit ``theta`` to case I, II or III.

    In case I the root ``q`` of ``z^2 - beta z + 1`` with ``|q| > 1`` is used.
    """
    t = _as_seq(theta)
    if len(t) < 4:
        return ClosedForm(None)
    beta = beta_from_sequence(t)
    if beta == 2:
        case, q = "II", None
        basis = [lambda i: mpq(1), lambda i: mpq(i), lambda i: mpq(i * (i - 1), 2)]
    elif beta == -2:
        case, q = "III", None
        basis = [lambda i: mpq(1), lambda i: mpq((-1) ** i), lambda i: mpq(i * (-1) ** i)]
    else:
        root = _rational_sqrt(beta * beta - 4)
        if root is None:
            return ClosedForm("I", beta=beta)
        q = max((beta + root) / 2, (beta - root) / 2, key=abs)
        case = "I"
        basis = [lambda i: mpq(1), lambda i: q**i, lambda i: q**-i]
    M = Mat([[f(i) for f in basis] for i in range(3)])
    sol = solve_linear(M, t[:3])
    if sol.kind != "unique":
        raise SequenceError(f"case {case} model is singular on the first three terms")
    a, b, c = sol.particular
    cf = ClosedForm(case, beta, a, b, c, q)
    bad = [i for i in range(len(t)) if cf.value(i) != t[i]]
    if bad:
        raise SequenceError(f"case {case} fit fails at indices {bad}")
    return cf


def params_from_closed_form(cf, cf_star):
    """Parameter sequence from a pair of fitted closed forms."""
    if cf.case != cf_star.case:
        raise ValueError(f"case mismatch: {cf.case} vs {cf_star.case}")
    if not (cf.is_complete and cf_star.is_complete):
        raise ValueError("closed forms lack coefficients (q outside Q or underdetermined)")
    if cf.case == "I":
        if cf.q != cf_star.q:
            raise ValueError(f"q mismatch: {cf.q} vs {cf_star.q}")
        q = cf.q
        beta = q + 1 / q

        def gr(f):
            gamma = -f.a * (q - 1) ** 2 / q
            rho = f.a**2 * (q - 1) ** 2 / q - f.b * f.c * (q - 1 / q) ** 2
            return gamma, rho

    elif cf.case == "II":
        beta = mpq(2)

        def gr(f):
            return f.c, f.b**2 - f.b * f.c - 2 * f.a * f.c

    elif cf.case == "III":
        beta = mpq(-2)

        def gr(f):
            return 4 * f.a, f.c**2 - 4 * f.a**2

    else:
        raise ValueError(f"unknown case {cf.case!r}")
    g, r = gr(cf)
    gs, rs = gr(cf_star)
    return ParamSeq(beta, g, gs, r, rs)


def is_arithmetic_progression(theta, b):
    t = [rat(x) for x in theta]
    b = rat(b)
    return all(t[i] == t[i - 1] + b for i in range(1, len(t)))


def is_geometric_progression(theta, q):
    q = rat(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    t = [rat(x) for x in theta]
    return all(t[i] == t[i - 1] * q for i in range(1, len(t)))

"""The Tridiagonal relations as exact residuals, plus the parameter solver.

For a pair ``A, A*`` and scalars ``(beta, gamma, gamma*, rho, rho*)`` the
two residuals are::

    [A,  A^2 A* - beta A A* A + A* A^2 - gamma (A A* + A* A) - rho A*]
    [A*, A*^2 A - beta A* A A* + A A*^2 - gamma* (A* A + A A*) - rho* A]

Both are linear in the five scalars, which is what makes the solver a plain
linear system.
"""

from dataclasses import dataclass, astuple

from gmpy2 import mpq

from .field import rat
from .linalg import Mat, commutator, solve_linear


@dataclass(frozen=True)
class ParamSeq:
    beta: mpq
    gamma: mpq
    gamma_star: mpq
    rho: mpq
    rho_star: mpq

    def __post_init__(self):
        for name in ("beta", "gamma", "gamma_star", "rho", "rho_star"):
            object.__setattr__(self, name, rat(getattr(self, name)))

    @classmethod
    def of(cls, values):
        return cls(*values)

    def as_tuple(self):
        return astuple(self)

    @property
    def is_reduced(self):
        return self.gamma == 0 and self.gamma_star == 0


@dataclass(frozen=True)
class ParamSolution:
    """All parameter sequences satisfying the TD relations for one pair.

    ``kind`` is ``"unique"``, ``"family"`` or ``"none"``. For a family, any
    ``particular + sum(t_k * null_basis[k])`` is a valid sequence.
    """

    kind: str
    particular: ParamSeq = None
    null_basis: tuple = ()

    def contains(self, p):
        if self.kind == "none":
            return False
        diff = [x - y for x, y in zip(p.as_tuple(), self.particular.as_tuple())]
        if self.kind == "unique":
            return all(x == 0 for x in diff)
        from .linalg import in_span

        return in_span(list(self.null_basis), diff)


def _pair_terms(A, B):
    """Products needed by the first relation, as (constant, beta, gamma, rho) parts of C."""
    AA = A @ A
    AB = A @ B
    BA = B @ A
    base = AA @ B + B @ AA
    return base, -(AB @ A), -(AB + BA), -B


def _relation(A, B, beta, gamma, rho):
    base, b_part, g_part, r_part = _pair_terms(A, B)
    C = base + beta * b_part + gamma * g_part + rho * r_part
    return commutator(A, C)


def td_residuals(A, Astar, p):
    """Left-hand sides of both Tridiagonal relations at ``p``."""
    if not (A.is_square and A.shape == Astar.shape):
        raise ValueError(f"need square matrices of equal size, got {A.shape} and {Astar.shape}")
    r1 = _relation(A, Astar, p.beta, p.gamma, p.rho)
    r2 = _relation(Astar, A, p.beta, p.gamma_star, p.rho_star)
    return r1, r2


def solve_param_sequence(A, Astar):
    """Every ``(beta, gamma, gamma*, rho, rho*)`` making both residuals vanish.

    Unknown order is (beta, gamma, gamma*, rho, rho*); beta is shared by the
    two relations.
    """
    if not (A.is_square and A.shape == Astar.shape):
        raise ValueError(f"need square matrices of equal size, got {A.shape} and {Astar.shape}")
    rows, rhs = [], []
    # relation k contributes [A, base] + beta [A, b] + g [A, gpart] + r [A, rpart] = 0
    for first, second, g_idx, r_idx in ((A, Astar, 1, 3), (Astar, A, 2, 4)):
        base, b_part, g_part, r_part = _pair_terms(first, second)
        cols = {0: commutator(first, b_part).flat(),
                g_idx: commutator(first, g_part).flat(),
                r_idx: commutator(first, r_part).flat()}
        const = commutator(first, base).flat()
        for e in range(len(const)):
            row = [mpq(0)] * 5
            for k, vals in cols.items():
                row[k] = vals[e]
            rows.append(row)
            rhs.append(-const[e])
    sol = solve_linear(Mat(rows), rhs)
    if sol.kind == "inconsistent":
        return ParamSolution("none")
    return ParamSolution("unique" if sol.kind == "unique" else "family",
                         ParamSeq.of(sol.particular), tuple(sol.null_basis))


def _check_scales(r, rstar):
    if rat(r) == 0 or rat(rstar) == 0:
        raise ValueError("scale factors r and r* must be nonzero")


def transform_pair(A, Astar, r, s, rstar, sstar):
    """``(rA + sI, r*A* + s*I)``; maps TD pairs to TD pairs."""
    _check_scales(r, rstar)
    eye = Mat.identity(A.rows)
    return rat(r) * A + rat(s) * eye, rat(rstar) * Astar + rat(sstar) * eye


def transform_params(p, r, s, rstar, sstar):
    """Parameter sequence of the affinely transformed pair."""
    _check_scales(r, rstar)
    r, s, rstar, sstar = map(rat, (r, s, rstar, sstar))
    b = p.beta
    return ParamSeq(
        b,
        r * p.gamma + s * (2 - b),
        rstar * p.gamma_star + sstar * (2 - b),
        r * r * p.rho - 2 * r * s * p.gamma + s * s * (b - 2),
        rstar * rstar * p.rho_star - 2 * rstar * sstar * p.gamma_star + sstar * sstar * (b - 2),
    )


def reduce_params(A, Astar, p):
    """Shift the pair so its parameter sequence has ``gamma = gamma* = 0``.

    Undefined for ``beta == 2``.
    """
    if p.beta == 2:
        raise ValueError("cannot reduce a parameter sequence with beta == 2")
    s = p.gamma / (p.beta - 2)
    sstar = p.gamma_star / (p.beta - 2)
    B, Bstar = transform_pair(A, Astar, 1, s, 1, sstar)
    return B, Bstar, transform_params(p, 1, s, 1, sstar)


@dataclass(frozen=True)
class DolanGrady:
    b_sq: mpq
    bstar_sq: mpq

    def __post_init__(self):
        object.__setattr__(self, "b_sq", rat(self.b_sq))
        object.__setattr__(self, "bstar_sq", rat(self.bstar_sq))

    @property
    def degenerate(self):
        # b = 0 or b* = 0 is outside the nonzero-b setting of the DG relations
        return self.b_sq == 0 or self.bstar_sq == 0


@dataclass(frozen=True)
class QSerre:
    beta: mpq

    def __post_init__(self):
        object.__setattr__(self, "beta", rat(self.beta))


@dataclass(frozen=True)
class Generic:
    pass


def detect_special_case(p):
    if p.gamma != 0 or p.gamma_star != 0:
        return Generic()
    if p.beta == 2:
        return DolanGrady(p.rho, p.rho_star)
    if p.rho == 0 and p.rho_star == 0 and p.beta not in (2, -2):
        return QSerre(p.beta)
    return Generic()


def dg_residuals(A, Astar, b_sq, bstar_sq):
    """``[A,[A,[A,A*]]] - b^2 [A,A*]`` and its starred counterpart."""
    c = commutator(A, Astar)
    r1 = commutator(A, commutator(A, c)) - rat(b_sq) * c
    cs = -c
    r2 = commutator(Astar, commutator(Astar, cs)) - rat(bstar_sq) * cs
    return r1, r2


def qserre_residuals(A, Astar, beta):
    """The two q-Serre expressions, with ``[3]_q = beta + 1``."""
    t = rat(beta) + 1

    def one(X, Y):
        XX = X @ X
        return XX @ X @ Y - t * (XX @ Y @ X) + t * (X @ Y @ XX) - Y @ XX @ X

    return one(A, Astar), one(Astar, A)

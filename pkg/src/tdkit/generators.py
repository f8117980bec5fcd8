"""Concrete Leonard pairs, TD pairs and operator modules."""

from dataclasses import dataclass
from typing import NamedTuple, Optional

from gmpy2 import mpq

from .field import binomial, hyp2f1_z2, q_bracket, rat
from .linalg import Mat
from .polymod import AWParams, GradedOp, aw_ops, hermite_ops
from .relations import ParamSeq

DG_KRAWTCHOUK = ParamSeq(2, 0, 0, 4, 4)


@dataclass(frozen=True)
class GeneratedPair:
    A: Mat
    Astar: Mat
    witness: Optional[Mat] = None
    expected_params: Optional[ParamSeq] = None
    label: str = ""


def paper_4x4():
    """The 4 x 4 Leonard pair with its intertwiner, entered literally."""
    A = Mat([[0, 3, 0, 0],
             [1, 0, 2, 0],
             [0, 2, 0, 1],
             [0, 0, 3, 0]])
    Astar = Mat.diag([3, 1, -1, -3])
    P = Mat([[1, 3, 3, 1],
             [1, 1, -1, -1],
             [1, -1, -1, 1],
             [1, -3, 3, -1]])
    return GeneratedPair(A, Astar, P, DG_KRAWTCHOUK, "paper-4x4")


def krawtchouk_pair(d):
    """Krawtchouk Leonard pair of diameter ``d`` with intertwiner ``P``.

    ``A`` has subdiagonal ``1..d`` and superdiagonal ``d..1``;
    ``A* = diag(d, d-2, ..., -d)``; ``P[i][j] = C(d, j) 2F1(-i, -j; -d; 2)``.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    n = d + 1
    rows = [[0] * n for _ in range(n)]
    for i in range(d):
        rows[i][i + 1] = d - i
        rows[i + 1][i] = i + 1
    A = Mat(rows)
    Astar = Mat.diag([d - 2 * i for i in range(n)])
    P = Mat([[binomial(d, j) * hyp2f1_z2(i, j, d) for j in range(n)] for i in range(n)])
    return GeneratedPair(A, Astar, P, DG_KRAWTCHOUK if d >= 3 else None, f"krawtchouk-{d}")


def uq_sl2_forbidden(d, p):
    """Values of ``eps * alpha * alpha*`` that break the Leonard property."""
    p = rat(p)
    return [p ** (d - 1 - 2 * k) for k in range(d)]


def uq_sl2_pair(d, eps, p, alpha, alpha_star):
    """``A = alpha f + k/(p - 1/p)``, ``A* = alpha* e + k^-1/(p - 1/p)`` on ``V_{eps,d}``.

    Here ``q = p**2``. ``A`` comes out lower bidiagonal and ``A*`` upper
    bidiagonal in the basis ``v_0..v_d``.
    """
    p, alpha, alpha_star = rat(p), rat(alpha), rat(alpha_star)
    if d < 0:
        raise ValueError("d must be nonnegative")
    if eps not in (1, -1):
        raise ValueError("eps must be 1 or -1")
    if p in (0, 1, -1):
        raise ValueError("p must not be 0, 1 or -1")
    if alpha == 0 or alpha_star == 0:
        raise ValueError("alpha and alpha* must be nonzero")
    if eps * alpha * alpha_star in uq_sl2_forbidden(d, p):
        raise ValueError(f"eps*alpha*alpha* = {eps * alpha * alpha_star} is a forbidden power of q^(1/2)")
    n = d + 1
    scale = 1 / (p - 1 / p)
    A = [[mpq(0)] * n for _ in range(n)]
    S = [[mpq(0)] * n for _ in range(n)]
    for i in range(n):
        k_i = eps * p ** (d - 2 * i)
        A[i][i] = k_i * scale
        S[i][i] = scale / k_i
        if i < d:
            A[i + 1][i] = alpha * q_bracket(i + 1, p)  # f v_i = [i+1] v_{i+1}
        if i >= 1:
            S[i - 1][i] = alpha_star * eps * q_bracket(d - i + 1, p)  # e v_i = eps [d-i+1] v_{i-1}
    expected = ParamSeq(p * p + 1 / (p * p), 0, 0, 0, 0) if d >= 3 else None
    return GeneratedPair(Mat(A), Mat(S), None, expected, f"uq-sl2-d{d}-eps{eps}-p{p}")


class ModuleFixture(NamedTuple):
    A: GradedOp
    Astar: GradedOp
    params: ParamSeq
    degree: int


def hermite_fixture(N=16):
    A, S = hermite_ops()
    return ModuleFixture(A, S, ParamSeq(2, 0, 0, 0, 1), N)


def aw_params_sequence(params):
    q = params.q
    w = (q - 1 / q) ** 2
    return ParamSeq(q + 1 / q, 0, 0, -w, -params.abcd / q * w)


def aw_fixture(params, N=16):
    if not isinstance(params, AWParams):
        params = AWParams(*params)
    params.check(N)
    A, D = aw_ops(params)
    return ModuleFixture(A, D, aw_params_sequence(params), N)

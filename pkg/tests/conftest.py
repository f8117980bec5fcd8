from fractions import Fraction

import pytest

from tdkit.generators import paper_4x4
from tdkit.polymod import AWParams

F = Fraction

# nondegenerate Askey-Wilson parameter points (q, a, b, c, d)
AW_POINTS = [
    (4, F(1, 2), F(1, 3), F(1, 5), F(1, 7)),
    (3, F(2, 5), F(-1, 4), F(3, 7), F(1, 6)),
    (F(1, 2), 3, F(5, 2), -2, F(7, 3)),
]


@pytest.fixture
def pair4():
    return paper_4x4()


@pytest.fixture(params=AW_POINTS, ids=["q4", "q3", "q1/2"])
def aw_params(request):
    return AWParams(*request.param)


@pytest.fixture
def aw_main():
    return AWParams(*AW_POINTS[0])


def kron(X, Y):
    from tdkit.linalg import Mat

    m = Y.rows
    n = X.rows * m
    return Mat([[X[i // m, j // m] * Y[i % m, j % m] for j in range(n)] for i in range(n)])


def spin_chain_pair(rotations):
    """Sum of spin-1/2 factors: A = sum sx_k, A* = sum (c_k sz + s_k sx)_k.

    Each factor satisfies the Dolan-Grady relations with b^2 = 4, so the sum
    does too; distinct rotations give an irreducible TD pair of shape
    binomial(n, i).
    """
    from tdkit.linalg import Mat

    sx, sz, eye = Mat([[0, 1], [1, 0]]), Mat.diag([1, -1]), Mat.identity(2)
    n = len(rotations)

    def embed(M, k):
        out = Mat.identity(1)
        for j in range(n):
            out = kron(out, M if j == k else eye)
        return out

    A = S = None
    for k, (c, s) in enumerate(rotations):
        a, b = embed(sx, k), embed(c * sz + s * sx, k)
        A = a if A is None else A + a
        S = b if S is None else S + b
    return A, S


# rational points on the unit circle
ROTATIONS = [(F(3, 5), F(4, 5)), (F(5, 13), F(12, 13)), (F(8, 17), F(15, 17))]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

"""TD pairs whose eigenspaces are not all one-dimensional.

Three spin-1/2 factors, each with A = sx and A* a rotated sz, give an
8-dimensional TD pair of shape (1, 3, 3, 1) obeying the Dolan-Grady
relations. Repeating a rotation makes the module reducible, and the
verifier then finds the invariant subspace.

Run: python3 demos/03_tridiagonal_pairs.py
"""

from fractions import Fraction as F

from tdkit import rat_str, verify_td_pair
from tdkit.linalg import Mat

SX = Mat([[0, 1], [1, 0]])
SZ = Mat.diag([1, -1])


def kron(X, Y):
    m = Y.rows
    n = X.rows * m
    return Mat([[X[i // m, j // m] * Y[i % m, j % m] for j in range(n)] for i in range(n)])


def chain(rotations):
    n = len(rotations)
    A = S = None
    for k, (c, s) in enumerate(rotations):
        a = b = Mat.identity(1)
        for j in range(n):
            a = kron(a, SX if j == k else Mat.identity(2))
            b = kron(b, c * SZ + s * SX if j == k else Mat.identity(2))
        A = a if A is None else A + a
        S = b if S is None else S + b
    return A, S


for label, rots in [("distinct rotations", [(F(3, 5), F(4, 5)), (F(5, 13), F(12, 13)), (F(8, 17), F(15, 17))]),
                    ("repeated rotation", [(F(3, 5), F(4, 5))] * 3)]:
    A, S = chain(rots)
    r = verify_td_pair(A, S)
    print(f"{label}: TD pair {r.is_td_pair}, Leonard pair {r.is_leonard_pair}")
    print("  shape", r.shape, "| word span", r.word_span, "of", A.rows**2)
    if r.params.kind == "unique":
        print("  params", tuple(rat_str(x) for x in r.params.particular.as_tuple()))
    for d in r.diagnostics + r.notes:
        print("  ", d.code, d.detail)

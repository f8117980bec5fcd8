"""Dense exact linear algebra over Q.

Matrices are small (desk scale) and every entry is an ``mpq``, so the
routines here favour plain row operations over anything clever.
"""

from dataclasses import dataclass, field
from math import lcm

import numpy as np
from gmpy2 import mpq

from .field import rat

ZERO = mpq(0)
ONE = mpq(1)


class Mat:
    """Immutable dense matrix over Q, stored row-major."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries):
        e = tuple(tuple(rat(x) for x in row) for row in entries)
        if not e or not e[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(e[0])
        if any(len(row) != width for row in e):
            raise ValueError("ragged matrix rows")
        self._e = e
        self.rows = len(e)
        self.cols = width

    @classmethod
    def _raw(cls, e):
        # trusted constructor: e is already a tuple of tuples of mpq
        m = object.__new__(cls)
        m._e = e
        m.rows = len(e)
        m.cols = len(e[0])
        return m

    @classmethod
    def identity(cls, n):
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls._raw(tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def diag(cls, values):
        values = [rat(v) for v in values]
        n = len(values)
        return cls._raw(tuple(tuple(values[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns):
        return cls._raw(tuple(zip(*[tuple(rat(x) for x in c) for c in columns])))

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i):
        return self._e[i]

    def column(self, j):
        return tuple(r[j] for r in self._e)

    def tolist(self):
        return [list(r) for r in self._e]

    def flat(self):
        return tuple(x for r in self._e for x in r)

    def transpose(self):
        return Mat._raw(tuple(zip(*self._e)))

    def trace(self):
        return sum((self._e[i][i] for i in range(min(self.rows, self.cols))), ZERO)

    def is_zero(self):
        return all(x == 0 for r in self._e for x in r)

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same_shape(other)
        return Mat._raw(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._e, other._e)))

    def __sub__(self, other):
        self._check_same_shape(other)
        return Mat._raw(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._e, other._e)))

    def __neg__(self):
        return Mat._raw(tuple(tuple(-a for a in r) for r in self._e))

    def __mul__(self, c):
        if isinstance(c, Mat):
            return NotImplemented
        c = rat(c)
        return Mat._raw(tuple(tuple(c * a for a in r) for r in self._e))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Mat):
            return mat_mul(self, other)
        # matrix times vector
        if len(other) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(sum((a * b for a, b in zip(r, other)), ZERO) for r in self._e)

    def __eq__(self, other):
        return isinstance(other, Mat) and self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._e)
        return f"Mat([{body}])"


def mat_mul(A, B):
    if A.cols != B.rows:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    bt = tuple(zip(*B._e))
    return Mat._raw(tuple(tuple(sum((a * b for a, b in zip(r, c)), ZERO) for c in bt) for r in A._e))


def _check_square_pair(A, B):
    if not (A.is_square and B.is_square and A.shape == B.shape):
        raise ValueError(f"need square matrices of equal size, got {A.shape} and {B.shape}")


def commutator(A, B):
    """``AB - BA``."""
    _check_square_pair(A, B)
    return A @ B - B @ A


def char_poly(A):
    """Monic characteristic polynomial ``det(x I - A)``.

    Coefficients are returned lowest degree first, so the last entry is 1.
    Uses the Faddeev-LeVerrier recursion, which is exact in characteristic 0.
    """
    if not A.is_square:
        raise ValueError("char_poly needs a square matrix")
    n = A.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    M = Mat.zeros(n)
    eye = Mat.identity(n)
    for k in range(1, n + 1):
        M = A @ M + coeffs[n - k + 1] * eye
        coeffs[n - k] = -(A @ M).trace() / k
    return coeffs


def poly_eval(coeffs, x):
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs, root):
    """Divide by ``(x - root)``; caller guarantees ``root`` is a root."""
    out = [ZERO] * (len(coeffs) - 1)
    carry = ZERO
    for k in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[k] + carry * root
        out[k - 1] = carry
    return out


def _divisors(n):
    from sympy import divisors

    return divisors(abs(int(n)))


def rational_roots(coeffs):
    """Rational roots of a polynomial (lowest degree first) with multiplicity.

    Returns a list of ``(root, multiplicity)`` sorted by root. Uses the
    rational root theorem on the primitive integer polynomial.
    """
    coeffs = [rat(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    found = {}
    zero_mult = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        zero_mult += 1
    if zero_mult:
        found[ZERO] = zero_mult
    if len(coeffs) > 1:
        den = lcm(*(int(c.denominator) for c in coeffs))
        ints = [int(c * den) for c in coeffs]
        candidates = {mpq(s * u, v) for u in _divisors(ints[0]) for v in _divisors(ints[-1]) for s in (1, -1)}
        for cand in sorted(candidates, key=lambda c: (abs(c.numerator) + c.denominator, c)):
            while poly_eval(coeffs, cand) == 0:
                coeffs = _deflate(coeffs, cand)
                found[cand] = found.get(cand, 0) + 1
            if len(coeffs) == 1:
                break
    return sorted(found.items())


def rref(rows):
    """Reduced row echelon form of a list of row vectors.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        pivot_row = [x * inv for x in m[r]]
        m[r] = pivot_row
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(vectors):
    return len(rref(vectors)[1]) if vectors else 0


def null_space(A):
    """Basis of ``{v : A v = 0}`` as a list of tuples."""
    reduced, pivots = rref(A.tolist())
    free = [c for c in range(A.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * A.cols
        v[f] = ONE
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def in_span(vectors, v):
    if not vectors:
        return all(x == 0 for x in v)
    return rank(list(vectors) + [v]) == rank(vectors)


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of :func:`solve_linear`.

    ``kind`` is ``"unique"``, ``"affine"`` or ``"inconsistent"``. For the
    affine case every ``particular + span(null_basis)`` is a solution.
    """

    kind: str
    particular: tuple = None
    null_basis: tuple = ()


def solve_linear(M, b):
    b = [rat(x) for x in b]
    if M.rows != len(b):
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {M.rows} rows")
    aug = [list(r) + [bi] for r, bi in zip(M.tolist(), b)]
    reduced, pivots = rref(aug)
    if M.cols in pivots:
        return LinearSolution("inconsistent")
    x = [ZERO] * M.cols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[-1]
    basis = tuple(null_space(M))
    return LinearSolution("affine" if basis else "unique", tuple(x), basis)


@dataclass(frozen=True)
class Eigen:
    value: mpq
    multiplicity: int
    basis: tuple

    @property
    def geometric_multiplicity(self):
        return len(self.basis)


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple
    dimension: int
    splits: bool = field(init=False)
    diagonalizable: bool = field(init=False)

    def __post_init__(self):
        alg = sum(e.multiplicity for e in self.eigenvalues)
        geo = sum(e.geometric_multiplicity for e in self.eigenvalues)
        object.__setattr__(self, "splits", alg == self.dimension)
        object.__setattr__(self, "diagonalizable", geo == self.dimension)

    @property
    def values(self):
        return tuple(e.value for e in self.eigenvalues)

    def eigenspace(self, theta):
        for e in self.eigenvalues:
            if e.value == theta:
                return e.basis
        raise KeyError(theta)


def _is_triangular(A):
    n = A.rows
    upper = all(A[i, j] == 0 for i in range(n) for j in range(i))
    lower = all(A[i, j] == 0 for i in range(n) for j in range(i + 1, n))
    return upper or lower


def rational_spectrum(A):
    """Rational eigenvalues of ``A`` with multiplicities and eigenspaces.

    A spectrum that does not split over Q is reported (``splits`` is False),
    never approximated.
    """
    if not A.is_square:
        raise ValueError("rational_spectrum needs a square matrix")
    n = A.rows
    if _is_triangular(A):
        counts = {}
        for i in range(n):
            counts[A[i, i]] = counts.get(A[i, i], 0) + 1
        roots = sorted(counts.items())
    else:
        roots = rational_roots(char_poly(A))
    eye = Mat.identity(n)
    eig = tuple(Eigen(theta, mult, tuple(null_space(A - theta * eye))) for theta, mult in roots)
    return Spectrum(eig, n)


def is_irreducible_tridiagonal(A):
    if not A.is_square:
        raise ValueError("need a square matrix")
    n = A.rows
    for i in range(n):
        for j in range(n):
            d = abs(i - j)
            if d > 1 and A[i, j] != 0:
                return False
            if d == 1 and A[i, j] == 0:
                return False
    return True


class _Echelon:
    """Incrementally grown row-echelon basis; rows kept sorted by pivot."""

    def __init__(self):
        self.rows = []  # (pivot, row) with row[pivot] == 1 and zeros before

    def reduce(self, v):
        v = list(v)
        for p, row in self.rows:
            c = v[p]
            if c != 0:
                for k in range(p, len(v)):
                    if row[k] != 0:
                        v[k] -= c * row[k]
        return v

    def add(self, v):
        v = self.reduce(v)
        p = next((k for k, x in enumerate(v) if x != 0), None)
        if p is None:
            return False
        inv = 1 / v[p]
        row = [x * inv for x in v]
        idx = next((i for i, (q, _) in enumerate(self.rows) if q > p), len(self.rows))
        self.rows.insert(idx, (p, row))
        return True

    def __len__(self):
        return len(self.rows)


# largest prime below 2**26: products of residues and their short sums fit in int64
_PRIME = 67108859


def _integral_mod_p(M):
    """``M`` scaled by its common denominator, reduced mod the prime."""
    den = lcm(1, *(int(x.denominator) for x in M.flat()))
    return np.array([[int(x * den) % _PRIME for x in row] for row in M.tolist()], dtype=np.int64)


def _word_span_full_mod_p(A, B):
    """True if the words in ``A``, ``B`` span all matrices modulo a prime.

    Scaling a generator does not change the algebra, and rank mod p never
    exceeds rank over Q, so ``True`` certifies the exact answer ``n**2``.
    ``False`` is inconclusive.
    """
    n = A.rows
    full = n * n
    if n > 64:
        return False  # dot products could overflow int64
    gens = [_integral_mod_p(A), _integral_mod_p(B)]
    R = np.zeros((0, full), dtype=np.int64)  # fully reduced echelon rows
    piv = []

    def add(v):
        nonlocal R
        if piv:
            v = (v - (v[piv] @ R) % _PRIME) % _PRIME
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = v * pow(int(v[c]), -1, _PRIME) % _PRIME
        if piv:
            R = (R - np.outer(R[:, c], v) % _PRIME) % _PRIME
        R = np.vstack([R, v])
        piv.append(c)
        return True

    eye = np.eye(n, dtype=np.int64)
    add(eye.ravel())
    queue = [eye]
    while queue and len(piv) < full:
        W = queue.pop()
        for G in gens:
            P = (G @ W) % _PRIME
            if add(P.ravel()):
                queue.append(P)
    return len(piv) == full


def word_span_dimension(A, B):
    """Dimension of the algebra generated by ``A`` and ``B`` (words incl. I).

    Equals ``n**2`` exactly when the pair acts absolutely irreducibly
    (Burnside), which rules out any common invariant subspace.
    """
    _check_square_pair(A, B)
    n = A.rows
    if _word_span_full_mod_p(A, B):
        return n * n
    ech = _Echelon()
    eye = Mat.identity(n)
    ech.add(eye.flat())
    queue = [eye]
    full = n * n
    while queue and len(ech) < full:
        W = queue.pop()
        for G in (A, B):
            P = G @ W
            if ech.add(P.flat()):
                queue.append(P)
    return len(ech)


def orbit_span(mats, v):
    """Basis of the smallest subspace containing ``v`` and invariant under ``mats``."""
    ech = _Echelon()
    basis = []
    if not ech.add(v):
        return basis
    basis.append(tuple(v))
    queue = [tuple(v)]
    while queue:
        w = queue.pop()
        for M in mats:
            u = M @ w
            if ech.add(u):
                basis.append(u)
                queue.append(u)
    return basis


def common_invariant_subspace(A, B, seeds=None):
    """Search for a proper nonzero subspace invariant under both matrices.

    Tries the orbit of each seed vector (by default the rational eigenvectors
    of ``A`` and ``B``). Returns a basis, or ``None`` if no seed yields one.
    A ``None`` result is not a proof of irreducibility.
    """
    _check_square_pair(A, B)
    n = A.rows
    if seeds is None:
        seeds = []
        for M in (A, B):
            for e in rational_spectrum(M).eigenvalues:
                seeds.extend(e.basis)
    for v in seeds:
        span = orbit_span((A, B), v)
        if 0 < len(span) < n:
            return span
    return None

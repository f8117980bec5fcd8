"""Polynomial modules: Hermite and Askey-Wilson operator pairs on Q[x].

``x`` is identified with ``y + 1/y`` so that Q[x] sits inside the Laurent
ring Q[y, 1/y] as its ``y -> 1/y`` symmetric part.
"""

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .field import q_pochhammer, rat
from .linalg import Mat

ZERO = mpq(0)
ONE = mpq(1)


class XPoly:
    """Polynomial in x with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [rat(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(c)
        return p

    @classmethod
    def monomial(cls, n, c=1):
        return cls._raw([ZERO] * n + [rat(c)])

    @classmethod
    def constant(cls, c):
        return cls._raw([rat(c)])

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __add__(self, other):
        if not isinstance(other, XPoly):
            other = XPoly.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly._raw([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return XPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, XPoly) else -rat(other))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            other = rat(other)
            return XPoly._raw([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return XPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return XPoly._raw(out)

    __rmul__ = __mul__

    def shift(self, k=1):
        """Multiply by ``x**k``."""
        if self.is_zero():
            return self
        return XPoly._raw([ZERO] * k + list(self.coeffs))

    def __call__(self, x):
        x = rat(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "XPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*x^{k}")
        return "XPoly(" + " + ".join(terms) + ")"


X = XPoly([0, 1])


def derivative(f):
    return XPoly._raw([k * c for k, c in enumerate(f.coeffs)][1:])


class LaurentPoly:
    """Laurent polynomial in y; ``terms`` maps exponent to nonzero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {int(k): rat(v) for k, v in (terms or {}).items() if rat(v) != 0}

    @classmethod
    def _raw(cls, terms):
        p = object.__new__(cls)
        p.terms = {k: v for k, v in terms.items() if v != 0}
        return p

    @classmethod
    def monomial(cls, k, c=1):
        return cls({k: c})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return LaurentPoly._raw(out)

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            other = rat(other)
            return LaurentPoly._raw({k: v * other for k, v in self.terms.items()})
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = out.get(i + j, ZERO) + a * b
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def invert(self):
        """Substitute ``y -> 1/y``."""
        return LaurentPoly._raw({-k: v for k, v in self.terms.items()})

    def is_symmetric(self):
        return self.terms == self.invert().terms

    def span(self):
        if not self.terms:
            return (0, -1)
        return (min(self.terms), max(self.terms))

    def __call__(self, y):
        y = rat(y)
        return sum((v * y**k for k, v in self.terms.items()), ZERO)

    def divexact(self, poly):
        """Exact quotient by an ordinary polynomial in y (lowest degree first).

        Raises ``ArithmeticError`` if the division leaves a remainder.
        """
        den = [rat(c) for c in poly]
        while den and den[-1] == 0:
            den.pop()
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        lo, hi = self.span()
        num = [self.terms.get(k, ZERO) for k in range(lo, hi + 1)]
        m = len(den) - 1
        if len(num) - 1 < m:
            raise ArithmeticError("Laurent division leaves a remainder")
        quot = [ZERO] * (len(num) - m)
        lead = den[-1]
        for k in range(len(num) - 1, m - 1, -1):
            c = num[k] / lead
            quot[k - m] = c
            if c:
                for j, dj in enumerate(den):
                    num[k - m + j] -= c * dj
        if any(num[:m]):
            raise ArithmeticError("Laurent division leaves a remainder")
        return LaurentPoly._raw({lo + k: c for k, c in enumerate(quot)})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        return "LaurentPoly(" + " + ".join(f"{v}*y^{k}" for k, v in sorted(self.terms.items())) + ")"


def laurent_tau(f, q, inverse=False):
    """Apply the automorphism ``y -> q y`` (or ``y -> y / q``)."""
    q = rat(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    if inverse:
        q = 1 / q
    return LaurentPoly._raw({k: v * q**k for k, v in f.terms.items()})


_Y_PLUS_INV = LaurentPoly({1: 1, -1: 1})


def x_to_laurent(f):
    """Rewrite ``f(x)`` with ``x = y + 1/y``."""
    acc = LaurentPoly()
    for c in reversed(f.coeffs):
        acc = acc * _Y_PLUS_INV + LaurentPoly._raw({0: c})
    return acc


@lru_cache(maxsize=None)
def _sym_basis(k):
    """``y**k + y**-k`` as a polynomial in x (``2`` for ``k = 0``)."""
    if k == 0:
        return XPoly([2])
    if k == 1:
        return X
    return X * _sym_basis(k - 1) - _sym_basis(k - 2)


def symmetric_laurent_to_x(g):
    """Inverse of :func:`x_to_laurent` on ``y -> 1/y`` invariant input."""
    if not g.is_symmetric():
        raise ValueError("Laurent polynomial is not invariant under y -> 1/y")
    out = XPoly.constant(g.terms.get(0, ZERO))
    for k, v in g.terms.items():
        if k > 0:
            out = out + _sym_basis(k) * v
    return out


@dataclass(frozen=True)
class GradedOp:
    """Linear map on Q[x] raising degree by at most ``growth``."""

    apply: object
    growth: int
    name: str = ""

    def __call__(self, f):
        return self.apply(f)

    def __matmul__(self, other):
        return GradedOp(lambda f: self.apply(other.apply(f)), self.growth + other.growth,
                        f"({self.name}*{other.name})")


def hermite_poly(n):
    """``H_n`` from ``x H_n = H_{n+1} + 2 n H_{n-1}``, ``H_0 = 1``."""
    return _hermite(n)


@lru_cache(maxsize=None)
def _hermite(n):
    if n < 0:
        return XPoly()
    if n == 0:
        return XPoly([1])
    return X * _hermite(n - 1) - _hermite(n - 2) * (2 * (n - 1))


def hermite_ops():
    """``A: f -> x f`` and ``A*: f -> (x - 2D) D f``."""
    A = GradedOp(lambda f: f.shift(1), 1, "x")

    def astar(f):
        df = derivative(f)
        return df.shift(1) - derivative(df) * 2

    return A, GradedOp(astar, 1, "(x-2D)D")


# --- Askey-Wilson ----------------------------------------------------------


class DegenerateParams(ValueError):
    pass


@dataclass(frozen=True)
class AWParams:
    """Askey-Wilson parameters; all nonzero, ``q`` not in ``{1, -1}``.

    "q not a root of unity" and "no pairwise product is a power of q" are
    checked up to a working degree by :meth:`check`.
    """

    q: mpq
    a: mpq
    b: mpq
    c: mpq
    d: mpq

    def __post_init__(self):
        for name in ("q", "a", "b", "c", "d"):
            v = rat(getattr(self, name))
            if v == 0:
                raise DegenerateParams(f"{name} must be nonzero")
            object.__setattr__(self, name, v)
        if self.q in (1, -1):
            raise DegenerateParams("q must not be 1 or -1")

    @property
    def abcd(self):
        return self.a * self.b * self.c * self.d

    def check(self, N):
        """Raise :class:`DegenerateParams` if degenerate up to degree ``N``."""
        K = 2 * N + 2
        q = self.q
        if any(q**k == 1 for k in range(1, K + 1)):
            raise DegenerateParams(f"q^k = 1 for some 1 <= k <= {K}")
        a, b, c, d = self.a, self.b, self.c, self.d
        products = {"ab": a * b, "ac": a * c, "ad": a * d, "bc": b * c, "bd": b * d, "cd": c * d,
                    "abcd": self.abcd}
        powers = {q**k for k in range(-K, K + 1)}
        for name, v in products.items():
            if v in powers:
                raise DegenerateParams(f"{name} = {v} is a power of q within |k| <= {K}")
        return self

    def theta_star(self, n):
        return self.q**-n + self.abcd * self.q ** (n - 1)


def aw_recurrence_coeffs(n, params):
    """``(b_n, a_n, c_n)`` of ``x p_n = b_n p_{n+1} + a_n p_n + c_n p_{n-1}``."""
    q, a, b, c, d = params.q, params.a, params.b, params.c, params.d
    abcd = params.abcd
    qn = q**n
    den_b = a * (1 - abcd * q ** (2 * n - 1)) * (1 - abcd * q ** (2 * n))
    den_c = (1 - abcd * q ** (2 * n - 2)) * (1 - abcd * q ** (2 * n - 1))
    if den_b == 0 or den_c == 0:
        raise DegenerateParams(f"recurrence denominator vanishes at n={n}")
    bn = (1 - a * b * qn) * (1 - a * c * qn) * (1 - a * d * qn) * (1 - abcd * q ** (n - 1)) / den_b
    cn = a * (1 - qn) * (1 - b * c * q ** (n - 1)) * (1 - b * d * q ** (n - 1)) * (1 - c * d * q ** (n - 1)) / den_c
    an = a + 1 / a - bn - cn
    if bn == 0:
        raise DegenerateParams(f"b_{n} = 0")
    return bn, an, cn


@lru_cache(maxsize=256)
def _aw_polys(params, n):
    polys = [XPoly([1])]
    prev = XPoly()
    for k in range(n):
        bk, ak, ck = aw_recurrence_coeffs(k, params)
        nxt = (polys[-1].shift(1) - polys[-1] * ak - prev * ck) * (1 / bk)
        prev = polys[-1]
        polys.append(nxt)
    return tuple(polys)


def aw_poly(n, params):
    """The n-th Askey-Wilson polynomial via the three-term recurrence."""
    return _aw_polys(params, n)[n]


def phi43_value(n, params, y0):
    """Terminating 4phi3 series defining ``p_n`` evaluated at ``y = y0``."""
    y0 = rat(y0)
    if y0 == 0:
        raise ValueError("y0 must be nonzero")
    q, a, b, c, d = params.q, params.a, params.b, params.c, params.d
    abcd = params.abcd
    total = ZERO
    for k in range(n + 1):
        den = (q_pochhammer(a * b, q, k) * q_pochhammer(a * c, q, k)
               * q_pochhammer(a * d, q, k) * q_pochhammer(q, q, k))
        if den == 0:
            raise DegenerateParams(f"vanishing q-Pochhammer denominator at k={k}")
        num = (q_pochhammer(q**-n, q, k) * q_pochhammer(abcd * q ** (n - 1), q, k)
               * q_pochhammer(a * y0, q, k) * q_pochhammer(a / y0, q, k))
        total += num / den * q**k
    return total


def _phi_parts(params):
    """Numerator ``(1-ay)(1-by)(1-cy)(1-dy)`` as a coefficient list in y."""
    num = [ONE]
    for r in (params.a, params.b, params.c, params.d):
        nxt = [ZERO] * (len(num) + 1)
        for k, v in enumerate(num):
            nxt[k] += v
            nxt[k + 1] -= r * v
        num = nxt
    return num


def _poly_to_laurent(coeffs, shift=0):
    return LaurentPoly._raw({k + shift: v for k, v in enumerate(coeffs)})


def aw_apply_laurent(f, params):
    """Askey-Wilson operator on a symmetric Laurent polynomial.

    Brings ``phi(y)(tau - I) f + phi(1/y)(tau^-1 - I) f`` over the common
    denominator ``(1 - y^2)(1 - q y^2)(y^2 - q)`` and divides exactly.
    """
    q = params.q
    N = _poly_to_laurent(_phi_parts(params))
    # y^4 N(1/y) as an ordinary polynomial: reversed coefficients
    N_rev = _poly_to_laurent(list(reversed(_phi_parts(params))))
    up = laurent_tau(f, q) - f
    down = laurent_tau(f, q, inverse=True) - f
    y2_minus_q = LaurentPoly._raw({2: ONE, 0: -q})
    one_minus_qy2 = LaurentPoly._raw({0: ONE, 2: -q})
    numerator = N * up * y2_minus_q - N_rev * down * one_minus_qy2
    den = _expand([[1, 0, -1], [1, 0, -q], [-q, 0, 1]])  # (1 - y^2)(1 - q y^2)(y^2 - q)
    return numerator.divexact(den) + f * (1 + params.abcd / q)


def _expand(factors):
    out = [ONE]
    for fac in factors:
        fac = [rat(v) for v in fac]
        nxt = [ZERO] * (len(out) + len(fac) - 1)
        for i, u in enumerate(out):
            for j, v in enumerate(fac):
                nxt[i + j] += u * v
        out = nxt
    return out


@lru_cache(maxsize=4096)
def _aw_on_monomial(params, k):
    g = aw_apply_laurent(x_to_laurent(XPoly.monomial(k)), params)
    return symmetric_laurent_to_x(g)


def aw_operator(params):
    """The Askey-Wilson operator as a degree-preserving map on Q[x]."""

    def apply(f):
        out = XPoly()
        for k, c in enumerate(f.coeffs):
            if c:
                out = out + _aw_on_monomial(params, k) * c
        return out

    return GradedOp(apply, 0, "D_aw")


def aw_pointwise(f, params, y0):
    """Askey-Wilson operator applied to ``f`` and evaluated at one point ``y0``.

    Evaluates ``phi`` as a rational function directly; needs ``y0`` away from
    the poles ``y0**2 in {1, 1/q}`` and ``y0 != 0``.
    """
    y0 = rat(y0)
    q, abcd = params.q, params.abcd

    def fx(y):
        return f(y + 1 / y)

    def phi(y):
        num = (1 - params.a * y) * (1 - params.b * y) * (1 - params.c * y) * (1 - params.d * y)
        return num / ((1 - y * y) * (1 - q * y * y))

    return (phi(y0) * (fx(q * y0) - fx(y0)) + phi(1 / y0) * (fx(y0 / q) - fx(y0))
            + (1 + abcd / q) * fx(y0))


def x_op():
    return GradedOp(lambda f: f.shift(1), 1, "x")


def aw_ops(params):
    return x_op(), aw_operator(params)


# --- relation checks -------------------------------------------------------


def _lin(*pairs):
    out = XPoly()
    for c, f in pairs:
        if c:
            out = out + f * c
    return out


def graded_td_residual(A, Astar, p, N):
    """Both TD-relation left sides applied to ``x**0 .. x**N``.

    Returns ``2 (N + 1)`` polynomials: first relation for each monomial, then
    the second relation for each monomial.
    """

    def C1(f):
        Sf = Astar(f)
        Af = A(f)
        AAf = A(Af)
        return _lin((1, A(A(Sf))), (-p.beta, A(Astar(Af))), (1, Astar(AAf)),
                    (-p.gamma, A(Sf)), (-p.gamma, Astar(Af)), (-p.rho, Sf))

    def C2(f):
        Af = A(f)
        Sf = Astar(f)
        return _lin((1, Astar(Astar(Af))), (-p.beta, Astar(A(Sf))), (1, A(Astar(Sf))),
                    (-p.gamma_star, Astar(Af)), (-p.gamma_star, A(Sf)), (-p.rho_star, Af))

    first, second = [], []
    for j in range(N + 1):
        f = XPoly.monomial(j)
        first.append(A(C1(f)) - C1(A(f)))
        second.append(Astar(C2(f)) - C2(Astar(f)))
    return first + second


def acom_image(A, Astar, beta, rho, f):
    """``(A^2 A* - beta A A* A + A* A^2 - rho A*) f``; no gamma term."""
    Sf = Astar(f)
    return _lin((1, A(A(Sf))), (-beta, A(Astar(A(f)))), (1, Astar(A(A(f)))), (-rho, Sf))


def aw_omega(params):
    """Image of 1 under ``A^2 A* - (q+1/q) A A* A + A* A^2 + (q-1/q)^2 A*``."""
    q = params.q
    A, D = aw_ops(params)
    return acom_image(A, D, q + 1 / q, -((q - 1 / q) ** 2), XPoly([1]))


def tau_conjugation_identity_check(q, constant=None, kmax=10):
    """Check that ``x^2 t - (q+1/q) x t x + t x^2 + c t`` kills every ``y**k``.

    ``t`` runs over ``tau`` and its inverse, ``|k| <= kmax``, and ``c``
    defaults to ``(q - 1/q)**2``.
    """
    q = rat(q)
    if q in (0, 1, -1):
        raise ValueError("q must not be 0, 1 or -1")
    c = (q - 1 / q) ** 2 if constant is None else rat(constant)
    beta = q + 1 / q
    x = _Y_PLUS_INV
    for inverse in (False, True):
        for k in range(-kmax, kmax + 1):
            f = LaurentPoly.monomial(k)

            def t(g):
                return laurent_tau(g, q, inverse)

            img = x * x * t(f) - beta * (x * t(x * f)) + t(x * x * f) + c * t(f)
            if not img.is_zero():
                return False
    return True


# --- truncation -------------------------------------------------------------


def _basis_getter(basis):
    if callable(basis):
        return basis
    seq = list(basis)

    def get(i):
        if i >= len(seq):
            raise ValueError(f"basis has {len(seq)} elements; element {i} is needed")
        return seq[i]

    return get


def coordinates(f, basis):
    """Coordinates of ``f`` in a graded basis (``deg basis(i) == i``)."""
    get = _basis_getter(basis)
    coords = {}
    rem = f
    while not rem.is_zero():
        k = rem.degree
        bk = get(k)
        if bk.degree != k:
            raise ValueError(f"basis element {k} has degree {bk.degree}")
        c = rem.coeffs[-1] / bk.coeffs[-1]
        coords[k] = c
        rem = rem - bk * c
    return coords


def truncate_to_matrix(op, basis, N):
    """``(N+1) x (N+1)`` matrix of ``op`` in ``basis[0..N]``, extra rows dropped.

    Column ``j`` holds the coordinates of ``op(basis[j])``. Products of
    truncations agree with truncations of products only on columns
    ``j <= N - growth``.
    """
    get = _basis_getter(basis)
    for i in range(N + 1):
        if get(i).degree != i:
            raise ValueError(f"basis is not graded at index {i}")
    cols = []
    for j in range(N + 1):
        coords = coordinates(op(get(j)), get)
        cols.append([coords.get(i, ZERO) for i in range(N + 1)])
    return Mat.from_columns(cols)

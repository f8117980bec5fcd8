"""Exact scalars over Q and the terminating special-function sums built on them.

All scalars are ``gmpy2.mpq`` values, re-exported here as :data:`Rat`.
``mpq`` is always stored in lowest terms with a positive denominator.
"""

import re
from math import comb

from gmpy2 import mpq

Rat = mpq

_RAT_RE = re.compile(r"-?\d+(/\d+)?")


def rat(value):
    """Coerce an int, ``Fraction``, ``mpq`` or ``p/q`` string to :data:`Rat`."""
    if isinstance(value, str):
        return rat_parse(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, a fraction or a 'p/q' string")
    try:
        return mpq(value)
    except TypeError:
        # foreign rationals (sympy and the like) expose numerator/denominator
        num, den = getattr(value, "numerator", None), getattr(value, "denominator", None)
        if num is None or den is None:
            raise
        return mpq(int(num), int(den))


def rat_parse(text):
    """Parse ``[-]digits[/digits]`` into a canonical rational.

    >>> rat_parse("3/6")
    mpq(1,2)
    """
    text = text.strip()
    if not _RAT_RE.fullmatch(text):
        raise ValueError(f"malformed rational: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return mpq(int(num), int(den) if den else 1)


def rat_str(x):
    """Serialize as ``p/q``, or ``p`` for integers."""
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def q_bracket(i, p):
    """The q-integer ``[i]_q = (p**i - p**-i) / (p - 1/p)`` with ``q = p**2``."""
    p = rat(p)
    if p in (0, 1, -1):
        raise ZeroDivisionError("q_bracket needs p not in {0, 1, -1}")
    return (p**i - p**-i) / (p - 1 / p)


def pochhammer(a, k):
    """Rising factorial ``(a)_k``."""
    out = mpq(1)
    for j in range(k):
        out *= a + j
    return out


def hyp2f1_z2(i, j, d):
    """Terminating ``2F1(-i, -j; -d; 2)`` for ``0 <= i, j <= d``.

    This is the Krawtchouk factor of the intertwiner between the two
    bases of the Krawtchouk Leonard pair.
    """
    if not (0 <= i <= d and 0 <= j <= d) or d < 1:
        raise ValueError(f"need 0 <= i, j <= d and d >= 1, got i={i}, j={j}, d={d}")
    total = mpq(0)
    term = mpq(1)
    top = min(i, j)
    for k in range(top + 1):
        total += term
        if k < top:
            # t_{k+1}/t_k = (k-i)(k-j) * 2 / ((k-d)(k+1)); k < top <= d
            term *= mpq((k - i) * (k - j) * 2, (k - d) * (k + 1))
    return total


def q_pochhammer(a, q, n):
    """``(a; q)_n = prod_{k<n} (1 - a q**k)``; empty product is 1."""
    a, q = rat(a), rat(q)
    out = mpq(1)
    qk = mpq(1)
    for _ in range(n):
        out *= 1 - a * qk
        qk *= q
    return out


def binomial(n, k):
    return mpq(comb(n, k))

"""Hermite and Askey-Wilson polynomials as infinite-dimensional TD modules.

Run: python3 demos/04_polynomial_modules.py
"""

from fractions import Fraction as F

from tdkit import (
    AWParams,
    aw_fixture,
    aw_poly,
    graded_td_residual,
    hermite_fixture,
    hermite_poly,
    rat_str,
    truncate_to_matrix,
)
from tdkit.polymod import aw_omega
from tdkit.relations import ParamSeq


def poly_str(f):
    names = {0: "", 1: "x"}
    terms = [f"{rat_str(c)}{names.get(k, f'x^{k}')}" for k, c in enumerate(f.coeffs) if c]
    return " + ".join(reversed(terms)).replace("+ -", "- ") or "0"


# Hermite: A is multiplication by x, A* = (x - 2D)D has H_n as eigenvectors.
fx = hermite_fixture(16)
print("H_4 =", poly_str(hermite_poly(4)))
print("A* H_4 == 4 H_4:", fx.Astar(hermite_poly(4)) == hermite_poly(4) * 4)
res = graded_td_residual(fx.A, fx.Astar, fx.params, 16)
print(f"TD residuals on x^0..x^16: {sum(not r.is_zero() for r in res)} nonzero of {len(res)}")
res = graded_td_residual(fx.A, fx.Astar, ParamSeq(2, 0, 0, 1, 1), 16)
print(f"with rho = 1 instead: {sum(not r.is_zero() for r in res)} nonzero of {len(res)}")
print("A in the Hermite basis:")
for row in truncate_to_matrix(fx.A, hermite_poly, 4).tolist():
    print("   ", [rat_str(x) for x in row])

# Askey-Wilson with q = 4, (a, b, c, d) = (1/2, 1/3, 1/5, 1/7).
print()
params = AWParams(4, F(1, 2), F(1, 3), F(1, 5), F(1, 7))
fx = aw_fixture(params, 12)
print("parameters:", tuple(rat_str(x) for x in fx.params.as_tuple()))
print("p_1 =", poly_str(aw_poly(1, params)))
for n in range(4):
    pn = aw_poly(n, params)
    print(f"D p_{n} == {rat_str(params.theta_star(n))} p_{n}:", fx.Astar(pn) == pn * params.theta_star(n))
res = graded_td_residual(fx.A, fx.Astar, fx.params, 12)
print(f"TD residuals on x^0..x^12: {sum(not r.is_zero() for r in res)} nonzero of {len(res)}")
print("omega (the scalar of the inner expression) =", poly_str(aw_omega(params)))

"""From eigenvalue sequences to parameter sequences, three ways.

Run: python3 demos/02_eigenvalue_sequences.py
"""

from tdkit import (
    detect_special_case,
    fit_closed_form,
    order_eigenvalues,
    params_from_closed_form,
    params_from_sequences,
    rat_str,
    solve_param_sequence,
    uq_sl2_pair,
    verify_td_pair,
)
from tdkit.spectral import OrderingError


def fmt(seq):
    return "(" + ", ".join(rat_str(x) for x in seq) + ")"


# Closed forms of the three cases.
for seq in [(3, 1, -1, -3), (1, 2, 4, 8), (1, -2, 3, -4), (0, 1, 3, 8)]:
    cf = fit_closed_form(seq)
    if cf.is_complete:
        coeffs = f"a={rat_str(cf.a)} b={rat_str(cf.b)} c={rat_str(cf.c)}"
        if cf.case == "I":
            coeffs += f" q={rat_str(cf.q)}"
    else:
        coeffs = "q is irrational, only beta is known"
    print(f"{fmt(seq):>16}: case {cf.case}, beta={rat_str(cf.beta)}, {coeffs}")

# The adjacency polynomial recovers the order of a shuffled spectrum.
print()
p = params_from_sequences((3, 1, -1, -3), (3, 1, -1, -3)).particular
print("ordering {-1, 3, -3, 1}:", fmt(order_eigenvalues({-1, 3, -3, 1}, p.beta, p.gamma, p.rho)))
try:
    order_eigenvalues({0, 1, 2, 3}, p.beta, p.gamma, p.rho)
except OrderingError as exc:
    print("ordering {0, 1, 2, 3}:", exc.code)

# Three routes to the same parameters for a U_q(sl2) pair.
print()
g = uq_sl2_pair(5, -1, 3, 2, 1)
r = verify_td_pair(g.A, g.Astar)
solver = solve_param_sequence(g.A, g.Astar).particular
from_seq = params_from_sequences(r.eig_seq, r.dual_eig_seq).particular
from_cf = params_from_closed_form(fit_closed_form(r.eig_seq), fit_closed_form(r.dual_eig_seq))
print("eigenvalues:     ", fmt(r.eig_seq))
print("dual eigenvalues:", fmt(r.dual_eig_seq))
print("matrix solver:   ", fmt(solver.as_tuple()))
print("sequences:       ", fmt(from_seq.as_tuple()))
print("closed forms:    ", fmt(from_cf.as_tuple()))
print("special case:    ", detect_special_case(solver))

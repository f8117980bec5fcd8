"""Leonard pairs from the Krawtchouk and U_q(sl2) families.

Run: python3 demos/01_leonard_pairs.py
"""

from tdkit import krawtchouk_pair, paper_4x4, rat_str, solve_param_sequence, uq_sl2_pair, verify_td_pair
from tdkit.linalg import Mat


def show(M):
    width = max(len(rat_str(x)) for x in M.flat())
    for row in M.tolist():
        print("   ", " ".join(rat_str(x).rjust(width) for x in row))


def params_str(p):
    return "(" + ", ".join(rat_str(x) for x in p.as_tuple()) + ")"


# The 4x4 pair: A is irreducible tridiagonal, A* is diagonal, and P swaps them.
g = paper_4x4()
print("A =")
show(g.A)
print("A* =")
show(g.Astar)
P = g.witness
print("P^2 == 8 I:", P @ P == 8 * Mat.identity(4))
print("A P == P A*:", g.A @ P == P @ g.Astar)

report = verify_td_pair(g.A, g.Astar)
print("Leonard pair:", report.is_leonard_pair, "| diameter", report.diameter, "| shape", report.shape)
print("eigenvalue sequence:", [rat_str(x) for x in report.eig_seq])
print("parameter sequence:", params_str(report.params.particular))

# The same pair in every diameter. The parameters stop depending on d at d = 3.
print()
for d in range(1, 7):
    g = krawtchouk_pair(d)
    sol = solve_param_sequence(g.A, g.Astar)
    extra = params_str(sol.particular) if sol.kind == "unique" else f"{len(sol.null_basis)}-dim family"
    print(f"Krawtchouk d={d}: P^2 = 2^d I: {g.witness @ g.witness == 2**d * Mat.identity(d + 1)}, params {extra}")

# U_q(sl2): A is lower bidiagonal, A* upper bidiagonal; the parameters are q-Serre.
print()
g = uq_sl2_pair(4, 1, 2, 1, 3)
print("U_q(sl2) module, d=4, q=4:")
print("A =")
show(g.A)
print("A* =")
show(g.Astar)
r = verify_td_pair(g.A, g.Astar)
print("Leonard pair:", r.is_leonard_pair, "| params", params_str(r.params.particular))
try:
    uq_sl2_pair(2, 1, 2, 1, "1/2")
except ValueError as exc:
    print("rejected:", exc)

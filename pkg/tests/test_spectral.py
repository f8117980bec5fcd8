import itertools
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from conftest import ROTATIONS, kron, spin_chain_pair
from tdkit.field import rat
from tdkit.generators import krawtchouk_pair, uq_sl2_pair
from tdkit.linalg import Mat
from tdkit.relations import DolanGrady, ParamSeq, QSerre, detect_special_case, solve_param_sequence
from tdkit.spectral import (
    ClosedForm,
    OrderingError,
    SequenceError,
    adjacency_poly,
    beta_from_sequence,
    fit_closed_form,
    is_arithmetic_progression,
    is_geometric_progression,
    order_eigenvalues,
    params_from_closed_form,
    params_from_sequences,
    verify_td_pair,
)

LEONARD = ([krawtchouk_pair(d) for d in range(3, 9)]
           + [uq_sl2_pair(d, e, p, a, s) for d, e, p, a, s in
              [(3, 1, 2, 1, 2), (4, 1, 3, 1, 1), (5, 1, "1/2", 2, 3), (6, -1, 2, 1, 1), (3, 1, 3, -1, "1/5")]])


# --- adjacency and ordering --------------------------------------------------------------


@pytest.mark.parametrize("args, expected", [((3, 1, 2, 0, 4), 0), ((3, -1, 2, 0, 4), 12), ((2, 2, 2, 0, 0), 0)])
def test_adjacency_poly(args, expected):
    assert adjacency_poly(*args) == expected


def test_order_examples():
    assert order_eigenvalues({3, 1, -1, -3}, 2, 0, 4) == (3, 1, -1, -3)
    assert order_eigenvalues({5}, 7, 1, 1) == (5,)


def test_order_disconnected():
    with pytest.raises(OrderingError) as exc:
        order_eigenvalues({0, 1, 2, 3}, 2, 0, 4)
    assert exc.value.code == "DISCONNECTED"


def test_order_cycle():
    # beta = -1: x^2 + xy + y^2 = 1 has the triangle 1, 0, -1
    with pytest.raises(OrderingError) as exc:
        order_eigenvalues({1, 0, -1}, -1, 0, 1)
    assert exc.value.code == "CYCLE"


@settings(max_examples=60)
@given(st.lists(st.integers(min_value=-30, max_value=30), min_size=3, max_size=12, unique=True),
       st.integers(min_value=-3, max_value=3), st.integers(min_value=-5, max_value=5),
       st.integers(min_value=0, max_value=60))
def test_adjacency_degree_never_exceeds_two(vals, beta, gamma, rho):
    # p(x, y) is quadratic in y, so a vertex has at most two neighbours
    for v in vals:
        assert sum(1 for w in vals if w != v and adjacency_poly(v, w, beta, gamma, rho) == 0) <= 2
    try:
        order_eigenvalues(set(vals), beta, gamma, rho)
    except OrderingError as exc:
        assert exc.code in ("CYCLE", "DISCONNECTED")


def _hamiltonian_paths(vals, beta, gamma, rho):
    edges = {frozenset((u, v)) for u, v in itertools.combinations(vals, 2)
             if adjacency_poly(u, v, beta, gamma, rho) == 0}
    paths = {perm for perm in itertools.permutations(vals)
             if all(frozenset(perm[i:i + 2]) in edges for i in range(len(perm) - 1))}
    return edges, paths


def _case_sequence(draw, n):
    case = draw(st.sampled_from(["I", "II", "III"]))
    coef = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    a, b, c = draw(coef), draw(coef), draw(coef)
    if case == "I":
        q = draw(st.sampled_from([2, 3, -2, F(1, 2), F(-3, 2), 5]))
        cf = ClosedForm("I", rat(q) + 1 / rat(q), rat(a), rat(b), rat(c), rat(q))
    else:
        cf = ClosedForm(case, 2 if case == "II" else -2, rat(a), rat(b), rat(c))
    return cf, [cf.value(i) for i in range(n)]


@st.composite
def closed_form_sequences(draw, min_n=4, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    cf, seq = _case_sequence(draw, n)
    assume(len(set(seq)) == n)
    return cf, seq


@settings(max_examples=60, deadline=None)
@given(closed_form_sequences(max_n=6))
def test_ordering_matches_path_enumeration(data):
    cf, seq = data
    sol = params_from_sequences(seq, seq)
    p = sol.particular
    edges, paths = _hamiltonian_paths(seq, p.beta, p.gamma, p.rho)
    try:
        got = order_eigenvalues(set(seq), p.beta, p.gamma, p.rho)
    except OrderingError:
        # then the adjacency graph is not one simple path
        assert len(edges) != len(seq) - 1 or not paths
        return
    assert paths == {got, tuple(reversed(got))}
    assert got[0] >= got[-1]
    assert tuple(seq) in paths


# --- verify_td_pair -------------------------------------------------------------------------------


def test_verify_four_by_four(pair4):
    r = verify_td_pair(pair4.A, pair4.Astar)
    assert r.is_td_pair and r.is_leonard_pair
    assert r.diameter == 3 and r.shape == (1, 1, 1, 1)
    assert r.eig_seq == (3, 1, -1, -3) and r.dual_eig_seq == (3, 1, -1, -3)
    assert r.params.particular == ParamSeq(2, 0, 0, 4, 4)
    assert r.word_span == 16


def test_verify_commuting_diagonals():
    r = verify_td_pair(Mat.diag([1, 2]), Mat.diag([3, 4]))
    assert not r.is_td_pair
    assert r.has("COND_IV_FAIL")
    assert r.invariant_subspace is not None


def test_verify_krawtchouk_5():
    g = krawtchouk_pair(5)
    r = verify_td_pair(g.A, g.Astar)
    assert r.is_td_pair and r.eig_seq == (5, 3, 1, -1, -3, -5)


def test_verify_not_split():
    r = verify_td_pair(Mat([[0, 2], [1, 0]]), Mat.diag([1, -1]))
    assert r.has("SPECTRUM_NOT_SPLIT") and r.has("COND_I_FAIL")


def test_verify_not_diagonalizable():
    r = verify_td_pair(Mat([[1, 1], [0, 1]]), Mat([[0, 0], [1, 0]]))
    assert r.has("NOT_DIAGONALIZABLE") and not r.is_td_pair


def test_verify_bad_ordering():
    # A* = diag(0, 1, 2, 3) with A a full matrix: no ordering is tridiagonal
    A = Mat([[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]])
    r = verify_td_pair(Mat.diag([0, 1, 2, 3]), A)
    assert r.has("COND_II_FAIL") and not r.is_td_pair


def test_verify_reducible_tensor_square():
    g1, g2 = krawtchouk_pair(1), krawtchouk_pair(2)
    I1, I2 = Mat.identity(2), Mat.identity(3)
    A = kron(g1.A, I2) + kron(I1, g2.A)
    S = kron(g1.Astar, I2) + kron(I1, g2.Astar)
    r = verify_td_pair(A, S)
    assert r.has("COND_IV_FAIL") and r.shape == (1, 2, 2, 1)
    assert r.invariant_subspace is not None


@pytest.mark.parametrize("k, shape", [(2, (1, 2, 1)), (3, (1, 3, 3, 1))])
def test_spin_chain_td_pairs(k, shape):
    A, S = spin_chain_pair(ROTATIONS[:k])
    r = verify_td_pair(A, S)
    assert r.is_td_pair and not r.is_leonard_pair
    assert r.shape == shape
    if k == 3:
        assert r.params.kind == "unique" and detect_special_case(r.params.particular) == DolanGrady(4, 4)
        assert any(n.code == "OUTSIDE_TMOD_HYPOTHESIS" for n in r.notes)
    else:
        assert any(n.code == "PARAMS_UNDERDETERMINED" for n in r.notes)


def test_spin_chain_equal_rotations_reducible():
    A, S = spin_chain_pair([ROTATIONS[0], ROTATIONS[0]])
    assert verify_td_pair(A, S).has("COND_IV_FAIL")


@pytest.mark.parametrize("g", LEONARD, ids=lambda g: g.label)
def test_report_invariants(g):
    r = verify_td_pair(g.A, g.Astar)
    assert r.is_leonard_pair and r.is_td_pair
    assert len(r.eig_seq) == len(r.dual_eig_seq) == r.diameter + 1
    assert r.params.particular == g.expected_params


def test_shape_symmetric_unimodal_on_all_td_pairs():
    pairs = [(g.A, g.Astar) for g in LEONARD] + [spin_chain_pair(ROTATIONS[:k]) for k in (2, 3)]
    for A, S in pairs:
        r = verify_td_pair(A, S)
        assert r.is_td_pair
        s, d = r.shape, len(r.shape) - 1
        assert all(s[i] == s[d - i] for i in range(d + 1))
        assert all(s[i - 1] <= s[i] for i in range(1, d // 2 + 1))


# --- sequences -----------------------------------------------------------------------------------


@pytest.mark.parametrize("seq, beta", [((3, 1, -1, -3), 2), ((1, 2, 4, 8), F(5, 2))])
def test_beta_from_sequence(seq, beta):
    assert beta_from_sequence(seq) == beta


@pytest.mark.parametrize("seq", [(0, 1, 2, 4, 8), (1, 2, 3)])
def test_beta_from_sequence_failures(seq):
    with pytest.raises(SequenceError):
        beta_from_sequence(seq)


def test_params_from_sequences_examples():
    assert params_from_sequences((3, 1, -1, -3), (3, 1, -1, -3)).particular == ParamSeq(2, 0, 0, 4, 4)
    sol = params_from_sequences((1, 2, 4, 8), (1, 2, 4, 8))
    assert sol.kind == "unique" and sol.particular == ParamSeq(F(5, 2), 0, 0, 0, 0)
    fam = params_from_sequences((0, 1), (0, 1))
    assert fam.kind == "family"
    assert any(v[0] != 0 for v in fam.null_basis)


def test_params_from_sequences_errors():
    with pytest.raises(ValueError):
        params_from_sequences((1, 2, 3, 4), (1, 2, 3))
    with pytest.raises(SequenceError):
        params_from_sequences((0, 1, 2, 4, 8), (0, 1, 2, 3, 4))


@settings(max_examples=40, deadline=None)
@given(closed_form_sequences())
def test_params_beta_is_reversal_invariant(data):
    _, seq = data
    assert params_from_sequences(seq, seq).particular.beta == params_from_sequences(seq[::-1], seq[::-1]).particular.beta


def test_fit_examples():
    cf = fit_closed_form((3, 1, -1, -3))
    assert (cf.case, cf.a, cf.b, cf.c) == ("II", 3, -2, 0)
    cf = fit_closed_form((1, 2, 4, 8))
    assert (cf.case, cf.q, cf.a, cf.b, cf.c) == ("I", 2, 0, 1, 0)
    cf = fit_closed_form((1, -2, 3, -4))
    assert cf.case == "III" and cf.beta == -2
    assert [cf.value(i) for i in range(4)] == [1, -2, 3, -4]


def test_fit_case_three_brute_force():
    # solve a + b(-1)^i + c i (-1)^i on the first three terms by hand
    seq = (1, -2, 3, -4)
    # i=0: a+b=1; i=1: a-b-c=-2; i=2: a+b+2c=3  ->  c=1, a=0, b=1
    cf = fit_closed_form(seq)
    assert (cf.a, cf.b, cf.c) == (0, 1, 1)


def test_fit_short_and_irrational():
    assert fit_closed_form((1, 2)).case is None
    # beta = 3 gives q = (3 + sqrt 5)/2
    cf = fit_closed_form((0, 1, 3, 8))
    assert cf.case == "I" and cf.beta == 3 and not cf.is_complete


def test_fit_inconsistent():
    # beta from ratios is 2, but the tail is not quadratic
    with pytest.raises(SequenceError):
        fit_closed_form((0, 1, 2, 3, 5))


@settings(max_examples=60, deadline=None)
@given(closed_form_sequences())
def test_fit_recovers_generating_model(data):
    cf, seq = data
    fit = fit_closed_form(seq)
    assert fit.case == cf.case
    assert [fit.value(i) for i in range(len(seq))] == seq
    if fit.case == "I":
        assert abs(fit.q) > 1


def test_params_from_closed_form_examples():
    cf = ClosedForm("II", 2, 3, -2, 0)
    assert params_from_closed_form(cf, cf) == ParamSeq(2, 0, 0, 4, 4)
    assert params_from_closed_form(ClosedForm("II", 2, 1, 5, 0), ClosedForm("II", 2, 7, -3, 0)) == ParamSeq(2, 0, 0, 25, 9)
    g = ClosedForm("I", F(5, 2), 0, 1, 0, 2)
    assert params_from_closed_form(g, g) == ParamSeq(F(5, 2), 0, 0, 0, 0)


def test_params_from_closed_form_mismatch():
    with pytest.raises(ValueError):
        params_from_closed_form(ClosedForm("II", 2, 0, 1, 0), ClosedForm("III", -2, 0, 1, 0))
    with pytest.raises(ValueError):
        params_from_closed_form(ClosedForm("I", F(5, 2), 0, 1, 0, 2), ClosedForm("I", F(10, 3), 0, 1, 0, 3))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_closed_form_agrees_with_sequence_solver(data):
    cf, seq = data.draw(closed_form_sequences())
    # dual in the same case and, for case I, the same q
    n = len(seq)
    coef = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    a, b, c = (rat(data.draw(coef)) for _ in range(3))
    cf_star = ClosedForm(cf.case, cf.beta, a, b, c, cf.q)
    dual = [cf_star.value(i) for i in range(n)]
    assume(len(set(dual)) == n)
    assert params_from_sequences(seq, dual).particular == params_from_closed_form(fit_closed_form(seq),
                                                                                  fit_closed_form(dual))


def test_progressions():
    assert is_arithmetic_progression((3, 1, -1, -3), -2)
    assert is_geometric_progression((1, 2, 4, 8), 2)
    assert not is_arithmetic_progression((1, 2, 4, 8), 1)
    with pytest.raises(ValueError):
        is_geometric_progression((1, 2), 0)


# --- special cases versus progressions ------------------------------------------------------------


def _arith_step(seq):
    step = seq[1] - seq[0]
    return step if is_arithmetic_progression(seq, step) else None


def _geom_ratio(seq):
    if seq[0] == 0:
        return None
    r = seq[1] / seq[0]
    return r if r not in (0, 1, -1) and is_geometric_progression(seq, r) else None


def _check_progression_agreement(p, seq, dual):
    case = detect_special_case(p)
    b, bs = _arith_step(seq), _arith_step(dual)
    assert isinstance(case, DolanGrady) == (b is not None and bs is not None)
    if isinstance(case, DolanGrady):
        assert (case.b_sq, case.bstar_sq) == (b * b, bs * bs)
    r, rs = _geom_ratio(seq), _geom_ratio(dual)
    assert isinstance(case, QSerre) == (r is not None and rs is not None)
    if isinstance(case, QSerre):
        assert case.beta == r + 1 / r


@pytest.mark.parametrize("g", LEONARD, ids=lambda g: g.label)
def test_special_case_matches_progressions_on_generated(g):
    r = verify_td_pair(g.A, g.Astar)
    _check_progression_agreement(r.params.particular, r.eig_seq, r.dual_eig_seq)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_special_case_matches_progressions_constructed(data):
    kind = data.draw(st.sampled_from(["arith", "geom", "any"]))
    n = data.draw(st.integers(min_value=4, max_value=6))
    small = st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(lambda x: x != 0)
    if kind == "arith":
        seqs = [[data.draw(small) + i * data.draw(small) for i in range(n)] for _ in range(2)]
        seqs = [[s[0] + i * (s[1] - s[0]) for i in range(n)] for s in seqs]
    elif kind == "geom":
        q = data.draw(st.sampled_from([2, -3, F(1, 2), F(2, 3)]))
        seqs = [[data.draw(small) * F(q) ** i for i in range(n)] for _ in range(2)]
        seqs = [[s[0] * F(q) ** i for i in range(n)] for s in seqs]
    else:
        cf, seq = _case_sequence(data.draw, n)
        dual_cf = ClosedForm(cf.case, cf.beta, rat(data.draw(small)), rat(data.draw(small)), rat(data.draw(small)), cf.q)
        seqs = [seq, [dual_cf.value(i) for i in range(n)]]
    seq, dual = ([rat(x) for x in s] for s in seqs)
    assume(len(set(seq)) == n and len(set(dual)) == n)
    sol = params_from_sequences(seq, dual)
    assume(sol.kind == "unique")
    _check_progression_agreement(sol.particular, seq, dual)


# --- consistency triangle ---------------------------------------------------------------------------


@pytest.mark.parametrize("g", LEONARD, ids=lambda g: g.label)
def test_consistency_triangle(g):
    r = verify_td_pair(g.A, g.Astar)
    solver = solve_param_sequence(g.A, g.Astar).particular
    from_seq = params_from_sequences(r.eig_seq, r.dual_eig_seq).particular
    from_cf = params_from_closed_form(fit_closed_form(r.eig_seq), fit_closed_form(r.dual_eig_seq))
    assert solver == from_seq == from_cf

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from agclcp import codes
from agclcp.catalog import SCALED_F4_M1
from agclcp.codes import BudgetExceeded, LinearCode, code_from_rows
from agclcp.gf import gf
from agclcp.linalg import Matrix


def code(F, rows, n=None):
    return code_from_rows(Matrix.from_rows(F, rows, n))


def rs(q=5, k=2, alphas=(1, 2, 3, 4)):
    F = gf(q)
    return code(F, [[F.pow(a, j) if a else int(j == 0) for a in alphas] for j in range(k)])


def all_words(C):
    F = C.field
    for coeffs in itertools.product(range(F.q), repeat=C.k):
        w = [0] * C.n
        for c, row in zip(coeffs, C.gen.rows):
            w = [F.add(x, F.mul(c, y)) for x, y in zip(w, row)]
        yield tuple(w)


def test_basic_dimensions():
    F = gf(4)
    assert code(F, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]).k == 3
    assert code(F, [[0, 0, 0]]).k == 0
    assert code(F, SCALED_F4_M1).k == 3


def test_dual_extremes():
    F = gf(3)
    assert codes.dual(codes.zero_code(F, 4)).k == 4
    assert codes.dual(codes.full_space(F, 3)).k == 0


def test_hull_small():
    F = gf(2)
    assert codes.hull_dimension(code(F, [[1, 1]])) == 1
    # full space GF(2)^2: hull is C ∩ C⊥ = {0}
    full = codes.full_space(F, 2)
    brute = [v for v in itertools.product(range(2), repeat=2)
             if all(sum(a * b for a, b in zip(v, u)) % 2 == 0 for u in itertools.product(range(2), repeat=2))]
    assert codes.hull_dimension(full) == 0 and brute == [(0, 0)]


def test_hull_scaled_example_by_enumeration():
    F = gf(4)
    C = code(F, SCALED_F4_M1)
    words = list(all_words(C))
    in_hull = [u for u in words if all(_dot(F, u, v) == 0 for v in words)]
    assert len(in_hull) == 4 ** codes.hull_dimension(C)


def _dot(F, u, v):
    acc = 0
    for a, b in zip(u, v):
        acc = F.add(acc, F.mul(a, b))
    return acc


def test_min_distance_examples():
    F = gf(2)
    assert codes.min_distance(code(F, [[1, 1, 1]])) == 3
    assert codes.min_distance(codes.full_space(gf(3), 4)) == 1
    C = rs()
    assert codes.min_distance(C) == 3 == codes.min_distance_bruteforce(C)
    assert codes.is_mds(C)
    assert codes.is_mds(code(F, [[1, 1, 1]]))
    with pytest.raises(ValueError):
        codes.min_distance(codes.zero_code(F, 3))


def test_budget_is_enforced():
    C = codes.full_space(gf(16), 7)
    with pytest.raises(BudgetExceeded):
        codes.min_distance_bruteforce(C, budget=1000)


def test_lcp_small():
    F = gf(2)
    assert codes.is_lcp_pair(code(F, [[1, 0]]), code(F, [[0, 1]]))
    C = code(F, [[1, 1]])
    assert not codes.is_lcp_pair(C, C)


def test_security_parameter():
    F = gf(3)
    C = code(F, [[1, 1, 0]])
    assert codes.is_lcd(C)
    assert codes.security_parameter(C, codes.dual(C)) == codes.min_distance(C)
    full, zero = codes.full_space(F, 2), codes.zero_code(F, 2)
    assert codes.security_parameter(full, zero) == 1


def test_scale_and_permute():
    F = gf(4)
    C = code(F, SCALED_F4_M1)
    assert codes.scale(C, [1] * 6) == C
    assert codes.permute(C, range(6)) == C
    assert codes.weight_enumerator(code(gf(2), [[1, 1]])).counts == (1, 0, 1)


def test_equivalence_examples():
    F = gf(3)
    C1 = code(F, [[1, 1]])
    C2 = code(F, [[1, 2]])
    v = codes.equivalence_evidence(C1, C2)
    assert v.kind == "equivalent" and v.a == (1, 2)
    assert codes.apply_equivalence(C1, v.sigma, v.a) == C2
    assert codes.equivalence_evidence(C1, C1).sigma == (0, 1)
    rep = code(gf(2), [[1, 1, 1]])
    assert codes.equivalence_evidence(rep, code(gf(2), [[1, 1, 0]])).kind == "refuted"
    assert codes.equivalence_evidence(rs(), rs(), budget=10).kind == "unknown"
    assert codes.equivalence_evidence(rs(), codes.dual(codes.dual(rs()))).sigma == (0, 1, 2, 3)


def test_macwilliams_matches_enumeration():
    C = rs()
    we = codes._enumerate_weights(C, codes.DISTANCE_BUDGET)
    dual_we = codes._enumerate_weights(codes.dual(C), codes.DISTANCE_BUDGET)
    assert codes.macwilliams(we, 5) == dual_we


@st.composite
def random_codes(draw, max_q_n=2**12):
    q = draw(st.sampled_from([2, 3, 4, 5, 7, 8]))
    F = gf(q)
    n = draw(st.integers(1, 6))
    while q ** n > max_q_n:
        n -= 1
    k = draw(st.integers(0, n))
    rows = [[draw(st.integers(0, q - 1)) for _ in range(n)] for _ in range(k)]
    return code_from_rows(Matrix(F, tuple(map(tuple, rows)), n))


@st.composite
def code_pairs(draw):
    C = draw(random_codes())
    F, n = C.field, C.n
    k = draw(st.one_of(st.just(n - C.k), st.integers(0, n)))
    rows = [[draw(st.integers(0, F.q - 1)) for _ in range(n)] for _ in range(k)]
    return C, code_from_rows(Matrix(F, tuple(map(tuple, rows)), n))


@settings(max_examples=250)
@given(code_pairs())
def test_lcp_vs_unique_decomposition(pair):
    C, D = pair
    F = C.field
    # (c, d) -> c + d must be a bijection onto F^n; a size mismatch rules that out
    unique = C.k + D.k == C.n
    if unique:
        Dw = list(all_words(D))
        sums = {tuple(F.add(a, b) for a, b in zip(u, v)) for u in all_words(C) for v in Dw}
        unique = len(sums) == F.q ** C.n
    assert codes.is_lcp_pair(C, D) == unique


@settings(max_examples=250)
@given(random_codes(), st.data())
def test_dual_of_scaled_code(C, data):
    F = C.field
    a = [data.draw(st.integers(1, F.q - 1)) for _ in range(C.n)]
    lhs = codes.dual(codes.scale(C, a))
    rhs = codes.scale(codes.dual(C), codes.invert_vector(F, a))
    assert lhs == rhs


@settings(max_examples=200)
@given(random_codes())
def test_hull_and_distance_consistency(C):
    # hull_dimension raises if its two formulas disagree
    h = codes.hull_dimension(C)
    assert 0 <= h <= min(C.k, C.n - C.k)
    if C.k:
        assert codes.min_distance(C) == codes.min_distance_bruteforce(C)
        assert codes.min_distance(C) <= C.n - C.k + 1

import pytest
from hypothesis import assume, given, settings, strategies as st

from agclcp import codes
from agclcp.agcode import (
    AgCodeSpec,
    PreconditionError,
    SupportOverlap,
    check_genus0_lcp,
    check_genus1_lcp,
    check_lcp,
    construct_elliptic_lcp,
    construct_mds_scaled_pair,
    construct_scaled_pair,
    duality_evidence,
    evaluation_code,
    omega_code,
    search_scaling_function,
)
from agclcp.catalog import (
    SCALED_F4_M1,
    f4_curve,
    f4_specs,
    f8_curve,
    line_example,
    rs_specs,
    scaled_f4_h,
    scaled_f4_spec,
)
from agclcp.curve import Divisor, div_gcd, div_lmd, points_over_x, projective_line, rational_points, x_components
from agclcp.gf import gf
from agclcp.linalg import Matrix, row_space_equal, row_space_includes, stack
from agclcp.rrspace import CurveFunction, ell


def test_empty_divisor_gives_constants(f4):
    D = rational_points(f4)[1:]
    C = evaluation_code(AgCodeSpec(f4, Divisor(), D))
    assert C.k == 1 and C.gen.rows == ((1,) * len(D),)


def test_published_generator_matrix():
    spec = scaled_f4_spec()
    M1 = Matrix.from_rows(spec.curve.field, SCALED_F4_M1)
    assert row_space_equal(evaluation_code(spec).gen, M1)


def test_reed_solomon_identification():
    F = gf(5)
    X = projective_line(F)
    D = rational_points(X)[1:]
    for k in range(1, 5):
        C = evaluation_code(AgCodeSpec(X, Divisor({X.infinity: k - 1}), D))
        rows = [[F.pow(a, j) if a else int(j == 0) for a in range(5)] for j in range(k)]
        assert C == codes.code_from_rows(Matrix.from_rows(F, rows))


def test_omega_code():
    specG, specH = rs_specs()
    W = omega_code(specG)
    assert (W.n, W.k, codes.min_distance_bruteforce(W)) == (4, 2, 3)
    assert W == evaluation_code(specH)
    X = specG.curve
    full = AgCodeSpec(X, Divisor({X.infinity: 5}), specG.D)
    assert omega_code(full).k == 0


def test_support_overlap_named(f4_pts):
    E = f4_curve()
    with pytest.raises(SupportOverlap, match=r"\(w:w:1\)"):
        AgCodeSpec(E, Divisor({f4_pts["P2"]: 1}), [f4_pts["P2"], f4_pts["P3"]])


def test_f4_pair():
    specG, specH = f4_specs()
    r = check_genus1_lcp(specG, specH)
    assert r.is_lcp and r.hypotheses_hold and all(r.checklist.values())
    assert (r.n, r.k_C, r.k_D) == (7, 4, 3)
    C, E = evaluation_code(specG), evaluation_code(specH)
    assert r.security_parameter == min(codes.min_distance(C), codes.min_distance(codes.dual(E)))


def test_line_pair():
    r = line_example(8, 2).report
    assert r.is_lcp and r.checklist["deg(gcd(G,H))=g-1"]


def test_identical_divisors_not_lcp():
    specG, _ = f4_specs()
    assert not check_genus1_lcp(specG, specG).is_lcp
    X = projective_line(gf(7))
    s = AgCodeSpec(X, Divisor({X.infinity: 2}), rational_points(X)[1:])
    assert not check_genus0_lcp(s, s).is_lcp


def test_principal_gcd_fails_hypothesis(f4_pts):
    E = f4_curve()
    O, P2 = f4_pts["O"], f4_pts["P2"]
    P2n = [P for P in rational_points(E) if P.x == P2.x and P != P2][0]
    gcd = Divisor({P2: 1, P2n: 1, O: -2})  # divisor of x - x(P2)
    D = [P for P in rational_points(E) if P not in gcd.support]
    R = f4_pts["P5"]
    G = gcd + Divisor({O: 3})
    H = gcd + Divisor({R: 2})
    D = [P for P in D if P != R]
    r = check_genus1_lcp(AgCodeSpec(E, G, D), AgCodeSpec(E, H, D))
    assert not r.checklist["gcd(G,H) non-special"]
    assert r.details["gcd_principal"]


def test_mismatched_D_rejected():
    specG, specH = f4_specs()
    with pytest.raises(ValueError):
        check_lcp(specG, AgCodeSpec(specH.curve, specH.G, specH.D[:-1]))


def test_elliptic_construction_f8():
    E = f8_curve()
    F = E.field
    comps = [F.w ** i for i in range(2, 7)]
    specG, specH, r = construct_elliptic_lcp(E, F.w, 4, 5, comps)
    _, Pm = points_over_x(E, F.w)
    assert specH.G == Divisor({E.infinity: 6, Pm: -4})
    assert r.is_lcp and r.hypotheses_hold and r.n == 10


def test_elliptic_construction_preconditions():
    E = f8_curve()
    F = E.field
    with pytest.raises(PreconditionError):
        construct_elliptic_lcp(E, F.w, 13, 14)  # every point is 13-torsion
    with pytest.raises(PreconditionError):
        construct_elliptic_lcp(E, F.w, 3, 3)
    with pytest.raises(PreconditionError):
        construct_elliptic_lcp(E, F.w, 2, 6)  # only 5 further components


def test_scaled_pair_published_example():
    spec = scaled_f4_spec()
    F = spec.curve.field
    a, r = construct_scaled_pair(spec, scaled_f4_h(spec.curve))
    assert [str(x) for x in a] == ["1", "0", "0", "1", "w", "w^2"]
    assert r.is_lcp == codes.is_lcp_pair(evaluation_code(spec), codes.scale(evaluation_code(spec), a))
    _, r1 = construct_scaled_pair(spec, CurveFunction.const(spec.curve, F.one))
    assert not r1.checklist["h(D) not all-one"] and not r1.hypotheses_hold


def test_scaling_function_search():
    spec = scaled_f4_spec()
    h, a, r = search_scaling_function(spec)
    assert all(a) and r.hypotheses_hold and r.is_lcp


def test_mds_scaled_pair_rs():
    specG, specH = rs_specs()
    a, r = construct_mds_scaled_pair(specG, specH)
    assert a is not None and all(a) and r.is_lcp
    aC = codes.scale(evaluation_code(specG), a)
    assert codes.is_lcp_pair(aC, evaluation_code(specH))


def test_mds_scaled_pair_disjoint_uses_ones():
    X = projective_line(gf(5))
    D = rational_points(X)[1:]
    Q = X.affine(0)
    G = Divisor({X.infinity: 2, Q: -2})
    H = Divisor({X.infinity: 1, Q: 1})
    specG = AgCodeSpec(X, G, [P for P in D if P != Q])
    specH = AgCodeSpec(X, H, specG.D)
    assert codes.is_lcp_pair(evaluation_code(specG), evaluation_code(specH))
    a, r = construct_mds_scaled_pair(specG, specH)
    assert [x.index for x in a] == [1] * specG.n


def test_mds_scaled_pair_needs_q3():
    X = projective_line(gf(2))
    D = rational_points(X)[1:]
    s = AgCodeSpec(X, Divisor({X.infinity: 0}), D)
    with pytest.raises(PreconditionError):
        construct_mds_scaled_pair(s, s)


def test_duality_evidence():
    entry = line_example(8, 2)
    assert entry.extra["duality"]["both_mds"]
    assert entry.extra["duality"]["verdict"]["verdict"] != "refuted"
    specG, specH = f4_specs()
    with pytest.raises(PreconditionError):
        duality_evidence(specG, specG)
    specG, specH = rs_specs()
    with pytest.raises(PreconditionError):
        duality_evidence(specG, specH)  # RS_2 meets its dual


# -- randomized ------------------------------------------------------------------------------


CURVES = [f4_curve(), f8_curve(), projective_line(gf(5)), projective_line(gf(8)), projective_line(gf(9))]


@st.composite
def pair_instances(draw):
    E = draw(st.sampled_from(CURVES))
    pts = rational_points(E)
    support = draw(st.lists(st.sampled_from(pts), min_size=1, max_size=3, unique=True))
    G = Divisor({P: draw(st.integers(-2, 5)) for P in support})
    H = Divisor({P: draw(st.integers(-2, 5)) for P in support})
    free = [P for P in pts if P not in support]
    D = draw(st.lists(st.sampled_from(free), min_size=1, max_size=len(free), unique=True))
    return AgCodeSpec(E, G, D), AgCodeSpec(E, H, D)


@settings(max_examples=200)
@given(pair_instances())
def test_lemma_inclusions(pair):
    specG, specH = pair
    C, E = evaluation_code(specG), evaluation_code(specH)
    low = evaluation_code(specG.with_divisor(div_gcd(specG.G, specH.G)))
    high = evaluation_code(specG.with_divisor(div_lmd(specG.G, specH.G)))
    assert codes.contains(C, low) and codes.contains(E, low)
    assert row_space_includes(high.gen, stack(C.gen, E.gen))


@settings(max_examples=200)
@given(pair_instances())
def test_dimension_and_goppa_bound(pair):
    spec, _ = pair
    C = evaluation_code(spec)
    deg = spec.G.degree
    if deg < spec.n:
        assert C.k == ell(spec.curve, spec.G)
        if C.k:
            assert codes.min_distance(C) >= spec.n - deg


@settings(max_examples=200)
@given(pair_instances())
def test_criteria_never_contradicted(pair):
    assert check_lcp(*pair, budget=0).consistent


@st.composite
def genus0_hypotheses(draw):
    q = draw(st.sampled_from([4, 5, 7, 8, 9]))
    X = projective_line(gf(q))
    pts = rational_points(X)
    P, R = draw(st.lists(st.sampled_from(pts), min_size=2, max_size=2, unique=True))
    D = [T for T in pts if T not in (P, R)]
    n = len(D)
    g1, h1 = draw(st.integers(-3, n)), draw(st.integers(-3, n))
    g2 = -1 - min(g1, h1)
    h2 = n - 2 - g1 - h1 - g2
    assume(h2 >= g2)
    if draw(st.booleans()):
        g2, h2 = h2, g2
    G, H = Divisor({P: g1, R: g2}), Divisor({P: h1, R: h2})
    assume(-2 < G.degree < n and -2 < H.degree < n)
    return AgCodeSpec(X, G, D), AgCodeSpec(X, H, D)


@settings(max_examples=200)
@given(genus0_hypotheses())
def test_genus0_criterion_soundness(pair):
    r = check_genus0_lcp(*pair, budget=0)
    assert r.hypotheses_hold and r.is_lcp


@st.composite
def elliptic_constructions(draw):
    E = draw(st.sampled_from([f4_curve(), f8_curve()]))
    comps = x_components(E)
    alpha0 = draw(st.sampled_from(comps))
    rest = [a for a in comps if a != alpha0]
    s = draw(st.integers(2, len(rest)))
    chosen = draw(st.permutations(rest))[:s]
    r = draw(st.integers(1, s - 1))
    return E, alpha0, r, s, chosen


@settings(max_examples=200)
@given(elliptic_constructions())
def test_elliptic_construction_soundness(args):
    E, alpha0, r, s, chosen = args
    try:
        _, _, rep = construct_elliptic_lcp(E, alpha0, r, s, chosen, budget=0)
    except PreconditionError:
        assume(False)
    assert rep.consistent
    if rep.hypotheses_hold:
        assert rep.is_lcp


@settings(max_examples=200)
@given(st.sampled_from([3, 4, 5, 7]), st.data())
def test_mds_witness_validity(q, data):
    F = gf(q)
    X = projective_line(F)
    pts = rational_points(X)[1:]
    n = data.draw(st.integers(2, len(pts)))
    D = data.draw(st.permutations(pts))[:n]
    k = data.draw(st.integers(1, n - 1))
    specG = AgCodeSpec(X, Divisor({X.infinity: k - 1}), D)
    specH = AgCodeSpec(X, Divisor({X.infinity: n - k - 1}), D)
    a, r = construct_mds_scaled_pair(specG, specH, codes.Budgets(codes.DISTANCE_BUDGET, 10**5))
    if a is not None:
        C = evaluation_code(specG)
        aC = codes.scale(C, a)
        assert codes.is_lcp_pair(aC, evaluation_code(specH))
        assert codes.dual(aC) == codes.scale(codes.dual(C), codes.invert_vector(F, a))

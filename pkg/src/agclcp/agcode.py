"""Evaluation codes C_L(D, G) and linear-complementary-pair constructions.

Every check returns an :class:`LcpReport` that carries the hypothesis
checklist of the criterion next to the ground-truth rank test, so a criterion
whose hypotheses hold but whose conclusion fails shows up as data
(``consistent = False``) rather than as an exception.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import codes
from .codes import BudgetExceeded, Budgets, LinearCode, Verdict
from .curve import (
    ELLIPTIC,
    LINE,
    Curve,
    Divisor,
    Point,
    div_gcd,
    div_lmd,
    in_torsion,
    is_principal,
    points_over_x,
    x_components,
)
from .gf import FieldElement
from .linalg import Matrix, rank, rref
from .rrspace import CurveFunction, divisor, ell, evaluate, in_space, is_nonspecial, rr_basis, span_matrix


class SupportOverlap(ValueError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class AgCodeSpec:
    curve: Curve
    G: Divisor
    D: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "D", tuple(self.D))
        if len(set(self.D)) != len(self.D):
            raise ValueError("evaluation points must be distinct")
        for P in self.D:
            if not self.curve.contains(P):
                raise ValueError(f"evaluation point {P} is not on the curve")
        for P in self.D:
            if P in self.G.support:
                raise SupportOverlap(f"evaluation point {P} lies in supp(G)")

    @property
    def n(self) -> int:
        return len(self.D)

    @property
    def degree_in_window(self) -> bool:
        """2g - 2 < deg(G) < n."""
        return 2 * self.curve.genus - 2 < self.G.degree < self.n

    def with_divisor(self, G: Divisor) -> "AgCodeSpec":
        return AgCodeSpec(self.curve, G, self.D)


def generator_matrix(spec: AgCodeSpec) -> Matrix:
    """Evaluations of the L(G) basis at D, one row per basis function."""
    F = spec.curve.field
    rows = tuple(tuple(evaluate(f, P).index for P in spec.D) for f in rr_basis(spec.curve, spec.G))
    return Matrix(F, rows, spec.n)


def evaluation_code(spec: AgCodeSpec) -> LinearCode:
    return codes.code_from_rows(generator_matrix(spec))


def omega_code(spec: AgCodeSpec) -> LinearCode:
    """C_Ω(D, G), realized as the dual of C_L(D, G)."""
    return codes.dual(evaluation_code(spec))


@dataclass
class LcpReport:
    kind: str
    n: int
    k_C: int
    k_D: int
    is_lcp: bool
    checklist: dict[str, bool]
    hypotheses_hold: bool
    consistent: bool
    security_parameter: int | None = None
    notes: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "k_C": self.k_C,
            "k_D": self.k_D,
            "is_lcp": self.is_lcp,
            "checklist": dict(self.checklist),
            "hypotheses_hold": self.hypotheses_hold,
            "consistent": self.consistent,
            "security_parameter": self.security_parameter,
            "details": self.details,
            "witnesses": self.witnesses,
            "notes": list(self.notes),
        }


def _security(C: LinearCode, D: LinearCode, is_lcp: bool, budget: int, notes: list[str]) -> int | None:
    if not is_lcp:
        return None
    try:
        return codes.security_parameter(C, D, budget)
    except BudgetExceeded as exc:
        notes.append(f"security parameter not computed: {exc}")
        return None


def _shared(specG: AgCodeSpec, specH: AgCodeSpec):
    if specG.curve != specH.curve:
        raise ValueError("the two specs live on different curves")
    if specG.D != specH.D:
        raise ValueError("the two specs use different evaluation points D")


def _pair_basics(specG: AgCodeSpec, specH: AgCodeSpec):
    curve, n, g = specG.curve, specG.n, specG.curve.genus
    G, H = specG.G, specH.G
    C, E = evaluation_code(specG), evaluation_code(specH)
    gcd, lmd = div_gcd(G, H), div_lmd(G, H)
    lmd_D = lmd - Divisor((P, 1) for P in specG.D)
    ellG, ellH = ell(curve, G), ell(curve, H)
    checklist = {
        "ell(G)+ell(H)=n": ellG + ellH == n,
        "2g-2<deg(G)<n": 2 * g - 2 < G.degree < n,
        "2g-2<deg(H)<n": 2 * g - 2 < H.degree < n,
        "deg(gcd(G,H))=g-1": gcd.degree == g - 1,
    }
    details = {
        "genus": g,
        "deg_G": G.degree,
        "deg_H": H.degree,
        "ell_G": ellG,
        "ell_H": ellH,
        "gcd": gcd.to_json(),
        "deg_gcd": gcd.degree,
        "lmd_minus_D_degree": lmd_D.degree,
    }
    return C, E, gcd, lmd_D, checklist, details


def check_genus0_lcp(specG: AgCodeSpec, specH: AgCodeSpec, budget: int = codes.DISTANCE_BUDGET) -> LcpReport:
    """Degree criterion on the projective line: deg(gcd(G, H)) = -1 forces an LCP."""
    _shared(specG, specH)
    if specG.curve.genus != 0:
        raise ValueError("genus-0 criterion applied to a curve of positive genus")
    C, E, gcd, _, checklist, details = _pair_basics(specG, specH)
    is_lcp = codes.is_lcp_pair(C, E)
    hyp = all(checklist.values())
    notes: list[str] = []
    consistent = is_lcp or not hyp
    # converse direction: LCP with gcd non-special forces deg(gcd) = g - 1
    gcd_nonspecial = is_nonspecial(specG.curve, gcd)
    details["gcd_nonspecial"] = gcd_nonspecial
    window = checklist["2g-2<deg(G)<n"] and checklist["2g-2<deg(H)<n"]
    if is_lcp and window and gcd_nonspecial and not checklist["deg(gcd(G,H))=g-1"]:
        consistent = False
        notes.append("LCP with non-special gcd but deg(gcd) != g-1")
    if not hyp:
        notes.append("criterion not applicable; rank test reported as ground truth")
    return LcpReport(
        "genus0", specG.n, C.k, E.k, is_lcp, checklist, hyp, consistent,
        _security(C, E, is_lcp, budget, notes), notes, details,
    )


def check_genus1_lcp(specG: AgCodeSpec, specH: AgCodeSpec, budget: int = codes.DISTANCE_BUDGET) -> LcpReport:
    """Non-speciality criterion: gcd(G, H) and lmd(G, H) - D non-special, deg(gcd) = g - 1."""
    _shared(specG, specH)
    curve = specG.curve
    if curve.genus == 0:
        raise ValueError("positive-genus criterion applied to the projective line")
    C, E, gcd, lmd_D, checklist, details = _pair_basics(specG, specH)
    checklist["gcd(G,H) non-special"] = is_nonspecial(curve, gcd)
    checklist["lmd(G,H)-D non-special"] = is_nonspecial(curve, lmd_D)
    # degree-0 divisors on an elliptic curve are non-special iff not principal
    details["gcd_principal"] = is_principal(curve, gcd)
    details["lmd_minus_D_principal"] = is_principal(curve, lmd_D)
    for key, D0, flag in (("gcd(G,H) non-special", gcd, "gcd_principal"),
                          ("lmd(G,H)-D non-special", lmd_D, "lmd_minus_D_principal")):
        if D0.degree == 0 and checklist[key] == details[flag]:
            raise ArithmeticError(f"{key}: Riemann-Roch and group law disagree")
    is_lcp = codes.is_lcp_pair(C, E)
    hyp = all(checklist.values())
    notes: list[str] = []
    consistent = is_lcp or not hyp
    window = checklist["2g-2<deg(G)<n"] and checklist["2g-2<deg(H)<n"]
    if is_lcp and window and checklist["deg(gcd(G,H))=g-1"]:
        if not (checklist["gcd(G,H) non-special"] and checklist["lmd(G,H)-D non-special"]):
            consistent = False
            notes.append("LCP with deg(gcd) = g-1 but a divisor is special")
    if not hyp:
        notes.append("criterion not applicable; rank test reported as ground truth")
    return LcpReport(
        "genus1", specG.n, C.k, E.k, is_lcp, checklist, hyp, consistent,
        _security(C, E, is_lcp, budget, notes), notes, details,
    )


def check_lcp(specG: AgCodeSpec, specH: AgCodeSpec, budget: int = codes.DISTANCE_BUDGET) -> LcpReport:
    if specG.curve.genus == 0:
        return check_genus0_lcp(specG, specH, budget)
    return check_genus1_lcp(specG, specH, budget)


# -- elliptic construction -----------------------------------------------------------------


def construct_elliptic_lcp(curve: Curve, alpha0, r: int, s: int, components: Sequence | None = None,
                           budget: int = codes.DISTANCE_BUDGET):
    """G = rO + rP⁻, H = (2s - r)O - rP⁻ over D = Σ (P⁺_αi + P⁻_αi), i = 1..s."""
    if curve.kind != ELLIPTIC or curve.a != curve.field.one:
        raise PreconditionError("construction needs y^2 + y = x^3 + b x + c (a = 1)")
    if not 0 < r < s:
        raise PreconditionError(f"need 0 < r < s, got r={r}, s={s}")
    F = curve.field
    alpha0 = F(alpha0)
    _, Pm = points_over_x(curve, alpha0)
    if in_torsion(curve, Pm, r):
        raise PreconditionError(f"P⁻ above x={alpha0} lies in E[{r}]")
    if components is None:
        pool = [a for a in x_components(curve) if a != alpha0]
        if len(pool) < s:
            raise PreconditionError(f"only {len(pool)} further x-components, need {s}")
        components = pool[:s]
    components = [F(a) for a in components]
    if len(components) != s or alpha0 in components or len(set(components)) != s:
        raise PreconditionError("need s distinct x-components different from alpha0")
    D = []
    for a in components:
        D.extend(points_over_x(curve, a))
    O = curve.infinity
    G = Divisor({O: r, Pm: r})
    H = Divisor({O: 2 * s - r, Pm: -r})
    specG, specH = AgCodeSpec(curve, G, D), AgCodeSpec(curve, H, D)
    report = check_genus1_lcp(specG, specH, budget)
    report.kind = "elliptic-construction"
    report.checklist = {"0<r<s": True, f"P- not in E[{r}]": True, **report.checklist}
    report.details.update(alpha0=str(alpha0), r=r, s=s, components=[str(a) for a in components],
                          P_minus=Pm.to_json())
    return specG, specH, report


# -- scaled pairs ----------------------------------------------------------------------------


def _space_intersection_dim(A: Sequence[CurveFunction], B: Sequence[CurveFunction]) -> int:
    if not A or not B:
        return 0
    M = span_matrix(list(A) + list(B))
    ra = rank(Matrix(M.field, M.rows[: len(A)], M.ncols))
    rb = rank(Matrix(M.field, M.rows[len(A):], M.ncols))
    return ra + rb - rank(M)


def construct_scaled_pair(spec: AgCodeSpec, h: CurveFunction, budget: int = codes.DISTANCE_BUDGET):
    """a = h(D) and the pair (C_L(D, G), a C_L(D, G)) with its checklist."""
    curve, n = spec.curve, spec.n
    F = curve.field
    C = evaluation_code(spec)
    a = [evaluate(h, P) for P in spec.D]
    basis = rr_basis(curve, spec.G)
    hB = [h * f for f in basis]
    per_basis = [not in_space(hf, spec.G) for hf in hB]
    overlap = _space_intersection_dim(basis, hB)
    checklist = {
        "n even": n % 2 == 0,
        "k=n/2": 2 * C.k == n,
        "2g-2<deg(G)<n": spec.degree_in_window,
        "h(D) not all-zero": any(a),
        "h(D) not all-one": any(x != F.one for x in a),
        "hf not in L(G) for each basis f": all(per_basis),
        "hL(G) ∩ L(G) = 0": overlap == 0,
    }
    aC = codes.scale(C, a)
    is_lcp = codes.is_lcp_pair(C, aC)
    hyp = all(checklist.values())
    notes: list[str] = []
    if any(not x for x in a):
        notes.append("a has zero entries: aC is a degenerate scaling and may lose dimension")
    try:
        hdiv = divisor(h).to_json()
    except ValueError:
        hdiv = None
    details = {"h": str(h), "divisor_h": hdiv, "dim_aC": aC.k, "dim_hL(G)∩L(G)": overlap,
               "hull_dim_C": codes.hull_dimension(C)}
    report = LcpReport(
        "scaled-pair", n, C.k, aC.k, is_lcp, checklist, hyp, is_lcp or not hyp,
        _security(C, aC, is_lcp, budget, notes), notes, details,
        {"a": [str(x) for x in a]},
    )
    if hyp and not is_lcp:
        notes.append("all hypotheses hold but the rank test rejects the pair")
    return a, report


def construct_selfdual_scaled_pair(spec: AgCodeSpec, h: CurveFunction, budget: int = codes.DISTANCE_BUDGET):
    """Self-dual variant: h takes values outside {0, 1} on D, so aC is equivalent to C."""
    a, report = construct_scaled_pair(spec, h, budget)
    C = evaluation_code(spec)
    F = spec.curve.field
    report.kind = "selfdual-scaled-pair"
    report.checklist["C self-dual"] = codes.hull_dimension(C) == C.k and 2 * C.k == C.n
    report.checklist["h(P) not in {0,1}"] = all(x and x != F.one for x in a)
    report.hypotheses_hold = all(report.checklist.values())
    if all(a):
        aC = codes.scale(C, a)
        ok = codes.apply_equivalence(C, range(C.n), a) == aC
        report.witnesses["equivalence"] = {"sigma": list(range(C.n)), "a": [str(x) for x in a], "verified": ok}
    report.consistent = report.is_lcp or not report.hypotheses_hold
    return a, report


def _factor_pool(curve: Curve) -> list[tuple[CurveFunction, int]]:
    """Vertical lines x - α and, on elliptic curves, lines y - λx - μ, with pole orders."""
    F = curve.field
    X = CurveFunction.x(curve)
    pole = 1 if curve.kind == LINE else 2
    pool = [(X - CurveFunction.const(curve, al), pole) for al in F.elements()]
    if curve.kind == ELLIPTIC:
        Y = CurveFunction.y(curve)
        pool += [(Y - X.scale(lam) - CurveFunction.const(curve, mu), 3)
                 for lam in F.elements() for mu in F.elements()]
    return pool


def search_scaling_function(spec: AgCodeSpec, max_pole: int = 8, budget: int = codes.DISTANCE_BUDGET):
    """First product of line functions (total pole order <= max_pole at infinity)
    whose evaluation vector passes every scaled-pair hypothesis and the rank test.

    Returns (h, a, report) or None.  Candidates are visited by increasing number
    of factors, then in pool order.
    """
    pool = _factor_pool(spec.curve)
    C = evaluation_code(spec)
    F = spec.curve.field
    max_factors = max_pole // min(p for _, p in pool)
    for r in range(1, max_factors + 1):
        for combo in itertools.combinations_with_replacement(range(len(pool)), r):
            if sum(pool[i][1] for i in combo) > max_pole:
                continue
            h = pool[combo[0]][0]
            for i in combo[1:]:
                h = h * pool[i][0]
            try:
                a = [evaluate(h, P) for P in spec.D]
            except ZeroDivisionError:
                continue
            if not any(a) or all(x == F.one for x in a):
                continue
            if not codes.is_lcp_pair(C, codes.scale(C, a)):
                continue
            a, report = construct_scaled_pair(spec, h, budget)
            if report.hypotheses_hold and report.is_lcp:
                return h, a, report
    return None


def construct_mds_scaled_pair(specG: AgCodeSpec, specH: AgCodeSpec, budgets: Budgets = Budgets()):
    """Find a ∈ (F_q*)^n with (aC_L(D, G), C_L(D, H)) an LCP, given C_L(D, H) MDS.

    Following the existence argument: take the intersection l = dim(C ∩ E),
    put it in systematic form, and scale its information coordinates by
    λ_1..λ_l, trying λ_i ≠ 1 first in lexicographic order, then all of F_q*.
    """
    _shared(specG, specH)
    curve, n = specG.curve, specG.n
    F = curve.field
    if F.q < 3:
        raise PreconditionError("needs q >= 3")
    if ell(curve, specG.G) + ell(curve, specH.G) != n:
        raise PreconditionError("ell(G) + ell(H) != n")
    C, E = evaluation_code(specG), evaluation_code(specH)
    if not codes.is_mds(E, budgets.distance):
        raise PreconditionError("C_L(D, H) is not MDS")
    inter = codes.intersection(C, E)
    l = inter.k
    positions: tuple[int, ...] = rref(inter.gen)[2]
    a, stage = None, None
    if l == 0 and codes.is_lcp_pair(C, E):
        a, stage = (1,) * n, "already complementary"
    else:
        for stage_name, pool in (("lambda != 1", range(2, F.q)), ("lambda in F_q*", range(1, F.q))):
            for lam in itertools.product(pool, repeat=l):
                cand = [1] * n
                for pos, v in zip(positions, lam):
                    cand[pos] = v
                if codes.is_lcp_pair(codes.scale(C, cand), E):
                    a, stage = tuple(cand), stage_name
                    break
            if a is not None:
                break
    notes: list[str] = []
    if a is None and (F.q - 1) ** n <= budgets.equivalence:
        for cand in itertools.product(range(1, F.q), repeat=n):
            if codes.is_lcp_pair(codes.scale(C, cand), E):
                a, stage = cand, "exhaustive over (F_q*)^n"
                notes.append("witness found outside the intersection-coordinate search")
                break
    checklist = {"q>=3": True, "ell(G)+ell(H)=n": True, "C_L(D,H) MDS": True}
    details = {"intersection_dim": l, "scaled_positions": list(positions), "search_stage": stage}
    if a is None:
        notes.append("no witness found in the search space")
        return None, LcpReport("mds-scaled-pair", n, C.k, E.k, False, checklist, True, False,
                               None, notes, details)
    aC = codes.scale(C, a)
    is_lcp = codes.is_lcp_pair(aC, E)
    inv = codes.invert_vector(F, a)
    details["dual_scaling_identity"] = codes.dual(aC) == codes.scale(codes.dual(C), inv)
    try:
        C_mds = codes.is_mds(C, budgets.distance)
    except BudgetExceeded:
        C_mds = None
    details["C_L(D,G) MDS"] = C_mds
    if C_mds:
        details["dual(aC) vs C_L(D,H)"] = codes.equivalence_evidence(
            codes.dual(aC), E, budgets.equivalence, budgets.distance).to_json(F)
    report = LcpReport("mds-scaled-pair", n, aC.k, E.k, is_lcp, checklist, True, is_lcp,
                       _security(aC, E, is_lcp, budgets.distance, notes), notes, details,
                       {"a": [F.format(x) for x in a]})
    return [F(x) for x in a], report


# -- duality ------------------------------------------------------------------------------------


@dataclass
class DualityEvidence:
    verdict: Verdict
    params_H: dict
    params_dual_G: dict
    same_weight_enumerator: bool | None
    both_mds: bool | None

    def to_json(self, F=None) -> dict:
        return {
            "verdict": self.verdict.to_json(F),
            "C_L(D,H)": self.params_H,
            "C_L(D,G)^perp": self.params_dual_G,
            "same_weight_enumerator": self.same_weight_enumerator,
            "both_mds": self.both_mds,
        }


def duality_evidence(specG: AgCodeSpec, specH: AgCodeSpec, budgets: Budgets = Budgets()) -> DualityEvidence:
    """Compare C_L(D, H) with C_L(D, G)⊥ for an LCP pair."""
    _shared(specG, specH)
    C, E = evaluation_code(specG), evaluation_code(specH)
    if not codes.is_lcp_pair(C, E):
        raise PreconditionError("duality evidence needs an LCP pair")
    Cd = codes.dual(C)
    pE, pD = codes.code_report(E, budgets.distance), codes.code_report(Cd, budgets.distance)
    same = None
    if pE.get("weight_enumerator") is not None and pD.get("weight_enumerator") is not None:
        same = pE["weight_enumerator"] == pD["weight_enumerator"]
    both_mds = None
    if specG.curve.genus == 0:
        both_mds = bool(pE.get("mds")) and bool(pD.get("mds"))
    verdict = codes.equivalence_evidence(Cd, E, budgets.equivalence, budgets.distance)
    return DualityEvidence(verdict, pE, pD, same, both_mds)

"""Functions on the curves, local expansions, and Riemann-Roch spaces L(G).

A function is a quotient of two polynomials reduced modulo the curve
equation, i.e. written in the monomials x^i y^j with j <= 1.  Valuations at
affine points come from power-series expansions in a local parameter; at the
elliptic point at infinity the pole order of x^i y^j is 2i + 3j.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .curve import ELLIPTIC, LINE, Curve, Divisor, Point, point_neg, rational_points
from .gf import FieldElement
from .linalg import Matrix, nullspace_basis, rank, row_space_equal

Monomial = tuple[int, int]


class Poly:
    """Polynomial in x (and y, on elliptic curves) reduced so that deg_y <= 1."""

    __slots__ = ("curve", "terms")

    def __init__(self, curve: Curve, terms: Mapping[Monomial, FieldElement] | None = None):
        self.curve = curve
        self.terms = {mono: c for mono, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, curve: Curve, c) -> "Poly":
        return cls(curve, {(0, 0): curve.field(c) if not isinstance(c, FieldElement) else c})

    @classmethod
    def x(cls, curve: Curve) -> "Poly":
        return cls(curve, {(1, 0): curve.field.one})

    @classmethod
    def y(cls, curve: Curve) -> "Poly":
        if curve.kind != ELLIPTIC:
            raise ValueError("the line has no y coordinate")
        return cls(curve, {(0, 1): curve.field.one})

    @classmethod
    def monomial(cls, curve: Curve, i: int, j: int = 0) -> "Poly":
        return cls(curve, {(i, j): curve.field.one})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out[mono] + c if mono in out else c
        return Poly(self.curve, out)

    def __neg__(self) -> "Poly":
        return Poly(self.curve, {mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c: FieldElement) -> "Poly":
        return Poly(self.curve, {mono: c * v for mono, v in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        E = self.curve
        out: dict[Monomial, FieldElement] = {}

        def put(mono, c):
            out[mono] = out[mono] + c if mono in out else c

        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                i, j, c = i1 + i2, j1 + j2, c1 * c2
                if j < 2:
                    put((i, j), c)
                else:
                    # y^2 = -a y + x^3 + b x + c
                    put((i, 1), -E.a * c)
                    put((i + 3, 0), c)
                    put((i + 1, 0), E.b * c)
                    put((i, 0), E.c * c)
        return Poly(E, out)

    def __pow__(self, e: int) -> "Poly":
        out = Poly.const(self.curve, 1)
        for _ in range(e):
            out = out * self
        return out

    def pole_order(self) -> int:
        """Pole order at infinity (degree for the line, max 2i + 3j otherwise)."""
        if not self.terms:
            raise ValueError("zero polynomial")
        if self.curve.kind == LINE:
            return max(i for i, _ in self.terms)
        return max(2 * i + 3 * j for i, j in self.terms)

    def leading(self) -> FieldElement:
        top = self.pole_order()
        w = (lambda m: m[0]) if self.curve.kind == LINE else (lambda m: 2 * m[0] + 3 * m[1])
        return next(c for mono, c in self.terms.items() if w(mono) == top)

    def __call__(self, x: FieldElement, y: FieldElement | None = None) -> FieldElement:
        acc = self.curve.field.zero
        for (i, j), c in self.terms.items():
            v = c * x**i
            if j:
                v = v * y
            acc = acc + v
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (-(2 * t[0][0] + 3 * t[0][1]), t[0])):
            mono = "*".join(s for s in (("x" if i == 1 else f"x^{i}") if i else "", "y" if j else "") if s)
            parts.append(mono if mono and c == self.curve.field.one else (f"{c}*{mono}" if mono else str(c)))
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self) -> dict:
        return {f"{i},{j}": str(c) for (i, j), c in sorted(self.terms.items())}


def monomials(curve: Curve, max_pole: int) -> list[Monomial]:
    """Basis of L(max_pole * infinity), ordered by increasing pole order."""
    if max_pole < 0:
        return []
    if curve.kind == LINE:
        return [(i, 0) for i in range(max_pole + 1)]
    monos = [(i, j) for j in (0, 1) for i in range(max_pole // 2 + 1) if 2 * i + 3 * j <= max_pole]
    return sorted(monos, key=lambda m: 2 * m[0] + 3 * m[1])


# -- truncated power series -------------------------------------------------------------


def _s_mul(a: Sequence[FieldElement], b: Sequence[FieldElement], N: int, zero: FieldElement):
    out = [zero] * N
    for i, x in enumerate(a[:N]):
        if x:
            for j in range(min(len(b), N - i)):
                if b[j]:
                    out[i + j] = out[i + j] + x * b[j]
    return out


def _s_inv(a: Sequence[FieldElement], N: int, zero: FieldElement):
    """Inverse of a unit power series."""
    inv0 = a[0].inv()
    out = [zero] * N
    out[0] = inv0
    for k in range(1, N):
        acc = zero
        for i in range(1, min(k, len(a) - 1) + 1):
            if a[i] and out[k - i]:
                acc = acc + a[i] * out[k - i]
        out[k] = -acc * inv0
    return out


def _s_powers(a, n: int, N: int, one: FieldElement, zero: FieldElement):
    pw = [[one] + [zero] * (N - 1)]
    for _ in range(n):
        pw.append(_s_mul(pw[-1], a, N, zero))
    return pw


@functools.lru_cache(maxsize=4096)
def _local_coordinates(curve: Curve, P: Point, N: int):
    """(tag, X, Y) power series of the coordinates in a local parameter t at P.

    At affine points x = X(t), y = Y(t).  At the elliptic point at infinity
    x = t^-2 V(t), y = t^-3 V(t) with t = x/y and the returned X = Y = V; at
    infinity on the line x = 1/t and X is unused.
    """
    F = curve.field
    zero, one = F.zero, F.one
    if curve.kind == LINE:
        if P.is_infinity:
            return "1/x", None, None
        return "x - x_P", [P.x, one] + [zero] * (N - 2), None
    a, b, c = curve.a, curve.b, curve.c
    if P.is_infinity:
        # s = 1/y = t^3 U with U = 1 - a t^3 U^2 + b t^4 U^2 + c t^6 U^3; V = 1/U
        U = [one] + [zero] * (N - 1)
        for _ in range(N):
            U2 = _s_mul(U, U, N, zero)
            U3 = _s_mul(U2, U, N, zero)
            new = [one] + [zero] * (N - 1)
            for k in range(N):
                if k >= 3:
                    new[k] = new[k] - a * U2[k - 3]
                if k >= 4:
                    new[k] = new[k] + b * U2[k - 4]
                if k >= 6:
                    new[k] = new[k] + c * U3[k - 6]
            U = new
        V = _s_inv(U, N, zero)
        return "x/y", V, V
    xP, yP = P.x, P.y
    L = 2 * yP + a
    if L:
        # t = x - x_P; y = y_P + u with u^2 + L u = R(t)
        X = [xP, one] + [zero] * (N - 2)
        X3 = _s_mul(_s_mul(X, X, N, zero), X, N, zero)
        R = [X3[k] + b * X[k] for k in range(N)]
        R[0] = R[0] + c - yP * yP - a * yP
        u = [zero] * N
        for k in range(1, N):
            sq = zero
            for i in range(1, k):
                sq = sq + u[i] * u[k - i]
            u[k] = (R[k] - sq) / L
        Y = [yP + u[0]] + u[1:]
        return "x - x_P", X[:N], Y
    # 2y_P + a = 0: t = y - y_P; x = x_P + v with (3x_P^2 + b) v + 3x_P v^2 + v^3 = S(t)
    M = 3 * xP * xP + b
    Y = [yP, one] + [zero] * (N - 2)
    S = [zero] * N
    Y2 = _s_mul(Y, Y, N, zero)
    for k in range(N):
        S[k] = Y2[k] + a * Y[k]
    S[0] = S[0] - xP * xP * xP - b * xP - c
    v = [zero] * N
    for k in range(1, N):
        v2 = _s_mul(v, v, N, zero)
        v3 = _s_mul(v2, v, N, zero)
        v[k] = (S[k] - 3 * xP * v2[k] - v3[k]) / M
    X = [xP + v[0]] + v[1:]
    return "y - y_P", X, Y[:N]


def _expand_poly(g: Poly, P: Point, N: int) -> tuple[int, list[FieldElement]]:
    """g = t^shift * (c_0 + c_1 t + ...) mod t^(shift + N)."""
    curve = g.curve
    F = curve.field
    zero, one = F.zero, F.one
    tag, X, Y = _local_coordinates(curve, P, N)
    if P.is_infinity:
        M = g.pole_order()
        out = [zero] * N
        if curve.kind == LINE:
            for (i, _), c in g.terms.items():
                if M - i < N:
                    out[M - i] = out[M - i] + c
            return -M, out
        top = max(i + j for i, j in g.terms)
        Vp = _s_powers(X, top, N, one, zero)
        for (i, j), c in g.terms.items():
            sh = M - 2 * i - 3 * j
            for k in range(N - sh):
                if Vp[i + j][k]:
                    out[sh + k] = out[sh + k] + c * Vp[i + j][k]
        return -M, out
    imax = max((i for i, _ in g.terms), default=0)
    Xp = _s_powers(X, imax, N, one, zero)
    out = [zero] * N
    for (i, j), c in g.terms.items():
        s = _s_mul(Xp[i], Y, N, zero) if j else Xp[i]
        for k in range(N):
            if s[k]:
                out[k] = out[k] + c * s[k]
    return 0, out


def _laurent(g: Poly, P: Point, rel: int) -> tuple[int, list[FieldElement]]:
    """(valuation, first rel coefficients starting at the valuation) for g != 0."""
    if g.is_zero():
        raise ValueError("expansion of the zero polynomial")
    if P.is_infinity:
        shift, cs = _expand_poly(g, P, rel)
        return shift, cs
    bound = g.pole_order() + 1
    shift, cs = _expand_poly(g, P, bound + rel)
    v = next(k for k, c in enumerate(cs) if c)
    return v, cs[v : v + rel]


def poly_valuation(g: Poly, P: Point) -> int:
    if P.is_infinity:
        return -g.pole_order()
    return _laurent(g, P, 1)[0]


# -- functions ------------------------------------------------------------------------


class CurveFunction:
    """num/den with both polynomials reduced; the zero function has num = 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.const(num.curve, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        lead = den.leading()
        if lead != num.curve.field.one:
            s = lead.inv()
            num, den = num.scale(s), den.scale(s)
        self.num = num
        self.den = den

    @property
    def curve(self) -> Curve:
        return self.num.curve

    @classmethod
    def const(cls, curve: Curve, c) -> "CurveFunction":
        return cls(Poly.const(curve, c))

    @classmethod
    def x(cls, curve: Curve) -> "CurveFunction":
        return cls(Poly.x(curve))

    @classmethod
    def y(cls, curve: Curve) -> "CurveFunction":
        return cls(Poly.y(curve))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, CurveFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash(self.curve)

    def __add__(self, other: "CurveFunction") -> "CurveFunction":
        if self.den == other.den:
            return CurveFunction(self.num + other.num, self.den)
        return CurveFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return CurveFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "CurveFunction") -> "CurveFunction":
        return CurveFunction(self.num * other.num, self.den * other.den)

    def scale(self, c: FieldElement) -> "CurveFunction":
        return CurveFunction(self.num.scale(c), self.den)

    def __truediv__(self, other: "CurveFunction") -> "CurveFunction":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return CurveFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, e: int) -> "CurveFunction":
        if e < 0:
            return CurveFunction.const(self.curve, 1) / (self ** (-e))
        return CurveFunction(self.num**e, self.den**e)

    def __str__(self):
        if self.den == Poly.const(self.curve, 1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def function_from_json(curve: Curve, obj: Mapping) -> CurveFunction:
    def poly(d):
        terms = {}
        for key, val in d.items():
            i, j = (int(s) for s in key.split(","))
            terms[(i, j)] = curve.field(val)
        return Poly(curve, terms)

    return CurveFunction(poly(obj["num"]), poly(obj["den"]) if "den" in obj else None)


@dataclass(frozen=True)
class LocalExpansion:
    point: Point
    uniformizer: str
    valuation: int
    coeffs: tuple[FieldElement, ...]
    order: int


def valuation(f: CurveFunction, P: Point) -> int:
    if f.is_zero():
        raise ValueError("valuation of the zero function")
    return poly_valuation(f.num, P) - poly_valuation(f.den, P)


def local_expand(f: CurveFunction, P: Point, order: int) -> LocalExpansion:
    """First `order` coefficients of f in the local parameter at P."""
    if order <= 0:
        raise ValueError("order must be positive")
    if f.is_zero():
        raise ValueError("expansion of the zero function")
    F = f.curve.field
    vn, cn = _laurent(f.num, P, order)
    vd, cd = _laurent(f.den, P, order)
    coeffs = _s_mul(cn, _s_inv(cd, order, F.zero), order, F.zero)
    tag = _local_coordinates(f.curve, P, 2)[0]
    return LocalExpansion(P, tag, vn - vd, tuple(coeffs), order)


def evaluate(f: CurveFunction, P: Point) -> FieldElement:
    F = f.curve.field
    if f.is_zero():
        return F.zero
    if not P.is_infinity:
        y = P.y if f.curve.kind == ELLIPTIC else None
        d = f.den(P.x, y)
        if d:
            return f.num(P.x, y) / d
    e = local_expand(f, P, 1)
    if e.valuation < 0:
        raise ZeroDivisionError(f"function has a pole at {P}")
    return e.coeffs[0] if e.valuation == 0 else F.zero


def divisor(f: CurveFunction, strict: bool = True) -> Divisor:
    """Principal divisor of f restricted to rational points.

    With strict=True a ValueError is raised when the rational part has nonzero
    degree, i.e. when f has zeros or poles at places of higher degree.
    """
    D = Divisor((P, valuation(f, P)) for P in rational_points(f.curve))
    if strict and D.degree != 0:
        raise ValueError("function has zeros or poles at non-rational places")
    return D


def series_residual(curve: Curve, P: Point, N: int) -> list[FieldElement]:
    """Curve equation evaluated on the local coordinate series; all zero mod t^N."""
    F = curve.field
    zero, one = F.zero, F.one
    tag, X, Y = _local_coordinates(curve, P, N)
    if curve.kind == LINE:
        return [zero] * N
    a, b, c = curve.a, curve.b, curve.c
    if P.is_infinity:
        # t^6 (y^2 + a y - x^3 - b x - c) = V^2 + a t^3 V - V^3 - b t^4 V - c t^6
        V = X
        V2 = _s_mul(V, V, N, zero)
        V3 = _s_mul(V2, V, N, zero)
        out = [V2[k] - V3[k] for k in range(N)]
        for k in range(N):
            if k >= 3:
                out[k] = out[k] + a * V[k - 3]
            if k >= 4:
                out[k] = out[k] - b * V[k - 4]
        if N > 6:
            out[6] = out[6] - c
        return out
    Y2 = _s_mul(Y, Y, N, zero)
    X3 = _s_mul(_s_mul(X, X, N, zero), X, N, zero)
    out = [Y2[k] + a * Y[k] - X3[k] - b * X[k] for k in range(N)]
    out[0] = out[0] - c
    return out


# -- Riemann-Roch spaces ----------------------------------------------------------------------


def _check_support(curve: Curve, G: Divisor):
    for P in G:
        if not curve.contains(P):
            raise ValueError(f"{P} is not a rational point of the curve")


def _rr_basis_line(curve: Curve, G: Divisor) -> list[CurveFunction]:
    deg = G.degree
    if deg < 0:
        return []
    x = Poly.x(curve)
    one = Poly.const(curve, 1)
    num, den = one, one
    for P, m in G.items():
        if P.is_infinity:
            continue
        lin = x - Poly.const(curve, P.x)
        if m > 0:
            den = den * lin**m
        else:
            num = num * lin ** (-m)
    return [CurveFunction(x**j * num, den) for j in range(deg + 1)]


def _rr_basis_elliptic(curve: Curve, G: Divisor) -> list[CurveFunction]:
    O = curve.infinity
    x = Poly.x(curve)
    h = Poly.const(curve, 1)
    affine_pos = [(P, m) for P, m in G.items() if m > 0 and not P.is_infinity]
    for P, m in affine_pos:
        h = h * (x - Poly.const(curve, P.x)) ** m
    # v_O(g) >= v_O(h) - m_O(G)
    max_pole = 2 * sum(m for _, m in affine_pos) + G.mult(O)
    V = monomials(curve, max_pole)
    if not V:
        return []
    points = set(P for P in G if not P.is_infinity)
    points |= {Q for P, _ in affine_pos for Q in (P, point_neg(curve, P))}
    rows = []
    for Q in sorted(points):
        need = poly_valuation(h, Q) - G.mult(Q)
        if need <= 0:
            continue
        series = [_expand_poly(Poly.monomial(curve, i, j), Q, need + 2)[1] for i, j in V]
        for k in range(need):
            rows.append(tuple(s[k].index for s in series))
    F = curve.field
    if rows:
        sol = nullspace_basis(Matrix(F, tuple(rows), len(V)))
    else:
        sol = Matrix.identity(F, len(V))
    basis = []
    for vec in sol.rows:
        g = Poly(curve, {mono: F(c) for mono, c in zip(V, vec)})
        basis.append(CurveFunction(g, h))
    return basis


def rr_basis(curve: Curve, G: Divisor) -> list[CurveFunction]:
    """A basis of L(G) = {f : (f) >= -G} ∪ {0}."""
    return list(_rr_basis(curve, G))


@functools.lru_cache(maxsize=1024)
def _rr_basis(curve: Curve, G: Divisor) -> tuple[CurveFunction, ...]:
    _check_support(curve, G)
    if not G:
        return (CurveFunction.const(curve, 1),)
    if curve.kind == LINE:
        return tuple(_rr_basis_line(curve, G))
    if curve.kind == ELLIPTIC:
        return tuple(_rr_basis_elliptic(curve, G))
    raise ValueError(f"unsupported curve kind {curve.kind!r}")


def ell(curve: Curve, G: Divisor) -> int:
    return len(rr_basis(curve, G))


def index_of_speciality(curve: Curve, G: Divisor) -> int:
    """i(G) = ℓ(G) - deg(G) - 1 + g."""
    return ell(curve, G) - G.degree - 1 + curve.genus


def is_nonspecial(curve: Curve, G: Divisor) -> bool:
    return index_of_speciality(curve, G) == 0


def in_space(f: CurveFunction, G: Divisor) -> bool:
    """Exact membership f ∈ L(G): f must lie in the span of a basis of L(G)."""
    if f.is_zero():
        return True
    basis = rr_basis(f.curve, G)
    if not basis:
        return False
    M = span_matrix(basis + [f])
    return rank(M) == rank(Matrix(M.field, M.rows[:-1], M.ncols))


def span_matrix(funcs: Sequence[CurveFunction]) -> Matrix:
    """Coefficient rows of the numerators over a common denominator."""
    if not funcs:
        raise ValueError("empty function list")
    curve = funcs[0].curve
    dens: list[Poly] = []
    for f in funcs:
        if f.den not in dens:
            dens.append(f.den)
    rows = []
    for f in funcs:
        n = f.num
        for d in dens:
            if d != f.den:
                n = n * d
        rows.append(n)
    monos = sorted({m for r in rows for m in r.terms})
    F = curve.field
    return Matrix(F, tuple(tuple(r.terms.get(m, F.zero).index for m in monos) for r in rows), len(monos))


def same_span(fs: Sequence[CurveFunction], gs: Sequence[CurveFunction]) -> bool:
    M = span_matrix(list(fs) + list(gs))
    A = Matrix(M.field, M.rows[: len(fs)], M.ncols)
    B = Matrix(M.field, M.rows[len(fs) :], M.ncols)
    return row_space_equal(A, B)


def scaled_space(curve: Curve, G: Divisor, h: CurveFunction) -> list[CurveFunction]:
    """h * L(G), which equals L(G - (h))."""
    return [h * f for f in rr_basis(curve, G)]


def function_values(f: CurveFunction, points: Iterable[Point]) -> list[FieldElement]:
    return [evaluate(f, P) for P in points]

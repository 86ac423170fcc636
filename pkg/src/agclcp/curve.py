"""The projective line and Weierstrass curves y^2 + a y = x^3 + b x + c.

Points are normalized projective tuples.  On the elliptic curves infinity is
(0:1:0) and affine points have z = 1; on the line, points are (x:z) pairs with
infinity (1:0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .gf import Field, FieldElement

LINE = "line"
ELLIPTIC = "elliptic"


@dataclass(frozen=True)
class Point:
    coords: tuple[FieldElement, ...]

    @property
    def is_infinity(self) -> bool:
        return not self.coords[-1]

    @property
    def x(self) -> FieldElement:
        return self.coords[0]

    @property
    def y(self) -> FieldElement:
        return self.coords[1]

    def sort_key(self):
        return (not self.is_infinity, tuple(c.index for c in self.coords))

    def __lt__(self, other: "Point"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    __repr__ = __str__

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]


@dataclass(frozen=True)
class Curve:
    kind: str
    field: Field
    a: FieldElement | None = None
    b: FieldElement | None = None
    c: FieldElement | None = None

    def __post_init__(self):
        if self.kind == ELLIPTIC and not self.discriminant():
            raise ValueError("singular Weierstrass equation (zero discriminant)")

    @property
    def genus(self) -> int:
        return 0 if self.kind == LINE else 1

    @property
    def infinity(self) -> Point:
        F = self.field
        if self.kind == LINE:
            return Point((F.one, F.zero))
        return Point((F.zero, F.one, F.zero))

    def discriminant(self) -> FieldElement:
        # For a1 = a2 = 0, a3 = a, a4 = b, a6 = c:  -64 b^3 - 27 (a^2 + 4c)^2.
        a, b, c = self.a, self.b, self.c
        b6 = a * a + 4 * c
        return -(64 * b * b * b) - 27 * b6 * b6

    def affine(self, x, y=None) -> Point:
        F = self.field
        if self.kind == LINE:
            return Point((F(x), F.one))
        P = Point((F(x), F(y), F.one))
        if not self.contains(P):
            raise ValueError(f"{P} is not on the curve")
        return P

    def point(self, coords) -> Point:
        """Normalize a projective coordinate tuple and check membership."""
        F = self.field
        cs = [F(c) for c in coords]
        width = 2 if self.kind == LINE else 3
        if len(cs) != width:
            raise ValueError(f"expected {width} coordinates, got {len(cs)}")
        lead = cs[-1] if cs[-1] else next((v for v in cs if v), None)
        if lead is None:
            raise ValueError("all-zero coordinates")
        if not cs[-1]:
            if self.kind == LINE:
                return self.infinity
            if cs[0] or not cs[1]:
                raise ValueError(f"{cs} is not on the curve")
            return self.infinity
        P = Point(tuple(v / lead for v in cs))
        if not self.contains(P):
            raise ValueError(f"{P} is not on the curve")
        return P

    def contains(self, P: Point) -> bool:
        if self.kind == LINE:
            return len(P.coords) == 2
        if len(P.coords) != 3:
            return False
        if P.is_infinity:
            return P == self.infinity
        x, y = P.x, P.y
        return y * y + self.a * y == x * x * x + self.b * x + self.c

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == ELLIPTIC:
            out.update(a=str(self.a), b=str(self.b), c=str(self.c))
        out["field"] = self.field.to_json()
        return out


def projective_line(F: Field) -> Curve:
    return Curve(LINE, F)


def elliptic_curve(F: Field, a, b, c) -> Curve:
    return Curve(ELLIPTIC, F, F(a), F(b), F(c))


def rational_points(curve: Curve) -> list[Point]:
    """Infinity first, then affine points sorted by coordinate indices."""
    F = curve.field
    pts = [curve.infinity]
    if curve.kind == LINE:
        return pts + [Point((x, F.one)) for x in F.elements()]
    for x in F.elements():
        rhs = x * x * x + curve.b * x + curve.c
        for y in F.elements():
            if y * y + curve.a * y == rhs:
                pts.append(Point((x, y, F.one)))
    return pts


def x_components(curve: Curve) -> list[FieldElement]:
    return sorted({P.x for P in rational_points(curve) if not P.is_infinity})


def points_over_x(curve: Curve, alpha) -> tuple[Point, Point]:
    """(P⁺, P⁻) above x = alpha: P⁺ has the smaller y index, P⁻ = -P⁺."""
    alpha = curve.field(alpha)
    ys = sorted(P for P in rational_points(curve) if not P.is_infinity and P.x == alpha)
    if len(ys) != 2:
        raise ValueError(f"x = {alpha} carries {len(ys)} rational points, not 2")
    return ys[0], ys[1]


# -- group law -------------------------------------------------------------------------


def _require_elliptic(curve: Curve):
    if curve.kind != ELLIPTIC:
        raise ValueError("group law needs an elliptic curve")


def point_neg(curve: Curve, P: Point) -> Point:
    _require_elliptic(curve)
    if P.is_infinity:
        return P
    return Point((P.x, -P.y - curve.a, P.coords[2]))


def point_add(curve: Curve, P: Point, Q: Point) -> Point:
    """Chord-and-tangent addition for y^2 + a y = x^3 + b x + c."""
    _require_elliptic(curve)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    F = curve.field
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y1 + y2 + curve.a == F.zero:
            return curve.infinity
        # tangent: slope (3x^2 + b) / (2y + a); 2y + a != 0 here
        lam = (3 * x1 * x1 + curve.b) / (2 * y1 + curve.a)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam - x1 - x2
    y3 = -lam * x3 - nu - curve.a
    return Point((x3, y3, F.one))


def scalar_mul(curve: Curve, r: int, P: Point) -> Point:
    _require_elliptic(curve)
    if r < 0:
        return scalar_mul(curve, -r, point_neg(curve, P))
    acc, base = curve.infinity, P
    while r:
        if r & 1:
            acc = point_add(curve, acc, base)
        base = point_add(curve, base, base)
        r >>= 1
    return acc


def point_order(curve: Curve, P: Point) -> int:
    k, Q = 1, P
    while not Q.is_infinity:
        Q = point_add(curve, Q, P)
        k += 1
    return k


def in_torsion(curve: Curve, P: Point, r: int) -> bool:
    if r < 1:
        raise ValueError("torsion index must be >= 1")
    return scalar_mul(curve, r, P).is_infinity


# -- divisors --------------------------------------------------------------------------


class Divisor(Mapping):
    """Finite formal sum of rational points; zero multiplicities are dropped."""

    __slots__ = ("_c", "_h")

    def __init__(self, coeffs: Mapping[Point, int] | Iterable[tuple[Point, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Point, int] = {}
        for P, m in items:
            acc[P] = acc.get(P, 0) + int(m)
        self._c = {P: m for P, m in sorted(acc.items()) if m}
        self._h = None

    def __getitem__(self, P: Point) -> int:
        return self._c[P]

    def __iter__(self):
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def mult(self, P: Point) -> int:
        return self._c.get(P, 0)

    def __eq__(self, other):
        if isinstance(other, Divisor):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(tuple(self._c.items()))
        return self._h

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(list(self._c.items()) + list(other._c.items()))

    def __neg__(self) -> "Divisor":
        return Divisor({P: -m for P, m in self._c.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __rmul__(self, k: int) -> "Divisor":
        return Divisor({P: k * m for P, m in self._c.items()})

    def __le__(self, other: "Divisor") -> bool:
        return all(m >= 0 for m in (other - self).values())

    @property
    def degree(self) -> int:
        return sum(self._c.values())

    @property
    def support(self) -> frozenset[Point]:
        return frozenset(self._c)

    def positive(self) -> "Divisor":
        return Divisor({P: m for P, m in self._c.items() if m > 0})

    def negative(self) -> "Divisor":
        """G⁻ with G = G⁺ - G⁻ (so G⁻ is effective)."""
        return Divisor({P: -m for P, m in self._c.items() if m < 0})

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{m}*{P}" for P, m in self._c.items()).replace("+ -", "- ")

    __repr__ = __str__

    def to_json(self) -> list[dict]:
        return [{"point": P.to_json(), "mult": m} for P, m in self._c.items()]


def div_add(G: Divisor, H: Divisor) -> Divisor:
    return G + H


def div_sub(G: Divisor, H: Divisor) -> Divisor:
    return G - H


def div_degree(G: Divisor) -> int:
    return G.degree


def div_support(G: Divisor) -> frozenset[Point]:
    return G.support


def div_gcd(G: Divisor, H: Divisor) -> Divisor:
    pts = G.support | H.support
    return Divisor({P: min(G.mult(P), H.mult(P)) for P in pts})


def div_lmd(G: Divisor, H: Divisor) -> Divisor:
    pts = G.support | H.support
    return Divisor({P: max(G.mult(P), H.mult(P)) for P in pts})


def point_divisor(P: Point, m: int = 1) -> Divisor:
    return Divisor({P: m})


def divisor_sum(curve: Curve, D: Divisor) -> Point:
    """The group-law sum Σ [m_P] P."""
    acc = curve.infinity
    for P, m in D.items():
        acc = point_add(curve, acc, scalar_mul(curve, m, P))
    return acc


def is_principal(curve: Curve, D: Divisor) -> bool:
    if curve.kind == LINE:
        return D.degree == 0
    return D.degree == 0 and divisor_sum(curve, D).is_infinity


def divisor_from_json(curve: Curve, obj) -> Divisor:
    return Divisor((curve.point(entry["point"]), int(entry["mult"])) for entry in obj)

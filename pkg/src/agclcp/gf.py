"""Exact arithmetic in GF(p^m) for small prime powers.

Elements are encoded by an integer index in ``[0, q)``: the coefficient
vector of the residue polynomial read as base-``p`` digits, little-endian.
Index 0 is zero, index 1 is one and, for ``m > 1``, index ``p`` is the
residue class of the variable.

The symbol ``w`` always denotes the field's distinguished primitive element
(``Field.gen``).  For every built-in extension field the modulus is primitive,
so ``w`` is also the class of the variable there.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Iterator, Sequence

import numpy as np

MAX_ORDER = 2**16

# Little-endian monic moduli.  Every entry is primitive, so the variable
# generates the multiplicative group.
MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # w^2 + w + 1
    (2, 3): (1, 1, 0, 1),  # w^3 + w + 1
    (2, 4): (1, 1, 0, 0, 1),  # w^4 + w + 1
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),  # w^2 + 2w + 2
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _poly_rem(a: list[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by the monic polynomial b over GF(p), little-endian."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return [c % p for c in a[:db]] + [0] * max(0, db - len(a))


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(modulus) - 1
    if m < 1 or modulus[-1] % p != 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            if not any(_poly_rem(list(modulus), list(low) + [1], p)):
                return False
    return True


def _digits(n: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        n, r = divmod(n, p)
        out.append(r)
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    n = 0
    for d in reversed(ds):
        n = n * p + d
    return n


@dataclass(frozen=True)
class Field:
    """GF(p^m) with a pinned modulus.  Build instances with :func:`field_new`."""

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int = dc_field(init=False, compare=False)
    gen: int = dc_field(init=False, compare=False)
    _exp: tuple[int, ...] = dc_field(init=False, compare=False, repr=False)
    _log: tuple[int, ...] = dc_field(init=False, compare=False, repr=False)
    _add: tuple | None = dc_field(init=False, compare=False, repr=False)

    def __post_init__(self):
        p, m = self.p, self.m
        q = p**m
        object.__setattr__(self, "q", q)

        def raw_mul(a: int, b: int) -> int:
            da, db = _digits(a, p, m), _digits(b, p, m)
            prod = [0] * (2 * m - 1)
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        prod[i + j] += x * y
            return _undigits(_poly_rem(prod, self.modulus, p), p)

        def order(g: int) -> int:
            k, x = 1, g
            while x != 1:
                x = raw_mul(x, g)
                k += 1
                if k > q:
                    return 0
            return k

        if m == 1:
            candidates = range(1, q)
        else:
            candidates = [p] + [i for i in range(1, q) if i != p]
        gen = next(g for g in candidates if order(g) == q - 1)
        object.__setattr__(self, "gen", gen)

        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = raw_mul(exp[i - 1], gen)
        log = [0] * q
        for i, e in enumerate(exp):
            log[e] = i
        object.__setattr__(self, "_exp", tuple(exp))
        object.__setattr__(self, "_log", tuple(log))
        table = None
        if p != 2 and q <= 256:
            table = tuple(
                tuple(_undigits([(x + y) % p for x, y in zip(_digits(a, p, m), _digits(b, p, m))], p) for b in range(q))
                for a in range(q)
            )
        object.__setattr__(self, "_add", table)

    # -- index-level arithmetic -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        p, m = self.p, self.m
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, m), _digits(b, p, m))], p)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        p, m = self.p, self.m
        return _undigits([(-x) % p for x in _digits(a, p, m)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.q)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Index of the image of the integer n in the prime subfield."""
        return n % self.p

    # -- element-level API ------------------------------------------------------

    def __call__(self, x) -> "FieldElement":
        """Coerce to an element: int is an index, str is parsed, elements pass through."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldError("element belongs to a different field")
            return x
        if isinstance(x, (int, np.integer)):
            x = int(x)
            if not 0 <= x < self.q:
                raise FieldError(f"index {x} out of range for GF({self.q})")
            return FieldElement(self, x)
        if isinstance(x, str):
            return FieldElement(self, self.parse(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to a field element")

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def w(self) -> "FieldElement":
        return FieldElement(self, self.gen)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, i) for i in range(self.q)]

    def nonzero(self) -> list["FieldElement"]:
        return [FieldElement(self, i) for i in range(1, self.q)]

    # -- text form ----------------------------------------------------------------

    _TERM = re.compile(r"^(\d*)\*?(w(?:\^(-?\d+))?)?$")

    def parse(self, s: str) -> int:
        """Parse "0", "1", "w", "w^k", "3", or sums such as "w^2+w+1" / "2w+1"."""
        text = s.replace(" ", "")
        if not text:
            raise FieldError("empty element string")
        total = 0
        for term in text.split("+"):
            mt = self._TERM.match(term)
            if not term or mt is None or (not mt.group(1) and not mt.group(2)):
                raise FieldError(f"cannot parse field element {s!r}")
            coeff = self.from_int(int(mt.group(1))) if mt.group(1) else 1
            if mt.group(2):
                k = int(mt.group(3)) if mt.group(3) is not None else 1
                coeff = self.mul(coeff, self.pow(self.gen, k))
            total = self.add(total, coeff)
        return total

    def format(self, a: int) -> str:
        if a in (0, 1):
            return str(a)
        if self.m == 1:
            return str(a)
        k = self._log[a]
        return "w" if k == 1 else f"w^{k}"

    # -- vectorized helpers for codeword enumeration ----------------------------------

    @functools.cached_property
    def np_exp(self) -> np.ndarray:
        return np.array(self._exp + self._exp, dtype=np.int64)

    @functools.cached_property
    def np_log(self) -> np.ndarray:
        return np.array(self._log, dtype=np.int64)

    def np_add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.m):
            out += ((a // scale % self.p + b // scale % self.p) % self.p) * scale
            scale *= self.p
        return out

    def np_scale(self, a: np.ndarray, c: int) -> np.ndarray:
        """Multiply every entry of a by the scalar index c."""
        if c == 0:
            return np.zeros_like(a)
        if c == 1:
            return a.copy()
        res = self.np_exp[self.np_log[a] + self._log[c]]
        return np.where(a == 0, 0, res)

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}


class FieldElement:
    """An immutable element of a :class:`Field`."""

    __slots__ = ("field", "index")

    def __init__(self, field: Field, index: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "index", index)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("mixed-field operands")
            return other.index
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.add(self.index, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub(self.index, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub(o, self.index))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul(self.index, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.div(self.index, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.div(o, self.index))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.index))

    def __bool__(self):
        return self.index != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.index == other.index and self.field == other.field
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.index))

    def __lt__(self, other: "FieldElement"):
        return self.index < other.index

    def __str__(self):
        return self.field.format(self.index)

    def __repr__(self):
        return f"GF({self.field.q})({self.field.format(self.index)!r})"


@functools.lru_cache(maxsize=None)
def _make_field(p: int, m: int, modulus: tuple[int, ...]) -> Field:
    return Field(p, m, modulus)


def field_new(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> Field:
    """Return GF(p^m) with the table modulus, or with an explicitly supplied one."""
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError("extension degree must be >= 1")
    if p**m > MAX_ORDER:
        raise FieldError(f"GF({p}^{m}) exceeds the supported order {MAX_ORDER}")
    if modulus is None:
        if m == 1:
            modulus = (0, 1)
        elif (p, m) in MODULI:
            modulus = MODULI[(p, m)]
        else:
            raise FieldError(f"no built-in modulus for GF({p}^{m}); supply one")
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != m + 1:
        raise FieldError(f"modulus must have {m + 1} coefficients")
    if not is_irreducible(modulus, p):
        raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
    return _make_field(p, m, modulus)


def gf(q: int) -> Field:
    """Shorthand: the table field of order q."""
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                raise FieldError(f"{q} is not a prime power")
            return field_new(p, m)
    raise FieldError(f"{q} is not a prime power")


def field_from_json(obj: dict) -> Field:
    return field_new(int(obj["p"]), int(obj.get("m", 1)), obj.get("modulus"))


def elements(F: Field) -> Iterator[FieldElement]:
    return iter(F.elements())

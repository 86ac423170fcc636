"""Linear codes over GF(q), identified by the canonical RREF generator."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .gf import Field, FieldElement
from .linalg import (
    Matrix,
    mat_mul,
    nullspace_basis,
    rank,
    row_basis,
    row_space_includes,
    scale_columns,
    stack,
    transpose,
)

DISTANCE_BUDGET = 2**24
EQUIV_BUDGET = 10**7
_CHUNK = 2**16


class BudgetExceeded(ValueError):
    """Raised instead of approximating when an enumeration is too large."""


@dataclass(frozen=True)
class Budgets:
    distance: int = DISTANCE_BUDGET
    equivalence: int = EQUIV_BUDGET


@dataclass(frozen=True)
class LinearCode:
    gen: Matrix

    @property
    def field(self) -> Field:
        return self.gen.field

    @property
    def n(self) -> int:
        return self.gen.ncols

    @property
    def k(self) -> int:
        return self.gen.nrows

    def __str__(self):
        return f"[{self.n}, {self.k}] code over GF({self.field.q})"

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "n": self.n, "k": self.k, "generator": self.gen.to_json()}


def code_from_rows(M: Matrix) -> LinearCode:
    return LinearCode(row_basis(M))


def full_space(F: Field, n: int) -> LinearCode:
    return LinearCode(Matrix.identity(F, n))


def zero_code(F: Field, n: int) -> LinearCode:
    return LinearCode(Matrix(F, (), n))


def dual(C: LinearCode) -> LinearCode:
    if C.k == 0:
        return full_space(C.field, C.n)
    return LinearCode(nullspace_basis(C.gen))


def intersection(C: LinearCode, D: LinearCode) -> LinearCode:
    """C ∩ D computed as the dual of C⊥ + D⊥."""
    if C.n != D.n:
        raise ValueError("codes of different lengths")
    return dual(code_from_rows(stack(dual(C).gen, dual(D).gen)))


def hull_dimension(C: LinearCode) -> int:
    """dim(C ∩ C⊥); the Gram-rank and stacked-rank formulas are both evaluated."""
    if C.k == 0:
        return 0
    gram = C.k - rank(mat_mul(C.gen, transpose(C.gen)))
    stacked = C.n - rank(stack(C.gen, dual(C).gen))
    if gram != stacked:
        raise ArithmeticError(f"hull formulas disagree: {gram} != {stacked}")
    return gram


def is_lcd(C: LinearCode) -> bool:
    return hull_dimension(C) == 0


def is_lcp_pair(C: LinearCode, D: LinearCode) -> bool:
    if C.n != D.n or C.field != D.field:
        raise ValueError("LCP test needs codes of equal length over one field")
    if C.k + D.k != C.n:
        return False
    return rank(stack(C.gen, D.gen)) == C.n


def contains(C: LinearCode, D: LinearCode) -> bool:
    """True iff D ⊆ C."""
    return row_space_includes(C.gen, D.gen)


# -- enumeration -------------------------------------------------------------------


def iter_codeword_blocks(C: LinearCode, budget: int = DISTANCE_BUDGET):
    """Yield arrays of codewords (field indices) covering all q^k words exactly once."""
    F, k = C.field, C.k
    total = F.q**k
    if total > budget:
        raise BudgetExceeded(f"{total} codewords exceed the enumeration budget {budget}")
    G = np.array(C.gen.rows, dtype=np.int64).reshape(k, C.n)
    inner = 0
    while inner < k and F.q ** (inner + 1) <= _CHUNK:
        inner += 1
    words = np.zeros((1, C.n), dtype=np.int64)
    for r in range(inner):
        words = np.concatenate([F.np_add(words, F.np_scale(G[r], c)[None, :]) for c in range(F.q)])
    outer_rows = G[inner:]
    for coeffs in itertools.product(range(F.q), repeat=k - inner):
        offset = np.zeros(C.n, dtype=np.int64)
        for c, row in zip(coeffs, outer_rows):
            if c:
                offset = F.np_add(offset, F.np_scale(row, c))
        yield F.np_add(words, offset[None, :])


def _enumerate_weights(C: LinearCode, budget: int) -> list[int]:
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for block in iter_codeword_blocks(C, budget):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=C.n + 1)
    return [int(c) for c in counts]


def macwilliams(counts: Sequence[int], q: int) -> list[int]:
    """Weight distribution of the dual code, by the MacWilliams identity (exact)."""
    n = len(counts) - 1
    size = sum(counts)
    out = []
    for j in range(n + 1):
        acc = 0
        for i, a in enumerate(counts):
            if a:
                kj = sum(
                    (-1) ** s * (q - 1) ** (j - s) * math.comb(i, s) * math.comb(n - i, j - s)
                    for s in range(0, j + 1)
                )
                acc += a * kj
        if acc % size:
            raise ArithmeticError("MacWilliams transform is not integral")
        out.append(acc // size)
    return out


@dataclass(frozen=True)
class WeightEnumerator:
    counts: tuple[int, ...]

    def __getitem__(self, w: int) -> int:
        return self.counts[w]

    @property
    def min_weight(self) -> int | None:
        return next((w for w, c in enumerate(self.counts) if w and c), None)


def weight_enumerator(C: LinearCode, budget: int = DISTANCE_BUDGET) -> WeightEnumerator:
    """Enumerate the smaller of C and C⊥; transform back when the dual was used."""
    if C.k <= C.n - C.k:
        return WeightEnumerator(tuple(_enumerate_weights(C, budget)))
    D = dual(C)
    return WeightEnumerator(tuple(macwilliams(_enumerate_weights(D, budget), C.field.q)))


def min_distance(C: LinearCode, budget: int = DISTANCE_BUDGET) -> int:
    if C.k == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    return weight_enumerator(C, budget).min_weight


def min_distance_bruteforce(C: LinearCode, budget: int = DISTANCE_BUDGET) -> int:
    """Always enumerates C itself; used to cross-check the MacWilliams route."""
    if C.k == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    return WeightEnumerator(tuple(_enumerate_weights(C, budget))).min_weight


def is_mds(C: LinearCode, budget: int = DISTANCE_BUDGET) -> bool:
    if C.k == 0:
        return False
    return min_distance(C, budget) == C.n - C.k + 1


def security_parameter(C: LinearCode, D: LinearCode, budget: int = DISTANCE_BUDGET) -> int | None:
    """min{d(C), d(D⊥)}; undefined distances (zero codes) are skipped."""
    if not is_lcp_pair(C, D):
        raise ValueError("security parameter is defined for LCP pairs only")
    ds = [min_distance(X, budget) for X in (C, dual(D)) if X.k > 0]
    return min(ds) if ds else None


# -- scaling, permutation, equivalence ------------------------------------------------


def _indices(F: Field, a: Sequence) -> list[int]:
    return [F(x).index if not isinstance(x, FieldElement) else x.index for x in a]


def scale(C: LinearCode, a: Sequence) -> LinearCode:
    """aC; zero entries are allowed (the dimension may then drop)."""
    idx = _indices(C.field, a)
    if len(idx) != C.n:
        raise ValueError("scaling vector has the wrong length")
    return code_from_rows(scale_columns(C.gen, idx))


def invert_vector(F: Field, a: Sequence) -> list[FieldElement]:
    return [F(x).inv() for x in _indices(F, a)]


def permute(C: LinearCode, sigma: Sequence[int]) -> LinearCode:
    """σ(C) = {(c_σ(0), ..., c_σ(n-1))}; sigma is 0-based."""
    if sorted(sigma) != list(range(C.n)):
        raise ValueError("sigma is not a permutation of the coordinates")
    rows = tuple(tuple(r[s] for s in sigma) for r in C.gen.rows)
    return code_from_rows(Matrix(C.field, rows, C.n))


@dataclass(frozen=True)
class Verdict:
    kind: str  # "equivalent" | "refuted" | "unknown"
    sigma: tuple[int, ...] | None = None
    a: tuple[int, ...] | None = None
    reason: str = ""

    def to_json(self, F: Field | None = None) -> dict:
        out: dict = {"verdict": self.kind, "reason": self.reason}
        if self.sigma is not None:
            out["sigma"] = list(self.sigma)
            out["a"] = [F.format(x) for x in self.a] if F else list(self.a)
        return out


def _scaling_solutions(C: LinearCode, target_parity: Matrix, sigma: Sequence[int]) -> Matrix:
    """Rows spanning {a : σ(C_a) ⊆ target}, a linear condition on a."""
    F, n = C.field, C.n
    inv = [0] * n
    for i, s in enumerate(sigma):
        inv[s] = i
    eqs = []
    for c in C.gen.rows:
        for h in target_parity.rows:
            eqs.append(tuple(F.mul(h[inv[j]], c[j]) for j in range(n)))
    if not eqs:
        return Matrix.identity(F, n)
    return nullspace_basis(Matrix(F, tuple(eqs), n))


def _first_invertible(F: Field, basis: Matrix) -> tuple[int, ...] | None:
    ones = (1,) * basis.ncols
    if basis.nrows and row_space_includes(basis, Matrix(F, (ones,), basis.ncols)):
        return ones
    for coeffs in itertools.product(range(F.q), repeat=basis.nrows):
        v = [0] * basis.ncols
        for c, row in zip(coeffs, basis.rows):
            if c:
                v = [F.add(x, F.mul(c, y)) for x, y in zip(v, row)]
        if all(v):
            return tuple(v)
    return None


def equivalence_evidence(C: LinearCode, C2: LinearCode, budget: int = EQUIV_BUDGET,
                         distance_budget: int = DISTANCE_BUDGET) -> Verdict:
    """Three-valued evidence that C2 = σ(C_a) for a permutation σ and a ∈ (F_q*)^n.

    Differing weight enumerators refute equivalence.  When n!(q-1)^n fits the
    budget every permutation is tried; for each one the admissible scalings
    form a linear space that is searched for an all-nonzero vector.
    """
    F = C.field
    if (C.n, C.k) != (C2.n, C2.k) or F != C2.field:
        return Verdict("refuted", reason="different length, dimension or field")
    try:
        if weight_enumerator(C, distance_budget) != weight_enumerator(C2, distance_budget):
            return Verdict("refuted", reason="weight enumerators differ")
    except BudgetExceeded:
        pass
    if math.factorial(C.n) * (F.q - 1) ** C.n > budget:
        return Verdict("unknown", reason="search space exceeds the equivalence budget")
    parity = dual(C2).gen
    for sigma in itertools.permutations(range(C.n)):
        a = _first_invertible(F, _scaling_solutions(C, parity, sigma))
        if a is not None:
            return Verdict("equivalent", tuple(sigma), a, "explicit witness")
    return Verdict("refuted", reason="exhaustive search found no witness")


def apply_equivalence(C: LinearCode, sigma: Sequence[int], a: Sequence) -> LinearCode:
    return permute(scale(C, a), sigma)


def code_report(C: LinearCode, budget: int = DISTANCE_BUDGET) -> dict:
    out: dict = {"n": C.n, "k": C.k}
    if C.k == 0:
        out.update(d=None, mds=None, weight_enumerator=[1] + [0] * C.n)
    else:
        try:
            we = weight_enumerator(C, budget)
            d = we.min_weight
            out.update(d=d, mds=d == C.n - C.k + 1, weight_enumerator=list(we.counts))
        except BudgetExceeded as exc:
            out.update(d=None, mds=None, weight_enumerator=None, d_status=str(exc))
    out["hull_dim"] = hull_dimension(C)
    return out

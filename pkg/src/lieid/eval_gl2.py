"""Evaluation of Lie polynomials on 2x2 matrices over polynomial rings of
characteristic two.

Matrix entries live in GF(2)[v_0, v_1, ...]; a Lie polynomial is an identity
for gl2 exactly when its evaluation at generic matrices (independent
indeterminate entries, one matrix per variable) is the zero matrix.  Over an
infinite base field of characteristic two this criterion is exact in both
directions.
"""

from __future__ import annotations

from typing import Mapping

from .lie_core import (
    LieMonomial,
    LiePoly,
    PolyLike,
    as_poly,
    check_degree_cap,
)

__all__ = [
    "PolyGF2",
    "GMat2",
    "A_MAT",
    "B_MAT",
    "C_MAT",
    "BC_MAT",
    "lie_mat",
    "generic_matrix",
    "generic_matrix_sl2",
    "Evaluator",
    "evaluate",
    "is_identity_gl2",
    "sub_ij",
    "is_identity_sl2",
]

# A polynomial monomial is a tuple of (variable, exponent) pairs sorted by
# variable; the empty tuple is the constant 1.
_Mono = tuple[tuple[int, int], ...]


def _mono_mul(a: _Mono, b: _Mono) -> _Mono:
    if not a:
        return b
    if not b:
        return a
    merged: dict[int, int] = dict(a)
    for var, exp in b:
        merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items()))


class PolyGF2:
    """Multivariate polynomial with GF(2) coefficients."""

    __slots__ = ("monos",)

    def __init__(self, monos: frozenset[_Mono]):
        self.monos = monos

    ZERO: "PolyGF2"
    ONE: "PolyGF2"

    @classmethod
    def variable(cls, var: int) -> "PolyGF2":
        return cls(frozenset((((var, 1),),)))

    def __add__(self, other: "PolyGF2") -> "PolyGF2":
        return PolyGF2(self.monos.symmetric_difference(other.monos))

    def __mul__(self, other: "PolyGF2") -> "PolyGF2":
        if not self.monos or not other.monos:
            return PolyGF2.ZERO
        acc: set[_Mono] = set()
        for a in self.monos:
            for b in other.monos:
                acc.symmetric_difference_update((_mono_mul(a, b),))
        return PolyGF2(frozenset(acc))

    def is_zero(self) -> bool:
        return not self.monos

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyGF2):
            return NotImplemented
        return self.monos == other.monos

    def __hash__(self) -> int:
        return hash(self.monos)

    def __repr__(self) -> str:
        if not self.monos:
            return "0"
        parts = []
        for mono in sorted(self.monos):
            if not mono:
                parts.append("1")
            else:
                parts.append(
                    "*".join(
                        f"v{var}" if exp == 1 else f"v{var}^{exp}"
                        for var, exp in mono
                    )
                )
        return " + ".join(parts)


PolyGF2.ZERO = PolyGF2(frozenset())
PolyGF2.ONE = PolyGF2(frozenset(((),)))


class GMat2:
    """2x2 matrix over PolyGF2; entries in row-major order 11, 12, 21, 22."""

    __slots__ = ("e11", "e12", "e21", "e22")

    def __init__(self, e11: PolyGF2, e12: PolyGF2, e21: PolyGF2, e22: PolyGF2):
        self.e11, self.e12, self.e21, self.e22 = e11, e12, e21, e22

    @classmethod
    def from_bits(cls, e11: int, e12: int, e21: int, e22: int) -> "GMat2":
        pick = lambda b: PolyGF2.ONE if b else PolyGF2.ZERO
        return cls(pick(e11), pick(e12), pick(e21), pick(e22))

    def entries(self) -> tuple[PolyGF2, PolyGF2, PolyGF2, PolyGF2]:
        return (self.e11, self.e12, self.e21, self.e22)

    def __add__(self, other: "GMat2") -> "GMat2":
        return GMat2(
            self.e11 + other.e11,
            self.e12 + other.e12,
            self.e21 + other.e21,
            self.e22 + other.e22,
        )

    def matmul(self, other: "GMat2") -> "GMat2":
        return GMat2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def __eq__(self, other) -> bool:
        if not isinstance(other, GMat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __repr__(self) -> str:
        return f"[[{self.e11!r}, {self.e12!r}], [{self.e21!r}, {self.e22!r}]]"


ZERO_MAT = GMat2.from_bits(0, 0, 0, 0)
# The standard basis used throughout: a = E22, b = E12, c = E21, and the
# central element bc = [b, c] = E11 + E22.
A_MAT = GMat2.from_bits(0, 0, 0, 1)
B_MAT = GMat2.from_bits(0, 1, 0, 0)
C_MAT = GMat2.from_bits(0, 0, 1, 0)
BC_MAT = GMat2.from_bits(1, 0, 0, 1)


def lie_mat(a: GMat2, b: GMat2) -> GMat2:
    """Matrix commutator; in characteristic two [A, B] = AB + BA."""
    return a.matmul(b) + b.matmul(a)


def generic_matrix(i: int) -> GMat2:
    """Fresh generic matrix for variable index i: four new indeterminates."""
    base = 4 * (i - 1)
    return GMat2(
        PolyGF2.variable(base),
        PolyGF2.variable(base + 1),
        PolyGF2.variable(base + 2),
        PolyGF2.variable(base + 3),
    )


def generic_matrix_sl2(i: int) -> GMat2:
    """Generic trace-zero matrix: in characteristic two the diagonal entries
    coincide, leaving three indeterminates."""
    base = 3 * (i - 1)
    diag = PolyGF2.variable(base)
    return GMat2(diag, PolyGF2.variable(base + 1), PolyGF2.variable(base + 2), diag)


class Evaluator:
    """Evaluate monomials and polynomials under one fixed assignment,
    caching monomial values so shared subtrees are computed once."""

    def __init__(self, assign: Mapping[int, GMat2]):
        self.assign = dict(assign)
        self._cache: dict[LieMonomial, GMat2] = {}

    def monomial(self, m: LieMonomial) -> GMat2:
        got = self._cache.get(m)
        if got is not None:
            return got
        if m.is_leaf:
            try:
                result = self.assign[m.index]
            except KeyError:
                raise ValueError(f"no matrix assigned to x{m.index}") from None
        else:
            result = lie_mat(self.monomial(m.left), self.monomial(m.right))
        self._cache[m] = result
        return result

    def poly(self, p: PolyLike) -> GMat2:
        acc = ZERO_MAT
        for m in as_poly(p).monomials:
            acc = acc + self.monomial(m)
        return acc


def evaluate(p: PolyLike, assign: Mapping[int, GMat2]) -> GMat2:
    """Evaluate with bracket nodes mapped to lie_mat and sums entrywise."""
    return Evaluator(assign).poly(p)


def _indices(p: LiePoly) -> list[int]:
    return sorted(p.support())


def is_identity_gl2(p: PolyLike) -> bool:
    """Exact identity test for gl2 over any infinite field of characteristic
    two, via evaluation at generic matrices."""
    pp = as_poly(p)
    check_degree_cap(pp.max_degree())
    assign = {i: generic_matrix(i) for i in _indices(pp)}
    return evaluate(pp, assign).is_zero()


def is_identity_sl2(p: PolyLike) -> bool:
    """Identity test for the trace-zero subalgebra, via generic trace-zero
    matrices."""
    pp = as_poly(p)
    check_degree_cap(pp.max_degree())
    assign = {i: generic_matrix_sl2(i) for i in _indices(pp)}
    return evaluate(pp, assign).is_zero()


def sub_ij(p: PolyLike, i: int, j: int, n: int) -> GMat2:
    """Evaluate p at x_i -> b, x_j -> c and x_k -> a for the other k <= n."""
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    pp = as_poly(p)
    out_of_range = [k for k in pp.support() if not (1 <= k <= n)]
    if out_of_range:
        raise ValueError(f"variable indices {sorted(out_of_range)} exceed n={n}")
    assign: dict[int, GMat2] = {k: A_MAT for k in range(1, n + 1)}
    assign[i] = B_MAT
    assign[j] = C_MAT
    return evaluate(pp, assign)

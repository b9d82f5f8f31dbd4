"""Truncated formal power series over exact integers.

Everything is computed mod x^(order+1) with plain int coefficients; the
counting series used here all have integer coefficients, and 1/(1-x)^j is
built directly from binomials, so no rational arithmetic is ever needed.
Functional equations are checked in denominator-cleared polynomial form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import binomial, forest_catalan, identity_side, Identity, Side


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients a_0..a_N of a series mod x^(N+1); equality is coefficientwise."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        for c in self.coeffs:
            if not isinstance(c, int):
                raise ValueError(f"coefficients must be ints, got {type(c).__name__}")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    @classmethod
    def of(cls, coeffs) -> TruncatedSeries:
        return cls(tuple(int(c) for c in coeffs))

    @classmethod
    def constant(cls, value: int, order: int) -> TruncatedSeries:
        return cls((value,) + (0,) * order)

    @classmethod
    def x(cls, order: int) -> TruncatedSeries:
        if order < 1:
            raise ValueError("x needs order >= 1")
        return cls((0, 1) + (0,) * (order - 1))

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, int):
            return TruncatedSeries.constant(other, self.order)
        return other

    def __add__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    __radd__ = __add__

    def __sub__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(n + 1)))

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, int):
            return TruncatedSeries(tuple(c * other for c in self.coeffs))
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[:n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> TruncatedSeries:
        if exponent < 0:
            raise ValueError("only nonnegative powers are defined")
        result = TruncatedSeries.constant(1, self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by x^k, keeping the truncation order."""
        if k < 0:
            raise ValueError("shift needs k >= 0")
        return TruncatedSeries(((0,) * k + self.coeffs)[:self.order + 1])

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """Substitute `inner` (constant term must be 0) into this series, by Horner."""
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = TruncatedSeries(inner.coeffs[:n + 1])
        result = TruncatedSeries.constant(self.coeffs[n], n)
        for a in reversed(self.coeffs[:n]):
            result = result * inner + a
        return result


def geometric_series_power(j: int, order: int) -> TruncatedSeries:
    """1/(1-x)^j truncated: coefficient of x^i is binom(i+j-1, j-1)."""
    if j < 1:
        raise ValueError(f"geometric_series_power requires j >= 1, got {j}")
    return TruncatedSeries(tuple(binomial(i + j - 1, j - 1) for i in range(order + 1)))


def fuss_catalan_series(k: int, order: int) -> TruncatedSeries:
    """The series s with constant term 1 satisfying s = 1 + x*s^k, coefficientwise.

    Fixed-point iteration from s = 1; each pass freezes at least one further
    coefficient, so order+1 passes settle everything up to the truncation.
    Coefficient i equals k_catalan(i, k).
    """
    if k < 2:
        raise ValueError(f"fuss_catalan_series requires k >= 2, got {k}")
    if order < 0:
        raise ValueError(f"fuss_catalan_series requires order >= 0, got {order}")
    if order == 0:
        return TruncatedSeries.constant(1, 0)
    x = TruncatedSeries.x(order)
    s = TruncatedSeries.constant(1, order)
    for _ in range(order + 1):
        s = x * s ** k + 1
    return s


def _substitution_inner(k: int, order: int) -> TruncatedSeries:
    # x^(k-1)/(1-x)^k: coefficient of x^i is binom(i, k-1).
    return TruncatedSeries(tuple(binomial(i, k - 1) for i in range(order + 1)))


def colored_tree_series(k: int, order: int) -> TruncatedSeries:
    """Ordinary generating series of colored complete k-ary trees by weight.

    Weight counts (k-1) per internal vertex plus the color sum, so the series
    is C_k(x^(k-1)/(1-x)^k) / (1-x) where C_k solves s = 1 + x*s^k.  Before
    returning, the defining functional equation is re-checked in cleared form
    F - x^(k-1)*F^k = 1 + x*F; a failure means the substitution was built
    wrong.
    """
    if k < 2:
        raise ValueError(f"colored_tree_series requires k >= 2, got {k}")
    if order < 0:
        raise ValueError(f"colored_tree_series requires order >= 0, got {order}")
    outer = fuss_catalan_series(k, order)
    f = geometric_series_power(1, order) * outer.compose(_substitution_inner(k, order))
    if order >= 1:
        x = TruncatedSeries.x(order)
        lhs = f - f ** k * x ** (k - 1)
        rhs = x * f + 1
        if lhs != rhs:
            raise AssertionError(f"colored tree series violates its functional equation at k={k}")
    return f


def colored_ternary_series(order: int) -> TruncatedSeries:
    """The k=3 colored tree series; the bijection makes it the Catalan series.

    Checks both the cleared ternary equation (1-x)*G = 1 + x^2*G^3 and
    coefficientwise agreement with the k=2 solution of s = 1 + x*s^2 before
    returning.
    """
    g = colored_tree_series(3, order)
    if order >= 1:
        one_minus_x = TruncatedSeries.of([1, -1] + [0] * (order - 1))
        x = TruncatedSeries.x(order)
        if one_minus_x * g != g ** 3 * x ** 2 + 1:
            raise AssertionError("colored ternary series violates (1-x)G = 1 + x^2 G^3")
    if g != fuss_catalan_series(2, order):
        raise AssertionError("colored ternary series does not match the binary tree series")
    return g


def fuss_catalan_power_coefficients(k: int, m: int, order: int) -> list[int]:
    """Coefficients of the m-th power of the k-ary tree series, up to `order`.

    Coefficient p is expected to equal forest_catalan(p, k, m); the
    comparison is left to callers so the series route stays an independent
    witness.
    """
    if m < 1:
        raise ValueError(f"fuss_catalan_power_coefficients requires m >= 1, got {m}")
    return list((fuss_catalan_series(k, order) ** m).coeffs)


@dataclass(frozen=True)
class ThreeWayMismatch:
    n: int
    m: int
    series: int
    lhs: int
    rhs: int


def verify_quinary_forest_series(n_max: int, m_max: int,
                                 order: int | None = None) -> list[ThreeWayMismatch]:
    """Three-way check of the quinary forest identity against the series engine.

    For every n <= n_max and 1 <= m <= m_max, compares [x^n] of the m-th
    power of the k=5 colored tree series with both closed-form sides of
    Identity.QUINARY_FOREST.  Returns the mismatches (empty means verified).
    """
    if order is None:
        order = n_max
    if order < n_max:
        raise ValueError(f"order {order} is too small for n_max {n_max}")
    f = colored_tree_series(5, order)
    mismatches = []
    power = TruncatedSeries.constant(1, order)
    for m in range(1, m_max + 1):
        power = power * f
        for n in range(n_max + 1):
            from_series = power[n]
            lhs = identity_side(Identity.QUINARY_FOREST, Side.LHS, n, m)
            rhs = identity_side(Identity.QUINARY_FOREST, Side.RHS, n, m)
            if not (from_series == lhs == rhs):
                mismatches.append(ThreeWayMismatch(n, m, from_series, lhs, rhs))
    return mismatches


def forest_expansion_series(m: int, order: int) -> TruncatedSeries:
    """Sum over p of forest_catalan(p,3,m) * x^(2p) / (1-x)^(3p+m).

    Expanding the m-th power of the colored ternary series this way is what
    turns the forest counts into the ternary-forest identity; the result must
    equal colored_ternary_series(order) ** m.
    """
    if m < 1:
        raise ValueError(f"forest_expansion_series requires m >= 1, got {m}")
    total = TruncatedSeries.constant(0, order)
    for p in range(order // 2 + 1):
        term = geometric_series_power(3 * p + m, order).shift(2 * p) * forest_catalan(p, 3, m)
        total = total + term
    return total

"""Exact big-integer kernel: binomials, Fuss-Catalan counts, identity evaluators.

Every quantity here is a plain Python int (arbitrary precision), so there is
no overflow and no rounding anywhere.  All divisions hidden inside the
Catalan-family formulas are checked: a nonzero remainder raises
:class:`ExactnessError`, which always indicates a bug in a formula
transcription, never bad user input.
"""

from __future__ import annotations

import math
from enum import Enum

# Counts are plain nonnegative Python ints; the alias is documentation only.
Count = int


class ExactnessError(ArithmeticError):
    """An internal division left a remainder, or an alternating sum went negative."""


class Identity(Enum):
    """The four verified identities, named by the tree family on their left side.

    TERNARY         sum_p C3(p) * binom(n+p, 3p)  ==  Catalan(n)
    TERNARY_FOREST  sum_p FC3(p,m) * binom(n+p+m-1, n-2p)  ==  FC2(n,m)
    QUINARY_FOREST  sum_p FC5(p,m) * binom(n+p+m-1, n-4p)
                        ==  sum_p (-1)^p (m/(m+n)) binom(m+n+p-1, p) binom(m+2n-2p-1, n-2p)
    QUINARY         the m=1 case of QUINARY_FOREST

    where C3(p) is the ternary Catalan number, FCk(p,m) the k-ary forest count
    (see :func:`k_catalan`, :func:`forest_catalan`).
    """

    TERNARY = "ternary"
    TERNARY_FOREST = "ternary_forest"
    QUINARY_FOREST = "quinary_forest"
    QUINARY = "quinary"


class Side(Enum):
    LHS = "lhs"
    RHS = "rhs"


def _exact_div(numerator: int, divisor: int) -> int:
    q, r = divmod(numerator, divisor)
    if r != 0:
        raise ExactnessError(f"{numerator} is not divisible by {divisor} (remainder {r})")
    return q


def binomial(n: int, k: int) -> Count:
    """n choose k, total in k: returns 0 for k < 0 or k > n.  Requires n >= 0.

    Totality means identity sums can run p over a safe over-approximation of
    their support without boundary special cases.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def k_catalan(n: int, k: int) -> Count:
    """Number of complete k-ary trees with n internal vertices.

    Computed as binom(k*n+1, n) / (k*n+1) with the division checked exact.
    """
    if n < 0:
        raise ValueError(f"k_catalan requires n >= 0, got n={n}")
    if k < 2:
        raise ValueError(f"k_catalan requires k >= 2, got k={k}")
    return _exact_div(binomial(k * n + 1, n), k * n + 1)


def forest_catalan(p: int, k: int, m: int) -> Count:
    """Number of ordered forests of m complete k-ary trees with p internal vertices total.

    Computed as m * binom(k*p+m, p) / (k*p+m), division checked exact.
    """
    if p < 0:
        raise ValueError(f"forest_catalan requires p >= 0, got p={p}")
    if k < 2:
        raise ValueError(f"forest_catalan requires k >= 2, got k={k}")
    if m < 1:
        raise ValueError(f"forest_catalan requires m >= 1, got m={m}")
    return _exact_div(m * binomial(k * p + m, p), k * p + m)


def colored_ternary_count(n: int, p: int) -> Count:
    """Number of colored complete ternary trees with p internal vertices and color sum n-2p.

    A ternary tree with p internal vertices has 3p+1 vertices; distributing
    n-2p color units over them (repetition allowed) gives binom(n+p, n-2p)
    colorings per shape.  Returns 0 when 2p > n (empty family).
    """
    if n < 0 or p < 0:
        raise ValueError(f"colored_ternary_count requires n, p >= 0, got n={n}, p={p}")
    if 2 * p > n:
        return 0
    return k_catalan(p, 3) * binomial(n + p, n - 2 * p)


def _ternary_lhs(n: int, m: int) -> int:
    total = 0
    for p in range(n // 2 + 1):
        total += _exact_div(binomial(3 * p + 1, p), 3 * p + 1) * binomial(n + p, 3 * p)
    return total


def _ternary_forest_lhs(n: int, m: int) -> int:
    total = 0
    for p in range(n // 2 + 1):
        coeff = _exact_div(m * binomial(3 * p + m, p), 3 * p + m)
        total += coeff * binomial(n + p + m - 1, n - 2 * p)
    return total


def _quinary_forest_lhs(n: int, m: int) -> int:
    total = 0
    for p in range(n // 4 + 1):
        coeff = _exact_div(m * binomial(5 * p + m, p), 5 * p + m)
        total += coeff * binomial(n + p + m - 1, n - 4 * p)
    return total


def _quinary_lhs(n: int, m: int) -> int:
    total = 0
    for p in range(n // 4 + 1):
        total += _exact_div(binomial(5 * p, p), 4 * p + 1) * binomial(n + p, 5 * p)
    return total


def _quinary_forest_rhs(n: int, m: int) -> int:
    # Alternating sum; the common factor m/(m+n) is pulled out so the signed
    # part stays in plain integers, then divided back exactly at the end.
    signed = 0
    for p in range(n // 2 + 1):
        term = binomial(m + n + p - 1, p) * binomial(m + 2 * n - 2 * p - 1, n - 2 * p)
        signed += -term if p % 2 else term
    value = _exact_div(m * signed, m + n)
    if value < 0:
        raise ExactnessError(f"alternating sum evaluated negative: {value} at n={n}, m={m}")
    return value


def _quinary_rhs(n: int, m: int) -> int:
    signed = 0
    for p in range(n // 2 + 1):
        term = binomial(n + p, n) * binomial(2 * n - 2 * p, n)
        signed += -term if p % 2 else term
    value = _exact_div(signed, n + 1)
    if value < 0:
        raise ExactnessError(f"alternating sum evaluated negative: {value} at n={n}")
    return value


_EVALUATORS = {
    (Identity.TERNARY, Side.LHS): _ternary_lhs,
    (Identity.TERNARY, Side.RHS): lambda n, m: _exact_div(binomial(2 * n, n), n + 1),
    (Identity.TERNARY_FOREST, Side.LHS): _ternary_forest_lhs,
    (Identity.TERNARY_FOREST, Side.RHS): lambda n, m: forest_catalan(n, 2, m),
    (Identity.QUINARY_FOREST, Side.LHS): _quinary_forest_lhs,
    (Identity.QUINARY_FOREST, Side.RHS): _quinary_forest_rhs,
    (Identity.QUINARY, Side.LHS): _quinary_lhs,
    (Identity.QUINARY, Side.RHS): _quinary_rhs,
}

# Identities stated only for a single component: m must be exactly 1.
_SINGLE_COMPONENT = (Identity.TERNARY, Identity.QUINARY)


def identity_side(identity: Identity, side: Side, n: int, m: int = 1) -> Count:
    """Evaluate one side of one identity exactly.

    Each side is a direct transcription of its closed form; sums over p run
    to floor(n/2) or floor(n/4) as the formulas state.  For the two
    single-component identities m must be 1.
    """
    if n < 0:
        raise ValueError(f"identity_side requires n >= 0, got n={n}")
    if m < 1:
        raise ValueError(f"identity_side requires m >= 1, got m={m}")
    if identity in _SINGLE_COMPONENT and m != 1:
        raise ValueError(f"{identity.value} is a single-component identity; m must be 1, got m={m}")
    return _EVALUATORS[(identity, side)](n, m)

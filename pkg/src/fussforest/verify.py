"""Verification sweeps: every library claim re-checked against an independent route.

Each check compares a closed form, a generator, a bijection image, or a
series coefficient against its counterpart over a swept parameter box and
reports per-case failures.  Default bounds are the acceptance bounds, so
running the `all` suite is the full acceptance sweep.  Reports render
deterministically: timing never goes into the text or JSON output.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import bijection, series, trees
from .exact import (Identity, Side, colored_ternary_count, forest_catalan,
                    identity_side, k_catalan, binomial)

SUITES = ("identities", "bijection", "series", "counts", "all")

# Acceptance bounds per suite: (n_max, m_max, order) defaults.
_DEFAULTS = {
    "identities": {"n_max": 60, "m_max": 8},
    "bijection": {"n_max": 8, "m_max": 4},
    "series": {"order": 64, "m_max": 6},
    "counts": {"n_max": 10, "m_max": 4},
}


@dataclass(frozen=True)
class CaseFailure:
    params: dict
    expected: str
    actual: str


@dataclass
class CheckResult:
    name: str
    bounds: dict
    cases: int = 0
    failures: list[CaseFailure] = field(default_factory=list)

    def case(self, params: dict, expected, actual) -> None:
        self.cases += 1
        if expected != actual:
            self.failures.append(CaseFailure(dict(params), str(expected), str(actual)))

    def equal_chain(self, params: dict, *values) -> None:
        """One case that passes iff all supplied values are equal."""
        self.cases += 1
        if any(v != values[0] for v in values[1:]):
            self.failures.append(
                CaseFailure(dict(params), str(values[0]), " / ".join(str(v) for v in values[1:])))


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckResult]
    elapsed_seconds: float = 0.0

    @property
    def total_cases(self) -> int:
        return sum(c.cases for c in self.checks)

    @property
    def total_failures(self) -> int:
        return sum(len(c.failures) for c in self.checks)

    @property
    def passed(self) -> bool:
        return self.total_failures == 0

    def to_text(self) -> str:
        lines = []
        for check in self.checks:
            bounds = " ".join(f"{k}={v}" for k, v in check.bounds.items())
            status = "ok" if not check.failures else f"{len(check.failures)} FAILED"
            lines.append(f"check {check.name} [{bounds}]: cases={check.cases} {status}")
            if check.failures:
                first = check.failures[0]
                where = " ".join(f"{k}={v}" for k, v in first.params.items())
                lines.append(f"  first failure: {where}: expected {first.expected}, got {first.actual}")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"suite {self.suite}: {verdict} "
                     f"(cases={self.total_cases}, failures={self.total_failures})")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "suite": self.suite,
            "passed": self.passed,
            "total_cases": self.total_cases,
            "total_failures": self.total_failures,
            "checks": [
                {
                    "name": c.name,
                    "bounds": c.bounds,
                    "cases": c.cases,
                    "failures": [
                        {"params": f.params, "expected": f.expected, "actual": f.actual}
                        for f in c.failures
                    ],
                }
                for c in self.checks
            ],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _bounds(suite: str, n_max, m_max, order) -> dict:
    chosen = dict(_DEFAULTS[suite])
    if n_max is not None and "n_max" in chosen:
        chosen["n_max"] = n_max
    if m_max is not None and "m_max" in chosen:
        chosen["m_max"] = m_max
    if order is not None and "order" in chosen:
        chosen["order"] = order
    return chosen


# ---------------------------------------------------------------------------
# identities suite
# ---------------------------------------------------------------------------

def _check_ternary_identity(n_max: int) -> CheckResult:
    result = CheckResult("ternary_identity", {"n_max": n_max})
    for n in range(n_max + 1):
        result.equal_chain(
            {"n": n},
            k_catalan(n, 2),
            identity_side(Identity.TERNARY, Side.LHS, n),
            identity_side(Identity.TERNARY, Side.RHS, n),
        )
    return result


def _check_ternary_forest_identity(n_max: int, m_max: int) -> CheckResult:
    result = CheckResult("ternary_forest_identity", {"n_max": n_max, "m_max": m_max})
    for n in range(n_max + 1):
        for m in range(1, m_max + 1):
            result.case(
                {"n": n, "m": m},
                identity_side(Identity.TERNARY_FOREST, Side.RHS, n, m),
                identity_side(Identity.TERNARY_FOREST, Side.LHS, n, m),
            )
    return result


def _check_quinary_forest_identity(n_max: int, m_max: int) -> CheckResult:
    result = CheckResult("quinary_forest_identity", {"n_max": n_max, "m_max": m_max})
    for n in range(n_max + 1):
        for m in range(1, m_max + 1):
            result.case(
                {"n": n, "m": m},
                identity_side(Identity.QUINARY_FOREST, Side.RHS, n, m),
                identity_side(Identity.QUINARY_FOREST, Side.LHS, n, m),
            )
    return result


def _check_quinary_identity(n_max: int) -> CheckResult:
    result = CheckResult("quinary_identity", {"n_max": n_max})
    for n in range(n_max + 1):
        result.case(
            {"n": n},
            identity_side(Identity.QUINARY, Side.RHS, n),
            identity_side(Identity.QUINARY, Side.LHS, n),
        )
    return result


def _check_forest_single_component(n_max: int) -> CheckResult:
    # At m=1 the forest identity must agree with the single-tree one termwise.
    result = CheckResult("ternary_forest_m1_termwise", {"n_max": n_max})
    for n in range(n_max + 1):
        for p in range(n // 2 + 1):
            result.case(
                {"n": n, "p": p},
                binomial(n + p, 3 * p),
                binomial(n + p, n - 2 * p),
            )
    return result


def _check_colored_count_sum(n_max: int) -> CheckResult:
    result = CheckResult("colored_count_sum", {"n_max": n_max})
    for n in range(n_max + 1):
        total = sum(colored_ternary_count(n, p) for p in range(n // 2 + 1))
        result.case({"n": n}, k_catalan(n, 2), total)
    return result


def _identities_suite(n_max: int, m_max: int) -> list[CheckResult]:
    return [
        _check_ternary_identity(n_max),
        _check_ternary_forest_identity(n_max, m_max),
        _check_quinary_forest_identity(n_max, m_max),
        _check_quinary_identity(n_max),
        _check_forest_single_component(n_max),
        _check_colored_count_sum(n_max),
    ]


# ---------------------------------------------------------------------------
# bijection suite
# ---------------------------------------------------------------------------

def _check_tree_bijection(n_max: int) -> CheckResult:
    result = CheckResult("tree_bijection", {"n_max": n_max})
    for n in range(n_max + 1):
        image_keys = []
        for t in trees.enumerate_colored_ternary(n, max_n=n_max):
            b = bijection.phi(t)
            result.equal_chain(
                {"n": n, "tree": trees.serialize(t)},
                True,
                trees.internal_count(b) == n,
                trees.validate(b, trees.BINARY).ok,
                bijection.phi_inverse(b) == t,
            )
            image_keys.append(trees.serialize(b))
        domain_keys = set()
        for b in trees.enumerate_binary(n, max_n=n_max):
            domain_keys.add(trees.serialize(b))
            t = bijection.phi_inverse(b)
            result.equal_chain(
                {"n": n, "tree": trees.serialize(b)},
                True,
                trees.validate(t, trees.COLORED_TERNARY).ok,
                trees.ternary_weight(t) == n,
                bijection.phi(t) == b,
            )
        # Injective onto: image multiset has no repeats and covers the codomain.
        result.case({"n": n, "property": "image_size"}, k_catalan(n, 2), len(image_keys))
        result.case({"n": n, "property": "image_distinct"}, len(image_keys), len(set(image_keys)))
        result.case({"n": n, "property": "image_onto"}, True, set(image_keys) == domain_keys)
    return result


def _check_forest_bijection(n_max: int, m_max: int) -> CheckResult:
    result = CheckResult("forest_bijection", {"n_max": n_max, "m_max": m_max})
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            colored = list(trees.enumerate_forests(trees.COLORED_TERNARY, n, m, max_n=n_max))
            by_parts = sum(
                forest_catalan(p, 3, m) * binomial(m + n + p - 1, n - 2 * p)
                for p in range(n // 2 + 1)
            )
            result.case({"n": n, "m": m, "property": "colored_count"}, by_parts, len(colored))
            images = []
            for forest in colored:
                image = bijection.phi_forest(forest)
                result.case(
                    {"n": n, "m": m, "forest": trees.serialize_forest(forest).replace("\n", ";")},
                    forest,
                    bijection.phi_inverse_forest(image),
                )
                images.append(tuple(trees.serialize(b) for b in image))
            binary_keys = {
                tuple(trees.serialize(b) for b in forest)
                for forest in trees.enumerate_forests(trees.BINARY, n, m, max_n=n_max)
            }
            result.case({"n": n, "m": m, "property": "binary_count"},
                        forest_catalan(n, 2, m), len(binary_keys))
            result.case({"n": n, "m": m, "property": "image_distinct"},
                        len(images), len(set(images)))
            result.case({"n": n, "m": m, "property": "image_onto"},
                        True, set(images) == binary_keys)
    return result


def _bijection_suite(n_max: int, m_max: int) -> list[CheckResult]:
    return [
        _check_tree_bijection(n_max),
        _check_forest_bijection(min(6, n_max), m_max),
    ]


# ---------------------------------------------------------------------------
# series suite
# ---------------------------------------------------------------------------

def _check_series_vs_counts(order: int) -> CheckResult:
    result = CheckResult("fuss_catalan_series_coefficients", {"order": order})
    for k in (2, 3, 5):
        s = series.fuss_catalan_series(k, order)
        for i in range(order + 1):
            result.case({"k": k, "i": i}, k_catalan(i, k), s[i])
    return result


def _check_colored_ternary_series(order: int) -> CheckResult:
    result = CheckResult("colored_ternary_equals_catalan", {"order": order})
    g = series.colored_ternary_series(order)
    catalan = series.fuss_catalan_series(2, order)
    for i in range(order + 1):
        result.case({"i": i}, catalan[i], g[i])
    return result


def _check_substitution_equations(order: int) -> CheckResult:
    result = CheckResult("substitution_functional_equations", {"order": order})
    x = series.TruncatedSeries.x(order)
    for k in (2, 3, 5):
        f = series.colored_tree_series(k, order)
        result.case({"k": k}, x * f + 1, f - f ** k * x ** (k - 1))
    return result


def _check_lagrange_powers(order: int, m_max: int) -> CheckResult:
    result = CheckResult("power_coefficients_vs_forest_counts", {"order": order, "m_max": m_max})
    for k in (2, 3, 5):
        for m in range(1, m_max + 1):
            coeffs = series.fuss_catalan_power_coefficients(k, m, order)
            for p in range(order + 1):
                result.case({"k": k, "m": m, "p": p}, forest_catalan(p, k, m), coeffs[p])
    return result


def _check_quinary_three_way(n_max: int, m_max: int) -> CheckResult:
    result = CheckResult("quinary_forest_three_way", {"n_max": n_max, "m_max": m_max})
    mismatches = series.verify_quinary_forest_series(n_max, m_max)
    result.cases = (n_max + 1) * m_max
    for miss in mismatches:
        result.failures.append(CaseFailure(
            {"n": miss.n, "m": miss.m},
            str(miss.lhs), f"series={miss.series} rhs={miss.rhs}"))
    return result


def _check_forest_expansion(order: int, m_max: int) -> CheckResult:
    result = CheckResult("forest_expansion_route", {"order": order, "m_max": m_max})
    g = series.colored_ternary_series(order)
    power = series.TruncatedSeries.constant(1, order)
    for m in range(1, m_max + 1):
        power = power * g
        result.case({"m": m}, power, series.forest_expansion_series(m, order))
    return result


def _series_suite(order: int, m_max: int) -> list[CheckResult]:
    return [
        _check_series_vs_counts(order),
        _check_colored_ternary_series(order),
        _check_substitution_equations(min(order, 32)),
        _check_lagrange_powers(min(order, 32), m_max),
        _check_quinary_three_way(min(order, 40), m_max),
        _check_forest_expansion(min(order, 32), min(m_max, 4)),
    ]


# ---------------------------------------------------------------------------
# counts suite
# ---------------------------------------------------------------------------

def _check_binary_generator(n_max: int) -> CheckResult:
    result = CheckResult("binary_generator", {"n_max": n_max})
    for n in range(n_max + 1):
        seen = set()
        count = 0
        for b in trees.enumerate_binary(n, max_n=n_max):
            count += 1
            seen.add(trees.serialize(b))
        result.case({"n": n, "property": "count"}, k_catalan(n, 2), count)
        result.case({"n": n, "property": "distinct"}, count, len(seen))
    return result


def _check_colored_generator(n_max: int) -> CheckResult:
    result = CheckResult("colored_generator", {"n_max": n_max})
    for n in range(n_max + 1):
        for p in range(n // 2 + 1):
            seen = set()
            count = 0
            shape_ok = True
            for t in trees.enumerate_colored_ternary(n, p, max_n=n_max):
                count += 1
                seen.add(trees.serialize(t))
                if trees.internal_count(t) != p or trees.color_sum(t) != n - 2 * p:
                    shape_ok = False
            result.case({"n": n, "p": p, "property": "count"},
                        colored_ternary_count(n, p), count)
            result.case({"n": n, "p": p, "property": "distinct"}, count, len(seen))
            result.case({"n": n, "p": p, "property": "members"}, True, shape_ok)
    return result


def _check_forest_generators(n_max: int, m_max: int) -> CheckResult:
    result = CheckResult("forest_generators", {"n_max": n_max, "m_max": m_max})
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            binary_total = sum(1 for _ in trees.enumerate_forests(trees.BINARY, n, m, max_n=n_max))
            result.case({"n": n, "m": m, "family": "binary"},
                        forest_catalan(n, 2, m), binary_total)
            colored_total = sum(
                1 for _ in trees.enumerate_forests(trees.COLORED_TERNARY, n, m, max_n=n_max))
            expected = sum(
                forest_catalan(p, 3, m) * binomial(m + n + p - 1, n - 2 * p)
                for p in range(n // 2 + 1)
            )
            result.case({"n": n, "m": m, "family": "colored-ternary"},
                        expected, colored_total)
    return result


def _counts_suite(n_max: int, m_max: int) -> list[CheckResult]:
    return [
        _check_binary_generator(n_max),
        _check_colored_generator(n_max),
        _check_forest_generators(min(8, n_max), m_max),
    ]


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def run_suite(suite: str, n_max: int | None = None, m_max: int | None = None,
              order: int | None = None) -> VerificationReport:
    """Run one suite (or `all`) and return its report; bounds default to acceptance bounds."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    started = time.perf_counter()
    checks: list[CheckResult] = []
    wanted = SUITES[:-1] if suite == "all" else (suite,)
    for name in wanted:
        bounds = _bounds(name, n_max, m_max, order)
        if name == "identities":
            checks.extend(_identities_suite(bounds["n_max"], bounds["m_max"]))
        elif name == "bijection":
            checks.extend(_bijection_suite(bounds["n_max"], bounds["m_max"]))
        elif name == "series":
            checks.extend(_series_suite(bounds["order"], bounds["m_max"]))
        elif name == "counts":
            checks.extend(_counts_suite(bounds["n_max"], bounds["m_max"]))
    return VerificationReport(suite, checks, elapsed_seconds=time.perf_counter() - started)

"""Secant-tangent numbers A_n by several routes, cross-examined against each other.

A_n (OEIS A000111) counts up-down permutations of size n.  The normative
route is the self-convolution recurrence

    A_0 = A_1 = 1,     2 A_{n+1} = sum_k C(n,k) A_k A_{n-k}   for n >= 1.

The recurrence is never applied at n = 0: there it would force A_1 = 1/2,
so both seeds are required.  The other routes are evaluated exactly as
written and compared; several of them do not reproduce A_n, and the
cross-route verdicts record the exact per-n values instead of repairing
the formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, cosh, exp, factorial, log, pi

from scipy.integrate import quad

from .exact import Rat
from .permutations import ClassTag, class_count
from .verdict import build_verdict, discrepancy, measurement, ClaimVerdict

ENUMERATION_CROSSCHECK_CAP = 10
INTEGRAL_INDEX_CAP = 12


def a_recurrence(n_max: int) -> list[int]:
    """A_0..A_n_max from the seeded recurrence; parity of each convolution asserted."""
    if n_max < 1:
        raise ValueError("need n_max >= 1 (both seeds are required)")
    a = [1, 1]
    for n in range(1, n_max):
        total = sum(comb(n, k) * a[k] * a[n - k] for k in range(n + 1))
        if total % 2:
            raise ArithmeticError(f"convolution at n={n} is odd: {total}")
        a.append(total // 2)
    return a


def bernoulli_numbers(m_max: int) -> list[Rat]:
    """B_0..B_m_max (convention B_1 = -1/2) from sum_k C(n+1,k) B_k = 0."""
    b: list[Rat] = [Fraction(1)]
    for n in range(1, m_max + 1):
        acc = sum((Fraction(comb(n + 1, k)) * b[k] for k in range(n)), Fraction(0))
        b.append(-acc / (n + 1))
    return b


def stirling2_table(n_max: int) -> list[list[int]]:
    """S(n,k) for 0 <= k <= n <= n_max via S(n,k) = k S(n-1,k) + S(n-1,k-1)."""
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[n - 1]
        row = [0]
        for k in range(1, n + 1):
            above = prev[k] if k < len(prev) else 0
            row.append(k * above + prev[k - 1])
        rows.append(row)
    return rows


@dataclass(frozen=True)
class AndreTable:
    a: tuple[int, ...]
    bernoulli: tuple[Rat, ...]
    stirling2: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, n_max: int) -> AndreTable:
        return cls(
            a=tuple(a_recurrence(n_max)),
            bernoulli=tuple(bernoulli_numbers(n_max + 2)),
            stirling2=tuple(tuple(row) for row in stirling2_table(n_max)),
        )


def a_bernoulli(n: int) -> int:
    """A_n for odd n from (-1)^m 2^(2m+2) (2^(2m+2)-1) B_{2m+2} / (2m+2), n = 2m+1."""
    if n % 2 == 0:
        raise ValueError("the Bernoulli route only covers odd indices")
    m = (n - 1) // 2
    b = bernoulli_numbers(2 * m + 2)[2 * m + 2]
    value = Fraction((-1) ** m) * Fraction(2 ** (2 * m + 2) * (2 ** (2 * m + 2) - 1), 2 * m + 2) * b
    if value.denominator != 1 or value <= 0:
        raise ArithmeticError(f"Bernoulli route gave a non-positive-integer {value} at n={n}")
    return int(value)


def a_stirling_formula(n: int, variant: str = "main") -> Rat:
    """Exact value of the closed Stirling-number formulas, as written.

    main:         n! * sum_k  C(n,k) 2^-(k+1) S(n,k) / (k+1)
    alternative:  n! * sum_k  2^-(k+1)/(k+1)! * sum_j (-1)^(k-j) C(k,j) j^n

    No correction is applied; whether either matches A_n is decided by the
    cross-route verdicts.  Uses 0^0 = 1.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    if variant == "main":
        s2 = stirling2_table(n)[n]
        return factorial(n) * sum(
            (Fraction(comb(n, k), (k + 1) * 2 ** (k + 1)) * s2[k] for k in range(n + 1)),
            Fraction(0),
        )
    if variant == "alternative":
        total = Fraction(0)
        for k in range(n + 1):
            inner = sum(
                ((-1) ** (k - j) * comb(k, j) * (1 if j == 0 and n == 0 else j**n) for j in range(k + 1)),
                0,
            )
            total += Fraction(1, 2 ** (k + 1) * factorial(k + 1)) * inner
        return factorial(n) * total
    raise ValueError(f"unknown variant {variant!r}")


def a_integral(n: int, tolerance: float = 1e-9, intervals: int = 200) -> float:
    """Float value of (2 n!/pi) * integral_0^inf y^n sech^(n+1)(y) dy.

    The tail is cut where the bound y^n 2^(n+1) e^(-(n+1)y) drops below
    tolerance * 1e-3, then adaptive quadrature runs on the finite interval.
    Raises when the quadrature error estimate exceeds the tolerance.
    """
    if n < 0 or n > INTEGRAL_INDEX_CAP:
        raise ValueError(f"index must be within 0..{INTEGRAL_INDEX_CAP}")
    cut = tolerance * 1e-3
    y = 10.0
    while y**n * 2 ** (n + 1) * exp(-(n + 1) * y) >= cut:
        y += 5.0

    def integrand(t: float) -> float:
        return t**n / cosh(t) ** (n + 1)

    value, est_error = quad(
        integrand, 0.0, y, epsabs=min(1e-13, cut), epsrel=1e-12, limit=intervals
    )
    prefactor = 2.0 * factorial(n) / pi
    if prefactor * est_error > tolerance:
        raise ArithmeticError(
            f"quadrature at n={n} did not converge to {tolerance}: "
            f"error estimate {prefactor * est_error}"
        )
    return prefactor * value


def ratio_sequence(n_terms: int) -> list[Rat]:
    """Ratio-test terms (n+1) A_n / A_{n+1} for n = 1..n_terms (they approach pi/2)."""
    if n_terms < 2:
        raise ValueError("need at least two terms")
    a = a_recurrence(n_terms + 1)
    return [Fraction((n + 1) * a[n], a[n + 1]) for n in range(1, n_terms + 1)]


def _route_verdict(claim_id, statement, rows, params, instances):
    failures = [r for r in rows if r["kind"] == "discrepancy"]
    return build_verdict(claim_id, statement, "numbers", params, instances, len(failures), rows)


def cross_route_verdicts(n_max: int, ratio_terms: int = 20) -> list[ClaimVerdict]:
    """One verdict per route pair against the recurrence values.

    AA-REC        recurrence vs exhaustive enumeration (n <= 10)
    AA-BERN       recurrence vs Bernoulli route (odd n)
    AA-STIR-MAIN  recurrence vs the main Stirling formula
    AA-STIR-ALT   recurrence vs the alternative double sum
    AA-INT        recurrence vs quadrature of the integral formula (tol 1e-6)
    AA-RATIO      ratio terms approach pi/2 (monotone distance, final < 1e-3)
    """
    if n_max > INTEGRAL_INDEX_CAP:
        raise ValueError(f"n_max {n_max} exceeds {INTEGRAL_INDEX_CAP}")
    a = a_recurrence(max(n_max, ratio_terms + 1))
    verdicts = []

    enum_cap = min(n_max, ENUMERATION_CROSSCHECK_CAP)
    rows = []
    for n in range(enum_cap + 1):
        counted = class_count(ClassTag.ASCENDING_ANY, n)
        if counted != a[n]:
            rows.append(discrepancy(n=n, enumerated=counted, recurrence=a[n]))
    verdicts.append(
        _route_verdict(
            "AA-REC",
            "the seeded self-convolution recurrence reproduces the exhaustive "
            "count of up-down permutations",
            rows,
            {"n_max": enum_cap},
            enum_cap + 1,
        )
    )

    odd = [n for n in range(1, n_max + 1, 2)]
    rows = []
    for n in odd:
        via_b = a_bernoulli(n)
        if via_b != a[n]:
            rows.append(discrepancy(n=n, bernoulli=via_b, recurrence=a[n]))
    verdicts.append(
        _route_verdict(
            "AA-BERN",
            "A_(2m+1) = (-1)^m 2^(2m+2) (2^(2m+2)-1) B_(2m+2) / (2m+2)",
            rows,
            {"odd_n_max": n_max},
            len(odd),
        )
    )

    for claim_id, variant in (("AA-STIR-MAIN", "main"), ("AA-STIR-ALT", "alternative")):
        rows = []
        for n in range(n_max + 1):
            value = a_stirling_formula(n, variant)
            if value != a[n]:
                rows.append(discrepancy(n=n, formula=str(value), recurrence=a[n]))
        verdicts.append(
            _route_verdict(
                claim_id,
                f"the {variant} closed Stirling-sum formula evaluates to A_n",
                rows,
                {"n_max": n_max},
                n_max + 1,
            )
        )

    rows = []
    int_cap = min(n_max, INTEGRAL_INDEX_CAP)
    for n in range(int_cap + 1):
        value = a_integral(n, tolerance=1e-6)
        if abs(value - a[n]) > 1e-6:
            rows.append(discrepancy(n=n, quadrature=value, recurrence=a[n]))
        else:
            rows.append(measurement(n=n, quadrature=value, recurrence=a[n]))
    verdicts.append(
        _route_verdict(
            "AA-INT",
            "(2 n!/pi) * integral of y^n sech^(n+1) y over [0, inf) equals A_n "
            "within 1e-6",
            rows,
            {"n_max": int_cap},
            int_cap + 1,
        )
    )

    ratios = ratio_sequence(ratio_terms)
    distances = [abs(float(r) - pi / 2) for r in ratios]
    rows = []
    failed = 0
    for i, (r, d) in enumerate(zip(ratios, distances)):
        n = i + 1
        monotone_ok = i == 0 or d <= distances[i - 1]
        final_ok = n < ratio_terms or d < 1e-3
        item = dict(
            n=n,
            denominator_index=n + 1,
            ratio=str(r),
            value=float(r),
            distance_to_half_pi=d,
        )
        if monotone_ok and final_ok:
            rows.append(measurement(**item))
        else:
            failed += 1
            rows.append(discrepancy(**item))
    verdicts.append(
        build_verdict(
            "AA-RATIO",
            "(n+1) A_n / A_{n+1} approaches pi/2: distances decay monotonically "
            "and the final tested term is within 1e-3",
            "numbers",
            {"terms": ratio_terms},
            ratio_terms,
            failed,
            rows,
        )
    )
    return verdicts

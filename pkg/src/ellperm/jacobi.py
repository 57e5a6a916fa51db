"""Taylor coefficients of sn, cn, dn as exact polynomials in the modulus square m.

Ground truth comes from the first-order system

    sn' = cn dn,   cn' = -sn dn,   dn' = -m sn cn,
    sn(0) = 0,     cn(0) = dn(0) = 1,

with m = k^2 as the polynomial variable (the system only sees k^2, and using
m halves all degrees).  Parity makes sn odd and cn, dn even, so coefficients
are stored on the lattice

    s_n = coefficient of u^(2n+1)/(2n+1)!,   c_n, d_n = coefficient of u^(2n)/(2n)!

and the system becomes the coupled binomial convolutions

    s_n     =  sum_a C(2n,   2a)   c_a d_(n-a)
    c_(n+1) = -sum_a C(2n+1, 2a+1) s_a d_(n-a)
    d_(n+1) = -m * sum_a C(2n+1, 2a+1) s_a c_(n-a)

First values: s_0 = c_0 = d_0 = 1, then c_1 = -1, d_1 = -m, s_1 = -(1+m),
s_2 = 1 + 14m + m^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .exact import EgfSeries, Rat, WPoly, W_ONE, W_VAR, W_ZERO, poly_eval, wpoly
from .permutations import ClassTag, StatVariant, class_weight_poly
from .verdict import build_verdict, discrepancy, ClaimVerdict


@dataclass(frozen=True)
class JacobiTaylor:
    s: tuple[WPoly, ...]
    c: tuple[WPoly, ...]
    d: tuple[WPoly, ...]

    @property
    def count(self) -> int:
        """Number of computed trios; lattice indices 0..count-1."""
        return len(self.s)


def jacobi_taylor(n_max: int) -> JacobiTaylor:
    """Compute s_0..s_n_max, c_0..c_n_max, d_0..d_n_max exactly."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    s: list[WPoly] = []
    c: list[WPoly] = [W_ONE]
    d: list[WPoly] = [W_ONE]
    for n in range(n_max + 1):
        sn = W_ZERO
        for a in range(n + 1):
            sn = sn + comb(2 * n, 2 * a) * (c[a] * d[n - a])
        s.append(sn)
        if n < n_max:
            cn1 = W_ZERO
            dn1 = W_ZERO
            for a in range(n + 1):
                cn1 = cn1 + comb(2 * n + 1, 2 * a + 1) * (s[a] * d[n - a])
                dn1 = dn1 + comb(2 * n + 1, 2 * a + 1) * (s[a] * c[n - a])
            c.append(-cn1)
            d.append(-(dn1 * W_VAR))
    return JacobiTaylor(tuple(s), tuple(c), tuple(d))


def pack_series(t: JacobiTaylor, order: int) -> tuple[EgfSeries, EgfSeries, EgfSeries]:
    """Pack the lattice coefficients into full EGF series of the given order.

    Parity slots that the system forces to zero stay zero.  All three series
    share the order so they can be combined directly.
    """
    if order > 2 * t.count - 1:
        raise ValueError(f"order {order} needs more than {t.count} computed trios")
    sn = [W_ZERO] * (order + 1)
    cn = [W_ZERO] * (order + 1)
    dn = [W_ZERO] * (order + 1)
    for i in range(t.count):
        if 2 * i + 1 <= order:
            sn[2 * i + 1] = t.s[i]
        if 2 * i <= order:
            cn[2 * i] = t.c[i]
            dn[2 * i] = t.d[i]
    return (
        EgfSeries(order, tuple(sn)),
        EgfSeries(order, tuple(cn)),
        EgfSeries(order, tuple(dn)),
    )


def specialize(
    t: JacobiTaylor, m_value: Rat | int, order: int | None = None
) -> tuple[EgfSeries, EgfSeries, EgfSeries]:
    """Evaluate the coefficients at a numeric modulus square and pack as EGF series."""
    if order is None:
        order = 2 * t.count - 1
    sn, cn, dn = pack_series(t, order)
    evaluate = lambda f: EgfSeries(
        f.order, tuple(wpoly(poly_eval(p, m_value)) for p in f.coeffs)
    )
    return evaluate(sn), evaluate(cn), evaluate(dn)


class Substitution(Enum):
    """How the combinatorial weight variable meets the analytic modulus."""

    W_AS_M = "w-as-m"  # read the weight variable as m itself
    W_AS_K = "w-as-k"  # read the weight as k and substitute m = k^2


def _magnitude(p: WPoly) -> WPoly:
    return p.map_abs()


def compare_combinatorial(
    n_max: int,
    v: StatVariant,
    substitution: Substitution,
    cap: int = 12,
) -> list[ClaimVerdict]:
    """Compare class weight polynomials against analytic coefficient magnitudes.

    For each n <= n_max the weighted class polynomial (odd up-down of size
    2n+1 for sn, even up-down of size 2n for cn, even down-up for dn) is
    compared to |s_n|, |c_n|, |d_n| under the chosen substitution.  Emits one
    verdict per function family with per-n difference polynomials.
    """
    if 2 * n_max + 1 > cap:
        raise ValueError(f"n_max {n_max} needs sizes beyond cap {cap}")
    t = jacobi_taylor(n_max)
    families = (
        ("JAC-COEFF-SN", ClassTag.S_ODD, t.s, lambda n: 2 * n + 1, "odd up-down"),
        ("JAC-COEFF-CN", ClassTag.C_EVEN, t.c, lambda n: 2 * n, "even up-down"),
        ("JAC-COEFF-DN", ClassTag.D_EVEN, t.d, lambda n: 2 * n, "even down-up"),
    )
    verdicts = []
    for claim_id, tag, analytic, size_of, label in families:
        failures = []
        for n in range(n_max + 1):
            combinatorial = class_weight_poly(tag, size_of(n), v, cap)
            reference = _magnitude(analytic[n])
            if substitution is Substitution.W_AS_K:
                reference = reference.stretch(2)
            difference = combinatorial - reference
            if not difference.is_zero():
                failures.append(
                    discrepancy(
                        n=n,
                        size=size_of(n),
                        combinatorial=str(combinatorial),
                        analytic=str(reference),
                        difference=str(difference),
                        at_w_1=str(poly_eval(combinatorial, 1) - poly_eval(reference, 1)),
                    )
                )
        verdicts.append(
            build_verdict(
                claim_id,
                f"weight polynomials of {label} permutations match the magnitude "
                "of the corresponding elliptic Taylor coefficients",
                "series",
                {
                    "n_max": n_max,
                    "statistic": v.value,
                    "substitution": substitution.value,
                },
                n_max + 1,
                len(failures),
                failures,
            )
        )
    return verdicts

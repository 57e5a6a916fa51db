"""Claim registry and harness.

Every identity the suite examines is a registered claim with an executable
check; running a claim yields a ClaimVerdict with exact evidence.  Failures
are data, not process errors: several registered claims are false as stated
and the point of the report is the map of which hold, over what range.

Anchor claims (ANCHOR_CLAIMS) are the internal soundness cross-checks that
must pass; the CLI --strict flag escalates an anchor failure to a process
failure for CI use.

Report formats: json (schema "claim-report/1", documented in the README),
csv (one row per claim-evidence item), text (grouped by topic).  Identical
parameters give byte-identical reports.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb, factorial

from . import andre, bijection, cfrac, entringer, jacobi
from .exact import (
    W_VAR,
    W_ZERO,
    series_agreement_order,
    series_derive,
    series_mul,
    series_truncate,
)
from .permutations import (
    ClassTag,
    StatVariant,
    class_count,
    class_weight_poly,
    enumerate_class,
)
from .verdict import (
    ClaimVerdict,
    STATUS_PASS,
    build_verdict,
    discrepancy,
    measurement,
)

REPORT_SCHEMA = "claim-report/1"

ANCHOR_CLAIMS = frozenset(
    {"ENT-TABLE", "BIJ-RT", "BIJ-PEAK", "AA-REC", "AA-BERN", "JAC-1-analytic"}
)


@dataclass(frozen=True)
class Caps:
    """Size limits for a verification run; defaults finish in seconds."""

    perm_size: int = 9  # largest odd size for exhaustive permutation checks
    triangle_rows: int = 9  # rows for the triangle/candidate comparisons
    jacobi_order: int = 12  # EGF truncation for exact series identities
    series_order: int = 20  # expansion order for fraction/target comparisons
    cfrac_depth: int = 6
    andre_terms: int = 12

    def validate(self) -> None:
        if not 3 <= self.perm_size <= 11 or self.perm_size % 2 == 0:
            raise ValueError("perm_size must be odd and within 3..11")
        if not 1 <= self.triangle_rows <= 9:
            raise ValueError("triangle_rows must lie within 1..9")
        if not 2 <= self.jacobi_order <= 24:
            raise ValueError("jacobi_order must lie within 2..24")
        if not 4 <= self.series_order <= cfrac.MAX_EXPANSION_ORDER:
            raise ValueError(f"series_order must lie within 4..{cfrac.MAX_EXPANSION_ORDER}")
        if not 1 <= self.cfrac_depth <= 8:
            raise ValueError("cfrac_depth must lie within 1..8")
        if not 6 <= self.andre_terms <= 12:
            raise ValueError("andre_terms must lie within 6..12")

    def as_dict(self) -> dict:
        return {
            "perm_size": self.perm_size,
            "triangle_rows": self.triangle_rows,
            "jacobi_order": self.jacobi_order,
            "series_order": self.series_order,
            "cfrac_depth": self.cfrac_depth,
            "andre_terms": self.andre_terms,
        }


class _RunContext:
    """Shares expensive intermediates between claims within one run."""

    def __init__(self, caps: Caps):
        self.caps = caps

    @cached_property
    def entringer_verdicts(self) -> dict[str, ClaimVerdict]:
        vs = entringer.definition_candidates_check(self.caps.triangle_rows)
        return {v.claim_id: v for v in vs}

    @cached_property
    def bijection_verdicts(self) -> dict[str, ClaimVerdict]:
        vs = bijection.verify_split_properties(self.caps.perm_size)
        return {v.claim_id: v for v in vs}

    @cached_property
    def andre_verdicts(self) -> dict[str, ClaimVerdict]:
        vs = andre.cross_route_verdicts(self.caps.andre_terms)
        return {v.claim_id: v for v in vs}

    @cached_property
    def a_values(self) -> list[int]:
        return andre.a_recurrence(max(self.caps.series_order + 2, self.caps.andre_terms))

    @cached_property
    def schemes(self) -> dict[str, cfrac.CfScheme]:
        return cfrac.builtin_schemes()


def _merged(claim_id, statement, group, verdicts, extra_params=()) -> ClaimVerdict:
    """Combine sub-verdicts into one claim, tagging evidence with sub-parameters."""
    rows: list[dict] = []
    total = 0
    failed = 0
    for v in verdicts:
        total += v.instances_total
        failed += v.instances_failed
        tags = {k: v.parameters[k] for k in extra_params if k in v.parameters}
        for item in v.evidence:
            rows.append({**tags, **item} if tags else dict(item))
    params = dict(verdicts[0].parameters) if verdicts else {}
    for k in extra_params:
        params.pop(k, None)
    return build_verdict(claim_id, statement, group, params, total, failed, rows)


# --- claim runners ---------------------------------------------------------


def _run_ent_table(ctx: _RunContext) -> ClaimVerdict:
    return ctx.entringer_verdicts["ENT-TABLE"]


def _run_ent_def(ctx: _RunContext) -> ClaimVerdict:
    subs = [
        ctx.entringer_verdicts[claim_id]
        for claim_id in ("ENT-DEF-A", "ENT-DEF-B", "ENT-DEF-C", "ENT-DEF-D")
    ]
    return _merged(
        "ENT-DEF",
        "one of the four first/last-value enumeration rules defines E(n,k) "
        "cellwise (each candidate is compared to the recurrence triangle)",
        "triangle",
        subs,
        extra_params=("candidate",),
    )


def _run_ent_rowsum(ctx: _RunContext) -> ClaimVerdict:
    t = entringer.build_triangle(ctx.caps.triangle_rows + 1)
    rows = []
    total = 0
    failed = 0
    for n in range(1, ctx.caps.triangle_rows + 1, 2):
        total += 1
        rsum = entringer.row_sum(t, n)
        count = class_count(ClassTag.S_ODD, n)
        if rsum != count:
            failed += 1
            rows.append(
                discrepancy(
                    n=n,
                    row_sum=rsum,
                    odd_up_down_count=count,
                    next_diagonal=entringer.diagonal(t, n + 1),
                )
            )
    rows.append(
        measurement(
            note="row sums reproduce the next diagonal entry E(n+1,n+1), "
            "not the same-size alternating count"
        )
    )
    return build_verdict(
        "ENT-ROWSUM",
        "sum_k E(2m+1,k) equals the number of odd-size up-down permutations "
        "of size 2m+1",
        "triangle",
        {"triangle_rows": ctx.caps.triangle_rows},
        total,
        failed,
        rows,
    )


def _run_sin_egf(ctx: _RunContext) -> ClaimVerdict:
    rows = []
    total = 0
    failed = 0
    for n in range(1, ctx.caps.perm_size + 1, 2):
        total += 1
        count = class_count(ClassTag.S_ODD, n)
        # magnitude of n! [u^n] sin u is 1 at every odd n
        if count != 1:
            failed += 1
            rows.append(discrepancy(size=n, class_count=count, sine_coefficient_magnitude=1))
    return build_verdict(
        "SIN-EGF",
        "the EGF of odd-size up-down permutation counts is sin u "
        "(coefficient magnitudes all equal 1)",
        "series",
        {"perm_size": ctx.caps.perm_size},
        total,
        failed,
        rows,
    )


def _run_bij(claim_id: str):
    def run(ctx: _RunContext) -> ClaimVerdict:
        return ctx.bijection_verdicts[claim_id]

    return run


def _run_snk_weight(ctx: _RunContext) -> ClaimVerdict:
    rows = []
    total = 0
    failed = 0
    for size in range(3, ctx.caps.perm_size + 1, 2):
        for sigma in enumerate_class(ClassTag.S_ODD, size):
            total += 1
            s = bijection.split_at_max(sigma)
            whole = bijection.snake_encode(sigma).weight_exponent
            parts = (
                bijection.snake_encode(s.left).weight_exponent
                + bijection.snake_encode(s.right).weight_exponent
            )
            if whole != parts + 1:
                failed += 1
                rows.append(
                    discrepancy(size=size, sigma=str(sigma), flags=whole, block_flags=parts)
                )
    return build_verdict(
        "SNK-WEIGHT",
        "zigzag flag counts are additive under the split: removing the maximum "
        "accounts for exactly one elliptic flag",
        "bijection",
        {"perm_size": ctx.caps.perm_size},
        total,
        failed,
        rows,
    )


def _run_jac1_analytic(ctx: _RunContext) -> ClaimVerdict:
    order = ctx.caps.jacobi_order
    t = jacobi.jacobi_taylor(order // 2 + 1)
    sn, cn, dn = jacobi.pack_series(t, order)
    lhs = series_derive(sn)
    rhs = series_mul(series_truncate(cn, order - 1), series_truncate(dn, order - 1))
    first_diff = series_agreement_order(lhs, rhs)
    rows = []
    failed = 0
    if first_diff is not None:
        failed = 1
        rows.append(
            discrepancy(
                first_difference_order=first_diff,
                derivative_coefficient=str(lhs.coefficient(first_diff)),
                product_coefficient=str(rhs.coefficient(first_diff)),
            )
        )
    return build_verdict(
        "JAC-1-analytic",
        "d/du sn = cn * dn as exact truncated EGF series with coefficients "
        "polynomial in the modulus square",
        "series",
        {"order": order},
        order,  # coefficient slots compared
        failed,
        rows,
    )


def _run_jac1_combinatorial(v: StatVariant):
    def run(ctx: _RunContext) -> ClaimVerdict:
        n_max = (ctx.caps.perm_size - 1) // 2
        rows = []
        total = 0
        failed = 0
        for n in range(n_max + 1):
            lhs = class_weight_poly(ClassTag.S_ODD, 2 * n + 1, v)
            rhs = W_ZERO
            for a in range(n + 1):
                c_poly = class_weight_poly(ClassTag.C_EVEN, 2 * a, v)
                d_poly = class_weight_poly(ClassTag.D_EVEN, 2 * (n - a), v)
                rhs = rhs + comb(2 * n, 2 * a) * (c_poly * d_poly)
            for route, candidate in (("plain", rhs), ("extra-w", rhs * W_VAR)):
                total += 1
                difference = lhs - candidate
                if not difference.is_zero():
                    failed += 1
                    rows.append(
                        discrepancy(
                            n=n,
                            size=2 * n + 1,
                            route=route,
                            marked_class_poly=str(lhs),
                            convolution=str(candidate),
                            difference=str(difference),
                        )
                    )
        return build_verdict(
            f"JAC-1-combinatorial-{v.value}",
            "the weighted class polynomials satisfy d/du sn_w = cn_w * dn_w "
            f"for statistic {v.value}, with or without one extra factor w",
            "series",
            {"statistic": v.value, "n_max": n_max},
            total,
            failed,
            rows,
        )

    return run


def _run_jac_coeff(claim_id: str):
    def run(ctx: _RunContext) -> ClaimVerdict:
        n_max = (ctx.caps.perm_size - 1) // 2
        subs = []
        for v in StatVariant:
            for substitution in jacobi.Substitution:
                for verdict in jacobi.compare_combinatorial(n_max, v, substitution):
                    if verdict.claim_id == claim_id:
                        subs.append(verdict)
        labels = {
            "JAC-COEFF-SN": "odd up-down",
            "JAC-COEFF-CN": "even up-down",
            "JAC-COEFF-DN": "even down-up",
        }
        return _merged(
            claim_id,
            f"some statistic/substitution pairing makes the {labels[claim_id]} "
            "weight polynomials equal the elliptic Taylor coefficient magnitudes",
            "series",
            subs,
            extra_params=("statistic", "substitution"),
        )

    return run


def _sin_target(order: int) -> cfrac.OgfSeries:
    return cfrac.ogf_from_rationals(
        Fraction((-1) ** ((i - 1) // 2), factorial(i)) if i % 2 else Fraction(0)
        for i in range(order + 1)
    )


def _tan_target(order: int, a_values: list[int]) -> cfrac.OgfSeries:
    return cfrac.ogf_from_rationals(
        Fraction(a_values[i], factorial(i)) if i % 2 else Fraction(0)
        for i in range(order + 1)
    )


def _tanh_target(order: int, a_values: list[int]) -> cfrac.OgfSeries:
    return cfrac.ogf_from_rationals(
        Fraction((-1) ** ((i - 1) // 2) * a_values[i], factorial(i)) if i % 2 else Fraction(0)
        for i in range(order + 1)
    )


def _run_cf(claim_id: str, scheme_name: str, target_name: str, m_value=None):
    def run(ctx: _RunContext) -> ClaimVerdict:
        order = ctx.caps.series_order
        targets = {
            "sin": _sin_target,
            "tan": lambda o: _tan_target(o, ctx.a_values),
            "tanh": lambda o: _tanh_target(o, ctx.a_values),
        }
        target = targets[target_name](order)
        scheme = ctx.schemes[scheme_name]
        rows = []
        total = 0
        failed = 0
        for depth in range(1, ctx.caps.cfrac_depth + 1):
            total += 1
            first_diff = cfrac.agreement_order(scheme, depth, target, order, m_value)
            # a genuine expansion deepens: depth d must match through order 2d+1
            required = min(2 * depth + 2, order + 1)
            agreed = order + 1 if first_diff is None else first_diff
            item = dict(depth=depth, agreed_through=agreed - 1, required_through=required - 1)
            if agreed < required:
                failed += 1
                rows.append(discrepancy(**item))
            else:
                rows.append(measurement(**item))
        return build_verdict(
            claim_id,
            f"the {scheme_name} fraction expands {target_name}: the depth-d "
            "convergent agrees through order 2d+1",
            "fractions",
            {
                "scheme": scheme_name,
                "target": target_name,
                "order": order,
                "max_depth": ctx.caps.cfrac_depth,
                **({"m": str(m_value)} if m_value is not None else {}),
            },
            total,
            failed,
            rows,
        )

    return run


def _run_aa(claim_id: str):
    def run(ctx: _RunContext) -> ClaimVerdict:
        return ctx.andre_verdicts[claim_id]

    return run


@dataclass(frozen=True)
class _ClaimSpec:
    claim_id: str
    runner: object = field(repr=False)


def _registry() -> list[_ClaimSpec]:
    specs: list[_ClaimSpec] = [
        _ClaimSpec("ENT-TABLE", _run_ent_table),
        _ClaimSpec("ENT-DEF", _run_ent_def),
        _ClaimSpec("ENT-ROWSUM", _run_ent_rowsum),
        _ClaimSpec("BIJ-RT", _run_bij("BIJ-RT")),
        _ClaimSpec("BIJ-PEAK", _run_bij("BIJ-PEAK")),
        _ClaimSpec("BIJ-PARITY", _run_bij("BIJ-PARITY")),
        _ClaimSpec("SNK-WEIGHT", _run_snk_weight),
        _ClaimSpec("SIN-EGF", _run_sin_egf),
        _ClaimSpec("JAC-1-analytic", _run_jac1_analytic),
    ]
    for v in StatVariant:
        specs.append(
            _ClaimSpec(f"JAC-1-combinatorial-{v.value}", _run_jac1_combinatorial(v))
        )
    for claim_id in ("JAC-COEFF-SN", "JAC-COEFF-CN", "JAC-COEFF-DN"):
        specs.append(_ClaimSpec(claim_id, _run_jac_coeff(claim_id)))
    specs += [
        _ClaimSpec("CF-TAN", _run_cf("CF-TAN", "tan-classical", "tan")),
        _ClaimSpec("CF-SIN", _run_cf("CF-SIN", "sine-candidate", "sin")),
        _ClaimSpec("CF-TANH", _run_cf("CF-TANH", "tanh-candidate", "tanh")),
        _ClaimSpec("CF-SN-K0", _run_cf("CF-SN-K0", "elliptic", "sin", m_value=0)),
    ]
    for claim_id in ("AA-REC", "AA-BERN", "AA-STIR-MAIN", "AA-STIR-ALT", "AA-INT", "AA-RATIO"):
        specs.append(_ClaimSpec(claim_id, _run_aa(claim_id)))
    return specs


def registered_claim_ids() -> list[str]:
    return [spec.claim_id for spec in _registry()]


def run_claims(
    selection: set[str] | None = None, caps: Caps = Caps()
) -> list[ClaimVerdict]:
    """Run the selected claims (all when selection is None), in registry order."""
    caps.validate()
    registry = _registry()
    known = {spec.claim_id for spec in registry}
    if selection is not None:
        unknown = set(selection) - known
        if unknown:
            raise ValueError(f"unknown claim ids: {sorted(unknown)}")
    ctx = _RunContext(caps)
    verdicts = []
    for spec in registry:
        if selection is None or spec.claim_id in selection:
            verdicts.append(spec.runner(ctx))
    return verdicts


def anchors_pass(verdicts: list[ClaimVerdict]) -> bool:
    return all(
        v.status == STATUS_PASS for v in verdicts if v.claim_id in ANCHOR_CLAIMS
    )


# --- report rendering ------------------------------------------------------


def render_report(verdicts: list[ClaimVerdict], format: str = "text") -> str:
    if format == "json":
        return _render_json(verdicts)
    if format == "csv":
        return _render_csv(verdicts)
    if format == "text":
        return _render_text(verdicts)
    raise ValueError(f"unknown report format {format!r}")


def _render_json(verdicts: list[ClaimVerdict]) -> str:
    doc = {
        "schema": REPORT_SCHEMA,
        "claim_count": len(verdicts),
        "claims": [v.as_dict() for v in verdicts],
    }
    return json.dumps(doc, indent=2) + "\n"


def _render_csv(verdicts: list[ClaimVerdict]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        [
            "claim_id",
            "group",
            "status",
            "instances_total",
            "instances_failed",
            "evidence_index",
            "evidence_kind",
            "evidence",
        ]
    )
    for v in verdicts:
        base = [v.claim_id, v.group, v.status, v.instances_total, v.instances_failed]
        if not v.evidence:
            writer.writerow(base + ["", "", ""])
            continue
        for i, item in enumerate(v.evidence):
            payload = {k: val for k, val in item.items() if k != "kind"}
            writer.writerow(
                base + [i, item.get("kind", ""), json.dumps(payload, default=str)]
            )
    return out.getvalue()


_GROUP_ORDER = ("triangle", "bijection", "series", "fractions", "numbers")


def _render_text(verdicts: list[ClaimVerdict]) -> str:
    lines = [f"claim report ({len(verdicts)} claims)"]
    by_group: dict[str, list[ClaimVerdict]] = {}
    for v in verdicts:
        by_group.setdefault(v.group, []).append(v)
    groups = [g for g in _GROUP_ORDER if g in by_group]
    groups += [g for g in by_group if g not in _GROUP_ORDER]
    for group in groups:
        lines.append("")
        lines.append(f"== {group} ==")
        for v in by_group[group]:
            lines.append(
                f"{v.status.upper():8s}{v.claim_id:40s}"
                f"instances={v.instances_total} failed={v.instances_failed}"
            )
            lines.append(f"        {v.statement}")
            shown = 0
            for item in v.evidence:
                if item.get("kind") != "discrepancy":
                    continue
                payload = {k: val for k, val in item.items() if k != "kind"}
                lines.append(f"          - {json.dumps(payload, default=str)}")
                shown += 1
                if shown == 3:
                    break
            remaining = v.instances_failed - shown
            if shown and remaining > 0:
                lines.append(f"          ... {remaining} more failing instances")
    return "\n".join(lines) + "\n"

"""J-fraction convergents expanded as exact power series.

A scheme is the data of a fraction

    lead / (alpha_1 - beta_1 u^2 / (alpha_2 - beta_2 u^2 / (alpha_3 - ...)))

with lead either u ("u-over") or 1 ("one-over").  The depth-d convergent
truncates after beta_d, i.e. uses alpha_1..alpha_(d+1) and beta_1..beta_d.
Coefficient streams map the level index n >= 1 to a weight polynomial in the
modulus square m.

Expansion works in the ordinary (non-factorial) coefficient convention,
where continued-fraction algebra is natural; to_egf converts at the
boundary.  All coefficients are exact.  Series inversion divides by the
constant-in-u term of each denominator, so symbolic-in-m expansion requires
every alpha_n to be a nonzero constant; with a numeric modulus (m_value)
arbitrary streams work.

Streams can be given as closed-form strings in n and m with the grammar

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' INT)?
    atom   := INT | 'n' | 'm' | '(' expr ')' | '-' atom

e.g. "2*n-1" or "n^2*m".  Scheme files are JSON objects with keys
name, leading ("u-over" or "one-over"), alpha, beta.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .exact import (
    EgfSeries,
    Rat,
    WPoly,
    W_ONE,
    W_VAR,
    W_ZERO,
    poly_eval,
    poly_invert_unit,
    wpoly,
)

MAX_EXPANSION_ORDER = 40

Stream = Callable[[int], WPoly]


@dataclass(frozen=True)
class CfScheme:
    name: str
    alpha: Stream
    beta: Stream
    leading: str = "u-over"  # "u-over" or "one-over"

    def __post_init__(self) -> None:
        if self.leading not in ("u-over", "one-over"):
            raise ValueError(f"unknown leading kind {self.leading!r}")


@dataclass(frozen=True)
class OgfSeries:
    """Ordinary power series: coefficient i (a WPoly) multiplies u^i."""

    order: int
    coeffs: tuple[WPoly, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must be order + 1")

    def coefficient(self, i: int) -> WPoly:
        return self.coeffs[i]


def to_egf(series: OgfSeries) -> EgfSeries:
    """Multiply coefficient i by i! to move to the EGF convention."""
    return EgfSeries(
        series.order,
        tuple(c * factorial(i) for i, c in enumerate(series.coeffs)),
    )


# --- coefficient-stream mini-grammar -------------------------------------

_Ast = tuple


class StreamSyntaxError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> _Ast:
        node = self._expr()
        self._skip_spaces()
        if self.pos != len(self.text):
            raise StreamSyntaxError(
                f"unexpected {self.text[self.pos]!r} at position {self.pos} in {self.text!r}"
            )
        return node

    def _skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expr(self) -> _Ast:
        node = self._term()
        while self._peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            right = self._term()
            node = (op, node, right)
        return node

    def _term(self) -> _Ast:
        node = self._factor()
        while self._peek() == "*":
            self.pos += 1
            node = ("*", node, self._factor())
        return node

    def _factor(self) -> _Ast:
        node = self._atom()
        if self._peek() == "^":
            self.pos += 1
            self._skip_spaces()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                raise StreamSyntaxError(f"exponent expected at position {start} in {self.text!r}")
            node = ("^", node, int(self.text[start : self.pos]))
        return node

    def _atom(self) -> _Ast:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            node = self._expr()
            if self._peek() != ")":
                raise StreamSyntaxError(f"missing ')' in {self.text!r}")
            self.pos += 1
            return node
        if ch == "-":
            self.pos += 1
            return ("neg", self._atom())
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return ("int", int(self.text[start : self.pos]))
        if ch in ("n", "m"):
            self.pos += 1
            return ("var", ch)
        raise StreamSyntaxError(f"unexpected {ch!r} at position {self.pos} in {self.text!r}")


def _eval_ast(node: _Ast, n: int) -> WPoly:
    kind = node[0]
    if kind == "int":
        return wpoly(node[1])
    if kind == "var":
        return wpoly(n) if node[1] == "n" else W_VAR
    if kind == "neg":
        return -_eval_ast(node[1], n)
    if kind == "+":
        return _eval_ast(node[1], n) + _eval_ast(node[2], n)
    if kind == "-":
        return _eval_ast(node[1], n) - _eval_ast(node[2], n)
    if kind == "*":
        return _eval_ast(node[1], n) * _eval_ast(node[2], n)
    if kind == "^":
        return _eval_ast(node[1], n) ** node[2]
    raise AssertionError(f"unreachable node {node!r}")


def parse_stream(text: str) -> Stream:
    """Compile a closed-form string in n and m into a coefficient stream."""
    ast = _Parser(text).parse()

    def stream(n: int) -> WPoly:
        return _eval_ast(ast, n)

    return stream


def scheme_from_mapping(data: dict) -> CfScheme:
    try:
        return CfScheme(
            name=str(data["name"]),
            alpha=parse_stream(str(data["alpha"])),
            beta=parse_stream(str(data["beta"])),
            leading=str(data.get("leading", "u-over")),
        )
    except KeyError as missing:
        raise ValueError(f"scheme definition is missing {missing}") from None


def load_scheme(path: str | Path) -> CfScheme:
    """Read a scheme definition from a JSON file."""
    return scheme_from_mapping(json.loads(Path(path).read_text()))


def builtin_schemes() -> dict[str, CfScheme]:
    """The four catalogued schemes.

    elliptic        alpha_n = 2n-1, beta_n = n^2 m   (leading denominators
                    1, 3, 5, 7 and numerators 1^2 m, 2^2 m, ...)
    sine-candidate  same alphas, beta_n = n^2        (claimed to expand sin)
    tanh-candidate  same alphas, beta_n = 2n         (claimed to expand tanh)
    tan-classical   same alphas, beta_n = 1          (the classical tan fraction)
    """
    specs = {
        "elliptic": "n^2*m",
        "sine-candidate": "n^2",
        "tanh-candidate": "2*n",
        "tan-classical": "1",
    }
    alpha = parse_stream("2*n-1")
    return {
        name: CfScheme(name=name, alpha=alpha, beta=parse_stream(beta), leading="u-over")
        for name, beta in specs.items()
    }


# --- convergent expansion -------------------------------------------------


def _series_mul(a: Sequence[WPoly], b: Sequence[WPoly], order: int) -> list[WPoly]:
    out = [W_ZERO] * (order + 1)
    for i, p in enumerate(a):
        if i > order or p.is_zero():
            continue
        for j, q in enumerate(b):
            if i + j > order:
                break
            if not q.is_zero():
                out[i + j] = out[i + j] + p * q
    return out


def _series_inv(a: Sequence[WPoly], order: int) -> list[WPoly]:
    # 1/a as a power series in u; the u^0 coefficient must be a unit (a
    # nonzero constant polynomial), otherwise the result leaves the ring.
    head = a[0]
    if head.is_zero():
        raise ValueError("series with zero constant term is not invertible")
    inv0 = poly_invert_unit(head)
    out = [inv0] + [W_ZERO] * order
    for k in range(1, order + 1):
        acc = W_ZERO
        for i in range(1, min(k, len(a) - 1) + 1):
            acc = acc + a[i] * out[k - i]
        out[k] = -(inv0 * acc)
    return out


def _stream_value(stream: Stream, n: int, m_value: Rat | int | None) -> WPoly:
    value = stream(n)
    if m_value is None:
        return value
    return wpoly(poly_eval(value, m_value))


def cf_convergent_series(
    scheme: CfScheme,
    depth: int,
    order: int,
    m_value: Rat | int | None = None,
) -> OgfSeries:
    """Expand the depth-level truncation bottom-up to the requested order.

    With m_value given, all coefficients are specialized before expansion;
    otherwise the expansion is symbolic in m and every alpha_n must be a
    nonzero constant.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if not 0 <= order <= MAX_EXPANSION_ORDER:
        raise ValueError(f"order must lie within 0..{MAX_EXPANSION_ORDER}")
    tail: list[WPoly] = [_stream_value(scheme.alpha, depth + 1, m_value)] + [W_ZERO] * order
    for level in range(depth, 0, -1):
        inv_tail = _series_inv(tail, order)
        beta = _stream_value(scheme.beta, level, m_value)
        level_series = [_stream_value(scheme.alpha, level, m_value)] + [W_ZERO] * order
        for k in range(2, order + 1):
            level_series[k] = level_series[k] - beta * inv_tail[k - 2]
        tail = level_series
    inv = _series_inv(tail, order)
    if scheme.leading == "u-over":
        coeffs = [W_ZERO] + inv[:order]
    else:
        coeffs = inv
    return OgfSeries(order, tuple(coeffs))


def agreement_order(
    scheme: CfScheme,
    depth: int,
    target: OgfSeries | Iterable[WPoly],
    order: int,
    m_value: Rat | int | None = None,
) -> int | None:
    """First index where the convergent and the target differ; None if none does."""
    convergent = cf_convergent_series(scheme, depth, order, m_value)
    if isinstance(target, OgfSeries):
        target_coeffs = target.coeffs
    else:
        target_coeffs = tuple(target)
    if len(target_coeffs) < order + 1:
        raise ValueError(
            f"target provides {len(target_coeffs)} coefficients, order {order} needs {order + 1}"
        )
    for i in range(order + 1):
        if convergent.coeffs[i] != target_coeffs[i]:
            return i
    return None


def ogf_from_rationals(values: Iterable[Rat | int]) -> OgfSeries:
    coeffs = tuple(wpoly(v) for v in values)
    return OgfSeries(len(coeffs) - 1, coeffs)

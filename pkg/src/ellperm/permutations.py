"""Alternating permutations: classes, local statistics, weighted class polynomials.

The classes are named after the series they feed:

  S_ODD          odd-size up-down permutations  p1 < p2 > p3 < ... > p(2n+1)
  C_EVEN         even-size up-down permutations (includes the empty one)
  D_EVEN         even-size down-up permutations (includes the empty one)
  DOWN_UP_ODD    odd-size down-up permutations
  ASCENDING_ANY  up-down permutations of any size (the secant-tangent objects)

Membership is decided purely by the comparison pattern, so the size-1
permutation is vacuously a member of both odd classes; classify() resolves
the tie in favour of S_ODD, and the empty permutation (a member of C_EVEN,
D_EVEN and ASCENDING_ANY by convention) classifies as C_EVEN.

The peak statistic has no canonical boundary convention, so every statistic
is an explicit StatVariant and callers must pick one; the verification
harness compares them rather than hard-wiring a choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Sequence

from .exact import WPoly

DEFAULT_ENUMERATION_CAP = 12


@dataclass(frozen=True)
class Perm:
    """A permutation of {1..n} stored as its one-line word."""

    values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        vs = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vs)
        n = len(vs)
        if sorted(vs) != list(range(1, n + 1)):
            raise ValueError(f"{vs} is not a permutation of 1..{n}")

    @classmethod
    def of(cls, *values: int) -> Perm:
        return cls(tuple(values))

    @property
    def size(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __str__(self) -> str:
        return " ".join(map(str, self.values)) if self.values else "(empty)"


class ClassTag(Enum):
    S_ODD = "sn"
    C_EVEN = "cn"
    D_EVEN = "dn"
    DOWN_UP_ODD = "down-up-odd"
    ASCENDING_ANY = "ascending"
    OTHER = "other"


class StatVariant(Enum):
    INTERIOR_PEAKS = "interior-peaks"
    INTERIOR_VALLEYS = "interior-valleys"
    PEAKS_WITH_FINAL = "peaks-with-final"
    VALLEYS_WITH_INITIAL = "valleys-with-initial"


def is_up_down(values: Sequence[int]) -> bool:
    """True when comparisons alternate starting with an ascent (vacuous for n <= 1)."""
    return all(
        (values[i] < values[i + 1]) == (i % 2 == 0) for i in range(len(values) - 1)
    )


def is_down_up(values: Sequence[int]) -> bool:
    """True when comparisons alternate starting with a descent (vacuous for n <= 1)."""
    return all(
        (values[i] > values[i + 1]) == (i % 2 == 0) for i in range(len(values) - 1)
    )


def classify(p: Perm) -> ClassTag:
    """Single most specific tag; ties broken toward the up-down reading."""
    n = p.size
    if n == 0:
        return ClassTag.C_EVEN
    if is_up_down(p.values):
        return ClassTag.S_ODD if n % 2 else ClassTag.C_EVEN
    if is_down_up(p.values):
        return ClassTag.DOWN_UP_ODD if n % 2 else ClassTag.D_EVEN
    return ClassTag.OTHER


def is_member(p: Perm, tag: ClassTag) -> bool:
    n = p.size
    if tag is ClassTag.S_ODD:
        return n % 2 == 1 and is_up_down(p.values)
    if tag is ClassTag.C_EVEN:
        return n % 2 == 0 and is_up_down(p.values)
    if tag is ClassTag.D_EVEN:
        return n % 2 == 0 and is_down_up(p.values)
    if tag is ClassTag.DOWN_UP_ODD:
        return n % 2 == 1 and is_down_up(p.values)
    if tag is ClassTag.ASCENDING_ANY:
        return is_up_down(p.values)
    if tag is ClassTag.OTHER:
        return not (is_up_down(p.values) or is_down_up(p.values))
    raise ValueError(f"unknown class tag {tag!r}")


def interior_peak_flags(values: Sequence[int]) -> tuple[bool, ...]:
    n = len(values)
    return tuple(
        0 < i < n - 1 and values[i - 1] < values[i] > values[i + 1] for i in range(n)
    )


def stat(p: Perm, v: StatVariant) -> int:
    """Count of the chosen local-extremum statistic; 0 for sizes below 2."""
    w = p.values
    n = len(w)
    if n < 2:
        return 0
    peaks = sum(1 for i in range(1, n - 1) if w[i - 1] < w[i] > w[i + 1])
    valleys = sum(1 for i in range(1, n - 1) if w[i - 1] > w[i] < w[i + 1])
    if v is StatVariant.INTERIOR_PEAKS:
        return peaks
    if v is StatVariant.INTERIOR_VALLEYS:
        return valleys
    if v is StatVariant.PEAKS_WITH_FINAL:
        return peaks + (1 if w[-2] < w[-1] else 0)
    if v is StatVariant.VALLEYS_WITH_INITIAL:
        return valleys + (1 if w[0] < w[1] else 0)
    raise ValueError(f"unknown statistic variant {v!r}")


def _alternating_words(n: int, first_ascent: bool) -> Iterator[tuple[int, ...]]:
    # Backtracking with the alternation constraint applied at every step;
    # candidates are tried in increasing order, so output is lexicographic.
    if n == 0:
        yield ()
        return
    word: list[int] = []
    used = [False] * (n + 1)

    def extend(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(word)
            return
        prev = word[-1]
        go_up = (pos % 2 == 1) if first_ascent else (pos % 2 == 0)
        candidates = range(prev + 1, n + 1) if go_up else range(1, prev)
        for v in candidates:
            if not used[v]:
                used[v] = True
                word.append(v)
                yield from extend(pos + 1)
                word.pop()
                used[v] = False

    for v in range(1, n + 1):
        used[v] = True
        word.append(v)
        yield from extend(1)
        word.pop()
        used[v] = False


def enumerate_class(
    tag: ClassTag, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[Perm]:
    """Yield every size-n member of the class once, in lexicographic order.

    Sizes whose parity excludes membership yield nothing.  Raises when n
    exceeds the enumeration cap (default 12).
    """
    if n < 0:
        raise ValueError("size must be non-negative")
    if n > cap:
        raise ValueError(f"size {n} exceeds enumeration cap {cap}")
    if tag is ClassTag.OTHER:
        raise ValueError("the OTHER tag is not an enumerable class")
    if tag is ClassTag.ASCENDING_ANY:
        parity_ok, first_ascent = True, True
    elif tag is ClassTag.S_ODD:
        parity_ok, first_ascent = n % 2 == 1, True
    elif tag is ClassTag.C_EVEN:
        parity_ok, first_ascent = n % 2 == 0, True
    elif tag is ClassTag.D_EVEN:
        parity_ok, first_ascent = n % 2 == 0, False
    elif tag is ClassTag.DOWN_UP_ODD:
        parity_ok, first_ascent = n % 2 == 1, False
    else:
        raise ValueError(f"unknown class tag {tag!r}")
    if not parity_ok:
        return
    for word in _alternating_words(n, first_ascent):
        yield Perm(word)


@lru_cache(maxsize=None)
def _weight_poly(tag: ClassTag, n: int, v: StatVariant, cap: int) -> WPoly:
    histogram: dict[int, int] = {}
    for p in enumerate_class(tag, n, cap):
        s = stat(p, v)
        histogram[s] = histogram.get(s, 0) + 1
    if not histogram:
        return WPoly()
    coeffs = [0] * (max(histogram) + 1)
    for s, count in histogram.items():
        coeffs[s] = count
    return WPoly(tuple(coeffs))


def class_weight_poly(
    tag: ClassTag, n: int, v: StatVariant, cap: int = DEFAULT_ENUMERATION_CAP
) -> WPoly:
    """Sum of w^stat over the size-n class members; value at w=1 is the cardinality."""
    return _weight_poly(tag, n, v, cap)


def class_count(tag: ClassTag, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    count = class_weight_poly(tag, n, StatVariant.INTERIOR_PEAKS, cap).eval(1)
    return int(count)


def standardize(word: Sequence[int]) -> Perm:
    """Order-isomorphic permutation of {1..len(word)}; preserves every StatVariant."""
    entries = list(word)
    if len(set(entries)) != len(entries):
        raise ValueError(f"duplicate entries in {entries}")
    rank = {value: i + 1 for i, value in enumerate(sorted(entries))}
    return Perm(tuple(rank[value] for value in entries))

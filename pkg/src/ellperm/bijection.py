"""Split-at-maximum decomposition of odd up-down permutations, and its inverse.

For sigma in S_ODD of size >= 3 the maximum sits at an even position 2j
(positions 1, 3, 5, ... are valleys).  split_at_max removes it and returns

  left_values   the exact set of values in the prefix before the maximum
  left          the standardized prefix (an odd up-down permutation)
  right         the standardized suffix (also an odd up-down permutation)
  max_position  2j

No element is discarded: dropping any entry would make the map lossy, and
merge() could no longer be an inverse.  The value set is the binomial-choice
datum of the decomposition; left/right alone do not determine sigma.

merge() relabels left into left_values, right into the complement, inserts
the maximum between them, and recovers sigma exactly.

snake_encode gives the zigzag-path view of an alternating permutation with
its interior peaks flagged; the flag count is the elliptic exponent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .permutations import (
    ClassTag,
    Perm,
    StatVariant,
    classify,
    enumerate_class,
    interior_peak_flags,
    is_down_up,
    is_member,
    is_up_down,
    stat,
    standardize,
)
from .verdict import build_verdict, discrepancy, measurement, ClaimVerdict

SPLIT_SIZE_CAP = 11


@dataclass(frozen=True)
class SplitResult:
    left_values: frozenset[int]
    left: Perm
    right: Perm
    max_position: int


@dataclass(frozen=True)
class Snake:
    """Zigzag-path view: levels are the permutation values, flags mark interior peaks."""

    levels: tuple[int, ...]
    elliptic_flags: tuple[bool, ...]

    @property
    def weight_exponent(self) -> int:
        return sum(self.elliptic_flags)


def split_at_max(p: Perm) -> SplitResult:
    """Split an odd up-down permutation of size >= 3 at its maximal value."""
    if not is_member(p, ClassTag.S_ODD) or p.size < 3:
        raise ValueError(f"{p} is not an odd up-down permutation of size >= 3")
    idx = p.values.index(p.size)
    left_word = p.values[:idx]
    right_word = p.values[idx + 1 :]
    return SplitResult(
        left_values=frozenset(left_word),
        left=standardize(left_word),
        right=standardize(right_word),
        max_position=idx + 1,
    )


def merge(s: SplitResult, total_size: int) -> Perm:
    """Inverse of split_at_max: rebuild the permutation from blocks and value set."""
    lsize, rsize = s.left.size, s.right.size
    if lsize + rsize + 1 != total_size:
        raise ValueError(
            f"block sizes {lsize}+{rsize}+1 do not add up to {total_size}"
        )
    if lsize % 2 == 0:
        raise ValueError("left block must have odd size")
    if s.max_position != lsize + 1:
        raise ValueError(
            f"max position {s.max_position} inconsistent with left size {lsize}"
        )
    left_sorted = sorted(s.left_values)
    if len(left_sorted) != lsize:
        raise ValueError("left value set size does not match the left block")
    if left_sorted and not (1 <= left_sorted[0] and left_sorted[-1] < total_size):
        raise ValueError("left values must lie strictly below the maximum")
    complement = sorted(set(range(1, total_size)) - s.left_values)
    merged = (
        tuple(left_sorted[v - 1] for v in s.left.values)
        + (total_size,)
        + tuple(complement[v - 1] for v in s.right.values)
    )
    out = Perm(merged)
    if not is_member(out, ClassTag.S_ODD):
        raise ValueError(f"blocks do not merge into an odd up-down permutation: {out}")
    return out


def snake_encode(p: Perm) -> Snake:
    """Encode an alternating permutation as a flagged zigzag path."""
    if not (is_up_down(p.values) or is_down_up(p.values)):
        raise ValueError(f"{p} is not alternating")
    return Snake(levels=p.values, elliptic_flags=interior_peak_flags(p.values))


def _word_interior_peaks(word: tuple[int, ...]) -> int:
    return sum(interior_peak_flags(word))


def verify_split_properties(max_size: int, cap: int = SPLIT_SIZE_CAP) -> list[ClaimVerdict]:
    """Exhaustively check the split over S_ODD up to max_size (odd, <= cap).

    Returns three verdicts:

      BIJ-RT      merge(split(sigma)) == sigma and the split is injective
      BIJ-PEAK    interior peaks are additive: nu(sigma) = nu(L) + nu(R) + 1
                  where L, R are the raw (unstandardized) blocks
      BIJ-PARITY  the measured block types against the claimed types
                  (left: even-size up-down of size 2j-2; right: even-size
                  down-up of size 2(n-j)) -- recorded as measured, not assumed
    """
    if max_size > cap:
        raise ValueError(f"max size {max_size} exceeds cap {cap}")
    rt_failures: list[dict] = []
    peak_failures: list[dict] = []
    parity_failures: list[dict] = []
    parity_failed = 0
    parity_profile: dict[tuple[int, int], int] = {}
    total = 0
    for size in range(3, max_size + 1, 2):
        n = (size - 1) // 2
        seen: set[tuple] = set()
        for sigma in enumerate_class(ClassTag.S_ODD, size, cap=cap):
            total += 1
            idx = sigma.values.index(size)
            raw_left = sigma.values[:idx]
            raw_right = sigma.values[idx + 1 :]
            s = split_at_max(sigma)

            back = merge(s, size)
            key = (s.left_values, s.left.values, s.right.values, s.max_position)
            if back != sigma or key in seen:
                rt_failures.append(
                    discrepancy(size=size, sigma=str(sigma), merged=str(back))
                )
            seen.add(key)

            nu_sigma = stat(sigma, StatVariant.INTERIOR_PEAKS)
            nu_blocks = _word_interior_peaks(raw_left) + _word_interior_peaks(raw_right)
            if nu_sigma != nu_blocks + 1:
                peak_failures.append(
                    discrepancy(
                        size=size,
                        sigma=str(sigma),
                        peaks=nu_sigma,
                        block_peaks=nu_blocks,
                    )
                )

            j = s.max_position // 2
            claimed = (2 * j - 2, 2 * (n - j))
            got = (s.left.size, s.right.size)
            parity_profile[(size, j)] = parity_profile.get((size, j), 0) + 1
            if (
                got != claimed
                or classify(s.left) is not ClassTag.C_EVEN
                or classify(s.right) is not ClassTag.D_EVEN
            ):
                parity_failed += 1
                if len(parity_failures) < 8:
                    parity_failures.append(
                        discrepancy(
                            size=size,
                            sigma=str(sigma),
                            claimed_block_sizes=list(claimed),
                            measured_block_sizes=list(got),
                            measured_left_class=classify(s.left).value,
                            measured_right_class=classify(s.right).value,
                        )
                    )

    parity_evidence = parity_failures + [
        measurement(
            summary="split count per (size, max position / 2); "
            "all blocks are odd-size up-down permutations",
            counts={f"size={sz},j={j}": c for (sz, j), c in sorted(parity_profile.items())},
        )
    ]
    params = {"max_size": max_size}
    return [
        build_verdict(
            "BIJ-RT",
            "merge inverts split_at_max on every odd up-down permutation, "
            "and distinct permutations split to distinct results",
            "bijection",
            params,
            total,
            len(rt_failures),
            rt_failures,
        ),
        build_verdict(
            "BIJ-PEAK",
            "interior_peaks(sigma) = interior_peaks(left block) "
            "+ interior_peaks(right block) + 1 under the split at the maximum",
            "bijection",
            params,
            total,
            len(peak_failures),
            peak_failures,
        ),
        build_verdict(
            "BIJ-PARITY",
            "the standardized split blocks are even-size classes of sizes 2j-2 "
            "and 2(n-j): left up-down, right down-up",
            "bijection",
            params,
            total,
            parity_failed,
            parity_evidence,
        ),
    ]

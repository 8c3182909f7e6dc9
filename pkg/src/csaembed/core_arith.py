"""Exact integer primitives: classes in Q/Z, restricted partitions, and
nonnegative solutions of a single weighted linear equation.

Rationals are plain :class:`fractions.Fraction` values; they are always kept
in lowest terms with a positive denominator, which is all the solvers need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

Rational = Fraction
SolutionVector = tuple[int, ...]


def lcm(*values: int) -> int:
    return math.lcm(*values) if values else 1


@dataclass(frozen=True, order=True)
class QModZ:
    """A class in Q/Z stored as a reduced fraction ``num/den`` with ``0 <= num < den``."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den < 1:
            raise ValueError(f"denominator must be positive, got {self.den}")
        if not 0 <= self.num < self.den:
            raise ValueError(f"numerator {self.num} outside [0, {self.den})")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not reduced")

    @classmethod
    def from_rational(cls, r: Fraction | int) -> QModZ:
        r = Fraction(r)
        rem = r - math.floor(r)
        return cls(rem.numerator, rem.denominator)

    @classmethod
    def parse(cls, text: str) -> QModZ:
        return cls.from_rational(Fraction(text))

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def scale(self, m: int) -> QModZ:
        return qmodz_scale(self, m)

    def __add__(self, other: QModZ) -> QModZ:
        return QModZ.from_rational(self.to_fraction() + other.to_fraction())

    def __neg__(self) -> QModZ:
        return QModZ.from_rational(-self.to_fraction())

    def __sub__(self, other: QModZ) -> QModZ:
        return self + (-other)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


ZERO = QModZ(0, 1)


def qmodz_from_rational(r: Fraction | int) -> QModZ:
    """Reduce ``r`` modulo 1 to its representative in ``[0, 1)``."""
    return QModZ.from_rational(r)


def qmodz_scale(x: QModZ, m: int) -> QModZ:
    """Return ``m * x`` in Q/Z."""
    if m < 1:
        raise ValueError(f"scale factor must be positive, got {m}")
    return QModZ.from_rational(Fraction(x.num * m, x.den))


def qmodz_sum(values: Sequence[QModZ]) -> QModZ:
    return QModZ.from_rational(sum((v.to_fraction() for v in values), Fraction(0)))


@lru_cache(maxsize=None)
def restricted_partition_count(x: int, e: int) -> int:
    """Number of partitions of ``x`` into parts of size at most ``e``.

    The empty partition counts, so ``p(0, e) == 1``.
    """
    if x < 0 or e < 1:
        raise ValueError(f"need x >= 0 and e >= 1, got x={x}, e={e}")
    # standard coin-change table over part sizes 1..e
    ways = [1] + [0] * x
    for part in range(1, min(e, x) + 1):
        for total in range(part, x + 1):
            ways[total] += ways[total - part]
    return ways[x]


def _suffix_reachability(
    weights: Sequence[int], target: int, minimums: Sequence[int]
) -> list[list[bool]]:
    """``reach[i][r]``: positions ``i..`` can sum exactly to ``r``.

    Position ``j`` contributes ``weights[j] * x_j`` with ``x_j >= minimums[j]``.
    """
    t = len(weights)
    reach = [[False] * (target + 1) for _ in range(t + 1)]
    reach[t][0] = True
    for i in range(t - 1, -1, -1):
        w, lo = weights[i], minimums[i]
        nxt, cur = reach[i + 1], reach[i]
        for r in range(target + 1):
            x = lo
            while w * x <= r:
                if nxt[r - w * x]:
                    cur[r] = True
                    break
                x += 1
    return reach


def iter_weighted_solutions(
    weights: Sequence[int], target: int, positivity_mask: Sequence[bool] | None = None
) -> Iterator[SolutionVector]:
    """Yield every ``x >= 0`` with ``sum(weights[i] * x[i]) == target`` in
    ascending lexicographic order; ``x[i] >= 1`` wherever the mask is set."""
    weights = list(weights)
    if not weights:
        raise ValueError("weights must be nonempty")
    if any(w < 1 for w in weights):
        raise ValueError(f"weights must be positive, got {weights}")
    if target < 0:
        raise ValueError(f"target must be nonnegative, got {target}")
    mask = [False] * len(weights) if positivity_mask is None else list(positivity_mask)
    if len(mask) != len(weights):
        raise ValueError("positivity_mask length differs from weights")
    minimums = [1 if m else 0 for m in mask]
    reach = _suffix_reachability(weights, target, minimums)
    if not reach[0][target]:
        return

    prefix: list[int] = []

    def walk(i: int, remaining: int) -> Iterator[SolutionVector]:
        if i == len(weights):
            yield tuple(prefix)
            return
        w = weights[i]
        x = minimums[i]
        while w * x <= remaining:
            if reach[i + 1][remaining - w * x]:
                prefix.append(x)
                yield from walk(i + 1, remaining - w * x)
                prefix.pop()
            x += 1

    yield from walk(0, target)


def enumerate_weighted_solutions(
    weights: Sequence[int], target: int, positivity_mask: Sequence[bool] | None = None
) -> list[SolutionVector]:
    return list(iter_weighted_solutions(weights, target, positivity_mask))


def has_weighted_solution(
    weights: Sequence[int], target: int, positivity_mask: Sequence[bool] | None = None
) -> bool:
    return next(iter_weighted_solutions(weights, target, positivity_mask), None) is not None

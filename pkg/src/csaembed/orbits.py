"""Counting homomorphisms ``A -> B`` up to conjugation by ``B^×``.

For simple ``B`` the orbits are indexed by ``x ∈ P(A,B)`` together with one
module class of length ``x_i`` over each ``D̃_i``; the number of such classes
depends only on the local ring data of ``D̃_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import LocalRing, TargetSimple, WedderburnData
from .core_arith import restricted_partition_count
from .embed import partition_set

EMPTY = "empty"
FINITE = "finite"
INFINITE = "infinite"
FINITE_UNKNOWN = "finite_unknown"


@dataclass(frozen=True)
class OrbitCount:
    status: str
    count: int | None = None

    def __post_init__(self) -> None:
        if self.status not in (EMPTY, FINITE, INFINITE, FINITE_UNKNOWN):
            raise ValueError(f"unknown status {self.status!r}")
        if (self.status == FINITE) != (self.count is not None):
            raise ValueError("a count is given exactly for finite status")

    @property
    def is_finite(self) -> bool:
        return self.status in (EMPTY, FINITE, FINITE_UNKNOWN)

    def __str__(self) -> str:
        return f"finite({self.count})" if self.status == FINITE else self.status


def mod_count(local_ring: LocalRing, x: int, base_field_infinite: bool) -> OrbitCount:
    """Number of isomorphism classes of ``D̃``-modules of length ``x``."""
    if x < 0:
        raise ValueError(f"length must be nonnegative, got {x}")
    if x <= 1:
        return OrbitCount(FINITE, 1)
    if local_ring.tangent_dim <= 1:
        return OrbitCount(FINITE, restricted_partition_count(x, local_ring.e))
    if base_field_infinite:
        return OrbitCount(INFINITE)
    # finite over a finite field, but no closed formula is available
    return OrbitCount(FINITE_UNKNOWN)


def orbit_count(W: WedderburnData, dim_V: int, base_field_infinite: bool) -> OrbitCount:
    rings = []
    for f in W.factors:
        if f.local_ring is None:
            raise ValueError(f"tensor factor {f} has no local ring data")
        rings.append(f.local_ring)
    vectors = partition_set(W, dim_V)
    if not vectors:
        return OrbitCount(EMPTY)
    total = 0
    unknown = False
    for x in vectors:
        term = 1
        for ring, xi in zip(rings, x):
            c = mod_count(ring, xi, base_field_infinite)
            if c.status == INFINITE:
                return c
            if c.status == FINITE_UNKNOWN:
                unknown = True
            else:
                term *= c.count
        total += term
    if unknown:
        return OrbitCount(FINITE_UNKNOWN)
    return OrbitCount(FINITE, total)


def combine_counts(counts: Sequence[OrbitCount]) -> OrbitCount:
    """Orbit set of ``A -> Π B_j`` as the product of the per-factor orbit sets."""
    if not counts:
        raise ValueError("at least one target factor is required")
    statuses = {c.status for c in counts}
    if EMPTY in statuses:
        return OrbitCount(EMPTY)
    if INFINITE in statuses:
        return OrbitCount(INFINITE)
    if FINITE_UNKNOWN in statuses:
        return OrbitCount(FINITE_UNKNOWN)
    product = 1
    for c in counts:
        product *= c.count
    return OrbitCount(FINITE, product)


def orbit_count_semisimple_target(
    targets: Sequence[tuple[TargetSimple, WedderburnData]], base_field_infinite: bool
) -> OrbitCount:
    return combine_counts(
        [orbit_count(W, T.module_dim, base_field_infinite) for T, W in targets]
    )

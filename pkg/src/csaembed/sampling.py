"""Seeded random generators of valid algebras and extension profiles."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable

from .brauer import ExtensionProfile, GlobalCSA, Place
from .core_arith import QModZ


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def random_composition(rng: random.Random, k: int, max_part: int | None = None) -> list[int]:
    """A random ordered tuple of positive integers summing to ``k``."""
    while True:
        cuts = sorted(rng.sample(range(1, k), rng.randint(0, k - 1))) if k > 1 else []
        parts = [b - a for a, b in zip([0, *cuts], [*cuts, k])]
        if max_part is None or max(parts) <= max_part:
            return parts


def random_csa(rng: random.Random, max_degree: int = 24, max_places: int = 4) -> GlobalCSA:
    delta = rng.choice([d for d in range(1, max_degree + 1)])
    n = rng.randint(1, max_degree // delta)
    invariants: dict[Place, QModZ] = {}
    total = Fraction(0)
    if delta % 2 == 0 and rng.random() < 0.3:
        invariants[Place("inf", "real")] = QModZ(1, 2)
        total += Fraction(1, 2)
    m = rng.randint(1, max_places)
    for i in range(1, m):
        x = Fraction(rng.randrange(delta), delta)
        invariants[Place(f"p{i}")] = QModZ.from_rational(x)
        total += x
    invariants[Place(f"p{m}")] = QModZ.from_rational(-total)
    return GlobalCSA.from_map(n * delta, invariants)


def random_profile(
    rng: random.Random,
    k: int,
    A: GlobalCSA,
    extra_places: Iterable[str] = (),
    prefix: str = "w",
) -> ExtensionProfile:
    """A degree-``k`` profile listing every place of ``A`` (ramified or not)."""
    splitting = {}
    kinds = {p.id: p.kind for p, _ in A.invariants}
    for v in [*kinds, *extra_places]:
        kind = kinds.get(v, "finite")
        if kind == "complex":
            parts = [1] * k
        elif kind == "real":
            parts = random_composition(rng, k, max_part=2)
        else:
            parts = random_composition(rng, k)
        splitting[v] = [(f"{prefix}:{v}.{j}", kw) for j, kw in enumerate(parts, start=1)]
    return ExtensionProfile.from_map(k, splitting)

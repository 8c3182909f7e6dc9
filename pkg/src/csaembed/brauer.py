"""Central simple algebras over a global field, described by local invariants.

Places are opaque labels. An algebra is its degree plus a finitely supported
map ``place -> inv_v`` in Q/Z; places not mentioned carry invariant 0. An
extension profile records, for each base place ``v`` it mentions, the local
degrees ``k_w = [K_w : F_v]`` of the places ``w | v``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .core_arith import ZERO, QModZ, lcm, qmodz_scale, qmodz_sum
from .errors import (
    ArchimedeanViolation,
    IndexExceedsDegree,
    InvalidProfile,
    MissingSplittingData,
    SumNotZero,
)

PLACE_KINDS = ("finite", "real", "complex")


@dataclass(frozen=True, order=True)
class Place:
    id: str
    kind: str = "finite"

    def __post_init__(self) -> None:
        if self.kind not in PLACE_KINDS:
            raise ValueError(f"unknown place kind {self.kind!r}")


def _check_archimedean(label: str, kind: str, inv: QModZ) -> None:
    if kind == "complex" and not inv.is_zero:
        raise ArchimedeanViolation(f"complex place {label} has invariant {inv} != 0")
    if kind == "real" and inv.den > 2:
        raise ArchimedeanViolation(f"real place {label} has invariant {inv} not in {{0, 1/2}}")


@dataclass(frozen=True)
class GlobalCSA:
    """A central simple algebra of the given degree (``n * index``)."""

    degree: int
    invariants: tuple[tuple[Place, QModZ], ...] = ()

    @classmethod
    def from_map(cls, degree: int, invariants: Mapping[Place, QModZ] | Iterable[tuple[Place, QModZ]]) -> GlobalCSA:
        items = invariants.items() if isinstance(invariants, Mapping) else invariants
        return cls(degree, tuple(sorted(items, key=lambda item: item[0].id)))

    @property
    def places(self) -> dict[str, Place]:
        return {p.id: p for p, _ in self.invariants}

    def inv(self, place_id: str) -> QModZ:
        for p, x in self.invariants:
            if p.id == place_id:
                return x
        return ZERO

    def local_index(self, place_id: str) -> int:
        """``d_v``: the denominator of the local invariant."""
        return self.inv(place_id).den

    def ramified(self) -> list[Place]:
        return [p for p, x in self.invariants if not x.is_zero]


def validate_csa(A: GlobalCSA) -> None:
    """Raise if ``A`` violates the reciprocity, archimedean or index conditions."""
    if A.degree < 1:
        raise IndexExceedsDegree(f"degree must be positive, got {A.degree}")
    ids = [p.id for p, _ in A.invariants]
    if len(set(ids)) != len(ids):
        raise ValueError(f"duplicate place ids in {ids}")
    for p, x in A.invariants:
        _check_archimedean(p.id, p.kind, x)
    total = qmodz_sum([x for _, x in A.invariants])
    if not total.is_zero:
        raise SumNotZero(f"local invariants sum to {total}, not 0 in Q/Z")
    idx = index(A)
    if A.degree % idx:
        raise IndexExceedsDegree(f"index {idx} does not divide degree {A.degree}")


def index(A: GlobalCSA) -> int:
    return lcm(*(x.den for _, x in A.invariants))


def capacity(A: GlobalCSA) -> int:
    return A.degree // index(A)


@dataclass(frozen=True)
class ExtensionProfile:
    """A degree-``k`` étale algebra given by its splitting at finitely many places.

    ``splitting`` maps a base place id to the list of ``(w_id, k_w)`` above it.
    """

    degree: int
    splitting: tuple[tuple[str, tuple[tuple[str, int], ...]], ...] = ()

    @classmethod
    def from_map(cls, degree: int, splitting: Mapping[str, Iterable[tuple[str, int]]]) -> ExtensionProfile:
        return cls(
            degree,
            tuple(sorted((v, tuple((w, int(kw)) for w, kw in parts)) for v, parts in splitting.items())),
        )

    @classmethod
    def totally_split(cls, degree: int, place_ids: Iterable[str], prefix: str = "") -> ExtensionProfile:
        return cls.from_map(
            degree, {v: [(f"{prefix}{v}.{j}", 1) for j in range(1, degree + 1)] for v in place_ids}
        )

    def parts(self, place_id: str) -> tuple[tuple[str, int], ...] | None:
        for v, parts in self.splitting:
            if v == place_id:
                return parts
        return None

    @property
    def place_ids(self) -> list[str]:
        return [v for v, _ in self.splitting]

    def places_above(self) -> dict[str, tuple[str, int]]:
        """Map each ``w`` to ``(v, k_w)``."""
        return {w: (v, kw) for v, parts in self.splitting for w, kw in parts}


def validate_profile(K: ExtensionProfile, kinds: Mapping[str, str] | None = None) -> None:
    """Check local degrees sum to ``k`` and place ids are unique.

    When ``kinds`` (base place id -> kind) is given, archimedean constraints on
    ``k_w`` are enforced as well.
    """
    if K.degree < 1:
        raise InvalidProfile(f"degree must be positive, got {K.degree}")
    seen: set[str] = set()
    base = [v for v, _ in K.splitting]
    if len(set(base)) != len(base):
        raise InvalidProfile(f"base place listed twice in {base}")
    kinds = kinds or {}
    for v, parts in K.splitting:
        if not parts:
            raise InvalidProfile(f"no places listed above {v}")
        for w, kw in parts:
            if kw < 1:
                raise InvalidProfile(f"local degree of {w} must be positive, got {kw}")
            if w in seen:
                raise InvalidProfile(f"place id {w} used twice")
            seen.add(w)
        total = sum(kw for _, kw in parts)
        if total != K.degree:
            raise InvalidProfile(f"local degrees above {v} sum to {total}, expected {K.degree}")
        kind = kinds.get(v, "finite")
        if kind == "complex" and any(kw != 1 for _, kw in parts):
            raise InvalidProfile(f"complex place {v} must split completely")
        if kind == "real" and any(kw > 2 for _, kw in parts):
            raise InvalidProfile(f"real place {v} has a local degree above 2")


def place_kinds_above(K: ExtensionProfile, kinds: Mapping[str, str]) -> dict[str, str]:
    """Kinds of the places of ``K`` listed in the profile."""
    out = {}
    for v, parts in K.splitting:
        kind = kinds.get(v, "finite")
        for w, kw in parts:
            if kind == "real":
                out[w] = "real" if kw == 1 else "complex"
            else:
                out[w] = kind
    return out


@dataclass(frozen=True)
class BaseChangedCSA:
    degree_over_K: int
    invariants: tuple[tuple[str, QModZ], ...] = ()
    # w -> (v, k_w, d_v), kept for the local capacity law
    provenance: tuple[tuple[str, tuple[str, int, int]], ...] = field(default=(), compare=False)

    def inv(self, w: str) -> QModZ:
        return dict(self.invariants).get(w, ZERO)

    def index(self) -> int:
        return lcm(*(x.den for _, x in self.invariants))


def _require_splitting(A: GlobalCSA, K: ExtensionProfile) -> None:
    missing = [p.id for p in A.ramified() if K.parts(p.id) is None]
    if missing:
        raise MissingSplittingData(f"no splitting data for ramified places {missing}")


def base_change(A: GlobalCSA, K: ExtensionProfile) -> BaseChangedCSA:
    """``A ⊗_F K``: each ``w | v`` gets invariant ``k_w * inv_v``."""
    _require_splitting(A, K)
    invs = []
    prov = []
    for v, parts in K.splitting:
        x = A.inv(v)
        for w, kw in parts:
            invs.append((w, qmodz_scale(x, kw)))
            prov.append((w, (v, kw, x.den)))
    return BaseChangedCSA(A.degree, tuple(invs), tuple(prov))


def local_capacity(d_v: int, k_w: int) -> int:
    """Capacity of ``D_v ⊗ K_w`` for a local division algebra of degree ``d_v``."""
    return math.gcd(d_v, k_w)


def capacity_after_base_change(A: GlobalCSA, K: ExtensionProfile) -> int:
    """Capacity ``c`` of ``Δ ⊗_F K`` where ``Δ`` is the division part of ``A``."""
    return index(A) // base_change(A, K).index()

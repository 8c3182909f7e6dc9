"""Source and target algebras for the embedding and orbit solvers.

A target simple factor ``B_j = End_{Δ_j}(V_j)`` is described by ``[Δ_j:F]`` and
``dim_{Δ_j} V_j``. The relevant data of the source ``A`` is the Wedderburn
decomposition of ``Δ_j ⊗_F A°``: one :class:`TensorFactorData` per simple
factor ``Mat_m(D)``, tagged with the simple factor ``A_i`` it comes from.

That data is either asserted by the caller (any ground field) or computed from
Brauer invariants by :func:`wedderburn_from_global` (global ground field).
"""

from __future__ import annotations

from dataclasses import dataclass

from .brauer import (
    ExtensionProfile,
    GlobalCSA,
    index,
    place_kinds_above,
    validate_csa,
    validate_profile,
    _check_archimedean,
)
from .core_arith import QModZ, lcm, qmodz_scale, qmodz_sum
from .errors import IndexExceedsDegree, MissingSplittingData, NonIntegralEll, SumNotZero


@dataclass(frozen=True)
class LocalRing:
    """Nilpotency index ``e`` and tangent dimension of the center of ``D̃``."""

    e: int = 1
    tangent_dim: int = 0

    def __post_init__(self) -> None:
        if self.e < 1 or self.tangent_dim < 0:
            raise ValueError(f"invalid local ring data e={self.e}, tangent_dim={self.tangent_dim}")
        if (self.e == 1) != (self.tangent_dim == 0):
            raise ValueError("e == 1 exactly when the tangent dimension is 0")


SEPARABLE = LocalRing(1, 0)


@dataclass(frozen=True)
class SimpleFactorAbstract:
    dim_over_F: int
    label: str = ""

    def __post_init__(self) -> None:
        if self.dim_over_F < 1:
            raise ValueError("dim_over_F must be positive")


@dataclass(frozen=True)
class TensorFactorData:
    """One simple factor ``Mat_m(D)`` of ``(Δ ⊗ A_i°)^ss`` with ``dim_d = [D:F]``."""

    m: int
    dim_d: int
    source: int = 0
    local_ring: LocalRing | None = None

    def __post_init__(self) -> None:
        if self.m < 1 or self.dim_d < 1 or self.source < 0:
            raise ValueError(f"invalid tensor factor {self}")


@dataclass(frozen=True)
class WedderburnData:
    dim_delta: int
    factors: tuple[TensorFactorData, ...]

    def __post_init__(self) -> None:
        if self.dim_delta < 1:
            raise ValueError("dim_delta must be positive")
        if not self.factors:
            raise ValueError("at least one tensor factor is required")
        for f in self.factors:
            if (f.m * f.dim_d) % self.dim_delta:
                raise NonIntegralEll(
                    f"m*[D:F] = {f.m * f.dim_d} is not divisible by [Δ:F] = {self.dim_delta}"
                )

    @property
    def sources(self) -> list[int]:
        return sorted({f.source for f in self.factors})


@dataclass(frozen=True)
class TargetSimple:
    dim_delta: int
    module_dim: int

    def __post_init__(self) -> None:
        if self.dim_delta < 1 or self.module_dim < 1:
            raise ValueError("target needs [Δ:F] >= 1 and dim V >= 1")


def ell_values(W: WedderburnData) -> list[int]:
    """``ℓ = m [D:F] / [Δ:F]`` for each tensor factor, in factor order."""
    out = []
    for f in W.factors:
        q, r = divmod(f.m * f.dim_d, W.dim_delta)
        if r:
            raise NonIntegralEll(f"ℓ = {f.m * f.dim_d}/{W.dim_delta} is not an integer")
        out.append(q)
    return out


@dataclass(frozen=True)
class GlobalSourceFactor:
    """A simple algebra ``A_i`` over a global field, central over ``K_i``.

    ``invariants_over_center`` is keyed by the place ids of ``center``.
    A field ``K_i`` itself has ``degree_over_center == 1`` and no invariants.
    """

    center: ExtensionProfile
    degree_over_center: int = 1
    invariants_over_center: tuple[tuple[str, QModZ], ...] = ()

    @property
    def dim_over_F(self) -> int:
        return self.center.degree * self.degree_over_center**2

    def inv(self, w: str) -> QModZ:
        return dict(self.invariants_over_center).get(w, QModZ(0, 1))


def validate_source_factor(A_i: GlobalSourceFactor, base_kinds: dict[str, str] | None = None) -> None:
    validate_profile(A_i.center, base_kinds)
    above = A_i.center.places_above()
    kinds = place_kinds_above(A_i.center, base_kinds or {})
    for w, x in A_i.invariants_over_center:
        if w not in above:
            raise MissingSplittingData(f"invariant at {w}, which the center's profile does not list")
        _check_archimedean(w, kinds.get(w, "finite"), x)
    total = qmodz_sum([x for _, x in A_i.invariants_over_center])
    if not total.is_zero:
        raise SumNotZero(f"invariants over the center sum to {total}")
    idx = lcm(*(x.den for _, x in A_i.invariants_over_center))
    if A_i.degree_over_center % idx:
        raise IndexExceedsDegree(f"index {idx} does not divide degree {A_i.degree_over_center}")


def tensor_invariants(Delta: GlobalCSA, A_i: GlobalSourceFactor) -> dict[str, QModZ]:
    """Invariants of ``(Δ ⊗_F K_i) ⊗_{K_i} A_i°`` at the listed places of ``K_i``."""
    missing = [p.id for p in Delta.ramified() if A_i.center.parts(p.id) is None]
    if missing:
        raise MissingSplittingData(f"center of source factor lacks splitting data at {missing}")
    out = {}
    for v, parts in A_i.center.splitting:
        x = Delta.inv(v)
        for w, kw in parts:
            out[w] = qmodz_scale(x, kw) - A_i.inv(w)
    return out


def tensor_capacity(Delta: GlobalCSA, A_i: GlobalSourceFactor) -> int:
    """Capacity ``c_i`` of ``Δ ⊗_F A_i°`` as a central simple ``K_i``-algebra,
    where ``Δ`` is the division part of ``Delta``."""
    inner_index = lcm(*(x.den for x in tensor_invariants(Delta, A_i).values()))
    total_degree = index(Delta) * A_i.degree_over_center
    return total_degree // inner_index


def wedderburn_from_global(Delta: GlobalCSA, A_i: GlobalSourceFactor, source: int = 0) -> WedderburnData:
    """Wedderburn data of ``Δ ⊗_F A_i° = Mat_{c_i}(D_i)``.

    ``[D_i:F] = [K_i:F] · (index of D_i over K_i)^2`` and ``[Δ:F] = index(Delta)^2``.
    The tensor factor is separable, so its local ring data is ``(1, 0)``.
    """
    validate_csa(Delta)
    validate_source_factor(A_i, {p.id: p.kind for p, _ in Delta.invariants})
    inner_index = lcm(*(x.den for x in tensor_invariants(Delta, A_i).values()))
    delta = index(Delta)
    c_i = delta * A_i.degree_over_center // inner_index
    dim_d = A_i.center.degree * inner_index**2
    W = WedderburnData(delta**2, (TensorFactorData(c_i, dim_d, source, SEPARABLE),))
    # [Δ:F][A_i:F] = c_i^2 [D_i:F]
    assert delta**2 * A_i.dim_over_F == c_i**2 * dim_d
    return W


def field_factor(K: ExtensionProfile) -> GlobalSourceFactor:
    """The commutative source factor ``A_i = K``."""
    return GlobalSourceFactor(K, 1, ())


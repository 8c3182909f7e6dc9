"""Which factored monic polynomials are characteristic polynomials of ``Mat_n(Δ)``.

A polynomial of degree ``n d`` (``d = deg Δ``) is supplied through the
factorisation profile ``Π p_i^{a_i}``: the degree of each irreducible factor,
its multiplicity, and optionally the splitting profile of ``F_i = F[t]/(p_i)``.
Coefficients never enter the criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .brauer import ExtensionProfile, GlobalCSA, capacity_after_base_change, index, validate_csa, validate_profile
from .errors import DegreeMismatch, MissingSplittingData, NonIntegralN


@dataclass(frozen=True)
class PolyFactor:
    degree: int
    multiplicity: int
    field: ExtensionProfile | None = None

    def __post_init__(self) -> None:
        if self.degree < 1 or self.multiplicity < 1:
            raise ValueError(f"factor degree and multiplicity must be positive: {self}")
        if self.field is not None and self.field.degree != self.degree:
            raise DegreeMismatch(
                f"field profile has degree {self.field.degree}, irreducible factor has degree {self.degree}"
            )


@dataclass(frozen=True)
class FactoredPolynomial:
    factors: tuple[PolyFactor, ...]

    @property
    def degree(self) -> int:
        return sum(f.degree * f.multiplicity for f in self.factors)


@dataclass(frozen=True)
class FactorReport:
    degree: int
    multiplicity: int
    n_i: int | None
    capacity: int | None
    passed: bool


@dataclass(frozen=True)
class CharpolyReport:
    admissible: bool
    factors: tuple[FactorReport, ...]

    def __bool__(self) -> bool:
        return self.admissible


def _check_total(total: int, n: int, d: int) -> None:
    if total != n * d:
        raise DegreeMismatch(f"polynomial has degree {total}, expected n*d = {n * d}")


def charpoly_admissible_global(f: FactoredPolynomial, Delta: GlobalCSA, n: int) -> CharpolyReport:
    """Each factor needs ``a_i deg p_i = n_i d`` and ``[F_i:F] | n_i c(Δ ⊗ F_i)``.

    ``Delta`` is read through its division part, so ``d = index(Delta)``.
    Raises :class:`NonIntegralN` when some ``a_i deg p_i`` is not a multiple of ``d``.
    """
    validate_csa(Delta)
    d = index(Delta)
    _check_total(f.degree, n, d)
    kinds = {p.id: p.kind for p, _ in Delta.invariants}
    reports = []
    for factor in f.factors:
        n_i, r = divmod(factor.degree * factor.multiplicity, d)
        if r:
            raise NonIntegralN(
                f"{factor.multiplicity}*{factor.degree} is not a multiple of d = {d}"
            )
        if factor.field is None:
            # a linear factor has F_i = F, whose capacity in Δ is 1
            if d > 1 and factor.degree > 1:
                raise MissingSplittingData(f"factor of degree {factor.degree} needs a field profile")
            c_i = 1
        else:
            validate_profile(factor.field, kinds)
            c_i = capacity_after_base_change(Delta, factor.field)
        reports.append(
            FactorReport(factor.degree, factor.multiplicity, n_i, c_i, (n_i * c_i) % factor.degree == 0)
        )
    return CharpolyReport(all(r.passed for r in reports), tuple(reports))


def charpoly_admissible_local(f: Sequence[tuple[int, int]], d: int, n: int) -> CharpolyReport:
    """Criterion over a non-archimedean local field with ``deg Δ = d``.

    ``f`` lists ``(deg p_i, a_i)``. Here ``c(Δ ⊗ F_i) = gcd(d, deg p_i)``.
    """
    _check_total(sum(deg * a for deg, a in f), n, d)
    reports = []
    for deg, a in f:
        n_i, r = divmod(deg * a, d)
        if r or n_i == 0:
            reports.append(FactorReport(deg, a, None, None, False))
            continue
        c_i = math.gcd(d, deg)
        reports.append(FactorReport(deg, a, n_i, c_i, (n_i * c_i) % deg == 0))
    return CharpolyReport(all(r.passed for r in reports), tuple(reports))

"""Existence of algebra homomorphisms and embeddings between semi-simple algebras.

Given ``B = Π_j End_{Δ_j}(V_j)`` and, for every ``j``, the Wedderburn factors
``Mat_m(D)`` of ``Δ_j ⊗ A°`` (each tagged with its source factor ``A_i``), a
homomorphism ``A -> B`` exists iff each ``V_j`` splits as ``⊕ V_{jk}`` with
``dim_{Δ_j} V_{jk}`` a multiple of ``ℓ = m[D:F]/[Δ_j:F]``. An embedding needs, in
addition, every source factor to act on a nonzero piece somewhere.

Witnesses use the dimensions ``x_{jk} = dim_{Δ_j} V_{jk}`` (so each entry is a
multiple of its ``ℓ``), one tuple per target factor in factor order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import (
    GlobalSourceFactor,
    TargetSimple,
    WedderburnData,
    ell_values,
    wedderburn_from_global,
)
from .brauer import ExtensionProfile, GlobalCSA, capacity, capacity_after_base_change, index, validate_csa
from .core_arith import SolutionVector, enumerate_weighted_solutions, iter_weighted_solutions
from .errors import DegreeMismatch

Target = tuple[TargetSimple, WedderburnData]


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: tuple[tuple[int, ...], ...] | None = None

    def __bool__(self) -> bool:
        return self.feasible


def _check_targets(targets: Sequence[Target]) -> None:
    if not targets:
        raise ValueError("at least one target factor is required")
    for T, W in targets:
        if T.dim_delta != W.dim_delta:
            raise ValueError(f"target [Δ:F]={T.dim_delta} disagrees with Wedderburn data {W.dim_delta}")


def _solve(targets: Sequence[Target], required: frozenset[int]) -> FeasibilityResult:
    """Lexicographically least assignment meeting the sum, divisibility and
    coverage constraints, found by a memoised search over (position, rest, covered)."""
    ells = [ell_values(W) for _, W in targets]
    variables = [
        (j, ell, f.source) for j, (_, W) in enumerate(targets) for ell, f in zip(ells[j], W.factors)
    ]
    totals = [T.module_dim for T, _ in targets]
    sources = sorted(required)
    bit = {s: 1 << i for i, s in enumerate(sources)}
    full = (1 << len(sources)) - 1
    last_of = {}
    for pos, (j, _, _) in enumerate(variables):
        last_of[j] = pos

    def advance(pos: int, rem: int) -> tuple[int, int] | None:
        # after filling variable ``pos``: move to the next variable, closing a target if needed
        j = variables[pos][0]
        if pos == last_of[j]:
            if rem:
                return None
            if pos + 1 < len(variables):
                return pos + 1, totals[variables[pos + 1][0]]
            return pos + 1, 0
        return pos + 1, rem

    @lru_cache(maxsize=None)
    def feasible(pos: int, rem: int, covered: int) -> bool:
        if pos == len(variables):
            return covered & full == full
        _, ell, src = variables[pos]
        for x in range(0, rem + 1, ell):
            nxt = advance(pos, rem - x)
            if nxt is None:
                continue
            cov = covered | bit.get(src, 0) if x else covered
            if feasible(nxt[0], nxt[1], cov):
                return True
        return False

    start = totals[variables[0][0]]
    if not feasible(0, start, 0):
        return FeasibilityResult(False)

    values: list[int] = []
    pos, rem, covered = 0, start, 0
    while pos < len(variables):
        _, ell, src = variables[pos]
        for x in range(0, rem + 1, ell):
            nxt = advance(pos, rem - x)
            if nxt is None:
                continue
            cov = covered | bit.get(src, 0) if x else covered
            if feasible(nxt[0], nxt[1], cov):
                values.append(x)
                pos, rem, covered = nxt[0], nxt[1], cov
                break
    witness = []
    it = iter(values)
    for _, W in targets:
        witness.append(tuple(next(it) for _ in W.factors))
    return FeasibilityResult(True, tuple(witness))


def hom_exists(targets: Sequence[Target]) -> FeasibilityResult:
    """Decide whether some F-algebra homomorphism ``A -> B`` exists."""
    _check_targets(targets)
    return _solve(targets, frozenset())


def embedding_exists(targets: Sequence[Target]) -> FeasibilityResult:
    """Decide whether some injective F-algebra homomorphism ``A -> B`` exists.

    Every target's Wedderburn data must list factors for the same set of
    source indices.
    """
    _check_targets(targets)
    source_sets = {tuple(W.sources) for _, W in targets}
    if len(source_sets) != 1:
        raise ValueError(f"source grouping differs between target factors: {sorted(source_sets)}")
    return _solve(targets, frozenset(source_sets.pop()))


def embed_csa(A_factors: Sequence[tuple[int, int]], n: int) -> FeasibilityResult:
    """Embedding of ``A = Π A_i`` into ``Mat_n(Δ)`` from ``([A_i:F], c_i)`` pairs.

    Feasible iff there are positive ``n_i`` with ``Σ n_i = n`` and ``[A_i:F] | n_i c_i``.
    The witness is the single tuple ``(n_1, ..., n_s)``.
    """
    if n < 1 or not A_factors or any(d < 1 or c < 1 for d, c in A_factors):
        raise ValueError("embed_csa needs n >= 1 and positive factor data")
    steps = [d // math.gcd(d, c) for d, c in A_factors]
    first = next(iter_weighted_solutions(steps, n, [True] * len(steps)), None)
    if first is None:
        return FeasibilityResult(False)
    return FeasibilityResult(True, (tuple(u * x for u, x in zip(steps, first)),))


def partition_set(W: WedderburnData, dim_V: int) -> list[SolutionVector]:
    """All ``x >= 0`` with ``Σ ℓ_i x_i = dim_V``, in lexicographic order."""
    return enumerate_weighted_solutions(ell_values(W), dim_V)


def split_criterion_max_degree(A_centers: Sequence[ExtensionProfile], B: GlobalCSA) -> bool:
    """True iff every ``K_i`` splits ``B``; requires ``Σ [K_i:F] = deg B``."""
    total = sum(K.degree for K in A_centers)
    if total != B.degree:
        raise DegreeMismatch(f"Σ [K_i:F] = {total} but deg B = {B.degree}")
    delta = index(B)
    return all(capacity_after_base_change(B, K) == delta for K in A_centers)


def global_targets(B: GlobalCSA, A_factors: Sequence[GlobalSourceFactor]) -> list[Target]:
    """The single-target solver input for a central simple ``B`` over a global field."""
    validate_csa(B)
    delta = index(B)
    factors = []
    for i, A_i in enumerate(A_factors):
        factors.extend(wedderburn_from_global(B, A_i, source=i).factors)
    return [(TargetSimple(delta**2, capacity(B)), WedderburnData(delta**2, tuple(factors)))]


def embedding_exists_global(B: GlobalCSA, A_factors: Sequence[GlobalSourceFactor]) -> FeasibilityResult:
    return embedding_exists(global_targets(B, A_factors))


def hom_exists_global(B: GlobalCSA, A_factors: Sequence[GlobalSourceFactor]) -> FeasibilityResult:
    return hom_exists(global_targets(B, A_factors))

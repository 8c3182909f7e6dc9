"""Local-global analysis for embedding a field ``K`` into a central simple ``A``.

Notation: ``A = Mat_n(Δ)`` with ``δ = deg Δ``; at a place ``v`` the local index
is ``d_v`` and ``Δ_v = Mat_{s_v}(D_v)`` with ``s_v = δ / d_v``, so the local
capacity of ``A_v`` is ``n s_v``. Above ``v``, each ``w`` has local degree
``k_w``, local capacity ``c_w = gcd(d_v, k_w)`` and weight ``ℓ_w = k_w / c_w``.

``K_v`` embeds in ``A_v`` iff ``Σ ℓ_w x_w = n s_v`` has a solution in positive
integers. The global obstruction is the vector of classes of
``x_w = n s_v c_w / k`` in Q/Z.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .brauer import (
    ExtensionProfile,
    GlobalCSA,
    Place,
    capacity_after_base_change,
    index,
    validate_csa,
    validate_profile,
)
from .core_arith import QModZ, SolutionVector, enumerate_weighted_solutions, has_weighted_solution
from .embed import embed_csa
from .errors import DegreeNotDividing, MissingSplittingData, PreconditionViolated

GLOBAL_EMBEDDING = "GlobalEmbedding"
LOCAL_OBSTRUCTION = "LocalObstruction"
HASSE_FAILURE = "HassePrincipleFailure"


@dataclass(frozen=True)
class LocalPart:
    id: str
    k_w: int
    c_w: int
    ell_w: int


@dataclass(frozen=True)
class LocalReport:
    place: Place
    s_v: int
    d_v: int
    target: int
    per_w: tuple[LocalPart, ...]
    feasible: bool
    representatives: tuple[SolutionVector, ...] = ()


@dataclass(frozen=True)
class ObstructionEntry:
    place: str
    over: str
    x: Fraction

    @property
    def cls(self) -> QModZ:
        return QModZ.from_rational(self.x)


@dataclass(frozen=True)
class Obstruction:
    entries: tuple[ObstructionEntry, ...]

    @property
    def vanishes(self) -> bool:
        return all(e.cls.is_zero for e in self.entries)

    def nonzero(self) -> list[ObstructionEntry]:
        return [e for e in self.entries if not e.cls.is_zero]

    def __getitem__(self, w: str) -> ObstructionEntry:
        for e in self.entries:
            if e.place == w:
                return e
        raise KeyError(w)


@dataclass(frozen=True)
class HasseVerdict:
    status: str
    reports: tuple[LocalReport, ...]
    obstruction: Obstruction
    n: int
    k: int
    capacity: int
    obstructed_places: tuple[str, ...] = field(default=())

    @property
    def locally_feasible(self) -> bool:
        return all(r.feasible for r in self.reports)


def _module_rank(A: GlobalCSA) -> int:
    return A.degree // index(A)


def local_report(A: GlobalCSA, K: ExtensionProfile, v: Place | str, enumerate: bool = False) -> LocalReport:
    """Local embedding problem of ``K_v`` into ``A_v``.

    A place absent from the profile is accepted only when ``A`` is split there;
    its report is then feasible iff ``k | deg A`` and carries no parts.
    """
    if isinstance(v, str):
        v = A.places.get(v, Place(v))
    n, delta = _module_rank(A), index(A)
    d_v = A.local_index(v.id)
    s_v = delta // d_v
    target = n * s_v
    parts = K.parts(v.id)
    if parts is None:
        if d_v > 1:
            raise MissingSplittingData(f"place {v.id} is ramified in A but absent from the profile")
        return LocalReport(v, s_v, d_v, target, (), A.degree % K.degree == 0)
    per_w = []
    for w, kw in parts:
        c_w = math.gcd(d_v, kw)
        per_w.append(LocalPart(w, kw, c_w, kw // c_w))
    weights = [p.ell_w for p in per_w]
    mask = [True] * len(weights)
    reps: tuple[SolutionVector, ...] = ()
    if enumerate:
        reps = tuple(enumerate_weighted_solutions(weights, target, mask))
        feasible = bool(reps)
    else:
        feasible = has_weighted_solution(weights, target, mask)
    return LocalReport(v, s_v, d_v, target, tuple(per_w), feasible, reps)


def _require_divides(A: GlobalCSA, K: ExtensionProfile) -> None:
    if A.degree % K.degree:
        raise DegreeNotDividing(f"[K:F] = {K.degree} does not divide deg A = {A.degree}")


def obstruction(A: GlobalCSA, K: ExtensionProfile) -> Obstruction:
    """Entries ``x_w = c(A_v) gcd(k_w, d_v) / k`` for the places ``w`` over ramified ``v``."""
    _require_divides(A, K)
    missing = [p.id for p in A.ramified() if K.parts(p.id) is None]
    if missing:
        raise MissingSplittingData(f"no splitting data for ramified places {missing}")
    n, delta, k = _module_rank(A), index(A), K.degree
    entries = []
    for v, parts in K.splitting:
        d_v = A.local_index(v)
        if d_v == 1:
            continue
        local_capacity = n * (delta // d_v)
        for w, kw in parts:
            entries.append(ObstructionEntry(w, v, Fraction(local_capacity * math.gcd(kw, d_v), k)))
    return Obstruction(tuple(entries))


def report_places(A: GlobalCSA, K: ExtensionProfile) -> list[Place]:
    known = A.places
    ids = sorted(set(known) | set(K.place_ids))
    return [known.get(v, Place(v)) for v in ids]


def hasse_verdict(A: GlobalCSA, K: ExtensionProfile, enumerate: bool = False) -> HasseVerdict:
    validate_csa(A)
    validate_profile(K, {p.id: p.kind for p, _ in A.invariants})
    _require_divides(A, K)
    reports = tuple(local_report(A, K, v, enumerate) for v in report_places(A, K))
    obs = obstruction(A, K)
    n, k = _module_rank(A), K.degree
    c = capacity_after_base_change(A, K)
    bad = tuple(r.place.id for r in reports if not r.feasible)
    if bad:
        status = LOCAL_OBSTRUCTION
    elif obs.vanishes:
        status = GLOBAL_EMBEDDING
    else:
        status = HASSE_FAILURE
    # the capacity route must agree with the obstruction route
    global_ok = embed_csa([(k, c)], n).feasible
    if global_ok != (status == GLOBAL_EMBEDDING):
        raise AssertionError(
            f"obstruction route gives {status} but k | n c is {global_ok} (k={k}, n={n}, c={c})"
        )
    return HasseVerdict(status, reports, obs, n, k, c, bad)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, math.isqrt(p) + 1))


def construct_counterexample(
    k: int, delta_factorization: Sequence[tuple[int, int]]
) -> tuple[GlobalCSA, ExtensionProfile]:
    """A division algebra ``Δ`` of degree ``δ = Π p_i^{n_i}`` and a degree-``k``
    profile for which every local embedding exists but no global one does.

    ``Δ`` has invariants ``±1/p_i^{n_i}`` at places ``v<i>`` and ``v<i>'``, and
    the profile splits completely at all of them.
    """
    primes = [p for p, _ in delta_factorization]
    if k < 2:
        raise PreconditionViolated(f"k must be at least 2, got {k}")
    if len(primes) < 2:
        raise PreconditionViolated(f"δ needs at least two distinct prime divisors, got {primes}")
    if len(set(primes)) != len(primes):
        raise PreconditionViolated(f"primes must be distinct, got {primes}")
    for p, e in delta_factorization:
        if not _is_prime(p):
            raise PreconditionViolated(f"{p} is not prime")
        if e < 1:
            raise PreconditionViolated(f"exponent of {p} must be positive, got {e}")
    delta = math.prod(p**e for p, e in delta_factorization)
    if delta % k:
        raise PreconditionViolated(f"k = {k} does not divide δ = {delta}")
    for p, e in delta_factorization:
        if k > delta // p**e:
            raise PreconditionViolated(f"k = {k} exceeds δ/{p}^{e} = {delta // p**e}")

    invariants = {}
    splitting = {}
    for i, (p, e) in enumerate(delta_factorization, start=1):
        q = p**e
        for suffix, x in (("", Fraction(1, q)), ("'", Fraction(-1, q))):
            v = f"v{i}{suffix}"
            invariants[Place(v)] = QModZ.from_rational(x)
            splitting[v] = [(f"w{i}{suffix}.{j}", 1) for j in range(1, k + 1)]
    Delta = GlobalCSA.from_map(delta, invariants)
    K = ExtensionProfile.from_map(k, splitting)
    verdict = hasse_verdict(Delta, K)
    assert verdict.status == HASSE_FAILURE, verdict.status
    return Delta, K

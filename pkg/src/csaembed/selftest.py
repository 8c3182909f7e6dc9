"""Randomised agreement check between the obstruction and capacity routes."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .brauer import GlobalCSA, ExtensionProfile, capacity_after_base_change, index
from .embed import embed_csa
from .hasse import local_report, obstruction, report_places
from .sampling import divisors, random_csa, random_profile


@dataclass
class AgreementSummary:
    seed: int
    trials: int = 0
    disagreements: list[tuple[GlobalCSA, ExtensionProfile]] = field(default_factory=list)
    embeddings: int = 0
    hasse_failures: int = 0
    local_obstructions: int = 0

    @property
    def ok(self) -> bool:
        return not self.disagreements


def random_pair(rng: random.Random, max_degree: int = 24, max_k: int = 6) -> tuple[GlobalCSA, ExtensionProfile]:
    A = random_csa(rng, max_degree)
    k = rng.choice([d for d in divisors(A.degree) if d <= max_k])
    extra = ["q"] if rng.random() < 0.3 else []
    return A, random_profile(rng, k, A, extra)


def obstruction_route(A: GlobalCSA, K: ExtensionProfile) -> tuple[bool, bool]:
    """``(locally feasible everywhere, obstruction vanishes)``."""
    local = all(local_report(A, K, v).feasible for v in report_places(A, K))
    return local, obstruction(A, K).vanishes


def capacity_route(A: GlobalCSA, K: ExtensionProfile) -> bool:
    n = A.degree // index(A)
    return embed_csa([(K.degree, capacity_after_base_change(A, K))], n).feasible


def run_agreement(seed: int, trials: int = 200) -> AgreementSummary:
    rng = random.Random(seed)
    summary = AgreementSummary(seed)
    for _ in range(trials):
        A, K = random_pair(rng)
        local, vanishes = obstruction_route(A, K)
        via_obstruction = local and vanishes
        if via_obstruction != capacity_route(A, K):
            summary.disagreements.append((A, K))
        summary.trials += 1
        if not local:
            summary.local_obstructions += 1
        elif vanishes:
            summary.embeddings += 1
        else:
            summary.hasse_failures += 1
    return summary

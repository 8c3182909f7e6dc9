import random
from fractions import Fraction

import pytest

from csaembed.algebra import (
    GlobalSourceFactor,
    LocalRing,
    TensorFactorData,
    WedderburnData,
    ell_values,
    field_factor,
    tensor_capacity,
    wedderburn_from_global,
)
from csaembed.brauer import ExtensionProfile, GlobalCSA, Place, capacity_after_base_change, index
from csaembed.core_arith import QModZ
from csaembed.errors import MissingSplittingData, NonIntegralEll
from csaembed.sampling import random_csa, random_profile

QUATERNION = GlobalCSA.from_map(2, {Place("p2"): QModZ(1, 2), Place("inf", "real"): QModZ(1, 2)})
QI = ExtensionProfile.from_map(2, {"p2": [("w2", 2)], "inf": [("winf", 2)]})


def test_split_delta_field_source():
    K = ExtensionProfile.from_map(3, {"p": [("a", 1), ("b", 2)]})
    W = wedderburn_from_global(GlobalCSA(1), field_factor(K))
    (f,) = W.factors
    assert ell_values(W) == [3]
    assert f.m == 1  # Δ ⊗ K = K is Mat_1 over its center
    assert f.local_ring == LocalRing(1, 0)


def test_quaternion_with_splitting_field():
    W = wedderburn_from_global(QUATERNION, field_factor(QI))
    (f,) = W.factors
    assert (f.m, f.dim_d, W.dim_delta) == (2, 2, 4)
    assert ell_values(W) == [1]


def test_delta_against_itself():
    Delta = GlobalCSA.from_map(3, {Place("p"): QModZ(1, 3), Place("q"): QModZ(2, 3)})
    center = ExtensionProfile.from_map(1, {"p": [("p", 1)], "q": [("q", 1)]})
    A_i = GlobalSourceFactor(center, 3, (("p", QModZ(1, 3)), ("q", QModZ(2, 3))))
    W = wedderburn_from_global(Delta, A_i)
    # Δ ⊗ Δ° = End_F(Δ) = Mat_9(F)
    assert W.factors[0].m == 9
    assert W.factors[0].dim_d == 1


def test_missing_splitting_data():
    with pytest.raises(MissingSplittingData):
        wedderburn_from_global(QUATERNION, field_factor(ExtensionProfile.from_map(2, {"p2": [("w", 2)]})))


def test_ell_values_examples():
    assert ell_values(WedderburnData(4, (TensorFactorData(2, 2),))) == [1]
    assert ell_values(WedderburnData(4, (TensorFactorData(1, 4), TensorFactorData(2, 4)))) == [1, 2]
    with pytest.raises(NonIntegralEll):
        ell_values(WedderburnData(2, (TensorFactorData(1, 3),)))


def test_local_ring_consistency():
    with pytest.raises(ValueError):
        LocalRing(1, 1)
    with pytest.raises(ValueError):
        LocalRing(2, 0)


def _random_source(rng, Delta):
    k = rng.randint(1, 4)
    K = random_profile(rng, k, Delta, prefix=f"K{rng.random():.6f}")
    if rng.random() < 0.5:
        return K, field_factor(K)
    # noncommutative source over K: random invariants on two places of K summing to zero
    deg = rng.choice([2, 3, 4])
    ws = list(K.places_above())
    if len(ws) < 2:
        return K, field_factor(K)
    a, b = rng.sample(ws, 2)
    x = QModZ.from_rational(Fraction(rng.randrange(deg), deg))
    return K, GlobalSourceFactor(K, deg, ((a, x), (b, -x)))


@pytest.mark.parametrize("seed", range(4))
def test_tensor_degree_identity(seed):
    rng = random.Random(seed)
    checked = 0
    while checked < 80:
        Delta = random_csa(rng, 12)
        K, A_i = _random_source(rng, Delta)
        if any(p.kind == "real" for p, _ in Delta.invariants) and A_i.degree_over_center > 1:
            continue
        W = wedderburn_from_global(Delta, A_i)
        (f,) = W.factors
        # [Δ:F][A_i:F] = c_i^2 [D_i:F]
        assert W.dim_delta * A_i.dim_over_F == f.m**2 * f.dim_d
        assert f.m == tensor_capacity(Delta, A_i)
        if A_i.degree_over_center == 1:
            assert f.m == capacity_after_base_change(Delta, K)
            assert ell_values(W) == [K.degree // f.m]
        checked += 1

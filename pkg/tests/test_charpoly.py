import itertools
import math
import random

import pytest

from csaembed.brauer import ExtensionProfile, GlobalCSA, Place
from csaembed.charpoly import FactoredPolynomial, PolyFactor, charpoly_admissible_global, charpoly_admissible_local
from csaembed.core_arith import QModZ
from csaembed.errors import DegreeMismatch, MissingSplittingData, NonIntegralN

QUATERNION = GlobalCSA.from_map(2, {Place("p2"): QModZ(1, 2), Place("inf", "real"): QModZ(1, 2)})
QI = ExtensionProfile.from_map(2, {"p2": [("w2", 2)], "inf": [("winf", 2)]})


def poly(*factors):
    return FactoredPolynomial(tuple(PolyFactor(*f) for f in factors))


def test_split_delta_admits_everything():
    r = charpoly_admissible_global(poly((3, 1), (1, 2)), GlobalCSA(1), 5)
    assert r.admissible and [f.capacity for f in r.factors] == [1, 1]


def test_quaternion_examples():
    # t^2 + 1 over the Hamilton quaternions
    r = charpoly_admissible_global(poly((2, 1, QI)), QUATERNION, 1)
    assert r.admissible and r.factors[0].n_i == 1 and r.factors[0].capacity == 2
    # (t - λ)^2: a scalar matrix
    assert charpoly_admissible_global(poly((1, 2)), QUATERNION, 1)
    # a quadratic field not splitting H cannot occur in Mat_1(H)
    K = ExtensionProfile.from_map(2, {"p2": [("a", 1), ("b", 1)], "inf": [("c", 2)]})
    assert not charpoly_admissible_global(poly((2, 1, K)), QUATERNION, 1)
    # but it does occur in Mat_2(H), as a 2x2 block
    assert charpoly_admissible_global(poly((2, 2, K)), QUATERNION, 2)


def test_global_errors():
    with pytest.raises(NonIntegralN):
        charpoly_admissible_global(poly((1, 1), (1, 1)), QUATERNION, 1)
    with pytest.raises(DegreeMismatch):
        charpoly_admissible_global(poly((1, 2)), QUATERNION, 2)
    with pytest.raises(MissingSplittingData):
        charpoly_admissible_global(poly((2, 1)), QUATERNION, 1)
    with pytest.raises(DegreeMismatch):
        PolyFactor(3, 1, QI)


def test_local_examples():
    assert charpoly_admissible_local([(2, 2)], 2, 2)
    assert not charpoly_admissible_local([(3, 1), (1, 1)], 2, 2)
    assert charpoly_admissible_local([(4, 1)], 2, 2)
    assert not charpoly_admissible_local([(1, 1), (1, 1)], 2, 1)
    with pytest.raises(DegreeMismatch):
        charpoly_admissible_local([(3, 1)], 2, 2)


def test_d_one_always_admissible():
    rng = random.Random(2)
    for _ in range(100):
        f = [(rng.randint(1, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
        n = sum(a * b for a, b in f)
        assert charpoly_admissible_local(f, 1, n)


def _local_model(d: int):
    """Global Δ of index d whose only ramification is ±1/d at v, v'."""
    return GlobalCSA.from_map(d, {Place("v"): QModZ(1, d), Place("v'"): QModZ(d - 1, d)})


def test_local_global_consistency():
    rng = random.Random(5)
    for _ in range(150):
        d = rng.randint(2, 6)
        n = rng.randint(1, 4)
        # random factor profile with total degree n d
        degrees = []
        left = n * d
        while left:
            deg = rng.randint(1, min(left, 6))
            a = rng.randint(1, left // deg)
            degrees.append((deg, a))
            left -= deg * a
        local = charpoly_admissible_local(degrees, d, n)
        Delta = _local_model(d)
        factors = tuple(
            PolyFactor(deg, a, ExtensionProfile.from_map(deg, {"v": [("w", deg)], "v'": [("w'", deg)]}))
            for deg, a in degrees
        )
        try:
            glob = charpoly_admissible_global(FactoredPolynomial(factors), Delta, n)
        except NonIntegralN:
            assert not local.admissible
            continue
        assert glob.admissible == local.admissible
        for g, l in zip(glob.factors, local.factors):
            assert g.capacity == l.capacity == math.gcd(d, g.degree)


def test_permutation_invariance():
    rng = random.Random(8)
    for _ in range(60):
        d = rng.randint(1, 4)
        f = [(rng.randint(1, 4), rng.randint(1, 3)) for _ in range(3)]
        total = sum(a * b for a, b in f)
        if total % d:
            continue
        verdicts = {charpoly_admissible_local(list(p), d, total // d).admissible for p in itertools.permutations(f)}
        assert len(verdicts) == 1

import random

import pytest

from utimage.cring import CPoly
from utimage.corpus import random_multilinear
from utimage.errors import DegreeCapExceeded
from utimage.mpoly import MultilinearPoly, poly, substitute, sum_of_coefficients
from utimage.pitest import (coordinates_to_matrix, generic_coordinates, generic_tuple,
                            is_identity, is_identity_randomized, max_identity_level)


def test_identity_examples():
    assert is_identity(poly("[x1,x2][x3,x4]"), 2)
    assert is_identity(poly("[x1,x2][x3,x4][x5,x6]"), 3)


def test_identity_certificate():
    res = is_identity(poly("[x1,x2]"), 2)
    assert not res
    assert res.entry == (1, 2)
    # generic naming a,b,c / d,e,f for x1, x2: a e + b f - d b - e c
    a, b, c = "t1_1_1", "t1_1_2", "t1_2_2"
    d, e, f = "t2_1_1", "t2_1_2", "t2_2_2"
    rn = {a: "a", b: "b", c: "c", d: "d", e: "e", f: "f"}
    cert = res.certificate.rename(rn)
    A, B, C, D, E, F = (CPoly.var(v) for v in "abcdef")
    assert cert == A * E + B * F - D * B - E * C
    assert str(cert) == "a*e - b*d + b*f - c*e"


@pytest.mark.parametrize("seed", range(25))
def test_fast_generic_matches_symbolic_product(seed):
    rng = random.Random(seed)
    f = random_multilinear(rng, rng.randint(1, 4))
    k = rng.randint(1, 3)
    slow = substitute(f, generic_tuple(f.degree, k))
    fast = coordinates_to_matrix(generic_coordinates(f, k), k, f.degree)
    assert slow == fast


def test_randomized_examples():
    f = poly("[x1,x2][x3,x4]")
    for seed in range(5):
        assert is_identity_randomized(f, 2, trials=10, seed=seed)
    assert not is_identity_randomized(poly("x1*x2"), 1, trials=1, seed=3)


def test_randomized_agrees_with_exact():
    rng = random.Random(2024)
    for i in range(200):
        f = random_multilinear(rng, rng.randint(2, 6))
        k = rng.randint(1, 3)
        assert is_identity_randomized(f, k, trials=10, seed=i) == is_identity(f, k).holds


def test_max_identity_level_examples():
    assert max_identity_level(poly("x1"), 3) == 0
    assert max_identity_level(poly("[x1,x2]"), 3) == 1
    assert max_identity_level(poly("[x1,x2][x3,x4]"), 2) == 2
    assert max_identity_level(poly("[x1,x2][x3,x4]"), 4) == 2
    assert max_identity_level(poly("[x1,x2][x3,x4][x5,x6]"), 4) == 3


def test_chain_and_sum_criterion():
    rng = random.Random(77)
    for _ in range(60):
        f = random_multilinear(rng, rng.randint(2, 6))
        results = [is_identity(f, k).holds for k in range(1, 5)]
        for k in range(1, 4):
            if results[k]:
                assert results[k - 1]
        assert (sum_of_coefficients(f) == 0) == results[0]


def test_renaming_invariance():
    rng = random.Random(5)
    for _ in range(20):
        f = random_multilinear(rng, rng.randint(2, 5))
        for k in (2, 3):
            a, b = is_identity(f, k, prefix="t"), is_identity(f, k, prefix="y")
            assert a.holds == b.holds
            if not a.holds:
                mapping = {v: "y" + v[1:] for v in a.certificate.variables()}
                assert a.certificate.rename(mapping) == b.certificate


def test_zero_polynomial_is_identity():
    assert is_identity(MultilinearPoly(3), 2)


def test_degree_cap(monkeypatch):
    f = poly("[x1,x2][x3,x4][x5,x6]")
    monkeypatch.setenv("UTIMAGE_DEGREE_CAP", "5")
    with pytest.raises(DegreeCapExceeded):
        is_identity(f, 3)
    monkeypatch.setenv("UTIMAGE_DEGREE_CAP", "6")
    assert is_identity(f, 3)

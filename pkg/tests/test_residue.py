import random

import pytest
from sympy import primerange

from triple_symbols.eisenstein import OMEGA, EisensteinInt, normalize_prime_l3
from triple_symbols.errors import (
    CharacterUndefined,
    NoCubeRoot,
    NonResidue,
    NotCubeRootOfUnity,
    NotSplit,
)
from triple_symbols.residue import (
    CubicAlgebraElem,
    FpElem,
    FpOmegaElem,
    algebra_components,
    algebra_norm,
    cube_roots_in_fq2,
    cubic_character,
    legendre,
    omega_log,
    sqrt_mod,
    zeta3_log,
    zeta3_power,
)

SMALL_PRIMES = list(primerange(3, 200))


def _random_omega(rng, q):
    return FpOmegaElem(rng.randrange(q), rng.randrange(q), q)


def _random_algebra(rng, p1, q):
    return CubicAlgebraElem(_random_omega(rng, q), _random_omega(rng, q), _random_omega(rng, q), p1)


def test_legendre_examples():
    assert legendre(4, 17) == 1
    assert legendre(13, 17) == 1
    assert legendre(3, 5) == -1
    assert legendre(0, 7) == 0
    assert legendre(-1, 13) == 1


def test_legendre_against_square_enumeration():
    for q in SMALL_PRIMES:
        squares = {a * a % q for a in range(1, q)}
        for a in range(q):
            expected = 0 if a == 0 else (1 if a in squares else -1)
            assert legendre(a, q) == expected, (a, q)


def test_sqrt_mod_examples():
    assert sqrt_mod(13, 17) == (8, 9)
    assert sqrt_mod(4, 17) == (2, 15)
    with pytest.raises(NonResidue):
        sqrt_mod(3, 5)
    with pytest.raises(NonResidue):
        sqrt_mod(0, 5)


def test_sqrt_mod_all_small_moduli():
    for q in SMALL_PRIMES:
        for a in range(1, q):
            if legendre(a, q) != 1:
                continue
            s, t = sqrt_mod(a, q)
            assert s * s % q == a
            assert s + t == q


def test_fp_elem_reduces():
    assert FpElem(-1, 17).value == 16
    assert (FpElem(5, 17) * FpElem(7, 17)).value == 1
    assert FpElem(5, 17).inverse().value == 7


def test_fp_omega_basics():
    q = 17
    omega = FpOmegaElem.omega(q)
    assert omega ** 3 == FpOmegaElem.one(q)
    assert omega * omega + omega + 1 == FpOmegaElem(0, 0, q)
    assert omega.conjugate() == omega * omega
    u = FpOmegaElem(3, 11, q)
    assert u * u.inverse() == FpOmegaElem.one(q)
    assert FpOmegaElem.of(EisensteinInt(20, -1), q) == FpOmegaElem(3, 16, q)


def test_group_order():
    rng = random.Random(2)
    for q in (17, 53, 71, 89):
        for _ in range(50):
            u = _random_omega(rng, q)
            if u.is_zero():
                continue
            assert u ** (q * q - 1) == FpOmegaElem.one(q)


def test_pow_matches_repeated_multiplication():
    rng = random.Random(3)
    q, p1 = 53, -17
    for _ in range(10):
        exponent = rng.randint(0, 2 ** 10)
        base_fp = FpElem(rng.randrange(q), q)
        base_omega = _random_omega(rng, q)
        base_algebra = _random_algebra(rng, p1, q)
        naive_fp, naive_omega, naive_algebra = FpElem(1, q), FpOmegaElem.one(q), CubicAlgebraElem.constant(1, p1, q)
        for _ in range(exponent):
            naive_fp = naive_fp * base_fp
            naive_omega = naive_omega * base_omega
            naive_algebra = naive_algebra * base_algebra
        assert base_fp ** exponent == naive_fp
        assert base_omega ** exponent == naive_omega
        assert base_algebra ** exponent == naive_algebra


def test_omega_log():
    q = 17
    assert omega_log(FpOmegaElem.one(q)) == 0
    assert omega_log(FpOmegaElem.omega(q)) == 1
    assert omega_log(FpOmegaElem(-1, -1, q)) == 2
    with pytest.raises(NotCubeRootOfUnity):
        omega_log(FpOmegaElem(2, 0, q))


def test_zeta3_decoding_is_inverse_of_encoding():
    for c in range(3):
        assert zeta3_log(zeta3_power(c, 53)) == c
    # zeta_3 is read as w^2 in the residue field
    assert zeta3_log(FpOmegaElem.omega(53)) == 2


def test_cubic_character_examples():
    np17 = normalize_prime_l3(17)
    assert cubic_character(1, np17) == 0
    assert cubic_character(-593, np17) == 0
    assert cubic_character(OMEGA, np17) == 0
    with pytest.raises(CharacterUndefined):
        cubic_character(34, np17)


@pytest.mark.parametrize("q", [
    17, 53, 71, 89,
    pytest.param(107, marks=pytest.mark.slow),
    pytest.param(179, marks=pytest.mark.slow),
    pytest.param(197, marks=pytest.mark.slow),
])
def test_cubic_character_against_cube_enumeration(q):
    np = normalize_prime_l3(q)
    elements = [FpOmegaElem(a, b, q) for a in range(q) for b in range(q) if a or b]
    cubes = {(u ** 3).key() for u in elements}
    assert len(cubes) == len(elements) // 3
    for u in elements:
        m = cubic_character(EisensteinInt(u.c0, u.c1), np)
        assert (m == 0) == (u.key() in cubes)
        assert u ** ((q * q - 1) // 3) == FpOmegaElem.omega_power(m, q)


def test_cubic_character_is_multiplicative():
    rng = random.Random(4)
    for q in (71, 89, 107, 179, 197):
        np = normalize_prime_l3(q)
        for _ in range(40):
            a = EisensteinInt(rng.randrange(1, q), rng.randrange(q))
            b = EisensteinInt(rng.randrange(1, q), rng.randrange(q))
            assert cubic_character(a * b, np) == (cubic_character(a, np) + cubic_character(b, np)) % 3


def test_cube_roots():
    q = 17
    roots = cube_roots_in_fq2(1, q)
    assert {r.key() for r in roots} == {(1, 0), (0, 1), (16, 16)}
    assert FpOmegaElem(2, 0, q) in cube_roots_in_fq2(8, q)

    roots = cube_roots_in_fq2(-17, 53)
    assert len({r.key() for r in roots}) == 3
    assert all(r ** 3 == FpOmegaElem.of(-17, 53) for r in roots)
    assert roots[0].key() == min(r.key() for r in roots)


def test_cube_root_errors():
    with pytest.raises(NoCubeRoot):
        cube_roots_in_fq2(17, 17)
    with pytest.raises(NotSplit):
        cube_roots_in_fq2(2, 7)


def test_algebra_components_examples():
    q, p1 = 53, -17
    c = CubicAlgebraElem.constant(5, p1, q)
    assert algebra_components(c) == (FpOmegaElem(5, 0, q),) * 3
    assert algebra_components(CubicAlgebraElem.t(p1, q)) == cube_roots_in_fq2(p1, q)


def test_algebra_norm_vanishes_with_a_component():
    q, p1 = 53, -17
    root = cube_roots_in_fq2(p1, q)[1]
    e = CubicAlgebraElem.t(p1, q) - CubicAlgebraElem.constant(root, p1, q)
    assert algebra_components(e)[1].is_zero()
    assert algebra_norm(e) == 0
    assert algebra_norm(CubicAlgebraElem.constant(2, p1, q)) == pow(2, 6, q)


def test_algebra_components_is_a_ring_homomorphism():
    rng = random.Random(5)
    q, p1 = 53, -17
    for _ in range(10 ** 4):
        e = _random_algebra(rng, p1, q)
        f = _random_algebra(rng, p1, q)
        ce, cf = algebra_components(e), algebra_components(f)
        assert algebra_components(e + f) == tuple(a + b for a, b in zip(ce, cf))
        assert algebra_components(e * f) == tuple(a * b for a, b in zip(ce, cf))

from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from nichols_zn.modarith import (HenselError, QuadCongruence, crt_combine, factorize, hensel_lift,
                                 is_prime, legendre, solve_linear, solve_quadratic,
                                 sqrt_mod_prime_power)
from nichols_zn.budget import UnsupportedModulus

ODD_PRIMES = [p for p in range(3, 100) if is_prime(p)]


def brute(a, b, c, m):
    return [x for x in range(m) if (a * x * x + b * x + c) % m == 0]


@pytest.mark.parametrize("n, expected", [(60, {2: 2, 3: 1, 5: 1}), (1, {}), (24, {2: 3, 3: 1}),
                                         (97, {97: 1}), (1024, {2: 10})])
def test_factorize_examples(n, expected):
    f = factorize(n)
    assert f.as_dict() == expected
    assert f.value == n


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


@given(st.integers(1, 10**6))
def test_factorization_reconstructs(n):
    f = factorize(n)
    assert f.value == n
    assert all(is_prime(p) and a >= 1 for p, a in f)
    assert list(f.primes) == sorted(f.primes)


def test_legendre_examples():
    assert legendre(-3, 7) == 1
    assert legendre(-3, 5) == -1
    assert all(legendre(1, p) == 1 for p in ODD_PRIMES)
    assert legendre(14, 7) == 0
    with pytest.raises(ValueError):
        legendre(1, 2)
    with pytest.raises(ValueError):
        legendre(1, 9)


def test_legendre_matches_squares():
    for p in ODD_PRIMES:
        squares = {x * x % p for x in range(1, p)}
        for a in range(p):
            expect = 0 if a == 0 else (1 if a in squares else -1)
            assert legendre(a, p) == expect


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_legendre_multiplicative(p):
    for a in range(1, p):
        for b in range(1, p):
            assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


def test_solve_linear_examples():
    assert list(solve_linear(4, 2, 6)) == [1, 4]
    assert not solve_linear(2, 1, 4)
    assert list(solve_linear(1, 5, 9)) == [4]


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 60))
def test_solve_linear_count(a, b, m):
    sols = list(solve_linear(a, b, m))
    assert sols == [x for x in range(m) if (a * x + b) % m == 0]
    if b % gcd(a, m) == 0:
        assert len(sols) == gcd(a, m)
    else:
        assert sols == []


def test_sqrt_examples():
    assert list(sqrt_mod_prime_power(1, 2, 3)) == [1, 3, 5, 7]
    assert not sqrt_mod_prime_power(5, 2, 3)
    assert list(sqrt_mod_prime_power(2, 7, 1)) == [3, 4]
    with pytest.raises(ValueError):
        sqrt_mod_prime_power(9, 3, 2)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_sqrt_counts(p):
    for k in range(1, 5 if p < 7 else 3):
        q = p**k
        for a in range(1, q):
            if a % p == 0:
                continue
            roots = list(sqrt_mod_prime_power(a, p, k))
            assert roots == [x for x in range(q) if (x * x - a) % q == 0]
            if p > 2:
                assert len(roots) == 1 + legendre(a, p)
            elif k == 1:
                assert len(roots) == 1
            elif k == 2:
                assert len(roots) == (2 if a % 4 == 1 else 0)
            else:
                assert len(roots) == (4 if a % 8 == 1 else 0)


def test_hensel_examples():
    assert hensel_lift((1, 1, 1), 2, 7, 2) == 30
    assert hensel_lift((1, 1, 1), 2, 7, 1) == 2
    with pytest.raises(HenselError):
        hensel_lift((-1, 0, 1), 1, 2, 2)


@given(st.sampled_from([3, 5, 7, 11, 13]), st.integers(1, 5), st.integers(-20, 20),
       st.integers(-20, 20))
def test_hensel_round_trip(p, k, b, c):
    f = (c, b, 1)
    for r in range(p):
        if (r * r + b * r + c) % p or (2 * r + b) % p == 0:
            continue
        x = hensel_lift(f, r, p, k)
        assert x % p == r
        assert (x * x + b * x + c) % p**k == 0


def test_crt_examples():
    assert crt_combine([(1, 3), (2, 4)]) == (10, 12)
    assert crt_combine([(0, 7)]) == (0, 7)
    assert crt_combine([(1, 3), (1, 5)]) == (1, 15)
    with pytest.raises(ValueError):
        crt_combine([(1, 4), (1, 6)])


@given(st.lists(st.sampled_from([3, 4, 5, 7, 11, 13]), min_size=1, max_size=4, unique=True),
       st.data())
def test_crt_restricts(moduli, data):
    rs = [data.draw(st.integers(0, m - 1)) for m in moduli]
    r, M = crt_combine(zip(rs, moduli))
    assert M == prod(moduli)
    assert all(r % m == ri for ri, m in zip(rs, moduli))


def test_quadratic_examples():
    assert 3 in solve_quadratic(QuadCongruence(2, 3, 3, 6))
    assert 4 in solve_quadratic(QuadCongruence(4, -9, 8, 12))
    assert not solve_quadratic(QuadCongruence(1, 3, 7, 14))
    assert not solve_quadratic(QuadCongruence(1, 1, 1, 2))


def test_quadratic_singular_discriminant():
    # x^2 = 3 has a root mod 3 but none mod 9
    assert list(solve_quadratic(QuadCongruence(1, 0, -3, 3))) == [0]
    assert not solve_quadratic(QuadCongruence(1, 0, -3, 9))


@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4), st.integers(-10**4, 10**4),
       st.integers(1, 2000))
def test_quadratic_matches_enumeration(a, b, c, m):
    assert list(solve_quadratic(QuadCongruence(a, b, c, m))) == brute(a, b, c, m)


@given(st.sampled_from(ODD_PRIMES), st.integers(1, 10**3), st.integers(-10**3, 10**3),
       st.integers(-10**3, 10**3))
def test_quadratic_root_count_law(p, a, b, c):
    disc = b * b - 4 * a * c
    if a % p == 0 or disc % p == 0:
        return
    assert len(solve_quadratic(QuadCongruence(a, b, c, p))) == 1 + legendre(disc, p)


@given(st.integers(0, 50), st.integers(0, 50), st.integers(0, 50),
       st.sampled_from([12, 18, 30, 36, 60, 84, 90]))
def test_quadratic_crt_consistency(a, b, c, m):
    full = set(solve_quadratic(QuadCongruence(a, b, c, m)))
    parts = [(q, set(solve_quadratic(QuadCongruence(a, b, c, q)))) for q in factorize(m).prime_powers()]
    for x in full:
        assert all(x % q in roots for q, roots in parts)
    combos = 1
    for _, roots in parts:
        combos *= len(roots)
    assert combos == len(full)


def test_quadratic_bound():
    with pytest.raises(UnsupportedModulus):
        solve_quadratic(QuadCongruence(7, 0, 7 * 3, 7**8), bound=1000)

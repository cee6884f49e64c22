"""Exact modular arithmetic: factorization, Legendre symbols, linear and
quadratic congruences, Hensel lifting and the Chinese remainder theorem.

Everything here works on Python integers and returns fully materialized,
sorted residue lists so that results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, prod
from typing import Iterable, Iterator, NamedTuple, Sequence

from .budget import DEFAULT_PRIME_POWER_BOUND, UnsupportedModulus


class HenselError(ValueError):
    """The derivative vanishes at the root, so a unique lift is not guaranteed."""


@dataclass(frozen=True)
class PrimeFactorization:
    """Prime factorization ``n = prod(p**alpha)`` with primes ascending."""

    factors: tuple[tuple[int, int], ...]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def value(self) -> int:
        return prod(p**a for p, a in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        """Exponent of ``p`` in the factorization (0 if absent)."""
        for q, a in self.factors:
            if q == p:
                return a
        return 0

    def prime_powers(self) -> list[int]:
        return [p**a for p, a in self.factors]

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


class QuadCongruence(NamedTuple):
    """The congruence ``a*x**2 + b*x + c = 0 (mod m)``."""

    a: int
    b: int
    c: int
    m: int

    def evaluate(self, x: int) -> int:
        return (self.a * x * x + self.b * x + self.c) % self.m

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


@dataclass(frozen=True)
class SolutionSet:
    """All residues in ``[0, modulus)`` solving some congruence, ascending."""

    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "residues", tuple(sorted(set(self.residues))))

    def __contains__(self, x) -> bool:
        return x % self.modulus in self.residues

    def __iter__(self):
        return iter(self.residues)

    def __len__(self):
        return len(self.residues)

    def __bool__(self):
        return bool(self.residues)

    def __repr__(self):
        return f"SolutionSet(mod {self.modulus}: {list(self.residues)})"


@lru_cache(maxsize=4096)
def factorize(n: int) -> PrimeFactorization:
    """Factor ``n >= 1`` by trial division.

    >>> factorize(60).as_dict()
    {2: 2, 3: 1, 5: 1}
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            factors.append((d, a))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return PrimeFactorization(tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n).factors == ((n, 1),)


def inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m``; raises ValueError when not a unit."""
    return pow(a, -1, m)


def legendre(a: int, p: int) -> int:
    """Legendre symbol ``(a/p)`` for an odd prime ``p``: 1, -1 or 0."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def solve_linear(a: int, b: int, m: int) -> SolutionSet:
    """All ``x`` in ``[0, m)`` with ``a*x + b = 0 (mod m)``.

    Solvable iff ``gcd(a, m)`` divides ``b``; then there are exactly
    ``gcd(a, m)`` solutions spaced ``m // gcd(a, m)`` apart.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    a %= m
    b %= m
    g = gcd(a, m)
    if b % g:
        return SolutionSet(m, ())
    step = m // g
    x0 = (-(b // g) * inverse(a // g, step)) % step if step > 1 else 0
    return SolutionSet(m, tuple(x0 + t * step for t in range(g)))


def _sqrt_mod_prime(a: int, p: int) -> int | None:
    """One square root of a unit ``a`` modulo an odd prime (Tonelli-Shanks)."""
    a %= p
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c, r, t, e = pow(z, q, p), pow(a, (q + 1) // 2, p), pow(a, q, p), s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (e - i - 1), p)
        r, c = r * b % p, b * b % p
        t, e = t * c % p, i
    return r


def sqrt_mod_prime_power(a: int, p: int, k: int) -> SolutionSet:
    """All square roots of a unit ``a`` modulo ``p**k``.

    Odd ``p`` gives ``1 + (a/p)`` roots.  For ``p = 2`` the count is 1 when
    ``k = 1``; 2 or 0 when ``k = 2`` (``a = 1 mod 4`` or not); 4 or 0 when
    ``k > 2`` (``a = 1 mod 8`` or not).
    """
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    if a % p == 0:
        raise ValueError(f"sqrt_mod_prime_power needs p not dividing a ({p} | {a})")
    mod = p**k
    a %= mod
    if p == 2:
        if k == 1:
            return SolutionSet(2, (1,))
        if k == 2:
            return SolutionSet(4, (1, 3) if a % 4 == 1 else ())
        if a % 8 != 1:
            return SolutionSet(mod, ())
        r = 1
        for j in range(3, k):
            # r*r = a (mod 2**j); fix the next bit
            if (r * r - a) % (1 << (j + 1)):
                r += 1 << (j - 1)
        half = mod // 2
        return SolutionSet(mod, (r, mod - r, (r + half) % mod, (half - r) % mod))
    r = _sqrt_mod_prime(a, p)
    if r is None:
        return SolutionSet(mod, ())
    r = hensel_lift((-a, 0, 1), r, p, k)
    return SolutionSet(mod, (r, (-r) % mod))


def _poly_eval(coeffs: Sequence[int], x: int, mod: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % mod
    return acc


def _poly_derivative(coeffs: Sequence[int]) -> list[int]:
    return [i * c for i, c in enumerate(coeffs)][1:]


def hensel_lift(f: Sequence[int], root: int, p: int, k_target: int) -> int:
    """Lift a simple root of ``f`` modulo ``p`` to a root modulo ``p**k_target``.

    ``f`` is a coefficient sequence in ascending degree, so ``(1, 1, 1)`` is
    ``x**2 + x + 1``.  The result is congruent to ``root`` modulo ``p``.
    """
    if k_target < 1:
        raise ValueError(f"k_target must be >= 1, got {k_target}")
    if _poly_eval(f, root, p):
        raise ValueError(f"{root} is not a root of f modulo {p}")
    df = _poly_derivative(f)
    d = _poly_eval(df, root, p)
    if d == 0:
        raise HenselError(f"f'({root}) = 0 (mod {p}); fall back to exhaustive search")
    x = root % p
    mod = p
    for _ in range(1, k_target):
        mod *= p
        x = (x - _poly_eval(f, x, mod) * inverse(_poly_eval(df, x, mod), mod)) % mod
    return x


def crt_combine(constraints: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Combine ``x = r_i (mod m_i)`` for pairwise coprime ``m_i``."""
    constraints = list(constraints)
    moduli = [m for _, m in constraints]
    for i, mi in enumerate(moduli):
        if mi < 1:
            raise ValueError(f"moduli must be >= 1, got {mi}")
        for mj in moduli[i + 1:]:
            if gcd(mi, mj) != 1:
                raise ValueError(f"moduli {mi} and {mj} are not coprime")
    r, m = 0, 1
    for ri, mi in constraints:
        # r + m*t = ri (mod mi)
        t = ((ri - r) * inverse(m, mi)) % mi if mi > 1 else 0
        r, m = r + m * t, m * mi
    return r % m, m


def _enumerate_roots(q: QuadCongruence, bound: int) -> list[int]:
    if q.m > bound:
        raise UnsupportedModulus(
            f"prime power {q.m} exceeds exhaustive bound {bound}")
    return [x for x in range(q.m) if q.evaluate(x) == 0]


@lru_cache(maxsize=1 << 16)
def _roots_prime_power(a: int, b: int, c: int, p: int, k: int, bound: int) -> tuple[int, ...]:
    """Roots modulo ``p**k``; coefficients must already be reduced."""
    return tuple(_roots_prime_power_uncached(a, b, c, p, k, bound))


def _roots_prime_power_uncached(a, b, c, p, k, bound):
    mod = p**k
    if p == 2:
        if a % 2 and b % 2:
            # f' = 2ax + b is odd everywhere: every root mod 2 lifts uniquely
            return sorted(hensel_lift((c, b, a), r, 2, k) for r in (0, 1)
                          if (a * r * r + b * r + c) % 2 == 0)
        if a % 2 and b % 2 == 0:
            rhs = (b // 2) ** 2 - a * c
            if rhs % 2:
                ainv = inverse(a, mod)
                return sorted((s - b // 2) * ainv % mod
                              for s in sqrt_mod_prime_power(rhs, 2, k))
        return _enumerate_roots(QuadCongruence(a, b, c, mod), bound)
    if a % p:
        disc = b * b - 4 * a * c
        if disc % p:
            inv2a = inverse(2 * a, mod)
            return sorted((s - b) * inv2a % mod for s in sqrt_mod_prime_power(disc, p, k))
    elif b % p:
        # linear mod p with nonvanishing derivative
        r0 = (-c * inverse(b, p)) % p
        return [hensel_lift((c, b, a), r0, p, k)]
    return _enumerate_roots(QuadCongruence(a, b, c, mod), bound)


def solve_quadratic(q: QuadCongruence, bound: int = DEFAULT_PRIME_POWER_BOUND) -> SolutionSet:
    """Every ``x`` in ``[0, m)`` with ``a*x**2 + b*x + c = 0 (mod m)``.

    The modulus is split into prime powers.  Each prime power is solved by
    completing the square plus square roots and Hensel lifting when the
    leading coefficient and discriminant are units; otherwise by exhaustive
    enumeration of that prime power, which is capped at ``bound``.  The
    pieces are glued back with the CRT.

    >>> 3 in solve_quadratic(QuadCongruence(2, 3, 3, 6))
    True
    """
    a, b, c, m = q
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return SolutionSet(1, (0,))
    factors = factorize(m).factors
    per_power = []
    for p, k in factors:
        pk = p**k
        roots = _roots_prime_power(a % pk, b % pk, c % pk, p, k, bound)
        if not roots:
            return SolutionSet(m, ())
        per_power.append(roots)
    if len(per_power) == 1:
        return SolutionSet(m, per_power[0])
    basis = _crt_basis(factors)
    return SolutionSet(m, tuple(sum(r * e for r, e in zip(choice, basis)) % m
                                for choice in product(*per_power)))


@lru_cache(maxsize=4096)
def _crt_basis(factors: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    """Idempotents ``e_i`` with ``e_i = 1`` mod the i-th prime power, 0 mod the rest."""
    powers = [p**k for p, k in factors]
    return tuple(crt_combine([(int(i == j), pk) for j, pk in enumerate(powers)])[0]
                 for i in range(len(powers)))

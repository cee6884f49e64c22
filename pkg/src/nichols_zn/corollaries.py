"""Rank-2 finite cases over Z_p and Z_{p^b}, written out directly.

These predicates restate the prime and prime-power specializations as
plain exponent formulas.  They deliberately do not reuse the general case
table in :mod:`classify`, so comparing the two is a real cross-check.
"""

from __future__ import annotations

from itertools import product

from .braiding import GDD, exp_order
from .modarith import factorize, is_prime, legendre


def _minus_one(n):
    return n // 2 if n % 2 == 0 else None


def _prime_power(n):
    f = factorize(n)
    if len(f) != 1:
        return None
    return f.factors[0]


def _cases(n: int, d1: int, d2: int, e: int) -> list[str]:
    pp = _prime_power(n)
    if pp is None or e == 0:
        return []
    p, beta = pp
    h = _minus_one(n)
    oe, o1 = exp_order(e, n), exp_order(d1, n)

    def alpha(m):
        return factorize(m).exponent(p) if m > 1 else 0

    out = []
    if beta == 1:
        if (d1 + e) % n == 0 and (d2 + e) % n == 0 and oe == p:
            if p == 3 or (p > 3 and legendre(-3, p) == 1):
                out.append("T2(1)")
        if d1 == h and (d2 + e) % n == 0 and oe == p and p > 2:
            out.append("T2(2)_1")
        if d2 == h and (d1 + e) % n == 0 and oe == p and p > 2:
            out.append("T2(2)_2")
        if d1 == h and d2 == h and oe == p and p > 2:
            out.append("T2(3)")
        if (e + 2 * d1) % n == 0 and (d2 - 2 * d1) % n == 0 and o1 == p:
            if p > 3 and p % 4 == 1:
                out.append("T3(1)_1")
        if (e + 2 * d1) % n == 0 and d2 == h and o1 == p and p > 2:
            out.append("T3(1)_2")
        if (e + 3 * d1) % n == 0 and (d2 - 3 * d1) % n == 0 and o1 == p:
            if p > 3 and legendre(-3, p) == 1:
                out.append("T8(1)")
        return out

    # n = p^beta with beta > 1; m = p^alpha is the order of the designated root
    m = oe
    if (d1 + e) % n == 0 and (d2 + e) % n == 0:
        if (p == 3 and alpha(m) == 1) or (p > 3 and legendre(-3, p) == 1):
            out.append("T2(1)")
    two_ok = (p == 2 and alpha(m) > 1) or p > 2
    if d1 == h and (d2 + e) % n == 0 and two_ok:
        out.append("T2(2)_1")
    if d2 == h and (d1 + e) % n == 0 and two_ok:
        out.append("T2(2)_2")
    if d1 == h and d2 == h and two_ok:
        out.append("T2(3)")
    m = o1
    if (e + 2 * d1) % n == 0 and (d2 - 2 * d1) % n == 0 and m > 2:
        if p > 3 and p % 4 == 1:
            out.append("T3(1)_1")
    if (e + 2 * d1) % n == 0 and d2 == h and m > 2:
        if (p == 2 and alpha(m) > 3) or p > 2:
            out.append("T3(1)_2")
    m = exp_order(d2, n)
    if (e + d2) % n == 0 and m > 3 and p == 3 and alpha(m) > 1 and n % 3 == 0:
        # some generator w = w0^u with q22 = w^(n/m) and q11 = w^(ns/3), s in {1, 2}
        for u in range(1, n):
            if u % p == 0:
                continue
            if (d2 - u * (n // m)) % n == 0 and any((d1 - u * (n * s // 3)) % n == 0 for s in (1, 2)):
                out.append("T3(2)_1")
                break
    m = o1
    if (e + 3 * d1) % n == 0 and (d2 - 3 * d1) % n == 0 and m > 3:
        if p > 3 and legendre(-3, p) == 1:
            out.append("T8(1)")
    if h is not None and (4 * e - h) % n == 0 and d2 == h and beta >= 3:
        if (e - d1 - h) % n == 0:
            out.append("T8(2)_1")
        if (d1 + 2 * e) % n == 0:
            out.append("T8(2)_2")
    if h is not None and (4 * e - h) % n == 0 and (d1 - 2 * e) % n == 0 and (d2 + e) % n == 0:
        out.append("T8(3)")
    return out


def corollary_labels(G: GDD) -> set[str]:
    """Case names that hold for ``G`` in either vertex order."""
    if G.rank != 2:
        raise ValueError("rank-2 only")
    (d1, d2), e = G.diag, G.edge(0, 1)
    return set(_cases(G.n, d1, d2, e)) | set(_cases(G.n, d2, d1, e))


def corollary_classes(n: int) -> dict[tuple, set[str]]:
    """Isomorphism key -> case names, for ``n`` a prime or a prime power."""
    if n < 2 or _prime_power(n) is None:
        raise ValueError(f"{n} is not a prime power")
    out = {}
    for d1, d2, e in product(range(n), range(n), range(1, n)):
        G = GDD.from_edges(n, (d1, d2), {(0, 1): e})
        labels = corollary_labels(G)
        if labels:
            out.setdefault(G.key(), set()).update(labels)
    return out


def is_prime_modulus(n: int) -> bool:
    return is_prime(n)

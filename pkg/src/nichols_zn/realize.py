"""Realizability of diagonal braidings as Yetter-Drinfeld modules over Z_n.

A braiding with exponent matrix ``a`` comes from a Z_n-YD module exactly
when ``a_ij = x_i * y_j (mod n)`` for some integer vectors ``x, y``.  At the
level of generalized Dynkin diagrams this becomes the bilinear system

    x_i y_i = d_i,    x_i y_j + x_j y_i = e_ij    (mod n).

:func:`oracle_realize` decides such systems by exhaustive witness search.
The structured solvers reduce small-rank systems to quadratic congruences
and always re-verify their witnesses before returning them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterator, Sequence

from . import budget as _budget
from .braiding import GDD, BraidingMatrix
from .modarith import QuadCongruence, factorize, solve_linear, solve_quadratic


@dataclass(frozen=True)
class Realization:
    """Witness vectors with ``x_i * y_j`` reproducing the braiding exponents."""

    n: int
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        if len(self.x) != len(self.y):
            raise ValueError("x and y must have the same length")
        object.__setattr__(self, "x", tuple(int(v) % self.n for v in self.x))
        object.__setattr__(self, "y", tuple(int(v) % self.n for v in self.y))

    @property
    def rank(self) -> int:
        return len(self.x)

    def matrix(self) -> BraidingMatrix:
        return BraidingMatrix(self.n, [[xi * yj for yj in self.y] for xi in self.x])

    def gdd(self) -> GDD:
        from .braiding import gdd_of
        return gdd_of(self.matrix())

    def satisfies(self, S: BilinearSystem) -> bool:
        return S.n == self.n and S.rank == self.rank and S.check(self.x, self.y)

    def realizes(self, B: BraidingMatrix) -> bool:
        return B.n == self.n and self.matrix() == B

    def permuted(self, sigma: Sequence[int]) -> Realization:
        x, y = [0] * self.rank, [0] * self.rank
        for i, t in enumerate(sigma):
            x[t], y[t] = self.x[i], self.y[i]
        return Realization(self.n, tuple(x), tuple(y))

    def to_json(self) -> dict:
        return {"x": list(self.x), "y": list(self.y)}


@dataclass(frozen=True)
class BilinearSystem:
    """Targets ``d_i`` and symmetric ``e_ij`` of the GDD-level system mod ``n``."""

    n: int
    diag: tuple[int, ...]
    off: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = GDD(self.n, self.diag, self.off)
        object.__setattr__(self, "diag", g.diag)
        object.__setattr__(self, "off", g.edge_matrix)

    @property
    def rank(self) -> int:
        return len(self.diag)

    @classmethod
    def from_gdd(cls, G: GDD) -> BilinearSystem:
        return cls(G.n, G.diag, G.edge_matrix)

    @classmethod
    def from_targets(cls, n: int, diag: Sequence[int], edges: dict) -> BilinearSystem:
        return cls.from_gdd(GDD.from_edges(n, diag, edges))

    @classmethod
    def from_normal_form(cls, t: Sequence[int], k: int, s: int, m: int) -> BilinearSystem:
        """Targets ``t_i * s * k`` modulo ``n = k*m``.

        ``t`` is ``(t1, t2, t3)`` at rank 2 (vertex 1, vertex 2, edge) and
        ``(t1, ..., t6)`` at rank 3 (three vertices, then edges 12, 13, 23).
        """
        n = k * m
        sk = s * k
        if len(t) == 3:
            return cls.from_targets(n, (t[0] * sk, t[1] * sk), {(0, 1): t[2] * sk})
        if len(t) == 6:
            return cls.from_targets(n, [v * sk for v in t[:3]],
                                    {(0, 1): t[3] * sk, (0, 2): t[4] * sk, (1, 2): t[5] * sk})
        raise ValueError("normal forms exist for rank 2 (3 targets) and rank 3 (6 targets)")

    def gdd(self) -> GDD:
        return GDD(self.n, self.diag, self.off)

    def check(self, x: Sequence[int], y: Sequence[int]) -> bool:
        n, r = self.n, self.rank
        for i in range(r):
            if (x[i] * y[i] - self.diag[i]) % n:
                return False
            for j in range(i + 1, r):
                if (x[i] * y[j] + x[j] * y[i] - self.off[i][j]) % n:
                    return False
        return True


def _search(n: int, r: int, x_ok, y_constraints) -> tuple | None:
    """Depth-first search in the order ``x_1, y_1, x_2, y_2, ...``.

    ``y_constraints(i, xs, ys)`` returns linear conditions ``(c, rhs)`` meaning
    ``c * y_i = rhs (mod n)``.  The first hit is lexicographically smallest
    in that interleaved order.
    """
    xs, ys = [0] * r, [0] * r

    def dfs(i):
        if i == r:
            return True
        for xi in range(n):
            if not x_ok(i, xi, xs, ys):
                continue
            xs[i] = xi
            conds = y_constraints(i, xs, ys)
            c0, rhs0 = conds[0]
            for yi in solve_linear(c0, -rhs0, n):
                if all((c * yi - rhs) % n == 0 for c, rhs in conds[1:]):
                    ys[i] = yi
                    if dfs(i + 1):
                        return True
        return False

    return (tuple(xs), tuple(ys)) if dfs(0) else None


def _scan(n: int, r: int, check) -> tuple | None:
    for flat in product(range(n), repeat=2 * r):
        x, y = flat[0::2], flat[1::2]
        if check(x, y):
            return x, y
    return None


def oracle_realize(S: BilinearSystem, budget=None, method: str = "search") -> Realization | None:
    """Exhaustive witness search for a GDD-level system.

    ``method="search"`` walks ``x_1, y_1, x_2, ...`` and solves each ``y_i``
    from linear congruences; ``method="scan"`` tries all ``n**(2r)``
    assignments.  Both return the lexicographically smallest witness in the
    interleaved order, or ``None`` when there is none.
    """
    n, r = S.n, S.rank
    if method == "scan":
        _budget.check(n ** (2 * r), budget, "full witness scan")
        found = _scan(n, r, S.check)
    elif method == "search":
        _budget.check(r * n ** (r + 1), budget, "witness search")
        d, e = S.diag, S.off

        def y_constraints(i, xs, ys):
            return [(xs[i], d[i])] + [(xs[j], e[i][j] - xs[i] * ys[j]) for j in range(i)]

        found = _search(n, r, lambda i, xi, xs, ys: True, y_constraints)
    else:
        raise ValueError(f"unknown method {method!r}")
    if found is None:
        return None
    w = Realization(n, *found)
    assert w.satisfies(S)
    return w


def realize_matrix(B: BraidingMatrix, budget=None) -> Realization | None:
    """Rank-one decomposition ``a_ij = x_i y_j (mod n)`` of a braiding matrix."""
    n, r, a = B.n, B.rank, B.exponents
    _budget.check(r * n ** (r + 1), budget, "matrix witness search")

    def x_ok(i, xi, xs, ys):
        return all((xi * ys[j] - a[i][j]) % n == 0 for j in range(i))

    def y_constraints(i, xs, ys):
        return [(xs[i], a[i][i])] + [(xs[j], a[j][i]) for j in range(i)]

    found = _search(n, r, x_ok, y_constraints)
    if found is None:
        return None
    w = Realization(n, *found)
    assert w.realizes(B)
    return w


def realizable_gdd_keys(n: int, r: int, budget=None) -> set[tuple]:
    """Isomorphism keys of every GDD over Z_n of rank ``r`` that has a witness.

    This enumerates the image of ``(x, y) -> GDD`` over all of
    ``Z_n**(2r)``, i.e. the full scan run in bulk.
    """
    import numpy as np

    _budget.check(n ** (2 * r), budget, "bulk realizability scan")
    rows = set()
    pairs = np.array(list(product(range(n), repeat=2)), dtype=np.int64)  # (x_i, y_i)
    idx = np.arange(r)
    for combo in product(range(len(pairs)), repeat=r - 1):
        head = pairs[list(combo)] if combo else np.zeros((0, 2), dtype=np.int64)
        # the last vertex ranges over all pairs at once
        xs = np.concatenate([np.broadcast_to(head[:, 0], (len(pairs), r - 1)), pairs[:, :1]], axis=1)
        ys = np.concatenate([np.broadcast_to(head[:, 1], (len(pairs), r - 1)), pairs[:, 1:]], axis=1)
        M = (xs[:, :, None] * ys[:, None, :]) % n
        S = (M + M.transpose(0, 2, 1)) % n
        S[:, idx, idx] = M[:, idx, idx]
        rows.update(map(tuple, np.unique(S.reshape(len(S), -1), axis=0).tolist()))
    keys = set()
    for row in rows:
        keys.add(GDD(n, tuple(row[i * r + i] for i in range(r)),
                     [[0 if i == j else row[i * r + j] for j in range(r)]
                      for i in range(r)]).key())
    return keys


def normal_form(S: BilinearSystem) -> tuple[tuple[int, ...], int, int]:
    """Write the targets as ``t_i * k`` modulo ``n = k*m`` with ``k`` maximal.

    Returns ``(t, k, m)``; the targets are listed as in
    :meth:`BilinearSystem.from_normal_form`.
    """
    n, r = S.n, S.rank
    flat = list(S.diag) + [S.off[i][j] for i in range(r) for j in range(i + 1, r)]
    k = gcd(n, *flat)
    m = n // k
    return tuple((v // k) % m for v in flat), k, m


def framings(S: BilinearSystem) -> Iterator[tuple[tuple[int, ...], int, int, int]]:
    """All ``(t, k, s, m)`` with maximal ``k`` and ``s`` a unit mod ``m``."""
    t, k, m = normal_form(S)
    for s in range(1, max(m, 2)):
        if gcd(s, m) == 1:
            sinv = pow(s, -1, m) if m > 1 else 0
            yield tuple(v * sinv % m for v in t), k, s, m


def _verified(S: BilinearSystem, x, y) -> Realization | None:
    w = Realization(S.n, tuple(x), tuple(y))
    return w if w.satisfies(S) else None


def rank2_solve(t1: int, t2: int, t3: int, k: int, s: int, m: int) -> Realization | None:
    """Witness for ``x1y1 = t1sk, x2y2 = t2sk, x1y2 + x2y1 = t3sk (mod km)``.

    A root ``d`` of ``t1 x^2 - t3 x + t2 (mod m)`` gives the witness
    ``x = (1, d), y = (t1 sk, (t3 - d t1) sk)``; failing that, a root of
    ``t2 x^2 - t3 x + t1`` gives the mirrored witness.  Only witnesses of
    these two shapes are produced.
    """
    if gcd(s, m) != 1:
        raise ValueError(f"s = {s} must be a unit modulo m = {m}")
    S = BilinearSystem.from_normal_form((t1, t2, t3), k, s, m)
    sk = s * k
    for d in solve_quadratic(QuadCongruence(t1, -t3, t2, m)):
        w = _verified(S, (1, d), (t1 * sk, (t3 - d * t1) * sk))
        if w is not None:
            return w
    for d in solve_quadratic(QuadCongruence(t2, -t3, t1, m)):
        w = _verified(S, (d, 1), ((t3 - d * t2) * sk, t2 * sk))
        if w is not None:
            return w
    return None


def rank2_solvable(t1: int, t2: int, t3: int, m: int, budget=None) -> bool:
    """Whether the rank-2 system in normal form has a witness.

    When ``t1`` (or ``t2``) is a unit mod ``m`` this is exactly solvability of
    ``t1 x^2 - t3 x + t2`` (resp. the mirrored quadratic) mod ``m``; otherwise
    the witness search decides it at ``n = m``.
    """
    if gcd(t1, m) == 1:
        return bool(solve_quadratic(QuadCongruence(t1, -t3, t2, m)))
    if gcd(t2, m) == 1:
        return bool(solve_quadratic(QuadCongruence(t2, -t3, t1, m)))
    S = BilinearSystem.from_normal_form((t1, t2, t3), 1, 1, m)
    return oracle_realize(S, budget) is not None


def _rank3_two_quadratics(t, k, s, m) -> Realization | None:
    t1, t2, t3, t4, t5, t6 = t
    S = BilinearSystem.from_normal_form(t, k, s, m)
    sk = s * k
    roots2 = solve_quadratic(QuadCongruence(t1, -t4, t2, m))
    roots3 = solve_quadratic(QuadCongruence(t1, -t5, t3, m))
    for x2 in roots2:
        for x3 in roots3:
            if (2 * t1 * x2 * x3 - t4 * x3 - t5 * x2 + t6) % m:
                continue
            w = _verified(S, (1, x2, x3),
                          (t1 * sk, (t4 - x2 * t1) * sk, (t5 - x3 * t1) * sk))
            if w is not None:
                return w
    return None


def rank3_solve_t1_unit(t: Sequence[int], k: int, s: int, m: int) -> Realization | None:
    """Rank-3 system with ``t1 = 1 (mod n)``.

    Pairs a root ``x2`` of ``t1 x^2 - t4 x + t2`` with a root ``x3`` of
    ``t1 x^2 - t5 x + t3`` (mod m) subject to
    ``2 t1 x2 x3 - t4 x3 - t5 x2 = -t6 (mod m)``, then emits
    ``x = (1, x2, x3)``, ``y = (t1, t4 - x2 t1, t5 - x3 t1) * sk``.
    """
    if len(t) != 6:
        raise ValueError("rank-3 normal form has six targets")
    if (t[0] - 1) % (k * m):
        raise ValueError("t1 must be 1 modulo n")
    if gcd(s, m) != 1:
        raise ValueError(f"s = {s} must be a unit modulo m = {m}")
    return _rank3_two_quadratics(tuple(t), k, s, m)


def rank3_solve_coprime(t: Sequence[int], m: int, k: int = 1, s: int = 1) -> Realization | None:
    """Rank-3 system with ``t1`` a unit mod ``m``, by the same two-quadratic search."""
    if len(t) != 6:
        raise ValueError("rank-3 normal form has six targets")
    if gcd(t[0], m) != 1:
        raise ValueError(f"t1 = {t[0]} must be a unit modulo m = {m}")
    return _rank3_two_quadratics(tuple(t), k, s, m)


def lemma_2_2pp_system(m: int, m2: int, s: int, s2: int, n: int) -> BilinearSystem:
    """The rank-3 system with ``x1`` at ``-1`` joined to vertices ``q`` and ``r``.

    Vertex 1 carries ``n/2``, vertex 2 ``q = w**(sn/m)``, vertex 3
    ``r = w**(s'n/m')``; edges are ``q**-1``, ``r**-1`` and no edge 23.
    """
    if n % 2 or n % m or n % m2:
        raise ValueError(f"n = {n} must be a multiple of 2, {m} and {m2}")
    q, r = s * n // m, s2 * n // m2
    return BilinearSystem.from_targets(n, (n // 2, q, r), {(0, 1): -q, (0, 2): -r})


def lemma_2_2pp_solvable(m: int, m2: int, s: int, s2: int, as_stated: bool = False) -> bool:
    """Arithmetic test for the system of :func:`lemma_2_2pp_system`.

    With ``g = gcd(m, m2)``, ``m = g a`` and ``m2 = g b`` the system is
    solvable exactly when

    * every prime shared by ``m`` and ``m2`` occurs to the same power,
    * neither order is twice an odd number (each branch ``-1 -- q`` is a
      rank-2 subsystem that fails for such orders), and
    * ``s b + s' a = 0 (mod g)``.

    The last condition reads ``-s = c s' (mod m2)`` when ``m = c m2`` with
    ``c`` coprime to ``m2``.  ``as_stated=True`` drops the middle condition
    and checks the congruence only in the two divisibility cases; that
    version disagrees with exhaustive search (e.g. ``m = m2 = 2``).
    """
    if m <= 1 or m2 <= 1:
        raise ValueError("both orders must exceed 1")
    if gcd(s, m) != 1 or gcd(s2, m2) != 1:
        raise ValueError("s and s' must be units")
    f1, f2 = factorize(m).as_dict(), factorize(m2).as_dict()
    if any(f1[p] != f2[p] for p in f1.keys() & f2.keys()):
        return False
    if as_stated:
        if m % m2 == 0 and gcd(m // m2, m2) == 1 and (s + (m // m2) * s2) % m2:
            return False
        if m2 % m == 0 and gcd(m2 // m, m) == 1 and (s2 + (m2 // m) * s) % m:
            return False
        return True
    if m % 4 == 2 or m2 % 4 == 2:
        return False
    g = gcd(m, m2)
    return (s * (m2 // g) + s2 * (m // g)) % g == 0


def realizable_branch_pairs(n: int, budget=None) -> set[tuple[int, int]]:
    """All ``(q, r)`` for which the system of :func:`lemma_2_2pp_system` is solvable.

    Exhaustive: for every ``(x1, y1)`` with ``x1 y1 = n/2`` collect the
    vertices ``(x, y)`` that fit either branch, then test every pair of
    them against the missing edge.  ``q`` and ``r`` are exponents mod ``n``.
    """
    import numpy as np

    if n % 2:
        raise ValueError("n must be even")
    _budget.check(n ** 4, budget, "branch-pair scan")
    xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    xs, ys = xs.ravel(), ys.ravel()
    out = set()
    for x1, y1 in product(range(n), repeat=2):
        if (x1 * y1 - n // 2) % n:
            continue
        sel = (xs * ys + x1 * ys + xs * y1) % n == 0
        ax, ay = xs[sel], ys[sel]
        ok = (ax[:, None] * ay[None, :] + ax[None, :] * ay[:, None]) % n == 0
        i, j = np.nonzero(ok)
        d = (ax * ay) % n
        out.update(zip(d[i].tolist(), d[j].tolist()))
    return out


def realize_gdd(G: GDD, budget=None) -> Realization | None:
    """Witness for a GDD, or ``None`` when it is not realizable over Z_n.

    Rank 1 is always realizable.  Rank-2 systems whose normal form has a
    unit vertex target go through the quadratic solver; everything else,
    and every negative structured answer that is not backed by an
    equivalence, goes to :func:`oracle_realize`.
    """
    S = BilinearSystem.from_gdd(G)
    if G.rank == 1:
        return Realization(G.n, (1,), (G.diag[0],))
    if G.rank == 2:
        t, k, m = normal_form(S)
        if m == 1:
            return oracle_realize(S, budget)
        w = rank2_solve(*t, k, 1, m)
        if w is not None:
            return w
        if gcd(t[0], m) == 1 or gcd(t[1], m) == 1:
            return None
    elif G.rank == 3:
        t, k, m = normal_form(S)
        if m > 1 and gcd(t[0], m) == 1:
            w = rank3_solve_coprime(t, m, k)
            if w is not None:
                return w
    return oracle_realize(S, budget)

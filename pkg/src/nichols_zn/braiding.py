"""Diagonal braidings over Z_n, stored as exponents of a fixed primitive
n-th root of unity ``w``.

A braiding matrix ``(q_ij)`` is kept as integers ``a_ij`` in ``[0, n)``
with ``q_ij = w**a_ij``.  Its generalized Dynkin diagram (GDD) keeps only
the vertex labels ``a_ii`` and the symmetrized edge labels
``e_ij = a_ij + a_ji (mod n)``; an edge is present exactly when
``e_ij != 0``.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd
from typing import Sequence

Permutation = tuple[int, ...]


@dataclass(frozen=True, order=True)
class RootExp:
    """The root of unity ``w**a`` for a fixed ``w`` of order ``n``."""

    a: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")
        object.__setattr__(self, "a", self.a % self.n)

    @property
    def order(self) -> int:
        return order(self)

    def __mul__(self, other: RootExp) -> RootExp:
        if other.n != self.n:
            raise ValueError("roots live in different cyclic groups")
        return RootExp(self.a + other.a, self.n)

    def __pow__(self, k: int) -> RootExp:
        return RootExp(self.a * k, self.n)

    def inverse(self) -> RootExp:
        return RootExp(-self.a, self.n)

    def is_one(self) -> bool:
        return self.a == 0

    def is_minus_one(self) -> bool:
        return 2 * self.a == self.n

    def __str__(self):
        if self.a == 0:
            return "1"
        if self.is_minus_one():
            return "-1"
        return f"w^{self.a}"


def order(q: RootExp) -> int:
    """Multiplicative order of ``q``: the ``m`` with ``q`` in ``R_m``."""
    return q.n // gcd(q.a, q.n)


def exp_order(a: int, n: int) -> int:
    """Order of ``w**a`` when ``w`` has order ``n``."""
    return n // gcd(a, n)


def _square(rows, n) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(v) % n for v in row) for row in rows)
    r = len(rows)
    if r < 1 or any(len(row) != r for row in rows):
        raise ValueError("exponent matrix must be square with rank >= 1")
    return rows


@dataclass(frozen=True)
class BraidingMatrix:
    """Exponent matrix ``a_ij`` of a diagonal braiding over Z_n."""

    n: int
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")
        object.__setattr__(self, "exponents", _square(self.exponents, self.n))

    @property
    def rank(self) -> int:
        return len(self.exponents)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.exponents[i][j]

    def q(self, i: int, j: int) -> RootExp:
        return RootExp(self.exponents[i][j], self.n)

    def chi(self, u: Sequence[int], v: Sequence[int]) -> int:
        """Exponent of the bicharacter ``chi(u, v) = prod q_ij**(u_i v_j)`` on degrees."""
        r = self.rank
        return sum(u[i] * v[j] * self.exponents[i][j]
                   for i in range(r) for j in range(r)) % self.n

    def permuted(self, sigma: Permutation) -> BraidingMatrix:
        """The matrix ``a'`` with ``a'[sigma[i]][sigma[j]] = a[i][j]``."""
        r = self.rank
        out = [[0] * r for _ in range(r)]
        for i in range(r):
            for j in range(r):
                out[sigma[i]][sigma[j]] = self.exponents[i][j]
        return BraidingMatrix(self.n, out)

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.exponents for v in row)

    def to_json(self) -> dict:
        return {"n": self.n, "rank": self.rank,
                "exponents": [list(row) for row in self.exponents]}

    @classmethod
    def from_json(cls, doc: dict) -> BraidingMatrix:
        try:
            n, rank, rows = int(doc["n"]), int(doc["rank"]), doc["exponents"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"matrix JSON needs n, rank, exponents: {exc}") from None
        if len(rows) != rank:
            raise ValueError(f"rank is {rank} but {len(rows)} rows were given")
        return cls(n, rows)


@dataclass(frozen=True)
class DegreeLattice:
    """Z^r with basis e_1..e_r and the bicharacter read off a braiding matrix."""

    braiding: BraidingMatrix

    @property
    def rank(self) -> int:
        return self.braiding.rank

    def basis(self) -> list[tuple[int, ...]]:
        r = self.rank
        return [tuple(int(i == j) for j in range(r)) for i in range(r)]

    def chi(self, u: Sequence[int], v: Sequence[int]) -> RootExp:
        if len(u) != self.rank or len(v) != self.rank:
            raise ValueError(f"degrees must have length {self.rank}")
        return RootExp(self.braiding.chi(u, v), self.braiding.n)


@dataclass(frozen=True)
class GDD:
    """Generalized Dynkin diagram: vertex exponents and symmetric edge exponents."""

    n: int
    diag: tuple[int, ...]
    edge_matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")
        diag = tuple(int(d) % self.n for d in self.diag)
        em = _square(self.edge_matrix, self.n)
        if len(em) != len(diag):
            raise ValueError("edge matrix and vertex list disagree on rank")
        r = len(diag)
        for i in range(r):
            if em[i][i]:
                raise ValueError("edge matrix must have a zero diagonal")
            for j in range(i):
                if em[i][j] != em[j][i]:
                    raise ValueError("edge matrix must be symmetric")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "edge_matrix", em)

    @classmethod
    def from_edges(cls, n: int, diag: Sequence[int], edges: dict) -> GDD:
        """Build from ``{(i, j): e_ij}`` with 0-based vertex indices."""
        r = len(diag)
        em = [[0] * r for _ in range(r)]
        for (i, j), e in edges.items():
            if i == j or not (0 <= i < r and 0 <= j < r):
                raise ValueError(f"bad edge ({i}, {j}) for rank {r}")
            em[i][j] = em[j][i] = int(e) % n
        return cls(n, tuple(diag), em)

    @property
    def rank(self) -> int:
        return len(self.diag)

    def edge(self, i: int, j: int) -> int:
        return self.edge_matrix[i][j]

    def edges(self) -> dict[tuple[int, int], int]:
        """Present edges ``{(i, j): e_ij}`` with ``i < j``."""
        r = self.rank
        return {(i, j): self.edge_matrix[i][j]
                for i in range(r) for j in range(i + 1, r) if self.edge_matrix[i][j]}

    def symmetric(self) -> BraidingMatrix:
        """Matrix with the vertex labels on the diagonal and ``e_ij`` off it."""
        r = self.rank
        return BraidingMatrix(self.n, [[self.diag[i] if i == j else self.edge_matrix[i][j]
                                        for j in range(r)] for i in range(r)])

    def matrix(self) -> BraidingMatrix:
        """A braiding matrix with this GDD: ``a_ij = e_ij`` above the diagonal, 0 below."""
        r = self.rank
        return BraidingMatrix(self.n, [[self.diag[i] if i == j else
                                        (self.edge_matrix[i][j] if i < j else 0)
                                        for j in range(r)] for i in range(r)])

    def permuted(self, sigma: Permutation) -> GDD:
        return gdd_of(self.symmetric().permuted(sigma), symmetric=True)

    def canonical(self) -> GDD:
        return gdd_of(canonical_form(self.symmetric()), symmetric=True)

    def key(self) -> tuple:
        """Hashable isomorphism-invariant key."""
        c = canonical_form(self.symmetric())
        return (c.n,) + c.flat()

    @classmethod
    def from_key(cls, key: tuple) -> GDD:
        """Inverse of :meth:`key`: the canonical representative."""
        n, flat = key[0], key[1:]
        r = int(round(len(flat) ** 0.5))
        rows = [flat[i * r:(i + 1) * r] for i in range(r)]
        return gdd_of(BraidingMatrix(n, rows), symmetric=True)

    def to_json(self) -> dict:
        return {"n": self.n, "rank": self.rank, "diag": list(self.diag),
                "edges": {f"{i + 1},{j + 1}": e for (i, j), e in self.edges().items()}}

    @classmethod
    def from_json(cls, doc: dict) -> GDD:
        try:
            n, rank, diag = int(doc["n"]), int(doc["rank"]), doc["diag"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"GDD JSON needs n, rank, diag: {exc}") from None
        if len(diag) != rank:
            raise ValueError(f"rank is {rank} but {len(diag)} vertex labels were given")
        edges = {}
        for key, e in (doc.get("edges") or {}).items():
            try:
                i, j = (int(t) - 1 for t in key.split(","))
            except ValueError:
                raise ValueError(f"edge key must look like 'i,j', got {key!r}") from None
            edges[(i, j)] = e
        return cls.from_edges(n, diag, edges)

    def __str__(self):
        verts = ",".join(str(d) for d in self.diag)
        edges = " ".join(f"e{i + 1}{j + 1}={e}" for (i, j), e in self.edges().items())
        return f"Z{self.n}[{verts}]" + (f" {edges}" if edges else "")


def gdd_of(B: BraidingMatrix, symmetric: bool = False) -> GDD:
    """GDD of a braiding matrix.

    With ``symmetric=True`` the off-diagonal entries are read as edge labels
    directly instead of being summed with their transposes.
    """
    r, n, a = B.rank, B.n, B.exponents
    em = [[0 if i == j else (a[i][j] if symmetric else a[i][j] + a[j][i]) % n
           for j in range(r)] for i in range(r)]
    return GDD(n, tuple(a[i][i] for i in range(r)), em)


def is_connected(G: GDD) -> bool:
    r = G.rank
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j not in seen and G.edge_matrix[i][j]:
                seen.add(j)
                stack.append(j)
    return len(seen) == r


def components(G: GDD) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted."""
    r = G.rank
    left = set(range(r))
    out = []
    while left:
        start = min(left)
        comp, stack = {start}, [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                if j not in comp and G.edge_matrix[i][j]:
                    comp.add(j)
                    stack.append(j)
        left -= comp
        out.append(sorted(comp))
    return out


def permutation_similar(B1: BraidingMatrix, B2: BraidingMatrix) -> Permutation | None:
    """A permutation ``sigma`` with ``B2[sigma(i), sigma(j)] = B1[i, j]``, if any.

    Candidates are pruned by matching diagonal entries first.
    """
    if B1.n != B2.n or B1.rank != B2.rank:
        raise ValueError("permutation similarity needs equal modulus and rank")
    r = B1.rank
    a, b = B1.exponents, B2.exponents
    if sorted(B1.flat()) != sorted(B2.flat()):
        return None

    sigma = [-1] * r
    used = [False] * r

    def extend(i):
        if i == r:
            return True
        for t in range(r):
            if used[t] or b[t][t] != a[i][i]:
                continue
            if all(b[t][sigma[j]] == a[i][j] and b[sigma[j]][t] == a[j][i] for j in range(i)):
                sigma[i], used[t] = t, True
                if extend(i + 1):
                    return True
                used[t] = False
        return False

    return tuple(sigma) if extend(0) else None


def canonical_form(B: BraidingMatrix) -> BraidingMatrix:
    """Lexicographically smallest row-major entry sequence over all relabelings."""
    best = min(B.permuted(sigma).flat() for sigma in permutations(range(B.rank)))
    r = B.rank
    return BraidingMatrix(B.n, [best[i * r:(i + 1) * r] for i in range(r)])

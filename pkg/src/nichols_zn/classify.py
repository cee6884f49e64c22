"""Finite-dimensionality verdicts for connected diagonal braidings over Z_n.

Rank 2 is decided by a table of case conditions (:data:`RANK2_CASES`), each
made of exponent-linear relations between the vertex labels, the edge label
and a designated root, plus arithmetic side conditions on the order of that
root.  Rank 3 is decided by searching the Weyl orbit for one of three
template diagrams.  Every connected diagram of rank at least 4 has an
infinite-dimensional Nichols algebra.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from . import budget as _budget
from .braiding import GDD, BraidingMatrix, exp_order, gdd_of, is_connected
from .modarith import factorize, legendre
from .realize import BilinearSystem, Realization, realizable_gdd_keys, realize_gdd


class CaseLabel(enum.Enum):
    T2_1 = "T2(1)"
    T2_2a = "T2(2)_1"
    T2_2b = "T2(2)_2"
    T2_3 = "T2(3)"
    T3_1a = "T3(1)_1"
    T3_1b = "T3(1)_2"
    T3_2a = "T3(2)_1"
    T3_2b = "T3(2)_2"
    T3_3 = "T3(3)"
    T4_1 = "T4(1)"
    T4_2 = "T4(2)"
    T5_1 = "T5(1)"
    T5_2 = "T5(2)"
    T6 = "T6"
    T7_1 = "T7(1)"
    T7_2 = "T7(2)"
    T8_1 = "T8(1)"
    T8_2a = "T8(2)_1"
    T8_2b = "T8(2)_2"
    T8_3 = "T8(3)"
    T9 = "T9"
    T10 = "T10"
    T11_1 = "T11(1)"
    T11_2 = "T11(2)"
    T12 = "T12"
    T13 = "T13"
    T14 = "T14"
    T15 = "T15"
    T16_1 = "T16(1)"
    T16_2 = "T16(2)"
    T17 = "T17"
    T18 = "T18"
    T20 = "T20"
    T21 = "T21"
    Rank3_i = "Rank3(i)"
    Rank3_ii = "Rank3(ii)"
    Rank3_iii = "Rank3(iii)"
    Infinite = "Infinite"
    NotRealizable = "NotRealizable"
    Disconnected = "Disconnected"

    def __str__(self):
        return self.value

    @property
    def is_finite(self) -> bool:
        return self not in (CaseLabel.Infinite, CaseLabel.NotRealizable, CaseLabel.Disconnected)

    @classmethod
    def parse(cls, text: str) -> CaseLabel:
        for label in cls:
            if text in (label.name, label.value):
                return label
        raise ValueError(f"unknown case label {text!r}")


# ---------------------------------------------------------------- rank 2 data

HALF = "half"  # marker for the exponent n/2 of -1


@dataclass(frozen=True)
class CaseConditions:
    """Exponent-level description of one rank-2 case.

    ``root`` names the designated root ``g`` ("e", "d1", "d2" or "e+d1").
    ``relations`` maps "d1", "d2", "e" to ``(c, minus)``: the quantity equals
    ``c * g`` times ``-1`` if ``minus``.  ``root_order`` fixes ``ord(g)``;
    otherwise ``min_order`` bounds it from below.  ``orders`` pins the order
    of further quantities.  ``m`` is the reported order (``None``: ``ord(g)``).
    ``arithmetic`` receives ``(m, d1, d2, e, n)`` and checks side conditions.
    """

    label: CaseLabel
    root: str
    relations: tuple[tuple[str, int, bool], ...]
    root_order: int | None = None
    min_order: int = 2
    orders: tuple[tuple[str, int], ...] = ()
    m: int | None = None
    arithmetic: Callable | None = None
    note: str = ""

    def base_holds(self, d1: int, d2: int, e: int, n: int) -> bool:
        """The q-relations and order constraints, without arithmetic side conditions."""
        if e % n == 0:
            return False
        vals = {"d1": d1 % n, "d2": d2 % n, "e": e % n}
        g = (vals["e"] + vals["d1"]) % n if self.root == "e+d1" else vals[self.root]
        og = exp_order(g, n)
        if self.root_order is not None:
            if og != self.root_order:
                return False
        elif og < self.min_order:
            return False
        for q, c, minus in self.relations:
            if minus and n % 2:
                return False
            target = c * g + (n // 2 if minus else 0)
            if (vals[q] - target) % n:
                return False
        return all(exp_order(vals[q], n) == o for q, o in self.orders)

    def order(self, d1: int, d2: int, e: int, n: int) -> int:
        if self.m is not None:
            return self.m
        g = (e + d1) % n if self.root == "e+d1" else {"d1": d1, "d2": d2, "e": e}[self.root] % n
        return exp_order(g, n)

    def holds(self, d1: int, d2: int, e: int, n: int) -> bool:
        if not self.base_holds(d1, d2, e, n):
            return False
        if self.arithmetic is None:
            return True
        return bool(self.arithmetic(self.order(d1, d2, e, n), d1 % n, d2 % n, e % n, n))


def _alpha(m: int, p: int) -> int:
    return factorize(m).exponent(p)


def _big_primes(m: int) -> list[int]:
    return [p for p in factorize(m).primes if p > 3]


def _eisenstein_type(m, *_):
    # 2 does not divide m, 9 does not divide m, and -3 is a square mod every p > 3
    return (_alpha(m, 2) == 0 and _alpha(m, 3) <= 1
            and all(legendre(-3, p) == 1 for p in _big_primes(m)))


def _two_free_or_high(m, *_):
    return _alpha(m, 2) != 1


def _gauss_type(m, *_):
    return (_alpha(m, 2) <= 1 and _alpha(m, 3) == 0
            and all(p % 4 == 1 for p in _big_primes(m)))


def _not_four_or_eight(m, *_):
    return _alpha(m, 2) not in (2, 3)


def _third_root_framing(m, d1, d2, e, n):
    # write q22 = w'^(n/m) for a new generator w' and q11 = w'^(ns/3); then
    # require 3 !| m or (m s / 3) != 2 mod 3
    if m % 3:
        return True
    u = d2 // (n // m)
    s1 = d1 // (n // 3)
    s = s1 * pow(u, -1, 3) % 3
    return (m // 3) * s % 3 != 2


def _r(q, c, minus=False):
    return (q, c, minus)


_L = CaseLabel
RANK2_CASES: tuple[CaseConditions, ...] = (
    CaseConditions(_L.T2_1, "e", (_r("d1", -1), _r("d2", -1)), arithmetic=_eisenstein_type),
    CaseConditions(_L.T2_2a, "e", (_r("d1", 0, True), _r("d2", -1)), arithmetic=_two_free_or_high),
    CaseConditions(_L.T2_2b, "e", (_r("d2", 0, True), _r("d1", -1)), arithmetic=_two_free_or_high),
    CaseConditions(_L.T2_3, "e", (_r("d1", 0, True), _r("d2", 0, True)), arithmetic=_two_free_or_high),
    CaseConditions(_L.T3_1a, "d1", (_r("e", -2), _r("d2", 2)), min_order=3, arithmetic=_gauss_type),
    CaseConditions(_L.T3_1b, "d1", (_r("e", -2), _r("d2", 0, True)), min_order=3,
                   arithmetic=_not_four_or_eight),
    CaseConditions(_L.T3_2a, "d2", (_r("e", -1),), min_order=4, orders=(("d1", 3),),
                   arithmetic=_third_root_framing),
    CaseConditions(_L.T3_2b, "d2", (_r("e", -1),), root_order=2, orders=(("d1", 3),), m=6),
    CaseConditions(_L.T3_3, "d1", (_r("e", 1, True), _r("d2", 0, True)), root_order=3, m=6),
    CaseConditions(_L.T4_1, "e+d1", (_r("d1", 4), _r("d2", 2, True)), root_order=12),
    CaseConditions(_L.T4_2, "e", (_r("d1", 2, True), _r("d2", 2, True)), root_order=12),
    CaseConditions(_L.T5_1, "e", (_r("d1", 2, True), _r("d2", 0, True)), root_order=12),
    CaseConditions(_L.T5_2, "e+d1", (_r("d1", 4), _r("d2", 0, True)), root_order=12),
    CaseConditions(_L.T6, "d1", (_r("e", -2), _r("d2", 3, True)), root_order=18),
    CaseConditions(_L.T7_1, "d1", (_r("e", -3), _r("d2", 0, True)), root_order=12),
    CaseConditions(_L.T7_2, "e", (_r("d1", -3), _r("d2", 0, True)), root_order=12),
    CaseConditions(_L.T8_1, "d1", (_r("e", -3), _r("d2", 3)), min_order=4, arithmetic=_eisenstein_type),
    CaseConditions(_L.T8_2a, "e", (_r("d1", 1, True), _r("d2", 0, True)), root_order=8),
    CaseConditions(_L.T8_2b, "e", (_r("d1", -2), _r("d2", 0, True)), root_order=8),
    CaseConditions(_L.T8_3, "e", (_r("d1", 2), _r("d2", -1)), root_order=8),
    CaseConditions(_L.T9, "e", (_r("d1", -3), _r("d2", 0, True)), root_order=9, m=18),
    CaseConditions(_L.T10, "e", (_r("d1", -6), _r("d2", -8)), root_order=24),
    CaseConditions(_L.T11_1, "d1", (_r("e", -3), _r("d2", 0, True)), root_order=5, m=10),
    CaseConditions(_L.T11_2, "d1", (_r("e", -3), _r("d2", 0, True)), root_order=20),
    CaseConditions(_L.T12, "d1", (_r("e", -3), _r("d2", 5, True)), root_order=30),
    CaseConditions(_L.T13, "e", (_r("d1", 6), _r("d2", -1)), root_order=24),
    CaseConditions(_L.T14, "d1", (_r("e", -4), _r("d2", 0, True)), root_order=18),
    CaseConditions(_L.T15, "e", (_r("d1", -3, True), _r("d2", -1)), root_order=30),
    CaseConditions(_L.T16_1, "d1", (_r("e", -4), _r("d2", 0, True)), root_order=10),
    CaseConditions(_L.T16_2, "e", (_r("d1", -4), _r("d2", 0, True)), root_order=20),
    CaseConditions(_L.T17, "e", (_r("d1", 4, True), _r("d2", 0, True)), root_order=24),
    CaseConditions(_L.T18, "e", (_r("d1", 5, True), _r("d2", 0, True)), root_order=30),
    CaseConditions(_L.T20, "e", (_r("d1", -6), _r("d2", 0, True)), root_order=30),
    CaseConditions(_L.T21, "d1", (_r("e", -5), _r("d2", 0, True)), root_order=24),
)

# Two further shapes whose quadratic has no root mod 14; they are kept only
# so that callers can see they never produce a realizable diagram.
EXCLUDED_RANK2_SHAPES: tuple[tuple[str, CaseConditions], ...] = (
    ("T19", CaseConditions(_L.NotRealizable, "d1", (_r("e", -3), _r("d2", 0, True)), root_order=14)),
    ("T22", CaseConditions(_L.NotRealizable, "d1", (_r("e", -5), _r("d2", 0, True)), root_order=14)),
)

CASES_BY_LABEL = {c.label: c for c in RANK2_CASES}


@dataclass
class Verdict:
    """Classification result with the order data and a realization witness."""

    gdd: GDD
    label: CaseLabel
    m: int | None = None
    m2: int | None = None
    witness: Realization | None = None
    diagnostics: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"gdd": self.gdd.to_json(), "label": str(self.label), "m": self.m,
                "m2": self.m2, "witness": self.witness.to_json() if self.witness else None}


def _default_realizable(G: GDD) -> bool:
    return realize_gdd(G) is not None


def rank2_matches(G: GDD, *, base_only: bool = False) -> list[tuple[CaseConditions, bool]]:
    """All ``(case, swapped)`` whose conditions hold, original orientation first."""
    if G.rank != 2:
        raise ValueError("rank-2 cases need a rank-2 diagram")
    n, (d1, d2), e = G.n, G.diag, G.edge(0, 1)
    out = []
    for swapped, (a, b) in ((False, (d1, d2)), (True, (d2, d1))):
        for case in RANK2_CASES:
            ok = case.base_holds(a, b, e, n) if base_only else case.holds(a, b, e, n)
            if ok:
                out.append((case, swapped))
    return out


def rank2_verdict(G: GDD, realizable: Callable[[GDD], bool] | None = None,
                  witness: bool = True) -> Verdict:
    """Classify a rank-2 diagram.

    A case whose relations and side conditions hold gives its label.  When
    some case's relations hold but no side conditions do, the diagram is
    not realizable over Z_n.  When no relations hold the realizability
    check separates ``NotRealizable`` from ``Infinite``.
    """
    if G.rank != 2:
        raise ValueError("rank-2 cases need a rank-2 diagram")
    if G.edge(0, 1) == 0:
        return Verdict(G, CaseLabel.Disconnected)
    n, (d1, d2), e = G.n, G.diag, G.edge(0, 1)
    hits = rank2_matches(G)
    if hits:
        case, swapped = hits[0]
        a, b = (d2, d1) if swapped else (d1, d2)
        v = Verdict(G, case.label, m=case.order(a, b, e, n),
                    diagnostics=[(c.label, s) for c, s in hits])
        if witness:
            v.witness = realize_gdd(G)
        return v
    based = rank2_matches(G, base_only=True)
    if based:
        return Verdict(G, CaseLabel.NotRealizable, diagnostics=[(c.label, s) for c, s in based])
    realizable = realizable or _default_realizable
    return Verdict(G, CaseLabel.Infinite if realizable(G) else CaseLabel.NotRealizable)


def rank2_case(G: GDD, realizable: Callable[[GDD], bool] | None = None) -> CaseLabel:
    return rank2_verdict(G, realizable, witness=False).label


# ---------------------------------------------------------------- reflections


class ReflectionUndefined(ValueError):
    """Some Cartan integer at the reflecting vertex does not exist."""


@dataclass(frozen=True)
class ReflectionData:
    vertex: int
    cartan: tuple[int, ...]


def cartan_integer(dii: int, eij: int, n: int) -> int | None:
    """Least ``m >= 0`` with ``(m+1)_q = 0`` or ``q**m * q_ij q_ji = 1`` for ``q = w**dii``."""
    dii, eij = dii % n, eij % n
    if dii == 0:
        return 0 if eij == 0 else None
    o = exp_order(dii, n)
    for m in range(o):
        if (m * dii + eij) % n == 0 or m + 1 == o:
            return m


def reflection_data(G: GDD, i: int) -> ReflectionData:
    out = []
    for j in range(G.rank):
        if j == i:
            out.append(-2)
            continue
        c = cartan_integer(G.diag[i], G.edge(i, j), G.n)
        if c is None:
            raise ReflectionUndefined(f"reflection undefined at vertex {i + 1}: "
                                      f"q_ii = 1 with an edge to vertex {j + 1}")
        out.append(c)
    return ReflectionData(i, tuple(out))


def weyl_reflect(B: BraidingMatrix, i: int) -> BraidingMatrix:
    """Reflected braiding ``a'_jl = a_jl + m_ij a_il + m_il a_ji + m_ij m_il a_ii``."""
    if not 0 <= i < B.rank:
        raise ValueError(f"vertex {i} out of range for rank {B.rank}")
    c = reflection_data(gdd_of(B), i).cartan
    a, r = B.exponents, B.rank
    return BraidingMatrix(B.n, [[a[j][l] + c[j] * a[i][l] + c[l] * a[j][i] + c[j] * c[l] * a[i][i]
                                 for l in range(r)] for j in range(r)])


def reflect_gdd(G: GDD, i: int) -> GDD:
    """Reflection on diagram data alone (it does not depend on the matrix chosen)."""
    return gdd_of(weyl_reflect(G.matrix(), i))


@dataclass
class Orbit:
    members: list[GDD]
    truncated: bool = False
    undefined: bool = False  # some member has a vertex where reflection is undefined

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def weyl_orbit(B: BraidingMatrix | GDD, max_size: int = _budget.DEFAULT_ORBIT_BUDGET,
               stop_on_undefined: bool = False) -> Orbit:
    """Breadth-first closure under reflections, up to relabeling of vertices.

    Reflections that are undefined are skipped and flagged; with
    ``stop_on_undefined`` the search ends at the first such vertex.
    """
    start = B.canonical() if isinstance(B, GDD) else gdd_of(B).canonical()
    seen = {start.key()}
    members = [start]
    queue = deque([start])
    undefined = False
    while queue:
        G = queue.popleft()
        for i in range(G.rank):
            try:
                H = reflect_gdd(G, i).canonical()
            except ReflectionUndefined:
                undefined = True
                if stop_on_undefined:
                    return Orbit(members, undefined=True)
                continue
            k = H.key()
            if k in seen:
                continue
            if len(members) >= max_size:
                return Orbit(members, truncated=True, undefined=undefined)
            seen.add(k)
            members.append(H)
            queue.append(H)
    return Orbit(members, undefined=undefined)


# ---------------------------------------------------------------- rank 3


def _path_shape(G: GDD):
    """``(a, c, b)`` when the diagram is a path ``a - c - b``, else ``None``."""
    if G.rank != 3:
        return None
    edges = G.edges()
    if len(edges) != 2:
        return None
    for c in range(3):
        a, b = (v for v in range(3) if v != c)
        if G.edge(c, a) and G.edge(c, b):
            return a, c, b
    return None


def rank3_template(G: GDD) -> tuple[CaseLabel, int, int | None] | None:
    """Match one of the three finite rank-3 shapes directly (no reflections).

    Returns ``(label, m, m2)`` or ``None``.  The shapes, as vertex label and
    edge label along the path, are ``-1, q, -1, 1/q, -1`` with ``ord q > 2``;
    ``-1, z, -1, z, -1`` with ``ord z = 3``; and ``q, 1/q, -1, 1/r, r`` with
    ``q != r`` and ``qr != 1``.
    """
    shape = _path_shape(G)
    if shape is None or G.n % 2:
        return None
    n, half = G.n, G.n // 2
    a, c, b = shape
    d, ea, eb = G.diag, G.edge(c, a), G.edge(c, b)
    if d[c] != half:
        return None
    if d[a] == half and d[b] == half:
        if (ea + eb) % n == 0 and exp_order(ea, n) > 2:
            return CaseLabel.Rank3_i, exp_order(ea, n), None
        if ea == eb and exp_order(ea, n) == 3:
            return CaseLabel.Rank3_ii, 3, None
    if (ea + d[a]) % n == 0 and (eb + d[b]) % n == 0:
        if d[a] != d[b] and (d[a] + d[b]) % n:
            return CaseLabel.Rank3_iii, exp_order(d[a], n), exp_order(d[b], n)
    return None


def rank3_verdict(G: GDD, max_orbit: int = _budget.DEFAULT_ORBIT_BUDGET,
                  realizable: Callable[[GDD], bool] | None = None,
                  witness: bool = True) -> Verdict:
    """Classify a connected rank-3 diagram via its Weyl orbit.

    Raises :class:`BudgetExceeded` when the orbit outgrows ``max_orbit``
    before a template shows up.
    """
    if G.rank != 3:
        raise ValueError("rank-3 classification needs a rank-3 diagram")
    if not is_connected(G):
        return Verdict(G, CaseLabel.Disconnected)
    realizable = realizable or _default_realizable
    # a vertex labelled 1 with an edge (where reflection is undefined) already
    # makes the Nichols algebra infinite, and no template has one
    orbit = weyl_orbit(G, max_orbit, stop_on_undefined=True)
    if orbit.undefined:
        return Verdict(G, CaseLabel.Infinite if realizable(G) else CaseLabel.NotRealizable,
                       diagnostics=[("reflection undefined", True)])
    hits = [(H, t) for H in orbit for t in [rank3_template(H)] if t]
    if hits:
        order = [CaseLabel.Rank3_i, CaseLabel.Rank3_ii, CaseLabel.Rank3_iii]
        H, (label, m, m2) = min(hits, key=lambda h: order.index(h[1][0]))
        if not realizable(G):
            return Verdict(G, CaseLabel.NotRealizable, diagnostics=[("template", str(H))])
        v = Verdict(G, label, m=m, m2=m2, diagnostics=[("template", str(H))])
        if witness:
            v.witness = realize_gdd(G)
        return v
    if orbit.truncated:
        raise _budget.BudgetExceeded(
            f"Weyl orbit of {G} exceeds {max_orbit} diagrams without reaching a finite template")
    return Verdict(G, CaseLabel.Infinite if realizable(G) else CaseLabel.NotRealizable)


def rank3_case(G: GDD, max_orbit: int = _budget.DEFAULT_ORBIT_BUDGET,
               realizable: Callable[[GDD], bool] | None = None) -> CaseLabel:
    return rank3_verdict(G, max_orbit, realizable, witness=False).label


def rank_ge4_verdict(G: GDD) -> CaseLabel:
    """Connected diagrams of rank at least 4 never have finite-dimensional Nichols algebras."""
    if G.rank < 4:
        raise ValueError("needs rank >= 4")
    if not is_connected(G):
        raise ValueError("needs a connected diagram")
    return CaseLabel.Infinite


def classify(G: GDD, **kw) -> Verdict:
    """Verdict for a diagram of any rank."""
    if not is_connected(G):
        return Verdict(G, CaseLabel.Disconnected)
    if G.rank == 1:
        raise ValueError("rank-1 diagrams are not covered; there is no edge to classify")
    if G.rank == 2:
        return rank2_verdict(G, **kw)
    if G.rank == 3:
        return rank3_verdict(G, **kw)
    return Verdict(G, rank_ge4_verdict(G))


# ---------------------------------------------------------------- enumeration


def connected_gdds(n: int, r: int) -> list[GDD]:
    """One canonical representative per isomorphism class of connected rank-``r`` diagrams."""
    if r not in (2, 3):
        raise ValueError("enumeration covers ranks 2 and 3")
    _budget.check(n ** (r * (r + 1) // 2), None, "diagram enumeration")
    seen, out = set(), []
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
    for diag in product(range(n), repeat=r):
        for es in product(range(n), repeat=len(pairs)):
            G = GDD.from_edges(n, diag, dict(zip(pairs, es)))
            if not is_connected(G):
                continue
            k = G.key()
            if k not in seen:
                seen.add(k)
                out.append(G.canonical())
    return sorted(out, key=lambda G: G.key())


def _enumerate(n: int, r: int, verdict_fn) -> list[Verdict]:
    # realizability is necessary for every finite label, so only realizable
    # classes are visited
    if n < 2:
        return []
    keys = realizable_gdd_keys(n, r)
    out = []
    for k in sorted(keys):
        G = GDD.from_key(k)
        if not is_connected(G):
            continue
        v = verdict_fn(G, lambda H: H.key() in keys)
        if v.label.is_finite:
            if v.witness is None or not v.witness.satisfies(BilinearSystem.from_gdd(G)):
                raise AssertionError(f"finite verdict for {G} lacks a valid witness")
            out.append(v)
    return out


def enumerate_rank2(n: int) -> list[Verdict]:
    """All connected rank-2 classes over Z_n with finite-dimensional Nichols algebra."""
    return _enumerate(n, 2, lambda G, real: rank2_verdict(G, real))


def enumerate_rank3(n: int, max_orbit: int = _budget.DEFAULT_ORBIT_BUDGET) -> list[Verdict]:
    """Same at rank 3; every label is backed by a verified witness."""
    return _enumerate(n, 3, lambda G, real: rank3_verdict(G, max_orbit, real))

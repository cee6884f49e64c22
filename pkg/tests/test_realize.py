import random
from functools import lru_cache
from itertools import product
from math import gcd

import pytest
from hypothesis import given, strategies as st

from nichols_zn import (BraidingMatrix, BudgetExceeded, GDD, QuadCongruence, Realization,
                        oracle_realize, rank2_solvable, rank2_solve, rank3_solve_coprime,
                        rank3_solve_t1_unit, realize_gdd, realize_matrix, solve_quadratic)
from nichols_zn.classify import ReflectionUndefined, weyl_reflect
from nichols_zn.realize import (BilinearSystem, framings, lemma_2_2pp_solvable, lemma_2_2pp_system,
                                normal_form, realizable_branch_pairs, realizable_gdd_keys)


@lru_cache(maxsize=None)
def keys(n, r=2):
    return realizable_gdd_keys(n, r)


def scan_matrix(B):
    """First witness in the order of (x1, y1, x2, y2, ...)."""
    n, r = B.n, B.rank
    for flat in product(range(n), repeat=2 * r):
        x, y = flat[0::2], flat[1::2]
        if all((x[i] * y[j] - B[i, j]) % n == 0 for i in range(r) for j in range(r)):
            return x, y
    return None


def test_oracle_examples():
    chain = BilinearSystem.from_targets(6, (2, 3, 3), {(0, 1): 2, (0, 2): 4})
    w = oracle_realize(chain)
    assert w is not None and w.satisfies(chain)
    assert Realization(6, (4, 1, 5), (2, 3, 3)).satisfies(chain)
    row1 = BilinearSystem.from_targets(7, (1, 1, 1), {(0, 1): 6, (0, 2): 6})
    assert oracle_realize(row1) is None
    w = oracle_realize(BilinearSystem.from_targets(5, (3,), {}))
    assert (w.x, w.y) == ((1,), (3,))
    assert oracle_realize(BilinearSystem.from_targets(4, (2, 2), {(0, 1): 2})) is None
    assert oracle_realize(BilinearSystem.from_targets(4, (2, 2), {(0, 1): 2}), method="scan") is None


@given(st.integers(2, 7), st.integers(1, 3), st.data())
def test_search_agrees_with_scan(n, r, data):
    if r == 3 and n > 5:
        r = 2
    diag = [data.draw(st.integers(0, n - 1)) for _ in range(r)]
    edges = {(i, j): data.draw(st.integers(0, n - 1)) for i in range(r) for j in range(i + 1, r)}
    S = BilinearSystem.from_targets(n, diag, edges)
    a, b = oracle_realize(S), oracle_realize(S, method="scan")
    assert (a is None) == (b is None)
    if a is not None:
        assert a == b
        assert a.satisfies(S)


def test_oracle_budget():
    S = BilinearSystem.from_targets(30, (1, 2, 3), {(0, 1): 1})
    with pytest.raises(BudgetExceeded):
        oracle_realize(S, budget=1000)


def test_rank2_solve_examples():
    w = rank2_solve(2, 3, 5, 1, 1, 6)
    assert (w.x, w.y) == ((1, 1), (2, 3))
    for m in (7, 13, 19, 21, 49):
        assert rank2_solve(1, 1, -1, 1, 1, m) is not None
    for m in (2, 3, 10, 12):
        w = rank2_solve(1, 1, 2, 1, 1, m)
        assert (w.x, w.y) == ((1, 1), (1, 1))
    with pytest.raises(ValueError):
        rank2_solve(1, 1, 1, 1, 2, 4)


def test_rank2_solvable_examples():
    assert rank2_solvable(1, 1, -1, 7)
    assert not rank2_solvable(1, 1, -1, 2)
    assert not rank2_solvable(1, 2, 2, 3)
    assert rank2_solvable(3, 4, 6, 12)  # neither vertex target is a unit


@pytest.mark.parametrize("n", range(2, 25))
def test_rank2_solve_matches_oracle_with_unit_target(n):
    for d1, d2, e in product(range(n), range(n), range(n)):
        S = BilinearSystem.from_targets(n, (d1, d2), {(0, 1): e})
        t, k, m = normal_form(S)
        if m == 1 or (gcd(t[0], m) != 1 and gcd(t[1], m) != 1):
            continue
        w = rank2_solve(*t, k, 1, m)
        assert (w is not None) == (S.gdd().key() in keys(n)), (n, d1, d2, e)
        if w is not None:
            assert w.satisfies(S)


def test_rank2_solve_can_miss_without_unit_target():
    S = BilinearSystem.from_targets(12, (3, 4), {(0, 1): 6})
    assert normal_form(S) == ((3, 4, 6), 1, 12)
    assert rank2_solve(3, 4, 6, 1, 1, 12) is None
    w = oracle_realize(S)
    assert (w.x, w.y) == ((3, 2), (9, 8))
    assert realize_gdd(S.gdd()) == w


@pytest.mark.parametrize("n", range(2, 21))
def test_realizable_implies_resolvent_root(n):
    for d1, d2, e in product(range(n), range(n), range(n)):
        G = GDD.from_edges(n, (d1, d2), {(0, 1): e})
        if G.key() not in keys(n):
            continue
        for (t1, t2, t3), k, s, m in framings(BilinearSystem.from_gdd(G)):
            assert solve_quadratic(QuadCongruence(1, -t3, t1 * t2, m)), (n, d1, d2, e, m)


@pytest.mark.parametrize("m", [m for m in range(3, 40, 2)])
def test_unit_quadratic_decides_solvability_for_odd_m(m):
    realizable = keys(m)
    for t1, t2, t3 in product(range(m), repeat=3):
        if gcd(t1, m) != 1:
            continue
        G = GDD.from_edges(m, (t1, t2), {(0, 1): t3})
        assert rank2_solvable(t1, t2, t3, m) == (G.key() in realizable)


def test_rank2_solvable_falls_back_to_search():
    for m in (4, 6, 8, 9, 12):
        realizable = keys(m)
        for t1, t2, t3 in product(range(m), repeat=3):
            G = GDD.from_edges(m, (t1, t2), {(0, 1): t3})
            assert rank2_solvable(t1, t2, t3, m) == (G.key() in realizable)


def test_rank3_t1_unit_examples():
    assert rank3_solve_t1_unit((1, 1, 1, -1, -1, 0), 1, 1, 7) is None
    assert rank3_solve_t1_unit((-2, -2, 2, 2, 0, 2), 1, 1, 3) is None
    for m in (2, 5, 6, 9):
        w = rank3_solve_t1_unit((1, 1, 1, 2, 2, 2), 1, 1, m)
        assert w.x[1] == w.x[2] == 1
    with pytest.raises(ValueError):
        rank3_solve_t1_unit((2, 1, 1, 0, 0, 0), 1, 1, 7)


def test_rank3_coprime_examples():
    assert rank3_solve_coprime((2, 2, -2, -2, 0, 2), 3) is None
    assert rank3_solve_coprime((2, 2, 2, -2, 0, -2), 3) is None
    for t in [(1, 1, 1, 2, 2, 2), (1, 1, 1, -1, -1, 0), (1, 2, 3, 4, 5, 6)]:
        for m in (5, 7, 8):
            a, b = rank3_solve_coprime(t, m), rank3_solve_t1_unit(t, 1, 1, m)
            assert (a is None) == (b is None)


@given(st.integers(2, 9), st.data())
def test_rank3_coprime_never_wrong(m, data):
    t = [data.draw(st.integers(0, m - 1)) for _ in range(6)]
    if gcd(t[0], m) != 1:
        t[0] = 1
    w = rank3_solve_coprime(t, m)
    S = BilinearSystem.from_normal_form(t, 1, 1, m)
    oracle = oracle_realize(S)
    if w is not None:
        assert w.satisfies(S)
    # a unit t1 forces x1 to be a unit, so witnesses can be rescaled to x1 = 1
    assert (w is None) == (oracle is None)


def test_lemma_examples():
    assert lemma_2_2pp_solvable(5, 5, 1, 4)
    assert oracle_realize(lemma_2_2pp_system(5, 5, 1, 4, 10)) is not None
    assert not lemma_2_2pp_solvable(5, 5, 1, 1)
    assert oracle_realize(lemma_2_2pp_system(5, 5, 1, 1, 10)) is None
    for s, s2 in product((1, 2), (1, 2, 4, 5, 7, 8)):
        assert not lemma_2_2pp_solvable(3, 9, s, s2)
    with pytest.raises(ValueError):
        lemma_2_2pp_solvable(1, 5, 1, 1)


def test_lemma_without_order_two_exclusion_is_wrong():
    # both branches -1 -- -1 over Z_2: not solvable, though the literal criterion says yes
    assert lemma_2_2pp_solvable(2, 2, 1, 1, as_stated=True)
    assert not lemma_2_2pp_solvable(2, 2, 1, 1)
    assert (1, 1) not in realizable_branch_pairs(2)
    assert oracle_realize(lemma_2_2pp_system(2, 2, 1, 1, 2)) is None


def test_branch_pairs_match_oracle():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.choice((6, 10, 12))
        q, r = rng.randrange(n), rng.randrange(n)
        S = BilinearSystem.from_targets(n, (n // 2, q, r), {(0, 1): -q, (0, 2): -r})
        assert (oracle_realize(S) is not None) == ((q, r) in realizable_branch_pairs(n))


def test_realize_matrix_examples():
    w = realize_matrix(BraidingMatrix(2, [[1, 1], [1, 1]]))
    assert (w.x, w.y) == ((1, 1), (1, 1))
    assert realize_matrix(BraidingMatrix(4, [[2, 1], [1, 2]])) is None
    B = Realization(6, (2, 1), (1, 3)).matrix()
    assert realize_matrix(B).realizes(B)


@given(st.integers(2, 6), st.integers(1, 2), st.data())
def test_realize_matrix_matches_scan(n, r, data):
    rows = [[data.draw(st.integers(0, n - 1)) for _ in range(r)] for _ in range(r)]
    B = BraidingMatrix(n, rows)
    w = realize_matrix(B)
    found = scan_matrix(B)
    assert (w is None) == (found is None)
    if w is not None:
        assert w.realizes(B)
        assert (w.x, w.y) == found


@given(st.integers(2, 16), st.integers(2, 3), st.data())
def test_reflection_keeps_realizability(n, r, data):
    x = [data.draw(st.integers(0, n - 1)) for _ in range(r)]
    y = [data.draw(st.integers(0, n - 1)) for _ in range(r)]
    B = Realization(n, x, y).matrix()
    for i in range(r):
        try:
            C = weyl_reflect(B, i)
        except ReflectionUndefined:
            continue
        assert realize_matrix(C) is not None


@given(st.integers(2, 12), st.data())
def test_realize_gdd_matches_bulk_image(n, data):
    d = (data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1)))
    G = GDD.from_edges(n, d, {(0, 1): data.draw(st.integers(0, n - 1))})
    w = realize_gdd(G)
    assert (w is not None) == (G.key() in keys(n))
    if w is not None:
        assert w.gdd() == G


def test_realization_json_and_permutation():
    w = Realization(6, (4, 1, 5), (2, 3, 3))
    assert w.to_json() == {"x": [4, 1, 5], "y": [2, 3, 3]}
    p = w.permuted((2, 0, 1))
    assert p.matrix() == w.matrix().permuted((2, 0, 1))

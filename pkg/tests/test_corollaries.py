import pytest

from nichols_zn import GDD, enumerate_rank2, enumerate_rank3
from nichols_zn.corollaries import corollary_classes, corollary_labels
from nichols_zn.verify import corollary_mismatch


@pytest.mark.parametrize("n", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27])
def test_prime_power_lists_match_enumeration(n):
    assert corollary_mismatch(n) == ""


def test_labels_in_both_orientations():
    G = GDD.from_edges(8, (1, 4), {(0, 1): 7})
    assert "T2(2)_2" in corollary_labels(G)
    assert corollary_labels(G) == corollary_labels(G.permuted((1, 0)))


def test_only_prime_powers():
    with pytest.raises(ValueError):
        corollary_classes(12)
    with pytest.raises(ValueError):
        corollary_labels(GDD.from_edges(7, (1, 1, 1), {(0, 1): 1}))


def test_eisenstein_primes_only():
    # (-3/p) = 1 exactly for p = 1 mod 3
    for p in (5, 11, 17):
        assert not [v for v in enumerate_rank2(p) if str(v.label) in ("T2(1)", "T8(1)")]
    for p in (7, 13):
        assert [v for v in enumerate_rank2(p) if str(v.label) == "T8(1)"]


@pytest.mark.parametrize("p", [3, 5, 7, 9])
def test_odd_moduli_have_no_rank3_classes(p):
    # every finite rank-3 shape needs a vertex labelled -1
    assert enumerate_rank3(p) == []


@pytest.mark.parametrize("n, count", [(4, 4), (8, 12)])
def test_two_power_rank3_classes(n, count):
    labels = [str(v.label) for v in enumerate_rank3(n)]
    assert labels == ["Rank3(i)"] * count

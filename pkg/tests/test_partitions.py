from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from haarwg.partitions import (
    catalan, conjugate, dim_f, double, format_partition, hook_rsn, mn_character,
    parse_partition, partitions_of, z_mu,
)


def pentagonal_p(nmax):
    """Partition numbers from Euler's pentagonal recurrence."""
    p = [1] + [0] * nmax
    for n in range(1, nmax + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def test_small_enumerations():
    assert partitions_of(0) == ((),)
    assert partitions_of(2) == ((2,), (1, 1))
    assert len(partitions_of(5)) == 7
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_counts_match_pentagonal_recurrence():
    p = pentagonal_p(20)
    for n in range(21):
        parts = partitions_of(n)
        assert len(parts) == p[n] == len(set(parts))
        assert all(sum(lam) == n and list(lam) == sorted(lam, reverse=True) for lam in parts)


@pytest.mark.parametrize("mu, z", [((1, 1, 1), 6), ((3,), 3), ((2, 2, 1), 8), ((), 1)])
def test_z_mu(mu, z):
    assert z_mu(mu) == z


def test_double_and_conjugate():
    assert double(()) == ()
    assert double((2, 1)) == (4, 2)
    assert double((1, 1, 1)) == (2, 2, 2)
    assert conjugate((3, 1)) == (2, 1, 1)


@pytest.mark.parametrize("lam, f", [((2, 2), 2), ((4, 2), 9), ((2, 2, 2), 5), ((1,), 1), ((3, 2), 5)])
def test_dim_f(lam, f):
    assert dim_f(lam) == f


def test_dim_f_against_tableau_count():
    # count standard tableaux by placing 1..n one cell at a time
    def count(shape):
        if sum(shape) == 0:
            return 1
        total = 0
        for i, row in enumerate(shape):
            below = shape[i + 1] if i + 1 < len(shape) else 0
            if row > below:
                total += count(shape[:i] + (row - 1,) + shape[i + 1:])
        return total

    for n in range(1, 9):
        for lam in partitions_of(n):
            assert dim_f(lam) == count(lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_sum_of_squares(n):
    assert sum(dim_f(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_first_column_is_dimension(n):
    ones = (1,) * n
    assert all(mn_character(lam, ones) == dim_f(lam) for lam in partitions_of(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_column_orthogonality(n):
    parts = partitions_of(n)
    for mu in parts:
        for nu in parts:
            s = sum(mn_character(lam, mu) * mn_character(lam, nu) for lam in parts)
            assert s == (z_mu(mu) if mu == nu else 0)


def test_trivial_and_sign_characters():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert mn_character((n,), mu) == 1
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))
    assert mn_character((2, 1), (3,)) == -1


def test_character_brute_force_s4():
    # χ^{(3,1)} = (number of fixed points) - 1
    for perm in permutations(range(4)):
        seen, ct = set(), []
        for s in range(4):
            if s not in seen:
                k, c = s, 0
                while k not in seen:
                    seen.add(k)
                    k = perm[k]
                    c += 1
                ct.append(c)
        mu = tuple(sorted(ct, reverse=True))
        fixed = sum(1 for i in range(4) if perm[i] == i)
        assert mn_character((3, 1), mu) == fixed - 1


def test_weight_mismatch():
    with pytest.raises(ValueError):
        mn_character((2,), (1,))


def test_hook_rsn_examples():
    assert hook_rsn(1, 1, 2) == 12
    assert hook_rsn(2, 1, 3) == 80
    assert hook_rsn(2, 2, 4) == factorial(8) // dim_f((4, 4))
    with pytest.raises(ValueError):
        hook_rsn(1, 2, 4)


def test_hook_rsn_matches_hook_length_formula():
    for n in range(2, 9):
        for r in range(1, n):
            for s in range(1, min(r, n - r) + 1):
                lam = (r, s) + (1,) * (n - r - s)
                assert hook_rsn(r, s, n) * dim_f(double(lam)) == factorial(2 * n)


def test_catalan():
    assert [catalan(k) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]


@given(st.lists(st.integers(1, 6), max_size=6))
def test_serialization_round_trip(parts):
    lam = tuple(sorted(parts, reverse=True))
    assert parse_partition(format_partition(lam)) == lam

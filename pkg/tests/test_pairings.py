from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from haarwg.pairings import (
    PairPartition, act, compose, coset_rep_pair, coset_type, cycle_type, enumerate_hyperoctahedral,
    enumerate_pairings, format_pairing, identity_pairing, inverse, loops, pair_coset_type,
    parse_pairing, to_perm, unitary_pairings, unitary_to_sn,
)
from haarwg.partitions import double, double_factorial, partitions_of, z_mu

P = lambda *blocks: PairPartition(blocks)  # noqa: E731


def test_enumeration_sizes():
    assert enumerate_pairings(1) == (P((1, 2)),)
    assert len(enumerate_pairings(2)) == 3
    assert len(enumerate_pairings(5)) == 945
    for n in range(1, 7):
        b = enumerate_pairings(n)
        assert len(b) == len(set(b)) == double_factorial(2 * n - 1)
        assert list(b) == sorted(b)
        assert len(unitary_pairings(n)) == factorial(n)


def test_canonical_form():
    m = P((4, 2), (3, 1))
    assert tuple(m) == (1, 3, 2, 4)
    assert m == parse_pairing("{2,4}{1,3}")
    assert format_pairing(m) == "{1,3}{2,4}"
    with pytest.raises(ValueError):
        P((1, 2), (2, 3))


def test_to_perm():
    assert to_perm(P((1, 2), (3, 4))) == (1, 2, 3, 4)
    assert to_perm(P((1, 3), (2, 4))) == (1, 3, 2, 4)
    assert to_perm(P((1, 4), (2, 3))) == (1, 4, 2, 3)


def test_coset_type_examples():
    for n in range(1, 5):
        assert coset_type(tuple(range(1, 2 * n + 1))) == (1,) * n
    assert coset_type(to_perm(P((1, 3), (2, 4)))) == (2,)
    with pytest.raises(ValueError):
        coset_type((1, 2, 3))


def test_loops_examples():
    for m in enumerate_pairings(3):
        assert loops(m, m) == 3
    b = enumerate_pairings(2)
    assert all(loops(x, y) == 1 for x in b for y in b if x != y)
    assert loops(P((1, 2), (3, 4), (5, 6)), P((1, 2), (3, 5), (4, 6))) == 2


@pytest.mark.parametrize("n", range(1, 5))
def test_loops_equal_coset_length(n):
    b = enumerate_pairings(n)
    for x in b:
        for y in b:
            sigma = compose(inverse(to_perm(x)), to_perm(y))
            assert pair_coset_type(x, y) == coset_type(sigma)
            assert loops(x, y) == len(coset_type(sigma))


def test_act_examples():
    m = P((1, 3), (2, 4))
    assert act((1, 2, 3, 4), m) == m
    # σ = (1 3 2): 1->3, 3->2, 2->1
    assert act((3, 1, 2, 4), m) == P((1, 4), (2, 3))
    swap = (2, 1, 3, 4)
    assert act(swap, act(swap, m)) == m


@pytest.mark.parametrize("n", [1, 2, 3])
def test_action_preserves_loops(n):
    b = enumerate_pairings(n)
    for sigma in permutations(range(1, 2 * n + 1)):
        img = {m: act(sigma, m) for m in b}
        for x in b:
            for y in b:
                assert loops(img[x], img[y]) == loops(x, y)


def test_hyperoctahedral():
    assert sorted(enumerate_hyperoctahedral(1)) == [(1, 2), (2, 1)]
    assert len(enumerate_hyperoctahedral(2)) == 8
    h3 = enumerate_hyperoctahedral(3)
    assert len(set(h3)) == 48
    # brute force: the centralizer of (1 2)(3 4)(5 6) in S_6
    t = (2, 1, 4, 3, 6, 5)
    central = {s for s in permutations(range(1, 7)) if compose(s, t) == compose(t, s)}
    assert central == set(h3)
    assert all(coset_type(z) == (1, 1, 1) for z in h3)
    with pytest.raises(ValueError):
        enumerate_hyperoctahedral(8)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_left_coset_decomposition(n):
    h = enumerate_hyperoctahedral(n)
    prods = {compose(to_perm(m), z) for m in enumerate_pairings(n) for z in h}
    assert len(prods) == factorial(2 * n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_double_coset_sizes(n):
    from collections import Counter

    counts = Counter(coset_type(s) for s in permutations(range(1, 2 * n + 1)))
    for rho in partitions_of(n):
        assert counts[rho] == (2**n * factorial(n)) ** 2 // z_mu(double(rho))


def test_coset_rep_pair():
    assert coset_rep_pair((1, 1, 1)) == (identity_pairing(3), identity_pairing(3))
    m0, y = coset_rep_pair((2,))
    assert pair_coset_type(m0, y) == (2,)
    for n in range(1, 8):
        for rho in partitions_of(n):
            m0, y = coset_rep_pair(rho)
            assert m0 == identity_pairing(n)
            assert coset_type(compose(inverse(to_perm(m0)), to_perm(y))) == rho


def test_unitary():
    assert unitary_pairings(1) == (P((1, 2)),)
    assert set(unitary_pairings(2)) == {P((1, 3), (2, 4)), P((1, 4), (2, 3))}
    assert unitary_to_sn(P((1, 3), (2, 4))) == (1, 2)
    assert unitary_to_sn(P((1, 4), (2, 3))) == (2, 1)
    assert unitary_to_sn(P((1, 5), (2, 6), (3, 4))) == (2, 3, 1)
    with pytest.raises(ValueError):
        unitary_to_sn(P((1, 2), (3, 4)))


def test_unitary_loops_are_cycles():
    for n in range(1, 5):
        b = unitary_pairings(n)
        for x in b:
            for y in b:
                s = compose(inverse(unitary_to_sn(x)), unitary_to_sn(y))
                assert loops(x, y) == len(cycle_type(s))


@given(st.permutations(list(range(1, 9))))
def test_parse_accepts_any_block_order(seq):
    m = PairPartition.from_sequence(seq)
    assert parse_pairing(format_pairing(m)) == m
    blocks = list(reversed([(b, a) for a, b in m.blocks]))
    assert PairPartition(blocks) == m

import itertools
from math import comb

import pytest

from circsep.core import CircleSystem, DomainError, Element, SeparationParams
from circsep.counting import (binomial, count_circle, count_circle_fixed,
                              count_system, count_system_convolution,
                              count_system_fixed, count_system_fixed_recursive)
from circsep.enumeration import EnumerationRequest, count_by_enumeration


def oracle(sizes, s, k, fixed=None):
    return count_by_enumeration(EnumerationRequest(
        CircleSystem(tuple(sizes)), SeparationParams(s, k), fixed))


# ---------------------------------------------------------------------------
# binomial conventions


def test_binomial_zero_conventions():
    assert binomial(5, 2) == 10
    assert binomial(5, 0) == 1
    assert binomial(0, 0) == 1
    assert binomial(3, 4) == 0
    assert binomial(-1, 0) == 0
    assert binomial(5, -1) == 0
    assert binomial(-2, -2) == 0


# ---------------------------------------------------------------------------
# one circle


def test_circle_frozen_values():
    assert count_circle(10, 1, 3) == 50
    assert count_circle(7, 2, 2) == 7
    assert count_circle(8, 2, 2) == 12
    assert count_circle(7, 1, 2) == 14


def test_circle_edges():
    assert count_circle(5, 3, 0) == 1  # k = 0 counts the empty set only
    assert count_circle(9, 2, 1) == 9  # singletons are never constrained
    for s in range(1, 4):
        assert count_circle(s + 1, s, 1) == s + 1
        for k in range(2, 5):
            # n = s*k + 1 is in the exact range but leaves no room at all:
            # k gaps of length >= s+1 need at least s*k + k positions
            assert count_circle(s * k + 1, s, k) == 0
            # n = k*(s+1) admits exactly the s+1 rotations of a perfect packing
            assert count_circle(k * (s + 1), s, k) == s + 1
    # 2k positions, s = 1: only the two alternating packings
    for k in range(1, 6):
        assert count_circle(2 * k, 1, k) == 2


def test_circle_fixed_frozen_values():
    assert count_circle_fixed(10, 1, 3) == 15
    assert count_circle_fixed(7, 1, 2) == 4
    assert count_circle_fixed(8, 2, 2) == 3
    assert count_circle_fixed(9, 2, 1) == 1
    assert count_circle_fixed(2, 1, 1) == 1  # smallest admissible circle


def test_circle_domain_errors():
    with pytest.raises(DomainError, match="count_by_enumeration"):
        count_circle(4, 2, 2)  # n < s*k + 1
    with pytest.raises(DomainError):
        count_circle(0, 1, 1)
    with pytest.raises(DomainError):
        count_circle(5, -1, 1)
    with pytest.raises(DomainError):
        count_circle(5, 1, -1)
    with pytest.raises(DomainError):
        count_circle_fixed(6, 1, 0)  # fixed counts need k >= 1
    with pytest.raises(DomainError, match="n >= s\\*k\\+1"):
        count_circle_fixed(6, 2, 3)


def test_circle_against_oracle():
    for s in range(0, 4):
        for k in range(1, 5):
            for n in range(s * k + 1, 13):
                assert count_circle(n, s, k) == oracle([n], s, k), (n, s, k)


def test_circle_fixed_against_oracle():
    for s in range(0, 3):
        for k in range(1, 4):
            for n in range(s * k + 1, 12):
                closed = count_circle_fixed(n, s, k)
                assert closed == oracle([n], s, k, Element(1, 1)), (n, s, k)


def test_fixed_count_consistency():
    # each of the n rotations hosts the same share: k * free == n * fixed
    for s in range(1, 3):
        for k in range(1, 4):
            for n in range(s * k + 1, 14):
                assert (k * count_circle(n, s, k)
                        == n * count_circle_fixed(n, s, k))


# ---------------------------------------------------------------------------
# circle systems


def test_system_frozen_values():
    assert count_system(CircleSystem((8, 7)), 2, 3) == 140
    assert count_system(CircleSystem((7, 8)), 2, 3) == 140
    assert count_system_fixed(CircleSystem((8, 7)), 2, 3, Element(1, 1)) == 28
    assert count_system_fixed(CircleSystem((8, 7)), 2, 3, Element(5, 2)) == 28
    assert count_system_fixed(CircleSystem((4, 3)), 1, 2, Element(1, 1)) == 4


def test_system_k0():
    assert count_system(CircleSystem((5, 2)), 3, 0) == 1


def test_system_against_oracle():
    for s in (1, 2):
        for k in (1, 2, 3):
            lo = s * k + 1
            for sizes in itertools.combinations_with_replacement(range(lo, 8), 2):
                system = CircleSystem(sizes)
                assert count_system(system, s, k) == oracle(sizes, s, k)
                assert (count_system_fixed(system, s, k, Element(1, 1))
                        == oracle(sizes, s, k, Element(1, 1)))


def test_system_fixed_allows_smaller_other_circles():
    # circles without the fixed element only need size >= s*k
    system = CircleSystem((7, 4))
    assert count_system_fixed(system, 2, 2, Element(1, 1)) == \
        oracle([7, 4], 2, 2, Element(1, 1)) == binomial(11 - 4 - 1, 1)


def test_system_domain_errors():
    with pytest.raises(DomainError, match="n_1=4"):
        count_system(CircleSystem((4, 9)), 2, 2)
    with pytest.raises(DomainError, match="n_2"):
        count_system_fixed(CircleSystem((7, 3)), 2, 2, Element(1, 1))
    with pytest.raises(DomainError, match="fixed element's circle"):
        count_system_fixed(CircleSystem((4, 9)), 2, 2, Element(1, 1))
    with pytest.raises(ValueError):  # element does not exist at all
        count_system_fixed(CircleSystem((7, 7)), 1, 2, Element(8, 1))
    with pytest.raises(DomainError):
        count_system_fixed(CircleSystem((7, 7)), 1, 0, Element(1, 1))


def test_system_permutation_invariance():
    for perm in itertools.permutations((5, 4, 3)):
        assert count_system(CircleSystem(perm), 1, 2) == \
            count_system(CircleSystem((5, 4, 3)), 1, 2)


def test_system_fixed_relabeling():
    a = count_system_fixed(CircleSystem((7, 5)), 1, 2, Element(1, 1))
    b = count_system_fixed(CircleSystem((5, 7)), 1, 2, Element(1, 2))
    assert a == b == oracle([7, 5], 1, 2, Element(1, 1))


def test_double_count_relation():
    for s in (1, 2):
        for k in (1, 2, 3):
            lo = s * k + 1
            for sizes in itertools.combinations_with_replacement(range(lo, 9), 2):
                system = CircleSystem(sizes)
                assert (k * count_system(system, s, k)
                        == system.total * count_system_fixed(system, s, k,
                                                             Element(1, 1)))


# ---------------------------------------------------------------------------
# recursion and convolution recomputations


def test_recursive_decomposition_terms():
    # [8, 7], s=2, k=3 splits over the 7-circle's share as 7 + 21 + 0
    terms = [count_circle_fixed(8, 2, j) * count_circle(7, 2, 3 - j)
             for j in (1, 2, 3)]
    assert terms == [7, 21, 0]
    assert sum(terms) == 28
    assert count_system_fixed_recursive(CircleSystem((8, 7)), 2, 3) == 28


def test_recursive_matches_direct():
    for s in (1, 2):
        for k in (1, 2, 3):
            lo = s * k + 1
            for sizes in itertools.combinations_with_replacement(range(lo, 9), 2):
                system = CircleSystem(sizes)
                assert (count_system_fixed_recursive(system, s, k)
                        == count_system_fixed(system, s, k, Element(1, 1)))
    assert (count_system_fixed_recursive(CircleSystem((5, 4, 6)), 1, 3)
            == count_system_fixed(CircleSystem((5, 4, 6)), 1, 3, Element(1, 1)))


def test_recursive_domain_error():
    with pytest.raises(DomainError):
        count_system_fixed_recursive(CircleSystem((4, 9)), 2, 2)


def test_convolution_terms():
    # [7, 8], s=2, k=3 distributes as 0 + 84 + 56 + 0 over the 7-circle's share
    terms = [count_circle(7, 2, j) * count_circle(8, 2, 3 - j) for j in range(4)]
    assert terms == [0, 84, 56, 0]
    assert count_system_convolution(CircleSystem((7, 8)), 2, 3) == 140


def test_convolution_matches_direct():
    for s in (1, 2):
        for k in (1, 2, 3):
            lo = s * k + 1
            for sizes in itertools.combinations_with_replacement(range(lo, 8), 3):
                system = CircleSystem(sizes)
                assert (count_system_convolution(system, s, k)
                        == count_system(system, s, k))


def test_convolution_domain_error():
    with pytest.raises(DomainError):
        count_system_convolution(CircleSystem((4, 9)), 2, 2)


def test_s0_reduces_to_plain_binomials():
    # with no separation the count is just C(N, k), however the circles split
    for n1, n2, k in ((5, 4, 3), (6, 6, 2), (3, 7, 4)):
        system = CircleSystem((n1, n2))
        assert count_system(system, 0, k) == comb(n1 + n2, k)
        assert count_system_convolution(system, 0, k) == sum(
            comb(n1, j) * comb(n2, k - j) for j in range(k + 1))

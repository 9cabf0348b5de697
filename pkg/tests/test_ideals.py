#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for hyperideals and their classification in `sdf_hyperideal_step.ideals`."""

import pytest

from sdf_hyperideal_step.errors import (
    EmptySubsetError,
    NotAHyperidealError,
    NotProperError,
    SizeCapError,
)
from sdf_hyperideal_step.ideals import (
    additive_subgroups,
    are_coprime,
    colon_ideal,
    d_set,
    enumerate_hyperideals,
    enumerate_subrings,
    generated_hyperideal,
    is_c_hyperideal,
    is_hyperideal,
    is_local,
    is_maximal,
    is_prime,
    is_principal,
    is_strong_c_hyperideal,
    is_weakly_prime,
    jacobson,
    maximal_hyperideals,
    prime_hyperideals,
    product_family,
    proper_hyperideals,
    quotient_characteristic,
    radical,
)


def members(handles):
    return [P.members.members for P in handles]


def test_enumeration(r1, r2, z8):
    assert members(enumerate_hyperideals(r1)) == [(0,), (0, 2), (0, 1, 2, 3)]
    assert members(enumerate_hyperideals(r2)) == [(0,), (0, 2), (0, 1, 2, 3)]
    assert members(proper_hyperideals(r2)) == [(0,), (0, 2)]
    assert members(enumerate_hyperideals(z8)) == [
        (0,),
        (0, 4),
        (0, 2, 4, 6),
        tuple(range(8)),
    ]
    assert len(additive_subgroups(z8)) == 4
    assert len(enumerate_subrings(r1)) == 3


def test_enumeration_cap(r1):
    with pytest.raises(SizeCapError):
        enumerate_hyperideals(r1, cap=3)


def test_is_hyperideal(r1):
    assert is_hyperideal(r1, r1.subset([0, 2]))
    check = is_hyperideal(r1, r1.subset([0, 1]))
    assert not check
    assert check.witness == ("difference", 0, 1)
    with pytest.raises(EmptySubsetError):
        is_hyperideal(r1, r1.subset([]))


def test_generated_hyperideal(r2):
    assert generated_hyperideal(r2, r2.subset([2])).members.members == (0, 2)
    assert generated_hyperideal(r2, r2.subset([1])).bits == r2.full_bits


def test_prime(r1, r2):
    assert is_prime(r1, r1.subset([0, 2]))
    check = is_prime(r2, r2.zero_ideal())
    assert not check
    assert check.witness == (2, 2)
    assert is_weakly_prime(r2, r2.zero_ideal())
    assert members(prime_hyperideals(r2)) == [(0, 2)]


def test_prime_needs_a_proper_hyperideal(r1):
    with pytest.raises(NotProperError):
        is_prime(r1, r1.full())
    with pytest.raises(NotAHyperidealError):
        is_prime(r1, r1.subset([0, 1]))


def test_maximal(r1, r2):
    assert is_maximal(r1, r1.subset([0, 2]))
    check = is_maximal(r1, r1.zero_ideal())
    assert not check
    assert check.witness == (0, 2)
    assert members(maximal_hyperideals(r2)) == [(0, 2)]
    assert is_local(r2)


def test_radical(r1, r2):
    assert radical(r1, r1.zero_ideal()).members == (0, 2)
    assert radical(r2, r2.zero_ideal()).members == (0, 2)
    assert radical(r2, r2.full()).bits == r2.full_bits


def test_d_set_inside_radical(r1, r2):
    for ring in (r1, r2):
        for A in enumerate_hyperideals(ring):
            D = d_set(ring, A)
            assert D.bits & ~radical(ring, A).bits == 0
    assert d_set(r2, r2.zero_ideal()).members == (0, 2)


def test_d_set_is_radical_on_c_hyperideals(r1, r2, z8):
    for ring in (r1, r2, z8):
        for A in enumerate_hyperideals(ring):
            if is_c_hyperideal(ring, A):
                assert d_set(ring, A) == radical(ring, A)


def test_c_hyperideals(r1, r2):
    assert is_c_hyperideal(r2, r2.zero_ideal())
    assert not is_strong_c_hyperideal(r2, r2.zero_ideal())
    P = r2.subset([0, 2])
    assert is_c_hyperideal(r2, P)
    assert is_strong_c_hyperideal(r2, P)
    check = is_c_hyperideal(r1, r1.subset([0, 2]))
    assert not check
    assert check.witness == (0, 1, 2, 3)


def test_product_family(r2):
    family = product_family(r2)
    assert r2.subset([1, 3]) in family.family
    assert r2.subset([0, 2]) in family.sum_closure
    assert set(family.family) <= set(family.sum_closure)


def test_colon_and_jacobson(r2):
    P = r2.subset([0, 2])
    assert colon_ideal(r2, r2.zero_ideal(), P).members == (0, 2)
    assert colon_ideal(r2, P, r2.full()).members == (0, 2)
    assert jacobson(r2).members == (0, 2)


def test_coprime(r2):
    P = r2.subset([0, 2])
    assert not are_coprime(r2, r2.zero_ideal(), P)
    assert are_coprime(r2, P, r2.full())


def test_principal(r2):
    check = is_principal(r2, r2.subset([0, 2]))
    assert check
    assert check.witness == (2,)


def test_quotient_characteristic(r1):
    assert quotient_characteristic(r1, r1.subset([0, 2])) == 2
    assert quotient_characteristic(r1, r1.zero_ideal()) == 4
    assert quotient_characteristic(r1, r1.full()) == 1


@pytest.mark.slow
def test_radical_laws_sweep(sweep_corpus):
    violations = []
    for instance in sweep_corpus:
        ring = instance.ring
        for A in enumerate_hyperideals(ring):
            D, rad = d_set(ring, A), radical(ring, A)
            if D.bits & ~rad.bits or (is_c_hyperideal(ring, A) and D != rad):
                violations.append((instance.id, A.members))
    assert violations == []

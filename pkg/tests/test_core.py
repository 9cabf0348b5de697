#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the hyperring tables and axioms in `sdf_hyperideal_step.core`."""

import pytest

from sdf_hyperideal_step import (
    HyperRing,
    characteristic,
    nilpotents,
    power,
    regular_elements,
    set_diff,
    set_product,
    units,
    validate_hyperring,
    zomega,
)
from sdf_hyperideal_step import core
from sdf_hyperideal_step.core import bits_of, is_regular, members_of, reaches
from sdf_hyperideal_step.errors import (
    EmptySubsetError,
    HyperringError,
    MissingIdentityError,
    RingMismatchError,
    StructureError,
)

Z2 = [[0, 1], [1, 0]]


def test_bit_sets():
    """Members come back ascending."""
    assert members_of(bits_of([3, 0, 2])) == (0, 2, 3)
    assert members_of(0) == ()


def test_fixtures_are_hyperrings(r1, r2):
    for ring in (r1, r2):
        report = validate_hyperring(ring)
        assert report.passed
        assert report.violations == ()
        assert report.identity_witnesses.members == (1, 3)


def test_fixture_not_strongly_distributive(r1):
    """1 o (1 + 3) = {0} but 1 o 1 + 1 o 3 is everything."""
    assert not validate_hyperring(r1).strongly_distributive


def test_failing_axioms_are_reported():
    ring = HyperRing("lopsided", Z2, [[[0], [0]], [[1], [1]]])
    report = validate_hyperring(ring)
    assert not report.passed
    assert "commutative" in report.failed_axioms()
    assert "distributive inclusion" in report.failed_axioms()
    witnesses = {v.axiom: v.witness for v in report.violations}
    assert witnesses["commutative"] == (0, 1)


def test_wrong_designated_identity(r1):
    ring = HyperRing("R1 with one=2", r1.add, r1.mul_sets(), zero=0, one=2)
    report = validate_hyperring(ring)
    assert not report.designated_identity
    assert report.failed_axioms() == ["designated identity"]


def test_malformed_tables():
    with pytest.raises(StructureError):
        HyperRing("empty cell", Z2, [[[0], []], [[0], [1]]])
    with pytest.raises(StructureError):
        HyperRing("not square", [[0, 1]], [[[0], [0]]])
    with pytest.raises(StructureError):
        HyperRing("outside", Z2, [[[0], [2]], [[0], [1]]])
    with pytest.raises(StructureError):
        HyperRing.from_bits("empty bits", Z2, [[1, 0], [1, 2]])


def test_subsets(r1, r2):
    A = r1.subset([2, 0])
    assert A.members == (0, 2)
    assert 2 in A and 1 not in A
    assert repr(A) == "{0,2}"
    assert (A | r1.subset([1])).members == (0, 1, 2)
    with pytest.raises(HyperringError):
        r1.subset([4])
    with pytest.raises(RingMismatchError):
        A | r2.subset([0])


def test_equality_ignores_names(r1):
    assert zomega(4, range(4)) == r1
    assert r1.renamed("other") == r1
    assert hash(r1.renamed("other")) == hash(r1)


def test_subset_products_use_a_bounded_cache(r2):
    assert core._product_bits.cache_info().maxsize is not None
    assert core._sum_bits.cache_info().maxsize is not None
    odd = bits_of([1, 3])
    first = r2.product_bits(odd, odd)
    hits = core._product_bits.cache_info().hits
    assert r2.renamed("other").product_bits(odd, odd) == first
    assert core._product_bits.cache_info().hits == hits + 1


def test_set_arithmetic(r2):
    one = r2.subset([1])
    assert set_product(r2, one, one).members == (1, 3)
    odd = r2.subset([1, 3])
    assert set_diff(r2, odd, odd).members == (0, 2)
    with pytest.raises(EmptySubsetError):
        set_product(r2, r2.subset([]), one)


def test_powers(r2):
    assert power(r2, 3, 1).members == (3,)
    assert power(r2, 3, 3).members == (1, 3)
    assert power(r2, 2, 2).members == (0,)
    with pytest.raises(HyperringError):
        power(r2, 3, 0)


def test_reaches(r2):
    assert reaches(r2, 2, r2.zero_bits)
    assert not reaches(r2, 1, r2.zero_bits)
    assert reaches(r2, 3, r2.subset([1, 3]).bits, contained=True)


def test_units(r1, r2):
    assert units(r1).members == (1, 3)
    assert units(r2).members == (1, 3)
    no_one = HyperRing("no one", r1.add, r1.mul_sets())
    with pytest.raises(MissingIdentityError):
        units(no_one)


def test_nilpotents(r1, r2):
    assert nilpotents(r1).bits == r1.full_bits
    assert nilpotents(r2).members == (0, 2)


def test_regular_elements(r1):
    assert regular_elements(r1).members == (0, 1, 3)
    assert not is_regular(r1)
    assert is_regular(zomega(3, [1, 2]))


def test_characteristic(r1, z8):
    assert characteristic(r1) == 4
    assert characteristic(z8) == 8
    assert characteristic(zomega(2, [0, 1])) == 2

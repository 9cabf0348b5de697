#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for building rings and maps in `sdf_hyperideal_step.constructors`."""

from hypothesis import given, settings, strategies as st
import pytest

from sdf_hyperideal_step import (
    MatrixRingHandle,
    check_good_hom,
    hom_image,
    hom_preimage,
    product_ring,
    quotient_ring,
    validate_hyperring,
    zomega,
)
from sdf_hyperideal_step.constructors import (
    canonical_projection,
    coset_map,
    identity_hom,
    product_projection,
    product_subset,
    subring,
)
from sdf_hyperideal_step.errors import (
    HyperringError,
    NotAHyperidealError,
    NotGoodHomomorphismError,
    SizeCapError,
    StructureError,
)


def test_zomega_reproduces_fixtures(r1, r2):
    """Cell for cell against the packaged tables."""
    assert zomega(4, [0, 1, 2, 3]).mul == r1.mul
    assert zomega(4, [1, 3]).mul == r2.mul
    assert zomega(4, [1, 3]).one == 1


@settings(derandomize=True, max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=7),
    omega=st.sets(st.integers(min_value=0, max_value=20), min_size=2, max_size=3),
)
def test_zomega_is_direct_evaluation(n, omega):
    ring = zomega(n, omega)
    assert validate_hyperring(ring).passed
    cells = ring.mul_sets()
    for x in range(n):
        for y in range(n):
            assert cells[x][y] == {(x * g * y) % n for g in omega}


def test_zomega_arguments():
    with pytest.raises(HyperringError):
        zomega(1, [0, 1])
    with pytest.raises(HyperringError):
        zomega(4, [1])
    # Two residues that coincide mod n are still accepted
    assert zomega(8, [1, 9]).mul_sets()[3][5] == {7}


def test_product_ring(r1, r2):
    product = product_ring(r1, r2)
    assert product.order == 16
    assert product.zero == 0
    assert product.one == 1 * 4 + 1
    assert validate_hyperring(product).passed
    subset = product_subset(r1, r1.subset([0, 2]), r2, r2.full())
    assert len(subset) == 8
    assert subset.members[:4] == (0, 1, 2, 3)


def test_quotient_ring(r1, r2):
    Q = r1.subset([0, 2])
    assert coset_map(r1, Q) == (0, 1, 0, 1)
    quotient = quotient_ring(r1, Q)
    assert quotient.order == 2
    assert quotient.one == 1
    assert quotient.mul_sets()[1][1] == {0, 1}
    assert quotient_ring(r2, r2.subset([0, 2])).mul_sets()[1][1] == {1}
    assert quotient_ring(r1, r1.zero_ideal()) == r1


def test_quotient_needs_a_hyperideal(r1):
    with pytest.raises(NotAHyperidealError):
        quotient_ring(r1, r1.subset([0, 1]))


def test_identity_hom(r1):
    theta = identity_hom(r1)
    assert theta.good
    assert theta.injective and theta.surjective
    assert theta.kernel.members == (0,)


def test_canonical_projection(r1):
    Q = r1.subset([0, 2])
    theta = canonical_projection(r1, Q)
    assert theta.good
    assert theta.surjective and not theta.injective
    assert theta.kernel.members == (0, 2)
    assert hom_preimage(theta, theta.target.zero_ideal()).members == (0, 2)
    assert hom_image(theta, Q).members == (0,)


def test_not_a_good_homomorphism(r1):
    """Doubling is additive but 1 o 1 maps onto {0,2}, not 2 o 2 = {0}."""
    theta = check_good_hom([0, 2, 0, 2], r1, r1)
    assert theta.additive
    assert not theta.multiplicative
    assert theta.multiplicative.witness == (1, 1)
    with pytest.raises(NotGoodHomomorphismError):
        hom_preimage(theta, r1.zero_ideal())
    with pytest.raises(HyperringError):
        check_good_hom([0, 1, 2], r1, r1)


def test_product_projection(r1, r2):
    left = product_projection(r1, r2, 0)
    right = product_projection(r1, r2, 1)
    assert left.good and left.surjective
    assert right.good and right.surjective
    assert left(5) == 1 and right(6) == 2
    with pytest.raises(HyperringError):
        product_projection(r1, r2, 2)


def test_subring(r1):
    ring, inclusion = subring(r1, r1.subset([0, 2]))
    assert ring.order == 2
    assert inclusion.mapping == (0, 2)
    assert inclusion.good and inclusion.injective
    with pytest.raises(StructureError):
        subring(r1, r1.subset([0, 1]))


def test_matrix_numbering(r1):
    handle = MatrixRingHandle(r1, 2)
    assert handle.order == 256
    assert handle.entries(handle.corner(3)) == (3, 0, 0, 0)
    assert all(handle.index_of(handle.entries(X)) == X for X in range(handle.order))
    assert handle.is_zero(0) and not handle.is_zero(1)


def test_matrix_caps(r1, z8):
    with pytest.raises(SizeCapError):
        MatrixRingHandle(z8, 2, cap=256)
    with pytest.raises(HyperringError):
        MatrixRingHandle(r1, 0)


def test_one_by_one_matrices_are_the_base(r2):
    handle = MatrixRingHandle(r2, 1)
    assert handle.ring == r2


def test_matrix_products(r2):
    handle = MatrixRingHandle(r2, 2)
    identity = handle.index_of((1, 0, 0, 1))
    X = handle.index_of((2, 1, 0, 3))
    box = handle.product_box(identity, X)
    assert box == tuple(r2.mul[1][e] for e in (2, 1, 0, 3))
    assert X in handle.box_members(box)
    assert handle.box_within(handle.square(handle.corner(2)), r2.zero_bits)

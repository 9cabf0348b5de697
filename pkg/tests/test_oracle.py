#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `sdf_hyperideal_step.oracle` against the engine."""

import pytest

from sdf_hyperideal_step import generate_corpus, zomega
from sdf_hyperideal_step.oracle import cross_check, oracle_sdf, oracle_weakly_sdf


def test_oracle_negative_controls(z8):
    assert oracle_sdf(z8, [0]) == (False, (1, 3))
    assert oracle_weakly_sdf(z8, [0, 4]) == (False, (2, 4))


def test_oracle_fixtures(r1, r2):
    assert oracle_sdf(r1, [0, 2]) == (True, None)
    assert oracle_weakly_sdf(r2, [0]) == (True, None)


def test_cross_check_agrees(r1, r2, z8):
    rings = [r1, r2, z8, zomega(6, [1, 5]), zomega(6, [0, 2, 3])]
    assert cross_check(rings) == []


def test_cross_check_small_corpus():
    corpus = generate_corpus("zomega:nMax=5,omegaMax=2")
    assert cross_check([i.ring for i in corpus]) == []


@pytest.mark.slow
def test_cross_check_sweep(sweep_corpus):
    rings = [i.ring for i in sweep_corpus if i.origin != "matrix"]
    assert rings
    assert cross_check(rings) == []

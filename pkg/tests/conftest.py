#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Fixtures for testing the 'sdf_hyperideal_step' package."""

import pytest

from sdf_hyperideal_step import generate_corpus, load_fixture, zomega

SWEEP = "fixtures+zomega:nMax=6,omegaMax=3+product:orderCap=16+quotients"


@pytest.fixture(scope="session")
def r1():
    """Z4 where {0,2} is sdf-absorbing."""
    return load_fixture("r1")


@pytest.fixture(scope="session")
def r2():
    """Z4 where {0} is weakly sdf-absorbing."""
    return load_fixture("r2")


@pytest.fixture(scope="session")
def z8():
    """zomega(8, {1, 9}), which is Z8 with its ordinary product."""
    return zomega(8, [1, 9])


@pytest.fixture
def fixture_paths(tmp_path, r1, r2):
    """The two example rings written to files."""
    from sdf_hyperideal_step import serialize_ring

    paths = {}
    for name, ring in (("r1", r1), ("r2", r2)):
        path = tmp_path / f"{name}.hr"
        path.write_text(serialize_ring(ring))
        paths[name] = str(path)
    return paths


@pytest.fixture(scope="session")
def sweep_corpus():
    """The fixtures, every small zomega ring, their products and quotients."""
    return generate_corpus(SWEEP)

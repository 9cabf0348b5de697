#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the SEAMM plug-in in the `sdf_hyperideal_step` package."""

import pytest  # noqa: F401
import sdf_hyperideal_step  # noqa: F401


def test_construction():
    """Just create an object and test its type."""
    result = sdf_hyperideal_step.SdfHyperideal()
    assert (
        str(type(result))
        == "<class 'sdf_hyperideal_step.sdf_hyperideal.SdfHyperideal'>"
    )


def test_parameters():
    """The theorem choices follow the registry."""
    parameters = sdf_hyperideal_step.SdfHyperidealParameters()
    assert "corpus" in parameters
    theorems = sdf_hyperideal_step.SdfHyperidealParameters.parameters["theorem"]
    assert theorems["enumeration"] == tuple(sdf_hyperideal_step.REGISTRY)


def test_metadata():
    """Every stored result comes from one of the two kinds of task."""
    results = sdf_hyperideal_step.metadata["results"]
    for name, data in results.items():
        assert set(data["calculation"]) <= {"theorems", "classify"}, name

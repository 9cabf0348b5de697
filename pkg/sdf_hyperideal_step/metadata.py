# -*- coding: utf-8 -*-

"""This file contains metadata describing the results from the SDF Hyperideal step
"""

metadata = {}

"""Description of the results the step can store.

Fields
______

calculation : [str]
    The tasks that produce this result: "theorems" for running one or all
    theorems, "classify" for classifying a hyperideal.

description : str
    A human-readable description of the result.

dimensionality : str
    "scalar" for every result of this step.

type : str
    The type of the data: string, integer, or float.
"""
metadata["results"] = {
    "theorems": {
        "calculation": ["theorems"],
        "description": "Number of theorems checked",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "instances": {
        "calculation": ["theorems"],
        "description": "Number of (instance, clause) evaluations",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "counterexamples": {
        "calculation": ["theorems"],
        "description": "Number of counterexamples found",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "non_vacuous": {
        "calculation": ["theorems"],
        "description": "Number of theorems whose premise held somewhere",
        "dimensionality": "scalar",
        "type": "integer",
    },
    "sdf": {
        "calculation": ["classify"],
        "description": "Whether the hyperideal is sdf-absorbing",
        "dimensionality": "scalar",
        "type": "string",
    },
    "weakly_sdf": {
        "calculation": ["classify"],
        "description": "Whether the hyperideal is weakly sdf-absorbing",
        "dimensionality": "scalar",
        "type": "string",
    },
    "radical": {
        "calculation": ["classify"],
        "description": "The radical of the hyperideal",
        "dimensionality": "scalar",
        "type": "string",
    },
}

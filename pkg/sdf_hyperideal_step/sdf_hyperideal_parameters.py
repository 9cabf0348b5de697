# -*- coding: utf-8 -*-
"""
Control parameters for the SDF Hyperideal step in a SEAMM flowchart
"""

import logging
import seamm

from .harness import REGISTRY

logger = logging.getLogger(__name__)


class SdfHyperidealParameters(seamm.Parameters):
    """
    The control parameters for the SDF Hyperideal step.

    The step has three tasks: checking every registered theorem over a corpus
    of small hyperrings, checking a single theorem, and classifying one
    hyperideal of one ring. The keys below are the parameters; each value is a
    dictionary with the usual SEAMM entries:

    parameters["default"] :
        The default value of the parameter, used to reset it.

    parameters["kind"] : enum()
        One of "integer", "float", "string", "boolean", "enumeration" or
        "dictionary". Any parameter may instead be a variable or expression,
        indicated by a leading "$".

    parameters["enumeration"]: tuple
        A tuple of enumerated values.

    parameters["format_string"]: str
        A format string for "pretty" output.

    parameters["description"]: str
        A short string used as a prompt in the GUI.

    parameters["help_text"]: str
        A longer string to display as help for the user.

    See Also
    --------
    SdfHyperideal, TkSdfHyperideal, SdfHyperidealStep
    """

    parameters = {
        "task": {
            "default": "run all theorems",
            "kind": "enumeration",
            "default_units": "",
            "enumeration": (
                "run all theorems",
                "check one theorem",
                "classify a hyperideal",
            ),
            "format_string": "s",
            "description": "Task:",
            "help_text": "What to do.",
        },
        "corpus": {
            "default": "fixtures+zomega:nMax=6,omegaMax=3",
            "kind": "string",
            "default_units": "",
            "enumeration": (
                "fixtures",
                "fixtures+zomega:nMax=4",
                "fixtures+zomega:nMax=6,omegaMax=3",
                "fixtures+zomega:nMax=6,omegaMax=3+product:orderCap=16+quotients",
            ),
            "format_string": "s",
            "description": "Corpus:",
            "help_text": (
                "The rings to check the theorems over, as components joined by"
                " '+': fixtures, zomega:nMax=K,omegaMax=J, product:orderCap=K,"
                " quotients and matrix:m=2,cap=K."
            ),
        },
        "theorem": {
            "default": "T1",
            "kind": "enumeration",
            "default_units": "",
            "enumeration": tuple(REGISTRY),
            "format_string": "s",
            "description": "Theorem:",
            "help_text": "The theorem to check.",
        },
        "ring": {
            "default": "r2",
            "kind": "string",
            "default_units": "",
            "enumeration": ("r1", "r2"),
            "format_string": "s",
            "description": "Ring:",
            "help_text": (
                "A ring document, or r1 or r2 for the packaged example rings."
            ),
        },
        "ideal": {
            "default": "0",
            "kind": "string",
            "default_units": "",
            "enumeration": tuple(),
            "format_string": "s",
            "description": "Hyperideal:",
            "help_text": "The members of the hyperideal, separated by commas.",
        },
        "results": {
            "default": {},
            "kind": "dictionary",
            "default_units": "",
            "enumeration": tuple(),
            "format_string": "",
            "description": "results",
            "help_text": "The results to save to variables or in tables.",
        },
    }

    def __init__(self, defaults={}, data=None):
        """
        Initialize the parameters, by default with the parameters defined above

        Parameters
        ----------
        defaults: dict
            A dictionary of parameters to initialize. The parameters
            above are used first and any given will override/add to them.
        data: dict
            A dictionary of keys and a subdictionary with value and units
            for updating the current, default values.

        Returns
        -------
        None
        """

        logger.debug("SdfHyperidealParameters.__init__")

        super().__init__(
            defaults={**SdfHyperidealParameters.parameters, **defaults}, data=data
        )

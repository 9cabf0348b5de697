# -*- coding: utf-8 -*-

"""
sdf_hyperideal_step
Finite multiplicative hyperrings, sdf-absorbing hyperideals and a harness
checking the theorems about them; usable as a library, from the command line
or as a SEAMM plug-in.
"""

# Bring up the main classes and functions so that they appear to be directly
# in the sdf_hyperideal_step package.

from .errors import (  # noqa: F401
    CorpusSpecError,
    EmptySubsetError,
    HyperringError,
    MissingIdentityError,
    NotAHyperidealError,
    NotGoodHomomorphismError,
    NotProperError,
    RingFormatError,
    RingMismatchError,
    SizeCapError,
    StructureError,
    UnknownTheoremError,
    WellDefinednessError,
)
from .core import (  # noqa: F401
    AxiomReport,
    Check,
    HyperRing,
    SubsetHandle,
    characteristic,
    nilpotents,
    power,
    regular_elements,
    set_diff,
    set_neg,
    set_product,
    set_sum,
    units,
    validate_hyperring,
)
from .ideals import (  # noqa: F401
    ClassificationReport,
    IdealHandle,
    colon_ideal,
    d_set,
    enumerate_hyperideals,
    generated_hyperideal,
    is_c_hyperideal,
    is_hyperideal,
    is_maximal,
    is_prime,
    is_strong_c_hyperideal,
    is_weakly_prime,
    jacobson,
    product_family,
    radical,
)
from .constructors import (  # noqa: F401
    HomMap,
    MatrixRingHandle,
    check_good_hom,
    hom_image,
    hom_preimage,
    matrix_ring,
    product_ring,
    quotient_ring,
    zomega,
)
from .sdf import (  # noqa: F401
    classify,
    corner_sdf_absorbing,
    diff_of_squares,
    is_sdf_absorbing,
    is_weakly_sdf_absorbing,
    matrix_sdf_absorbing,
    sdf_both_membership,
)
from .ring_format import parse_ring, read_ring, serialize_ring  # noqa: F401
from .corpus import (  # noqa: F401
    CorpusSpec,
    generate_corpus,
    load_fixture,
    parse_corpus_spec,
)
from .harness import (  # noqa: F401
    REGISTRY,
    TheoremVerdict,
    check_theorem,
    run_all,
    search_counterexample,
)

from .metadata import metadata  # noqa: F401

from .sdf_hyperideal import SdfHyperideal  # noqa: F401
from .sdf_hyperideal_parameters import SdfHyperidealParameters  # noqa: F401
from .sdf_hyperideal_step import SdfHyperidealStep  # noqa: F401
from .tk_sdf_hyperideal import TkSdfHyperideal  # noqa: F401

__author__ = "Paul Saxe"
__email__ = "psaxe@molssi.org"
__version__ = "2026.10.19"

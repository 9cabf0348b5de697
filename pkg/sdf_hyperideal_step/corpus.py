# -*- coding: utf-8 -*-

"""Corpora of small hyperrings for the theorem harness.

A corpus is described by a short text such as
``fixtures+zomega:nMax=6,omegaMax=3+product:orderCap=16+quotients``. The
components are

=========== ===================== ==========================================
component   options               rings added
=========== ===================== ==========================================
fixtures                          the two packaged example rings R1 and R2
zomega      nMax, omegaMax        one zomega(n, Omega) for each distinct
                                  table with 2 <= n <= nMax and
                                  |Omega| <= omegaMax; a single residue g
                                  is written Omega = {g, g+n}
product     orderCap              H1 x H2 for earlier rings H1, H2 whose
                                  order product is at most orderCap
quotients                         H/Q for every earlier ring and hyperideal Q
matrix      m, cap                hypermatrix rings M_m(H) of at most cap
                                  elements
=========== ===================== ==========================================

Rings are deduplicated by their tables, keeping the first occurrence.
"""

from dataclasses import dataclass, field
import importlib.resources
import itertools
import logging

from .constructors import MatrixRingHandle, product_ring, quotient_ring, zomega
from .errors import CorpusSpecError, HyperringError, SizeCapError
from .ideals import ENUMERATION_CAP, enumerate_hyperideals
from .ring_format import parse_ring

logger = logging.getLogger(__name__)

_OPTIONS = {
    "fixtures": {},
    "zomega": {"nMax": None, "omegaMax": 2},
    "product": {"orderCap": 16},
    "quotients": {},
    "matrix": {"m": 2, "cap": 256},
}


@dataclass(frozen=True)
class CorpusSpec:
    """Which rings a corpus contains."""

    fixtures: bool = False
    zomega_n_max: int = None
    zomega_omega_max: int = 2
    product_order_cap: int = None
    quotients: bool = False
    matrix_m: int = None
    matrix_cap: int = 256

    @property
    def empty(self):
        return not (
            self.fixtures
            or self.zomega_n_max
            or self.product_order_cap
            or self.quotients
            or self.matrix_m
        )


@dataclass(frozen=True)
class RingInstance:
    """One ring of a corpus and where it came from.

    ``origin`` is one of "fixture", "zomega", "product", "quotient" or
    "matrix"; ``factors`` holds the ids of the rings it was built from. For a
    matrix instance ``ring`` is the base ring and ``matrix`` the handle.
    """

    id: str
    ring: object
    origin: str
    factors: tuple = ()
    matrix: object = field(default=None, compare=False)


def parse_corpus_spec(text):
    """Parse a corpus description.

    Raises
    ------
    CorpusSpecError
        For unknown components or options and for bad values.
    """
    values = {}
    seen = set()
    text = text.strip()
    if not text:
        return CorpusSpec()
    for component in text.split("+"):
        name, _, options = component.strip().partition(":")
        name = name.strip()
        if name not in _OPTIONS:
            raise CorpusSpecError(f"unknown corpus component '{name}'")
        if name in seen:
            raise CorpusSpecError(f"corpus component '{name}' given twice")
        seen.add(name)
        settings = dict(_OPTIONS[name])
        for option in filter(None, (o.strip() for o in options.split(","))):
            key, sep, value = option.partition("=")
            key = key.strip()
            if not sep or key not in settings:
                raise CorpusSpecError(f"unknown option '{option}' for '{name}'")
            try:
                settings[key] = int(value)
            except ValueError:
                raise CorpusSpecError(
                    f"'{key}' needs an integer, not '{value.strip()}'"
                )
            if settings[key] < 1:
                raise CorpusSpecError(f"'{key}' must be positive, not {settings[key]}")
        if any(v is None for v in settings.values()):
            missing = [k for k, v in settings.items() if v is None]
            raise CorpusSpecError(f"'{name}' needs {', '.join(missing)}")
        if name == "fixtures":
            values["fixtures"] = True
        elif name == "zomega":
            if settings["nMax"] < 2 or settings["omegaMax"] < 2:
                raise CorpusSpecError("zomega needs nMax >= 2 and omegaMax >= 2")
            values["zomega_n_max"] = settings["nMax"]
            values["zomega_omega_max"] = settings["omegaMax"]
        elif name == "product":
            values["product_order_cap"] = settings["orderCap"]
        elif name == "quotients":
            values["quotients"] = True
        else:
            values["matrix_m"] = settings["m"]
            values["matrix_cap"] = settings["cap"]
    return CorpusSpec(**values)


def load_fixture(name):
    """The packaged ring document ``name`` (e.g. "r1") as a HyperRing."""
    resources = importlib.resources.files("sdf_hyperideal_step") / "data"
    return parse_ring((resources / f"{name}.hr").read_text()).ring


def _omegas(n, omega_max):
    """One Omega per distinct reduced residue set, larger sets first.

    The table of zomega(n, Omega) depends only on Omega mod n, so a single
    residue g, which Omega cannot be on its own, is reached as {g, g+n}.
    """
    for size in range(2, min(omega_max, n) + 1):
        yield from itertools.combinations(range(n), size)
    for g in range(n):
        yield (g, g + n)


def iter_corpus(spec, enumeration_cap=ENUMERATION_CAP):
    """Yield the instances of a corpus in their deterministic order."""
    if isinstance(spec, str):
        spec = parse_corpus_spec(spec)
    seen = set()
    base = []

    def admit(instance):
        if instance.ring in seen:
            return False
        seen.add(instance.ring)
        base.append(instance)
        return True

    if spec.fixtures:
        for name in ("r1", "r2"):
            ring = load_fixture(name)
            instance = RingInstance(ring.name, ring, "fixture")
            if admit(instance):
                yield instance

    if spec.zomega_n_max:
        for n in range(2, spec.zomega_n_max + 1):
            for omega in _omegas(n, spec.zomega_omega_max):
                ring = zomega(n, omega)
                instance = RingInstance(ring.name, ring, "zomega")
                if admit(instance):
                    yield instance

    if spec.product_order_cap:
        factors = list(base)
        for left, right in itertools.combinations_with_replacement(factors, 2):
            if left.ring.order * right.ring.order > spec.product_order_cap:
                continue
            if left.ring.order == 1 or right.ring.order == 1:
                continue
            ring = product_ring(left.ring, right.ring)
            instance = RingInstance(ring.name, ring, "product", (left.id, right.id))
            if admit(instance):
                yield instance

    if spec.quotients:
        for parent in list(base):
            if parent.ring.order > enumeration_cap:
                logger.info(f"no quotients of {parent.id}: order above the cap")
                continue
            for Q in enumerate_hyperideals(parent.ring, enumeration_cap):
                try:
                    ring = quotient_ring(parent.ring, Q)
                except HyperringError as e:
                    logger.warning(f"skipping {parent.id}/{Q}: {e}")
                    continue
                instance = RingInstance(ring.name, ring, "quotient", (parent.id,))
                if admit(instance):
                    yield instance

    if spec.matrix_m:
        for parent in list(base):
            try:
                handle = MatrixRingHandle(
                    parent.ring, spec.matrix_m, cap=spec.matrix_cap
                )
            except SizeCapError:
                continue
            yield RingInstance(
                f"M{spec.matrix_m}({parent.id})",
                parent.ring,
                "matrix",
                (parent.id,),
                matrix=handle,
            )


def generate_corpus(spec, enumeration_cap=ENUMERATION_CAP):
    """The instances of a corpus as a list."""
    corpus = list(iter_corpus(spec, enumeration_cap=enumeration_cap))
    logger.info(f"corpus of {len(corpus)} instances")
    return corpus

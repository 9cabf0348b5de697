# -*- coding: utf-8 -*-

"""Exhaustive checking of the sdf theorems over a corpus of hyperrings.

Every theorem is a :class:`TheoremCase`: a list of clauses, each a premise and
a conclusion evaluated on instances of one kind (a ring, a ring and a
hyperideal, a good homomorphism and a hyperideal, a pair of rings, ...).
Biconditionals and lists of equivalent statements become one clause per
ordered pair of statements. Checking a theorem counts, for every
(instance, clause) evaluation, whether the premise held and whether the
conclusion followed, and keeps every counterexample as a replayable
descriptor.
"""

from dataclasses import dataclass, field
import itertools
import logging
from typing import Callable

from .constructors import (
    MatrixRingHandle,
    check_good_hom,
    coset_map,
    identity_hom,
    product_projection,
    product_ring,
    quotient_ring,
    subring,
)
from .core import members_of, nilpotents, regular_elements, units, characteristic
from .corpus import CorpusSpec, generate_corpus
from .errors import HyperringError, SizeCapError, UnknownTheoremError
from .ideals import (
    ENUMERATION_CAP,
    enumerate_hyperideals,
    enumerate_subrings,
    is_c_hyperideal,
    is_hyperideal,
    is_principal,
    is_strong_c_hyperideal,
    is_weakly_prime,
    maximal_hyperideals,
    prime_hyperideals,
    quotient_characteristic,
    radical,
)
from .ring_format import serialize_ring
from .sdf import (
    corner_sdf_absorbing,
    is_sdf_absorbing,
    is_weakly_sdf_absorbing,
    matrix_sdf_absorbing,
    no_sdf_factorization,
    sdf_both_membership,
)

logger = logging.getLogger(__name__)

#: Largest order of a product ring built for the product theorems.
PRODUCT_CAP = 16
#: Largest hypermatrix ring scanned for the matrix theorem.
MATRIX_CAP = 256
#: Size of the hypermatrices for the matrix theorem.
MATRIX_M = 2
#: Largest family of hyperideals intersected in the intersection theorems.
FAMILY_MAX = 3


class Inapplicable(Exception):
    """The instance lacks a structure the theorem refers to."""


class RingAnalysis:
    """Facts about one ring, computed on demand and remembered.

    Hyperideals are passed around as bit sets.
    """

    def __init__(self, ring, context):
        self.ring = ring
        self.context = context
        self._memo = {}

    def __repr__(self):
        return f"RingAnalysis({self.ring.name!r})"

    def _memoize(self, key, compute):
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = compute()
            return value

    def handle(self, bits):
        return self.ring.handle(bits)

    @property
    def zero(self):
        return self.ring.zero_bits

    @property
    def full(self):
        return self.ring.full_bits

    # Ring-level facts

    @property
    def hyperideals(self):
        return self._memoize(
            "hyperideals",
            lambda: tuple(
                P.bits for P in enumerate_hyperideals(self.ring, self.context.cap)
            ),
        )

    @property
    def proper(self):
        return tuple(b for b in self.hyperideals if b != self.full)

    @property
    def nonzero_proper(self):
        return tuple(b for b in self.proper if b != self.zero)

    @property
    def primes(self):
        return self._memoize(
            "primes",
            lambda: tuple(
                P.bits for P in prime_hyperideals(self.ring, self.context.cap)
            ),
        )

    @property
    def maximals(self):
        return self._memoize(
            "maximals",
            lambda: tuple(
                P.bits for P in maximal_hyperideals(self.ring, self.context.cap)
            ),
        )

    @property
    def subrings(self):
        return self._memoize(
            "subrings",
            lambda: tuple(
                K.bits for K in enumerate_subrings(self.ring, self.context.cap)
            ),
        )

    @property
    def nilpotents(self):
        return self._memoize("nilpotents", lambda: nilpotents(self.ring).bits)

    @property
    def regular(self):
        return self._memoize(
            "regular", lambda: regular_elements(self.ring).bits == self.full
        )

    @property
    def characteristic(self):
        return self._memoize("characteristic", lambda: characteristic(self.ring))

    @property
    def units(self):
        if self.ring.one is None:
            raise Inapplicable(f"{self.ring.name} has no designated identity")
        return self._memoize("units", lambda: units(self.ring).bits)

    @property
    def two(self):
        """1 + 1."""
        if self.ring.one is None:
            raise Inapplicable(f"{self.ring.name} has no designated identity")
        return self.ring.plus(self.ring.one, self.ring.one)

    def two_is_unit(self):
        return (self.units >> self.two) & 1 == 1

    def two_in(self, bits):
        return (bits >> self.two) & 1 == 1

    def all_c(self, nonzero_proper=False):
        ideals = self.nonzero_proper if nonzero_proper else self.hyperideals
        return all(self.c(P) for P in ideals)

    # Facts about one hyperideal

    def _fact(self, name, bits, compute):
        return self._memoize(
            (name, bits), lambda: compute(self.ring, self.handle(bits))
        )

    def nonzero(self, bits):
        return bits != self.zero

    def is_proper_ideal(self, bits):
        return (
            bits != 0
            and bits != self.full
            and self._fact("ideal", bits, lambda r, P: bool(is_hyperideal(r, P)))
        )

    def require_proper(self, bits):
        if not self.is_proper_ideal(bits):
            raise Inapplicable(
                f"{self.handle(bits)} is not a proper hyperideal of {self.ring.name}"
            )
        return bits

    def sdf(self, bits):
        return self._fact("sdf", bits, lambda r, P: bool(is_sdf_absorbing(r, P)))

    def weakly_sdf(self, bits):
        return self._fact(
            "weakly", bits, lambda r, P: bool(is_weakly_sdf_absorbing(r, P))
        )

    def sdf_both(self, bits):
        return self._fact("both", bits, lambda r, P: bool(sdf_both_membership(r, P)))

    def no_factorization(self, bits):
        return self._fact(
            "factorization", bits, lambda r, P: bool(no_sdf_factorization(r, P))
        )

    def c(self, bits):
        return self._fact(
            "C", bits, lambda r, P: bool(is_c_hyperideal(r, P, self.context.cap))
        )

    def strong_c(self, bits):
        return self._fact(
            "strongC",
            bits,
            lambda r, P: bool(is_strong_c_hyperideal(r, P, self.context.cap)),
        )

    def prime(self, bits):
        return bits in self.primes

    def weakly_prime(self, bits):
        return self._fact("weaklyPrime", bits, lambda r, P: bool(is_weakly_prime(r, P)))

    def radical(self, bits):
        return self._fact(
            "radical", bits, lambda r, P: radical(r, P, self.context.cap).bits
        )

    def principal(self, bits):
        return self._fact("principal", bits, lambda r, P: bool(is_principal(r, P)))

    def quotient_char(self, bits):
        return self._fact("qchar", bits, quotient_characteristic)

    def squares_hit_zero(self, bits, nonzero_only=False):
        """x^2 - y^2 inside P forces 0 into x^2 - y^2."""

        def compute(ring, P):
            elements = [
                x for x in range(ring.order) if not nonzero_only or x != ring.zero
            ]
            for x in elements:
                for y in elements:
                    diff = ring.diff_bits(ring.square_bits(x), ring.square_bits(y))
                    if diff & ~P.bits == 0 and not diff & ring.zero_bits:
                        return False
            return True

        return self._fact(("squares", nonzero_only), bits, compute)

    def quotient(self, bits):
        """(H/Q, coset index of each element), or Inapplicable."""

        def compute(ring, Q):
            try:
                return quotient_ring(ring, Q), coset_map(ring, Q)
            except HyperringError as e:
                return e

        result = self._fact("quotient", bits, compute)
        if isinstance(result, Exception):
            raise Inapplicable(str(result))
        return result

    def matrix(self, m):
        """The hypermatrix handle M_m(H)."""
        return self._memoize(
            ("matrix", m),
            lambda: MatrixRingHandle(self.ring, m, cap=self.context.matrix_cap),
        )

    def matrix_sdf(self, m, bits):
        return self._fact(
            ("matrix", m),
            bits,
            lambda r, P: bool(matrix_sdf_absorbing(self.matrix(m), P)),
        )

    def corner_sdf(self, m, bits):
        return self._fact(
            ("corner", m),
            bits,
            lambda r, P: bool(corner_sdf_absorbing(self.matrix(m), P)),
        )


class Instance:
    """One thing a clause is evaluated on.

    ``rings`` and ``ideals`` describe the instance for counterexample reports;
    every other keyword is available as an attribute.
    """

    def __init__(self, id, rings, ideals, **values):
        self.id = id
        self.rings = rings
        self.ideals = ideals
        self._values = values

    def __getattr__(self, name):
        try:
            return self.__dict__["_values"][name]
        except KeyError:
            raise AttributeError(name)

    def __repr__(self):
        return f"Instance({self.id!r})"

    def descriptor(self):
        """The rings and ideal members needed to replay the instance."""
        return {
            "instance": self.id,
            "rings": {
                label: serialize_ring(ring) for label, ring in self.rings.items()
            },
            "ideals": {
                label: {"ring": ring_label, "members": list(members_of(bits))}
                for label, (ring_label, bits) in self.ideals.items()
            },
        }


def _fmt(bits):
    return "{" + ",".join(str(x) for x in members_of(bits)) + "}"


def _product_bits(n2, b1, b2):
    bits = 0
    for a in members_of(b1):
        bits |= b2 << (a * n2)
    return bits


def _intersection(family):
    bits = family[0]
    for P in family[1:]:
        bits &= P
    return bits


class HarnessContext:
    """A corpus with the caches and derived instances shared by all theorems."""

    def __init__(
        self,
        corpus,
        cap=ENUMERATION_CAP,
        product_cap=PRODUCT_CAP,
        matrix_cap=MATRIX_CAP,
        matrix_m=MATRIX_M,
        family_max=FAMILY_MAX,
    ):
        self.corpus = list(corpus)
        self.cap = cap
        self.product_cap = product_cap
        self.matrix_cap = matrix_cap
        self.matrix_m = matrix_m
        self.family_max = family_max
        self.rings = [
            i for i in self.corpus if i.origin != "matrix" and i.ring.order <= cap
        ]
        plain = [i for i in self.corpus if i.origin != "matrix"]
        skipped = len(plain) - len(self.rings)
        if skipped:
            logger.warning(f"{skipped} rings above the enumeration cap are not checked")
        self._analyses = {}
        self._instances = {}
        self._subrings = {}

    def analysis(self, ring):
        result = self._analyses.get(ring)
        if result is None:
            result = self._analyses[ring] = RingAnalysis(ring, self)
        return result

    def instances(self, kind):
        result = self._instances.get(kind)
        if result is None:
            generator = getattr(self, "_" + kind.replace("-", "_"))
            result = self._instances[kind] = list(generator())
            logger.debug(f"{len(result)} instances of kind {kind}")
        return result

    def subring_of(self, ring, K):
        key = (ring, K)
        if key not in self._subrings:
            try:
                self._subrings[key] = subring(ring, ring.handle(K))
            except HyperringError as e:
                self._subrings[key] = e
        result = self._subrings[key]
        if isinstance(result, Exception):
            raise Inapplicable(str(result))
        return result

    # Instance generators, one per kind

    def _ring(self):
        for i in self.rings:
            yield Instance(i.id, {"H": i.ring}, {}, A=self.analysis(i.ring))

    def _ideal(self):
        for i in self.rings:
            A = self.analysis(i.ring)
            for P in A.proper:
                yield Instance(
                    f"{i.id} P={_fmt(P)}", {"H": i.ring}, {"P": ("H", P)}, A=A, P=P
                )

    def _family(self):
        for i in self.rings:
            A = self.analysis(i.ring)
            for k in range(2, self.family_max + 1):
                for family in itertools.combinations(A.proper, k):
                    yield Instance(
                        f"{i.id} family={','.join(_fmt(P) for P in family)}",
                        {"H": i.ring},
                        {f"P{j + 1}": ("H", P) for j, P in enumerate(family)},
                        A=A,
                        family=family,
                    )

    def _homs(self):
        homs = []
        by_id = {i.id: i.ring for i in self.corpus if i.origin != "matrix"}
        for i in self.rings:
            homs.append((f"id[{i.id}]", identity_hom(i.ring)))
            A = self.analysis(i.ring)
            for Q in A.proper:
                try:
                    target, index = A.quotient(Q)
                except Inapplicable:
                    continue
                homs.append(
                    (
                        f"{i.id}->{i.id}/{_fmt(Q)}",
                        check_good_hom(index, i.ring, target),
                    )
                )
            if i.origin == "product" and all(f in by_id for f in i.factors):
                H1, H2 = (by_id[f] for f in i.factors)
                for side in (0, 1):
                    homs.append(
                        (f"{i.id}->{i.factors[side]}", product_projection(H1, H2, side))
                    )
        return [(name, theta) for name, theta in homs if theta.target.order <= self.cap]

    def _hom_target(self):
        for name, theta in self.instances("homs"):
            A1 = self.analysis(theta.source)
            A2 = self.analysis(theta.target)
            for P2 in A2.proper:
                yield Instance(
                    f"{name} P2={_fmt(P2)}",
                    {"H1": theta.source, "H2": theta.target},
                    {"P2": ("H2", P2)},
                    theta=theta,
                    A1=A1,
                    A2=A2,
                    P2=P2,
                )

    def _hom_source(self):
        for name, theta in self.instances("homs"):
            A1 = self.analysis(theta.source)
            A2 = self.analysis(theta.target)
            for P1 in A1.proper:
                yield Instance(
                    f"{name} P1={_fmt(P1)}",
                    {"H1": theta.source, "H2": theta.target},
                    {"P1": ("H1", P1)},
                    theta=theta,
                    A1=A1,
                    A2=A2,
                    P1=P1,
                )

    def _subring(self):
        for i in self.rings:
            A = self.analysis(i.ring)
            for P in A.proper:
                for K in A.subrings:
                    yield Instance(
                        f"{i.id} P={_fmt(P)} K={_fmt(K)}",
                        {"H": i.ring},
                        {"P": ("H", P), "K": ("H", K)},
                        A=A,
                        P=P,
                        K=K,
                    )

    def _quotient(self):
        for i in self.rings:
            A = self.analysis(i.ring)
            for P in A.proper:
                for Q in A.hyperideals:
                    if Q & ~P == 0:
                        yield Instance(
                            f"{i.id} P={_fmt(P)} Q={_fmt(Q)}",
                            {"H": i.ring},
                            {"P": ("H", P), "Q": ("H", Q)},
                            A=A,
                            P=P,
                            Q=Q,
                        )

    def _pairs(self):
        factors = [
            i for i in self.rings if i.origin != "product" and i.ring.order > 1
        ]
        pairs = []
        for left, right in itertools.product(factors, repeat=2):
            order = left.ring.order * right.ring.order
            if order > self.product_cap or order > self.cap:
                continue
            product = product_ring(left.ring, right.ring, validate=False)
            pairs.append((left, right, product))
        return pairs

    def _product(self):
        for left, right, product in self.instances("pairs"):
            yield Instance(
                f"{left.id} x {right.id}",
                {"H1": left.ring, "H2": right.ring},
                {},
                A1=self.analysis(left.ring),
                A2=self.analysis(right.ring),
                AP=self.analysis(product),
            )

    def _product_left(self):
        for left, right, product in self.instances("pairs"):
            A1 = self.analysis(left.ring)
            for P1 in A1.proper:
                yield Instance(
                    f"{left.id} x {right.id} P1={_fmt(P1)}",
                    {"H1": left.ring, "H2": right.ring},
                    {"P1": ("H1", P1)},
                    A1=A1,
                    A2=self.analysis(right.ring),
                    AP=self.analysis(product),
                    P1=P1,
                )

    def _product_pair(self):
        for left, right, product in self.instances("pairs"):
            A1 = self.analysis(left.ring)
            A2 = self.analysis(right.ring)
            for P1 in A1.proper:
                for P2 in A2.proper:
                    yield Instance(
                        f"{left.id} x {right.id} P1={_fmt(P1)} P2={_fmt(P2)}",
                        {"H1": left.ring, "H2": right.ring},
                        {"P1": ("H1", P1), "P2": ("H2", P2)},
                        A1=A1,
                        A2=A2,
                        AP=self.analysis(product),
                        P1=P1,
                        P2=P2,
                    )

    def _matrix(self):
        explicit = [i for i in self.corpus if i.origin == "matrix"]
        if explicit:
            bases = [(i.ring, i.matrix.m) for i in explicit if i.ring.order <= self.cap]
        else:
            bases = []
            for i in self.rings:
                if i.ring.order ** (self.matrix_m**2) <= self.matrix_cap:
                    bases.append((i.ring, self.matrix_m))
        for ring, m in bases:
            A = self.analysis(ring)
            try:
                A.matrix(m)
            except SizeCapError:
                continue
            for P in A.proper:
                yield Instance(
                    f"M{m}({ring.name}) P={_fmt(P)}",
                    {"H": ring},
                    {"P": ("H", P)},
                    A=A,
                    m=m,
                    P=P,
                )


@dataclass(frozen=True)
class Clause:
    """A premise and conclusion over instances of one kind."""

    name: str
    premise: Callable
    conclusion: Callable
    kind: str = None


@dataclass(frozen=True)
class TheoremCase:
    """A registered theorem.

    ``gated`` theorems decide the exit status; the others are reported only.
    ``unital`` theorems are inapplicable to instances with a ring that has no
    designated identity.
    """

    id: str
    description: str
    anchor: str
    kind: str
    clauses: tuple
    gated: bool = True
    unital: bool = True


@dataclass
class ClauseCount:
    instances_scanned: int = 0
    premises_satisfied: int = 0
    conclusions_held: int = 0
    inapplicable: int = 0


@dataclass
class TheoremVerdict:
    """The outcome of checking one theorem over a corpus.

    The counts are over (instance, clause) evaluations. Inapplicable
    evaluations are included in ``instances_scanned``.
    """

    id: str
    description: str = ""
    gated: bool = True
    instances_scanned: int = 0
    premises_satisfied: int = 0
    conclusions_held: int = 0
    inapplicable: int = 0
    counterexamples: list = field(default_factory=list)
    clauses: dict = field(default_factory=dict)

    @property
    def vacuous(self):
        return self.premises_satisfied == 0

    def as_dict(self):
        return {
            "id": self.id,
            "description": self.description,
            "gated": self.gated,
            "instancesScanned": self.instances_scanned,
            "premisesSatisfied": self.premises_satisfied,
            "conclusionsHeld": self.conclusions_held,
            "inapplicable": self.inapplicable,
            "vacuous": self.vacuous,
            "counterexamples": self.counterexamples,
            "clauses": {
                name: {
                    "instancesScanned": c.instances_scanned,
                    "premisesSatisfied": c.premises_satisfied,
                    "conclusionsHeld": c.conclusions_held,
                    "inapplicable": c.inapplicable,
                }
                for name, c in self.clauses.items()
            },
        }


def equivalence(hypothesis, statements, kind=None):
    """One clause per ordered pair of statements, under a shared hypothesis."""
    clauses = []
    for (a, fa), (b, fb) in itertools.permutations(statements, 2):
        clauses.append(
            Clause(
                f"{a}=>{b}",
                premise=lambda i, fa=fa: hypothesis(i) and fa(i),
                conclusion=fb,
                kind=kind,
            )
        )
    return tuple(clauses)


def _implication(premise, conclusion, name="", kind=None):
    return (Clause(name, premise, conclusion, kind),)


# Predicates shared by several theorems


def _sdf_strong_c_nonzero(i):
    return i.A.nonzero(i.P) and i.A.sdf(i.P) and i.A.strong_c(i.P)


def _prime_conclusion(i):
    return i.A.prime(i.P)


def _two_unit_premise(i):
    return _sdf_strong_c_nonzero(i) and i.A.two_is_unit()


def _radical_fixed(i):
    return all(i.A.radical(P) == P for P in i.A.hyperideals)


def _no_prime_chain(i):
    primes = i.A.primes
    return not any(P != Q and P & ~Q == 0 for P in primes for Q in primes)


def _nilradical_quotient_regular(i):
    A = i.A
    upsilon = A.nilpotents
    ring = A.ring
    if not is_hyperideal(ring, ring.handle(upsilon)):
        raise Inapplicable(f"the nilpotents of {ring.name} are not a hyperideal")
    try:
        quotient = quotient_ring(ring, ring.handle(upsilon))
    except HyperringError as e:
        raise Inapplicable(str(e))
    return i.A.context.analysis(quotient).regular


def _local_c(i):
    return len(i.A.maximals) == 1 and i.A.all_c(nonzero_proper=True)


def _all_nonzero_proper_sdf(i):
    return all(i.A.sdf(P) for P in i.A.nonzero_proper)


def _unique_principal_square_zero(i):
    (M,) = i.A.maximals
    ring = i.A.ring
    return (
        i.A.primes == (M,)
        and i.A.principal(M)
        and ring.product_bits(M, M) == ring.zero_bits
    )


def _odd_maximals(A):
    return [M for M in A.maximals if A.quotient_char(M) != 2]


def _single_odd_maximal(i):
    return i.A.regular and i.A.all_c() and len(_odd_maximals(i.A)) == 1


def _irredundant_primes(i):
    A, family = i.A, i.family
    if not all(A.prime(P) and A.strong_c(P) for P in family):
        return False
    whole = _intersection(family)
    return all(
        _intersection(family[:j] + family[j + 1:]) != whole for j in range(len(family))
    )


def _coprime_strong_c(i):
    A, family = i.A, i.family
    ring = A.ring
    if not all(A.strong_c(P) for P in family):
        return False
    return all(
        ring.sum_bits(P, Q) == ring.full_bits
        for P, Q in itertools.combinations(family, 2)
    )


def _intersection_sdf(i):
    bits = i.A.require_proper(_intersection(i.family))
    return i.A.sdf(bits)


def _at_most_one_odd(i):
    return sum(1 for P in i.family if i.A.quotient_char(P) != 2) <= 1


def _preimage(i):
    theta = i.theta
    bits = 0
    for x, v in enumerate(theta.mapping):
        if (i.P2 >> v) & 1:
            bits |= 1 << x
    return i.A1.require_proper(bits)


def _image(i):
    bits = 0
    for x in members_of(i.P1):
        bits |= 1 << i.theta.mapping[x]
    return i.A2.require_proper(bits)


def _hom_nonzero_target(i):
    return (
        i.theta.good
        and i.A2.nonzero(i.P2)
        and i.A2.sdf(i.P2)
        and i.A2.strong_c(i.P2)
        and i.A1.strong_c(_preimage(i))
    )


def _hom_injective_target(i):
    return (
        i.theta.good
        and i.theta.injective
        and i.A2.sdf(i.P2)
        and i.A2.strong_c(i.P2)
        and i.A1.strong_c(_preimage(i))
    )


def _hom_surjective_source(i):
    return (
        i.theta.good
        and i.theta.surjective
        and i.theta.kernel.bits & ~i.P1 == 0
        and i.A1.sdf(i.P1)
        and i.A1.strong_c(i.P1)
        and i.A2.strong_c(_image(i))
    )


def _subring_sdf(i):
    ring, inclusion = i.A.context.subring_of(i.A.ring, i.K)
    bits = 0
    for position, x in enumerate(inclusion.mapping):
        if (i.P >> x) & 1:
            bits |= 1 << position
    AK = i.A.context.analysis(ring)
    AK.require_proper(bits)
    return AK.sdf(bits)


def _quotient_ideal(i):
    ring, index = i.A.quotient(i.Q)
    bits = 0
    for x in members_of(i.P):
        bits |= 1 << index[x]
    return i.A.context.analysis(ring), bits


def _quotient_sdf(i):
    AQ, bits = _quotient_ideal(i)
    AQ.require_proper(bits)
    return AQ.sdf(bits)


def _sdf_strong_c(i):
    return i.A.sdf(i.P) and i.A.strong_c(i.P)


def _strict(i):
    return i.Q != i.P and i.A.strong_c(i.P)


def _product_of(i, P1, P2):
    return _product_bits(i.A2.ring.order, P1, P2)


def _pair_hypothesis(i):
    return (
        i.A1.nonzero(i.P1)
        and i.A2.nonzero(i.P2)
        and i.A1.strong_c(i.P1)
        and i.A2.strong_c(i.P2)
    )


def _pair_product_sdf(i):
    return i.AP.sdf(_product_of(i, i.P1, i.P2))


def _pair_factors_sdf(i):
    two = i.A1.two_in(i.P1) or i.A2.two_in(i.P2)
    return i.A1.sdf(i.P1) and i.A2.sdf(i.P2) and two


def _left_hypothesis(i):
    return (
        i.A1.nonzero(i.P1)
        and i.A1.strong_c(i.P1)
        and any(i.A2.strong_c(P) for P in i.A2.nonzero_proper)
    )


def _left_times_whole(i):
    return _product_of(i, i.P1, i.A2.full)


def _zero_times_whole(i):
    return _product_bits(i.A2.ring.order, i.A1.zero, i.A2.full)


def _weak_not_sdf(A, P):
    return A.strong_c(P) and A.weakly_sdf(P) and not A.sdf(P)


def _build_registry():
    cases = [
        TheoremCase(
            "P0",
            "a nonzero prime strong C-hyperideal is sdf-absorbing",
            "every nonzero prime strong C-hyperideal is sdf-absorbing",
            "ideal",
            _implication(
                lambda i: i.A.nonzero(i.P) and i.A.prime(i.P) and i.A.strong_c(i.P),
                lambda i: i.A.sdf(i.P),
            ),
        ),
        TheoremCase(
            "T1",
            "a nonzero sdf-absorbing C-hyperideal equals its radical",
            "then rad(P)=P",
            "ideal",
            _implication(
                lambda i: i.A.nonzero(i.P) and i.A.sdf(i.P) and i.A.c(i.P),
                lambda i: i.A.radical(i.P) == i.P,
            ),
        ),
        TheoremCase(
            "T2",
            "in characteristic 2 a radical strong C-hyperideal is sdf-absorbing",
            "Let H be of characteristic 2",
            "ideal",
            _implication(
                lambda i: i.A.characteristic == 2
                and i.A.strong_c(i.P)
                and i.A.radical(i.P) == i.P,
                lambda i: i.A.sdf(i.P),
            ),
        ),
        TheoremCase(
            "T3",
            "for sdf-absorbing strong C P: both-membership, 1+1 in P and"
            " char(H/P) = 2 are equivalent",
            "the hyperring H/P is of characteristic 2",
            "ideal",
            equivalence(
                _sdf_strong_c,
                [
                    ("both", lambda i: i.A.sdf_both(i.P)),
                    ("two", lambda i: i.A.two_in(i.P)),
                    ("char2", lambda i: i.A.quotient_char(i.P) == 2),
                ],
            ),
        ),
        TheoremCase(
            "T4",
            "a strong C P is sdf-absorbing iff no x, y outside P with x o y in P"
            " solve a - b = x, a + b = y",
            "satisfy both equations",
            "ideal",
            equivalence(
                lambda i: i.A.strong_c(i.P),
                [
                    ("sdf", lambda i: i.A.sdf(i.P)),
                    ("no-factorization", lambda i: i.A.no_factorization(i.P)),
                ],
            ),
        ),
        TheoremCase(
            "L5",
            "when every hyperideal is a C-hyperideal, H is regular iff every"
            " hyperideal equals its radical",
            "every hyperideal of H is equal to its radical",
            "ring",
            equivalence(
                lambda i: i.A.all_c(),
                [("regular", lambda i: i.A.regular), ("radical", _radical_fixed)],
            ),
        ),
        TheoremCase(
            "C6",
            "in a regular ring of characteristic 2 every nonzero proper strong"
            " C-hyperideal is sdf-absorbing",
            "then every nonzero proper strong",
            "ideal",
            _implication(
                lambda i: i.A.characteristic == 2
                and i.A.regular
                and i.A.nonzero(i.P)
                and i.A.strong_c(i.P),
                lambda i: i.A.sdf(i.P),
            ),
        ),
        TheoremCase(
            "T7",
            "if every nonzero proper hyperideal is an sdf-absorbing C-hyperideal,"
            " H/nilpotents is regular and primes form no chains",
            "Then H/Upsilon is regular",
            "ring",
            (
                Clause(
                    "regular-quotient",
                    lambda i: all(
                        i.A.sdf(P) and i.A.c(P) for P in i.A.nonzero_proper
                    ),
                    _nilradical_quotient_regular,
                ),
                Clause(
                    "prime-chains",
                    lambda i: all(
                        i.A.sdf(P) and i.A.c(P) for P in i.A.nonzero_proper
                    ),
                    _no_prime_chain,
                ),
            ),
        ),
        TheoremCase(
            "T8",
            "in a local ring whose nonzero proper hyperideals are C-hyperideals,"
            " all are sdf-absorbing iff the maximal P is the only prime, principal"
            " and P o P = {0}",
            "P is principal and P^2={0}",
            "ring",
            equivalence(
                _local_c,
                [
                    ("all-sdf", _all_nonzero_proper_sdf),
                    ("principal-square-zero", _unique_principal_square_zero),
                ],
            ),
        ),
        TheoremCase(
            "T9",
            "a regular ring with all hyperideals C and exactly one maximal I with"
            " char(H/I) != 2 has every proper hyperideal sdf-absorbing",
            "only one maximal hyperideal I",
            "ring",
            (
                Clause(
                    "stated",
                    _single_odd_maximal,
                    lambda i: all(i.A.sdf(P) for P in i.A.proper),
                ),
                Clause(
                    "narrow",
                    _single_odd_maximal,
                    lambda i: i.A.sdf(_odd_maximals(i.A)[0]),
                ),
            ),
        ),
        TheoremCase(
            "T10",
            "for irredundant prime strong C P_1..P_k the intersection is"
            " sdf-absorbing iff at most one H/P_i is not of characteristic 2",
            "the intersection of any n-1",
            "family",
            equivalence(
                _irredundant_primes,
                [("sdf", _intersection_sdf), ("char2", _at_most_one_odd)],
            ),
        ),
        TheoremCase(
            "T11",
            "sdf-absorption passes along good homomorphisms",
            "theta^{-1}(P_2) is an sdf-absorbing",
            "hom-target",
            (
                Clause(
                    "a",
                    _hom_nonzero_target,
                    lambda i: i.A1.sdf(_preimage(i)),
                    kind="hom-target",
                ),
                Clause(
                    "b",
                    _hom_injective_target,
                    lambda i: i.A1.sdf(_preimage(i)),
                    kind="hom-target",
                ),
                Clause(
                    "c",
                    _hom_surjective_source,
                    lambda i: i.A2.sdf(_image(i)),
                    kind="hom-source",
                ),
            ),
        ),
        TheoremCase(
            "T12",
            "sdf-absorption passes to sub-hyperrings and to quotients",
            "P cap K is an sdf-absorbing",
            "quotient",
            (
                Clause("subring", _sdf_strong_c, _subring_sdf, kind="subring"),
                Clause("quotient", _sdf_strong_c, _quotient_sdf, kind="quotient"),
                Clause(
                    "strict=>",
                    lambda i: _strict(i) and i.A.sdf(i.P),
                    _quotient_sdf,
                    kind="quotient",
                ),
                Clause(
                    "strict<=",
                    lambda i: _strict(i) and _quotient_sdf(i),
                    lambda i: i.A.sdf(i.P),
                    kind="quotient",
                ),
            ),
        ),
        TheoremCase(
            "T13",
            "for coprime strong C P_1..P_k the intersection is sdf-absorbing iff"
            " at most one H/P_i is not of characteristic 2",
            "are coprime strong C-hyperideals",
            "family",
            equivalence(
                _coprime_strong_c,
                [("sdf", _intersection_sdf), ("char2", _at_most_one_odd)],
            ),
        ),
        TheoremCase(
            "T14",
            "if M_m(P) is sdf-absorbing in M_m(H) then P is sdf-absorbing",
            "M_m(P) is an sdf-absorbing",
            "matrix",
            (
                Clause(
                    "full", lambda i: i.A.matrix_sdf(i.m, i.P), lambda i: i.A.sdf(i.P)
                ),
                Clause(
                    "corner",
                    lambda i: True,
                    lambda i: i.A.corner_sdf(i.m, i.P) == i.A.sdf(i.P),
                ),
                Clause(
                    "agreement",
                    lambda i: i.A.matrix_sdf(i.m, i.P),
                    lambda i: i.A.corner_sdf(i.m, i.P),
                ),
            ),
            unital=False,
        ),
        TheoremCase(
            "T15",
            "a nonzero sdf-absorbing strong C P with 1+1 a unit is prime",
            "such that 1+1 in U(H)",
            "ideal",
            _implication(_two_unit_premise, _prime_conclusion),
        ),
        TheoremCase(
            "T16",
            "P1 x P2 is sdf-absorbing iff both are and 1+1 lies in P1 or P2",
            "1_{H_1}+1_{H_1} in P_1 or",
            "product-pair",
            equivalence(
                _pair_hypothesis,
                [("product", _pair_product_sdf), ("factors", _pair_factors_sdf)],
            ),
        ),
        TheoremCase(
            "T17",
            "P1 is sdf-absorbing iff P1 x H2 is",
            "P_1 x H_2 is an sdf-absorbing",
            "product-left",
            equivalence(
                _left_hypothesis,
                [
                    ("factor", lambda i: i.A1.sdf(i.P1)),
                    ("product", lambda i: i.AP.sdf(_left_times_whole(i))),
                ],
            ),
        ),
        TheoremCase(
            "T18",
            "when {0} x H2 is strong C: {0} sdf-absorbing with no nonzero"
            " nilpotents in H1 iff {0} x H2 is sdf-absorbing",
            "nilpotent elements of H_1 is equal",
            "product",
            equivalence(
                lambda i: i.AP.strong_c(_zero_times_whole(i)),
                [
                    (
                        "factor",
                        lambda i: i.A1.sdf(i.A1.zero) and i.A1.nilpotents == i.A1.zero,
                    ),
                    ("product", lambda i: i.AP.sdf(_zero_times_whole(i))),
                ],
            ),
        ),
        TheoremCase(
            "W1",
            "a strong C P that is weakly sdf-absorbing but not sdf-absorbing lies"
            " in the nilpotents",
            "then P subseteq Upsilon",
            "ideal",
            _implication(
                lambda i: _weak_not_sdf(i.A, i.P),
                lambda i: i.P & ~i.A.nilpotents == 0,
            ),
        ),
        TheoremCase(
            "W2",
            "as stated: a nonzero sdf-absorbing strong C P with 1+1 a unit is prime",
            "Then P is a prime hyperideal",
            "ideal",
            _implication(_two_unit_premise, _prime_conclusion),
        ),
        TheoremCase(
            "W3",
            "for nonzero weakly sdf-absorbing strong C P1: P1 sdf, P1 x H2 sdf and"
            " P1 x H2 weakly sdf are equivalent",
            "is a weakly sdf-absorbing hyperideal of H_1 x H_2",
            "product-left",
            equivalence(
                lambda i: i.A1.nonzero(i.P1)
                and i.A1.weakly_sdf(i.P1)
                and i.A1.strong_c(i.P1),
                [
                    ("factor", lambda i: i.A1.sdf(i.P1)),
                    ("product", lambda i: i.AP.sdf(_left_times_whole(i))),
                    ("product-weakly", lambda i: i.AP.weakly_sdf(_left_times_whole(i))),
                ],
            ),
        ),
        TheoremCase(
            "W4",
            "for weakly-but-not sdf-absorbing strong C P1, P2: four conditions on"
            " P1 x P2 are equivalent",
            "then (0,0) in a^2-b^2",
            "product-pair",
            equivalence(
                lambda i: _weak_not_sdf(i.A1, i.P1) and _weak_not_sdf(i.A2, i.P2),
                [
                    (
                        "i",
                        lambda i: i.AP.weakly_sdf(_product_of(i, i.P1, i.P2))
                        and not i.AP.sdf(_product_of(i, i.P1, i.P2)),
                    ),
                    ("ii", lambda i: i.AP.weakly_sdf(_product_of(i, i.P1, i.P2))),
                    (
                        "iii",
                        lambda i: i.A1.squares_hit_zero(i.P1)
                        and i.A2.squares_hit_zero(i.P2),
                    ),
                    (
                        "iv",
                        lambda i: i.AP.squares_hit_zero(
                            _product_of(i, i.P1, i.P2), nonzero_only=True
                        ),
                    ),
                ],
            ),
        ),
        TheoremCase(
            "W2-conj",
            "extrapolated: a nonzero weakly sdf-absorbing strong C P with 1+1 a"
            " unit is weakly prime",
            "Then P is a prime hyperideal",
            "ideal",
            _implication(
                lambda i: i.A.nonzero(i.P)
                and i.A.weakly_sdf(i.P)
                and i.A.strong_c(i.P)
                and i.A.two_is_unit(),
                lambda i: i.A.weakly_prime(i.P),
            ),
            gated=False,
        ),
    ]
    return {case.id: case for case in cases}


#: The theorems, in report order.
REGISTRY = _build_registry()


def get_theorem(theorem_id):
    try:
        return REGISTRY[theorem_id]
    except KeyError:
        raise UnknownTheoremError(
            f"unknown theorem '{theorem_id}'; known: {', '.join(REGISTRY)}"
        )


def _context(corpus, **settings):
    if isinstance(corpus, HarnessContext):
        return corpus
    if isinstance(corpus, (str, CorpusSpec)):
        corpus = generate_corpus(corpus)
    return HarnessContext(corpus, **settings)


def _evaluations(case, context):
    """(clause, instance) pairs in (instance kind, instance, clause) order."""
    kinds = []
    for clause in case.clauses:
        kind = clause.kind or case.kind
        if kind not in kinds:
            kinds.append(kind)
    for kind in kinds:
        clauses = [c for c in case.clauses if (c.kind or case.kind) == kind]
        for instance in context.instances(kind):
            for clause in clauses:
                yield clause, instance


def _require_identity(instance):
    for label, ring in instance.rings.items():
        if ring.one is None:
            raise Inapplicable(f"{label}={ring.name} has no designated identity")


def _evaluate(case, clause, instance):
    """None if inapplicable, else (premise, conclusion or None)."""
    try:
        if case.unital:
            _require_identity(instance)
        if not clause.premise(instance):
            return False, None
        return True, bool(clause.conclusion(instance))
    except Inapplicable as e:
        logger.debug(f"{instance.id}: {e}")
        return None


def _counterexample(case, clause, instance):
    record = {"theorem": case.id, "clause": clause.name}
    record.update(instance.descriptor())
    return record


def check_theorem(theorem_id, corpus, **settings):
    """Check one theorem over every instance derivable from the corpus.

    Parameters
    ----------
    theorem_id : str
    corpus : [RingInstance], str or HarnessContext
        A corpus, a corpus description or a context shared between calls.

    Returns
    -------
    TheoremVerdict
    """
    case = get_theorem(theorem_id)
    context = _context(corpus, **settings)
    verdict = TheoremVerdict(case.id, case.description, case.gated)
    for clause in case.clauses:
        verdict.clauses[clause.name] = ClauseCount()
    for clause, instance in _evaluations(case, context):
        counts = verdict.clauses[clause.name]
        counts.instances_scanned += 1
        outcome = _evaluate(case, clause, instance)
        if outcome is None:
            counts.inapplicable += 1
            continue
        premise, conclusion = outcome
        if not premise:
            continue
        counts.premises_satisfied += 1
        if conclusion:
            counts.conclusions_held += 1
        else:
            verdict.counterexamples.append(_counterexample(case, clause, instance))
            logger.warning(f"{case.id} {clause.name} fails on {instance.id}")
    for counts in verdict.clauses.values():
        verdict.instances_scanned += counts.instances_scanned
        verdict.premises_satisfied += counts.premises_satisfied
        verdict.conclusions_held += counts.conclusions_held
        verdict.inapplicable += counts.inapplicable
    logger.info(
        f"{case.id}: {verdict.instances_scanned} scanned, "
        f"{verdict.premises_satisfied} premises, "
        f"{len(verdict.counterexamples)} counterexamples"
    )
    return verdict


def run_all(corpus, **settings):
    """Check every registered theorem, in registry order."""
    context = _context(corpus, **settings)
    return [check_theorem(theorem_id, context) for theorem_id in REGISTRY]


def exit_status(verdicts):
    """1 if a gated theorem has a counterexample, else 0."""
    return 1 if any(v.gated and v.counterexamples for v in verdicts) else 0


def search_counterexample(theorem_id, family, **settings):
    """The first counterexample to a theorem over a family of rings, or None.

    Instances are visited in the same order as :func:`check_theorem` and the
    search stops at the first failure.
    """
    case = get_theorem(theorem_id)
    context = _context(family, **settings)
    for clause, instance in _evaluations(case, context):
        outcome = _evaluate(case, clause, instance)
        if outcome is not None and outcome[0] and not outcome[1]:
            return _counterexample(case, clause, instance)
    return None

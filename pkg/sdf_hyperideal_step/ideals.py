# -*- coding: utf-8 -*-

"""Hyperideals of a finite multiplicative hyperring and their classification.

Enumeration goes through the additive subgroups of the ring, which are few for
the small abelian groups involved, and keeps those that absorb products. The
remaining predicates (prime, weakly prime, maximal, C and strong C) and the
derived sets (radical, D(A), colon, Jacobson radical) are exhaustive scans over
the enumerated hyperideals or over pairs of elements.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import logging

import numpy as np

from .core import Check, members_of, reaches
from .errors import (
    EmptySubsetError,
    NotAHyperidealError,
    NotProperError,
    SizeCapError,
)

logger = logging.getLogger(__name__)

#: Largest ring order for which hyperideals are enumerated.
ENUMERATION_CAP = 16


@dataclass(frozen=True)
class IdealHandle:
    """A hyperideal of a ring, as produced by this module."""

    members: object
    report: object = field(default=None, compare=False)

    @property
    def bits(self):
        return self.members.bits

    @property
    def ring_id(self):
        return self.members.ring_id

    @property
    def order(self):
        return self.members.order

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def __repr__(self):
        return repr(self.members)


@dataclass(frozen=True)
class ProductFamily:
    """The finite products of elements and the finite sums of such products."""

    ring_id: str
    family: tuple
    sum_closure: tuple


@dataclass(frozen=True)
class ClassificationReport:
    """Every flag computed for one (ring, subset) pair.

    ``witnesses`` maps the name of each failing flag to its counterexample.
    ``sdf_premise_pairs`` and ``weakly_sdf_premise_pairs`` count the pairs of
    nonzero elements that fire the premise of the respective definition.
    """

    is_hyperideal: bool
    is_proper: bool = False
    is_prime: bool = False
    is_weakly_prime: bool = False
    is_maximal: bool = False
    is_c_hyperideal: bool = False
    is_strong_c_hyperideal: bool = False
    is_principal: bool = False
    is_sdf: bool = False
    is_weakly_sdf: bool = False
    radical: object = None
    d_set: object = None
    generator: int = None
    sdf_premise_pairs: int = 0
    weakly_sdf_premise_pairs: int = 0
    witnesses: dict = field(default_factory=dict)

    def flags(self):
        """The flags by their report names, in a fixed order."""
        return {
            "hyperideal": self.is_hyperideal,
            "proper": self.is_proper,
            "prime": self.is_prime,
            "weaklyPrime": self.is_weakly_prime,
            "maximal": self.is_maximal,
            "C": self.is_c_hyperideal,
            "strongC": self.is_strong_c_hyperideal,
            "principal": self.is_principal,
            "sdf": self.is_sdf,
            "weaklySdf": self.is_weakly_sdf,
        }


def _check_cap(ring, cap, what):
    if ring.order > cap:
        raise SizeCapError(
            f"{what} of {ring.name} (order {ring.order}) exceeds the cap of {cap}"
        )


def is_hyperideal(ring, S):
    """Whether S is closed under subtraction and absorbs r o x for all r in H.

    Returns
    -------
    Check
        The witness is ``("difference", x, y)`` or ``("absorb", r, x)``.
    """
    ring.owns(S)
    if S.bits == 0:
        raise EmptySubsetError("a hyperideal is nonempty")
    bits = S.bits
    members = members_of(bits)
    for x in members:
        for y in members:
            if not (bits >> ring.minus(x, y)) & 1:
                return Check(False, ("difference", x, y))
    if ring.product_bits(ring.full_bits, bits) & ~bits:
        for r in range(ring.order):
            for x in members:
                if ring.mul[r][x] & ~bits:
                    return Check(False, ("absorb", r, x))
    return Check(True)


def require_hyperideal(ring, S):
    check = is_hyperideal(ring, S)
    if not check:
        raise NotAHyperidealError(
            f"{S} is not a hyperideal of {ring.name}", check.witness
        )


def require_proper(ring, P):
    require_hyperideal(ring, P)
    if P.bits == ring.full_bits:
        raise NotProperError(f"{P} is the whole of {ring.name}")


def subgroup_closure(ring, bits):
    """The additive subgroup generated by ``bits`` together with zero."""
    bits |= ring.zero_bits
    while True:
        grown = bits | ring.sum_bits(bits, bits) | ring.neg_bits(bits)
        if grown == bits:
            return bits
        bits = grown


@lru_cache(maxsize=1024)
def _subgroup_bits(ring):
    found = {subgroup_closure(ring, 0)}
    frontier = list(found)
    while frontier:
        new = []
        for group in frontier:
            for x in range(ring.order):
                if (group >> x) & 1:
                    continue
                bigger = subgroup_closure(ring, group | (1 << x))
                if bigger not in found:
                    found.add(bigger)
                    new.append(bigger)
        frontier = new
    logger.debug(f"{ring.name}: {len(found)} additive subgroups")
    return tuple(sorted(found))


def additive_subgroups(ring, cap=ENUMERATION_CAP):
    """All additive subgroups, sorted by bit pattern."""
    _check_cap(ring, cap, "subgroup enumeration")
    return [ring.handle(bits) for bits in _subgroup_bits(ring)]


@lru_cache(maxsize=1024)
def _hyperideal_bits(ring):
    full = ring.full_bits
    result = tuple(
        bits
        for bits in _subgroup_bits(ring)
        if ring.product_bits(full, bits) & ~bits == 0
    )
    logger.debug(f"{ring.name}: {len(result)} hyperideals")
    return result


def enumerate_hyperideals(ring, cap=ENUMERATION_CAP):
    """Every hyperideal of the ring, sorted by bit pattern."""
    _check_cap(ring, cap, "hyperideal enumeration")
    return [IdealHandle(ring.handle(bits)) for bits in _hyperideal_bits(ring)]


def proper_hyperideals(ring, cap=ENUMERATION_CAP):
    return [P for P in enumerate_hyperideals(ring, cap) if P.bits != ring.full_bits]


def enumerate_subrings(ring, cap=ENUMERATION_CAP):
    """The additive subgroups closed under the hyperoperation."""
    _check_cap(ring, cap, "subring enumeration")
    return [
        ring.handle(bits)
        for bits in _subgroup_bits(ring)
        if ring.product_bits(bits, bits) & ~bits == 0
    ]


def generated_hyperideal(ring, gens):
    """The least hyperideal containing ``gens``."""
    ring.owns(gens)
    bits = gens.bits | ring.zero_bits
    while True:
        grown = (
            bits
            | ring.diff_bits(bits, bits)
            | ring.product_bits(ring.full_bits, bits)
        )
        if grown == bits:
            return IdealHandle(ring.handle(bits))
        bits = grown


def is_prime(ring, P):
    """x o y inside P forces x or y into P."""
    require_proper(ring, P)
    return _prime_scan(ring, P.bits, weakly=False)


def is_weakly_prime(ring, P):
    """As is_prime, but only for products not containing zero."""
    require_proper(ring, P)
    return _prime_scan(ring, P.bits, weakly=True)


def _prime_scan(ring, bits, weakly):
    outside = [x for x in range(ring.order) if not (bits >> x) & 1]
    for x in outside:
        row = ring.mul[x]
        for y in outside:
            cell = row[y]
            if cell & ~bits:
                continue
            if weakly and cell & ring.zero_bits:
                continue
            return Check(False, (x, y))
    return Check(True)


def is_maximal(ring, P, cap=ENUMERATION_CAP):
    """No hyperideal lies strictly between P and H.

    The witness of a failure is the members of an intermediate hyperideal.
    """
    require_proper(ring, P)
    for B in enumerate_hyperideals(ring, cap):
        if B.bits != P.bits and B.bits != ring.full_bits and P.bits & ~B.bits == 0:
            return Check(False, B.members.members)
    return Check(True)


@lru_cache(maxsize=1024)
def _prime_bits(ring):
    return tuple(
        bits
        for bits in _hyperideal_bits(ring)
        if bits != ring.full_bits and _prime_scan(ring, bits, weakly=False)
    )


def prime_hyperideals(ring, cap=ENUMERATION_CAP):
    _check_cap(ring, cap, "hyperideal enumeration")
    return [IdealHandle(ring.handle(bits)) for bits in _prime_bits(ring)]


@lru_cache(maxsize=1024)
def _maximal_bits(ring):
    proper = [b for b in _hyperideal_bits(ring) if b != ring.full_bits]
    return tuple(
        bits
        for bits in proper
        if not any(other != bits and bits & ~other == 0 for other in proper)
    )


def maximal_hyperideals(ring, cap=ENUMERATION_CAP):
    _check_cap(ring, cap, "hyperideal enumeration")
    return [IdealHandle(ring.handle(bits)) for bits in _maximal_bits(ring)]


def is_local(ring, cap=ENUMERATION_CAP):
    """Exactly one maximal hyperideal."""
    return len(maximal_hyperideals(ring, cap)) == 1


def radical(ring, A, cap=ENUMERATION_CAP):
    """The intersection of the prime hyperideals containing A, or H if none."""
    require_hyperideal(ring, A)
    _check_cap(ring, cap, "hyperideal enumeration")
    bits = ring.full_bits
    for prime in _prime_bits(ring):
        if A.bits & ~prime == 0:
            bits &= prime
    return ring.handle(bits)


def d_set(ring, A):
    """The elements some power of which lies inside A."""
    require_hyperideal(ring, A)
    bits = 0
    for x in range(ring.order):
        if reaches(ring, x, A.bits, contained=True):
            bits |= 1 << x
    return ring.handle(bits)


@lru_cache(maxsize=1024)
def _family(ring):
    family = {1 << c for c in range(ring.order)}
    frontier = list(family)
    while frontier:
        new = []
        for S in frontier:
            for c in range(ring.order):
                T = ring.product_bits(S, 1 << c)
                if T not in family:
                    family.add(T)
                    new.append(T)
        frontier = new
    factors = sorted(family)
    sums = set(family)
    frontier = list(sums)
    while frontier:
        new = []
        for S in frontier:
            for C in factors:
                T = ring.sum_bits(S, C)
                if T not in sums:
                    sums.add(T)
                    new.append(T)
        frontier = new
    logger.debug(
        f"{ring.name}: {len(family)} finite products, {len(sums)} finite sums"
    )
    return tuple(factors), tuple(sorted(sums))


def product_family(ring, cap=ENUMERATION_CAP):
    """The finite products of elements and their finite sums.

    Single factors and single summands are members.
    """
    _check_cap(ring, cap, "product family")
    family, sums = _family(ring)
    return ProductFamily(
        ring.ring_id,
        tuple(ring.handle(b) for b in family),
        tuple(ring.handle(b) for b in sums),
    )


def _contains_what_it_meets(bits, members):
    for C in members:
        if C & bits and C & ~bits:
            return Check(False, members_of(C))
    return Check(True)


def is_c_hyperideal(ring, A, cap=ENUMERATION_CAP):
    """Every finite product meeting A lies inside A."""
    require_hyperideal(ring, A)
    _check_cap(ring, cap, "product family")
    return _contains_what_it_meets(A.bits, _family(ring)[0])


def is_strong_c_hyperideal(ring, A, cap=ENUMERATION_CAP):
    """Every finite sum of finite products meeting A lies inside A."""
    require_hyperideal(ring, A)
    _check_cap(ring, cap, "product family")
    return _contains_what_it_meets(A.bits, _family(ring)[1])


def colon_ideal(ring, A2, A1):
    """(A2 : A1), the x with x o A1 inside A2."""
    require_hyperideal(ring, A2)
    require_hyperideal(ring, A1)
    bits = 0
    for x in range(ring.order):
        if ring.product_bits(1 << x, A1.bits) & ~A2.bits == 0:
            bits |= 1 << x
    return ring.handle(bits)


def jacobson(ring, cap=ENUMERATION_CAP):
    """The intersection of the maximal hyperideals, or H if none."""
    bits = ring.full_bits
    for M in maximal_hyperideals(ring, cap):
        bits &= M.bits
    return ring.handle(bits)


def are_coprime(ring, P, Q):
    ring.owns(P)
    ring.owns(Q)
    return ring.sum_bits(P.bits, Q.bits) == ring.full_bits


def is_principal(ring, P):
    """Whether some element of P generates it.

    Returns
    -------
    Check
        On success the witness is ``(generator,)``, the least such element.
    """
    require_hyperideal(ring, P)
    for x in P:
        if generated_hyperideal(ring, ring.handle(1 << x)).bits == P.bits:
            return Check(True, (x,))
    return Check(False)


def quotient_characteristic(ring, P):
    """The least a >= 1 with a.x in P for every x.

    This is the characteristic of H/P, computed from the additive group alone.
    """
    ring.owns(P)
    inside = np.array([(P.bits >> x) & 1 == 1 for x in range(ring.order)])
    elements = np.arange(ring.order)
    multiple = elements.copy()
    alpha = 1
    while not np.all(inside[multiple]):
        multiple = ring.add[multiple, elements]
        alpha += 1
    return alpha

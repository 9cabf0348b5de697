# -*- coding: utf-8 -*-

"""Square-difference factor absorbing hyperideals.

A proper hyperideal P is sdf-absorbing when, for nonzero x and y,
x^2 - y^2 inside P forces x - y or x + y into P. It is weakly sdf-absorbing
when this is only required for pairs with 0 not in x^2 - y^2. Both nonzero
conditions apply to x *and* y.
"""

from dataclasses import dataclass
import logging

from .core import Check
from .errors import HyperringError
from .ideals import (
    ClassificationReport,
    d_set,
    is_c_hyperideal,
    is_hyperideal,
    is_maximal,
    is_prime,
    is_principal,
    is_strong_c_hyperideal,
    is_weakly_prime,
    radical,
    require_proper,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SdfWitness:
    """A pair (x, y) together with the facts the definitions test."""

    x: int
    y: int
    diff_set: object
    contains_zero: bool
    minus_in: bool
    plus_in: bool

    def as_tuple(self):
        return (self.x, self.y)


@dataclass(frozen=True)
class SdfResult:
    """The verdict of an sdf scan.

    ``violations`` lists the failing pairs (only the first unless the scan was
    exhaustive) and ``premise_pairs`` the pairs whose premise fired, in
    lexicographic order.
    """

    holds: bool
    violations: tuple = ()
    premise_pairs: tuple = ()

    def __bool__(self):
        return self.holds

    @property
    def witness(self):
        return self.violations[0].as_tuple() if self.violations else None


def diff_of_squares(ring, x, y):
    """x^2 - y^2 as a subset."""
    for v in (x, y):
        if not 0 <= v < ring.order:
            raise HyperringError(f"{v} is not an element of {ring.name}")
    return ring.handle(ring.diff_bits(ring.square_bits(x), ring.square_bits(y)))


def _scan(ring, bits, weakly=False, both=False, exhaustive=False):
    nonzero = [x for x in range(ring.order) if x != ring.zero]
    squares = {x: ring.square_bits(x) for x in nonzero}
    violations = []
    premise_pairs = []
    for x in nonzero:
        for y in nonzero:
            diff = ring.diff_bits(squares[x], squares[y])
            if diff & ~bits:
                continue
            contains_zero = bool(diff & ring.zero_bits)
            if weakly and contains_zero:
                continue
            witness = SdfWitness(
                x,
                y,
                ring.handle(diff),
                contains_zero,
                (bits >> ring.minus(x, y)) & 1 == 1,
                (bits >> ring.plus(x, y)) & 1 == 1,
            )
            premise_pairs.append(witness)
            if both:
                ok = witness.minus_in and witness.plus_in
            else:
                ok = witness.minus_in or witness.plus_in
            if not ok:
                violations.append(witness)
                if not exhaustive:
                    return SdfResult(False, tuple(violations), tuple(premise_pairs))
    return SdfResult(not violations, tuple(violations), tuple(premise_pairs))


def is_sdf_absorbing(ring, P, exhaustive=False):
    """Whether the proper hyperideal P is sdf-absorbing.

    Parameters
    ----------
    ring : HyperRing
    P : SubsetHandle or IdealHandle
    exhaustive : bool
        Collect every violating pair instead of stopping at the first.

    Returns
    -------
    SdfResult
    """
    require_proper(ring, P)
    return _scan(ring, P.bits, exhaustive=exhaustive)


def is_weakly_sdf_absorbing(ring, P, exhaustive=False):
    """Whether the proper hyperideal P is weakly sdf-absorbing."""
    require_proper(ring, P)
    return _scan(ring, P.bits, weakly=True, exhaustive=exhaustive)


def sdf_both_membership(ring, P, exhaustive=False):
    """The strengthened form: x^2 - y^2 inside P forces x - y *and* x + y in."""
    require_proper(ring, P)
    return _scan(ring, P.bits, both=True, exhaustive=exhaustive)


def no_sdf_factorization(ring, P):
    """No x, y outside P with x o y inside P splits as x = a - b, y = a + b.

    Here a and b range over the nonzero elements.

    Returns
    -------
    Check
        The witness of a failure is ``(x, y, a, b)``.
    """
    require_proper(ring, P)
    bits = P.bits
    outside = [x for x in range(ring.order) if not (bits >> x) & 1]
    nonzero = [a for a in range(ring.order) if a != ring.zero]
    splits = {}
    for a in nonzero:
        for b in nonzero:
            splits.setdefault((ring.minus(a, b), ring.plus(a, b)), (a, b))
    for x in outside:
        for y in outside:
            if ring.mul[x][y] & ~bits:
                continue
            split = splits.get((x, y))
            if split is not None:
                return Check(False, (x, y) + split)
    return Check(True)


def classify(ring, P):
    """Every flag for the subset P.

    A subset that is not a hyperideal gets only that flag. The whole ring is
    a hyperideal but not proper, so the predicates defined for proper
    hyperideals are false for it.

    Returns
    -------
    ClassificationReport
    """
    ideal = is_hyperideal(ring, P)
    if not ideal:
        return ClassificationReport(False, witnesses={"hyperideal": ideal.witness})

    witnesses = {}

    def flag(name, check):
        if not check:
            witnesses[name] = check.witness
        return bool(check)

    proper = P.bits != ring.full_bits
    c_flag = flag("C", is_c_hyperideal(ring, P))
    strong_flag = flag("strongC", is_strong_c_hyperideal(ring, P))
    principal = is_principal(ring, P)
    values = dict(
        is_hyperideal=True,
        is_proper=proper,
        is_c_hyperideal=c_flag,
        is_strong_c_hyperideal=strong_flag,
        is_principal=bool(principal),
        generator=principal.witness[0] if principal else None,
        radical=radical(ring, P),
        d_set=d_set(ring, P),
    )
    if proper:
        sdf = is_sdf_absorbing(ring, P, exhaustive=True)
        weakly = is_weakly_sdf_absorbing(ring, P, exhaustive=True)
        values.update(
            is_prime=flag("prime", is_prime(ring, P)),
            is_weakly_prime=flag("weaklyPrime", is_weakly_prime(ring, P)),
            is_maximal=flag("maximal", is_maximal(ring, P)),
            is_sdf=flag("sdf", sdf),
            is_weakly_sdf=flag("weaklySdf", weakly),
            sdf_premise_pairs=len(sdf.premise_pairs),
            weakly_sdf_premise_pairs=len(weakly.premise_pairs),
        )
    else:
        witnesses["proper"] = ()
    logger.debug(f"classified {P} in {ring.name}")
    return ClassificationReport(witnesses=witnesses, **values)


@dataclass(frozen=True)
class MatrixWitness:
    """A pair of matrices, by index in the hypermatrix numbering."""

    x: int
    y: int

    def as_tuple(self):
        return (self.x, self.y)


def _matrix_scan(handle, bits, candidates):
    base = handle.base
    violations = []
    premise_pairs = []
    for X in candidates:
        square_x = handle.square(X)
        entries_x = handle.entries(X)
        for Y in candidates:
            square_y = handle.square(Y)
            if not all(
                base.diff_bits(a, b) & ~bits == 0 for a, b in zip(square_x, square_y)
            ):
                continue
            entries_y = handle.entries(Y)
            pair = MatrixWitness(X, Y)
            premise_pairs.append(pair)
            minus_in = all(
                (bits >> base.minus(a, b)) & 1 for a, b in zip(entries_x, entries_y)
            )
            plus_in = all(
                (bits >> base.plus(a, b)) & 1 for a, b in zip(entries_x, entries_y)
            )
            if not (minus_in or plus_in):
                violations.append(pair)
                return SdfResult(False, tuple(violations), tuple(premise_pairs))
    return SdfResult(True, (), tuple(premise_pairs))


def matrix_sdf_absorbing(handle, P):
    """Whether M_m(P) is sdf-absorbing in the hypermatrix ring M_m(H).

    The scan runs over all pairs of nonzero matrices, without materialising
    the ring.

    Parameters
    ----------
    handle : MatrixRingHandle
    P : SubsetHandle or IdealHandle
        A proper hyperideal of the base ring.
    """
    require_proper(handle.base, P)
    candidates = [X for X in range(handle.order) if not handle.is_zero(X)]
    return _matrix_scan(handle, P.bits, candidates)


def corner_sdf_absorbing(handle, P):
    """The sdf condition for M_m(P) on corner matrices diag(x, 0, ..., 0) only."""
    base = handle.base
    require_proper(base, P)
    candidates = [handle.corner(x) for x in range(base.order) if x != base.zero]
    return _matrix_scan(handle, P.bits, candidates)

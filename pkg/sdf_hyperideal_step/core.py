# -*- coding: utf-8 -*-

"""Finite commutative multiplicative hyperrings.

A ring is stored as two square tables over the carrier ``0..n-1``: the
addition table, an ordinary abelian group, and the hyperoperation table whose
cells are nonempty subsets. Subsets are fixed-width bit sets; the integer
``bits`` has bit ``x`` set when element ``x`` is a member. All of the
set-valued arithmetic (extension of the hyperoperation to subsets, element-wise
sums and differences, powers) is done on these integers.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import hashlib
import logging

import numpy as np

from .errors import (
    EmptySubsetError,
    HyperringError,
    MissingIdentityError,
    RingMismatchError,
    StructureError,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=65536)
def members_of(bits):
    """The indices of the set bits, ascending."""
    result = []
    while bits:
        low = bits & -bits
        result.append(low.bit_length() - 1)
        bits ^= low
    return tuple(result)


def bits_of(members):
    """The bit set holding the given indices."""
    bits = 0
    for x in members:
        bits |= 1 << x
    return bits


def popcount(bits):
    return bin(bits).count("1")


@lru_cache(maxsize=65536)
def _product_bits(ring, a, b):
    result = 0
    columns = members_of(b)
    for x in members_of(a):
        row = ring.mul[x]
        for y in columns:
            result |= row[y]
    return result


@lru_cache(maxsize=65536)
def _sum_bits(ring, a, b):
    result = 0
    columns = members_of(b)
    for x in members_of(a):
        row = ring._add[x]
        for y in columns:
            result |= 1 << row[y]
    return result


@dataclass(frozen=True)
class Check:
    """The outcome of a predicate, with a witness when it fails.

    A ``Check`` is truthy exactly when the predicate holds, so it can be used
    directly in conditions.
    """

    holds: bool
    witness: tuple = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class SubsetHandle:
    """A subset of the carrier of one particular ring."""

    bits: int
    ring_id: str
    order: int = field(compare=False)

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.order:
            raise ValueError(
                f"subset bits {self.bits:#x} reference elements outside"
                f" 0..{self.order - 1}"
            )

    def __contains__(self, x):
        return 0 <= x < self.order and (self.bits >> x) & 1 == 1

    def __iter__(self):
        return iter(members_of(self.bits))

    def __len__(self):
        return popcount(self.bits)

    def __repr__(self):
        return "{" + ",".join(str(x) for x in self) + "}"

    @property
    def members(self):
        return members_of(self.bits)

    def _same_ring(self, other):
        if other.ring_id != self.ring_id:
            raise RingMismatchError(
                f"subsets belong to different rings ({self.ring_id} vs {other.ring_id})"
            )

    def issubset(self, other):
        self._same_ring(other)
        return self.bits & ~other.bits == 0

    def __or__(self, other):
        self._same_ring(other)
        return SubsetHandle(self.bits | other.bits, self.ring_id, self.order)

    def __and__(self, other):
        self._same_ring(other)
        return SubsetHandle(self.bits & other.bits, self.ring_id, self.order)


class HyperRing:
    """A finite commutative multiplicative hyperring given by its tables.

    Parameters
    ----------
    name : str
        A label, not part of the ring's identity.
    add : [[int]]
        The n x n addition table.
    mul : [[iterable of int]]
        The n x n hyperoperation table; each cell lists its members.
    zero : int
        The additive identity.
    one : int or None
        The designated identity element, if any.

    Attributes
    ----------
    ring_id : str
        A digest of the tables, identical for rings with identical tables.
    """

    def __init__(self, name, add, mul, zero=0, one=None):
        table = _check_add_table(add)
        n = table.shape[0]
        if len(mul) != n or any(len(row) != n for row in mul):
            raise StructureError(f"the multiplication table must be {n} x {n}")
        rows = []
        for x, row in enumerate(mul):
            cells = []
            for y, cell in enumerate(row):
                cell = list(cell)
                if len(cell) == 0:
                    raise StructureError(f"multiplication cell ({x},{y}) is empty")
                if any(not 0 <= z < n for z in cell):
                    raise StructureError(
                        f"multiplication cell ({x},{y}) names an element outside"
                        f" 0..{n - 1}"
                    )
                cells.append(bits_of(cell))
            rows.append(tuple(cells))
        self._setup(name, table, tuple(rows), zero, one)

    @classmethod
    def from_bits(cls, name, add, mul_bits, zero=0, one=None):
        """Build a ring whose multiplication cells are already bit sets."""
        table = _check_add_table(add)
        n = table.shape[0]
        if len(mul_bits) != n or any(len(row) != n for row in mul_bits):
            raise StructureError(f"the multiplication table must be {n} x {n}")
        for x, row in enumerate(mul_bits):
            for y, cell in enumerate(row):
                if cell <= 0 or cell >> n:
                    raise StructureError(
                        f"multiplication cell ({x},{y}) is empty or out of range"
                    )
        self = cls.__new__(cls)
        self._setup(name, table, tuple(tuple(row) for row in mul_bits), zero, one)
        return self

    def _setup(self, name, table, mul, zero, one):
        n = table.shape[0]
        if not 0 <= zero < n:
            raise StructureError(f"zero {zero} is not an element of 0..{n - 1}")
        if one is not None and not 0 <= one < n:
            raise StructureError(f"one {one} is not an element of 0..{n - 1}")
        table.setflags(write=False)
        self.name = name
        self.order = n
        self.zero = zero
        self.one = one
        self.add = table
        self.mul = mul
        self._add = tuple(tuple(row) for row in table.tolist())
        neg = []
        for x in range(n):
            inverses = [y for y in range(n) if self._add[x][y] == zero]
            neg.append(inverses[0] if inverses else -1)
        self.neg = tuple(neg)
        self.full_bits = (1 << n) - 1
        self.zero_bits = 1 << zero
        text = "|".join(
            (
                str(n),
                str(zero),
                str(one),
                ";".join(",".join(map(str, row)) for row in self._add),
                ";".join(",".join(map(str, row)) for row in mul),
            )
        )
        self.ring_id = hashlib.blake2b(text.encode(), digest_size=8).hexdigest()

    def __repr__(self):
        return f"HyperRing({self.name!r}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, HyperRing):
            return NotImplemented
        return (
            self.ring_id == other.ring_id
            and self.order == other.order
            and self.zero == other.zero
            and self.one == other.one
            and self._add == other._add
            and self.mul == other.mul
        )

    def __hash__(self):
        return hash(self.ring_id)

    def renamed(self, name):
        """The same ring under another label."""
        return HyperRing.from_bits(name, self.add.copy(), self.mul, self.zero, self.one)

    def mul_sets(self):
        """The hyperoperation table as frozensets of element indices."""
        return tuple(
            tuple(frozenset(members_of(cell)) for cell in row) for row in self.mul
        )

    # Element-level arithmetic

    def plus(self, x, y):
        return self._add[x][y]

    def minus(self, x, y):
        return self._add[x][self.neg[y]]

    def negative(self, x):
        return self.neg[x]

    # Bit-set arithmetic

    def product_bits(self, a, b):
        """The extension of the hyperoperation to two subsets."""
        return _product_bits(self, a, b)

    def sum_bits(self, a, b):
        """The element-wise sum {x + y : x in a, y in b}."""
        return _sum_bits(self, a, b)

    def neg_bits(self, a):
        return bits_of(self.neg[x] for x in members_of(a))

    def diff_bits(self, a, b):
        return self.sum_bits(a, self.neg_bits(b))

    def power_bits(self, x, k):
        if k < 1:
            raise HyperringError(f"powers start at 1, not {k}")
        single = 1 << x
        result = single
        for _ in range(k - 1):
            result = self.product_bits(result, single)
        return result

    def square_bits(self, x):
        return self.mul[x][x]

    # Handles

    def subset(self, members):
        """A handle for the subset with the given members."""
        members = list(members)
        if any(not 0 <= x < self.order for x in members):
            raise HyperringError(
                f"{members} names an element outside 0..{self.order - 1}"
            )
        return SubsetHandle(bits_of(members), self.ring_id, self.order)

    def handle(self, bits):
        return SubsetHandle(bits, self.ring_id, self.order)

    def full(self):
        return self.handle(self.full_bits)

    def zero_ideal(self):
        return self.handle(self.zero_bits)

    def owns(self, subset):
        if subset.ring_id != self.ring_id:
            raise RingMismatchError(
                f"subset {subset} does not belong to ring {self.name}"
            )


def _check_add_table(add):
    try:
        table = np.array(add, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise StructureError(f"the addition table is not rectangular: {e}")
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise StructureError(
            f"the addition table must be square and nonempty, not {table.shape}"
        )
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise StructureError(f"the addition table names elements outside 0..{n - 1}")
    return table


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple


@dataclass(frozen=True)
class AxiomReport:
    """The outcome of checking the hyperring axioms on the tables.

    Only the first witness of each failing axiom is kept.
    """

    abelian_group: bool
    semihypergroup: bool
    distributive_inclusion: bool
    sign_rule: bool
    commutative: bool
    designated_identity: bool
    identity_witnesses: SubsetHandle
    strongly_distributive: bool
    violations: tuple = ()

    @property
    def passed(self):
        return (
            self.abelian_group
            and self.semihypergroup
            and self.distributive_inclusion
            and self.sign_rule
            and self.commutative
            and self.designated_identity
        )

    def failed_axioms(self):
        return [v.axiom for v in self.violations]


def validate_hyperring(ring):
    """Check the axioms of a commutative multiplicative hyperring.

    Parameters
    ----------
    ring : HyperRing

    Returns
    -------
    AxiomReport
    """
    n = ring.order
    add = ring.add
    mul = ring.mul
    violations = {}

    def record(axiom, witness):
        violations.setdefault(axiom, witness)

    # (H, +) is an abelian group with identity zero
    for x in range(n):
        if add[ring.zero, x] != x or add[x, ring.zero] != x:
            record("abelian group", ("identity", x))
            break
    for x in range(n):
        if ring.neg[x] < 0:
            record("abelian group", ("inverse", x))
            break
    bad = np.argwhere(add != add.T)
    if len(bad) > 0:
        record("abelian group", ("commutative",) + tuple(int(v) for v in bad[0]))
    for x in range(n):
        left = add[add[x], :]
        right = add[x][add]
        bad = np.argwhere(left != right)
        if len(bad) > 0:
            y, z = (int(v) for v in bad[0])
            record("abelian group", ("associative", x, y, z))
            break
    abelian = "abelian group" not in violations

    # (H, o) is a semihypergroup
    done = False
    for x in range(n):
        for y in range(n):
            xy = mul[x][y]
            for z in range(n):
                left = ring.product_bits(xy, 1 << z)
                if left != ring.product_bits(1 << x, mul[y][z]):
                    record("semihypergroup", (x, y, z))
                    done = True
                    break
            if done:
                break
        if done:
            break

    # Inclusive distributivity, and whether it is an equality
    strong = True
    for x in range(n):
        for y in range(n):
            for z in range(n):
                s = ring._add[y][z]
                left = mul[x][s]
                right = ring.sum_bits(mul[x][y], mul[x][z])
                if left & ~right:
                    record("distributive inclusion", (x, y, z))
                if left != right:
                    strong = False
                left = mul[s][x]
                right = ring.sum_bits(mul[y][x], mul[z][x])
                if left & ~right:
                    record("distributive inclusion", (y, z, x))
                if left != right:
                    strong = False

    # x o (-y) = -(x o y) = (-x) o y
    for x in range(n):
        if ring.neg[x] < 0:
            continue
        for y in range(n):
            if ring.neg[y] < 0:
                continue
            negated = ring.neg_bits(mul[x][y])
            if mul[x][ring.neg[y]] != negated or mul[ring.neg[x]][y] != negated:
                record("sign rule", (x, y))

    for x in range(n):
        for y in range(x + 1, n):
            if mul[x][y] != mul[y][x]:
                record("commutative", (x, y))

    witnesses = 0
    for e in range(n):
        if all((mul[x][e] >> x) & 1 for x in range(n)):
            witnesses |= 1 << e
    if ring.one is not None and not (witnesses >> ring.one) & 1:
        bad = next(x for x in range(n) if not (mul[x][ring.one] >> x) & 1)
        record("designated identity", (ring.one, bad))

    report = AxiomReport(
        abelian_group=abelian,
        semihypergroup="semihypergroup" not in violations,
        distributive_inclusion="distributive inclusion" not in violations,
        sign_rule="sign rule" not in violations,
        commutative="commutative" not in violations,
        designated_identity="designated identity" not in violations,
        identity_witnesses=ring.handle(witnesses),
        strongly_distributive=strong and "distributive inclusion" not in violations,
        violations=tuple(Violation(k, v) for k, v in violations.items()),
    )
    if not report.passed:
        logger.debug(f"{ring.name} fails {report.failed_axioms()}")
    return report


def _operands(ring, *subsets):
    for subset in subsets:
        ring.owns(subset)


def _nonempty(*subsets):
    for subset in subsets:
        if subset.bits == 0:
            raise EmptySubsetError(
                "the hyperoperation is only extended to nonempty subsets"
            )


def set_product(ring, A, B):
    """The union of x o y over x in A and y in B."""
    _operands(ring, A, B)
    _nonempty(A, B)
    return ring.handle(ring.product_bits(A.bits, B.bits))


def set_sum(ring, A, B):
    _operands(ring, A, B)
    return ring.handle(ring.sum_bits(A.bits, B.bits))


def set_neg(ring, A):
    _operands(ring, A)
    return ring.handle(ring.neg_bits(A.bits))


def set_diff(ring, A, B):
    return set_sum(ring, A, set_neg(ring, B))


def _element(ring, x):
    if not 0 <= x < ring.order:
        raise HyperringError(f"{x} is not an element of {ring.name}")


def power(ring, x, k):
    """x^k as a subset: x^1 = {x}, x^k = x^(k-1) o x."""
    _element(ring, x)
    return ring.handle(ring.power_bits(x, k))


def reaches(ring, x, target_bits, contained=False):
    """Whether some power of x meets (or lies inside) ``target_bits``.

    The sequence x, x^2, x^3, ... is determined by its previous term, so it is
    followed until a subset repeats.
    """
    single = 1 << x
    current = single
    seen = set()
    while current not in seen:
        if contained:
            if current & ~target_bits == 0:
                return True
        elif current & target_bits:
            return True
        seen.add(current)
        current = ring.product_bits(current, single)
    return False


def units(ring):
    """U(H), relative to the designated identity."""
    if ring.one is None:
        raise MissingIdentityError(f"{ring.name} has no designated identity")
    target = 1 << ring.one
    bits = 0
    for x in range(ring.order):
        if any(ring.mul[x][y] & target for y in range(ring.order)):
            bits |= 1 << x
    return ring.handle(bits)


def nilpotents(ring):
    """The elements x with 0 in x^k for some k."""
    bits = 0
    for x in range(ring.order):
        if reaches(ring, x, ring.zero_bits):
            bits |= 1 << x
    return ring.handle(bits)


def regular_elements(ring):
    """The elements x with x in x^2 o y for some y."""
    bits = 0
    for x in range(ring.order):
        square = ring.square_bits(x)
        for y in range(ring.order):
            if (ring.product_bits(square, 1 << y) >> x) & 1:
                bits |= 1 << x
                break
    return ring.handle(bits)


def is_regular(ring):
    return regular_elements(ring).bits == ring.full_bits


def characteristic(ring):
    """The least a >= 1 with a.x = 0 for every x."""
    elements = np.arange(ring.order)
    multiple = elements.copy()
    alpha = 1
    while not np.all(multiple == ring.zero):
        multiple = ring.add[multiple, elements]
        alpha += 1
        if alpha > ring.order:
            raise StructureError(f"{ring.name} has no finite additive exponent")
    return alpha

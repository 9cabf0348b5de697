# -*- coding: utf-8 -*-

"""Building hyperrings and maps from other hyperrings.

* ``zomega`` gives the finite surrogate of the Z_Omega construction on Z_n.
* ``product_ring`` and ``quotient_ring`` give products and quotients.
* ``matrix_ring`` gives hypermatrix rings, which are worked with through
  box-valued products rather than materialised tables.
* ``check_good_hom`` and its helpers give good homomorphisms.
"""

from dataclasses import dataclass
from functools import lru_cache
import itertools
import logging

import numpy as np

from .core import Check, HyperRing, bits_of, members_of, validate_hyperring
from .errors import (
    HyperringError,
    NotGoodHomomorphismError,
    SizeCapError,
    StructureError,
    WellDefinednessError,
)
from .ideals import require_hyperideal

logger = logging.getLogger(__name__)

#: Largest number of matrices allowed in a hypermatrix ring.
MATRIX_CAP = 4096


def _validated(ring):
    report = validate_hyperring(ring)
    if not report.passed:
        raise StructureError(
            f"{ring.name} fails the hyperring axioms: {report.failed_axioms()}",
            report=report,
        )
    return ring, report


def zomega(n, omega, name=None):
    """Z_n with x o y = {x.g.y mod n : g in omega}.

    Parameters
    ----------
    n : int
        The modulus, at least 2.
    omega : iterable of int
        At least two distinct integers; they are reduced mod n.
    name : str, optional
        Defaults to ``zomega(n,{...})``.

    Returns
    -------
    HyperRing
        The designated identity is the least identity witness, or None.
    """
    omega = set(omega)
    if n < 2:
        raise HyperringError(f"the modulus must be at least 2, not {n}")
    if len(omega) < 2:
        raise HyperringError(f"omega needs at least two elements, not {sorted(omega)}")
    reduced = sorted({g % n for g in omega})
    if name is None:
        name = f"zomega({n},{{{','.join(str(g) for g in sorted(omega))}}})"

    elements = np.arange(n)
    add = (elements[:, None] + elements[None, :]) % n
    mul = [
        [bits_of((x * g * y) % n for g in reduced) for y in range(n)]
        for x in range(n)
    ]
    ring = HyperRing.from_bits(name, add, mul, zero=0)
    ring, report = _validated(ring)
    witnesses = report.identity_witnesses.members
    if witnesses:
        ring = HyperRing.from_bits(name, add, ring.mul, zero=0, one=witnesses[0])
    logger.debug(f"built {name}: omega reduces to {reduced}")
    return ring


@lru_cache(maxsize=256)
def product_ring(H1, H2, validate=True):
    """The cartesian product, indexed lexicographically as i * |H2| + j."""
    n1, n2 = H1.order, H2.order
    add = (H1.add[:, None, :, None] * n2 + H2.add[None, :, None, :]).reshape(
        n1 * n2, n1 * n2
    )
    mul = []
    for i in range(n1):
        for j in range(n2):
            row = []
            for k in range(n1):
                left = members_of(H1.mul[i][k])
                for l in range(n2):
                    right = H2.mul[j][l]
                    row.append(sum(right << (a * n2) for a in left))
            mul.append(row)
    one = None
    if H1.one is not None and H2.one is not None:
        one = H1.one * n2 + H2.one
    ring = HyperRing.from_bits(
        f"{H1.name}x{H2.name}", add, mul, zero=H1.zero * n2 + H2.zero, one=one
    )
    if validate:
        ring, _ = _validated(ring)
    return ring


def product_subset(H1, A1, H2, A2):
    """A1 x A2 as a subset of the product ring."""
    H1.owns(A1)
    H2.owns(A2)
    product = product_ring(H1, H2)
    bits = 0
    for a in A1:
        bits |= A2.bits << (a * H2.order)
    return product.handle(bits)


def coset_map(H, Q):
    """The coset index of each element, cosets ordered by least member."""
    require_hyperideal(H, Q)
    index = [-1] * H.order
    count = 0
    for x in range(H.order):
        if index[x] < 0:
            for y in members_of(H.sum_bits(1 << x, Q.bits)):
                index[y] = count
            count += 1
    return tuple(index)


def quotient_ring(H, Q, validate=True):
    """H/Q with (x+Q)*(y+Q) = {z+Q : z in x o y}.

    The product is checked to be independent of the representatives.

    Raises
    ------
    NotAHyperidealError
        If Q is not a hyperideal.
    WellDefinednessError
        If two choices of representatives give different products.
    """
    index = coset_map(H, Q)
    count = max(index) + 1
    reps = [index.index(c) for c in range(count)]
    cosets = [[x for x in range(H.order) if index[x] == c] for c in range(count)]

    def image(bits):
        return bits_of(index[z] for z in members_of(bits))

    add = np.array([[index[H.plus(a, b)] for b in reps] for a in reps], dtype=np.int64)
    mul = []
    for a in range(count):
        row = []
        for b in range(count):
            cell = image(H.mul[reps[a]][reps[b]])
            for x in cosets[a]:
                for y in cosets[b]:
                    if image(H.mul[x][y]) != cell:
                        raise WellDefinednessError(
                            f"the product in {H.name}/{Q} depends on the"
                            " representatives",
                            witness=(reps[a], reps[b], x, y),
                        )
            row.append(cell)
        mul.append(row)
    one = None if H.one is None else index[H.one]
    ring = HyperRing.from_bits(f"{H.name}/{Q}", add, mul, zero=index[H.zero], one=one)
    if validate:
        ring, _ = _validated(ring)
    return ring


@dataclass(frozen=True)
class HomMap:
    """An element-wise map between two rings with its good-homomorphism status."""

    source: HyperRing
    target: HyperRing
    mapping: tuple
    additive: Check
    multiplicative: Check
    kernel: object

    def __call__(self, x):
        return self.mapping[x]

    @property
    def good(self):
        return self.additive.holds and self.multiplicative.holds

    @property
    def injective(self):
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def surjective(self):
        return len(set(self.mapping)) == self.target.order


def check_good_hom(theta, H1, H2):
    """Check additivity and multiplicativity of a map exhaustively.

    Parameters
    ----------
    theta : sequence, mapping or callable
        The image of each element of ``H1``.
    """
    if callable(theta) and not hasattr(theta, "__getitem__"):
        mapping = tuple(theta(x) for x in range(H1.order))
    else:
        try:
            mapping = tuple(theta[x] for x in range(H1.order))
        except (IndexError, KeyError) as e:
            raise HyperringError(f"the map is not defined on all of {H1.name}: {e}")
    if any(not 0 <= v < H2.order for v in mapping):
        raise HyperringError(f"the map leaves {H2.name}")

    additive = Check(True)
    multiplicative = Check(True)
    for x in range(H1.order):
        for y in range(H1.order):
            if additive and mapping[H1.plus(x, y)] != H2.plus(mapping[x], mapping[y]):
                additive = Check(False, (x, y))
            if multiplicative:
                image = bits_of(mapping[z] for z in members_of(H1.mul[x][y]))
                if image != H2.mul[mapping[x]][mapping[y]]:
                    multiplicative = Check(False, (x, y))
    kernel = H1.handle(bits_of(x for x in range(H1.order) if mapping[x] == H2.zero))
    return HomMap(H1, H2, mapping, additive, multiplicative, kernel)


def _require_good(theta):
    if not theta.good:
        raise NotGoodHomomorphismError(
            f"the map {theta.source.name} -> {theta.target.name} is not a good"
            " homomorphism"
        )


def hom_preimage(theta, S):
    _require_good(theta)
    theta.target.owns(S)
    return theta.source.handle(
        bits_of(x for x, v in enumerate(theta.mapping) if (S.bits >> v) & 1)
    )


def hom_image(theta, S):
    _require_good(theta)
    theta.source.owns(S)
    return theta.target.handle(bits_of(theta.mapping[x] for x in S))


def identity_hom(H):
    return check_good_hom(range(H.order), H, H)


def canonical_projection(H, Q):
    """x -> x + Q onto the quotient ring."""
    target = quotient_ring(H, Q)
    return check_good_hom(coset_map(H, Q), H, target)


def product_projection(H1, H2, side):
    """The projection of H1 x H2 onto H1 (side 0) or H2 (side 1)."""
    product = product_ring(H1, H2)
    n2 = H2.order
    if side == 0:
        mapping = [x // n2 for x in range(product.order)]
        target = H1
    elif side == 1:
        mapping = [x % n2 for x in range(product.order)]
        target = H2
    else:
        raise HyperringError(f"side must be 0 or 1, not {side}")
    return check_good_hom(mapping, product, target)


def subring(H, K):
    """The sub-hyperring on K and its inclusion map.

    K must be an additive subgroup closed under the hyperoperation. The
    members keep their relative order.
    """
    H.owns(K)
    members = K.members
    if (
        not (K.bits >> H.zero) & 1
        or H.diff_bits(K.bits, K.bits) & ~K.bits
        or H.product_bits(K.bits, K.bits) & ~K.bits
    ):
        raise StructureError(f"{K} is not a sub-hyperring of {H.name}")
    position = {x: i for i, x in enumerate(members)}
    add = [[position[H.plus(x, y)] for y in members] for x in members]
    mul = [
        [bits_of(position[z] for z in members_of(H.mul[x][y])) for y in members]
        for x in members
    ]
    one = position.get(H.one) if H.one is not None else None
    ring = HyperRing.from_bits(f"{H.name}|{K}", add, mul, position[H.zero], one)
    ring, _ = _validated(ring)
    return ring, check_good_hom(members, ring, H)


class MatrixRingHandle:
    """m x m hypermatrices over a base ring.

    Matrices are numbered row-major in base ``n``, entry (0, 0) most
    significant, so that m = 1 reproduces the base ring's numbering. The
    product of two matrices is a *box*: a tuple of m*m entry subsets, and the
    matrices in the product are exactly those whose entries lie in the box.

    Parameters
    ----------
    base : HyperRing
    m : int
    cap : int
        The largest allowed number of matrices.
    """

    def __init__(self, base, m, cap=MATRIX_CAP):
        if m < 1:
            raise HyperringError(f"the matrix size must be at least 1, not {m}")
        order = base.order ** (m * m)
        if order > cap:
            raise SizeCapError(
                f"M_{m}({base.name}) has {order} elements, more than the cap of {cap}"
            )
        self.base = base
        self.m = m
        self.order = order
        self._ring = None
        self._weights = tuple(base.order ** (m * m - 1 - k) for k in range(m * m))
        self._square_cache = {}

    def __repr__(self):
        return f"MatrixRingHandle({self.base.name!r}, m={self.m})"

    def entries(self, index):
        """The entries of a matrix, row-major."""
        return tuple((index // w) % self.base.order for w in self._weights)

    def index_of(self, entries):
        return sum(e * w for e, w in zip(entries, self._weights))

    def corner(self, x):
        """diag(x, 0, ..., 0)."""
        zero = self.base.zero
        return self.index_of((x,) + (zero,) * (self.m * self.m - 1))

    def is_zero(self, index):
        return all(e == self.base.zero for e in self.entries(index))

    def box_of(self, index):
        return tuple(1 << e for e in self.entries(index))

    def product_box(self, X, Y):
        """The set of matrices Z with Z_ij in the sum over k of X_ik o Y_kj."""
        base = self.base
        m = self.m
        x = self.entries(X)
        y = self.entries(Y)
        box = []
        for i in range(m):
            for j in range(m):
                cell = base.mul[x[i * m]][y[j]]
                for k in range(1, m):
                    cell = base.sum_bits(cell, base.mul[x[i * m + k]][y[k * m + j]])
                box.append(cell)
        return tuple(box)

    def square(self, X):
        box = self._square_cache.get(X)
        if box is None:
            box = self._square_cache[X] = self.product_box(X, X)
        return box

    def box_sum(self, A, B):
        return tuple(self.base.sum_bits(a, b) for a, b in zip(A, B))

    def box_diff(self, A, B):
        return tuple(self.base.diff_bits(a, b) for a, b in zip(A, B))

    def box_within(self, box, bits):
        """Entrywise inclusion of a box in a subset of the base ring."""
        return all(cell & ~bits == 0 for cell in box)

    def box_members(self, box):
        return [
            self.index_of(entries)
            for entries in itertools.product(*(members_of(cell) for cell in box))
        ]

    def matrices_over(self, P):
        """M_m(P) as a subset of the materialised ring."""
        self.base.owns(P)
        box = (P.bits,) * (self.m * self.m)
        return self.ring.handle(bits_of(self.box_members(box)))

    @property
    def ring(self):
        """The derived HyperRing, built on first use."""
        if self._ring is None:
            self._ring = self._materialise()
        return self._ring

    def _materialise(self):
        logger.info(f"materialising {self!r} with {self.order} elements")
        base = self.base
        rows = [self.entries(X) for X in range(self.order)]
        add = np.array(
            [
                [
                    self.index_of(tuple(base.plus(a, b) for a, b in zip(rx, ry)))
                    for ry in rows
                ]
                for rx in rows
            ],
            dtype=np.int64,
        )
        mul = [
            [
                bits_of(self.box_members(self.product_box(X, Y)))
                for Y in range(self.order)
            ]
            for X in range(self.order)
        ]
        zero = self.index_of((base.zero,) * (self.m * self.m))
        one = None
        if base.one is not None:
            one = self.index_of(
                tuple(
                    base.one if i == j else base.zero
                    for i in range(self.m)
                    for j in range(self.m)
                )
            )
        return HyperRing.from_bits(f"M{self.m}({base.name})", add, mul, zero, one)


def matrix_ring(H, m, cap=MATRIX_CAP):
    return MatrixRingHandle(H, m, cap=cap)

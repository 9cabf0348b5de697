# -*- coding: utf-8 -*-

"""A slow, direct reading of the two sdf definitions.

Nothing here uses the bit-set machinery: the tables are read once into plain
Python sets and the definitions are evaluated by straight loops. It exists to
cross-check the engine in ``sdf``.
"""

import logging

from .ideals import proper_hyperideals
from .sdf import is_sdf_absorbing, is_weakly_sdf_absorbing

logger = logging.getLogger(__name__)


def _tables(ring):
    n = ring.order
    add = [[int(ring.add[x, y]) for y in range(n)] for x in range(n)]
    mul = ring.mul_sets()
    zero = ring.zero
    neg = {}
    for x in range(n):
        for y in range(n):
            if add[x][y] == zero:
                neg[x] = y
    return n, add, mul, zero, neg


def _oracle(ring, members, weakly):
    n, add, mul, zero, neg = _tables(ring)
    P = set(members)
    for x in range(n):
        if x == zero:
            continue
        for y in range(n):
            if y == zero:
                continue
            x2 = mul[x][x]
            y2 = mul[y][y]
            difference = set()
            for s in x2:
                for t in y2:
                    difference.add(add[s][neg[t]])
            if not difference <= P:
                continue
            if weakly and zero in difference:
                continue
            if add[x][neg[y]] in P or add[x][y] in P:
                continue
            return False, (x, y)
    return True, None


def oracle_sdf(ring, members):
    """(holds, first violating pair or None) for sdf-absorption."""
    return _oracle(ring, members, weakly=False)


def oracle_weakly_sdf(ring, members):
    """(holds, first violating pair or None) for weak sdf-absorption."""
    return _oracle(ring, members, weakly=True)


def cross_check(rings):
    """Compare the oracle with the engine on every proper hyperideal.

    Parameters
    ----------
    rings : iterable of HyperRing

    Returns
    -------
    [dict]
        One entry per disagreement, empty when everything agrees.
    """
    disagreements = []
    checked = 0
    for ring in rings:
        for P in proper_hyperideals(ring):
            members = P.members.members
            for name, oracle, engine in (
                ("sdf", oracle_sdf, is_sdf_absorbing),
                ("weaklySdf", oracle_weakly_sdf, is_weakly_sdf_absorbing),
            ):
                expected, expected_witness = oracle(ring, members)
                result = engine(ring, P)
                checked += 1
                if expected != result.holds or expected_witness != result.witness:
                    disagreements.append(
                        {
                            "ring": ring.name,
                            "ideal": list(members),
                            "predicate": name,
                            "oracle": [expected, expected_witness],
                            "engine": [result.holds, result.witness],
                        }
                    )
    logger.info(f"oracle cross-check: {checked} verdicts, {len(disagreements)} differ")
    return disagreements

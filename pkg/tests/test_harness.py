#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the theorem registry and checking in `sdf_hyperideal_step.harness`."""

import dataclasses

import pytest

from sdf_hyperideal_step import generate_corpus, parse_ring, zomega
from sdf_hyperideal_step import harness
from sdf_hyperideal_step.errors import UnknownTheoremError
from sdf_hyperideal_step.corpus import RingInstance
from sdf_hyperideal_step.harness import (
    REGISTRY,
    Clause,
    HarnessContext,
    Inapplicable,
    TheoremCase,
    TheoremVerdict,
    check_theorem,
    equivalence,
    exit_status,
    get_theorem,
    run_all,
    search_counterexample,
)

THEOREMS = [
    "P0",
    "T1",
    "T2",
    "T3",
    "T4",
    "L5",
    "C6",
    "T7",
    "T8",
    "T9",
    "T10",
    "T11",
    "T12",
    "T13",
    "T14",
    "T15",
    "T16",
    "T17",
    "T18",
    "W1",
    "W2",
    "W3",
    "W4",
    "W2-conj",
]


@pytest.fixture(scope="module")
def fixtures_context():
    """The two example rings, with caches shared by the tests in this module."""
    return HarnessContext(generate_corpus("fixtures"))


@pytest.fixture
def false_theorem(monkeypatch):
    """A deliberately false entry: every proper hyperideal is prime."""
    case = TheoremCase(
        "X1",
        "every proper hyperideal is prime",
        "",
        "ideal",
        (Clause("", lambda i: True, lambda i: i.A.prime(i.P)),),
    )
    monkeypatch.setitem(REGISTRY, "X1", case)
    return case


def test_registry():
    assert list(REGISTRY) == THEOREMS
    assert [case.id for case in REGISTRY.values() if not case.gated] == ["W2-conj"]
    assert all(case.clauses for case in REGISTRY.values())


def test_unknown_theorem():
    with pytest.raises(UnknownTheoremError):
        get_theorem("T99")
    with pytest.raises(KeyError):
        get_theorem("T99")


def test_equivalence_clauses():
    clauses = equivalence(
        lambda i: True, [("a", lambda i: True), ("b", lambda i: True)], kind="ring"
    )
    assert [c.name for c in clauses] == ["a=>b", "b=>a"]
    assert all(c.kind == "ring" for c in clauses)


def test_t1_over_fixtures(fixtures_context):
    verdict = check_theorem("T1", fixtures_context)
    assert verdict.instances_scanned == 4
    assert verdict.premises_satisfied == 1
    assert verdict.conclusions_held == 1
    assert verdict.counterexamples == []
    assert not verdict.vacuous


def test_p0_over_fixtures(fixtures_context):
    verdict = check_theorem("P0", fixtures_context)
    assert verdict.premises_satisfied == 1
    assert verdict.conclusions_held == 1


def test_vacuous_theorem(fixtures_context):
    """Neither example ring has characteristic 2."""
    verdict = check_theorem("T2", fixtures_context)
    assert verdict.vacuous
    assert verdict.as_dict()["vacuous"]


def test_corpus_description_is_accepted():
    verdict = check_theorem("T1", "fixtures")
    assert verdict.instances_scanned == 4


def test_clause_counts(fixtures_context):
    verdict = check_theorem("T3", fixtures_context)
    assert set(verdict.clauses) == {
        "both=>two",
        "both=>char2",
        "two=>both",
        "two=>char2",
        "char2=>both",
        "char2=>two",
    }
    assert all(c.instances_scanned == 4 for c in verdict.clauses.values())
    assert verdict.instances_scanned == 24
    assert verdict.premises_satisfied == 6


def test_run_all_over_fixtures(fixtures_context):
    verdicts = run_all(fixtures_context)
    assert [v.id for v in verdicts] == THEOREMS
    assert all(v.counterexamples == [] for v in verdicts)
    assert exit_status(verdicts) == 0
    satisfied = {v.id for v in verdicts if not v.vacuous}
    assert {"P0", "T1", "T3", "T12", "T16", "T17"} <= satisfied


def test_counterexamples_are_replayable(false_theorem, r1):
    verdict = check_theorem("X1", "fixtures")
    assert len(verdict.counterexamples) == 2
    first = verdict.counterexamples[0]
    assert first["theorem"] == "X1"
    assert first["instance"] == "R1 P={0}"
    assert first["ideals"] == {"P": {"ring": "H", "members": [0]}}
    assert parse_ring(first["rings"]["H"]).ring == r1
    assert exit_status([verdict]) == 1


def test_search_stops_at_first(false_theorem):
    found = search_counterexample("X1", "fixtures")
    assert found["instance"] == "R1 P={0}"
    assert search_counterexample("T1", "fixtures") is None


def test_inapplicable_instances(monkeypatch):
    """Rings without an identity are counted but never reach the premise."""
    case = TheoremCase(
        "X2",
        "1 + 1 is a unit or not",
        "",
        "ring",
        (Clause("", lambda i: i.A.two_is_unit() or True, lambda i: True),),
    )
    monkeypatch.setitem(REGISTRY, "X2", case)
    verdict = check_theorem("X2", "zomega:nMax=4,omegaMax=2")
    assert verdict.inapplicable > 0
    assert verdict.instances_scanned == 19
    assert verdict.premises_satisfied == 19 - verdict.inapplicable


def test_ungated_counterexamples_do_not_fail():
    verdict = TheoremVerdict("W2-conj", gated=False, counterexamples=[{}])
    assert exit_status([verdict]) == 0
    verdict = TheoremVerdict("T1", counterexamples=[{}])
    assert exit_status([verdict]) == 1


def test_verdict_as_dict(fixtures_context):
    data = check_theorem("T1", fixtures_context).as_dict()
    assert data["instancesScanned"] == 4
    assert data["premisesSatisfied"] == 1
    assert data["conclusionsHeld"] == 1
    assert data["gated"] is True
    assert data["clauses"][""]["instancesScanned"] == 4


def test_matrix_instances(fixtures_context):
    instances = fixtures_context.instances("matrix")
    assert [i.id for i in instances] == [
        "M2(R1) P={0}",
        "M2(R1) P={0,2}",
        "M2(R2) P={0}",
        "M2(R2) P={0,2}",
    ]


def test_product_pairs(fixtures_context):
    pairs = fixtures_context.instances("pairs")
    assert [(left.id, right.id) for left, right, _ in pairs] == [
        ("R1", "R1"),
        ("R1", "R2"),
        ("R2", "R1"),
        ("R2", "R2"),
    ]


def test_enumeration_cap_skips_rings():
    context = HarnessContext(generate_corpus("fixtures"), cap=3)
    assert context.rings == []
    assert harness.check_theorem("T1", context).instances_scanned == 0


@pytest.fixture(scope="module")
def no_identity_context():
    """R1 next to zomega(4,{0,2}), which has no identity element."""
    ring = zomega(4, [0, 2])
    assert ring.one is None
    corpus = generate_corpus("fixtures")[:1] + [
        RingInstance(ring.name, ring, "zomega")
    ]
    return HarnessContext(corpus)


def _instance(context, kind, id):
    (instance,) = [i for i in context.instances(kind) if i.id == id]
    return instance


def test_rings_without_identity_are_inapplicable(no_identity_context):
    case = REGISTRY["W3"]
    instance = _instance(
        no_identity_context, "product-left", "zomega(4,{0,2}) x R1 P1={0,2}"
    )
    assert all(
        harness._evaluate(case, clause, instance) is None for clause in case.clauses
    )
    verdict = check_theorem("W3", no_identity_context)
    assert verdict.counterexamples == []
    assert verdict.inapplicable > 0
    assert exit_status(run_all(no_identity_context)) == 0


def test_identity_guard_can_be_lifted(no_identity_context, monkeypatch):
    """Without the identity the product argument for W3 breaks down."""
    case = dataclasses.replace(REGISTRY["W3"], id="X3", unital=False)
    monkeypatch.setitem(REGISTRY, "X3", case)
    verdict = check_theorem("X3", no_identity_context)
    assert "zomega(4,{0,2}) x R1 P1={0,2}" in [
        c["instance"] for c in verdict.counterexamples
    ]


def test_matrix_theorem_needs_no_identity(no_identity_context):
    verdict = check_theorem("T14", no_identity_context)
    assert verdict.inapplicable == 0
    assert verdict.counterexamples == []


def test_factor_condition_needs_identity(no_identity_context):
    instance = _instance(
        no_identity_context, "product-pair", "zomega(4,{0,2}) x R1 P1={0} P2={0}"
    )
    with pytest.raises(Inapplicable):
        harness._pair_factors_sdf(instance)


def test_ordinary_rings_reach_t15():
    """Z3 x Z3 carries nonzero sdf strong C-hyperideals with 1 + 1 a unit."""
    verdict = check_theorem("T15", "zomega:nMax=3,omegaMax=2+product:orderCap=9")
    assert verdict.premises_satisfied > 0
    assert verdict.counterexamples == []


@pytest.fixture(scope="module")
def sweep_context(sweep_corpus):
    return HarnessContext(sweep_corpus)


@pytest.mark.slow
def test_sweep_has_no_counterexamples(sweep_context):
    verdicts = run_all(sweep_context)
    failures = [
        (v.id, c["clause"], c["instance"])
        for v in verdicts
        if v.gated
        for c in v.counterexamples
    ]
    assert failures == []
    assert exit_status(verdicts) == 0
    satisfied = {v.id for v in verdicts if not v.vacuous}
    assert {"P0", "T1", "T3", "T12", "T15", "T16", "T17"} <= satisfied


@pytest.mark.slow
def test_sweep_scans_matrices_over_small_rings(sweep_context):
    small = {i.ring.name for i in sweep_context.rings if 1 < i.ring.order <= 4}
    scanned = {i.A.ring.name for i in sweep_context.instances("matrix")}
    assert scanned == small

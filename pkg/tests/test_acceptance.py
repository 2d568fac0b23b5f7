"""Acceptance suite: one test and one printed pass/fail line per criterion."""

import random
import time

import pytest

from conftest import CORPORA, FIXTURES, add_grounding_agreement, add_valid_trust
from ontrust import service
from ontrust.cli import main as cli_main
from ontrust.constraints import ERROR_AXIOMS, AxiomId, check_axiom, validate
from ontrust.errors import NonConvergent
from ontrust.finder import OpenCycle, WitnessQuery, count_models, find_witness
from ontrust.graph import InstanceGraph, build
from ontrust.kinds import ElementKind as K
from ontrust.measures import UNIT, MeasureValue, normalize
from ontrust.ontio import export_triples, parse, serialize
from ontrust.quant import Context, effective_intensity, propagate, trust_degree
from ontrust.risk import derive_chains
from ontrust.typology import TrustKind, at_least, classify
from test_finder import (
    OPEN_CYCLE_SIG,
    NO_A1,
    SMALL_KINDS,
    SMALL_RELATIONS,
    SMALL_SIG,
    _naive_models,
)
from test_io import _random_graph
from test_quant import _oracle_degrees, _random_acyclic, attach_influence, clamp
from test_risk import chain_graph, oracle_paths

ALL = frozenset(ERROR_AXIOMS)
CTX = Context()
EXPECTED = CORPORA / "expected"


@pytest.fixture
def report(capsys, request):
    criterion = request.function.__doc__.strip()

    def emit(ok: bool) -> None:
        with capsys.disabled():
            print(f"[{'PASS' if ok else 'FAIL'}] {criterion}")

    yield emit


def run(fn, emit):
    try:
        fn()
    except BaseException:
        emit(False)
        raise
    emit(True)


def unit(x: float) -> MeasureValue:
    return MeasureValue(UNIT, x)


# -- criterion 1: axiom witness suite ----------------------------------------


def _violating_fixture(axiom: AxiomId) -> InstanceGraph:
    g = InstanceGraph()
    if axiom is AxiomId.A1:
        add_valid_trust(g, "t", "r", "e")
        other = g.add_element("Agent")
        next(
            r for r in g.relations if r.source == "t_b1" and r.kind.value == "inheresIn"
        ).target = other
    elif axiom is AxiomId.A2:
        g = build(
            [("a", "Agent"), ("b", "Agent"), ("ci", "ComplexIntention"), ("p", "Intention")],
            [("inheresIn", "ci", "a"), ("inheresIn", "p", "b"), ("componentOf", "p", "ci")],
        )
    elif axiom is AxiomId.A3:
        g = build(
            [("r", "Agent"), ("e", "Agent"), ("x", "Agent"), ("agr", "Agreement"),
             ("sc", "SocialCommitment")],
            [("mediatesTrustor", "agr", "r"), ("mediatesTrustee", "agr", "e"),
             ("inheresIn", "sc", "x"), ("componentOf", "sc", "agr")],
        )
    elif axiom is AxiomId.A4:
        add_valid_trust(g, "t", "r", "e", belief_kinds=("SocialCommitmentBelief",))
        other = g.add_element("Agent")
        next(
            r for r in g.relations if r.source == "t_b1" and r.kind.value == "inheresIn"
        ).target = other
    elif axiom is AxiomId.A5:
        add_valid_trust(g, "t", "r", "e", belief_kinds=("SocialCommitmentBelief",))
        add_grounding_agreement(g, "t", "r", "e")
        stranger = g.add_element("Agent")
        next(r for r in g.relations if r.kind.value == "mediatesTrustee").target = stranger
    elif axiom is AxiomId.A6:
        add_valid_trust(g, "t", "john", "wife", belief_kinds=("SocialCommitmentBelief",))
        g.add_element("Agent", id="other")
        g.add_element("TrustedDelegation", id="d")
        g.add_relation("mediatesTrustor", "d", "john")
        g.add_relation("mediatesTrustee", "d", "other")
        g.add_relation("groundedOn", "d", "t")
    elif axiom is AxiomId.A7:
        g = build(
            [("a1", "TrustorAction"), ("a2", "TrusteeAction"), ("s", "ThreateningSituation")],
            [("bringsAbout", "a1", "s"), ("bringsAbout", "a2", "s")],
        )
    else:
        raise AssertionError(axiom)
    return g


def _passing_fixture(axiom: AxiomId) -> InstanceGraph:
    g = InstanceGraph()
    if axiom in (AxiomId.A1, AxiomId.A2):
        add_valid_trust(g, "t", "r", "e")
        if axiom is AxiomId.A2:
            g.add_element("ComplexIntention", id="ci")
            g.add_relation("inheresIn", "ci", "r")
            g.add_relation("componentOf", "t_i", "ci")
    elif axiom in (AxiomId.A3, AxiomId.A4, AxiomId.A5):
        add_valid_trust(g, "t", "r", "e", belief_kinds=("SocialCommitmentBelief",))
        add_grounding_agreement(g, "t", "r", "e")
    elif axiom is AxiomId.A6:
        add_valid_trust(g, "t", "john", "wife", belief_kinds=("SocialCommitmentBelief",))
        g.add_element("TrustedDelegation", id="d")
        g.add_relation("mediatesTrustor", "d", "john")
        g.add_relation("mediatesTrustee", "d", "wife")
        g.add_relation("groundedOn", "d", "t")
    elif axiom is AxiomId.A7:
        g = build(
            [("a1", "TrusteeAction"), ("s", "ThreateningSituation")],
            [("bringsAbout", "a1", "s")],
        )
    return g


def test_criterion_1_axiom_witness_suite(report):
    """criterion 1: axiom witness suite (A1-A7 minimal fixtures, <1s)"""

    def body():
        started = time.perf_counter()
        axioms = (AxiomId.A1, AxiomId.A2, AxiomId.A3, AxiomId.A4,
                  AxiomId.A5, AxiomId.A6, AxiomId.A7)
        for axiom in axioms:
            bad = [d for d in check_axiom(_violating_fixture(axiom), axiom)
                   if d.severity == "error"]
            assert len(bad) == 1, f"{axiom.name}: expected one error, got {bad}"
            good = [d for d in check_axiom(_passing_fixture(axiom), axiom)
                    if d.severity == "error"]
            assert good == [], f"{axiom.name}: passing fixture not clean"
        open_cycle, _ = parse((FIXTURES / "open-cycle.onti").read_bytes())
        diags = [d for d in validate(open_cycle) if d.severity == "error"]
        assert len(diags) == 1 and diags[0].axiom is AxiomId.A1
        closed_cycle, _ = parse((FIXTURES / "closed-cycle.onti").read_bytes())
        assert [d for d in validate(closed_cycle) if d.severity == "error"] == []
        assert time.perf_counter() - started < 1.0

    run(body, report)


# -- criterion 2: model-finder elimination -----------------------------------


def test_criterion_2_model_finder(report):
    """criterion 2: model finder (open-cycle elimination, oracle counts, <60s)"""

    def body():
        started = time.perf_counter()
        without_a1 = find_witness(
            OPEN_CYCLE_SIG, WitnessQuery(OpenCycle(K.GROUND_TRUST), NO_A1), bound=6
        )
        assert without_a1 is not None
        with_all = find_witness(
            OPEN_CYCLE_SIG, WitnessQuery(OpenCycle(K.GROUND_TRUST), ALL), bound=6
        )
        assert with_all is None
        for bound in (3, 4, 5):
            expected = len(_naive_models(SMALL_KINDS, SMALL_RELATIONS, ALL, bound))
            assert count_models(SMALL_SIG, ALL, bound=bound) == expected
        assert time.perf_counter() - started < 60.0

    run(body, report)


# -- criterion 3: case-study classification ----------------------------------


def test_criterion_3_case_study_classification(report):
    """criterion 3: case-study classification matches goldens exactly"""

    def body():
        for name in ("evoting", "ai-diagnosis"):
            graph, _ = service.load_document((CORPORA / f"{name}.onti").read_bytes())
            text = service.classification_text(service.run_classify(graph))
            assert text == (EXPECTED / f"{name}-classify.txt").read_text()
        evoting, _ = service.load_document((CORPORA / "evoting.onti").read_bytes())
        assert classify(evoting, "trust_evoting") is TrustKind.STRONG
        assert classify(evoting, "trust_ejs") is TrustKind.INSTITUTION_BASED
        ai, _ = service.load_document((CORPORA / "ai-diagnosis.onti").read_bytes())
        assert classify(ai, "trust_human") is TrustKind.STRONG
        assert classify(ai, "trust_ai") is TrustKind.WEAK

    run(body, report)


# -- criterion 4: degree orderings -------------------------------------------


def test_criterion_4_degree_orderings(report):
    """criterion 4: degree orderings (context contrast High/Low, human > AI)"""

    def body():
        graph, contexts = service.load_document((FIXTURES / "context-contrast.onti").read_bytes())
        from ontrust.measures import LMH

        sunny = trust_degree(graph, "trust_carl", contexts["sunny"], LMH)
        snowy = trust_degree(graph, "trust_carl", contexts["snowy"], LMH)
        assert sunny.degree - snowy.degree >= 1e-6
        assert sunny.degree_on_scale.raw == "High"
        assert snowy.degree_on_scale.raw == "Low"

        ai, ai_contexts = service.load_document((CORPORA / "ai-diagnosis.onti").read_bytes())
        ctx = ai_contexts["experiment"]
        human = trust_degree(ai, "trust_human", ctx).degree
        machine = trust_degree(ai, "trust_ai", ctx).degree
        assert human - machine >= 1e-6

    run(body, report)


# -- criterion 5: quantitative properties ------------------------------------


def _single_influence_graph(intensity, weight):
    g = InstanceGraph()
    add_valid_trust(g, "t", "r", "e", belief_kinds=("SocialCommitmentBelief",))
    g.element("t_b1").attrs["intensity"] = unit(intensity)
    g.add_element("TrustWarrantingSignal", id="sig")
    attach_influence(g, "inf", "sig", "t_b1", weight)
    return g


def test_criterion_5_quantitative_properties(report):
    """criterion 5: quantitative properties (randomized, 1000 cases each)"""

    def body():
        rng = random.Random(1234)

        # influence-weight monotonicity and clamping bounds
        for _ in range(1000):
            intensity = rng.random()
            w_low, w_high = sorted((rng.uniform(-2, 2), rng.uniform(-2, 2)))
            g = _single_influence_graph(intensity, w_low)
            lo = effective_intensity(g, "t_b1", CTX)
            g.element("inf").attrs["weight"] = w_high
            hi = effective_intensity(g, "t_b1", CTX)
            assert lo <= hi
            assert 0.0 <= lo <= 1.0 and 0.0 <= hi <= 1.0

        # empty-influence identity
        for _ in range(1000):
            g = InstanceGraph()
            add_valid_trust(g, "t", "r", "e", belief_kinds=("IntentionBelief",))
            value = unit(rng.random())
            g.element("t_b1").attrs["intensity"] = value
            assert effective_intensity(g, "t_b1", CTX) == normalize(value)

        # acyclic propagation vs memoized recursion
        for _ in range(1000):
            g, spec = _random_acyclic(rng)
            degrees = propagate(g, CTX)
            for tid, expected in _oracle_degrees(g, spec).items():
                assert abs(degrees[tid] - expected) < 1e-12

        # cyclic propagation vs 10,000-iteration brute-force fixed point
        for _ in range(1000):
            i1, i2 = rng.random(), rng.random()
            w12, w21 = rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)
            g = InstanceGraph()
            add_valid_trust(g, "t1", "a", "b", belief_kinds=("SocialCommitmentBelief",))
            add_valid_trust(g, "t2", "c", "d", belief_kinds=("SocialCommitmentBelief",))
            g.element("t1_b1").attrs["intensity"] = unit(i1)
            g.element("t2_b1").attrs["intensity"] = unit(i2)
            attach_influence(g, "inf12", "t2", "t1_b1", w12)
            attach_influence(g, "inf21", "t1", "t2_b1", w21)
            d1 = d2 = 0.0
            converged = False
            for _ in range(10_000):
                n1, n2 = clamp(i1 + w12 * d2), clamp(i2 + w21 * d1)
                if abs(n1 - d1) < 1e-15 and abs(n2 - d2) < 1e-15:
                    d1, d2 = n1, n2
                    converged = True
                    break
                d1, d2 = n1, n2
            try:
                degrees = propagate(g, CTX)
            except NonConvergent:
                assert not converged
                continue
            assert converged
            assert abs(degrees["t1"] - d1) < 1e-6
            assert abs(degrees["t2"] - d2) < 1e-6

    run(body, report)


# -- criterion 6: typology properties ----------------------------------------


def _random_trust_for_monotonicity(rng: random.Random) -> InstanceGraph:
    g = InstanceGraph()
    trustee_flavor = rng.choice(["agent", "object", "object_with_agent", "system"])
    if trustee_flavor == "system":
        g.add_element("SocialSystem", id="e")
    elif trustee_flavor == "agent":
        g.add_element(rng.choice(["Agent", "HumanAgent", "Organization"]), id="e")
    else:
        g.add_element("Object", id="e")
        if trustee_flavor == "object_with_agent":
            g.add_element("Organization", id="org")
            g.add_relation("componentOf", "org", "e")
    kinds = tuple(
        rng.choice(["CapabilityBelief", "IntentionBelief", "VulnerabilityBelief"])
        for _ in range(rng.randint(1, 3))
    )
    add_valid_trust(g, "t", "r", "e", belief_kinds=kinds)
    if rng.random() < 0.5:
        add_grounding_agreement(g, "t", "r", "e")
    return g


def _add_scb(g: InstanceGraph) -> None:
    g.add_element("SocialCommitmentBelief", attrs={"intensity": unit(0.5)}, id="scb")
    g.add_relation("inheresIn", "scb", "r")
    g.add_relation("componentOf", "scb", "t")
    g.add_element("MomentType", id="scb_mt")
    g.add_relation("about", "scb", "scb_mt")
    g.add_relation("externallyDependsOn", "scb", "scb_mt")
    g.add_relation("inheresIn", "scb_mt", "e")


def test_criterion_6_typology_properties(report):
    """criterion 6: typology (admissibility fixtures, self-trust, monotone classify)"""

    def body():
        # non-symmetric: a trusts b with no converse trust
        g = InstanceGraph()
        add_valid_trust(g, "t_ab", "a", "b")
        assert [d for d in validate(g) if d.severity == "error"] == []
        # non-reflexive: neither party trusts itself
        assert not any(
            t.id for t in g.elements_of_kind(K.TRUST)
            if g.bearer(t.id) in g.targets(t.id, "externallyDependsOn")
        )
        # non-transitive: a->b and b->c without a->c
        add_valid_trust(g, "t_bc", "b", "c")
        assert [d for d in validate(g) if d.severity == "error"] == []
        assert not any(
            g.bearer(t.id) == "a" and "c" in g.targets(t.id, "externallyDependsOn")
            for t in g.elements_of_kind(K.TRUST)
        )

        # self-trust admissible, external-dependence axiom skipped
        s = InstanceGraph()
        add_valid_trust(s, "t", "me", "me")
        s.relations = [
            r for r in s.relations
            if not (r.source == "t_b1" and r.kind.value == "externallyDependsOn")
        ]
        assert [d for d in validate(s) if d.severity == "error"] == []

        # classify is monotone under SocialCommitmentBelief addition
        rng = random.Random(99)
        for _ in range(1000):
            g = _random_trust_for_monotonicity(rng)
            before = classify(g, "t")
            _add_scb(g)
            after = classify(g, "t")
            assert at_least(after, before), (before, after)

    run(body, report)


# -- criterion 7: risk chains ------------------------------------------------


def test_criterion_7_risk_chains(report):
    """criterion 7: risk chains (e-voting misconduct chain, two-threat oracle)"""

    def body():
        evoting, _ = service.load_document((CORPORA / "evoting.onti").read_bytes())
        chains = derive_chains(evoting)
        assert len(chains) == 1
        chain = chains[0]
        assert chain.complete
        assert chain.action == "act_misconduct"
        labels = [evoting.element(i).label for i in chain.hurt_intentions]
        assert labels == ["choose their leaders"]

        toy = chain_graph()
        derived = derive_chains(toy)
        assert len(derived) == 2
        assert [(c.action, c.situation, c.threat, c.loss) for c in derived] == oracle_paths(toy)

    run(body, report)


# -- criterion 8: I/O --------------------------------------------------------


def test_criterion_8_io(report, capsys):
    """criterion 8: I/O (round-trip identity, clean corpora, triple counts)"""

    def body():
        for name in ("evoting.onti", "ai-diagnosis.onti"):
            data = (CORPORA / name).read_bytes()
            assert serialize(*parse(data)) == data
            assert cli_main(["validate", str(CORPORA / name)]) == 0
        rng = random.Random(2024)
        for _ in range(500):
            g, contexts = _random_graph(rng)
            data = serialize(g, contexts)
            assert serialize(*parse(data)) == data
            measures = sum(
                1
                for e in g.elements.values()
                for v in e.attrs.values()
                if isinstance(v, MeasureValue)
            )
            triples = export_triples(g).decode().splitlines()
            assert len(triples) == len(g.elements) + len(g.relations) + measures

    run(body, report)

"""Shared fixture builders for the test suite."""

from __future__ import annotations

from pathlib import Path

import pytest

from ontrust.graph import InstanceGraph
from ontrust.measures import LMH, MeasureValue

ROOT = Path(__file__).resolve().parent.parent
CORPORA = ROOT / "corpora"
FIXTURES = ROOT / "fixtures"


def lmh(label: str) -> MeasureValue:
    return MeasureValue(LMH, label)


def add_valid_trust(
    graph: InstanceGraph,
    tid: str,
    trustor: str,
    trustee: str,
    kind: str = "GroundTrust",
    belief_kinds: tuple[str, ...] = ("CapabilityBelief",),
    intensity: str = "Medium",
) -> dict:
    """Wire a trust node that passes every axiom.

    Creates the trustor/trustee elements if absent, an intention inhering in
    the trustor, and one belief per requested kind with its moment type
    inhering in the trustee.
    """
    if not graph.has(trustor):
        graph.add_element("Agent", id=trustor)
    if not graph.has(trustee):
        graph.add_element("Agent", id=trustee)
    graph.add_element(kind, id=tid)
    graph.add_relation("inheresIn", tid, trustor)
    graph.add_relation("externallyDependsOn", tid, trustee)
    intention = f"{tid}_i"
    graph.add_element("Intention", id=intention)
    graph.add_relation("inheresIn", intention, trustor)
    graph.add_relation("about", tid, intention)
    beliefs = []
    for n, bkind in enumerate(belief_kinds, start=1):
        bid = f"{tid}_b{n}"
        mt = f"{tid}_mt{n}"
        graph.add_element(bkind, attrs={"intensity": lmh(intensity)}, id=bid)
        graph.add_element("MomentType", id=mt)
        graph.add_relation("inheresIn", bid, trustor)
        graph.add_relation("componentOf", bid, tid)
        graph.add_relation("about", bid, mt)
        graph.add_relation("externallyDependsOn", bid, mt)
        graph.add_relation("inheresIn", mt, trustee)
        beliefs.append(bid)
    return {"trust": tid, "intention": intention, "beliefs": beliefs}


def add_grounding_agreement(graph: InstanceGraph, tid: str, trustor: str, trustee: str) -> str:
    """Attach an agreement with a trustee commitment to the trust's goal."""
    agreement = f"{tid}_agr"
    commitment = f"{tid}_sc"
    graph.add_element("Agreement", id=agreement)
    graph.add_relation("mediatesTrustor", agreement, trustor)
    graph.add_relation("mediatesTrustee", agreement, trustee)
    graph.add_element("SocialCommitment", id=commitment)
    graph.add_relation("inheresIn", commitment, trustee)
    graph.add_relation("componentOf", commitment, agreement)
    graph.add_relation("about", commitment, f"{tid}_i")
    graph.add_relation("groundedOn", tid, agreement)
    return agreement


@pytest.fixture
def valid_trust_graph() -> InstanceGraph:
    graph = InstanceGraph()
    add_valid_trust(graph, "t", "r", "e")
    return graph


@pytest.fixture
def evoting_bytes() -> bytes:
    return (CORPORA / "evoting.onti").read_bytes()


@pytest.fixture
def ai_bytes() -> bytes:
    return (CORPORA / "ai-diagnosis.onti").read_bytes()

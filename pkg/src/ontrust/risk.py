"""Risk chains emerging from trust relations.

A chain is an action bringing about a threatening situation that triggers a
threat event, optionally materialized as a loss event hurting intentions.
Chains without a loss are first-class results (the threat has potential,
nothing was lost yet).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import InstanceGraph
from .kinds import ElementKind as K
from .kinds import RelationKind as R
from .kinds import is_a


@dataclass
class RiskChain:
    action: str
    situation: str
    threat: str
    loss: str | None = None
    hurt_intentions: list[str] = field(default_factory=list)
    vulnerability: str | None = None

    @property
    def complete(self) -> bool:
        return self.loss is not None


def _is_risk_action(graph: InstanceGraph, element_id: str) -> bool:
    kind = graph.kind_of(element_id)
    return is_a(kind, K.TRUSTOR_ACTION) or is_a(kind, K.TRUSTEE_ACTION)


def _threat_vulnerability(graph: InstanceGraph, threat: str) -> str | None:
    """Disposition-playing-vulnerability the threat refers to, if annotated."""
    for disposition in graph.targets(threat, R.REFERS_TO):
        if graph.kind_of(disposition) is not K.DISPOSITION:
            continue
        if graph.out_edges(disposition, R.PLAYS_VULNERABILITY):
            return disposition
    return None


def derive_chains(graph: InstanceGraph) -> list[RiskChain]:
    """All maximal action -> situation -> threat (-> loss -> intentions) paths."""
    chains: list[RiskChain] = []
    for situation in graph.elements_of_kind(K.THREATENING_SITUATION):
        actions = [
            a for a in graph.sources(situation.id, R.BRINGS_ABOUT) if _is_risk_action(graph, a)
        ]
        for action in actions:
            for threat in graph.targets(situation.id, R.TRIGGERS):
                vulnerability = _threat_vulnerability(graph, threat)
                losses = graph.targets(threat, R.CAUSES)
                if not losses:
                    chains.append(
                        RiskChain(action, situation.id, threat, vulnerability=vulnerability)
                    )
                    continue
                for loss in losses:
                    chains.append(
                        RiskChain(
                            action,
                            situation.id,
                            threat,
                            loss=loss,
                            hurt_intentions=sorted(graph.targets(loss, R.HURTS)),
                            vulnerability=vulnerability,
                        )
                    )
    chains.sort(key=lambda c: (c.action, c.situation, c.threat, c.loss or ""))
    return chains


def threats_to(graph: InstanceGraph, intention_id: str) -> list[str]:
    """Threat events on some chain whose loss hurts the intention."""
    graph.element(intention_id)
    threats = {
        c.threat for c in derive_chains(graph) if intention_id in c.hurt_intentions
    }
    return sorted(threats)


def classify_situation(graph: InstanceGraph, situation_id: str) -> str:
    """'Threatening' | 'Successful' | 'Unclassified' for a situation element."""
    kind = graph.kind_of(situation_id)
    if is_a(kind, K.THREATENING_SITUATION) or graph.targets(situation_id, R.TRIGGERS):
        return "Threatening"
    if graph.out_edges(situation_id, R.SATISFIES):
        return "Successful"
    return "Unclassified"

"""Trust-kind lattice and structural classification of trust nodes.

A trust node resolves to a `TrustView` through its edges: the trustor is the
inherence bearer, the trustee the target of the external-dependence edge,
the intention the `about` target, and beliefs the moment-belief components.
Classification walks the specialization chain and returns the most specific
kind whose structural requirements hold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import GroundingTooWeak, MalformedTrust, UngroundedDelegation
from .graph import InstanceGraph
from .kinds import ElementKind as K
from .kinds import RelationKind as R
from .kinds import is_a

DECLARED_KIND_ATTR = "declared_kind"


class TrustKind(str, Enum):
    GROUND = "GroundTrust"
    SOCIAL = "SocialTrust"
    WEAK = "WeakTrust"
    STRONG = "StrongTrust"
    INSTITUTION_BASED = "InstitutionBasedTrust"


# Specialization chain: child -> direct generalization.
_GENERALIZES: dict[TrustKind, TrustKind | None] = {
    TrustKind.GROUND: None,
    TrustKind.SOCIAL: TrustKind.GROUND,
    TrustKind.WEAK: TrustKind.SOCIAL,
    TrustKind.STRONG: TrustKind.WEAK,
    TrustKind.INSTITUTION_BASED: TrustKind.GROUND,
}


def generalizations(kind: TrustKind) -> tuple[TrustKind, ...]:
    """`kind` and its generalizations, most specific first."""
    chain = [kind]
    while (up := _GENERALIZES[chain[-1]]) is not None:
        chain.append(up)
    return tuple(chain)


def at_least(kind: TrustKind, bound: TrustKind) -> bool:
    """True iff `kind` equals or specializes `bound`."""
    return bound in generalizations(kind)


@dataclass
class TrustView:
    """Resolved projection of one trust node."""

    trust_id: str
    trustor: str
    trustee: str
    intention: str
    beliefs: list[str] = field(default_factory=list)
    agreement: str | None = None
    delegation: str | None = None
    degree_attr: object | None = None


def resolve_view(graph: InstanceGraph, trust_id: str) -> TrustView:
    """Resolve trustor/trustee/intention/beliefs; raise MalformedTrust otherwise."""
    elem = graph.element(trust_id)
    missing: list[str] = []
    if not is_a(elem.kind, K.TRUST):
        raise MalformedTrust(trust_id, [f"element kind {elem.kind.value} is not a Trust"])

    trustor = graph.bearer(trust_id)
    if trustor is None:
        missing.append("missing trustor (no inheresIn bearer)")

    trustees = graph.targets(trust_id, R.EXTERNALLY_DEPENDS_ON)
    trustee = trustees[0] if trustees else None
    if trustee is None:
        missing.append("missing trustee (no externallyDependsOn target)")

    intentions = [
        t for t in graph.targets(trust_id, R.ABOUT) if is_a(graph.kind_of(t), K.INTENTION)
    ]
    intention = intentions[0] if intentions else None
    if intention is None:
        missing.append("missing intention (no about target of kind Intention)")

    beliefs = [
        s for s in graph.sources(trust_id, R.COMPONENT_OF) if is_a(graph.kind_of(s), K.BELIEF)
    ]
    if not beliefs:
        missing.append("missing component beliefs")

    if missing:
        raise MalformedTrust(trust_id, missing)

    agreements = [
        t for t in graph.targets(trust_id, R.GROUNDED_ON) if graph.kind_of(t) is K.AGREEMENT
    ]
    delegations = [
        d.source
        for d in graph.in_edges(trust_id, R.GROUNDED_ON)
        if graph.kind_of(d.source) is K.TRUSTED_DELEGATION
    ]
    return TrustView(
        trust_id=trust_id,
        trustor=trustor,
        trustee=trustee,
        intention=intention,
        beliefs=beliefs,
        agreement=agreements[0] if agreements else None,
        delegation=delegations[0] if delegations else None,
        degree_attr=elem.attrs.get("degree"),
    )


def responsible_agents(graph: InstanceGraph, entity_id: str) -> list[str]:
    """Agents standing in for a non-agent entity via componentOf or refersTo."""
    out = []
    for rel in graph.in_edges(entity_id):
        if rel.kind in (R.COMPONENT_OF, R.REFERS_TO) and is_a(
            graph.kind_of(rel.source), K.AGENT
        ):
            out.append(rel.source)
    return out


def _social_condition(graph: InstanceGraph, view: TrustView) -> bool:
    trustee_kind = graph.kind_of(view.trustee)
    if is_a(trustee_kind, K.AGENT):
        return True
    # Indirect commitment: a responsible agent is linked to the trustee object.
    return bool(responsible_agents(graph, view.trustee))


def _weak_condition(graph: InstanceGraph, view: TrustView) -> bool:
    return any(
        is_a(graph.kind_of(b), K.SOCIAL_COMMITMENT_BELIEF) for b in view.beliefs
    )


def _trust_goals(graph: InstanceGraph, view: TrustView) -> set[str]:
    goals = {view.intention}
    goals.update(
        t for t in graph.targets(view.intention, R.ABOUT) if graph.kind_of(t) is K.GOAL
    )
    return goals


def _strong_condition(graph: InstanceGraph, view: TrustView) -> bool:
    if view.agreement is None:
        return False
    goals = _trust_goals(graph, view)
    trustee_side = {view.trustee, *responsible_agents(graph, view.trustee)}
    for part in graph.sources(view.agreement, R.COMPONENT_OF):
        if not is_a(graph.kind_of(part), K.SOCIAL_COMMITMENT):
            continue
        bearer = graph.bearer(part)
        if bearer not in trustee_side:
            continue
        if any(t in goals for t in graph.targets(part, R.ABOUT)):
            return True
    return False


def classify(graph: InstanceGraph, trust_id: str) -> TrustKind:
    """Most specific trust kind whose structural requirements hold."""
    view = resolve_view(graph, trust_id)
    if is_a(graph.kind_of(view.trustee), K.SOCIAL_SYSTEM):
        return TrustKind.INSTITUTION_BASED
    if not _social_condition(graph, view):
        return TrustKind.GROUND
    if not _weak_condition(graph, view):
        return TrustKind.SOCIAL
    if not _strong_condition(graph, view):
        return TrustKind.WEAK
    return TrustKind.STRONG


_REQUIREMENT_MESSAGES = {
    TrustKind.SOCIAL: "trustee is not an Agent and has no responsible-agent chain",
    TrustKind.WEAK: "missing SocialCommitmentBelief component",
    TrustKind.STRONG: "missing groundedOn Agreement",
    TrustKind.INSTITUTION_BASED: "trustee is not a SocialSystem",
}


def check_declared(graph: InstanceGraph, trust_id: str) -> list[str]:
    """Diagnostics for the declared-kind attribute against the structure.

    Empty iff the computed kind equals or specializes the declaration
    (declaring an abstraction is fine). Otherwise the first unmet
    requirement on the declaration's chain is named.
    """
    elem = graph.element(trust_id)
    declared_name = elem.attrs.get(DECLARED_KIND_ATTR)
    if declared_name is None:
        raise MalformedTrust(trust_id, ["no declared kind attribute"])
    try:
        declared = TrustKind(declared_name)
    except ValueError:
        return [f"unknown declared trust kind {declared_name!r}"]

    computed = classify(graph, trust_id)
    if at_least(computed, declared):
        return []

    view = resolve_view(graph, trust_id)
    predicates = {
        TrustKind.GROUND: lambda: True,
        TrustKind.SOCIAL: lambda: _social_condition(graph, view),
        TrustKind.WEAK: lambda: _weak_condition(graph, view),
        TrustKind.STRONG: lambda: _strong_condition(graph, view),
        TrustKind.INSTITUTION_BASED: lambda: is_a(
            graph.kind_of(view.trustee), K.SOCIAL_SYSTEM
        ),
    }
    for step in reversed(generalizations(declared)):
        if not predicates[step]():
            message = _REQUIREMENT_MESSAGES[step]
            if step is TrustKind.STRONG and view.agreement is not None:
                message = "grounding Agreement lacks a trustee commitment to the trust goal"
            return [message]
    return []


def is_self_trust(graph: InstanceGraph, trust_id: str) -> bool:
    view = resolve_view(graph, trust_id)
    return view.trustor == view.trustee


def delegation_grounding(graph: InstanceGraph, delegation_id: str) -> TrustView:
    """View of the trust a delegation is grounded on; must be at least WeakTrust."""
    elem = graph.element(delegation_id)
    if elem.kind is not K.TRUSTED_DELEGATION:
        raise UngroundedDelegation(
            f"{delegation_id} is a {elem.kind.value}, not a TrustedDelegation"
        )
    grounds = [
        t for t in graph.targets(delegation_id, R.GROUNDED_ON) if is_a(graph.kind_of(t), K.TRUST)
    ]
    if not grounds:
        raise UngroundedDelegation(f"delegation {delegation_id} has no groundedOn trust")
    trust_id = grounds[0]
    kind = classify(graph, trust_id)
    if not at_least(kind, TrustKind.WEAK):
        raise GroundingTooWeak(
            f"delegation {delegation_id} grounded on {kind.value}; WeakTrust required"
        )
    return resolve_view(graph, trust_id)

"""Element and relation kind system: the closed metamodel every graph is typed against.

The kind hierarchy is a fixed tree (trust kinds form a specialization chain
below ``Trust``); membership tests walk parent links rather than storing
ancestor sets on elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class ElementKind(str, Enum):
    AGENT = "Agent"
    HUMAN_AGENT = "HumanAgent"
    ARTIFICIAL_AGENT = "ArtificialAgent"
    SOCIAL_AGENT = "SocialAgent"
    ORGANIZATION = "Organization"
    OBJECT = "Object"
    PHYSICAL_OBJECT = "PhysicalObject"
    SOCIAL_OBJECT = "SocialObject"
    NORMATIVE_DESCRIPTION = "NormativeDescription"
    SOCIAL_SYSTEM = "SocialSystem"
    DISPOSITION = "Disposition"
    INTENTION = "Intention"
    COMPLEX_INTENTION = "ComplexIntention"
    BELIEF = "Belief"
    MOMENT_BELIEF = "MomentBelief"
    CAPABILITY_BELIEF = "CapabilityBelief"
    VULNERABILITY_BELIEF = "VulnerabilityBelief"
    INTENTION_BELIEF = "IntentionBelief"
    SOCIAL_COMMITMENT_BELIEF = "SocialCommitmentBelief"
    MENTAL_MOMENT = "MentalMoment"
    PERCEPTION = "Perception"
    DESIRE = "Desire"
    EMOTION = "Emotion"
    SOCIAL_COMMITMENT = "SocialCommitment"
    SOCIAL_CLAIM = "SocialClaim"
    TRUST = "Trust"
    GROUND_TRUST = "GroundTrust"
    SOCIAL_TRUST = "SocialTrust"
    WEAK_TRUST = "WeakTrust"
    STRONG_TRUST = "StrongTrust"
    INSTITUTION_BASED_TRUST = "InstitutionBasedTrust"
    AGREEMENT = "Agreement"
    TRUSTED_DELEGATION = "TrustedDelegation"
    INFLUENCE = "Influence"
    MOMENT_TYPE = "MomentType"
    ACTION = "Action"
    TRUSTOR_ACTION = "TrustorAction"
    TRUSTEE_ACTION = "TrusteeAction"
    COMMUNICATIVE_ACT = "CommunicativeAct"
    TRUST_CALIBRATION_COMMUNICATION = "TrustCalibrationCommunication"
    THREAT_EVENT = "ThreatEvent"
    LOSS_EVENT = "LossEvent"
    SITUATION = "Situation"
    RESULTING_SITUATION = "ResultingSituation"
    SUCCESSFUL_SITUATION = "SuccessfulSituation"
    THREATENING_SITUATION = "ThreateningSituation"
    TRUST_CALIBRATION_SIGNAL = "TrustCalibrationSignal"
    TRUST_WARRANTING_SIGNAL = "TrustWarrantingSignal"
    UNCERTAINTY_SIGNAL = "UncertaintySignal"
    TRUSTWORTHINESS_EVIDENCE = "TrustworthinessEvidence"
    GOAL = "Goal"


K = ElementKind

# Child -> parent. Roots map to None.
_PARENT: dict[ElementKind, ElementKind | None] = {
    K.AGENT: None,
    K.HUMAN_AGENT: K.AGENT,
    K.ARTIFICIAL_AGENT: K.AGENT,
    K.SOCIAL_AGENT: K.AGENT,
    K.ORGANIZATION: K.SOCIAL_AGENT,
    K.OBJECT: None,
    K.PHYSICAL_OBJECT: K.OBJECT,
    K.SOCIAL_OBJECT: K.OBJECT,
    K.NORMATIVE_DESCRIPTION: K.OBJECT,
    K.SOCIAL_SYSTEM: None,
    K.DISPOSITION: None,
    K.INTENTION: None,
    K.COMPLEX_INTENTION: K.INTENTION,
    K.BELIEF: None,
    K.MOMENT_BELIEF: K.BELIEF,
    K.CAPABILITY_BELIEF: K.MOMENT_BELIEF,
    K.VULNERABILITY_BELIEF: K.MOMENT_BELIEF,
    K.INTENTION_BELIEF: K.MOMENT_BELIEF,
    K.SOCIAL_COMMITMENT_BELIEF: K.MOMENT_BELIEF,
    K.MENTAL_MOMENT: None,
    K.PERCEPTION: K.MENTAL_MOMENT,
    K.DESIRE: K.MENTAL_MOMENT,
    K.EMOTION: K.MENTAL_MOMENT,
    K.SOCIAL_COMMITMENT: None,
    K.SOCIAL_CLAIM: None,
    K.TRUST: None,
    K.GROUND_TRUST: K.TRUST,
    K.SOCIAL_TRUST: K.GROUND_TRUST,
    K.WEAK_TRUST: K.SOCIAL_TRUST,
    K.STRONG_TRUST: K.WEAK_TRUST,
    K.INSTITUTION_BASED_TRUST: K.GROUND_TRUST,
    K.AGREEMENT: None,
    K.TRUSTED_DELEGATION: None,
    K.INFLUENCE: None,
    K.MOMENT_TYPE: None,
    K.ACTION: None,
    K.TRUSTOR_ACTION: K.ACTION,
    K.TRUSTEE_ACTION: K.ACTION,
    K.COMMUNICATIVE_ACT: K.ACTION,
    K.TRUST_CALIBRATION_COMMUNICATION: K.COMMUNICATIVE_ACT,
    K.THREAT_EVENT: None,
    K.LOSS_EVENT: None,
    K.SITUATION: None,
    K.RESULTING_SITUATION: K.SITUATION,
    K.SUCCESSFUL_SITUATION: K.RESULTING_SITUATION,
    K.THREATENING_SITUATION: K.RESULTING_SITUATION,
    K.TRUST_CALIBRATION_SIGNAL: None,
    K.TRUST_WARRANTING_SIGNAL: K.TRUST_CALIBRATION_SIGNAL,
    K.UNCERTAINTY_SIGNAL: K.TRUST_CALIBRATION_SIGNAL,
    K.TRUSTWORTHINESS_EVIDENCE: None,
    K.GOAL: None,
}

assert set(_PARENT) == set(ElementKind)


def parent_of(kind: ElementKind) -> ElementKind | None:
    return _PARENT[kind]


def ancestors(kind: ElementKind) -> tuple[ElementKind, ...]:
    """Ancestors of `kind`, nearest first, including `kind` itself."""
    chain = [kind]
    while (up := _PARENT[chain[-1]]) is not None:
        chain.append(up)
    return tuple(chain)


def is_a(kind: ElementKind, ancestor: ElementKind) -> bool:
    return ancestor in ancestors(kind)


def kind_from_name(name: str) -> ElementKind | None:
    try:
        return ElementKind(name)
    except ValueError:
        return None


class RelationKind(str, Enum):
    INHERES_IN = "inheresIn"
    EXTERNALLY_DEPENDS_ON = "externallyDependsOn"
    COMPONENT_OF = "componentOf"
    ABOUT = "about"
    REFERS_TO = "refersTo"
    MEDIATES_TRUSTOR = "mediatesTrustor"
    MEDIATES_TRUSTEE = "mediatesTrustee"
    GROUNDED_ON = "groundedOn"
    TRUSTS = "trusts"
    PLAYS_CAPABILITY = "playsCapability"
    PLAYS_VULNERABILITY = "playsVulnerability"
    BRINGS_ABOUT = "bringsAbout"
    TRIGGERS = "triggers"
    CAUSES = "causes"
    HURTS = "hurts"
    INFLUENCES = "influences"
    INFLUENCED_BELIEF = "influencedBelief"
    EMITS = "emits"
    EXPRESSED_IN = "expressedIn"
    SATISFIES = "satisfies"
    CHARACTERIZES = "characterizes"


R = RelationKind


@dataclass(frozen=True)
class RelationSignature:
    """Domain/range kind sets plus informative cardinality bounds.

    Cardinalities are metadata only; they are enforced by the constraint
    checkers so that partially built models can be constructed first.
    """

    domain: frozenset[ElementKind]
    range: frozenset[ElementKind]
    source_card: str = "0..*"
    target_card: str = "0..*"

    def admits(self, source_kind: ElementKind, target_kind: ElementKind) -> bool:
        return any(is_a(source_kind, d) for d in self.domain) and any(
            is_a(target_kind, r) for r in self.range
        )


_BEARERS = frozenset({K.AGENT, K.OBJECT, K.SOCIAL_SYSTEM})
_MOMENTS = frozenset(
    {
        K.BELIEF,
        K.MENTAL_MOMENT,
        K.INTENTION,
        K.TRUST,
        K.DISPOSITION,
        K.SOCIAL_COMMITMENT,
        K.SOCIAL_CLAIM,
        K.MOMENT_TYPE,
    }
)
_INFLUENCE_SOURCES = frozenset(
    {K.TRUST, K.MENTAL_MOMENT, K.TRUST_CALIBRATION_SIGNAL, K.TRUSTWORTHINESS_EVIDENCE}
)

SIGNATURES: dict[RelationKind, RelationSignature] = {
    R.INHERES_IN: RelationSignature(_MOMENTS, _BEARERS, "0..*", "0..1"),
    R.EXTERNALLY_DEPENDS_ON: RelationSignature(
        frozenset({K.BELIEF, K.MENTAL_MOMENT, K.TRUST, K.SOCIAL_COMMITMENT, K.SOCIAL_CLAIM}),
        frozenset({K.AGENT, K.OBJECT, K.SOCIAL_SYSTEM, K.MOMENT_TYPE}),
    ),
    R.COMPONENT_OF: RelationSignature(
        frozenset(
            {
                K.AGENT,
                K.OBJECT,
                K.SOCIAL_SYSTEM,
                K.BELIEF,
                K.INTENTION,
                K.SOCIAL_COMMITMENT,
                K.SOCIAL_CLAIM,
                K.DISPOSITION,
                K.MOMENT_TYPE,
            }
        ),
        frozenset({K.TRUST, K.COMPLEX_INTENTION, K.AGREEMENT, K.SOCIAL_SYSTEM, K.OBJECT}),
    ),
    R.ABOUT: RelationSignature(
        frozenset(
            {
                K.TRUST,
                K.BELIEF,
                K.INTENTION,
                K.SOCIAL_COMMITMENT,
                K.SOCIAL_CLAIM,
                K.TRUST_CALIBRATION_SIGNAL,
                K.TRUSTWORTHINESS_EVIDENCE,
                K.MENTAL_MOMENT,
            }
        ),
        frozenset({K.INTENTION, K.GOAL, K.MOMENT_TYPE, K.DISPOSITION}),
    ),
    R.REFERS_TO: RelationSignature(
        frozenset(
            {
                K.TRUSTWORTHINESS_EVIDENCE,
                K.TRUST_CALIBRATION_SIGNAL,
                K.SOCIAL_COMMITMENT,
                K.AGENT,
                K.MOMENT_TYPE,
                K.THREAT_EVENT,
            }
        ),
        frozenset({K.AGENT, K.OBJECT, K.SOCIAL_SYSTEM, K.DISPOSITION}),
    ),
    R.MEDIATES_TRUSTOR: RelationSignature(
        frozenset({K.AGREEMENT, K.TRUSTED_DELEGATION}), frozenset({K.AGENT}), "0..*", "1"
    ),
    R.MEDIATES_TRUSTEE: RelationSignature(
        frozenset({K.AGREEMENT, K.TRUSTED_DELEGATION}), _BEARERS, "0..*", "1"
    ),
    R.GROUNDED_ON: RelationSignature(
        frozenset({K.TRUST, K.TRUSTED_DELEGATION}), frozenset({K.AGREEMENT, K.TRUST})
    ),
    R.TRUSTS: RelationSignature(frozenset({K.AGENT}), _BEARERS),
    R.PLAYS_CAPABILITY: RelationSignature(frozenset({K.DISPOSITION}), frozenset({K.TRUST})),
    R.PLAYS_VULNERABILITY: RelationSignature(frozenset({K.DISPOSITION}), frozenset({K.TRUST})),
    R.BRINGS_ABOUT: RelationSignature(frozenset({K.ACTION}), frozenset({K.SITUATION})),
    R.TRIGGERS: RelationSignature(frozenset({K.SITUATION}), frozenset({K.THREAT_EVENT})),
    R.CAUSES: RelationSignature(frozenset({K.THREAT_EVENT}), frozenset({K.LOSS_EVENT})),
    R.HURTS: RelationSignature(frozenset({K.LOSS_EVENT}), frozenset({K.INTENTION})),
    R.INFLUENCES: RelationSignature(_INFLUENCE_SOURCES, frozenset({K.INFLUENCE}), "0..*", "1"),
    R.INFLUENCED_BELIEF: RelationSignature(
        frozenset({K.INFLUENCE}), frozenset({K.BELIEF}), "1", "0..*"
    ),
    R.EMITS: RelationSignature(
        _BEARERS, frozenset({K.COMMUNICATIVE_ACT, K.TRUST_CALIBRATION_SIGNAL})
    ),
    R.EXPRESSED_IN: RelationSignature(
        frozenset({K.TRUST_CALIBRATION_SIGNAL}), frozenset({K.OBJECT})
    ),
    R.SATISFIES: RelationSignature(
        frozenset({K.SITUATION}), frozenset({K.GOAL, K.INTENTION})
    ),
    R.CHARACTERIZES: RelationSignature(
        frozenset({K.MOMENT_TYPE, K.DISPOSITION}),
        frozenset({K.AGENT, K.OBJECT, K.SOCIAL_SYSTEM, K.TRUST, K.BELIEF}),
    ),
}

assert set(SIGNATURES) == set(RelationKind)
assert all(sig.domain and sig.range for sig in SIGNATURES.values())


def relation_from_name(name: str) -> RelationKind | None:
    try:
        return RelationKind(name)
    except ValueError:
        return None

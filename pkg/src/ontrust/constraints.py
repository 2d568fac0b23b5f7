"""Structural cardinality checks and same-bearer axioms over instance graphs.

Each axiom id maps to exactly one checker. `validate` is the union of
`check_axiom` over all ids, deterministically ordered, so reports can be
diffed across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from numbers import Real

from .errors import UnknownAxiom
from .graph import InstanceGraph
from .kinds import ElementKind as K
from .kinds import RelationKind as R
from .kinds import is_a
from .typology import responsible_agents


class AxiomId(str, Enum):
    A1 = "A1_GroundTrustInherence"
    A1B = "A1b_ExternalDependence"
    A2 = "A2_ComplexIntentionHomogeneity"
    A3 = "A3_AgreementInherence"
    A4 = "A4_WeakTrustBeliefInherence"
    A5 = "A5_StrongTrustGrounding"
    A6 = "A6_DelegationSameParties"
    A7 = "A7_ThreateningSituationXor"
    S1 = "S1_TrustParts"
    S2 = "S2_MomentBeliefTarget"
    S3 = "S3_DispositionRoles"
    S4 = "S4_InfluenceShape"
    W1 = "W1_InstitutionGrounding"


ERROR_AXIOMS = tuple(a for a in AxiomId if a is not AxiomId.W1)


@dataclass
class Diagnostic:
    axiom: AxiomId
    severity: str  # "error" | "warning"
    offenders: list[str]
    message: str

    def to_line(self) -> str:
        return "\t".join(
            [self.axiom.value, self.severity, ",".join(self.offenders), self.message]
        )


def _error(axiom: AxiomId, offenders: list[str], message: str) -> Diagnostic:
    return Diagnostic(axiom, "error", offenders, message)


def _trustee_of(graph: InstanceGraph, trust_id: str) -> str | None:
    hits = graph.targets(trust_id, R.EXTERNALLY_DEPENDS_ON)
    return hits[0] if hits else None


def _trust_intentions(graph: InstanceGraph, trust_id: str) -> list[str]:
    return [
        t for t in graph.targets(trust_id, R.ABOUT) if is_a(graph.kind_of(t), K.INTENTION)
    ]


def _trust_beliefs(graph: InstanceGraph, trust_id: str) -> list[str]:
    return [
        s for s in graph.sources(trust_id, R.COMPONENT_OF) if is_a(graph.kind_of(s), K.BELIEF)
    ]


def _check_a1(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for trust in graph.elements_of_kind(K.TRUST):
        bearer = graph.bearer(trust.id)
        if bearer is None:
            continue
        for intention in _trust_intentions(graph, trust.id):
            ib = graph.bearer(intention)
            if ib is None:
                out.append(_error(AxiomId.A1, [trust.id, intention], "intention lacks bearer"))
            elif ib != bearer:
                out.append(
                    _error(
                        AxiomId.A1,
                        [trust.id, intention],
                        f"intention inheres in {ib}, trust in {bearer}",
                    )
                )
        for belief in _trust_beliefs(graph, trust.id):
            bb = graph.bearer(belief)
            if bb is None:
                out.append(_error(AxiomId.A1, [trust.id, belief], "belief lacks bearer"))
            elif bb != bearer:
                out.append(
                    _error(
                        AxiomId.A1,
                        [trust.id, belief],
                        f"belief inheres in {bb}, trust in {bearer}",
                    )
                )
    return out


def _check_a1b(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for trust in graph.elements_of_kind(K.TRUST):
        trustor = graph.bearer(trust.id)
        trustee = _trustee_of(graph, trust.id)
        if trustor is not None and trustor == trustee:
            continue  # self-trust: external dependence does not apply
        for belief in _trust_beliefs(graph, trust.id):
            if not is_a(graph.kind_of(belief), K.MOMENT_BELIEF):
                continue
            moment_types = [
                t
                for t in graph.targets(belief, R.EXTERNALLY_DEPENDS_ON)
                if graph.kind_of(t) is K.MOMENT_TYPE
            ]
            if not moment_types:
                out.append(
                    _error(
                        AxiomId.A1B,
                        [trust.id, belief],
                        "belief lacks externallyDependsOn MomentType",
                    )
                )
                continue
            if trustee is None:
                continue
            # Moment types may also inhere in a component of the trustee
            # (e.g. an organization that is part of a composite trustee).
            trustee_side = {trustee, *graph.sources(trustee, R.COMPONENT_OF)}
            for mt in moment_types:
                bearers = graph.targets(mt, R.INHERES_IN)
                if bearers and not trustee_side.intersection(bearers):
                    out.append(
                        _error(
                            AxiomId.A1B,
                            [trust.id, belief, mt],
                            "believed moment type does not inhere in the trustee",
                        )
                    )
    return out


def _check_a2(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for ci in graph.elements_of_kind(K.COMPLEX_INTENTION):
        whole_bearer = graph.bearer(ci.id)
        for part in graph.sources(ci.id, R.COMPONENT_OF):
            if not is_a(graph.kind_of(part), K.INTENTION):
                out.append(
                    _error(AxiomId.A2, [ci.id, part], "complex intention part is not an Intention")
                )
                continue
            pb = graph.bearer(part)
            if whole_bearer is not None and pb is not None and pb != whole_bearer:
                out.append(
                    _error(
                        AxiomId.A2,
                        [ci.id, part],
                        f"part inheres in {pb}, whole in {whole_bearer}",
                    )
                )
    return out


def _check_a3(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for agreement in graph.elements_of_kind(K.AGREEMENT):
        trustor = next(iter(graph.targets(agreement.id, R.MEDIATES_TRUSTOR)), None)
        trustee = next(iter(graph.targets(agreement.id, R.MEDIATES_TRUSTEE)), None)
        allowed = {p for p in (trustor, trustee) if p is not None}
        if trustee is not None:
            allowed.update(responsible_agents(graph, trustee))
        if not allowed:
            continue
        for part in graph.sources(agreement.id, R.COMPONENT_OF):
            kind = graph.kind_of(part)
            if not (is_a(kind, K.SOCIAL_COMMITMENT) or is_a(kind, K.SOCIAL_CLAIM)):
                continue
            bearer = graph.bearer(part)
            if bearer is not None and bearer not in allowed:
                out.append(
                    _error(
                        AxiomId.A3,
                        [agreement.id, part],
                        "agreement part inheres in neither mediated party",
                    )
                )
    return out


def _check_a4(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for trust in graph.elements_of_kind(K.TRUST):
        bearer = graph.bearer(trust.id)
        if bearer is None:
            continue
        for belief in _trust_beliefs(graph, trust.id):
            if not is_a(graph.kind_of(belief), K.SOCIAL_COMMITMENT_BELIEF):
                continue
            bb = graph.bearer(belief)
            if bb is not None and bb != bearer:
                out.append(
                    _error(
                        AxiomId.A4,
                        [trust.id, belief],
                        "social commitment belief does not inhere in the trustor",
                    )
                )
    return out


def _check_a5(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for trust in graph.elements_of_kind(K.TRUST):
        for agreement in graph.targets(trust.id, R.GROUNDED_ON):
            if graph.kind_of(agreement) is not K.AGREEMENT:
                continue
            trustor = graph.bearer(trust.id)
            trustee = _trustee_of(graph, trust.id)
            m_trustor = next(iter(graph.targets(agreement, R.MEDIATES_TRUSTOR)), None)
            m_trustee = next(iter(graph.targets(agreement, R.MEDIATES_TRUSTEE)), None)
            if trustor is not None and m_trustor is not None and trustor != m_trustor:
                out.append(
                    _error(
                        AxiomId.A5,
                        [trust.id, agreement],
                        f"agreement mediates trustor {m_trustor}, trust inheres in {trustor}",
                    )
                )
            if trustee is not None and m_trustee is not None and trustee != m_trustee:
                out.append(
                    _error(
                        AxiomId.A5,
                        [trust.id, agreement],
                        f"agreement mediates trustee {m_trustee}, trust depends on {trustee}",
                    )
                )
    return out


def _check_a6(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for delegation in graph.elements_of_kind(K.TRUSTED_DELEGATION):
        for trust in graph.targets(delegation.id, R.GROUNDED_ON):
            if not is_a(graph.kind_of(trust), K.TRUST):
                continue
            d_trustor = next(iter(graph.targets(delegation.id, R.MEDIATES_TRUSTOR)), None)
            d_trustee = next(iter(graph.targets(delegation.id, R.MEDIATES_TRUSTEE)), None)
            t_trustor = graph.bearer(trust)
            t_trustee = _trustee_of(graph, trust)
            if d_trustor is not None and t_trustor is not None and d_trustor != t_trustor:
                out.append(
                    _error(
                        AxiomId.A6,
                        [delegation.id, trust],
                        "delegation trustor differs from grounding trust trustor",
                    )
                )
            if d_trustee is not None and t_trustee is not None and d_trustee != t_trustee:
                out.append(
                    _error(
                        AxiomId.A6,
                        [delegation.id, trust],
                        "delegation trustee differs from grounding trust trustee",
                    )
                )
    return out


def _check_a7(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for situation in graph.elements_of_kind(K.THREATENING_SITUATION):
        bringers = [
            s
            for s in graph.sources(situation.id, R.BRINGS_ABOUT)
            if is_a(graph.kind_of(s), K.TRUSTOR_ACTION)
            or is_a(graph.kind_of(s), K.TRUSTEE_ACTION)
        ]
        if len(bringers) != 1:
            out.append(
                _error(
                    AxiomId.A7,
                    [situation.id, *bringers],
                    f"threatening situation brought about by {len(bringers)} "
                    "trustor/trustee actions, expected exactly 1",
                )
            )
    return out


def _check_s1(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for trust in graph.elements_of_kind(K.TRUST):
        intentions = _trust_intentions(graph, trust.id)
        if len(intentions) != 1:
            out.append(
                _error(
                    AxiomId.S1,
                    [trust.id],
                    f"trust has {len(intentions)} about-intentions, expected exactly 1",
                )
            )
        if not _trust_beliefs(graph, trust.id):
            out.append(_error(AxiomId.S1, [trust.id], "trust has no component beliefs"))
    return out


def _check_s2(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for belief in graph.elements_of_kind(K.MOMENT_BELIEF):
        moment_types = [
            t for t in graph.targets(belief.id, R.ABOUT) if graph.kind_of(t) is K.MOMENT_TYPE
        ]
        if len(moment_types) != 1:
            out.append(
                _error(
                    AxiomId.S2,
                    [belief.id],
                    f"moment belief is about {len(moment_types)} moment types, "
                    "expected exactly 1",
                )
            )
    return out


def _check_s3(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for rel in graph.relations:
        if rel.kind not in (R.PLAYS_CAPABILITY, R.PLAYS_VULNERABILITY):
            continue
        bearer = graph.bearer(rel.source)
        if bearer is None:
            out.append(
                _error(AxiomId.S3, [rel.source, rel.target], "role-playing disposition has no bearer")
            )
            continue
        trustee = _trustee_of(graph, rel.target)
        if trustee is not None and bearer != trustee:
            out.append(
                _error(
                    AxiomId.S3,
                    [rel.source, rel.target],
                    "role-playing disposition does not inhere in the trustee",
                )
            )
    return out


def _check_s4(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for influence in graph.elements_of_kind(K.INFLUENCE):
        sources = graph.sources(influence.id, R.INFLUENCES)
        if len(sources) != 1:
            out.append(
                _error(
                    AxiomId.S4,
                    [influence.id],
                    f"influence has {len(sources)} sources, expected exactly 1",
                )
            )
        targets = [
            t
            for t in graph.targets(influence.id, R.INFLUENCED_BELIEF)
            if is_a(graph.kind_of(t), K.MOMENT_BELIEF)
        ]
        if len(targets) != 1:
            out.append(
                _error(
                    AxiomId.S4,
                    [influence.id],
                    f"influence targets {len(targets)} moment beliefs, expected exactly 1",
                )
            )
        weight = influence.attrs.get("weight")
        if not isinstance(weight, Real) or not -1.0 <= float(weight) <= 1.0:
            out.append(
                _error(AxiomId.S4, [influence.id], "influence weight missing or outside [-1, 1]")
            )
    return out


def _check_w1(graph: InstanceGraph) -> list[Diagnostic]:
    out = []
    for trust in graph.elements_of_kind(K.TRUST):
        trustee = _trustee_of(graph, trust.id)
        if trustee is None or not is_a(graph.kind_of(trustee), K.SOCIAL_SYSTEM):
            continue
        grounded = any(
            is_a(graph.kind_of(t), K.TRUST) for t in graph.targets(trust.id, R.GROUNDED_ON)
        )
        if not grounded:
            out.append(
                Diagnostic(
                    AxiomId.W1,
                    "warning",
                    [trust.id],
                    "institution-based trust is not grounded on trust in participants",
                )
            )
    return out


_CHECKERS = {
    AxiomId.A1: _check_a1,
    AxiomId.A1B: _check_a1b,
    AxiomId.A2: _check_a2,
    AxiomId.A3: _check_a3,
    AxiomId.A4: _check_a4,
    AxiomId.A5: _check_a5,
    AxiomId.A6: _check_a6,
    AxiomId.A7: _check_a7,
    AxiomId.S1: _check_s1,
    AxiomId.S2: _check_s2,
    AxiomId.S3: _check_s3,
    AxiomId.S4: _check_s4,
    AxiomId.W1: _check_w1,
}

_AXIOM_ORDER = {axiom: i for i, axiom in enumerate(AxiomId)}


def _sorted(diags: list[Diagnostic]) -> list[Diagnostic]:
    return sorted(
        diags,
        key=lambda d: (_AXIOM_ORDER[d.axiom], d.offenders[0] if d.offenders else "", d.message),
    )


def check_axiom(graph: InstanceGraph, axiom: AxiomId | str) -> list[Diagnostic]:
    if isinstance(axiom, str):
        try:
            axiom = AxiomId[axiom] if axiom in AxiomId.__members__ else AxiomId(axiom)
        except ValueError:
            raise UnknownAxiom(f"unknown axiom {axiom!r}") from None
    return _sorted(_CHECKERS[axiom](graph))


def validate(
    graph: InstanceGraph, axioms: tuple[AxiomId, ...] | None = None
) -> list[Diagnostic]:
    """All violations of all (or the given) axioms, deterministically ordered."""
    out: list[Diagnostic] = []
    for axiom in axioms if axioms is not None else tuple(AxiomId):
        out.extend(_CHECKERS[axiom](graph))
    return _sorted(out)


def error_count(diags: list[Diagnostic]) -> int:
    return sum(1 for d in diags if d.severity == "error")

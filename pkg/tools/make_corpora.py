#!/usr/bin/env python3
"""Regenerates the checked-in corpora, fixtures, and golden reports.

Run from the repository root:  python3 tools/make_corpora.py
The outputs are deterministic; a clean run must leave git status unchanged.
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from ontrust import service
from ontrust.graph import InstanceGraph
from ontrust.measures import LMH, MeasureValue
from ontrust.ontio import serialize
from ontrust.quant import Context


def lmh(label: str) -> MeasureValue:
    return MeasureValue(LMH, label)


def add_belief(g, bid, kind, label, trust, mt, mt_label, mt_bearer, intensity, **measures):
    attrs = {"intensity": lmh(intensity)}
    attrs.update({k: lmh(v) for k, v in measures.items()})
    g.add_element(kind, label, attrs, id=bid)
    if not g.has(mt):
        g.add_element("MomentType", mt_label, id=mt)
        if mt_bearer:
            g.add_relation("inheresIn", mt, mt_bearer)
    g.add_relation("componentOf", bid, trust)
    g.add_relation("about", bid, mt)
    g.add_relation("externallyDependsOn", bid, mt)
    return bid


def add_influence(g, iid, source, belief, weight, source_kind=None, source_label="", bearer=None):
    if source_kind is not None:
        g.add_element(source_kind, source_label, id=source)
        if bearer:
            g.add_relation("inheresIn", source, bearer)
    g.add_element("Influence", "", {"weight": weight}, id=iid)
    g.add_relation("influences", source, iid)
    g.add_relation("influencedBelief", iid, belief)


# -- e-voting corpus (IT-mediated elections) ---------------------------------

# Mental-moment influences on electors' beliefs, with their signs.
EVOTING_MMI = [
    ("positive public perception of IT", +1),
    ("public sentiment of familiarity with IT", +1),
    ("perception of IT as a major vehicle for prosperity", +1),
    ("belief that IT is a pre-condition for inclusion in the modern economy", +1),
    ("perception of trustworthiness of the e-voting system", +1),
    ("perception of trustworthiness of the electoral authorities", +1),
    ("perception of e-voting as fraud-free", +1),
    ("belief in e-voting as a democratic process", +1),
    ("perception of a relaxed atmosphere from fast and un-crowded voting", +1),
    ("appreciation of the speed of the announcement of results", +1),
    ("perception of authorities as effective guarantors of e-voting", +1),
    ("perception of electoral authorities as powerful and benevolent", +1),
    ("constant concern about corruption", -1),
    ("negative beliefs about the honesty of politicians", -1),
]

EVOTING_TSI = [
    "political parties supporting the e-voting system",
    "human rights NGOs supporting the e-voting system",
    "media spreading the message of voting as a right",
    "media engagement informing citizens about where and how to vote",
    "media advertisements familiarizing voters with the technology",
    "voting machine used in school education and television publicity",
    "government supportive policies fostering a positive attitude to IT",
    "government predisposition towards modernization of elections",
    "dissemination of e-voting as an enabler of voting rights",
    "promotion of fairer elections as the motivation for e-voting",
    "parliament approval and multi-actor participation requirements",
    "publicized software enhancement process with party participation",
    "publicity of a clear schedule of test activities",
    "public ceremony of the sealing of the e-voting software",
    "prominent discourse on digital inclusion",
    "sustained efforts to provide access to IT in poor communities",
    "policies to overcome the digital divide",
]

EVOTING_TEI = [
    "successful deployment in efficient and problem-free elections",
    "conception as a democratic instrument independent of parties",
    "successful previous experience with e-voting",
    "lack of disputes over results",
    "parties endorsing the arrangements and accepting the results",
    "opinion surveys suggesting Brazilians trust the e-voting process",
    "positive reputation of the Brazilian IT industry",
    "upgrade activities between elections",
]


def build_evoting() -> tuple[InstanceGraph, list[Context]]:
    g = InstanceGraph()
    g.add_element("HumanAgent", "electors", id="electors")
    g.add_element("Object", "e-voting ecosystem", id="evoting")
    g.add_element("Organization", "electoral authorities", id="authorities")
    g.add_element("PhysicalObject", "e-voting technology", id="evoting_tech")
    g.add_element("SocialSystem", "Electoral Justice System", id="ejs")
    g.add_element("Organization", "Superior Electoral Court", id="tse")
    g.add_relation("componentOf", "authorities", "evoting")
    g.add_relation("componentOf", "evoting_tech", "evoting")
    g.add_relation("componentOf", "tse", "ejs")
    g.add_relation("trusts", "electors", "evoting")
    g.add_relation("trusts", "electors", "ejs")

    g.add_element("Intention", "choose their leaders", id="i_choose")
    g.add_relation("inheresIn", "i_choose", "electors")

    # Electors' (strong) trust in the e-voting ecosystem.
    g.add_element(
        "StrongTrust",
        "electors' trust in the e-voting ecosystem",
        {"declared_kind": "StrongTrust"},
        id="trust_evoting",
    )
    g.add_relation("inheresIn", "trust_evoting", "electors")
    g.add_relation("externallyDependsOn", "trust_evoting", "evoting")
    g.add_relation("about", "trust_evoting", "i_choose")

    add_belief(
        g, "cb_lawful", "CapabilityBelief", "e-voting is conducted lawfully and competently",
        "trust_evoting", "mt_lawful", "lawful and competent conduct", "evoting",
        "High", performanceLevel="High",
    )
    add_belief(
        g, "cb_accurate", "CapabilityBelief", "results accurately represent preferences",
        "trust_evoting", "mt_accurate", "accurate results", "evoting",
        "High", performanceLevel="High",
    )
    add_belief(
        g, "vb_security", "VulnerabilityBelief", "e-voting may suffer security breaches",
        "trust_evoting", "mt_breach", "security breaches", "evoting",
        "Low", manifestationLikelihood="Low",
    )
    add_belief(
        g, "ib_lawful", "IntentionBelief", "authorities intend to conduct e-voting lawfully",
        "trust_evoting", "mt_intend_law", "intention to conduct lawfully", "authorities",
        "High",
    )
    add_belief(
        g, "scb_law", "SocialCommitmentBelief",
        "authorities are committed to conduct e-voting according to the law",
        "trust_evoting", "mt_commit_law", "commitment to lawful conduct", "authorities",
        "High",
    )
    for bid in ("cb_lawful", "cb_accurate", "vb_security", "ib_lawful", "scb_law"):
        g.add_relation("inheresIn", bid, "electors")

    # Public agreement grounding the strong trust.
    g.add_element("Agreement", "public agreement on lawful e-voting", id="agr_public")
    g.add_relation("mediatesTrustor", "agr_public", "electors")
    g.add_relation("mediatesTrustee", "agr_public", "evoting")
    g.add_element(
        "SocialCommitment", "conduct the e-voting according to the law", id="sc_lawful"
    )
    g.add_relation("inheresIn", "sc_lawful", "authorities")
    g.add_relation("componentOf", "sc_lawful", "agr_public")
    g.add_relation("about", "sc_lawful", "i_choose")
    g.add_relation("groundedOn", "trust_evoting", "agr_public")

    # Dispositions of the ecosystem playing capability/vulnerability roles.
    g.add_element("Disposition", "capacity to run lawful elections", id="d_capability")
    g.add_element("Disposition", "exposure to security breaches", id="d_vulnerability")
    for did in ("d_capability", "d_vulnerability"):
        g.add_relation("inheresIn", did, "evoting")
    g.add_relation("playsCapability", "d_capability", "trust_evoting")
    g.add_relation("playsVulnerability", "d_vulnerability", "trust_evoting")

    # Institution-based trust in the Electoral Justice System, grounded on
    # social trust in its participants.
    g.add_element(
        "InstitutionBasedTrust",
        "electors' trust in the Electoral Justice System",
        {"declared_kind": "InstitutionBasedTrust"},
        id="trust_ejs",
    )
    g.add_relation("inheresIn", "trust_ejs", "electors")
    g.add_relation("externallyDependsOn", "trust_ejs", "ejs")
    g.add_relation("about", "trust_ejs", "i_choose")
    add_belief(
        g, "cb_ejs", "CapabilityBelief",
        "laws and regulatory mechanisms are conducive to situational success",
        "trust_ejs", "mt_protective", "protective structures", "ejs", "High",
    )
    g.add_relation("inheresIn", "cb_ejs", "electors")

    g.add_element(
        "SocialTrust",
        "electors' trust in the Superior Electoral Court",
        {"declared_kind": "SocialTrust"},
        id="trust_tse",
    )
    g.add_relation("inheresIn", "trust_tse", "electors")
    g.add_relation("externallyDependsOn", "trust_tse", "tse")
    g.add_relation("about", "trust_tse", "i_choose")
    add_belief(
        g, "ib_tse", "IntentionBelief", "the court intends to support e-voting",
        "trust_tse", "mt_support", "intention to support e-voting", "tse", "High",
    )
    g.add_relation("inheresIn", "ib_tse", "electors")
    g.add_relation("groundedOn", "trust_ejs", "trust_tse")

    # Influences (Appendix factor lists); weights are an encoding convention
    # of this corpus, not reported values: 0.25 per positive sign, -0.25 per
    # negative sign.
    positive_targets = ["cb_lawful", "cb_accurate", "ib_lawful", "scb_law"]
    negative_targets = ["cb_lawful", "cb_accurate"]
    pos_i = neg_i = 0

    def next_target(sign: int) -> str:
        nonlocal pos_i, neg_i
        if sign > 0:
            target = positive_targets[pos_i % len(positive_targets)]
            pos_i += 1
        else:
            target = negative_targets[neg_i % len(negative_targets)]
            neg_i += 1
        return target

    add_influence(g, "inf_tri1", "trust_ejs", "cb_lawful", 0.25)
    for n, (label, sign) in enumerate(EVOTING_MMI, start=1):
        add_influence(
            g, f"inf_mmi{n}", f"mmi{n}", next_target(sign), 0.25 * sign,
            source_kind="Perception", source_label=label, bearer="electors",
        )
    for n, label in enumerate(EVOTING_TSI, start=1):
        add_influence(
            g, f"inf_tsi{n}", f"tsi{n}", next_target(+1), 0.25,
            source_kind="TrustWarrantingSignal", source_label=label,
        )
    for n, label in enumerate(EVOTING_TEI, start=1):
        add_influence(
            g, f"inf_tei{n}", f"tei{n}", next_target(+1), 0.25,
            source_kind="TrustworthinessEvidence", source_label=label,
        )

    # Risk chain: misconduct by electoral authorities threatens the electors'
    # intention of choosing their leaders.
    g.add_element("TrusteeAction", "misconduct by electoral authorities", id="act_misconduct")
    g.add_element("ThreateningSituation", "doubts about lawful conduct", id="sit_misconduct")
    g.add_element("ThreatEvent", "threat to fair elections", id="threat_unfair")
    g.add_element("LossEvent", "unfair election outcome", id="loss_unfair")
    g.add_relation("bringsAbout", "act_misconduct", "sit_misconduct")
    g.add_relation("triggers", "sit_misconduct", "threat_unfair")
    g.add_relation("causes", "threat_unfair", "loss_unfair")
    g.add_relation("hurts", "loss_unfair", "i_choose")
    g.add_relation("refersTo", "threat_unfair", "d_vulnerability")

    g.add_element("TrustorAction", "electors cast their votes", id="act_vote")
    g.add_element("SuccessfulSituation", "lawful election concluded", id="sit_success")
    g.add_relation("bringsAbout", "act_vote", "sit_success")
    g.add_relation("satisfies", "sit_success", "i_choose")

    contexts = [Context("election")]
    return g, contexts


# -- AI medical diagnosis corpus ---------------------------------------------


def build_ai() -> tuple[InstanceGraph, list[Context]]:
    g = InstanceGraph()
    g.add_element("HumanAgent", "patient", id="patient")
    g.add_element("HumanAgent", "human doctor", id="human_doctor")
    g.add_element("ArtificialAgent", "AI doctor", id="ai_doctor")
    g.add_element("Organization", "hospital", id="hospital")
    g.add_relation("trusts", "patient", "human_doctor")
    g.add_relation("trusts", "patient", "ai_doctor")
    g.add_relation("trusts", "patient", "hospital")

    g.add_element("Intention", "receive an accurate diagnosis", id="i_diagnosis")
    g.add_relation("inheresIn", "i_diagnosis", "patient")

    # Trust in the human doctor (strong: employment contract agreement).
    g.add_element(
        "StrongTrust",
        "patient's trust in the human doctor",
        {"declared_kind": "StrongTrust"},
        id="trust_human",
    )
    g.add_relation("inheresIn", "trust_human", "patient")
    g.add_relation("externallyDependsOn", "trust_human", "human_doctor")
    g.add_relation("about", "trust_human", "i_diagnosis")
    add_belief(
        g, "hb_cap", "CapabilityBelief", "the human doctor can diagnose correctly",
        "trust_human", "mt_h_competence", "diagnostic competence", "human_doctor",
        "High", performanceLevel="High",
    )
    add_belief(
        g, "hb_int", "IntentionBelief", "the human doctor intends to help",
        "trust_human", "mt_h_intent", "intention to help the patient", "human_doctor",
        "High",
    )
    add_belief(
        g, "hb_scb", "SocialCommitmentBelief", "the human doctor is committed to care",
        "trust_human", "mt_h_commit", "commitment to patient care", "human_doctor",
        "High",
    )
    for bid in ("hb_cap", "hb_int", "hb_scb"):
        g.add_relation("inheresIn", bid, "patient")

    g.add_element("Agreement", "employment contract", id="agr_contract")
    g.add_relation("mediatesTrustor", "agr_contract", "patient")
    g.add_relation("mediatesTrustee", "agr_contract", "human_doctor")
    g.add_element("SocialCommitment", "provide an accurate diagnosis", id="sc_diagnosis")
    g.add_relation("inheresIn", "sc_diagnosis", "human_doctor")
    g.add_relation("componentOf", "sc_diagnosis", "agr_contract")
    g.add_relation("about", "sc_diagnosis", "i_diagnosis")
    g.add_relation("groundedOn", "trust_human", "agr_contract")

    # Trust in the AI doctor (weak: believed commitment, no agreement).
    g.add_element(
        "WeakTrust",
        "patient's trust in the AI doctor",
        {"declared_kind": "WeakTrust"},
        id="trust_ai",
    )
    g.add_relation("inheresIn", "trust_ai", "patient")
    g.add_relation("externallyDependsOn", "trust_ai", "ai_doctor")
    g.add_relation("about", "trust_ai", "i_diagnosis")
    add_belief(
        g, "ab_cap", "CapabilityBelief", "the AI doctor can diagnose correctly",
        "trust_ai", "mt_a_competence", "diagnostic competence of the AI", "ai_doctor",
        "Medium", performanceLevel="Medium",
    )
    add_belief(
        g, "ab_int", "IntentionBelief", "the AI doctor operates in the patient's interest",
        "trust_ai", "mt_a_intent", "operation in the patient's interest", "ai_doctor",
        "Medium",
    )
    add_belief(
        g, "ab_scb", "SocialCommitmentBelief", "the AI provider is committed to accuracy",
        "trust_ai", "mt_a_commit", "provider commitment to accuracy", "ai_doctor",
        "Medium",
    )
    for bid in ("ab_cap", "ab_int", "ab_scb"):
        g.add_relation("inheresIn", bid, "patient")

    # Social trust in the hospital.
    g.add_element(
        "SocialTrust",
        "patient's trust in the hospital",
        {"declared_kind": "SocialTrust"},
        id="trust_hospital",
    )
    g.add_relation("inheresIn", "trust_hospital", "patient")
    g.add_relation("externallyDependsOn", "trust_hospital", "hospital")
    g.add_relation("about", "trust_hospital", "i_diagnosis")
    add_belief(
        g, "hosp_ib", "IntentionBelief", "the hospital intends to ensure quality of care",
        "trust_hospital", "mt_hosp", "intention to ensure quality of care", "hospital",
        "Medium",
    )
    g.add_relation("inheresIn", "hosp_ib", "patient")

    # Influences from the experiment's factors; weights encode the reported
    # directions (technology familiarity: no significant effect, weight 0).
    add_influence(
        g, "inf_severity", "mm_severity", "ab_cap", -0.1,
        source_kind="Perception", source_label="perceived disease severity", bearer="patient",
    )
    add_influence(
        g, "inf_familiarity", "mm_familiarity", "ab_cap", 0.0,
        source_kind="MentalMoment", source_label="technology familiarity", bearer="patient",
    )
    add_influence(
        g, "inf_explanation", "sig_explanation", "ab_cap", 0.1,
        source_kind="TrustWarrantingSignal", source_label="the AI explains its diagnoses",
    )
    add_influence(
        g, "inf_track", "ev_track", "ab_cap", 0.1,
        source_kind="TrustworthinessEvidence", source_label="accuracy track record of the AI",
    )
    add_influence(
        g, "inf_stage", "mm_stage", "ab_int", -0.1,
        source_kind="Perception", source_label="perceived diagnosis stage", bearer="patient",
    )
    add_influence(g, "inf_hospital", "trust_hospital", "ab_scb", 0.2)
    add_influence(
        g, "inf_reputation", "ev_reputation", "hb_cap", 0.1,
        source_kind="TrustworthinessEvidence", source_label="reputation of the human doctor",
    )

    contexts = [Context("experiment"), Context("baseline", frozenset())]
    return g, contexts


# -- focused fixtures ---------------------------------------------------------


def build_context_contrast() -> tuple[InstanceGraph, list[Context]]:
    g = InstanceGraph()
    g.add_element("HumanAgent", "Mary", id="mary")
    g.add_element("HumanAgent", "Carl", id="carl")
    g.add_relation("trusts", "mary", "carl")
    g.add_element("Intention", "get to work safely", id="i_commute")
    g.add_relation("inheresIn", "i_commute", "mary")
    g.add_element(
        "SocialTrust",
        "Mary's trust in Carl to drive her",
        {"declared_kind": "SocialTrust"},
        id="trust_carl",
    )
    g.add_relation("inheresIn", "trust_carl", "mary")
    g.add_relation("externallyDependsOn", "trust_carl", "carl")
    g.add_relation("about", "trust_carl", "i_commute")
    add_belief(
        g, "cb_drive", "CapabilityBelief", "Carl can drive her to work",
        "trust_carl", "mt_driving", "driving skill", "carl",
        "Medium", performanceLevel="High",
    )
    g.add_relation("inheresIn", "cb_drive", "mary")

    add_influence(
        g, "inf_sunny", "p_sunny", "cb_drive", 0.4,
        source_kind="Perception", source_label="perception of clear weather", bearer="mary",
    )
    add_influence(
        g, "inf_snowy", "p_snowy", "cb_drive", -0.4,
        source_kind="Perception", source_label="perception of a snowstorm", bearer="mary",
    )
    contexts = [
        Context(
            "sunny",
            frozenset({"inf_sunny"}),
            {("cb_drive", "performanceLevel"): MeasureValue(LMH, "High")},
        ),
        Context(
            "snowy",
            frozenset({"inf_snowy"}),
            {("cb_drive", "performanceLevel"): MeasureValue(LMH, "Low")},
        ),
    ]
    return g, contexts


def build_cycle(closed: bool) -> InstanceGraph:
    g = InstanceGraph()
    g.add_element("Agent", "John", id="john")
    g.add_element("Agent", "the mechanic", id="mechanic")
    g.add_element("GroundTrust", "John's trust", id="trust_john")
    g.add_relation("inheresIn", "trust_john", "john")
    g.add_relation("externallyDependsOn", "trust_john", "mechanic")
    g.add_element("Intention", "have the car fixed", id="i_fix")
    g.add_relation("inheresIn", "i_fix", "john")
    g.add_relation("about", "trust_john", "i_fix")
    g.add_element(
        "CapabilityBelief", "the mechanic can fix the car",
        {"intensity": lmh("High")}, id="cb_fix",
    )
    g.add_relation("componentOf", "cb_fix", "trust_john")
    g.add_relation("inheresIn", "cb_fix", "john" if closed else "mechanic")
    g.add_element("MomentType", "repair skill", id="mt_repair")
    g.add_relation("inheresIn", "mt_repair", "mechanic")
    g.add_relation("about", "cb_fix", "mt_repair")
    g.add_relation("externallyDependsOn", "cb_fix", "mt_repair")
    return g


OPEN_CYCLE_SIG = """\
ontrust-sig/1
kind Agent 2
kind GroundTrust 1
kind Intention 1
kind CapabilityBelief 1
kind MomentType 1
relation inheresIn
relation externallyDependsOn
relation about
relation componentOf
"""


def write_goldens(name: str, graph: InstanceGraph, contexts, degree_context: str) -> None:
    expected = ROOT / "corpora" / "expected"
    expected.mkdir(parents=True, exist_ok=True)
    (expected / f"{name}-validate.txt").write_text(service.run_validate(graph).text)
    (expected / f"{name}-classify.txt").write_text(
        service.classification_text(service.run_classify(graph))
    )
    by_name = {c.name: c for c in contexts}
    by_name.setdefault("default", Context("default"))
    reports = service.run_degree(graph, by_name, degree_context, "lmh")
    (expected / f"{name}-degree.txt").write_text(service.degree_text(reports))
    chains = service.run_risk(graph)
    (expected / f"{name}-risk.txt").write_text(service.risk_text(graph, chains))


def main() -> None:
    corpora = ROOT / "corpora"
    fixtures = ROOT / "fixtures"
    corpora.mkdir(exist_ok=True)
    fixtures.mkdir(exist_ok=True)

    evoting, evoting_ctx = build_evoting()
    (corpora / "evoting.onti").write_bytes(serialize(evoting, evoting_ctx))
    write_goldens("evoting", evoting, evoting_ctx, "election")

    ai, ai_ctx = build_ai()
    (corpora / "ai-diagnosis.onti").write_bytes(serialize(ai, ai_ctx))
    write_goldens("ai-diagnosis", ai, ai_ctx, "experiment")

    contrast, contrast_ctx = build_context_contrast()
    (fixtures / "context-contrast.onti").write_bytes(serialize(contrast, contrast_ctx))
    (fixtures / "open-cycle.onti").write_bytes(serialize(build_cycle(False)))
    (fixtures / "closed-cycle.onti").write_bytes(serialize(build_cycle(True)))
    (fixtures / "open-cycle.sig").write_text(OPEN_CYCLE_SIG)
    print("wrote corpora, fixtures, and golden reports")


if __name__ == "__main__":
    main()

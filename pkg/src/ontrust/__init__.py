"""ONTrust instance-model engine.

Typed instance graphs over a UFO-C-style trust metamodel, with axiom
validation, trust-kind classification, context-dependent degrees, risk
chains, bounded model finding, and the ONT-I text format.
"""

__version__ = "1.0.0"

from .constraints import AxiomId, Diagnostic, check_axiom, validate
from .errors import OntrustError
from .finder import Signature, WitnessQuery, count_models, find_witness
from .graph import Element, InstanceGraph, Relation
from .kinds import ElementKind, RelationKind
from .measures import MeasureValue, Scale, normalize, to_scale
from .ontio import export_triples, parse, serialize
from .quant import Context, DegreeReport, compare_contexts, propagate, trust_degree
from .risk import RiskChain, classify_situation, derive_chains, threats_to
from .typology import TrustKind, TrustView, classify, check_declared, is_self_trust

__all__ = [
    "AxiomId",
    "Context",
    "DegreeReport",
    "Diagnostic",
    "Element",
    "ElementKind",
    "InstanceGraph",
    "MeasureValue",
    "OntrustError",
    "Relation",
    "RelationKind",
    "RiskChain",
    "Scale",
    "Signature",
    "TrustKind",
    "TrustView",
    "WitnessQuery",
    "check_axiom",
    "check_declared",
    "classify",
    "classify_situation",
    "compare_contexts",
    "count_models",
    "derive_chains",
    "export_triples",
    "find_witness",
    "is_self_trust",
    "normalize",
    "parse",
    "propagate",
    "serialize",
    "threats_to",
    "to_scale",
    "trust_degree",
    "validate",
]

"""Shared handlers behind both the CLI and the HTTP API.

Every function here is deterministic: identical inputs produce identical
report text, so goldens can be diffed.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import __version__
from .constraints import Diagnostic, validate
from .errors import MalformedTrust, OntrustError
from .finder import WitnessQuery, find_witness
from .graph import InstanceGraph
from .kinds import ElementKind as K
from .measures import scale_by_name
from .ontio import (
    FORMAT_VERSION,
    export_triples,
    parse,
    parse_axiom,
    parse_property,
    parse_signature,
    serialize,
)
from .quant import Context, DegreeReport, trust_degree
from .risk import RiskChain, derive_chains
from .typology import classify


def version_string() -> str:
    return f"ontrust {__version__} (format {FORMAT_VERSION})"


def load_document(data: bytes | str) -> tuple[InstanceGraph, dict[str, Context]]:
    graph, contexts = parse(data)
    by_name = {c.name: c for c in contexts}
    by_name.setdefault("default", Context("default"))
    return graph, by_name


# -- validate ----------------------------------------------------------------


@dataclass
class ValidationResult:
    diagnostics: list[Diagnostic]
    errors: int
    warnings: int

    @property
    def text(self) -> str:
        lines = [d.to_line() for d in self.diagnostics]
        lines.append(f"{self.errors} errors, {self.warnings} warnings")
        return "\n".join(lines) + "\n"


def run_validate(graph: InstanceGraph) -> ValidationResult:
    diags = validate(graph)
    errors = sum(1 for d in diags if d.severity == "error")
    return ValidationResult(diags, errors, len(diags) - errors)


# -- classify ----------------------------------------------------------------


@dataclass
class Classification:
    trust_id: str
    trustor: str
    trustee: str
    kind: str  # TrustKind value, or "malformed: ..." when unresolvable

    @property
    def line(self) -> str:
        return f"{self.trust_id}\t{self.trustor} -> {self.trustee}\t{self.kind}"


def _display(graph: InstanceGraph, element_id: str) -> str:
    return graph.element(element_id).label or element_id


def run_classify(graph: InstanceGraph, trust_id: str | None = None) -> list[Classification]:
    from .typology import resolve_view

    trusts = sorted(t.id for t in graph.elements_of_kind(K.TRUST))
    if trust_id is not None:
        graph.element(trust_id)
        trusts = [t for t in trusts if t == trust_id]
    out = []
    for tid in trusts:
        try:
            view = resolve_view(graph, tid)
            out.append(
                Classification(
                    tid,
                    _display(graph, view.trustor),
                    _display(graph, view.trustee),
                    classify(graph, tid).value,
                )
            )
        except MalformedTrust as exc:
            out.append(Classification(tid, "?", "?", f"malformed: {', '.join(exc.missing)}"))
    return out


def classification_text(rows: list[Classification]) -> str:
    return "".join(row.line + "\n" for row in rows)


# -- degree ------------------------------------------------------------------


def run_degree(
    graph: InstanceGraph,
    contexts: dict[str, Context],
    context_name: str,
    scale_name: str | None = None,
    trust_id: str | None = None,
) -> list[DegreeReport]:
    if context_name not in contexts:
        raise OntrustError(f"unknown context {context_name!r}")
    ctx = contexts[context_name]
    scale = scale_by_name(scale_name) if scale_name else None
    trusts = sorted(t.id for t in graph.elements_of_kind(K.TRUST))
    if trust_id is not None:
        graph.element(trust_id)
        trusts = [t for t in trusts if t == trust_id]
    return [trust_degree(graph, tid, ctx, scale) for tid in trusts]


def degree_text(reports: list[DegreeReport]) -> str:
    lines = []
    for report in reports:
        line = f"{report.trust_id}\t{report.degree:.6f}"
        if report.degree_on_scale is not None:
            line += f"\t{report.degree_on_scale.raw}"
        lines.append(line)
    return "".join(line + "\n" for line in lines)


# -- risk --------------------------------------------------------------------


def run_risk(graph: InstanceGraph) -> list[RiskChain]:
    return derive_chains(graph)


def risk_text(graph: InstanceGraph, chains: list[RiskChain]) -> str:
    lines = []
    for chain in chains:
        head = f"{chain.action} -> {chain.situation} -> {chain.threat}"
        if chain.complete:
            head += f" -> {chain.loss}"
        else:
            head += " POTENTIAL"
        lines.append(head)
        if chain.hurt_intentions:
            lines.append("  hurts: " + ", ".join(chain.hurt_intentions))
        if chain.vulnerability is not None:
            lines.append(f"  vulnerability: {chain.vulnerability}")
    return "".join(line + "\n" for line in lines)


# -- find --------------------------------------------------------------------


def run_find(
    sig_data: bytes | str,
    property_text: str,
    disabled: list[str] = (),
    bound: int | None = None,
) -> InstanceGraph | None:
    from .constraints import ERROR_AXIOMS

    sig = parse_signature(sig_data)
    prop = parse_property(property_text)
    enabled = frozenset(ERROR_AXIOMS) - {parse_axiom(name) for name in disabled}
    return find_witness(sig, WitnessQuery(prop, enabled), bound=bound)


def find_text(witness: InstanceGraph | None) -> str:
    if witness is None:
        return "no witness\n"
    return serialize(witness).decode("utf-8")


# -- export ------------------------------------------------------------------


def run_export(graph: InstanceGraph) -> bytes:
    return export_triples(graph)

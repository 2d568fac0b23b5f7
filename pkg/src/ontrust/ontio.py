"""ONT-I text format, the sig format for the finder, and triple export.

ONT-I is line oriented and UTF-8. The first line is the version tag.
Serialization is canonical (elements by id, relations by kind/from/to,
contexts by name, attribute keys sorted) so golden files byte-match and
parse-serialize is the identity on canonical documents. Relation ids are
not serialized; round trips reproduce graphs up to relation-id renaming.
"""

from __future__ import annotations

import re
import shlex
from numbers import Real
from typing import Any

from .constraints import AxiomId
from .errors import OntrustError, ParseError, UnknownAxiom, UnknownKind
from .finder import AxiomViolation, OpenCycle, Property, Satisfiable, Signature
from .graph import InstanceGraph
from .kinds import ElementKind, RelationKind, kind_from_name, relation_from_name
from .measures import (
    NAMED_SCALES,
    MeasureValue,
    _format_number,
    format_measure,
    parse_measure,
)
from .quant import Context

FORMAT_VERSION = "ontrust-i/1"
SIG_VERSION = "ontrust-sig/1"

_MEASURE_HEAD = re.compile(r"^(ord\[[^\]]+\]|cont\[[^\]]+\])$")


def _parse_attr_value(text: str, line: int) -> Any:
    head = text.split(":", 1)[0]
    if head in NAMED_SCALES or _MEASURE_HEAD.match(head):
        return parse_measure(text, line=line)
    try:
        return float(text)
    except ValueError:
        return text


def _format_attr_value(value: Any) -> str:
    if isinstance(value, MeasureValue):
        return format_measure(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Real):
        return _format_number(float(value))
    return str(value)


def _quote(token: str) -> str:
    if token == "" or any(c.isspace() for c in token) or '"' in token:
        return '"' + token.replace("\\", "\\\\").replace('"', '\\"') + '"'
    return token


def _split(text: str, line: int) -> list[str]:
    try:
        return shlex.split(text, comments=False, posix=True)
    except ValueError as exc:
        raise ParseError(str(exc), line=line) from None


def _parse_attrs(tokens: list[str], line: int) -> dict[str, Any]:
    attrs = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep or not key:
            raise ParseError(f"expected key=value, got {token!r}", line=line)
        attrs[key] = _parse_attr_value(value, line)
    return attrs


def parse(data: bytes | str) -> tuple[InstanceGraph, list[Context]]:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = text.splitlines()
    if not lines or lines[0].strip() != FORMAT_VERSION:
        raise ParseError(f"missing version line {FORMAT_VERSION!r}", line=1)

    graph = InstanceGraph()
    contexts: list[Context] = []
    # Pending state of the context block being read, if any.
    ctx_name: str | None = None
    ctx_active: frozenset[str] | None = None
    ctx_overrides: dict[tuple[str, str], MeasureValue] = {}

    def flush_context() -> None:
        nonlocal ctx_name, ctx_active, ctx_overrides
        if ctx_name is not None:
            contexts.append(Context(ctx_name, ctx_active, ctx_overrides))
        ctx_name, ctx_active, ctx_overrides = None, None, {}

    for number, raw in enumerate(lines[1:], start=2):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        indented = raw[:1].isspace()
        tokens = _split(stripped, number)
        directive = tokens[0]

        if indented:
            if ctx_name is None:
                raise ParseError("indented line outside a context block", line=number)
            if directive == "active":
                ids = tokens[1:]
                if ids == ["*"]:
                    ctx_active = None
                else:
                    for eid in ids:
                        if not graph.has(eid):
                            raise ParseError(f"unknown element {eid!r}", line=number)
                    ctx_active = frozenset(ids)
            elif directive == "override":
                if len(tokens) != 2:
                    raise ParseError("expected: override ELEM.MEASURE=value", line=number)
                target, sep, value = tokens[1].partition("=")
                elem, dot, measure = target.partition(".")
                if not sep or not dot or not elem or not measure:
                    raise ParseError("expected: override ELEM.MEASURE=value", line=number)
                if not graph.has(elem):
                    raise ParseError(f"unknown element {elem!r}", line=number)
                ctx_overrides[(elem, measure)] = parse_measure(value, line=number)
            else:
                raise ParseError(f"unknown context directive {directive!r}", line=number)
            continue

        flush_context()
        if directive == "element":
            if len(tokens) < 3:
                raise ParseError("expected: element ID KIND [\"label\"] [k=v ...]", line=number)
            eid, kind_name = tokens[1], tokens[2]
            rest = tokens[3:]
            label = ""
            if rest and "=" not in rest[0]:
                label, rest = rest[0], rest[1:]
            if kind_from_name(kind_name) is None:
                raise UnknownKind(f"unknown element kind {kind_name!r}", line=number)
            try:
                graph.add_element(kind_name, label, _parse_attrs(rest, number), id=eid)
            except OntrustError as exc:
                raise type(exc)(str(exc), line=number) from None
        elif directive == "relation":
            if len(tokens) < 4:
                raise ParseError("expected: relation KIND FROM TO [k=v ...]", line=number)
            kind_name, source, target = tokens[1], tokens[2], tokens[3]
            if relation_from_name(kind_name) is None:
                raise UnknownKind(f"unknown relation kind {kind_name!r}", line=number)
            try:
                graph.add_relation(kind_name, source, target, _parse_attrs(tokens[4:], number))
            except OntrustError as exc:
                raise type(exc)(str(exc), line=number) from None
        elif directive == "context":
            if len(tokens) != 2:
                raise ParseError("expected: context NAME", line=number)
            ctx_name = tokens[1]
        else:
            raise ParseError(f"unknown directive {directive!r}", line=number)

    flush_context()
    return graph, contexts


def _attr_tokens(attrs: dict[str, Any]) -> list[str]:
    return [f"{k}={_quote(_format_attr_value(attrs[k]))}" for k in sorted(attrs)]


def serialize(graph: InstanceGraph, contexts: list[Context] = ()) -> bytes:
    lines = [FORMAT_VERSION]
    for eid in sorted(graph.elements):
        elem = graph.elements[eid]
        tokens = ["element", eid, elem.kind.value]
        if elem.label:
            tokens.append(_quote(elem.label))
        tokens.extend(_attr_tokens(elem.attrs))
        lines.append(" ".join(tokens))
    for rel in sorted(graph.relations, key=lambda r: (r.kind.value, r.source, r.target)):
        tokens = ["relation", rel.kind.value, rel.source, rel.target]
        tokens.extend(_attr_tokens(rel.attrs))
        lines.append(" ".join(tokens))
    for ctx in sorted(contexts, key=lambda c: c.name):
        lines.append(f"context {_quote(ctx.name)}")
        if ctx.active_influences is None:
            lines.append("  active *")
        else:
            lines.append("  active" + "".join(f" {i}" for i in sorted(ctx.active_influences)))
        for elem, measure in sorted(ctx.overrides):
            value = format_measure(ctx.overrides[(elem, measure)])
            lines.append(f"  override {elem}.{measure}={value}")
    return ("\n".join(lines) + "\n").encode("utf-8")


# -- triple export -----------------------------------------------------------


def export_triples(graph: InstanceGraph) -> bytes:
    """One type triple per element, one per relation, one per measure attr."""
    lines = []
    for eid in sorted(graph.elements):
        kind = graph.elements[eid].kind
        lines.append(f"<{eid}> <rdf:type> <gufo:{kind.value}> .")
    for rel in sorted(graph.relations, key=lambda r: (r.kind.value, r.source, r.target)):
        lines.append(f"<{rel.source}> <ont:{rel.kind.value}> <{rel.target}> .")
    for eid in sorted(graph.elements):
        attrs = graph.elements[eid].attrs
        for name in sorted(attrs):
            if isinstance(attrs[name], MeasureValue):
                lines.append(f'<{eid}> <ont:{name}> "{format_measure(attrs[name])}" .')
    return "".join(line + "\n" for line in lines).encode("ascii")


# -- finder signature files --------------------------------------------------


def parse_signature(data: bytes | str) -> Signature:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = text.splitlines()
    if not lines or lines[0].strip() != SIG_VERSION:
        raise ParseError(f"missing version line {SIG_VERSION!r}", line=1)
    kinds: dict[ElementKind, int] = {}
    relations: set[RelationKind] = set()
    for number, raw in enumerate(lines[1:], start=2):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if tokens[0] == "kind" and len(tokens) == 3:
            kind = kind_from_name(tokens[1])
            if kind is None:
                raise UnknownKind(f"unknown element kind {tokens[1]!r}", line=number)
            try:
                cap = int(tokens[2])
            except ValueError:
                raise ParseError(f"bad count {tokens[2]!r}", line=number) from None
            if cap < 0:
                raise ParseError(f"negative count {cap}", line=number)
            kinds[kind] = cap
        elif tokens[0] == "relation" and len(tokens) == 2:
            rel = relation_from_name(tokens[1])
            if rel is None:
                raise UnknownKind(f"unknown relation kind {tokens[1]!r}", line=number)
            relations.add(rel)
        else:
            raise ParseError(f"expected 'kind NAME N' or 'relation NAME'", line=number)
    return Signature.of(kinds, relations)


def parse_axiom(name: str) -> AxiomId:
    if name in AxiomId.__members__:
        return AxiomId[name]
    try:
        return AxiomId(name)
    except ValueError:
        raise UnknownAxiom(f"unknown axiom {name!r}") from None


def parse_property(text: str) -> Property:
    head, sep, arg = text.partition(":")
    if head == "open-cycle":
        kind = ElementKind.TRUST
        if sep:
            kind = kind_from_name(arg)
            if kind is None:
                raise ParseError(f"unknown trust kind {arg!r}")
        return OpenCycle(kind)
    if head == "violation":
        if not sep:
            raise ParseError("expected violation:AXIOM")
        return AxiomViolation(parse_axiom(arg))
    if head == "satisfiable":
        require = []
        if sep and arg:
            for name in arg.split(","):
                kind = kind_from_name(name)
                if kind is None:
                    raise ParseError(f"unknown element kind {name!r}")
                require.append(kind)
        return Satisfiable(tuple(require))
    raise ParseError(f"unknown property {text!r}")

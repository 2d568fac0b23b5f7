"""Typed instance-graph store with domain/range enforcement at insertion.

Concurrency contract: mutation requires exclusive access; `freeze()` returns
the graph in a read-only state whose query operations are safe to share
across threads. `copy()` yields an independent mutable graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

from .errors import (
    DanglingEndpoint,
    FrozenGraph,
    SignatureViolation,
    UnknownElement,
    UnknownKind,
)
from .kinds import SIGNATURES, ElementKind, RelationKind, is_a


@dataclass
class Element:
    id: str
    kind: ElementKind
    label: str = ""
    attrs: dict[str, Any] = field(default_factory=dict)


@dataclass
class Relation:
    id: str
    kind: RelationKind
    source: str
    target: str
    attrs: dict[str, Any] = field(default_factory=dict)


class InstanceGraph:
    """Element/relation store; insertion order is preserved and observable."""

    def __init__(self) -> None:
        self.elements: dict[str, Element] = {}
        self.relations: list[Relation] = []
        self._next_element = 1
        self._next_relation = 1
        self._frozen = False

    # -- mutation -----------------------------------------------------------

    def _check_mutable(self) -> None:
        if self._frozen:
            raise FrozenGraph("graph is frozen; copy() it to mutate")

    def add_element(
        self,
        kind: ElementKind | str,
        label: str = "",
        attrs: dict[str, Any] | None = None,
        id: str | None = None,
    ) -> str:
        self._check_mutable()
        if isinstance(kind, str):
            try:
                kind = ElementKind(kind)
            except ValueError:
                raise UnknownKind(f"unknown element kind {kind!r}") from None
        if id is None:
            while (id := f"e{self._next_element}") in self.elements:
                self._next_element += 1
            self._next_element += 1
        elif id in self.elements:
            raise SignatureViolation(f"duplicate element id {id!r}")
        self.elements[id] = Element(id, kind, label, dict(attrs or {}))
        return id

    def add_relation(
        self,
        kind: RelationKind | str,
        source: str,
        target: str,
        attrs: dict[str, Any] | None = None,
    ) -> str:
        self._check_mutable()
        if isinstance(kind, str):
            try:
                kind = RelationKind(kind)
            except ValueError:
                raise UnknownKind(f"unknown relation kind {kind!r}") from None
        for endpoint in (source, target):
            if endpoint not in self.elements:
                raise DanglingEndpoint(f"relation endpoint {endpoint!r} does not exist")
        sig = SIGNATURES[kind]
        src_kind = self.elements[source].kind
        tgt_kind = self.elements[target].kind
        if not sig.admits(src_kind, tgt_kind):
            raise SignatureViolation(
                f"{kind.value} not allowed from {src_kind.value} to {tgt_kind.value}"
            )
        rid = f"r{self._next_relation}"
        self._next_relation += 1
        self.relations.append(Relation(rid, kind, source, target, dict(attrs or {})))
        return rid

    def remove_element(self, element_id: str) -> None:
        """Delete an element and, cascade, every relation touching it."""
        self._check_mutable()
        if element_id not in self.elements:
            raise UnknownElement(f"no element {element_id!r}")
        del self.elements[element_id]
        self.relations = [
            r for r in self.relations if r.source != element_id and r.target != element_id
        ]

    # -- reads --------------------------------------------------------------

    def element(self, element_id: str) -> Element:
        try:
            return self.elements[element_id]
        except KeyError:
            raise UnknownElement(f"no element {element_id!r}") from None

    def has(self, element_id: str) -> bool:
        return element_id in self.elements

    def kind_of(self, element_id: str) -> ElementKind:
        return self.element(element_id).kind

    def elements_of_kind(self, ancestor: ElementKind) -> list[Element]:
        return [e for e in self.elements.values() if is_a(e.kind, ancestor)]

    def query(
        self,
        relation: RelationKind | None = None,
        source: str | None = None,
        target: str | None = None,
        source_kind: ElementKind | None = None,
        target_kind: ElementKind | None = None,
    ) -> list[Relation]:
        """All relations matching every given filter, in insertion order."""
        out = []
        for r in self.relations:
            if relation is not None and r.kind is not relation:
                continue
            if source is not None and r.source != source:
                continue
            if target is not None and r.target != target:
                continue
            if source_kind is not None and not is_a(self.elements[r.source].kind, source_kind):
                continue
            if target_kind is not None and not is_a(self.elements[r.target].kind, target_kind):
                continue
            out.append(r)
        return out

    def out_edges(self, element_id: str, kind: RelationKind | None = None) -> list[Relation]:
        return self.query(relation=kind, source=element_id)

    def in_edges(self, element_id: str, kind: RelationKind | None = None) -> list[Relation]:
        return self.query(relation=kind, target=element_id)

    def targets(self, element_id: str, kind: RelationKind) -> list[str]:
        return [r.target for r in self.out_edges(element_id, kind)]

    def sources(self, element_id: str, kind: RelationKind) -> list[str]:
        return [r.source for r in self.in_edges(element_id, kind)]

    def bearer(self, element_id: str) -> str | None:
        """Target of the element's inherence edge, if any (first wins)."""
        hits = self.targets(element_id, RelationKind.INHERES_IN)
        return hits[0] if hits else None

    # -- lifecycle ----------------------------------------------------------

    def freeze(self) -> "InstanceGraph":
        self._frozen = True
        return self

    def copy(self) -> "InstanceGraph":
        g = InstanceGraph()
        for e in self.elements.values():
            g.elements[e.id] = Element(e.id, e.kind, e.label, dict(e.attrs))
        g.relations = [Relation(r.id, r.kind, r.source, r.target, dict(r.attrs)) for r in self.relations]
        g._next_element = self._next_element
        g._next_relation = self._next_relation
        return g

    def check_signatures(self) -> bool:
        """Full-scan assertion that every stored relation satisfies its signature."""
        return all(
            SIGNATURES[r.kind].admits(self.elements[r.source].kind, self.elements[r.target].kind)
            for r in self.relations
        )

    def __len__(self) -> int:
        return len(self.elements)


def build(
    elements: Iterable[tuple[str, ElementKind | str]] = (),
    relations: Iterable[tuple[RelationKind | str, str, str]] = (),
) -> InstanceGraph:
    """Small helper for fixtures: explicit ids, no labels or attrs."""
    g = InstanceGraph()
    for eid, kind in elements:
        g.add_element(kind, id=eid)
    for kind, src, tgt in relations:
        g.add_relation(kind, src, tgt)
    return g

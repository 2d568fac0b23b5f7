"""Bounded instance enumeration over the metamodel.

The search space is restricted to per-source-functional graphs: every
(element, relation kind) pair carries at most one outgoing edge. All
witness patterns of interest (open cycles, axiom violations) live inside
this fragment, and it makes each slot's value final once assigned, which
enables definite-violation pruning during the depth-first search. Leaves
are re-checked with the full constraint engine, so pruning only affects
speed, never soundness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .constraints import ERROR_AXIOMS, AxiomId, check_axiom, validate
from .errors import BoundExceeded
from .graph import InstanceGraph
from .kinds import SIGNATURES, ElementKind
from .kinds import ElementKind as K
from .kinds import RelationKind as R
from .kinds import RelationKind, is_a

FIND_LIMIT = 12
COUNT_LIMIT = 8


@dataclass(frozen=True)
class Signature:
    """Search bounds: per-kind element caps and the allowed relation kinds."""

    kinds: tuple[tuple[ElementKind, int], ...]
    relations: frozenset[RelationKind]

    @staticmethod
    def of(kinds: dict[ElementKind, int], relations: set[RelationKind]) -> "Signature":
        order = {k: i for i, k in enumerate(ElementKind)}
        items = tuple(
            sorted(((k, n) for k, n in kinds.items() if n > 0), key=lambda kn: order[kn[0]])
        )
        return Signature(items, frozenset(relations))

    @property
    def total(self) -> int:
        return sum(n for _, n in self.kinds)


@dataclass(frozen=True)
class OpenCycle:
    """A trust whose intention or belief part inheres in a different agent."""

    trust_kind: ElementKind = ElementKind.TRUST


@dataclass(frozen=True)
class AxiomViolation:
    axiom: AxiomId


@dataclass(frozen=True)
class Satisfiable:
    require_kinds: tuple[ElementKind, ...] = ()


Property = OpenCycle | AxiomViolation | Satisfiable


@dataclass(frozen=True)
class WitnessQuery:
    property: Property
    enabled_axioms: frozenset[AxiomId] = frozenset(ERROR_AXIOMS)


# Slot assignment order: bearers first so same-bearer pruning bites early.
_SLOT_PRIORITY = {
    R.INHERES_IN: 0,
    R.EXTERNALLY_DEPENDS_ON: 1,
    R.ABOUT: 2,
    R.COMPONENT_OF: 3,
    R.GROUNDED_ON: 4,
    R.MEDIATES_TRUSTOR: 5,
    R.MEDIATES_TRUSTEE: 5,
}


def _open_cycle_witnessed(graph: InstanceGraph, prop: OpenCycle) -> bool:
    for trust in graph.elements_of_kind(prop.trust_kind):
        if not is_a(trust.kind, K.TRUST):
            continue
        trustor = graph.bearer(trust.id)
        if trustor is None:
            continue
        parts = [
            t for t in graph.targets(trust.id, R.ABOUT) if is_a(graph.kind_of(t), K.INTENTION)
        ] + [
            s
            for s in graph.sources(trust.id, R.COMPONENT_OF)
            if is_a(graph.kind_of(s), K.BELIEF)
        ]
        for part in parts:
            bearer = graph.bearer(part)
            if bearer is not None and bearer != trustor:
                return True
    return False


def _property_holds(graph: InstanceGraph, prop: Property) -> bool:
    if isinstance(prop, Satisfiable):
        return all(
            any(is_a(e.kind, k) for e in graph.elements.values()) for k in prop.require_kinds
        )
    if isinstance(prop, OpenCycle):
        return _open_cycle_witnessed(graph, prop)
    return any(d.severity == "error" for d in check_axiom(graph, prop.axiom))


class _Search:
    def __init__(self, sig: Signature, enabled: frozenset[AxiomId], bound: int):
        self.sig = sig
        self.enabled = enabled
        self.bound = bound

    # -- element universes ---------------------------------------------------

    def _vectors(self):
        ranges = [range(n + 1) for _, n in self.sig.kinds]
        vectors = [v for v in itertools.product(*ranges) if sum(v) <= self.bound]
        vectors.sort(key=lambda v: (sum(v), v))
        return vectors

    def _materialize(self, vector):
        graph = InstanceGraph()
        groups: list[list[str]] = []
        for (kind, _), count in zip(self.sig.kinds, vector):
            group = []
            for j in range(count):
                group.append(graph.add_element(kind, id=f"{kind.value.lower()}{j + 1}"))
            if group:
                groups.append(group)
        return graph, groups

    def _slots(self, graph: InstanceGraph):
        order = {r: i for i, r in enumerate(RelationKind)}
        slots = []
        ids = list(graph.elements)
        for eid in ids:
            kind = graph.kind_of(eid)
            for rel in self.sig.relations:
                sig = SIGNATURES[rel]
                if not any(is_a(kind, d) for d in sig.domain):
                    continue
                targets = [
                    t for t in ids if any(is_a(graph.kind_of(t), r) for r in sig.range)
                ]
                if targets:
                    slots.append((eid, rel, targets))
        slots.sort(key=lambda s: (_SLOT_PRIORITY.get(s[1], 9), ids.index(s[0]), order[s[1]]))
        return slots

    # -- pruning -------------------------------------------------------------

    def _on(self, axiom: AxiomId) -> bool:
        return axiom in self.enabled

    def _prune_none(self, graph: InstanceGraph, eid: str, rel: RelationKind) -> bool:
        kind = graph.kind_of(eid)
        if rel is R.ABOUT:
            if self._on(AxiomId.S1) and is_a(kind, K.TRUST):
                return True  # the only about slot stayed empty: S1 unrecoverable
            if self._on(AxiomId.S2) and is_a(kind, K.MOMENT_BELIEF):
                return True
        if rel is R.INFLUENCED_BELIEF and self._on(AxiomId.S4) and kind is K.INFLUENCE:
            return True
        return False

    def _bearer_mismatch(self, graph: InstanceGraph, a: str, b: str) -> bool:
        ba, bb = graph.bearer(a), graph.bearer(b)
        return ba is not None and bb is not None and ba != bb

    def _prune_edge(self, graph: InstanceGraph, eid: str, rel: RelationKind, tgt: str) -> bool:
        kind = graph.kind_of(eid)
        tkind = graph.kind_of(tgt)
        if rel is R.ABOUT:
            if is_a(kind, K.TRUST):
                if self._on(AxiomId.S1) and not is_a(tkind, K.INTENTION):
                    return True
                if self._on(AxiomId.A1) and is_a(tkind, K.INTENTION):
                    return self._bearer_mismatch(graph, eid, tgt)
            if is_a(kind, K.MOMENT_BELIEF) and self._on(AxiomId.S2) and tkind is not K.MOMENT_TYPE:
                return True
            return False
        if rel is R.COMPONENT_OF:
            if self._on(AxiomId.A1) and is_a(kind, K.BELIEF) and is_a(tkind, K.TRUST):
                return self._bearer_mismatch(graph, eid, tgt)
            if self._on(AxiomId.A2) and tkind is K.COMPLEX_INTENTION:
                if not is_a(kind, K.INTENTION):
                    return True
                return self._bearer_mismatch(graph, eid, tgt)
            return False
        if rel is R.INHERES_IN:
            # eid's bearer just became final; re-check parts/wholes around it.
            if is_a(kind, K.TRUST):
                if self._on(AxiomId.A1):
                    for part in graph.targets(eid, R.ABOUT) + graph.sources(eid, R.COMPONENT_OF):
                        pk = graph.kind_of(part)
                        if (is_a(pk, K.INTENTION) or is_a(pk, K.BELIEF)) and self._bearer_mismatch(
                            graph, eid, part
                        ):
                            return True
            if self._on(AxiomId.A1) and (is_a(kind, K.BELIEF) or is_a(kind, K.INTENTION)):
                for whole in graph.targets(eid, R.COMPONENT_OF):
                    if is_a(graph.kind_of(whole), K.TRUST) and self._bearer_mismatch(
                        graph, eid, whole
                    ):
                        return True
                for trust in graph.sources(eid, R.ABOUT):
                    if is_a(graph.kind_of(trust), K.TRUST) and self._bearer_mismatch(
                        graph, eid, trust
                    ):
                        return True
            return False
        if rel is R.BRINGS_ABOUT and self._on(AxiomId.A7):
            if is_a(tkind, K.THREATENING_SITUATION) and (
                is_a(kind, K.TRUSTOR_ACTION) or is_a(kind, K.TRUSTEE_ACTION)
            ):
                bringers = [
                    s
                    for s in graph.sources(tgt, R.BRINGS_ABOUT)
                    if is_a(graph.kind_of(s), K.TRUSTOR_ACTION)
                    or is_a(graph.kind_of(s), K.TRUSTEE_ACTION)
                ]
                return len(bringers) > 1
            return False
        if rel is R.INFLUENCES and self._on(AxiomId.S4):
            return len(graph.sources(tgt, R.INFLUENCES)) > 1
        if rel is R.GROUNDED_ON and self._on(AxiomId.A5) and is_a(kind, K.TRUST):
            if tkind is K.AGREEMENT:
                trustor = graph.bearer(eid)
                m_trustor = next(iter(graph.targets(tgt, R.MEDIATES_TRUSTOR)), None)
                return (
                    trustor is not None and m_trustor is not None and trustor != m_trustor
                )
        return False

    # -- traversal -----------------------------------------------------------

    def _leaf_valid(self, graph: InstanceGraph) -> bool:
        return not any(
            d.severity == "error" for d in validate(graph, axioms=tuple(self.enabled))
        )

    def run(self, on_leaf):
        """DFS every per-source-functional graph within bounds; on_leaf may stop."""
        for vector in self._vectors():
            graph, groups = self._materialize(vector)
            slots = self._slots(graph)
            if self._descend(graph, groups, slots, 0, on_leaf):
                return True
        return False

    def _descend(self, graph, groups, slots, index, on_leaf) -> bool:
        if index == len(slots):
            if self._leaf_valid(graph) and on_leaf(graph, groups):
                return True
            return False
        eid, rel, targets = slots[index]
        if not self._prune_none(graph, eid, rel):
            if self._descend(graph, groups, slots, index + 1, on_leaf):
                return True
        for tgt in targets:
            graph.add_relation(rel, eid, tgt)
            pruned = self._prune_edge(graph, eid, rel, tgt)
            if not pruned and self._descend(graph, groups, slots, index + 1, on_leaf):
                return True
            graph.relations.pop()
        return False


def _canonical_key(graph: InstanceGraph, groups: list[list[str]]):
    """Minimal relation tuple under permutations of same-kind elements."""
    kinds = tuple(graph.kind_of(g[0]).value for g in groups)
    sizes = tuple(len(g) for g in groups)
    position = {eid: (gi, j) for gi, group in enumerate(groups) for j, eid in enumerate(group)}
    best = None
    for combo in itertools.product(*(itertools.permutations(range(n)) for n in sizes)):
        remap = [{orig: new for new, orig in enumerate(perm)} for perm in combo]
        key = tuple(
            sorted(
                (
                    r.kind.value,
                    (position[r.source][0], remap[position[r.source][0]][position[r.source][1]]),
                    (position[r.target][0], remap[position[r.target][0]][position[r.target][1]]),
                )
                for r in graph.relations
            )
        )
        if best is None or key < best:
            best = key
    return (kinds, sizes, best)


def find_witness(
    sig: Signature, query: WitnessQuery, bound: int | None = None
) -> InstanceGraph | None:
    requested = bound if bound is not None else sig.total
    if requested > FIND_LIMIT:
        raise BoundExceeded(f"find bound {requested} exceeds limit {FIND_LIMIT}")
    limit = min(requested, sig.total)
    found: list[InstanceGraph] = []

    def on_leaf(graph: InstanceGraph, groups) -> bool:
        if _property_holds(graph, query.property):
            found.append(graph.copy())
            return True
        return False

    _Search(sig, query.enabled_axioms, limit).run(on_leaf)
    return found[0] if found else None


def count_models(
    sig: Signature,
    enabled_axioms: frozenset[AxiomId] = frozenset(ERROR_AXIOMS),
    bound: int | None = None,
) -> int:
    requested = bound if bound is not None else sig.total
    if requested > COUNT_LIMIT:
        raise BoundExceeded(f"count bound {requested} exceeds limit {COUNT_LIMIT}")
    limit = min(requested, sig.total)
    seen: set = set()

    def on_leaf(graph: InstanceGraph, groups) -> bool:
        seen.add(_canonical_key(graph, groups))
        return False

    _Search(sig, enabled_axioms, limit).run(on_leaf)
    return len(seen)

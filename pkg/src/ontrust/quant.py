"""Context-dependent trust degrees: belief scoring and influence propagation.

The aggregation pipeline (normalize, influence-adjusted intensity,
multiplicative disposition scores, arithmetic mean) is the engine default;
every report names it so alternative strategies can be registered later
without silently changing results.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from graphlib import CycleError, TopologicalSorter

from .errors import InvalidMeasure, MalformedTrust, MissingIntensity, NonConvergent
from .graph import InstanceGraph
from .kinds import ElementKind as K
from .kinds import RelationKind as R
from .kinds import is_a
from .measures import MeasureValue, Scale, normalize, to_scale

STRATEGY = "mean-of-scores/v1"

DAMPING = 0.5
TOLERANCE = 1e-9
MAX_ITERATIONS = 100
EQUAL_EPS = 1e-12


@dataclass(frozen=True)
class Context:
    """Named evaluation context: which influences act, which measures differ.

    `active_influences = None` means every Influence element is active.
    Overrides are keyed by (element id, measure name).
    """

    name: str = "default"
    active_influences: frozenset[str] | None = None
    overrides: dict[tuple[str, str], MeasureValue] = field(default_factory=dict)

    def __hash__(self) -> int:  # overrides dict is treated as read-only
        return hash((self.name, self.active_influences, tuple(sorted(self.overrides))))


@dataclass
class Convergence:
    exact: bool
    iterations: int = 0
    residual: float = 0.0


@dataclass
class DegreeReport:
    trust_id: str
    context: str
    degree: float
    degree_on_scale: MeasureValue | None
    per_belief: dict[str, tuple[float, float]]  # belief -> (effective intensity, score)
    convergence: Convergence
    strategy: str = STRATEGY


# Measure placement per belief kind; reading a misplaced measure is an error.
_PLACEMENT = {
    "performanceLevel": (K.CAPABILITY_BELIEF,),
    "manifestationLikelihood": (K.CAPABILITY_BELIEF, K.VULNERABILITY_BELIEF),
}


def get_measure(
    graph: InstanceGraph, ctx: Context, element_id: str, name: str
) -> MeasureValue | None:
    value = ctx.overrides.get((element_id, name))
    if value is None:
        value = graph.element(element_id).attrs.get(name)
    if value is None:
        return None
    if not isinstance(value, MeasureValue):
        raise InvalidMeasure(f"attribute {name!r} of {element_id} is not a measure")
    allowed = _PLACEMENT.get(name)
    if allowed is not None and not any(is_a(graph.kind_of(element_id), a) for a in allowed):
        raise InvalidMeasure(
            f"measure {name!r} not allowed on kind {graph.kind_of(element_id).value}"
        )
    return value


def _active_influences_on(graph: InstanceGraph, belief: str, ctx: Context) -> list[str]:
    out = []
    for influence in graph.sources(belief, R.INFLUENCED_BELIEF):
        if ctx.active_influences is not None and influence not in ctx.active_influences:
            continue
        out.append(influence)
    return out


def _source_strength(
    graph: InstanceGraph, source: str, ctx: Context, degrees: dict[str, float]
) -> float:
    if is_a(graph.kind_of(source), K.TRUST):
        if source in degrees:
            return degrees[source]
        fallback = get_measure(graph, ctx, source, "degree")
        return normalize(fallback) if fallback is not None else 1.0
    for name in ("intensity", "value"):
        own = get_measure(graph, ctx, source, name)
        if own is not None:
            return normalize(own)
    return 1.0


def _effective_intensity(
    graph: InstanceGraph, belief: str, ctx: Context, degrees: dict[str, float]
) -> float:
    intensity = get_measure(graph, ctx, belief, "intensity")
    if intensity is None:
        raise MissingIntensity(f"belief {belief} has no intensity measure")
    total = normalize(intensity)
    for influence in _active_influences_on(graph, belief, ctx):
        weight = float(graph.element(influence).attrs.get("weight", 0.0))
        sources = graph.sources(influence, R.INFLUENCES)
        strength = _source_strength(graph, sources[0], ctx, degrees) if sources else 1.0
        total += weight * strength
    return min(1.0, max(0.0, total))


def _check_placement(graph: InstanceGraph, ctx: Context, belief: str) -> None:
    kind = graph.kind_of(belief)
    for name, allowed in _PLACEMENT.items():
        present = (belief, name) in ctx.overrides or name in graph.element(belief).attrs
        if present and not any(is_a(kind, a) for a in allowed):
            raise InvalidMeasure(f"measure {name!r} not allowed on kind {kind.value}")


def _belief_score(
    graph: InstanceGraph, belief: str, ctx: Context, degrees: dict[str, float]
) -> tuple[float, float]:
    _check_placement(graph, ctx, belief)
    intensity = _effective_intensity(graph, belief, ctx, degrees)
    kind = graph.kind_of(belief)
    if is_a(kind, K.CAPABILITY_BELIEF):
        perf = get_measure(graph, ctx, belief, "performanceLevel")
        likelihood = get_measure(graph, ctx, belief, "manifestationLikelihood")
        score = (
            intensity
            * (normalize(perf) if perf is not None else 1.0)
            * (normalize(likelihood) if likelihood is not None else 1.0)
        )
    elif is_a(kind, K.VULNERABILITY_BELIEF):
        likelihood = get_measure(graph, ctx, belief, "manifestationLikelihood")
        score = intensity * (1.0 - (normalize(likelihood) if likelihood is not None else 0.0))
    else:
        score = intensity
    return intensity, score


def _trust_beliefs(graph: InstanceGraph, trust_id: str) -> list[str]:
    return [
        s for s in graph.sources(trust_id, R.COMPONENT_OF) if is_a(graph.kind_of(s), K.BELIEF)
    ]


def _degree_of(
    graph: InstanceGraph, trust_id: str, ctx: Context, degrees: dict[str, float]
) -> float:
    beliefs = _trust_beliefs(graph, trust_id)
    if not beliefs:
        raise MalformedTrust(trust_id, ["missing component beliefs"])
    return sum(_belief_score(graph, b, ctx, degrees)[1] for b in beliefs) / len(beliefs)


def effective_intensity(graph: InstanceGraph, belief: str, ctx: Context) -> float:
    degrees, _ = _propagate(graph, ctx)
    return _effective_intensity(graph, belief, ctx, degrees)


def belief_score(graph: InstanceGraph, belief: str, ctx: Context) -> float:
    degrees, _ = _propagate(graph, ctx)
    return _belief_score(graph, belief, ctx, degrees)[1]


def _f1_dependencies(graph: InstanceGraph, ctx: Context) -> dict[str, set[str]]:
    """trust -> set of trusts whose degree feeds one of its beliefs (F1)."""
    scorable = {t.id for t in graph.elements_of_kind(K.TRUST) if _trust_beliefs(graph, t.id)}
    deps: dict[str, set[str]] = {t: set() for t in scorable}
    for trust in scorable:
        for belief in _trust_beliefs(graph, trust):
            for influence in _active_influences_on(graph, belief, ctx):
                for source in graph.sources(influence, R.INFLUENCES):
                    if source in scorable:
                        deps[trust].add(source)
    return deps


def _propagate(
    graph: InstanceGraph, ctx: Context
) -> tuple[dict[str, float], Convergence]:
    deps = _f1_dependencies(graph, ctx)
    try:
        order = tuple(TopologicalSorter(deps).static_order())
    except CycleError:
        order = None

    if order is not None:
        degrees: dict[str, float] = {}
        for trust in order:
            degrees[trust] = _degree_of(graph, trust, ctx, degrees)
        return degrees, Convergence(exact=True)

    # Cyclic F1 graph: damped fixed-point iteration from the zero vector.
    prev = {t: _degree_of(graph, t, ctx, dict.fromkeys(deps, 0.0)) for t in deps}
    for iteration in range(1, MAX_ITERATIONS + 1):
        nxt = {
            t: (1 - DAMPING) * prev[t] + DAMPING * _degree_of(graph, t, ctx, prev)
            for t in deps
        }
        residual = max(abs(nxt[t] - prev[t]) for t in deps)
        prev = nxt
        if residual < TOLERANCE:
            return prev, Convergence(exact=False, iterations=iteration, residual=residual)
    raise NonConvergent(prev, residual, MAX_ITERATIONS)


def propagate(graph: InstanceGraph, ctx: Context) -> dict[str, float]:
    """Degree of every scorable trust, resolving F1 trust-on-trust influence."""
    degrees, _ = _propagate(graph, ctx)
    return degrees


def trust_degree(
    graph: InstanceGraph,
    trust_id: str,
    ctx: Context,
    output_scale: Scale | None = None,
) -> DegreeReport:
    if not is_a(graph.kind_of(trust_id), K.TRUST):
        raise MalformedTrust(trust_id, ["element is not a Trust"])
    degrees, convergence = _propagate(graph, ctx)
    if trust_id not in degrees:
        raise MalformedTrust(trust_id, ["missing component beliefs"])
    per_belief = {
        b: _belief_score(graph, b, ctx, degrees) for b in _trust_beliefs(graph, trust_id)
    }
    degree = degrees[trust_id]
    return DegreeReport(
        trust_id=trust_id,
        context=ctx.name,
        degree=degree,
        degree_on_scale=to_scale(degree, output_scale) if output_scale else None,
        per_belief=per_belief,
        convergence=convergence,
    )


def compare_contexts(
    graph: InstanceGraph, trust_id: str, ctx_a: Context, ctx_b: Context
) -> str:
    a = trust_degree(graph, trust_id, ctx_a).degree
    b = trust_degree(graph, trust_id, ctx_b).degree
    if abs(a - b) < EQUAL_EPS:
        return "equal"
    return "A_higher" if a > b else "B_higher"

"""Bounded model finder against a naive exhaustive oracle."""

import itertools

import pytest

from ontrust.constraints import ERROR_AXIOMS, AxiomId, validate
from ontrust.errors import BoundExceeded
from ontrust.finder import (
    AxiomViolation,
    OpenCycle,
    Satisfiable,
    Signature,
    WitnessQuery,
    count_models,
    find_witness,
)
from ontrust.graph import InstanceGraph
from ontrust.kinds import SIGNATURES, ElementKind as K, RelationKind as R, is_a
from ontrust.ontio import serialize

ALL = frozenset(ERROR_AXIOMS)
NO_A1 = ALL - {AxiomId.A1}

SMALL_KINDS = {K.AGENT: 2, K.GROUND_TRUST: 1, K.INTENTION: 1, K.BELIEF: 1}
SMALL_RELATIONS = {R.INHERES_IN, R.ABOUT, R.COMPONENT_OF}
SMALL_SIG = Signature.of(SMALL_KINDS, SMALL_RELATIONS)

OPEN_CYCLE_SIG = Signature.of(
    {K.AGENT: 2, K.GROUND_TRUST: 1, K.INTENTION: 1, K.CAPABILITY_BELIEF: 1, K.MOMENT_TYPE: 1},
    {R.INHERES_IN, R.EXTERNALLY_DEPENDS_ON, R.ABOUT, R.COMPONENT_OF},
)


# -- independent naive enumerator (no pruning, no symmetry breaking) ---------


def _naive_models(kinds, relations, enabled, bound):
    kind_list = sorted(kinds, key=lambda k: list(K).index(k))
    seen = set()
    for vector in itertools.product(*[range(kinds[k] + 1) for k in kind_list]):
        if sum(vector) > bound:
            continue
        ids = []
        groups = []
        for kind, count in zip(kind_list, vector):
            group = [f"{kind.value}_{j}" for j in range(count)]
            ids.extend((eid, kind) for eid in group)
            if group:
                groups.append((kind, group))
        slots = []
        for eid, kind in ids:
            for rel in sorted(relations, key=lambda r: list(R).index(r)):
                sig = SIGNATURES[rel]
                if not any(is_a(kind, d) for d in sig.domain):
                    continue
                targets = [
                    t
                    for t, tk in ids
                    if any(is_a(tk, rng) for rng in sig.range)
                ]
                if targets:
                    slots.append((eid, rel, targets))
        for choice in itertools.product(*[[None] + s[2] for s in slots]):
            g = InstanceGraph()
            for eid, kind in ids:
                g.add_element(kind, id=eid)
            for (eid, rel, _), target in zip(slots, choice):
                if target is not None:
                    g.add_relation(rel, eid, target)
            if any(d.severity == "error" for d in validate(g, axioms=tuple(enabled))):
                continue
            seen.add(_naive_canonical(g, vector, groups))
    return seen


def _naive_canonical(g, vector, groups):
    best = None
    for combo in itertools.product(*[itertools.permutations(grp) for _, grp in groups]):
        rename = {}
        for (kind, _), perm in zip(groups, combo):
            for j, eid in enumerate(perm):
                rename[eid] = f"{kind.value}#{j}"
        key = tuple(
            sorted((r.kind.value, rename[r.source], rename[r.target]) for r in g.relations)
        )
        if best is None or key < best:
            best = key
    return (vector, best)


# -- tests -------------------------------------------------------------------


def test_count_bound_zero_is_empty_graph():
    assert count_models(SMALL_SIG, ALL, bound=0) == 1


@pytest.mark.parametrize("bound", [3, 4, 5])
def test_counts_match_naive_oracle(bound):
    expected = len(_naive_models(SMALL_KINDS, SMALL_RELATIONS, ALL, bound))
    assert count_models(SMALL_SIG, ALL, bound=bound) == expected


@pytest.mark.parametrize("bound", [3, 4])
def test_counts_match_naive_oracle_without_a1(bound):
    expected = len(_naive_models(SMALL_KINDS, SMALL_RELATIONS, NO_A1, bound))
    assert count_models(SMALL_SIG, NO_A1, bound=bound) == expected


def test_constraint_monotonicity():
    with_a1 = count_models(SMALL_SIG, ALL, bound=4)
    without_a1 = count_models(SMALL_SIG, NO_A1, bound=4)
    assert with_a1 <= without_a1


def test_open_cycle_witness_needs_a1_disabled():
    witness = find_witness(OPEN_CYCLE_SIG, WitnessQuery(OpenCycle(K.GROUND_TRUST), NO_A1), bound=6)
    assert witness is not None
    # soundness: passes every enabled axiom and exhibits the anti-pattern
    assert not any(
        d.severity == "error" for d in validate(witness, axioms=tuple(NO_A1))
    )
    assert any(d.axiom is AxiomId.A1 for d in validate(witness))


def test_witness_is_deterministic():
    query = WitnessQuery(OpenCycle(K.GROUND_TRUST), NO_A1)
    first = find_witness(OPEN_CYCLE_SIG, query, bound=6)
    second = find_witness(OPEN_CYCLE_SIG, query, bound=6)
    assert serialize(first) == serialize(second)


def test_axiom_violation_property():
    sig = Signature.of(
        {K.TRUSTOR_ACTION: 1, K.TRUSTEE_ACTION: 1, K.THREATENING_SITUATION: 1},
        {R.BRINGS_ABOUT},
    )
    witness = find_witness(sig, WitnessQuery(AxiomViolation(AxiomId.A7), ALL - {AxiomId.A7}))
    assert witness is not None
    assert any(d.axiom is AxiomId.A7 for d in validate(witness))
    none = find_witness(sig, WitnessQuery(AxiomViolation(AxiomId.A7), ALL))
    assert none is None


def test_satisfiable_empty_bound_is_none_when_kind_required():
    sig = Signature.of({K.TRUST: 1}, set())
    assert find_witness(sig, WitnessQuery(Satisfiable((K.TRUST,)), ALL), bound=0) is None


def test_bound_exceeded():
    sig = Signature.of({K.AGENT: 20}, set())
    with pytest.raises(BoundExceeded):
        find_witness(sig, WitnessQuery(Satisfiable(), ALL))
    with pytest.raises(BoundExceeded):
        count_models(sig, ALL)


def test_completeness_at_bound_matches_naive_existence():
    # if the naive oracle finds any model at the bound, find_witness must too
    bound = 3
    naive = _naive_models(SMALL_KINDS, SMALL_RELATIONS, ALL, bound)
    witness = find_witness(SMALL_SIG, WitnessQuery(Satisfiable(), ALL), bound=bound)
    assert (witness is not None) == bool(naive)

"""Acceptance suite: one test per shipped guarantee.

`pytest tests/test_acceptance.py -v` prints one pass/fail line per criterion.
The heavyweight artifacts (mutation classes and per-member group orders) are
computed once in module-scoped fixtures and shared by the criteria that walk
the same ground.
"""

import pathlib
import random
from collections import deque

import pytest

from cluster_presents import dynkin
from cluster_presents.coset import (
    coset_enumerate,
    evaluate_word,
    group_order,
    perm_rep,
    verify_mutation_isomorphism,
    weyl_order,
)
from cluster_presents.diagram import (
    Diagram,
    diagram_of,
    mutate_diagram,
    mutation_class,
    opposite,
    validate_finite_type_local,
)
from cluster_presents.exchange import (
    ExchangeMatrix,
    cycle_sign_condition,
    is_positive,
    is_two_finite,
    mutate_matrix,
)
from cluster_presents.formats import dump_presentation
from cluster_presents.presentation import full_presentation, reduced_presentation
from cluster_presents.roots import (
    CompanionBasis,
    build_root_system,
    companion_matrix,
    is_companion_basis,
    local_switch,
    mutate_companion,
    signed_graph,
    simple_root_basis,
)


DATA = pathlib.Path(__file__).parent / "data"

CLASS_LABELS = (
    "A2", "A3", "A4", "A5", "A6", "A7",
    "B/C2", "B/C3", "B/C4", "B/C5",
    "D4", "D5", "D6",
    "F4", "G2",
)

RANK_LE6_LABELS = (
    "A1", "A2", "A3", "A4", "A5", "A6",
    "B/C2", "B/C3", "B/C4", "B/C5", "B/C6",
    "D4", "D5", "D6",
    "E6", "F4", "G2",
)

COMPANION_LABELS = ("A4", "B/C3", "D4", "F4", "G2")

FOUR_CYCLE = diagram_of(
    ExchangeMatrix([[0, 1, 0, -1], [-1, 0, 1, 0], [0, -1, 0, 1], [1, 0, -1, 0]])
)


def _strategy(rank: int) -> str:
    return "direct" if rank <= 5 else "tower"


@pytest.fixture(scope="module")
def classes():
    out = {}
    for label in CLASS_LABELS:
        out[label] = mutation_class(dynkin.standard_diagram(label)).members
    return out


@pytest.fixture(scope="module")
def reduced_orders(classes):
    return {
        label: [
            group_order(reduced_presentation(member), _strategy(member.n))
            for member in members
        ]
        for label, members in classes.items()
    }


@pytest.fixture(scope="module")
def companion_walks():
    """Random inward-mutation walks; returns per-step failures and the
    distinct (companion matrix, accompanied exchange matrix) pairs met."""
    rng = random.Random(0)
    failures = []
    pairs = {}
    for label in COMPANION_LABELS:
        system = build_root_system(label)
        seed = dynkin.standard_exchange_matrix(label)
        for walk in range(1000):
            matrix = seed
            basis = simple_root_basis(system)
            for step in range(rng.randrange(1, 9)):
                k = rng.randrange(matrix.n)
                diagram = diagram_of(matrix)
                mutated = mutate_companion(basis, k, diagram, "inward")
                next_matrix = mutate_matrix(matrix, k)
                ok, reason = is_companion_basis(mutated, next_matrix)
                if not ok:
                    failures.append((label, walk, step, reason))
                restored = mutate_companion(
                    mutated, k, diagram_of(next_matrix), "outward"
                )
                if restored.vectors != basis.vectors:
                    failures.append((label, walk, step, "outward did not restore"))
                comp = companion_matrix(mutated)
                pairs.setdefault((comp.entries, next_matrix.entries), (comp, next_matrix))
                basis, matrix = mutated, next_matrix
    return failures, list(pairs.values())


def test_criterion_01_every_class_member_presents_the_weyl_group(classes, reduced_orders):
    for label, members in classes.items():
        assert members, f"empty mutation class for {label}"
        expected = weyl_order(label)
        for idx, order in enumerate(reduced_orders[label]):
            assert order == expected, (
                f"{label} member {idx}: order {order} != {expected}"
            )


def test_criterion_02_full_and_reduced_presentations_agree(classes, reduced_orders):
    for label, members in classes.items():
        for member, reduced_order in zip(members, reduced_orders[label]):
            full_order = group_order(full_presentation(member), _strategy(member.n))
            assert full_order == reduced_order, f"{label}: {full_order} != {reduced_order}"


def test_criterion_03_four_cycle_presentation_matches_golden_file():
    golden = (DATA / "d4_cycle_full.pres").read_text()
    pres = full_presentation(FOUR_CYCLE)
    assert dump_presentation(pres) == golden
    cycle_words = [rel.word for rel in pres.relations if rel.tag == "R3a"]
    assert cycle_words == [
        (0, 1, 2, 3, 2, 1),
        (1, 2, 3, 0, 3, 2),
        (2, 3, 0, 1, 0, 3),
        (3, 0, 1, 2, 1, 0),
    ]


def test_criterion_04_opposite_diagram_has_equal_order(classes, reduced_orders):
    for label, members in classes.items():
        for member, order in zip(members, reduced_orders[label]):
            opposite_order = group_order(
                reduced_presentation(opposite(member)), _strategy(member.n)
            )
            assert opposite_order == order, f"{label}: {opposite_order} != {order}"


def test_criterion_05_mutation_certificates_exhaustive(classes):
    for label in ("A3", "A4", "B/C3", "D4", "G2"):
        expected = weyl_order(label)
        for member in classes[label]:
            for k in range(member.n):
                report = verify_mutation_isomorphism(member, k)
                assert report.passed, (label, member.edges, k)
                assert report.order == expected


def test_criterion_06_diagram_mutation_commutes_with_matrix_mutation():
    rng = random.Random(0)
    for label in RANK_LE6_LABELS:
        seed = dynkin.standard_exchange_matrix(label)
        for _ in range(1000):
            matrix = seed
            diagram = diagram_of(seed)
            for _ in range(rng.randrange(1, 11)):
                k = rng.randrange(matrix.n)
                next_matrix = mutate_matrix(matrix, k)
                next_diagram = mutate_diagram(diagram, k)
                assert diagram_of(next_matrix) == next_diagram, (label, k)
                assert mutate_matrix(next_matrix, k) == matrix, (label, k)
                assert mutate_diagram(next_diagram, k) == diagram, (label, k)
                matrix, diagram = next_matrix, next_diagram


def test_criterion_07_companion_bases_survive_inward_walks(companion_walks):
    failures, _ = companion_walks
    assert failures == []


def test_criterion_08_companion_matrices_cycle_signed_and_positive(companion_walks):
    _, pairs = companion_walks
    assert pairs
    for comp, matrix in pairs:
        assert cycle_sign_condition(comp, diagram_of(matrix)), comp.entries
        assert is_positive(comp), comp.entries


def test_criterion_09_signed_graphs_switch_in_step_with_mutation():
    for label in ("A4", "D4"):
        system = build_root_system(label)
        seed_matrix = dynkin.standard_exchange_matrix(label)
        seed_basis = simple_root_basis(system)
        seen = {(seed_matrix.entries, seed_basis.vectors)}
        queue = deque([(seed_matrix, seed_basis, 0)])
        while queue:
            matrix, basis, depth = queue.popleft()
            diagram = diagram_of(matrix)
            graph = signed_graph(companion_matrix(basis))
            for k in range(matrix.n):
                mutated = mutate_companion(basis, k, diagram, "inward")
                switched = local_switch(
                    graph, k, [i for i in range(diagram.n) if diagram.weight(i, k) > 0]
                )
                assert switched == signed_graph(companion_matrix(mutated)), (
                    label,
                    matrix.entries,
                    k,
                )
                if depth < 6:
                    key = (mutate_matrix(matrix, k).entries, mutated.vectors)
                    if key not in seen:
                        seen.add(key)
                        queue.append((mutate_matrix(matrix, k), mutated, depth + 1))


def test_criterion_10_negative_controls_are_rejected():
    # a lattice basis of positive roots whose pairings are all nonzero
    system = build_root_system("A4")
    basis = CompanionBasis(
        system, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 1, 1, 0), (0, 1, 1, 1)]
    )
    ok, reason = is_companion_basis(basis, dynkin.standard_exchange_matrix("A4"))
    assert not ok
    assert reason.startswith("companion condition fails")

    report = validate_finite_type_local(Diagram(3, [(0, 1, 1), (0, 2, 1), (2, 1, 1)]))
    assert not report.ok

    assert not is_two_finite(ExchangeMatrix([[0, 2], [-2, 0]]))


def test_criterion_11_enumerator_is_self_consistent():
    rank_le5 = [l for l in RANK_LE6_LABELS if dynkin.parse_label(l)[1] <= 5]
    for label in rank_le5 + ["D6"]:
        pres = full_presentation(dynkin.standard_diagram(label))
        direct = group_order(pres, "direct")
        assert direct == group_order(pres, "tower"), label
        table = coset_enumerate(pres)
        rep = perm_rep(table)
        assert rep.degree == direct, label
        identity = tuple(range(rep.degree))
        for g in range(pres.n):
            assert evaluate_word(rep, (g, g)) == identity, (label, g)

"""Diagram layer: mutation, chordless cycles, validation, canonical forms, classes.

The heavier guarantees are cross-checked against brute-force oracles: subset
enumeration for chordless cycles, permutation search for isomorphism, and a
labeled-state BFS for mutation-class sizes.
"""

import random
from itertools import combinations, permutations

import pytest

from cluster_presents import dynkin
from cluster_presents.diagram import (
    ChordlessCycle,
    Diagram,
    DiagramError,
    MutationClassOverflow,
    NotFiniteTypeError,
    canonical_form,
    canonical_form_unoriented,
    canonical_representative,
    chordless_cycles,
    diagram_of,
    identify_dynkin_type,
    mutate_diagram,
    mutation_class,
    opposite,
    validate_finite_type_local,
)
from cluster_presents.exchange import ExchangeMatrix, mutate_matrix


FOUR_CYCLE_MATRIX = ExchangeMatrix([[0, 1, 0, -1], [-1, 0, 1, 0], [0, -1, 0, 1], [1, 0, -1, 0]])


def _random_diagram(rng, n, max_weight=3, p=0.5):
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                w = rng.randrange(1, max_weight + 1)
                if rng.random() < 0.5:
                    edges.append((i, j, w))
                else:
                    edges.append((j, i, w))
    return Diagram(n, edges)


def _chordless_by_subsets(diagram):
    """Oracle: a vertex subset is a chordless cycle iff its induced graph is a cycle."""
    n = diagram.n
    adjacent = [[diagram.weight_between(i, j) > 0 for j in range(n)] for i in range(n)]
    out = set()
    for size in range(3, n + 1):
        for subset in combinations(range(n), size):
            degs = [sum(adjacent[v][u] for u in subset if u != v) for v in subset]
            if any(d != 2 for d in degs):
                continue
            # all degree 2: the induced graph is a disjoint union of cycles;
            # connectivity makes it a single cycle
            seen = {subset[0]}
            stack = [subset[0]]
            while stack:
                v = stack.pop()
                for u in subset:
                    if u != v and adjacent[v][u] and u not in seen:
                        seen.add(u)
                        stack.append(u)
            if len(seen) == size:
                out.add(frozenset(subset))
    return out


# ----------------------------------------------------------------- basics


def test_diagram_construction_and_accessors():
    d = Diagram(3, [(0, 1, 1), (2, 1, 2)])
    assert d.weight(0, 1) == 1
    assert d.weight(1, 0) == 0
    assert d.weight_between(1, 2) == 2
    assert d.out_neighbours(0) == (1,)
    assert d.in_neighbours(1) == (0, 2)
    assert d.neighbours(1) == (0, 2)


def test_diagram_rejects_bad_edges():
    with pytest.raises(DiagramError):
        Diagram(2, [(0, 0, 1)])
    with pytest.raises(DiagramError):
        Diagram(2, [(0, 1, 1), (1, 0, 1)])
    with pytest.raises(DiagramError):
        Diagram(2, [(0, 1, 0)])
    with pytest.raises(DiagramError):
        Diagram(2, [(0, 2, 1)])


def test_diagram_of_examples():
    assert diagram_of(ExchangeMatrix([[0, 1], [-1, 0]])).edges == ((0, 1, 1),)
    assert diagram_of(ExchangeMatrix([[0, 2], [-1, 0]])).edges == ((0, 1, 2),)
    cycle = diagram_of(FOUR_CYCLE_MATRIX)
    assert cycle.edges == ((0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1))


def test_opposite_reverses_edges():
    d = diagram_of(FOUR_CYCLE_MATRIX)
    assert opposite(opposite(d)) == d
    assert opposite(d).weight(1, 0) == 1


# ----------------------------------------------------------------- mutation


def test_mutate_weight1_triangle_rule():
    # path 1 -> 2 -> 3 mutated at the middle becomes a cyclically oriented triangle
    path = Diagram(3, [(0, 1, 1), (1, 2, 1)])
    tri = mutate_diagram(path, 1)
    assert set(tri.edges) == {(1, 0, 1), (2, 1, 1), (0, 2, 1)}
    # and back
    assert mutate_diagram(tri, 1) == path


def test_mutate_matches_matrix_mutation_on_seeds():
    rng = random.Random(21)
    for label in ("A4", "B/C3", "D4", "F4", "G2", "A6", "D5", "E6"):
        B = dynkin.standard_exchange_matrix(label)
        d = diagram_of(B)
        for _ in range(200):
            k = rng.randrange(B.n)
            B = mutate_matrix(B, k)
            d = mutate_diagram(d, k)
            assert d == diagram_of(B)


def test_mutate_diagram_involution():
    rng = random.Random(22)
    for label in ("A5", "B/C4", "D4", "F4"):
        d = dynkin.standard_diagram(label)
        for _ in range(100):
            k = rng.randrange(d.n)
            d2 = mutate_diagram(d, k)
            assert mutate_diagram(d2, k) == d
            d = d2


def test_mutate_four_cycle_at_vertex_one():
    # mutating the oriented 4-cycle at its first vertex gives the D4-star shape
    d = diagram_of(FOUR_CYCLE_MATRIX)
    out = mutate_diagram(d, 0)
    assert set(out.edges) == {(1, 0, 1), (0, 3, 1), (3, 1, 1), (1, 2, 1), (2, 3, 1)}


def test_mutate_nonfinite_conflict_raises():
    # i -> k -> j plus an existing same-direction edge i -> j
    bad = Diagram(3, [(0, 2, 1), (2, 1, 1), (0, 1, 1)])
    with pytest.raises(DiagramError):
        mutate_diagram(bad, 2)


def test_mutate_weighted_triangle_drops_closing_edge():
    # path 2 -> 0 -> 1 has max weight 2 and the closing edge already carries 2,
    # so the mutated weight is max(1, 2) - 2 = 0: the triangle opens into a path
    tri = Diagram(3, [(0, 1, 2), (1, 2, 2), (2, 0, 1)])
    out = mutate_diagram(tri, 0)
    assert set(out.edges) == {(1, 0, 2), (0, 2, 1)}


# ----------------------------------------------------------------- chordless cycles


def test_chordless_cycles_of_oriented_four_cycle():
    cycles = chordless_cycles(diagram_of(FOUR_CYCLE_MATRIX))
    assert len(cycles) == 1
    assert cycles[0].vertices == (0, 1, 2, 3)
    assert cycles[0].weights == (1, 1, 1, 1)
    assert cycles[0].oriented


def test_chordless_cycle_weights_follow_preceding_edge():
    tri = Diagram(3, [(0, 1, 2), (1, 2, 1), (2, 0, 2)])
    (cycle,) = chordless_cycles(tri)
    assert cycle.vertices == (0, 1, 2)
    # weights[a] is the weight between vertices[a-1] and vertices[a]
    assert cycle.weights == (2, 2, 1)


def test_triangle_with_chord_square():
    # 4-cycle with a chord decomposes into two triangles
    d = Diagram(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 2, 1)])
    cycles = chordless_cycles(d)
    assert sorted(frozenset(c.vertices) for c in cycles) == sorted(
        [frozenset({0, 1, 2}), frozenset({0, 2, 3})]
    )


def test_chordless_cycles_against_subset_oracle():
    rng = random.Random(23)
    for _ in range(120):
        n = rng.randrange(3, 8)
        d = _random_diagram(rng, n, p=rng.choice([0.3, 0.5, 0.7]))
        expected = _chordless_by_subsets(d)
        got = chordless_cycles(d)
        assert {frozenset(c.vertices) for c in got} == expected
        assert len(got) == len(expected)  # each cycle reported exactly once
        for c in got:
            verts = c.vertices
            assert verts[0] == min(verts)
            dsize = len(verts)
            for a in range(dsize):
                assert d.weight_between(verts[a - 1], verts[a]) == c.weights[a]
            if c.oriented:
                assert all(d.weight(verts[a], verts[(a + 1) % dsize]) > 0 for a in range(dsize))


# ----------------------------------------------------------------- validation


def test_validator_accepts_finite_type_catalog():
    assert validate_finite_type_local(dynkin.standard_diagram("F4")).ok
    assert validate_finite_type_local(diagram_of(FOUR_CYCLE_MATRIX)).ok
    tri221 = Diagram(3, [(0, 1, 2), (1, 2, 2), (2, 0, 1)])
    assert validate_finite_type_local(tri221).ok


def test_validator_rejects_non_oriented_cycle():
    bad = Diagram(3, [(0, 1, 1), (0, 2, 1), (2, 1, 1)])
    report = validate_finite_type_local(bad)
    assert not report.ok
    assert report.first.kind == "non-oriented-cycle"


def test_validator_rejects_bad_cycle_weights():
    bad = Diagram(3, [(0, 1, 2), (1, 2, 2), (2, 0, 2)])
    report = validate_finite_type_local(bad)
    assert not report.ok
    kinds = {v.kind for v in report.violations}
    assert "cycle-weights" in kinds or "three-vertex" in kinds


def test_validator_rejects_bad_three_vertex_path():
    bad = Diagram(3, [(0, 1, 2), (1, 2, 2)])  # path with weights {2,2}
    report = validate_finite_type_local(bad)
    assert not report.ok
    assert report.first.kind == "three-vertex"


def test_validator_rejects_weight3_in_company():
    bad = Diagram(3, [(0, 1, 3), (1, 2, 1)])  # G2 edge with a neighbour
    assert not validate_finite_type_local(bad).ok
    alone = Diagram(2, [(0, 1, 3)])
    assert validate_finite_type_local(alone).ok


# ----------------------------------------------------------------- canonical forms


def _isomorphic_bruteforce(d1, d2, oriented=True):
    if d1.n != d2.n:
        return False
    for perm in permutations(range(d1.n)):
        ok = True
        for i in range(d1.n):
            for j in range(d1.n):
                if i == j:
                    continue
                if oriented:
                    if d1.weight(i, j) != d2.weight(perm[i], perm[j]):
                        ok = False
                        break
                else:
                    if d1.weight_between(i, j) != d2.weight_between(perm[i], perm[j]):
                        ok = False
                        break
            if not ok:
                break
        if ok:
            return True
    return False


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(24)
    for _ in range(80):
        n = rng.randrange(1, 7)
        d = _random_diagram(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = Diagram(n, ((perm[i], perm[j], w) for i, j, w in d.edges))
        assert canonical_form(d) == canonical_form(relabeled)
        assert canonical_form_unoriented(d) == canonical_form_unoriented(relabeled)


def test_canonical_form_equality_matches_isomorphism():
    rng = random.Random(25)
    pool = [_random_diagram(rng, 4) for _ in range(40)]
    for a in pool:
        for b in pool:
            same = canonical_form(a) == canonical_form(b)
            assert same == _isomorphic_bruteforce(a, b, oriented=True)


def test_canonical_form_unoriented_quotients_orientation():
    path_fwd = Diagram(2, [(0, 1, 2)])
    path_bwd = Diagram(2, [(1, 0, 2)])
    assert canonical_form(path_fwd) == canonical_form(path_bwd)  # swap vertices
    d1 = Diagram(3, [(0, 1, 1), (1, 2, 1)])
    d2 = Diagram(3, [(0, 1, 1), (2, 1, 1)])  # sink in the middle
    assert canonical_form(d1) != canonical_form(d2)
    assert canonical_form_unoriented(d1) == canonical_form_unoriented(d2)


def test_canonical_representative_realizes_key():
    rng = random.Random(26)
    for _ in range(40):
        d = _random_diagram(rng, rng.randrange(1, 7))
        key, rep = canonical_representative(d)
        assert canonical_form(rep) == key == canonical_form(d)


def test_canonical_form_rank_cap():
    big = Diagram(11, [])
    with pytest.raises(ValueError):
        canonical_form(big)


def test_opposite_of_four_cycle_is_isomorphic():
    d = diagram_of(FOUR_CYCLE_MATRIX)
    assert canonical_form(d) == canonical_form(opposite(d))


# ----------------------------------------------------------------- mutation classes


def _class_size_oracle(seed_diagram, cap=100000):
    """BFS over labeled diagrams, then count brute-force isomorphism classes."""
    seen = {seed_diagram}
    queue = [seed_diagram]
    while queue:
        d = queue.pop()
        for k in range(d.n):
            child = mutate_diagram(d, k)
            if child not in seen:
                assert len(seen) < cap
                seen.add(child)
                queue.append(child)
    classes = []
    for d in seen:
        if not any(_isomorphic_bruteforce(d, rep, oriented=True) for rep in classes):
            classes.append(d)
    return len(classes)


@pytest.mark.parametrize("label", ["A2", "A3", "A4", "B/C3", "D4", "G2"])
def test_class_sizes_match_labeled_bfs_oracle(label):
    seed = dynkin.standard_diagram(label)
    assert len(mutation_class(seed)) == _class_size_oracle(seed)


def test_class_is_closed_under_mutation():
    mc = mutation_class(dynkin.standard_diagram("A4"))
    keys = set(mc.keys)
    for member in mc.members:
        for k in range(member.n):
            child_key, _ = canonical_representative(mutate_diagram(member, k))
            assert child_key in keys


def test_class_type_identification():
    assert mutation_class(dynkin.standard_diagram("A3")).type_label == "A3"
    assert mutation_class(diagram_of(FOUR_CYCLE_MATRIX)).type_label == "D4"
    assert mutation_class(dynkin.standard_diagram("B3")).type_label == "B/C3"
    assert mutation_class(dynkin.standard_diagram("C3")).type_label == "B/C3"
    assert mutation_class(dynkin.standard_diagram("F4")).type_label == "F4"


def test_identify_from_class_object():
    mc = mutation_class(dynkin.standard_diagram("G2"))
    assert identify_dynkin_type(mc) == "G2"


def test_class_overflow():
    with pytest.raises(MutationClassOverflow):
        mutation_class(dynkin.standard_diagram("A5"), cap=3)


def test_class_rejects_wide_edges():
    wide = diagram_of(ExchangeMatrix([[0, 2], [-2, 0]]))
    assert wide.max_weight() == 4
    with pytest.raises(NotFiniteTypeError):
        mutation_class(wide)


def test_class_rejects_non_finite_shape():
    # the non-oriented triangle blows up under mutation
    bad = Diagram(3, [(0, 1, 1), (0, 2, 1), (2, 1, 1)])
    with pytest.raises(NotFiniteTypeError):
        mutation_class(bad)

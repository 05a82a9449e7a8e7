"""Group presentations attached to mutation diagrams.

Generators are one involution s_i per vertex.  Beyond the involution (R1) and
pairwise braid relations (R2, order 2/3/4/6 for edge weight 0/1/2/3), every
chordless cycle contributes cycle relations (R3) built from words

    r(a) = s_{i_a} s_{i_{a+1}} ... s_{i_{a+d-1}} s_{i_{a+d-2}} ... s_{i_{a+1}}

of length 2d - 2 read around the cycle from position a.  In an all-weight-1
cycle each r(a)^2 = e; in a cycle with weight-2 edges the exponent at a is
4 - w_a, where w_a is the weight of the edge omitted by r(a) (the one joining
i_{a-1} to i_a).  The reduced presentation keeps a single relation per cycle,
chosen at an admissible position (any a when all weights are 1, else w_a = 2)
so its exponent is 2, tie-broken by the lexicographically smallest rotated
vertex sequence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import ChordlessCycle, Diagram, DiagramError, chordless_cycles, validate_finite_type_local

__all__ = [
    "Relation",
    "Presentation",
    "bond_order",
    "cycle_word",
    "full_presentation",
    "reduced_presentation",
    "mutation_witness_words",
    "inverse_mutation_witness_words",
]

Word = tuple[int, ...]

_BOND_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


def bond_order(weight: int) -> int:
    """Order of s_i s_j for vertices joined by an edge of the given weight."""
    try:
        return _BOND_ORDER[weight]
    except KeyError:
        raise ValueError(f"no bond order for edge weight {weight}") from None


@dataclass(frozen=True)
class Relation:
    """A relator (word)^exponent; letters are 0-based generator indices."""

    word: Word
    exponent: int
    tag: str = ""

    def letters(self) -> Word:
        """The fully expanded relator word."""
        return self.word * self.exponent


class Presentation:
    """An involutive presentation: n generators, each with (s_i)^2 among the relations."""

    __slots__ = ("n", "relations")

    def __init__(self, n: int, relations):
        relations = tuple(relations)
        if n < 0:
            raise ValueError("generator count must be nonnegative")
        involutions = set()
        for rel in relations:
            if not isinstance(rel, Relation):
                raise TypeError("relations must be Relation instances")
            if rel.exponent < 1 or not rel.word:
                raise ValueError(f"degenerate relation {rel}")
            for letter in rel.word:
                if not 0 <= letter < n:
                    raise ValueError(f"generator s{letter + 1} out of range in {rel}")
            if len(rel.word) == 1 and rel.exponent == 2:
                involutions.add(rel.word[0])
        missing = [g for g in range(n) if g not in involutions]
        if missing:
            raise ValueError(f"missing involution relation for s{missing[0] + 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "relations", relations)

    def __setattr__(self, name, value):
        raise AttributeError("Presentation is immutable")

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.n == other.n and self.relations == other.relations

    def __hash__(self):
        return hash((self.n, self.relations))

    def __repr__(self):
        return f"Presentation(n={self.n}, relations={len(self.relations)})"


def cycle_word(cycle: ChordlessCycle, a: int) -> Word:
    """The length-(2d-2) cycle word starting at position a."""
    d = len(cycle.vertices)
    run = [cycle.vertices[(a + t) % d] for t in range(d)]
    return tuple(run) + tuple(reversed(run[1 : d - 1]))


def _checked_cycles(diagram: Diagram) -> tuple[ChordlessCycle, ...]:
    report = validate_finite_type_local(diagram)
    if not report.ok:
        raise DiagramError(f"diagram admits no presentation: {report.first.detail}")
    return chordless_cycles(diagram)


def full_presentation(diagram: Diagram) -> Presentation:
    """All relations: involutions, pairwise orders, and every cycle rotation."""
    rels = [Relation((i,), 2, "R1") for i in range(diagram.n)]
    for i in range(diagram.n):
        for j in range(i + 1, diagram.n):
            rels.append(Relation((i, j), bond_order(diagram.weight_between(i, j)), "R2"))
    for cycle in _checked_cycles(diagram):
        d = len(cycle.vertices)
        plain = all(w == 1 for w in cycle.weights)
        for a in range(d):
            if plain:
                rels.append(Relation(cycle_word(cycle, a), 2, "R3a"))
            else:
                rels.append(Relation(cycle_word(cycle, a), 4 - cycle.weights[a], "R3b"))
    return Presentation(diagram.n, rels)


def reduced_presentation(diagram: Diagram) -> Presentation:
    """One exponent-2 cycle relation per cycle, anchored at an admissible rotation."""
    rels = [Relation((i,), 2, "R1") for i in range(diagram.n)]
    for i in range(diagram.n):
        for j in range(i + 1, diagram.n):
            rels.append(Relation((i, j), bond_order(diagram.weight_between(i, j)), "R2"))
    for cycle in _checked_cycles(diagram):
        d = len(cycle.vertices)
        plain = all(w == 1 for w in cycle.weights)
        admissible = [a for a in range(d) if plain or cycle.weights[a] == 2]
        best = min(admissible, key=lambda a: [cycle.vertices[(a + t) % d] for t in range(d)])
        rels.append(Relation(cycle_word(cycle, best), 2, "R3-reduced"))
    return Presentation(diagram.n, rels)


def mutation_witness_words(diagram: Diagram, k: int) -> tuple[Word, ...]:
    """Words t_i in the generators of W(diagram) witnessing mutation at k.

    t_i = s_k s_i s_k when the diagram has an arrow i -> k, else t_i = s_i.
    """
    if not 0 <= k < diagram.n:
        raise IndexError(f"mutation vertex {k} out of range")
    return tuple(
        (k, i, k) if diagram.weight(i, k) > 0 else (i,) for i in range(diagram.n)
    )


def inverse_mutation_witness_words(mutated: Diagram, k: int) -> tuple[Word, ...]:
    """Words t'_i in the generators of W(mutated diagram) inverting the witness map.

    t'_i = s'_k s'_i s'_k when the mutated diagram has an arrow k -> i, else s'_i.
    """
    if not 0 <= k < mutated.n:
        raise IndexError(f"mutation vertex {k} out of range")
    return tuple(
        (k, i, k) if mutated.weight(k, i) > 0 else (i,) for i in range(mutated.n)
    )

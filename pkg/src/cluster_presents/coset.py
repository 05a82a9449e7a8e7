"""Coset enumeration over involutive presentations, and what it buys us.

The enumerator is an HLT-style Todd-Coxeter procedure specialized to
presentations in which every generator is an involution: the table keeps one
column per generator and every table write is symmetric, so the involution
relations are baked into the data structure.  On success the table of the
trivial subgroup is the regular permutation representation, which gives exact
group orders, homomorphism checks (a candidate map on generators is a
homomorphism iff every target relator maps to the identity permutation), and
faithfulness certificates for the mutation witness maps.

Orders can be computed directly (enumerate cosets of the trivial subgroup) or
by a parabolic tower: enumerate cosets of the subgroup generated by all but
the last generator, recurse on the restricted presentation, and multiply.
The tower answer equals the true order precisely when each restricted
presentation maps isomorphically onto the subgroup it generates; this is not
assumed, it is what the cross-validation checks compare.

Everything is deterministic: fixed scan order, fixed definition order, no
randomization, so enumeration statistics are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .diagram import Diagram
from .presentation import Presentation, Relation, Word, full_presentation, mutation_witness_words, inverse_mutation_witness_words

__all__ = [
    "DEFAULT_COSET_CAP",
    "CosetCapExceeded",
    "CosetTable",
    "coset_enumerate",
    "group_order",
    "PermutationRep",
    "perm_rep",
    "evaluate_word",
    "check_homomorphism",
    "MutationIsomorphismReport",
    "verify_mutation_isomorphism",
    "weyl_order",
]

DEFAULT_COSET_CAP = 2_000_000


class CosetCapExceeded(RuntimeError):
    """Raised when an enumeration would exceed its live-coset cap."""

    def __init__(self, cap: int):
        super().__init__(f"coset enumeration exceeded cap of {cap} live cosets")
        self.cap = cap


class _Overflow(Exception):
    pass


@dataclass(frozen=True)
class CosetTable:
    """A completed (or aborted) enumeration.

    rows[c][g] is the coset reached from c by generator g; rows are compacted
    and only present when status == "complete".  cosets_defined counts every
    definition made, including cosets later merged away.
    """

    rows: tuple[tuple[int, ...], ...]
    status: str  # "complete" | "overflow"
    coset_count: int
    cosets_defined: int


def _relator_words(presentation: Presentation) -> list[Word]:
    words = []
    for rel in presentation.relations:
        if len(rel.word) == 1:
            continue  # involutions are structural
        words.append(rel.word * rel.exponent)
    return words


def coset_enumerate(presentation: Presentation, subgroup_words=(), cap: int = DEFAULT_COSET_CAP) -> CosetTable:
    """Enumerate cosets of the subgroup generated by the given words.

    Subgroup words are tuples of 0-based generator indices; the empty list
    enumerates the whole group.  Deterministic HLT strategy: subgroup words
    are scanned at the base coset, then each live coset scans every relator
    and fills its remaining entries in generator order.
    """
    if not presentation.relations:
        raise ValueError("presentation has no relations")
    if cap < 1:
        raise ValueError("cap must be positive")
    ngen = presentation.n
    for word in subgroup_words:
        for letter in word:
            if not 0 <= letter < ngen:
                raise ValueError(f"subgroup word letter s{letter + 1} out of range")

    relators = _relator_words(presentation)
    table: list[list[int] | None] = [[-1] * ngen]
    parent = [0]
    live = 1
    defined = 1

    def rep(c: int) -> int:
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def define(c: int, g: int) -> int:
        nonlocal live, defined
        if live >= cap:
            raise _Overflow
        b = len(table)
        table.append([-1] * ngen)
        parent.append(b)
        table[c][g] = b
        table[b][g] = c
        live += 1
        defined += 1
        return b

    def coincide(x: int, y: int) -> None:
        nonlocal live
        queue = deque([(x, y)])
        while queue:
            a, b = queue.popleft()
            a = rep(a)
            b = rep(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            parent[b] = a
            live -= 1
            row_b = table[b]
            table[b] = None
            row_a = table[a]
            for g in range(ngen):
                d = row_b[g]
                if d == -1:
                    continue
                e = row_a[g]
                if e == -1:
                    row_a[g] = d
                else:
                    queue.append((e, d))

    def scan(c: int, word: Word) -> None:
        f = c
        i = 0
        b = c
        j = len(word) - 1
        while True:
            while i <= j:
                t = table[f][word[i]]
                if t == -1:
                    break
                f = t if parent[t] == t else rep(t)
                i += 1
            if i > j:
                if f != b:
                    coincide(f, b)
                return
            while j >= i:
                t = table[b][word[j]]
                if t == -1:
                    break
                b = t if parent[t] == t else rep(t)
                j -= 1
            if j < i:
                coincide(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i]] = f
                return
            define(f, word[i])

    try:
        for word in subgroup_words:
            if word:
                scan(0, word)
        alpha = 0
        while alpha < len(table):
            if parent[alpha] != alpha:
                alpha += 1
                continue
            for word in relators:
                scan(alpha, word)
                if parent[alpha] != alpha:
                    break
            if parent[alpha] == alpha:
                row = table[alpha]
                for g in range(ngen):
                    if row[g] == -1:
                        define(alpha, g)
            alpha += 1
    except _Overflow:
        return CosetTable((), "overflow", live, defined)

    survivors = [c for c in range(len(table)) if parent[c] == c]
    index_of = {c: i for i, c in enumerate(survivors)}
    rows = tuple(
        tuple(index_of[rep(table[c][g])] for g in range(ngen)) for c in survivors
    )
    return CosetTable(rows, "complete", len(survivors), defined)


def _restrict(presentation: Presentation, m: int) -> Presentation:
    kept = [rel for rel in presentation.relations if all(letter < m for letter in rel.word)]
    return Presentation(m, kept)


def group_order(presentation: Presentation, strategy: str = "direct", cap: int = DEFAULT_COSET_CAP, stats: dict | None = None) -> int:
    """Order of the presented group; raises CosetCapExceeded on overflow.

    strategy "direct" enumerates the trivial subgroup; "tower" enumerates the
    subgroup generated by all generators but the last and recurses on the
    restricted presentation.  stats, if given, accumulates "cosets_defined".
    """
    if presentation.n == 0:
        return 1
    if strategy == "direct" or presentation.n == 1:
        table = coset_enumerate(presentation, (), cap)
        if stats is not None:
            stats["cosets_defined"] = stats.get("cosets_defined", 0) + table.cosets_defined
        if table.status != "complete":
            raise CosetCapExceeded(cap)
        return table.coset_count
    if strategy != "tower":
        raise ValueError(f"unknown strategy {strategy!r}")
    subgroup = [(g,) for g in range(presentation.n - 1)]
    table = coset_enumerate(presentation, subgroup, cap)
    if stats is not None:
        stats["cosets_defined"] = stats.get("cosets_defined", 0) + table.cosets_defined
    if table.status != "complete":
        raise CosetCapExceeded(cap)
    return table.coset_count * group_order(_restrict(presentation, presentation.n - 1), "tower", cap, stats)


@dataclass(frozen=True)
class PermutationRep:
    """The regular representation: images[g][c] is the coset c * s_g."""

    degree: int
    images: tuple[tuple[int, ...], ...]


def perm_rep(table: CosetTable) -> PermutationRep:
    if table.status != "complete":
        raise ValueError("cannot build a permutation representation from an incomplete table")
    ngen = len(table.rows[0]) if table.rows else 0
    images = tuple(
        tuple(table.rows[c][g] for c in range(table.coset_count)) for g in range(ngen)
    )
    return PermutationRep(table.coset_count, images)


def evaluate_word(rep: PermutationRep, word) -> tuple[int, ...]:
    """The permutation of the word, letters applied left to right."""
    current = list(range(rep.degree))
    for letter in word:
        image = rep.images[letter]
        current = [image[c] for c in current]
    return tuple(current)


def _is_identity(perm: tuple[int, ...]) -> bool:
    return all(p == c for c, p in enumerate(perm))


def check_homomorphism(rep: PermutationRep, generator_images, relations) -> tuple[bool, Relation | None]:
    """Does sending generator i to the word generator_images[i] kill every relation?

    Returns (True, None) or (False, first failing relation).
    """
    for rel in relations:
        substituted: list[int] = []
        for letter in rel.word:
            substituted.extend(generator_images[letter])
        if not _is_identity(evaluate_word(rep, tuple(substituted) * rel.exponent)):
            return False, rel
    return True, None


@dataclass(frozen=True)
class MutationIsomorphismReport:
    """Certificate that mutation at a vertex preserves the presented group."""

    vertex: int
    order: int
    mutated_order: int
    forward_homomorphism: bool
    inverse_homomorphism: bool
    composition_identity: bool
    failing_relation: Relation | None

    @property
    def passed(self) -> bool:
        return (
            self.forward_homomorphism
            and self.inverse_homomorphism
            and self.composition_identity
            and self.order == self.mutated_order
        )


def verify_mutation_isomorphism(diagram: Diagram, k: int, cap: int = DEFAULT_COSET_CAP) -> MutationIsomorphismReport:
    """Certify W(diagram) = W(mutated diagram) via the witness words at k.

    Checks that t_i |-> witness words defines a homomorphism each way, that
    the two composites fix every generator, and that the group orders agree.
    Raises CosetCapExceeded if either enumeration overflows.
    """
    from .diagram import mutate_diagram

    mutated = mutate_diagram(diagram, k)
    pres = full_presentation(diagram)
    pres_mut = full_presentation(mutated)
    table = coset_enumerate(pres, (), cap)
    if table.status != "complete":
        raise CosetCapExceeded(cap)
    table_mut = coset_enumerate(pres_mut, (), cap)
    if table_mut.status != "complete":
        raise CosetCapExceeded(cap)
    rep = perm_rep(table)
    rep_mut = perm_rep(table_mut)

    forward = mutation_witness_words(diagram, k)
    inverse = inverse_mutation_witness_words(mutated, k)

    fwd_ok, fwd_fail = check_homomorphism(rep, forward, pres_mut.relations)
    inv_ok, inv_fail = check_homomorphism(rep_mut, inverse, pres.relations)

    comp_ok = True
    if fwd_ok and inv_ok:
        for i in range(diagram.n):
            via_mut: list[int] = []
            for letter in forward[i]:
                via_mut.extend(inverse[letter])
            if evaluate_word(rep_mut, tuple(via_mut)) != evaluate_word(rep_mut, (i,)):
                comp_ok = False
                break
            via_orig: list[int] = []
            for letter in inverse[i]:
                via_orig.extend(forward[letter])
            if evaluate_word(rep, tuple(via_orig)) != evaluate_word(rep, (i,)):
                comp_ok = False
                break

    return MutationIsomorphismReport(
        vertex=k,
        order=table.coset_count,
        mutated_order=table_mut.coset_count,
        forward_homomorphism=fwd_ok,
        inverse_homomorphism=inv_ok,
        composition_identity=comp_ok,
        failing_relation=fwd_fail if not fwd_ok else inv_fail,
    )


@lru_cache(maxsize=None)
def _weyl_order_normalized(label: str) -> int:
    from . import dynkin

    _, rank = dynkin.parse_label(label)
    pres = full_presentation(dynkin.standard_diagram(label))
    strategy = "direct" if rank <= 5 else "tower"
    return group_order(pres, strategy)


def weyl_order(label: str) -> int:
    """Order of the Weyl group of the given type, by enumeration (cached)."""
    from . import dynkin

    return _weyl_order_normalized(dynkin.normalize_label(label))

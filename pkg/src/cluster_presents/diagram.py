"""Weighted oriented diagrams of exchange matrices and their mutation classes.

A diagram has an arrow i -> j of weight |B_ij B_ji| whenever B_ij > 0.  This
module implements the local mutation rule on diagrams, chordless-cycle
enumeration, the finite-type local validator, canonical labelings for
isomorphism testing (rank <= 10, dependency-free), and BFS enumeration of
mutation classes up to isomorphism.

Vertices are 0-based everywhere in the library; the text formats and the CLI
translate to 1-based.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .exchange import ExchangeMatrix

__all__ = [
    "Diagram",
    "DiagramError",
    "ChordlessCycle",
    "MutationClass",
    "MutationClassOverflow",
    "NotFiniteTypeError",
    "ValidationReport",
    "Violation",
    "diagram_of",
    "mutate_diagram",
    "opposite",
    "chordless_cycles",
    "validate_finite_type_local",
    "canonical_form",
    "canonical_representative",
    "mutation_class",
    "identify_dynkin_type",
]

MAX_CANONICAL_RANK = 10
DEFAULT_CLASS_CAP = 50000


class DiagramError(ValueError):
    """A diagram operation produced or met something structurally invalid."""


class Diagram:
    """Immutable weighted oriented graph without loops or parallel edges.

    Finite-type diagrams only carry weights 1..3; construction accepts any
    positive weight so that non-2-finite inputs (e.g. the diagram of a
    (2,-2) matrix, weight 4) can exist long enough to be reported as such.
    """

    __slots__ = ("n", "edges", "_weights", "_out", "_in")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]]):
        if n < 0:
            raise DiagramError("vertex count must be nonnegative")
        weights: dict[tuple[int, int], int] = {}
        for i, j, w in edges:
            i, j, w = int(i), int(j), int(w)
            if not (0 <= i < n and 0 <= j < n):
                raise DiagramError(f"edge ({i},{j}) out of range for n={n}")
            if i == j:
                raise DiagramError(f"self-loop at vertex {i}")
            if w < 1:
                raise DiagramError(f"edge ({i},{j}) has non-positive weight {w}")
            if (i, j) in weights or (j, i) in weights:
                raise DiagramError(f"parallel edge between {i} and {j}")
            weights[(i, j)] = w
        out: dict[int, list[int]] = {v: [] for v in range(n)}
        inc: dict[int, list[int]] = {v: [] for v in range(n)}
        for (i, j) in weights:
            out[i].append(j)
            inc[j].append(i)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted((i, j, w) for (i, j), w in weights.items())))
        object.__setattr__(self, "_weights", weights)
        object.__setattr__(self, "_out", {v: tuple(sorted(out[v])) for v in range(n)})
        object.__setattr__(self, "_in", {v: tuple(sorted(inc[v])) for v in range(n)})

    def __setattr__(self, name, value):
        raise AttributeError("Diagram is immutable")

    def weight(self, i: int, j: int) -> int:
        """Weight of the oriented edge i -> j, or 0 if absent."""
        return self._weights.get((i, j), 0)

    def weight_between(self, i: int, j: int) -> int:
        """Weight of the edge between i and j in either direction, or 0."""
        return self._weights.get((i, j)) or self._weights.get((j, i)) or 0

    def out_neighbours(self, i: int) -> tuple[int, ...]:
        return self._out[i]

    def in_neighbours(self, i: int) -> tuple[int, ...]:
        return self._in[i]

    def neighbours(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(self._out[i] + self._in[i]))

    def max_weight(self) -> int:
        return max((w for _, _, w in self.edges), default=0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Diagram) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(("Diagram", self.n, self.edges))

    def __repr__(self) -> str:
        return f"Diagram({self.n}, {list(self.edges)})"


def diagram_of(B: ExchangeMatrix) -> Diagram:
    """The diagram of a skew-symmetrisable matrix: i -> j iff B_ij > 0."""
    edges = []
    for i in range(B.n):
        for j in range(B.n):
            if B.entries[i][j] > 0:
                edges.append((i, j, abs(B.entries[i][j] * B.entries[j][i])))
    return Diagram(B.n, edges)


def opposite(diagram: Diagram) -> Diagram:
    """Reverse every edge, keeping weights."""
    return Diagram(diagram.n, ((j, i, w) for i, j, w in diagram.edges))


def mutate_diagram(diagram: Diagram, k: int) -> Diagram:
    """Mutate a diagram at vertex k.

    All edges at k are reversed.  For every path i -> k -> j with weights a, b
    the weight c of the closing edge j -> i is replaced by c' = max(a, b) - c
    on the reversed edge i -> j (no edge when c' = 0).

    Raises DiagramError when the rule cannot produce a valid diagram -- a
    conflicting edge i -> j already present, or c > max(a, b) -- which signals
    an input outside finite type.  (The rule is only guaranteed meaningful for
    2-finite diagrams.)
    """
    n = diagram.n
    if not 0 <= k < n:
        raise IndexError(f"mutation vertex {k} out of range for rank {n}")
    new_edges: dict[tuple[int, int], int] = {}
    for i, j, w in diagram.edges:
        if i == k or j == k:
            new_edges[(j, i)] = w
        else:
            new_edges[(i, j)] = w
    for i in diagram.in_neighbours(k):
        a = diagram.weight(i, k)
        for j in diagram.out_neighbours(k):
            b = diagram.weight(k, j)
            if diagram.weight(i, j) > 0:
                raise DiagramError(
                    f"mutation at {k}: path {i}->{k}->{j} closed by a same-direction "
                    f"edge {i}->{j} (diagram is not of finite type)")
            c = diagram.weight(j, i)
            c_new = max(a, b) - c
            if c_new < 0:
                raise DiagramError(
                    f"mutation at {k}: closing weight {c} exceeds max({a},{b}) "
                    f"on path {i}->{k}->{j}")
            new_edges.pop((j, i), None)
            if c_new > 0:
                new_edges[(i, j)] = c_new
    return Diagram(n, ((i, j, w) for (i, j), w in new_edges.items()))


# ---------------------------------------------------------------------------
# chordless cycles


@dataclass(frozen=True)
class ChordlessCycle:
    """An induced cycle i_0, ..., i_{d-1}.

    `vertices` follows the edge orientation when `oriented` is true (every
    consecutive pair i_a -> i_{a+1} is an arrow), rotated so the smallest
    vertex comes first.  `weights[a]` is the weight of the edge between
    i_{a-1} and i_a (indices mod d), so weights[0] belongs to the closing
    edge i_{d-1} -- i_0.
    """

    vertices: tuple[int, ...]
    weights: tuple[int, ...]
    oriented: bool

    def __len__(self) -> int:
        return len(self.vertices)


def chordless_cycles(diagram: Diagram) -> list[ChordlessCycle]:
    """All chordless cycles of the underlying unoriented graph.

    Each cycle is reported once, minimum vertex first.  Cycles that are not
    cyclically oriented are flagged rather than rejected; the finite-type
    validator turns the flag into a failure.  Output is sorted
    lexicographically by vertex sequence.
    """
    n = diagram.n
    adj = [set(diagram.neighbours(v)) for v in range(n)]
    found: list[tuple[int, ...]] = []

    def extend(path: list[int], members: set[int]) -> None:
        s = path[0]
        last = path[-1]
        for v in sorted(adj[last]):
            if v <= s or v in members:
                continue
            # chord check against interior vertices (everything but s and last)
            if any(v in adj[u] for u in path[1:-1]):
                continue
            if v in adj[s]:
                if len(path) >= 2 and path[1] < v:
                    found.append(tuple(path) + (v,))
                # extending past v would keep the chord v--s
                continue
            path.append(v)
            members.add(v)
            extend(path, members)
            members.remove(v)
            path.pop()

    for s in range(n):
        for t in sorted(adj[s]):
            if t > s:
                extend([s, t], {s, t})

    cycles = []
    for vs in found:
        d = len(vs)
        forward = all(diagram.weight(vs[a], vs[(a + 1) % d]) > 0 for a in range(d))
        backward = all(diagram.weight(vs[(a + 1) % d], vs[a]) > 0 for a in range(d))
        if backward and not forward:
            vs = (vs[0],) + tuple(reversed(vs[1:]))
        oriented = forward or backward
        weights = tuple(diagram.weight_between(vs[a - 1], vs[a]) for a in range(d))
        cycles.append(ChordlessCycle(vs, weights, oriented))
    cycles.sort(key=lambda c: c.vertices)
    return cycles


# ---------------------------------------------------------------------------
# finite-type local validation


@dataclass(frozen=True)
class Violation:
    kind: str
    vertices: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]

    @property
    def first(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None


def _cycle_weights_allowed(weights: tuple[int, ...]) -> bool:
    d = len(weights)
    if all(w == 1 for w in weights):
        return True
    if d == 3 and sorted(weights) == [1, 2, 2]:
        return True
    if d == 4 and weights[0] == weights[2] and weights[1] == weights[3] \
            and sorted((weights[0], weights[1])) == [1, 2]:
        return True
    return False


def validate_finite_type_local(diagram: Diagram) -> ValidationReport:
    """Local finite-type checks on cycles and 3-vertex subdiagrams.

    Checks that (i) every chordless cycle is cyclically oriented, (ii) cycle
    weights are all 1, a (2,2,1) triangle, or an alternating (1,2,1,2)
    4-cycle, and (iii) every connected induced 3-vertex subdiagram is one of:
    path with weights {1,1} or {1,2}, triangle with weights {1,1,1} or
    {2,2,1}.  The report lists every violation; `first` is the canonical
    witness.
    """
    violations: list[Violation] = []
    for cycle in chordless_cycles(diagram):
        if not cycle.oriented:
            violations.append(Violation(
                "non-oriented-cycle", cycle.vertices,
                "chordless cycle is not cyclically oriented"))
        elif not _cycle_weights_allowed(cycle.weights):
            violations.append(Violation(
                "cycle-weights", cycle.vertices,
                f"cycle weights {cycle.weights} outside the finite-type catalog"))
    n = diagram.n
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ws = [w for w in (diagram.weight_between(i, j),
                                  diagram.weight_between(j, k),
                                  diagram.weight_between(i, k)) if w]
                if len(ws) < 2:
                    continue  # not connected on three vertices
                ws.sort()
                ok = (ws == [1, 1] or ws == [1, 2]) if len(ws) == 2 \
                    else (ws == [1, 1, 1] or ws == [1, 2, 2])
                if not ok:
                    violations.append(Violation(
                        "three-vertex", (i, j, k),
                        f"induced subdiagram weights {tuple(ws)} outside the catalog"))
    return ValidationReport(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# canonical labeling

def _edge_code(diagram: Diagram, p: int, q: int, oriented: bool) -> int:
    w = diagram.weight(p, q)
    if w:
        return w
    w = diagram.weight(q, p)
    if w:
        return w if not oriented else w + 4
    return 0


def _refined_order(diagram: Diagram, oriented: bool) -> list[int]:
    """Vertices ordered by an iterated neighbourhood signature.

    Only a search-order heuristic: the canonical search below stays correct
    for any ordering, but starting near the minimum makes the prefix bound
    prune hard.
    """
    n = diagram.n
    rank = [0] * n
    for _ in range(max(1, n)):
        sigs = []
        for v in range(n):
            around = sorted((_edge_code(diagram, v, u, oriented), rank[u])
                            for u in range(n) if u != v and diagram.weight_between(v, u))
            sigs.append((rank[v], tuple(around)))
        order = sorted(set(sigs))
        new_rank = [order.index(s) for s in sigs]
        if new_rank == rank:
            break
        rank = new_rank
    return sorted(range(n), key=lambda v: (rank[v], v))


def _canonical_search(diagram: Diagram, oriented: bool = True) -> tuple[list[int], list[int]]:
    """Minimal edge-code sequence over all labelings, with its permutation.

    The encoding lists, for each position q in turn, the codes against the
    already-placed positions p < q.  A depth-first search over labelings keeps
    the best (smallest) full encoding; branches are cut as soon as the partial
    encoding exceeds the best one.  Exhaustive over relabelings, so two
    diagrams get equal encodings iff they are isomorphic (as weighted oriented
    graphs, or unoriented when `oriented` is false).
    """
    n = diagram.n
    if n > MAX_CANONICAL_RANK:
        raise ValueError(f"canonical form supports rank <= {MAX_CANONICAL_RANK}")
    if diagram.max_weight() > 100:
        raise ValueError("edge weight too large to encode")
    order = _refined_order(diagram, oriented)
    best_codes: Optional[list[int]] = None
    best_perm: Optional[list[int]] = None
    perm: list[int] = []
    codes: list[int] = []
    used = [False] * n

    def dfs() -> None:
        nonlocal best_codes, best_perm
        depth = len(perm)
        if depth == n:
            if best_codes is None or codes < best_codes:
                best_codes = codes.copy()
                best_perm = perm.copy()
            return
        base = len(codes)
        for v in order:
            if used[v]:
                continue
            codes.extend(_edge_code(diagram, perm[p], v, oriented) for p in range(depth))
            if best_codes is None or codes <= best_codes[:len(codes)]:
                used[v] = True
                perm.append(v)
                dfs()
                perm.pop()
                used[v] = False
            del codes[base:]

    dfs()
    assert best_codes is not None and best_perm is not None
    return best_codes, best_perm


def canonical_form(diagram: Diagram) -> bytes:
    """Canonical byte string; equal iff diagrams are isomorphic.

    Isomorphism here is as weighted oriented graphs (simultaneous relabeling).
    Supported for rank <= 10.
    """
    codes, _ = _canonical_search(diagram, oriented=True)
    return bytes([diagram.n]) + bytes(codes)


def canonical_form_unoriented(diagram: Diagram) -> bytes:
    """Canonical byte string of the underlying weighted unoriented graph."""
    codes, _ = _canonical_search(diagram, oriented=False)
    return bytes([diagram.n]) + bytes(codes)


def canonical_representative(diagram: Diagram) -> tuple[bytes, "Diagram"]:
    """The canonical form together with a relabeled copy realizing it."""
    codes, perm = _canonical_search(diagram, oriented=True)
    position = {old: new for new, old in enumerate(perm)}
    relabeled = Diagram(diagram.n, ((position[i], position[j], w)
                                    for i, j, w in diagram.edges))
    return bytes([diagram.n]) + bytes(codes), relabeled


# ---------------------------------------------------------------------------
# mutation classes


class MutationClassOverflow(RuntimeError):
    """Raised when the BFS member count exceeds the cap."""

    def __init__(self, cap: int):
        super().__init__(f"mutation class exceeds cap of {cap} members "
                         "(not finite type, or raise the cap)")
        self.cap = cap


class NotFiniteTypeError(RuntimeError):
    """Raised when mutation-class enumeration meets a non-finite-type member."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class MutationClass:
    """A mutation class up to diagram isomorphism.

    `members` are canonical representatives sorted by canonical form;
    `edges` holds (member index, vertex, member index) mutation adjacencies
    in the representatives' labeling; `type_label` is the identified Dynkin
    type or "unknown".
    """

    members: tuple[Diagram, ...]
    keys: tuple[bytes, ...]
    edges: frozenset[tuple[int, int, int]]
    type_label: str

    def __len__(self) -> int:
        return len(self.members)


def mutation_class(diagram: Diagram, cap: int = DEFAULT_CLASS_CAP) -> MutationClass:
    """BFS closure of a diagram under mutation, deduplicated by canonical form.

    Raises NotFiniteTypeError as soon as a member carries a weight > 3 edge or
    the mutation rule breaks down, and MutationClassOverflow when more than
    `cap` members appear.  Members are emitted in canonical-string order.
    """
    if diagram.max_weight() > 3:
        raise NotFiniteTypeError(
            f"edge of weight {diagram.max_weight()} violates 2-finiteness")
    key0, rep0 = canonical_representative(diagram)
    reps: dict[bytes, Diagram] = {key0: rep0}
    raw_edges: set[tuple[bytes, int, bytes]] = set()
    queue: deque[bytes] = deque([key0])
    while queue:
        key = queue.popleft()
        rep = reps[key]
        for k in range(rep.n):
            try:
                child = mutate_diagram(rep, k)
            except DiagramError as exc:
                raise NotFiniteTypeError(str(exc)) from exc
            if child.max_weight() > 3:
                raise NotFiniteTypeError(
                    f"mutation at {k} produced an edge of weight {child.max_weight()}")
            ckey, crep = canonical_representative(child)
            if ckey not in reps:
                if len(reps) >= cap:
                    raise MutationClassOverflow(cap)
                reps[ckey] = crep
                queue.append(ckey)
            raw_edges.add((key, k, ckey))
    keys = tuple(sorted(reps))
    index = {key: i for i, key in enumerate(keys)}
    members = tuple(reps[key] for key in keys)
    edges = frozenset((index[a], k, index[b]) for a, k, b in raw_edges)
    return MutationClass(members, keys, edges, _identify_from_members(members))


def _is_tree(diagram: Diagram) -> bool:
    n = diagram.n
    if len(diagram.edges) != n - 1:
        return False
    seen = {0} if n else set()
    stack = [0] if n else []
    while stack:
        v = stack.pop()
        for u in diagram.neighbours(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def _identify_from_members(members: Sequence[Diagram]) -> str:
    from . import dynkin  # deferred: dynkin builds Diagrams via this module

    for member in members:
        if _is_tree(member):
            key = canonical_form_unoriented(member)
            for label in dynkin.labels_of_rank(member.n):
                tree = dynkin.standard_diagram(label)
                if canonical_form_unoriented(tree) == key:
                    return label
            return "unknown"
    raise RuntimeError("finite mutation class without a tree member")  # internal error


def identify_dynkin_type(mclass: MutationClass) -> str:
    """Dynkin type of a mutation class, from any tree-shaped member.

    B_n and C_n share a diagram, so they are reported merged as "B/Cn".
    Returns "unknown" when no catalog entry matches.
    """
    return _identify_from_members(mclass.members)

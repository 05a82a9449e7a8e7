"""Root systems in the simple-root basis, companion bases, signed graphs.

Vectors are integer coordinate tuples over the simple roots of a fixed type.
With cartan[i][j] = 2(a_i, a_j)/(a_i, a_i) and d_i = (a_i, a_i)/2, the
symmetric form is (v, w) = sum_ij v_i d_i cartan[i][j] w_j and the simple
reflection s_i subtracts (cartan row i) . v from coordinate i.  All values
stay in exact integer/rational arithmetic.

A companion basis for an exchange matrix B is a Z-basis of the root lattice
made of roots whose mutual pairings reproduce |B| off the diagonal; it is
mutated by reflecting the vectors attached to arrows into (or out of) the
mutation vertex.  The sign pattern of such a basis is tracked by its signed
graph, with one switching move that rewires the neighbourhood of a vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exchange import ExchangeMatrix, QuasiCartanMatrix, determinant

__all__ = [
    "RootSystem",
    "build_root_system",
    "pairing",
    "copairing",
    "reflect",
    "CompanionBasis",
    "simple_root_basis",
    "companion_matrix",
    "is_companion_basis",
    "mutate_companion",
    "SignedGraph",
    "signed_graph",
    "local_switch",
]

Coords = tuple[int, ...]


class RootSystem:
    """A finite root system, closed under all simple reflections.

    roots is the full (positive and negative) root set, lexicographically
    sorted.  Construct via build_root_system.
    """

    __slots__ = ("label", "n", "cartan", "symmetriser", "roots", "_root_set")

    def __init__(self, label: str, cartan, symmetriser):
        cartan = tuple(tuple(row) for row in cartan)
        n = len(cartan)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "cartan", cartan)
        object.__setattr__(self, "symmetriser", tuple(symmetriser))
        roots = _close_under_reflections(cartan, n)
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "_root_set", frozenset(roots))

    def __setattr__(self, name, value):
        raise AttributeError("RootSystem is immutable")

    def is_root(self, v) -> bool:
        return tuple(v) in self._root_set

    def simple_root(self, i: int) -> Coords:
        if not 0 <= i < self.n:
            raise IndexError(f"simple root index {i} out of range")
        return tuple(1 if j == i else 0 for j in range(self.n))

    def simple_reflection(self, i: int, v) -> Coords:
        """s_i(v), subtracting <v, a_i^check> from coordinate i."""
        if not 0 <= i < self.n:
            raise IndexError(f"simple reflection index {i} out of range")
        coeff = sum(self.cartan[i][j] * v[j] for j in range(self.n))
        return tuple(v[j] - coeff if j == i else v[j] for j in range(self.n))

    def __repr__(self):
        return f"RootSystem({self.label}, {len(self.roots)} roots)"


def _close_under_reflections(cartan, n: int) -> tuple[Coords, ...]:
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for v in frontier:
            for i in range(n):
                coeff = sum(cartan[i][j] * v[j] for j in range(n))
                w = tuple(v[j] - coeff if j == i else v[j] for j in range(n))
                if w not in seen:
                    seen.add(w)
                    new.append(w)
        frontier = new
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def build_root_system(label: str) -> RootSystem:
    """The root system of a Dynkin type label such as "A3" or "B/C2"."""
    from . import dynkin

    normalized = dynkin.normalize_label(label)
    return RootSystem(
        normalized,
        dynkin.cartan_matrix(normalized),
        dynkin.cartan_symmetriser(normalized),
    )


def pairing(system: RootSystem, v, w) -> Fraction:
    """The symmetric bilinear form (v, w)."""
    total = 0
    for i in range(system.n):
        if v[i] == 0:
            continue
        row = system.cartan[i]
        d = system.symmetriser[i]
        total += v[i] * d * sum(row[j] * w[j] for j in range(system.n))
    return Fraction(total)


def copairing(system: RootSystem, v, w) -> int:
    """The coroot pairing (v, w^check) = 2 (v, w) / (w, w); w must not be isotropic."""
    ww = pairing(system, w, w)
    if ww == 0:
        raise ValueError("coroot pairing undefined: (w, w) = 0")
    value = 2 * pairing(system, v, w) / ww
    if value.denominator != 1:
        raise ValueError(f"coroot pairing of {tuple(v)} against {tuple(w)} is not integral")
    return int(value)


def reflect(system: RootSystem, beta, v) -> Coords:
    """Reflection of v in the hyperplane of the root beta."""
    beta = tuple(beta)
    if not system.is_root(beta):
        raise ValueError(f"{beta} is not a root of {system.label}")
    coeff = copairing(system, v, beta)
    return tuple(v[j] - coeff * beta[j] for j in range(system.n))


class CompanionBasis:
    """An ordered tuple of vectors in a root system, candidate companion basis.

    Construction only fixes the shape; validity against an exchange matrix is
    a separate check (is_companion_basis), so near-miss candidates can be
    built and interrogated.
    """

    __slots__ = ("system", "vectors")

    def __init__(self, system: RootSystem, vectors):
        vectors = tuple(tuple(int(x) for x in v) for v in vectors)
        for v in vectors:
            if len(v) != system.n:
                raise ValueError(f"vector {v} has wrong length for rank {system.n}")
        object.__setattr__(self, "system", system)
        object.__setattr__(self, "vectors", vectors)

    def __setattr__(self, name, value):
        raise AttributeError("CompanionBasis is immutable")

    def __len__(self):
        return len(self.vectors)

    def __eq__(self, other):
        if not isinstance(other, CompanionBasis):
            return NotImplemented
        return self.system is other.system and self.vectors == other.vectors

    def __hash__(self):
        return hash((id(self.system), self.vectors))

    def __repr__(self):
        return f"CompanionBasis({self.system.label}, {list(self.vectors)})"


def simple_root_basis(system: RootSystem) -> CompanionBasis:
    return CompanionBasis(system, [system.simple_root(i) for i in range(system.n)])


def companion_matrix(basis: CompanionBasis) -> QuasiCartanMatrix:
    """The Gram-type matrix A[i][j] = (beta_i, beta_j^check) of the basis."""
    sys_ = basis.system
    n = len(basis.vectors)
    rows = [
        [copairing(sys_, basis.vectors[i], basis.vectors[j]) if i != j else 2 for j in range(n)]
        for i in range(n)
    ]
    return QuasiCartanMatrix(rows)


def is_companion_basis(basis: CompanionBasis, matrix: ExchangeMatrix) -> tuple[bool, str | None]:
    """Check roots, unimodularity, and the companion condition |A_ij| = |B_ij|.

    Returns (True, None) or (False, reason), testing in that order so the
    reason names the first failure.
    """
    n = matrix.n
    if len(basis.vectors) != n or basis.system.n != n:
        raise ValueError(f"rank mismatch: basis of {len(basis.vectors)} vectors against a {n} x {n} matrix")
    for idx, v in enumerate(basis.vectors):
        if not basis.system.is_root(v):
            return False, f"vector {idx + 1} = {list(v)} is not a root"
    det = determinant([list(v) for v in basis.vectors])
    if det not in (1, -1):
        return False, f"not a lattice basis: determinant {det}"
    try:
        comp = companion_matrix(basis)
    except ValueError as exc:
        return False, str(exc)
    for i in range(n):
        for j in range(n):
            if i != j and abs(comp.entries[i][j]) != abs(matrix.entries[i][j]):
                return False, (
                    f"companion condition fails at ({i + 1},{j + 1}): "
                    f"|{comp.entries[i][j]}| != |{matrix.entries[i][j]}|"
                )
    return True, None


def mutate_companion(basis: CompanionBasis, k: int, diagram, direction: str = "inward") -> CompanionBasis:
    """Mutate the basis at vertex k, guided by the arrows of the diagram.

    Inward mutation reflects beta_i in beta_k when the diagram has an arrow
    i -> k; outward when the arrow is k -> i.  The two are mutually inverse
    across a mutation step.
    """
    n = len(basis.vectors)
    if diagram.n != n:
        raise ValueError(f"rank mismatch: diagram on {diagram.n} vertices, basis of {n} vectors")
    if not 0 <= k < n:
        raise IndexError(f"mutation vertex {k} out of range")
    if direction not in ("inward", "outward"):
        raise ValueError(f"direction must be 'inward' or 'outward', not {direction!r}")
    beta_k = basis.vectors[k]
    out = []
    for i in range(n):
        if direction == "inward":
            hit = diagram.weight(i, k) > 0
        else:
            hit = diagram.weight(k, i) > 0
        out.append(reflect(basis.system, beta_k, basis.vectors[i]) if hit else basis.vectors[i])
    return CompanionBasis(basis.system, out)


@dataclass(frozen=True)
class SignedGraph:
    """An undirected graph with +1/-1 edge signs; edges are (i, j, sign), i < j."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        for i, j, s in self.edges:
            if not (0 <= i < j < self.n):
                raise ValueError(f"bad signed edge ({i}, {j})")
            if s not in (1, -1):
                raise ValueError(f"edge sign must be +1 or -1, not {s}")
            if (i, j) in seen:
                raise ValueError(f"duplicate signed edge ({i}, {j})")
            seen.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    def sign(self, i: int, j: int) -> int:
        """Sign of edge {i, j}, or 0 when absent."""
        a, b = (i, j) if i < j else (j, i)
        for x, y, s in self.edges:
            if (x, y) == (a, b):
                return s
        return 0

    def neighbours(self, k: int) -> tuple[int, ...]:
        out = set()
        for i, j, _ in self.edges:
            if i == k:
                out.add(j)
            elif j == k:
                out.add(i)
        return tuple(sorted(out))


def signed_graph(matrix: QuasiCartanMatrix) -> SignedGraph:
    """Edge {i, j} with the sign of A_ij, for every nonzero off-diagonal entry."""
    n = matrix.n
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            a = matrix.entries[i][j]
            if a != 0:
                edges.append((i, j, 1 if a > 0 else -1))
    return SignedGraph(n, tuple(edges))


def local_switch(graph: SignedGraph, k: int, in_set) -> SignedGraph:
    """Local switching at vertex k with respect to a subset of its neighbours.

    With I the chosen subset and J the remaining neighbours of k: edges
    between I and J are deleted where present and created with sign
    -sign(i,k) * sign(j,k) where absent, signs of edges from k into I flip,
    and everything else is untouched.
    """
    in_set = set(in_set)
    nbrs = set(graph.neighbours(k))
    if not in_set <= nbrs:
        stray = sorted(in_set - nbrs)[0]
        raise ValueError(f"vertex {stray} is not a neighbour of {k}")
    if k in in_set:
        raise ValueError("the switching set cannot contain the switching vertex")
    out_set = nbrs - in_set

    edges = {(i, j): s for i, j, s in graph.edges}
    for i in in_set:
        for j in out_set:
            key = (i, j) if i < j else (j, i)
            if key in edges:
                del edges[key]
            else:
                edges[key] = -graph.sign(i, k) * graph.sign(j, k)
    for i in in_set:
        key = (i, k) if i < k else (k, i)
        edges[key] = -edges[key]
    return SignedGraph(graph.n, tuple((i, j, s) for (i, j), s in edges.items()))

"""
Combinatorics of C-complexes and generalized Seifert families.

Generalized Seifert matrices are taken as input; nothing here computes
linking numbers.  The clasp graph has one vertex per colour and one edge
per clasp, oriented from the smaller colour to the larger one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import DimensionError, InconsistencyError, UnsupportedInputError
from .polyring import sign_sequences


@dataclass(frozen=True)
class Surface:
    genus: int = 0
    boundary: int = 1
    connected: bool = True

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.boundary < 1:
            raise ValueError("a Seifert surface has at least one boundary component")


@dataclass(frozen=True)
class Clasp:
    i: int
    j: int
    label: int = 1


@dataclass(frozen=True)
class CComplexData:
    mu: int
    surfaces: tuple[Surface, ...]
    clasps: tuple[Clasp, ...] = ()

    def __post_init__(self):
        if self.mu < 1:
            raise DimensionError("mu must be positive")
        object.__setattr__(self, "surfaces", tuple(self.surfaces))
        object.__setattr__(self, "clasps", tuple(self.clasps))
        if len(self.surfaces) != self.mu:
            raise DimensionError(f"{len(self.surfaces)} surfaces given for mu={self.mu}")
        seen = set()
        for c in self.clasps:
            if not (1 <= c.i < c.j <= self.mu):
                raise ValueError(f"clasp colours ({c.i},{c.j}) must satisfy 1 <= i < j <= {self.mu}")
            key = (c.i, c.j, c.label)
            if key in seen:
                raise ValueError(f"duplicate clasp label {key}")
            seen.add(key)

    @classmethod
    def build(cls, mu: int, surfaces: Sequence[Surface], pairs: Sequence[Sequence[int]]) -> "CComplexData":
        """Build from colour pairs, labelling parallel clasps 1, 2, ... in order."""
        counts: dict[tuple[int, int], int] = {}
        clasps = []
        for pair in pairs:
            if len(pair) == 3:
                i, j, k = pair
            else:
                i, j = pair
                k = counts.get((i, j), 0) + 1
            counts[(i, j)] = max(counts.get((i, j), 0), k)
            clasps.append(Clasp(i, j, k))
        return cls(mu, tuple(surfaces), tuple(clasps))

    def pairs(self) -> set[tuple[int, int]]:
        return {(c.i, c.j) for c in self.clasps}


@dataclass(frozen=True)
class ClaspGraph:
    mu: int
    edges: tuple[tuple[int, int], ...]

    def boundary_matrix(self) -> list[list[int]]:
        """Vertex-by-edge incidence matrix: -1 at the tail, +1 at the head."""
        M = [[0] * len(self.edges) for _ in range(self.mu)]
        for k, (a, b) in enumerate(self.edges):
            M[a - 1][k] -= 1
            M[b - 1][k] += 1
        return M

    def components(self) -> int:
        parent = list(range(self.mu + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            parent[find(a)] = find(b)
        return len({find(v) for v in range(1, self.mu + 1)})


def clasp_graph(c: CComplexData) -> ClaspGraph:
    return ClaspGraph(c.mu, tuple((cl.i, cl.j) for cl in c.clasps))


def h1_rank(c: CComplexData) -> int:
    """Rank of H_1 of the C-complex.

    Surfaces contribute 2g + b - 1 each; the clasp graph contributes its
    first Betti number c - mu + k.
    """
    for idx, s in enumerate(c.surfaces, start=1):
        if not s.connected:
            raise UnsupportedInputError(f"surface {idx} is disconnected")
    g = clasp_graph(c)
    surface_part = sum(2 * s.genus + s.boundary - 1 for s in c.surfaces)
    return surface_part + len(g.edges) - c.mu + g.components()


Cycle = tuple[tuple[int, int], ...]


def tree_cycle_basis(g: ClaspGraph) -> list[Cycle]:
    """Fundamental cycles of a breadth-first spanning forest.

    Each cycle is a sequence of ``(edge_index, sign)`` pairs traversed in
    order: the non-tree edge first, with sign +1, followed by the tree path
    back to its tail.  Edge indices are 0-based positions in ``g.edges``.
    """
    adj: dict[int, list[tuple[int, int, int]]] = {v: [] for v in range(1, g.mu + 1)}
    for k, (a, b) in enumerate(g.edges):
        adj[a].append((k, b, +1))
        adj[b].append((k, a, -1))
    parent: dict[int, tuple[int, int, int] | None] = {}
    depth: dict[int, int] = {}
    tree_edges = set()
    for root in range(1, g.mu + 1):
        if root in parent:
            continue
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for k, w, s in adj[v]:
                if w not in parent:
                    # reaching w from v along edge k with orientation s
                    parent[w] = (v, k, s)
                    depth[w] = depth[v] + 1
                    tree_edges.add(k)
                    queue.append(w)

    def path_up(v: int, stop: int) -> list[tuple[int, int]]:
        # steps walking from v towards the ancestor ``stop``
        steps = []
        while v != stop:
            u, k, s = parent[v]
            steps.append((k, -s))
            v = u
        return steps

    cycles = []
    for k, (a, b) in enumerate(g.edges):
        if k in tree_edges:
            continue
        # lowest common ancestor of b and a
        x, y = b, a
        while depth[x] > depth[y]:
            x = parent[x][0]
        while depth[y] > depth[x]:
            y = parent[y][0]
        while x != y:
            x, y = parent[x][0], parent[y][0]
        lca = x
        down = [(kk, -ss) for kk, ss in reversed(path_up(a, lca))]
        cycles.append(((k, 1),) + tuple(path_up(b, lca)) + tuple(down))
    return cycles


def cycle_vector(cycle: Cycle, edge_count: int) -> list[int]:
    v = [0] * edge_count
    for k, s in cycle:
        v[k] += s
    return v


@dataclass(frozen=True)
class BasisElement:
    """One element of a nice basis of H_1(S).

    ``kind`` is ``"surface"`` for a curve inside a single surface (indexed
    by colour and a running number) or ``"cycle"`` for a lift of a
    fundamental cycle of the clasp graph.
    """

    kind: str
    colour: int | None = None
    index: int | None = None
    cycle: Cycle = ()


def nice_basis(c: CComplexData) -> list[BasisElement]:
    """Layout of a basis of H_1(S) made of nice curves.

    Surface curves avoid all clasps; every graph cycle crosses each of its
    clasps once and each visited surface along one embedded arc.
    """
    h1_rank(c)  # rejects disconnected surfaces
    out = []
    for colour, s in enumerate(c.surfaces, start=1):
        for k in range(2 * s.genus + s.boundary - 1):
            out.append(BasisElement("surface", colour, k + 1))
    for cyc in tree_cycle_basis(clasp_graph(c)):
        out.append(BasisElement("cycle", cycle=cyc))
    return out


def is_totally_connected(c: CComplexData) -> bool:
    if not all(s.connected for s in c.surfaces):
        return False
    pairs = c.pairs()
    return all((i, j) in pairs for i in range(1, c.mu + 1) for j in range(i + 1, c.mu + 1))


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[str, str], ...]  # commutators [x, y]

    def __str__(self) -> str:
        rels = ", ".join(f"[{a},{b}]" for a, b in self.relations)
        return f"<{', '.join(self.generators)} | {rels}>"


def pi1_presentation(c: CComplexData) -> GroupPresentation:
    """Fundamental group of the pushed-in exterior: one commutator per clasped pair."""
    gens = tuple(f"a{i}" for i in range(1, c.mu + 1))
    rels = tuple((f"a{i}", f"a{j}") for i, j in sorted(c.pairs()))
    return GroupPresentation(gens, rels)


# -- Seifert families ----------------------------------------------------------

IntMatrix = tuple[tuple[int, ...], ...]


def sign_key(eps: Sequence[int]) -> str:
    return "".join("+" if e > 0 else "-" for e in eps)


def key_signs(key: str) -> tuple[int, ...]:
    return tuple(1 if ch == "+" else -1 for ch in key)


def opposite_key(key: str) -> str:
    return key.translate(str.maketrans("+-", "-+"))


def all_keys(mu: int) -> list[str]:
    return [sign_key(e) for e in sign_sequences(mu)]


def _transpose(A: IntMatrix) -> IntMatrix:
    return tuple(zip(*A)) if A else ()


@dataclass(frozen=True)
class SeifertFamily:
    mu: int
    n: int
    matrices: Mapping[str, IntMatrix] = field(hash=False)

    def __getitem__(self, key: str) -> IntMatrix:
        return self.matrices[key]

    def transformed(self, P: Sequence[Sequence[int]]) -> "SeifertFamily":
        """Family for the change of basis A -> P^T A P."""
        P = tuple(tuple(r) for r in P)
        Pt = _transpose(P)
        mats = {k: _int_matmul(_int_matmul(Pt, A), P) for k, A in self.matrices.items()}
        return SeifertFamily(self.mu, self.n, mats)


def _int_matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    Bt = _transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def _as_int_matrix(raw, key: str) -> IntMatrix:
    if not isinstance(raw, (list, tuple)):
        raise DimensionError(f"matrices[{key!r}] is not a list of rows")
    rows = []
    for r, row in enumerate(raw):
        if not isinstance(row, (list, tuple)):
            raise DimensionError(f"matrices[{key!r}][{r}] is not a row")
        vals = []
        for c, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"matrices[{key!r}][{r}][{c}] = {v!r} is not an integer")
            vals.append(v)
        rows.append(tuple(vals))
    return tuple(rows)


def validate_family(mu: int, matrices: Mapping[str, Sequence[Sequence[int]]],
                    n: int | None = None) -> SeifertFamily:
    """Complete and check a partial family of generalized Seifert matrices.

    For every pair of sign sequences {eps, -eps} at least one matrix must be
    given; the other is filled in by transposition.  When both are given
    they must be exact transposes.  For ``n == 0`` missing keys are allowed.
    """
    if mu < 1:
        raise DimensionError("mu must be positive")
    keys = all_keys(mu)
    given: dict[str, IntMatrix] = {}
    for key, raw in matrices.items():
        if key not in keys:
            raise DimensionError(f"sign key {key!r} is not a sequence of {mu} signs")
        given[key] = _as_int_matrix(raw, key)
    sizes = {len(A) for A in given.values()}
    for key, A in given.items():
        for r, row in enumerate(A):
            if len(row) != len(A):
                raise DimensionError(f"matrices[{key!r}] is not square (row {r})")
    if n is None:
        if len(sizes) > 1:
            raise DimensionError(f"matrices have different sizes {sorted(sizes)}")
        n = sizes.pop() if sizes else 0
    for key, A in given.items():
        if len(A) != n:
            raise DimensionError(f"matrices[{key!r}] has size {len(A)}, expected {n}")
    out: dict[str, IntMatrix] = {}
    conflicts = []
    for key in keys:
        opp = opposite_key(key)
        if key in given:
            out[key] = given[key]
            if opp in given and _transpose(given[opp]) != given[key]:
                conflicts.append(key)
        elif opp in given:
            out[key] = _transpose(given[opp])
        elif n == 0:
            out[key] = ()
        else:
            raise InconsistencyError(f"neither {key!r} nor {opp!r} is given")
    if conflicts:
        raise InconsistencyError(
            "inconsistent family: transpose conflict A^-eps != (A^eps)^T for eps in " + ", ".join(conflicts))
    return SeifertFamily(mu, n, out)


def knot_family(A: Sequence[Sequence[int]]) -> SeifertFamily:
    """The one-colour family A^- = A, A^+ = A^T."""
    return validate_family(1, {"-": A}, n=len(A))


def random_family(mu: int, n: int, rng, bound: int = 2) -> SeifertFamily:
    """Random integer family satisfying the transpose symmetry."""
    given = {}
    for key in all_keys(mu):
        if opposite_key(key) not in given:
            given[key] = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
    return validate_family(mu, given, n)

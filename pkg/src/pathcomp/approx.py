"""Exact cubical models of the approximants K_n and grid traces of K.

K_n is the unit square with every gap column of level <= n removed except
for its bridge edge (top for odd levels, bottom for even).  All gap
endpoints of level <= n are multiples of 3**-n, so K_n is a subcomplex of
the 3**n x 3**n grid.  Cells use integer grid coordinates:

* square ``(c, r)`` is ``[c, c+1] x [r, r+1]`` (scaled by 3**-n);
* edge ``(H, i, j)`` runs from vertex ``(i, j)`` to ``(i+1, j)``,
  edge ``(V, i, j)`` from ``(i, j)`` to ``(i, j+1)``;
* vertex ``(i, j)`` is the point ``(i, j) / 3**n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .errors import ResolutionTooLarge
from .space_k import PointK, component_of, distance_to_k, member_k
from .ternary import CantorGap, as_rational, classify, enumerate_gaps

MAX_LEVEL = 7

H = 0
V = 1


class UnionFind:
    """Disjoint sets over ``0..size-1`` with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.count = size

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


def _check_level(n: int, max_level: int) -> None:
    if n < 0:
        raise ValueError(f"level must be nonnegative, got {n}")
    if n > max_level:
        raise ResolutionTooLarge(f"level {n} exceeds the resolution cap {max_level}")


def square_faces(c: int, r: int):
    return (H, c, r), (H, c, r + 1), (V, c, r), (V, c + 1, r)


def edge_faces(e):
    kind, i, j = e
    return ((i, j), (i + 1, j)) if kind == H else ((i, j), (i, j + 1))


def _candidates(z: Fraction, n_cells: int) -> list[int]:
    # indices of closed unit intervals [k, k+1] containing z, 0 <= k < n_cells
    if z.denominator == 1:
        k = int(z)
        return [i for i in (k - 1, k) if 0 <= i < n_cells]
    return [floor(z)]


@dataclass(frozen=True)
class CubicalModel:
    level: int
    squares: frozenset
    edges: frozenset
    vertices: frozenset
    # per column: the gap of level <= n it lies in, or None for Cantor columns
    columns: tuple = field(default=(), compare=False)

    @property
    def resolution(self) -> int:
        return 3**self.level

    @classmethod
    def from_cells(cls, level: int, squares=(), edges=(), vertices=(), columns=()) -> CubicalModel:
        """Build a model from cells, adding all faces."""
        sq = set(squares)
        ed = set(edges)
        for c, r in sq:
            ed.update(square_faces(c, r))
        vx = set(vertices)
        for e in ed:
            vx.update(edge_faces(e))
        return cls(level, frozenset(sq), frozenset(ed), frozenset(vx), tuple(columns))

    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.squares)

    def is_closed(self) -> bool:
        return all(f in self.edges for s in self.squares for f in square_faces(*s)) and all(
            v in self.vertices for e in self.edges for v in edge_faces(e)
        )

    def contains_point(self, x, y) -> bool:
        """Exact membership of ``(x, y)`` in the geometric realization."""
        n = self.resolution
        X, Y = as_rational(x) * n, as_rational(y) * n
        cx, cy = _candidates(X, n), _candidates(Y, n)
        if any((c, r) in self.squares for c in cx for r in cy):
            return True
        if Y.denominator == 1 and any((H, c, int(Y)) in self.edges for c in cx):
            return True
        if X.denominator == 1 and any((V, int(X), r) in self.edges for r in cy):
            return True
        return X.denominator == 1 and Y.denominator == 1 and (int(X), int(Y)) in self.vertices

    def subdivide(self) -> CubicalModel:
        """The same realization on the grid refined by a factor of 3."""
        squares = {(3 * c + a, 3 * r + b) for c, r in self.squares for a in range(3) for b in range(3)}
        edges = set()
        for kind, i, j in self.edges:
            if kind == H:
                edges.update((H, 3 * i + a, 3 * j) for a in range(3))
            else:
                edges.update((V, 3 * i, 3 * j + b) for b in range(3))
        vertices = {(3 * i, 3 * j) for i, j in self.vertices}
        return CubicalModel.from_cells(self.level + 1, squares, edges, vertices)

    def is_subcomplex_of(self, other: CubicalModel) -> bool:
        return (
            self.level == other.level
            and self.squares <= other.squares
            and self.edges <= other.edges
            and self.vertices <= other.vertices
        )

    def bridge_edges(self):
        """``(gap, edge)`` for every edge drawn over a gap column."""
        n = self.resolution
        out = []
        for c, gap in enumerate(self.columns):
            if gap is None:
                continue
            row = n if gap.level % 2 else 0
            if (H, c, row) in self.edges:
                out.append((gap, (H, c, row)))
        return out


def gap_columns(n: int) -> list:
    """For each of the 3**n columns, its enclosing gap of level <= n or None."""
    size = 3**n
    columns: list[CantorGap | None] = [None] * size
    for gap in enumerate_gaps(n):
        start = int(gap.left * size)
        stop = int(gap.right * size)
        for c in range(start, stop):
            columns[c] = gap
    return columns


def build_k_n(n: int, *, bridges: bool = True, max_level: int = MAX_LEVEL) -> CubicalModel:
    """Cubical model of K_n.

    With ``bridges=False`` the gap columns are removed entirely, which is
    the square minus full open strips; used as a disconnected control.
    """
    _check_level(n, max_level)
    size = 3**n
    columns = gap_columns(n)
    squares = []
    edges = []
    for c, gap in enumerate(columns):
        if gap is None:
            squares.extend((c, r) for r in range(size))
        elif bridges:
            edges.append((H, c, size if gap.level % 2 else 0))
    return CubicalModel.from_cells(n, squares, edges, columns=columns)


def closed_form_counts(n: int) -> tuple[int, int, int]:
    """(V, E, F) of K_n from the gap census: 2**(j-1) gaps of level j,
    each spanning 3**(n-j) columns."""
    size = 3**n
    cantor_cols = 2**n
    v = 2 * cantor_cols * (size + 1)
    e = cantor_cols * (3 * size + 1)
    for j in range(1, n + 1):
        span = 3 ** (n - j)
        v += 2 ** (j - 1) * (span - 1)
        e += 2 ** (j - 1) * span
    return v, e, cantor_cols * size


def gap_census(model: CubicalModel) -> dict[int, dict[CantorGap, int]]:
    """Columns occupied by each gap, grouped by level."""
    census: dict[int, dict[CantorGap, int]] = {}
    for gap in model.columns:
        if gap is not None:
            per_level = census.setdefault(gap.level, {})
            per_level[gap] = per_level.get(gap, 0) + 1
    return census


@dataclass(frozen=True)
class HomologyReport:
    beta0: int
    beta1: int
    euler: int
    cell_counts: tuple[int, int, int]

    def to_json(self) -> dict:
        v, e, f = self.cell_counts
        return {
            "beta0": self.beta0,
            "beta1": self.beta1,
            "euler": self.euler,
            "cellCounts": {"vertices": v, "edges": e, "squares": f},
        }


def homology(model: CubicalModel) -> HomologyReport:
    """Betti numbers of a planar cubical complex.

    beta0 comes from union-find over cells joined to their faces; with no
    2-dimensional homology in the plane, beta1 = beta0 - chi.
    """
    index: dict = {}
    for cell in model.vertices:
        index[cell] = len(index)
    for cell in model.edges:
        index[cell] = len(index)
    for cell in model.squares:
        index[("S",) + cell] = len(index)
    uf = UnionFind(len(index))
    for e in model.edges:
        ie = index[e]
        for v in edge_faces(e):
            uf.union(ie, index[v])
    for c, r in model.squares:
        i_s = index[("S", c, r)]
        for e in square_faces(c, r):
            uf.union(i_s, index[e])
    v, e, f = model.counts()
    euler = v - e + f
    beta0 = uf.count if index else 0
    return HomologyReport(beta0, beta0 - euler, euler, (v, e, f))


def hausdorff_bound(n: int) -> Fraction:
    """Upper bound on the Hausdorff distance between K_n and K.

    Points of K_n outside K sit in gap columns of level > n, each within
    3**-(n+1) of a Cantor fiber.
    """
    if n < 0:
        raise ValueError(f"level must be nonnegative, got {n}")
    return Fraction(1, 3 ** (n + 1))


def sampled_hausdorff(n: int, refine: int = 2) -> Fraction:
    """Largest distance to K over grid points of K_n at resolution 3**(n+refine)."""
    model = build_k_n(n)
    m = 3 ** (n + refine)
    worst = Fraction(0)
    for i in range(m + 1):
        x = Fraction(i, m)
        for j in range(m + 1):
            y = Fraction(j, m)
            if model.contains_point(x, y):
                worst = max(worst, distance_to_k(x, y))
    return worst


@dataclass(frozen=True)
class TraceReport:
    level: int
    cells: frozenset
    connected: bool
    components: int
    face_only_components: int
    sampled_points: int
    distinct_components: int
    adjacency: str = "face+corner"

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "cellCount": len(self.cells),
            "adjacency": self.adjacency,
            "connected": self.connected,
            "components": self.components,
            "faceOnlyComponents": self.face_only_components,
            "sampledPoints": self.sampled_points,
            "distinctComponentIds": self.distinct_components,
        }


def trace_cells(n: int) -> set[tuple[int, int]]:
    """Grid squares at resolution 3**-n whose closure meets K."""
    size = 3**n
    cells = set()
    for c, gap in enumerate(gap_columns(n)):
        full = (
            gap is None
            or classify(Fraction(c, size)).in_cantor
            or classify(Fraction(c + 1, size)).in_cantor
        )
        if full:
            cells.update((c, r) for r in range(size))
        else:
            cells.add((c, size - 1 if gap.level % 2 else 0))
    return cells


def _count_components(cells, corners: bool) -> int:
    index = {cell: k for k, cell in enumerate(cells)}
    uf = UnionFind(len(index))
    steps = [(1, 0), (0, 1)] + ([(1, 1), (1, -1)] if corners else [])
    for (c, r), k in index.items():
        for dc, dr in steps:
            other = index.get((c + dc, r + dr))
            if other is not None:
                uf.union(k, other)
    return uf.count


def trace_of_k(n: int, *, max_level: int = MAX_LEVEL) -> TraceReport:
    """Cell trace of K at resolution 3**-n and its connectivity.

    The trace is a connected cover of K, yet the grid points of K inside
    it already fall into at least 2**n distinct path components.
    """
    _check_level(n, max_level)
    size = 3**n
    cells = trace_cells(n)
    components = _count_components(cells, corners=True)
    face_only = _count_components(cells, corners=False)
    ids = set()
    sampled = 0
    for i in range(size + 1):
        x = Fraction(i, size)
        for j in range(size + 1):
            y = Fraction(j, size)
            if member_k(x, y):
                sampled += 1
                ids.add(component_of(PointK(x, y)))
    return TraceReport(n, frozenset(cells), components == 1, components, face_only, sampled, len(ids))


def model_report(n: int, *, max_level: int = MAX_LEVEL) -> dict:
    model = build_k_n(n, max_level=max_level)
    report = {"level": n}
    report.update(homology(model).to_json())
    report["hausdorffBound"] = str(hausdorff_bound(n))
    return report

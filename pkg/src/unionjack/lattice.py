"""Toroidal lattice graphs and their integer matrices.

Vertex numbering is row-major throughout: the grid vertex in row ``r`` and
column ``c`` of an ``n x m`` torus (``n`` columns, ``m`` rows) has id
``r * n + c``. With that numbering the torus adjacency is literally
``kron(E_m, A(C_n)) + kron(A(C_m), E_n)`` and no permutation is needed when
comparing against Kronecker-product formulas.

In the Union Jack lattice the face vertex of the quadrangle whose lower-left
corner is ``(r, c)`` gets id ``n*m + r*n + c``; its corners are ``(r, c)``,
``(r, c+1)``, ``(r+1, c)`` and ``(r+1, c+1)``, indices taken mod ``(m, n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import SizeError

MIN_CYCLE = 3


def _check_cycle_length(n, name="n"):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"{name} must be an integer, got {type(n).__name__}")
    if n < MIN_CYCLE:
        raise SizeError(f"{name} must be >= {MIN_CYCLE} on a torus, got {n}")


@dataclass(frozen=True)
class LatticeSize:
    """Torus dimensions: ``n`` columns (length of C_n), ``m`` rows (length of C_m)."""

    n: int
    m: int

    def __post_init__(self):
        _check_cycle_length(self.n, "n")
        _check_cycle_length(self.m, "m")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))

    @property
    def cells(self) -> int:
        return self.n * self.m

    @classmethod
    def parse(cls, text: str) -> "LatticeSize":
        """Parse ``"NxM"``, e.g. ``"8x16"``."""
        try:
            n, m = (int(part) for part in text.lower().split("x"))
        except ValueError:
            raise ValueError(f"size must look like NxM, got {text!r}") from None
        return cls(n, m)

    def __str__(self):
        return f"{self.n}x{self.m}"


def _as_size(size) -> LatticeSize:
    if isinstance(size, LatticeSize):
        return size
    return LatticeSize(*size)


@dataclass(frozen=True)
class Graph:
    """Undirected graph on vertices ``0 .. vertex_count-1``.

    ``edges`` holds ``(u, v)`` pairs with ``u < v``, sorted. ``faces`` is only
    set by builders that know an embedding (the 4.8.8 lattice); each face is
    the vertex cycle around it.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...]
    faces: tuple[tuple[int, ...], ...] | None = None
    face_labels: tuple[str, ...] | None = None
    _degrees: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.labels) != self.vertex_count:
            raise ValueError("need one label per vertex")
        deg = np.zeros(self.vertex_count, dtype=np.int64)
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge {(u, v)} is not a normalized pair of vertex ids")
            deg[u] += 1
            deg[v] += 1
        deg.setflags(write=False)
        object.__setattr__(self, "_degrees", deg)

    @classmethod
    def from_edges(cls, vertex_count: int, pairs: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None, **kwargs) -> "Graph":
        """Normalize, sort and de-duplicate-check ``pairs``; simple graphs only."""
        edges = sorted((min(u, v), max(u, v)) for u, v in pairs)
        for a, b in zip(edges, edges[1:]):
            if a == b:
                raise ValueError(f"repeated edge {a}; graph would not be simple")
        if labels is None:
            labels = [str(i) for i in range(vertex_count)]
        return cls(vertex_count, tuple(edges), tuple(labels), **kwargs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    @property
    def has_faces(self) -> bool:
        return self.faces is not None

    def to_edgelist(self) -> str:
        lines = [f"# vertices={self.vertex_count} edges={self.edge_count}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


def read_edgelist(text: str) -> Graph:
    """Inverse of :meth:`Graph.to_edgelist` (labels are not stored)."""
    lines = text.strip().splitlines()
    header = lines[0]
    if not header.startswith("#"):
        raise ValueError("missing '# vertices=N edges=M' header")
    fields = dict(tok.split("=") for tok in header[1:].split())
    n_vertices, n_edges = int(fields["vertices"]), int(fields["edges"])
    pairs = [tuple(int(t) for t in line.split()) for line in lines[1:] if line.strip()]
    if len(pairs) != n_edges:
        raise ValueError(f"header says {n_edges} edges, found {len(pairs)}")
    return Graph.from_edges(n_vertices, pairs)


@dataclass(frozen=True)
class FaceStructure:
    """Quadrangular faces of the square torus, one 4-tuple of grid-vertex ids
    per face, indexed row-major like the grid vertices."""

    size: LatticeSize
    faces: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        if len(self.faces) != self.size.cells:
            raise ValueError("expected exactly n*m faces")
        counts = np.bincount(np.ravel(self.faces), minlength=self.size.cells)
        if not np.all(counts == 4):
            raise ValueError("each grid vertex must be a corner of exactly 4 faces")


# --- builders -------------------------------------------------------------

def build_cycle(n: int) -> Graph:
    _check_cycle_length(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)],
                            [f"cycle({i})" for i in range(n)])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex ``(u, u')`` numbered ``u * |H| + u'``.

    ``(u, u')`` ~ ``(v, v')`` iff ``u == v`` and ``u' ~ v'`` in H, or
    ``u' == v'`` and ``u ~ v`` in G.
    """
    k = h.vertex_count
    pairs = []
    for u in range(g.vertex_count):
        pairs.extend((u * k + a, u * k + b) for a, b in h.edges)
    for a, b in g.edges:
        pairs.extend((a * k + x, b * k + x) for x in range(k))
    labels = [f"({lg},{lh})" for lg in g.labels for lh in h.labels]
    return Graph.from_edges(g.vertex_count * k, pairs, labels)


def build_torus_grid(size) -> Graph:
    """C_n □ C_m, vertex ``grid(r,c)`` at id ``r*n + c``."""
    size = _as_size(size)
    n, m = size.n, size.m
    grid = cartesian_product(build_cycle(m), build_cycle(n))
    labels = tuple(f"grid({r},{c})" for r in range(m) for c in range(n))
    return Graph(grid.vertex_count, grid.edges, labels)


def _square_faces(size: LatticeSize):
    n, m = size.n, size.m
    return tuple(
        (r * n + c, r * n + (c + 1) % n, ((r + 1) % m) * n + c, ((r + 1) % m) * n + (c + 1) % n)
        for r in range(m) for c in range(n)
    )


def build_union_jack(size) -> tuple[Graph, FaceStructure]:
    """Square torus plus one vertex per face joined to the face's four corners."""
    size = _as_size(size)
    n, m = size.n, size.m
    nm = size.cells
    grid = build_torus_grid(size)
    faces = FaceStructure(size, _square_faces(size))
    pairs = list(grid.edges)
    for f, corners in enumerate(faces.faces):
        pairs.extend((corner, nm + f) for corner in corners)
    labels = grid.labels + tuple(f"face({r},{c})" for r in range(m) for c in range(n))
    return Graph.from_edges(2 * nm, pairs, labels), faces


# corner slots of the quadrangle owned by each cell of the 4.8.8 lattice
_N, _E, _S, _W = range(4)


def build_488(size) -> Graph:
    """Truncated-square (4.8.8) lattice on the torus.

    Cell ``(r, c)`` owns a quadrangle with corners N, E, S, W (ids
    ``4*(r*n + c) + slot``). E links to W of the cell to the right, N links
    to S of the cell above. The octagon ``(r, c)`` sits at the upper-right
    corner of cell ``(r, c)``. Both face families are recorded.
    """
    size = _as_size(size)
    n, m = size.n, size.m

    def vid(r, c, slot):
        return 4 * ((r % m) * n + (c % n)) + slot

    pairs, squares, octagons = [], [], []
    for r in range(m):
        for c in range(n):
            pairs += [(vid(r, c, _N), vid(r, c, _E)), (vid(r, c, _E), vid(r, c, _S)),
                      (vid(r, c, _S), vid(r, c, _W)), (vid(r, c, _W), vid(r, c, _N)),
                      (vid(r, c, _E), vid(r, c + 1, _W)), (vid(r, c, _N), vid(r + 1, c, _S))]
            squares.append((vid(r, c, _N), vid(r, c, _E), vid(r, c, _S), vid(r, c, _W)))
            octagons.append((
                vid(r, c, _E), vid(r, c + 1, _W), vid(r, c + 1, _N), vid(r + 1, c + 1, _S),
                vid(r + 1, c + 1, _W), vid(r + 1, c, _E), vid(r + 1, c, _S), vid(r, c, _N),
            ))
    slot_names = "NESW"
    labels = [f"sq({r},{c}).{slot_names[s]}" for r in range(m) for c in range(n) for s in range(4)]
    cells = [f"({r},{c})" for r in range(m) for c in range(n)]
    return Graph.from_edges(
        4 * size.cells, pairs, labels,
        faces=tuple(octagons) + tuple(squares),
        face_labels=tuple(f"octagon{x}" for x in cells) + tuple(f"square{x}" for x in cells),
    )


def dual_of_488(g488: Graph) -> Graph:
    """Face-adjacency dual of a graph carrying a face annotation.

    Dual vertex ``k`` is face ``k`` of the input (octagons first, then
    quadrangles, for :func:`build_488` output). Every primal edge must border
    exactly two distinct faces.
    """
    if not g488.has_faces:
        raise ValueError("graph has no face annotation; build it with build_488")
    sides: dict[tuple[int, int], list[int]] = {}
    for k, cycle in enumerate(g488.faces):
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            sides.setdefault((min(a, b), max(a, b)), []).append(k)
    if set(sides) != set(g488.edges):
        raise ValueError("face cycles do not cover the edge set")
    pairs = []
    for edge, fs in sides.items():
        if len(fs) != 2 or fs[0] == fs[1]:
            raise ValueError(f"edge {edge} does not separate two distinct faces")
        pairs.append((fs[0], fs[1]))
    labels = g488.face_labels or tuple(f"face{k}" for k in range(len(g488.faces)))
    return Graph.from_edges(len(g488.faces), pairs, labels)


# --- matrices -------------------------------------------------------------

def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.vertex_count, g.vertex_count), dtype=np.int64)
    if g.edges:
        u, v = np.array(g.edges).T
        np.add.at(a, (u, v), 1)
        np.add.at(a, (v, u), 1)
    return a


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(g.degrees).astype(np.int64)


def laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) - adjacency_matrix(g)


def signless_laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) + adjacency_matrix(g)


def incidence_matrix(g: Graph) -> np.ndarray:
    """Vertex-by-edge 0/1 matrix; columns follow the sorted edge order."""
    inc = np.zeros((g.vertex_count, g.edge_count), dtype=np.int64)
    if g.edges:
        u, v = np.array(g.edges).T
        cols = np.arange(g.edge_count)
        inc[u, cols] = 1
        inc[v, cols] = 1
    return inc


def face_vertex_incidence(size) -> np.ndarray:
    """Grid-vertex by face 0/1 matrix M (nm x nm): entry 1 iff the vertex is a
    corner of the face. It is the off-diagonal block of the Union Jack
    adjacency matrix."""
    size = _as_size(size)
    mat = np.zeros((size.cells, size.cells), dtype=np.int64)
    for f, corners in enumerate(_square_faces(size)):
        mat[list(corners), f] = 1
    return mat

"""The geometric Dynkin diagram of a signed divide.

Vertices are one basepoint per region plus the double points, numbered
1..mu: first the basepoints of Minus regions (in canonical region order),
then the double points (in input order), then the Plus basepoints.  Edges
come in two species: one per region sector at a double point, and one per
segment whose two sides are both regions (those two regions necessarily
carry opposite signs).  The multiplicity blocks A (minus x double),
B (double x plus), C (minus x plus) assemble the strictly upper
triangular intersection matrix downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divide_map import (
    MINUS, PLUS, REGION, DivideMap, Faces, segment_faces,
)

SECTOR = "sector"
SEGMENT = "segment"


@dataclass(frozen=True)
class GammaVertex:
    kind: str           # "minus" | "double" | "plus"
    ref: int            # region face index, or crossing input index
    index: int          # 1..mu in the canonical numbering


@dataclass(frozen=True)
class GammaEdge:
    species: str                 # SECTOR or SEGMENT
    i: int                       # vertex indices, i < j
    j: int
    crossing: int | None = None  # sector edges: crossing input index
    corner: int | None = None    # sector edges: slot pair (corner, corner+1)
    edge_id: int | None = None   # segment edges: divide edge index


@dataclass(frozen=True)
class Gamma:
    vertices: tuple[GammaVertex, ...]
    edges: tuple[GammaEdge, ...]
    n_minus: int
    n_double: int
    n_plus: int
    A: tuple[tuple[int, ...], ...]   # minus x double sector multiplicities
    B: tuple[tuple[int, ...], ...]   # double x plus sector multiplicities
    C: tuple[tuple[int, ...], ...]   # minus x plus segment multiplicities

    @property
    def mu(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class GammaCounts:
    mu: int
    e: int
    f: int


def build_gamma(m: DivideMap, faces: Faces) -> Gamma:
    """Assemble the diagram from the signed faces of a divide."""
    minus_regions = [fi for fi in faces.regions
                     if faces.faces[fi].sign == MINUS]
    plus_regions = [fi for fi in faces.regions
                    if faces.faces[fi].sign == PLUS]
    n_minus, n_double, n_plus = \
        len(minus_regions), m.delta, len(plus_regions)

    vertices: list[GammaVertex] = []
    base_index: dict[int, int] = {}      # region face index -> vertex index
    for fi in minus_regions:
        vertices.append(GammaVertex("minus", fi, len(vertices) + 1))
        base_index[fi] = vertices[-1].index
    double_index = {}
    for c in range(m.delta):
        vertices.append(GammaVertex("double", c, len(vertices) + 1))
        double_index[c] = vertices[-1].index
    for fi in plus_regions:
        vertices.append(GammaVertex("plus", fi, len(vertices) + 1))
        base_index[fi] = vertices[-1].index

    minus_row = {fi: i for i, fi in enumerate(minus_regions)}
    plus_col = {fi: i for i, fi in enumerate(plus_regions)}

    A = [[0] * n_double for _ in range(n_minus)]
    B = [[0] * n_plus for _ in range(n_double)]
    C = [[0] * n_plus for _ in range(n_minus)]
    edges: list[GammaEdge] = []

    n_end = len(m.endpoints)
    for c in range(m.delta):
        v = n_end + c
        for corner in range(4):
            fi = faces.corner_face[(v, corner)]
            face = faces.faces[fi]
            if face.kind != REGION:
                continue
            i, j = sorted((base_index[fi], double_index[c]))
            edges.append(GammaEdge(SECTOR, i, j, crossing=c, corner=corner))
            if face.sign == MINUS:
                A[minus_row[fi]][c] += 1
            else:
                B[c][plus_col[fi]] += 1

    for k in range(m.n_divide_edges):
        f1, f2 = segment_faces(m, faces, k)
        a, b = faces.faces[f1], faces.faces[f2]
        if a.kind != REGION or b.kind != REGION:
            continue
        assert a.sign != b.sign   # checkerboard alternation
        mreg, preg = (f1, f2) if a.sign == MINUS else (f2, f1)
        i, j = sorted((base_index[mreg], base_index[preg]))
        edges.append(GammaEdge(SEGMENT, i, j, edge_id=k))
        C[minus_row[mreg]][plus_col[preg]] += 1

    return Gamma(
        vertices=tuple(vertices),
        edges=tuple(edges),
        n_minus=n_minus,
        n_double=n_double,
        n_plus=n_plus,
        A=tuple(tuple(row) for row in A),
        B=tuple(tuple(row) for row in B),
        C=tuple(tuple(row) for row in C),
    )


def counts(gamma: Gamma) -> GammaCounts:
    """mu, edge count e (with multiplicity), and flag count f.

    A flag is a pair of sector edges at one double point, one to a Minus
    basepoint and one to a Plus basepoint; f is the total with
    multiplicity, i.e. the sum of the entries of A*B.
    """
    e = (sum(x for row in gamma.A for x in row)
         + sum(x for row in gamma.B for x in row)
         + sum(x for row in gamma.C for x in row))
    f = 0
    for d in range(gamma.n_double):
        left = sum(gamma.A[b][d] for b in range(gamma.n_minus))
        right = sum(gamma.B[d][p] for p in range(gamma.n_plus))
        f += left * right
    return GammaCounts(mu=gamma.mu, e=e, f=f)


def has_multi_edge(gamma: Gamma) -> bool:
    """True if any pair of Gamma vertices is joined by several edges."""
    return any(x > 1 for block in (gamma.A, gamma.B, gamma.C)
               for row in block for x in row)


def body_euler(m: DivideMap, faces: Faces) -> int:
    """Euler characteristic of the body: double points plus closed regions.

    As a cell complex the body has every double point as a 0-cell, the
    segments with at least one region side as 1-cells, and the regions as
    2-cells.
    """
    region_sides = 0
    for k in range(m.n_divide_edges):
        f1, f2 = segment_faces(m, faces, k)
        if (faces.faces[f1].kind == REGION
                or faces.faces[f2].kind == REGION):
            region_sides += 1
    return m.delta - region_sides + faces.region_count()


def check_flag_edges(gamma: Gamma) -> list[tuple[int, int, int]]:
    """Flags whose closing edge is missing.

    Returns every triple (minus vertex, double vertex, plus vertex) with a
    sector edge on both sides but no segment edge joining the basepoints.
    Empty whenever the triangle construction underlying the Euler count
    applies (in particular on simple cellular divides).
    """
    violations = []
    for b in range(gamma.n_minus):
        for d in range(gamma.n_double):
            if gamma.A[b][d] == 0:
                continue
            for p in range(gamma.n_plus):
                if gamma.B[d][p] > 0 and gamma.C[b][p] == 0:
                    violations.append((
                        gamma.vertices[b].index,
                        gamma.vertices[gamma.n_minus + d].index,
                        gamma.vertices[gamma.n_minus + gamma.n_double + p].index,
                    ))
    return violations


def gamma_to_dot(gamma: Gamma) -> str:
    """Deterministic Graphviz DOT rendering of the diagram.

    Minus basepoints are boxes labeled "-", double points circles labeled
    by their vertex index, Plus basepoints boxes labeled "+".  Segment
    edges are dashed to distinguish the two species.
    """
    names = {}
    lines = ["graph gamma {", "  node [fontsize=10];"]
    for v in gamma.vertices:
        if v.kind == "minus":
            names[v.index] = f"m{v.index}"
            lines.append(f'  m{v.index} [shape=box, label="-"];')
        elif v.kind == "double":
            names[v.index] = f"d{v.index}"
            lines.append(f'  d{v.index} [shape=circle, label="{v.index}"];')
        else:
            names[v.index] = f"p{v.index}"
            lines.append(f'  p{v.index} [shape=box, label="+"];')
    for e in sorted(gamma.edges, key=lambda e: (e.i, e.j, e.species)):
        style = " [style=dashed]" if e.species == SEGMENT else ""
        lines.append(f"  {names[e.i]} -- {names[e.j]}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Generalized Young diagrams with constraints, and path-graph parametrization.

The constrained-enumeration engine powers the combinatorial property
suites (monotone Weyl averages, Schur log-convexity, splitting) and the
skew Schur polynomials they need.  Path graphs reparametrize GT patterns
by nonnegative edge variables tied to a spectrum ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Sequence

from .tableaux import GTPattern, InvalidShapeError, YoungDiagram

Cell = tuple[int, int]
Filling = dict[Cell, int]


@dataclass(frozen=True)
class GeneralizedDiagram:
    """A finite set of lattice cells (i, j); equality is up to translation."""

    cells: frozenset[Cell]

    @staticmethod
    def of(cells) -> "GeneralizedDiagram":
        return GeneralizedDiagram(frozenset((int(i), int(j)) for i, j in cells))

    def canonical(self) -> "GeneralizedDiagram":
        if not self.cells:
            return self
        min_i = min(i for i, _ in self.cells)
        min_j = min(j for _, j in self.cells)
        return GeneralizedDiagram(
            frozenset((i - min_i, j - min_j) for i, j in self.cells)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneralizedDiagram):
            return NotImplemented
        return self.canonical().cells == other.canonical().cells

    def __hash__(self) -> int:
        return hash(self.canonical().cells)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def __len__(self) -> int:
        return len(self.cells)


def parse_gyd(text: str) -> GeneralizedDiagram:
    """Parse the semicolon-separated cell format '0,4;1,1;1,2'."""
    cells = []
    if text.strip():
        for chunk in text.split(";"):
            i_str, j_str = chunk.split(",")
            cells.append((int(i_str), int(j_str)))
    return GeneralizedDiagram.of(cells)


def diagram_cells(shape: YoungDiagram) -> GeneralizedDiagram:
    """Ordinary diagram as a cell set (rows 1..d, columns 1..lambda_i)."""
    shape.require_sector()
    return GeneralizedDiagram.of(
        (i, j) for i in range(1, shape.d + 1) for j in range(1, shape.row(i) + 1)
    )


def skew_cells(outer: YoungDiagram, inner: YoungDiagram) -> GeneralizedDiagram:
    """Skew shape outer \\ inner as a gYD."""
    if inner.d != outer.d:
        raise ValueError("skew shapes need equal row counts")
    for o, i in zip(outer.rows, inner.rows):
        if i > o:
            raise ValueError(f"{inner} is not contained in {outer}")
    return GeneralizedDiagram.of(
        (i, j)
        for i in range(1, outer.d + 1)
        for j in range(inner.row(i) + 1, outer.row(i) + 1)
    )


def trivial_constraint(diagram: GeneralizedDiagram, d: int) -> dict[Cell, tuple[int, int]]:
    return {cell: (1, d) for cell in diagram.cells}


def enumerate_gwt(
    diagram: GeneralizedDiagram,
    d: int,
    constraint: Mapping[Cell, tuple[int, int]] | None = None,
) -> Iterator[Filling]:
    """All fillings: weakly increasing rightward, strictly increasing downward.

    Adjacency rules apply only between cells that are both present; the
    per-cell constraint bounds the entry.
    """
    cons = constraint if constraint is not None else {}
    cells = diagram.sorted_cells()
    filling: Filling = {}

    def rec(idx: int) -> Iterator[Filling]:
        if idx == len(cells):
            yield dict(filling)
            return
        cell = cells[idx]
        i, j = cell
        lo, hi = cons.get(cell, (1, d))
        left = filling.get((i, j - 1))
        if left is not None:
            lo = max(lo, left)
        up = filling.get((i - 1, j))
        if up is not None:
            lo = max(lo, up + 1)
        for val in range(lo, min(hi, d) + 1):
            filling[cell] = val
            yield from rec(idx + 1)
        filling.pop(cell, None)

    yield from rec(0)


def filling_weight(filling: Filling, q: Sequence) -> Fraction:
    w = q[0] - q[0] + 1  # 1 in the arithmetic of q
    for val in filling.values():
        w = w * q[val - 1]
    return w


def constrained_schur(
    diagram: GeneralizedDiagram,
    d: int,
    constraint: Mapping[Cell, tuple[int, int]] | None,
    q: Sequence,
    func: Callable[[Filling], Fraction] | None = None,
):
    """Generalized (weighted) Schur polynomial: sum of F(w) q^{#(w)}."""
    if len(q) != d:
        raise ValueError("weight vector length must equal d")
    total = 0
    for filling in enumerate_gwt(diagram, d, constraint):
        w = filling_weight(filling, q)
        if func is not None:
            w = func(filling) * w
        total = total + w
    return total


def constrained_weyl_average(
    diagram: GeneralizedDiagram,
    d: int,
    constraint: Mapping[Cell, tuple[int, int]] | None,
    q: Sequence,
    func: Callable[[Filling], Fraction],
):
    """Normalized average; returns 0 when the normalization vanishes."""
    num = 0
    den = 0
    for filling in enumerate_gwt(diagram, d, constraint):
        w = filling_weight(filling, q)
        den = den + w
        num = num + func(filling) * w
    if den == 0:
        return Fraction(0)
    return num / den


def lowest_weight_gwt(diagram: GeneralizedDiagram, d: int) -> Filling | None:
    """Pointwise-minimal filling, or None when the diagram is unfillable."""
    filling: Filling = {}
    for cell in diagram.sorted_cells():
        i, j = cell
        lo = 1
        if (i, j - 1) in filling:
            lo = max(lo, filling[(i, j - 1)])
        if (i - 1, j) in filling:
            lo = max(lo, filling[(i - 1, j)] + 1)
        if lo > d:
            return None
        filling[cell] = lo
    return filling


def highest_weight_gwt(diagram: GeneralizedDiagram, d: int) -> Filling | None:
    """Pointwise-maximal filling, by the rotated-and-relabeled dual of the minimum."""
    filling: Filling = {}
    for cell in sorted(diagram.cells, reverse=True):
        i, j = cell
        hi = d
        if (i, j + 1) in filling:
            hi = min(hi, filling[(i, j + 1)])
        if (i + 1, j) in filling:
            hi = min(hi, filling[(i + 1, j)] - 1)
        if hi < 1:
            return None
        filling[cell] = hi
    return filling


def restriction_constraint(
    sub: GeneralizedDiagram,
    fixed: Filling,
    d: int,
) -> dict[Cell, tuple[int, int]]:
    """Constraint on `sub` induced by a fixed filling of the complementary cells."""
    cons: dict[Cell, tuple[int, int]] = {}
    for cell in sub.cells:
        i, j = cell
        lo, hi = 1, d
        if (i, j - 1) in fixed:
            lo = max(lo, fixed[(i, j - 1)])
        if (i - 1, j) in fixed:
            lo = max(lo, fixed[(i - 1, j)] + 1)
        if (i, j + 1) in fixed:
            hi = min(hi, fixed[(i, j + 1)])
        if (i + 1, j) in fixed:
            hi = min(hi, fixed[(i + 1, j)] - 1)
        cons[cell] = (lo, hi)
    return cons


# -- path graphs --------------------------------------------------------------

BACKSLASH = "\\"
SLASH = "/"


@dataclass(frozen=True)
class PathGraph:
    """d disjoint directed paths tiling the GT vertex set.

    `vertices[a][b]` is the row index of path a at level b (1-indexed,
    a <= b <= d); `edge_types[(a, b)]` labels the edge entering level b.
    """

    d: int
    vertices: dict[int, dict[int, int]]
    edge_types: dict[tuple[int, int], str]

    def terminal_row(self, a: int) -> int:
        return self.vertices[a][self.d]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PathGraph):
            return NotImplemented
        return (
            self.d == other.d
            and self.vertices == other.vertices
            and self.edge_types == other.edge_types
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.d,
                tuple(sorted((a, tuple(sorted(v.items()))) for a, v in self.vertices.items())),
                tuple(sorted(self.edge_types.items())),
            )
        )


def path_graph_from_permutation(pi: Sequence[int]) -> PathGraph:
    """The unique path graph with path a terminating at row pi^{-1}(a)."""
    d = len(pi)
    if sorted(pi) != list(range(1, d + 1)):
        raise ValueError(f"{pi} is not a permutation of 1..{d}")
    inv = [0] * (d + 1)
    for pos, val in enumerate(pi, start=1):
        inv[val] = pos
    positions = {a: inv[a] for a in range(1, d + 1)}  # rows at level d
    vertices: dict[int, dict[int, int]] = {a: {d: positions[a]} for a in range(1, d + 1)}
    edge_types: dict[tuple[int, int], str] = {}
    current = dict(positions)
    for level in range(d, 1, -1):
        # paths 1..level-1 continue below; path `level` starts at this level
        anchor = current[level]
        nxt: dict[int, int] = {}
        for a in range(1, level):
            if current[a] < anchor:
                edge_types[(a, level)] = BACKSLASH
                nxt[a] = current[a]
            else:
                edge_types[(a, level)] = SLASH
                nxt[a] = current[a] - 1
        for a in range(1, level):
            vertices[a][level - 1] = nxt[a]
        current = nxt
    # consistency: every vertex of the GT lattice is covered exactly once
    covered = {(vertices[a][b], b) for a in range(1, d + 1) for b in vertices[a]}
    expected = {(i, b) for b in range(1, d + 1) for i in range(1, b + 1)}
    if covered != expected:
        raise RuntimeError("path graph does not tile the GT lattice")
    for (a, b), kind in edge_types.items():
        want = BACKSLASH if inv[a] < inv[b] else SLASH
        if kind != want:
            raise RuntimeError("edge type disagrees with the permutation order rule")
    return PathGraph(d, vertices, edge_types)


def path_graph_for_spectrum(q: Sequence) -> PathGraph:
    """Path graph induced by the (distinct-entry) spectrum ordering."""
    d = len(q)
    if len(set(q)) != d:
        raise ValueError("spectrum entries must be distinct")
    order = sorted(range(1, d + 1), key=lambda a: q[a - 1], reverse=True)
    # pi with pi^{-1}(a) = rank of q_a from the top
    inv = {a: order.index(a) + 1 for a in range(1, d + 1)}
    pi = [0] * d
    for a, pos in inv.items():
        pi[pos - 1] = a
    return path_graph_from_permutation(pi)


def wt_to_edge_vars(w: GTPattern, graph: PathGraph) -> dict[tuple[int, int], int]:
    """Nonnegative edge variables of the pattern along the path graph."""
    if w.d != graph.d:
        raise ValueError("pattern and path graph disagree on d")
    out: dict[tuple[int, int], int] = {}
    for (a, b), kind in graph.edge_types.items():
        lower = w.entry(graph.vertices[a][b - 1], b - 1)
        upper = w.entry(graph.vertices[a][b], b)
        raw = lower - upper
        if kind == BACKSLASH and raw > 0 or kind == SLASH and raw < 0:
            raise RuntimeError(
                f"edge ({a},{b}) of type {kind} got raw difference {raw}"
            )
        out[(a, b)] = abs(raw)
    return out


def edge_vars_to_wt(
    t: Mapping[tuple[int, int], int], sigma: YoungDiagram, graph: PathGraph
) -> GTPattern:
    """Reconstruct the pattern; raises naming the violated interlacing constraint."""
    d = graph.d
    if sigma.d != d:
        raise ValueError("shape and path graph disagree on d")
    entries: dict[tuple[int, int], int] = {}
    for a in range(1, d + 1):
        top_row = graph.vertices[a][d]
        value = sigma.row(top_row)
        entries[(top_row, d)] = value
        for b in range(d, a, -1):
            tv = t.get((a, b), 0)
            if tv < 0:
                raise ValueError(f"edge variable t[{a},{b}] must be nonnegative")
            signed = -tv if graph.edge_types[(a, b)] == BACKSLASH else tv
            value = value + signed
            entries[(graph.vertices[a][b - 1], b - 1)] = value
    levels = tuple(
        tuple(entries[(i, b)] for i in range(1, b + 1)) for b in range(1, d + 1)
    )
    pattern = GTPattern(levels)
    try:
        pattern.validate()
    except InvalidShapeError as exc:
        raise InvalidShapeError(f"inadmissible edge variables: {exc}") from None
    return pattern


def lowest_weight_pattern(sigma: YoungDiagram, graph: PathGraph) -> GTPattern:
    """The t = 0 pattern: occupancies #_a = sigma_{pi^{-1}(a)}."""
    return edge_vars_to_wt({}, sigma, graph)


def edge_ratio_product(
    q: Sequence, graph: PathGraph, t: Mapping[tuple[int, int], int]
):
    """prod r_{a,b}^{t_{a,b}} with the ratio orientation fixed by the edge type."""
    out = q[0] / q[0]
    for (a, b), kind in graph.edge_types.items():
        tv = t.get((a, b), 0)
        if tv == 0:
            continue
        ratio = q[b - 1] / q[a - 1] if kind == BACKSLASH else q[a - 1] / q[b - 1]
        out = out * ratio**tv
    return out

"""Exact region counting for subtorus arrangements.

The complement of an arrangement is counted on the fundamental cube
[0, 1]^d. Every subtorus lifts to the finitely many parallel hyperplane
sheets that meet the cube; the cube is then split incrementally, sheet by
sheet, into open convex cells. Finally opposite cube facets are identified:
two cells are glued whenever their wall facets overlap in a set of
dimension d-1 and the wall itself is not one of the subtori. The number of
regions is the number of union-find classes.

Cells are tracked by their exact vertex sets (integer coordinate vectors
over a common denominator), which makes every split decision a matter of
evaluating signs of integer expressions: a sheet properly cuts a cell
exactly when its affine form takes both signs on the vertex set. New
vertices appear only on edges crossing the sheet and are recovered from
vertex pairs of opposite sign followed by an exact rank test, so no
floating point and no linear programming is needed on this path. The
feasibility kernel (``torusarr.feasibility``) backs the facet-overlap test
in dimension 4 and higher and remains available as an independent check.

Determinism: subtori are processed in input order, sheets in increasing
offset; splitting emits the negative-side cell first. Rebuilding the same
arrangement yields bit-identical complexes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._geometry import affine_rank, hull_h, hulls_overlap_h, int_rank
from .arrangement import Arrangement, Subtorus, validate
from .errors import DimensionMismatch, ResourceCapError
from .feasibility import LinConstraint, feasible, relative_dim_is  # noqa: F401  (kernel ops belong to this module's surface)
from .lattice import IntVec

DEFAULT_MAX_SHEETS = 64


class UnionFind:
    """Union-find over cell indices with deterministic smallest-root merging."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            groups.setdefault(self.find(i), []).append(i)
        return [groups[r] for r in sorted(groups)]

    def count(self) -> int:
        return sum(1 for i in range(len(self.parent)) if self.find(i) == i)


@dataclass(frozen=True)
class HPolytope:
    """Conjunction of rational linear constraints describing one open cell.

    Cube-wall constraints are non-strict; constraints inherited from sheet
    cuts are strict, so the constraint set describes the open cell and its
    closure is obtained by closing every relation.
    """

    constraints: tuple[LinConstraint, ...]
    dim: int


@dataclass(frozen=True)
class CellComplex:
    """Result of decomposing the fundamental cube along the lifted sheets.

    ``sign_vectors[i][j]`` is the side (+1 / -1) of sheet j that open cell i
    lies on. ``gluing`` and ``region_count`` are filled once the torus
    identifications have been applied; they are None on an unglued complex.
    """

    dim: int
    sheets: tuple[tuple[IntVec, Fraction], ...]
    cells: tuple[HPolytope, ...]
    sign_vectors: tuple[tuple[int, ...], ...]
    cell_vertices: tuple[tuple[tuple[Fraction, ...], ...], ...]
    gluing: UnionFind | None
    region_count: int | None


def lift_hyperplanes(s: Subtorus, d: int) -> list[tuple[IntVec, Fraction]]:
    """All lifts a . x = offset + k of the subtorus meeting the closed cube.

    k ranges over the integers for which the affine form's range over
    [0, 1]^d contains offset + k; the range endpoints are the sums of the
    negative and of the positive coefficients.
    """
    if s.dim != d:
        raise DimensionMismatch(f"subtorus lives in dimension {s.dim}, not {d}")
    lo = sum(min(x, 0) for x in s.normal)
    hi = sum(max(x, 0) for x in s.normal)
    kmin = math.ceil(lo - s.offset)
    kmax = math.floor(hi - s.offset)
    return [(s.normal, s.offset + k) for k in range(kmin, kmax + 1)]


# --------------------------------------------------------------------------
# Internal representation.
#
# Vertex: (nums, den) with den > 0 and gcd(*nums, den) = 1; coordinate k is
# nums[k] / den. Constraint: (a, p, q, wall) meaning a . x <= p/q with q > 0;
# its integer slack at a vertex is q * (a . nums) - p * den, which has the
# sign of (a . x - p/q).
# --------------------------------------------------------------------------


def _mk_point(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = math.gcd(den, *(abs(v) for v in nums))
    if g > 1:
        den //= g
        nums = [v // g for v in nums]
    return tuple(nums), den


def _point_fractions(pt) -> tuple[Fraction, ...]:
    nums, den = pt
    return tuple(Fraction(v, den) for v in nums)


class _Cell:
    __slots__ = ("cons", "verts", "signs")

    def __init__(self, cons, verts, signs):
        self.cons = cons
        self.verts = verts
        self.signs = signs


def _slack(con, pt) -> int:
    a, p, q, _ = con
    nums, den = pt
    acc = 0
    for av, nv in zip(a, nums):
        if av:
            acc += av * nv
    return q * acc - p * den


def _make_cell(cons, candidates, signs, d) -> _Cell:
    """Filter candidate points down to the true vertex set and prune
    constraints that are nowhere tight on it."""
    seen = set()
    kept: list[tuple[tuple[int, ...], int]] = []
    kept_tight: list[list[int]] = []
    for pt in candidates:
        if pt in seen:
            continue
        seen.add(pt)
        tight = [ci for ci, con in enumerate(cons) if _slack(con, pt) == 0]
        if len(tight) < d:
            continue
        if int_rank([cons[ci][0] for ci in tight]) == d:
            kept.append(pt)
            kept_tight.append(tight)
    if len(kept) < d + 1:
        raise RuntimeError("internal: cell lost full dimension during split")
    used = set()
    for tight in kept_tight:
        used.update(tight)
    pruned = [con for ci, con in enumerate(cons) if ci in used]
    return _Cell(pruned, kept, signs)


def _split_cell(cell: _Cell, a, p, q, vals) -> tuple[_Cell, _Cell]:
    d = len(a)
    crosses: list[tuple[tuple[int, ...], int]] = []
    cross_seen = set()
    for (v, sv) in zip(cell.verts, vals):
        if sv <= 0:
            continue
        for (w, sw) in zip(cell.verts, vals):
            if sw >= 0:
                continue
            alpha, beta = v[1], w[1]
            t_num = sv * beta
            b_num = t_num - sw * alpha
            nums = [
                (b_num - t_num) * beta * nv + t_num * alpha * nw
                for nv, nw in zip(v[0], w[0])
            ]
            pt = _mk_point(nums, b_num * alpha * beta)
            if pt not in cross_seen:
                cross_seen.add(pt)
                crosses.append(pt)
    minus_cand = [v for v, s in zip(cell.verts, vals) if s <= 0] + crosses
    plus_cand = [v for v, s in zip(cell.verts, vals) if s >= 0] + crosses
    neg_a = tuple(-x for x in a)
    minus = _make_cell(cell.cons + [(a, p, q, False)], minus_cand, cell.signs + [-1], d)
    plus = _make_cell(cell.cons + [(neg_a, -p, q, False)], plus_cand, cell.signs + [1], d)
    return minus, plus


def _initial_cube(d: int) -> _Cell:
    cons = []
    for i in range(d):
        low = tuple(-1 if j == i else 0 for j in range(d))
        high = tuple(1 if j == i else 0 for j in range(d))
        cons.append((low, 0, 1, True))
        cons.append((high, 1, 1, True))
    verts = []
    for mask in range(1 << d):
        verts.append((tuple((mask >> j) & 1 for j in range(d)), 1))
    return _Cell(cons, verts, [])


def _collect_sheets(arr: Arrangement, max_sheets: int | None):
    cap = DEFAULT_MAX_SHEETS if max_sheets is None else max_sheets
    sheets: list[tuple[IntVec, Fraction]] = []
    for torus in arr.tori:
        sheets.extend(lift_hyperplanes(torus, arr.dim))
    if len(sheets) > cap:
        raise ResourceCapError(
            f"arrangement lifts to {len(sheets)} hyperplane sheets, exceeding the cap of "
            f"{cap}; raise the cap (TORUSARR_MAX_SHEETS / max_sheets) only if you accept "
            f"the cost"
        )
    return sheets


def _build(arr: Arrangement, max_sheets: int | None):
    validate(arr)
    d = arr.dim
    sheets = _collect_sheets(arr, max_sheets)
    cells = [_initial_cube(d)]
    for a, rhs in sheets:
        p, q = rhs.numerator, rhs.denominator
        con = (a, p, q, False)
        new_cells: list[_Cell] = []
        for cell in cells:
            has_neg = False
            has_pos = False
            vals = []
            for v in cell.verts:
                s = _slack(con, v)
                vals.append(s)
                if s < 0:
                    has_neg = True
                elif s > 0:
                    has_pos = True
            if has_neg and has_pos:
                minus, plus = _split_cell(cell, a, p, q, vals)
                new_cells.append(minus)
                new_cells.append(plus)
            else:
                cell.signs.append(1 if has_pos else -1)
                new_cells.append(cell)
        cells = new_cells
    return cells, sheets


def _blocked_axes(arr: Arrangement) -> set[int]:
    blocked = set()
    for torus in arr.tori:
        if torus.offset == 0 and sum(abs(x) for x in torus.normal) == 1:
            axis = next(i for i, x in enumerate(torus.normal) if x != 0)
            blocked.add(axis)
    return blocked


def _facet_entries(cells, d, axis, at_one):
    """Cells whose facet on the given wall has full dimension d-1.

    Each entry is (cell index, hull or None, bbox). Facet vertices project
    to homogeneous integer points once the wall coordinate is dropped; for
    d = 3 the convex hull is precomputed so pair tests only clip.
    """
    entries = []
    for idx, cell in enumerate(cells):
        if at_one:
            pts = [v for v in cell.verts if v[0][axis] == v[1]]
        else:
            pts = [v for v in cell.verts if v[0][axis] == 0]
        if len(pts) < d:
            continue
        if d == 1:
            entries.append((idx, None, ((), ())))
            continue
        proj = [
            tuple(v[0][k] for k in range(d) if k != axis) + (v[1],) for v in pts
        ]
        coords = [
            [Fraction(p[k], p[-1]) for p in proj] for k in range(d - 1)
        ]
        bbox = (
            tuple(min(c) for c in coords),
            tuple(max(c) for c in coords),
        )
        if d == 2:
            if bbox[0][0] == bbox[1][0]:
                continue
            entries.append((idx, None, bbox))
        elif d == 3:
            hull = hull_h(proj)
            if len(hull) < 3:
                continue
            entries.append((idx, hull, bbox))
        else:
            frac_pts = [tuple(Fraction(p[k], p[-1]) for k in range(d - 1)) for p in proj]
            if affine_rank(frac_pts) != d - 1:
                continue
            entries.append((idx, None, bbox))
    return entries


def _shifted_closure_system(cell_hi: _Cell, cell_lo: _Cell, axis: int, d: int):
    cons = []
    for a, p, q, _ in cell_hi.cons:
        rhs = Fraction(p, q) - a[axis]
        cons.append(LinConstraint(tuple(Fraction(x) for x in a), rhs, "<="))
    for a, p, q, _ in cell_lo.cons:
        cons.append(LinConstraint(tuple(Fraction(x) for x in a), Fraction(p, q), "<="))
    wall = tuple(Fraction(1 if k == axis else 0) for k in range(d))
    cons.append(LinConstraint(wall, Fraction(0), "="))
    return cons


def _glue(cells, arr: Arrangement) -> UnionFind:
    d = arr.dim
    blocked = _blocked_axes(arr)
    uf = UnionFind(len(cells))
    for axis in range(d):
        if axis in blocked:
            continue
        hi_entries = _facet_entries(cells, d, axis, at_one=True)
        lo_entries = _facet_entries(cells, d, axis, at_one=False)
        for i1, hull1, bb1 in hi_entries:
            for i2, hull2, bb2 in lo_entries:
                if uf.find(i1) == uf.find(i2):
                    continue
                if any(
                    max(bb1[0][k], bb2[0][k]) >= min(bb1[1][k], bb2[1][k])
                    for k in range(d - 1)
                ):
                    continue
                if d <= 2:
                    touch = True
                elif d == 3:
                    touch = hulls_overlap_h(hull1, hull2)
                else:
                    system = _shifted_closure_system(cells[i1], cells[i2], axis, d)
                    touch = relative_dim_is(system, d, d - 1)
                if touch:
                    uf.union(i1, i2)
    return uf


def _to_public(cells, sheets, d, gluing, region_count) -> CellComplex:
    polys = []
    verts = []
    for cell in cells:
        constraints = tuple(
            LinConstraint(
                tuple(Fraction(x) for x in a),
                Fraction(p, q),
                "<=" if wall else "<",
            )
            for a, p, q, wall in cell.cons
        )
        polys.append(HPolytope(constraints, d))
        verts.append(tuple(_point_fractions(v) for v in cell.verts))
    return CellComplex(
        dim=d,
        sheets=tuple(sheets),
        cells=tuple(polys),
        sign_vectors=tuple(tuple(cell.signs) for cell in cells),
        cell_vertices=tuple(verts),
        gluing=gluing,
        region_count=region_count,
    )


def build_cells(arr: Arrangement, max_sheets: int | None = None, glue: bool = False) -> CellComplex:
    """Decompose the fundamental cube along all lifted sheets.

    With ``glue=True`` the torus identifications are applied as well and
    ``gluing`` / ``region_count`` are populated.
    """
    cells, sheets = _build(arr, max_sheets)
    if glue:
        uf = _glue(cells, arr)
        return _to_public(cells, sheets, arr.dim, uf, uf.count())
    return _to_public(cells, sheets, arr.dim, None, None)


def count_regions(arr: Arrangement, max_sheets: int | None = None) -> int:
    """Number of connected components of the complement of the arrangement."""
    cells, _ = _build(arr, max_sheets)
    return _glue(cells, arr).count()


def _centroid(cell: _Cell, d: int) -> tuple[Fraction, ...]:
    n = len(cell.verts)
    return tuple(
        sum(Fraction(v[0][k], v[1]) for v in cell.verts) / n for k in range(d)
    )


def region_witnesses(arr: Arrangement, max_sheets: int | None = None) -> list[tuple[Fraction, ...]]:
    """One exact interior point per region, coordinates in [0, 1).

    The witness for a region is the vertex centroid of its lowest-index
    cell, which lies strictly inside that open cell.
    """
    cells, _ = _build(arr, max_sheets)
    uf = _glue(cells, arr)
    return [_centroid(cells[group[0]], arr.dim) for group in uf.classes()]

"""A dual affine plane over Z_d, the affine plane itself, and the duality between them.

The dual plane has d(d+1) points arranged in d+1 columns: a reference column
b = -1 plus one column per b = 0..d-1, each holding rows m = 0..d-1. A line is
labelled by its rows in columns -1 and 0 and visits every column exactly once:

    row(-1) = m_minus1
    row(b)  = half(b) * (2*m_minus1 - 1) + m0      (mod d, b = 0..d-1)

The affine plane on the d*d points (xi, eta) has sloped lines eta = r*xi + s
and vertical lines xi = const. Its points correspond one-to-one with dual-plane
lines via (xi, eta) = (m_minus1, m0); under that reading, the d dual-plane
lines indexed by an affine line all pass through a single dual-plane point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .core import Modulus
from .errors import NoCommonPointError
from .report import AxiomReport, Check

CB_COLUMN = -1


class Point(NamedTuple):
    """Dual-plane point: row m in column b (b = -1 is the reference column)."""

    m: int
    b: int


class Line(NamedTuple):
    """Dual-plane line, labelled by its rows in columns -1 and 0."""

    m_minus1: int
    m0: int


class ApgPoint(NamedTuple):
    xi: int
    eta: int


@dataclass(frozen=True)
class SlopedLine:
    """Affine line eta = r*xi + s (mod d)."""

    r: int
    s: int


@dataclass(frozen=True)
class VerticalLine:
    """Affine line xi = const."""

    xi: int


ApgLine = Union[SlopedLine, VerticalLine]


def check_point(mod: Modulus, point: Point) -> None:
    if not (0 <= point.m < mod.d and CB_COLUMN <= point.b < mod.d):
        raise ValueError(f"invalid point label {format_point(point)} for d={mod.d}")


def check_line(mod: Modulus, line: Line) -> None:
    if not (0 <= line.m_minus1 < mod.d and 0 <= line.m0 < mod.d):
        raise ValueError(f"invalid line label {format_line(line)} for d={mod.d}")


def check_apg_point(mod: Modulus, point: ApgPoint) -> None:
    if not (0 <= point.xi < mod.d and 0 <= point.eta < mod.d):
        raise ValueError(f"invalid affine point ({point.xi},{point.eta}) for d={mod.d}")


def check_apg_line(mod: Modulus, apg_line: ApgLine) -> None:
    if isinstance(apg_line, VerticalLine):
        if not 0 <= apg_line.xi < mod.d:
            raise ValueError(f"invalid vertical line xi={apg_line.xi} for d={mod.d}")
    elif isinstance(apg_line, SlopedLine):
        if not (0 <= apg_line.r < mod.d and 0 <= apg_line.s < mod.d):
            raise ValueError(
                f"invalid sloped line (r={apg_line.r}, s={apg_line.s}) for d={mod.d}"
            )
    else:
        raise TypeError(f"not an affine line: {apg_line!r}")


def format_point(point: Point) -> str:
    return f"({point.m},{point.b})"


def format_line(line: Line) -> str:
    return f"({line.m_minus1},{line.m0})"


def all_points(mod: Modulus) -> tuple[Point, ...]:
    """Every dual-plane point, column-major starting at the reference column."""
    return tuple(Point(m, b) for b in range(CB_COLUMN, mod.d) for m in range(mod.d))


def all_lines(mod: Modulus) -> tuple[Line, ...]:
    """Every dual-plane line, lexicographic in (m_minus1, m0)."""
    return tuple(Line(a, b) for a in range(mod.d) for b in range(mod.d))


def line_points(mod: Modulus, line: Line) -> tuple[Point, ...]:
    """The d+1 points of a line, one per column, in column order -1, 0, .., d-1."""
    check_line(mod, line)
    pts = [Point(line.m_minus1, CB_COLUMN)]
    for b in range(mod.d):
        m = (mod.half(b) * (2 * line.m_minus1 - 1) + line.m0) % mod.d
        pts.append(Point(m, b))
    return tuple(pts)


def incident(mod: Modulus, point: Point, line: Line) -> bool:
    """Whether the point lies on the line."""
    check_point(mod, point)
    check_line(mod, line)
    if point.b == CB_COLUMN:
        return point.m == line.m_minus1
    expected = (mod.half(point.b) * (2 * line.m_minus1 - 1) + line.m0) % mod.d
    return point.m == expected


def lines_through_point(mod: Modulus, point: Point) -> tuple[Line, ...]:
    """The d lines through a point, in ascending m_minus1 (m0 for the reference column)."""
    check_point(mod, point)
    if point.b == CB_COLUMN:
        return tuple(Line(point.m, m0) for m0 in range(mod.d))
    hb = mod.half(point.b)
    return tuple(Line(t, (point.m - hb * (2 * t - 1)) % mod.d) for t in range(mod.d))


def parallel_class(mod: Modulus, b: int) -> tuple[Point, ...]:
    """All d points of one column; columns partition the point set."""
    if not CB_COLUMN <= b < mod.d:
        raise ValueError(f"invalid column {b} for d={mod.d}")
    return tuple(Point(m, b) for m in range(mod.d))


def apg_points(mod: Modulus) -> tuple[ApgPoint, ...]:
    return tuple(ApgPoint(xi, eta) for xi in range(mod.d) for eta in range(mod.d))


def apg_lines(mod: Modulus) -> tuple[ApgLine, ...]:
    """All d(d+1) affine lines: sloped ones lexicographic in (r, s), then verticals."""
    sloped = tuple(SlopedLine(r, s) for r in range(mod.d) for s in range(mod.d))
    vertical = tuple(VerticalLine(xi) for xi in range(mod.d))
    return sloped + vertical


def apg_line_points(mod: Modulus, apg_line: ApgLine) -> tuple[ApgPoint, ...]:
    """The d affine points on an affine line."""
    check_apg_line(mod, apg_line)
    if isinstance(apg_line, VerticalLine):
        return tuple(ApgPoint(apg_line.xi, eta) for eta in range(mod.d))
    return tuple(ApgPoint(xi, (apg_line.r * xi + apg_line.s) % mod.d) for xi in range(mod.d))


def line_to_apg_point(line: Line) -> ApgPoint:
    """Read a dual-plane line label as an affine point."""
    return ApgPoint(line.m_minus1, line.m0)


def apg_point_to_line(point: ApgPoint) -> Line:
    return Line(point.xi, point.eta)


def duality_common_point(mod: Modulus, apg_line: ApgLine) -> Point:
    """The single dual-plane point shared by all lines indexed along an affine line.

    A vertical line xi = s' collects the lines with m_minus1 = s', which meet in
    (s', -1). A sloped line eta = r*xi + s collects lines meeting in row
    s + half(r) of column -r mod d; slope 0 lands in column 0 at row s.
    """
    check_apg_line(mod, apg_line)
    if isinstance(apg_line, VerticalLine):
        common = Point(apg_line.xi, CB_COLUMN)
    else:
        common = Point((apg_line.s + mod.half(apg_line.r)) % mod.d, (-apg_line.r) % mod.d)
    for apg_pt in apg_line_points(mod, apg_line):
        if not incident(mod, common, apg_point_to_line(apg_pt)):
            raise NoCommonPointError(
                f"pencil of affine line {apg_line!r} misses {format_point(common)}"
            )
    return common


def verify_dapg_axioms(mod: Modulus) -> AxiomReport:
    """Exhaustively check the defining properties of the dual plane.

    Covers: counts (d^2 distinct lines, d(d+1) points); any two lines meet in
    exactly one point; any two points of different columns lie on exactly one
    common line; every point lies on d lines and every line holds d+1 points,
    one per column; columns partition the points and are totally disconnected;
    the cross-column connectivity that makes the geometry a single block.
    """
    d = mod.d
    lines = all_lines(mod)
    points = all_points(mod)
    points_on = {line: frozenset(line_points(mod, line)) for line in lines}
    lines_on: dict[Point, set[Line]] = {p: set() for p in points}
    for line, pts in points_on.items():
        for p in pts:
            lines_on[p].add(line)

    checks: list[Check] = []

    ok_counts = (
        len(lines) == d * d
        and len(points) == d * (d + 1)
        and len(set(points_on.values())) == d * d
    )
    checks.append(
        Check(
            "dapg.counts",
            ok_counts,
            "" if ok_counts else f"{len(set(points_on.values()))} distinct lines, {len(points)} points",
        )
    )

    bad = ""
    for i, j1 in enumerate(lines):
        for j2 in lines[i + 1 :]:
            shared = len(points_on[j1] & points_on[j2])
            if shared != 1:
                bad = f"lines {format_line(j1)} and {format_line(j2)} share {shared} points"
                break
        if bad:
            break
    checks.append(Check("dapg.lines_meet_once", not bad, bad))

    bad_join = ""
    bad_same = ""
    bad_conn = ""
    for i, p1 in enumerate(points):
        for p2 in points[i + 1 :]:
            shared = len(lines_on[p1] & lines_on[p2])
            if p1.b == p2.b:
                if shared != 0 and not bad_same:
                    bad_same = (
                        f"points {format_point(p1)} and {format_point(p2)} of column {p1.b}"
                        f" share {shared} lines"
                    )
            else:
                if shared == 0 and not bad_conn:
                    bad_conn = f"points {format_point(p1)} and {format_point(p2)} are disconnected"
                if shared != 1 and not bad_join:
                    bad_join = (
                        f"points {format_point(p1)} and {format_point(p2)}"
                        f" lie on {shared} common lines"
                    )
    checks.append(Check("dapg.points_join_once", not bad_join, bad_join))

    bad = ""
    for p in points:
        through = lines_through_point(mod, p)
        if len(set(through)) != d or set(through) != lines_on[p]:
            bad = f"point {format_point(p)} lies on {len(lines_on[p])} lines"
            break
    if not bad:
        for line in lines:
            cols = sorted(pt.b for pt in points_on[line])
            if cols != list(range(CB_COLUMN, d)):
                bad = f"line {format_line(line)} has column profile {cols}"
                break
    checks.append(Check("dapg.degrees", not bad, bad))

    classes = [parallel_class(mod, b) for b in range(CB_COLUMN, d)]
    flat = [p for cls in classes for p in cls]
    ok_part = len(flat) == len(set(flat)) == len(points) and set(flat) == set(points)
    bad_part = bad_same or ("" if ok_part else "columns do not partition the point set")
    checks.append(Check("dapg.columns_partition", ok_part and not bad_same, bad_part))

    checks.append(Check("dapg.cross_column_connected", not bad_conn, bad_conn))

    return AxiomReport(d, tuple(checks))


def verify_apg_axioms(mod: Modulus) -> AxiomReport:
    """Exhaustively check that the affine construction is an affine plane of order d.

    Covers: counts (d^2 points, d(d+1) distinct lines, d points per line);
    a unique line joins any two distinct points; the parallel postulate;
    d+1 parallel classes of d mutually disjoint lines; lines of different
    classes meet in exactly one point; a non-collinear triple exists.
    """
    d = mod.d
    lines = apg_lines(mod)
    points = apg_points(mod)
    points_on = {line: frozenset(apg_line_points(mod, line)) for line in lines}
    lines_on: dict[ApgPoint, set[ApgLine]] = {p: set() for p in points}
    for line, pts in points_on.items():
        for p in pts:
            lines_on[p].add(line)

    checks: list[Check] = []

    ok_counts = (
        len(points) == d * d
        and len(lines) == d * (d + 1)
        and len(set(points_on.values())) == d * (d + 1)
        and all(len(points_on[line]) == d for line in lines)
    )
    checks.append(Check("apg.counts", ok_counts, "" if ok_counts else "wrong point/line counts"))

    bad = ""
    for i, p1 in enumerate(points):
        for p2 in points[i + 1 :]:
            shared = len(lines_on[p1] & lines_on[p2])
            if shared != 1:
                bad = f"points ({p1.xi},{p1.eta}) and ({p2.xi},{p2.eta}) lie on {shared} lines"
                break
        if bad:
            break
    checks.append(Check("apg.unique_join", not bad, bad))

    bad = ""
    for line in lines:
        on_line = points_on[line]
        for p in points:
            if p in on_line:
                continue
            parallels = sum(1 for other in lines_on[p] if points_on[other].isdisjoint(on_line))
            if parallels != 1:
                bad = f"{parallels} parallels to {line!r} through ({p.xi},{p.eta})"
                break
        if bad:
            break
    checks.append(Check("apg.parallel_postulate", not bad, bad))

    def class_id(line: ApgLine):
        return "vertical" if isinstance(line, VerticalLine) else line.r

    classes: dict[object, list[ApgLine]] = {}
    for line in lines:
        classes.setdefault(class_id(line), []).append(line)
    bad = ""
    if len(classes) != d + 1 or any(len(cls) != d for cls in classes.values()):
        bad = f"{len(classes)} classes with sizes {sorted(len(c) for c in classes.values())}"
    else:
        for cls in classes.values():
            for i, l1 in enumerate(cls):
                for l2 in cls[i + 1 :]:
                    if not points_on[l1].isdisjoint(points_on[l2]):
                        bad = f"parallel lines {l1!r} and {l2!r} intersect"
                        break
                if bad:
                    break
            if bad:
                break
    checks.append(Check("apg.parallel_classes", not bad, bad))

    bad = ""
    for i, l1 in enumerate(lines):
        for l2 in lines[i + 1 :]:
            if class_id(l1) == class_id(l2):
                continue
            shared = len(points_on[l1] & points_on[l2])
            if shared != 1:
                bad = f"lines {l1!r} and {l2!r} of different classes share {shared} points"
                break
        if bad:
            break
    checks.append(Check("apg.cross_class_meet_once", not bad, bad))

    triple = {ApgPoint(0, 0), ApgPoint(1, 0), ApgPoint(0, 1)}
    ok_triple = not any(triple <= points_on[line] for line in lines)
    checks.append(
        Check("apg.non_collinear_triple", ok_triple, "" if ok_triple else "(0,0),(1,0),(0,1) collinear")
    )

    return AxiomReport(d, tuple(checks))


def verify_duality(mod: Modulus) -> AxiomReport:
    """Exhaustively check the correspondence between the two geometries.

    Every affine line indexes a pencil of dual-plane lines sharing exactly one
    point; the affine-line -> common-point map is a bijection onto the dual
    points sending parallel classes onto columns (slope r to column -r mod d,
    verticals to the reference column); and the pencil through a fixed affine
    point maps exactly onto the point set of its dual line.
    """
    d = mod.d
    checks: list[Check] = []

    mapping: dict[ApgLine, Point] = {}
    bad = ""
    for apg_line in apg_lines(mod):
        try:
            common = duality_common_point(mod, apg_line)
        except NoCommonPointError as exc:
            bad = str(exc)
            break
        shared = None
        for apg_pt in apg_line_points(mod, apg_line):
            pts = set(line_points(mod, apg_point_to_line(apg_pt)))
            shared = pts if shared is None else shared & pts
        if shared != {common}:
            bad = f"pencil of {apg_line!r} shares {sorted(shared or set())}"
            break
        mapping[apg_line] = common
    checks.append(Check("duality.pencil_common_point", not bad, bad))

    bad = ""
    if not mapping:
        bad = "no pencils mapped"
    else:
        if len(set(mapping.values())) != d * (d + 1):
            bad = f"{len(set(mapping.values()))} distinct common points, expected {d * (d + 1)}"
        else:
            for r in range(d):
                column = {(-r) % d}
                got = {mapping[SlopedLine(r, s)].b for s in range(d)}
                rows = {mapping[SlopedLine(r, s)].m for s in range(d)}
                if got != column or len(rows) != d:
                    bad = f"slope {r} maps to columns {sorted(got)}"
                    break
            vert_cols = {mapping[VerticalLine(xi)].b for xi in range(d)}
            if not bad and vert_cols != {CB_COLUMN}:
                bad = f"verticals map to columns {sorted(vert_cols)}"
    checks.append(Check("duality.class_to_column_bijection", not bad, bad))

    bad = ""
    if mapping:
        pencil_of: dict[ApgPoint, set[ApgLine]] = {p: set() for p in apg_points(mod)}
        for apg_line in apg_lines(mod):
            for p in apg_line_points(mod, apg_line):
                pencil_of[p].add(apg_line)
        for apg_pt, pencil in pencil_of.items():
            image = {mapping[line] for line in pencil}
            expected = set(line_points(mod, apg_point_to_line(apg_pt)))
            if image != expected:
                bad = f"pencil through ({apg_pt.xi},{apg_pt.eta}) maps onto {sorted(image)}"
                break
    checks.append(Check("duality.point_pencil_roundtrip", not bad, bad))

    return AxiomReport(d, tuple(checks))

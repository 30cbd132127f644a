"""Rank-one projectors carried by dual-plane points and the Hermitian
involutions carried by its lines, each constructible by two independent routes.

A point (m, b) carries the projector onto basis state m of basis b. A line
carries the sum of its d+1 incident projectors minus the identity; that
operator is Hermitian, squares to the identity, has unit trace, and is
supported on the anti-diagonal n + n' = 2 m_minus1 mod d with phases
omega^(-(n - n') m0). Traces of products reproduce the incidence structure.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .core import DEFAULT_EPS, Modulus, omega_power
from .geometry import (
    CB_COLUMN,
    Line,
    Point,
    all_lines,
    all_points,
    check_line,
    check_point,
    format_line,
    format_point,
    incident,
    line_points,
    lines_through_point,
)
from .mub import mub_state
from .report import AxiomReport, Check


def point_operator(mod: Modulus, point: Point) -> np.ndarray:
    """Projector onto the basis state labelled by the point (outer-product route)."""
    check_point(mod, point)
    v = mub_state(mod, point.b, point.m)
    return np.outer(v, v.conj())


def point_operator_direct(mod: Modulus, point: Point) -> np.ndarray:
    """Projector of a point from its entrywise phase rule, no state involved.

    For b >= 0 the (n, n') entry is omega^((n - n')(half(b)(n + n' - 1) - m))/d;
    the reference column gives the diagonal unit at (m, m).
    """
    check_point(mod, point)
    d = mod.d
    out = np.zeros((d, d), dtype=complex)
    if point.b == CB_COLUMN:
        out[point.m, point.m] = 1.0
        return out
    hb = mod.half(point.b)
    for n in range(d):
        for n2 in range(d):
            s = (n - n2) * (hb * (n + n2 - 1) - point.m)
            out[n, n2] = omega_power(d, s) / d
    return out


def line_operator_sum(mod: Modulus, line: Line) -> np.ndarray:
    """Line operator as the sum of its incident projectors minus the identity."""
    check_line(mod, line)
    acc = -np.eye(mod.d, dtype=complex)
    for p in line_points(mod, line):
        acc = acc + point_operator(mod, p)
    return acc


def line_operator_direct(mod: Modulus, line: Line) -> np.ndarray:
    """Line operator from its anti-diagonal closed form, no projectors involved.

    Entry (n, n') is omega^(-(n - n') m0) when n + n' = 2 m_minus1 mod d, else 0.
    """
    check_line(mod, line)
    d = mod.d
    target = (2 * line.m_minus1) % d
    out = np.zeros((d, d), dtype=complex)
    for n in range(d):
        for n2 in range(d):
            if (n + n2) % d == target:
                out[n, n2] = omega_power(d, -(n - n2) * line.m0)
    return out


def point_index(mod: Modulus, point: Point) -> int:
    """Position of a point in the column-major enumeration (reference column first)."""
    check_point(mod, point)
    return (point.b + 1) * mod.d + point.m


def line_index(mod: Modulus, line: Line) -> int:
    """Position of a line in the lexicographic (m_minus1, m0) enumeration."""
    check_line(mod, line)
    return line.m_minus1 * mod.d + line.m0


@lru_cache(maxsize=None)
def point_operator_stack(mod: Modulus) -> np.ndarray:
    """All d(d+1) point projectors, stacked in point_index order. Read-only."""
    stack = np.stack([point_operator(mod, p) for p in all_points(mod)])
    stack.setflags(write=False)
    return stack


@lru_cache(maxsize=None)
def line_point_indices(mod: Modulus) -> np.ndarray:
    """For each line (row, line_index order): the point_index of its d+1 points."""
    table = np.array(
        [[point_index(mod, p) for p in line_points(mod, line)] for line in all_lines(mod)]
    )
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def point_line_indices(mod: Modulus) -> np.ndarray:
    """For each point (row, point_index order): the line_index of its d lines."""
    table = np.array(
        [[line_index(mod, ln) for ln in lines_through_point(mod, p)] for p in all_points(mod)]
    )
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def line_operator_stack(mod: Modulus) -> np.ndarray:
    """All d^2 line operators, stacked in line_index order. Read-only."""
    points = point_operator_stack(mod)
    table = line_point_indices(mod)
    stack = points[table].sum(axis=1) - np.eye(mod.d, dtype=complex)
    stack.setflags(write=False)
    return stack


def gram_point(mod: Modulus, point_a: Point, point_b: Point) -> float:
    """tr of the product of two point projectors.

    Equal labels give 1, distinct labels in one column give 0, and labels in
    different columns give 1/d; the imaginary part is discarded after being
    verified negligible elsewhere.
    """
    a = point_operator_stack(mod)[point_index(mod, point_a)]
    b = point_operator_stack(mod)[point_index(mod, point_b)]
    return float(np.trace(a @ b).real)


def incidence_trace(mod: Modulus, point: Point, line: Line) -> float:
    """tr of a point projector against a line operator: 1 if incident, else 0."""
    a = point_operator_stack(mod)[point_index(mod, point)]
    p = line_operator_stack(mod)[line_index(mod, line)]
    return float(np.trace(a @ p).real)


def _worst(devs: np.ndarray, labels, tol: float, what: str) -> str:
    i = int(np.argmax(devs))
    if devs[i] <= tol:
        return ""
    return f"{what} {labels[i]} deviates by {devs[i]:.3e}"


def _worst_pair(devs: np.ndarray, rows, cols, tol: float, what: str) -> str:
    i, j = np.unravel_index(int(np.argmax(devs)), devs.shape)
    if devs[i, j] <= tol:
        return ""
    return f"{what} {rows[i]} vs {cols[j]} deviates by {devs[i, j]:.3e}"


def verify_operator_identities(mod: Modulus, eps: float = DEFAULT_EPS) -> AxiomReport:
    """Exhaustively check every algebraic identity the operator families satisfy.

    Summed identities are held to d*eps; the agreement between the two
    independent construction routes is held to eps itself.
    """
    d = mod.d
    points = all_points(mod)
    lines = all_lines(mod)
    pt_labels = [format_point(p) for p in points]
    ln_labels = [format_line(ln) for ln in lines]
    a_stack = point_operator_stack(mod)
    p_stack = line_operator_stack(mod)
    eye = np.eye(d)
    tol = d * eps
    checks: list[Check] = []

    def add(axiom: str, bad: str) -> None:
        checks.append(Check(axiom, not bad, bad))

    dev = np.abs(a_stack - a_stack.conj().transpose(0, 2, 1)).max(axis=(1, 2))
    add("op.point_hermitian", _worst(dev, pt_labels, eps, "point operator"))

    dev = np.abs(p_stack - p_stack.conj().transpose(0, 2, 1)).max(axis=(1, 2))
    add("op.line_hermitian", _worst(dev, ln_labels, eps, "line operator"))

    a_sq = np.einsum("aij,ajk->aik", a_stack, a_stack)
    dev = np.abs(a_sq - a_stack).max(axis=(1, 2))
    bad = _worst(dev, pt_labels, tol, "projector law for point")
    if not bad:
        traces = np.einsum("aii->a", a_stack)
        dev = np.abs(traces - 1.0)
        bad = _worst(dev, pt_labels, eps, "trace of point operator")
    add("op.point_projector", bad)

    bad = ""
    for b in range(CB_COLUMN, d):
        block = a_stack[(b + 1) * d : (b + 2) * d].sum(axis=0)
        dev = float(np.abs(block - eye).max())
        if dev > tol:
            bad = f"column b={b} resolution deviates by {dev:.3e}"
            break
    add("op.column_completeness", bad)

    dev = float(np.abs(a_stack.sum(axis=0) - (d + 1) * eye).max())
    add("op.global_sum", "" if dev <= tol else f"total deviates from (d+1)I by {dev:.3e}")

    dev = float(np.abs(p_stack.sum(axis=0) - d * eye).max())
    add("op.line_sum", "" if dev <= tol else f"total deviates from dI by {dev:.3e}")

    averages = p_stack[point_line_indices(mod)].sum(axis=1) / d
    dev = np.abs(averages - a_stack).max(axis=(1, 2))
    add("op.point_from_lines", _worst(dev, pt_labels, tol, "line average at point"))

    traces = np.einsum("aii->a", p_stack)
    dev = np.abs(traces - 1.0)
    add("op.line_trace", _worst(dev, ln_labels, tol, "trace of line operator"))

    gram = np.einsum("aij,bji->ab", p_stack, p_stack)
    dev = np.abs(gram - d * np.eye(d * d))
    add("op.line_gram", _worst_pair(dev, ln_labels, ln_labels, tol, "line gram"))

    p_sq = np.einsum("aij,ajk->aik", p_stack, p_stack)
    dev = np.abs(p_sq - eye[np.newaxis]).max(axis=(1, 2))
    add("op.line_involution", _worst(dev, ln_labels, tol, "square of line operator"))

    table = line_point_indices(mod)
    bad = ""
    for idx, line in enumerate(lines):
        s = a_stack[table[idx]].sum(axis=0)
        cross = s @ s - a_sq[table[idx]].sum(axis=0)
        dev = float(np.abs(cross - s).max())
        if dev > tol:
            bad = f"cross terms on line {format_line(line)} deviate by {dev:.3e}"
            break
    add("op.cross_term_distillation", bad)

    direct = np.stack([point_operator_direct(mod, p) for p in points])
    dev = np.abs(a_stack - direct).max(axis=(1, 2))
    add("op.point_route_equality", _worst(dev, pt_labels, eps, "point routes at"))

    direct = np.stack([line_operator_direct(mod, ln) for ln in lines])
    dev = np.abs(p_stack - direct).max(axis=(1, 2))
    add("op.line_route_equality", _worst(dev, ln_labels, eps, "line routes at"))

    gram = np.einsum("aij,bji->ab", a_stack, a_stack)
    expected = np.empty((len(points), len(points)))
    for i, p1 in enumerate(points):
        for j, p2 in enumerate(points):
            if p1 == p2:
                expected[i, j] = 1.0
            elif p1.b == p2.b:
                expected[i, j] = 0.0
            else:
                expected[i, j] = 1.0 / d
    dev = np.abs(gram - expected)
    add("op.point_gram_cases", _worst_pair(dev, pt_labels, pt_labels, tol, "point gram"))

    cross = np.einsum("aij,bji->ab", a_stack, p_stack)
    expected = np.empty((len(points), len(lines)))
    for i, p in enumerate(points):
        for j, line in enumerate(lines):
            expected[i, j] = 1.0 if incident(mod, p, line) else 0.0
    dev = np.abs(cross - expected)
    add("op.incidence_trace", _worst_pair(dev, pt_labels, ln_labels, tol, "incidence trace"))

    return AxiomReport(d, tuple(checks))

"""Exact rational linear algebra on small systems.

Everything here works over `fractions.Fraction`, so results are exact and
deterministic.  The three entry points are:

* :func:`solve_affine` -- canonical RREF solution space of a linear
  equality system,
* :func:`box_vertices` -- vertices of an affine space intersected with a
  coordinate box,
* :func:`cone_rays` -- extreme rays of ``{x : Ax = 0, Cx >= 0}``.

Vertex and ray enumeration are combinatorial (active-set enumeration),
which is all that is needed at desk scale (solution-space dimension <= 6).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

MAX_DIMENSION = 6

Vector = tuple[Fraction, ...]


class DimensionTooLargeError(ValueError):
    """Solution-space dimension exceeds the combinatorial-enumeration guard."""


def _frac_vec(values: Sequence) -> Vector:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class LinearEquation:
    """coeffs . x = rhs"""

    coeffs: Vector
    rhs: Fraction

    @staticmethod
    def make(coeffs: Sequence, rhs) -> "LinearEquation":
        return LinearEquation(_frac_vec(coeffs), Fraction(rhs))

    def residual(self, point: Sequence[Fraction]) -> Fraction:
        return sum((c * x for c, x in zip(self.coeffs, point)), Fraction(0)) - self.rhs


@dataclass(frozen=True)
class AffineSolutionSpace:
    """Solution set written as particular + span(basis).

    ``equalities`` is the canonical reduced (RREF) equality set; identical
    input systems always produce identical fields.
    """

    num_vars: int
    particular: Vector
    basis: tuple[Vector, ...]
    equalities: tuple[LinearEquation, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def point(self, coords: Sequence[Fraction]) -> Vector:
        assert len(coords) == self.dimension
        vals = list(self.particular)
        for lam, direction in zip(coords, self.basis):
            for i, d in enumerate(direction):
                vals[i] += lam * d
        return tuple(vals)


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns).

    Pivot columns are chosen left to right so the output is canonical.
    """
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r] + [row for row in rows[r:] if any(v != 0 for v in row)], pivots


def solve_affine(
    equalities: Sequence[LinearEquation], num_vars: int
) -> Optional[AffineSolutionSpace]:
    """Solve an equality system exactly; ``None`` means inconsistent.

    The particular solution sets every free variable to 0; the basis has
    one direction per free variable (that variable set to 1).
    """
    aug = [list(eq.coeffs) + [eq.rhs] for eq in equalities]
    for eq in equalities:
        if len(eq.coeffs) != num_vars:
            raise ValueError("equation arity mismatch")
    rows, pivots = _rref(aug)
    # a row 0 = nonzero means the system has no solution
    for row in rows:
        if all(v == 0 for v in row[:num_vars]) and row[num_vars] != 0:
            return None
    rows = [row for row in rows if any(v != 0 for v in row[:num_vars])]
    pivot_set = set(pivots)
    free = [c for c in range(num_vars) if c not in pivot_set]

    particular = [Fraction(0)] * num_vars
    for row, pc in zip(rows, pivots):
        particular[pc] = row[num_vars]

    basis = []
    for fc in free:
        direction = [Fraction(0)] * num_vars
        direction[fc] = Fraction(1)
        for row, pc in zip(rows, pivots):
            direction[pc] = -row[fc]
        basis.append(tuple(direction))

    canonical = tuple(
        LinearEquation(tuple(row[:num_vars]), row[num_vars]) for row in rows
    )
    return AffineSolutionSpace(num_vars, tuple(particular), tuple(basis), canonical)


def _solve_square(matrix: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    """Unique solution of a d x d system, or None if singular."""
    d = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = _rref(aug)
    if len(pivots) < d:
        return None
    return [rows[i][d] for i in range(d)]


def box_vertices(
    space: AffineSolutionSpace, lower: Sequence, upper: Sequence
) -> tuple[Vector, ...]:
    """Vertices of ``space`` intersected with the box [lower, upper].

    Enumerates all choices of ``dimension`` active bound constraints,
    solves each exactly, keeps feasible points, dedupes and sorts
    lexicographically.
    """
    d = space.dimension
    if d > MAX_DIMENSION:
        raise DimensionTooLargeError(f"solution-space dimension {d} > {MAX_DIMENSION}")
    lo = _frac_vec(lower)
    hi = _frac_vec(upper)
    n = space.num_vars

    def feasible(p: Vector) -> bool:
        return all(lo[i] <= p[i] <= hi[i] for i in range(n))

    if d == 0:
        p = space.point(())
        return (p,) if feasible(p) else ()

    # candidate active constraints: (variable, bound value)
    candidates = [(i, lo[i]) for i in range(n)] + [(i, hi[i]) for i in range(n)]
    found = set()
    for combo in itertools.combinations(candidates, d):
        matrix = [[space.basis[j][i] for j in range(d)] for i, _ in combo]
        rhs = [bound - space.particular[i] for i, bound in combo]
        lam = _solve_square(matrix, rhs)
        if lam is None:
            continue
        p = space.point(lam)
        if feasible(p):
            found.add(p)
    return tuple(sorted(found))


def _normalize_ray(direction: Sequence[Fraction]) -> Vector:
    """Scale to the smallest integer coordinates (positive multiple)."""
    denoms = [v.denominator for v in direction]
    lcm = 1
    for d in denoms:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(v * lcm) for v in direction]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(Fraction(v) for v in ints)


def cone_rays(
    equalities: Sequence[LinearEquation],
    inequalities: Sequence[Vector],
    num_vars: int,
) -> tuple[Vector, ...]:
    """Extreme rays of ``{x : equalities(x)=0, ineq . x >= 0}``.

    The equalities must be homogeneous.  The cone must be pointed (the
    inequalities must not admit a line), which holds for every system built
    by this package.  Rays are normalized to smallest integer coordinates
    and sorted lexicographically.
    """
    for eq in equalities:
        if eq.rhs != 0:
            raise ValueError("cone equalities must be homogeneous")
    space = solve_affine(equalities, num_vars)
    if space is None:  # homogeneous systems always contain 0
        raise AssertionError("homogeneous system reported inconsistent")
    d = space.dimension
    if d > MAX_DIMENSION:
        raise DimensionTooLargeError(f"solution-space dimension {d} > {MAX_DIMENSION}")
    if d == 0:
        return ()

    ineqs = [_frac_vec(row) for row in inequalities]
    # restrict inequalities to the lambda-parametrization of the equality space
    reduced = []
    for row in ineqs:
        const = sum((c * p for c, p in zip(row, space.particular)), Fraction(0))
        assert const == 0
        reduced.append(
            tuple(
                sum((c * b[i] for i, c in enumerate(row)), Fraction(0))
                for b in space.basis
            )
        )

    def lam_feasible(lam: Sequence[Fraction]) -> bool:
        return all(
            sum((c * v for c, v in zip(row, lam)), Fraction(0)) >= 0 for row in reduced
        )

    found = set()
    if d == 1:
        for lam in ((Fraction(1),), (Fraction(-1),)):
            if lam_feasible(lam):
                found.add(_normalize_ray(space.point(lam)))
        return tuple(sorted(found))

    # an extreme ray lies on d-1 independent active inequalities
    for combo in itertools.combinations(range(len(reduced)), d - 1):
        rows = [list(reduced[i]) for i in combo]
        rref_rows, pivots = _rref([list(r) for r in rows])
        if len(pivots) != d - 1:
            continue
        # 1-dimensional null space: free coordinate set to 1
        free = [c for c in range(d) if c not in pivots][0]
        lam = [Fraction(0)] * d
        lam[free] = Fraction(1)
        for row, pc in zip(rref_rows, pivots):
            lam[pc] = -row[free]
        for sign in (1, -1):
            cand = [sign * v for v in lam]
            if lam_feasible(cand) and any(v != 0 for v in cand):
                found.add(_normalize_ray(space.point(cand)))
    return tuple(sorted(found))


def format_fraction(value: Fraction) -> str:
    """Serialize as ``p/q`` (or ``p`` when q = 1); never decimals."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())

"""Independent brute-force checks for the decomposition machinery.

Nothing here shares logic with the component/interval code: vertices come
from exhaustive basis enumeration, extreme nondominated images from
re-deriving each candidate's component against the full vertex image set,
and the parametric picture from solving the biobjective problem from
scratch on a lambda grid.  Slow on purpose, exact on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import (
    InfeasibleProblem,
    TooLarge,
    UnboundedFeasibleSet,
    UnboundedScalarization,
)
from .lp_core import LinearProgram, LpStatus, Sense, solve_lex_lp, solve_lp
from .problem_model import Bolp, Case, Pblp, Tolp, build_tolp, fix_lambda
from .weight_geometry import Point3, component_vertices

__all__ = [
    "VertexSet",
    "SweepReport",
    "enumerate_vertices_bruteforce",
    "extreme_nondominated_bruteforce",
    "dichotomic_bolp",
    "sweep_lambda",
]

DEFAULT_BASIS_BUDGET = 10**6


@dataclass(frozen=True)
class VertexSet:
    """All vertices of a bounded feasible set, sorted."""

    vertices: tuple[tuple[Fraction, ...], ...]


def _rref(matrix: list[list[Fraction]]) -> list[int]:
    """In-place reduced row echelon; returns the pivot column per row."""
    pivots = []
    row = 0
    cols = len(matrix[0]) if matrix else 0
    for col in range(cols):
        piv = next((r for r in range(row, len(matrix)) if matrix[r][col] != 0), None)
        if piv is None:
            continue
        matrix[row], matrix[piv] = matrix[piv], matrix[row]
        inv = Fraction(1) / matrix[row][col]
        matrix[row] = [a * inv for a in matrix[row]]
        for r in range(len(matrix)):
            if r != row and matrix[r][col] != 0:
                f = matrix[r][col]
                matrix[r] = [a - f * b for a, b in zip(matrix[r], matrix[row])]
        pivots.append(col)
        row += 1
        if row == len(matrix):
            break
    return pivots


def enumerate_vertices_bruteforce(
    rows, rhs, senses, n: int, max_bases: int = DEFAULT_BASIS_BUDGET
) -> VertexSet:
    """Every vertex of {x >= 0 : rows (senses) rhs} by basis enumeration.

    Proves boundedness first (one LP per coordinate) and raises
    UnboundedFeasibleSet otherwise; raises TooLarge when the number of
    candidate bases exceeds max_bases.  An infeasible system yields the
    empty vertex set.
    """
    zero = Fraction(0)
    for j in range(n):
        probe = LinearProgram(
            objective=tuple(-Fraction(1) if i == j else zero for i in range(n)),
            rows=tuple(tuple(Fraction(a) for a in r) for r in rows),
            rhs=tuple(Fraction(b) for b in rhs),
            senses=tuple(senses),
            nonneg=(True,) * n,
        )
        res = solve_lp(probe)
        if res.status is LpStatus.INFEASIBLE:
            return VertexSet(())
        if res.status is LpStatus.UNBOUNDED:
            raise UnboundedFeasibleSet(f"coordinate {j} is unbounded")

    # Standard form: one slack (LE) or surplus (GE) column per inequality.
    m = len(rows)
    aug_cols = sum(1 for s in senses if s is not Sense.EQ)
    total = n + aug_cols
    std = [[zero] * total for _ in range(m)]
    col = n
    for i, (row, sense) in enumerate(zip(rows, senses)):
        for j, a in enumerate(row):
            std[i][j] = Fraction(a)
        if sense is Sense.LE:
            std[i][col] = Fraction(1)
            col += 1
        elif sense is Sense.GE:
            std[i][col] = Fraction(-1)
            col += 1
    b = [Fraction(v) for v in rhs]

    # Reduce to an independent row set so degenerate inputs cannot hide
    # vertices behind singular bases.
    work = [std[i] + [b[i]] for i in range(m)]
    pivots = _rref(work)
    rank = len(pivots)
    # A pivot in the appended column would mean 0 = 1; feasibility was
    # already established above, so it cannot happen here.
    keep = [r for r in range(rank)]
    reduced = [work[r][:total] for r in keep]
    reduced_b = [work[r][total] for r in keep]

    if comb(total, rank) > max_bases:
        raise TooLarge(
            f"{comb(total, rank)} candidate bases exceed budget {max_bases}"
        )

    seen: set[tuple[Fraction, ...]] = set()
    for basis in combinations(range(total), rank):
        aug = [[reduced[r][c] for c in basis] + [reduced_b[r]] for r in range(rank)]
        sol = _solve_maybe(aug, rank)
        if sol is None:
            continue
        z = [zero] * total
        for c, v in zip(basis, sol):
            z[c] = v
        if any(v < 0 for v in z):
            continue
        x = tuple(z[:n])
        if x in seen:
            continue
        if _satisfies(rows, rhs, senses, x):
            seen.add(x)
    return VertexSet(tuple(sorted(seen)))


def _solve_maybe(aug: list[list[Fraction]], k: int):
    """Solve a k x k augmented system; None when singular."""
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][k] for r in range(k)]


def _satisfies(rows, rhs, senses, x) -> bool:
    for row, b, sense in zip(rows, rhs, senses):
        lhs = sum(Fraction(a) * v for a, v in zip(row, x))
        if sense is Sense.GE and lhs < b:
            return False
        if sense is Sense.LE and lhs > b:
            return False
        if sense is Sense.EQ and lhs != b:
            return False
    return True


def extreme_nondominated_bruteforce(
    t: Tolp, max_bases: int = DEFAULT_BASIS_BUDGET
) -> tuple[Point3, ...]:
    """Extreme nondominated images from first principles.

    Enumerate all vertices, map them through the cost rows, and keep the
    images whose component against the complete image list has positive
    area.  The feasible set must be bounded, so its image is the convex
    hull of the vertex images and the component test is exact.
    """
    verts = enumerate_vertices_bruteforce(t.rows, t.rhs, t.senses, t.n, max_bases)
    images = sorted({t.image(x) for x in verts.vertices})
    keep = []
    for y in images:
        others = [z for z in images if z != y]
        if component_vertices(y, others).area() > 0:
            keep.append(y)
    return tuple(keep)


# -- parametric oracle -------------------------------------------------------


def _lex(bolp: Bolp, objective, ties):
    lp = LinearProgram(
        objective=tuple(objective),
        rows=bolp.rows,
        rhs=bolp.rhs,
        senses=bolp.senses,
        nonneg=(True,) * bolp.n,
    )
    res = solve_lex_lp(lp, ties)
    if res.status is LpStatus.UNBOUNDED:
        raise UnboundedScalarization("biobjective scalarization is unbounded")
    if res.status is LpStatus.INFEASIBLE:
        raise InfeasibleProblem("feasible set is empty")
    return res.x


def dichotomic_bolp(bolp: Bolp, extra_ties=()) -> tuple:
    """All extreme nondominated images of a biobjective problem.

    Classic dichotomic search: solve both lexicographic corners, then
    recursively probe the weight orthogonal to each gap.  Ties inside
    every solve are broken by (f1, f2) and then extra_ties, making the
    witnesses deterministic.  Returns (image, witness) pairs sorted by
    first objective value.
    """
    ties_a = (bolp.f2,) + tuple(extra_ties)
    ties_b = (bolp.f1,) + tuple(extra_ties)
    xa = _lex(bolp, bolp.f1, ties_a)
    xb = _lex(bolp, bolp.f2, ties_b)
    a, b = bolp.image(xa), bolp.image(xb)
    if a == b:
        return ((a, xa),)
    found = {a: xa, b: xb}

    def probe(lo, hi):
        # lo has the smaller f1 and larger f2, so both parts are positive
        w1, w2 = lo[1] - hi[1], hi[0] - lo[0]
        objective = tuple(w1 * f + w2 * g for f, g in zip(bolp.f1, bolp.f2))
        x = _lex(bolp, objective, (bolp.f1, bolp.f2) + tuple(extra_ties))
        y = bolp.image(x)
        if w1 * y[0] + w2 * y[1] < w1 * lo[0] + w2 * lo[1]:
            found[y] = x
            probe(lo, y)
            probe(y, hi)

    probe(a, b)
    return tuple(sorted((y, x) for y, x in found.items()))


@dataclass(frozen=True)
class SweepReport:
    """Grid sweep of the parametric problem.

    grid holds the lambda values; witness_images[i] is the sorted set of
    triobjective images witnessing grid[i]'s extreme biobjective images;
    changes lists the (previous, current) grid pairs where that set
    moved.  Breakpoint locations are thereby bracketed to grid cells.
    """

    lambda_max: Fraction
    steps: int
    grid: tuple[Fraction, ...]
    witness_images: tuple[tuple[Point3, ...], ...]
    bolp_images: tuple[tuple, ...]
    changes: tuple[tuple[Fraction, Fraction], ...]


def sweep_lambda(p: Pblp, lambda_max: Fraction, steps: int) -> SweepReport:
    """Solve the biobjective problem on an exact lambda grid.

    Witnesses carry their triobjective images, which are constant between
    breakpoints; consecutive grid points with different witness image
    sets bracket a breakpoint.
    """
    if steps <= 0:
        raise ValueError("steps must be positive")
    if lambda_max < 0:
        raise ValueError("lambda_max must be nonnegative")
    t = build_tolp(p)
    extra = (p.c1, p.c2, p.d1)
    grid = tuple(Fraction(i) * lambda_max / steps for i in range(steps + 1))
    witness_images = []
    bolp_images = []
    for lam in grid:
        bolp = fix_lambda(p, lam)
        pairs = dichotomic_bolp(bolp, extra_ties=extra)
        witness_images.append(tuple(sorted({t.image(x) for _, x in pairs})))
        bolp_images.append(tuple(y for y, _ in pairs))
    changes = tuple(
        (grid[i - 1], grid[i])
        for i in range(1, len(grid))
        if witness_images[i] != witness_images[i - 1]
    )
    return SweepReport(
        lambda_max=Fraction(lambda_max),
        steps=steps,
        grid=grid,
        witness_images=tuple(witness_images),
        bolp_images=tuple(bolp_images),
        changes=changes,
    )

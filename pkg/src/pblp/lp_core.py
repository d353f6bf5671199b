"""Exact rational linear programming.

A small two-phase primal simplex over fractions.Fraction.  Bland's rule
makes it immune to cycling, every number stays exact, and optimal duals
are recovered from the final basis.  Sizes here are tiny (tens of rows),
so the dense tableau with recomputed reduced costs is the simple and
entirely adequate choice.

Sign conventions for duals of  min c.x  s.t. rows (sense) rhs, mixed
variable domains:

    >= rows get dual >= 0,  <= rows get dual <= 0,  = rows are free,
    and dual . rhs == optimal value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DimensionMismatch

__all__ = [
    "Sense",
    "LpStatus",
    "LinearProgram",
    "LpResult",
    "solve_lp",
    "solve_lex_lp",
]


class Sense(Enum):
    GE = ">="
    EQ = "="
    LE = "<="

    @staticmethod
    def from_text(text: str) -> "Sense":
        for s in Sense:
            if s.value == text:
                return s
        raise ValueError(f"unknown sense {text!r}")


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


def _frac_tuple(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class LinearProgram:
    """min objective.x subject to rows[i].x (senses[i]) rhs[i].

    nonneg[j] is True when x_j >= 0 and False when x_j is free.
    """

    objective: tuple[Fraction, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    senses: tuple[Sense, ...]
    nonneg: tuple[bool, ...]

    def __post_init__(self):
        n = len(self.objective)
        if len(self.nonneg) != n:
            raise DimensionMismatch("objective and domain lengths differ")
        if not (len(self.rows) == len(self.rhs) == len(self.senses)):
            raise DimensionMismatch("row, rhs and sense counts differ")
        for row in self.rows:
            if len(row) != n:
                raise DimensionMismatch("row length differs from objective")

    @staticmethod
    def build(objective, rows, rhs, senses, nonneg=None) -> "LinearProgram":
        """Convenience constructor coercing ints/strings to exact types."""
        obj = _frac_tuple(objective)
        if nonneg is None:
            nonneg = (True,) * len(obj)
        sense_vals = tuple(
            s if isinstance(s, Sense) else Sense.from_text(s) for s in senses
        )
        return LinearProgram(
            objective=obj,
            rows=tuple(_frac_tuple(r) for r in rows),
            rhs=_frac_tuple(rhs),
            senses=sense_vals,
            nonneg=tuple(bool(v) for v in nonneg),
        )

    @property
    def num_vars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpResult:
    status: LpStatus
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    dual: tuple[Fraction, ...] | None = None


class _Tableau:
    """Standard-form tableau  A z = b, z >= 0  kept as B^-1 A throughout."""

    def __init__(self, lp: LinearProgram):
        self.lp = lp
        # Column layout: one column per nonnegative variable, two (p, q with
        # x = p - q) per free variable, then one slack/surplus per inequality.
        self.col_of_var: list[tuple[int, int | None]] = []
        cols = 0
        for j in range(lp.num_vars):
            if lp.nonneg[j]:
                self.col_of_var.append((cols, None))
                cols += 1
            else:
                self.col_of_var.append((cols, cols + 1))
                cols += 2
        self.struct_cols = cols
        slack_col: list[int | None] = []
        for sense in lp.senses:
            if sense is Sense.EQ:
                slack_col.append(None)
            else:
                slack_col.append(cols)
                cols += 1
        self.num_cols = cols

        self.rows: list[list[Fraction]] = []
        self.b: list[Fraction] = []
        self.row_sign: list[int] = []  # +1 kept as-is, -1 negated for b >= 0
        self.orig_row: list[int] = []  # index into lp.rows, for duals
        zero = Fraction(0)
        for i, row in enumerate(lp.rows):
            dense = [zero] * self.num_cols
            for j, a in enumerate(row):
                p, q = self.col_of_var[j]
                dense[p] = a
                if q is not None:
                    dense[q] = -a
            if slack_col[i] is not None:
                dense[slack_col[i]] = (
                    Fraction(1) if lp.senses[i] is Sense.LE else Fraction(-1)
                )
            rhs = lp.rhs[i]
            sign = 1
            if rhs < 0:
                dense = [-a for a in dense]
                rhs = -rhs
                sign = -1
            self.rows.append(dense)
            self.b.append(rhs)
            self.row_sign.append(sign)
            self.orig_row.append(i)
        self.slack_col = slack_col
        self.basis: list[int] = []
        self.art_cols: set[int] = set()
        self.redundant_rows: list[int] = []  # original indices, dual 0
        self.infeasible_by_rank = False
        self._drop_dependent_rows()

    def _drop_dependent_rows(self):
        """Reduce to an independent row set before any pivoting.

        Simplex basis bookkeeping (and dual recovery from the basis)
        needs the standard-form matrix to have full row rank.  Rows are
        eliminated in order against the kept ones; a row that reduces to
        zero coefficients is redundant when its right side reduces to
        zero too, and proves infeasibility otherwise.  Dropped rows get
        dual zero later.
        """
        eliminators: list[list[Fraction]] = []  # reduced [row | rhs], pivot first
        pivot_cols: list[int] = []
        keep: list[int] = []
        for idx in range(len(self.rows)):
            work = self.rows[idx] + [self.b[idx]]
            for piv_col, elim in zip(pivot_cols, eliminators):
                factor = work[piv_col]
                if factor != 0:
                    work = [a - factor * e for a, e in zip(work, elim)]
            piv = next((j for j in range(self.num_cols) if work[j] != 0), None)
            if piv is None:
                if work[-1] != 0:
                    self.infeasible_by_rank = True
                else:
                    self.redundant_rows.append(self.orig_row[idx])
                continue
            inv = Fraction(1) / work[piv]
            eliminators.append([a * inv for a in work])
            pivot_cols.append(piv)
            keep.append(idx)
        if len(keep) != len(self.rows):
            self.rows = [self.rows[i] for i in keep]
            self.b = [self.b[i] for i in keep]
            self.row_sign = [self.row_sign[i] for i in keep]
            self.orig_row = [self.orig_row[i] for i in keep]

    # -- pivoting ---------------------------------------------------------

    def _pivot(self, r: int, col: int):
        piv = self.rows[r][col]
        inv = Fraction(1) / piv
        self.rows[r] = [a * inv for a in self.rows[r]]
        self.b[r] *= inv
        for i in range(len(self.rows)):
            if i == r:
                continue
            factor = self.rows[i][col]
            if factor == 0:
                continue
            self.rows[i] = [
                a - factor * p for a, p in zip(self.rows[i], self.rows[r])
            ]
            self.b[i] -= factor * self.b[r]
        self.basis[r] = col

    def _simplex(self, cost: list[Fraction], banned: set[int]) -> LpStatus:
        """Minimize cost.z with Bland's rule; banned columns never enter."""
        m = len(self.rows)
        while True:
            cb = [cost[self.basis[i]] for i in range(m)]
            entering = -1
            for j in range(self.num_cols + len(self.art_cols)):
                if j in banned or j >= len(cost):
                    continue
                if j in self.basis:
                    continue
                reduced = cost[j]
                for i in range(m):
                    if cb[i] != 0 and self.rows[i][j] != 0:
                        reduced -= cb[i] * self.rows[i][j]
                if reduced < 0:
                    entering = j
                    break
            if entering < 0:
                return LpStatus.OPTIMAL
            leaving = -1
            best = None
            for i in range(m):
                a = self.rows[i][entering]
                if a > 0:
                    ratio = self.b[i] / a
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leaving])
                    ):
                        best = ratio
                        leaving = i
            if leaving < 0:
                return LpStatus.UNBOUNDED
            self._pivot(leaving, entering)

    # -- phases -----------------------------------------------------------

    def phase_one(self) -> bool:
        """Install a feasible basis.  Returns False when infeasible."""
        m = len(self.rows)
        zero = Fraction(0)
        # Start from slack columns where they already form identity entries,
        # artificials everywhere else.
        for i in range(m):
            col = self.slack_col[i]
            if col is not None:
                coeff = self.rows[i][col]
                if coeff == 1:
                    self.basis.append(col)
                    continue
            art = self.num_cols + len(self.art_cols)
            self.art_cols.add(art)
            for k in range(m):
                self.rows[k].append(Fraction(1) if k == i else zero)
            self.basis.append(art)
        if not self.art_cols:
            return True
        total = self.num_cols + len(self.art_cols)
        cost = [zero] * total
        for j in self.art_cols:
            cost[j] = Fraction(1)
        # Make artificial basis columns identity again (appending created them
        # as identity already, but slack-basis rows may hold nonzeros there).
        status = self._simplex(cost, banned=set())
        assert status is LpStatus.OPTIMAL  # phase one is always bounded
        value = sum(
            self.b[i] for i in range(m) if self.basis[i] in self.art_cols
        )
        if value != 0:
            return False
        # Drive zero-valued artificials out of the basis.  The rows were
        # reduced to an independent set up front, so a pivot column always
        # exists.
        for i in range(m):
            if self.basis[i] not in self.art_cols:
                continue
            pivot_col = next(
                j for j in range(self.num_cols) if self.rows[i][j] != 0
            )
            self._pivot(i, pivot_col)
        # Artificial columns are dead from here on; truncate them.
        for i in range(len(self.rows)):
            del self.rows[i][self.num_cols :]
        self.art_cols = set()
        return True

    def phase_two(self) -> LpStatus:
        zero = Fraction(0)
        cost = [zero] * self.num_cols
        for j, (p, q) in enumerate(self.col_of_var):
            cost[p] = self.lp.objective[j]
            if q is not None:
                cost[q] = -self.lp.objective[j]
        return self._simplex(cost, banned=set())

    # -- extraction -------------------------------------------------------

    def solution(self) -> tuple[Fraction, ...]:
        zero = Fraction(0)
        z = [zero] * self.num_cols
        for i, col in enumerate(self.basis):
            z[col] = self.b[i]
        out = []
        for p, q in self.col_of_var:
            out.append(z[p] - z[q] if q is not None else z[p])
        return tuple(out)

    def duals(self) -> tuple[Fraction, ...]:
        """Dual of each original row from B^T y = c_B on the final basis."""
        m = len(self.rows)
        zero = Fraction(0)
        # Rebuild the untouched standard-form columns of the final basis.
        cols = []
        for col in self.basis:
            column = []
            for i in range(m):
                oi = self.orig_row[i]
                sign = self.row_sign[i]
                if col < self.struct_cols:
                    a = zero
                    for j, (p, q) in enumerate(self.col_of_var):
                        if col == p:
                            a = self.lp.rows[oi][j]
                            break
                        if q is not None and col == q:
                            a = -self.lp.rows[oi][j]
                            break
                else:
                    a = zero
                    if self.slack_col[oi] == col:
                        a = Fraction(1) if self.lp.senses[oi] is Sense.LE else Fraction(-1)
                column.append(sign * a)
            cols.append(column)
        cost = {  # objective coefficient per basis column
            i: self._struct_cost(col) for i, col in enumerate(self.basis)
        }
        # Solve B^T y = c_B by Gaussian elimination (B^T rows are the columns).
        aug = [cols[i] + [cost[i]] for i in range(m)]
        y = _solve_square(aug, m)
        duals = [zero] * len(self.lp.rows)
        for i in range(m):
            duals[self.orig_row[i]] = self.row_sign[i] * y[i]
        return tuple(duals)

    def _struct_cost(self, col: int) -> Fraction:
        for j, (p, q) in enumerate(self.col_of_var):
            if col == p:
                return self.lp.objective[j]
            if q is not None and col == q:
                return -self.lp.objective[j]
        return Fraction(0)


def _solve_square(aug: list[list[Fraction]], m: int) -> list[Fraction]:
    """Solve the m x m system given as rows of [coeffs | rhs], in place."""
    for col in range(m):
        piv = next(r for r in range(col, m) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][m] for r in range(m)]


_solve_calls = 0


def solve_calls() -> int:
    """Total solve_lp invocations so far; snapshot around a phase to
    count its LP work deterministically."""
    return _solve_calls


def solve_lp(lp: LinearProgram) -> LpResult:
    """Exact minimum of lp, with optimal primal and dual when one exists."""
    global _solve_calls
    _solve_calls += 1
    if not lp.rows:
        # No constraints: bounded only if the objective ignores every
        # direction of recession, i.e. all coefficients of free vars are 0
        # and nonnegative vars have nonnegative cost.
        for j, c in enumerate(lp.objective):
            if (not lp.nonneg[j] and c != 0) or c < 0:
                return LpResult(LpStatus.UNBOUNDED)
        x = tuple(Fraction(0) for _ in lp.objective)
        return LpResult(LpStatus.OPTIMAL, x, Fraction(0), ())
    tab = _Tableau(lp)
    if tab.infeasible_by_rank or not tab.phase_one():
        return LpResult(LpStatus.INFEASIBLE)
    status = tab.phase_two()
    if status is LpStatus.UNBOUNDED:
        return LpResult(LpStatus.UNBOUNDED)
    x = tab.solution()
    value = sum(c * v for c, v in zip(lp.objective, x))
    return LpResult(LpStatus.OPTIMAL, x, value, tab.duals())


def solve_lex_lp(lp: LinearProgram, ties) -> LpResult:
    """Lexicographic minimum: lp.objective first, then each tie in order.

    Each stage pins the previous optimum with an equality row, so the
    result is an optimum of the first objective that is lexicographically
    minimal for the ties.  The returned value is the first objective's;
    duals are not reported because no single LP produces the point.
    """
    first = solve_lp(lp)
    if first.status is not LpStatus.OPTIMAL:
        return first
    rows = list(lp.rows)
    rhs = list(lp.rhs)
    senses = list(lp.senses)
    current = first
    objective = lp.objective
    for tie in ties:
        rows.append(tuple(objective))
        rhs.append(current.value)
        senses.append(Sense.EQ)
        objective = _frac_tuple(tie)
        stage = LinearProgram(
            objective=objective,
            rows=tuple(rows),
            rhs=tuple(rhs),
            senses=tuple(senses),
            nonneg=lp.nonneg,
        )
        current = solve_lp(stage)
        if current.status is not LpStatus.OPTIMAL:
            return LpResult(current.status)
    value = sum(c * v for c, v in zip(lp.objective, current.x))
    return LpResult(LpStatus.OPTIMAL, current.x, value, None)

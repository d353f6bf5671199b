"""Problem records and the weight/parameter correspondence.

A parametric biobjective problem (Pblp) carries a feasible system
rows (sense) rhs with x >= 0 implicit, three cost rows c1, c2, d1 and a
case tag.  Case ONE perturbs only the first objective by lambda*d1;
case TWO perturbs both.  Either way the associated triobjective problem
(Tolp) minimizes (c1.x, c2.x, d1.x), and each lambda >= 0 corresponds to
a line segment inside the projected weight simplex
{(w1, w2) : w1, w2 >= 0, w1 + w2 <= 1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import BadCase, DimensionMismatch, NegativeParameter
from .lp_core import LinearProgram, Sense


class Case(Enum):
    ONE = "1"
    TWO = "2"

    @staticmethod
    def from_text(text: str) -> "Case":
        for c in Case:
            if c.value == text:
                return c
        raise BadCase(f"case must be 1 or 2, got {text!r}")


def _check_system(rows, rhs, senses, width, *cost_rows):
    if not (len(rows) == len(rhs) == len(senses)):
        raise DimensionMismatch("row, rhs and sense counts differ")
    for row in rows:
        if len(row) != width:
            raise DimensionMismatch("constraint row width differs from n")
    for cost in cost_rows:
        if len(cost) != width:
            raise DimensionMismatch("cost row width differs from n")


@dataclass(frozen=True)
class Pblp:
    """One parametric instance; x >= 0 is implicit in the feasible system."""

    case: Case
    n: int
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    senses: tuple[Sense, ...]
    c1: tuple[Fraction, ...]
    c2: tuple[Fraction, ...]
    d1: tuple[Fraction, ...]

    def __post_init__(self):
        _check_system(
            self.rows, self.rhs, self.senses, self.n, self.c1, self.c2, self.d1
        )


@dataclass(frozen=True)
class Tolp:
    """The associated triobjective problem min (c1.x, c2.x, d1.x)."""

    n: int
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    senses: tuple[Sense, ...]
    c1: tuple[Fraction, ...]
    c2: tuple[Fraction, ...]
    d1: tuple[Fraction, ...]

    def __post_init__(self):
        _check_system(
            self.rows, self.rhs, self.senses, self.n, self.c1, self.c2, self.d1
        )

    @property
    def cost_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return (self.c1, self.c2, self.d1)

    def image(self, x) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(sum(c * v for c, v in zip(row, x)) for row in self.cost_rows)


@dataclass(frozen=True)
class Bolp:
    """A plain biobjective problem, as produced by fixing lambda."""

    n: int
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    senses: tuple[Sense, ...]
    f1: tuple[Fraction, ...]
    f2: tuple[Fraction, ...]

    def image(self, x) -> tuple[Fraction, Fraction]:
        return (
            sum(c * v for c, v in zip(self.f1, x)),
            sum(c * v for c, v in zip(self.f2, x)),
        )


def build_tolp(p: Pblp) -> Tolp:
    """The case-independent triobjective companion of p."""
    return Tolp(
        n=p.n, rows=p.rows, rhs=p.rhs, senses=p.senses,
        c1=p.c1, c2=p.c2, d1=p.d1,
    )


def fix_lambda(p: Pblp, lam: Fraction) -> Bolp:
    """Substitute a concrete lambda >= 0 into the parametric objectives."""
    if lam < 0:
        raise NegativeParameter(f"lambda = {lam}")
    f1 = tuple(c + lam * d for c, d in zip(p.c1, p.d1))
    if p.case is Case.ONE:
        f2 = p.c2
    else:
        f2 = tuple(c + lam * d for c, d in zip(p.c2, p.d1))
    return Bolp(
        n=p.n, rows=p.rows, rhs=p.rhs, senses=p.senses, f1=f1, f2=tuple(f2)
    )


# -- weights ---------------------------------------------------------------


@dataclass(frozen=True)
class Weight3:
    """A point of the weight simplex: nonnegative, summing to one."""

    w1: Fraction
    w2: Fraction
    w3: Fraction

    def __post_init__(self):
        if self.w1 < 0 or self.w2 < 0 or self.w3 < 0:
            raise ValueError(f"negative weight in {self}")
        if self.w1 + self.w2 + self.w3 != 1:
            raise ValueError(f"weights do not sum to 1 in {self}")

    def project(self) -> "Weight2":
        return Weight2(self.w1, self.w2)

    def as_tuple(self):
        return (self.w1, self.w2, self.w3)


@dataclass(frozen=True)
class Weight2:
    """The simplex projected to its first two coordinates."""

    w1: Fraction
    w2: Fraction

    def __post_init__(self):
        if self.w1 < 0 or self.w2 < 0:
            raise ValueError(f"negative weight in {self}")
        if self.w1 + self.w2 > 1:
            raise ValueError(f"projected weight outside simplex: {self}")

    def lift(self) -> Weight3:
        return Weight3(self.w1, self.w2, 1 - self.w1 - self.w2)


def w3(a, b, c) -> Weight3:
    return Weight3(Fraction(a), Fraction(b), Fraction(c))


def w2(a, b) -> Weight2:
    return Weight2(Fraction(a), Fraction(b))


@dataclass(frozen=True)
class Segment2:
    """A nondegenerate segment in the projected simplex."""

    p: Weight2
    q: Weight2

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("degenerate segment")


def ws_scalarize(t: Tolp, w: Weight3) -> LinearProgram:
    """The weighted-sum LP  min (w1 c1 + w2 c2 + w3 d1).x  over t's system."""
    obj = tuple(
        w.w1 * a + w.w2 * b + w.w3 * c
        for a, b, c in zip(t.c1, t.c2, t.d1)
    )
    return LinearProgram(
        objective=obj,
        rows=t.rows,
        rhs=t.rhs,
        senses=t.senses,
        nonneg=(True,) * t.n,
    )


def map_weight_to_simplex(case: Case, w: Weight2, lam: Fraction) -> Weight3:
    """Where a biobjective weight (w1, w2), w1+w2 = 1 lands in the simplex
    once lambda is folded into the objectives.

    The input is the projected pair; its lift must lie on the edge
    w1 + w2 = 1 of the simplex (a biobjective weight has no third part).
    """
    if lam < 0:
        raise NegativeParameter(f"lambda = {lam}")
    if w.w1 + w.w2 != 1:
        raise ValueError("biobjective weight must satisfy w1 + w2 = 1")
    if case is Case.ONE:
        den = 1 + w.w1 * lam
        return Weight3(w.w1 / den, w.w2 / den, w.w1 * lam / den)
    if case is Case.TWO:
        den = 1 + lam
        return Weight3(w.w1 / den, w.w2 / den, lam / den)
    raise BadCase(str(case))


def lambda_from_weight(case: Case, w: Weight3):
    """Invert the weight map: which lambda does a simplex weight encode.

    Returns a Fraction, INF for the limit lambda -> infinity, or None when
    the weight corresponds to no lambda at all (case ONE at (0, 1, 0)).
    """
    from .numerics import INF

    if case is Case.ONE:
        if w.w1 > 0:
            return w.w3 / w.w1
        if w.w3 > 0:
            return INF
        return None
    if case is Case.TWO:
        if w.w3 == 1:
            return INF
        return w.w3 / (1 - w.w3)
    raise BadCase(str(case))


def segment_for_lambda(case: Case, lam: Fraction) -> Segment2:
    """The projected-simplex segment carrying all weights of a fixed lambda.

    Case ONE runs from (0, 1) to (1/(1+lambda), 0) with slope -(1+lambda);
    case TWO from (0, 1/(1+lambda)) to (1/(1+lambda), 0) with slope -1.
    """
    if lam < 0:
        raise NegativeParameter(f"lambda = {lam}")
    end = Fraction(1, 1) / (1 + lam)
    if case is Case.ONE:
        return Segment2(Weight2(Fraction(0), Fraction(1)), Weight2(end, Fraction(0)))
    if case is Case.TWO:
        return Segment2(Weight2(Fraction(0), end), Weight2(end, Fraction(0)))
    raise BadCase(str(case))


def ge_form(rows, rhs, senses):
    """Rewrite a mixed-sense system as all >= rows (LE negated, EQ split).

    Row order is preserved: each input row contributes its >= forms in
    place, so indices stay predictable for dual bookkeeping.
    """
    out_rows: list[tuple[Fraction, ...]] = []
    out_rhs: list[Fraction] = []
    for row, b, sense in zip(rows, rhs, senses):
        if sense is Sense.GE:
            out_rows.append(tuple(row))
            out_rhs.append(b)
        elif sense is Sense.LE:
            out_rows.append(tuple(-a for a in row))
            out_rhs.append(-b)
        else:
            out_rows.append(tuple(row))
            out_rhs.append(b)
            out_rows.append(tuple(-a for a in row))
            out_rhs.append(-b)
    return tuple(out_rows), tuple(out_rhs)

"""Weight set decomposition of the triobjective companion problem.

The weight simplex is tiled by the components of the extreme nondominated
images.  The method here works outward from the centroid: keep a set K of
known images, tile the simplex tentatively with their pairwise
half-planes, then certify every tentative polygon vertex by solving the
weighted-sum LP there.  A vertex whose true optimum beats its polygon's
image yields a new member of K; when every vertex certifies, the
tentative tiling is the real one.  Certification at the vertices is
enough: the optimal-value function is concave and coincides with an
affine function at all vertices of each polygon, hence on the polygon.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lp_core
from .errors import InfeasibleProblem, UnboundedScalarization
from .lp_core import LpStatus, solve_lex_lp, solve_lp
from .problem_model import Tolp, Weight2, Weight3, ws_scalarize
from .weight_geometry import ConvexPolygon2, Point2, Point3, component_vertices

__all__ = ["ExtremeImage", "Decomposition", "find_extreme_image", "decompose"]


@dataclass(frozen=True)
class ExtremeImage:
    """An image point of the triobjective problem with one witness."""

    image: Point3
    witness: tuple[Fraction, ...]


@dataclass(frozen=True)
class Decomposition:
    """Extreme nondominated images with their simplex components.

    images and components run in parallel, sorted by image
    lexicographically; every component is full-dimensional.  lp_solves
    counts the LP solves spent finding them.
    """

    images: tuple[ExtremeImage, ...]
    components: tuple[ConvexPolygon2, ...]
    lp_solves: int

    def image_points(self) -> tuple[Point3, ...]:
        return tuple(e.image for e in self.images)

    def component_of(self, y: Point3) -> ConvexPolygon2:
        for e, poly in zip(self.images, self.components):
            if e.image == y:
                return poly
        raise KeyError(f"no component for image {y}")


def find_extreme_image(t: Tolp, w: Weight3) -> ExtremeImage:
    """Lexicographic weighted-sum solve at w, ties (c1, c2, d1).

    The ties pin a single image even when w sits on a component boundary,
    and they guarantee the returned image is a nondominated extreme
    point, not merely weakly nondominated.
    """
    result = solve_lex_lp(ws_scalarize(t, w), ties=(t.c1, t.c2, t.d1))
    if result.status is LpStatus.UNBOUNDED:
        raise UnboundedScalarization(f"weighted sum unbounded at w = {w}")
    if result.status is LpStatus.INFEASIBLE:
        raise InfeasibleProblem("feasible set is empty")
    return ExtremeImage(image=t.image(result.x), witness=result.x)


def _dot3(w: Weight3, y: Point3) -> Fraction:
    return w.w1 * y[0] + w.w2 * y[1] + w.w3 * y[2]


def decompose(t: Tolp) -> Decomposition:
    """Compute all extreme nondominated images and their components."""
    start_count = lp_core.solve_calls()
    one = Fraction(1)
    unit_weights = (
        Weight3(one, Fraction(0), Fraction(0)),
        Weight3(Fraction(0), one, Fraction(0)),
        Weight3(Fraction(0), Fraction(0), one),
    )
    for w in unit_weights:
        status = solve_lp(ws_scalarize(t, w)).status
        if status is LpStatus.UNBOUNDED:
            raise UnboundedScalarization(
                f"objective weighted ({w.w1}, {w.w2}, {w.w3}) is unbounded"
                " below over the feasible set"
            )
        if status is LpStatus.INFEASIBLE:
            raise InfeasibleProblem("feasible set is empty")
    # Bounded at the three corners implies bounded for every simplex
    # weight, because min (sum wi ci).x >= sum wi min ci.x.

    centroid = Weight3(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    known: list[ExtremeImage] = [find_extreme_image(t, centroid)]
    # One LP certificate per distinct vertex, ever: w -> (value, image idx
    # into discovered order is not stable, so keep the record itself).
    cache: dict[Point2, tuple[Fraction, ExtremeImage]] = {}

    def certificate(vertex: Point2):
        rec = cache.get(vertex)
        if rec is None:
            w = Weight2(*vertex).lift()
            found = find_extreme_image(t, w)
            rec = (_dot3(w, found.image), found)
            cache[vertex] = rec
        return rec

    while True:
        points = [e.image for e in known]
        polygons = [component_vertices(y, points) for y in points]
        challenger = None
        for entry, poly in zip(known, polygons):
            for vertex in poly.vertices:
                best_value, best = certificate(vertex)
                own_value = _dot3(Weight2(*vertex).lift(), entry.image)
                if best_value < own_value:
                    challenger = best
                    break
            if challenger is not None:
                break
        if challenger is None:
            break
        assert challenger.image not in points, "tiling admitted a known image"
        known.append(challenger)

    keep = [
        (entry, poly)
        for entry, poly in zip(known, polygons)
        if poly.area() > 0
    ]
    keep.sort(key=lambda pair: pair[0].image)
    return Decomposition(
        images=tuple(entry for entry, _ in keep),
        components=tuple(poly for _, poly in keep),
        lp_solves=lp_core.solve_calls() - start_count,
    )

"""Weight set decomposition against frozen values and the brute oracle."""

import random
from fractions import Fraction

import pytest

from pblp import (
    Case,
    Pblp,
    Sense,
    build_tolp,
    decompose,
    extreme_nondominated_bruteforce,
    find_extreme_image,
)
from pblp.errors import InfeasibleProblem, UnboundedScalarization
from pblp.problem_model import w3
from pblp.weight_geometry import intersect_polygons, simplex_triangle
from instance_gen import random_pblp

F = Fraction


def test_find_extreme_image_at_an_interior_weight(example2):
    t = build_tolp(example2)
    entry = find_extreme_image(t, w3(F(1, 5), F(3, 10), F(1, 2)))
    assert entry.image == (F(0), F(5), F(5))
    assert t.image(entry.witness) == entry.image


def test_find_extreme_image_on_unbounded_scalarization():
    # min -x over x >= 1 has no weighted-sum optimum for any weight
    t = build_tolp(
        Pblp(
            case=Case.ONE,
            n=1,
            rows=((F(1),),),
            rhs=(F(1),),
            senses=(Sense.GE,),
            c1=(F(-1),),
            c2=(F(0),),
            d1=(F(1),),
        )
    )
    with pytest.raises(UnboundedScalarization):
        find_extreme_image(t, w3(F(1, 2), F(1, 4), F(1, 4)))


def test_decompose_rejects_empty_feasible_sets():
    t = build_tolp(
        Pblp(
            case=Case.TWO,
            n=1,
            rows=((F(1),), (F(1),)),
            rhs=(F(2), F(1)),
            senses=(Sense.GE, Sense.LE),
            c1=(F(1),),
            c2=(F(1),),
            d1=(F(1),),
        )
    )
    with pytest.raises(InfeasibleProblem):
        decompose(t)


def test_single_image_owns_the_whole_simplex():
    # x fixed to 1: one image, one component, the full triangle
    t = build_tolp(
        Pblp(
            case=Case.ONE,
            n=1,
            rows=((F(1),),),
            rhs=(F(1),),
            senses=(Sense.EQ,),
            c1=(F(2),),
            c2=(F(3),),
            d1=(F(5),),
        )
    )
    dec = decompose(t)
    assert dec.image_points() == ((F(2), F(3), F(5)),)
    assert dec.components[0].vertices == simplex_triangle().vertices


def test_decompose_example2_frozen(example2):
    dec = decompose(build_tolp(example2))
    assert dec.image_points() == (
        (F(0), F(5), F(5)),
        (F(5), F(10), F(0)),
        (F(15), F(0), F(2)),
    )
    expected = {
        (F(0), F(5), F(5)): (
            (F(1, 5), F(3, 10)),
            (F(1, 2), F(0)),
            (F(1), F(0)),
            (F(1, 4), F(3, 4)),
        ),
        (F(5), F(10), F(0)): (
            (F(0), F(0)),
            (F(1, 2), F(0)),
            (F(1, 5), F(3, 10)),
            (F(0), F(1, 6)),
        ),
        (F(15), F(0), F(2)): (
            (F(0), F(1, 6)),
            (F(1, 5), F(3, 10)),
            (F(1, 4), F(3, 4)),
            (F(0), F(1)),
        ),
    }
    for entry, poly in zip(dec.images, dec.components):
        assert poly.vertices == expected[entry.image]
        assert build_tolp(example2).image(entry.witness) == entry.image
    assert sum(p.area() for p in dec.components) == F(1, 2)


def test_decompose_example1_frozen(example1):
    dec = decompose(build_tolp(example1))
    assert dec.image_points() == (
        (F(-33), F(4), F(13)),
        (F(-30), F(10), F(10)),
        (F(-6), F(2), F(2)),
        (F(-3), F(-6), F(3)),
    )
    areas = [p.area() for p in dec.components]
    assert areas == [F(25, 96), F(1, 48), F(5, 144), F(53, 288)]
    assert sum(areas) == F(1, 2)
    assert all(a > 0 for a in areas)


def test_decompose_example1_matches_the_brute_oracle(example1):
    t = build_tolp(example1)
    assert decompose(t).image_points() == extreme_nondominated_bruteforce(t)


def test_components_tile_without_overlap(example1):
    dec = decompose(build_tolp(example1))
    polys = dec.components
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            assert intersect_polygons(polys[i], polys[j]).area() == 0


def test_decompose_random_instances_agree_with_the_oracle():
    """A seeded mini-batch; the large batch lives in the acceptance
    suite.  Images must match the brute-force set exactly and the
    components must tile the simplex."""
    rng = random.Random(11)
    for trial in range(12):
        case = Case.ONE if trial % 2 == 0 else Case.TWO
        p = random_pblp(rng, case)
        t = build_tolp(p)
        dec = decompose(t)
        assert dec.image_points() == extreme_nondominated_bruteforce(t)
        assert sum(poly.area() for poly in dec.components) == F(1, 2)


def test_lp_solve_count_is_reported(example2):
    dec = decompose(build_tolp(example2))
    assert dec.lp_solves > 0

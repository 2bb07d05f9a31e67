import random

import pytest

from setfix import (
    AffineMap,
    AlphaBetaFunctional,
    CompactSet,
    ConditionError,
    ConstantGeneralized,
    EuclideanSpace,
    EuclideanSupportMap,
    Generalized,
    HardyRogers,
    MizoguchiTakahashi,
    Nadler,
    PiecewiseAffineFn,
    Reich,
    ReichFunctional,
    as_generalized,
    check_condition,
    check_single_valued_hardy_rogers,
    hausdorff_distance,
    point_to_set_distance,
)
from setfix.coeffs import CoefficientTriple
from setfix.conditions import rhs_bound
from setfix.oracle import random_admissible_constants, random_map, random_metric

from conftest import line_space, table_map


def test_parameter_validation():
    with pytest.raises(ConditionError):
        Nadler(1.0)
    with pytest.raises(ConditionError):
        Reich(0.5)
    with pytest.raises(ConditionError):
        HardyRogers(0.6, 0.2, 0.1)  # 0.6 + 0.4 + 0.2 >= 1
    with pytest.raises(ConditionError):
        ReichFunctional(PiecewiseAffineFn.constant(0.5))
    Nadler(0.0)
    Reich(0.49)


def test_as_generalized_embeddings():
    g = as_generalized(Nadler(0.5))
    assert g.alpha.evaluate(3.0) == 0.5
    assert g.beta.evaluate(3.0) == 0.0 and g.gamma.evaluate(3.0) == 0.0

    g = as_generalized(Reich(0.3))
    assert g.alpha.evaluate(1.0) == 0.0
    assert g.beta.evaluate(1.0) == 0.3

    g = as_generalized(HardyRogers(0.2, 0.1, 0.1))
    assert (g.alpha.evaluate(0.0), g.beta.evaluate(0.0), g.gamma.evaluate(0.0)) == (0.2, 0.1, 0.1)

    fn = PiecewiseAffineFn.constant(0.4)
    g = as_generalized(MizoguchiTakahashi(fn))
    assert g.alpha is fn

    g = as_generalized(AlphaBetaFunctional(fn, PiecewiseAffineFn.constant(0.2)))
    assert g.gamma.evaluate(9.0) == 0.0


def test_constant_map_certifies_everything():
    sp = line_space([0, 1, 3])
    m = table_map(sp, [[1], [1], [1]])
    for kind in (Nadler(0.0), Reich(0.1), ConstantGeneralized(0.2, 0.1, 0.1)):
        report = check_condition(m, kind)
        assert report.certified
        assert report.pairs_checked == 3


def test_flip_map_violates():
    sp = line_space([0, 1])
    m = table_map(sp, [[1], [0]])
    report = check_condition(m, ConstantGeneralized(0.3, 0.1, 0.1))
    assert report.verdict == "violated"
    w = report.witness
    assert (w.x, w.y) == (0, 1)
    assert w.lhs == 1.0
    # D(0,T1) = D(1,T0) = 0, so the gamma term vanishes: rhs = alpha + 2 beta.
    assert w.rhs == pytest.approx(0.3 + 2 * 0.1)
    assert w.lhs > w.rhs


def test_all_points_to_origin_certifies_nadler_zero():
    sp = line_space([0, 1, 2])
    m = table_map(sp, [[0], [0], [0]])
    assert check_condition(m, Nadler(0.0)).certified


def test_witness_is_reproducible():
    rng = random.Random(7)
    sp = random_metric(rng, 6)
    m = random_map(rng, sp)
    kind = ConstantGeneralized(*random_admissible_constants(rng))
    report = check_condition(m, kind)
    if report.verdict == "violated":
        w = report.witness
        tx, ty = m.image(w.x), m.image(w.y)
        lhs = hausdorff_distance(sp, tx, ty)
        d = sp.distance(w.x, w.y)
        rhs = rhs_bound(
            kind,
            d,
            point_to_set_distance(sp, w.x, tx),
            point_to_set_distance(sp, w.y, ty),
            point_to_set_distance(sp, w.x, ty),
            point_to_set_distance(sp, w.y, tx),
        )
        assert lhs == w.lhs and rhs == w.rhs and lhs > rhs


def test_pair_symmetry():
    # lhs and rhs are symmetric under swapping the pair.
    rng = random.Random(11)
    sp = random_metric(rng, 5)
    m = random_map(rng, sp)
    kind = ConstantGeneralized(0.2, 0.1, 0.05)
    for x in range(sp.n):
        for y in range(x + 1, sp.n):
            tx, ty = m.image(x), m.image(y)
            d = sp.distance(x, y)
            args_xy = (
                point_to_set_distance(sp, x, tx),
                point_to_set_distance(sp, y, ty),
                point_to_set_distance(sp, x, ty),
                point_to_set_distance(sp, y, tx),
            )
            args_yx = (args_xy[1], args_xy[0], args_xy[3], args_xy[2])
            assert rhs_bound(kind, d, *args_xy) == rhs_bound(kind, d, *args_yx)
            assert hausdorff_distance(sp, tx, ty) == hausdorff_distance(sp, ty, tx)


def test_hierarchy_embedding_identical_verdicts(rng):
    # Identical rhs under embedding, so identical verdict, on random maps.
    fn_beta = PiecewiseAffineFn((0.0, 1.0), ((0.1, 0.2),), 0.25)
    for _ in range(200):
        sp = random_metric(rng, rng.randint(2, 7))
        m = random_map(rng, sp)
        a, b, g = random_admissible_constants(rng)
        kinds = [
            Nadler(rng.uniform(0.0, 0.999)),
            Reich(rng.uniform(0.0, 0.499)),
            HardyRogers(a, b, g),
            ConstantGeneralized(a, b, g),
            ReichFunctional(fn_beta),
            AlphaBetaFunctional(
                PiecewiseAffineFn.constant(rng.uniform(0.0, 0.4)),
                PiecewiseAffineFn.constant(rng.uniform(0.0, 0.29)),
            ),
        ]
        for kind in kinds:
            direct = check_condition(m, kind)
            embedded = check_condition(m, Generalized(as_generalized(kind)))
            assert direct.verdict == embedded.verdict, (kind, sp.dist)
            if direct.verdict == "violated":
                assert (direct.witness.x, direct.witness.y) == (
                    embedded.witness.x,
                    embedded.witness.y,
                )
                assert direct.witness.rhs == embedded.witness.rhs


def test_single_valued_hardy_rogers_identity_map_violates():
    sp = line_space([0, 1, 2])
    m = table_map(sp, [[0], [1], [2]])
    report = check_single_valued_hardy_rogers(m, 0.5, 0.0, 0.0)
    assert report.verdict == "violated"
    w = report.witness
    assert w.lhs == sp.distance(w.x, w.y)
    assert w.rhs == 0.5 * w.lhs


def test_single_valued_hardy_rogers_constant_map_certifies():
    sp = line_space([0, 1, 2])
    m = table_map(sp, [[1], [1], [1]])
    assert check_single_valued_hardy_rogers(m, 0.2, 0.1, 0.1).certified


def test_single_valued_floor_halving_map_violates_at_adjacent_pair():
    # Floor-halving on the grid {0,1,2,4}: the pair (1,2) maps to (0,1) at
    # unchanged distance 1 > 0.5 * d(1,2), so alpha = 0.5 cannot certify.
    sp = line_space([0, 1, 2, 4])
    m = table_map(sp, [[0], [0], [1], [2]])
    report = check_single_valued_hardy_rogers(m, 0.5, 0.0, 0.0)
    assert report.verdict == "violated"
    assert (report.witness.x, report.witness.y) == (1, 2)


def test_single_valued_contraction_certifies():
    # Exhaustive pair check with the line metric on {0,1,3}: every image
    # pair is at most half the source distance apart.
    sp = line_space([0, 1, 3])
    m = table_map(sp, [[0], [0], [1]])
    assert check_single_valued_hardy_rogers(m, 0.5, 0.0, 0.0).certified


def test_single_valued_rejects_non_singleton():
    sp = line_space([0, 1])
    m = table_map(sp, [[0, 1], [0]])
    with pytest.raises(ConditionError, match="singleton"):
        check_single_valued_hardy_rogers(m, 0.2, 0.0, 0.0)


def test_single_valued_matches_set_valued_verdict(rng):
    for _ in range(100):
        sp = random_metric(rng, rng.randint(2, 6))
        images = [CompactSet.from_points([rng.randrange(sp.n)]) for _ in range(sp.n)]
        m = table_map(sp, [img.elements for img in images])
        a, b, g = random_admissible_constants(rng)
        sv = check_single_valued_hardy_rogers(m, a, b, g)
        mv = check_condition(m, ConstantGeneralized(a, b, g))
        assert sv.verdict == mv.verdict


def test_euclidean_needs_probe_points():
    sp = EuclideanSpace(1)
    m = AffineMap(sp, [[0.5]], [0.0])
    with pytest.raises(ConditionError, match="probe"):
        check_condition(m, Nadler(0.5))
    report = check_condition(m, Nadler(0.5), probe_points=[(0.0,), (1.0,), (4.0,)])
    assert report.certified
    assert report.probe_relative


def test_euclidean_support_map_checks_on_support():
    sp = EuclideanSpace(1)
    m = EuclideanSupportMap(
        sp,
        {
            (0.0,): CompactSet.from_points([(0.0,)]),
            (1.0,): CompactSet.from_points([(0.5,)]),
        },
    )
    report = check_condition(m, Nadler(0.6))
    assert report.certified and report.probe_relative


def test_reich_functional_reports_two_sided_form():
    sp = line_space([0, 1])
    m = table_map(sp, [[0], [0]])
    report = check_condition(m, ReichFunctional(PiecewiseAffineFn.constant(0.3)))
    assert report.limsup_form == "two-sided"
    assert check_condition(m, Reich(0.3)).limsup_form == "right"


def test_generalized_rejects_bad_triple():
    with pytest.raises(ConditionError):
        Generalized(CoefficientTriple.constants(0.6, 0.2, 0.1))

"""
Test of obstruct.operations module
"""

from __future__ import division, absolute_import, print_function
from nose.tools import assert_raises
from nose import tools as nt
import random

from obstruct import operations as op
from obstruct import simplicial as sc
from obstruct.cohomology import (
    CohomologyClass,
    coboundary,
    cohomology,
    is_cohomologous,
    pullback,
    reduce_class_mod_p,
)
from obstruct.corpus import get_entry
from obstruct.defects import hopf_profile
from obstruct.errors import (
    ModelError,
    ParameterError,
    ShapeError,
    UnsupportedProfileError,
)


def _generator(K, k, coeff=None, which=0):
    group = cohomology(K, k, coeff)
    return CohomologyClass(K, k, group.generators[which], group.modulus)


def test_cup_i_relation():
    '''Test the cup-i coboundary formula on random mod 2 cochains.'''
    for name in ('cp2', 'rp2', 'torus'):
        K = get_entry(name).payload
        bad, samples = op.cup_i_relation_violations(K, samples=1000, seed=3)
        nt.assert_equal(samples, 1000)
        nt.assert_equal(bad, 0)
    nt.assert_equal(op.cup_i_relation_violations(sc.build_complex([[0]])),
                    (0, 0))


def test_cup_i_edge_cases():
    K = get_entry('rp2').payload
    x = [1] * K.count(1)
    nt.assert_false(any(op.cup_i(K, x, 1, x, 1, -1)))
    nt.assert_false(any(op.cup_i(K, x, 1, x, 1, 2)))
    with assert_raises(ShapeError):
        op.cup_i(K, x[1:], 1, x, 1, 0)


def test_unit_and_commutativity():
    T = get_entry('torus').payload
    a, b = _generator(T, 1), _generator(T, 1, which=1)
    one = op.unit_class(T)
    nt.assert_true(is_cohomologous(op.cup(one, a), a))
    ab, ba = op.cup(a, b), op.cup(b, a)
    nt.assert_equal(abs(ab.coordinates[0]), 1)
    nt.assert_true(is_cohomologous(ab, -ba))
    nt.assert_true(op.cup(a, a).is_zero())
    with assert_raises(ShapeError):
        op.unit_class(sc.SimplicialPair(T, [0]))


def test_cup_mismatches():
    T = get_entry('torus').payload
    a = _generator(T, 1)
    with assert_raises(ShapeError):
        op.cup(a, reduce_class_mod_p(a, 2))
    S1 = sc.sphere_boundary(1)
    with assert_raises(ShapeError):
        op.cup(a, _generator(S1, 1))


def test_sq_zero_is_identity():
    for name, k in (('rp2', 1), ('cp2', 2), ('rp4', 1)):
        K = get_entry(name).payload
        x = _generator(K, k, 2)
        nt.assert_true(is_cohomologous(op.steenrod_sq(0, x), x))


def test_sq_top_is_cup_square():
    '''Test Sq^n x = x^2 in degree n and Sq^k x = 0 above it.'''
    rp2 = get_entry('rp2').payload
    x = _generator(rp2, 1, 2)
    sq = op.steenrod_sq(1, x)
    nt.assert_true(is_cohomologous(sq, op.cup(x, x)))
    nt.assert_false(sq.is_zero())
    nt.assert_true(op.steenrod_sq(2, x).is_zero())
    T = get_entry('torus').payload
    y = _generator(T, 1, 2)
    nt.assert_true(is_cohomologous(op.steenrod_sq(1, y), op.cup(y, y)))


def test_sq_on_projective_spaces():
    cp2 = get_entry('cp2').payload
    x = _generator(cp2, 2)
    nt.assert_false(op.sq2_after_mod2(x).is_zero())
    nt.assert_equal(op.sq2_after_mod2(x).degree, 4)
    nt.assert_true(op.steenrod_sq(1, reduce_class_mod_p(x, 2)).is_zero())
    rp4 = get_entry('rp4').payload
    w = _generator(rp4, 1, 2)
    w2 = op.cup(w, w)
    nt.assert_false(w2.is_zero())
    nt.assert_true(op.steenrod_sq(1, w2).is_zero())
    nt.assert_false(op.cup(w2, w2).is_zero())


def test_sq_errors():
    x = _generator(get_entry('cp2').payload, 2)
    with assert_raises(ShapeError):
        op.steenrod_sq(2, x)
    with assert_raises(ParameterError):
        op.steenrod_sq(-1, reduce_class_mod_p(x, 2))


def test_cohomology_operation():
    square = op.CohomologyOperation(op.CUP_SQUARE)
    sq2 = op.CohomologyOperation(op.SQ2_AFTER_MOD2)
    nt.assert_equal(square.target_degree(2), 4)
    nt.assert_equal(sq2.target_degree(3), 5)
    nt.assert_equal(op.CohomologyOperation(op.SQ, 1).target_degree(3), 4)
    nt.assert_is_none(square.target_modulus)
    nt.assert_equal(sq2.target_modulus, 2)
    nt.assert_equal(op.CohomologyOperation(op.SQ, 2),
                    op.CohomologyOperation(op.SQ, 2))
    nt.assert_not_equal(square, sq2)
    with assert_raises(UnsupportedProfileError):
        op.CohomologyOperation('pontryagin_square')
    with assert_raises(ParameterError):
        op.CohomologyOperation(op.SQ)
    x = _generator(get_entry('cp2').payload, 2)
    nt.assert_true(is_cohomologous(square(x), op.cup(x, x)))


def test_apply_theta():
    x = _generator(get_entry('cp2').payload, 2)
    plus = op.apply_theta(hopf_profile(sign=1), x)
    minus = op.apply_theta(hopf_profile(sign=-1), x)
    nt.assert_true(is_cohomologous(plus, -minus))
    with assert_raises(ParameterError):
        op.apply_theta(hopf_profile(), x)
    T = get_entry('torus').payload
    with assert_raises(ShapeError):
        op.apply_theta(hopf_profile(sign=1), _generator(T, 1))


def test_mapping_cone():
    '''Test the cone of the double wrap: a mod 2 Moore space.'''
    pair = op.mapping_cone(get_entry('double_wrap').payload)
    nt.assert_equal(pair.inclusion, tuple(range(6)))
    nt.assert_true(cohomology(pair, 1).is_zero())
    nt.assert_equal(cohomology(pair, 2).torsion, [2])


def test_hopf_invariant():
    f = get_entry('hopf_map').payload
    nt.assert_equal(op.hopf_invariant(f), 1)
    nt.assert_equal(op.hopf_invariant(f, orientation=-1), -1)
    nt.assert_equal(op.whitehead_hopf_invariant(f), op.hopf_invariant(f))
    const = sc.constant_map(f.source, f.target)
    nt.assert_equal(op.hopf_invariant(const), 0)
    nt.assert_equal(op.whitehead_hopf_invariant(const), 0)


def test_hopf_invariant_composite():
    '''Test that precomposing with a degree 4 map scales H by 4.'''
    f = get_entry('hopf_composite').payload
    nt.assert_equal(op.hopf_invariant(f), 4)


def test_hopf_invariant_errors():
    f = get_entry('double_wrap').payload
    with assert_raises(ModelError):
        op.hopf_invariant(f)
    S3 = sc.sphere_boundary(3)
    with assert_raises(ModelError):
        op.hopf_invariant(sc.constant_map(S3, get_entry('rp2').payload))
    nt.assert_true(op.is_homology_sphere(get_entry('hopf_s3').payload, 3))
    nt.assert_false(op.is_homology_sphere(get_entry('rp3').payload, 3))


def test_cup_ignores_representatives():
    '''Test that adding coboundaries to the factors keeps the cup class.'''
    entry = get_entry('s2xs2')
    K = entry.payload
    a, b = entry.intersection_form().basis
    rng = random.Random(5)
    for x, y in ((a, b), (a + b, a - b), (b, b)):
        for trial in range(3):
            shifts = [coboundary(K, 1, [rng.randint(-2, 2)
                                        for _ in range(K.count(1))])
                      for _ in range(2)]
            x2 = CohomologyClass(K, 2, x.cocycle + shifts[0])
            y2 = CohomologyClass(K, 2, y.cocycle + shifts[1])
            nt.assert_true(is_cohomologous(op.cup(x2, y2), op.cup(x, y)))


def test_cup_is_associative():
    '''Test (x y) z = x (y z) on random cochains.'''
    K = get_entry('rp4').payload
    rng = random.Random(6)
    for p, q, r in ((1, 1, 1), (1, 1, 2), (2, 1, 1), (1, 2, 1)):
        for trial in range(5):
            x, y, z = ([rng.randint(-2, 2) for _ in range(K.count(d))]
                       for d in (p, q, r))
            left = op.cup_cochains(K, op.cup_cochains(K, x, p, y, q),
                                   p + q, z, r)
            right = op.cup_cochains(K, x, p,
                                    op.cup_cochains(K, y, q, z, r), q + r)
            nt.assert_equal(list(left), list(right))


def test_sq_ignores_representatives():
    rng = random.Random(8)
    for name, k, degrees in (('rp4', 1, (0, 1)), ('cp2', 2, (2,))):
        K = get_entry(name).payload
        x = _generator(K, k, 2)
        for trial in range(5):
            c = [rng.randint(0, 1) for _ in range(K.count(k - 1))]
            y = CohomologyClass(K, k, x.cocycle + coboundary(K, k - 1, c, 2),
                                2)
            for i in degrees:
                nt.assert_true(is_cohomologous(op.steenrod_sq(i, y),
                                               op.steenrod_sq(i, x)))


def test_apply_theta_is_natural():
    '''Test Theta(f^* x) = f^* Theta(x) along corpus maps.'''
    profile = hopf_profile(sign=1)
    entry = get_entry('s2xs2')
    K = entry.payload
    a, b = entry.intersection_form().basis
    flip = sc.SimplicialMap(K, K, [(u % 4) * 4 + u // 4 for u in range(16)])
    for x in (a, b, a + 2 * b, 3 * a - b):
        nt.assert_true(is_cohomologous(
            op.apply_theta(profile, pullback(flip, x)),
            pullback(flip, op.apply_theta(profile, x))))
    S2 = sc.sphere_boundary(2)
    p1, p2 = sc.product_projections(S2, S2, K)
    u = _generator(S2, 2)
    for p in (p1, p2):
        nt.assert_true(is_cohomologous(
            op.apply_theta(profile, pullback(p, u)),
            pullback(p, op.apply_theta(profile, u))))


def test_mapping_cone_of_identity_and_constant():
    S2 = sc.sphere_boundary(2)
    cone = op.mapping_cone(sc.identity_map(S2))
    for k in range(cone.dimension + 1):
        nt.assert_true(cohomology(cone, k).is_zero(), k)
    wedge = op.mapping_cone(sc.constant_map(S2, S2))
    groups = [cohomology(wedge, k) for k in range(wedge.dimension + 1)]
    nt.assert_equal([g.free_rank for g in groups], [0, 0, 1, 1])
    nt.assert_false(any(g.torsion for g in groups))

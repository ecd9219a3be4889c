"""
Test of obstruct.manifolds module
"""

from __future__ import division, absolute_import, print_function
from nose.tools import assert_raises
from nose import tools as nt

from obstruct import manifolds as mf
from obstruct.cohomology import CohomologyClass, cohomology
from obstruct.corpus import get_entry
from obstruct.errors import ModelError, ShapeError
from obstruct.operations import cup
from obstruct.simplicial import SimplicialPair


def test_fundamental_class():
    rp2 = get_entry('rp2').payload
    nt.assert_is(mf.fundamental_class(rp2), mf.NON_ORIENTABLE)
    nt.assert_false(mf.fundamental_class(rp2))
    mod2 = mf.fundamental_class(rp2, 'z2')
    nt.assert_true(mod2)
    nt.assert_equal(mod2.degree, 2)
    for orientation in (1, -1):
        K = get_entry('cp2').payload
        fc = mf.fundamental_class(K, orientation=orientation)
        top = mf.orientation_cocycle(K, orientation=orientation)
        nt.assert_equal(mf.evaluate_top(top, fc), 1)


def test_cp2_form():
    '''Test that the shipped orientation of CP^2 gives the form (+1).'''
    entry = get_entry('cp2')
    form = entry.intersection_form()
    nt.assert_equal(form.matrix, [[1]])
    nt.assert_equal(form.signature, 1)
    nt.assert_true(form.is_unimodular())
    nt.assert_equal(mf.signature(entry.payload, orientation=1), -1)
    x = CohomologyClass(entry.payload, 2,
                        cohomology(entry.payload, 2).generators[0])
    nt.assert_equal(mf.self_intersection(entry.payload, x, -1), 1)
    nt.assert_equal(mf.self_intersection(entry.payload, 3 * x, -1), 9)


def test_s2xs2_form():
    form = get_entry('s2xs2').intersection_form()
    nt.assert_equal(form.matrix, [[0, 1], [1, 0]])
    nt.assert_true(form.is_symmetric())
    nt.assert_true(form.is_unimodular())
    nt.assert_equal(form.signature, 0)
    nt.assert_equal(form.value([1, 1]), 2)
    nt.assert_equal(form.value([2, -3]), -12)


def test_form_of_computed_basis():
    form = mf.intersection_form(get_entry('s2xs2').payload)
    nt.assert_equal(form.rank, 2)
    nt.assert_true(form.is_symmetric())
    nt.assert_true(form.is_unimodular())
    nt.assert_equal(form.signature, 0)
    empty = mf.intersection_form(get_entry('s4').payload)
    nt.assert_equal(empty.rank, 0)
    nt.assert_equal(empty.signature, 0)


def test_form_in_mixed_basis():
    entry = get_entry('s2xs2')
    a, b = entry.intersection_form().basis
    form = mf.intersection_form(entry.payload, entry.orientation,
                                [a + b, a + 2 * b])
    nt.assert_equal(form.matrix, [[2, 3], [3, 4]])
    nt.assert_equal(form.signature, 0)
    nt.assert_equal(form.determinant, -1)
    nt.assert_true(form.is_unimodular())


def test_form_invariants_are_exact():
    cases = [
        ([[1, 2], [2, 3]], 0, -1),
        ([[2, 1], [1, 1]], 2, 1),
        ([[0, 1], [1, 0]], 0, -1),
        ([[0, 1, 0], [1, 0, 0], [0, 0, -1]], -1, 1),
        ([[1, 0, 0], [0, 1, 0], [0, 0, -1]], 1, -1),
        ([[0, 0], [0, 0]], 0, 0),
        ([[4, 2], [2, 1]], 1, 0),
    ]
    for matrix, sig, det in cases:
        form = mf.IntersectionForm(range(len(matrix)), matrix)
        nt.assert_equal(form.signature, sig)
        nt.assert_equal(form.determinant, det)
    skew = mf.IntersectionForm([0, 1], [[0, 1], [0, 0]])
    nt.assert_false(skew.is_symmetric())
    nt.assert_is(skew.signature, None)
    nt.assert_equal(skew.determinant, 0)
    with assert_raises(ShapeError):
        mf.IntersectionForm([0], [[1, 2]])


def test_form_errors():
    with assert_raises(ModelError):
        mf.intersection_form(get_entry('rp4').payload)
    with assert_raises(ModelError):
        mf.intersection_form(get_entry('torus').payload)


def test_thom_invariants():
    nt.assert_equal(get_entry('thom_e1').payload.euler_number, 1)
    nt.assert_equal(get_entry('thom_e0').payload.euler_number, 0)
    nt.assert_equal(get_entry('thom_w2_1').payload.w2, 1)
    nt.assert_equal(get_entry('thom_w2_0').payload.w2, 0)
    nt.assert_equal(mf.sq2_thom(get_entry('thom_w2_1').payload), 1)
    nt.assert_equal(mf.sq2_thom(get_entry('thom_w2_0').payload), 0)


def test_thom_top_coefficient():
    for name in ('thom_e1', 'thom_e0', 'thom_w2_1', 'thom_w2_0'):
        T = get_entry(name).payload
        nt.assert_equal(T.top_coefficient(T.top_class), 1)
        nt.assert_equal(T.top_coefficient(3 * T.top_class), 3 % 2
                        if T.modulus else 3)
        with assert_raises(ShapeError):
            T.top_coefficient(T.thom_class)
    T = get_entry('thom_e1').payload
    nt.assert_equal(T.top_coefficient(cup(T.thom_class, T.thom_class)), 1)


def test_thom_square_is_quadratic():
    '''Test (n tau)^2 = n^2 e [DN].'''
    for name, e in (('thom_e1', 1), ('thom_e0', 0)):
        T = get_entry(name).payload
        for n in range(-3, 4):
            nt.assert_equal(mf.thom_square(T, n), n * n * e)


def test_thom_errors():
    cp2 = get_entry('cp2').payload
    with assert_raises(ModelError):
        mf.ThomModel(SimplicialPair(cp2, [0]), 2, orientation=-1,
                     euler_number=2)
    with assert_raises(ModelError):
        mf.ThomModel(SimplicialPair(cp2, [0]), 3)
    with assert_raises(ModelError):
        mf.thom_square(get_entry('thom_w2_1').payload, 1)
    with assert_raises(ModelError):
        mf.sq2_thom(get_entry('thom_e1').payload)
    T = get_entry('thom_w2_1').payload
    with assert_raises(ModelError):
        mf.sq2_thom(T, 2 * T.thom_class)

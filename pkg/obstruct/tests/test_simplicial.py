"""
Test of obstruct.simplicial module
"""

from __future__ import division, absolute_import, print_function
from nose.tools import assert_raises
from nose import tools as nt
import random

from obstruct import simplicial as sc
from obstruct.corpus import get_entry
from obstruct.errors import (
    DimensionError,
    MalformedSimplexError,
    MapValidationError,
    PairValidationError,
)


def test_build_complex():
    '''Test downward closure and the canonical simplex order.'''
    K = sc.build_complex([[2, 0, 1]])
    nt.assert_equal(K.f_vector, (3, 3, 1))
    nt.assert_equal(K.simplices_of(1), ((0, 1), (0, 2), (1, 2)))
    nt.assert_equal(K.facets, ((0, 1, 2),))
    nt.assert_true((0, 2) in K)
    nt.assert_false((0, 3) in K)
    # Isolated vertices below vertex_count are kept.
    L = sc.build_complex([[0, 1]], vertex_count=4)
    nt.assert_equal(L.f_vector, (4, 1))
    nt.assert_equal(L.facets, ((2,), (3,), (0, 1)))


def test_build_complex_errors():
    with assert_raises(MalformedSimplexError):
        sc.build_complex([[0, 0, 1]])
    with assert_raises(MalformedSimplexError):
        sc.build_complex([[-1, 2]])
    with assert_raises(MalformedSimplexError):
        sc.build_complex([[0, 5]], vertex_count=3)
    # Malformed input is a ValueError to callers that do not know ours.
    with assert_raises(ValueError):
        sc.build_complex([[1, 1]])


def test_boundary_squares_to_zero():
    '''Test that consecutive boundary matrices compose to zero.'''
    for name in ('s3', 'cp2', 'torus', 'rp2', 'klein'):
        K = get_entry(name).payload
        for k in range(2, K.dimension + 1):
            product = sc.boundary_matrix(K, k - 1).dot(
                sc.boundary_matrix(K, k))
            assert product.is_zero(), (name, k)


def test_boundary_matrix_signs():
    K = sc.build_complex([[0, 1, 2]])
    d2 = sc.boundary_matrix(K, 2)
    nt.assert_equal(d2.shape, (3, 1))
    # (1,2) - (0,2) + (0,1)
    nt.assert_equal([d2[i, 0] for i in range(3)], [1, -1, 1])
    with assert_raises(DimensionError):
        sc.boundary_matrix(K, 0)
    with assert_raises(DimensionError):
        sc.boundary_matrix(K, 3)
    nt.assert_equal(K.boundary(3).shape, (1, 0))


def test_pairs():
    K = sc.sphere_boundary(2)
    P = sc.SimplicialPair(K, [2, 0])
    nt.assert_equal(P.inclusion, (0, 2))
    nt.assert_equal(P.sub.f_vector, (2, 1))
    nt.assert_equal(P.relative_indices(0), [1, 3])
    nt.assert_true(P.in_sub(1, K.index((0, 2))))
    nt.assert_false(P.in_sub(1, K.index((0, 1))))
    with assert_raises(PairValidationError):
        sc.SimplicialPair(K, [0, 0])
    with assert_raises(PairValidationError):
        sc.SimplicialPair(K, [7])


def test_pair_from_subcomplex():
    '''Test that only full subcomplexes are accepted.'''
    K = sc.sphere_boundary(1)
    two_points = sc.build_complex([], vertex_count=2)
    with assert_raises(PairValidationError):
        sc.SimplicialPair.from_subcomplex(K, two_points, [0, 2])
    edge = sc.build_complex([[0, 1]])
    P = sc.SimplicialPair.from_subcomplex(K, edge, [0, 2])
    nt.assert_equal(P.inclusion, (0, 2))


def test_simplicial_maps():
    K = sc.sphere_boundary(1)
    swap = sc.SimplicialMap(K, K, [1, 0, 2])
    chain = sc.induced_chain_map(swap, 1)
    nt.assert_equal(chain[K.index((0, 1)), K.index((0, 1))], -1)
    nt.assert_equal(chain[K.index((0, 2)), K.index((1, 2))], 1)
    path = sc.build_complex([[0, 1], [1, 2]])
    with assert_raises(MapValidationError):
        sc.SimplicialMap(K, path, [0, 1, 2])
    with assert_raises(MapValidationError):
        sc.SimplicialMap(K, K, [0, 1])
    const = sc.constant_map(K, path, 1)
    nt.assert_true(const.chain_map(1).is_zero())
    nt.assert_equal(sc.compose(swap, swap), sc.identity_map(K))


def test_constructions_euler_characteristic():
    '''Test Euler characteristics of the derived constructions.'''
    S1, S2 = sc.sphere_boundary(1), sc.sphere_boundary(2)
    chi = sc.euler_characteristic
    nt.assert_equal(chi(S2), 2)
    nt.assert_equal(chi(sc.product_complex(S1, S1)), 0)
    nt.assert_equal(chi(sc.product_complex(S2, S2)), 4)
    nt.assert_equal(chi(sc.join(S1, S1)), 0)
    nt.assert_equal(chi(sc.suspension(S1)), 2)
    nt.assert_equal(chi(sc.suspension(S1, 2)), 0)
    nt.assert_equal(chi(sc.wedge(S1, S1)), -1)
    nt.assert_equal(chi(sc.grid_surface(3, 3)), 0)
    nt.assert_equal(chi(sc.grid_surface(3, 3, twist=True)), 0)
    nt.assert_equal(chi(sc.antipodal_quotient(2)), 1)
    nt.assert_equal(chi(sc.barycentric_subdivision(S2)), 2)


def test_pseudomanifolds():
    S1, S2 = sc.sphere_boundary(1), sc.sphere_boundary(2)
    for K in (S2, sc.product_complex(S2, S2), sc.join(S1, S1),
              sc.grid_surface(3, 3, twist=True), sc.antipodal_quotient(3),
              sc.barycentric_subdivision(S2)):
        assert sc.is_pseudomanifold(K), K
    nt.assert_false(sc.is_pseudomanifold(sc.wedge(S1, S1)))
    nt.assert_false(sc.is_pseudomanifold(sc.build_complex([[0, 1, 2]])))


def test_sizes():
    S2 = sc.sphere_boundary(2)
    nt.assert_equal(sc.product_complex(S2, S2).f_vector[0], 16)
    nt.assert_equal(sc.antipodal_quotient(2).vertex_count, 13)
    nt.assert_equal(sc.barycentric_subdivision(sc.sphere_boundary(1))
                    .f_vector, (6, 6))
    nt.assert_equal(sc.cycle_complex(5).f_vector, (5, 5))
    nt.assert_equal(sc.sphere_boundary(4).f_vector[-1], 6)


def test_link_and_components():
    S2 = sc.sphere_boundary(2)
    nt.assert_equal(sc.link(S2, (0,)).f_vector, (3, 3))
    nt.assert_equal(sc.link(S2, (0, 1)).f_vector, (2,))
    with assert_raises(MalformedSimplexError):
        sc.link(sc.build_complex([[0, 1]]), (0, 2))
    K = sc.build_complex([[0, 1], [2, 3]], vertex_count=5)
    nt.assert_equal(sc.connected_components(K), [[0, 1], [2, 3], [4]])
    sub = sc.induced_subcomplex(S2, [1, 2, 3])
    nt.assert_equal(sub.f_vector, (3, 3, 1))


def test_projections_and_join_maps():
    S1 = sc.sphere_boundary(1)
    p1, p2 = sc.product_projections(S1, S1)
    nt.assert_equal(p1.source.vertex_count, 9)
    nt.assert_equal(p1.vertex_images[:4], (0, 0, 0, 1))
    nt.assert_equal(p2.vertex_images[:4], (0, 1, 2, 0))
    f = sc.join_maps(sc.identity_map(S1), sc.identity_map(S1))
    nt.assert_equal(f.vertex_images, tuple(range(6)))


def test_permutation_sign():
    nt.assert_equal(sc.permutation_sign([0, 1, 2]), 1)
    nt.assert_equal(sc.permutation_sign([1, 0, 2]), -1)
    nt.assert_equal(sc.permutation_sign([2, 0, 1]), 1)


def test_build_complex_ignores_input_order():
    '''Test that shuffled and reordered tops give the same complex.'''
    tops = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + \
        [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    K = sc.build_complex(tops, 7)
    rng = random.Random(4)
    for trial in range(5):
        shuffled = [rng.sample(t, len(t)) for t in tops]
        rng.shuffle(shuffled)
        L = sc.build_complex(shuffled, 7)
        nt.assert_equal(L, K)
        nt.assert_equal(hash(L), hash(K))
        nt.assert_equal(L.facets, K.facets)
    nt.assert_equal(sc.build_complex(tops, 7), K)


def test_chain_maps_commute_with_boundary():
    '''Test that d f_# = f_# d in every degree of the corpus maps.'''
    S2 = sc.sphere_boundary(2)
    maps = [get_entry(name).payload
            for name in ('hopf_map', 'hopf_cover', 'double_wrap',
                         'triple_wrap_s3')]
    maps.extend(sc.product_projections(S2, S2))
    maps.append(sc.SimplicialMap(S2, S2, [1, 0, 2, 3]))
    for f in maps:
        for k in range(1, f.source.dimension + 1):
            left = f.target.boundary(k).dot(f.chain_map(k))
            right = f.chain_map(k - 1).dot(f.source.boundary(k))
            nt.assert_equal(left, right, (f, k))


def test_product_with_a_point():
    point = sc.build_complex([[0]])
    for K in (sc.sphere_boundary(2), sc.grid_surface(3, 3),
              get_entry('rp2').payload):
        nt.assert_equal(sc.product_complex(K, point), K)
        nt.assert_equal(sc.product_complex(point, K), K)

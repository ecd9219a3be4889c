"""
Cup and cup-i products, Steenrod squares, the operation Theta of a
fibration profile, mapping cones and the Hopf invariant.
"""

from __future__ import absolute_import, division, print_function
import itertools as itl
import random

from .cohomology import (
    CohomologyClass,
    as_pair,
    coboundary,
    coboundary_matrix,
    cohomology,
    fundamental_cycle,
    homology,
    parse_coefficient,
    pullback,
    reduce_class_mod_p,
)
from .errors import (
    ModelError,
    ParameterError,
    ShapeError,
    UnsupportedProfileError,
)
from .linalg import int_vector, solve_integer
from .simplicial import SimplicialPair, build_complex, is_pseudomanifold
from .utils import BoundedCache, get_logger


__all__ = [
    'CohomologyOperation',
    'CUP_SQUARE',
    'SQ2_AFTER_MOD2',
    'SQ',
    'unit_class',
    'cup',
    'cup_cochains',
    'cup_i',
    'steenrod_sq',
    'sq2_after_mod2',
    'apply_theta',
    'mapping_cone',
    'hopf_invariant',
    'whitehead_hopf_invariant',
    'is_homology_sphere',
    'cup_i_relation_violations',
]

LOG = get_logger()

CUP_SQUARE = 'cup_square'
SQ2_AFTER_MOD2 = 'sq2_after_mod2'
SQ = 'sq'

_TERMS = BoundedCache()


class CohomologyOperation(object):
    '''One of the shipped operations: the cup square, Sq^2 after reduction
    mod 2, or Sq^k on mod 2 classes.'''

    def __init__(self, kind, k=None):
        if kind not in (CUP_SQUARE, SQ2_AFTER_MOD2, SQ):
            raise UnsupportedProfileError("Unknown cohomology operation", kind)
        if kind == SQ and (k is None or k < 0):
            raise ParameterError("Sq^k needs k >= 0", k)
        self.kind = kind
        self.k = k

    def target_degree(self, degree):
        if self.kind == CUP_SQUARE:
            return 2 * degree
        if self.kind == SQ2_AFTER_MOD2:
            return degree + 2
        return degree + self.k

    @property
    def source_modulus(self):
        return 2 if self.kind == SQ else None

    @property
    def target_modulus(self):
        return None if self.kind == CUP_SQUARE else 2

    def __call__(self, x):
        if self.kind == CUP_SQUARE:
            return cup(x, x)
        if self.kind == SQ2_AFTER_MOD2:
            return sq2_after_mod2(x)
        return steenrod_sq(self.k, x)

    def __eq__(self, other):
        return (isinstance(other, CohomologyOperation) and
                (self.kind, self.k) == (other.kind, other.k))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.k))

    def __repr__(self):
        if self.kind == SQ:
            return "CohomologyOperation(Sq^{})".format(self.k)
        return "CohomologyOperation({})".format(self.kind)


def _terms(K, p, q, i):
    '''(target, front, back) simplex indices of the cup-i formula.

    A term cuts the (p+q-i)-simplex at i+1 increasing positions; the front
    cochain reads the even-numbered pieces and the back cochain the odd ones,
    neighbouring pieces sharing their cut vertex.
    '''
    key = (K, p, q, i)
    cached = _TERMS.get(key)
    if cached is not None:
        return cached
    n = p + q - i
    terms = []
    if 0 <= i <= min(p, q) and 0 <= n <= K.dimension:
        for t, s in enumerate(K.simplices_of(n)):
            for cuts in itl.combinations(range(n + 1), i + 1):
                bounds = (0,) + cuts + (n,)
                front, back = [], []
                for piece in range(i + 2):
                    part = s[bounds[piece]:bounds[piece + 1] + 1]
                    (back if piece % 2 else front).extend(part)
                if len(front) == p + 1 and len(back) == q + 1:
                    terms.append((t, K.index(tuple(front)),
                                  K.index(tuple(back))))
    return _TERMS.setdefault(key, terms)


def _combine(K, x, p, y, q, i, modulus):
    out = [0] * K.count(p + q - i)
    for t, a, b in _terms(K, p, q, i):
        if x[a] and y[b]:
            out[t] += int(x[a]) * int(y[b])
    return int_vector(out, modulus)


def cup_cochains(K, x, p, y, q, modulus=None):
    '''Alexander-Whitney product of cochains: front p-face times back
    q-face.'''
    return _combine(K, x, p, y, q, 0, modulus)


def cup_i(K, x, p, y, q, i):
    '''x cup_i y over Z/2 for a p-cochain x and a q-cochain y on K.

    Zero when i < 0 or i > min(p, q).
    '''
    if len(x) != K.count(p) or len(y) != K.count(q):
        raise ShapeError("Cochain lengths do not match their degrees")
    if i < 0:
        return int_vector([0] * K.count(p + q - i), 2)
    return _combine(K, x, p, y, q, i, 2)


def unit_class(space, coeff=None):
    pair = as_pair(space)
    if not pair.is_absolute():
        raise ShapeError("The unit class lives on an absolute complex")
    return CohomologyClass(pair, 0, [1] * pair.total.count(0),
                           parse_coefficient(coeff))


def _product_space(x, y):
    if x.space.total != y.space.total:
        raise ShapeError("Classes live on different complexes")
    if x.modulus != y.modulus:
        raise ShapeError("Coefficient mismatch", x.coefficient, y.coefficient)
    if x.space.inclusion == y.space.inclusion or y.space.is_absolute():
        return x.space
    if x.space.is_absolute():
        return y.space
    raise ShapeError("Cannot multiply classes relative to different "
                     "subcomplexes")


def cup(x, y):
    space = _product_space(x, y)
    cochain = cup_cochains(space.total, x.cocycle, x.degree, y.cocycle,
                           y.degree, x.modulus)
    return CohomologyClass(space, x.degree + y.degree, cochain, x.modulus)


def steenrod_sq(k, x):
    '''Sq^k x, represented by x cup_(n-k) x for x of degree n.'''
    if x.modulus != 2:
        raise ShapeError("Steenrod squares act on mod 2 classes")
    if k < 0:
        raise ParameterError("Negative Steenrod square", k)
    n = x.degree
    K = x.space.total
    if k > n:
        cochain = [0] * K.count(n + k)
    else:
        cochain = cup_i(K, x.cocycle, n, x.cocycle, n, n - k)
    return CohomologyClass(x.space, n + k, cochain, 2)


def sq2_after_mod2(x):
    if x.modulus is None:
        x = reduce_class_mod_p(x, 2)
    return steenrod_sq(2, x)


def apply_theta(profile, x):
    '''Theta for the profile: s * (x cup x), or Sq^2 of x mod 2.'''
    theta = profile.theta
    if x.degree != profile.n + 1:
        raise ShapeError("Theta expects a class of degree", profile.n + 1,
                         x.degree)
    if theta.kind == CUP_SQUARE:
        if x.modulus is not None:
            raise ShapeError("Cup-square profile needs integral classes")
        if profile.sign not in (1, -1):
            raise ParameterError("Profile sign is not resolved",
                                 profile.name)
        return profile.sign * cup(x, x)
    if theta.kind == SQ2_AFTER_MOD2:
        return sq2_after_mod2(x)
    raise UnsupportedProfileError("No Theta for profile", profile.name)


def mapping_cone(f):
    '''The simplicial mapping cylinder of f, paired with its source.

    The source K keeps its vertex numbers and the target is shifted past
    them. Each simplex (v0 < ... < vp) of K contributes the simplices
    {v0..vi} + f{vi..vp}. The relative cohomology of the returned pair is
    the reduced cohomology of the mapping cone.
    '''
    K, L = f.source, f.target
    shift = K.vertex_count
    tops = [[w + shift for w in t] for t in L.facets]
    for sigma in K.facets:
        for i in range(len(sigma)):
            tail = set(f.vertex_images[v] + shift for v in sigma[i:])
            tops.append(list(sigma[:i + 1]) + sorted(tail))
    cylinder = build_complex(tops, K.vertex_count + L.vertex_count)
    LOG.debug("Mapping cylinder of %r: %r", f, cylinder)
    return SimplicialPair(cylinder, range(K.vertex_count))


def is_homology_sphere(K, n):
    '''n-dimensional pseudomanifold with the integral homology of S^n.'''
    if K.dimension != n or not is_pseudomanifold(K):
        return False
    for k in range(n + 1):
        group = homology(K, k)
        expect = 1 if k in (0, n) else 0
        if group.torsion or group.free_rank != expect:
            return False
    return True


def _check_hopf_input(f):
    if not is_homology_sphere(f.source, 3):
        raise ModelError("Source of a Hopf map must be a 3-sphere", f.source)
    if not is_homology_sphere(f.target, 2):
        raise ModelError("Target of a Hopf map must be a 2-sphere", f.target)


def _single_coordinate(x):
    group = x.group
    if group.free_rank != 1 or group.torsion:
        raise ModelError("Expected an infinite cyclic group", str(group))
    return x.coordinates[0]


def hopf_invariant(f, orientation=1):
    '''H(f) with u cup u = H(f) v in the mapping cone of f: S^3 -> S^2.

    u generates H^2 of the cone and v is the image of the class dual to
    the source's fundamental cycle, so the sign follows ``orientation``.
    '''
    _check_hopf_input(f)
    pair = mapping_cone(f)
    h2 = cohomology(pair, 2)
    if h2.free_rank != 1 or h2.torsion:
        raise ModelError("Mapping cone has the wrong second cohomology",
                         str(h2))
    u = CohomologyClass(pair, 2, h2.generators[0])
    K = f.source
    cylinder = pair.total
    dual = [0] * cylinder.count(3)
    dual[cylinder.index(K.simplices_of(3)[0])] = 1 if orientation > 0 else -1
    v = CohomologyClass(pair, 4, coboundary(cylinder, 3, dual))
    scale = _single_coordinate(v)
    if scale not in (1, -1):
        raise ModelError("Dual of the fundamental class does not generate H^4")
    result = _single_coordinate(cup(u, u)) * scale
    LOG.debug("Hopf invariant of %r: %d", f, result)
    return result


def whitehead_hopf_invariant(f, orientation=1):
    '''Hopf invariant from the cochain formula on the source alone.

    With y generating H^2 of the target and a a 1-cochain with
    delta a = f*y, this is minus the pairing of a cup f*y with the
    fundamental cycle, which matches :func:`hopf_invariant`.
    '''
    _check_hopf_input(f)
    K = f.source
    y = cohomology(f.target, 2).generators[0]
    fy = pullback(f, CohomologyClass(f.target, 2, y)).cocycle
    a = solve_integer(coboundary_matrix(K, 1), fy)
    if a is None:
        raise ModelError("Pulled-back class is not a coboundary")
    z = fundamental_cycle(K, orientation=orientation)
    product = cup_cochains(K, a, 1, fy, 2)
    return -sum(int(c) * int(w) for c, w in zip(product, z))


def cup_i_relation_violations(K, samples=1000, seed=0):
    '''Count random mod 2 cochain pairs breaking the cup-i coboundary
    formula

        d(x cup_i y) = x cup_(i-1) y + y cup_(i-1) x
                       + dx cup_i y + x cup_i dy.

    Returns (violations, trials).
    '''
    rng = random.Random(seed)
    top = K.dimension
    shapes = [(p, q, i) for p in range(top + 1) for q in range(top + 1)
              for i in range(min(p, q) + 1) if p + q - i + 1 <= top]
    if not shapes:
        return 0, 0
    bad = 0
    for trial in range(samples):
        p, q, i = shapes[trial % len(shapes)]
        x = [rng.randint(0, 1) for _ in range(K.count(p))]
        y = [rng.randint(0, 1) for _ in range(K.count(q))]
        n = p + q - i
        lhs = coboundary(K, n, cup_i(K, x, p, y, q, i), 2)
        rhs = cup_i(K, x, p, y, q, i - 1) + cup_i(K, y, q, x, p, i - 1)
        rhs = rhs + cup_i(K, coboundary(K, p, x, 2), p + 1, y, q, i)
        rhs = rhs + cup_i(K, x, p, coboundary(K, q, y, 2), q + 1, i)
        if any((lhs - rhs) % 2):
            bad += 1
    LOG.debug("cup-i relation on %r: %d of %d samples fail", K, bad, samples)
    return bad, samples

"""
Fundamental classes, intersection forms of closed 4-manifolds and the Thom
class algebra of disk-bundle models.
"""

from __future__ import absolute_import, division, print_function

from fractions import Fraction

from .cohomology import (
    CohomologyClass,
    as_pair,
    cohomology,
    evaluate,
    fundamental_cycle,
    parse_coefficient,
)
from .errors import ModelError, ShapeError
from .operations import cup, steenrod_sq
from .utils import get_logger


__all__ = [
    'FundamentalClass',
    'NON_ORIENTABLE',
    'IntersectionForm',
    'ThomModel',
    'fundamental_class',
    'orientation_cocycle',
    'evaluate_top',
    'intersection_form',
    'self_intersection',
    'signature',
    'thom_square',
    'sq2_thom',
]

LOG = get_logger()


class _NonOrientable(object):
    def __repr__(self):
        return 'NON_ORIENTABLE'

    def __bool__(self):
        return False

    __nonzero__ = __bool__


NON_ORIENTABLE = _NonOrientable()


class FundamentalClass(object):
    '''A coherently oriented top cycle of a closed pseudomanifold.'''

    def __init__(self, K, cycle, modulus=None, orientation=1):
        self.complex = K
        self.cycle = cycle
        self.modulus = modulus
        self.orientation = orientation

    @property
    def degree(self):
        return self.complex.dimension

    def __repr__(self):
        return "<FundamentalClass of {!r} over {}>".format(
            self.complex, 'Z' if not self.modulus else 'Z%d' % self.modulus)


def fundamental_class(K, coeff=None, orientation=1):
    '''The fundamental class over Z, or NON_ORIENTABLE; over Z/2 always.'''
    modulus = parse_coefficient(coeff)
    cycle = fundamental_cycle(K, modulus, orientation)
    if cycle is None:
        return NON_ORIENTABLE
    return FundamentalClass(K, cycle, modulus, orientation)


def _top_cochain(pair, modulus, orientation):
    '''Cochain dual to the fundamental cycle: +-1 on the first top
    simplex.'''
    total = pair.total
    top = total.dimension
    cochain = [0] * total.count(top)
    cochain[0] = 1 if orientation > 0 else -1
    if pair.in_sub(top, 0):
        raise ModelError("First top simplex lies in the subcomplex")
    return CohomologyClass(pair, top, cochain, modulus)


def orientation_cocycle(space, coeff=None, orientation=1):
    '''Top cohomology class whose pairing with the fundamental cycle is 1.'''
    return _top_cochain(as_pair(space), parse_coefficient(coeff), orientation)


def evaluate_top(x, fundamental):
    if x.degree != fundamental.degree:
        raise ShapeError("Class is not in top degree", x.degree)
    return evaluate(x, fundamental.cycle)


def _oriented(K, orientation):
    fundamental = fundamental_class(K, None, orientation)
    if not fundamental:
        raise ModelError("Complex is not orientable", K)
    if K.dimension != 4:
        raise ModelError("Intersection forms need a closed 4-manifold", K)
    return fundamental


def _determinant(matrix):
    '''Exact determinant by elimination over the rationals.'''
    A = [[Fraction(v) for v in row] for row in matrix]
    n = len(A)
    det = Fraction(1)
    for t in range(n):
        k = next((i for i in range(t, n) if A[i][t] != 0), None)
        if k is None:
            return 0
        if k != t:
            A[t], A[k] = A[k], A[t]
            det = -det
        det *= A[t][t]
        for i in range(t + 1, n):
            f = A[i][t] / A[t][t]
            if f:
                A[i] = [a - f * b for a, b in zip(A[i], A[t])]
    return int(det)


def congruence_pivots(matrix):
    '''Diagonal of a symmetric matrix reduced by congruence over Q.

    The signs of the pivots give the signature; trailing zeros span the
    radical.
    '''
    A = [[Fraction(v) for v in row] for row in matrix]
    pivots = []
    while A:
        n = len(A)
        k = next((i for i in range(n) if A[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in range(n) for j in range(n)
                         if A[i][j] != 0), None)
            if pair is None:
                pivots.extend([Fraction(0)] * n)
                break
            # e_i -> e_i + e_j makes the (i, i) entry 2 A[i][j]
            k, j = pair
            A[k] = [a + b for a, b in zip(A[k], A[j])]
            for row in A:
                row[k] += row[j]
        order = [k] + [i for i in range(n) if i != k]
        A = [[A[r][c] for c in order] for r in order]
        p = A[0][0]
        pivots.append(p)
        A = [[A[r][c] - A[r][0] * A[0][c] / p for c in range(1, n)]
             for r in range(1, n)]
    return pivots


class IntersectionForm(object):
    '''The cup pairing on a basis of the free part of H^2.'''

    def __init__(self, basis, matrix, torsion=()):
        self.basis = list(basis)
        self.matrix = [list(row) for row in matrix]
        self.torsion = list(torsion)
        if any(len(row) != len(self.basis) for row in self.matrix) or \
                len(self.matrix) != len(self.basis):
            raise ShapeError("Form matrix does not match its basis",
                             len(self.basis), self.matrix)
        self.determinant = _determinant(self.matrix)
        if self.is_symmetric():
            pivots = congruence_pivots(self.matrix)
            self.signature = sum(1 for p in pivots if p > 0) - \
                sum(1 for p in pivots if p < 0)
        else:
            self.signature = None

    @property
    def rank(self):
        return len(self.basis)

    def is_symmetric(self):
        n = self.rank
        return all(self.matrix[i][j] == self.matrix[j][i]
                   for i in range(n) for j in range(n))

    def is_unimodular(self):
        return abs(self.determinant) == 1

    def value(self, coords):
        '''x^T M x for a class with the given coordinates in the basis.'''
        return sum(coords[i] * self.matrix[i][j] * coords[j]
                   for i in range(self.rank) for j in range(self.rank))

    def __repr__(self):
        return "IntersectionForm({})".format(self.matrix)


def intersection_form(K, orientation=1, basis=None):
    '''Matrix of (x, y) -> <x cup y, [K]> on a basis of H^2(K; Z)/torsion.

    Without ``basis`` the free generators of the computed group are used.
    '''
    fundamental = _oriented(K, orientation)
    group = cohomology(K, 2)
    if basis is None:
        basis = [CohomologyClass(K, 2, g)
                 for g in group.generators[:group.free_rank]]
    matrix = [[evaluate_top(cup(x, y), fundamental) for y in basis]
              for x in basis]
    form = IntersectionForm(basis, matrix, group.torsion)
    LOG.debug("Intersection form of %r: %r", K, form.matrix)
    return form


def self_intersection(K, x, orientation=1):
    fundamental = _oriented(K, orientation)
    if x.degree != 2:
        raise ShapeError("Self-intersection needs a degree 2 class")
    return evaluate_top(cup(x, x), fundamental)


def signature(K, orientation=1):
    return intersection_form(K, orientation).signature


def _coordinate(x, what):
    group = x.group
    if group.free_rank != 1 or group.torsion:
        raise ModelError("{} group is not cyclic".format(what), str(group))
    return x.coordinates[0]


class ThomModel(object):
    '''A pair (DN, SN) with its Thom class and top class.

    Rank 2 models are integral and carry an Euler number e with
    tau cup tau = e [DN]. Rank 4 models are read mod 2 and carry w2 with
    Sq^2 tau = w2 [DN]. Both invariants are derived from the complex and
    checked against any expected value handed in.
    '''

    def __init__(self, pair, rank, orientation=1, euler_number=None,
                 w2=None, name=None, provenance=''):
        self.pair = as_pair(pair)
        self.rank = rank
        self.orientation = orientation
        self.name = name
        self.provenance = provenance
        if rank == 2:
            self._build_oriented(euler_number)
        elif rank == 4:
            self._build_mod2(w2)
        else:
            raise ModelError("Thom models have rank 2 or 4", rank)
        LOG.debug("Thom model %s validated (rank %d)", name, rank)

    def _build_oriented(self, expected):
        group = cohomology(self.pair, 2)
        if group.free_rank != 1 or group.torsion:
            raise ModelError("H^2 of a rank 2 model must be infinite cyclic",
                             str(group))
        if self.pair.dimension != 4:
            raise ModelError("Rank 2 models must be 4-dimensional")
        self.modulus = None
        self.thom_class = CohomologyClass(self.pair, 2, group.generators[0])
        self.top_class = _top_cochain(self.pair, None, self.orientation)
        if _coordinate(self.top_class, "Top") not in (1, -1):
            raise ModelError("Top cochain does not generate")
        self.euler_number = self.top_coefficient(cup(self.thom_class,
                                                      self.thom_class))
        self.w2 = None
        if expected is not None and expected != self.euler_number:
            raise ModelError("Euler number mismatch", expected,
                             self.euler_number)

    def _build_mod2(self, expected):
        group = cohomology(self.pair, 4, 2)
        if group.free_rank != 1:
            raise ModelError("H^4 of a rank 4 model must be Z2", str(group))
        if self.pair.dimension != 6:
            raise ModelError("Rank 4 models must be 6-dimensional")
        self.modulus = 2
        self.thom_class = CohomologyClass(self.pair, 4, group.generators[0],
                                          2)
        self.top_class = _top_cochain(self.pair, 2, self.orientation)
        if _coordinate(self.top_class, "Top") != 1:
            raise ModelError("Top cochain does not generate")
        self.euler_number = None
        self.w2 = self.top_coefficient(steenrod_sq(2, self.thom_class))
        if expected is not None and expected % 2 != self.w2:
            raise ModelError("w2 mismatch", expected, self.w2)

    def top_coefficient(self, x):
        '''c with x = c [DN] for a top-degree class x of the model.'''
        if x.degree != self.top_class.degree:
            raise ShapeError("Not a top-degree class", x.degree,
                             self.top_class.degree)
        c = _coordinate(x, "Top") * _coordinate(self.top_class, "Top")
        return c % 2 if self.modulus else c

    def __repr__(self):
        return "<ThomModel {} rank={} e={} w2={}>".format(
            self.name, self.rank, self.euler_number, self.w2)


def thom_square(T, n):
    '''The integer c with (n tau) cup (n tau) = c [DN].'''
    if T.rank != 2:
        raise ModelError("thom_square needs a rank 2 model", T.rank)
    x = n * T.thom_class
    return T.top_coefficient(cup(x, x))


def sq2_thom(T, tau=None):
    '''Coefficient of Sq^2 tau on the top mod 2 class.'''
    if T.rank != 4:
        raise ModelError("sq2_thom needs a rank 4 model", T.rank)
    if tau is None:
        tau = T.thom_class
    if tau.modulus != 2 or tau.degree != 4:
        raise ModelError("Thom class must be a mod 2 class of degree 4")
    if tau.is_zero():
        raise ModelError("Thom class must generate H^4")
    return T.top_coefficient(steenrod_sq(2, tau))

"""
Simplicial (co)homology with explicit generators.

Groups are computed from two Smith decompositions per degree: one for the
incoming differential, which fixes the torsion and a basis adapted to the
image, and one for the outgoing differential restricted to the complement
of that image, whose kernel gives the free generators. Coordinates of a
(co)cycle in the resulting basis decide cohomologous-ness exactly.
"""

from __future__ import absolute_import, division, print_function

import six

from .errors import (
    DegreeUndefinedError,
    DimensionError,
    ModelError,
    PairValidationError,
    ParameterError,
    ShapeError,
)
from .linalg import (
    int_vector,
    is_prime,
    smith_normal_form,
    solve_integer,
    SparseIntMatrix,
)
from .simplicial import (
    SimplicialComplex,
    SimplicialPair,
    is_pseudomanifold,
    ridge_incidence,
)
from .utils import BoundedCache, get_logger


__all__ = [
    'HomologyGroup',
    'CohomologyClass',
    'parse_coefficient',
    'coefficient_name',
    'as_pair',
    'homology',
    'cohomology',
    'betti_numbers',
    'format_group',
    'coboundary_matrix',
    'coboundary',
    'cocycle_class',
    'class_from_coordinates',
    'pullback',
    'is_cohomologous',
    'reduce_class_mod_p',
    'evaluate',
    'fundamental_cycle',
    'degree',
]

LOG = get_logger()

_CACHE = BoundedCache()


def parse_coefficient(coeff):
    '''Normalise a coefficient name to None (integers) or a prime modulus.

    Accepts None, 0, 'z' for the integers and a prime or 'z<p>' for Z/p.
    '''
    if coeff is None or coeff == 0:
        return None
    if isinstance(coeff, six.string_types):
        text = coeff.strip().lower()
        if text in ('z', 'zz', 'int', 'integer'):
            return None
        if text.startswith('z'):
            text = text[1:].lstrip('/')
        try:
            coeff = int(text)
        except ValueError:
            raise ParameterError("Unknown coefficient ring", coeff)
    if not is_prime(coeff):
        raise ParameterError("Coefficients must be Z or Z/p, p prime", coeff)
    return coeff


def coefficient_name(modulus):
    return 'Z' if not modulus else 'Z{}'.format(modulus)


def as_pair(space):
    if isinstance(space, SimplicialPair):
        return space
    if isinstance(space, SimplicialComplex):
        return SimplicialPair(space, ())
    raise ShapeError("Expected a complex or a pair", space)


class _Reduction(object):
    '''Homology of d_out . d_in = 0 at the middle term, with a basis.'''

    def __init__(self, d_in, d_out, modulus):
        self.modulus = modulus
        self.d_in = d_in
        self.size = d_in.rows
        first = smith_normal_form(d_in, modulus)
        self.first = first
        r = first.rank
        rest = list(range(r, self.size))
        self.rest = rest
        # Columns of U past the image block, fed to the outgoing map.
        tail = d_out.dot(first.U).submatrix(range(d_out.rows), rest)
        second = smith_normal_form(tail, modulus)
        self.second = second
        self.free_rank = len(rest) - second.rank
        self.torsion = [d for d in first.divisors if d > 1]
        self.torsion_index = [i for i, d in enumerate(first.divisors) if d > 1]

        U_cols = first.U.transpose().row_dicts()
        kernel = second.kernel_basis()
        generators = []
        for vec in kernel:
            gen = [0] * self.size
            for pos, coeff in zip(rest, vec):
                if coeff:
                    for row, val in six.iteritems(U_cols.get(pos, {})):
                        gen[row] += coeff * val
            generators.append(int_vector(gen, modulus))
        for i in self.torsion_index:
            gen = [0] * self.size
            for row, val in six.iteritems(U_cols.get(i, {})):
                gen[row] = val
            generators.append(int_vector(gen, modulus))
        self.generators = generators

    def coordinates(self, vec):
        '''Free coordinates followed by torsion coordinates of ``vec``.'''
        w = self.first.U_inv.dot(vec)
        tail = int_vector([w[i] for i in self.rest], self.modulus)
        c = self.second.V.dot(tail) if self.rest else []
        free = [int(x) for x in list(c)[self.second.rank:]]
        torsion = [int(w[i]) % self.first.divisors[i]
                   for i in self.torsion_index]
        if self.modulus:
            free = [x % self.modulus for x in free]
        return tuple(free + torsion)

    def is_boundary(self, vec):
        return solve_integer(self.d_in, vec, self.modulus,
                             decomposition=self.first) is not None


class HomologyGroup(object):
    '''A computed (co)homology group and its generators.

    Generators are full-length (co)chain vectors over the simplices of the
    total complex, free generators first and torsion generators after them,
    in the same order as class coordinates.
    '''

    def __init__(self, kind, space, degree, modulus, reduction, embed):
        self.kind = kind
        self.space = space
        self.degree = degree
        self.modulus = modulus
        self._reduction = reduction
        self._embed = embed
        if reduction is None:
            self.free_rank = 0
            self.torsion = []
            self.generators = []
        else:
            self.free_rank = reduction.free_rank
            self.torsion = list(reduction.torsion)
            self.generators = [embed(g) for g in reduction.generators]

    @property
    def coefficient(self):
        return coefficient_name(self.modulus)

    def is_zero(self):
        return not self.free_rank and not self.torsion

    def coordinates(self, vec):
        if self._reduction is None:
            return ()
        return self._reduction.coordinates(self._restrict(vec))

    def _restrict(self, vec):
        index = self.space.relative_indices(self.degree)
        return int_vector([vec[i] for i in index], self.modulus)

    def contains_boundary(self, vec):
        '''True if ``vec`` is a (co)boundary in this group's complex.'''
        if self._reduction is None:
            return not any(vec)
        return self._reduction.is_boundary(self._restrict(vec))

    def __str__(self):
        return format_group(self)

    def __repr__(self):
        return "<{} {} in degree {}: {}>".format(
            self.kind, self.coefficient, self.degree, format_group(self))


def format_group(group):
    '''Canonical string such as ``Z^2 + Z/2``, ``Z2^1`` or ``0``.'''
    if group.is_zero():
        return '0'
    parts = []
    if group.free_rank:
        parts.append('{}^{}'.format(coefficient_name(group.modulus),
                                    group.free_rank))
    parts.extend('Z/{}'.format(t) for t in group.torsion)
    return ' + '.join(parts)


def _relative_coboundary(pair, k):
    '''delta: C^k -> C^(k+1) on cochains vanishing on the subcomplex.'''
    total = pair.total
    return total.boundary(k + 1).transpose().submatrix(
        pair.relative_indices(k + 1), pair.relative_indices(k))


def _relative_boundary(pair, k):
    total = pair.total
    return total.boundary(k).submatrix(pair.relative_indices(k - 1),
                                       pair.relative_indices(k))


def _cache_key(kind, pair, k, modulus):
    return (kind, pair.total, pair.inclusion, k, modulus)


def _compute(kind, space, k, coeff):
    pair = as_pair(space)
    modulus = parse_coefficient(coeff)
    if k < 0:
        raise DimensionError("Negative degree", k)
    key = _cache_key(kind, pair, k, modulus)
    cached = _CACHE.get(key)
    if cached is not None:
        return cached

    index = pair.relative_indices(k)
    size = pair.total.count(k)

    def embed(vec):
        full = [0] * size
        for i, v in zip(index, vec):
            full[i] = v
        return int_vector(full, modulus)

    reduction = None
    if k <= pair.dimension and index:
        if kind == 'cohomology':
            d_in = _relative_coboundary(pair, k - 1) if k else \
                SparseIntMatrix(len(index), 0)
            d_out = _relative_coboundary(pair, k)
        else:
            d_in = _relative_boundary(pair, k + 1)
            d_out = _relative_boundary(pair, k) if k else \
                SparseIntMatrix(0, len(index))
        if modulus:
            d_in, d_out = d_in.mod(modulus), d_out.mod(modulus)
        reduction = _Reduction(d_in, d_out, modulus)
    group = HomologyGroup(kind, pair, k, modulus, reduction, embed)
    LOG.debug("%s of %r in degree %d over %s: %s", kind, pair.total, k,
              group.coefficient, format_group(group))
    return _CACHE.setdefault(key, group)


def homology(K, k, coeff=None):
    '''H_k(K; coeff). Degrees above the dimension give the zero group.'''
    return _compute('homology', K, k, coeff)


def cohomology(P, k, coeff=None):
    '''H^k(P; coeff) for a complex or a pair; relative cochains are those
    vanishing on the subcomplex.'''
    return _compute('cohomology', P, k, coeff)


def betti_numbers(K, coeff=None):
    return [homology(K, k, coeff).free_rank for k in range(K.dimension + 1)]


def coboundary_matrix(K, k):
    '''The full coboundary C^k(K) -> C^(k+1)(K), the transposed boundary.'''
    return K.boundary(k + 1).transpose()


def coboundary(K, k, cochain, modulus=None):
    if isinstance(K, SimplicialPair):
        K = K.total
    if len(cochain) != K.count(k):
        raise ShapeError("Cochain has the wrong length", len(cochain),
                         K.count(k))
    return coboundary_matrix(K, k).dot(int_vector(cochain, modulus))


class CohomologyClass(object):
    '''A cocycle on a complex or pair, with its coordinates in the
    generator basis of the corresponding cohomology group.'''

    def __init__(self, space, degree, cocycle, modulus=None):
        self.space = as_pair(space)
        self.degree = degree
        self.modulus = modulus
        total = self.space.total
        cocycle = int_vector(cocycle, modulus)
        if len(cocycle) != total.count(degree):
            raise ShapeError("Cochain has the wrong length", len(cocycle),
                             total.count(degree))
        for i, v in enumerate(cocycle):
            if v and self.space.in_sub(degree, i):
                raise PairValidationError(
                    "Relative cochain is nonzero on the subcomplex", i)
        delta = coboundary(total, degree, cocycle, modulus)
        if any(delta):
            raise ParameterError("Cochain is not a cocycle", degree)
        self.cocycle = cocycle
        self.group = cohomology(self.space, degree, modulus or None)
        self.coordinates = self.group.coordinates(cocycle)

    @property
    def coefficient(self):
        return coefficient_name(self.modulus)

    @property
    def free_coordinates(self):
        return self.coordinates[:self.group.free_rank]

    @property
    def torsion_coordinates(self):
        return self.coordinates[self.group.free_rank:]

    def is_zero(self):
        return not any(self.coordinates)

    def _check_compatible(self, other):
        if not isinstance(other, CohomologyClass):
            raise ShapeError("Not a cohomology class", other)
        if (self.space.total != other.space.total or
                self.space.inclusion != other.space.inclusion):
            raise ShapeError("Classes live on different spaces")
        if self.degree != other.degree:
            raise ShapeError("Degree mismatch", self.degree, other.degree)
        if self.modulus != other.modulus:
            raise ShapeError("Coefficient mismatch", self.coefficient,
                             other.coefficient)

    def __add__(self, other):
        self._check_compatible(other)
        return CohomologyClass(self.space, self.degree,
                               self.cocycle + other.cocycle, self.modulus)

    def __sub__(self, other):
        self._check_compatible(other)
        return CohomologyClass(self.space, self.degree,
                               self.cocycle - other.cocycle, self.modulus)

    def __neg__(self):
        return CohomologyClass(self.space, self.degree, -self.cocycle,
                               self.modulus)

    def __mul__(self, scalar):
        if not isinstance(scalar, six.integer_types):
            return NotImplemented
        return CohomologyClass(self.space, self.degree,
                               self.cocycle * scalar, self.modulus)

    __rmul__ = __mul__

    def __repr__(self):
        return "<CohomologyClass H^{}({}) coords={}>".format(
            self.degree, self.coefficient, list(self.coordinates))


def cocycle_class(space, cochain, k, coeff=None):
    return CohomologyClass(space, k, cochain, parse_coefficient(coeff))


def class_from_coordinates(space, k, coords, coeff=None):
    '''The class sum(c_i g_i) over the generators g_i of H^k.'''
    modulus = parse_coefficient(coeff)
    group = cohomology(space, k, modulus)
    if len(coords) != len(group.generators):
        raise ShapeError("Expected one coordinate per generator",
                         len(group.generators), len(coords))
    cochain = int_vector([0] * as_pair(space).total.count(k))
    for c, g in zip(coords, group.generators):
        cochain = cochain + int(c) * int_vector(g)
    return CohomologyClass(space, k, cochain, modulus)


def is_cohomologous(x, y):
    '''True iff x - y is a coboundary of a relative cochain.'''
    x._check_compatible(y)
    diff = x.cocycle - y.cocycle
    if x.modulus:
        diff = diff % x.modulus
    return x.group.contains_boundary(diff)


def reduce_class_mod_p(x, p):
    if not is_prime(p):
        raise ParameterError("Not a prime", p)
    if x.modulus and x.modulus != p:
        raise ShapeError("Class is already reduced mod", x.modulus)
    return CohomologyClass(x.space, x.degree, x.cocycle, p)


def pullback(f, x, source=None):
    '''f^* x. ``source`` may be a pair on f.source carrying the relative
    structure; it must map its subcomplex into the subcomplex of x.'''
    if x.space.total != f.target:
        raise ShapeError("Class does not live on the target of the map")
    source = as_pair(source if source is not None else f.source)
    if source.total != f.source:
        raise ShapeError("Source pair does not match the map")
    sub_target = set(x.space.inclusion)
    for v in source.inclusion:
        if f.vertex_images[v] not in sub_target:
            raise PairValidationError("Map does not preserve subcomplexes", v)
    cochain = f.chain_map(x.degree).transpose().dot(x.cocycle)
    return CohomologyClass(source, x.degree, cochain, x.modulus)


def evaluate(x, cycle):
    '''Kronecker pairing of a class (or cochain) with a chain.'''
    cochain = x.cocycle if isinstance(x, CohomologyClass) else x
    modulus = x.modulus if isinstance(x, CohomologyClass) else None
    if len(cochain) != len(cycle):
        raise ShapeError("Cochain and chain lengths differ")
    total = sum(int(a) * int(b) for a, b in zip(cochain, cycle))
    return total % modulus if modulus else total


def fundamental_cycle(K, modulus=None, orientation=1):
    '''Coherently oriented top cycle of a closed pseudomanifold.

    The first facet gets coefficient ``orientation`` and the rest follow by
    cancelling across shared ridges. Returns None over the integers when
    the orientations do not close up. Mod 2 every facet gets 1.
    '''
    if not is_pseudomanifold(K):
        raise ModelError("Not a connected closed pseudomanifold", K)
    d = K.dimension
    count = K.count(d)
    if modulus:
        return int_vector([1] * count, modulus)
    signs = [0] * count
    signs[0] = 1 if orientation > 0 else -1
    incidence = ridge_incidence(K)
    neighbours = {}
    for (a, i), (b, j) in incidence.values():
        neighbours.setdefault(a, []).append((b, i, j))
        neighbours.setdefault(b, []).append((a, j, i))
    todo = [0]
    while todo:
        a = todo.pop()
        for b, i, j in neighbours[a]:
            want = -signs[a] * (-1) ** (i + j)
            if not signs[b]:
                signs[b] = want
                todo.append(b)
            elif signs[b] != want:
                LOG.debug("Orientation does not close up on %r", K)
                return None
    return int_vector(signs)


def degree(f, source_orientation=1, target_orientation=1):
    '''Mapping degree between closed oriented pseudomanifolds.'''
    if f.source.dimension != f.target.dimension:
        raise DegreeUndefinedError("Dimensions differ", f.source.dimension,
                                   f.target.dimension)
    try:
        zs = fundamental_cycle(f.source, orientation=source_orientation)
        zt = fundamental_cycle(f.target, orientation=target_orientation)
    except ModelError as exc:
        raise DegreeUndefinedError(*exc.args)
    if zs is None or zt is None:
        raise DegreeUndefinedError("Complex is not orientable")
    image = f.chain_map(f.source.dimension).dot(zs)
    # zt has +-1 in every facet, so the degree is read off any facet.
    d = int(image[0]) * int(zt[0])
    if any(image - zt * d):
        raise DegreeUndefinedError("Image of the fundamental cycle is not a "
                                   "multiple of the target cycle")
    return d

"""
Finite simplicial complexes, pairs and simplicial maps.

Simplices are strictly increasing vertex tuples, listed per dimension in
lexicographic order. Every matrix in obstruct is written against this order.
"""

from __future__ import absolute_import, division, print_function
from collections import deque
import itertools as itl

import six

from .errors import (
    DimensionError,
    MalformedSimplexError,
    MapValidationError,
    PairValidationError,
    ParameterError,
)
from .linalg import SparseIntMatrix
from .utils import get_logger


__all__ = [
    'SimplicialComplex',
    'SimplicialPair',
    'SimplicialMap',
    'build_complex',
    'boundary_matrix',
    'product_complex',
    'product_projections',
    'induced_chain_map',
    'join',
    'suspension',
    'wedge',
    'join_maps',
    'cycle_complex',
    'sphere_boundary',
    'grid_surface',
    'induced_subcomplex',
    'link',
    'euler_characteristic',
    'is_pseudomanifold',
    'connected_components',
    'compose',
    'identity_map',
    'constant_map',
    'barycentric_subdivision',
    'antipodal_quotient',
    'permutation_sign',
]

LOG = get_logger()


def permutation_sign(seq):
    '''Sign of the permutation sorting ``seq`` (entries distinct).'''
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


class SimplicialComplex(object):
    '''A finite abstract simplicial complex on vertices ``0..vertex_count-1``.

    Use :func:`build_complex` rather than calling this directly; the
    constructor trusts that ``simplices`` is already closed and sorted.
    '''

    def __init__(self, vertex_count, simplices):
        self.vertex_count = vertex_count
        self.simplices = tuple(tuple(level) for level in simplices)
        self.dimension = len(self.simplices) - 1
        self._index = [{s: i for i, s in enumerate(level)}
                       for level in self.simplices]
        self._boundaries = {}
        self._facets = None
        self._hash = hash((vertex_count, self.simplices))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.vertex_count == other.vertex_count and
                self.simplices == other.simplices)

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "SimplicialComplex(f={})".format(self.f_vector)

    @property
    def f_vector(self):
        return tuple(len(level) for level in self.simplices)

    def count(self, k):
        if 0 <= k <= self.dimension:
            return len(self.simplices[k])
        return 0

    def simplices_of(self, k):
        if 0 <= k <= self.dimension:
            return self.simplices[k]
        return ()

    def index(self, simplex):
        return self._index[len(simplex) - 1][tuple(simplex)]

    def __contains__(self, simplex):
        simplex = tuple(simplex)
        k = len(simplex) - 1
        return 0 <= k <= self.dimension and simplex in self._index[k]

    @property
    def facets(self):
        '''Maximal simplices, in dimension then lexicographic order.'''
        if self._facets is None:
            covered = set()
            for level in self.simplices[1:]:
                for s in level:
                    for face in itl.combinations(s, len(s) - 1):
                        covered.add(face)
            self._facets = tuple(s for level in self.simplices for s in level
                                 if s not in covered)
        return self._facets

    def is_pure(self):
        return all(len(f) == self.dimension + 1 for f in self.facets)

    def boundary(self, k):
        '''Matrix of the boundary from k-chains to (k-1)-chains.

        Out-of-range degrees give correctly shaped zero matrices; use
        :func:`boundary_matrix` for the checked version.
        '''
        if k not in self._boundaries:
            entries = {}
            if 1 <= k <= self.dimension:
                lower = self._index[k - 1]
                for j, s in enumerate(self.simplices[k]):
                    for i in range(k + 1):
                        face = s[:i] + s[i + 1:]
                        entries[(lower[face], j)] = (-1) ** i
            self._boundaries[k] = SparseIntMatrix(self.count(k - 1),
                                                  self.count(k), entries)
        return self._boundaries[k]


def build_complex(top_simplices, vertex_count=None):
    '''Downward closure of ``top_simplices`` as a SimplicialComplex.

    Every vertex below ``vertex_count`` is included, whether or not it lies
    in one of the given simplices.
    '''
    closed = set()
    biggest = -1
    for simplex in top_simplices:
        simplex = tuple(simplex)
        if not simplex:
            continue
        for v in simplex:
            if not isinstance(v, six.integer_types) or v < 0:
                raise MalformedSimplexError("Bad vertex index", simplex)
        ordered = tuple(sorted(simplex))
        if len(set(ordered)) != len(ordered):
            raise MalformedSimplexError("Repeated vertex in simplex", simplex)
        biggest = max(biggest, ordered[-1])
        for size in range(2, len(ordered) + 1):
            closed.update(itl.combinations(ordered, size))
    if vertex_count is None:
        vertex_count = biggest + 1
    elif vertex_count <= biggest:
        raise MalformedSimplexError("Vertex index beyond vertex count",
                                    biggest, vertex_count)
    levels = [[(v,) for v in range(vertex_count)]] if vertex_count else []
    for s in closed:
        k = len(s) - 1
        while len(levels) <= k:
            levels.append([])
        levels[k].append(s)
    for level in levels:
        level.sort()
    return SimplicialComplex(vertex_count, levels)


def boundary_matrix(K, k):
    if not 1 <= k <= K.dimension:
        raise DimensionError("Boundary degree out of range", k, K.dimension)
    return K.boundary(k)


class SimplicialPair(object):
    '''A complex together with the full subcomplex spanned by
    ``sub_vertices``.

    ``sub`` is renumbered ``0..len(sub_vertices)-1``; ``inclusion[i]`` is
    the vertex of ``total`` that sub-vertex ``i`` maps to.
    '''

    def __init__(self, total, sub_vertices=()):
        sub_vertices = list(sub_vertices)
        if len(set(sub_vertices)) != len(sub_vertices):
            raise PairValidationError("Repeated subcomplex vertex")
        for v in sub_vertices:
            if not 0 <= v < total.vertex_count:
                raise PairValidationError("Subcomplex vertex not in total", v)
        self.total = total
        self.inclusion = tuple(sorted(sub_vertices))
        self.sub = induced_subcomplex(total, self.inclusion)
        members = set(self.inclusion)
        self._sub_simplices = [
            frozenset(i for i, s in enumerate(level)
                      if all(v in members for v in s))
            for level in total.simplices
        ]

    @classmethod
    def from_subcomplex(cls, total, sub, inclusion):
        '''Build a pair from an explicit subcomplex, checking it is full.'''
        inclusion = list(inclusion)
        if len(inclusion) != sub.vertex_count:
            raise PairValidationError("Inclusion must cover every sub vertex")
        for level in sub.simplices:
            for s in level:
                image = tuple(sorted(inclusion[v] for v in s))
                if image not in total:
                    raise PairValidationError("Sub simplex missing from total",
                                              s)
        pair = cls(total, inclusion)
        if pair.sub.f_vector != sub.f_vector:
            raise PairValidationError("Subcomplex is not full", inclusion)
        return pair

    def __repr__(self):
        return "SimplicialPair(total={!r}, sub_vertices={})".format(
            self.total, list(self.inclusion))

    @property
    def dimension(self):
        return self.total.dimension

    def is_absolute(self):
        return not self.inclusion

    def in_sub(self, k, index):
        if 0 <= k <= self.total.dimension:
            return index in self._sub_simplices[k]
        return False

    def relative_indices(self, k):
        '''Indices of the k-simplices of ``total`` outside ``sub``.'''
        if not 0 <= k <= self.total.dimension:
            return []
        sub = self._sub_simplices[k]
        return [i for i in range(self.total.count(k)) if i not in sub]


class SimplicialMap(object):
    '''A vertex map that sends every simplex of ``source`` onto a simplex of
    ``target``.'''

    def __init__(self, source, target, vertex_images):
        images = tuple(int(v) for v in vertex_images)
        if len(images) != source.vertex_count:
            raise MapValidationError("Need one image per source vertex",
                                     len(images), source.vertex_count)
        for v in images:
            if not 0 <= v < target.vertex_count:
                raise MapValidationError("Image vertex not in target", v)
        for facet in source.facets:
            if self._image(images, facet) not in target:
                raise MapValidationError("Image of simplex is not a simplex",
                                         facet)
        self.source = source
        self.target = target
        self.vertex_images = images
        self._chain_maps = {}

    @staticmethod
    def _image(images, simplex):
        return tuple(sorted(set(images[v] for v in simplex)))

    def image(self, simplex):
        return self._image(self.vertex_images, simplex)

    def __repr__(self):
        return "SimplicialMap({!r} -> {!r})".format(self.source, self.target)

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.vertex_images == other.vertex_images)

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    __hash__ = None

    def chain_map(self, k):
        if k not in self._chain_maps:
            entries = {}
            for j, s in enumerate(self.source.simplices_of(k)):
                image = [self.vertex_images[v] for v in s]
                if len(set(image)) < len(image):
                    continue
                row = self.target.index(tuple(sorted(image)))
                entries[(row, j)] = permutation_sign(image)
            self._chain_maps[k] = SparseIntMatrix(
                self.target.count(k), self.source.count(k), entries)
        return self._chain_maps[k]


def induced_chain_map(f, k):
    '''Matrix of f_# on k-chains. Degenerate images go to zero.'''
    if not isinstance(f, SimplicialMap):
        raise MapValidationError("Not a simplicial map", f)
    return f.chain_map(k)


def _relabel_complex(simplices, labels):
    index = {v: i for i, v in enumerate(labels)}
    return build_complex([[index[v] for v in s] for s in simplices],
                         len(labels))


def product_complex(K, L):
    '''Staircase triangulation of |K| x |L|.

    Vertex (v, w) is numbered ``v * L.vertex_count + w``, so the numbering
    follows the lexicographic order of pairs.
    '''
    if not K.vertex_count or not L.vertex_count:
        raise DimensionError("Product of an empty complex")
    width = L.vertex_count
    tops = []
    for sigma in K.facets:
        for tau in L.facets:
            p, q = len(sigma) - 1, len(tau) - 1
            # Each staircase is a choice of which of the p+q steps go in K.
            for k_steps in itl.combinations(range(p + q), p):
                i = j = 0
                path = [sigma[0] * width + tau[0]]
                for step in range(p + q):
                    if step in k_steps:
                        i += 1
                    else:
                        j += 1
                    path.append(sigma[i] * width + tau[j])
                tops.append(path)
    LOG.debug("Product of %r and %r: %d staircases", K, L, len(tops))
    return build_complex(tops, K.vertex_count * width)


def product_projections(K, L, product=None):
    '''The two coordinate projections out of ``product_complex(K, L)``.'''
    if product is None:
        product = product_complex(K, L)
    width = L.vertex_count
    first = [u // width for u in range(product.vertex_count)]
    second = [u % width for u in range(product.vertex_count)]
    return SimplicialMap(product, K, first), SimplicialMap(product, L, second)


def join(K, L):
    '''Simplicial join; vertices of L are shifted past those of K.'''
    shift = K.vertex_count
    k_faces = list(K.facets) or [()]
    l_faces = [tuple(v + shift for v in t) for t in L.facets] or [()]
    tops = [s + t for s in k_faces for t in l_faces]
    return build_complex(tops, K.vertex_count + L.vertex_count)


def suspension(K, times=1):
    sphere0 = build_complex([(0,), (1,)])
    for _ in range(times):
        K = join(K, sphere0)
    return K


def wedge(K, L, k_vertex=0, l_vertex=0):
    '''One-point union gluing ``l_vertex`` of L to ``k_vertex`` of K.'''
    if not 0 <= k_vertex < K.vertex_count:
        raise ParameterError("Wedge point not in K", k_vertex)
    if not 0 <= l_vertex < L.vertex_count:
        raise ParameterError("Wedge point not in L", l_vertex)
    relabel = {}
    nxt = K.vertex_count
    for w in range(L.vertex_count):
        if w == l_vertex:
            relabel[w] = k_vertex
        else:
            relabel[w] = nxt
            nxt += 1
    tops = list(K.facets)
    tops.extend([relabel[w] for w in t] for t in L.facets)
    return build_complex(tops, nxt)


def join_maps(f, g):
    images = list(f.vertex_images)
    images.extend(v + f.target.vertex_count for v in g.vertex_images)
    return SimplicialMap(join(f.source, g.source), join(f.target, g.target),
                         images)


def cycle_complex(n):
    '''The n-gon, a triangulated circle.'''
    if n < 3:
        raise ParameterError("A cycle needs at least 3 vertices", n)
    return build_complex([(i, (i + 1) % n) for i in range(n)])


def sphere_boundary(n):
    '''The boundary of the (n+1)-simplex, an n-sphere on n+2 vertices.'''
    if n < 0:
        raise ParameterError("Sphere dimension must be nonnegative", n)
    return build_complex(itl.combinations(range(n + 2), n + 1))


def grid_surface(rows, cols, twist=False):
    '''Torus (or Klein bottle with ``twist``) from a rows x cols grid.

    Rows wrap plainly; wrapping across the last column also reflects the
    row index when twisted.
    '''
    if rows < 3 or cols < 3:
        raise ParameterError("Grid surfaces need at least 3x3 vertices")

    def vertex(i, j):
        i %= rows
        if j >= cols:
            j -= cols
            if twist:
                i = (rows - i) % rows
        return i * cols + j

    tops = []
    for i in range(rows):
        for j in range(cols):
            a, b = vertex(i, j), vertex(i + 1, j)
            c, d = vertex(i, j + 1), vertex(i + 1, j + 1)
            tops.append((a, b, d))
            tops.append((a, c, d))
    return build_complex(tops, rows * cols)


def induced_subcomplex(K, vertices):
    '''Full subcomplex on ``vertices``, renumbered in increasing order.'''
    labels = sorted(vertices)
    members = set(labels)
    simplices = [s for level in K.simplices for s in level
                 if all(v in members for v in s)]
    return _relabel_complex(simplices, labels)


def link(K, simplex):
    '''Link of ``simplex`` in K, renumbered in increasing vertex order.'''
    simplex = tuple(sorted(simplex))
    if simplex not in K:
        raise MalformedSimplexError("Not a simplex of the complex", simplex)
    own = set(simplex)
    faces = []
    for facet in K.facets:
        if own.issubset(facet):
            faces.append(tuple(v for v in facet if v not in own))
    labels = sorted(set(v for f in faces for v in f))
    return _relabel_complex([f for f in faces if f], labels)


def euler_characteristic(K):
    return sum((-1) ** k * n for k, n in enumerate(K.f_vector))


def connected_components(K):
    parent = list(range(K.vertex_count))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in K.simplices_of(1):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups = {}
    for v in range(K.vertex_count):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def ridge_incidence(K):
    '''Map each ridge of a pure complex to the facets containing it.'''
    incidence = {}
    d = K.dimension
    for fi, facet in enumerate(K.simplices_of(d)):
        for i in range(d + 1):
            incidence.setdefault(facet[:i] + facet[i + 1:], []).append(
                (fi, i))
    return incidence


def is_pseudomanifold(K):
    '''Pure, every ridge in exactly two facets, and strongly connected.'''
    if K.dimension < 1 or not K.is_pure():
        return False
    incidence = ridge_incidence(K)
    if len(incidence) != K.count(K.dimension - 1):
        return False
    if any(len(facets) != 2 for facets in incidence.values()):
        return False
    neighbours = {}
    for (a, _), (b, _) in incidence.values():
        neighbours.setdefault(a, []).append(b)
        neighbours.setdefault(b, []).append(a)
    seen = {0}
    todo = deque([0])
    while todo:
        for nb in neighbours.get(todo.popleft(), ()):
            if nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == K.count(K.dimension)


def compose(outer, inner):
    '''The map ``outer . inner`` (``inner`` is applied first).'''
    if inner.target != outer.source:
        raise MapValidationError("Maps are not composable")
    images = [outer.vertex_images[v] for v in inner.vertex_images]
    return SimplicialMap(inner.source, outer.target, images)


def identity_map(K):
    return SimplicialMap(K, K, range(K.vertex_count))


def constant_map(K, L, vertex=0):
    return SimplicialMap(K, L, [vertex] * K.vertex_count)


def barycentric_subdivision(K):
    '''First barycentric subdivision. Vertex i is the barycentre of the
    i-th simplex of K counted in dimension then lexicographic order.'''
    offsets = [0]
    for level in K.simplices:
        offsets.append(offsets[-1] + len(level))

    def number(s):
        return offsets[len(s) - 1] + K.index(s)

    tops = []
    for facet in K.facets:
        for order in itl.permutations(facet):
            tops.append([number(tuple(sorted(order[:i + 1])))
                         for i in range(len(order))])
    return build_complex(tops, offsets[-1])


def antipodal_quotient(n):
    '''RP^n: the subdivided boundary of the (n+1)-cross-polytope modulo
    the antipodal map.

    Faces of the cross-polytope are nonzero sign vectors in {-1, 0, 1}^(n+1)
    and its subdivision has one facet per maximal flag of them; each
    vertex of the quotient is a sign vector up to sign, normalised so
    that its first nonzero entry is +1.
    '''
    if n < 1:
        raise ParameterError("Projective space dimension must be positive", n)

    def canonical(vec):
        for x in vec:
            if x:
                return vec if x > 0 else tuple(-y for y in vec)
        return vec

    vertices = sorted(set(canonical(v)
                          for v in itl.product((-1, 0, 1), repeat=n + 1)
                          if any(v)))
    number = {v: i for i, v in enumerate(vertices)}
    tops = set()
    for order in itl.permutations(range(n + 1)):
        for signs in itl.product((1, -1), repeat=n):
            signs = (1,) + signs
            vec = [0] * (n + 1)
            flag = []
            for coord, sign in zip(order, signs):
                vec[coord] = sign
                flag.append(number[canonical(tuple(vec))])
            tops.add(tuple(sorted(flag)))
    LOG.debug("RP^%d quotient: %d vertices, %d facets", n, len(vertices),
              len(tops))
    return build_complex(sorted(tops), len(vertices))

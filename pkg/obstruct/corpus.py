"""
The shipped corpus: named complexes, maps, Thom models and scenarios.

Entries are built lazily and validated the first time their payload is
requested. Triangulations too irregular to generate are read from JSON
files under ``obstruct/data``; ``corpus.info`` records their md5 sums.
"""

from __future__ import absolute_import, division, print_function
from collections import OrderedDict
import json
import threading
from multiprocessing.pool import ThreadPool

from .cohomology import (
    CohomologyClass,
    betti_numbers,
    cohomology,
    degree,
    format_group,
    homology,
    pullback,
)
from .errors import CorpusKeyError, ModelError, ObstructError
from .manifolds import ThomModel, intersection_form
from .operations import (
    cup_i_relation_violations,
    hopf_invariant,
    is_homology_sphere,
    mapping_cone,
)
from .simplicial import (
    SimplicialMap,
    SimplicialPair,
    antipodal_quotient,
    build_complex,
    compose,
    cycle_complex,
    grid_surface,
    join,
    join_maps,
    product_complex,
    product_projections,
    sphere_boundary,
    wedge,
)
from .utils import get_config, get_data_file, get_logger, md5sum


__all__ = [
    'CorpusEntry',
    'CORPUS',
    'get_entry',
    'list_entries',
    'check_entry',
    'check_corpus',
    'hopf_model',
    'hopf_map',
    'hopf_cover',
]

LOG = get_logger()

CORPUS_VERSION = 1

CORPUS = OrderedDict()
_LOCK = threading.RLock()


class CorpusEntry(object):
    '''A named corpus object.

    ``build`` returns the payload, ``validate`` raises ModelError when the
    payload does not have the invariants the entry promises.
    '''

    def __init__(self, id, kind, build, provenance, validate=None,
                 orientation=1, data_file=None, basis=None):
        self.id = id
        self.kind = kind
        self.provenance = provenance
        self.orientation = orientation
        self.data_file = data_file
        self._build = build
        self._validate = validate
        self._basis = basis
        self._payload = None

    @property
    def payload(self):
        with _LOCK:
            if self._payload is None:
                payload = self._build()
                if self._validate is not None:
                    self._validate(payload)
                LOG.debug("Corpus entry %s loaded", self.id)
                self._payload = payload
            return self._payload

    @property
    def complex(self):
        '''The underlying simplicial complex of a space-like entry.'''
        payload = self.payload
        if self.kind == 'complex':
            return payload
        if self.kind == 'pair':
            return payload.total
        if self.kind == 'thom_model':
            return payload.pair.total
        raise ModelError("Entry is not a space", self.id)

    def intersection_form(self):
        basis = self._basis(self.payload) if self._basis else None
        return intersection_form(self.payload, self.orientation, basis)

    def __repr__(self):
        return "<CorpusEntry {} ({})>".format(self.id, self.kind)


def register(entry):
    CORPUS[entry.id] = entry
    return entry


def get_entry(id):
    try:
        return CORPUS[id]
    except KeyError:
        raise CorpusKeyError("No corpus entry named", id)


def list_entries():
    return list(CORPUS.values())


def _load_tops(filename):
    with open(get_data_file(filename)) as fh:
        record = json.load(fh)
    return build_complex(record['top_simplices'], record['vertices'])


def _expect_groups(expected, coeff=None):
    def validate(K):
        got = [format_group(homology(K, k, coeff))
               for k in range(K.dimension + 1)]
        if got != expected:
            raise ModelError("Unexpected homology", got, expected)
    return validate


def _expect_sphere(n):
    def validate(K):
        if not is_homology_sphere(K, n):
            raise ModelError("Not a homology sphere", n)
    return validate


def _expect_mod2_betti(expected):
    def validate(K):
        got = betti_numbers(K, 2)
        if got != expected:
            raise ModelError("Unexpected mod 2 Betti numbers", got)
    return validate


def _expect_form(matrix, orientation):
    def validate(K, basis=None):
        form = intersection_form(K, orientation, basis)
        if form.matrix != matrix:
            raise ModelError("Unexpected intersection form", form.matrix)
    return validate


def hopf_model(n=3):
    '''S^3 as two solid tori glued along an n x n torus.

    Vertex T(i, j) = i n + j lies on the middle torus; CA(i) and CB(j)
    trace the core circles of the two solid tori.
    '''
    if n < 3:
        raise ModelError("Hopf models need n >= 3", n)

    def T(i, j):
        return (i % n) * n + (j % n)

    def CA(i):
        return n * n + (i % n)

    def CB(j):
        return n * n + n + (j % n)

    tops = []
    for i in range(n):
        for j in range(n):
            tops.extend([
                (CA(i), T(i, j), T(i, j + 1), T(i + 1, j + 1)),
                (CA(i), T(i, j), T(i + 1, j), T(i + 1, j + 1)),
                (CA(i), CA(i + 1), T(i + 1, j), T(i + 1, j + 1)),
                (CB(j), CB(j + 1), T(i, j + 1), T(i + 1, j + 1)),
                (CB(j), T(i, j), T(i, j + 1), T(i + 1, j + 1)),
                (CB(j), T(i, j), T(i + 1, j), T(i + 1, j + 1)),
            ])
    return build_complex(tops, n * n + 2 * n)


def hopf_map():
    '''A simplicial Hopf map from the 15-vertex S^3 onto the boundary of
    the 3-simplex.'''
    levels = [0, 1, 1, 2, 3]
    images = [levels[2 + (j - i) % 3] for i in range(3) for j in range(3)]
    images.extend([0] * 3 + [1] * 3)
    return SimplicialMap(hopf_model(3), sphere_boundary(2), images)


def hopf_cover():
    '''Degree 4 map from the 48-vertex Hopf model onto the 15-vertex one,
    wrapping each torus direction twice.'''
    images = [(i % 3) * 3 + (j % 3) for i in range(6) for j in range(6)]
    images.extend(9 + (i % 3) for i in range(6))
    images.extend(12 + (j % 3) for j in range(6))
    return SimplicialMap(hopf_model(6), hopf_model(3), images)


def _expect_hopf(value):
    def validate(f):
        got = hopf_invariant(f)
        if got != value:
            raise ModelError("Unexpected Hopf invariant", got, value)
    return validate


def _expect_degree(value):
    def validate(f):
        got = degree(f)
        if got != value:
            raise ModelError("Unexpected degree", got, value)
    return validate


def _wrap(n, k):
    '''The k-fold wrap of the nk-gon onto the n-gon.'''
    return SimplicialMap(cycle_complex(n * k), cycle_complex(n),
                         [i % n for i in range(n * k)])


def _s2xs2_basis(K):
    '''Pullbacks of the generator of H^2(S^2) along the two projections,
    the second negated if needed so the off-diagonal entry is +1.'''
    S2 = sphere_boundary(2)
    p1, p2 = product_projections(S2, S2, K)
    y = CohomologyClass(S2, 2, cohomology(S2, 2).generators[0])
    a, b = pullback(p1, y), pullback(p2, y)
    form = intersection_form(K, 1, [a, b])
    if form.matrix[0][1] < 0:
        b = -b
    return [a, b]


def _thom(pair, rank, **kwargs):
    return lambda: ThomModel(pair(), rank, **kwargs)


def _wedge_s2_s4():
    return wedge(sphere_boundary(2), sphere_boundary(4))


def _scenario_builder(record):
    def build():
        from .formats import parse_scenario
        return parse_scenario(record)
    return build


def _register_builtin():
    for n in range(1, 6):
        register(CorpusEntry(
            's{}'.format(n), 'complex',
            (lambda n=n: sphere_boundary(n)),
            'boundary of the {}-simplex'.format(n + 1),
            _expect_sphere(n)))
    register(CorpusEntry(
        'cp2', 'complex', lambda: _load_tops('cp2.json'),
        'the 9-vertex complex projective plane, oriented so its form is (+1)',
        _expect_groups(['Z^1', '0', 'Z^1', '0', 'Z^1']), orientation=-1,
        data_file='cp2.json'))
    register(CorpusEntry(
        'rp2', 'complex', lambda: _load_tops('rp2.json'),
        '6-vertex real projective plane (hemi-icosahedron)',
        _expect_groups(['Z^1', 'Z/2', '0']), data_file='rp2.json'))
    register(CorpusEntry(
        'rp3', 'complex', lambda: antipodal_quotient(3),
        'subdivided boundary of the 4-cross-polytope modulo the antipodal map',
        _expect_mod2_betti([1, 1, 1, 1])))
    register(CorpusEntry(
        'rp4', 'complex', lambda: _load_tops('rp4.json'),
        'antipodal quotient of the subdivided 5-cross-polytope boundary, '
        'reduced by edge contractions satisfying the link condition',
        _expect_groups(['Z^1', 'Z/2', '0', 'Z/2', '0']), data_file='rp4.json'))
    register(CorpusEntry(
        'torus', 'complex',
        lambda: build_complex([(i, (i + 1) % 7, (i + 3) % 7)
                               for i in range(7)] +
                              [(i, (i + 2) % 7, (i + 3) % 7)
                               for i in range(7)], 7),
        '7-vertex Moebius torus',
        _expect_groups(['Z^1', 'Z^2', 'Z^1'])))
    register(CorpusEntry(
        'klein', 'complex', lambda: grid_surface(3, 3, twist=True),
        '3x3 grid with a reflecting seam',
        _expect_groups(['Z^1', 'Z^1 + Z/2', '0'])))
    register(CorpusEntry(
        's2xs2', 'complex',
        lambda: product_complex(sphere_boundary(2), sphere_boundary(2)),
        'staircase product of two tetrahedron boundaries',
        _expect_groups(['Z^1', '0', 'Z^2', '0', 'Z^1']),
        basis=_s2xs2_basis))
    register(CorpusEntry(
        'hopf_s3', 'complex', lambda: hopf_model(3),
        'two solid tori on a 3x3 torus grid',
        _expect_sphere(3)))
    register(CorpusEntry(
        'hopf_map', 'map', hopf_map,
        'simplicial Hopf map from hopf_s3 onto the boundary of the 3-simplex',
        _expect_hopf(1)))
    register(CorpusEntry(
        'hopf_cover', 'map', hopf_cover,
        'threefold folding of the 6x6 Hopf model onto the 3x3 one',
        _expect_degree(4)))
    register(CorpusEntry(
        'hopf_composite', 'map',
        lambda: compose(hopf_map(), hopf_cover()),
        'hopf_map after hopf_cover', _expect_hopf(4)))
    register(CorpusEntry(
        'hopf_cone', 'pair', lambda: mapping_cone(hopf_map()),
        'mapping cylinder of hopf_map relative to its source'))
    register(CorpusEntry(
        'double_wrap', 'map', lambda: _wrap(3, 2),
        'hexagon wrapped twice around the triangle', _expect_degree(2)))
    register(CorpusEntry(
        'triple_wrap_s3', 'map',
        lambda: join_maps(_wrap(3, 3), _wrap(3, 1)),
        'join of the triple wrap C9 -> C3 with the identity of C3',
        _expect_degree(3)))
    register(CorpusEntry(
        'thom_e1', 'thom_model',
        _thom(lambda: SimplicialPair(_load_tops('cp2.json'), [0]), 2,
              orientation=-1, euler_number=1, name='thom_e1'),
        'CP^2 relative to a vertex: the disk bundle of O(1) over S^2 '
        'with its boundary collapsed', data_file='cp2.json'))
    register(CorpusEntry(
        'thom_e0', 'thom_model',
        _thom(lambda: SimplicialPair(_wedge_s2_s4(), [0]), 2,
              euler_number=0, name='thom_e0'),
        'S^2 wedge S^4 relative to the wedge point: the Thom space of the '
        'trivial bundle'))
    register(CorpusEntry(
        'thom_w2_1', 'thom_model',
        _thom(lambda: SimplicialPair(join(_load_tops('cp2.json'),
                                          cycle_complex(4)), [0]), 4,
              w2=1, name='thom_w2_1'),
        'double suspension of CP^2 (join with a square) relative to a vertex',
        data_file='cp2.json'))
    register(CorpusEntry(
        'thom_w2_0', 'thom_model',
        _thom(lambda: SimplicialPair(join(_wedge_s2_s4(), cycle_complex(4)),
                                     [0]), 4,
              w2=0, name='thom_w2_0'),
        'double suspension of S^2 wedge S^4 relative to a vertex'))

    with open(get_data_file('scenarios.json')) as fh:
        for record in json.load(fh):
            register(CorpusEntry(
                record['id'], 'scenario', _scenario_builder(record),
                record.get('provenance', ''), data_file='scenarios.json'))


def _check_md5(entry):
    if not entry.data_file:
        return None
    with open(get_data_file('corpus.info')) as fh:
        info = json.load(fh)
    if info.get('corpus_version') != CORPUS_VERSION:
        return 'corpus.info version {} != {}'.format(
            info.get('corpus_version'), CORPUS_VERSION)
    expected = info['md5'].get(entry.data_file)
    got = md5sum(get_data_file(entry.data_file))
    if expected != got:
        return '{} md5 {} != {}'.format(entry.data_file, got, expected)
    return None


def check_entry(entry, samples=None, seed=None):
    '''Validate one entry; returns (id, ok, detail).'''
    config = get_config()
    samples = config['cupi_samples'] if samples is None else samples
    seed = config['seed'] if seed is None else seed
    try:
        problem = _check_md5(entry)
        if problem:
            return entry.id, False, problem
        entry.payload
        if entry.kind == 'complex':
            bad, tried = cup_i_relation_violations(entry.payload, samples,
                                                   seed)
            if bad:
                return entry.id, False, 'cup-i relation fails on {} of {}' \
                    .format(bad, tried)
        if entry.id == 's2xs2':
            _expect_form([[0, 1], [1, 0]], 1)(entry.payload,
                                              _s2xs2_basis(entry.payload))
        if entry.id == 'cp2':
            _expect_form([[1]], entry.orientation)(entry.payload)
    except (ObstructError, IOError, OSError) as exc:
        LOG.debug("Corpus entry %s failed: %s", entry.id, exc)
        return entry.id, False, str(exc)
    return entry.id, True, entry.provenance


def check_corpus(ids=None, samples=None, seed=None, threads=1):
    '''Check entries, in registry order regardless of completion order.'''
    entries = list_entries() if ids is None else [get_entry(i) for i in ids]
    if threads < 2:
        return [check_entry(e, samples, seed) for e in entries]
    pool = ThreadPool(threads)
    try:
        return pool.map(lambda e: check_entry(e, samples, seed), entries)
    finally:
        pool.close()
        pool.join()


_register_builtin()

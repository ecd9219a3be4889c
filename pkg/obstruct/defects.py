"""
Defect bookkeeping: fibration profiles, surface and point defects, and the
verifiers for the defect-index identities.

Point defects of a map into S^2 carry Hopf invariants; a surface defect
with index n and self-intersection chi is replaced by point defects whose
indices sum to s * n^2 * chi, the sign s being the same for all surfaces.
For the SU(3) fibration over S^4 the same bookkeeping runs mod 2, with
w2 of the normal bundle in place of chi.
"""

from __future__ import absolute_import, division, print_function
from collections import OrderedDict
from multiprocessing.pool import ThreadPool

import pandas as pd

from .cohomology import degree, is_cohomologous, reduce_class_mod_p
from .errors import (
    ModelError,
    ParameterError,
    ScenarioError,
    ShapeError,
    UnsupportedProfileError,
)
from .manifolds import thom_square
from .operations import (
    CUP_SQUARE,
    SQ2_AFTER_MOD2,
    CohomologyOperation,
    apply_theta,
    hopf_invariant,
    is_homology_sphere,
)
from .utils import get_logger


__all__ = [
    'FibrationProfile',
    'SurfaceDefect',
    'DefectConfiguration',
    'VerificationReport',
    'Check',
    'INDETERMINATE',
    'INCONSISTENT',
    'hopf_profile',
    'su3_s4_profile',
    'get_profile',
    'infer_sign',
    'conservation',
    'verify_prop1',
    'verify_prop2',
    'theorem_instance_check',
    'local_index',
    'synthesize_prop1',
    'verify',
    'verify_many',
]

LOG = get_logger()

INDETERMINATE = 'indeterminate'
INCONSISTENT = 'inconsistent'

SUPPLIED = 'supplied'
COMPUTED = 'computed'


class FibrationProfile(object):
    '''Which fibration F -> E -> B is in play.

    ``n`` is the degree of the fibre K(Pi, n), ``q`` the first degree with
    pi_q(E) nonzero. Theta maps H^(n+1)(-; Pi) to H^(q+1)(-; G). ``sign``
    is the sign in front of the cup square, or None while unresolved.
    '''

    def __init__(self, name, n, q, theta, pi='Z', g='Z', sign=None):
        if q < n + 2:
            raise ParameterError("Profiles need q >= n + 2", n, q)
        if theta.target_degree(n + 1) != q + 1:
            raise ParameterError("Theta does not land in degree q + 1",
                                 theta, n, q)
        if sign not in (None, 1, -1):
            raise ParameterError("Profile sign must be +1, -1 or None", sign)
        self.name = name
        self.n = n
        self.q = q
        self.theta = theta
        self.pi = pi
        self.g = g
        self.sign = sign

    @property
    def is_mod2(self):
        return self.theta.kind == SQ2_AFTER_MOD2

    def with_sign(self, sign):
        return FibrationProfile(self.name, self.n, self.q, self.theta,
                                self.pi, self.g, sign)

    def __eq__(self, other):
        return (isinstance(other, FibrationProfile) and
                (self.name, self.n, self.q, self.theta, self.sign) ==
                (other.name, other.n, other.q, other.theta, other.sign))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return "FibrationProfile({}, n={}, q={}, sign={})".format(
            self.name, self.n, self.q, self.sign)


def hopf_profile(sign=None):
    '''S^1 -> S^3 -> S^2: n = 1, q = 3, Theta the cup square.'''
    return FibrationProfile('hopf', 1, 3, CohomologyOperation(CUP_SQUARE),
                            sign=sign)


def su3_s4_profile():
    '''SU(2) -> SU(3) -> S^5 read over S^4: n = 3, q = 5, Theta = Sq^2
    after reduction mod 2.'''
    return FibrationProfile('su3_s4', 3, 5,
                            CohomologyOperation(SQ2_AFTER_MOD2), g='Z2')


PROFILES = {
    'hopf': hopf_profile,
    'su3_s4': lambda sign=None: su3_s4_profile(),
}


def get_profile(name, sign=None):
    try:
        factory = PROFILES[name]
    except KeyError:
        raise UnsupportedProfileError("Unknown fibration profile", name)
    return factory(sign)


class SurfaceDefect(object):
    '''A surface defect and the point defects replacing it.

    Hopf surfaces carry an integer index ``n`` and self-intersection
    ``chi``; mod 2 surfaces carry ``n`` and ``w2`` in {0, 1}.
    ``transversal`` asserts the surface came from a transversal section,
    which forces n = +-1.
    '''

    def __init__(self, n, replacement_indices, chi=None, w2=None, id=None,
                 transversal=False, provenance=None):
        self.id = id
        self.n = int(n)
        self.chi = chi
        self.w2 = w2
        self.replacement_indices = [int(i) for i in replacement_indices]
        self.transversal = transversal
        self.provenance = dict(provenance or {})
        if transversal and abs(self.n) != 1:
            raise ScenarioError("Transversal surfaces have index +-1",
                                id, self.n)

    @property
    def index_sum(self):
        return sum(self.replacement_indices)

    def __repr__(self):
        return "SurfaceDefect(id={}, n={}, chi={}, w2={}, sum={})".format(
            self.id, self.n, self.chi, self.w2, self.index_sum)


class DefectConfiguration(object):
    '''Inputs to one verification run.'''

    def __init__(self, profile, surfaces=(), point_indices=None,
                 c1_squared=None, provenance=None, name=None):
        self.profile = profile
        self.surfaces = list(surfaces)
        self.point_indices = (None if point_indices is None
                              else [int(i) for i in point_indices])
        self.c1_squared = c1_squared
        self.provenance = dict(provenance or {})
        self.name = name
        for i, surface in enumerate(self.surfaces):
            if surface.id is None:
                surface.id = 'surface{}'.format(i + 1)
        self._validate()

    def _validate(self):
        if not self.surfaces and not self.point_indices:
            raise ScenarioError("Configuration has no defects")
        if self.profile.is_mod2:
            if self.point_indices:
                raise ScenarioError("Mod 2 profiles take no point indices")
            for surface in self.surfaces:
                values = [surface.n, surface.w2] + \
                    surface.replacement_indices
                if any(v not in (0, 1) for v in values):
                    raise ScenarioError("Mod 2 data must be 0 or 1",
                                        surface.id)
        else:
            if self.c1_squared is None:
                raise ScenarioError("Hopf configurations need c1_squared")
            for surface in self.surfaces:
                if surface.chi is None:
                    raise ScenarioError("Hopf surfaces need chi", surface.id)
        self.provenance.setdefault('c1_squared', SUPPLIED)


class Check(object):
    '''One identity checked by a report: lhs - rhs = residual.'''

    def __init__(self, name, lhs, rhs, residual, subject=None, skipped=False):
        self.name = name
        self.subject = subject
        self.lhs = lhs
        self.rhs = rhs
        self.residual = residual
        self.skipped = skipped

    @property
    def passed(self):
        return self.skipped or self.residual == 0

    def as_dict(self):
        return OrderedDict([
            ('check', self.name),
            ('subject', self.subject or ''),
            ('lhs', self.lhs),
            ('rhs', self.rhs),
            ('residual', self.residual),
            ('status', 'skipped' if self.skipped else
             ('pass' if self.passed else 'FAIL')),
        ])


class VerificationReport(object):
    '''Outcome of checking one identity on one configuration.

    A report passes iff every residual is exactly zero and, where a sign
    is inferred, a single sign serves all surfaces.
    '''

    def __init__(self, identity, profile, checks, sign=None, ring='Z',
                 provenance=None, notes=()):
        self.identity = identity
        self.profile = profile
        self.checks = list(checks)
        self.sign = sign
        self.ring = ring
        self.provenance = OrderedDict(sorted((provenance or {}).items()))
        self.notes = list(notes)

    @property
    def passed(self):
        return (self.sign != INCONSISTENT and
                all(c.passed for c in self.checks))

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    @property
    def failing_subjects(self):
        return [c.subject for c in self.failures if c.subject]

    def residual(self, name):
        for check in self.checks:
            if check.name == name:
                return check.residual
        raise KeyError(name)

    def to_dict(self):
        return OrderedDict([
            ('identity', self.identity),
            ('profile', self.profile),
            ('ring', self.ring),
            ('passed', self.passed),
            ('sign', self.sign),
            ('checks', [c.as_dict() for c in self.checks]),
            ('failing', self.failing_subjects),
            ('provenance', self.provenance),
            ('notes', self.notes),
        ])

    def to_frame(self):
        columns = ['check', 'subject', 'lhs', 'rhs', 'residual', 'status']
        return pd.DataFrame([c.as_dict() for c in self.checks],
                            columns=columns)

    def to_text(self):
        lines = [
            'identity: {}'.format(self.identity),
            'profile:  {}'.format(self.profile),
            'ring:     {}'.format(self.ring),
        ]
        if self.sign is not None:
            lines.append('sign:     {}'.format(self.sign))
        lines.append(self.to_frame().to_string(index=False))
        for key, value in self.provenance.items():
            lines.append('provenance {}: {}'.format(key, value))
        lines.extend('note: {}'.format(n) for n in self.notes)
        if self.failing_subjects:
            lines.append('failing: {}'.format(
                ', '.join(self.failing_subjects)))
        lines.append('result: {}'.format('PASS' if self.passed else 'FAIL'))
        return '\n'.join(lines) + '\n'

    def __repr__(self):
        return "<VerificationReport {} {}>".format(
            self.identity, 'pass' if self.passed else 'fail')


def _require(config, mod2):
    if config.profile.is_mod2 != mod2:
        raise ScenarioError("Wrong profile for this identity",
                            config.profile.name)


def _admitted_signs(surface):
    lhs = surface.index_sum
    rhs = surface.n ** 2 * surface.chi
    return set(s for s in (1, -1) if lhs == s * rhs)


def infer_sign(config):
    '''The single sign s with sum(iota'') = s n^2 chi on every surface.

    Returns +1 or -1, INDETERMINATE when every right-hand side vanishes
    and INCONSISTENT when no single sign works.
    '''
    _require(config, False)
    admitted = set((1, -1))
    for surface in config.surfaces:
        admitted &= _admitted_signs(surface)
    if not admitted:
        return INCONSISTENT
    if len(admitted) == 2:
        return INDETERMINATE
    return admitted.pop()


def conservation(config):
    '''sum over points plus sum over all replacement indices, or None
    when no point indices were given.'''
    if config.point_indices is None:
        return None
    total = sum(config.point_indices)
    total += sum(s.index_sum for s in config.surfaces)
    return total


def verify_prop1(config):
    _require(config, False)
    profile = config.profile
    inferred = infer_sign(config)
    notes = []
    if profile.sign is not None:
        sign = profile.sign
        if inferred not in (sign, INDETERMINATE):
            notes.append('data do not support the profile sign {}'.format(
                sign))
    elif inferred in (1, -1):
        sign = inferred
    elif inferred == INDETERMINATE:
        sign = 1
        notes.append('every n^2 chi vanishes, sign is indeterminate')
    else:
        votes = [0, 0]
        groups = {1: [], -1: [], None: []}
        for surface in config.surfaces:
            admitted = _admitted_signs(surface)
            votes[0] += 1 in admitted
            votes[1] += -1 in admitted
            if len(admitted) == 1:
                groups[next(iter(admitted))].append(surface.id)
            elif not admitted:
                groups[None].append(surface.id)
        sign = 1 if votes[0] >= votes[1] else -1
        parts = []
        for key, label in ((1, '+1 only'), (-1, '-1 only'),
                           (None, 'neither sign')):
            if groups[key]:
                parts.append('{}: {}'.format(label, ', '.join(groups[key])))
        notes.append('no single sign fits every surface ({})'.format(
            '; '.join(parts)))

    checks = []
    for surface in config.surfaces:
        rhs = sign * surface.n ** 2 * surface.chi
        checks.append(Check('surface', surface.index_sum, rhs,
                            surface.index_sum - rhs, surface.id))
    total = sum(s.n ** 2 * s.chi for s in config.surfaces)
    checks.append(Check('c1_squared', total, config.c1_squared,
                        total - config.c1_squared))
    balance = conservation(config)
    checks.append(Check('conservation', balance, 0, balance,
                        skipped=balance is None))

    if profile.sign is not None:
        reported = sign if inferred != INCONSISTENT else INCONSISTENT
    else:
        reported = inferred
    provenance = dict(config.provenance)
    for surface in config.surfaces:
        for key, value in surface.provenance.items():
            provenance['{}.{}'.format(surface.id, key)] = value
    report = VerificationReport('prop1', profile.name, checks, reported,
                                'Z', provenance, notes)
    LOG.debug("Surface identity on %s: %r (sign %s)", config.name, report,
              reported)
    return report


def verify_prop2(config):
    _require(config, True)
    checks = []
    for surface in config.surfaces:
        lhs = surface.index_sum % 2
        rhs = (surface.n * surface.w2) % 2
        checks.append(Check('surface', lhs, rhs, (lhs - rhs) % 2,
                            surface.id))
    provenance = dict(config.provenance)
    provenance.pop('c1_squared', None)
    report = VerificationReport('prop2', config.profile.name, checks, None,
                                'Z2', provenance)
    LOG.debug("Mod 2 surface identity on %s: %r", config.name, report)
    return report


def verify(config):
    if config.profile.is_mod2:
        return verify_prop2(config)
    return verify_prop1(config)


def verify_many(configs, threads=4):
    '''Verify independent configurations concurrently; reports come back
    in input order.'''
    configs = list(configs)
    if len(configs) < 2 or threads < 2:
        return [verify(c) for c in configs]
    pool = ThreadPool(min(threads, len(configs)))
    try:
        return pool.map(verify, configs)
    finally:
        pool.close()
        pool.join()


def _check_classes(profile, gammas, cs):
    for g in gammas:
        if g.degree != profile.n + 1 or g.modulus is not None:
            raise ShapeError("Lifting obstructions must be integral classes "
                             "of degree", profile.n + 1)
    for c in cs:
        if c.degree != profile.q + 1:
            raise ShapeError("Extension obstructions must have degree",
                             profile.q + 1)
        if not profile.is_mod2 and c.modulus is not None:
            raise ShapeError("Extension obstructions must be integral")


def theorem_instance_check(profile, gamma_f, gamma_g, c_f, c_g):
    '''Check c_f - c_g = Theta(-gamma_f) - Theta(-gamma_g) in cohomology.'''
    _check_classes(profile, (gamma_f, gamma_g), (c_f, c_g))
    if profile.is_mod2:
        c_f = c_f if c_f.modulus == 2 else reduce_class_mod_p(c_f, 2)
        c_g = c_g if c_g.modulus == 2 else reduce_class_mod_p(c_g, 2)
    lhs = c_f - c_g
    rhs = apply_theta(profile, -gamma_f) - apply_theta(profile, -gamma_g)
    same = is_cohomologous(lhs, rhs)
    residual = 0 if same else list((lhs - rhs).coordinates)
    check = Check('theorem', list(lhs.coordinates), list(rhs.coordinates),
                  residual)
    ring = 'Z2' if profile.is_mod2 else 'Z'
    return VerificationReport('theorem', profile.name, [check],
                              profile.sign, ring,
                              {'classes': COMPUTED})


def local_index(link_map, profile, orientation=1):
    '''Index of a defect from its link map.

    Maps into a 2-sphere give Hopf invariants, maps between 3-spheres give
    degrees; mod 2 profiles reduce the result.
    '''
    if not is_homology_sphere(link_map.source, 3):
        raise ModelError("Link of a defect must be a homology 3-sphere",
                         link_map.source)
    target_dim = link_map.target.dimension
    if target_dim not in (2, 3):
        raise ModelError("Link maps go to a 2- or 3-sphere", link_map.target)
    if target_dim == 2 and not profile.is_mod2:
        value = hopf_invariant(link_map, orientation)
    else:
        value = degree(link_map, orientation)
    return value % 2 if profile.is_mod2 else value


def synthesize_prop1(e, n, s, thom_model=None, profile=None):
    '''A single-surface configuration that passes verify_prop1 with sign
    ``s``.

    With ``thom_model`` the self-intersection and replacement index are
    computed from its Thom class instead of from ``e``.
    '''
    if s not in (1, -1):
        raise ParameterError("Sign must be +-1", s)
    if thom_model is not None:
        chi = thom_square(thom_model, 1)
        square = thom_square(thom_model, n)
        source = COMPUTED
    else:
        chi = e
        square = n * n * e
        source = SUPPLIED
    surface = SurfaceDefect(n, [s * square], chi=chi, id='surface1',
                            provenance={'chi': source,
                                        'replacement_indices': source})
    return DefectConfiguration(profile or hopf_profile(), [surface],
                               point_indices=[-s * square],
                               c1_squared=n * n * chi,
                               provenance={'c1_squared': source},
                               name='synthesized e={} n={} s={}'.format(
                                   chi, n, s))

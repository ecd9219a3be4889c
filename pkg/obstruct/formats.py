"""
Structured-text records for complexes, pairs, maps, Thom models, scenarios
and reports.

Every record is one JSON object. The fields a record may carry, and the
converter each field goes through, are listed in the ``*_FIELDS`` tables.
Spaces inside map and scenario records are either inline records or
corpus references of the form ``"corpus:<id>"``.
"""

from __future__ import absolute_import, division, print_function
from collections import OrderedDict
import json

import six

from .defects import DefectConfiguration, SurfaceDefect, get_profile
from .errors import FormatError, ObstructError
from .manifolds import ThomModel
from .simplicial import SimplicialMap, SimplicialPair, build_complex
from .utils import get_logger


__all__ = [
    'COMPLEX_FIELDS',
    'PAIR_FIELDS',
    'MAP_FIELDS',
    'THOM_FIELDS',
    'SCENARIO_FIELDS',
    'SURFACE_FIELDS',
    'record_kind',
    'read_record',
    'parse_record',
    'parse_complex',
    'parse_pair',
    'parse_map',
    'parse_thom_model',
    'parse_scenario',
    'load',
    'complex_record',
    'pair_record',
    'map_record',
    'dumps',
    'render_report',
    'describe_error',
]

LOG = get_logger()

CORPUS_PREFIX = 'corpus:'


def _int_list(value):
    if not isinstance(value, list):
        raise FormatError("Expected a list of integers", value)
    return [_int(v) for v in value]


def _int(value):
    if isinstance(value, bool) or not isinstance(value, six.integer_types):
        raise FormatError("Expected an integer", value)
    return value


def _simplex_list(value):
    if not isinstance(value, list):
        raise FormatError("Expected a list of simplices", value)
    return [_int_list(s) for s in value]


def _text(value):
    if not isinstance(value, six.string_types):
        raise FormatError("Expected a string", value)
    return value


def _space(value):
    if isinstance(value, (dict, six.string_types)):
        return value
    raise FormatError("Expected a complex record or corpus reference", value)


def _record(value):
    if not isinstance(value, dict):
        raise FormatError("Expected a record", value)
    return value


def _bit(value):
    value = _int(value)
    if value not in (0, 1):
        raise FormatError("Expected 0 or 1", value)
    return value


def _sign(value):
    value = _int(value)
    if value not in (1, -1):
        raise FormatError("Expected +1 or -1", value)
    return value


COMMON_FIELDS = {
    'kind': _text,
    'id': _text,
    'provenance': _text,
    'orientation': _sign,
}

COMPLEX_FIELDS = dict(COMMON_FIELDS, **{
    'vertices': _int,
    'top_simplices': _simplex_list,
})

PAIR_FIELDS = dict(COMPLEX_FIELDS, **{
    'sub_vertices': _int_list,
})

MAP_FIELDS = dict(COMMON_FIELDS, **{
    'source': _space,
    'target': _space,
    'vertex_images': _int_list,
})

THOM_FIELDS = dict(PAIR_FIELDS, **{
    'rank': _int,
    'e': _int,
    'w2': _bit,
})

SURFACE_FIELDS = {
    'id': _text,
    'n': _int,
    'chi': _int,
    'w2': _bit,
    'class': _record,
    'transversal': bool,
    'replacement_indices': _int_list,
}

SCENARIO_FIELDS = dict(COMMON_FIELDS, **{
    'profile': _text,
    'sign': _sign,
    'c1_squared': _int,
    'c1_class': _record,
    'point_indices': _int_list,
    'surfaces': list,
})

REQUIRED = {
    'complex': ('vertices', 'top_simplices'),
    'pair': ('vertices', 'top_simplices', 'sub_vertices'),
    'map': ('source', 'target', 'vertex_images'),
    'thom_model': ('vertices', 'top_simplices', 'sub_vertices', 'rank'),
    'scenario': ('profile', 'surfaces'),
}

FIELDS = {
    'complex': COMPLEX_FIELDS,
    'pair': PAIR_FIELDS,
    'map': MAP_FIELDS,
    'thom_model': THOM_FIELDS,
    'scenario': SCENARIO_FIELDS,
}


def record_kind(record):
    '''The declared kind, or the kind implied by the fields present.'''
    if 'kind' in record:
        kind = record['kind']
        if kind not in FIELDS:
            raise FormatError("Unknown record kind", kind)
        return kind
    if 'profile' in record:
        return 'scenario'
    if 'vertex_images' in record:
        return 'map'
    if 'rank' in record:
        return 'thom_model'
    if 'sub_vertices' in record:
        return 'pair'
    return 'complex'


def _convert(record, kind, fields=None):
    fields = fields or FIELDS[kind]
    if not isinstance(record, dict):
        raise FormatError("A {} record must be an object".format(kind))
    missing = [f for f in REQUIRED.get(kind, ()) if f not in record]
    if missing:
        raise FormatError("Missing fields in {} record".format(kind),
                          missing)
    out = {}
    for field, value in six.iteritems(record):
        try:
            converter = fields[field]
        except KeyError:
            raise FormatError("Unknown field in {} record".format(kind),
                              field)
        if converter in (bool, list):
            if not isinstance(value, converter):
                raise FormatError("Bad value for field", field, value)
            out[field] = value
        else:
            out[field] = converter(value)
    return out


def read_record(filename):
    try:
        with open(filename) as fh:
            return json.load(fh)
    except ValueError as exc:
        raise FormatError("Not a structured-text record", filename, str(exc))


def _resolve(value):
    if isinstance(value, six.string_types):
        if not value.startswith(CORPUS_PREFIX):
            raise FormatError("Space references look like corpus:<id>",
                              value)
        from .corpus import get_entry
        return get_entry(value[len(CORPUS_PREFIX):]).complex
    return parse_complex(value)


def parse_complex(record):
    fields = _convert(record, 'complex')
    return build_complex(fields['top_simplices'], fields['vertices'])


def parse_pair(record):
    fields = _convert(record, 'pair')
    K = build_complex(fields['top_simplices'], fields['vertices'])
    return SimplicialPair(K, fields['sub_vertices'])


def parse_map(record):
    fields = _convert(record, 'map')
    source = _resolve(fields['source'])
    target = _resolve(fields['target'])
    return SimplicialMap(source, target, fields['vertex_images'])


def parse_thom_model(record):
    fields = _convert(record, 'thom_model')
    K = build_complex(fields['top_simplices'], fields['vertices'])
    pair = SimplicialPair(K, fields['sub_vertices'])
    return ThomModel(pair, fields['rank'],
                     orientation=fields.get('orientation', 1),
                     euler_number=fields.get('e'), w2=fields.get('w2'),
                     name=fields.get('id'),
                     provenance=fields.get('provenance', ''))


def _class_square(record):
    '''Self-intersection of the class with coordinates ``coords`` in the
    intersection-form basis of a corpus 4-manifold.'''
    if 'manifold' not in record or 'coords' not in record:
        raise FormatError("Class records need manifold and coords", record)
    from .corpus import get_entry
    name = _text(record['manifold'])
    if name.startswith(CORPUS_PREFIX):
        name = name[len(CORPUS_PREFIX):]
    entry = get_entry(name)
    if entry.kind != 'complex':
        raise FormatError("Classes live on corpus complexes", name)
    form = entry.intersection_form()
    coords = _int_list(record['coords'])
    if len(coords) != form.rank:
        raise FormatError("Class has the wrong number of coordinates",
                          coords, form.rank)
    return form.value(coords), 'computed (intersection form of {})'.format(
        name)


def _parse_surface(record, index):
    fields = _convert(record, 'surface', SURFACE_FIELDS)
    for field in ('n', 'replacement_indices'):
        if field not in fields:
            raise FormatError("Surface record is missing", field, index)
    provenance = {'replacement_indices': 'supplied'}
    chi = fields.get('chi')
    if 'class' in fields:
        if chi is not None:
            raise FormatError("Give chi or class, not both", index)
        chi, provenance['chi'] = _class_square(fields['class'])
    elif chi is not None:
        provenance['chi'] = 'supplied'
    return SurfaceDefect(fields['n'], fields['replacement_indices'],
                         chi=chi, w2=fields.get('w2'),
                         id=fields.get('id'),
                         transversal=fields.get('transversal', False),
                         provenance=provenance)


def parse_scenario(record):
    fields = _convert(record, 'scenario')
    profile = get_profile(fields['profile'], fields.get('sign'))
    surfaces = [_parse_surface(s, i)
                for i, s in enumerate(fields['surfaces'])]
    provenance = {}
    c1_squared = fields.get('c1_squared')
    if profile.is_mod2:
        if c1_squared is not None or 'c1_class' in fields:
            raise FormatError("Mod 2 scenarios carry no c1")
    elif ('c1_class' in fields) == (c1_squared is not None):
        raise FormatError("Give exactly one of c1_squared and c1_class")
    elif c1_squared is None:
        c1_squared, provenance['c1_squared'] = \
            _class_square(fields['c1_class'])
    else:
        provenance['c1_squared'] = 'supplied'
    return DefectConfiguration(profile, surfaces,
                               point_indices=fields.get('point_indices'),
                               c1_squared=c1_squared,
                               provenance=provenance,
                               name=fields.get('id'))


PARSERS = {
    'complex': parse_complex,
    'pair': parse_pair,
    'map': parse_map,
    'thom_model': parse_thom_model,
    'scenario': parse_scenario,
}


def parse_record(record):
    if not isinstance(record, dict):
        raise FormatError("A record must be an object")
    return PARSERS[record_kind(record)](record)


def load(filename):
    '''Parse the record in ``filename`` into the object it describes.'''
    record = read_record(filename)
    LOG.debug("Loading %s record from %s", record_kind(record), filename)
    return parse_record(record)


def complex_record(K, **extra):
    record = OrderedDict([
        ('vertices', K.vertex_count),
        ('top_simplices', [list(s) for s in K.facets]),
    ])
    record.update(sorted(extra.items()))
    return record


def pair_record(P, **extra):
    record = complex_record(P.total)
    record['sub_vertices'] = list(P.inclusion)
    record.update(sorted(extra.items()))
    return record


def map_record(f, **extra):
    record = OrderedDict([
        ('source', complex_record(f.source)),
        ('target', complex_record(f.target)),
        ('vertex_images', list(f.vertex_images)),
    ])
    record.update(sorted(extra.items()))
    return record


def dumps(record):
    '''The canonical encoding: sorted keys, two-space indent.'''
    return json.dumps(record, indent=2, sort_keys=True,
                      separators=(',', ': ')) + '\n'


def render_report(report, fmt='text'):
    if fmt == 'text':
        return report.to_text()
    if fmt == 'structured':
        return dumps(report.to_dict())
    raise FormatError("Unknown report format", fmt)


def describe_error(exc):
    '''One-line diagnostic for an input error.'''
    if isinstance(exc, ObstructError) and exc.args:
        head = exc.args[0]
        rest = ', '.join(repr(a) for a in exc.args[1:])
        return '{}: {}{}'.format(type(exc).__name__, head,
                                 ' ({})'.format(rest) if rest else '')
    return '{}: {}'.format(type(exc).__name__, exc)

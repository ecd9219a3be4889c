"""
obstruct: (co)homology, cohomology operations and defect-index checks on
finite simplicial complexes.

Usage:
  obstruct homology [options] <space>
  obstruct cohomology [options] <space>
  obstruct cup [options] <space> <x> <y>
  obstruct sq [options] <k> <space> [<x>]
  obstruct degree [options] <map>
  obstruct hopf [options] <map>
  obstruct form [options] <space>
  obstruct thom [options] <model>
  obstruct verify [options] <scenario>...
  obstruct corpus list [options]
  obstruct corpus check [options] [<id>...]
  obstruct (-h | --help)
  obstruct --version

Spaces, maps, models and scenarios are file names or corpus:<id>.
Classes are written <degree>:<coordinates>, e.g. 2:1 or 2:1,-1, in the
generator basis of the computed group; h is short for 2:1.

Options:
  -c --coeff=<c>      Coefficients, z or z2 [default: z].
  --mod2              Same as --coeff z2.
  -d --degree=<k>     Only report degree k.
  --class=<x>         Class for sq, instead of <x>.
  -n --max-n=<n>      Largest multiple of the Thom class to square
                      [default: 3].
  -j --threads=<n>    Worker threads for verify and corpus check
                      [default: 1].
  -o --out=<path>     Write the report to a file instead of stdout.
  -f --format=<fmt>   Report format, text or structured [default: text].
  -v --verbose        Log progress to stderr.
  -q --quiet          Only report errors.
  -h --help           Show this help.
  --version           Show the version.

Exit status is 0 on success, 1 when a verification fails and 2 on bad
input.
"""

from __future__ import absolute_import, division, print_function
from collections import OrderedDict
import sys

from docopt import DocoptExit, docopt
import pandas as pd

from . import __version__
from .cohomology import (
    as_pair,
    class_from_coordinates,
    coefficient_name,
    cohomology,
    degree,
    format_group,
    homology,
    parse_coefficient,
)
from .corpus import check_corpus, get_entry, list_entries
from .defects import verify_many
from .errors import CorpusKeyError, FormatError
from .formats import (
    CORPUS_PREFIX,
    describe_error,
    dumps,
    parse_record,
    read_record,
    record_kind,
    render_report,
)
from .manifolds import intersection_form, sq2_thom, thom_square
from .operations import cup, hopf_invariant, steenrod_sq, \
    whitehead_hopf_invariant
from .utils import get_logger, set_verbosity


__all__ = [
    'main',
    'entry',
]

LOG = get_logger()

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class Loaded(object):
    '''An object read from a file or the corpus, with its orientation.'''

    def __init__(self, name, kind, payload, orientation=1, entry=None):
        self.name = name
        self.kind = kind
        self.payload = payload
        self.orientation = orientation
        self.entry = entry


def load_input(name):
    if name.startswith(CORPUS_PREFIX):
        entry = get_entry(name[len(CORPUS_PREFIX):])
        return Loaded(name, entry.kind, entry.payload, entry.orientation,
                      entry)
    try:
        record = read_record(name)
    except IOError as exc:
        raise FormatError("Cannot read input", name, exc.strerror)
    if not isinstance(record, dict):
        raise FormatError("Input must hold one record", name)
    return Loaded(name, record_kind(record), parse_record(record),
                  record.get('orientation', 1))


def _space(loaded):
    if loaded.kind in ('complex', 'pair'):
        return loaded.payload
    if loaded.kind == 'thom_model':
        return loaded.payload.pair
    raise FormatError("Input is not a space", loaded.name, loaded.kind)


def _map(loaded):
    if loaded.kind != 'map':
        raise FormatError("Input is not a map", loaded.name, loaded.kind)
    return loaded.payload


def parse_class(space, text, modulus):
    '''``h`` or ``<degree>:<c0>,<c1>,...``.'''
    if text == 'h':
        text = '2:1'
    try:
        k, coords = text.split(':')
        k = int(k)
        coords = [int(c) for c in coords.split(',')]
    except ValueError:
        raise FormatError("Classes look like <degree>:<coords>", text)
    group = cohomology(space, k, modulus)
    if len(coords) < len(group.generators):
        coords += [0] * (len(group.generators) - len(coords))
    return class_from_coordinates(space, k, coords, modulus)


def _degrees(args, space):
    if args['--degree'] is not None:
        return [int(args['--degree'])]
    return list(range(space.dimension + 1))


def _modulus(args):
    if args['--mod2']:
        return 2
    return parse_coefficient(args['--coeff'])


def _class_dict(x):
    return OrderedDict([
        ('degree', x.degree),
        ('coefficient', x.coefficient),
        ('group', format_group(x.group)),
        ('coordinates', [int(c) for c in x.coordinates]),
        ('zero', x.is_zero()),
    ])


def _chain_dict(K, k, vec):
    return OrderedDict((','.join(str(v) for v in K.simplices_of(k)[i]),
                        int(c)) for i, c in enumerate(vec) if c)


def cmd_groups(args, kind):
    loaded = load_input(args['<space>'])
    space = as_pair(_space(loaded))
    modulus = _modulus(args)
    compute = homology if kind == 'homology' else cohomology
    groups = []
    for k in _degrees(args, space):
        group = compute(space, k, modulus)
        groups.append(OrderedDict([
            ('degree', k),
            ('group', format_group(group)),
            ('free_rank', group.free_rank),
            ('torsion', list(group.torsion)),
            ('generators', [_chain_dict(space.total, k, g)
                            for g in group.generators]),
        ]))
    result = OrderedDict([
        ('space', loaded.name),
        ('kind', kind),
        ('coefficient', coefficient_name(modulus)),
        ('groups', groups),
    ])
    symbol = 'H_{}' if kind == 'homology' else 'H^{}'
    lines = ['{}({}; {}) = {}'.format(symbol.format(g['degree']),
                                      loaded.name, result['coefficient'],
                                      g['group'])
             for g in groups]
    return result, lines, EXIT_OK


def cmd_cup(args):
    loaded = load_input(args['<space>'])
    space = as_pair(_space(loaded))
    modulus = _modulus(args)
    x = parse_class(space, args['<x>'], modulus)
    y = parse_class(space, args['<y>'], modulus)
    product = cup(x, y)
    result = OrderedDict([('space', loaded.name), ('x', _class_dict(x)),
                          ('y', _class_dict(y)),
                          ('product', _class_dict(product))])
    lines = ['x cup y = {} in H^{}({}; {}) = {}'.format(
        result['product']['coordinates'], product.degree, loaded.name,
        product.coefficient, format_group(product.group))]
    return result, lines, EXIT_OK


def cmd_sq(args):
    loaded = load_input(args['<space>'])
    space = as_pair(_space(loaded))
    text = args['--class'] or args['<x>']
    if text is None:
        raise FormatError("sq needs a class")
    k = int(args['<k>'])
    x = parse_class(space, text, 2)
    square = steenrod_sq(k, x)
    result = OrderedDict([('space', loaded.name), ('k', k),
                          ('x', _class_dict(x)),
                          ('square', _class_dict(square))])
    lines = ['Sq^{} x = {} in H^{}({}; Z2){}'.format(
        k, result['square']['coordinates'], square.degree, loaded.name,
        '' if square.is_zero() else ' (nonzero)')]
    return result, lines, EXIT_OK


def cmd_degree(args):
    loaded = load_input(args['<map>'])
    value = degree(_map(loaded))
    result = OrderedDict([('map', loaded.name), ('degree', value)])
    return result, ['deg = {}'.format(value)], EXIT_OK


def cmd_hopf(args):
    loaded = load_input(args['<map>'])
    f = _map(loaded)
    value = hopf_invariant(f)
    cochain = whitehead_hopf_invariant(f)
    result = OrderedDict([('map', loaded.name), ('hopf_invariant', value),
                          ('cochain_formula', cochain)])
    lines = ['H = {}'.format(value),
             'cochain formula: {}'.format(cochain)]
    return result, lines, EXIT_OK


def cmd_form(args):
    loaded = load_input(args['<space>'])
    if loaded.entry is not None:
        form = loaded.entry.intersection_form()
    else:
        form = intersection_form(_space(loaded), loaded.orientation)
    result = OrderedDict([
        ('space', loaded.name),
        ('matrix', form.matrix),
        ('rank', form.rank),
        ('signature', form.signature),
        ('determinant', form.determinant),
        ('symmetric', form.is_symmetric()),
        ('unimodular', form.is_unimodular()),
    ])
    lines = [pd.DataFrame(form.matrix).to_string(index=False, header=False)
             if form.rank else '(empty)']
    lines.extend('{}: {}'.format(key, result[key]) for key in
                 ('rank', 'signature', 'determinant', 'unimodular'))
    return result, lines, EXIT_OK


def cmd_thom(args):
    loaded = load_input(args['<model>'])
    if loaded.kind != 'thom_model':
        raise FormatError("Input is not a Thom model", loaded.name)
    model = loaded.payload
    result = OrderedDict([('model', loaded.name), ('rank', model.rank)])
    if model.rank == 2:
        squares = [thom_square(model, n)
                   for n in range(int(args['--max-n']) + 1)]
        result['e'] = model.euler_number
        result['squares'] = squares
        lines = ['e = {}'.format(model.euler_number)]
        lines.extend('(n tau)^2 = {} [DN] for n = {}'.format(c, n)
                     for n, c in enumerate(squares))
    else:
        result['w2'] = sq2_thom(model)
        lines = ['Sq^2 tau = {} [DN]'.format(result['w2'])]
    return result, lines, EXIT_OK


def cmd_verify(args):
    configs = []
    for name in args['<scenario>']:
        loaded = load_input(name)
        if loaded.kind != 'scenario':
            raise FormatError("Input is not a scenario", name)
        configs.append(loaded.payload)
    reports = verify_many(configs, int(args['--threads']))
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED
    if args['--format'] == 'structured':
        return [r.to_dict() for r in reports], None, status
    text = '\n'.join(render_report(r) for r in reports)
    return None, text.rstrip('\n').split('\n'), status


def cmd_corpus(args):
    if args['list']:
        frame = pd.DataFrame([(e.id, e.kind, e.provenance)
                              for e in list_entries()],
                             columns=['id', 'kind', 'provenance'])
        return (frame.to_dict(orient='records'),
                [frame.to_string(index=False)], EXIT_OK)
    ids = args['<id>'] or None
    rows = check_corpus(ids, threads=int(args['--threads']))
    frame = pd.DataFrame(
        [(i, 'ok' if ok else 'FAIL', detail) for i, ok, detail in rows],
        columns=['id', 'status', 'detail'])
    status = EXIT_OK if all(ok for _, ok, _ in rows) else EXIT_FAILED
    return (frame.to_dict(orient='records'), [frame.to_string(index=False)],
            status)


def dispatch(args):
    if args['homology']:
        return cmd_groups(args, 'homology')
    if args['cohomology']:
        return cmd_groups(args, 'cohomology')
    for command, run in (('cup', cmd_cup), ('sq', cmd_sq),
                         ('degree', cmd_degree), ('hopf', cmd_hopf),
                         ('form', cmd_form), ('thom', cmd_thom),
                         ('verify', cmd_verify), ('corpus', cmd_corpus)):
        if args[command]:
            return run(args)
    raise FormatError("No command given")


def emit(args, result, lines):
    if args['--format'] == 'structured':
        text = dumps(result)
    elif args['--format'] == 'text':
        text = '\n'.join(lines) + '\n'
    else:
        raise FormatError("Unknown report format", args['--format'])
    if args['--out']:
        with open(args['--out'], 'w') as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    try:
        args = docopt(__doc__, argv=argv, version=__version__)
    except DocoptExit as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    set_verbosity(args['--verbose'], args['--quiet'])
    try:
        result, lines, status = dispatch(args)
        emit(args, result, lines)
    except (ValueError, CorpusKeyError, NotImplementedError) as exc:
        print(describe_error(exc), file=sys.stderr)
        return EXIT_INPUT
    except (IOError, OSError) as exc:
        print("Cannot write output: {}".format(exc), file=sys.stderr)
        return EXIT_INPUT
    LOG.debug("Exit status %d", status)
    return status


def entry():
    sys.exit(main())

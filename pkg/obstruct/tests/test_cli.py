"""
Test of obstruct.cli module
"""

from __future__ import division, absolute_import, print_function

from nose import tools as nt

from obstruct import cli
from . import helpers


_run = helpers.run_cli
_structured = helpers.run_cli_structured


def test_homology_text():
    status, text = _run('homology', 'corpus:cp2')
    nt.assert_equal(status, 0)
    nt.assert_equal(text.splitlines(), [
        'H_0(corpus:cp2; Z) = Z^1',
        'H_1(corpus:cp2; Z) = 0',
        'H_2(corpus:cp2; Z) = Z^1',
        'H_3(corpus:cp2; Z) = 0',
        'H_4(corpus:cp2; Z) = Z^1',
    ])


def test_homology_options():
    status, text = _run('homology', 'corpus:rp4', '--mod2')
    nt.assert_equal(status, 0)
    nt.assert_true(all(line.endswith('= Z2^1') for line in text.splitlines()))
    status, text = _run('homology', 'corpus:rp4', '-c', 'z2', '-d', '3')
    nt.assert_equal(text, 'H_3(corpus:rp4; Z2) = Z2^1\n')
    status, text = _run('homology', 'corpus:s4', '--degree', '3')
    nt.assert_equal(text, 'H_3(corpus:s4; Z) = 0\n')


def test_relative_cohomology_from_file():
    status, result = _structured('cohomology',
                                 helpers.get_data_file('disk_pair.json'))
    nt.assert_equal(status, 0)
    nt.assert_equal([g['group'] for g in result['groups']],
                    ['0', '0', 'Z^1'])
    nt.assert_equal(result['kind'], 'cohomology')


def test_degree_and_hopf():
    status, text = _run('degree', helpers.get_data_file('double_wrap.json'))
    nt.assert_equal((status, text), (0, 'deg = 2\n'))
    status, text = _run('degree', 'corpus:triple_wrap_s3')
    nt.assert_equal(text, 'deg = 3\n')
    status, text = _run('hopf', 'corpus:hopf_map')
    nt.assert_equal(status, 0)
    nt.assert_equal(text, 'H = 1\ncochain formula: 1\n')


def test_form():
    status, result = _structured('form', 'corpus:s2xs2')
    nt.assert_equal(status, 0)
    nt.assert_equal(result['matrix'], [[0, 1], [1, 0]])
    nt.assert_true(result['unimodular'])
    nt.assert_equal(result['signature'], 0)
    status, result = _structured('form', 'corpus:cp2')
    nt.assert_equal(result['matrix'], [[1]])
    nt.assert_equal(result['signature'], 1)


def test_cup_and_sq():
    status, result = _structured('cup', 'corpus:torus', '1:1', '1:0,1')
    nt.assert_equal(status, 0)
    nt.assert_equal(abs(result['product']['coordinates'][0]), 1)
    nt.assert_equal(result['x']['coordinates'], [1, 0])
    status, text = _run('sq', '2', 'corpus:cp2', '--class', 'h')
    nt.assert_equal(status, 0)
    nt.assert_true(text.rstrip().endswith('(nonzero)'))
    status, result = _structured('sq', '1', 'corpus:rp2', '1:1')
    nt.assert_false(result['square']['zero'])
    nt.assert_equal(result['square']['coefficient'], 'Z2')


def test_thom():
    status, result = _structured('thom', 'corpus:thom_e1', '-n', '4')
    nt.assert_equal(status, 0)
    nt.assert_equal(result['e'], 1)
    nt.assert_equal(result['squares'], [0, 1, 4, 9, 16])
    status, text = _run('thom', 'corpus:thom_w2_1')
    nt.assert_equal(text, 'Sq^2 tau = 1 [DN]\n')


def test_verify_status():
    nt.assert_equal(_run('verify',
                         helpers.get_data_file('prop1_pass.json'))[0], 0)
    nt.assert_equal(_run('verify',
                         helpers.get_data_file('prop1_inconsistent.json'))[0],
                    1)
    nt.assert_equal(_run('verify', helpers.get_data_file('su3_fail.json'))[0],
                    1)
    nt.assert_equal(_run('verify',
                         helpers.get_data_file('truncated.json'))[0], 2)
    nt.assert_equal(_run('verify',
                         helpers.get_data_file('su3_nonbinary.json'))[0], 2)
    nt.assert_equal(_run('verify', 'corpus:s2')[0], 2)


def test_verify_many_scenarios():
    names = ['corpus:prop1_substitution', 'corpus:prop2_odd',
             'corpus:cp2_a2', 'corpus:prop2_missing_index']
    status, result = _structured('verify', *names)
    nt.assert_equal(status, 1)
    nt.assert_equal([r['passed'] for r in result],
                    [True, True, True, False])
    nt.assert_equal(result[1]['identity'], 'prop2')
    status, text = _run('verify', '-j', '4', *names[:3])
    nt.assert_equal(status, 0)
    nt.assert_equal(text.count('result: PASS'), 3)


def test_output_is_deterministic():
    args = ('verify', 'corpus:cp2_a3', 'corpus:prop1_two_surfaces',
            '--format', 'structured')
    first, second = _run(*args), _run(*args)
    nt.assert_equal(first, second)
    nt.assert_equal(first[0], 0)


def test_corpus_commands():
    status, rows = _structured('corpus', 'list')
    nt.assert_equal(status, 0)
    ids = [row['id'] for row in rows]
    nt.assert_true('cp2' in ids and 'hopf_map' in ids)
    status, rows = _structured('corpus', 'check', 's1', 'rp2', 'double_wrap')
    nt.assert_equal(status, 0)
    nt.assert_equal([row['id'] for row in rows], ['s1', 'rp2', 'double_wrap'])
    nt.assert_true(all(row['status'] == 'ok' for row in rows))


def test_input_errors():
    nt.assert_equal(_run('homology', 'corpus:no_such_space')[0], 2)
    nt.assert_equal(_run('homology',
                         helpers.get_data_file('malformed.json'))[0], 2)
    nt.assert_equal(_run('homology', 'corpus:cp2', '-c', 'z4')[0], 2)
    nt.assert_equal(_run('degree', 'corpus:cp2')[0], 2)
    nt.assert_equal(_run('degree', helpers.get_data_file('bad_map.json'))[0],
                    2)
    nt.assert_equal(_run('sq', '2', 'corpus:cp2', 'two:one')[0], 2)
    nt.assert_equal(_run('homology', 'corpus:cp2', '-f', 'yaml')[0], 2)
    nt.assert_equal(_run('homology', 'no_such_file.json')[0], 2)
    nt.assert_equal(cli.main(['transmogrify']), 2)

"""Fixtures, scratch files and command line runs for obstruct unit tests.
"""
from __future__ import print_function, absolute_import, division
import atexit
from contextlib import contextmanager
import json
import os
from os import path
import shutil
import tempfile

from pkg_resources import resource_filename, Requirement, ResolutionError

from obstruct import cli


def get_data_file(filename):
    filepath = None
    try:
        filepath = resource_filename(Requirement.parse("obstruct"),
                                     "obstruct/tests/data/" + filename)
    except ResolutionError:
        pass
    if not filepath or not path.isfile(filepath):
        filepath = path.join(path.dirname(__file__), 'data', filename)
    return filepath


TEMP_DIRECTORIES = []


def get_temp_dir():
    tempdir = tempfile.mkdtemp(prefix='obstruct-test-')
    TEMP_DIRECTORIES.append(tempdir)
    return tempdir


def write_temp_file(filename, text, tempdir=None):
    '''Write ``text`` to a fresh scratch file and return its path.'''
    filepath = path.join(tempdir or get_temp_dir(), filename)
    with open(filepath, 'w') as fh:
        fh.write(text)
    return filepath


@contextmanager
def datadir(tempdir):
    '''Point OBSTRUCT_DATADIR at ``tempdir`` for the duration.'''
    saved = os.environ.get('OBSTRUCT_DATADIR')
    os.environ['OBSTRUCT_DATADIR'] = tempdir
    try:
        yield tempdir
    finally:
        if saved is None:
            del os.environ['OBSTRUCT_DATADIR']
        else:
            os.environ['OBSTRUCT_DATADIR'] = saved


def run_cli(*argv):
    '''Run the command line with --out; returns (status, output).

    output is None when the command wrote nothing.
    '''
    out = path.join(get_temp_dir(), 'out.txt')
    status = cli.main(list(argv) + ['--out', out])
    try:
        with open(out) as fh:
            return status, fh.read()
    except IOError:
        return status, None


def run_cli_structured(*argv):
    status, text = run_cli(*(argv + ('--format', 'structured')))
    return status, json.loads(text) if text else None


@atexit.register
def cleanup():
    while TEMP_DIRECTORIES:
        shutil.rmtree(TEMP_DIRECTORIES.pop(), ignore_errors=True)

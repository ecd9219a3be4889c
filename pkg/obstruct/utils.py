from collections import OrderedDict
import hashlib
import logging
import os
from os import path
import sys
import threading

from six.moves.configparser import ConfigParser


LOG = None
LOGLEVEL = logging.WARNING

PACKAGE_DATA = path.join(path.dirname(__file__), 'data')


def get_config():
    '''Returns a dict of config options from the config file'''
    cfgparse = ConfigParser()
    cfgparse.read(['.obstructrc', path.expanduser('~/.obstructrc')])
    config = cfgparse.defaults()
    local = os.environ.get('VIRTUAL_ENV', path.expanduser('~/.local/'))
    datadir = config.get('datadir', path.join(local, 'var', 'obstruct'))
    datadir = os.environ.get('OBSTRUCT_DATADIR', datadir)

    return {
        "datadir": datadir,
        "loglevel": config.get('loglevel', 'WARNING').upper(),
        "cupi_samples": int(config.get('cupi_samples', 1000)),
        "seed": int(config.get('seed', 0)),
        "cache_size": int(config.get('cache_size', 4096)),
    }


def get_data_dir():
    '''
    Find the user corpus directory under either the current virtualenv
    directory, falling back on '~/.local' if we're not in a virtualenv.
    The directory need not exist.
    '''
    return path.expanduser(get_config()["datadir"])


def get_data_file(filename):
    '''Get a data file from the user data dir, or the shipped package data'''
    user = path.join(get_data_dir(), filename)
    if path.isfile(user):
        return user
    return path.join(PACKAGE_DATA, filename)


def init_logger(name='obstruct', quiet=False, level=None):
    log = logging.getLogger(name)
    if level is None:
        level = getattr(logging, get_config()["loglevel"], LOGLEVEL)
    log.setLevel(level)

    if not quiet:
        stderr = logging.StreamHandler(stream=sys.stderr)
        stderr.setLevel(logging.DEBUG)
        stderr.setFormatter(logging.Formatter('%(name)s: %(message)s'))
        log.addHandler(stderr)

    return log


def get_logger(quiet=False, level=None):
    global LOG
    if not LOG:
        LOG = init_logger('obstruct', quiet, level)
    return LOG


def set_verbosity(verbose=False, quiet=False):
    log = get_logger()
    if quiet:
        log.setLevel(logging.CRITICAL)
    elif verbose:
        log.setLevel(logging.DEBUG)


def md5sum(filename):
    h = hashlib.md5()
    with open(filename, 'rb') as fh:
        while True:
            chunk = fh.read(1048576)
            h.update(chunk)
            if not chunk:
                break
    return h.hexdigest()


class BoundedCache(object):
    '''A thread-safe mapping that drops its least recently used entries
    once it holds more than ``size`` of them.

    ``size`` defaults to the ``cache_size`` config option.
    '''

    def __init__(self, size=None):
        self._size = size
        self._data = OrderedDict()
        self._lock = threading.Lock()

    @property
    def size(self):
        if self._size is None:
            self._size = get_config()["cache_size"]
        return self._size

    def get(self, key):
        with self._lock:
            value = self._data.pop(key, None)
            if value is not None:
                self._data[key] = value
            return value

    def setdefault(self, key, value):
        '''Store ``value`` unless ``key`` is present; return the stored
        value.'''
        with self._lock:
            value = self._data.pop(key, value)
            self._data[key] = value
            while len(self._data) > max(self.size, 1):
                self._data.popitem(last=False)
            return value

    def clear(self):
        with self._lock:
            self._data.clear()

    def __contains__(self, key):
        with self._lock:
            return key in self._data

    def __len__(self):
        return len(self._data)

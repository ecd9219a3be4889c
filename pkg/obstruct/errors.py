"""
Exceptions raised by obstruct.

Everything derives from a builtin so callers that only know about
``ValueError`` (or ``KeyError``) keep working.
"""

from __future__ import absolute_import, division, print_function


class ObstructError(ValueError):
    '''Base class for invalid input handed to obstruct.'''


class MalformedSimplexError(ObstructError):
    pass


class DimensionError(ObstructError):
    pass


class MapValidationError(ObstructError):
    pass


class ShapeError(ObstructError):
    pass


class PairValidationError(ObstructError):
    pass


class DegreeUndefinedError(ObstructError):
    pass


class ModelError(ObstructError):
    '''A corpus model or Thom model failed one of its invariants.'''


class ParameterError(ObstructError):
    pass


class ScenarioError(ObstructError):
    '''A defect scenario is malformed or inconsistent with its profile.'''


class FormatError(ObstructError):
    '''A structured-text input file could not be parsed.'''


class UnsupportedProfileError(NotImplementedError):
    pass


class CorpusKeyError(KeyError):
    pass

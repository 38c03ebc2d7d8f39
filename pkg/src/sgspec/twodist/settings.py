# -*- coding: utf-8
"""
sgspec.twodist.settings: layered settings

The defaults are overridden by a settings file (or text), then by the
environment, then by explicit overrides (e.g. from command line flags):

>>> s = load_settings(text='search.jobs = 2', environ={'SGSPEC_MAX_N': '7'},
...                   **{'search.witness_limit': 3, 'search.jobs': None})
>>> s.get('search.max_n'), s.get('search.jobs'), s.get('search.witness_limit')
(7, 2, 3)
>>> s.get('limits.wall_clock'), s.get('codes.tolerance')
(3600.0, 1e-06)
>>> s['search']['shard_depth']
4

Environment values are checked like any other:

>>> load_settings(environ={'SGSPEC_MAX_N': '11'})
Traceback (most recent call last):
  ...
ValueError: SGSPEC_MAX_N: Integer in 1..10 expected; found '11'!
>>> load_settings(environ={}, **{'search.depth': 3})
Traceback (most recent call last):
  ...
TypeError: Found unsupported option(s)! ('search.depth')
"""

# Python compatibility:
from __future__ import absolute_import

from six import string_types

# Standard library:
import os
import time

# Local imports:
from sgspec.twodist import PROJECTNAME
from sgspec.twodist._configkeys import _factories
from sgspec.twodist.convert import parse_configuration
from sgspec.twodist.defaults import ENVIRONMENT, default_settings_text

# Logging / Debugging:
import logging

__all__ = [
    'Settings',
    'load_settings',
    ]

logger = logging.getLogger(PROJECTNAME + ': settings')


class Settings(dict):
    """
    The nested settings dict, with dotted access

    >>> s = Settings({'search': {'jobs': 2}})
    >>> s.get('search.jobs'), s.get('search.max_n'), s.get('codes.x', 0)
    (2, None, 0)
    >>> s.get('search')
    {'jobs': 2}
    """

    def get(self, key, default=None):
        section, dot, name = key.partition('.')
        if not dot:
            return dict.get(self, key, default)
        return dict.get(self, section, {}).get(name, default)

    def set(self, key, value):
        section, name = key.split('.')
        self.setdefault(section, {})[name] = value

    def search_options(self):
        """
        The options for the search functions

        >>> sorted(load_settings(environ={}).search_options().items())
        [('jobs', 1), ('shard_depth', 4), ('witness_limit', 5)]
        """
        return {
            'jobs': self.get('search.jobs'),
            'shard_depth': self.get('search.shard_depth'),
            'witness_limit': self.get('search.witness_limit'),
            }

    def deadline(self, start=None):
        """
        The absolute wall clock deadline, or None

        >>> Settings({'limits': {'wall_clock': 10}}).deadline(start=100)
        110
        >>> Settings({'limits': {'wall_clock': None}}).deadline() is None
        True
        """
        seconds = self.get('limits.wall_clock')
        if seconds is None:
            return None
        if start is None:
            start = time.time()
        return start + seconds


def _factory(key):
    return _factories[tuple(key.split('.'))]


def load_settings(file=None, text=None, environ=None, **overrides):
    """
    Return the Settings; see the module docstring.

    file may be a file name or a readable file object.
    """
    invalid = set([key for key in overrides
                   if tuple(key.split('.')) not in _factories
                   or '.' not in key])
    if invalid:
        raise TypeError('Found unsupported option(s)! (%r)'
                        % (sorted(invalid)[0],))
    config = Settings()
    parse_configuration(default_settings_text, config=config)
    if file is not None:
        if isinstance(file, string_types):
            logger.debug('reading settings file %s', file)
            with open(file) as fo:
                parse_configuration(file=fo, config=config)
        else:
            parse_configuration(file=file, config=config)
    if text:
        parse_configuration(text, config=config)
    if environ is None:
        environ = os.environ
    for var, key in ENVIRONMENT.items():
        val = environ.get(var)
        if val is None or not val.strip():
            continue
        try:
            config.set(key, _factory(key)(val))
        except ValueError as e:
            raise ValueError('%(var)s: %(e)s' % locals())
        logger.debug('%s from %s: %r', key, var, config.get(key))
    for key, val in sorted(overrides.items()):
        if val is None:
            continue
        try:
            config.set(key, _factory(key)(val))
        except ValueError as e:
            raise ValueError('%(key)s: %(e)s' % locals())
    return config


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()

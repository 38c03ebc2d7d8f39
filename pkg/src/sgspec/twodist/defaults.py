# -*- coding: utf-8
"""
sgspec.twodist.defaults: default settings

>>> print(default_settings_text)              # doctest: +NORMALIZE_WHITESPACE
search = {max_n: 8, jobs: 1, shard_depth: 4, witness_limit: 5}
limits = {wall_clock: 3600, arena_mib: 4096}
codes = {tolerance: 1e-06}
"""

# Python compatibility:
from __future__ import absolute_import

# Standard library:
from collections import OrderedDict

__all__ = [
    'DEFAULTS',
    'ENVIRONMENT',
    'default_settings_text',
    ]

DEFAULTS = OrderedDict([
    ('search', OrderedDict([
        ('max_n', 8),
        ('jobs', 1),
        ('shard_depth', 4),
        ('witness_limit', 5),
        ])),
    ('limits', OrderedDict([
        ('wall_clock', 3600),
        ('arena_mib', 4096),
        ])),
    ('codes', OrderedDict([
        ('tolerance', 1e-6),
        ])),
    ])

# environment variable -> settings key
ENVIRONMENT = OrderedDict([
    ('SGSPEC_MAX_N', 'search.max_n'),
    ('SGSPEC_JOBS', 'search.jobs'),
    ('SGSPEC_WALL_CLOCK', 'limits.wall_clock'),
    ])

default_settings_text = '\n'.join([
    '%s = {%s}' % (section,
                   ', '.join(['%s: %r' % item for item in values.items()]))
    for section, values in DEFAULTS.items()
    ])


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()

# -*- coding: utf-8
"""
sgspec.twodist.symbols: symbolic values of the settings language

>>> SIMPLE_SYMBOLS['yes'], SIMPLE_SYMBOLS['off'], SIMPLE_SYMBOLS['unlimited']
(True, False, None)
"""

# Python compatibility:
from __future__ import absolute_import

__all__ = [
    'SIMPLE_SYMBOLS',
    ]

# keys are lowercase; lookups are case insensitive
SIMPLE_SYMBOLS = {}
for val, keys in [
        (True,  ('true',  'on', 'yes')),
        (False, ('false', 'off', 'no')),
        (None,  ('none',  'null', 'nothing', 'nil', 'unlimited')),
        ]:
    for key in keys:
        SIMPLE_SYMBOLS[key] = val
del val, keys, key

if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()

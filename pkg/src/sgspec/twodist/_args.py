# -*- coding: utf-8
"""
sgspec.twodist._args: input options evaluation

(helper function for the settings parser and the number grammar)
"""

# Python compatibility:
from __future__ import absolute_import

from six import string_types as six_string_types

__all__ = [
    'extract_input_specs',
    ]


def extract_input_specs(args, kw):
    """
    Pop the input specification from the given options; returns a dict.

    We expect a `text` or a `file` named option (the latter a readable file
    object); if neither one is given, the first positional option is tried,
    which must be a string.

    >>> eis = extract_input_specs
    >>> eis([], {'text': 'search.jobs = 2'})
    {'text': 'search.jobs = 2'}
    >>> eis(('sqrt(3)',), {})
    {'text': 'sqrt(3)'}
    >>> eis([], {'text': 'search.jobs = 2', 'file': '<some file>'})
    Traceback (most recent call last):
      ...
    TypeError: Specified both a text and a file!
    >>> eis((), {})
    Traceback (most recent call last):
      ...
    TypeError: Please specify a text or a file!
    >>> eis((3,), {})
    Traceback (most recent call last):
      ...
    TypeError: As positional input, we expect text; found <class 'int'>!

    A settings file may be empty, and a missing settings text is the same:
    >>> eis((None,), {})
    {'text': ''}

    Other options are left in place:
    >>> kw = {'text': '1/2', 'unused': []}
    >>> eis((), kw)
    {'text': '1/2'}
    >>> kw
    {'unused': []}
    >>> eis(('1/2', '3'), {})
    Traceback (most recent call last):
      ...
    TypeError: Superfluous unnamed option(s)! ['3']
    """
    if not isinstance(kw, dict):
        raise TypeError('dict expected; got %s!' % (type(kw),))
    res = {}
    pop = kw.pop
    val = pop('text', None)
    if val is not None:
        res['text'] = val
    val = pop('file', None)
    if val is not None:
        if res:
            raise TypeError('Specified both a text and a file!')
        res['file'] = val
    args = list(args)
    if res:
        if args:
            raise TypeError('Unsupported unnamed option(s)!')
        return res
    if not args:
        raise TypeError('Please specify a text or a file!')
    val = args.pop(0)
    if val is None:
        res['text'] = ''
    elif isinstance(val, six_string_types):
        res['text'] = val
    else:
        raise TypeError('As positional input, we expect text; found %s!'
                        % (type(val),))
    if args:
        raise TypeError('Superfluous unnamed option(s)! %r' % (args[:3],))
    return res


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()

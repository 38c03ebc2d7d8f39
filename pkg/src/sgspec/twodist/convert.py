# -*- coding: utf-8
"""
sgspec.twodist.convert: convert a textual settings specification to a dict
"""

# Python compatibility:
from __future__ import absolute_import

# Standard library:
from ast import literal_eval
from tokenize import NAME, STRING

# visaplan:
from visaplan.tools.sequences import sequence_slide

# Local imports:
from sgspec.twodist._args import extract_input_specs
from sgspec.twodist._configkeys import _factories
from sgspec.twodist.parse import generate_statements
from sgspec.twodist.symbols import SIMPLE_SYMBOLS

# ... for doctests:
from sgspec.twodist._tokensgroup import generate_token_groups

__all__ = [
    'parse_configuration',  # (**named options)
    # Toolset for own conversions:
    'update_settings_dict',  # ...(config, statement)
    'resolve_value',         # ...(list of TokensGroups)
    ]


def parse_configuration(*args, **kwargs):
    """
    Parse a textual settings specification and return or modify a nested
    settings dictionary.

    >>> parse_configuration('search.max_n = 7')
    {'search': {'max_n': 7}}
    >>> parse_configuration('''
    ... search = {jobs: 4,
    ...           witness_limit: 2,
    ...           }
    ... limits.wall_clock = unlimited
    ... ''')                                  # doctest: +NORMALIZE_WHITESPACE
    {'search': {'jobs': 4, 'witness_limit': 2},
     'limits': {'wall_clock': None}}
    >>> parse_configuration('')
    {}

    A given config dict is updated in place:

    >>> config = {'search': {'max_n': 8, 'jobs': 1}}
    >>> parse_configuration('search.jobs = 2', config=config)
    >>> config
    {'search': {'max_n': 8, 'jobs': 2}}

    Values are checked by the factory registered for the key:

    >>> parse_configuration('search.max_n = 12')
    Traceback (most recent call last):
      ...
    ValueError: search.max_n: Integer in 1..10 expected; found 12!
    >>> parse_configuration('search.depth = 3')
    Traceback (most recent call last):
      ...
    ValueError: Unknown setting 'search.depth'!

    Statements which are not assignments are an error, unless an `unused`
    list is given to collect them:

    >>> txt = '''strict on
    ... codes.tolerance = 1e-9
    ... '''
    >>> parse_configuration(txt)
    Traceback (most recent call last):
      ...
    ValueError: Found 1 unsupported statement(s) (strict on)
    >>> unused = []
    >>> parse_configuration(txt, unused=unused)
    {'codes': {'tolerance': 1e-09}}
    >>> unused
    [<Statement (strict on)>]

    A `convert` function bool <= f(statement, config) is tried first for
    each statement:

    >>> parse_configuration('', convert=42)   # doctest: +NORMALIZE_WHITESPACE
    Traceback (most recent call last):
      ...
    ValueError: 'convert' option must be some function
        bool <= f(statement, config); found <class 'int'>!
    >>> parse_configuration('', no_unused=False)
    Traceback (most recent call last):
      ...
    TypeError: Found unsupported option(s)! ('no_unused')
    """
    input_specs = extract_input_specs(args, kwargs)
    inspect_parse_specs(kwargs)  # all are keyword-only

    config = kwargs['config']
    unused = kwargs['unused']
    convert = kwargs['convert']
    for stmt in generate_statements(**input_specs):
        if convert is not None and convert(stmt, config):
            continue
        elif not stmt.is_assignment:
            unused.append(stmt)
        else:
            update_settings_dict(config, stmt)

    if unused and kwargs['no_unused']:
        cnt = len(unused)
        first = unused[0]
        more = cnt > 1 and ' (...)' or ''
        raise ValueError('Found %(cnt)d unsupported statement(s) '
                         '(%(first)s%(more)s)'
                         % locals())
    if kwargs['return_configuration']:
        return config


def inspect_parse_specs(kw):
    """
    Helper: Evaluate named options for the parse_configuration function above

    >>> kw = {}
    >>> inspect_parse_specs(kw)
    >>> sorted(kw.items())                    # doctest: +NORMALIZE_WHITESPACE
    [('config', {}),
     ('convert', None),
     ('no_unused', True),
     ('return_configuration', True),
     ('unused', [])]

    If a config dict is given, it is not returned but modified in-place:
    >>> kw = {'config': {'search': {}}}
    >>> inspect_parse_specs(kw)
    >>> kw['return_configuration']
    False
    >>> inspect_parse_specs({'config': []})
    Traceback (most recent call last):
      ...
    ValueError: config structure must be a dict; found <class 'list'>!
    """
    upd = {'return_configuration': 'config' not in kw}
    val = kw.setdefault('config', {})
    if not isinstance(val, dict):
        raise ValueError('config structure must be a dict; found %s!'
                         % (type(val),))

    # unused: a list to collect the statements which are no assignments;
    # if not given, we consider such statements an error.
    upd['no_unused'] = no_unused = 'unused' not in kw
    if no_unused:
        kw['unused'] = []
    elif not isinstance(kw['unused'], list):
        raise ValueError("'unused' option must be some list; found %s!"
                         % (type(kw['unused']),))

    val = kw.setdefault('convert', None)
    if val is not None and not callable(val):
        raise ValueError("'convert' option must be some function"
                         ' bool <= f(statement, config);'
                         ' found %s!'
                         % (type(val),))
    valid_options = set(['config', 'convert', 'unused'])
    invalid = set(kw) - valid_options
    if invalid:
        raise TypeError('Found unsupported option(s)! (%r)'
                        % (sorted(invalid)[0],))
    kw.update(upd)


def checked_settings_dest(tg):
    """
    Take the TokensGroup of an assignment target and return a
    (section, key, factory) tuple; key is None for a whole section.

    >>> def f(txt):
    ...     return checked_settings_dest(list(generate_token_groups(txt))[0])
    >>> f('search')
    ('search', None, <class 'dict'>)
    >>> f('search.jobs')[:2]
    ('search', 'jobs')
    >>> f('search.jobs.max')
    Traceback (most recent call last):
      ...
    ValueError: Invalid assignment destination <NAME search.jobs.max>: too many levels!
    """
    names = tg.names_list
    if not names:
        raise ValueError('Invalid assignment destination %(tg)r!' % locals())
    if names[2:]:
        raise ValueError('Invalid assignment destination %(tg)r: '
                         'too many levels!'
                         % locals())
    keys = tuple(names)
    if keys not in _factories:
        raise ValueError('Unknown setting %r!' % ('.'.join(names),))
    factory = _factories[keys]
    if len(keys) == 1:
        return (keys[0], None, factory)
    return (keys[0], keys[1], factory)


def resolve_value(groups):
    """
    Resolve the value of a list of TokensGroups to some Python value.

    >>> def f(txt):
    ...     return resolve_value([grp for grp in generate_token_groups(txt)
    ...                           if not grp.is_terminator])

    Numbers, with an optional sign:
    >>> f('42'), f('-3'), f('1e-6'), f('0.5')
    (42, -3, 1e-06, 0.5)

    Simple (case insensitive) symbols:
    >>> f('OFF'), f('Yes'), f('unlimited')
    (False, True, None)
    >>> f('"some string"')
    'some string'
    >>> f('max_n')
    Traceback (most recent call last):
      ...
    ValueError: <NAME max_n>: No known symbol!
    >>> f('4 2')
    Traceback (most recent call last):
      ...
    ValueError: Single value expected; found [<NUMBER 4>, <NUMBER 2>]!
    """
    sign = 1
    if groups[1:] and (groups[0].is_op('-') or groups[0].is_op('+')):
        if groups[0].is_op('-'):
            sign = -1
        groups = groups[1:]
        if not groups[0].is_number:
            raise ValueError('Number expected after sign; found %r!'
                             % (groups[0],))
    if len(groups) != 1:
        raise ValueError('Single value expected; found %(groups)r!'
                         % locals())
    tg = groups[0]
    if tg.is_number:
        txt = tg.text
        if set(txt.lower()) & set('.e') and not txt.lower().startswith('0x'):
            return sign * float(txt)
        return sign * int(txt, 0)
    elif tg.ttype == NAME:
        ltxt = tg.dotted_name.lower()
        if ltxt in SIMPLE_SYMBOLS:
            return SIMPLE_SYMBOLS[ltxt]
        raise ValueError('%(tg)r: No known symbol!' % locals())
    elif tg.ttype == STRING:
        return literal_eval(tg.text)
    raise ValueError("Don't know how to use the value %(tg)r!" % locals())


def _checked_value(section, key, factory, groups):
    try:
        return factory(resolve_value(groups))
    except ValueError as e:
        raise ValueError('%(section)s.%(key)s: %(e)s' % locals())


def _section_items(statement, groups):
    """
    Generate (name, value groups) pairs from {name: value, ...}
    """
    if not groups[0].is_op('{') or not groups[-1].is_op('}'):
        raise ValueError('%(statement)r: {name: value, ...} expected!'
                         % locals())
    name = None
    buf = None
    for prev_tg, tg, next_tg in sequence_slide(groups[1:-1]):
        if name is None:
            if tg.ttype != NAME or next_tg is None or not next_tg.is_op(':'):
                raise ValueError('%(statement)r: %(tg)r: expected a name'
                                 ' and a colon!'
                                 % locals())
            name = tg.dotted_name
            buf = None
        elif buf is None:
            assert tg.is_op(':')
            buf = []
        elif tg.is_op(','):
            if not buf:
                raise ValueError('%(statement)r: no value for %(name)r!'
                                 % locals())
            yield name, buf
            name = None
        else:
            buf.append(tg)
    if name is not None:
        if not buf:
            raise ValueError('%(statement)r: no value for %(name)r!'
                             % locals())
        yield name, buf


def update_settings_dict(config, statement):
    """
    Use the given assignment statement to apply changes to the config dict
    """
    if not statement.is_assignment:
        return False
    section, key, factory = checked_settings_dest(statement.target)
    groups = statement.value_groups
    subdict = config.setdefault(section, {})
    if key is not None:
        subdict[key] = _checked_value(section, key, factory, groups)
        return True
    for name, value_groups in _section_items(statement, groups):
        keys = (section, name)
        if keys not in _factories:
            raise ValueError('Unknown setting %r!' % ('.'.join(keys),))
        subdict[name] = _checked_value(section, name, _factories[keys],
                                       value_groups)
    return True


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()

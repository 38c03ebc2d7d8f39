# -*- coding: utf-8
"""
sgspec.twodist._statement: Statement class and generate_statements function

(helper class and generator for the .parse module)
"""

# Python compatibility:
from __future__ import absolute_import

# visaplan:
from visaplan.tools.sequences import sequence_slide

# Local imports:
from sgspec.twodist._args import extract_input_specs
from sgspec.twodist._tokensgroup import generate_token_groups

__all__ = [
    'Statement',
    'generate_statements',
    ]


class Statement(list):
    """
    A settings statement: a list of TokensGroups, without the terminator

    >>> stmt = Statement([grp for grp in generate_token_groups('search.jobs=4')
    ...                   if not grp.is_terminator])
    >>> stmt
    <Statement (search.jobs = 4)>
    >>> stmt.is_assignment
    True
    >>> stmt.target
    <NAME search.jobs>
    >>> stmt.value_groups
    [<NUMBER 4>]

    >>> stmt = Statement([grp for grp in generate_token_groups('strict on')
    ...                   if not grp.is_terminator])
    >>> stmt.is_assignment
    False
    >>> stmt.value_groups
    """

    def __repr__(self):
        return '<Statement (%(self)s)>' % locals()

    @property
    def is_assignment(self):
        if not self[2:]:
            return False
        return self[0].is_dotted_name and self[1].is_op('=')

    @property
    def target(self):
        if not self.is_assignment:
            return None
        return self[0]

    @property
    def value_groups(self):
        if not self.is_assignment:
            return None
        return list(self[2:])

    def __str__(self):
        liz = []
        for prev_tg, current_tg, next_tg in sequence_slide(self):
            text = current_tg.text
            if current_tg.is_op('='):
                liz.append(' = ')
                continue
            liz.append(text)
            if next_tg is None:
                break
            if current_tg.is_op(',') or current_tg.is_op(':'):
                if not next_tg.closes_brace:
                    liz.append(' ')
            elif (not current_tg.opens_brace
                  and not next_tg.closes_brace
                  and not next_tg.is_op(',')
                  and not next_tg.is_op(':')
                  and not next_tg.is_op('=')
                  and current_tg.is_dotted_name
                  and next_tg.is_dotted_name):
                liz.append(' ')
        return ''.join(liz)


def generate_statements(*args, **kwargs):
    """
    Parse an input text and generate statements.

    >>> def lost(txt):
    ...     return list(generate_statements(txt))
    >>> lost('search.max_n = 8')
    [<Statement (search.max_n = 8)>]

    Statements are separated by newlines or semicolons; line breaks inside
    braces don't count:

    >>> lost('''# the search settings
    ... search.jobs = 2; search.max_n = 7
    ... limits = {
    ...     wall_clock: 60,  # seconds
    ...     arena_mib: 512,
    ... }
    ... strict on
    ... ''')                                  # doctest: +NORMALIZE_WHITESPACE
    [<Statement (search.jobs = 2)>,
     <Statement (search.max_n = 7)>,
     <Statement (limits = {wall_clock: 60, arena_mib: 512,})>,
     <Statement (strict on)>]

    >>> lost('; ;')
    []
    """
    input_specs = extract_input_specs(args, kwargs)
    buf = []
    for grp in generate_token_groups(**input_specs):
        if grp.is_terminator:
            if buf:
                yield Statement(buf)
                buf = []
            continue
        buf.append(grp)
    if buf:
        yield Statement(buf)


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()

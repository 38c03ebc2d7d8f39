# -*- coding: utf-8
"""
sgspec.twodist._tokensgroup: TokensGroup class

(helper class for the .parse module)
"""

# Python compatibility:
from __future__ import absolute_import

from six.moves import StringIO

# Standard library:
from collections import deque
from tokenize import NAME, OP, TokenError, generate_tokens, tok_name

# Local imports:
from sgspec.twodist._args import extract_input_specs
from sgspec.twodist._tokeninfo import TokenInfo

__all__ = [
    'TokensGroup',
    'generate_token_groups',
    ]


class TokensGroup(list):
    """
    A group of adjacent tokens which form a unit: a dotted name, a number,
    a string, a single operator, or a statement terminator

    >>> groups = [grp for grp in generate_token_groups('search.max_n = 8;')]
    >>> dn = groups[0]
    >>> dn
    <NAME search.max_n>
    >>> dn.is_dotted_name, dn.is_terminator
    (True, False)
    >>> dn.names_list
    ['search', 'max_n']
    >>> groups[1]
    <OP '='>
    >>> groups[1].is_dotted_name
    False
    >>> groups[2]
    <NUMBER 8>
    >>> groups[2].is_number
    True
    >>> groups[3]
    <OP ';'>
    >>> groups[3].is_terminator
    True
    >>> groups[3].names_list
    """

    @property
    def text(self):
        return ''.join([tok.text for tok in self])

    @property
    def ttype(self):
        """
        The token type of the group is the type of the first token
        """
        return self[0].ttype

    @property
    def tname(self):
        return tok_name[self.ttype]

    @property
    def opens_brace(self):
        return self[0].opens_brace

    @property
    def closes_brace(self):
        return self[0].closes_brace

    @property
    def expects_brace(self):
        """
        This will yield a KeyError if not .opens_brace!
        """
        return self[0].expects_brace

    @property
    def is_terminator(self):
        return self[0].is_terminator

    @property
    def is_number(self):
        return self[0].is_number

    def is_op(self, text):
        return self.ttype == OP and self.text == text

    def __repr__(self):
        if self.is_terminator:
            txt = self.text.strip()
            if txt:
                return '<%s %r>' % (self.tname, txt)
            return '<%s>' % (self.tname,)
        elif self.ttype == OP:
            return '<%s %r>' % (self.tname, self.text)
        return '<%s %s>' % (self.tname, self.text)

    @property
    def is_dotted_name(self):
        """
        Dotted names are used as assignment targets (search.max_n) and as
        symbols (on, off, none) or function names (sqrt)
        """
        return self.names_list is not None

    @property
    def names_list(self):
        if self.ttype != NAME:
            return None
        res = []
        for i, tok in enumerate(self):
            if i % 2:
                if tok.text != '.':
                    raise ValueError('Invalid dotted name %r: '
                                     'expected odd tokens to be dots; '
                                     'found %r!' % (self, tok.text))
            elif tok.ttype != NAME:
                raise ValueError('Invalid dotted name %r: '
                                 'expected even tokens to be names; '
                                 'found a %s %r!'
                                 % (self, tok.tname, tok.text))
            else:
                res.append(tok.text)
        return res

    @property
    def dotted_name(self):
        the_list = self.names_list
        if the_list is None:
            return None
        return '.'.join(the_list)


def _checked_tokens(tokens):
    try:
        for toktup in tokens:
            yield toktup
    except (TokenError, SyntaxError) as e:
        raise ValueError('Unparsable input: %s' % (e,))


def generate_token_groups(*args, **kwargs):
    """
    Generate the token groups of a settings or number text

    >>> def lotg(txt):  # list of token groups, terminators omitted
    ...     return [grp for grp in generate_token_groups(txt)
    ...             if not grp.is_terminator]

    >>> lotg('search.max_n = 8')
    [<NAME search.max_n>, <OP '='>, <NUMBER 8>]
    >>> lotg('''# the search settings
    ... search = {
    ...     jobs: 4,  # one per core
    ...     shard_depth: 4,
    ... }
    ... ''')                                  # doctest: +NORMALIZE_WHITESPACE
    [<NAME search>, <OP '='>, <OP '{'>,
     <NAME jobs>, <OP ':'>, <NUMBER 4>, <OP ','>,
     <NAME shard_depth>, <OP ':'>, <NUMBER 4>, <OP ','>,
     <OP '}'>]

    Numbers and names are never glued together:
    >>> lotg('(1+sqrt(33))/2')               # doctest: +NORMALIZE_WHITESPACE
    [<OP '('>, <NUMBER 1>, <OP '+'>, <NAME sqrt>, <OP '('>, <NUMBER 33>,
     <OP ')'>, <OP ')'>, <OP '/'>, <NUMBER 2>]

    Empty statements don't yield terminators:
    >>> [grp.is_terminator for grp in generate_token_groups('; ;a=1;b=2')
    ...  ].count(True)
    2
    >>> list(generate_token_groups(''))
    []

    Braces must match:
    >>> lotg('search = {jobs: 4)')      # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
      ...
    ValueError: Unexpected closing brace (OP ')'); expected '}'!
    >>> lotg('.max_n = 8')
    Traceback (most recent call last):
      ...
    ValueError: Can't start with a (OP '.')!
    """
    input_specs = extract_input_specs(args, kwargs)
    text = input_specs.get('text')
    if text is None:
        alltokens = generate_tokens(input_specs['file'].readline)
    elif not text.strip():
        return
    else:
        alltokens = generate_tokens(StringIO(text).readline)
    braces_stack = deque()
    buf = []
    follows_terminator = True
    for toktup in _checked_tokens(alltokens):
        ti = TokenInfo(toktup[:2])
        if ti.is_insignificant:
            continue
        if ti.is_terminator:
            if buf:
                yield TokensGroup(buf)
                buf = []
            if not follows_terminator:
                yield TokensGroup([ti])
            follows_terminator = True
            continue
        follows_terminator = False
        if ti.ttype == OP:
            if ti.text == '.':
                if not buf:
                    raise ValueError("Can't start with a %(ti)r!" % locals())
                elif buf[-1].ttype != NAME:
                    so_far = ''.join([tok.text for tok in buf])
                    raise ValueError("Won't accept a %(ti)r after %(so_far)r!"
                                     % locals())
                buf.append(ti)
                continue
            if ti.opens_brace:
                braces_stack.append(ti)
            elif ti.closes_brace:
                if not braces_stack:
                    raise ValueError('Found closing %(ti)r, '
                                     'but the braces stack is empty!'
                                     % locals())
                expected = braces_stack.pop().expects_brace
                if ti.text != expected:
                    raise ValueError('Unexpected closing brace %(ti)r; '
                                     'expected %(expected)r!'
                                     % locals())
            if buf:
                yield TokensGroup(buf)
                buf = []
            yield TokensGroup([ti])
        else:
            if buf and buf[-1].text != '.':
                yield TokensGroup(buf)
                buf = []
            buf.append(ti)

    if braces_stack:
        cnt = len(braces_stack)
        braces = ' '.join([ti.text for ti in braces_stack])
        raise ValueError('Found %(cnt)d unclosed brace(s)! (%(braces)r)'
                         % locals())
    if buf:
        yield TokensGroup(buf)


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()

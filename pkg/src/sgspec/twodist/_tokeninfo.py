# -*- coding: utf-8
"""
sgspec.twodist._tokeninfo: TokenInfo class

(helper class for the .parse module)
"""

# Python compatibility:
from __future__ import absolute_import

# Standard library:
from tokenize import (
    COMMENT,
    DEDENT,
    ENDMARKER,
    INDENT,
    NEWLINE,
    NL,
    NUMBER,
    OP,
    tok_name,
    )
# Used in doctests only:
from tokenize import NAME

__all__ = [
    'TokenInfo',
    ]

BRACES = {
    '{': '}',
    '(': ')',
    '[': ']',
    }
CLOSING_BRACES = frozenset(BRACES.values())


class TokenInfo(tuple):
    """
    A token, as generated by the tokenize.generate_tokens function
    (or at least its first two members: the type and the text)

    >>> name = TokenInfo((NAME, 'max_n'))
    >>> name
    (NAME max_n)
    >>> name.is_terminator, name.is_insignificant
    (False, False)

    Statements are terminated by semicolons and newlines:
    >>> semic = TokenInfo((OP, ';'))
    >>> semic
    (OP ';')
    >>> semic.is_terminator
    True
    >>> TokenInfo((NEWLINE, '\\n')).is_terminator
    True
    >>> TokenInfo((ENDMARKER, '')).is_terminator
    True

    Comments, blank lines and line breaks inside braces don't matter:
    >>> TokenInfo((COMMENT, '# jobs')).is_insignificant
    True
    >>> TokenInfo((NL, '\\n')).is_insignificant
    True

    >>> brace = TokenInfo((OP, '{'))
    >>> brace.opens_brace, brace.closes_brace, brace.expects_brace
    (True, False, '}')
    >>> TokenInfo((OP, ']')).closes_brace
    True
    >>> TokenInfo((OP, ']')).expects_brace
    Traceback (most recent call last):
      ...
    KeyError: ']'

    >>> TokenInfo((NUMBER, '1e-6'))
    (NUMBER 1e-6)
    """

    @property
    def text(self):
        return self[1]

    @property
    def ttype(self):
        return self[0]

    @property
    def tname(self):
        """
        The name of the token type, as given by the tok_name dict
        """
        return tok_name[self[0]]

    def __repr__(self):
        if self.is_terminator or self.is_insignificant:
            txt = self.text.strip()
            if txt:
                return '(%s %r)' % (self.tname, txt)
            return '(%s)' % (self.tname,)
        elif self.ttype == OP:
            return '(%s %r)' % (self.tname, self.text)
        return '(%s %s)' % (self.tname, self.text)

    @property
    def is_terminator(self):
        """
        Would this token terminate a statement?
        """
        ttype = self.ttype
        if ttype == OP:
            return self.text == ';'
        return ttype in (NEWLINE, ENDMARKER)

    @property
    def is_insignificant(self):
        return self.ttype in (COMMENT, NL, INDENT, DEDENT)

    @property
    def is_number(self):
        return self.ttype == NUMBER

    @property
    def opens_brace(self):
        return self.ttype == OP and self.text in BRACES

    @property
    def expects_brace(self):
        """
        This will yield a KeyError if not .opens_brace!
        """
        return BRACES[self.text]

    @property
    def closes_brace(self):
        return self.ttype == OP and self.text in CLOSING_BRACES


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()

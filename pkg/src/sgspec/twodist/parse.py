# -*- coding: utf-8
"""
sgspec.twodist.parse: tokenize-based parser for settings and number texts

This module publishes the parsing functionality, based on the Python standard
tokenize module; this includes two generators and three helper classes.

For the conversion to a settings dictionary, see the convert module;
for numbers and eigenvalue specifications, see the lambdaspec module.
"""

# Python compatibility:
from __future__ import absolute_import

# Local imports:
from sgspec.twodist._statement import Statement, generate_statements
from sgspec.twodist._tokeninfo import TokenInfo
from sgspec.twodist._tokensgroup import TokensGroup, generate_token_groups

__all__ = [
    'generate_statements',    # ./_statement.py
    # helper functions:
    'generate_token_groups',  # ./_tokensgroup.py
    # helper classes:
    'TokenInfo',              # ./_tokeninfo.py
    'TokensGroup',            # ./_tokensgroup.py
    'Statement',              # ./_statement.py
    ]

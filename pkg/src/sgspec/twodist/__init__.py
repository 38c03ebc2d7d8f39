"""
sgspec.twodist: exact spectral theory of signed graphs and spherical
two-distance sets
"""

PROJECTNAME = 'sgspec.twodist'

# unittest suites of sgspec.twodist; the doctests of the modules are
# collected by nose2 as well (see unittest.cfg)

# sgspec is a namespace package; the spectral tools live in sgspec.twodist.
# pkgutil-style namespaces are preferred nowadays, but pkg_resources keeps
# us compatible with older setuptools based installations.
try:
    __import__('pkg_resources').declare_namespace(__name__)
except ImportError:
    # Standard library:
    from pkgutil import extend_path
    __path__ = extend_path(__path__, __name__)

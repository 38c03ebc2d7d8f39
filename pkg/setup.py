# -*- coding: utf-8 -*- vim: et ts=8 sw=4 sts=4 si tw=79 cc=+1
"""Installer for the sgspec.twodist package."""
from __future__ import absolute_import
from __future__ import print_function

from setuptools import find_packages
from setuptools import setup
from os.path import isfile

package_name = 'sgspec.twodist'


# -------------------------------------------- [ get the version ... [
def read_version(fn, sfn):
    with open(fn) as fo:
        main = fo.read().strip()
    if sfn is not None and isfile(sfn):
        with open(sfn) as fo:
            suffix = valid_suffix(fo.read().strip())
    else:
        suffix = ''
    return main + suffix


def valid_suffix(suffix):
    """
    Enforce our suffix convention: .devN, .postN or rcN
    """
    suffix = suffix.strip()
    if not suffix:
        return suffix
    disallowed = set(suffix).difference(set('edv.0123456789rcpost'))
    if disallowed:
        disallowed = ''.join(sorted(disallowed))
        raise ValueError('Version suffix contains disallowed characters'
                         ' (%(disallowed)s)'
                         % locals())
    chunks = suffix.split('.')
    chunk = chunks.pop(0)
    if chunk and not chunk.startswith('rc'):
        raise ValueError('Version suffix must start with "." or "rc"'
                         ' (%(suffix)r)'
                         % locals())
    for chunk in chunks or [chunk]:
        if not chunk or chunk[-1] not in '0123456789':
            raise ValueError('Chunk %(chunk)r of version suffix %(suffix)r'
                             ' doesn\'t end with a digit'
                             % locals())
    return suffix


VERSION = read_version('VERSION',
                       'VERSION_SUFFIX')
# -------------------------------------------- ] ... get the version ]


# ------------------------------------------- [ for setup_kwargs ... [
long_description = '\n\n'.join([
    open('README.rst').read(),
    open('CONTRIBUTORS.rst').read(),
    open('CHANGES.rst').read(),
])

namespace = 'sgspec'
packages = find_packages('src')


def github_urls(package, user):
    base = 'https://github.com/%(user)s/%(package)s' % locals()
    return {
        'Documentation': 'https://pypi.org/project/%(package)s' % locals(),
        'Source': base,
        'Tracker': base + '/issues',
        }


project_urls = github_urls(package_name,
                           user='sgspec')
# ------------------------------------------- ] ... for setup_kwargs ]

setup_kwargs = dict(
    name=package_name,
    version=VERSION,
    description="Exact spectral tools for signed graphs and spherical"
                " two-distance sets",
    long_description=long_description,
    long_description_content_type='text/x-rst',
    classifiers=[
        "Environment :: Console",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent",
        "License :: OSI Approved :: MIT License",
    ],
    keywords='signed graphs, eigenvalue multiplicity, spherical codes',
    project_urls=project_urls,
    license='MIT License',
    packages=packages,
    namespace_packages=[namespace],
    package_dir={'': 'src'},
    include_package_data=True,
    zip_safe=False,
    python_requires='>=3.6',
    install_requires=[
        'setuptools',
        'six',
        'visaplan.tools<1.3.1',  # sequence_slide (later releases import string.strip, Py2-only)
        'numpy',
        'networkx',
        'pynauty',
    ],
    extras_require={
        'test': [
            'nose2',
        ],
    },
    entry_points="""
    [console_scripts]
    sgspec = sgspec.twodist.cli:main
    """,
)
setup(**setup_kwargs)

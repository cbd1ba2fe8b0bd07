#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import io
import os

from setuptools import find_packages, setup

NAME = 'lamsharing'
DESCRIPTION = 'Workbench for the sharing linear lambda-calculus and its embeddings.'
AUTHOR = 'The LamSharing developers'
REQUIRES_PYTHON = '>=3.7.0'
REQUIRED = ["numpy", "scipy>=0.15.0", "lark"]

here = os.path.abspath(os.path.dirname(__file__))

with io.open(os.path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = '\n{0}'.format(f.read())

# the version lives in lamsharing/__version__.py only
about = {}
with open(os.path.join(here, NAME, '__version__.py')) as f:
    exec(f.read(), about)


setup(
    name=NAME,
    version=about['__version__'],
    description=DESCRIPTION,
    long_description=long_description,
    author=AUTHOR,
    python_requires=REQUIRES_PYTHON,
    packages=find_packages(exclude=('tests',)),
    entry_points={
        'console_scripts': ['lamsharing=lamsharing.cli:main'],
    },
    install_requires=REQUIRED,
    include_package_data=True,
    license='LGPL',
    classifiers=[
        'License :: OSI Approved :: GNU Lesser General Public License v2 or later (LGPLv2+)',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: Implementation :: CPython',
    ],
)

#!/usr/bin/env python

from setuptools import setup

from fermbezzle import settings

INSTALL_REQUIRES = ['numpy>=1.22', 'scipy>=1.8', 'sympy>=1.9']

setup(
    name = "fermbezzle",
    version = settings.VERSION,

    packages = ['fermbezzle', 'fermbezzle.builtin', 'fermbezzle.core'],

    install_requires = INSTALL_REQUIRES,
    extras_require = {
        'test': ['pytest'],
    },
    python_requires = '>=3.8',

    entry_points = {
        'console_scripts': [
            'fermbezzle = fermbezzle.main:main',
        ],
    },

    # metadata for upload to PyPI
    author = "The fermbezzle developers",
    description = "Embezzlement and factor types of free-fermion chains.",
    license = "GPL",
    keywords = "free fermions block toeplitz embezzlement entanglement quasi-free states",
)

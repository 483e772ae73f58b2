"""Packaging of pyFleckLab.

Install with `pip install -e .[test]` and run the test suite with `pytest`.
"""

from setuptools import setup, find_packages
from codecs import open
from os import path

here = path.abspath(path.dirname(__file__))

# The README doubles as the long description
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='pyFleckLab',
    version='0.1.0',

    description='Exact Fleck quotients, their congruences and a verification harness',
    long_description=long_description,
    long_description_content_type='text/markdown',

    license='MIT',

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
    ],
    keywords='number theory binomial coefficients p-adic Bernoulli Stirling class number',

    packages=find_packages(exclude=['tests']),
    python_requires='>=3.8',

    # numpy holds residue tables, sympy answers primality questions,
    # joblib fans the verification suites out
    install_requires=['numpy', 'sympy', 'joblib'],

    # $ pip install -e .[test]
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },

    entry_points={
        'console_scripts': [
            'flecklab=pyFleckLab.cli:main',
        ],
    },
)

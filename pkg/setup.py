try:
    from setuptools import find_packages, setup
except ImportError:
    from distutils.core import setup, find_packages

import permshatter

permshatter_classifiers = [
    'Development Status :: 4 - Beta',
    'Operating System :: OS Independent',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3 :: Only',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: MIT License',
    'Topic :: Scientific/Engineering :: Mathematics',
    'Topic :: Software Development :: Libraries :: Python Modules',
]

with open('README.rst', 'r') as file:
    permshatter_long_description = file.read()

setup(
    name='permshatter',
    description=('Constructions, verifiers and adversaries for families of '
                 'permutations that partially shatter k-subsets.'),
    version=permshatter.__version__,
    packages=find_packages(exclude=['tests', 'tests.*']),
    license='MIT',
    long_description=permshatter_long_description,
    classifiers=permshatter_classifiers,
    python_requires='>=3.9',
    install_requires=['click>=8.0', 'numpy>=1.20', 'setuptools', 'tqdm'],
    extras_require={'test': ['flake8', 'hypothesis', 'isort', 'pytest']},
    entry_points={
        'console_scripts': ['permshatter=permshatter.cli.main:main'],
    },
)

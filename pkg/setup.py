#!/usr/bin/env python
from os import path
import re

from setuptools import setup
from setuptools.command.test import test as TestCommand


def get_version():
    init = path.join(path.dirname(__file__), "obstruct", "__init__.py")
    with open(init) as fh:
        return re.search(r"^__version__ = '([^']+)'", fh.read(),
                         re.M).group(1)


class NoseCommand(TestCommand):
    user_options = TestCommand.user_options + [
        ('fast', None, "skip the slow tests tagged 'instantiation'"),
    ]

    def initialize_options(self):
        TestCommand.initialize_options(self)
        self.fast = False

    def finalize_options(self):
        TestCommand.finalize_options(self)
        self.test_args = ['-a', '!instantiation'] if self.fast else []
        self.test_suite = True

    def run_tests(self):
        import nose
        nose.run_exit(argv=['nosetests'] + self.test_args)


desc = """
obstruct: simplicial cohomology, Steenrod squares and defect-index checks
"""

setup_requires = [
    'nose',
    'coverage',
]

install_requires = [
    'six',
    'docopt',
    'numpy',
    'pandas',
]

test_requires = [
    'pep8',
    'pylint',
]

setup(
    name="obstruct",
    packages=['obstruct', 'obstruct.tests', ],
    package_data={
        'obstruct': ['data/*.json', 'data/corpus.info'],
        'obstruct.tests': ['data/*.json'],
    },
    entry_points={
        'console_scripts': [
            'obstruct=obstruct.cli:entry',
        ],
    },
    version=get_version(),
    cmdclass={'test': NoseCommand},
    install_requires=install_requires,
    tests_require=test_requires,
    setup_requires=setup_requires,
    description=desc,
    keywords=[
        "algebraic topology",
        "cohomology",
        "obstruction theory",
        "simplicial complexes",
    ],
    classifiers=[
        "Programming Language :: Python",
        "Programming Language :: Python :: 2",
        "Programming Language :: Python :: 3",
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        ("License :: OSI Approved :: GNU Lesser General Public License v3 or "
         "later (LGPLv3+)"),
    ],
    test_suite="obstruct.tests",
)

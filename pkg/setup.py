#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""sdf_hyperideal_step
A SEAMM plug-in for checking sdf-absorbing hyperideals of small hyperrings
"""
import re
import sys
from setuptools import setup, find_packages

# from https://github.com/pytest-dev/pytest-runner#conditional-requirement
needs_pytest = {'pytest', 'test', 'ptr'}.intersection(sys.argv)
pytest_runner = ['pytest-runner'] if needs_pytest else []

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

with open('requirements.txt') as fd:
    requirements = fd.read()

with open('sdf_hyperideal_step/__init__.py') as fd:
    version = re.search(r"^__version__ = \"(.*)\"", fd.read(), re.M).group(1)

setup(
    name='sdf_hyperideal_step',
    author="Paul Saxe",
    author_email='psaxe@molssi.org',
    description=__doc__.splitlines()[1],
    long_description=readme + '\n\n' + history,
    long_description_content_type='text/x-rst',
    version=version,
    license="BSD-3-Clause",
    url='https://github.com/molssi-seamm/sdf_hyperideal_step',

    packages=find_packages(include=['sdf_hyperideal_step']),

    # The example rings and the default configuration file are listed in
    # MANIFEST.in
    include_package_data=True,
    package_data={'sdf_hyperideal_step': ['data/*.hr', 'data/*.ini']},

    # Allows `setup.py test` to work correctly with pytest
    setup_requires=[] + pytest_runner,

    install_requires=requirements,
    python_requires='>=3.9',

    test_suite='tests',

    platforms=['Linux',
               'Mac OS-X',
               'Unix',
               'Windows'],

    zip_safe=False,

    keywords=['SEAMM', 'SEAMMplugin', 'flowchart', 'hyperring', 'hyperideal'],
    classifiers=[
        'Environment :: Plugins',
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
    ],
    entry_points={
        'console_scripts': [
            'sdf-hyperideal = sdf_hyperideal_step.cli:main',
        ],
        'org.molssi.seamm': [
            'SDF Hyperideal = sdf_hyperideal_step:SdfHyperidealStep',
        ],
        'org.molssi.seamm.tk': [
            'SDF Hyperideal = sdf_hyperideal_step:SdfHyperidealStep',
        ],
    },
)

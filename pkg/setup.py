# Copyright 2020 The Multisegment Hecke Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Setup for the multisegment-hecke pip package."""

import io
import os

import setuptools

_HERE = os.path.abspath(os.path.dirname(__file__))

with io.open(os.path.join(_HERE, 'README.md'), encoding='utf-8') as f:
  long_description = f.read()

__version__ = '0.1.0'
REQUIRED_PACKAGES = [
    'absl-py >= 0.9.0',
    'attrs >= 20.1.0',
    'galois >= 0.3.0',
    'numpy >= 1.13.3',
]

setuptools.setup(
    name='multisegment-hecke',
    version=__version__,
    description=('Exact multisegment combinatorics and affine Hecke algebra '
                 'modules over prime fields.'),
    long_description=long_description,
    long_description_content_type='text/markdown',
    author='The Multisegment Hecke Authors',
    license='Apache 2.0',
    packages=setuptools.find_packages(exclude=['examples', 'examples.*']),
    python_requires='>=3.7',
    install_requires=REQUIRED_PACKAGES,
    entry_points={
        'console_scripts': [
            'multisegment_hecke=multisegment_hecke.cli.main:entry_point',
        ],
    },
    zip_safe=False,
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Operating System :: OS Independent',
    ],
    keywords='multisegment hecke algebra modular representation theory',
)

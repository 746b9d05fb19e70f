### Copyright 2024, Rubin Toolkit developers
###
### Licensed under the Apache License, Version 2.0 (the "License");
### you may not use this file except in compliance with the License.
### You may obtain a copy of the License at
###
###    http://www.apache.org/licenses/LICENSE-2.0
###
### Unless required by applicable law or agreed to in writing, software
### distributed under the License is distributed on an "AS IS" BASIS,
### WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
### See the License for the specific language governing permissions and
### limitations under the License.
#!/usr/bin/env -e python

import setuptools

setuptools.setup(
    name='Rubin-Toolkit',
    version='1.0.0',
    author='Rubin Toolkit developers',
    packages=[
        'rubin',
        'rubin.symbolic',
        'rubin.game',
        'rubin.cli',
        'rubin.plugins',
        'rubin.plugins.players',
    ],
    package_data={'rubin.cli': ['logging.yaml']},
    entry_points={
        'console_scripts': ['rubin = rubin.cli.main:main'],
    },
    license='LICENSE.txt',
    description='Algebraic disjointness, torsion-free word problems and '
                'the forcing game',
    long_description=open('README.txt').read(),
    python_requires='>=3.8',
    install_requires=[
        'Jinja2',
        'OCCO-Util',
        'networkx',
        'numpy',
        'pyparsing>=3',
        'ruamel.yaml',
        'sympy',
    ],
)

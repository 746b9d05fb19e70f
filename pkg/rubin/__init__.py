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

""" Computational group theory toolkit around algebraic disjointness.

The package is organized by engine:

- :mod:`rubin.permgroup` and :mod:`rubin.disjointness`: exact computations
  in finite permutation groups (centralizers, algebraic disjointness, the
  Rubin poset).
- :mod:`rubin.symbolic`: word problems in a grammar of torsion-free groups
  and the overgroup constructions verified with them.
- :mod:`rubin.game`: the two-player game over systems of equations and
  inequations, with witness groups and audits.
- :mod:`rubin.cli`: the command line front end.
"""

__version__ = '1.0.0'

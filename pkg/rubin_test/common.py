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

import os
import logging
import logging.config
import occo.util.config as config
import occo.util as util
from rubin.permgroup import preset, commutator

cfg = config.DefaultYAMLConfig(util.rel_to_file('test.yaml'))

logging.config.dictConfig(cfg.logging)

log = logging.getLogger('rubin.unittests')

slow = os.environ.get('RUBIN_SLOW_TESTS', '') not in ('', '0')

SMALL_GROUPS = ('trivial', 'S3', 'S4', 'A4', 'D4', 'C2xC2', 'C5xC5', 'C12')

def group(name):
    return preset(name)

def naive_disjoint(G, g, f):
    """Quadruple loop over the permutations themselves."""
    e = commutator(g, g)
    C = [x for x in G.elements if x * g == g * x]
    for h in G.elements:
        if h * f == f * h:
            continue
        if not any(commutator(a, commutator(b, h)) != e and
                   commutator(a, commutator(b, h)) * g ==
                   g * commutator(a, commutator(b, h))
                   for a in C for b in C):
            return False
    return True

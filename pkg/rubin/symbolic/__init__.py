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

""" Word problems in torsion-free group expressions.

.. autoclass:: rubin.symbolic.nodes.GroupExpr
    :members:
"""

from rubin.symbolic.words import SymWord, reduce_free, commutator
from rubin.symbolic.nodes import (GroupExpr, MembershipAnswer, NOT_MEMBER,
                                  member, FreeGroup, FreeAbelian,
                                  DirectProduct, FreeProduct, AmalgamCyclic,
                                  SemidirectByInvolution, AffineBS, Subgroup,
                                  RightAngledArtin)

def is_identity(expr, w):
    """Whether ``w`` represents the identity of ``expr``."""
    return expr.is_identity(w)

def cyclic_membership(expr, x, c):
    """Whether ``x`` is a power of ``c`` in ``expr``."""
    return expr.cyclic_membership(x, c)

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

""" Bounded forcing over the played conditions.

A condition is *forced* when it holds (or fails) in every torsion-free
group satisfying the played conditions. Deciding this is impossible in
general; :class:`ForcingClosure` answers soundly and leaves the rest
:attr:`Forcing.OPEN`:

1. Names are merged by a union-find when an equation forces them equal
   (``x y^-1 = 1``) or trivial (``x^k = 1``). Equations are taken up to
   conjugation and proper powers (``v^k = 1`` gives ``v = 1`` in a
   torsion-free group), so merging runs to a fixpoint.
2. Equations that are commutators of two names become edges of a
   partially commutative presentation on the merged names.
3. The remaining equations are relators. A word is forced trivial when its
   normal form is trivial, or when its cyclic core is a cyclic permutation
   of a relator (or of its inverse). Only relators up to the derivation
   bound contribute their cyclic permutations.

A word is forced non-trivial when adding it as an equation makes a played
inequation forced trivial.
"""

__all__ = ['Forcing', 'UnionFind', 'ForcingClosure', 'commutator_pair']

import enum
import logging
from rubin.symbolic.words import SymWord
from rubin.symbolic.nodes import RightAngledArtin

log = logging.getLogger('rubin.game.closure')
datalog = logging.getLogger('rubin.data.game.closure')

class Forcing(enum.Enum):
    TRUE = 'true'
    FALSE = 'false'
    OPEN = 'open'

    def negate(self):
        if self is Forcing.TRUE:
            return Forcing.FALSE
        if self is Forcing.FALSE:
            return Forcing.TRUE
        return self

class UnionFind(object):
    """Union-find over hashable items with path halving and union by rank."""
    def __init__(self):
        self.parent = dict()
        self.rank = dict()

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            self.rank[x] = 0
            return x
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True

def commutator_pair(w):
    """``(x, y)`` when ``w`` is ``x^s y^t x^-s y^-t`` for names ``x != y``."""
    letters = w.letters()
    if len(letters) != 4:
        return None
    (a, s), (b, t), (c, u), (d, v) = letters
    if a == c and b == d and a != b and s == -u and t == -v:
        return a, b
    return None

def _root(w):
    """The primitive root of a cyclically reduced word."""
    if len(w.syllables) == 1:
        name, _ = w.syllables[0]
        return SymWord.gen(name)
    letters = w.letters()
    n = len(letters)
    for d in range(1, n // 2 + 1):
        if n % d == 0 and letters == letters[:d] * (n // d):
            return SymWord.from_letters(letters[:d])
    return w

def _rotations(w):
    letters = w.letters()
    for i in range(len(letters)):
        yield SymWord.from_letters(letters[i:] + letters[:i])

class ForcingClosure(object):
    """
    The closure of a set of played conditions.

    :param names: Played names; queries must stay within them.
    :param equations: Words ``w`` of the played equations ``w = 1``.
    :param inequations: Words ``u`` of the played inequations ``u != 1``.
    :param identity: The name fixed as the identity.
    :param int bound: Longest relator whose cyclic permutations are used.
    :param int cap: Maximum number of stored relator normal forms.
    """
    def __init__(self, names, equations, inequations, identity, bound=16,
                 cap=20000):
        self.names = frozenset(names) | frozenset([identity])
        self.equations = list(equations)
        self.inequations = list(inequations)
        self.identity = identity
        self.bound, self.cap = bound, cap
        self.uf = UnionFind()
        for n in sorted(self.names):
            self.uf.find(n)
        self._merge()
        self._build_presentation()
        datalog.debug('Closure: %d class(es), %d edge(s), %d relator form(s)',
                      len(self.raag.name_list), len(self.raag.edges),
                      len(self.relator_forms))

    def is_trivial_name(self, n):
        return self.uf.find(n) == self.uf.find(self.identity)

    def canonical(self, w):
        """``w`` over class representatives, trivial names removed."""
        unit = self.uf.find(self.identity)
        return SymWord((r, e) for r, e in
                       ((self.uf.find(n), e) for n, e in w.syllables)
                       if r != unit)

    def _core(self, w):
        c = self.canonical(w)
        return _root(c.cyclic_reduce()[1]) if not c.is_empty() else c

    def _merge(self):
        changed = True
        while changed:
            changed = False
            for w in self.equations:
                core = self._core(w)
                if len(core.syllables) == 1:
                    changed |= self.uf.union(core.syllables[0][0],
                                             self.identity)
                elif len(core) == 2 and len(core.syllables) == 2:
                    (x, s), (y, t) = core.syllables
                    if s == -t:
                        changed |= self.uf.union(x, y)

    def _build_presentation(self):
        unit = self.uf.find(self.identity)
        reps = sorted(set(self.uf.find(n) for n in self.names) - {unit})
        edges, relators = list(), list()
        for w in self.equations:
            core = self._core(w)
            if core.is_empty():
                continue
            pair = commutator_pair(core)
            if pair is not None:
                edges.append(pair)
            else:
                relators.append(core)
        self.raag = RightAngledArtin(reps, edges)
        self.relator_forms = set()
        for core in relators:
            if len(core) <= self.bound:
                words = list(_rotations(core))
            else:
                words = [core]
            for r in words:
                if len(self.relator_forms) >= self.cap:
                    log.warning('Forcing closure capped at %d relator forms',
                                self.cap)
                    return
                self.relator_forms.add(self.raag.normal_form(r))
                self.relator_forms.add(self.raag.normal_form(~r))

    def is_trivial(self, w):
        """Whether ``w = 1`` follows from the played equations."""
        c = self.canonical(w)
        if self.raag._is_identity(c):
            return True
        nf = self.raag.normal_form(c)
        candidates = (nf, _root(c.cyclic_reduce()[1]),
                      _root(nf.cyclic_reduce()[1]))
        return any(self.raag.normal_form(x) in self.relator_forms
                   for x in candidates)

    def contradicts(self, w):
        """Whether ``w = 1`` is inconsistent with the played conditions."""
        if not self.inequations:
            return False
        extended = ForcingClosure(self.names, self.equations + [w],
                                  self.inequations, self.identity,
                                  max(self.bound, len(w)), self.cap)
        return any(extended.is_trivial(u) for u in self.inequations)

    def word_status(self, w):
        """Forcing status of the equation ``w = 1``."""
        if self.is_trivial(w):
            return Forcing.TRUE
        if self.contradicts(w):
            return Forcing.FALSE
        return Forcing.OPEN

    def status(self, condition):
        """Forcing status of a :class:`~rubin.game.conditions.Condition`."""
        verdict = self.word_status(condition.word)
        return verdict if condition.positive else verdict.negate()

    def consistent(self):
        """No played inequation is forced trivial."""
        return not any(self.is_trivial(u) for u in self.inequations)

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

import unittest
from .common import *
from rubin.symbolic.words import SymWord
from rubin.game.conditions import Condition, comm
from rubin.game.closure import (ForcingClosure, Forcing, UnionFind,
                                commutator_pair)

def gen(n, e=1):
    return SymWord.gen(n, e)

def closure(equations=(), inequations=(), names=range(6), **kwargs):
    return ForcingClosure(names, equations, inequations, 0, **kwargs)

class UnionFindTest(unittest.TestCase):
    def test_union(self):
        uf = UnionFind()
        self.assertTrue(uf.union(1, 2))
        self.assertTrue(uf.union(3, 2))
        self.assertFalse(uf.union(1, 3))
        self.assertEqual(uf.find(1), uf.find(3))
        self.assertNotEqual(uf.find(1), uf.find(4))

class CommutatorPairTest(unittest.TestCase):
    def test_pairs(self):
        self.assertEqual(commutator_pair(comm(1, 2)), (1, 2))
        self.assertEqual(commutator_pair(comm(2, 1)), (2, 1))
        self.assertIsNone(commutator_pair(comm(1, 1)))
        self.assertIsNone(commutator_pair(gen(1) * gen(2) * gen(1) * gen(2)))
        self.assertIsNone(commutator_pair(comm(1, comm(2, 3))))

class ForcingTest(unittest.TestCase):
    def test_played_equation(self):
        c = closure([comm(1, 2)])
        self.assertIs(c.status(Condition.equation(comm(1, 2))), Forcing.TRUE)
        self.assertIs(c.status(Condition.equation(comm(2, 1))), Forcing.TRUE)
        self.assertIs(c.status(Condition.inequation(comm(2, 1))),
                      Forcing.FALSE)
    def test_open(self):
        c = closure()
        self.assertIs(c.word_status(comm(1, 2)), Forcing.OPEN)
        self.assertIs(c.status(Condition.inequation(comm(1, 2))), Forcing.OPEN)
    def test_identity(self):
        c = closure([gen(0)])
        self.assertIs(c.word_status(comm(0, 3)), Forcing.TRUE)
        self.assertIs(c.word_status(gen(0, 5)), Forcing.TRUE)
        self.assertTrue(c.is_trivial_name(0))
    def test_contradiction(self):
        c = closure([], [comm(1, 2)])
        self.assertIs(c.word_status(comm(2, 1)), Forcing.FALSE)
        self.assertIs(c.status(Condition.inequation(comm(1, 2))), Forcing.TRUE)
        self.assertTrue(c.consistent())
        self.assertFalse(closure([comm(1, 2)], [comm(2, 1)]).consistent())
    def test_merging(self):
        c = closure([gen(1) * gen(2, -1)])
        self.assertTrue(c.is_trivial(gen(2) * gen(1, -1)))
        self.assertTrue(c.is_trivial(comm(1, 2)))
        c = closure([gen(3, 2)])
        self.assertTrue(c.is_trivial_name(3))
        self.assertTrue(c.is_trivial(comm(3, 4)))
    def test_merge_fixpoint(self):
        # 1 = 2 only after 3 is known trivial
        c = closure([gen(1) * gen(3) * gen(2, -1), gen(3, 4)])
        self.assertTrue(c.is_trivial(gen(1) * gen(2, -1)))
    def test_torsion(self):
        c = closure([], [gen(1)])
        self.assertIs(c.word_status(gen(1, 3)), Forcing.FALSE)
        self.assertIs(c.word_status(gen(2) * gen(1) * gen(2, -1)),
                      Forcing.FALSE)
    def test_relators(self):
        r = gen(4, -1) * gen(2) * gen(4) * gen(3, -1)
        c = closure([r])
        self.assertTrue(c.is_trivial(r))
        self.assertTrue(c.is_trivial(~r))
        self.assertTrue(c.is_trivial(gen(3, -1) * gen(4, -1) * gen(2) * gen(4)))
        self.assertTrue(c.is_trivial(gen(5) * r * gen(5, -1)))
        self.assertTrue(c.is_trivial(r * r))
        self.assertFalse(c.is_trivial(gen(2) * gen(3, -1)))
    def test_long_relator(self):
        w = comm(1, comm(2, comm(3, 4)))
        self.assertGreater(len(w), 8)
        c = closure([w], bound=8)
        self.assertTrue(c.is_trivial(w))
        self.assertTrue(c.is_trivial(gen(5) * w * gen(5, -1)))
    def test_cap(self):
        c = closure([comm(1, comm(2, 3)), comm(4, comm(5, 1))], cap=3)
        self.assertLessEqual(len(c.relator_forms), 4)
    def test_negate(self):
        self.assertIs(Forcing.TRUE.negate(), Forcing.FALSE)
        self.assertIs(Forcing.OPEN.negate(), Forcing.OPEN)

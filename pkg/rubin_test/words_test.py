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
from sympy.combinatorics.free_groups import free_group
from rubin.symbolic.words import SymWord, reduce_free, commutator, EMPTY

g, h = SymWord.gen('g'), SymWord.gen('h')

class WordTest(unittest.TestCase):
    def test_reduce(self):
        self.assertEqual(g * ~g, EMPTY)
        self.assertEqual(g ** 2 * g ** 3, g ** 5)
        self.assertEqual(g * h * ~h * ~g, EMPTY)
        w = reduce_free([('g', 1), ('h', 2), ('h', -2), ('g', 1)])
        self.assertEqual(w, g ** 2)
        self.assertEqual(reduce_free(w), w)
    def test_zero_exponents_dropped(self):
        self.assertTrue(SymWord([('g', 0)]).is_empty())
    def test_length_and_letters(self):
        w = g ** 2 * ~h
        self.assertEqual(len(w), 3)
        self.assertEqual(w.letters(), [('g', 1), ('g', 1), ('h', -1)])
        self.assertEqual(SymWord.from_letters(w.letters()), w)
    def test_powers(self):
        w = g * h
        self.assertEqual(w ** 0, EMPTY)
        self.assertEqual(w ** -2, ~w * ~w)
    def test_commutator(self):
        self.assertEqual(commutator(g, h), ~g * ~h * g * h)
        self.assertEqual(commutator(g, g), EMPTY)
        self.assertEqual(str(commutator(g, h)), 'g^-1 h^-1 g h')
    def test_names(self):
        w = SymWord([(1, 2), (3, -1)])
        self.assertEqual(w.names(), frozenset([1, 3]))
        self.assertEqual(w.exponent_sum(1), 2)
        self.assertEqual(str(w), '1^2 3^-1')
        self.assertEqual(str(EMPTY), '1')
    def test_rename_substitute(self):
        w = g * h
        self.assertEqual(w.rename({'g': 'x'}), SymWord.gen('x') * h)
        self.assertEqual(w.substitute({'h': ~g}), EMPTY)
        self.assertEqual((g * ~h).substitute({'h': g * h}), ~h)
    def test_cyclic_reduce(self):
        w = h * g ** 2 * ~h
        u, core = w.cyclic_reduce()
        self.assertEqual(core, g ** 2)
        self.assertEqual(u * core * ~u, w)
        w = g * h * g
        u, core = w.cyclic_reduce()
        self.assertEqual(u * core * ~u, w)
        self.assertEqual(core, h * g ** 2)
    def test_hash(self):
        self.assertEqual(len(set([g * h, SymWord([('g', 1), ('h', 1)])])), 1)
    def test_simultaneous_substitution(self):
        w = g * ~h
        self.assertEqual(w.substitute({'g': h, 'h': g}), h * ~g)
        self.assertEqual(w.substitute({'x': g}), w)
    def test_cyclic_reduce_strips_conjugator(self):
        x, y = SymWord.gen('x'), SymWord.gen('y')
        w = x ** -3 * ~y * x ** 5
        u, core = w.cyclic_reduce()
        self.assertEqual((u, core), (x ** -3, ~y * x ** 2))
        self.assertEqual(EMPTY.cyclic_reduce(), (EMPTY, EMPTY))

class SympyElementTest(unittest.TestCase):
    def test_element(self):
        F, x, y = free_group('g, h')
        self.assertEqual((g * h ** -2).element(F), x * y ** -2)
        self.assertEqual(len((g * h).element()), 2)
    def test_integer_names(self):
        w = SymWord.gen(3) * SymWord.gen('3')
        self.assertEqual(w.names(), frozenset([3, '3']))
        self.assertEqual(len(w * ~SymWord.gen('3')), 1)

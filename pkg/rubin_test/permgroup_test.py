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
from rubin.permgroup import (generate_group, perm_from_cycles, format_perm,
                             centralizer, commutator, support,
                             conjugacy_classes, direct_product, identity,
                             preset, PRESETS)
from rubin.exceptions import (DegreeMismatchError, ClosureCapExceeded,
                              NotInGroupError, GroupError)

def cyc(*cycles, **kwargs):
    return perm_from_cycles(cycles, kwargs.get('degree', 4))

class GenerationTest(unittest.TestCase):
    def test_s4(self):
        G = generate_group([cyc([0, 1]), cyc([0, 1, 2, 3])])
        self.assertEqual(len(G), 24)
        self.assertEqual(G.elements[0], identity(4))
    def test_empty_generators(self):
        G = generate_group([], degree=3)
        self.assertEqual(len(G), 1)
    def test_cyclic(self):
        G = generate_group([perm_from_cycles([[0, 1, 2, 3, 4]])])
        self.assertEqual(len(G), 5)
        self.assertTrue(G.is_abelian())
    def test_degree_mismatch(self):
        with self.assertRaises(DegreeMismatchError):
            generate_group([cyc([0, 1], degree=3), cyc([0, 1], degree=4)])
    def test_empty_without_degree(self):
        with self.assertRaises(GroupError):
            generate_group([])
    def test_cap(self):
        with self.assertRaises(ClosureCapExceeded):
            generate_group([cyc([0, 1]), cyc([0, 1, 2, 3])], cap=10)
    def test_deterministic_order(self):
        gens = [cyc([0, 1]), cyc([0, 1, 2, 3])]
        first = [p.array_form for p in generate_group(gens).elements]
        second = [p.array_form for p in generate_group(list(gens)).elements]
        self.assertEqual(first, second)
        self.assertEqual(first, sorted(first))
    def test_closure(self):
        for name in ('S3', 'S4', 'A4', 'D4'):
            G = preset(name)
            for x in G.elements:
                for y in G.elements:
                    self.assertIn(x * y, G)
    def test_presets(self):
        orders = {'S3': 6, 'S4': 24, 'A4': 12, 'D4': 8, 'C2xC2': 4,
                  'C5xC5': 25, 'C12': 12, 'S3xS3': 36}
        for name, order in orders.items():
            self.assertEqual(len(preset(name)), order, name)
        with self.assertRaises(GroupError):
            preset('S17')

class TablesTest(unittest.TestCase):
    def test_mult_matches_sympy(self):
        G = preset('S4')
        M = G.mult
        for i, x in enumerate(G.elements):
            for j, y in enumerate(G.elements):
                self.assertEqual(G.elements[M[i, j]], x * y)
    def test_inverse_and_commutators(self):
        G = preset('D4')
        for i, x in enumerate(G.elements):
            self.assertEqual(G.elements[G.inverse[i]], ~x)
            for j, y in enumerate(G.elements):
                self.assertEqual(G.elements[G.commutator_table[i, j]],
                                 commutator(x, y))
    def test_power_map(self):
        G = preset('C12')
        P = G.power_map(5)
        for i, x in enumerate(G.elements):
            self.assertEqual(G.elements[P[i]], x ** 5)
    def test_center(self):
        self.assertEqual(len(preset('S3').center()), 1)
        self.assertEqual(len(preset('D4').center()), 2)
    def test_index_errors(self):
        G = preset('A4')
        with self.assertRaises(NotInGroupError):
            G.index(cyc([0, 1]))
        with self.assertRaises(NotInGroupError):
            G.index(perm_from_cycles([[0, 1]], 5))

class ElementTest(unittest.TestCase):
    def test_centralizer(self):
        G = preset('S4')
        self.assertEqual(len(centralizer(G, identity(4))), 24)
        C = centralizer(G, cyc([0, 1], [2, 3]))
        self.assertEqual(len(C), 8)
        self.assertIn(identity(4), C)
        for x in C:
            for y in C:
                self.assertIn(x * y, C)
    def test_centralizer_abelian(self):
        G = preset('C5xC5')
        for g in G.elements[:5]:
            self.assertEqual(len(centralizer(G, g)), 25)
    def test_commutator(self):
        a, b = cyc([0, 1]), cyc([1, 2])
        self.assertEqual(commutator(a, a), identity(4))
        c = commutator(a, b)
        self.assertEqual(c.order(), 3)
        self.assertEqual(commutator(cyc([0, 1]), cyc([2, 3])), identity(4))
        with self.assertRaises(DegreeMismatchError):
            commutator(a, perm_from_cycles([[0, 1]], 5))
    def test_commutator_support(self):
        G = preset('S4')
        for a in G.elements:
            for b in G.elements:
                self.assertLessEqual(support(commutator(a, b)),
                                     support(a) | support(b))
    def test_support(self):
        self.assertEqual(support(identity(4)), frozenset())
        self.assertEqual(support(cyc([0, 1], [2, 3])), frozenset(range(4)))
        self.assertEqual(support(cyc([0, 1])), frozenset([0, 1]))
    def test_format(self):
        self.assertEqual(format_perm(identity(3)), '()')
        self.assertEqual(format_perm(cyc([0, 1], [2, 3])), '(0 1)(2 3)')
    def test_cycles_validation(self):
        with self.assertRaises(GroupError):
            perm_from_cycles([[0, 1], [1, 2]])
        with self.assertRaises(DegreeMismatchError):
            perm_from_cycles([[0, 5]], 4)

class ClassesTest(unittest.TestCase):
    def test_s3(self):
        sizes = [len(c) for c in conjugacy_classes(preset('S3'))]
        self.assertEqual(sizes, [1, 3, 2])
    def test_abelian(self):
        classes = conjugacy_classes(preset('C12'))
        self.assertEqual(len(classes), 12)
    def test_trivial(self):
        self.assertEqual(len(conjugacy_classes(preset('trivial'))), 1)
    def test_partition(self):
        G = preset('S4')
        classes = conjugacy_classes(G)
        self.assertEqual(sum(len(c) for c in classes), 24)
        self.assertEqual(len(classes), 5)

class DirectProductTest(unittest.TestCase):
    def test_order_and_embeddings(self):
        S3 = preset('S3')
        G, left, right = direct_product(S3, S3)
        self.assertEqual(len(G), 36)
        x, y = cyc([0, 1], degree=3), cyc([0, 1, 2], degree=3)
        self.assertEqual(left(x) * right(y), right(y) * left(x))
        self.assertEqual(support(right(y)), frozenset([3, 4, 5]))

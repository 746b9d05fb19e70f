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
from rubin.symbolic.words import SymWord, commutator
from rubin.symbolic.nodes import (FreeGroup, FreeAbelian, AffineBS,
                                  AmalgamCyclic)
from rubin.symbolic.constructions import (build_lemma31, build_lemma32,
                                          lemma34_report, verify_lemma34,
                                          reduced_words, ConstructionReport,
                                          Lemma34Report)
from rubin.export import to_json, from_json
from rubin.exceptions import HypothesisViolation, UnknownGeneratorError

g, h = SymWord.gen('g'), SymWord.gen('h')

def claim_texts(report):
    return dict((c.text, c) for c in report.claims)

class ReducedWordsTest(unittest.TestCase):
    def test_counts(self):
        words = list(reduced_words(['x', 'y'], 3))
        # 1 + 4 + 12 + 36
        self.assertEqual(len(words), 53)
        self.assertEqual(len(set(words)), 53)
        self.assertTrue(words[0].is_empty())
        self.assertTrue(all(len(w) <= 3 for w in words))

class EmbeddingTest(unittest.TestCase):
    def setUp(self):
        self.result = build_lemma32(FreeGroup(['g', 'gamma']))
    def test_claims(self):
        report = self.result.report
        self.assertTrue(report.ok)
        self.assertEqual(len(report.claims), 3)
        self.assertEqual(report.claims[0].text, '[a,gamma1 gamma2] != 1')
    def test_embedding(self):
        self.assertEqual(self.result.a, 'a')
        self.assertEqual(self.result.embed(SymWord.gen('g')),
                         SymWord.gen('g1'))
        gamma = self.result.embedding['gamma']
        self.assertEqual(gamma, SymWord.gen('gamma1') * SymWord.gen('gamma2'))
    def test_ball(self):
        ball = self.result.embedding_ball_check(4)
        self.assertTrue(ball.ok)
        self.assertEqual(ball.words, 161)
        self.assertEqual(ball.to_dict()['mismatches'], [])
    def test_ball_six(self):
        if not slow:
            self.skipTest('RUBIN_SLOW_TESTS not set')
        self.assertTrue(self.result.embedding_ball_check(6).ok)
    def test_fresh_name(self):
        result = build_lemma32(FreeGroup(['g', 'gamma', 'a1']))
        self.assertNotIn(result.a, ('a1',))
        self.assertTrue(result.report.ok)
    def test_missing_generator(self):
        with self.assertRaises(UnknownGeneratorError):
            build_lemma32(FreeGroup(['g', 'x']))
    def test_other_groups(self):
        K = AffineBS(2, 'g', 'gamma')
        self.assertTrue(build_lemma32(K).report.ok)

class OvergroupTest(unittest.TestCase):
    def test_cyclic(self):
        report = build_lemma31(FreeAbelian(['h']), h ** 2, h)
        self.assertEqual(report.case, 'cyclic')
        self.assertTrue(report.ok, report.to_dict())
        claims = claim_texts(report)
        self.assertIn('[a,[b,h]] != 1', claims)
        self.assertIn('[[a,[b,h]],g] = 1', claims)
        self.assertIn('g = h^2', report.notes)
        self.assertIsInstance(report.overgroup, AmalgamCyclic)
        self.assertEqual(report.elements, dict(a=SymWord.gen('a'),
                                               b=SymWord.gen('b')))
    def test_cyclic_negative_power(self):
        report = build_lemma31(FreeGroup(['h']), h ** -3, h)
        self.assertEqual(report.case, 'cyclic')
        self.assertTrue(report.ok)
    def test_noncyclic_free(self):
        report = build_lemma31(FreeGroup(['g', 'h']), g, h)
        self.assertEqual(report.case, 'non-cyclic')
        self.assertTrue(report.ok, report.to_dict())
        claims = claim_texts(report)
        self.assertTrue(claims['[b,g1] = 1'].holds)
        self.assertTrue(claims['[b,h1] != 1'].holds)
        self.assertEqual(claims['[b,h1] != 1'].where, 'Gamma0')
        self.assertTrue(claims['[a,gamma] != 1'].holds)
        self.assertTrue(claims['[[a,gamma],g] = 1'].holds)
        self.assertIn('Gamma0', report.pieces)
        self.assertIsNone(report.overgroup)
    def test_hypotheses(self):
        F = FreeGroup(['g', 'h'])
        with self.assertRaises(HypothesisViolation):
            build_lemma31(F, SymWord(), h)
        with self.assertRaises(HypothesisViolation):
            build_lemma31(F, g, h * ~h)
        with self.assertRaises(HypothesisViolation):
            build_lemma31(F, h, h)
        with self.assertRaises(HypothesisViolation):
            build_lemma31(F, ~h, h)
        with self.assertRaises(HypothesisViolation):
            build_lemma31(F, g, g ** 2)
    def test_json(self):
        report = build_lemma31(FreeAbelian(['h']), h ** 2, h)
        self.assertEqual(from_json(to_json(report), ConstructionReport),
                         report)

class CommutatorCheckTest(unittest.TestCase):
    def test_m2_m3(self):
        self.assertTrue(verify_lemma34(2))
        self.assertTrue(verify_lemma34(3))
    def test_control(self):
        report = lemma34_report(2)
        self.assertTrue(report.control_nontrivial)
        self.assertTrue(report.ok)
        self.assertEqual(from_json(to_json(report), Lemma34Report), report)
    def test_by_hand(self):
        B = AffineBS(3, 'g', 'h')
        H = AmalgamCyclic(B.suffixed('1'), B.suffixed('2'),
                          SymWord.gen('g1'), SymWord.gen('g2'))
        g1, h1, h2 = (SymWord.gen(n) for n in ('g1', 'h1', 'h2'))
        self.assertTrue(H.is_identity(commutator(g1, ~h2 * h1)))
        self.assertFalse(H.is_identity(commutator(h1, ~h2 * h1)))

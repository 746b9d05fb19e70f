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
from rubin.game.conditions import Condition, Move, Transcript, comm, \
    PLAYER_A, PLAYER_B
from rubin.game.engine import run_game
from rubin.game.audit import (audit_transcript, AuditReport,
                              expected_conditions, _schedule)
from rubin.exceptions import AuditFailure

def failing(report):
    return [desc for desc, _ in report.failures()]

class ScheduleTest(unittest.TestCase):
    def test_schedule(self):
        self.assertEqual([_schedule(i) for i in range(5)],
                         [(PLAYER_A, 0), (PLAYER_A, 1), (PLAYER_B, 1),
                          (PLAYER_A, 2), (PLAYER_B, 2)])
    def test_expected_conditions(self):
        base = dict(triple=[1, 0, 2], case='1.3', realized=True)
        self.assertEqual(expected_conditions(base),
                         [Condition.equation(comm(1, 2))])
        self.assertEqual(expected_conditions(dict(base, fallback=True)),
                         [Condition.inequation(comm(1, 2))])
        self.assertEqual(expected_conditions(dict(base, realized=False)), [])
        self.assertEqual(expected_conditions(dict(base, case='2')), [])

class AuditTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.transcript, cls.report = run_game(dict(rounds=3))

    def forged(self):
        return Transcript.from_json(self.transcript.to_json())

    def test_clean(self):
        report = audit_transcript(self.forged())
        self.assertTrue(report.ok)
        self.assertEqual(report, self.report.audit)
        self.assertEqual(report.summary['moves'], 7)
        self.assertEqual(report.summary['cases']['1.1'], 3)
        self.assertEqual(report.summary['fallbacks'], 0)

    def test_empty(self):
        report = audit_transcript(Transcript())
        self.assertTrue(report.ok)
        self.assertEqual(report.components, [])

    def test_nesting(self):
        t = self.forged()
        t.moves[1], t.moves[2] = t.moves[2], t.moves[1]
        report = audit_transcript(t)
        self.assertFalse(report.ok)
        self.assertIn('Moves follow the round schedule (nested condition sets)',
                      failing(report))

    def test_reused_name(self):
        t = self.forged()
        t.moves[2] = Move([], PLAYER_B, 1, [0], t.moves[2].annotation)
        report = audit_transcript(t)
        self.assertIn('Declared names are fresh', failing(report))
        self.assertIn('Every prefix is admissible', failing(report))

    def test_forged_template(self):
        t = self.forged()
        a1 = t.moves[1]
        t.moves[1] = Move([Condition.equation(comm(1, 0))], PLAYER_A, 1,
                          a1.declared, a1.annotation)
        report = audit_transcript(t)
        self.assertIn('A moves match the strategy templates', failing(report))
        self.assertIn('Recomputed cases and moves agree with the transcript',
                      failing(report))

    def test_forged_case(self):
        t = self.forged()
        t.moves[3].annotation['case'] = '2'
        report = audit_transcript(t)
        self.assertIn('Recomputed cases and moves agree with the transcript',
                      failing(report))

    def test_strict(self):
        t = self.forged()
        t.moves[1], t.moves[2] = t.moves[2], t.moves[1]
        with self.assertRaises(AuditFailure):
            audit_transcript(t, strict=True)
        self.assertTrue(audit_transcript(self.forged(), strict=True).ok)

    def test_report_dict(self):
        data = self.report.audit.to_dict()
        self.assertTrue(data['ok'])
        self.assertEqual(AuditReport.from_dict(data), self.report.audit)

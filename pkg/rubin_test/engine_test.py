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
from rubin.game.conditions import Condition, Move, comm, PLAYER_A, PLAYER_B
from rubin.game.config import GameConfig
from rubin.game.closure import Forcing
from rubin.game.engine import (new_game, triples, triple_at, player_A_move,
                               player_B_move, play_move, forcing_status,
                               is_admissible, run_game, sweep_seeds,
                               case12_template)
from rubin.game.players import get_player
from rubin.game.witness import Witness
from rubin.game.audit import audit_transcript
from rubin.symbolic.words import SymWord, EMPTY
from rubin.symbolic.nodes import FreeGroup, AmalgamCyclic
from rubin.exceptions import (UnplayedNameError, InadmissibleMoveError,
                              ConfigurationError)

def b_move(state, conditions, declared=()):
    return Move(conditions, PLAYER_B, state.round, declared)

class TripleTest(unittest.TestCase):
    def test_order(self):
        first = [triple_at(i) for i in range(10)]
        self.assertEqual(first, [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0),
                                 (0, 0, 2), (0, 1, 1), (0, 2, 0), (1, 0, 1),
                                 (1, 1, 0), (2, 0, 0)])
        self.assertEqual(triple_at(14), (1, 0, 2))
        self.assertEqual(triple_at(26), (1, 1, 2))
    def test_exhaustive(self):
        seen = set()
        for i, t in zip(range(35), triples()):
            self.assertNotIn(t, seen)
            seen.add(t)
        self.assertEqual(seen, set((f, g, h) for f in range(5)
                                   for g in range(5) for h in range(5)
                                   if f + g + h <= 4))

class NewGameTest(unittest.TestCase):
    def test_identity_declaration(self):
        state = new_game()
        self.assertEqual(len(state.transcript), 1)
        move = state.transcript.moves[0]
        self.assertEqual(move.conditions, (Condition.equation(0),))
        self.assertEqual(move.declared, (0,))
        self.assertEqual(state.played, frozenset([0]))
    def test_identity_one(self):
        state = new_game(dict(identity_name=1))
        self.assertEqual(state.transcript.moves[0].declared, (1,))
        state.round = 1
        move = player_A_move(state)
        self.assertEqual(move.annotation['case'], '1.1')
        self.assertEqual(move.declared, (0,))
    def test_bad_config(self):
        with self.assertRaises(ConfigurationError):
            new_game(dict(identity_name=2))

class ForcingStatusTest(unittest.TestCase):
    def setUp(self):
        self.state = new_game()
        self.state.round = 1
        play_move(self.state, b_move(self.state, [Condition.equation(comm(1, 2))],
                                     [1, 2]))
    def test_forced(self):
        eq = Condition.equation(comm(2, 1))
        self.assertIs(forcing_status(self.state, eq), Forcing.TRUE)
        self.assertIs(forcing_status(self.state, eq.negate()), Forcing.FALSE)
    def test_open(self):
        eq = Condition.equation(comm(1, 3))
        self.assertIs(forcing_status(self.state, eq, [3]), Forcing.OPEN)
    def test_unplayed(self):
        with self.assertRaises(UnplayedNameError):
            forcing_status(self.state, Condition.equation(comm(1, 3)))
    def test_inadmissible(self):
        move = b_move(self.state, [Condition.inequation(comm(2, 1))])
        self.assertFalse(is_admissible(self.state, move))
        with self.assertRaises(InadmissibleMoveError):
            play_move(self.state, move)
    def test_reused_name(self):
        move = b_move(self.state, [], [2])
        result = is_admissible(self.state, move)
        self.assertFalse(result)
        self.assertIn('already played', result.reason)

class CaseTest(unittest.TestCase):
    def state_at(self, index, rnd=1):
        state = new_game()
        state.round = rnd
        state.triple_index = index
        return state

    def test_case_11(self):
        move = player_A_move(self.state_at(0))
        self.assertEqual(move.annotation['case'], '1.1')
        self.assertTrue(move.is_empty())
        self.assertEqual(move.declared, (1,))

    def test_case_13(self):
        state = self.state_at(14)
        move = player_A_move(state)
        self.assertEqual(move.annotation['case'], '1.3')
        self.assertEqual(move.conditions, (Condition.equation(comm(1, 2)),))
        self.assertEqual(move.declared, (1, 2))
        self.assertFalse(move.annotation['fallback'])
        self.assertEqual(state.triple_index, 15)

    def test_case_3(self):
        move = player_A_move(self.state_at(16))
        self.assertEqual(move.annotation['case'], '3')
        self.assertEqual(move.conditions, (Condition.inequation(comm(1, 2)),))

    def test_case_2(self):
        state = self.state_at(16)
        play_move(state, player_A_move(state))
        state.triple_index = 18
        move = player_A_move(state)
        self.assertEqual(move.annotation['case'], '2')
        self.assertTrue(move.is_empty())

    def test_case_12(self):
        state = new_game()
        state.round = 1
        play_move(state, b_move(state, [Condition.inequation(comm(1, 2))],
                                [1, 2]))
        state.round = 2
        state.triple_index = 26
        move = player_A_move(state)
        annotation = move.annotation
        self.assertEqual(annotation['case'], '1.2')
        self.assertEqual((annotation['a'], annotation['b']), (4, 5))
        self.assertEqual(annotation['padded'], [3])
        self.assertTrue(annotation['realized'])
        self.assertEqual(list(move.conditions), case12_template(1, 2, 4, 5))
        self.assertEqual(move.declared, (3, 4, 5))
        result = play_move(state, move)
        lemma31 = result.plan[0]
        self.assertEqual(lemma31['step'], 'lemma31')
        self.assertEqual((lemma31['g'], lemma31['h']), (1, 2))
        self.assertEqual(lemma31['case'], 'non-cyclic')
        self.assertTrue(lemma31['ok'])
        self.assertTrue(all(c['holds'] for c in lemma31['claims']))
        self.assertEqual(state.certificates[-1]['plan'][0], lemma31)
        panels = [s for s in result.plan if s['step'] == 'panel']
        self.assertEqual([p['killed'] for p in panels], [[5], [1]])
        for c in state.conditions():
            self.assertTrue(state.witness.holds(c))
        self.assertFalse(state.witness.is_identity(comm(1, 2)))

    def test_case_12_cyclic_overgroup(self):
        state = new_game()
        state.round = 1
        play_move(state, b_move(state, [], [1, 2]))
        x = SymWord.gen('x')
        state.witness = Witness(FreeGroup(['x']),
                                {0: EMPTY, 1: x ** 2, 2: x}, [])
        move = Move(case12_template(1, 2, 3, 4), PLAYER_A, 1, [3, 4],
                    dict(case='1.2', triple=[0, 1, 2], a=3, b=4))
        result = is_admissible(state, move)
        self.assertTrue(result, result.reason)
        witness = result.witness
        self.assertIsInstance(witness.expr, AmalgamCyclic)
        self.assertEqual([s['step'] for s in witness.plan], ['lemma31'])
        self.assertEqual(witness.plan[0]['case'], 'cyclic')
        self.assertEqual(witness.plan[0]['notes'], ['g = h^2'])
        self.assertEqual(witness.assignment[3], SymWord.gen('a'))
        self.assertEqual(witness.assignment[4], SymWord.gen('b'))
        self.assertEqual(witness.assignment[1], x ** 2)
        for c in move.conditions:
            self.assertTrue(witness.holds(c))

    def test_case_12_trivial_g(self):
        state = new_game()
        state.round = 1
        play_move(state, b_move(state, [Condition.inequation(comm(1, 2))],
                                [1, 2]))
        move = Move(case12_template(0, 2, 3, 4), PLAYER_A, 1, [3, 4],
                    dict(case='1.2', triple=[1, 0, 2], a=3, b=4))
        result = is_admissible(state, move)
        self.assertTrue(result, result.reason)
        lemma31 = result.plan[0]
        self.assertIsNone(lemma31['case'])
        self.assertFalse(lemma31['ok'])
        self.assertIn('trivial', lemma31['notes'][0])
        self.assertIn('panel', [s['step'] for s in result.plan])

    def test_forcing_log(self):
        state = self.state_at(14)
        player_A_move(state)
        entry = state.forcing_log[-1]
        self.assertEqual(entry['triple'], [1, 0, 2])
        self.assertEqual([q['status'] for q in entry['queries']],
                         ['true', 'open'])

class PlayerBTest(unittest.TestCase):
    def test_rejected_conjugator(self):
        state = new_game(dict(b_strategy='conjugacy', rounds=3))
        for r in range(1, 3):
            state.round = r
            play_move(state, player_A_move(state))
            play_move(state, player_B_move(state))
        state.round = 3
        play_move(state, player_A_move(state))
        proposal = get_player('conjugacy', state.config).propose(state)
        answer = is_admissible(state, proposal)
        self.assertFalse(answer)
        move = player_B_move(state)
        self.assertTrue(move.annotation['rejected'])
        self.assertEqual(move.annotation['reason'], answer.reason)
        self.assertTrue(move.is_empty())
        self.assertEqual(move.declared, ())
        self.assertEqual(move.annotation['strategy'], 'conjugacy')
        play_move(state, move)
        self.assertEqual(len(state.transcript), 7)

    def test_explicit_strategy(self):
        state = new_game(dict(b_strategy='conjugacy'))
        state.round = 1
        play_move(state, player_A_move(state))
        self.assertTrue(player_B_move(state, 'passive').is_empty())

class RunGameTest(unittest.TestCase):
    def test_passive(self):
        transcript, report = run_game(dict(rounds=10))
        self.assertEqual(len(transcript), 21)
        self.assertEqual(report.case_counts()['1.1'], 10)
        self.assertTrue(report.audit.ok)
        for c in transcript.conditions():
            self.assertTrue(report.witness.holds(c))

    def test_passive_commutes(self):
        transcript, report = run_game(dict(rounds=20))
        counts = report.case_counts()
        self.assertEqual(counts['1.3'], 1)
        self.assertEqual(counts['1.1'], 19)
        self.assertEqual(transcript.moves[29].conditions,
                         (Condition.equation(comm(1, 2)),))
        self.assertTrue(report.audit.ok)

    def test_zero_rounds(self):
        transcript, report = run_game(dict(rounds=0))
        self.assertEqual(len(transcript), 1)
        self.assertTrue(report.audit.ok)
        self.assertEqual(report.audit.summary['moves'], 1)

    def test_conjugacy(self):
        transcript, report = run_game(dict(b_strategy='conjugacy'))
        self.assertTrue(report.audit.ok, report.audit.failures())
        defined = [s['name'] for s in report.witness.plan
                   if s['step'] == 'define']
        self.assertEqual(defined, [2, 3])
        b2 = transcript.moves[4]
        self.assertEqual((b2.player, b2.round), (PLAYER_B, 2))
        self.assertEqual(len(b2.conditions), 6)
        self.assertEqual(b2.annotation['chain'], [1, 2])
        self.assertTrue(transcript.moves[6].annotation.get('rejected'))
        b_moves = transcript.moves[2::2]
        accepted = [m.round for m in b_moves
                    if not m.annotation.get('rejected')]
        self.assertEqual(accepted, [1, 2])
        self.assertEqual(report.audit.summary['rejected_b'], 8)
        for k in (1, 2):
            eq = Condition.equation(SymWord.gen(4, -1) * SymWord.gen(k)
                                    * SymWord.gen(4) * SymWord.gen(k + 1, -1))
            self.assertIn(eq, b2.conditions)
            self.assertTrue(report.witness.holds(eq))

    def test_deterministic(self):
        config = dict(rounds=6, b_strategy='random', seed=3)
        first, _ = run_game(config, audit=False)
        second, _ = run_game(config, audit=False)
        self.assertEqual(first.to_json(), second.to_json())
        self.assertEqual(first.digest(), second.digest())

    def test_random_audit(self):
        transcript, report = run_game(dict(rounds=6, b_strategy='random',
                                           seed=11))
        self.assertTrue(report.audit.ok, report.audit.failures())

    def test_report_json(self):
        _, report = run_game(dict(rounds=3))
        data = report.to_dict()
        self.assertEqual(set(data), set(['certificates', 'witness',
                                         'forcing_log', 'cases', 'audit']))
        self.assertEqual(len(data['certificates']), 7)
        self.assertTrue(data['audit']['ok'])

class SweepTest(unittest.TestCase):
    def test_sweep(self):
        config = GameConfig(rounds=4, b_strategy='random')
        results = sweep_seeds(config, [1, 2])
        self.assertEqual([seed for seed, _, _ in results], [1, 2])
        self.assertTrue(all(ok for _, _, ok in results))
        transcript, _ = run_game(config.replace(seed=1), audit=False)
        self.assertEqual(results[0][1], transcript.digest())

class LongGameTest(unittest.TestCase):
    def test_fifty_rounds_passive(self):
        transcript, report = run_game(dict(rounds=50))
        self.assertEqual(len(transcript), 101)
        self.assertTrue(report.audit.ok, report.audit.failures())
        self.assertEqual(report.case_counts()['1.2'], 0)

    def test_fifty_rounds_conjugacy(self):
        transcript, report = run_game(dict(rounds=50, b_strategy='conjugacy'))
        self.assertEqual(len(transcript), 101)
        self.assertTrue(report.audit.ok, report.audit.failures())
        self.assertGreater(report.audit.summary['quadruples'], 0)
        self.assertGreater(report.case_counts()['1.2'], 0)

    def test_seeded_passive_reaches_case_12(self):
        state = new_game(dict(rounds=27))
        for r in range(1, 28):
            state.round = r
            play_move(state, player_A_move(state))
            if r == 1:
                move = b_move(state, [Condition.inequation(comm(1, 2))], [2])
            else:
                move = player_B_move(state, 'passive')
            play_move(state, move)
        case12 = [m for m in state.transcript.moves[1::2]
                  if m.annotation['case'] == '1.2']
        self.assertEqual([m.annotation['triple'] for m in case12],
                         [[1, 0, 2], [2, 0, 1], [1, 1, 2]])
        self.assertTrue(all(m.annotation['realized'] for m in case12))
        steps = [c['plan'][0] for c in state.certificates
                 if c['player'] == PLAYER_A and c['round'] in
                 [m.round for m in case12]]
        self.assertEqual([s['step'] for s in steps], ['lemma31'] * 3)
        self.assertEqual([s['case'] for s in steps],
                         [None, None, 'non-cyclic'])
        self.assertTrue(steps[2]['ok'])
        audit = audit_transcript(state.transcript)
        self.assertTrue(audit.ok, audit.failures())
        self.assertEqual(audit.summary['quadruples'], 3)

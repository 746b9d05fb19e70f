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

""" Independent audit of a game transcript.

The audit trusts nothing but the transcript: it replays every move from
scratch, recomputing A's strategy and rebuilding the witness, and then
checks the final witness.
"""

__all__ = ['AuditReport', 'TranscriptAudit', 'audit_transcript', 'AUDIT']

import logging
from rubin.game.status import CheckTag, CheckResult, check_component, \
    CompositeCheck
from rubin.game.conditions import Condition, Move, comm, PLAYER_A, PLAYER_B
from rubin.game.config import GameConfig
from rubin.game.closure import Forcing
from rubin.game.engine import (GameState, CASES, triple_at, case12_template,
                               is_admissible, player_A_move)
from rubin.exceptions import AuditFailure, GameError

log = logging.getLogger('rubin.game.audit')

AUDIT = CheckTag('transcript audit')
TORSION_POWERS = range(2, 7)

def _schedule(i):
    """Expected ``(player, round)`` of the ``i``-th move."""
    if i == 0:
        return PLAYER_A, 0
    return (PLAYER_A if i % 2 else PLAYER_B), (i + 1) // 2

def expected_conditions(annotation):
    """The conditions the strategy prescribes for an annotated A move."""
    if not annotation.get('realized', True):
        return []
    f, g, h = annotation['triple']
    case = annotation['case']
    if case == '1.2':
        return case12_template(g, h, annotation['a'], annotation['b'])
    if case == '1.3':
        c = Condition.equation(comm(f, h))
    elif case == '3':
        c = Condition.inequation(comm(f, g))
    else:
        return []
    return [c.negate() if annotation.get('fallback') else c]

class AuditReport(object):
    """
    :ivar list components: ``(description, CheckResult)`` pairs.
    :ivar dict summary: Counters of the audited run.
    """
    def __init__(self, components=(), summary=None):
        self.components = list(components)
        self.summary = dict(summary or dict())

    @property
    def ok(self):
        return all(result.ok for _, result in self.components)

    def failures(self):
        return [(desc, result) for desc, result in self.components
                if not result.ok]

    def to_dict(self):
        return dict(ok=self.ok, summary=self.summary,
                    components=[dict(check=desc, ok=result.ok,
                                     details=[str(d) for d in result.details])
                                for desc, result in self.components])

    @staticmethod
    def from_dict(data):
        return AuditReport([(c['check'], CheckResult(c['ok'], c['details']))
                            for c in data.get('components', ())],
                           data.get('summary'))

    def __eq__(self, other):
        return isinstance(other, AuditReport) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

class TranscriptAudit(CompositeCheck):
    """Replays a transcript and gathers the evidence for the checks."""
    def __init__(self, transcript):
        self.transcript = transcript
        self.config = GameConfig.from_dict(transcript.config)
        self.schedule_problems = list()
        self.fidelity_problems = list()
        self.case_problems = list()
        self.freshness_problems = list()
        self.admissibility_problems = list()
        self.a_moves = list()
        self.state = GameState(self.config)
        self._replay()
        self.witness = self.state.witness

    def _expected_A(self, state, i, move):
        if i == 0:
            e = self.config.identity_name
            return Move([Condition.equation(e)], PLAYER_A, 0, [e],
                        dict(case='identity'))
        try:
            return player_A_move(state)
        except GameError as ex:
            self.case_problems.append(
                'round {0}: strategy failed on replay: {1}'.format(
                    move.round, ex))
            return None

    def _replay(self):
        state = self.state
        for i, move in enumerate(self.transcript.moves):
            where = 'move {0} ({1}{2})'.format(i, move.player, move.round)
            if (move.player, move.round) != _schedule(i):
                self.schedule_problems.append(
                    '{0}: expected {1}{2}'.format(where, *_schedule(i)))
                break
            state.round = move.round
            reused = set(move.declared) & state.played
            if reused:
                self.freshness_problems.append(
                    '{0}: re-declares {1}'.format(where, sorted(reused)))
            if move.player == PLAYER_A:
                expected = self._expected_A(state, i, move)
                if i > 0:
                    self.a_moves.append((move, expected))
                if expected is not None and expected.key() != move.key():
                    self.fidelity_problems.append(
                        '{0}: played {1}, strategy gives {2}'.format(
                            where, move, expected))
            result = is_admissible(state, move)
            if not result:
                self.admissibility_problems.append(
                    '{0}: {1}'.format(where, result.reason))
                break
            state.apply(move, result)

    @check_component('Moves follow the round schedule (nested condition sets)',
                     AUDIT)
    def nesting(self):
        return CheckResult.from_problems(self.schedule_problems)

    @check_component('Every prefix is admissible', AUDIT)
    def admissibility(self):
        return CheckResult.from_problems(
            self.admissibility_problems,
            ['{0} move(s) replayed'.format(len(self.state.transcript))])

    @check_component('Declared names are fresh', AUDIT)
    def freshness(self):
        return CheckResult.from_problems(self.freshness_problems)

    @check_component('A moves match the strategy templates', AUDIT)
    def templates(self):
        problems = list()
        for k, (move, _) in enumerate(self.a_moves):
            annotation = move.annotation
            where = 'round {0}'.format(move.round)
            if annotation.get('case') not in CASES:
                problems.append('{0}: unknown case {1!r}'.format(
                    where, annotation.get('case')))
                continue
            if list(annotation.get('triple', ())) != list(triple_at(k)):
                problems.append('{0}: triple {1} out of order'.format(
                    where, annotation.get('triple')))
                continue
            if list(move.conditions) != expected_conditions(annotation):
                problems.append('{0}: conditions differ from the case {1} '
                                'template'.format(where, annotation['case']))
        return CheckResult.from_problems(problems)

    @check_component('Recomputed cases and moves agree with the transcript',
                     AUDIT)
    def recomputation(self):
        problems = list(self.case_problems)
        for move, expected in self.a_moves:
            if expected is not None and \
                    expected.annotation.get('case') != move.annotation.get('case'):
                problems.append('round {0}: recorded case {1}, recomputed {2}'
                                .format(move.round, move.annotation.get('case'),
                                        expected.annotation.get('case')))
        return CheckResult.from_problems(problems + self.fidelity_problems)

    def quadruples(self):
        for move, _ in self.a_moves:
            annotation = move.annotation
            if annotation.get('case') == '1.2' and annotation.get('realized'):
                f, g, h = annotation['triple']
                yield move.round, case12_template(g, h, annotation['a'],
                                                  annotation['b'])

    @check_component('Case 1.2 quadruples hold in the final witness', AUDIT)
    def case12(self):
        if self.witness is None:
            return CheckResult(True)
        problems = ['round {0}: {1} fails'.format(r, c)
                    for r, template in self.quadruples()
                    for c in template if not self.witness.holds(c)]
        return CheckResult.from_problems(problems)

    @check_component('Played conditions hold in the final witness', AUDIT)
    def validity(self):
        if self.witness is None:
            return CheckResult(True)
        return CheckResult.from_problems(
            str(c) for c in self.state.conditions()
            if not self.witness.holds(c))

    @check_component('Forcing answers hold in the final witness', AUDIT)
    def soundness(self):
        if self.witness is None:
            return CheckResult(True)
        problems = list()
        closure = self.state.closure()
        for c in self.state.conditions():
            if c.positive and not closure.is_trivial(c.word):
                problems.append('played equation {0} is not forced'.format(c))
        if not closure.consistent():
            problems.append('a played inequation is forced trivial')
        for move, _ in self.a_moves:
            f, g, h = move.annotation['triple']
            for x, y in ((f, g), (f, h)):
                word = comm(x, y)
                verdict = closure.word_status(word)
                if verdict is not Forcing.OPEN and \
                        self.witness.is_identity(word) != (verdict is Forcing.TRUE):
                    problems.append('[{0},{1}] = 1 is {2} but the witness '
                                    'disagrees'.format(x, y, verdict.value))
        return CheckResult.from_problems(problems)

    @check_component('Assigned elements have no torsion', AUDIT)
    def torsion(self):
        if self.witness is None:
            return CheckResult(True)
        problems = list()
        expr = self.witness.expr
        for name, word in sorted(self.witness.assignment.items()):
            if expr.is_identity(word):
                continue
            problems.extend('{0}^{1} = 1'.format(name, k)
                            for k in TORSION_POWERS
                            if expr.is_identity(word ** k))
        return CheckResult.from_problems(problems)

    @check_component('Commuting pairs with a processed non-commuting h are '
                     'witnessed or pending', AUDIT)
    def guarantee(self):
        if self.witness is None:
            return CheckResult(True)
        closure = self.state.closure()
        witnessed = set(tuple(m.annotation['triple'])
                        for m, _ in self.a_moves
                        if m.annotation.get('case') == '1.2'
                        and m.annotation.get('realized'))
        self.guaranteed, self.unrealized = list(), list()
        for move, _ in self.a_moves:
            f, g, h = triple = tuple(move.annotation['triple'])
            if closure.word_status(comm(f, g)) is Forcing.TRUE and \
                    closure.word_status(comm(f, h)) is Forcing.FALSE:
                (self.guaranteed if triple in witnessed
                 else self.unrealized).append(list(triple))
        notes = ['{0} witnessed, {1} unrealized'.format(
            len(self.guaranteed), len(self.unrealized))]
        return CheckResult(True, notes + ['unrealized {0}'.format(t)
                                          for t in self.unrealized])

    def summary(self):
        counts = dict((c, 0) for c in CASES)
        fallbacks = 0
        for move, _ in self.a_moves:
            counts[move.annotation['case']] = \
                counts.get(move.annotation['case'], 0) + 1
            fallbacks += bool(move.annotation.get('fallback'))
        played = self.state.played
        bound = max(played) + 1 if played else 0
        rejected = sum(1 for m in self.transcript.moves
                       if m.player == PLAYER_B and m.annotation.get('rejected'))
        return dict(moves=len(self.transcript), cases=counts,
                    fallbacks=fallbacks, rejected_b=rejected,
                    quadruples=sum(1 for _ in self.quadruples()),
                    guaranteed=len(getattr(self, 'guaranteed', ())),
                    unrealized=[list(t) for t in getattr(self, 'unrealized', ())],
                    pending=max(0, bound ** 3 - len(self.a_moves)))

def audit_transcript(transcript, strict=False):
    """
    Audit a transcript.

    :param bool strict: Raise :exc:`~rubin.exceptions.AuditFailure` when a
        check fails.
    :rtype: :class:`AuditReport`
    """
    if not transcript.moves:
        return AuditReport()
    audit = TranscriptAudit(transcript)
    report = AuditReport(audit.get_report(AUDIT), audit.summary())
    for desc, result in report.failures():
        log.error('Audit check failed: %s: %s', desc, '; '.join(
            str(d) for d in result.details[:5]))
    log.info('Audit of %d move(s): %s', len(transcript),
             'ok' if report.ok else 'FAILED')
    if strict and not report.ok:
        raise AuditFailure('{0} audit check(s) failed'.format(
            len(report.failures())))
    return report

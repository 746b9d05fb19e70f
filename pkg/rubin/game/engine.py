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

""" The game engine: player A's strategy against a pluggable player B.

A run starts with round 0, where A declares the identity. Each later round
``r`` is one move of A followed by one move of B. A's move in round ``r``

1. pads the played names so that every name below ``2r`` is played;
2. consumes the next triple ``(f, g, h)`` of the enumeration (increasing
   ``f+g+h``, then ``f``, then ``g``);
3. branches on the forcing status of ``[f,g] = 1`` and ``[f,h] = 1``:

   ======  =================  =================  ===========================
   case    ``[f,g] = 1``      ``[f,h] = 1``      move
   ======  =================  =================  ===========================
   1.1     forced true        forced true        empty
   1.2     forced true        forced false       ``[g,a] = 1``, ``[g,b] = 1``,
                                                 ``[a,[b,h]] != 1``,
                                                 ``[g,[a,[b,h]]] = 1``
                                                 with fresh ``a, b``
   1.3     forced true        open               ``[f,h] = 1``
   2       forced false       (any)              empty
   3       open               (any)              ``[f,g] != 1``
   ======  =================  =================  ===========================

Every move is accepted only once a witness group for all the conditions
played so far has been built (:mod:`rubin.game.witness`). For a 1.2 move
the overgroup construction of :mod:`rubin.symbolic.constructions` runs on
the current witness first, and its report becomes part of the plan.

When the 1.3 or 3 template has no witness, A plays its negation instead
(``fallback``); when neither works, or the 1.2 system has none, A plays the
empty system (``realized: false``).
"""

__all__ = ['GameState', 'AdmissibilityResult', 'FinalReport', 'new_game',
           'is_admissible', 'forcing_status', 'player_A_move',
           'player_B_move', 'play_move', 'run_game', 'sweep_seeds',
           'triples', 'triple_at', 'case12_template', 'CASES']

import functools
import itertools
import logging
from rubin.strategy import Task, get_strategy
from rubin.game.conditions import (Condition, Move, Transcript, comm,
                                   PLAYER_A, PLAYER_B)
from rubin.game.config import GameConfig
from rubin.game.closure import ForcingClosure, Forcing
from rubin.game.witness import build_witness, with_free_names, adopt_overgroup
from rubin.symbolic.words import SymWord
from rubin.symbolic.constructions import build_lemma31
from rubin.game.players import get_player
from rubin.exceptions import (UnplayedNameError, InadmissibleMoveError,
                              EngineInconsistency, HypothesisViolation)
import rubin.plugins.players

log = logging.getLogger('rubin.game.engine')
datalog = logging.getLogger('rubin.data.game.engine')

CASES = ('1.1', '1.2', '1.3', '2', '3')

def triples():
    """All triples of naturals, by increasing sum, then ``f``, then ``g``."""
    for s in itertools.count():
        for f in range(s + 1):
            for g in range(s - f + 1):
                yield f, g, s - f - g

@functools.lru_cache(maxsize=4096)
def triple_at(index):
    return next(itertools.islice(triples(), index, None))

def case12_template(g, h, a, b):
    """The four conditions making ``a, b`` witness ``[g,h]`` against ``f``."""
    inner = comm(a, comm(b, h))
    return [Condition.equation(comm(g, a)),
            Condition.equation(comm(g, b)),
            Condition.inequation(inner),
            Condition.equation(comm(g, inner))]

class AdmissibilityResult(object):
    """
    Answer of :func:`is_admissible`.

    :ivar bool admissible:
    :ivar witness: The extended :class:`~rubin.game.witness.Witness`, if
        admissible.
    :ivar str reason: Why the move was rejected.
    """
    def __init__(self, admissible, witness=None, reason=None):
        self.admissible = admissible
        self.witness = witness
        self.reason = reason

    @property
    def plan(self):
        return self.witness.plan if self.witness is not None else None

    def __bool__(self):
        return self.admissible

class GameState(object):
    """
    Mutable state of a run: the transcript so far, the current witness and
    the bookkeeping of A's strategy.
    """
    def __init__(self, config):
        self.config = config
        self.identity = config.identity_name
        self.transcript = Transcript(seed=config.seed, config=config.to_dict())
        self.round = 0
        self.triple_index = 0
        self.witness = None
        self.forcing_log = list()
        self.certificates = list()
        self._cache = dict()

    @property
    def played(self):
        key = ('played', len(self.transcript))
        if key not in self._cache:
            self._cache[key] = self.transcript.played()
        return self._cache[key]

    def conditions(self):
        return self.transcript.conditions()

    def closure(self, extra_names=()):
        key = ('closure', len(self.transcript), frozenset(extra_names))
        if key not in self._cache:
            conditions = self.conditions()
            self._cache[key] = ForcingClosure(
                self.played | frozenset(extra_names),
                [c.word for c in conditions if c.positive],
                [c.word for c in conditions if not c.positive],
                self.identity, self.config.derivation_bound,
                self.config.closure_cap)
        return self._cache[key]

    def is_admissible(self, move):
        return is_admissible(self, move)

    def apply(self, move, result):
        self.transcript.append(move)
        self.witness = result.witness
        self.certificates.append(dict(
            round=move.round, player=move.player,
            plan=[step for step in result.plan if step['step'] != 'vertices']))
        self._cache.clear()

class FinalReport(object):
    """
    Outcome of :func:`run_game`.

    :ivar list certificates: Per-move extension plans.
    :ivar witness: The final :class:`~rubin.game.witness.Witness`.
    :ivar list forcing_log: Forcing answers used by A, per round.
    :ivar audit: The :class:`~rubin.game.audit.AuditReport` (or ``None``).
    """
    def __init__(self, certificates, witness, forcing_log, audit=None):
        self.certificates = certificates
        self.witness = witness
        self.forcing_log = forcing_log
        self.audit = audit

    def case_counts(self):
        counts = dict((c, 0) for c in CASES)
        for entry in self.forcing_log:
            counts[entry['case']] += 1
        return counts

    def to_dict(self):
        return dict(certificates=self.certificates,
                    witness=self.witness.to_dict() if self.witness else None,
                    forcing_log=self.forcing_log,
                    cases=self.case_counts(),
                    audit=self.audit.to_dict() if self.audit else None)

def new_game(config=None):
    """
    Start a run: A declares the identity in round 0.

    :param config: :class:`~rubin.game.config.GameConfig` or a mapping.
    :rtype: :class:`GameState`
    """
    if not isinstance(config, GameConfig):
        config = GameConfig.from_dict(config)
    state = GameState(config)
    e = config.identity_name
    move = Move([Condition.equation(e)], PLAYER_A, 0, [e],
                dict(case='identity'))
    play_move(state, move)
    log.info('New game: identity %d, %d round(s), player B %r',
             e, config.rounds, config.b_strategy)
    return state

def _case12_witness(state, move):
    """
    Witness for A's Case 1.2 move.

    The overgroup construction runs on the current witness, with the padded
    names added as free generators. A cyclic ``<g, h>`` gives an amalgam
    with a decidable word problem, which is adopted with ``a, b`` sent to
    the new commuting elements. Otherwise the verified report is recorded
    and the panels realize the move.
    """
    annotation = move.annotation
    _, g, h = annotation['triple']
    a, b = annotation['a'], annotation['b']
    conditions = state.conditions() + list(move.conditions)
    current = with_free_names(state.witness,
                              [n for n in move.declared if n not in (a, b)])
    try:
        report = build_lemma31(current.expr,
                               current.evaluate(SymWord.gen(g)),
                               current.evaluate(SymWord.gen(h)))
    except HypothesisViolation as ex:
        log.info('Round %d: no overgroup for <%d, %d> (%s)', move.round,
                 g, h, ex)
        report = None
        step = dict(step='lemma31', g=g, h=h, case=None, ok=False,
                    notes=[str(ex)])
    else:
        step = dict(report.to_dict(), step='lemma31', g=g, h=h)

    if report is not None and report.ok and report.overgroup is not None:
        witness = adopt_overgroup(current, report, {a: 'a', b: 'b'}, [step])
        for c in conditions:
            if not witness.holds(c):
                raise EngineInconsistency(
                    'Overgroup witness violates {0}'.format(c))
        return witness
    witness = build_witness(state.played | move.names(), conditions,
                            state.identity)
    witness.plan.insert(0, step)
    return witness

def is_admissible(state, move):
    """
    Whether the conditions played so far together with ``move`` have a
    witness. Declared names must be fresh.

    :rtype: :class:`AdmissibilityResult`
    """
    key = ('admissible', len(state.transcript), move.key())
    if key in state._cache:
        return state._cache[key]
    reused = set(move.declared) & state.played
    if reused:
        result = AdmissibilityResult(False, reason='declared name(s) {0} '
                                     'already played'.format(sorted(reused)))
    else:
        try:
            if move.player == PLAYER_A \
                    and move.annotation.get('case') == '1.2' \
                    and move.annotation.get('a') is not None:
                witness = _case12_witness(state, move)
            else:
                witness = build_witness(
                    state.played | move.names(),
                    state.conditions() + list(move.conditions),
                    state.identity)
            result = AdmissibilityResult(True, witness)
        except InadmissibleMoveError as ex:
            result = AdmissibilityResult(False, reason=str(ex))
    state._cache[key] = result
    return result

def forcing_status(state, condition, extra_names=()):
    """
    :rtype: :class:`~rubin.game.closure.Forcing`
    :raises UnplayedNameError: if the condition uses an unplayed name.
    """
    unknown = condition.names() - state.played - frozenset(extra_names)
    if unknown:
        raise UnplayedNameError('Unplayed name(s) {0} in {1}'.format(
            sorted(unknown), condition))
    return state.closure(extra_names).status(condition)

def _first_realizable(state, candidates):
    for conditions, declared, annotation in candidates:
        move = Move(conditions, PLAYER_A, state.round, declared, annotation)
        result = is_admissible(state, move)
        if result:
            return move, result
        log.warning('Round %d: %s has no witness (%s)', state.round,
                    '; '.join(str(c) for c in conditions), result.reason)
    return None, None

def player_A_move(state):
    """
    A's move for the current round.

    :raises EngineInconsistency: if a forcing answer disagrees with the
        witness of the chosen move.
    :rtype: :class:`~rubin.game.conditions.Move`
    """
    r = state.round
    f, g, h = triple_at(state.triple_index)
    played = state.played
    padded = [n for n in range(max(2 * r, max(f, g, h) + 1))
              if n not in played]
    names = played | frozenset(padded)

    queries = list()
    def ask(x, y):
        word = comm(x, y)
        verdict = forcing_status(state, Condition.equation(word), padded)
        queries.append((word, verdict))
        return verdict

    base = dict(triple=[f, g, h], padded=padded, a=None, b=None,
                fallback=False, realized=True)
    def candidate(case, conditions, fresh=(), **extra):
        annotation = dict(base, case=case)
        annotation.update(extra)
        return conditions, padded + list(fresh), annotation

    fg = ask(f, g)
    if fg is Forcing.TRUE:
        fh = ask(f, h)
        if fh is Forcing.TRUE:
            options = [candidate('1.1', [])]
        elif fh is Forcing.FALSE:
            a = max(names) + 1
            b = a + 1
            options = [candidate('1.2', case12_template(g, h, a, b), [a, b],
                                 a=a, b=b)]
        else:
            c = Condition.equation(comm(f, h))
            options = [candidate('1.3', [c]),
                       candidate('1.3', [c.negate()], fallback=True)]
    elif fg is Forcing.FALSE:
        options = [candidate('2', [])]
    else:
        c = Condition.inequation(comm(f, g))
        options = [candidate('3', [c]),
                   candidate('3', [c.negate()], fallback=True)]

    move, result = _first_realizable(state, options)
    if move is None:
        _, _, annotation = options[0]
        annotation.update(a=None, b=None, realized=False)
        move = Move([], PLAYER_A, r, padded, annotation)
        result = is_admissible(state, move)
        log.warning('Round %d: case %s for %r not realized', r,
                    annotation['case'], (f, g, h))

    for word, verdict in queries:
        if verdict is Forcing.OPEN:
            continue
        if result.witness.is_identity(word) != (verdict is Forcing.TRUE):
            raise EngineInconsistency(
                'Forcing says {0} = 1 is {1} but the witness disagrees'
                .format(word, verdict.value))

    state.forcing_log.append(dict(
        round=r, triple=[f, g, h], case=move.annotation['case'],
        queries=[dict(word=str(w), status=v.value) for w, v in queries]))
    state.triple_index += 1
    log.debug('Round %d: triple %r -> case %s', r, (f, g, h),
              move.annotation['case'])
    return move

def player_B_move(state, strategy=None):
    """
    B's move for the current round; an inadmissible proposal is replaced
    by the empty system.

    :param strategy: Player-B key or :class:`~rubin.game.players.PlayerB`;
        defaults to the configured one.
    """
    if strategy is None or isinstance(strategy, str):
        strategy = get_player(strategy or state.config.b_strategy,
                              state.config)
    move = strategy.propose(state)
    result = is_admissible(state, move)
    if not result:
        log.warning('Round %d: rejected player-B move %s (%s)', state.round,
                    move, result.reason)
        move = strategy.make_move(state, rejected=True, reason=result.reason)
    return move

def play_move(state, move):
    """
    Append ``move`` to the transcript and adopt its witness.

    :raises InadmissibleMoveError: if the move has no witness.
    """
    result = is_admissible(state, move)
    if not result:
        raise InadmissibleMoveError('Move {0} is not admissible: {1}'.format(
            move, result.reason))
    state.apply(move, result)
    datalog.debug('Played %s', move)
    return result

def run_game(config=None, audit=True):
    """
    Play a full run.

    :return: ``(transcript, report)``
    :rtype: (:class:`~rubin.game.conditions.Transcript`, :class:`FinalReport`)
    """
    state = new_game(config)
    player = get_player(state.config.b_strategy, state.config)
    for r in range(1, state.config.rounds + 1):
        state.round = r
        play_move(state, player_A_move(state))
        play_move(state, player_B_move(state, player))
    log.info('Game finished after %d round(s): %d name(s) played',
             state.config.rounds, len(state.played))
    rejected = sum(1 for m in state.transcript.moves
                   if m.player == PLAYER_B and m.annotation.get('rejected'))
    if rejected:
        log.warning('Player B: %d of %d move(s) rejected', rejected,
                    state.config.rounds)
    audit_report = None
    if audit:
        from rubin.game.audit import audit_transcript
        audit_report = audit_transcript(state.transcript)
    report = FinalReport(state.certificates, state.witness,
                         state.forcing_log, audit_report)
    return state.transcript, report

class GameRunTask(Task):
    """One run of a seed sweep."""
    def __init__(self, config, seed):
        self.config = config.replace(seed=seed)
        self.task_id = 'seed{0}'.format(seed)

    def perform(self):
        transcript, report = run_game(self.config)
        return (self.config.seed, transcript.digest(),
                bool(report.audit and report.audit.ok))

def sweep_seeds(config, seeds, strategy='sequential'):
    """
    Run one game per seed.

    :return: List of ``(seed, transcript digest, audit verdict)``.
    """
    if not isinstance(config, GameConfig):
        config = GameConfig.from_dict(config)
    results = get_strategy(strategy).perform(
        GameRunTask(config, seed) for seed in seeds)
    log.info('Seed sweep: %d run(s), %d audit failure(s)', len(results),
             sum(1 for _, _, ok in results if not ok))
    return results

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

""" Conditions, moves and transcripts of the game.

Elements are named by natural numbers. A :class:`Condition` is an equation
``w = 1`` or an inequation ``w != 1`` over names; a :class:`Move` is a
finite (possibly empty) set of conditions played by one player in one
round; a :class:`Transcript` is the ordered play history together with the
configuration it was played under.

JSON form of a condition: ``{"word": [[name, 1], [name, -1], ...],
"polarity": "eq"}`` (or ``"neq"``).
"""

__all__ = ['Condition', 'Move', 'Transcript', 'comm', 'EQ', 'NEQ',
           'PLAYER_A', 'PLAYER_B']

import hashlib
import json
from rubin.symbolic.words import SymWord, commutator
from rubin.exceptions import ConfigurationError
from rubin.export import to_json, from_json

EQ, NEQ = 'eq', 'neq'
PLAYER_A, PLAYER_B = 'A', 'B'

def _word(x):
    return x if isinstance(x, SymWord) else SymWord.gen(x)

def comm(x, y):
    """The commutator ``[x,y] = x^-1 y^-1 x y`` of names or words."""
    return commutator(_word(x), _word(y))

class Condition(object):
    """
    An equation (``positive``) or an inequation over element names.

    :param word: A :class:`~rubin.symbolic.words.SymWord` or a single name.
    """
    __slots__ = ('word', 'positive')

    def __init__(self, word, positive=True):
        self.word = _word(word)
        self.positive = bool(positive)

    @staticmethod
    def equation(word):
        return Condition(word, True)

    @staticmethod
    def inequation(word):
        return Condition(word, False)

    def negate(self):
        return Condition(self.word, not self.positive)

    def names(self):
        return self.word.names()

    @property
    def polarity(self):
        return EQ if self.positive else NEQ

    def to_dict(self):
        return dict(word=[list(l) for l in self.word.letters()],
                    polarity=self.polarity)

    @staticmethod
    def from_dict(data):
        try:
            polarity = data['polarity']
            if polarity not in (EQ, NEQ):
                raise ConfigurationError(
                    'Unknown polarity {0!r}'.format(polarity))
            letters = [(int(n), int(s)) for n, s in data['word']]
        except (KeyError, TypeError, ValueError) as ex:
            raise ConfigurationError('Malformed condition {0!r}: {1}'
                                     .format(data, ex))
        if any(s not in (1, -1) for _, s in letters):
            raise ConfigurationError(
                'Letters must carry exponent 1 or -1: {0!r}'.format(data))
        return Condition(SymWord.from_letters(letters), polarity == EQ)

    def __eq__(self, other):
        return (isinstance(other, Condition) and self.word == other.word
                and self.positive == other.positive)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.word, self.positive))

    def __str__(self):
        return '{0} {1} 1'.format(self.word, '=' if self.positive else '!=')

    def __repr__(self):
        return 'Condition({0!r})'.format(str(self))

class Move(object):
    """
    A finite system of conditions played by one player.

    :param conditions: The conditions (kept in the given order).
    :param str player: ``'A'`` or ``'B'``.
    :param int round: Round index; round 0 is the identity declaration.
    :param declared: Names introduced by the move.
    :param dict annotation: Free-form record of how the move was chosen
        (triple, case label, allocated names, fallback flags).
    """
    def __init__(self, conditions=(), player=PLAYER_A, round=0,
                 declared=(), annotation=None):
        self.conditions = tuple(conditions)
        self.player = player
        self.round = round
        self.declared = tuple(sorted(set(declared)))
        self.annotation = dict(annotation or dict())

    def is_empty(self):
        return not self.conditions

    def names(self):
        result = set(self.declared)
        for c in self.conditions:
            result |= c.names()
        return frozenset(result)

    def to_dict(self):
        return dict(player=self.player, round=self.round,
                    declared=list(self.declared),
                    conditions=[c.to_dict() for c in self.conditions],
                    annotation=self.annotation)

    def key(self):
        """Canonical serialized form, usable as a cache key."""
        return json.dumps(self.to_dict(), sort_keys=True)

    @staticmethod
    def from_dict(data):
        try:
            player = data['player']
            if player not in (PLAYER_A, PLAYER_B):
                raise ConfigurationError('Unknown player {0!r}'.format(player))
            return Move([Condition.from_dict(c) for c in data['conditions']],
                        player, int(data['round']),
                        [int(n) for n in data.get('declared', ())],
                        data.get('annotation'))
        except (KeyError, TypeError, ValueError) as ex:
            raise ConfigurationError('Malformed move: {0}'.format(ex))

    def __eq__(self, other):
        return isinstance(other, Move) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        body = '; '.join(str(c) for c in self.conditions) or 'empty'
        return '{0}{1}: {2}'.format(self.player, self.round, body)

class Transcript(object):
    """
    Ordered play history.

    :param list moves: The moves in play order.
    :param int seed: Random seed of the run.
    :param dict config: Configuration snapshot
        (:meth:`~rubin.game.config.GameConfig.to_dict`).
    """
    def __init__(self, moves=(), seed=0, config=None):
        self.moves = list(moves)
        self.seed = seed
        self.config = dict(config or dict())

    def append(self, move):
        self.moves.append(move)

    def conditions(self, upto=None):
        """All conditions of the first ``upto`` moves, in play order."""
        moves = self.moves if upto is None else self.moves[:upto]
        return [c for m in moves for c in m.conditions]

    def played(self, upto=None):
        moves = self.moves if upto is None else self.moves[:upto]
        result = set()
        for m in moves:
            result |= m.names()
        return frozenset(result)

    def to_dict(self):
        return dict(seed=self.seed, config=self.config,
                    moves=[m.to_dict() for m in self.moves])

    @staticmethod
    def from_dict(data):
        try:
            return Transcript([Move.from_dict(m) for m in data['moves']],
                              int(data.get('seed', 0)),
                              data.get('config'))
        except (KeyError, TypeError) as ex:
            raise ConfigurationError('Malformed transcript: {0}'.format(ex))

    def to_json(self):
        return to_json(self)

    @staticmethod
    def from_json(text):
        return from_json(text, Transcript)

    def digest(self):
        """SHA-256 of the serialized transcript."""
        return hashlib.sha256(self.to_json().encode('utf-8')).hexdigest()

    def __len__(self):
        return len(self.moves)

    def __eq__(self, other):
        return (isinstance(other, Transcript)
                and self.to_dict() == other.to_dict())

    def __ne__(self, other):
        return not self == other

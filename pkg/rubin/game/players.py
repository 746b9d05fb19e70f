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

""" Strategies of player B.

Player B is pluggable: implementations are registered in the
:class:`PlayerB` factory (see :mod:`rubin.plugins.players`) and selected by
the ``b_strategy`` setting. A strategy only *proposes* a move; the engine
checks its admissibility and replaces a rejected proposal by the empty
system.
"""

__all__ = ['PlayerB', 'get_player']

import occo.util.factory as factory
from rubin.game.conditions import Move, PLAYER_B
from rubin.game.config import B_STRATEGIES
from rubin.exceptions import ConfigurationError

class PlayerB(factory.MultiBackend):
    """
    Abstract player-B strategy.

    :param config: The :class:`~rubin.game.config.GameConfig` of the run.
    """
    protocol_id = None

    def __init__(self, config):
        self.config = config

    def propose(self, state):
        """
        Choose the move of the current round.

        :param state: The :class:`~rubin.game.engine.GameState`; strategies
            may call its ``is_admissible`` method.
        :rtype: :class:`~rubin.game.conditions.Move`
        """
        raise NotImplementedError()

    def make_move(self, state, conditions=(), declared=(), **annotation):
        annotation['strategy'] = self.protocol_id
        return Move(conditions, PLAYER_B, state.round, declared, annotation)

    @staticmethod
    def fresh_name(state, offset=0):
        """The ``offset``-th name above every played name."""
        return max(state.played) + 1 + offset

def get_player(key, config):
    """
    Instantiate the player-B strategy registered under ``key``.

    :raises ConfigurationError: if no such strategy is registered.
    """
    if not PlayerB.has_backend(key):
        raise ConfigurationError(
            'Unknown player-B strategy {0!r} (available: {1})'.format(
                key, ', '.join(B_STRATEGIES)))
    return PlayerB.instantiate(key, config)

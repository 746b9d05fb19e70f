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

""" Player B playing seeded random admissible conditions.

Each round draws up to ``random_retries`` candidate moves from a generator
seeded by ``(seed, round)``, so a run is reproducible. Candidates:

- ``[x,y] = 1`` or ``[x,y] != 1`` for two played names,
- a fresh name with no condition,
- a fresh name ``t`` defined as ``n^-1 x n`` with a fresh ``n``.

The first admissible candidate is played; the empty system otherwise.
"""

import logging
import numpy as np
import occo.util.factory as factory
from rubin.game.conditions import Condition, comm
from rubin.game.players import PlayerB
from rubin.plugins.players.conjugacy import conjugation_word

log = logging.getLogger('rubin.plugins.players.random')

PROTOCOL_ID = 'random'

@factory.register(PlayerB, PROTOCOL_ID)
class RandomConsistent(PlayerB):
    protocol_id = PROTOCOL_ID

    def candidate(self, state, rng):
        names = sorted(state.played - frozenset([state.identity]))
        kind = int(rng.integers(4)) if len(names) >= 2 else 2 + int(rng.integers(2))
        if kind in (0, 1):
            x, y = (int(v) for v in rng.choice(names, size=2, replace=False))
            condition = Condition(comm(x, y), positive=(kind == 0))
            return self.make_move(state, [condition],
                                  kind='commute' if kind == 0 else 'noncommute')
        n = self.fresh_name(state)
        if kind == 2 or not names:
            return self.make_move(state, [], [n], kind='fresh')
        x = int(rng.choice(names))
        t = self.fresh_name(state, 1)
        return self.make_move(state,
                              [Condition.equation(conjugation_word(n, x, t))],
                              [n, t], kind='conjugate')

    def propose(self, state):
        rng = np.random.default_rng([self.config.seed, state.round])
        for attempt in range(self.config.random_retries):
            move = self.candidate(state, rng)
            move.annotation['attempts'] = attempt + 1
            if state.is_admissible(move):
                return move
            log.debug('Candidate %s rejected', move)
        log.info('No admissible candidate after %d attempt(s)',
                 self.config.random_retries)
        return self.make_move(state, note='retries exhausted')

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

""" Player B declaring that a fresh element conjugates ``k`` to ``k+1``.

In every round the player takes a fresh name ``n`` and plays

- ``n j^-1 != 1`` for every played name ``j``,
- ``n^-1 k n (k+1)^-1 = 1`` for every played ``k`` such that ``k+1`` is
  played and neither is the identity.
"""

import logging
import occo.util.factory as factory
from rubin.symbolic.words import SymWord
from rubin.game.conditions import Condition
from rubin.game.players import PlayerB

log = logging.getLogger('rubin.plugins.players.conjugacy')

def conjugation_word(n, k, t):
    """``n^-1 k n t^-1``."""
    return SymWord.gen(n, -1) * SymWord.gen(k) * SymWord.gen(n) \
        * SymWord.gen(t, -1)

PROTOCOL_ID = 'conjugacy'

@factory.register(PlayerB, PROTOCOL_ID)
class ConjugacyForcer(PlayerB):
    protocol_id = PROTOCOL_ID

    def propose(self, state):
        played = sorted(state.played)
        n = self.fresh_name(state)
        conditions = [Condition.inequation(SymWord.gen(n) * SymWord.gen(j, -1))
                      for j in played]
        chain = [k for k in played
                 if k != state.identity and k + 1 in state.played
                 and k + 1 != state.identity]
        conditions.extend(Condition.equation(conjugation_word(n, k, k + 1))
                          for k in chain)
        log.debug('Conjugator %d for chain %r', n, chain)
        return self.make_move(state, conditions, [n], conjugator=n,
                              chain=chain)

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

""" The passive player B: always plays the empty system.
"""

import occo.util.factory as factory
from rubin.game.players import PlayerB

PROTOCOL_ID = 'passive'

@factory.register(PlayerB, PROTOCOL_ID)
class PassivePlayer(PlayerB):
    protocol_id = PROTOCOL_ID

    def propose(self, state):
        return self.make_move(state)

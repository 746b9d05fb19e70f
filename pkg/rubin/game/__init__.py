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

""" Simulation of the game building groups where commuting elements are
algebraically disjoint.

Player A follows a fixed strategy (:mod:`rubin.game.engine`); player B is
pluggable (:mod:`rubin.game.players`). Every move is accepted only together
with a witness group (:mod:`rubin.game.witness`), and a finished run can be
audited from its transcript alone (:mod:`rubin.game.audit`).
"""

from rubin.game.conditions import Condition, Move, Transcript, comm
from rubin.game.config import GameConfig
from rubin.game.closure import Forcing, ForcingClosure
from rubin.game.engine import (GameState, FinalReport, new_game,
                               is_admissible, forcing_status, player_A_move,
                               player_B_move, play_move, run_game,
                               sweep_seeds)
from rubin.game.audit import AuditReport, audit_transcript

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
from rubin.game.config import GameConfig
from rubin.exceptions import ConfigurationError

class GameConfigTest(unittest.TestCase):
    def test_defaults(self):
        cfg = GameConfig()
        self.assertEqual(cfg.to_dict(), GameConfig.DEFAULTS)
        self.assertEqual(cfg.identity_name, 0)
        self.assertEqual(cfg.b_strategy, 'passive')
    def test_from_dict(self):
        cfg = GameConfig.from_dict({'b-strategy': 'random', 'seed': 4,
                                    'rounds': None})
        self.assertEqual(cfg.b_strategy, 'random')
        self.assertEqual(cfg.seed, 4)
        self.assertEqual(cfg.rounds, 10)
        self.assertEqual(GameConfig.from_dict(None), GameConfig())
    def test_unknown(self):
        with self.assertRaises(ConfigurationError):
            GameConfig(colour='blue')
    def test_ranges(self):
        for bad in (dict(identity_name=2), dict(rounds=-1),
                    dict(derivation_bound=3), dict(b_strategy='greedy'),
                    dict(seed='x'), dict(rounds=True)):
            with self.assertRaises(ConfigurationError, msg=repr(bad)):
                GameConfig(**bad)
    def test_replace(self):
        cfg = GameConfig(seed=1)
        other = cfg.replace(seed=2)
        self.assertEqual((cfg.seed, other.seed), (1, 2))
        self.assertNotEqual(cfg, other)
        with self.assertRaises(ConfigurationError):
            cfg.replace(rounds=-3)

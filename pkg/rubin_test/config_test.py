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

import os
import shutil
import tempfile
import unittest
from .common import *
from rubin.cli.settings import load_flat_config, normalize_key
from rubin.cli.main import setup_logging, DEFAULT_LOG_CONFIG
from rubin.symbolic.constructions import fresh_name
from rubin.game.status import (CheckTag, CheckResult, check_component,
                               CompositeCheck)
from rubin.exceptions import ConfigurationError

TAG = CheckTag('sample')

class SampleCheck(CompositeCheck):
    def __init__(self):
        self.calls = list()
    @check_component('first passes', TAG)
    def first(self, value):
        self.calls.append('first')
        return CheckResult(value > 0, ['positive'])
    @check_component('second is plain bool', TAG)
    def second(self, value):
        self.calls.append('second')
        return value > 10

class ConfigTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()
    def tearDown(self):
        shutil.rmtree(self.tmp)
    def write(self, name, text):
        path = os.path.join(self.tmp, name)
        with open(path, 'w') as f:
            f.write(text)
        return path

    def test_harness_config(self):
        self.assertEqual(cfg.logging['version'], 1)
    def test_bundled_logging(self):
        setup_logging()
        self.assertTrue(os.path.isfile(DEFAULT_LOG_CONFIG))
        logging.config.dictConfig(cfg.logging)
    def test_bad_logging(self):
        with self.assertRaises(ConfigurationError):
            setup_logging(self.write('log.yaml', 'logging: [1, 2]\n'))
        with self.assertRaises(ConfigurationError):
            setup_logging(os.path.join(self.tmp, 'nothing.yaml'))
    def test_flat(self):
        path = self.write('game.conf', '\n'.join([
            '# game defaults',
            'rounds = 20',
            'b-strategy: random   # inline comment',
            '--seed = 7',
            'audit = true',
            '',
        ]))
        self.assertEqual(load_flat_config(path),
                         dict(rounds=20, b_strategy='random', seed=7,
                              audit=True))
    def test_flat_errors(self):
        with self.assertRaises(ConfigurationError):
            load_flat_config(self.write('a.conf', 'rounds 20\n'))
        with self.assertRaises(ConfigurationError):
            load_flat_config(self.write('b.conf', ' = 3\n'))
        with self.assertRaises(ConfigurationError):
            load_flat_config(os.path.join(self.tmp, 'none.conf'))
    def test_normalize(self):
        self.assertEqual(normalize_key('--derivation-bound'),
                         'derivation_bound')

class FreshNameTest(unittest.TestCase):
    def test_fresh_name(self):
        self.assertEqual(fresh_name('a', {'b'}), 'a')
        self.assertEqual(fresh_name('a', {'a', 'a_1'}), 'a_2')

class StatusTest(unittest.TestCase):
    def test_report(self):
        check = SampleCheck()
        report = check.get_report(TAG, 5)
        self.assertEqual([d for d, _ in report],
                         ['first passes', 'second is plain bool'])
        self.assertTrue(report[0][1].ok)
        self.assertEqual(report[0][1].details, ['positive'])
        self.assertFalse(report[1][1])
    def test_lazy(self):
        check = SampleCheck()
        self.assertFalse(check.get_composite_status(TAG, True, -1))
        self.assertEqual(check.calls, ['first'])
        check = SampleCheck()
        self.assertFalse(check.get_composite_status(TAG, False, -1))
        self.assertEqual(check.calls, ['first', 'second'])
    def test_from_problems(self):
        self.assertTrue(CheckResult.from_problems([], ['note']).ok)
        r = CheckResult.from_problems(['bad'])
        self.assertFalse(r.ok)
        self.assertEqual(r.details, ['bad'])

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

import io
import json
import os
import shutil
import tempfile
import unittest
from .common import *
from rubin.cli.main import main, make_parser, _subparsers

def run(*argv):
    out = io.StringIO()
    status = main(list(argv), out=out)
    return status, out.getvalue()

class CLITest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp(prefix='rubin_test_')
    def tearDown(self):
        shutil.rmtree(self.tmp)
    def path(self, name):
        return os.path.join(self.tmp, name)

    def test_disjoint(self):
        status, out = run('disjoint', '--group', 'S4',
                          '--g', '(0 1)', '--f', '(0 1)(2 3)')
        self.assertEqual((status, out), (0, 'true\n'))

    def test_disjoint_false_is_success(self):
        status, out = run('disjoint', '--group', 'S4',
                          '--g', '(0 1)(2 3)', '--f', '(0 1)')
        self.assertEqual(status, 0)
        self.assertIn(out, ('true\n', 'false\n'))

    def test_lemma34(self):
        self.assertEqual(run('lemma34', '--m', '2'), (0, 'verified\n'))

    def test_poset_dot(self):
        dot = self.path('out.dot')
        status, out = run('poset', '--group', 'C5xC5', '--dot', dot)
        self.assertEqual(status, 0)
        self.assertTrue(out.startswith('1 node(s)'))
        with open(dot) as f:
            text = f.read()
        self.assertIn('n0 [', text)
        self.assertNotIn('->', text)

    def test_json(self):
        status, out = run('--json', 'classes', '--group', 'S3')
        self.assertEqual(status, 0)
        data = json.loads(out)
        self.assertEqual(sorted(len(c) for c in data['classes']), [1, 2, 3])

    def test_bad_group(self):
        status, _ = run('classes', '--group', 'perm: (0 1')
        self.assertEqual(status, 2)
        status, _ = run('classes', '--group', 'free(a,b)')
        self.assertEqual(status, 2)

    def test_usage(self):
        with self.assertRaises(SystemExit) as cm:
            run('disjoint', '--group', 'S4')
        self.assertEqual(cm.exception.code, 2)

    def test_config(self):
        cfg = self.path('game.cfg')
        with open(cfg, 'w') as f:
            f.write('# game defaults\nrounds = 2\nb-strategy = conjugacy\n')
        transcript = self.path('t.json')
        status, out = run('--config', cfg, 'game-run', '--audit',
                          '--out', transcript)
        self.assertEqual(status, 0)
        self.assertIn('audit: ok', out)
        with open(transcript) as f:
            data = json.load(f)
        self.assertEqual(data['config']['rounds'], 2)
        self.assertEqual(data['config']['b_strategy'], 'conjugacy')
        self.assertEqual(len(data['moves']), 5)
        self.assertEqual(run('game-audit', transcript)[0], 0)

    def test_config_unknown_key(self):
        cfg = self.path('bad.cfg')
        with open(cfg, 'w') as f:
            f.write('colour = blue\n')
        self.assertEqual(run('--config', cfg, 'lemma34')[0], 2)

    def test_forged_transcript(self):
        transcript = self.path('t.json')
        self.assertEqual(run('game-run', '--rounds', '2',
                             '--out', transcript)[0], 0)
        with open(transcript) as f:
            data = json.load(f)
        data['moves'][1], data['moves'][2] = data['moves'][2], data['moves'][1]
        with open(transcript, 'w') as f:
            json.dump(data, f)
        status, out = run('game-audit', transcript)
        self.assertEqual(status, 1)
        self.assertIn('audit: FAILED', out)

    def test_missing_transcript(self):
        self.assertEqual(run('game-audit', self.path('missing.json'))[0], 2)

    def test_search_budget(self):
        status, out = run('lemma33-search', '--N', '1', '--L', '0',
                          '--M', '1')
        self.assertEqual(status, 0)
        self.assertIn('2 of 2 candidate(s) examined', out)
        status, _ = run('lemma33-search', '--N', '2', '--L', '2', '--M', '2',
                        '--budget', '5', '--strict')
        self.assertEqual(status, 2)

    def test_lemma31(self):
        status, out = run('lemma31', '--group', 'abelian(h)', '--g', 'h^2',
                          '--h', 'h')
        self.assertEqual(status, 0)
        self.assertIn('case: cyclic', out)
        self.assertNotIn('FAIL', out)

    def test_lemma31_hypothesis(self):
        status, _ = run('lemma31', '--group', 'free(g,h)', '--g', 'h',
                        '--h', 'h')
        self.assertEqual(status, 2)

    def test_commands(self):
        commands = set(_subparsers(make_parser()))
        self.assertEqual(commands, set([
            'disjoint', 'sf', 'matrix', 'classes', 'poset', 'product-check',
            'supports', 'lemma31', 'lemma32', 'lemma33-search', 'lemma34',
            'game-run', 'game-audit', 'game-sweep']))

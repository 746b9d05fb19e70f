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

""" Command line front end.

Every subcommand parses its inputs, calls one library operation and prints
the result, as text or (``--json``) as JSON. Exit status:

- 0: success, including computed negative answers (``disjoint`` printing
  ``false``);
- 1: a verification failed (a construction claim, a search counterexample,
  an audit);
- 2: the command could not be run (usage, parse or configuration errors,
  violated hypotheses, exceeded resource bounds).

``--config PATH`` reads a flat ``key = value`` file whose keys are long
flags (``b-strategy = random``); command line flags take precedence.
"""

__all__ = ['main', 'make_parser', 'Outcome']

import argparse
import logging
import logging.config
import sys
import rubin
import occo.util as util
import occo.util.config as config
from rubin.cli.settings import load_flat_config
from rubin.strategy import STRATEGIES
from rubin.permgroup import (FiniteGroup, format_perm, conjugacy_classes)
from rubin.disjointness import (is_algebraically_disjoint, compute_S,
                                centralizer_of_set, disjointness_matrix,
                                rubin_poset, product_disjointness_check,
                                support_comparison, DEFAULT_POWER)
from rubin.symbolic.nodes import GroupExpr
from rubin.symbolic.constructions import (build_lemma31, build_lemma32,
                                          lemma34_report)
from rubin.symbolic.search import lemma33_bounded_search
from rubin.game.config import GameConfig, B_STRATEGIES
from rubin.game.conditions import Transcript
from rubin.game.engine import run_game, sweep_seeds
from rubin.game.audit import audit_transcript
from rubin.export import poset_to_dot, to_json, write_text
from rubin.cli.grammar import (parse_group_spec, parse_perm, parse_word,
                               PERM_HINT, EXPR_HINT)
from rubin.exceptions import (RubinError, ParseError, ConfigurationError,
                              HypothesisViolation)

log = logging.getLogger('rubin.cli')

DEFAULT_LOG_CONFIG = util.rel_to_file('logging.yaml')

class Outcome(object):
    """
    Result of a subcommand.

    :param data: JSON-serializable data (or an object with ``to_dict``).
    :param list lines: Text output.
    :param bool ok: ``False`` for a failed verification.
    """
    def __init__(self, data, lines, ok=True):
        self.data, self.lines, self.ok = data, list(lines), ok

def _finite(text):
    G = parse_group_spec(text)
    if not isinstance(G, FiniteGroup):
        raise ParseError('Expected a finite permutation group', hint=PERM_HINT)
    return G

def _expression(text):
    E = parse_group_spec(text)
    if not isinstance(E, GroupExpr):
        raise ParseError('Expected a group expression', hint=EXPR_HINT)
    return E

def _ordered(G, elements):
    return [format_perm(p) for p in sorted(elements, key=G.index)]

def cmd_disjoint(args):
    G = _finite(args.group)
    g, f = parse_perm(args.g, G.degree), parse_perm(args.f, G.degree)
    result = is_algebraically_disjoint(G, g, f)
    return Outcome(dict(g=format_perm(g), f=format_perm(f), disjoint=result),
                   ['true' if result else 'false'])

def cmd_sf(args):
    G = _finite(args.group)
    f = parse_perm(args.f, G.degree)
    S = compute_S(G, f, args.power)
    C = centralizer_of_set(G, S)
    data = dict(f=format_perm(f), power=args.power, S=_ordered(G, S),
                centralizer=_ordered(G, C), f_in_centralizer=f in C)
    return Outcome(data, ['S_f = {{{0}}}'.format(', '.join(data['S'])),
                          'C_G(S_f): {0} element(s)'.format(len(C)),
                          'f in C_G(S_f): {0}'.format(
                              'true' if f in C else 'false')])

def cmd_matrix(args):
    G = _finite(args.group)
    M = disjointness_matrix(G)
    if args.out:
        write_text(args.out, to_json(M))
    lines = ['{0:>12} {1}'.format(format_perm(G.elements[i]),
                                  ''.join('1' if x else '0' for x in row))
             for i, row in enumerate(M.D)]
    return Outcome(M, lines)

def cmd_classes(args):
    G = _finite(args.group)
    classes = [_ordered(G, c) for c in conjugacy_classes(G)]
    return Outcome(dict(classes=classes),
                   ['{0}: {1}'.format(len(c), ' '.join(c)) for c in classes])

def cmd_poset(args):
    G = _finite(args.group)
    P = rubin_poset(G, include_group=args.include_group, power=args.power,
                    strategy=args.strategy)
    if args.dot:
        write_text(args.dot, poset_to_dot(P))
    if args.out:
        write_text(args.out, to_json(P))
    lines = ['{0} node(s), {1} covering edge(s)'.format(len(P), len(P.hasse))]
    lines.extend('node {0}: |C|={1}'.format(i, len(n))
                 for i, n in enumerate(P.nodes))
    return Outcome(P, lines)

def cmd_product_check(args):
    report = product_disjointness_check(_finite(args.left),
                                        _finite(args.right))
    lines = ['{0} cross pair(s), {1} counterexample(s)'.format(
        report.pairs_checked, len(report.counterexamples))] + report.notes
    return Outcome(report, lines, report.ok)

def cmd_supports(args):
    data = support_comparison(_finite(args.group)).to_dict()
    lines = ['{0}: {1}'.format(k.replace('_', ' '), ', '.join(
        '{0}={1}'.format(kk, vv) for kk, vv in sorted(v.items())))
        for k, v in sorted(data.items())]
    return Outcome(data, lines)

def _claim_lines(report):
    lines = ['case: {0}'.format(report.case)]
    lines.extend('{0} {1}'.format('ok  ' if c.holds else 'FAIL', c.text)
                 for c in report.claims)
    lines.extend('note: {0}'.format(n) for n in report.notes)
    return lines

def cmd_lemma31(args):
    E = _expression(args.group)
    report = build_lemma31(E, parse_word(args.g), parse_word(args.h))
    return Outcome(report, _claim_lines(report), report.ok)

def cmd_lemma32(args):
    K = _expression(args.group)
    result = build_lemma32(K, args.g, args.gamma)
    data, lines, ok = result.report.to_dict(), _claim_lines(result.report), \
        result.report.ok
    if args.ball:
        ball = result.embedding_ball_check(args.ball)
        data['ball_check'] = ball.to_dict()
        lines.append('ball check up to length {0}: {1} word(s), {2} '
                     'mismatch(es)'.format(ball.max_len, ball.words,
                                           len(ball.mismatches)))
        ok = ok and ball.ok
    return Outcome(data, lines, ok)

def cmd_lemma33_search(args):
    report = lemma33_bounded_search(args.N, args.L, args.M, args.budget,
                                    args.strategy, args.strict)
    lines = ['{0} of {1} candidate(s) examined{2}, {3} counterexample(s)'
             .format(report.candidates, report.total,
                     ' (partial)' if report.partial else '',
                     len(report.counterexamples))]
    return Outcome(report, lines, report.ok)

def cmd_lemma34(args):
    report = lemma34_report(args.m)
    return Outcome(report, ['verified' if report.ok else 'FAILED'], report.ok)

def _game_config(args):
    return GameConfig.from_dict(dict(
        seed=args.seed, rounds=args.rounds, identity_name=args.identity_name,
        b_strategy=args.b_strategy, derivation_bound=args.derivation_bound,
        random_retries=args.random_retries))

def _audit_lines(audit):
    if audit is None:
        return ['audit: skipped']
    lines = ['audit: {0}'.format('ok' if audit.ok else 'FAILED')]
    lines.extend('  FAIL {0}: {1}'.format(desc, '; '.join(
        str(d) for d in result.details[:3])) for desc, result in
        audit.failures())
    return lines

def cmd_game_run(args):
    transcript, report = run_game(_game_config(args), audit=args.audit)
    if args.out:
        write_text(args.out, transcript.to_json())
    if args.report:
        write_text(args.report, to_json(report))
    counts = report.case_counts()
    lines = ['{0} move(s), digest {1}'.format(len(transcript),
                                              transcript.digest()),
             'cases: ' + ', '.join('{0}={1}'.format(c, n)
                                   for c, n in sorted(counts.items()))]
    lines.extend(_audit_lines(report.audit))
    ok = report.audit is None or report.audit.ok
    return Outcome(report, lines, ok)

def cmd_game_audit(args):
    try:
        with open(args.transcript) as f:
            text = f.read()
    except OSError as ex:
        raise ConfigurationError('Cannot read transcript: {0}'.format(ex))
    audit = audit_transcript(Transcript.from_json(text))
    return Outcome(audit, _audit_lines(audit), audit.ok)

def cmd_game_sweep(args):
    results = sweep_seeds(_game_config(args), args.seeds, args.strategy)
    data = [dict(seed=s, digest=d, audit=ok) for s, d, ok in results]
    lines = ['seed {0}: {1} {2}'.format(s, d[:16], 'ok' if ok else 'FAILED')
             for s, d, ok in results]
    return Outcome(data, lines, all(ok for _, _, ok in results))

def _group_option(parser, flag='--group', help='group specification'):
    parser.add_argument(flag, required=True, help=help)

def _game_options(parser):
    defaults = GameConfig.DEFAULTS
    parser.add_argument('--rounds', type=int, default=defaults['rounds'])
    parser.add_argument('--seed', type=int, default=defaults['seed'])
    parser.add_argument('--b-strategy', choices=B_STRATEGIES,
                        default=defaults['b_strategy'])
    parser.add_argument('--identity-name', type=int, choices=(0, 1),
                        default=defaults['identity_name'])
    parser.add_argument('--derivation-bound', type=int,
                        default=defaults['derivation_bound'])
    parser.add_argument('--random-retries', type=int,
                        default=defaults['random_retries'])

def make_parser():
    """The argument parser; subparsers carry their handler as ``handler``."""
    parser = argparse.ArgumentParser(
        prog='rubin', description='Algebraic disjointness toolkit. '
        'Permutations use 0-based cycle notation: (0 1)(2 3).')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {0}'.format(rubin.__version__))
    parser.add_argument('--json', action='store_true',
                        help='print the result as JSON')
    parser.add_argument('--config', metavar='PATH',
                        help='flat key = value file of default flag values')
    parser.add_argument('--log-config', metavar='PATH',
                        help='YAML logging configuration')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True
    strategies = STRATEGIES

    def command(name, handler, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(handler=handler)
        return p

    p = command('disjoint', cmd_disjoint, 'is g algebraically disjoint from f')
    _group_option(p)
    p.add_argument('--g', required=True)
    p.add_argument('--f', required=True)

    p = command('sf', cmd_sf, 'S_f and its centralizer')
    _group_option(p)
    p.add_argument('--f', required=True)
    p.add_argument('--power', type=int, default=DEFAULT_POWER)

    p = command('matrix', cmd_matrix, 'disjointness matrix')
    _group_option(p)
    p.add_argument('--out', metavar='PATH', help='write the matrix as JSON')

    p = command('classes', cmd_classes, 'conjugacy classes')
    _group_option(p)

    p = command('poset', cmd_poset, 'Rubin poset')
    _group_option(p)
    p.add_argument('--power', type=int, default=DEFAULT_POWER)
    p.add_argument('--include-group', action='store_true')
    p.add_argument('--strategy', choices=strategies, default='sequential')
    p.add_argument('--dot', metavar='PATH', help='write the Hasse diagram')
    p.add_argument('--out', metavar='PATH', help='write the poset as JSON')

    p = command('product-check', cmd_product_check,
                'cross pairs of a direct product are mutually disjoint')
    _group_option(p, '--left', 'left factor')
    _group_option(p, '--right', 'right factor')

    p = command('supports', cmd_supports,
                'support disjointness against algebraic disjointness')
    _group_option(p)

    p = command('lemma31', cmd_lemma31, 'overgroup construction')
    _group_option(p, help='group expression')
    p.add_argument('--g', required=True, help='word')
    p.add_argument('--h', required=True, help='word')

    p = command('lemma32', cmd_lemma32, 'embedding construction')
    _group_option(p, help='group expression')
    p.add_argument('--g', default='g', help='generator name')
    p.add_argument('--gamma', default='gamma', help='generator name')
    p.add_argument('--ball', type=int, default=0,
                   help='also compare word problems up to this length')

    p = command('lemma33-search', cmd_lemma33_search,
                'bounded search for powers of gamma in the normal closure')
    p.add_argument('--N', type=int, default=3)
    p.add_argument('--L', type=int, default=4)
    p.add_argument('--M', type=int, default=3)
    p.add_argument('--budget', type=int)
    p.add_argument('--strategy', choices=strategies, default='sequential')
    p.add_argument('--strict', action='store_true')

    p = command('lemma34', cmd_lemma34, 'commutator check in the BS amalgam')
    p.add_argument('--m', type=int, default=2)

    p = command('game-run', cmd_game_run, 'play one game')
    _game_options(p)
    p.add_argument('--audit', action='store_true')
    p.add_argument('--out', metavar='PATH', help='write the transcript')
    p.add_argument('--report', metavar='PATH', help='write the final report')

    p = command('game-audit', cmd_game_audit, 'audit a transcript')
    p.add_argument('transcript', metavar='PATH')

    p = command('game-sweep', cmd_game_sweep, 'play one game per seed')
    _game_options(p)
    p.add_argument('--seeds', type=int, nargs='+', required=True)
    p.add_argument('--strategy', choices=strategies, default='sequential')
    return parser

def _subparsers(parser):
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices
    return dict()

def _apply_config(parser, path):
    """Install the settings of a flat configuration file as defaults."""
    settings = load_flat_config(path)
    known = set(a.dest for a in parser._actions)
    for p in _subparsers(parser).values():
        known |= set(a.dest for a in p._actions)
    unknown = set(settings) - known
    if unknown:
        raise ConfigurationError('Unknown setting(s) in {0}: {1}'.format(
            path, ', '.join(sorted(unknown))))
    parser.set_defaults(**settings)
    for p in _subparsers(parser).values():
        own = set(a.dest for a in p._actions)
        p.set_defaults(**dict((k, v) for k, v in settings.items() if k in own))

def setup_logging(path=None):
    """
    Configure logging from the ``logging`` section of a YAML file; the
    bundled one by default.
    """
    path = path or DEFAULT_LOG_CONFIG
    try:
        cfg = config.DefaultYAMLConfig(path)
        logging.config.dictConfig(cfg.logging)
    except Exception as ex:
        raise ConfigurationError(
            'Invalid logging configuration {0!r}: {1}'.format(path, ex))

def _emit(outcome, as_json, out):
    if as_json:
        out.write(to_json(outcome.data))
    else:
        for line in outcome.lines:
            out.write(line + '\n')

def main(argv=None, out=None):
    """
    Run the command line.

    :return: The exit status.
    """
    out = out or sys.stdout
    parser = make_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument('--config')
    pre.add_argument('--log-config')
    known, _ = pre.parse_known_args(argv)
    try:
        setup_logging(known.log_config)
        if known.config:
            _apply_config(parser, known.config)
    except ConfigurationError as ex:
        sys.stderr.write('error: {0}\n'.format(ex))
        return 2

    args = parser.parse_args(argv)
    try:
        outcome = args.handler(args)
    except (ParseError, ConfigurationError, HypothesisViolation) as ex:
        sys.stderr.write('error: {0}\n'.format(ex))
        return 2
    except RubinError as ex:
        log.error('%s', ex)
        sys.stderr.write('error: {0}\n'.format(ex))
        return 2
    _emit(outcome, args.json, out)
    return 0 if outcome.ok else 1

if __name__ == '__main__':
    sys.exit(main())

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

""" Grammar of group specifications and words.

Finite permutation groups (points are 0-based)::

    perm: (0 1), (0 1 2 3)          generators, each a product of cycles
    perm(6): (0 1)(2 3), (4 5)      explicit degree
    S4                              a preset name

Group expressions::

    free(a,b)   abelian(a,b)   prod(E,E)   fprod(E,E)
    amalgam(E,E; w ~ w)   semidir(E; swap(x,y), ...; t)
    bs(m)   bs(m; g,h)   sub(E; x = w, ...)   raag(a,b,c; a-b, b-c)

Words are sequences of syllables ``name`` or ``name^k``; ``1`` is the empty
word.
"""

__all__ = ['parse_group_spec', 'parse_expression', 'parse_word',
           'parse_perm', 'PERM_HINT', 'EXPR_HINT', 'WORD_HINT']

import logging
import pyparsing as pp
from rubin.permgroup import perm_from_cycles, generate_group, PRESETS, preset
from rubin.symbolic.words import SymWord
from rubin.symbolic.nodes import GroupExpr
from rubin.exceptions import ParseError, RubinError

log = logging.getLogger('rubin.cli.grammar')

PERM_HINT = 'perm[(degree)]: (0 1 ...)(...), (...)  or a preset name'
EXPR_HINT = ('free(a,..) | abelian(a,..) | prod(E,E) | fprod(E,E) | '
             'amalgam(E,E; w ~ w) | semidir(E; swap(x,y),..; t) | '
             'bs(m[; g,h]) | sub(E; x = w,..) | raag(a,..[; a-b,..])')
WORD_HINT = '1 | name[^k] name[^k] ...'

class _Spec(object):
    """A parsed node, built into a group expression after parsing."""
    def __init__(self, kind, lineno, col, args):
        self.kind, self.lineno, self.col, self.args = kind, lineno, col, args

def _spec(kind):
    def action(s, loc, toks):
        return _Spec(kind, pp.lineno(loc, s), pp.col(loc, s), list(toks))
    return action

def _list(item):
    return item + pp.ZeroOrMore(pp.Suppress(',') + item)

def _make_grammar():
    LPAR, RPAR, SEMI = map(pp.Suppress, '();')
    name = pp.Word(pp.alphas + '_', pp.alphanums + '_')
    integer = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    signed = pp.Combine(pp.Optional('-') + pp.Word(pp.nums)) \
        .set_parse_action(lambda t: int(t[0]))

    syllable = pp.Group(name + pp.Optional(pp.Suppress('^') + signed,
                                           default=1))
    word = (pp.Suppress(pp.Keyword('1'))
            | syllable + pp.ZeroOrMore(pp.Optional(pp.Suppress('*'))
                                       + syllable))
    word = pp.Group(word).set_parse_action(
        lambda t: SymWord(tuple(s) for s in t[0]))

    def keyword(k):
        return pp.Suppress(pp.Keyword(k))

    expr = pp.Forward()
    names = pp.Group(pp.Optional(_list(name)))
    free = (keyword('free') + LPAR + names + RPAR) \
        .set_parse_action(_spec('free'))
    abelian = (keyword('abelian') + LPAR + names + RPAR) \
        .set_parse_action(_spec('abelian'))
    prod = (keyword('prod') + LPAR + expr + pp.Suppress(',') + expr + RPAR) \
        .set_parse_action(_spec('prod'))
    fprod = (keyword('fprod') + LPAR + expr + pp.Suppress(',') + expr + RPAR) \
        .set_parse_action(_spec('fprod'))
    amalgam = (keyword('amalgam') + LPAR + expr + pp.Suppress(',') + expr
               + SEMI + word + pp.Suppress('~') + word + RPAR) \
        .set_parse_action(_spec('amalgam'))
    swap = pp.Group(keyword('swap') + LPAR + name + pp.Suppress(',') + name
                    + RPAR)
    semidir = (keyword('semidir') + LPAR + expr + SEMI
               + pp.Group(pp.Optional(_list(swap))) + SEMI + name + RPAR) \
        .set_parse_action(_spec('semidir'))
    bs = (keyword('bs') + LPAR + integer
          + pp.Optional(SEMI + name + pp.Suppress(',') + name) + RPAR) \
        .set_parse_action(_spec('bs'))
    generator = pp.Group(name + pp.Suppress('=') + word)
    sub = (keyword('sub') + LPAR + expr + SEMI + pp.Group(_list(generator))
           + RPAR).set_parse_action(_spec('sub'))
    edge = pp.Group(name + pp.Suppress('-') + name)
    raag = (keyword('raag') + LPAR + names
            + pp.Group(pp.Optional(SEMI + _list(edge))) + RPAR) \
        .set_parse_action(_spec('raag'))
    expr <<= (free | abelian | prod | fprod | amalgam | semidir | bs | sub
              | raag)

    cycle = pp.Group(LPAR + pp.ZeroOrMore(integer) + RPAR)
    permutation = pp.Group(pp.OneOrMore(cycle))
    degree = pp.Group(pp.Optional(LPAR + integer + RPAR))
    perm_spec = keyword('perm') + degree + pp.Suppress(':') \
        + pp.Group(pp.Optional(_list(permutation)))
    return expr, word, permutation, perm_spec

_EXPR, _WORD, _PERM, _PERM_SPEC = _make_grammar()

def _parse(element, text, hint):
    try:
        return element.parse_string(text, parse_all=True)
    except pp.ParseBaseException as ex:
        raise ParseError(ex.msg, ex.lineno, ex.col, hint)

def _build(spec):
    if not isinstance(spec, _Spec):
        return spec
    args = [_build(a) for a in spec.args]
    kind = spec.kind
    if kind in ('free', 'abelian'):
        args = [list(args[0])]
    elif kind == 'semidir':
        base, swaps, stable = args
        args = [base, dict((x, y) for x, y in swaps), stable]
    elif kind == 'sub':
        parent, generators = args
        args = [parent, dict((n, w) for n, w in generators)]
    elif kind == 'raag':
        args = [list(args[0]), [tuple(e) for e in args[1]]]
    try:
        return GroupExpr.instantiate(kind, *args)
    except RubinError as ex:
        raise ParseError(str(ex), spec.lineno, spec.col, EXPR_HINT)

def parse_expression(text):
    """
    Parse a group expression.

    :rtype: :class:`~rubin.symbolic.nodes.GroupExpr`
    :raises ParseError: on syntax errors and on invalid constructions
        (name collisions, trivial amalgamated words, bad twists).
    """
    return _build(_parse(_EXPR, text, EXPR_HINT)[0])

def parse_word(text):
    """Parse a word; ``1`` is the empty word."""
    return _parse(_WORD, text, WORD_HINT)[0]

def _cycles(parsed):
    return [list(c) for c in parsed]

def parse_perm(text, degree=None):
    """
    Parse a permutation in 0-based cycle notation, e.g. ``(0 1)(2 3)``.

    :param int degree: Degree of the result; defaults to the largest
        point + 1.
    """
    parsed = _parse(_PERM, text, PERM_HINT)[0]
    try:
        return perm_from_cycles(_cycles(parsed), degree)
    except RubinError as ex:
        raise ParseError(str(ex), 1, 1, PERM_HINT)

def parse_group_spec(text):
    """
    Parse a finite group specification, a preset name, or a group
    expression.

    :rtype: :class:`~rubin.permgroup.FiniteGroup` or
        :class:`~rubin.symbolic.nodes.GroupExpr`
    """
    text = text.strip()
    if text in PRESETS:
        return preset(text)
    if not text.startswith('perm'):
        return parse_expression(text)
    degree, generators = _parse(_PERM_SPEC, text, PERM_HINT)
    cycle_lists = [_cycles(g) for g in generators]
    points = [p for cycles in cycle_lists for c in cycles for p in c]
    n = degree[0] if len(degree) else (max(points) + 1 if points else 0)
    try:
        perms = [perm_from_cycles(cycles, n) for cycles in cycle_lists]
        G = generate_group(perms, degree=n)
    except RubinError as ex:
        raise ParseError(str(ex), 1, 1, PERM_HINT)
    log.debug('Parsed %r: order %d, degree %d', text, G.order(), n)
    return G

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

""" Overgroup constructions and their mechanical verification.

Each construction builds its groups from the node grammar of
:mod:`rubin.symbolic.nodes` and then checks every claimed relation or
non-relation with the word problem of the group where the relevant elements
live. The checked claims are recorded verbatim in the returned reports.
"""

__all__ = ['Claim', 'ConstructionReport', 'Lemma32Result', 'BallCheckReport',
           'Lemma34Report', 'build_lemma32', 'build_lemma31',
           'lemma34_report', 'verify_lemma34', 'reduced_words']

import logging
from rubin.symbolic.words import SymWord, commutator
from rubin.symbolic.nodes import (FreeGroup, FreeAbelian, DirectProduct,
                                  FreeProduct, AmalgamCyclic,
                                  SemidirectByInvolution, AffineBS, Subgroup)
from rubin.exceptions import HypothesisViolation, UnknownGeneratorError

log = logging.getLogger('rubin.symbolic.constructions')
datalog = logging.getLogger('rubin.data.symbolic.constructions')

def fresh_name(base, taken):
    """
    Return ``base`` if it is not in ``taken``; otherwise the first of
    ``base_1``, ``base_2``, ... that is not.
    """
    if base not in taken:
        return base
    i = 1
    while '{0}_{1}'.format(base, i) in taken:
        i += 1
    return '{0}_{1}'.format(base, i)

FINAL_AMALGAM_NOTE = (
    'The final amalgam over the two-generated subgroup K is not built; each '
    'conclusion is verified in the factor where its witnesses live.')

class Claim(object):
    """
    A checked statement.

    :ivar str text: The statement, e.g. ``[a,g1] = 1``.
    :ivar bool expected: Whether the word is expected to be trivial.
    :ivar bool observed: Whether the word was found trivial.
    """
    def __init__(self, text, expected, observed, where=''):
        self.text, self.expected, self.observed = text, expected, observed
        self.where = where

    @property
    def holds(self):
        return self.expected == self.observed

    def to_dict(self):
        return dict(text=self.text, expected_trivial=self.expected,
                    observed_trivial=self.observed, holds=self.holds,
                    where=self.where)

    @staticmethod
    def from_dict(data):
        return Claim(data['text'], data['expected_trivial'],
                     data['observed_trivial'], data.get('where', ''))

    def __eq__(self, other):
        return isinstance(other, Claim) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return 'Claim({0!r}, holds={1})'.format(self.text, self.holds)

def _check(expr, text, word, trivial, where):
    observed = expr.is_identity(word)
    claim = Claim(text, trivial, observed, where)
    log.debug('  %s in %s: %s', text, where, 'ok' if claim.holds else 'FAILS')
    return claim

def _equation(expr, text, word, where):
    return _check(expr, '{0} = 1'.format(text), word, True, where)

def _inequation(expr, text, word, where):
    return _check(expr, '{0} != 1'.format(text), word, False, where)

def _bracket(u, v):
    return '[{0},{1}]'.format(u, v)

class ConstructionReport(object):
    """
    Outcome of a construction.

    :ivar str case: ``cyclic`` or ``non-cyclic``.
    :ivar list claims: The :class:`Claim` objects checked.
    :ivar list notes: Free-form remarks.
    :ivar dict pieces: Mini-language texts of the groups built, by role.
    :ivar overgroup: The overgroup itself when its word problem is decided
        here (``None`` otherwise); not serialized.
    :ivar dict elements: The new elements of ``overgroup`` by role.
    """
    def __init__(self, case, claims, notes=(), pieces=None, overgroup=None,
                 elements=None):
        self.case = case
        self.claims, self.notes = list(claims), list(notes)
        self.pieces = dict(pieces or dict())
        self.overgroup = overgroup
        self.elements = dict(elements or dict())

    @property
    def ok(self):
        return all(c.holds for c in self.claims)

    def to_dict(self):
        return dict(case=self.case, ok=self.ok,
                    claims=[c.to_dict() for c in self.claims],
                    notes=self.notes, pieces=self.pieces)

    @staticmethod
    def from_dict(data):
        return ConstructionReport(data['case'],
                                  [Claim.from_dict(c) for c in data['claims']],
                                  data.get('notes', ()), data.get('pieces'))

    def __eq__(self, other):
        return (isinstance(other, ConstructionReport)
                and self.to_dict() == other.to_dict())

class BallCheckReport(object):
    """Comparison of the word problems of ``K`` and of its image in ``Gamma``."""
    def __init__(self, max_len, words, mismatches):
        self.max_len, self.words = max_len, words
        self.mismatches = list(mismatches)

    @property
    def ok(self):
        return not self.mismatches

    def to_dict(self):
        return dict(max_len=self.max_len, words=self.words,
                    mismatches=self.mismatches, ok=self.ok)

def reduced_words(names, max_len):
    """
    All freely reduced words over ``names`` of length at most ``max_len``,
    shortest first.
    """
    letters = [(n, s) for n in names for s in (1, -1)]
    layer = [SymWord()]
    for w in layer:
        yield w
    for _ in range(max_len):
        nxt = list()
        for w in layer:
            last = w.letters()[-1] if not w.is_empty() else None
            for letter in letters:
                if last is not None and letter == (last[0], -last[1]):
                    continue
                nxt.append(SymWord(w.syllables + (letter,)))
        for w in nxt:
            yield w
        layer = nxt

class Lemma32Result(object):
    """
    ``Gamma = K1 x (K2 * <a>)`` with the embedding of ``K``.

    :ivar gamma_expr: The group ``Gamma``.
    :ivar str a: The fresh generator of the free factor.
    :ivar dict embedding: Generator name of ``K`` to its image word.
    :ivar report: :class:`ConstructionReport` of the checked claims.
    """
    def __init__(self, K, gamma_expr, a, embedding, report):
        self.K, self.gamma_expr, self.a = K, gamma_expr, a
        self.embedding, self.report = embedding, report

    def embed(self, w):
        return w.substitute(self.embedding)

    def embedding_ball_check(self, max_len=6):
        """
        Check that a word of length at most ``max_len`` over the generators
        of ``K`` is trivial in ``K`` iff its image is trivial in ``Gamma``.
        """
        mismatches, count = list(), 0
        names = sorted(self.embedding, key=str)
        for w in reduced_words(names, max_len):
            count += 1
            if self.K.is_identity(w) != self.gamma_expr.is_identity(
                    self.embed(w)):
                mismatches.append(str(w))
        log.info('Embedding ball check up to length %d: %d word(s), '
                 '%d mismatch(es)', max_len, count, len(mismatches))
        return BallCheckReport(max_len, count, mismatches)

def build_lemma32(K, g='g', gamma='gamma'):
    """
    Build ``Gamma = K1 x (K2 * <a>)`` with ``g -> g1`` and
    ``gamma -> gamma1 gamma2``.

    :param K: A group expression containing the generators ``g`` and
        ``gamma``.
    :rtype: :class:`Lemma32Result`
    """
    for name in (g, gamma):
        if name not in K.names:
            raise UnknownGeneratorError(
                '{0!r} is not a generator of {1}'.format(name, K.to_text()))
    K1, K2 = K.suffixed('1'), K.suffixed('2')
    g1, gamma1 = '{0}1'.format(g), '{0}1'.format(gamma)
    gamma2 = '{0}2'.format(gamma)
    a = fresh_name('a', K1.names | K2.names)
    Gamma = DirectProduct(K1, FreeProduct(K2, FreeGroup([a])))
    embedding = {g: SymWord.gen(g1),
                 gamma: SymWord.gen(gamma1) * SymWord.gen(gamma2)}

    A, G1, C = SymWord.gen(a), embedding[g], embedding[gamma]
    where = 'Gamma'
    claims = [
        _inequation(Gamma, _bracket(a, C), commutator(A, C), where),
        _equation(Gamma, _bracket(a, G1), commutator(A, G1), where),
        _equation(Gamma, _bracket(_bracket(a, C), G1),
                  commutator(commutator(A, C), G1), where),
    ]
    report = ConstructionReport('embedding', claims,
                                pieces=dict(Gamma=Gamma.to_text()))
    log.info('Built K1 x (K2 * <%s>): %s', a, 'ok' if report.ok else 'FAILED')
    return Lemma32Result(K, Gamma, a, embedding, report)

def _suffix_map(names, suffix):
    return dict((n, '{0}{1}'.format(n, suffix)) for n in names)

def _classify(G, g, h):
    if G.is_identity(g):
        raise HypothesisViolation('g = {0} is trivial'.format(g))
    if G.is_identity(h):
        raise HypothesisViolation('h = {0} is trivial'.format(h))
    answer = G.cyclic_membership(g, h)
    if answer.is_member:
        if abs(answer.exponent) > 1:
            return 'cyclic', answer.exponent
        raise HypothesisViolation(
            'g = h^{0}; a proper power |n| > 1 is required'.format(
                answer.exponent))
    if G.cyclic_membership(h, g).is_member:
        raise HypothesisViolation('h lies in <g>')
    if G.equal(g * h, h * g):
        rank = G.commuting_pair_rank(g, h)
        if rank != 2:
            raise HypothesisViolation(
                'g and h commute but <g,h> cannot be classified '
                '(rank {0})'.format(rank))
    return 'non-cyclic', None

def _build_cyclic(G, g, h, n):
    taken = set(G.names)
    a = fresh_name('a', taken)
    b = fresh_name('b', taken | {a})
    c = fresh_name('c', taken | {a, b})
    Z3 = FreeAbelian([a, b, c])
    Gamma = AmalgamCyclic(Z3, G, SymWord.gen(c), g)
    A, B = SymWord.gen(a), SymWord.gen(b)
    X = commutator(A, commutator(B, h))
    X_text = _bracket(a, _bracket(b, 'h'))
    where = 'Z^3 amalgam'
    claims = [
        _inequation(Gamma, X_text, X, where),
        _equation(Gamma, _bracket(X_text, 'g'), commutator(X, g), where),
        _equation(Gamma, _bracket('g', a), commutator(g, A), where),
        _equation(Gamma, _bracket('g', b), commutator(g, B), where),
        _inequation(Gamma, a, A, where),
        _inequation(Gamma, b, B, where),
        _inequation(Gamma, '{0} {1}^-1'.format(a, b), A * ~B, where),
    ]
    notes = ['g = h^{0}'.format(n)]
    return ConstructionReport('cyclic', claims, notes,
                              dict(Gamma=Gamma.to_text()), Gamma,
                              dict(a=A, b=B))

def _build_noncyclic(G, g, h):
    map1, map2 = _suffix_map(G.names, '1'), _suffix_map(G.names, '2')
    G1, G2 = G.rename(map1), G.rename(map2)
    g1, g2 = g.rename(map1), g.rename(map2)
    h1, h2 = h.rename(map1), h.rename(map2)
    Q = AmalgamCyclic(G1, G2, g1, g2)
    beta = dict((map1[n], map2[n]) for n in G.names)
    b = fresh_name('b', Q.names)
    Gamma0 = SemidirectByInvolution(Q, beta, b)
    B = SymWord.gen(b)
    gamma = commutator(B, h1)

    where = 'Gamma0'
    claims = [
        _equation(Gamma0, _bracket(b, 'g1'), commutator(B, g1), where),
        _inequation(Gamma0, b, B, where),
        _equation(Gamma0, '{0} ({1})^-1'.format(_bracket(b, 'h1'),
                                                'h2^-1 h1'),
                  gamma * ~(~h2 * h1), where),
        _inequation(Gamma0, _bracket(b, 'h1'), gamma, where),
    ]

    K = Subgroup(Gamma0, {'g': g1, 'gamma': gamma})
    lemma32 = build_lemma32(K, 'g', 'gamma')
    Gamma = lemma32.gamma_expr
    A, Gg, Gc = (SymWord.gen(lemma32.a), lemma32.embedding['g'],
                 lemma32.embedding['gamma'])
    a = lemma32.a
    where = 'Gamma~'
    claims.extend([
        _inequation(Gamma, _bracket(a, 'gamma'), commutator(A, Gc), where),
        _equation(Gamma, _bracket(a, 'g'), commutator(A, Gg), where),
        _equation(Gamma, _bracket(_bracket(a, 'gamma'), 'g'),
                  commutator(commutator(A, Gc), Gg), where),
        _inequation(Gamma, a, A, where),
    ])
    pieces = dict(Q=Q.to_text(), Gamma0=Gamma0.to_text(), K=K.to_text(),
                  Gamma=Gamma.to_text())
    notes = ['gamma = [b,h1] = h2^-1 h1', FINAL_AMALGAM_NOTE]
    return ConstructionReport('non-cyclic', claims, notes, pieces)

def build_lemma31(G, g, h):
    """
    Build an overgroup with non-trivial ``a, b`` centralizing ``g`` such
    that ``[a,[b,h]]`` is non-trivial and centralizes ``g``.

    :param G: The group expression containing ``g`` and ``h``.
    :param SymWord g: The element to centralize.
    :param SymWord h: The element not in ``<g>``.
    :raises HypothesisViolation: if ``g`` or ``h`` is trivial, if ``<g,h>``
        is cyclic without ``g`` being a proper power of ``h``, or if the
        pair cannot be classified.
    :rtype: :class:`ConstructionReport`
    """
    case, n = _classify(G, g, h)
    log.debug('Classified <%s, %s> in %s as %s', g, h, G.to_text(), case)
    if case == 'cyclic':
        report = _build_cyclic(G, g, h, n)
    else:
        report = _build_noncyclic(G, g, h)
    log.info('Overgroup construction (%s case): %s', case,
             'ok' if report.ok else 'FAILED')
    datalog.debug('Construction pieces: %r', report.pieces)
    return report

class Lemma34Report(object):
    """
    Outcome of :func:`lemma34_report`.

    :ivar str word: The commutator checked in the amalgam.
    :ivar bool identity: Whether it is trivial (expected).
    :ivar str control_word: The control commutator over free factors.
    :ivar bool control_nontrivial: Whether the control is non-trivial
        (expected).
    """
    def __init__(self, m, word, identity, control_word, control_nontrivial):
        self.m, self.word, self.identity = m, word, identity
        self.control_word = control_word
        self.control_nontrivial = control_nontrivial

    @property
    def ok(self):
        return self.identity and self.control_nontrivial

    def to_dict(self):
        return dict(m=self.m, word=self.word, identity=self.identity,
                    control_word=self.control_word,
                    control_nontrivial=self.control_nontrivial, ok=self.ok)

    @staticmethod
    def from_dict(data):
        return Lemma34Report(data['m'], data['word'], data['identity'],
                             data['control_word'], data['control_nontrivial'])

    def __eq__(self, other):
        return (isinstance(other, Lemma34Report)
                and self.to_dict() == other.to_dict())

def _two_copies(G):
    G1, G2 = G.suffixed('1'), G.suffixed('2')
    return AmalgamCyclic(G1, G2, SymWord.gen('g1'), SymWord.gen('g2'))

def lemma34_report(m):
    """
    In two copies of ``<g, h | h g h^-1 = g^m>`` amalgamated along ``g``,
    compute ``[g, h2^-1 h1]``; as a control, compute ``[h1, h2^-1 h1]`` in
    two free copies of ``F(g, h)`` amalgamated along ``g``.
    """
    H = _two_copies(AffineBS(m, 'g', 'h'))
    g1, h1, h2 = (SymWord.gen(n) for n in ('g1', 'h1', 'h2'))
    gamma = ~h2 * h1
    word = commutator(g1, gamma)
    identity = H.is_identity(word)

    F = _two_copies(FreeGroup(['g', 'h']))
    control = commutator(h1, gamma)
    control_nontrivial = not F.is_identity(control)
    log.info('Commutator [g1, h2^-1 h1] for m=%d: %s; control: %s', m,
             'trivial' if identity else 'NON-TRIVIAL',
             'non-trivial' if control_nontrivial else 'TRIVIAL')
    return Lemma34Report(m, str(word), identity, str(control),
                         control_nontrivial)

def verify_lemma34(m):
    """Whether ``[g, h2^-1 h1]`` is trivial in the amalgam (expected)."""
    return lemma34_report(m).identity

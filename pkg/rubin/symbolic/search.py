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

""" Bounded search for powers of ``gamma`` in the normal closure of ``g``.

The group is ``H = F(g1, h1) *_{g1 = g2} F(g2, h2)`` with
``gamma = h2^-1 h1`` and ``K = <g, gamma>``. The search enumerates every
product of at most ``M`` conjugates ``u g^+-1 u^-1``, where ``u`` is a
reduced word over ``g, gamma`` of length at most ``L``, and checks with the
amalgam word problem that none of them equals ``gamma^n`` for
``0 < |n| <= N``.

Pruning:

- conjugators ending in ``g^+-1`` are skipped (they give the same
  conjugates as shorter ones);
- products containing a conjugate next to its own inverse are skipped;
- the syllable stack of a common prefix is computed once;
- ``gamma^n`` has exactly ``2|n|`` syllables, so a candidate is only tested
  when its stack has an even length of at most ``2N``.

The work is split into chunks by first conjugate; each chunk is a task of
a :class:`~rubin.strategy.Strategy`.
"""

__all__ = ['SearchReport', 'SearchChunkTask', 'lemma33_bounded_search',
           'search_group', 'conjugators']

import functools
import logging
from rubin.strategy import Task, get_strategy
from rubin.symbolic.words import SymWord
from rubin.symbolic.nodes import FreeGroup, AmalgamCyclic
from rubin.symbolic.constructions import reduced_words
from rubin.exceptions import ConfigurationError, ResourceBoundExceeded

log = logging.getLogger('rubin.symbolic.search')

G_LETTER, GAMMA_LETTER = 'g', 'gamma'

@functools.lru_cache(maxsize=None)
def search_group():
    """The amalgam ``H`` and the images of ``g`` and ``gamma`` in it."""
    H = AmalgamCyclic(FreeGroup(['g1', 'h1']), FreeGroup(['g2', 'h2']),
                      SymWord.gen('g1'), SymWord.gen('g2'))
    gamma = ~SymWord.gen('h2') * SymWord.gen('h1')
    return H, SymWord.gen('g1'), gamma

def conjugators(L):
    """Reduced words over ``g, gamma`` of length at most ``L`` not ending in ``g^+-1``."""
    return [u for u in reduced_words([G_LETTER, GAMMA_LETTER], L)
            if u.is_empty() or u.syllables[-1][0] != G_LETTER]

@functools.lru_cache(maxsize=8)
def _conjugate_data(L):
    H, g, gamma = search_group()
    images = {G_LETTER: g, GAMMA_LETTER: gamma}
    labels, stacks = list(), list()
    for u in conjugators(L):
        U = u.substitute(images)
        for eps in (1, -1):
            labels.append((str(u), eps))
            stacks.append(tuple(H.stack_of(U * g ** eps * ~U)))
    return labels, stacks

def _extend(H, stack, syllables):
    """Push ``syllables`` (a reduced stack); bulk-extend after a clean append."""
    for i, (side, w, _) in enumerate(syllables):
        before = len(stack)
        H.push(stack, side, w)
        if len(stack) == before + 1:
            stack.extend(syllables[i + 1:])
            return

def _power_exponent(H, stack, N, gamma):
    if not stack or len(stack) % 2 or len(stack) > 2 * N:
        return None
    n = len(stack) // 2
    for candidate in (n, -n):
        trial = list(stack)
        for side, segment in H.segments(gamma ** -candidate):
            H.push(trial, side, segment)
        if not trial:
            return candidate
    return None

class SearchChunkTask(Task):
    """
    Enumerate the products starting with conjugate ``first``.

    :param int allowance: Maximum number of candidates to examine.
    """
    def __init__(self, N, L, M, first, allowance):
        self.N, self.L, self.M = N, L, M
        self.first, self.allowance = first, allowance
        self.task_id = 'chunk{0}'.format(first)

    def perform(self):
        H, _, gamma = search_group()
        labels, stacks = _conjugate_data(self.L)
        T = len(stacks)
        counterexamples = list()
        examined = 0

        def visit(sequence, stack):
            nonlocal examined
            if examined >= self.allowance:
                return
            examined += 1
            n = _power_exponent(H, stack, self.N, gamma)
            if n is not None:
                counterexamples.append(
                    dict(product=[list(labels[j]) for j in sequence], n=n))
            if len(sequence) == self.M:
                return
            for j in range(T):
                if j == sequence[-1] ^ 1:
                    continue
                child = list(stack)
                _extend(H, child, stacks[j])
                visit(sequence + [j], child)

        if self.allowance > 0:
            start = list()
            _extend(H, start, stacks[self.first])
            visit([self.first], start)
        log.info('Chunk %d done: %d candidate(s) examined', self.first,
                 examined)
        return examined, counterexamples

class SearchReport(object):
    """
    Outcome of :func:`lemma33_bounded_search`.

    :ivar int candidates: Products actually examined.
    :ivar int total: Products in the full search space.
    :ivar bool partial: Whether the budget stopped the search early.
    :ivar list counterexamples: Products found equal to a power of
        ``gamma`` (expected: none).
    """
    def __init__(self, N, L, M, conjugators, conjugates, candidates, total,
                 counterexamples, budget=None):
        self.N, self.L, self.M = N, L, M
        self.conjugators, self.conjugates = conjugators, conjugates
        self.candidates, self.total = candidates, total
        self.counterexamples = list(counterexamples)
        self.budget = budget

    @property
    def partial(self):
        return self.candidates < self.total

    @property
    def ok(self):
        return not self.counterexamples

    def to_dict(self):
        return dict(N=self.N, L=self.L, M=self.M,
                    conjugators=self.conjugators, conjugates=self.conjugates,
                    candidates=self.candidates, total=self.total,
                    budget=self.budget, partial=self.partial,
                    counterexamples=self.counterexamples, ok=self.ok)

    @staticmethod
    def from_dict(data):
        return SearchReport(data['N'], data['L'], data['M'],
                            data['conjugators'], data['conjugates'],
                            data['candidates'], data['total'],
                            data['counterexamples'], data.get('budget'))

    def __eq__(self, other):
        return (isinstance(other, SearchReport)
                and self.to_dict() == other.to_dict())

def lemma33_bounded_search(N, L, M, budget=None, strategy='sequential',
                           strict=False):
    """
    Search for a product of at most ``M`` conjugates of ``g^+-1`` by words
    of length at most ``L`` equal to ``gamma^n`` with ``0 < |n| <= N``.

    :param int budget: Maximum number of candidates; a partial report is
        returned when it is reached.
    :param strategy: :class:`~rubin.strategy.Strategy` (or its protocol
        key) performing the chunks.
    :param bool strict: Raise :exc:`~rubin.exceptions.ResourceBoundExceeded`
        instead of returning a partial report.
    :rtype: :class:`SearchReport`
    """
    if N < 1 or L < 0 or M < 1:
        raise ConfigurationError(
            'Search bounds must satisfy N >= 1, L >= 0, M >= 1 '
            '(got N={0}, L={1}, M={2})'.format(N, L, M))
    if budget is not None and budget < 0:
        raise ConfigurationError('budget must be non-negative')
    labels, _ = _conjugate_data(L)
    T = len(labels)
    chunk_size = sum((T - 1) ** k for k in range(M))
    total = T * chunk_size
    limit = total if budget is None else min(budget, total)
    log.info('Searching %d product(s) of up to %d of %d conjugates '
             '(N=%d, L=%d)', limit, M, T, N, L)

    tasks = [SearchChunkTask(N, L, M, first,
                             max(0, min(chunk_size, limit - first * chunk_size)))
             for first in range(T)]
    results = get_strategy(strategy).perform(tasks)

    candidates, counterexamples = 0, list()
    for examined, found in results:
        candidates += examined
        counterexamples.extend(found)
    report = SearchReport(N, L, M, T // 2, T, candidates, total,
                          counterexamples, budget)
    log.info('Search finished: %d candidate(s), %d counterexample(s)%s',
             candidates, len(counterexamples),
             ' (partial)' if report.partial else '')
    if strict and report.partial:
        raise ResourceBoundExceeded(
            'Budget of {0} candidates reached out of {1}'.format(budget, total))
    return report

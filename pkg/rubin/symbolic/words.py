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

""" Freely reduced words over named generators.

A :class:`SymWord` is a tuple of *syllables* ``(name, exponent)`` with
non-zero exponents and distinct adjacent names. Names are arbitrary hashable
values: strings in the construction engine, natural numbers in the game.

The group arithmetic is sympy's: a word is lifted into the
:func:`~sympy.combinatorics.free_groups.free_group` on the names involved,
multiplied, inverted or cyclically reduced there, and read back from the
``array_form`` of the resulting
:class:`~sympy.combinatorics.free_groups.FreeGroupElement`.
"""

__all__ = ['SymWord', 'reduce_free', 'commutator', 'EMPTY']

import functools
import numbers
from sympy import Symbol
from sympy.combinatorics.free_groups import free_group
from rubin.exceptions import NameCollisionError

_SYMBOLS, _NAMES = dict(), dict()

def _symbol(name):
    try:
        return _SYMBOLS[name]
    except KeyError:
        # Integer names live apart from identifiers: 3 and '3' differ.
        text = '#{0}'.format(int(name)) \
            if isinstance(name, numbers.Integral) else str(name)
        sym = Symbol(text)
        if sym in _NAMES:
            raise NameCollisionError('Generator names {0!r} and {1!r} collide'.format(
                name, _NAMES[sym]))
        _SYMBOLS[name], _NAMES[sym] = sym, name
        return sym

@functools.lru_cache(maxsize=4096)
def _free_group(symbols):
    F = free_group(symbols)[0]
    return F, dict(zip(F.symbols, F.generators))

def _group_on(names):
    return _free_group(tuple(sorted((_symbol(n) for n in names), key=str)))

def _lift(group, syllables):
    """The already reduced ``syllables`` as an element of ``group``."""
    return group.dtype(tuple((_symbol(n), e) for n, e in syllables))

def _read(element):
    return tuple((_NAMES[s], int(e)) for s, e in element.array_form)

def _reduce(syllables):
    syllables = [(n, e) for n, e in syllables if e]
    if not syllables:
        return ()
    F, gens = _group_on(set(n for n, _ in syllables))
    element = F.identity
    for name, exp in syllables:
        element = element * gens[_symbol(name)] ** exp
    return _read(element)

class SymWord(object):
    """
    An element of the free group on its names.

    :param syllables: Iterable of ``(name, exponent)`` pairs; they are
        freely reduced on construction.
    """
    __slots__ = ('syllables',)

    def __init__(self, syllables=()):
        self.syllables = _reduce(syllables)

    @staticmethod
    def _reduced(syllables):
        w = SymWord.__new__(SymWord)
        w.syllables = syllables
        return w

    @staticmethod
    def gen(name, exp=1):
        return SymWord(((name, exp),))

    @staticmethod
    def from_letters(letters):
        """Build from ``(name, +-1)`` letters."""
        return SymWord(letters)

    def element(self, group=None):
        """
        The word as a sympy free group element, in ``group`` (which must
        contain every name of the word) or in the free group on its names.
        """
        if group is None:
            group = _group_on(self.names())[0]
        return _lift(group, self.syllables)

    def _binary(self, other, op):
        F = _group_on(self.names() | other.names())[0]
        return SymWord._reduced(_read(op(_lift(F, self.syllables),
                                         _lift(F, other.syllables))))

    def __mul__(self, other):
        if not other.syllables:
            return self
        if not self.syllables:
            return other
        return self._binary(other, lambda x, y: x * y)

    def inverse(self):
        return SymWord._reduced(
            tuple((n, -e) for n, e in reversed(self.syllables)))

    __invert__ = inverse

    def __pow__(self, k):
        if not self.syllables:
            return self
        return SymWord._reduced(_read(self.element() ** k))

    def __len__(self):
        """Number of letters."""
        return sum(abs(e) for _, e in self.syllables)

    def is_empty(self):
        return not self.syllables

    def letters(self):
        """The word as a list of ``(name, +-1)`` letters."""
        result = list()
        for name, exp in self.syllables:
            sign = 1 if exp > 0 else -1
            result.extend([(name, sign)] * abs(exp))
        return result

    def names(self):
        return frozenset(n for n, _ in self.syllables)

    def exponent_sum(self, name):
        return sum(e for n, e in self.syllables if n == name)

    def rename(self, mapping):
        """Rename generators; names missing from ``mapping`` are kept."""
        return SymWord((mapping.get(n, n), e) for n, e in self.syllables)

    def substitute(self, mapping):
        """
        Replace generators by words, all at once; names missing from
        ``mapping`` are kept.
        """
        images = dict((n, mapping[n]) for n in self.names() if n in mapping)
        if not images:
            return self
        names = (self.names() - set(images)).union(
            *(w.names() for w in images.values()))
        if not names:
            return EMPTY
        F, gens = _group_on(names)
        result = F.identity
        for name, exp in self.syllables:
            image = images[name].element(F) if name in images \
                else gens[_symbol(name)]
            result = result * image ** exp
        return SymWord._reduced(_read(result))

    def cyclic_reduce(self):
        """
        Cyclic reduction down to syllables: the first and last syllables of
        the core have different names.

        :return: ``(u, core)`` with ``self == u * core * ~u``.
        """
        if not self.syllables:
            return EMPTY, EMPTY
        reduced, removed = self.element().cyclic_reduction(removed=True)
        u, core = SymWord._reduced(_read(removed)), \
            SymWord._reduced(_read(reduced))
        s = core.syllables
        if len(s) >= 2 and s[0][0] == s[-1][0]:
            first = SymWord._reduced(s[:1])
            u, core = u * first, SymWord(s[1:-1] + ((s[0][0],
                                                     s[0][1] + s[-1][1]),))
        return u, core

    def __eq__(self, other):
        return isinstance(other, SymWord) and self.syllables == other.syllables

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.syllables)

    def __str__(self):
        if not self.syllables:
            return '1'
        return ' '.join(str(n) if e == 1 else '{0}^{1}'.format(n, e)
                        for n, e in self.syllables)

    def __repr__(self):
        return 'SymWord({0!r})'.format(str(self))

EMPTY = SymWord()

def reduce_free(w):
    """Freely reduce a word or a sequence of syllables."""
    if isinstance(w, SymWord):
        return w
    return SymWord(w)

def commutator(u, v):
    """``[u,v] = u^-1 v^-1 u v``."""
    return ~u * ~v * u * v

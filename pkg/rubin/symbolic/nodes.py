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

""" Group expressions with a solvable word problem.

Every node kind is a torsion-free group built from torsion-free children,
and decides two questions about words over its generator names:

- :meth:`GroupExpr.is_identity`: the word problem.
- :meth:`GroupExpr.cyclic_membership`: whether ``x = c^k`` for some ``k``.

Node kinds are registered in the :class:`GroupExpr` factory under their
mini-language keyword, so ``GroupExpr.instantiate('free', ['g', 'h'])``
builds a free group. Generator names of sibling nodes must be disjoint.
"""

__all__ = ['GroupExpr', 'MembershipAnswer', 'NOT_MEMBER', 'member',
           'FreeGroup', 'FreeAbelian', 'DirectProduct', 'FreeProduct',
           'AmalgamCyclic', 'SemidirectByInvolution', 'AffineBS',
           'Subgroup', 'RightAngledArtin', 'LEFT', 'RIGHT']

from fractions import Fraction
import numpy as np
import occo.util.factory as factory
from rubin.symbolic.words import SymWord, EMPTY
from rubin.exceptions import (WordProblemError, UnknownGeneratorError,
                              NameCollisionError, TrivialGeneratorError,
                              TwistError)

LEFT, RIGHT = 0, 1

class MembershipAnswer(object):
    """Either *not a member*, or *member* with ``x = c^exponent``."""
    __slots__ = ('exponent',)

    def __init__(self, exponent=None):
        self.exponent = exponent

    @property
    def is_member(self):
        return self.exponent is not None

    def __eq__(self, other):
        return (isinstance(other, MembershipAnswer)
                and self.exponent == other.exponent)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.exponent)

    def __repr__(self):
        if self.is_member:
            return 'Member({0})'.format(self.exponent)
        return 'NotMember'

NOT_MEMBER = MembershipAnswer()

def member(k):
    return MembershipAnswer(int(k))

def _name_list(names):
    return ','.join(str(n) for n in names)

def _check_distinct(names):
    seen = set()
    for n in names:
        if n in seen:
            raise NameCollisionError('Duplicate generator name {0!r}'.format(n))
        seen.add(n)

def _check_disjoint(left, right):
    common = left.names & right.names
    if common:
        raise NameCollisionError('Generator names used on both sides: '
                                 '{0}'.format(_name_list(sorted(common, key=str))))

class GroupExpr(factory.MultiBackend):
    """
    Abstract group expression.

    :ivar frozenset names: The generator names of the node.
    """
    names = frozenset()

    def _check_names(self, *words):
        for w in words:
            unknown = w.names() - self.names
            if unknown:
                raise UnknownGeneratorError(
                    'Unknown generator(s) {0} in {1}'.format(
                        _name_list(sorted(unknown, key=str)), self.to_text()))

    def is_identity(self, w):
        """
        Whether ``w`` represents the identity.

        :raises UnknownGeneratorError: if ``w`` uses a name not in the node.
        """
        self._check_names(w)
        return self._is_identity(w)

    def _is_identity(self, w):
        raise NotImplementedError()

    def equal(self, u, v):
        return self.is_identity(u * ~v)

    def cyclic_membership(self, x, c):
        """
        Decide whether ``x`` is a power of ``c``. A positive answer is
        verified by recomputation before it is returned.

        :raises TrivialGeneratorError: if ``c`` represents the identity.
        """
        self._check_names(x, c)
        if self._is_identity(c):
            raise TrivialGeneratorError(
                '{0} is trivial in {1}'.format(c, self.to_text()))
        answer = self._cyclic_membership(x, c)
        if answer.is_member and \
                not self._is_identity(x * c ** -answer.exponent):
            raise WordProblemError(
                'Membership answer {0!r} for {1} in <{2}> does not verify '
                'in {3}'.format(answer, x, c, self.to_text()))
        return answer

    def _cyclic_membership(self, x, c):
        raise NotImplementedError()

    def commuting_pair_rank(self, g, h):
        """
        For commuting ``g, h``: the rank of the abelian group they
        generate, when the node can tell; ``None`` otherwise.
        """
        return None

    def rename(self, mapping):
        """A copy with generator names replaced according to ``mapping``."""
        raise NotImplementedError()

    def suffixed(self, suffix):
        return self.rename(dict((n, '{0}{1}'.format(n, suffix))
                                for n in self.names))

    def to_text(self):
        """The expression in the mini-language."""
        raise NotImplementedError()

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return '<{0} {1}>'.format(self.__class__.__name__, self.to_text())

    def __eq__(self, other):
        return isinstance(other, GroupExpr) and self.to_text() == other.to_text()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.to_text())

@factory.register(GroupExpr, 'free')
class FreeGroup(GroupExpr):
    """The free group on ``names``."""
    def __init__(self, names):
        self.name_list = list(names)
        _check_distinct(self.name_list)
        self.names = frozenset(self.name_list)

    def _is_identity(self, w):
        return w.is_empty()

    def _cyclic_membership(self, x, c):
        u, core = c.cyclic_reduce()
        x = ~u * x * u
        if x.is_empty():
            return member(0)
        if len(core.syllables) == 1:
            (cname, cexp), = core.syllables
            if len(x.syllables) != 1:
                return NOT_MEMBER
            (xname, xexp), = x.syllables
            if xname != cname or xexp % cexp:
                return NOT_MEMBER
            return member(xexp // cexp)
        # reduced powers of a cyclically reduced word grow linearly
        if len(x) % len(core):
            return NOT_MEMBER
        k = len(x) // len(core)
        for candidate in (k, -k):
            if core ** candidate == x:
                return member(candidate)
        return NOT_MEMBER

    def commuting_pair_rank(self, g, h):
        return 1

    def rename(self, mapping):
        return FreeGroup(mapping.get(n, n) for n in self.name_list)

    def to_text(self):
        return 'free({0})'.format(_name_list(self.name_list))

@factory.register(GroupExpr, 'abelian')
class FreeAbelian(GroupExpr):
    """The free abelian group on ``names``."""
    def __init__(self, names):
        self.name_list = list(names)
        _check_distinct(self.name_list)
        self.names = frozenset(self.name_list)

    def vector(self, w):
        return np.array([w.exponent_sum(n) for n in self.name_list],
                        dtype=np.int64)

    def _is_identity(self, w):
        return not self.vector(w).any()

    def _cyclic_membership(self, x, c):
        vx, vc = self.vector(x), self.vector(c)
        i = int(np.flatnonzero(vc)[0])
        if vx[i] % vc[i]:
            return NOT_MEMBER
        k = int(vx[i] // vc[i])
        return member(k) if np.array_equal(vx, k * vc) else NOT_MEMBER

    def commuting_pair_rank(self, g, h):
        return int(np.linalg.matrix_rank(
            np.array([self.vector(g), self.vector(h)], dtype=float)))

    def rename(self, mapping):
        return FreeAbelian(mapping.get(n, n) for n in self.name_list)

    def to_text(self):
        return 'abelian({0})'.format(_name_list(self.name_list))

@factory.register(GroupExpr, 'prod')
class DirectProduct(GroupExpr):
    """``left x right``; words split into their two commuting projections."""
    def __init__(self, left, right):
        _check_disjoint(left, right)
        self.left, self.right = left, right
        self.names = left.names | right.names

    def split(self, w):
        return (SymWord(s for s in w.syllables if s[0] in self.left.names),
                SymWord(s for s in w.syllables if s[0] in self.right.names))

    def _is_identity(self, w):
        wl, wr = self.split(w)
        return self.left._is_identity(wl) and self.right._is_identity(wr)

    def _cyclic_membership(self, x, c):
        (xl, xr), (cl, cr) = self.split(x), self.split(c)
        left_trivial = self.left._is_identity(cl)
        right_trivial = self.right._is_identity(cr)
        if left_trivial:
            if not self.left._is_identity(xl):
                return NOT_MEMBER
            return self.right.cyclic_membership(xr, cr)
        if right_trivial:
            if not self.right._is_identity(xr):
                return NOT_MEMBER
            return self.left.cyclic_membership(xl, cl)
        al = self.left.cyclic_membership(xl, cl)
        ar = self.right.cyclic_membership(xr, cr)
        if al.is_member and al == ar:
            return al
        return NOT_MEMBER

    def commuting_pair_rank(self, g, h):
        (gl, gr), (hl, hr) = self.split(g), self.split(h)
        if self.right._is_identity(gr) and self.right._is_identity(hr):
            return self.left.commuting_pair_rank(gl, hl)
        if self.left._is_identity(gl) and self.left._is_identity(hl):
            return self.right.commuting_pair_rank(gr, hr)
        return None

    def rename(self, mapping):
        return DirectProduct(self.left.rename(mapping),
                             self.right.rename(mapping))

    def to_text(self):
        return 'prod({0},{1})'.format(self.left.to_text(),
                                      self.right.to_text())

class _FactorProduct(GroupExpr):
    """
    Free products, possibly amalgamated along the cyclic subgroups generated
    by ``c_left`` and ``c_right``.

    Words are decided with a stack of syllables ``(side, word, k)``: ``word``
    is a non-trivial element of the factor on ``side``, and ``k`` is the
    exponent with ``word = c_side^k`` when the syllable lies in the
    amalgamated subgroup (``None`` otherwise). Adjacent syllables alternate
    sides and only a lone syllable may lie in the amalgamated subgroup, so
    a word is trivial iff its stack is empty.
    """
    def __init__(self, left, right, c_left=None, c_right=None):
        _check_disjoint(left, right)
        self.left, self.right = left, right
        self.c_left, self.c_right = c_left, c_right
        self.names = left.names | right.names

    def factor(self, side):
        return self.right if side else self.left

    def edge(self, side):
        return self.c_right if side else self.c_left

    def side_of(self, name):
        return LEFT if name in self.left.names else RIGHT

    def segments(self, w):
        """Maximal single-side pieces of ``w`` as ``(side, word)`` pairs."""
        result = list()
        for name, exp in w.syllables:
            side = self.side_of(name)
            if result and result[-1][0] == side:
                result[-1][1].append((name, exp))
            else:
                result.append((side, [(name, exp)]))
        return [(side, SymWord(s)) for side, s in result]

    def edge_power(self, side, w):
        if self.c_left is None:
            return None
        answer = self.factor(side).cyclic_membership(w, self.edge(side))
        return answer.exponent

    def push(self, stack, side, w):
        """Multiply the element held in ``stack`` by ``w`` on the right."""
        while True:
            if self.factor(side)._is_identity(w):
                return
            if stack and stack[-1][0] == side:
                w = stack.pop()[1] * w
                continue
            k = self.edge_power(side, w)
            if k is not None and stack:
                other = 1 - side
                w = stack.pop()[1] * self.edge(other) ** k
                side = other
                continue
            if k is None and len(stack) == 1 and stack[0][2] is not None:
                k0 = stack.pop()[2]
                w = self.edge(side) ** k0 * w
                continue
            stack.append((side, w, k))
            return

    def stack_of(self, w):
        stack = list()
        for side, segment in self.segments(w):
            self.push(stack, side, segment)
        return stack

    @staticmethod
    def stack_word(stack):
        word = EMPTY
        for _, w, _ in stack:
            word = word * w
        return word

    def _is_identity(self, w):
        return not self.stack_of(w)

    def _cyclic_membership(self, x, c):
        sc = self.stack_of(c)
        # Conjugate until the first and last syllables of c differ in side.
        while len(sc) >= 2 and sc[0][0] == sc[-1][0]:
            t = sc[-1][1]
            c = t * self.stack_word(sc) * ~t
            x = t * x * ~t
            sc = self.stack_of(c)
        sx = self.stack_of(x)
        if not sx:
            return member(0)
        if len(sc) == 1:
            if len(sx) != 1:
                return NOT_MEMBER
            (cside, cw, _), (xside, xw, xk) = sc[0], sx[0]
            if xside != cside:
                if xk is None:
                    return NOT_MEMBER
                xw = self.edge(cside) ** xk
            return self.factor(cside).cyclic_membership(xw, cw)
        if len(sx) % len(sc):
            return NOT_MEMBER
        k = len(sx) // len(sc)
        for candidate in (k, -k):
            if self._is_identity(x * c ** -candidate):
                return member(candidate)
        return NOT_MEMBER

@factory.register(GroupExpr, 'fprod')
class FreeProduct(_FactorProduct):
    """``left * right``."""
    def __init__(self, left, right):
        super(FreeProduct, self).__init__(left, right)

    def rename(self, mapping):
        return FreeProduct(self.left.rename(mapping), self.right.rename(mapping))

    def to_text(self):
        return 'fprod({0},{1})'.format(self.left.to_text(),
                                       self.right.to_text())

@factory.register(GroupExpr, 'amalgam')
class AmalgamCyclic(_FactorProduct):
    """
    ``left *_Z right`` identifying ``c_left`` with ``c_right``.

    :raises TrivialGeneratorError: if either edge word is trivial.
    """
    def __init__(self, left, right, c_left, c_right):
        super(AmalgamCyclic, self).__init__(left, right, c_left, c_right)
        left._check_names(c_left)
        right._check_names(c_right)
        for node, c in ((left, c_left), (right, c_right)):
            if node._is_identity(c):
                raise TrivialGeneratorError(
                    'Amalgamated element {0} is trivial in {1}'.format(
                        c, node.to_text()))

    def rename(self, mapping):
        return AmalgamCyclic(self.left.rename(mapping),
                             self.right.rename(mapping),
                             self.c_left.rename(mapping),
                             self.c_right.rename(mapping))

    def to_text(self):
        return 'amalgam({0},{1}; {2} ~ {3})'.format(
            self.left.to_text(), self.right.to_text(), self.c_left,
            self.c_right)

@factory.register(GroupExpr, 'semidir')
class SemidirectByInvolution(GroupExpr):
    """
    ``base`` extended by the stable letter ``b`` acting as the involution
    ``twist``: ``b x b^-1 = twist(x)``.

    Elements are kept as pairs ``(q, n)`` standing for ``q b^n``.

    :param dict twist: Generator map; names not listed are fixed.
    :raises TwistError: if ``twist`` is not an involutive automorphism of
        ``base`` the engine can certify.
    """
    def __init__(self, base, twist, stable):
        self.base, self.stable = base, stable
        self.twist = dict((x, y) for x, y in twist.items() if x != y)
        for x, y in list(self.twist.items()):
            self.twist.setdefault(y, x)
        if stable in base.names:
            raise NameCollisionError(
                'Stable letter {0!r} is a generator of the base'.format(stable))
        self._check_twist()
        self.names = base.names | frozenset([stable])

    def _check_twist(self):
        beta = self.twist
        unknown = set(beta) - self.base.names
        if unknown:
            raise TwistError('Twist moves unknown generator(s) {0}'.format(
                _name_list(sorted(unknown, key=str))))
        for x, y in beta.items():
            if beta.get(y, y) != x:
                raise TwistError('Twist is not an involution on {0!r}'.format(x))
        if not beta:
            return
        base = self.base
        if isinstance(base, (FreeGroup, FreeAbelian)):
            return
        if isinstance(base, RightAngledArtin):
            edges = base.edge_set()
            moved = set(frozenset(beta.get(n, n) for n in e) for e in edges)
            if moved != edges:
                raise TwistError('Twist does not preserve the commutation graph')
            return
        if isinstance(base, (DirectProduct, FreeProduct, AmalgamCyclic)):
            if base.left.rename(beta) != base.right:
                raise TwistError('Twist does not exchange the two factors')
            if isinstance(base, AmalgamCyclic) \
                    and base.c_left.rename(beta) != base.c_right:
                raise TwistError('Twist does not exchange the amalgamated '
                                 'elements')
            return
        raise TwistError('Cannot certify the twist on {0}'.format(
            base.to_text()))

    def apply_twist(self, w):
        return w.rename(self.twist)

    def evaluate(self, w):
        """The pair ``(q, n)`` with ``w = q b^n``."""
        q, n = list(), 0
        for name, exp in w.syllables:
            if name == self.stable:
                n += exp
            elif n % 2:
                q.append((self.twist.get(name, name), exp))
            else:
                q.append((name, exp))
        return SymWord(q), n

    def _is_identity(self, w):
        q, n = self.evaluate(w)
        return n == 0 and self.base._is_identity(q)

    def _cyclic_membership(self, x, c):
        (qx, nx), (qc, nc) = self.evaluate(x), self.evaluate(c)
        if nc == 0:
            if nx:
                return NOT_MEMBER
            return self.base.cyclic_membership(qx, qc)
        if nx % nc:
            return NOT_MEMBER
        k = nx // nc
        return member(k) if self._is_identity(x * c ** -k) else NOT_MEMBER

    def swap_pairs(self):
        pairs, seen = list(), set()
        for x, y in sorted(self.twist.items(), key=lambda p: str(p[0])):
            if x not in seen:
                pairs.append((x, y))
                seen.update((x, y))
        return pairs

    def rename(self, mapping):
        return SemidirectByInvolution(
            self.base.rename(mapping),
            dict((mapping.get(x, x), mapping.get(y, y))
                 for x, y in self.twist.items()),
            mapping.get(self.stable, self.stable))

    def to_text(self):
        swaps = ','.join('swap({0},{1})'.format(x, y)
                         for x, y in self.swap_pairs())
        return 'semidir({0}; {1}; {2})'.format(self.base.to_text(), swaps,
                                              self.stable)

@factory.register(GroupExpr, 'bs')
class AffineBS(GroupExpr):
    """
    The group ``<g, h | h g h^-1 = g^m>`` realized by affine maps of the
    rationals: ``g`` is ``x -> x + 1`` and ``h`` is ``x -> m x``. An element
    is a pair ``(a, b)`` standing for ``x -> m^a x + b``.
    """
    def __init__(self, m, g='g', h='h'):
        if int(m) < 2:
            raise WordProblemError('AffineBS needs m >= 2, got {0}'.format(m))
        if g == h:
            raise NameCollisionError('Duplicate generator name {0!r}'.format(g))
        self.m, self.g, self.h = int(m), g, h
        self.names = frozenset([g, h])

    def _letter(self, name, sign):
        if name == self.g:
            return (0, Fraction(sign))
        return (sign, Fraction(0))

    def compose(self, first, second):
        """``first o second``: apply ``second``, then ``first``."""
        (a1, b1), (a2, b2) = first, second
        return (a1 + a2, Fraction(self.m) ** a1 * b2 + b1)

    def evaluate(self, w):
        acc = (0, Fraction(0))
        for name, sign in w.letters():
            acc = self.compose(acc, self._letter(name, sign))
        return acc

    def _is_identity(self, w):
        return self.evaluate(w) == (0, 0)

    def _cyclic_membership(self, x, c):
        (ax, bx), (ac, bc) = self.evaluate(x), self.evaluate(c)
        if ac:
            if ax % ac:
                return NOT_MEMBER
            k = ax // ac
            return member(k) if self._is_identity(x * c ** -k) else NOT_MEMBER
        if ax:
            return NOT_MEMBER
        ratio = bx / bc
        return member(ratio) if ratio.denominator == 1 else NOT_MEMBER

    def commuting_pair_rank(self, g, h):
        # Two-generated abelian subgroups of this group are cyclic.
        return 1

    def rename(self, mapping):
        return AffineBS(self.m, mapping.get(self.g, self.g),
                        mapping.get(self.h, self.h))

    def to_text(self):
        return 'bs({0}; {1},{2})'.format(self.m, self.g, self.h)

@factory.register(GroupExpr, 'sub')
class Subgroup(GroupExpr):
    """
    The subgroup of ``parent`` generated by the words of ``generators``,
    whose keys are the generator names of the node.
    """
    def __init__(self, parent, generators):
        self.parent = parent
        self.generators = dict(generators)
        for w in self.generators.values():
            parent._check_names(w)
        self.names = frozenset(self.generators)

    def lift(self, w):
        return w.substitute(self.generators)

    def _is_identity(self, w):
        return self.parent._is_identity(self.lift(w))

    def _cyclic_membership(self, x, c):
        return self.parent.cyclic_membership(self.lift(x), self.lift(c))

    def commuting_pair_rank(self, g, h):
        return self.parent.commuting_pair_rank(self.lift(g), self.lift(h))

    def rename(self, mapping):
        return Subgroup(self.parent,
                        dict((mapping.get(n, n), w)
                             for n, w in self.generators.items()))

    def to_text(self):
        gens = ', '.join('{0} = {1}'.format(n, w)
                         for n, w in self.generators.items())
        return 'sub({0}; {1})'.format(self.parent.to_text(), gens)

@factory.register(GroupExpr, 'raag')
class RightAngledArtin(GroupExpr):
    """
    The right-angled Artin group on ``names`` where the generators joined
    by an edge commute.

    Words are normalized by piling: every generator owns a pile; a letter
    is pushed on its own pile and blocks the piles of the generators it does
    not commute with, unless it cancels the letter on top of its pile.
    """
    def __init__(self, names, edges=()):
        self.name_list = list(names)
        _check_distinct(self.name_list)
        self.names = frozenset(self.name_list)
        self.edges = list()
        for a, b in edges:
            if a not in self.names or b not in self.names:
                raise UnknownGeneratorError(
                    'Edge {0}-{1} uses an unknown generator'.format(a, b))
            if a == b:
                raise WordProblemError('Loop edge on {0!r}'.format(a))
            if frozenset((a, b)) not in self.edge_set():
                self.edges.append((a, b))
        self._index = dict((n, i) for i, n in enumerate(self.name_list))
        commuting = self.edge_set()
        self._blocked = [
            [j for j, m in enumerate(self.name_list)
             if j != i and frozenset((n, m)) not in commuting]
            for i, n in enumerate(self.name_list)]

    def edge_set(self):
        return set(frozenset(e) for e in self.edges)

    def commute(self, a, b):
        return a == b or frozenset((a, b)) in self.edge_set()

    def _pile(self, w):
        piles = [list() for _ in self.name_list]
        count = 0
        for name, sign in w.letters():
            i = self._index[name]
            if piles[i] and piles[i][-1] == -sign:
                count -= 1
                piles[i].pop()
                for j in self._blocked[i]:
                    piles[j].pop()
            else:
                count += 1
                piles[i].append(sign)
                for j in self._blocked[i]:
                    piles[j].append(0)
        return piles, count

    def normal_form(self, w):
        """The unique normal form of ``w`` as a :class:`SymWord`."""
        self._check_names(w)
        piles, count = self._pile(w)
        piles = [list(reversed(p)) for p in piles]
        result = list()
        while count:
            i = next(i for i, p in enumerate(piles) if p and p[-1])
            result.append((self.name_list[i], piles[i][-1]))
            count -= 1
            piles[i].pop()
            for j in self._blocked[i]:
                piles[j].pop()
        return SymWord(result)

    def _is_identity(self, w):
        return self._pile(w)[1] == 0

    def _cyclic_membership(self, x, c):
        for n in self.name_list:
            sc = c.exponent_sum(n)
            if sc:
                sx = x.exponent_sum(n)
                if sx % sc:
                    return NOT_MEMBER
                k = sx // sc
                return member(k) if self._is_identity(x * c ** -k) \
                    else NOT_MEMBER
        # |c^k| >= |k| - 2|c| for non-trivial c
        bound = len(self.normal_form(x)) + 2 * len(c)
        for k in range(-bound, bound + 1):
            if self._is_identity(x * c ** -k):
                return member(k)
        return NOT_MEMBER

    def commuting_pair_rank(self, g, h):
        vectors = np.array([[w.exponent_sum(n) for n in self.name_list]
                            for w in (g, h)], dtype=float)
        if np.linalg.matrix_rank(vectors) == 2:
            return 2
        return None

    def rename(self, mapping):
        return RightAngledArtin([mapping.get(n, n) for n in self.name_list],
                                [(mapping.get(a, a), mapping.get(b, b))
                                 for a, b in self.edges])

    def to_text(self):
        edges = ', '.join('{0}-{1}'.format(a, b) for a, b in self.edges)
        if edges:
            return 'raag({0}; {1})'.format(_name_list(self.name_list), edges)
        return 'raag({0})'.format(_name_list(self.name_list))

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

""" Exact finite permutation groups.

Group elements are :class:`sympy.combinatorics.Permutation` objects acting on
the points ``0..n-1``. Composition follows sympy: ``p*q`` applies ``p``
first, then ``q``. Accordingly the commutator ``[a,b] = a^-1 b^-1 a b`` is
``~a*~b*a*b``.

A :class:`FiniteGroup` is fully enumerated; its elements are ordered
lexicographically by their image sequences, so the identity always has index
``0``. Multiplication, inverse and commutator tables are numpy index arrays
computed on first use.
"""

__all__ = ['Perm', 'FiniteGroup', 'generate_group', 'identity',
           'perm_from_cycles', 'format_perm', 'centralizer',
           'centralizer_indices', 'commutator', 'support',
           'conjugacy_classes', 'direct_product', 'PRESETS', 'preset',
           'DEFAULT_CLOSURE_CAP', 'DEFAULT_TABLE_CAP']

import functools
import logging
from collections import deque
import numpy as np
from sympy.combinatorics import Permutation
from rubin.exceptions import (GroupError, DegreeMismatchError,
                              ClosureCapExceeded, NotInGroupError)

log = logging.getLogger('rubin.permgroup')
datalog = logging.getLogger('rubin.data.permgroup')

Perm = Permutation

DEFAULT_CLOSURE_CAP = 20000
DEFAULT_TABLE_CAP = 5000

def identity(degree):
    """The identity permutation on ``degree`` points."""
    return Permutation(list(range(degree)))

def perm_from_cycles(cycles, degree=None):
    """
    Build a permutation from 0-based disjoint cycles.

    :param cycles: Iterable of point sequences, e.g. ``[[0, 1], [2, 3]]``.
    :param int degree: Number of points. Defaults to the largest point + 1.
    """
    cycles = [list(c) for c in cycles]
    points = [p for c in cycles for p in c]
    if any(p < 0 for p in points):
        raise GroupError('Negative point in cycle notation')
    needed = max(points) + 1 if points else 0
    if degree is None:
        degree = needed
    elif needed > degree:
        raise DegreeMismatchError(
            'Point {0} does not exist in degree {1}'.format(needed - 1, degree))
    if len(points) != len(set(points)):
        raise GroupError('Cycles must be disjoint: {0!r}'.format(cycles))
    images = list(range(degree))
    for c in cycles:
        for i, p in enumerate(c):
            images[p] = c[(i + 1) % len(c)]
    return Permutation(images)

def format_perm(p):
    """0-based disjoint cycle notation; the identity is ``()``."""
    cycles = p.cyclic_form
    if not cycles:
        return '()'
    return ''.join('({0})'.format(' '.join(str(i) for i in c)) for c in cycles)

def commutator(a, b):
    """``[a,b] = a^-1 b^-1 a b``."""
    if a.size != b.size:
        raise DegreeMismatchError(
            'Commutator of degree {0} and {1} permutations'.format(
                a.size, b.size))
    return ~a * ~b * a * b

def support(g):
    """The set of points moved by ``g``."""
    return frozenset(i for i, j in enumerate(g.array_form) if i != j)

def _closure(generators, degree, cap):
    gens = [tuple(g.array_form) for g in generators]
    start = tuple(range(degree))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = tuple(s[v] for v in x)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise ClosureCapExceeded(cap)
                queue.append(y)
    return sorted(seen)

def generate_group(generators, degree=None, cap=DEFAULT_CLOSURE_CAP,
                   table_cap=DEFAULT_TABLE_CAP):
    """
    Enumerate the group generated by ``generators``.

    :param list generators: Permutations of a common degree.
    :param int degree: Required when ``generators`` is empty.
    :param int cap: Maximum number of elements.
    :param int table_cap: Maximum order for which tables are built.
    :rtype: :class:`FiniteGroup`
    """
    generators = list(generators)
    degrees = set(g.size for g in generators)
    if degree is not None:
        degrees.add(degree)
    if not degrees:
        raise GroupError('The degree is required for an empty generator list')
    if len(degrees) > 1:
        raise DegreeMismatchError(
            'Generators have different degrees: {0}'.format(sorted(degrees)))
    degree = degrees.pop()
    elements = _closure(generators, degree, cap)
    log.debug('Generated group of degree %d and order %d',
              degree, len(elements))
    return FiniteGroup(degree, elements, generators, table_cap)

class FiniteGroup(object):
    """
    A fully enumerated permutation group. Use :func:`generate_group` to
    construct instances.

    :ivar int degree: Number of points.
    :ivar list elements: The elements, in canonical order.
    :ivar list generators: The generators the group was built from.
    """
    def __init__(self, degree, images, generators, table_cap=DEFAULT_TABLE_CAP):
        self.degree = degree
        self.generators = list(generators)
        self.table_cap = table_cap
        self.E = np.array(images, dtype=np.intp).reshape(len(images), degree)
        self.elements = [Permutation(list(row)) for row in images]
        self._index = dict((tuple(row), i) for i, row in enumerate(images))
        self._mult = self._inverse = self._comm = None

    def __len__(self):
        return len(self.elements)

    def order(self):
        return len(self.elements)

    def element(self, i):
        return self.elements[i]

    def index(self, p):
        """Canonical index of ``p``; :exc:`NotInGroupError` if absent."""
        key = tuple(p.array_form) if p.size == self.degree else None
        try:
            return self._index[key]
        except KeyError:
            raise NotInGroupError(
                '{0} is not an element of the group'.format(format_perm(p)))

    def contains(self, p):
        return p.size == self.degree and tuple(p.array_form) in self._index

    __contains__ = contains

    def _check_table_cap(self, what):
        if len(self) > self.table_cap:
            raise ClosureCapExceeded(self.table_cap, what)

    def _lookup(self, rows):
        """Indices of the permutations given as rows of an index array."""
        rows = np.asarray(rows, dtype=np.intp)
        shape = rows.shape[:-1]
        flat = rows.reshape(int(np.prod(shape, dtype=np.int64)), self.degree)
        if self.degree ** self.degree < 2 ** 62:
            # Base-degree codes are monotone in the lexicographic order.
            weights = np.array([self.degree ** (self.degree - 1 - k)
                                for k in range(self.degree)], dtype=np.int64)
            codes = self.E.astype(np.int64) @ weights
            found = np.searchsorted(codes, flat.astype(np.int64) @ weights)
        else:
            found = np.array([self._index[tuple(r)] for r in flat.tolist()],
                             dtype=np.intp)
        return found.reshape(shape).astype(np.intp)

    @property
    def mult(self):
        """``mult[i,j]`` is the index of ``elements[i]*elements[j]``."""
        if self._mult is None:
            self._check_table_cap('multiplication table')
            n = len(self)
            table = np.empty((n, n), dtype=np.intp)
            for i in range(n):
                # row j of E[:, E[i]] is elements[i] followed by elements[j]
                table[i] = self._lookup(self.E[:, self.E[i]])
            self._mult = table
            datalog.debug('Multiplication table of order %d built', n)
        return self._mult

    @property
    def inverse(self):
        """``inverse[i]`` is the index of the inverse of ``elements[i]``."""
        if self._inverse is None:
            self._check_table_cap('inverse table')
            self._inverse = self._lookup(np.argsort(self.E, axis=1))
        return self._inverse

    @property
    def commutator_table(self):
        """``commutator_table[i,j]`` is the index of ``[elements[i], elements[j]]``."""
        if self._comm is None:
            M, I = self.mult, self.inverse
            A = np.arange(len(self))
            X = M[np.ix_(I, I)]
            Y = M[X, A[:, None]]
            self._comm = M[Y, A[None, :]]
        return self._comm

    def power_map(self, k):
        """Index array mapping each element index to the index of its ``k``-th power."""
        M = self.mult
        base = np.arange(len(self))
        if k < 0:
            base, k = self.inverse.copy(), -k
        result = np.zeros(len(self), dtype=np.intp)
        while k:
            if k & 1:
                result = M[result, base]
            base = M[base, base]
            k >>= 1
        return result

    def commuting_mask(self, i):
        """Boolean mask of the elements commuting with ``elements[i]``."""
        M = self.mult
        return M[i, :] == M[:, i]

    def center(self):
        M = self.mult
        central = (M == M.T).all(axis=1)
        return frozenset(self.elements[i] for i in np.flatnonzero(central))

    def is_abelian(self):
        M = self.mult
        return bool((M == M.T).all())

    def __repr__(self):
        return 'FiniteGroup(degree={0}, order={1})'.format(
            self.degree, len(self))

def centralizer_indices(G, i):
    """Sorted index array of the centralizer of ``elements[i]``."""
    return np.flatnonzero(G.commuting_mask(i))

def centralizer(G, g):
    """
    The centralizer of ``g`` in ``G``.

    :raises NotInGroupError: if ``g`` is not an element of ``G``.
    """
    i = G.index(g)
    return frozenset(G.elements[j] for j in centralizer_indices(G, i))

def conjugacy_class_indices(G):
    """Conjugacy classes as sorted index lists, ordered by minimal index."""
    M, I = G.mult, G.inverse
    A = np.arange(len(G))
    assigned = np.zeros(len(G), dtype=bool)
    classes = list()
    for i in range(len(G)):
        if assigned[i]:
            continue
        members = np.unique(M[M[I, i], A])
        assigned[members] = True
        classes.append([int(j) for j in members])
    return classes

def conjugacy_classes(G):
    """
    Partition of ``G`` into conjugacy classes.

    :return: List of element lists, each in canonical order; classes are
        ordered by their first element.
    """
    return [[G.elements[j] for j in c] for c in conjugacy_class_indices(G)]

def _embed(shift, before, after, p):
    return Permutation(list(range(before))
                       + [shift + v for v in p.array_form]
                       + list(range(before + p.size, before + p.size + after)))

def direct_product(G1, G2, cap=DEFAULT_CLOSURE_CAP):
    """
    The direct product acting on the disjoint union of the two domains; the
    points of ``G2`` are shifted by ``G1.degree``.

    :return: ``(G, embed_left, embed_right)`` where the embeddings map
        elements of the factors into ``G``.
    """
    d1, d2 = G1.degree, G2.degree
    embed_left = functools.partial(_embed, 0, 0, d2)
    embed_right = functools.partial(_embed, d1, d1, 0)
    gens = ([embed_left(g) for g in G1.generators]
            + [embed_right(g) for g in G2.generators])
    G = generate_group(gens, degree=d1 + d2, cap=cap)
    return G, embed_left, embed_right

def _cycle_gens(degree, *cycle_lists):
    return [perm_from_cycles(c, degree) for c in cycle_lists]

def _preset_S3xS3():
    S3 = preset('S3')
    return direct_product(S3, S3)[0]

PRESETS = {
    'S3': lambda: generate_group(_cycle_gens(3, [[0, 1]], [[0, 1, 2]])),
    'S4': lambda: generate_group(_cycle_gens(4, [[0, 1]], [[0, 1, 2, 3]])),
    'A4': lambda: generate_group(_cycle_gens(4, [[0, 1, 2]], [[1, 2, 3]])),
    'D4': lambda: generate_group(_cycle_gens(4, [[0, 1, 2, 3]], [[1, 3]])),
    'C2xC2': lambda: generate_group(_cycle_gens(4, [[0, 1]], [[2, 3]])),
    'C5xC5': lambda: generate_group(
        _cycle_gens(10, [[0, 1, 2, 3, 4]], [[5, 6, 7, 8, 9]])),
    'C12': lambda: generate_group(_cycle_gens(12, [list(range(12))])),
    'S3xS3': _preset_S3xS3,
    'trivial': lambda: generate_group([], degree=0),
}

@functools.lru_cache(maxsize=None)
def preset(name):
    """
    A named preset group (see :data:`PRESETS`).

    :raises GroupError: for unknown names.
    """
    try:
        factory = PRESETS[name]
    except KeyError:
        raise GroupError('Unknown preset {0!r} (available: {1})'.format(
            name, ', '.join(sorted(PRESETS))))
    return factory()

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

""" Algebraic disjointness in finite groups.

``g`` is *algebraically disjoint* from ``f`` if for every ``h`` not
commuting with ``f`` there are ``a, b`` in the centralizer ``C(g)`` such
that ``[a,[b,h]]`` is non-trivial and lies in ``C(g)``. All quantifiers are
evaluated exhaustively over the commutator table of the group.

For a fixed ``g``, whether a suitable pair ``a, b`` exists for ``h`` does
not depend on ``f``. The *witness mask* of ``g`` records this for every
``h``; ``g`` is then disjoint from ``f`` iff every ``h`` not commuting with
``f`` is in the mask.

``S_f`` is the set of ``power``-th powers (12 by default) of the elements
disjoint from ``f``; the Rubin poset is the family of intersections of the
centralizers ``C(S_f)`` ordered by inclusion.
"""

__all__ = ['witness_mask', 'is_algebraically_disjoint', 'compute_S',
           'centralizer_of_set', 'disjointness_matrix', 'DisjointnessMatrix',
           'rubin_poset', 'RubinPoset', 'CentralizerOfSfTask',
           'product_disjointness_check', 'ProductCheckReport',
           'support_comparison', 'SupportReport', 'DEFAULT_POWER']

import logging
import networkx as nx
import numpy as np
from rubin.permgroup import (generate_group, format_perm, support,
                             direct_product, Permutation)
from rubin.strategy import Task, get_strategy
from rubin.exceptions import ConfigurationError

log = logging.getLogger('rubin.disjointness')
datalog = logging.getLogger('rubin.data.disjointness')

DEFAULT_POWER = 12

def witness_mask(G, gi):
    """
    Boolean mask over ``h``: whether some ``a, b`` in ``C(g)`` give
    ``1 != [a,[b,h]]`` in ``C(g)``, where ``g = elements[gi]``.

    Works one ``a`` at a time, so memory stays at ``|C(g)| * |G|``.
    """
    Z = G.commutator_table
    inC = G.commuting_mask(gi)
    C = np.flatnonzero(inC)
    B = Z[C, :]
    good = np.zeros(len(G), dtype=bool)
    for a in C:
        X = Z[a][B]
        good |= ((X != 0) & inC[X]).any(axis=0)
    return good

def _is_disjoint_idx(G, gi, fi):
    Z = G.commutator_table
    inC = G.commuting_mask(gi)
    C = np.flatnonzero(inC)
    for h in np.flatnonzero(Z[fi] != 0):
        X = Z[np.ix_(C, Z[C, h])]
        if not ((X != 0) & inC[X]).any():
            return False
    return True

def is_algebraically_disjoint(G, g, f):
    """
    Whether ``g`` is algebraically disjoint from ``f``.

    :raises NotInGroupError: if ``g`` or ``f`` is not an element of ``G``.
    """
    return _is_disjoint_idx(G, G.index(g), G.index(f))

def _disjoint_from(G, fi):
    return [gi for gi in range(len(G)) if _is_disjoint_idx(G, gi, fi)]

def _s_indices(G, disjoint, power):
    return np.unique(G.power_map(power)[np.asarray(disjoint, dtype=np.intp)])

def compute_S(G, f, power=DEFAULT_POWER):
    """
    ``S_f``: the set of ``power``-th powers of the elements algebraically
    disjoint from ``f``.
    """
    fi = G.index(f)
    return frozenset(G.elements[i]
                     for i in _s_indices(G, _disjoint_from(G, fi), power))

def _centralizer_mask(G, indices):
    indices = np.asarray(indices, dtype=np.intp)
    M = G.mult
    return (M[:, indices] == M[indices, :].T).all(axis=1)

def centralizer_of_set(G, S):
    """
    The elements of ``G`` commuting with every element of ``S``.

    :raises NotInGroupError: if ``S`` is not a subset of ``G``.
    """
    indices = [G.index(s) for s in S]
    return frozenset(G.elements[i]
                     for i in np.flatnonzero(_centralizer_mask(G, indices)))

def _generators_to_json(G):
    return [list(g.array_form) for g in G.generators]

def _group_from_json(data):
    return generate_group([Permutation(g) for g in data['generators']],
                          degree=data['degree'])

class DisjointnessMatrix(object):
    """
    ``D[g,f]`` is true iff ``elements[g]`` is algebraically disjoint from
    ``elements[f]``.
    """
    def __init__(self, group, D):
        self.group, self.D = group, np.asarray(D, dtype=bool)

    def __getitem__(self, key):
        return bool(self.D[key])

    def is_all_true(self):
        return bool(self.D.all())

    def to_dict(self):
        return dict(degree=self.group.degree,
                    generators=_generators_to_json(self.group),
                    elements=[format_perm(p) for p in self.group.elements],
                    matrix=self.D.tolist())

    @staticmethod
    def from_dict(data):
        return DisjointnessMatrix(_group_from_json(data), data['matrix'])

    def __eq__(self, other):
        return (isinstance(other, DisjointnessMatrix)
                and self.group.elements == other.group.elements
                and np.array_equal(self.D, other.D))

    def __ne__(self, other):
        return not self == other

def disjointness_matrix(G):
    """The full :class:`DisjointnessMatrix` of ``G``."""
    noncomm = G.commutator_table != 0
    n = len(G)
    D = np.empty((n, n), dtype=bool)
    for gi in range(n):
        good = witness_mask(G, gi)
        D[gi, :] = ~(noncomm & ~good[None, :]).any(axis=1)
    log.info('Disjointness matrix of a group of order %d: %d disjoint pairs',
             n, int(D.sum()))
    return DisjointnessMatrix(G, D)

class CentralizerOfSfTask(Task):
    """
    Computes ``C(S_f)`` for one ``f`` from its disjointness column.

    :param G: The group.
    :param int fi: Index of ``f``.
    :param disjoint: Indices of the elements disjoint from ``f``.
    :param int power: Exponent defining ``S_f``.
    """
    def __init__(self, G, fi, disjoint, power):
        self.G, self.fi, self.power = G, fi, power
        self.disjoint = [int(i) for i in disjoint]
        self.task_id = 'f{0}'.format(fi)

    def perform(self):
        S = _s_indices(self.G, self.disjoint, self.power)
        return tuple(int(i) for i in np.flatnonzero(
            _centralizer_mask(self.G, S)))

def _node_key(node):
    return (len(node), tuple(sorted(node)))

class RubinPoset(object):
    """
    Intersections of centralizers ``C(S_f)`` ordered by inclusion.

    :ivar list nodes: Element index sets (frozensets), sorted by size and
        then by content.
    :ivar list labels: For each node one tuple of ``f`` indices whose
        centralizers intersect to it (empty for the whole group).
    :ivar list hasse: Covering pairs ``(lower, upper)`` of node positions.
    """
    def __init__(self, group, nodes, labels, hasse, power=DEFAULT_POWER,
                 include_group=False):
        self.group = group
        self.nodes, self.labels = list(nodes), list(labels)
        self.hasse = sorted(tuple(e) for e in hasse)
        self.power, self.include_group = power, include_group

    def __len__(self):
        return len(self.nodes)

    def leq(self, i, j):
        return self.nodes[i] <= self.nodes[j]

    def order_pairs(self):
        """All pairs ``(i, j)`` with ``nodes[i]`` contained in ``nodes[j]``."""
        n = len(self.nodes)
        return [(i, j) for i in range(n) for j in range(n) if self.leq(i, j)]

    def least(self):
        """Position of the least node, or ``None``."""
        for i, node in enumerate(self.nodes):
            if all(node <= other for other in self.nodes):
                return i
        return None

    def is_intersection_closed(self):
        present = set(self.nodes)
        return all((a & b) in present for a in self.nodes for b in self.nodes)

    def node_elements(self, i):
        return [self.group.elements[k] for k in sorted(self.nodes[i])]

    def to_dict(self):
        return dict(degree=self.group.degree,
                    generators=_generators_to_json(self.group),
                    power=self.power,
                    include_group=self.include_group,
                    nodes=[sorted(int(k) for k in n) for n in self.nodes],
                    labels=[list(l) for l in self.labels],
                    hasse=[list(e) for e in self.hasse])

    @staticmethod
    def from_dict(data):
        return RubinPoset(_group_from_json(data),
                          [frozenset(n) for n in data['nodes']],
                          [tuple(l) for l in data['labels']],
                          [tuple(e) for e in data['hasse']],
                          data.get('power', DEFAULT_POWER),
                          data.get('include_group', False))

    def __eq__(self, other):
        return (isinstance(other, RubinPoset)
                and self.group.elements == other.group.elements
                and self.nodes == other.nodes
                and self.labels == other.labels
                and self.hasse == other.hasse)

    def __ne__(self, other):
        return not self == other

def _merge_labels(*labels):
    merged = list()
    for label in labels:
        merged.extend(f for f in label if f not in merged)
    return tuple(merged)

def rubin_poset(G, include_group=False, power=DEFAULT_POWER,
                strategy='sequential'):
    """
    Compute the Rubin poset of ``G``.

    :param bool include_group: Also include ``G`` itself (the empty
        intersection) as a node.
    :param int power: Exponent defining ``S_f``.
    :param strategy: :class:`~rubin.strategy.Strategy` (or its protocol
        key) performing the per-``f`` centralizer computations.
    """
    if power < 1:
        raise ConfigurationError('power must be positive, got {0}'.format(power))
    matrix = disjointness_matrix(G)
    tasks = [CentralizerOfSfTask(G, fi, np.flatnonzero(matrix.D[:, fi]), power)
             for fi in range(len(G))]
    centralizers = get_strategy(strategy).perform(tasks)

    labels = dict()
    for fi, cset in enumerate(centralizers):
        labels.setdefault(frozenset(cset), (fi,))
    if include_group:
        labels.setdefault(frozenset(range(len(G))), ())

    frontier = sorted(labels, key=_node_key)
    while frontier:
        known = sorted(labels, key=_node_key)
        fresh = list()
        for a in frontier:
            for b in known:
                inter = a & b
                if inter not in labels:
                    labels[inter] = _merge_labels(labels[a], labels[b])
                    fresh.append(inter)
        frontier = sorted(fresh, key=_node_key)

    nodes = sorted(labels, key=_node_key)
    position = dict((n, i) for i, n in enumerate(nodes))
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(nodes)))
    graph.add_edges_from((position[a], position[b])
                         for a in nodes for b in nodes if a < b)
    hasse = list(nx.transitive_reduction(graph).edges())
    log.info('Rubin poset of a group of order %d: %d node(s), %d covering '
             'edge(s)', len(G), len(nodes), len(hasse))
    datalog.debug('Poset nodes: %r', [sorted(n) for n in nodes])
    return RubinPoset(G, nodes, [labels[n] for n in nodes], hasse,
                      power, include_group)

class ProductCheckReport(object):
    """
    Outcome of :func:`product_disjointness_check`.

    :ivar list counterexamples: ``(x, y)`` cycle notations of cross pairs
        that are not mutually disjoint.
    """
    def __init__(self, left_centerless, right_centerless, pairs_checked,
                 counterexamples):
        self.left_centerless = left_centerless
        self.right_centerless = right_centerless
        self.pairs_checked = pairs_checked
        self.counterexamples = list(counterexamples)

    @property
    def ok(self):
        return not self.counterexamples

    @property
    def notes(self):
        notes = list()
        for side, flag in (('left', self.left_centerless),
                           ('right', self.right_centerless)):
            if not flag:
                notes.append('{0} factor has a non-trivial center; the '
                             'implication may fail'.format(side))
        return notes

    def to_dict(self):
        return dict(left_centerless=self.left_centerless,
                    right_centerless=self.right_centerless,
                    pairs_checked=self.pairs_checked,
                    counterexamples=[list(c) for c in self.counterexamples],
                    notes=self.notes, ok=self.ok)

    @staticmethod
    def from_dict(data):
        return ProductCheckReport(data['left_centerless'],
                                  data['right_centerless'],
                                  data['pairs_checked'],
                                  [tuple(c) for c in data['counterexamples']])

    def __eq__(self, other):
        return (isinstance(other, ProductCheckReport)
                and self.to_dict() == other.to_dict())

def product_disjointness_check(G1, G2):
    """
    Check that in ``G1 x G2`` every pair ``((x,1), (1,y))`` with ``x, y``
    non-trivial is mutually algebraically disjoint.
    """
    G, embed_left, embed_right = direct_product(G1, G2)
    matrix = disjointness_matrix(G)
    counterexamples, checked = list(), 0
    for x in G1.elements[1:]:
        i = G.index(embed_left(x))
        for y in G2.elements[1:]:
            j = G.index(embed_right(y))
            checked += 1
            if not (matrix.D[i, j] and matrix.D[j, i]):
                counterexamples.append((format_perm(x), format_perm(y)))
    report = ProductCheckReport(len(G1.center()) == 1, len(G2.center()) == 1,
                                checked, counterexamples)
    log.info('Product check over %d cross pair(s): %s',
             checked, 'ok' if report.ok else 'COUNTEREXAMPLES FOUND')
    return report

class SupportReport(object):
    """
    Ordered pairs of distinct non-trivial commuting elements, counted by
    whether their supports are disjoint and whether the first element is
    algebraically disjoint from the second.
    """
    def __init__(self, counts):
        self.counts = dict(counts)

    def count(self, supports_disjoint, algebraically_disjoint):
        return self.counts.get((supports_disjoint, algebraically_disjoint), 0)

    def to_dict(self):
        return dict(
            disjoint_supports=dict(
                algebraically_disjoint=self.count(True, True),
                not_algebraically_disjoint=self.count(True, False)),
            overlapping_supports=dict(
                algebraically_disjoint=self.count(False, True),
                not_algebraically_disjoint=self.count(False, False)))

def support_comparison(G):
    """Compare support disjointness with algebraic disjointness."""
    matrix = disjointness_matrix(G)
    Z = G.commutator_table
    supports = [support(p) for p in G.elements]
    counts = dict()
    for gi in range(1, len(G)):
        for fi in range(1, len(G)):
            if gi == fi or Z[gi, fi] != 0:
                continue
            key = (not (supports[gi] & supports[fi]), bool(matrix.D[gi, fi]))
            counts[key] = counts.get(key, 0) + 1
    return SupportReport(counts)

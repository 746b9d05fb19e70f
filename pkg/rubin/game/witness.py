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

""" Witness groups for sets of played conditions.

The witness is a direct product of *panels*. A panel is the right-angled
Artin group on the played names, minus some names sent to the identity
(*killed*), where two names are joined when a played equation says they
commute. Names defined by a conjugation ``t = n^-1 k n`` are words in the
others.

- Every panel satisfies every played equation: commutation equations hold
  by construction, the other equations are enforced by killing the
  highest-numbered unprotected name of a failing equation until all hold.
- Every played inequation holds in at least one panel: it is checked in the
  existing panels, and otherwise a new panel protecting its names is
  built. For the four-condition system of the strategy this is the panel
  where the centralized element is killed.

The product of panels is torsion-free. After assembly every condition is
evaluated again in the product expression.

A witness can also be carried into an overgroup built around it
(:func:`adopt_overgroup`); the old assignment stays valid there because
the witness embeds.
"""

__all__ = ['Witness', 'Panel', 'build_witness', 'conjugation_definition',
           'with_free_names', 'adopt_overgroup']

import logging
from rubin.symbolic.words import SymWord, EMPTY
from rubin.symbolic.nodes import (RightAngledArtin, DirectProduct, FreeGroup,
                                  FreeProduct)
from rubin.symbolic.constructions import fresh_name
from rubin.game.closure import commutator_pair
from rubin.exceptions import InadmissibleMoveError, EngineInconsistency

datalog = logging.getLogger('rubin.data.game.witness')

def conjugation_definition(word):
    """``(t, n, k)`` when ``word`` is ``n^-1 k n t^-1`` with distinct names."""
    letters = word.letters()
    if len(letters) != 4:
        return None
    (n, s1), (k, s2), (n2, s3), (t, s4) = letters
    if (s1, s2, s3, s4) != (-1, 1, 1, -1) or n != n2:
        return None
    if len(set((n, k, t))) != 3:
        return None
    return t, n, k

class Panel(object):
    """
    One factor of the witness.

    :param vertices: Names that are generators of the panel.
    :param edges: Commuting pairs of names.
    :param killed: Names sent to the identity.
    :param protected: Names that must not be killed.
    """
    def __init__(self, vertices, edges, killed=(), protected=(), reason=None):
        self.vertices = list(vertices)
        self.all_edges = list(edges)
        self.killed = set(killed)
        self.protected = frozenset(protected)
        self.reason = reason
        self._raag = None

    @property
    def raag(self):
        if self._raag is None:
            alive = [v for v in self.vertices if v not in self.killed]
            self._raag = RightAngledArtin(
                alive, [(a, b) for a, b in self.all_edges
                        if a not in self.killed and b not in self.killed])
        return self._raag

    def project(self, w):
        return SymWord(s for s in w.syllables if s[0] not in self.killed)

    def is_identity(self, w):
        return self.raag._is_identity(self.project(w))

    def kill(self, v):
        self.killed.add(v)
        self._raag = None

    def enforce(self, equations):
        """
        Kill names until every word of ``equations`` is trivial.

        :return: Whether it succeeded without touching a protected name.
        """
        progress = True
        while progress:
            progress = False
            for w in equations:
                if self.is_identity(w):
                    continue
                candidates = self.project(w).names() - self.protected
                if not candidates:
                    return False
                self.kill(max(candidates))
                progress = True
                break
        return True

    def to_dict(self):
        return dict(killed=sorted(self.killed),
                    protected=sorted(self.protected), reason=self.reason)

class Witness(object):
    """
    A torsion-free group together with an assignment of the played names.

    :ivar expr: The :class:`~rubin.symbolic.nodes.GroupExpr`.
    :ivar dict assignment: Name to :class:`~rubin.symbolic.words.SymWord`
        over the generators of ``expr``.
    :ivar list plan: How the witness was obtained.
    """
    def __init__(self, expr, assignment, plan):
        self.expr = expr
        self.assignment = assignment
        self.plan = plan

    def evaluate(self, w):
        """``w`` (over played names) as a word over the generators."""
        return w.substitute(self.assignment)

    def is_identity(self, w):
        return self.expr.is_identity(self.evaluate(w))

    def holds(self, condition):
        return self.is_identity(condition.word) == condition.positive

    def to_dict(self):
        return dict(expr=self.expr.to_text(),
                    assignment=dict((str(n), str(w)) for n, w in
                                    sorted(self.assignment.items())),
                    plan=self.plan)

def _panel_name(v, i):
    return 'x{0}p{1}'.format(v, i)

def build_witness(names, conditions, identity):
    """
    Build a witness for ``conditions`` over the played ``names``.

    :raises InadmissibleMoveError: if the panel rules cannot realize the
        conditions.
    :rtype: :class:`Witness`
    """
    names = sorted(set(names) | set([identity]))
    equations = [c.word for c in conditions if c.positive]
    plan = list()

    definitions = dict()
    vertices = [n for n in names if n != identity]
    seen = set([identity])
    for w in equations:
        found = conjugation_definition(w)
        if found is not None:
            t, n, k = found
            if identity not in (t, n, k) and t not in seen \
                    and t not in definitions:
                definitions[t] = SymWord.gen(n, -1) * SymWord.gen(k) \
                    * SymWord.gen(n)
                plan.append(dict(step='define', name=t,
                                 word=str(definitions[t])))
        seen |= w.names()
    vertices = [v for v in vertices if v not in definitions]

    expansion = dict([(identity, EMPTY)])
    def expand_name(n):
        if n not in expansion:
            expansion[n] = definitions[n].substitute(
                dict((m, expand_name(m)) for m in definitions[n].names())) \
                if n in definitions else SymWord.gen(n)
        return expansion[n]
    for n in names:
        expand_name(n)

    def expand(w):
        return w.substitute(expansion)

    edges, general = list(), list()
    for w in equations:
        core = expand(w).cyclic_reduce()[1]
        if core.is_empty():
            continue
        pair = commutator_pair(core)
        if pair is not None:
            edges.append(pair)
        else:
            general.append(core)
    plan.append(dict(step='vertices', names=vertices, edges=len(edges),
                     general=len(general)))

    base = Panel(vertices, edges, reason='base')
    base.enforce(general)
    panels = [base]
    for c in conditions:
        if c.positive:
            continue
        x = expand(c.word)
        if any(not p.is_identity(x) for p in panels):
            continue
        panel = Panel(vertices, edges, protected=x.names(), reason=str(c))
        if not panel.enforce(general) or panel.is_identity(x):
            raise InadmissibleMoveError(
                'No panel realizes {0} together with the equations'.format(c))
        panels.append(panel)
    for i, p in enumerate(panels):
        plan.append(dict(step='panel', index=i, **p.to_dict()))

    renames = [dict((v, _panel_name(v, i)) for v in vertices)
               for i in range(len(panels))]
    factors = [p.raag.rename(renames[i]) for i, p in enumerate(panels)]
    expr = factors[-1]
    for factor in reversed(factors[:-1]):
        expr = DirectProduct(factor, expr)

    assignment = dict()
    for n in names:
        parts = list()
        for i, p in enumerate(panels):
            parts.extend(p.project(expansion[n]).rename(renames[i]).syllables)
        assignment[n] = SymWord(parts)

    witness = Witness(expr, assignment, plan)
    for c in conditions:
        if not witness.holds(c):
            raise EngineInconsistency(
                'Assembled witness violates {0}'.format(c))
    datalog.debug('Witness: %d panel(s), %d vertices, %d definition(s)',
                  len(panels), len(vertices), len(definitions))
    return witness

def with_free_names(witness, names):
    """
    ``witness * F``, where the names of ``names`` missing from the assignment
    become the free generators of ``F``.
    """
    names = [n for n in names if n not in witness.assignment]
    if not names:
        return witness
    taken = set(witness.expr.names)
    assignment = dict(witness.assignment)
    generators = list()
    for n in names:
        x = fresh_name('y{0}'.format(n), taken)
        taken.add(x)
        generators.append(x)
        assignment[n] = SymWord.gen(x)
    return Witness(FreeProduct(witness.expr, FreeGroup(generators)),
                   assignment, list(witness.plan))

def adopt_overgroup(witness, report, elements, plan):
    """
    Carry ``witness`` into ``report.overgroup``.

    :param report: A :class:`~rubin.symbolic.constructions.ConstructionReport`
        with an overgroup containing ``witness.expr``.
    :param dict elements: New played name to the role of its element in
        ``report.elements``.
    :rtype: :class:`Witness`
    """
    if report.overgroup is None:
        raise EngineInconsistency(
            'The {0} construction has no decidable overgroup'.format(
                report.case))
    assignment = dict(witness.assignment)
    for name, role in elements.items():
        assignment[name] = report.elements[role]
    return Witness(report.overgroup, assignment, plan)

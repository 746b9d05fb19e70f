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

""" Composite checks.

A check suite is a class deriving from :class:`CompositeCheck` whose methods
are tagged as components with the :class:`check_component` decorator:

.. code-block:: python

    AUDIT = CheckTag('audit')

    class MyAudit(CompositeCheck):
        @check_component('Moves are non-empty', AUDIT)
        def nonempty(self, transcript):
            return CheckResult.from_problems(
                'round {0}'.format(m.round) for m in transcript if not m)

    report = MyAudit().get_report(AUDIT, transcript)

Each component returns a :class:`CheckResult`; a suite passes iff all of its
components pass.
"""

__all__ = ['CheckResult', 'CheckTag', 'check_component', 'CompositeCheck']

import logging

log = logging.getLogger('rubin.game.status')

class CheckResult(object):
    """
    Outcome of a single check component.

    :param bool ok: Whether the component passed.
    :param list details: Printable details (problems on failure, notes on
        success).
    """
    def __init__(self, ok, details=()):
        self.ok, self.details = bool(ok), list(details)

    @staticmethod
    def from_problems(problems, notes=()):
        problems = list(problems)
        return CheckResult(not problems, problems or list(notes))

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return 'CheckResult({0!r}, {1!r})'.format(self.ok, self.details)

class CheckItem(object):
    def __init__(self, description, fun):
        self.desc, self.fun = description, fun

    def evaluate(self, fun_self, *args, **kwargs):
        result = self.fun(fun_self, *args, **kwargs)
        if not isinstance(result, CheckResult):
            result = CheckResult(result)
        log.debug('    %s => %s', self.desc, 'ok' if result.ok else 'FAILED')
        return result

class CheckTag(object):
    """ Check components are gathered in a tag object. """
    def __init__(self, name):
        self.items, self.name = list(), name
    def add_component(self, desc, fun):
        self.items.append(CheckItem(desc, fun))

class check_component(object):
    """ Decorator to gather check components. """
    def __init__(self, description, *tags):
        self.tags, self.desc = tags, description
    def __call__(self, fun):
        for i in self.tags:
            i.add_component(self.desc, fun)
        return fun

class CompositeCheck(object):
    """Evaluates the components gathered in a :class:`CheckTag`."""
    def get_composite_status(self, tag, lazy=True, *args, **kwargs):
        log.debug('Evaluating %r', tag.name)
        results = (item.evaluate(self, *args, **kwargs).ok for item in tag.items)
        if not lazy:
            # list() force-evaluates all items
            results = list(results)
        status = all(results)
        log.info('Check suite %r: %s', tag.name, 'ok' if status else 'FAILED')
        return status

    def get_report(self, tag, *args, **kwargs):
        """
        Evaluate every component.

        :return: List of ``(description, CheckResult)`` pairs in declaration
            order.
        """
        log.debug('Evaluating %r', tag.name)
        return list((item.desc, item.evaluate(self, *args, **kwargs))
                    for item in tag.items)

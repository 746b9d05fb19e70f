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

""" Exceptions of the Rubin toolkit.

Every error raised on purpose by the toolkit is a :exc:`RubinError`. The
sub-hierarchies follow the engines: finite groups (:exc:`GroupError`),
symbolic words (:exc:`WordProblemError`), the game (:exc:`GameError`), and
the outer surfaces (:exc:`ParseError`, :exc:`ConfigurationError`).

All constructors pass every argument to :class:`Exception` so instances
survive a pickle round trip; the parallel strategy relies on this when it
ships errors back from worker processes.
"""

__all__ = ['RubinError', 'ConfigurationError', 'TaskError',
           'GroupError', 'DegreeMismatchError', 'ClosureCapExceeded',
           'NotInGroupError',
           'WordProblemError', 'UnknownGeneratorError', 'NameCollisionError',
           'TrivialGeneratorError', 'TwistError', 'HypothesisViolation',
           'ResourceBoundExceeded',
           'GameError', 'UnplayedNameError', 'InadmissibleMoveError',
           'EngineInconsistency', 'AuditFailure',
           'ParseError']

class RubinError(Exception):
    """Base class of all toolkit errors."""
    pass

class ConfigurationError(RubinError):
    """Invalid configuration: unknown keys, bad values, unreadable files."""
    pass

class TaskError(RubinError):
    """
    A foreign exception raised while performing a task of a
    :class:`~rubin.strategy.Strategy`.

    :param str task: Printable identifier of the failed task.
    :param reason: The original exception (or its printable form).
    """
    def __init__(self, task, reason):
        super(TaskError, self).__init__(task, reason)
        self.task, self.reason = task, reason

    def __str__(self):
        return 'Task {0} failed: {1}'.format(self.task, self.reason)

class GroupError(RubinError):
    pass

class DegreeMismatchError(GroupError):
    """Permutations of different degrees were combined."""
    pass

class ClosureCapExceeded(GroupError):
    """
    The enumerated group (or one of its tables) would exceed the configured
    brute-force cap.
    """
    def __init__(self, cap, what='group closure'):
        super(ClosureCapExceeded, self).__init__(cap, what)
        self.cap, self.what = cap, what

    def __str__(self):
        return '{0} exceeds the cap of {1} elements'.format(self.what, self.cap)

class NotInGroupError(GroupError):
    pass

class WordProblemError(RubinError):
    pass

class UnknownGeneratorError(WordProblemError):
    pass

class NameCollisionError(WordProblemError):
    pass

class TrivialGeneratorError(WordProblemError):
    """Cyclic membership was asked with respect to a trivial element."""
    pass

class TwistError(WordProblemError):
    """The twist of a semidirect product is not an involutive automorphism."""
    pass

class HypothesisViolation(RubinError):
    """The input of a construction does not satisfy its preconditions."""
    pass

class ResourceBoundExceeded(RubinError):
    """
    A search budget or length bound was reached. Searches report this in
    their partial reports; it is raised only in strict mode.
    """
    pass

class GameError(RubinError):
    pass

class UnplayedNameError(GameError):
    pass

class InadmissibleMoveError(GameError):
    pass

class EngineInconsistency(GameError):
    """Forcing answers and the witness disagree. This is an engine bug."""
    pass

class AuditFailure(GameError):
    pass

class ParseError(RubinError):
    """
    Syntax or semantic error in a group specification or word.

    :param str message: What went wrong.
    :param int lineno: 1-based line of the error.
    :param int col: 1-based column of the error.
    :param str hint: One-line reminder of the expected grammar.
    """
    def __init__(self, message, lineno=1, col=1, hint=''):
        super(ParseError, self).__init__(message, lineno, col, hint)
        self.message, self.lineno, self.col, self.hint = \
            message, lineno, col, hint

    def __str__(self):
        text = '{0} (line {1}, column {2})'.format(
            self.message, self.lineno, self.col)
        if self.hint:
            text += '\n  expected: {0}'.format(self.hint)
        return text

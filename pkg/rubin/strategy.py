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

""" Strategies for performing batches of independent tasks.

A *task* is any picklable object with a ``perform()`` method. The toolkit
uses tasks for the per-element centralizer computations of the Rubin poset,
for the chunks of the bounded refutation search, and for game seed sweeps.

The results of :meth:`Strategy.perform` are always returned in task order,
so merged results never depend on completion order. A task interrupted
before it finishes leaves no entry.
"""

__all__ = ['Task', 'Strategy', 'SequentialStrategy',
           'ParallelProcessesStrategy', 'get_strategy', 'STRATEGIES']

import logging
import os, signal
import sys, traceback
import multiprocessing
import occo.util as util
import occo.util.factory as factory
from rubin.exceptions import RubinError, TaskError, ConfigurationError

log = logging.getLogger('rubin.strategy')
datalog = logging.getLogger('rubin.data.strategy')

STRATEGIES = ('sequential', 'parallel')

# Queue marker of a sub-process interrupted before finishing its task.
CANCELLED = 'cancelled'

class Task(object):
    """
    Abstract unit of work.

    Implementations must be defined at module level (so they can be pickled
    into worker processes) and must override :meth:`perform`.
    """
    task_id = None

    def perform(self):
        raise NotImplementedError()

    def __str__(self):
        return '{0}({1})'.format(self.__class__.__name__,
                                 util.icoalesce([self.task_id], 'noID'))

def _perform_task(task):
    """
    Perform a single task. Pre-cooked toolkit errors propagate unchanged,
    anything else is wrapped into :exc:`~rubin.exceptions.TaskError`.
    """
    try:
        return task.perform()
    except RubinError:
        raise
    except KeyboardInterrupt:
        raise
    except Exception as ex:
        raise TaskError(str(task), repr(ex)).with_traceback(sys.exc_info()[2])

class Strategy(factory.MultiBackend):
    """
    Abstract strategy for processing a batch of *independent* tasks.
    """

    def cancel_pending(self, reason=None):
        """
        Registers that performing the batch should be aborted.

        :param Exception reason: Optional. The error that caused the
            cancellation; only logged.
        """
        raise NotImplementedError()

    def perform(self, tasks):
        """
        Perform the tasks. The actual strategy used is defined by subclasses.

        :param tasks: An iterable of :class:`Task` objects.
        :return: The list of results, in task order.
        """
        tasks = list(tasks)
        try:
            return self._perform(tasks)
        except KeyboardInterrupt:
            log.debug('Received KeyboardInterrupt; cancelling pending tasks')
            self.cancel_pending()
            raise
        except RubinError as ex:
            log.error('A task failed (%s), aborting remaining tasks in this '
                      'batch.', ex.__class__.__name__)
            self.cancel_pending(ex)
            raise

    def _perform(self, tasks):
        """
        Core function of :meth:`perform`; overridden by the implementations.
        """
        raise NotImplementedError()

@factory.register(Strategy, 'sequential')
class SequentialStrategy(Strategy):
    """Implements :class:`Strategy`, performing the tasks sequentially."""
    def __init__(self):
        self.cancelled = False

    def cancel_pending(self, reason=None):
        self.cancelled = True

    def _perform(self, tasks):
        self.cancelled = False
        log.debug('Performing %d task(s) SEQUENTIALLY', len(tasks))

        results = list()
        for task in tasks:
            if self.cancelled:
                break
            results.append(_perform_task(task))
        return results

class PerformProcess(multiprocessing.Process):
    """
    Process object used by :class:`ParallelProcessesStrategy` to perform a
    single task.
    """
    def __init__(self, procid, procname, task, result_queue):
        super(PerformProcess, self).__init__(name=procname)
        self.task = task
        self.result_queue = result_queue
        self.procid = procid

    def return_result(self, result):
        logging.getLogger('rubin.strategy.subprocess').debug(
            'Sub-process finished normally; exiting.')
        self.result_queue.put((self.procid, result, None))

    def return_exception(self, exc_info):
        err_type, err_value = exc_info[0], exc_info[1]
        try:
            err_tbstr = ''.join(traceback.format_tb(exc_info[2]))
        except Exception:
            err_tbstr = None
        error = {
            'type'  : err_type,
            'args'  : tuple(err_value.args),
            'tbstr' : err_tbstr,
        }
        logging.getLogger('rubin.strategy.subprocess').debug(
            'Sub-process execution failed: %r', err_value)
        self.result_queue.put((self.procid, None, error))

    def run(self):
        try:
            ret = _perform_task(self.task)
            signal.signal(signal.SIGINT, signal.SIG_IGN)
            self.return_result(ret)
        except KeyboardInterrupt:
            signal.signal(signal.SIGINT, signal.SIG_IGN)
            logging.getLogger('rubin.strategy.subprocess').info(
                'Operation cancelled: %s', self.task)
            self.result_queue.put((self.procid, None, CANCELLED))
        except Exception:
            signal.signal(signal.SIGINT, signal.SIG_IGN)
            self.return_exception(sys.exc_info())

@factory.register(Strategy, 'parallel')
class ParallelProcessesStrategy(Strategy):
    """
    Implements :class:`Strategy`, performing each task in its own process.

    :param int max_workers: Maximum number of processes running at the same
        time. Defaults to the number of CPUs.
    """
    def __init__(self, max_workers=None):
        self.max_workers = max_workers or os.cpu_count() or 1
        self.processes = dict()
        self.results = list()
        self.cancelled = set()

    def _mk_process_name(self, task):
        return 'Proc{0}-{1}'.format(task.__class__.__name__,
                                    util.icoalesce([task.task_id], 'noID'))

    def _process_one_result(self):
        """
        Wait and then process a sub-process result.
        """
        procid, result, error = self.result_queue.get()
        process = self.processes.pop(procid)
        log.debug('Result for process %r has arrived', process.name)
        process.join()

        if error == CANCELLED:
            log.info('Process %r was cancelled; its task has no result',
                     process.name)
            self.cancelled.add(procid)
            return
        if error:
            log.debug('Exception occured in sub-process:\n%s', error['tbstr'])
            raise error['type'](*error['args'])
        self.results[procid] = result

    def _perform(self, tasks):
        self.result_queue = multiprocessing.Queue()
        self.results = [None] * len(tasks)
        self.cancelled = set()
        self.processes = dict()
        log.debug('Performing %d task(s) in PARALLEL (max %d workers)',
                  len(tasks), self.max_workers)

        pending = list(enumerate(tasks))
        pending.reverse()
        while pending or self.processes:
            while pending and len(self.processes) < self.max_workers:
                procid, task = pending.pop()
                process = PerformProcess(procid, self._mk_process_name(task),
                                         task, self.result_queue)
                self.processes[procid] = process
                log.debug('Starting sub-process for %s', task)
                process.start()
            self._process_one_result()

        log.debug('All sub-processes finished.')
        datalog.debug('Sub-process results: %r', self.results)
        return self.collected()

    def collected(self):
        """The results of the finished tasks, in task order."""
        return [r for i, r in enumerate(self.results)
                if i not in self.cancelled]

    def cancel_pending(self, reason=None):
        log.debug('Cancelling pending sub-processes')

        for p in list(self.processes.values()):
            try:
                log.debug('Sending SIGINT to %r', p.name)
                os.kill(p.pid, signal.SIGINT)
            except Exception as ex:
                log.debug('IGNORING exception while sending signal: %r',
                          str(ex))

        while self.processes:
            try:
                self._process_one_result()
            except KeyboardInterrupt:
                log.info('Received Ctrl+C while waiting for sub-processes '
                         'to exit. Interrupting sub-processes...')
                for p in list(self.processes.values()):
                    try:
                        os.kill(p.pid, signal.SIGINT)
                    except Exception as ex:
                        log.debug('IGNORING exception while sending signal: '
                                  '%r', str(ex))
            except Exception as ex:
                log.debug('IGNORING exception while waiting for '
                          'sub-processes: %r', str(ex))

def get_strategy(strategy):
    """
    Resolve a strategy given as a protocol key, a configuration mapping, or
    a :class:`Strategy` instance.
    """
    if isinstance(strategy, Strategy):
        return strategy
    cfg = dict(protocol=strategy) if isinstance(strategy, str) \
        else dict(strategy)
    protocol = cfg.pop('protocol', None)
    if not Strategy.has_backend(protocol):
        raise ConfigurationError('Unknown strategy {0!r} (available: {1})'
                                 .format(protocol, ', '.join(STRATEGIES)))
    return Strategy.instantiate(protocol, **cfg)

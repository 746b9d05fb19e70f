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

""" Flat settings files of the command line.

One setting per line, ``key = value`` or ``key: value``; keys are long
flags with or without the leading dashes, values are YAML scalars::

    # game defaults
    rounds = 20
    b-strategy: random
"""

__all__ = ['load_flat_config', 'normalize_key']

import io
import logging
from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError
from rubin.exceptions import ConfigurationError

log = logging.getLogger('rubin.cli.settings')

def normalize_key(key):
    """Long flag spelling: ``--b-strategy`` and ``b_strategy`` are equal."""
    return key.strip().lstrip('-').replace('-', '_')

def _decode_scalar(text):
    if not text:
        return ''
    try:
        value = YAML(typ='safe', pure=True).load(io.StringIO(text))
    except YAMLError:
        return text
    return value if isinstance(value, (int, float, bool, str)) else text

def load_flat_config(path):
    """
    Load a flat settings file.

    :param str path: Path of the file.
    :return: Mapping of normalized keys to decoded values.
    :rtype: dict
    """
    try:
        with open(path) as f:
            lines = f.read().splitlines()
    except OSError as ex:
        raise ConfigurationError(
            'Cannot read configuration file {0!r}: {1}'.format(path, ex))

    settings = dict()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        positions = [p for p in (line.find('='), line.find(':')) if p > 0]
        if not positions:
            raise ConfigurationError(
                '{0}:{1}: expected "key = value", got {2!r}'.format(
                    path, lineno, raw))
        split = min(positions)
        key = normalize_key(line[:split])
        if not key:
            raise ConfigurationError(
                '{0}:{1}: empty key'.format(path, lineno))
        settings[key] = _decode_scalar(line[split + 1:].strip())
    log.debug('Flat configuration %r: %r', path, settings)
    return settings

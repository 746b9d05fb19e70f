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

""" Game configuration.
"""

__all__ = ['GameConfig', 'B_STRATEGIES']

from rubin.exceptions import ConfigurationError

B_STRATEGIES = ('passive', 'conjugacy', 'random')

class GameConfig(object):
    """
    Parameters of a game run.

    :param int seed: Seed of the random player-B strategy.
    :param int rounds: Number of rounds after the identity declaration.
    :param int identity_name: The name fixed as the identity (0 or 1).
    :param str b_strategy: Player-B strategy key.
    :param int derivation_bound: Longest relator used by the forcing
        closure.
    :param int random_retries: Attempts of the random strategy before it
        plays the empty system.
    :param int closure_cap: Maximum number of relator normal forms kept by
        the forcing closure.
    """
    DEFAULTS = dict(seed=0, rounds=10, identity_name=0,
                    b_strategy='passive', derivation_bound=16,
                    random_retries=8, closure_cap=20000)

    def __init__(self, **kwargs):
        unknown = set(kwargs) - set(self.DEFAULTS)
        if unknown:
            raise ConfigurationError('Unknown game setting(s): {0}'.format(
                ', '.join(sorted(unknown))))
        for key, default in self.DEFAULTS.items():
            setattr(self, key, kwargs.get(key, default))
        self.validate()

    @staticmethod
    def from_dict(data):
        """
        Build from a mapping; keys may use ``-`` or ``_``, and ``None``
        values fall back to the defaults.
        """
        data = dict((k.replace('-', '_'), v) for k, v in (data or {}).items()
                    if v is not None)
        return GameConfig(**data)

    def _int(self, key, low, high=None):
        value = getattr(self, key)
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigurationError(
                '{0} must be an integer (got {1!r})'.format(key, value))
        if value < low or (high is not None and value > high):
            raise ConfigurationError('{0}={1} is out of range'.format(key, value))

    def validate(self):
        self._int('seed', 0)
        self._int('rounds', 0)
        self._int('identity_name', 0, 1)
        self._int('derivation_bound', 4)
        self._int('random_retries', 0)
        self._int('closure_cap', 1)
        if self.b_strategy not in B_STRATEGIES:
            raise ConfigurationError(
                'b_strategy must be one of {0} (got {1!r})'.format(
                    ', '.join(B_STRATEGIES), self.b_strategy))
        return self

    def to_dict(self):
        return dict((key, getattr(self, key)) for key in sorted(self.DEFAULTS))

    def replace(self, **kwargs):
        data = self.to_dict()
        data.update(kwargs)
        return GameConfig(**data)

    def __eq__(self, other):
        return isinstance(other, GameConfig) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'GameConfig({0})'.format(', '.join(
            '{0}={1!r}'.format(k, v) for k, v in self.to_dict().items()))

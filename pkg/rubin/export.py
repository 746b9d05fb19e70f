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

""" Rendering of artifacts: DOT Hasse diagrams and stable JSON.
"""

__all__ = ['poset_to_dot', 'to_json', 'from_json', 'write_text']

import json
import logging
import jinja2
from rubin.exceptions import ConfigurationError
from rubin.permgroup import format_perm

log = logging.getLogger('rubin.export')

DOT_TEMPLATE = """\
digraph rubin_poset {
  rankdir=BT;
  node [shape=box];
{% for node in nodes %}
  n{{ node.id }} [label="|C|={{ node.size }}\\n{{ node.label }}"];
{% endfor %}
{% for lower, upper in edges %}
  n{{ lower }} -> n{{ upper }};
{% endfor %}
}
"""

_environment = jinja2.Environment(trim_blocks=True, lstrip_blocks=True,
                                  keep_trailing_newline=True)

def _format_label(poset, label):
    if not label:
        return 'G'
    return ','.join('f={0}'.format(format_perm(poset.group.elements[f]))
                    for f in label)

def poset_to_dot(poset):
    """
    Render the Hasse diagram of a :class:`~rubin.disjointness.RubinPoset`.
    Each node shows the order of the subgroup and one witnessing
    ``f``-tuple.
    """
    template = _environment.from_string(DOT_TEMPLATE)
    nodes = [dict(id=i, size=len(n), label=_format_label(poset, l))
             for i, (n, l) in enumerate(zip(poset.nodes, poset.labels))]
    return template.render(nodes=nodes, edges=poset.hasse)

def to_json(obj):
    """
    Serialize an artifact with stable key order. ``obj`` is either plain
    data or exposes ``to_dict()``.
    """
    if hasattr(obj, 'to_dict'):
        obj = obj.to_dict()
    return json.dumps(obj, sort_keys=True, indent=2) + '\n'

def from_json(text, cls=None):
    """
    Parse a JSON artifact; with ``cls``, rebuild it with ``cls.from_dict``.
    """
    try:
        data = json.loads(text)
    except ValueError as ex:
        raise ConfigurationError('Invalid JSON artifact: {0}'.format(ex))
    return cls.from_dict(data) if cls is not None else data

def write_text(path, text):
    log.debug('Writing %r', path)
    with open(path, 'w') as f:
        f.write(text)

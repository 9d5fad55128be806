# Copyright 2024 Confluent Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reading and writing complexes, encodings and encoding schedules as YAML documents.

A complex document looks like::

    processes: 2
    vertices:
      - {id: a, color: 0, label: 0}
      - {id: b, color: 1, label: 1}
    facets:
      - [a, b]

Nodes are walked with ``yaml.compose`` so that every complaint can name the offending line.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, TextIO, Union

import yaml

from bitsnap.complex.chromatic_complex import ChromaticComplex
from bitsnap.complex.simplex import Vertex
from bitsnap.errors import ComplexFileError, PartialEncodingError

logger = logging.getLogger(__name__)

COMPLEX_FIELDS = ("processes", "vertices", "facets")


def _line(node) -> int:
    return node.start_mark.line + 1


def _compose(text: str, source: str):
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.MarkedYAMLError as e:
        line = e.problem_mark.line + 1 if e.problem_mark is not None else None
        raise ComplexFileError("%s is not valid YAML: %s" % (source, e.problem), line=line)
    if root is None:
        raise ComplexFileError("%s is empty" % source, line=1)
    return root


def _scalar(node, kind, what: str):
    if not isinstance(node, yaml.ScalarNode):
        raise ComplexFileError("%s must be a scalar" % what, line=_line(node))
    if kind is int:
        try:
            return int(node.value)
        except (TypeError, ValueError):
            raise ComplexFileError("%s must be an integer, got %r" % (what, node.value), line=_line(node))
    return node.value


def _mapping(node, what: str) -> Dict[str, object]:
    if not isinstance(node, yaml.MappingNode):
        raise ComplexFileError("%s must be a mapping" % what, line=_line(node))
    return {key.value: value for key, value in node.value}


def _sequence(node, what: str) -> List[object]:
    if not isinstance(node, yaml.SequenceNode):
        raise ComplexFileError("%s must be a list" % what, line=_line(node))
    return list(node.value)


def parse_complex(text: str, source: str = "<string>") -> ChromaticComplex:
    root = _mapping(_compose(text, source), "complex document")
    for name in COMPLEX_FIELDS:
        if name not in root:
            raise ComplexFileError("missing field '%s' in %s" % (name, source), line=1)

    processes = _scalar(root["processes"], int, "processes")
    if processes < 0:
        raise ComplexFileError("processes must be non-negative", line=_line(root["processes"]))

    vertices = {}
    for node in _sequence(root["vertices"], "vertices"):
        entry = _mapping(node, "vertex entry")
        if "id" not in entry or "color" not in entry:
            raise ComplexFileError("vertex entry needs 'id' and 'color'", line=_line(node))
        vertex_id = _scalar(entry["id"], str, "vertex id")
        color = _scalar(entry["color"], int, "vertex color")
        if not 0 <= color < processes:
            raise ComplexFileError("color %d of vertex %s outside 0..%d" % (color, vertex_id, processes - 1),
                                   line=_line(entry["color"]))
        if vertex_id in vertices:
            raise ComplexFileError("duplicate vertex id %s" % vertex_id, line=_line(node))
        label = yaml.safe_load(yaml.serialize(entry["label"])) if "label" in entry else None
        vertices[vertex_id] = Vertex(vertex_id, color, label=label)

    facets = []
    used = set()
    for node in _sequence(root["facets"], "facets"):
        facet = []
        for item in _sequence(node, "facet"):
            vertex_id = _scalar(item, str, "facet member")
            if vertex_id not in vertices:
                raise ComplexFileError("unknown vertex id %s" % vertex_id, line=_line(item))
            facet.append(vertices[vertex_id])
        colors = [v.color for v in facet]
        if len(set(colors)) != len(colors) or len(set(facet)) != len(facet):
            raise ComplexFileError("facet %s is not chromatic" % [v.id for v in facet], line=_line(node))
        used.update(facet)
        facets.append(facet)

    unused = sorted(set(vertices) - set(v.id for v in used))
    if unused:
        raise ComplexFileError("vertices %s appear in no facet" % ", ".join(unused), line=_line(root["vertices"]))

    logger.debug("Parsed %s: %d vertices, %d facets", source, len(vertices), len(facets))
    return ChromaticComplex(facets, processes=processes, name=source)


def load_complex(path: str) -> ChromaticComplex:
    with open(path) as fp:
        return parse_complex(fp.read(), source=path)


def dump_complex(c: ChromaticComplex, stream: Optional[TextIO] = None) -> Union[str, None]:
    document = c.to_json()
    for entry in document["vertices"]:
        if entry["label"] is None:
            del entry["label"]
        elif not isinstance(entry["label"], (int, str, float, bool)):
            entry["label"] = str(entry["label"])
    return yaml.safe_dump(document, stream, default_flow_style=None, sort_keys=False)


def save_complex(c: ChromaticComplex, path: str):
    with open(path, "w") as fp:
        dump_complex(c, fp)


def _codes_from_mapping(node, vertices_by_key: Dict[str, object], what: str) -> Dict[object, int]:
    _mapping(node, what)
    codes = {}
    for key_node, value_node in node.value:
        key = _scalar(key_node, str, "vertex id")
        if key not in vertices_by_key:
            raise ComplexFileError("unknown vertex id %s in %s" % (key, what), line=_line(key_node))
        code = _scalar(value_node, int, "code")
        if code < 1:
            raise ComplexFileError("codes must be positive, got %d" % code, line=_line(value_node))
        codes[vertices_by_key[key]] = code
    missing = set(vertices_by_key) - set(v.key for v in codes)
    if missing:
        raise PartialEncodingError("%s has no code for %s" % (what, ", ".join(sorted(missing))))
    return codes


def parse_encoding(text: str, c: ChromaticComplex, source: str = "<string>") -> Dict[object, int]:
    """An encoding document maps vertex ids of ``c`` to positive integer codes."""
    return _codes_from_mapping(_compose(text, source), c.vertex_by_key(), source)


def parse_schedule(text: str, complexes: List[ChromaticComplex], source: str = "<string>") -> List[Dict]:
    """A schedule document has a ``rounds`` list; entry r holds ``codes`` over ``complexes[r]``."""
    root = _mapping(_compose(text, source), "schedule document")
    if "rounds" not in root:
        raise ComplexFileError("missing field 'rounds' in %s" % source, line=1)
    rounds = _sequence(root["rounds"], "rounds")
    if len(rounds) < len(complexes):
        raise ComplexFileError("%s has %d rounds, %d needed" % (source, len(rounds), len(complexes)),
                               line=_line(root["rounds"]))
    result = []
    for index, (node, c) in enumerate(zip(rounds, complexes)):
        entry = _mapping(node, "round entry")
        if "codes" not in entry:
            raise ComplexFileError("round entry needs 'codes'", line=_line(node))
        result.append(_codes_from_mapping(entry["codes"], c.vertex_by_key(), "round %d" % index))
    return result


def dump_codes(codes: Dict[object, int]) -> Dict[str, int]:
    ordered = sorted(codes, key=lambda v: (v.color, v.key))
    return {v.key: codes[v] for v in ordered}

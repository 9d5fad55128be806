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

from __future__ import annotations

import logging
from math import ceil, log2
from typing import Dict, Iterable, Mapping, Optional, Tuple

from bitsnap.complex.chromatic_complex import ChromaticComplex
from bitsnap.complex.simplex import vertex_sort_key
from bitsnap.distinguishability.graphs import indist_graph
from bitsnap.errors import InternalInconsistencyError, PartialEncodingError

logger = logging.getLogger(__name__)


def bits_for(image_size: int) -> int:
    """Wire bits for ``image_size`` codes plus the unwritten symbol."""
    return ceil(log2(image_size + 1))


class Encoding(object):
    """Map from vertices to positive integer codes."""

    def __init__(self, codes: Mapping[object, int]):
        for v, code in codes.items():
            if code < 1:
                raise ValueError("code of %s must be positive, got %r" % (v.key, code))
        self.codes: Dict[object, int] = dict(codes)

    @classmethod
    def constant(cls, vertices: Iterable, code: int = 1) -> Encoding:
        return cls({v: code for v in vertices})

    @classmethod
    def injective(cls, vertices: Iterable) -> Encoding:
        return cls({v: i + 1 for i, v in enumerate(sorted(vertices, key=vertex_sort_key))})

    @classmethod
    def merged(cls, parts: Iterable[Encoding]) -> Encoding:
        codes = {}
        for part in parts:
            codes.update(part.codes)
        return cls(codes)

    def __getitem__(self, vertex) -> int:
        return self.codes[vertex]

    def __call__(self, vertex) -> int:
        return self.codes[vertex]

    def __contains__(self, vertex) -> bool:
        return vertex in self.codes

    def __len__(self):
        return len(self.codes)

    @property
    def image(self) -> frozenset:
        return frozenset(self.codes.values())

    @property
    def image_size(self) -> int:
        return len(self.image)

    @property
    def bits(self) -> int:
        return bits_for(self.image_size)

    def restricted_to(self, vertices: Iterable) -> Encoding:
        return Encoding({v: self.codes[v] for v in vertices})

    def check_total(self, c: ChromaticComplex):
        missing = [v for v in c.ordered_vertices() if v not in self.codes]
        if missing:
            raise PartialEncodingError("no code for %s" % ", ".join(v.key for v in missing[:5]))

    def to_json(self):
        return {v.key: self.codes[v] for v in sorted(self.codes, key=vertex_sort_key)}

    def __repr__(self):
        return "Encoding(%d vertices, image %d)" % (len(self.codes), self.image_size)


class DistinguishabilityVerdict(object):
    """Truthy when every vertex can tell its same-colored link vertices apart.

    :param witness: on failure, (s, t, w) with t and w same-colored neighbors of s sharing a code
    """

    def __init__(self, distinguishable: bool, witness: Optional[Tuple] = None):
        self.distinguishable = distinguishable
        self.witness = witness

    def __bool__(self):
        return self.distinguishable

    def describe(self) -> str:
        if self.distinguishable:
            return "distinguishable"
        s, t, w = self.witness
        return "not distinguishable: %s and %s share a code in the link of %s" % (t.key, w.key, s.key)

    def to_json(self):
        return {"distinguishable": self.distinguishable,
                "witness": [v.key for v in self.witness] if self.witness else None}


def is_distinguishable(c: ChromaticComplex, encoding: Encoding) -> DistinguishabilityVerdict:
    encoding.check_total(c)
    for s in c.ordered_vertices():
        seen = {}
        for w in sorted(c.neighbors(s), key=vertex_sort_key):
            slot = (w.color, encoding[w])
            if slot in seen:
                return DistinguishabilityVerdict(False, (s, seen[slot], w))
            seen[slot] = w
    return DistinguishabilityVerdict(True)


def is_proper_coloring(graph, encoding: Encoding) -> bool:
    return all(encoding[u] != encoding[w] for u, w in graph.edges())


def coloring_equivalence_check(c: ChromaticComplex, encoding: Encoding) -> bool:
    """Distinguishability read two ways: directly on links, and as proper colorings of every G_p."""
    verdict = is_distinguishable(c, encoding)
    proper = all(is_proper_coloring(indist_graph(c, color), encoding) for color in sorted(c.colors))
    if bool(verdict) != proper:
        raise InternalInconsistencyError("distinguishability (%s) disagrees with proper coloring (%s) on %r"
                                         % (bool(verdict), proper, c))
    return proper

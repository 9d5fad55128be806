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

"""Distinguishability of an encoding against the shape of the bounded protocol complex it produces.

One bounded round over an input complex reproduces Ch of that complex up to isomorphism exactly when the
encoding is distinguishable on it; the check computes both sides independently and insists they agree.
"""

from __future__ import annotations

import logging
from typing import Optional

from bitsnap.command_line.defaults import ConsoleDefaults
from bitsnap.complex.chromatic_complex import ChromaticComplex
from bitsnap.complex.simplex import vertex_sort_key
from bitsnap.distinguishability.encoding import Encoding, coloring_equivalence_check, is_distinguishable
from bitsnap.errors import InternalInconsistencyError
from bitsnap.protocol.isomorphism import chromatic_iso
from bitsnap.protocol.simulator import biis_round
from bitsnap.subdivision.chromatic import chromatic_subdivide
from bitsnap.template import TemplateRenderer

logger = logging.getLogger(__name__)


def max_degree_vertex(c: ChromaticComplex):
    """(vertex, degree) of largest degree, ties to the canonically first vertex; (None, 0) when empty."""
    best, best_degree = None, 0
    for v in sorted(c.vertices, key=vertex_sort_key):
        degree = len(c.neighbors(v))
        if best is None or degree > best_degree:
            best, best_degree = v, degree
    return best, best_degree


class EquivalenceReport(TemplateRenderer):
    """Both sides of the encoding/protocol equivalence for one (complex, encoding) pair."""

    def __init__(self, verdict, proper_coloring: bool, mapping: Optional[dict], protocol_complex, subdivided):
        self.verdict = verdict
        self.proper_coloring = proper_coloring
        self.mapping = mapping
        self.protocol_complex = protocol_complex
        self.subdivided = subdivided
        self.degree_vertex, self.degree = max_degree_vertex(protocol_complex)
        _, self.expected_degree = max_degree_vertex(subdivided)

    @property
    def distinguishable(self) -> bool:
        return bool(self.verdict)

    @property
    def isomorphic(self) -> bool:
        return self.mapping is not None

    @property
    def faults(self):
        return self.protocol_complex.faults

    def to_text(self) -> str:
        return self.render("equivalence_report.txt")

    def to_json(self):
        return {
            "distinguishable": self.distinguishable,
            "witness": self.verdict.to_json()["witness"],
            "proper_coloring": self.proper_coloring,
            "isomorphic": self.isomorphic,
            "protocol_f_vector": self.protocol_complex.f_vector().to_json(),
            "subdivision_f_vector": self.subdivided.f_vector().to_json(),
            "max_degree_vertex": self.degree_vertex.key if self.degree_vertex is not None else None,
            "max_degree": self.degree,
            "subdivision_max_degree": self.expected_degree,
        }


def encoding_equivalence_check(c: ChromaticComplex, encoding: Encoding,
                               max_facets: Optional[int] = ConsoleDefaults.MAX_FACETS) -> EquivalenceReport:
    verdict = is_distinguishable(c, encoding)
    proper = coloring_equivalence_check(c, encoding)
    protocol_complex = biis_round(c, encoding, strict=False, max_facets=max_facets)
    subdivided = chromatic_subdivide(c, max_facets=max_facets)
    report = EquivalenceReport(verdict, proper, chromatic_iso(protocol_complex, subdivided), protocol_complex,
                               subdivided)
    if report.distinguishable != report.isomorphic:
        raise InternalInconsistencyError("encoding is %sdistinguishable but the bounded round is %sisomorphic to Ch"
                                         % ("" if report.distinguishable else "not ",
                                            "" if report.isomorphic else "not "))
    logger.debug("Equivalence check on %r: distinguishable=%s, max degree %d against %d", c,
                 report.distinguishable, report.degree, report.expected_degree)
    return report

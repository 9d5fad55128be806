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
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional

from bitsnap.command_line.defaults import ConsoleDefaults
from bitsnap.complex.chromatic_complex import ChromaticComplex
from bitsnap.distinguishability.bounds import clique_lower_bound, degree_upper_bound
from bitsnap.distinguishability.coloring import exact_chromatic, greedy_coloring
from bitsnap.distinguishability.encoding import Encoding, is_distinguishable
from bitsnap.distinguishability.graphs import indist_graphs
from bitsnap.errors import InternalInconsistencyError, ResourceLimitError
from bitsnap.subdivision.chromatic import chromatic_subdivide

logger = logging.getLogger(__name__)

BOUNDS_HEADER = ("round", "vertices", "clique_lb", "delta_plus_1", "image", "bits")


@dataclass(frozen=True)
class RoundBounds(object):
    round: int
    vertices: int
    clique_lb: int
    delta_plus_1: int
    image: int
    bits: int

    def as_row(self) -> List[str]:
        return [str(getattr(self, name)) for name in BOUNDS_HEADER]

    def to_json(self):
        return {name: getattr(self, name) for name in BOUNDS_HEADER}


@dataclass
class EncodingSchedule(object):
    """One encoding per round; ``complexes[r]`` is Ch^r of the input and carries ``encodings[r]``.

    ``truncated`` is set when the resource cap stopped synthesis before the requested round count.
    """
    complexes: List[ChromaticComplex] = field(default_factory=list)
    encodings: List[Encoding] = field(default_factory=list)
    rows: List[RoundBounds] = field(default_factory=list)
    truncated: bool = False

    def __len__(self):
        return len(self.encodings)

    @property
    def max_bits(self) -> int:
        return max((row.bits for row in self.rows), default=0)

    def to_json(self):
        return {"rounds": [{"bounds": row.to_json(), "codes": encoding.to_json()}
                           for row, encoding in zip(self.rows, self.encodings)],
                "truncated": self.truncated}


def _color_graph(graph, order_policy: str, exact: bool, node_limit: int) -> Encoding:
    if exact:
        result = exact_chromatic(graph, node_limit=node_limit)
        if not result.skipped:
            return result.encoding
        logger.debug("Falling back to greedy coloring for color %s: %s", graph.color, result.skipped_reason)
    return greedy_coloring(graph, order_policy)


def distinguishing_encoding(c: ChromaticComplex, order_policy: str = "largest_first", exact: bool = False,
                            node_limit: int = ConsoleDefaults.EXACT_NODE_LIMIT, threads: int = 1) -> Encoding:
    """Color every indistinguishability graph of ``c`` and merge the colorings into one encoding."""
    graphs = list(indist_graphs(c).values())
    if threads > 1 and len(graphs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda g: _color_graph(g, order_policy, exact, node_limit), graphs))
    else:
        parts = [_color_graph(g, order_policy, exact, node_limit) for g in graphs]
    return Encoding.merged(parts)


def round_bounds(index: int, c: ChromaticComplex, encoding: Encoding) -> RoundBounds:
    lower = clique_lower_bound(c)
    upper = degree_upper_bound(c) + 1
    row = RoundBounds(index, len(c.vertices), lower, upper, encoding.image_size, encoding.bits)
    if not lower <= row.image <= upper:
        raise InternalInconsistencyError("round %d uses %d codes, outside [%d, %d]" % (index, row.image, lower, upper))
    return row


def synth_encoding_schedule(c: ChromaticComplex, rounds: int, max_facets: Optional[int] = ConsoleDefaults.MAX_FACETS,
                            order_policy: str = "largest_first", exact: bool = False,
                            node_limit: int = ConsoleDefaults.EXACT_NODE_LIMIT, threads: int = 1
                            ) -> EncodingSchedule:
    """Encodings for rounds 0..r-1, each making Ch^round(c) distinguishable."""
    if rounds < 1:
        raise ValueError("rounds must be at least 1, got %d" % rounds)
    schedule = EncodingSchedule()
    if c.is_empty():
        return schedule
    current = c
    for index in range(rounds):
        if index > 0:
            try:
                current = chromatic_subdivide(current, max_facets=max_facets, threads=threads)
            except ResourceLimitError as e:
                logger.warning("Encoding schedule truncated after %d rounds: %s", index, e)
                schedule.truncated = True
                break
        encoding = distinguishing_encoding(current, order_policy, exact, node_limit, threads)
        verdict = is_distinguishable(current, encoding)
        if not verdict:
            raise InternalInconsistencyError("synthesized encoding for round %d is %s" % (index, verdict.describe()))
        row = round_bounds(index, current, encoding)
        logger.debug("Round %d: %d vertices, %d codes, %d bits", index, row.vertices, row.image, row.bits)
        schedule.complexes.append(current)
        schedule.encodings.append(encoding)
        schedule.rows.append(row)
    return schedule

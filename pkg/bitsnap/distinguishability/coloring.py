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

"""Vertex colorings of indistinguishability graphs; a color is a code written to shared memory."""

from __future__ import annotations

import logging
import time
from typing import Dict, List, Optional

import networkx as nx

from bitsnap.command_line.defaults import ConsoleDefaults
from bitsnap.complex.simplex import vertex_sort_key
from bitsnap.distinguishability.encoding import Encoding
from bitsnap.errors import TimeoutError

logger = logging.getLogger(__name__)

# order policy -> networkx greedy_color strategy
ORDER_POLICIES = {
    "largest_first": "largest_first",
    "canonical": lambda graph, colors: sorted(graph, key=vertex_sort_key),
    "dsatur": "saturation_largest_first",
}


def _canonical_copy(graph: nx.Graph) -> nx.Graph:
    ordered = nx.Graph()
    ordered.add_nodes_from(sorted(graph.nodes, key=vertex_sort_key))
    ordered.add_edges_from(graph.edges)
    return ordered


def greedy_coloring(graph: nx.Graph, order_policy: str = "largest_first") -> Encoding:
    """Greedy coloring with codes starting at 1; never more than max degree + 1 codes.

    ``largest_first`` visits nodes by descending degree, ties in canonical vertex order.
    """
    if order_policy not in ORDER_POLICIES:
        raise ValueError("unknown order policy %s, expected one of %s" % (order_policy, sorted(ORDER_POLICIES)))
    colors = nx.greedy_color(_canonical_copy(graph), strategy=ORDER_POLICIES[order_policy])
    return Encoding({v: color + 1 for v, color in colors.items()})


def max_clique_size(graph: nx.Graph) -> int:
    return max((len(clique) for clique in nx.find_cliques(graph)), default=0)


class ExactColoringResult(object):
    """Outcome of the exact search. ``encoding`` is None when the search was skipped."""

    def __init__(self, encoding: Optional[Encoding], skipped_reason: Optional[str] = None):
        self.encoding = encoding
        self.skipped_reason = skipped_reason

    @property
    def skipped(self) -> bool:
        return self.encoding is None

    @property
    def chromatic_number(self) -> Optional[int]:
        return None if self.encoding is None else self.encoding.image_size

    def __repr__(self):
        if self.skipped:
            return "ExactColoringResult(exact search skipped: %s)" % self.skipped_reason
        return "ExactColoringResult(chromatic_number=%d)" % self.chromatic_number


def _saturation_order(graph: nx.Graph) -> List:
    """Order nodes so that each next node has the most already-ordered neighbors."""
    remaining = sorted(graph.nodes, key=vertex_sort_key)
    placed = set()
    order = []
    while remaining:
        best = max(remaining, key=lambda v: (len(placed.intersection(graph[v])), graph.degree(v)))
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    return order


def _find_k_coloring(graph: nx.Graph, k: int, order: List, deadline: Optional[float]) -> Optional[Dict]:
    coloring = {}

    def extend(index: int, used: int) -> bool:
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError("exact coloring exceeded its deadline")
        if index == len(order):
            return True
        node = order[index]
        forbidden = set(coloring[w] for w in graph[node] if w in coloring)
        for color in range(used):
            if color not in forbidden:
                coloring[node] = color
                if extend(index + 1, used):
                    return True
        if used < k:
            coloring[node] = used
            if extend(index + 1, used + 1):
                return True
        coloring.pop(node, None)
        return False

    return dict(coloring) if extend(0, 0) else None


def exact_chromatic(graph: nx.Graph, node_limit: int = ConsoleDefaults.EXACT_NODE_LIMIT,
                    deadline_sec: Optional[float] = None) -> ExactColoringResult:
    """Minimum coloring by trying k colors for k from the clique bound up to the greedy count."""
    if graph.number_of_nodes() > node_limit:
        return ExactColoringResult(None, "%d nodes exceed the limit of %d" % (graph.number_of_nodes(), node_limit))
    greedy = greedy_coloring(graph)
    if graph.number_of_nodes() == 0:
        return ExactColoringResult(greedy)
    lower = max_clique_size(graph)
    deadline = time.monotonic() + deadline_sec if deadline_sec is not None else None
    order = _saturation_order(graph)
    try:
        for k in range(lower, greedy.image_size):
            found = _find_k_coloring(graph, k, order, deadline)
            if found is not None:
                logger.debug("Exact coloring uses %d codes, greedy used %d", k, greedy.image_size)
                return ExactColoringResult(Encoding({v: color + 1 for v, color in found.items()}))
    except TimeoutError as e:
        return ExactColoringResult(None, str(e))
    return ExactColoringResult(greedy)

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
from collections import Counter
from typing import Dict, Optional

import networkx as nx

from bitsnap.complex.chromatic_complex import ChromaticComplex
from bitsnap.complex.simplex import vertex_sort_key

logger = logging.getLogger(__name__)

# refinement passes over the incidence graph before the matcher runs
REFINEMENT_ROUNDS = 3


def _incidence_graph(c: ChromaticComplex) -> nx.Graph:
    """Bipartite vertex-facet graph whose node labels are refined color classes.

    Vertex nodes start from their color and facet nodes from a common label; Weisfeiler-Lehman hashing then
    folds in the neighborhood, so only nodes that could correspond under a color-preserving map share a label.
    """
    graph = nx.Graph()
    for v in c.ordered_vertices():
        graph.add_node(("v", v), label="v%d" % v.color)
    for i, facet in enumerate(c.facets):
        graph.add_node(("f", i), label="f")
        graph.add_edges_from((("v", v), ("f", i)) for v in facet.ordered())
    refined = nx.weisfeiler_lehman_subgraph_hashes(graph, node_attr="label", iterations=REFINEMENT_ROUNDS)
    for node, hashes in refined.items():
        if hashes:
            graph.nodes[node]["label"] = hashes[-1]
    return graph


def _signature(c: ChromaticComplex):
    return c.f_vector(), Counter(v.color for v in c.vertices), Counter(len(f) for f in c.facets)


def chromatic_iso(a: ChromaticComplex, b: ChromaticComplex) -> Optional[Dict]:
    """A color-preserving vertex bijection from ``a`` to ``b`` carrying facets onto facets, or None."""
    if a == b:
        return {v: v for v in sorted(a.vertices, key=vertex_sort_key)}
    if _signature(a) != _signature(b):
        logger.debug("%r and %r differ in f-vector or color profile", a, b)
        return None
    first, second = _incidence_graph(a), _incidence_graph(b)
    if Counter(nx.get_node_attributes(first, "label").values()) != \
            Counter(nx.get_node_attributes(second, "label").values()):
        logger.debug("%r and %r differ after label refinement", a, b)
        return None
    mapping = nx.vf2pp_isomorphism(first, second, node_label="label")
    if mapping is None:
        logger.debug("No color-preserving isomorphism between %r and %r", a, b)
        return None
    pairs = {v: w for (kind, v), (_, w) in mapping.items() if kind == "v"}
    return {v: pairs[v] for v in a.ordered_vertices()}


def is_isomorphic(a: ChromaticComplex, b: ChromaticComplex) -> bool:
    return chromatic_iso(a, b) is not None

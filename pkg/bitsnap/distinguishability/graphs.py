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

from itertools import combinations

import networkx as nx

from bitsnap.complex.chromatic_complex import ChromaticComplex
from bitsnap.complex.simplex import Vertex, vertex_sort_key


class IndistGraph(nx.Graph):
    """Graph on the ``color`` vertices of a complex; two are adjacent when some vertex has both in its link.

    Nodes are inserted in canonical vertex order so that order-sensitive networkx routines are deterministic.
    """

    def __init__(self, incoming_graph_data=None, color=None, **attr):
        super(IndistGraph, self).__init__(incoming_graph_data, **attr)
        if color is not None:
            self.graph["color"] = color

    @property
    def color(self):
        return self.graph.get("color")

    def max_degree(self) -> int:
        return max((d for _, d in self.degree()), default=0)

    def ordered_nodes(self) -> list:
        return sorted(self.nodes, key=vertex_sort_key)

    def to_json(self):
        edges = sorted((sorted((u.key, w.key)) for u, w in self.edges()))
        return {"color": self.color, "nodes": [v.key for v in self.ordered_nodes()], "edges": edges}


def indist_graph(c: ChromaticComplex, color: int) -> IndistGraph:
    graph = IndistGraph(color=color)
    graph.add_nodes_from(c.vertices_of_color(color))
    for t in c.ordered_vertices():
        # the link of a vertex has the same vertices as its neighborhood
        seen = sorted((w for w in c.neighbors(t) if w.color == color), key=vertex_sort_key)
        graph.add_edges_from(combinations(seen, 2))
    return graph


def indist_graphs(c: ChromaticComplex) -> dict:
    return {color: indist_graph(c, color) for color in sorted(c.colors)}


def gadget_from_graph(h: nx.Graph) -> ChromaticComplex:
    """Two-process complex whose color-0 indistinguishability graph is ``h``.

    Every node of ``h`` becomes a color-0 vertex; every edge (i, j) becomes a color-1 vertex joined to i and j.
    """
    nodes = {node: Vertex("h%s" % (node,), 0, label=node) for node in h.nodes}
    facets = []
    for i, j in h.edges:
        if i == j:
            raise ValueError("gadget_from_graph needs a graph without self-loops")
        middle = Vertex("e%s-%s" % (i, j), 1, label=(i, j))
        facets.append([nodes[i], middle])
        facets.append([middle, nodes[j]])
    facets.extend([v] for node, v in nodes.items() if h.degree(node) == 0)
    return ChromaticComplex(facets, processes=2, name="gadget")

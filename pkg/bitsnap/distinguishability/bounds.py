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

"""Bounds on the size of a distinguishing encoding, read off the complex itself."""

from __future__ import annotations

import logging

from bitsnap.complex.chromatic_complex import ChromaticComplex
from bitsnap.complex.constructions import link_of_star, open_star, restrict
from bitsnap.distinguishability.graphs import indist_graphs
from bitsnap.errors import InternalInconsistencyError

logger = logging.getLogger(__name__)


def clique_lower_bound(c: ChromaticComplex) -> int:
    """Largest number of same-colored neighbors of a single vertex.

    Those neighbors are pairwise adjacent in their indistinguishability graph, so any distinguishing
    encoding needs at least this many codes.
    """
    best = 0
    for v in c.ordered_vertices():
        star = open_star(c, v)
        for color in c.colors - {v.color}:
            best = max(best, len(restrict(star, color, center=v)))
    return best


def _degree_by_graphs(c: ChromaticComplex) -> int:
    return max((graph.max_degree() for graph in indist_graphs(c).values()), default=0)


def _degree_by_links(c: ChromaticComplex) -> int:
    return max((len(restrict(link_of_star(c, v), v.color)) for v in c.ordered_vertices()), default=0)


def degree_upper_bound(c: ChromaticComplex) -> int:
    """Maximum degree over all indistinguishability graphs.

    Computed on the graphs and again as the number of same-colored vertices in the link of each vertex's
    star; the two must agree.
    """
    by_graphs = _degree_by_graphs(c)
    by_links = _degree_by_links(c)
    if by_graphs != by_links:
        raise InternalInconsistencyError("maximum degree %d of the indistinguishability graphs differs from "
                                         "the link-of-star count %d on %r" % (by_graphs, by_links, c))
    logger.debug("Maximum indistinguishability degree of %r is %d", c, by_graphs)
    return by_graphs

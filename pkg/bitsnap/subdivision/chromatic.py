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

"""The standard chromatic subdivision Ch, its iterates, and carrier bookkeeping."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import List, Optional, Tuple

import networkx as nx

from bitsnap.command_line.defaults import ConsoleDefaults
from bitsnap.complex.chromatic_complex import ChromaticComplex
from bitsnap.complex.simplex import Simplex, vertex_sort_key
from bitsnap.errors import ComplexError, ForeignVertexError, ResourceLimitError
from bitsnap.subdivision.partitions import ordered_bell, ordered_set_partitions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubdivVertex(object):
    """Vertex (color, carrier) of a subdivided complex; equal pairs are the same vertex, which glues facets."""
    color: int
    carrier: Simplex

    def __post_init__(self):
        if not any(v.color == self.color for v in self.carrier):
            raise ComplexError("carrier %r has no vertex of color %d" % (self.carrier, self.color))

    @cached_property
    def key(self) -> str:
        return "(%d, [%s])" % (self.color, ", ".join(self.carrier.keys()))

    @property
    def id(self) -> str:
        return self.key

    @property
    def label(self) -> str:
        return self.key

    def __repr__(self):
        return "SubdivVertex%s" % self.key


@dataclass(frozen=True)
class CarrierChain(object):
    """Carriers of a vertex of Ch^r A, from level r-1 down to the input complex."""
    vertex: SubdivVertex
    levels: Tuple[Simplex, ...]

    @property
    def depth(self) -> int:
        return len(self.levels)

    def to_json(self):
        return {"vertex": self.vertex.key, "levels": [level.keys() for level in self.levels]}


def estimate_facets(c: ChromaticComplex) -> int:
    """Facet count of Ch c, known before building it."""
    return sum(ordered_bell(len(f)) for f in c.facets)


def _check_cap(c: ChromaticComplex, max_facets: Optional[int]):
    if max_facets is None:
        return
    expected = estimate_facets(c)
    if expected > max_facets:
        raise ResourceLimitError("subdividing %r would produce %d facets, above the cap of %d"
                                 % (c, expected, max_facets))


def _subdivide_facet(facet: Simplex) -> List[Simplex]:
    simplices = []
    for partition in ordered_set_partitions(facet.ordered()):
        seen = []
        vertices = []
        for block in partition:
            seen.extend(block)
            carrier = Simplex(seen)
            vertices.extend(SubdivVertex(v.color, carrier) for v in block)
        simplices.append(Simplex(vertices))
    return simplices


def chromatic_subdivide(c: ChromaticComplex, max_facets: Optional[int] = ConsoleDefaults.MAX_FACETS,
                        threads: int = 1) -> ChromaticComplex:
    """Ch c. Each facet is subdivided independently, one facet per ordered partition of its vertices."""
    _check_cap(c, max_facets)
    if threads > 1 and len(c.facets) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            pieces = list(pool.map(_subdivide_facet, c.facets))
    else:
        pieces = [_subdivide_facet(f) for f in c.facets]
    facets = [simplex for piece in pieces for simplex in piece]
    result = ChromaticComplex(facets, processes=c.processes, name="Ch(%s)" % (c.name or "complex"))
    logger.debug("Subdivided %r into %d facets", c, len(result.facets))
    return result


def iterate_subdivide(c: ChromaticComplex, rounds: int, max_facets: Optional[int] = ConsoleDefaults.MAX_FACETS,
                      threads: int = 1) -> ChromaticComplex:
    """Ch^r c; zero rounds returns ``c`` itself."""
    if rounds < 0:
        raise ValueError("rounds must be non-negative, got %d" % rounds)
    for _ in range(rounds):
        c = chromatic_subdivide(c, max_facets=max_facets, threads=threads)
    return c


def is_subdivision_simplex(vertices) -> bool:
    """Pairwise rule: distinct colors, nested carriers, and whoever's color shows in the other's carrier
    has the smaller carrier."""
    for u, w in combinations(vertices, 2):
        if not compatible(u, w):
            return False
    return True


def compatible(u: SubdivVertex, w: SubdivVertex) -> bool:
    if u.color == w.color:
        return False
    if not (u.carrier <= w.carrier or w.carrier <= u.carrier):
        return False
    if u.color in w.carrier.colors and not u.carrier <= w.carrier:
        return False
    if w.color in u.carrier.colors and not w.carrier <= u.carrier:
        return False
    return True


def subdivide_by_pairwise_rule(c: ChromaticComplex) -> ChromaticComplex:
    """Ch c built as the maximal cliques of the pairwise compatibility relation, facet by facet."""
    facets = []
    for facet in c.facets:
        candidates = []
        members = facet.ordered()
        for size in range(1, len(members) + 1):
            for carrier in combinations(members, size):
                carrier = Simplex(carrier)
                candidates.extend(SubdivVertex(v.color, carrier) for v in carrier)
        graph = nx.Graph()
        graph.add_nodes_from(candidates)
        graph.add_edges_from((u, w) for u, w in combinations(candidates, 2) if compatible(u, w))
        facets.extend(Simplex(clique) for clique in nx.find_cliques(graph))
    return ChromaticComplex(facets, processes=c.processes)


def central_simplex(subdivided: ChromaticComplex, parent_facet: Optional[Simplex] = None) -> Simplex:
    """The vertices of a subdivided simplex whose carrier is the whole parent facet."""
    vertices = subdivided.vertices
    for v in vertices:
        if not isinstance(v, SubdivVertex):
            raise ForeignVertexError("%r was not produced by a subdivision" % (v,))
    if parent_facet is None:
        carriers = set(v.carrier for v in vertices)
        tops = [s for s in carriers if not any(s < other for other in carriers)]
        if len(tops) != 1:
            raise ComplexError("%r is not a subdivided simplex" % subdivided)
        parent_facet = tops[0]
    return Simplex(v for v in vertices if v.carrier == parent_facet)


def _check_member(v, c: Optional[ChromaticComplex]):
    if not isinstance(v, SubdivVertex):
        raise ForeignVertexError("%r was not produced by a subdivision" % (v,))
    if c is not None and v not in c.vertices:
        raise ForeignVertexError("%r is not a vertex of %r" % (v, c))


def carrier_of(v: SubdivVertex, c: Optional[ChromaticComplex] = None) -> Simplex:
    _check_member(v, c)
    return v.carrier


def carrier_chain(v: SubdivVertex, c: Optional[ChromaticComplex] = None) -> CarrierChain:
    _check_member(v, c)
    levels = [v.carrier]
    while all(isinstance(w, SubdivVertex) for w in levels[-1]):
        # carriers along a simplex are nested, so their union is the largest one
        levels.append(Simplex(u for w in levels[-1] for u in w.carrier))
    return CarrierChain(v, tuple(levels))


def corner_image(v, rounds: int):
    """The vertex of Ch^r A that the input vertex ``v`` becomes."""
    for _ in range(rounds):
        v = SubdivVertex(v.color, Simplex([v]))
    return v


def subdivision_depth(v) -> int:
    depth = 0
    while isinstance(v, SubdivVertex):
        v = min(v.carrier, key=vertex_sort_key)
        depth += 1
    return depth

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

"""Standard constructions on chromatic complexes: stars, links, boundary, interior, skeleta, joins."""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Optional, Union

from bitsnap.complex.chromatic_complex import ChromaticComplex
from bitsnap.complex.simplex import EMPTY_SIMPLEX, FaceSet, FVector, Simplex
from bitsnap.errors import ComplexError, InvalidSubcomplexError, NonChromaticError


def _as_simplex(simplex) -> Simplex:
    if isinstance(simplex, Simplex):
        return simplex
    if hasattr(simplex, "color"):
        return Simplex([simplex])
    return Simplex(simplex)


def _as_simplices(c: ChromaticComplex, s) -> list:
    """Normalize a vertex, a simplex or a collection of simplices, checking membership in ``c``."""
    if isinstance(s, ChromaticComplex):
        simplices = list(s.facets)
    elif isinstance(s, Simplex) or hasattr(s, "color"):
        simplices = [_as_simplex(s)]
    else:
        simplices = [_as_simplex(x) for x in s]
    for simplex in simplices:
        if simplex not in c:
            raise InvalidSubcomplexError("%r is not a simplex of %r" % (simplex, c))
    return simplices


def faces(c: ChromaticComplex, k: int) -> FaceSet:
    return c.faces(k)


def f_vector(c: ChromaticComplex) -> FVector:
    return c.f_vector()


def star(c: ChromaticComplex, s) -> ChromaticComplex:
    """Closed star: the subcomplex generated by every simplex of ``c`` containing a simplex of ``s``."""
    facets = set()
    for simplex in _as_simplices(c, s):
        facets.update(c.facets_containing(simplex))
    return ChromaticComplex(facets, processes=c.processes)


def open_star(c: ChromaticComplex, s) -> FaceSet:
    """All faces of ``c`` containing ``s``, including ``s``. Not closed under faces."""
    simplex, = _as_simplices(c, [_as_simplex(s)])
    found = set()
    for facet in c.facets_containing(simplex):
        rest = list(facet - simplex)
        for size in range(len(rest) + 1):
            for extra in combinations(rest, size):
                found.add(Simplex(simplex.union(extra)))
    return FaceSet(found)


def link(c: ChromaticComplex, s) -> ChromaticComplex:
    """Simplices of the closed star sharing no vertex with any simplex of ``s``."""
    simplices = _as_simplices(c, s)
    used = frozenset(v for simplex in simplices for v in simplex)
    facets = [facet - used for facet in star(c, simplices).facets]
    return ChromaticComplex(facets, processes=c.processes)


def link_of_star(c: ChromaticComplex, vertex) -> ChromaticComplex:
    """Lk(c, St(c, v)): everything adjacent to the closed star of ``vertex`` but outside it."""
    closed = star(c, vertex)
    return link(c, [Simplex([w]) for w in closed.vertices])


def _proper_face_counts(c: ChromaticComplex) -> Counter:
    counts = Counter()
    for facet in c.facets:
        members = list(facet)
        for size in range(len(members)):
            for subset in combinations(members, size):
                counts[Simplex(subset)] += 1
    return counts


def boundary(c: ChromaticComplex) -> ChromaticComplex:
    """Proper faces lying in exactly one facet, closed under faces; the empty simplex always belongs."""
    counts = _proper_face_counts(c)
    generators = [face for face, count in counts.items() if count == 1 and len(face) > 0]
    return ChromaticComplex(generators, processes=c.processes)


def interior(c: ChromaticComplex) -> FaceSet:
    return c.simplices().difference(boundary(c).simplices())


def skeleton(c: ChromaticComplex, dimension: int) -> ChromaticComplex:
    if dimension < 0:
        raise ComplexError("skeleton dimension must be non-negative, got %d" % dimension)
    generators = list(c.faces(dimension))
    generators.extend(f for f in c.facets if f.dimension < dimension)
    return ChromaticComplex(generators, processes=c.processes)


def join(a: ChromaticComplex, b: ChromaticComplex) -> ChromaticComplex:
    """Faces are the unions of a face of ``a`` with a face of ``b``."""
    if a.vertices & b.vertices:
        raise ComplexError("join requires disjoint vertex sets")
    processes = max(a.processes, b.processes)
    if a.is_empty():
        return ChromaticComplex(b.facets, processes=processes)
    if b.is_empty():
        return ChromaticComplex(a.facets, processes=processes)
    facets = []
    for alpha in a.facets:
        for beta in b.facets:
            union = Simplex(alpha | beta)
            if not union.is_chromatic():
                raise NonChromaticError("join of %r and %r repeats a color" % (alpha, beta))
            facets.append(union)
    return ChromaticComplex(facets, processes=processes)


def restrict(items: Union[ChromaticComplex, FaceSet, Iterable], color: int,
             center: Optional[object] = None) -> Union[FaceSet, frozenset]:
    """Keep only what is colored ``color``.

    Vertex collections (or a complex, meaning its vertex set) keep their ``color`` vertices. A face set keeps the
    faces whose vertices other than ``center`` are all of that color; applied to the open star of ``center`` this
    leaves exactly the edges to its ``color`` neighbors.
    """
    if isinstance(items, ChromaticComplex):
        items = items.vertices
    if not isinstance(items, FaceSet):
        return frozenset(v for v in items if v.color == color)
    kept = []
    for face in items:
        others = [v for v in face if v != center]
        if others and all(v.color == color for v in others):
            kept.append(face)
    return FaceSet(kept)


__all__ = ["faces", "f_vector", "star", "open_star", "link", "link_of_star", "boundary", "interior",
           "skeleton", "join", "restrict", "EMPTY_SIMPLEX"]

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

import threading
from collections import defaultdict
from typing import Dict, FrozenSet, Iterable, List, Optional

from more_itertools import powerset

from bitsnap.complex.simplex import EMPTY_SIMPLEX, FaceSet, FVector, Simplex, Vertex, vertex_sort_key
from bitsnap.errors import NonChromaticError


class ChromaticComplex(object):
    """An immutable chromatic simplicial complex stored as its list of facets.

    Faces are generated on demand and memoized; the memo is guarded by a lock so a complex can be
    shared between threads.

    :param facets: iterable of vertex collections; non-maximal ones are dropped
    :param processes: number of processes n+1; defaults to one more than the largest color
    :param name: optional human-readable name used in logs and reports
    """

    def __init__(self, facets: Iterable[Iterable] = (), processes: Optional[int] = None, name: Optional[str] = None):
        simplices = set()
        for facet in facets:
            simplex = facet if isinstance(facet, Simplex) else Simplex(facet)
            if len(simplex) == 0:
                continue
            if not simplex.is_chromatic():
                raise NonChromaticError("simplex %r repeats a color" % (simplex,))
            simplices.add(simplex)

        self._facets = tuple(sorted(self._maximal(simplices), key=Simplex.sort_key))
        self._vertices = frozenset(v for f in self._facets for v in f)
        colors = set(v.color for v in self._vertices)
        if processes is None:
            processes = max(colors) + 1 if colors else 0
        elif colors and max(colors) >= processes:
            raise NonChromaticError("color %d out of range for %d processes" % (max(colors), processes))
        self.processes = processes
        self.name = name

        self._lock = threading.RLock()
        self._faces = None
        self._neighbors = None
        self._facet_index = None

    @staticmethod
    def _maximal(simplices) -> List[Simplex]:
        by_vertex = defaultdict(list)
        kept = []
        for simplex in sorted(simplices, key=len, reverse=True):
            anchor = next(iter(simplex))
            if any(simplex < other for other in by_vertex[anchor]):
                continue
            kept.append(simplex)
            for v in simplex:
                by_vertex[v].append(simplex)
        return kept

    @property
    def facets(self) -> tuple:
        return self._facets

    @property
    def vertices(self) -> FrozenSet:
        return self._vertices

    @property
    def dimension(self) -> int:
        if not self._facets:
            return -1
        return max(f.dimension for f in self._facets)

    @property
    def colors(self) -> FrozenSet[int]:
        return frozenset(v.color for v in self._vertices)

    def is_empty(self) -> bool:
        return not self._facets

    def is_pure(self) -> bool:
        return len(set(len(f) for f in self._facets)) <= 1

    def ordered_vertices(self) -> list:
        return sorted(self._vertices, key=vertex_sort_key)

    def vertices_of_color(self, color: int) -> list:
        return [v for v in self.ordered_vertices() if v.color == color]

    def _all_faces(self) -> Dict[int, FrozenSet[Simplex]]:
        with self._lock:
            if self._faces is None:
                by_dimension = defaultdict(set)
                by_dimension[-1].add(EMPTY_SIMPLEX)
                for facet in self._facets:
                    for subset in powerset(facet):
                        if subset:
                            by_dimension[len(subset) - 1].add(Simplex(subset))
                self._faces = {k: frozenset(v) for k, v in by_dimension.items()}
            return self._faces

    def faces(self, k: int) -> FaceSet:
        """All k-dimensional faces; an out-of-range k yields an empty set."""
        return FaceSet(self._all_faces().get(k, ()))

    def simplices(self) -> FaceSet:
        """Every face of the complex including the empty simplex."""
        return FaceSet(s for faces in self._all_faces().values() for s in faces)

    def f_vector(self) -> FVector:
        faces = self._all_faces()
        top = max(faces)
        return FVector(len(faces.get(k, ())) for k in range(-1, top + 1))

    def __contains__(self, simplex) -> bool:
        simplex = simplex if isinstance(simplex, Simplex) else Simplex(simplex)
        return simplex in self._all_faces().get(simplex.dimension, ())

    def facets_containing(self, simplex) -> List[Simplex]:
        if len(simplex) == 0:
            return list(self._facets)
        with self._lock:
            if self._facet_index is None:
                index = defaultdict(list)
                for facet in self._facets:
                    for v in facet:
                        index[v].append(facet)
                self._facet_index = dict(index)
        anchor = next(iter(simplex))
        return [f for f in self._facet_index.get(anchor, ()) if simplex <= f]

    def neighbors(self, vertex) -> FrozenSet:
        """Vertices sharing an edge with ``vertex``."""
        with self._lock:
            if self._neighbors is None:
                adjacency = defaultdict(set)
                for facet in self._facets:
                    for v in facet:
                        adjacency[v].update(facet)
                for v, others in adjacency.items():
                    others.discard(v)
                self._neighbors = {v: frozenset(others) for v, others in adjacency.items()}
        return self._neighbors.get(vertex, frozenset())

    def vertex_by_key(self) -> dict:
        return {v.key: v for v in self._vertices}

    def __eq__(self, other):
        if not isinstance(other, ChromaticComplex):
            return NotImplemented
        return set(self._facets) == set(other._facets)

    def __hash__(self):
        return hash(frozenset(self._facets))

    def __repr__(self):
        name = self.name or "ChromaticComplex"
        return "%s(processes=%d, vertices=%d, facets=%d)" % (
            name, self.processes, len(self._vertices), len(self._facets))

    def to_json(self):
        return {
            "processes": self.processes,
            "vertices": [{"id": v.key, "color": v.color, "label": getattr(v, "label", None)}
                         for v in self.ordered_vertices()],
            "facets": [f.keys() for f in self._facets]
        }


def simplex_complex(n: int, prefix: str = "v") -> ChromaticComplex:
    """The standard simplex Δ^n with vertex ``<prefix><i>`` colored i."""
    vertices = [Vertex("%s%d" % (prefix, i), i, label=i) for i in range(n + 1)]
    return ChromaticComplex([vertices] if vertices else [], processes=n + 1, name="Delta^%d" % n)

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

from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Tuple


def vertex_sort_key(vertex) -> Tuple[int, str]:
    """Canonical vertex order: by color, then by identifier."""
    return vertex.color, vertex.key


@dataclass(frozen=True)
class Vertex(object):
    """A colored vertex of an input complex.

    :param id: identifier, unique within its complex
    :param color: process index in 0..n
    :param label: free-form payload such as an input value; not part of vertex identity
    """
    id: str
    color: int
    label: Any = field(default=None, compare=False, hash=False)

    @property
    def key(self) -> str:
        return self.id

    def __repr__(self):
        return "Vertex(%s, p%d)" % (self.id, self.color)

    def to_json(self):
        return {"id": self.id, "color": self.color, "label": self.label}


class Simplex(frozenset):
    """A set of vertices. Set operations inherited from frozenset return plain frozensets."""

    @property
    def dimension(self) -> int:
        return len(self) - 1

    @property
    def colors(self) -> frozenset:
        return frozenset(v.color for v in self)

    def is_chromatic(self) -> bool:
        return len(self.colors) == len(self)

    def ordered(self) -> list:
        return sorted(self, key=vertex_sort_key)

    def sort_key(self):
        return len(self), tuple(vertex_sort_key(v) for v in self.ordered())

    def keys(self) -> list:
        return [v.key for v in self.ordered()]

    def __repr__(self):
        return "Simplex(%s)" % ", ".join(self.keys())

    def to_json(self):
        return self.keys()


EMPTY_SIMPLEX = Simplex()


class FVector(object):
    """Face counts (f_{-1}, f_0, ..., f_n). Trailing zeros are not significant."""

    def __init__(self, counts: Iterable[int]):
        counts = list(counts)
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
        self._counts = tuple(counts)

    @classmethod
    def from_faces(cls, faces: Iterable[frozenset]) -> FVector:
        counts = []
        for face in faces:
            index = len(face)
            while len(counts) <= index:
                counts.append(0)
            counts[index] += 1
        return cls(counts)

    @classmethod
    def from_dimensions(cls, values: Iterable[int], empty: int = 1) -> FVector:
        """Build from (f_0, f_1, ...) with the given f_{-1}."""
        return cls([empty] + list(values))

    def f(self, k: int) -> int:
        index = k + 1
        if index < 0 or index >= len(self._counts):
            return 0
        return self._counts[index]

    @property
    def dimension(self) -> int:
        return len(self._counts) - 2

    def as_tuple(self) -> Tuple[int, ...]:
        return self._counts

    def __iter__(self) -> Iterator[int]:
        return iter(self._counts)

    def __eq__(self, other):
        if isinstance(other, FVector):
            return self._counts == other._counts
        if isinstance(other, tuple):
            return self == FVector(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._counts)

    def __repr__(self):
        return "FVector%r" % (self._counts,)

    def to_json(self):
        return list(self._counts)


class FaceSet(object):
    """A set of simplices that need not be closed under taking faces (open stars, interiors)."""

    def __init__(self, faces: Iterable[frozenset] = ()):
        self._faces = frozenset(f if isinstance(f, Simplex) else Simplex(f) for f in faces)

    def of_dimension(self, k: int) -> FaceSet:
        return FaceSet(f for f in self._faces if f.dimension == k)

    def f_vector(self) -> FVector:
        return FVector.from_faces(self._faces)

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for f in self._faces for v in f)

    def union(self, other: FaceSet) -> FaceSet:
        return FaceSet(self._faces | other._faces)

    def difference(self, other: FaceSet) -> FaceSet:
        return FaceSet(self._faces - other._faces)

    def __contains__(self, simplex):
        return simplex in self._faces

    def __len__(self):
        return len(self._faces)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(sorted(self._faces, key=Simplex.sort_key))

    def __eq__(self, other):
        if not isinstance(other, FaceSet):
            return NotImplemented
        return self._faces == other._faces

    def __hash__(self):
        return hash(self._faces)

    def __repr__(self):
        return "FaceSet(%d faces)" % len(self._faces)

    def to_json(self):
        return [f.to_json() for f in self]

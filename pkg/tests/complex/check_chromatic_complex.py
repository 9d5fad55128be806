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

from bitsnap.complex import ChromaticComplex, FaceSet, FVector, Simplex, Vertex, simplex_complex
from bitsnap.complex.constructions import (boundary, interior, join, link, link_of_star, open_star, restrict,
                                           skeleton, star)
from bitsnap.errors import ComplexError, InvalidSubcomplexError, NonChromaticError
from bitsnap.subdivision.chromatic import chromatic_subdivide, corner_image
from tests.bitsnap_mock import random_complex

import pytest


def vertices(c):
    return {v.key: v for v in c.vertices}


class CheckChromaticComplex(object):

    def check_simplex_complex(self):
        c = simplex_complex(2)
        assert c.processes == 3
        assert c.dimension == 2
        assert c.f_vector() == FVector([1, 3, 3, 1])
        assert c.is_pure()
        assert [v.key for v in c.ordered_vertices()] == ["v0", "v1", "v2"]

    def check_non_maximal_facets_dropped(self):
        a, b = Vertex("a", 0), Vertex("b", 1)
        c = ChromaticComplex([[a, b], [a], [b]])
        assert c.facets == (Simplex([a, b]),)
        assert c.processes == 2

    def check_repeated_color_rejected(self):
        with pytest.raises(NonChromaticError):
            ChromaticComplex([[Vertex("a", 0), Vertex("b", 0)]])

    def check_color_out_of_range(self):
        with pytest.raises(NonChromaticError):
            ChromaticComplex([[Vertex("a", 3)]], processes=2)

    def check_empty_complex(self):
        c = ChromaticComplex()
        assert c.is_empty()
        assert c.dimension == -1
        assert c.f_vector() == FVector([1])
        assert c.processes == 0

    def check_faces_out_of_range(self):
        c = simplex_complex(1)
        assert len(c.faces(5)) == 0
        assert len(c.faces(-1)) == 1

    def check_membership(self):
        c = simplex_complex(2)
        v = vertices(c)
        assert Simplex([v["v0"], v["v2"]]) in c
        assert [v["v1"]] in c
        assert Simplex([Vertex("x", 0)]) not in c

    def check_label_not_part_of_identity(self):
        assert Vertex("a", 0, label=1) == Vertex("a", 0, label=2)
        assert Vertex("a", 0) != Vertex("a", 1)

    def check_fvector_trailing_zeros(self):
        assert FVector([1, 2, 1, 0, 0]) == FVector([1, 2, 1])
        assert FVector([1, 2, 1]).f(7) == 0
        assert FVector.from_dimensions([2, 1]).as_tuple() == (1, 2, 1)


class CheckConstructions(object):

    def setup_method(self, _):
        self.c = simplex_complex(2)
        self.v = vertices(self.c)

    def check_star_and_link_of_corner(self):
        assert star(self.c, self.v["v0"]) == self.c
        lk = link(self.c, self.v["v0"])
        assert lk.facets == (Simplex([self.v["v1"], self.v["v2"]]),)

    def check_open_star(self):
        st = open_star(self.c, self.v["v0"])
        assert isinstance(st, FaceSet)
        assert st.f_vector() == FVector([0, 1, 2, 1])
        assert all(self.v["v0"] in face for face in st)

    def check_foreign_simplex_rejected(self):
        with pytest.raises(InvalidSubcomplexError):
            star(self.c, Vertex("x", 0))

    def check_boundary_and_interior(self):
        assert boundary(self.c).f_vector() == FVector([1, 3, 3])
        assert list(interior(self.c)) == [Simplex(self.c.vertices)]

    def check_boundary_of_point_is_empty(self):
        point = simplex_complex(0)
        assert boundary(point).is_empty()
        assert interior(point).f_vector() == FVector([0, 1])

    def check_interior_of_subdivided_edge(self):
        """Everything but the two corners and the empty simplex lies inside Ch of an edge."""
        assert interior(chromatic_subdivide(simplex_complex(1))).f_vector() == FVector([0, 2, 3])

    def check_skeleton(self):
        assert skeleton(self.c, 1).f_vector() == FVector([1, 3, 3])
        assert skeleton(self.c, 5) == self.c
        with pytest.raises(ComplexError):
            skeleton(self.c, -1)

    def check_join(self):
        left = simplex_complex(0)
        right = ChromaticComplex([[Vertex("w", 1)]])
        joined = join(left, right)
        assert joined.f_vector() == FVector([1, 2, 1])
        assert join(left, ChromaticComplex()) == left

    def check_join_rejects_shared_colors(self):
        with pytest.raises(NonChromaticError):
            join(simplex_complex(0), ChromaticComplex([[Vertex("w", 0)]]))
        with pytest.raises(ComplexError):
            join(self.c, self.c)

    def check_restrict(self):
        assert restrict(self.c, 1) == frozenset([self.v["v1"]])
        edges = restrict(open_star(self.c, self.v["v0"]), 2, center=self.v["v0"])
        assert list(edges) == [Simplex([self.v["v0"], self.v["v2"]])]

    def check_link_of_star_in_subdivision(self):
        subdivided = chromatic_subdivide(self.c)
        corner = corner_image(self.v["v0"], 1)
        around = restrict(link_of_star(subdivided, corner), 0)
        assert len(around) == 3
        assert corner not in around


def shifted(c, offset, prefix):
    """A copy of ``c`` on fresh vertices whose colors are moved up by ``offset``."""
    renamed = {v: Vertex(prefix + v.key, v.color + offset) for v in c.vertices}
    return ChromaticComplex([[renamed[v] for v in f] for f in c.facets], processes=c.processes + offset)


def corpus():
    for seed in range(6):
        yield random_complex(seed)
    yield chromatic_subdivide(random_complex(7, facets=2))
    yield chromatic_subdivide(simplex_complex(2))


class CheckComplexInvariants(object):

    def check_open_stars_count_each_face_once_per_vertex(self):
        for c in corpus():
            stars = [open_star(c, v).f_vector() for v in c.vertices]
            for k in range(c.dimension + 1):
                assert sum(st.f(k) for st in stars) == (k + 1) * c.f_vector().f(k)

    def check_link_joined_with_vertex_lies_in_star(self):
        for c in corpus():
            for v in c.ordered_vertices():
                around = star(c, v).simplices()
                for face in link(c, v).simplices():
                    assert Simplex(face | {v}) in around

    def check_boundary_and_interior_partition_faces(self):
        for c in corpus():
            on_boundary = boundary(c).simplices()
            inside = interior(c)
            assert all(face not in on_boundary for face in inside)
            assert inside.union(on_boundary) == c.simplices()

    def check_join_fvector_is_a_convolution(self):
        for seed in range(6):
            a = random_complex(seed, processes=2)
            b = shifted(random_complex(seed + 10, processes=2), 2, "b")
            fa, fb = a.f_vector().as_tuple(), b.f_vector().as_tuple()
            expected = [0] * (len(fa) + len(fb) - 1)
            for i, x in enumerate(fa):
                for j, y in enumerate(fb):
                    expected[i + j] += x * y
            assert join(a, b).f_vector() == FVector(expected)

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

from bitsnap.complex import simplex_complex
from bitsnap.distinguishability.encoding import Encoding
from bitsnap.distinguishability.schedule import synth_encoding_schedule
from bitsnap.errors import ForeignVertexError, IndistinguishabilityFault, PartialEncodingError, ResourceLimitError
from bitsnap.protocol.isomorphism import is_isomorphic
from bitsnap.protocol.simulator import (BOUNDED, ExecutionTracer, ProcessState, WrittenCode,
                                        biis_round, full_info_round, iterate_protocol, pull_back,
                                        subdivision_image)
from bitsnap.protocol.schedules import View
from bitsnap.subdivision.chromatic import chromatic_subdivide, iterate_subdivide
from bitsnap.subdivision.partitions import ordered_bell
from tests.bitsnap_mock import colliding_encoding, random_complex, two_edges_complex

from functools import lru_cache

import pytest


@lru_cache(maxsize=16)
def subdivided(c, rounds):
    """Ch^rounds of c, shared by the checks in this module."""
    return iterate_subdivide(c, rounds)


class CheckFullInformation(object):

    def check_one_round_is_subdivision(self):
        for n in range(3):
            delta = simplex_complex(n)
            pc = full_info_round(delta)
            assert pc.round == 1
            assert len(pc.facets) == len(subdivided(delta, 1).facets)
            assert is_isomorphic(pc, subdivided(delta, 1))

    def check_states_map_onto_subdivision(self):
        delta = simplex_complex(2)
        pc = full_info_round(delta)
        assert set(subdivision_image(v) for v in pc.vertices) == subdivided(delta, 1).vertices

    def check_two_rounds(self):
        for c in (simplex_complex(1), simplex_complex(2)):
            pc = iterate_protocol(c, 2)
            assert len(pc.facets) == ordered_bell(len(c.facets[0])) ** 2
            assert is_isomorphic(pc, subdivided(c, 2))

    def check_zero_rounds(self):
        delta = simplex_complex(2)
        assert iterate_protocol(delta, 0) == delta

    def check_threads_give_same_result(self):
        delta = simplex_complex(2)
        assert full_info_round(delta, threads=3) == full_info_round(delta)

    def check_resource_limit(self):
        with pytest.raises(ResourceLimitError):
            full_info_round(simplex_complex(3), max_facets=10)

    def check_tracer(self):
        tracer = ExecutionTracer()
        full_info_round(simplex_complex(1), tracer=tracer)
        assert len(tracer.lines) == 8
        assert tracer.lines[0] == "(1, [v0], {0}, p0 -> {0: v0})"

    def check_tracer_sink(self):
        seen = []
        full_info_round(simplex_complex(1), tracer=ExecutionTracer(seen.append))
        assert len(seen) == 8

    def check_argument_validation(self):
        delta = simplex_complex(1)
        with pytest.raises(ValueError):
            iterate_protocol(delta, -1)
        with pytest.raises(ValueError):
            iterate_protocol(delta, 1, mode="partial")
        with pytest.raises(ValueError):
            iterate_protocol(delta, 2, mode=BOUNDED, schedule=[Encoding.constant(delta.vertices)])


class CheckSubdivisionImage(object):

    def check_memo_is_filled_per_call(self):
        delta = simplex_complex(1)
        pc = iterate_protocol(delta, 2)
        memo = {}
        images = set(subdivision_image(v, memo) for v in pc.vertices)
        assert images == subdivided(delta, 2).vertices
        # the round-2 states and the round-1 states inside their views
        assert len(memo) == len(pc.vertices) + len(full_info_round(delta).vertices)
        assert not hasattr(subdivision_image, "cache_info")

    def check_input_vertices_are_their_own_image(self):
        delta = simplex_complex(2)
        memo = {}
        assert all(subdivision_image(v, memo) == v for v in delta.vertices)
        assert memo == {}

    def check_pull_back(self):
        delta = simplex_complex(2)
        ch = subdivided(delta, 1)
        encoding = Encoding.injective(ch.vertices)
        pc = full_info_round(delta)
        pulled = pull_back(encoding, pc)
        assert pulled.image == encoding.image
        assert all(pulled[v] == encoding[subdivision_image(v)] for v in pc.vertices)


class CheckBoundedRounds(object):

    def check_injective_encoding_reproduces_subdivision(self):
        delta = simplex_complex(2)
        pc = biis_round(delta, Encoding.injective(delta.vertices))
        assert pc.faults == []
        assert is_isomorphic(pc, subdivided(delta, 1))

    def check_synthesized_schedule(self):
        for c in (simplex_complex(1), simplex_complex(2)):
            schedule = synth_encoding_schedule(c, 2)
            pc = iterate_protocol(c, 2, BOUNDED, schedule=schedule)
            assert pc.faults == []
            assert is_isomorphic(pc, subdivided(c, 2))

    def check_edge_three_rounds(self):
        delta = simplex_complex(1)
        schedule = synth_encoding_schedule(delta, 3)
        assert schedule.max_bits == 2
        assert is_isomorphic(iterate_protocol(delta, 3, BOUNDED, schedule=schedule.encodings),
                             subdivided(delta, 3))

    def check_ambiguous_decode_collapses_states(self):
        c, encoding = colliding_encoding()
        pc = biis_round(c, encoding)
        assert pc.faults
        s, _, _ = pc.faults[0]
        assert s.key == "v"
        assert len(pc.vertices) < len(chromatic_subdivide(c).vertices)
        assert not is_isomorphic(pc, chromatic_subdivide(c))
        merged = ProcessState(0, 1, View({0: s, 1: WrittenCode(1, 1)}))
        assert merged in pc.vertices
        assert len(pc.neighbors(merged)) == 4

    def check_strict_decode_raises(self):
        c, encoding = colliding_encoding()
        with pytest.raises(IndistinguishabilityFault) as e:
            biis_round(c, encoding, strict=True)
        assert e.value.witness[0].key == "v"

    def check_bounded_stops_after_faults(self):
        c, encoding = colliding_encoding()
        ch = chromatic_subdivide(c)
        pc = iterate_protocol(c, 2, BOUNDED, schedule=[encoding, Encoding.injective(ch.vertices)], strict=False)
        assert pc.round == 1
        assert pc.faults

    def check_undecoded_state_has_no_image(self):
        with pytest.raises(ForeignVertexError):
            subdivision_image(WrittenCode(1, 1))

    def check_partial_encoding_rejected(self):
        c, (v, w, t) = two_edges_complex()
        with pytest.raises(PartialEncodingError):
            biis_round(c, Encoding({v: 1}))


@pytest.mark.slow
class CheckLargerProtocolComplexes(object):

    def check_tetrahedron_one_round(self):
        delta = simplex_complex(3)
        pc = full_info_round(delta)
        assert len(pc.facets) == 75
        assert is_isomorphic(pc, subdivided(delta, 1))

    def check_random_complexes_two_rounds(self):
        for seed in range(5):
            c = random_complex(seed, facets=3)
            assert is_isomorphic(iterate_protocol(c, 2), subdivided(c, 2))

    def check_bounded_random_complexes(self):
        for seed in range(5):
            c = random_complex(seed, facets=3)
            schedule = synth_encoding_schedule(c, 2)
            pc = iterate_protocol(c, 2, BOUNDED, schedule=schedule)
            assert pc.faults == []
            assert is_isomorphic(pc, subdivided(c, 2))

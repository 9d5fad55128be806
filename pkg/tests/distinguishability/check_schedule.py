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

from bitsnap.complex import ChromaticComplex, simplex_complex
from bitsnap.distinguishability.encoding import is_distinguishable
from bitsnap.distinguishability.schedule import (BOUNDS_HEADER, distinguishing_encoding, round_bounds,
                                                 synth_encoding_schedule)
from bitsnap.protocol.isomorphism import is_isomorphic
from bitsnap.protocol.simulator import BOUNDED, iterate_protocol
from bitsnap.subdivision.chromatic import iterate_subdivide
from tests.bitsnap_mock import random_complex

import pytest


class CheckEncodingSchedule(object):

    def check_edge_bits_per_round(self):
        """Round 0 writes one code; every later round needs two bits."""
        schedule = synth_encoding_schedule(simplex_complex(1), 3)
        assert len(schedule) == 3
        assert not schedule.truncated
        assert [row.bits for row in schedule.rows] == [1, 2, 2]
        assert [row.vertices for row in schedule.rows] == [2, 4, 10]
        assert schedule.max_bits == 2

    def check_edge_bit_profile_over_six_rounds(self):
        schedule = synth_encoding_schedule(simplex_complex(1), 6)
        assert not schedule.truncated
        assert [row.bits for row in schedule.rows] == [1, 2, 2, 2, 2, 2]
        assert [row.vertices for row in schedule.rows] == [2, 4, 10, 28, 82, 244]

    def check_bounded_edge_matches_subdivision(self):
        edge = simplex_complex(1)
        schedule = synth_encoding_schedule(edge, 4)
        for rounds in range(1, 5):
            pc = iterate_protocol(edge, rounds, BOUNDED, schedule=schedule.encodings[:rounds])
            assert pc.faults == []
            assert is_isomorphic(pc, iterate_subdivide(edge, rounds))

    @pytest.mark.slow
    def check_bounded_edge_matches_subdivision_to_six_rounds(self):
        edge = simplex_complex(1)
        schedule = synth_encoding_schedule(edge, 6)
        for rounds in (5, 6):
            pc = iterate_protocol(edge, rounds, BOUNDED, schedule=schedule.encodings[:rounds])
            assert pc.faults == []
            assert is_isomorphic(pc, iterate_subdivide(edge, rounds))

    def check_every_round_distinguishable(self):
        schedule = synth_encoding_schedule(simplex_complex(2), 2)
        for index, (c, encoding) in enumerate(zip(schedule.complexes, schedule.encodings)):
            assert c == iterate_subdivide(simplex_complex(2), index)
            assert is_distinguishable(c, encoding)
            row = schedule.rows[index]
            assert row.clique_lb <= row.image <= row.delta_plus_1

    def check_policies_and_exact(self):
        c = random_complex(2)
        for policy in ("largest_first", "dsatur", "canonical"):
            schedule = synth_encoding_schedule(c, 2, order_policy=policy)
            assert all(is_distinguishable(x, e) for x, e in zip(schedule.complexes, schedule.encodings))
        exact = synth_encoding_schedule(c, 2, exact=True)
        greedy = synth_encoding_schedule(c, 2)
        for a, b in zip(exact.rows, greedy.rows):
            assert a.image <= b.image

    def check_threads_give_same_schedule(self):
        c = random_complex(4)
        single = synth_encoding_schedule(c, 2)
        pooled = synth_encoding_schedule(c, 2, threads=3)
        assert [e.codes for e in single.encodings] == [e.codes for e in pooled.encodings]

    def check_truncated_by_cap(self):
        schedule = synth_encoding_schedule(simplex_complex(2), 3, max_facets=20)
        assert schedule.truncated
        assert len(schedule) == 2

    def check_empty_complex(self):
        schedule = synth_encoding_schedule(ChromaticComplex(), 2)
        assert len(schedule) == 0
        assert schedule.max_bits == 0

    def check_rounds_must_be_positive(self):
        with pytest.raises(ValueError):
            synth_encoding_schedule(simplex_complex(1), 0)

    def check_round_bounds_row(self):
        c = simplex_complex(2)
        row = round_bounds(0, c, distinguishing_encoding(c))
        assert row.as_row() == ["0", "3", "1", "1", "1", "1"]
        assert list(row.to_json()) == list(BOUNDS_HEADER)

    def check_to_json(self):
        document = synth_encoding_schedule(simplex_complex(1), 2).to_json()
        assert len(document["rounds"]) == 2
        assert document["rounds"][0]["codes"] == {"v0": 1, "v1": 1}
        assert document["truncated"] is False

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

from bitsnap.fvector.bounds import (RATIO_HEADER, BoundingFunction, bit_complexity_bounds, bounding_ratio_table,
                                    fubini_asymptotic_ratio, iterated_star_ratio, link_star_count_iterated,
                                    link_star_ratio)

import mpmath as mp


class CheckBoundingRatios(object):

    def check_bounding_function(self):
        assert BoundingFunction(1, 5).exact_part == 80
        assert BoundingFunction(1, 5).value() == 80
        assert BoundingFunction(2, 4, r=2).ln2_exponent == 2
        assert BoundingFunction(2, 4, alternate=True).ln2_exponent == 3

    def check_edge_ratio_is_one(self):
        for row in bounding_ratio_table(1, range(1, 10)):
            assert row.ratio == 1

    def check_ratios_stay_bounded(self):
        for k in (1, 2, 3):
            rows = bounding_ratio_table(k, range(k + 2, 13))
            assert [row.n for row in rows] == list(range(k + 2, 13))
            for row in rows:
                assert 0.4 < row.ratio < 1.3
                assert row.ratio_alt < row.ratio

    def check_ratio_differences_do_not_grow(self):
        """From n = 8 on, each step of either ratio column is no larger in size than the one before."""
        for k in (1, 2, 3):
            rows = bounding_ratio_table(k, range(8, 13))
            for column in ("ratio", "ratio_alt"):
                values = [getattr(row, column) for row in rows]
                steps = [abs(b - a) for a, b in zip(values, values[1:])]
                for a, b in zip(steps, steps[1:]):
                    assert b <= a + mp.mpf("1e-30")

    def check_ratios_approach_their_limit_from_above(self):
        rows = bounding_ratio_table(2, range(4, 13))
        assert all(b.ratio < a.ratio for a, b in zip(rows, rows[1:]))
        assert abs(rows[-1].ratio - mp.log(2)) < 0.01

    def check_rows_skip_small_n(self):
        assert [row.n for row in bounding_ratio_table(3, range(6))] == [3, 4, 5]

    def check_row_formatting(self):
        row = bounding_ratio_table(2, [4])[0]
        assert len(row.as_row()) == len(RATIO_HEADER)
        assert row.to_json()["T"] == str(row.T)

    def check_fubini_asymptotics(self):
        assert abs(fubini_asymptotic_ratio(10) - 1) < 0.01

    def check_iterated_star_ratio(self):
        assert iterated_star_ratio(2, 1, 1) == 1
        assert iterated_star_ratio(2, 2, 1) == mp.mpf(10) / 16

    def check_link_star(self):
        assert link_star_count_iterated(2, 1) == 3
        assert link_star_count_iterated(2, 2) == 7
        assert link_star_ratio(2, 1) > 0

    def check_bit_complexity(self):
        lower, upper = bit_complexity_bounds(2, 3)
        assert abs(lower - 6) < mp.mpf("1e-20")
        assert upper > lower

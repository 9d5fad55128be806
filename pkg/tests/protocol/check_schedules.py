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

from bitsnap.protocol.schedules import BOTTOM, Schedule, View, enumerate_schedules, run_is_layer

import pickle
import pytest


class CheckSchedules(object):

    def check_enumerate(self):
        assert [str(s) for s in enumerate_schedules([1, 0])] == ["{0}{1}", "{1}{0}", "{0 1}"]
        assert len(enumerate_schedules(range(3))) == 13
        with pytest.raises(ValueError):
            enumerate_schedules([])

    def check_blocks_validated(self):
        with pytest.raises(ValueError):
            Schedule.of([0], [0, 1])
        with pytest.raises(ValueError):
            Schedule.of([0], [])
        assert Schedule.of([0], [1, 2]).participants == frozenset([0, 1, 2])
        assert str(Schedule.of([0], [2, 1])) == "{0}{1 2}"

    def check_layer_views(self):
        views = run_is_layer({0: "a", 1: "b", 2: "c"}, Schedule.of([1], [0, 2]))
        assert views[1] == View({1: "b"})
        assert views[0] == views[2] == View({0: "a", 1: "b", 2: "c"})

    def check_layer_needs_matching_writers(self):
        with pytest.raises(ValueError):
            run_is_layer({0: "a"}, Schedule.of([0], [1]))


class CheckView(object):

    def check_bottom_not_stored(self):
        view = View({0: "a", 1: BOTTOM})
        assert len(view) == 1
        assert view.get(1) is BOTTOM
        assert view[0] == "a"
        assert view.seen() == frozenset([0])
        assert view == View({0: "a"})
        assert hash(view) == hash(View({0: "a"}))

    def check_repr(self):
        assert repr(View({1: 2, 0: 1})) == "{0: 1, 1: 2}"
        assert repr(BOTTOM) == "⊥"

    def check_bottom_is_a_singleton(self):
        assert pickle.loads(pickle.dumps(BOTTOM)) is BOTTOM

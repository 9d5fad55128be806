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

"""One layer of immediate snapshot: who writes, who sees what."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

from bitsnap.subdivision.partitions import ordered_set_partitions


class _Bottom(object):
    """The value of a memory cell nobody has written yet."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_Bottom, cls).__new__(cls)
        return cls._instance

    def __repr__(self):
        return "⊥"

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()


@dataclass(frozen=True)
class Schedule(object):
    """Ordered set partition of the participants; block j runs its write and snapshot together, after block j-1."""
    blocks: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        seen = set()
        for block in self.blocks:
            if not block:
                raise ValueError("schedule blocks must be non-empty")
            if seen & block:
                raise ValueError("schedule blocks must be disjoint, %s repeats" % sorted(seen & block))
            seen |= block

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> Schedule:
        return cls(tuple(frozenset(block) for block in blocks))

    @property
    def participants(self) -> FrozenSet[int]:
        return frozenset(p for block in self.blocks for p in block)

    def __str__(self):
        return "".join("{%s}" % " ".join(str(p) for p in sorted(block)) for block in self.blocks)


def enumerate_schedules(participants: Iterable[int]) -> List[Schedule]:
    participants = sorted(participants)
    if not participants:
        raise ValueError("a schedule needs at least one participant")
    return [Schedule(tuple(frozenset(block) for block in partition))
            for partition in ordered_set_partitions(participants)]


class View(object):
    """Snapshot contents indexed by process; unwritten cells read as BOTTOM and are not stored.

    Views compare and hash by their contents, so equal snapshots give equal states.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, values: Mapping[int, object]):
        self._items = tuple(sorted(((p, v) for p, v in values.items() if v is not BOTTOM), key=lambda kv: kv[0]))
        self._hash = hash(self._items)

    def get(self, process: int):
        for p, v in self._items:
            if p == process:
                return v
        return BOTTOM

    def __getitem__(self, process: int):
        return self.get(process)

    def seen(self) -> FrozenSet[int]:
        return frozenset(p for p, _ in self._items)

    def values(self) -> List[object]:
        return [v for _, v in self._items]

    def items(self) -> Tuple[Tuple[int, object], ...]:
        return self._items

    def __len__(self):
        return len(self._items)

    def __eq__(self, other):
        return isinstance(other, View) and self._items == other._items

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "{%s}" % ", ".join("%d: %s" % (p, getattr(v, "key", v)) for p, v in self._items)


def run_is_layer(states: Mapping[int, object], schedule: Schedule) -> Dict[int, View]:
    """Every process in block j sees what blocks 1..j wrote."""
    if set(states) != schedule.participants:
        raise ValueError("schedule %s does not cover the writers %s" % (schedule, sorted(states)))
    views = {}
    written = {}
    for block in schedule.blocks:
        for p in block:
            written[p] = states[p]
        snapshot = View(written)
        for p in block:
            views[p] = snapshot
    return views

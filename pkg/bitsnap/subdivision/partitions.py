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

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Sequence, Tuple


def ordered_set_partitions(items: Sequence) -> Iterator[Tuple[tuple, ...]]:
    """Yield every ordered set partition of ``items`` as a tuple of blocks.

    Blocks keep the relative order of ``items``; partitions come out with smaller first blocks first, and
    within a block size in ``itertools.combinations`` order, so the sequence is deterministic.
    """
    items = tuple(items)
    if not items:
        yield ()
        return
    for size in range(1, len(items) + 1):
        for first in combinations(items, size):
            rest = tuple(x for x in items if x not in first)
            for tail in ordered_set_partitions(rest):
                yield (first,) + tail


@lru_cache(maxsize=None)
def ordered_bell(m: int) -> int:
    """Number of ordered set partitions of an m-element set: a(m) = sum_{j=1..m} C(m,j) a(m-j), a(0) = 1."""
    if m < 0:
        raise ValueError("ordered_bell is undefined for negative m")
    if m == 0:
        return 1
    return sum(comb(m, j) * ordered_bell(m - j) for j in range(1, m + 1))

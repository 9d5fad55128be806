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

"""Counting faces of chromatic subdivisions without building them.

Every identity here is evaluated in exact integer or rational arithmetic.
"""

from __future__ import annotations

import logging
import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, perm
from typing import Callable, Dict, Mapping, Optional, Tuple, Union

from bitsnap.complex.chromatic_complex import ChromaticComplex, simplex_complex
from bitsnap.complex.constructions import interior, link_of_star, open_star, restrict
from bitsnap.complex.simplex import FVector, vertex_sort_key
from bitsnap.errors import MissingTableEntryError
from bitsnap.subdivision.chromatic import chromatic_subdivide, corner_image

logger = logging.getLogger(__name__)


def falling_factorial(n: int, k: int) -> int:
    """(n)_k = n(n-1)...(n-k+1); zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("falling_factorial needs non-negative arguments, got (%d)_%d" % (n, k))
    return perm(n, k)


def binomial_identity_sides(n: int, k: int, r: int, b: int, alpha: int) -> Tuple[Fraction, Fraction]:
    """Both sides of
    sum_{i=k..n} C(n,i) C(i,r) b^(i-alpha) (i-r)_(k-r)  =  b^(k-alpha)/r! (b+1)^(n-k) (n)_k.
    """
    if not 0 <= r <= k <= n:
        raise ValueError("need 0 <= r <= k <= n, got n=%d k=%d r=%d" % (n, k, r))
    base = Fraction(b)
    left = sum(comb(n, i) * comb(i, r) * base ** (i - alpha) * falling_factorial(i - r, k - r)
               for i in range(k, n + 1))
    right = base ** (k - alpha) / factorial(r) * (b + 1) ** (n - k) * falling_factorial(n, k)
    return Fraction(left), Fraction(right)


def binomial_identity_check(n: int, k: int, r: int, b: int, alpha: int) -> bool:
    left, right = binomial_identity_sides(n, k, r, b, alpha)
    return left == right


@lru_cache(maxsize=None)
def _blocks_with_marked(marked: int, unmarked: int) -> int:
    """Ordered set partitions of marked+unmarked elements in which every block holds a marked element."""
    if marked == 0:
        return 1 if unmarked == 0 else 0
    return sum(comb(marked, a) * comb(unmarked, b) * _blocks_with_marked(marked - a, unmarked - b)
               for a in range(1, marked + 1) for b in range(unmarked + 1))


def f_interior_ch_delta(n: int, k: int) -> int:
    """f_k(Int Ch Δ^n): k-faces of Ch Δ^n whose carrier is all of Δ^n.

    Choose the k+1 colors; reading the face as an execution, the blocks of the full partition are exactly the
    views' increments, and each increment must hold one of the chosen processes.
    """
    if k < 0 or k > n:
        return 0
    return comb(n + 1, k + 1) * _blocks_with_marked(k + 1, n - k)


class InteriorTable(object):
    """Values f_k(Int τ(Δ^i)) for a subdivision operator τ.

    :param values: explicit ``{(i, k): count}`` entries, or None to compute on demand
    :param compute: callable (i, k) -> count used when ``values`` is None
    """

    def __init__(self, values: Optional[Mapping[Tuple[int, int], int]] = None,
                 compute: Optional[Callable[[int, int], int]] = None):
        self.values = dict(values) if values is not None else None
        self.compute = compute

    def __call__(self, i: int, k: int) -> int:
        if k > i:
            return 0
        if self.values is not None:
            try:
                return self.values[(i, k)]
            except KeyError:
                raise MissingTableEntryError("no interior count for i=%d, k=%d" % (i, k))
        return self.compute(i, k)

    @classmethod
    def chromatic(cls) -> InteriorTable:
        return cls(compute=f_interior_ch_delta)

    @classmethod
    def identity(cls) -> InteriorTable:
        return cls(compute=lambda i, k: 1 if i == k else 0)

    @classmethod
    def by_enumeration(cls, operator: Callable[[ChromaticComplex], ChromaticComplex], max_dimension: int
                       ) -> InteriorTable:
        """Enumerate Int τ(Δ^i) for i <= max_dimension."""
        values = {}
        for i in range(max_dimension + 1):
            counts = interior(operator(simplex_complex(i))).f_vector()
            for k in range(i + 1):
                values[(i, k)] = counts.f(k)
        return cls(values=values)


def fvec_subdivision(fvec_a: FVector, interior_table: Union[InteriorTable, Mapping[Tuple[int, int], int]]
                     ) -> FVector:
    """f_k(τ(A)) = sum_{i=k..n} f_i(A) f_k(Int τ(Δ^i))."""
    if not isinstance(interior_table, InteriorTable):
        interior_table = InteriorTable(values=interior_table)
    n = fvec_a.dimension
    counts = [sum(fvec_a.f(i) * interior_table(i, k) for i in range(k, n + 1)) for k in range(n + 1)]
    return FVector.from_dimensions(counts, empty=fvec_a.f(-1))


def fvec_iterated(fvec_a: FVector, rounds: int, interior_table: Optional[InteriorTable] = None) -> FVector:
    interior_table = interior_table or InteriorTable.chromatic()
    for _ in range(rounds):
        fvec_a = fvec_subdivision(fvec_a, interior_table)
    return fvec_a


class StarFVectorTable(object):
    """Memo of T(k, n) = f_k(St°(Ch Δ^n, v)) at a corner v, grown lazily and shared between threads."""

    def __init__(self):
        self._values: Dict[Tuple[int, int], int] = {}
        self._lock = threading.RLock()

    def value(self, k: int, n: int) -> int:
        if k < 0 or n < 0 or k > n:
            return 0
        if k == 0:
            return 1
        with self._lock:
            if (k, n) not in self._values:
                self._values[(k, n)] = sum(comb(n, i) * self.interior(k, i) for i in range(k, n + 1))
            return self._values[(k, n)]

    def interior(self, k: int, n: int) -> int:
        """f_k(Int St°(Ch Δ^n, v)) = sum_{j=1..k} C(n,j) T(k-j, n-j); zero for k = 0."""
        if k <= 0:
            return 0
        return sum(comb(n, j) * self.value(k - j, n - j) for j in range(1, k + 1))

    def __len__(self):
        return len(self._values)


STAR_TABLE = StarFVectorTable()


def f_int_star_ch(n: int, k: int, table: StarFVectorTable = STAR_TABLE) -> int:
    return table.interior(k, n)


def f_star_ch_delta(n: int, k: int, table: StarFVectorTable = STAR_TABLE) -> int:
    return table.value(k, n)


def fubini(n: int) -> int:
    return f_star_ch_delta(n, n)


def star_fvector_iterated(base_star: FVector, n: int, rounds: int, table: StarFVectorTable = STAR_TABLE
                          ) -> FVector:
    """The open-star f-vector at a vertex after ``rounds`` further subdivisions of an n-dimensional complex.

    f_k(St°(Ch^r A, v)) = sum_{i=k..n} f_i(St°(Ch^{r-1} A, v)) sum_{j=1..k} C(i,j) T(k-j, i-j), and f_0 = 1.
    """
    current = [base_star.f(k) for k in range(n + 1)]
    for _ in range(rounds):
        current = [1] + [sum(current[i] * table.interior(k, i) for i in range(k, n + 1)) for k in range(1, n + 1)]
    return FVector.from_dimensions(current, empty=0)


def f_star_ch_iterated(base_star: FVector, n: int, rounds: int, k: int, table: StarFVectorTable = STAR_TABLE
                       ) -> int:
    if k == 0:
        return 1
    return star_fvector_iterated(base_star, n, rounds, table).f(k)


def link_star_count(c: ChromaticComplex, vertex) -> int:
    """Same-colored vertices at distance two from ``vertex`` in Ch c, read off the open star in c."""
    counts = open_star(c, vertex).f_vector()
    return sum(counts.f(i) for i in range(1, c.dimension + 1))


def link_star_count_direct(c: ChromaticComplex, vertex, subdivided: Optional[ChromaticComplex] = None) -> int:
    """The same count measured on Ch c itself."""
    subdivided = subdivided or chromatic_subdivide(c)
    corner = corner_image(vertex, 1)
    return len(restrict(link_of_star(subdivided, corner), vertex.color))


def argmax_star_vertex(c: ChromaticComplex, rounds: int, k: int, subdivided: Optional[ChromaticComplex] = None,
                       table: StarFVectorTable = STAR_TABLE):
    """A vertex of Ch c whose open star in Ch^r c has the most k-faces; ties go to the canonically first."""
    if rounds < 1:
        raise ValueError("rounds must be at least 1, got %d" % rounds)
    subdivided = subdivided or chromatic_subdivide(c)
    n = c.dimension
    best, best_value = None, -1
    for v in sorted(subdivided.vertices, key=vertex_sort_key):
        base = open_star(subdivided, v).f_vector()
        value = f_star_ch_iterated(base, n, rounds - 1, k, table) if rounds > 1 else base.f(k)
        if value > best_value:
            best, best_value = v, value
    logger.debug("Largest %d-face open star after %d rounds: %s with %d faces", k, rounds, best, best_value)
    return best

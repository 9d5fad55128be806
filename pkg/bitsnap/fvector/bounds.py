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

"""Finite-n diagnostics for the growth of open stars under iterated subdivision.

Exact counts come from the recurrences; only the normalizing powers of ln 2 are evaluated with mpmath.
Two normalizations are carried side by side: ``ratio`` divides by ln2^(k-1) and ``ratio_alt`` by ln2^(k+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, List

import mpmath as mp

from bitsnap.complex.simplex import FVector
from bitsnap.fvector.recurrences import STAR_TABLE, falling_factorial, star_fvector_iterated

RATIO_DPS = 50
DISPLAY_DIGITS = 15

RATIO_HEADER = ("k", "n", "T", "bound", "ratio", "ratio_alt")


def bounding_expression(k: int, n: int) -> int:
    """(k+1)^(n-k) (n)_k, the ln 2 free part of the bounding function."""
    return (k + 1) ** (n - k) * falling_factorial(n, k)


def _ln2_power(exponent: int):
    return mp.power(mp.log(2), exponent)


@dataclass(frozen=True)
class BoundingFunction(object):
    """((k+1)^(n-k) (n)_k / ln2^e)^r with e = k-1, or e = k+1 when ``alternate`` is set."""
    k: int
    n: int
    r: int = 1
    alternate: bool = False

    @property
    def exact_part(self) -> int:
        return bounding_expression(self.k, self.n) ** self.r

    @property
    def ln2_exponent(self) -> int:
        return ((self.k + 1) if self.alternate else (self.k - 1)) * self.r

    def value(self):
        with mp.workdps(RATIO_DPS):
            return mp.mpf(self.exact_part) / _ln2_power(self.ln2_exponent)

    def to_json(self):
        return {"k": self.k, "n": self.n, "r": self.r, "exact_part": self.exact_part,
                "ln2_exponent": self.ln2_exponent, "value": mp.nstr(self.value(), DISPLAY_DIGITS)}


@dataclass(frozen=True)
class RatioRow(object):
    k: int
    n: int
    T: int
    bound: int
    ratio: object
    ratio_alt: object

    def as_row(self) -> List[str]:
        return [str(self.k), str(self.n), str(self.T), str(self.bound),
                mp.nstr(self.ratio, DISPLAY_DIGITS), mp.nstr(self.ratio_alt, DISPLAY_DIGITS)]

    def to_json(self):
        return dict(zip(RATIO_HEADER, self.as_row()))


def ratio_row(k: int, n: int, table=STAR_TABLE) -> RatioRow:
    t = table.value(k, n)
    with mp.workdps(RATIO_DPS):
        ratio = mp.mpf(t) / BoundingFunction(k, n).value()
        ratio_alt = mp.mpf(t) / BoundingFunction(k, n, alternate=True).value()
    return RatioRow(k, n, t, bounding_expression(k, n), ratio, ratio_alt)


def bounding_ratio_table(k: int, n_range: Iterable[int], table=STAR_TABLE) -> List[RatioRow]:
    """One row per n >= k in ``n_range``."""
    return [ratio_row(k, n, table) for n in n_range if n >= k]


def fubini_asymptotic_ratio(n: int, table=STAR_TABLE):
    """Fubini(n) / (n! / (2 ln2^(n+1)))."""
    with mp.workdps(RATIO_DPS):
        estimate = mp.mpf(factorial(n)) / (2 * _ln2_power(n + 1))
        return mp.mpf(table.value(n, n)) / estimate


def _corner_star(n: int) -> FVector:
    return FVector.from_dimensions([comb(n, i) for i in range(n + 1)], empty=0)


def iterated_star_ratio(n: int, r: int, k: int, table=STAR_TABLE):
    """f_k(St°(Ch^r Δ^n, corner)) against the r-th power of the bounding function."""
    count = star_fvector_iterated(_corner_star(n), n, r, table).f(k)
    with mp.workdps(RATIO_DPS):
        return mp.mpf(count) / BoundingFunction(k, n, r).value()


def link_star_bound(n: int, r: int):
    """(n! n^n / ln2^(n-1))^r."""
    with mp.workdps(RATIO_DPS):
        return mp.power(mp.mpf(factorial(n) * n ** n) / _ln2_power(n - 1), r)


def link_star_count_iterated(n: int, r: int, table=STAR_TABLE) -> int:
    """Same-colored vertices at distance two from a corner of Ch^r Δ^n."""
    star = star_fvector_iterated(_corner_star(n), n, r - 1, table)
    return sum(star.f(i) for i in range(1, n + 1))


def link_star_ratio(n: int, r: int, table=STAR_TABLE):
    with mp.workdps(RATIO_DPS):
        return mp.mpf(link_star_count_iterated(n, r, table)) / link_star_bound(n, r)


def bit_complexity_bounds(n: int, r: int):
    """Reference magnitudes r log2(2^(n-1) n) and r log2(n! n^n / ln2^(n-1)) for n+1 processes."""
    with mp.workdps(RATIO_DPS):
        lower = r * mp.log(mp.mpf(2 ** (n - 1) * n) if n > 0 else 1, 2)
        upper = mp.log(link_star_bound(n, r), 2) if n > 0 else mp.mpf(0)
        return lower, upper

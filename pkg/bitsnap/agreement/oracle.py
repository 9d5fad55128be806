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

"""Brute-force search for next-state rules that make the two-bit protocol a valid approximate agreement."""

from __future__ import annotations

import logging
from itertools import product
from typing import Dict, List, Tuple

from bitsnap.agreement.protocol import (CASES, AAParams, AgreementPolicy, agreement_check, endpoint_check,
                                        path_check, simulate_agreement, validity_check)
from bitsnap.errors import AgreementError

logger = logging.getLogger(__name__)

# candidate values of s' - 3s
OFFSETS = (-1, 0, 1, 2)
TABLE_KEYS = tuple((i, case) for i in (0, 1) for case in CASES)


def all_transition_tables():
    for values in product(OFFSETS, repeat=len(TABLE_KEYS)):
        yield dict(zip(TABLE_KEYS, values))


def table_is_valid(table: Dict[Tuple[int, str], int], max_rounds: int) -> bool:
    for rounds in range(1, max_rounds + 1):
        params = AAParams(rounds)
        policy = AgreementPolicy(table)
        try:
            pc = simulate_agreement(rounds, policy)
            checks = [path_check(pc, params), endpoint_check(pc, params), agreement_check(pc, params),
                      validity_check(pc, params, AgreementPolicy(table))]
        except AgreementError:
            return False
        if not all(check.passed for check in checks):
            return False
    return True


def search_transition_tables(max_rounds: int = 3) -> List[Dict[Tuple[int, str], int]]:
    """Every table (process, case) -> s' - 3s that passes the path, endpoint, agreement and validity checks
    for each round count up to ``max_rounds``."""
    if max_rounds < 1:
        raise ValueError("max_rounds must be at least 1, got %d" % max_rounds)
    survivors = [table for table in all_transition_tables() if table_is_valid(table, max_rounds)]
    logger.debug("%d of %d transition tables survive %d rounds", len(survivors), len(OFFSETS) ** len(TABLE_KEYS),
                 max_rounds)
    return survivors

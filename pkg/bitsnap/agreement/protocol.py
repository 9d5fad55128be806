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

"""Two-process approximate agreement writing two bits per round.

Each process keeps an integer ``s``, writes only its parity, and after r rounds decides (2s + i) / 3^r.
Every round triples the protocol complex, a path from (0, p0) to ((3^r - 1) / 2, p1), and keeps it a path.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

import networkx as nx

from bitsnap.command_line.defaults import ConsoleDefaults
from bitsnap.complex.chromatic_complex import ChromaticComplex
from bitsnap.distinguishability.encoding import Encoding
from bitsnap.errors import AgreementError
from bitsnap.protocol.isomorphism import chromatic_iso
from bitsnap.protocol.schedules import BOTTOM, View
from bitsnap.protocol.simulator import ExecutionTracer, ProtocolComplex, biis_round
from bitsnap.reporting.status import CheckResult
from bitsnap.subdivision.chromatic import iterate_subdivide
from bitsnap.template import TemplateRenderer

logger = logging.getLogger(__name__)

SOLO = "solo"
SAME = "same"
OFFSET = "offset"
CASES = (SOLO, SAME, OFFSET)

# (process, case) -> s' - 3s
TRANSITIONS: Dict[Tuple[int, str], int] = {
    (0, SOLO): 0, (1, SOLO): 1,
    (0, SAME): 1, (1, SAME): 0,
    (0, OFFSET): -1, (1, OFFSET): 2,
}

WIRE_ALPHABET = frozenset([BOTTOM, 1, 2])


@dataclass(frozen=True)
class AAState(object):
    i: int
    s: int

    def __post_init__(self):
        if self.i not in (0, 1):
            raise ValueError("process index must be 0 or 1, got %r" % self.i)
        if self.s < 0:
            raise ValueError("state must be non-negative, got %d" % self.s)

    @property
    def color(self) -> int:
        return self.i

    @property
    def key(self) -> str:
        return "(%d,p%d)" % (self.s, self.i)

    @property
    def id(self) -> str:
        return self.key

    @property
    def label(self) -> int:
        return self.s

    def __repr__(self):
        return "AAState%s" % self.key


@dataclass(frozen=True)
class AAParams(object):
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("approximate agreement needs at least one round, got %d" % self.r)

    @property
    def eps_edges(self) -> int:
        return 3 ** self.r

    @property
    def precision(self) -> Fraction:
        return Fraction(1, self.eps_edges)

    @property
    def last_state(self) -> int:
        return (self.eps_edges - 1) // 2


def aa_encode(s) -> int:
    """2 for even states, 1 for odd ones."""
    s = getattr(s, "s", s)
    if s < 0:
        raise ValueError("state must be non-negative, got %d" % s)
    return 2 - s % 2


def transition_case(m, s: int) -> str:
    if m is BOTTOM:
        return SOLO
    return SAME if m == aa_encode(s) else OFFSET


def aa_next_state(i: int, m, s: int) -> int:
    """Next state of process ``i`` at state ``s`` after reading ``m`` (a code or BOTTOM) from its partner."""
    case = transition_case(m, s)
    if case == OFFSET and i == 0 and s == 0:
        raise AgreementError("p0 at state 0 cannot read a partner of the other parity")
    return 3 * s + TRANSITIONS[(i, case)]


def aa_decide(i: int, s: int, params: AAParams) -> Fraction:
    return Fraction(2 * s + i, params.eps_edges)


def aa_input_complex() -> ChromaticComplex:
    return ChromaticComplex([[AAState(0, 0), AAState(1, 0)]], processes=2, name="I")


def aa_encoding(pc: ChromaticComplex) -> Encoding:
    return Encoding({v: aa_encode(v.s) for v in pc.vertices})


class AgreementPolicy(object):
    """Next-state rule for the bounded simulator; ``table`` maps (process, case) to s' - 3s.

    Every symbol read from the partner's cell is kept in ``symbols``.
    """

    def __init__(self, table: Optional[Dict[Tuple[int, str], int]] = None):
        self.table = table
        self.symbols = set()

    def next_state(self, vertex: AAState, codes: View, pc, encoding) -> AAState:
        m = codes.get(1 - vertex.i)
        self.symbols.add(m)
        self.symbols.add(codes.get(vertex.i))
        if self.table is None:
            return AAState(vertex.i, aa_next_state(vertex.i, m, vertex.s))
        s = 3 * vertex.s + self.table[(vertex.i, transition_case(m, vertex.s))]
        if s < 0:
            raise AgreementError("transition table drives p%d below zero from state %d" % (vertex.i, vertex.s))
        return AAState(vertex.i, s)


def simulate_agreement(rounds: int, policy: Optional[AgreementPolicy] = None,
                       tracer: Optional[ExecutionTracer] = None,
                       max_facets: Optional[int] = ConsoleDefaults.MAX_FACETS) -> ProtocolComplex:
    policy = policy if policy is not None else AgreementPolicy()
    pc = ProtocolComplex.from_complex(aa_input_complex())
    for _ in range(rounds):
        pc = biis_round(pc, aa_encoding(pc), decode_policy=policy, tracer=tracer, max_facets=max_facets)
    return pc


def _edges(pc: ChromaticComplex):
    """Facets as (p0 state, p1 state) pairs; None if some facet is not an edge."""
    edges = []
    for facet in pc.facets:
        if len(facet) != 2:
            return None
        first, second = sorted(facet, key=lambda v: v.i)
        edges.append((first, second))
    return edges


def path_check(pc: ChromaticComplex, params: AAParams) -> CheckResult:
    name = "path of %d edges" % params.eps_edges
    edges = _edges(pc)
    if edges is None:
        return CheckResult(name, False, "some facet is not an edge")
    graph = nx.Graph(edges)
    if len(edges) != params.eps_edges:
        return CheckResult(name, False, "%d edges" % len(edges))
    if not nx.is_connected(graph) or graph.number_of_edges() != graph.number_of_nodes() - 1:
        return CheckResult(name, False, "not a tree")
    branching = [v for v, d in graph.degree() if d > 2]
    if branching:
        return CheckResult(name, False, "%s has degree %d" % (branching[0].key, graph.degree(branching[0])))
    return CheckResult(name, True)


def endpoint_check(pc: ChromaticComplex, params: AAParams) -> CheckResult:
    name = "endpoints (0,p0) and (%d,p1)" % params.last_state
    counts = {}
    for facet in pc.facets:
        for v in facet:
            counts[v] = counts.get(v, 0) + 1
    ends = sorted((v for v, d in counts.items() if d == 1), key=lambda v: (v.i, v.s))
    expected = [AAState(0, 0), AAState(1, params.last_state)]
    return CheckResult(name, ends == expected, "found %s" % ", ".join(v.key for v in ends))


def agreement_check(pc: ChromaticComplex, params: AAParams) -> CheckResult:
    name = "adjacent decisions within 1/%d" % params.eps_edges
    for a, b in _edges(pc) or []:
        gap = abs(aa_decide(a.i, a.s, params) - aa_decide(b.i, b.s, params))
        if gap > params.precision:
            return CheckResult(name, False, "%s and %s decide %s apart" % (a.key, b.key, gap))
    return CheckResult(name, _edges(pc) is not None)


def validity_check(pc: ChromaticComplex, params: AAParams, policy: Optional[AgreementPolicy] = None) -> CheckResult:
    name = "solo runs decide 0 and 1"
    policy = policy if policy is not None else AgreementPolicy(table=None)
    decided = []
    for i in (0, 1):
        state = AAState(i, 0)
        for _ in range(params.r):
            state = policy.next_state(state, View({i: aa_encode(state.s)}), pc, None)
        if state not in pc.vertices:
            return CheckResult(name, False, "solo state %s of p%d is missing" % (state.key, i))
        decided.append(aa_decide(i, state.s, params))
    return CheckResult(name, decided == [0, 1], "solo decisions %s" % ", ".join(str(d) for d in decided))


def alphabet_check(symbols) -> CheckResult:
    observed = sorted(symbols, key=lambda m: -1 if m is BOTTOM else m)
    return CheckResult("wire alphabet within {⊥,1,2}", set(symbols) <= WIRE_ALPHABET,
                       "observed %s" % ", ".join(str(m) for m in observed))


def adjacency_check(pc: ChromaticComplex) -> CheckResult:
    name = "p0 state minus p1 state in {0,1} on every edge"
    for a, b in _edges(pc) or []:
        if a.s - b.s not in (0, 1):
            return CheckResult(name, False, "edge %s %s" % (a.key, b.key))
    return CheckResult(name, _edges(pc) is not None)


def isomorphism_check(pc: ChromaticComplex, params: AAParams, max_facets: Optional[int]) -> CheckResult:
    subdivided = iterate_subdivide(aa_input_complex(), params.r, max_facets=max_facets)
    found = chromatic_iso(pc, subdivided) is not None
    return CheckResult("isomorphic to Ch^%d of the edge" % params.r, found)


class AgreementReport(TemplateRenderer):

    def __init__(self, params: AAParams, complex: ChromaticComplex, checks, trace=None):
        self.params = params
        self.complex = complex
        self.checks = list(checks)
        self.trace = list(trace or [])

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def decisions(self):
        """(vertex, decision) along the path from (0,p0)."""
        graph = nx.Graph(_edges(self.complex) or [])
        start = AAState(0, 0)
        if start not in graph:
            return []
        order = [start] + [w for _, w in nx.dfs_edges(graph, start)]
        return [(v, aa_decide(v.i, v.s, self.params)) for v in order]

    def to_text(self) -> str:
        return self.render("agreement_report.txt", checks=self.checks, trace=self.trace)

    def to_json(self):
        return {"rounds": self.params.r, "eps_edges": self.params.eps_edges, "passed": self.passed,
                "checks": self.checks}


def run_agreement(rounds: int, check_isomorphism: bool = True, tracer: Optional[ExecutionTracer] = None,
                  max_facets: Optional[int] = ConsoleDefaults.MAX_FACETS) -> AgreementReport:
    params = AAParams(rounds)
    policy = AgreementPolicy()
    pc = simulate_agreement(rounds, policy, tracer=tracer, max_facets=max_facets)
    checks = [
        path_check(pc, params),
        endpoint_check(pc, params),
        agreement_check(pc, params),
        validity_check(pc, params),
        alphabet_check(policy.symbols),
        adjacency_check(pc),
    ]
    if check_isomorphism:
        checks.append(isomorphism_check(pc, params, max_facets))
    for check in checks:
        logger.debug("%r %s", check, check.detail)
    return AgreementReport(params, pc, checks, trace=tracer.lines if tracer is not None else None)

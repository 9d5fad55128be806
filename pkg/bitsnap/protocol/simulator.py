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

"""Exhaustive execution of one-shot immediate snapshot layers over every face of a complex.

A round maps a complex of current states to the complex of states reachable after one more layer: every
face of the current complex participates, under every schedule of its processes, and processes that end
with equal states share a vertex.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, List, Optional, Union

from bitsnap.command_line.defaults import ConsoleDefaults
from bitsnap.complex.chromatic_complex import ChromaticComplex
from bitsnap.complex.simplex import Simplex, vertex_sort_key
from bitsnap.distinguishability.encoding import Encoding
from bitsnap.errors import ForeignVertexError, IndistinguishabilityFault, ResourceLimitError
from bitsnap.protocol.schedules import BOTTOM, Schedule, View, enumerate_schedules, run_is_layer
from bitsnap.subdivision.chromatic import SubdivVertex, estimate_facets

logger = logging.getLogger(__name__)

FULL_INFORMATION = "full"
BOUNDED = "bounded"


@dataclass(frozen=True)
class ProcessState(object):
    """Local state of ``process`` after ``round`` layers: what it saw in its last snapshot.

    ``view`` always holds the process's own previous state; identical (process, round, view) are one vertex.
    """
    process: int
    round: int
    view: View

    @property
    def color(self) -> int:
        return self.process

    @cached_property
    def key(self) -> str:
        return "p%d@%d%r" % (self.process, self.round, self.view)

    @property
    def id(self) -> str:
        return self.key

    @property
    def label(self) -> str:
        return self.key

    def __repr__(self):
        return "ProcessState(%s)" % self.key


@dataclass(frozen=True)
class WrittenCode(object):
    """A code read from ``process``'s cell that could not be decoded into a unique state."""
    process: int
    code: int

    @property
    def key(self) -> str:
        return "code(p%d=%d)" % (self.process, self.code)

    def __repr__(self):
        return self.key


class ProtocolComplex(ChromaticComplex):
    """Complex of reachable states after ``round`` layers.

    :param faults: witnesses (s, t, w) of every ambiguous decode met while building it
    """

    def __init__(self, facets=(), processes=None, name=None, round: int = 0, faults=None):
        super(ProtocolComplex, self).__init__(facets, processes=processes, name=name)
        self.round = round
        self.faults = list(faults or [])

    @classmethod
    def from_complex(cls, c: ChromaticComplex) -> ProtocolComplex:
        if isinstance(c, ProtocolComplex):
            return c
        return cls(c.facets, processes=c.processes, name=c.name, round=0)


class ExecutionTracer(object):
    """Collects one line per process per execution: ``(round, face, schedule, process -> view)``."""

    def __init__(self, sink: Optional[Callable[[str], None]] = None):
        self.lines: List[str] = []
        self.sink = sink

    def record(self, layer: int, face: Simplex, schedule: Schedule, process: int, view: View):
        line = "(%d, [%s], %s, p%d -> %r)" % (layer, ", ".join(face.keys()), schedule, process, view)
        self.lines.append(line)
        if self.sink is not None:
            self.sink(line)


class DecodeAgainstComplex(object):
    """Turns each read code back into the unique same-colored neighbor in the current complex that writes it.

    With ``strict`` an ambiguous code raises IndistinguishabilityFault; otherwise the raw code is kept in the
    view and the witness is appended to ``faults``.
    """

    def __init__(self, strict: bool = False):
        self.strict = strict
        self.faults = []

    def decode(self, vertex, process: int, code: int, pc: ChromaticComplex, encoding: Encoding):
        candidates = sorted((w for w in pc.neighbors(vertex) if w.color == process and encoding[w] == code),
                            key=vertex_sort_key)
        if len(candidates) == 1:
            return candidates[0]
        if not candidates:
            raise ForeignVertexError("no neighbor of %s colored %d writes code %d" % (vertex.key, process, code))
        witness = (vertex, candidates[0], candidates[1])
        if self.strict:
            raise IndistinguishabilityFault(witness)
        if witness not in self.faults:
            self.faults.append(witness)
        return WrittenCode(process, code)

    def next_state(self, vertex, codes: View, pc: ChromaticComplex, encoding: Encoding):
        seen = {vertex.color: vertex}
        for process, code in codes.items():
            if process != vertex.color:
                seen[process] = self.decode(vertex, process, code, pc, encoding)
        return ProcessState(vertex.color, getattr(pc, "round", 0) + 1, View(seen))


def _check_cap(pc: ChromaticComplex, max_facets: Optional[int]):
    if max_facets is not None and estimate_facets(pc) > max_facets:
        raise ResourceLimitError("a round on %r would exceed the cap of %d facets" % (pc, max_facets))


def _run_faces(pc: ChromaticComplex, execute, threads: int) -> List[Simplex]:
    faces = [face for face in pc.simplices() if len(face) > 0]
    if threads > 1 and len(faces) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            pieces = list(pool.map(execute, faces))
    else:
        pieces = [execute(face) for face in faces]
    return [simplex for piece in pieces for simplex in piece]


def full_info_round(pc: ChromaticComplex, tracer: Optional[ExecutionTracer] = None,
                    max_facets: Optional[int] = ConsoleDefaults.MAX_FACETS, threads: int = 1) -> ProtocolComplex:
    """Every process writes its whole state and its next state is its snapshot."""
    _check_cap(pc, max_facets)
    next_round = getattr(pc, "round", 0) + 1

    def execute(face: Simplex) -> List[Simplex]:
        by_process = {v.color: v for v in face}
        facets = []
        for schedule in enumerate_schedules(by_process):
            views = run_is_layer(by_process, schedule)
            if tracer is not None:
                for p in sorted(views):
                    tracer.record(next_round, face, schedule, p, views[p])
            facets.append(Simplex(ProcessState(p, next_round, view) for p, view in views.items()))
        return facets

    result = ProtocolComplex(_run_faces(pc, execute, threads), processes=pc.processes,
                             name="Xi^%d" % next_round, round=next_round)
    logger.debug("Full-information round %d: %d facets, %d vertices", next_round, len(result.facets),
                 len(result.vertices))
    return result


def biis_round(pc: ChromaticComplex, encoding: Encoding, decode_policy=None, strict: bool = False,
               tracer: Optional[ExecutionTracer] = None, max_facets: Optional[int] = ConsoleDefaults.MAX_FACETS,
               threads: int = 1) -> ProtocolComplex:
    """Every process writes ``encoding`` of its state and builds its next state with ``decode_policy``.

    A policy is any object with ``next_state(vertex, codes, pc, encoding)``; the default decodes against
    ``pc`` itself. Ambiguous decodes end up in the result's ``faults``.
    """
    encoding.check_total(pc)
    _check_cap(pc, max_facets)
    policy = decode_policy if decode_policy is not None else DecodeAgainstComplex(strict=strict)
    next_round = getattr(pc, "round", 0) + 1

    def execute(face: Simplex) -> List[Simplex]:
        by_process = {v.color: v for v in face}
        written = {p: encoding[v] for p, v in by_process.items()}
        facets = []
        for schedule in enumerate_schedules(by_process):
            views = run_is_layer(written, schedule)
            if tracer is not None:
                for p in sorted(views):
                    tracer.record(next_round, face, schedule, p, views[p])
            facets.append(Simplex(policy.next_state(by_process[p], views[p], pc, encoding) for p in views))
        return facets

    facets = _run_faces(pc, execute, threads)
    faults = sorted(set(getattr(policy, "faults", [])), key=lambda w: [v.key for v in w])
    result = ProtocolComplex(facets, processes=pc.processes, name="Xi_b^%d" % next_round, round=next_round,
                             faults=faults)
    if faults:
        logger.warning("Round %d met %d ambiguous decodes, first in the link of %s", next_round, len(faults),
                       faults[0][0].key)
    logger.debug("Bounded round %d: %d facets, %d vertices", next_round, len(result.facets), len(result.vertices))
    return result


def subdivision_image(state, memo: Optional[dict] = None) -> Union[SubdivVertex, object]:
    """The vertex of the iterated chromatic subdivision that a full-information state stands for.

    States of round 0 are input vertices and map to themselves. ``memo`` shares images between calls that
    walk the same states, as ``pull_back`` does; it lives only as long as the caller keeps it.
    """
    if isinstance(state, WrittenCode):
        raise ForeignVertexError("%s holds an undecoded code and stands for no subdivision vertex" % state.key)
    if not isinstance(state, ProcessState):
        return state
    if memo is None:
        memo = {}
    image = memo.get(state)
    if image is None:
        image = SubdivVertex(state.process, Simplex(subdivision_image(v, memo) for v in state.view.values()))
        memo[state] = image
    return image


def pull_back(encoding: Encoding, pc: ChromaticComplex) -> Encoding:
    """Read an encoding of Ch^r vertices as an encoding of the protocol states standing for them."""
    memo = {}
    return Encoding({v: encoding[subdivision_image(v, memo)] for v in pc.vertices})


def iterate_protocol(c: ChromaticComplex, rounds: int, mode: str = FULL_INFORMATION, schedule=None,
                     strict: bool = True, tracer: Optional[ExecutionTracer] = None,
                     max_facets: Optional[int] = ConsoleDefaults.MAX_FACETS, threads: int = 1) -> ProtocolComplex:
    """Xi^r(c), or Xi_b^r(c) when ``mode`` is bounded and ``schedule`` lists an encoding of Ch^i(c) per round i."""
    if rounds < 0:
        raise ValueError("rounds must be non-negative, got %d" % rounds)
    if mode not in (FULL_INFORMATION, BOUNDED):
        raise ValueError("unknown protocol mode %s" % mode)
    if mode == BOUNDED:
        encodings = getattr(schedule, "encodings", schedule)
        if encodings is None or len(encodings) < rounds:
            raise ValueError("bounded mode needs an encoding for each of the %d rounds" % rounds)
    pc = ProtocolComplex.from_complex(c)
    faults = []
    for index in range(rounds):
        if mode == FULL_INFORMATION:
            pc = full_info_round(pc, tracer=tracer, max_facets=max_facets, threads=threads)
        else:
            encoding = pull_back(encodings[index], pc)
            pc = biis_round(pc, encoding, strict=strict, tracer=tracer, max_facets=max_facets, threads=threads)
            faults.extend(pc.faults)
            if pc.faults and index + 1 < rounds:
                # undecoded states have no counterpart in the next round's encoding
                logger.warning("Stopping after round %d of %d: ambiguous decodes", index + 1, rounds)
                break
    pc.faults = faults
    return pc


__all__ = ["BOTTOM", "ProcessState", "WrittenCode", "ProtocolComplex", "ExecutionTracer", "DecodeAgainstComplex",
           "full_info_round", "biis_round", "subdivision_image", "pull_back", "iterate_protocol"]

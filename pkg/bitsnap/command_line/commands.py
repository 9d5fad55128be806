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

"""One function per subcommand. Each writes its result to ``out`` and returns the exit code."""

from __future__ import print_function

import logging
import sys

import mpmath as mp
import yaml

from bitsnap.agreement.protocol import run_agreement
from bitsnap.command_line.parse_args import RunConfig
from bitsnap.complex.complex_file import dump_codes, dump_complex, load_complex, parse_encoding, parse_schedule
from bitsnap.distinguishability.encoding import Encoding
from bitsnap.distinguishability.graphs import indist_graph
from bitsnap.distinguishability.schedule import BOUNDS_HEADER, synth_encoding_schedule
from bitsnap.fvector.bounds import DISPLAY_DIGITS, RATIO_HEADER, bit_complexity_bounds, bounding_ratio_table
from bitsnap.fvector.recurrences import fubini, fvec_iterated
from bitsnap.protocol.equivalence import encoding_equivalence_check, max_degree_vertex
from bitsnap.protocol.isomorphism import chromatic_iso
from bitsnap.protocol.simulator import BOUNDED, FULL_INFORMATION, ExecutionTracer, iterate_protocol
from bitsnap.reporting.reporter import JSONReporter, make_reporter
from bitsnap.reporting.status import CheckResult
from bitsnap.subdivision.chromatic import iterate_subdivide
from bitsnap.subdivision.partitions import ordered_bell

logger = logging.getLogger(__name__)

CHECK_HEADER = ("check", "status", "detail")
VERDICT_HEADER = ("verdict", "detail")


def _require_rounds(rounds, minimum):
    if rounds is None or rounds < minimum:
        raise ValueError("--rounds must be at least %d, got %s" % (minimum, rounds))


def _subdivided(config: RunConfig, c, rounds):
    return iterate_subdivide(c, rounds, max_facets=config.max_facets, threads=config.threads)


def _emit(config: RunConfig, out, header, rows, document=None):
    make_reporter(config.output_format, header, rows, document=document, stream=out).report()


def _write_yaml(document, path, out):
    if path is None:
        yaml.safe_dump(document, out, default_flow_style=None, sort_keys=False)
    else:
        with open(path, "w") as fp:
            yaml.safe_dump(document, fp, default_flow_style=None, sort_keys=False)
        logger.info("Wrote %s", path)


def subdivide(config: RunConfig, out=sys.stdout) -> int:
    _require_rounds(config["rounds"], 0)
    result = _subdivided(config, load_complex(config["input"]), config["rounds"])
    if config.output_format == "json" and config["output"] is None:
        JSONReporter([], [], document=result, stream=out).report()
    elif config["output"] is None:
        dump_complex(result, out)
    else:
        with open(config["output"], "w") as fp:
            dump_complex(result, fp)
        logger.info("Wrote %r to %s", result, config["output"])
    return 0


def fvector(config: RunConfig, out=sys.stdout) -> int:
    _require_rounds(config["rounds"], 0)
    c = load_complex(config["input"])
    mode = config["mode"]
    counts = {}
    if mode in ("recurrence", "both"):
        counts["recurrence"] = fvec_iterated(c.f_vector(), config["rounds"])
    if mode in ("direct", "both"):
        counts["direct"] = _subdivided(config, c, config["rounds"]).f_vector()
    rows = [[name, k, f.f(k)] for name, f in counts.items() for k in range(-1, f.dimension + 1)]
    matched = len(set(counts.values())) == 1
    if mode == "both":
        rows.append(["match", "", str(matched).lower()])
    _emit(config, out, ("mode", "k", "f_k"), rows, document={"f_vectors": counts, "match": matched})
    if not matched:
        logger.error("Recurrence gives %r but the subdivision has %r", counts["recurrence"], counts["direct"])
        return 1
    return 0


def indist_graph_command(config: RunConfig, out=sys.stdout) -> int:
    _require_rounds(config["rounds"], 0)
    c = _subdivided(config, load_complex(config["input"]), config["rounds"])
    graph = indist_graph(c, config["color"])
    edges = sorted(sorted((u.key, w.key)) for u, w in graph.edges())
    _emit(config, out, ("u", "v"), edges, document=graph)
    return 0


def encode(config: RunConfig, out=sys.stdout) -> int:
    _require_rounds(config["rounds"], 1)
    c = load_complex(config["input"])
    schedule = synth_encoding_schedule(c, config["rounds"], max_facets=config.max_facets,
                                       order_policy=config["order_policy"], exact=config["exact"],
                                       node_limit=config.exact_node_limit, threads=config.threads)
    _emit(config, out, BOUNDS_HEADER, [row.as_row() for row in schedule.rows], document=schedule)
    if config.output_format == "table":
        if schedule.truncated:
            print("schedule truncated after %d of %d rounds" % (len(schedule), config["rounds"]), file=out)
        if c.dimension > 0:
            lower, upper = bit_complexity_bounds(c.dimension, len(schedule))
            print("reference bits over %d rounds: lower %s, upper %s" % (
                len(schedule), mp.nstr(lower, DISPLAY_DIGITS), mp.nstr(upper, DISPLAY_DIGITS)), file=out)
    if config["output"] is not None:
        _write_yaml({"rounds": [{"codes": dump_codes(e.codes)} for e in schedule.encodings]}, config["output"], out)
    return 0


def verify(config: RunConfig, out=sys.stdout) -> int:
    c = load_complex(config["input"])
    with open(config["encoding"]) as fp:
        encoding = Encoding(parse_encoding(fp.read(), c, source=config["encoding"]))
    report = encoding_equivalence_check(c, encoding, max_facets=config.max_facets)
    checks = [
        CheckResult("distinguishable", report.distinguishable, report.verdict.describe()),
        CheckResult("proper coloring of every indistinguishability graph", report.proper_coloring),
        CheckResult("bounded round isomorphic to Ch", report.isomorphic,
                    "largest degree %d, Ch has %d" % (report.degree, report.expected_degree)),
        CheckResult("bits", True, "%d codes, %d bits" % (encoding.image_size, encoding.bits)),
    ]
    _emit(config, out, CHECK_HEADER, [check.as_row() for check in checks], document=report)
    return 0


def _verdict_rows(mapping, pc, expected):
    detail = "%d facets against %d" % (len(pc.facets), len(expected.facets))
    rows = [["ISO" if mapping is not None else "NOT-ISO", detail]]
    if mapping is None:
        vertex, degree = max_degree_vertex(pc)
        _, expected_degree = max_degree_vertex(expected)
        if vertex is not None and degree != expected_degree:
            rows.append(["witness", "%s has degree %d, Ch has at most %d" % (vertex.key, degree, expected_degree)])
    for s, t, w in getattr(pc, "faults", []):
        rows.append(["fault", "%s and %s share a code in the link of %s" % (t.key, w.key, s.key)])
    return rows


def simulate(config: RunConfig, out=sys.stdout) -> int:
    _require_rounds(config["rounds"], 0)
    rounds = config["rounds"]
    c = load_complex(config["input"])
    tracer = ExecutionTracer() if config["trace"] else None
    if config["bounded"] is None:
        pc = iterate_protocol(c, rounds, FULL_INFORMATION, tracer=tracer, max_facets=config.max_facets,
                              threads=config.threads)
    else:
        complexes = [_subdivided(config, c, r) for r in range(rounds)]
        with open(config["bounded"]) as fp:
            codes = parse_schedule(fp.read(), complexes, source=config["bounded"])
        pc = iterate_protocol(c, rounds, BOUNDED, schedule=[Encoding(e) for e in codes], strict=False,
                              tracer=tracer, max_facets=config.max_facets, threads=config.threads)
    expected = _subdivided(config, c, rounds)
    mapping = chromatic_iso(pc, expected)
    rows = _verdict_rows(mapping, pc, expected)
    trace = tracer.lines if tracer is not None else []
    _emit(config, out, VERDICT_HEADER, rows,
          document={"isomorphic": mapping is not None, "rows": rows, "trace": trace})
    if trace and config.output_format != "json":
        stream = out if config.output_format == "table" else sys.stderr
        for line in trace:
            print(line, file=stream)
    return 0


def iso(config: RunConfig, out=sys.stdout) -> int:
    first, second = load_complex(config["first"]), load_complex(config["second"])
    mapping = chromatic_iso(first, second)
    detail = "f-vectors %r and %r" % (first.f_vector(), second.f_vector())
    pairs = {v.key: w.key for v, w in mapping.items()} if mapping is not None else None
    _emit(config, out, VERDICT_HEADER, [["ISO" if mapping is not None else "NOT-ISO", detail]],
          document={"isomorphic": mapping is not None, "mapping": pairs})
    return 0


def agree(config: RunConfig, out=sys.stdout) -> int:
    _require_rounds(config["rounds"], 1)
    tracer = ExecutionTracer() if config["trace"] else None
    report = run_agreement(config["rounds"], tracer=tracer, max_facets=config.max_facets)
    if config.output_format == "table":
        out.write(report.to_text())
    else:
        _emit(config, out, CHECK_HEADER, [check.as_row() for check in report.checks], document=report)
    return 0 if report.passed else 1


def ratios(config: RunConfig, out=sys.stdout) -> int:
    rows = bounding_ratio_table(config["k"], range(config["n_max"] + 1))
    _emit(config, out, RATIO_HEADER, [row.as_row() for row in rows], document=rows)
    return 0


def fubini_command(config: RunConfig, out=sys.stdout) -> int:
    rows = [[n, ordered_bell(n), fubini(n)] for n in range(config["n_max"] + 1)]
    _emit(config, out, ("n", "fubini", "T"), rows)
    mismatched = [row for row in rows if row[1] != row[2]]
    if mismatched:
        logger.error("Open-star recurrence disagrees with the ordered Bell numbers at n=%d", mismatched[0][0])
        return 1
    return 0


COMMANDS = {
    "subdivide": subdivide,
    "fvector": fvector,
    "indist-graph": indist_graph_command,
    "encode": encode,
    "verify": verify,
    "simulate": simulate,
    "iso": iso,
    "agree": agree,
    "ratios": ratios,
    "fubini": fubini_command,
}

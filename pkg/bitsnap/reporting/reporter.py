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

from __future__ import print_function

import csv
import io
import json
import sys

from bitsnap.json_serializable import BitsnapJSONEncoder


def format_table(header, rows):
    """Left-aligned columns separated by two spaces, padded to the widest cell."""
    cells = [[str(x) for x in header]] + [[str(x) for x in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines)


class Reporter(object):
    def __init__(self, header, rows, document=None, stream=None):
        self.header = list(header)
        self.rows = [list(row) for row in rows]
        self.document = document
        self.stream = stream if stream is not None else sys.stdout

    def report_string(self):
        raise NotImplementedError("method report_string must be implemented by subclasses of Reporter")

    def report(self):
        self.stream.write(self.report_string())
        self.stream.write("\n")


class TableReporter(Reporter):
    def report_string(self):
        return format_table(self.header, self.rows)


class CSVReporter(Reporter):
    def report_string(self):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.rows)
        return buffer.getvalue().rstrip("\n")


class JSONReporter(Reporter):
    """Writes ``document`` if given, otherwise the rows as objects keyed by the header."""

    def report_string(self):
        document = self.document
        if document is None:
            document = [dict(zip(self.header, row)) for row in self.rows]
        return json.dumps(document, cls=BitsnapJSONEncoder, sort_keys=True, indent=2, separators=(',', ': '))


REPORTERS = {
    "table": TableReporter,
    "csv": CSVReporter,
    "json": JSONReporter,
}


def make_reporter(output_format, header, rows, document=None, stream=None):
    try:
        reporter_class = REPORTERS[output_format]
    except KeyError:
        raise ValueError("unknown output format %s, expected one of %s" % (output_format, sorted(REPORTERS)))
    return reporter_class(header, rows, document=document, stream=stream)

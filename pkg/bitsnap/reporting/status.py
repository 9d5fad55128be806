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

class CheckStatus(object):
    def __init__(self, status):
        self._status = str(status).lower()

    def __eq__(self, other):
        return str(self).lower() == str(other).lower()

    def __hash__(self):
        return hash(self._status)

    def __str__(self):
        return self._status

    def to_json(self):
        return str(self).upper()


PASS = CheckStatus("pass")
FAIL = CheckStatus("fail")


class CheckResult(object):
    """Outcome of one named check, with a human-readable detail or counterexample."""

    def __init__(self, name, passed, detail=""):
        self.name = name
        self.status = PASS if passed else FAIL
        self.detail = detail

    @property
    def passed(self):
        return self.status == PASS

    def as_row(self):
        return [self.name, str(self.status).upper(), self.detail]

    def __repr__(self):
        return "%s: %s" % (self.name, str(self.status).upper())

    def to_json(self):
        return {"check": self.name, "status": self.status, "detail": self.detail}

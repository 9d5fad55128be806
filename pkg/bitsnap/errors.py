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


class BitsnapError(RuntimeError):
    pass


class TimeoutError(BitsnapError):
    pass


class ComplexError(BitsnapError):
    pass


class NonChromaticError(ComplexError):
    pass


class InvalidSubcomplexError(ComplexError):
    pass


class ComplexFileError(ComplexError):
    """Problem in a complex, encoding or schedule document. ``line`` is 1-based, or None if unknown."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super(ComplexFileError, self).__init__(message)
        self.line = line


class ResourceLimitError(BitsnapError):
    pass


class ForeignVertexError(BitsnapError):
    pass


class MissingTableEntryError(BitsnapError):
    pass


class PartialEncodingError(BitsnapError):
    pass


class InternalInconsistencyError(BitsnapError):
    pass


class AgreementError(BitsnapError):
    pass


class IndistinguishabilityFault(BitsnapError):
    """Two link vertices of one color share a code, so a read value cannot be decoded.

    :param witness: triple (s, t, w) where t and w are same-colored neighbors of s with equal codes
    """

    def __init__(self, witness, message=None):
        s, t, w = witness
        if message is None:
            message = "vertices %s and %s in the link of %s share a code" % (t.key, w.key, s.key)
        super(IndistinguishabilityFault, self).__init__(message)
        self.witness = witness

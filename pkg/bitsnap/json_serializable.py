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

from fractions import Fraction
from json import JSONEncoder


class BitsnapJSONEncoder(JSONEncoder):
    def default(self, obj):
        if hasattr(obj, "to_json"):
            # to_json may hand back nested objects that define to_json themselves
            return obj.to_json()
        elif isinstance(obj, Fraction):
            # exact rationals keep their exact form
            return str(obj)
        elif isinstance(obj, (set, frozenset)):
            return sorted(obj, key=str)
        else:
            return JSONEncoder.default(self, obj)

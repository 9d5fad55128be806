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

import os


class ConsoleDefaults(object):
    # Directory for project-specific bitsnap configs
    BITSNAP_DIR = ".bitsnap"

    # Default path, relative to current project directory, to the project's bitsnap config file
    PROJECT_CONFIG_FILE = os.path.join(BITSNAP_DIR, "config")

    # Default path to the user-specific config file
    USER_CONFIG_FILE = os.path.join('~', BITSNAP_DIR, 'config')

    # Refuse to build a complex with more facets than this
    MAX_FACETS = 10 ** 7

    # Exact coloring is only attempted on graphs with at most this many nodes
    EXACT_NODE_LIMIT = 20

    THREADS = 1
    SEED = 0

    OUTPUT_FORMAT = "table"
    OUTPUT_FORMATS = ("table", "csv", "json")

    SESSION_LOG_FORMATTER = '[%(levelname)s:%(asctime)s]: %(message)s'
    DEBUG_LOG_FORMATTER = '[%(levelname)-5s - %(asctime)s - %(module)s - %(funcName)s - lineno:%(lineno)s]: %(message)s'

    # Environment overrides, applied above config files and below command-line flags
    ENV_OPTIONS = {
        "BITSNAP_MAX_FACETS": "max_facets",
        "BITSNAP_EXACT_NODE_LIMIT": "exact_node_limit",
        "BITSNAP_THREADS": "threads",
        "BITSNAP_SEED": "seed",
    }

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

import random
import sys

from bitsnap.command_line.commands import COMMANDS
from bitsnap.command_line.parse_args import RunConfig, parse_args
from bitsnap.errors import BitsnapError
from bitsnap.utils.loggermaker import ConsoleLoggerMaker, close_logger


def run(config: RunConfig, out=None) -> int:
    """Run one command; failures are reported on stderr as ``<command> failed: <message>``."""
    out = out if out is not None else sys.stdout
    try:
        return COMMANDS[config.command](config, out)
    except (BitsnapError, ValueError, OSError) as e:
        print("%s failed: %s" % (config.command, e), file=sys.stderr)
        return 1


def main():
    """Bitsnap entry point. Exits with status 1 when the command fails or any of its checks fail."""
    args_dict = parse_args(sys.argv[1:])
    config = RunConfig.from_args(args_dict)

    logger = ConsoleLoggerMaker(debug=config.debug, log_file=config.log_file).logger
    for k, v in sorted(args_dict.items()):
        logger.debug("Configuration: %s=%s", k, v)

    random.seed(config.seed)
    exit_code = run(config)

    close_logger(logger)
    sys.exit(exit_code)

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

import logging
import sys

from bitsnap.command_line.defaults import ConsoleDefaults


class LoggerMaker(object):
    """This class helps ensure programmatically configured loggers are configured only once."""

    def __init__(self, logger_name):
        self.logger_name = logger_name

    @property
    def logger(self):
        """Read-only logger attribute."""
        if not hasattr(self, '_logger'):
            self._logger = logging.getLogger(self.logger_name)

        if not self.configured:
            self.configure_logger()

        return self._logger

    @property
    def configured(self):
        """True iff the named logger already has at least one handler."""
        return len(logging.getLogger(self.logger_name).handlers) > 0

    def configure_logger(self):
        raise NotImplementedError("configure_logger property must be implemented by a subclass")


class ConsoleLoggerMaker(LoggerMaker):
    """Root ``bitsnap`` logger for one command-line run; stdout stays free for tables."""

    def __init__(self, debug=False, log_file=None, stream=None):
        super(ConsoleLoggerMaker, self).__init__("bitsnap")
        self.debug = debug
        self.log_file = log_file
        self.stream = stream

    def configure_logger(self):
        if self.configured:
            return

        self._logger.setLevel(logging.DEBUG)
        self._logger.propagate = False

        ch = logging.StreamHandler(self.stream if self.stream is not None else sys.stderr)
        ch.setLevel(logging.DEBUG if self.debug else logging.INFO)
        ch.setFormatter(logging.Formatter(ConsoleDefaults.SESSION_LOG_FORMATTER))
        self._logger.addHandler(ch)

        if self.log_file is not None:
            fh = logging.FileHandler(self.log_file)
            fh.setLevel(logging.DEBUG)
            fh.setFormatter(logging.Formatter(ConsoleDefaults.DEBUG_LOG_FORMATTER))
            self._logger.addHandler(fh)


def close_logger(logger):
    """Filehandles etc are not closed automatically, so close them here"""
    if logger is not None:
        handlers = logger.handlers[:]
        for handler in handlers:
            handler.close()
            logger.removeHandler(handler)

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

import argparse
import itertools
import os
import sys
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Optional

from bitsnap.command_line.defaults import ConsoleDefaults
from bitsnap.utils.util import bitsnap_version

GLOBAL_OPTIONS = ("max_facets", "exact_node_limit", "threads", "seed", "format", "debug", "log_file",
                  "config_file", "version")


def _positive_int(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got %s" % value)
    return number


def _non_negative_int(value):
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer, got %s" % value)
    return number


# converters for the options that BITSNAP_* variables may set
ENV_CONVERTERS = {
    "max_facets": _positive_int,
    "exact_node_limit": _non_negative_int,
    "threads": _positive_int,
    "seed": int,
}


def create_global_parser(suppress=False):
    """Options accepted by every command, and the only ones allowed in config files.

    With ``suppress`` set, options left off the command line are absent from the result instead of defaulted.
    """
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--max-facets", action="store", type=_positive_int,
                        default=default(ConsoleDefaults.MAX_FACETS),
                        help="refuse to build complexes with more facets than this.")
    parser.add_argument("--exact-node-limit", action="store", type=_non_negative_int,
                        default=default(ConsoleDefaults.EXACT_NODE_LIMIT),
                        help="largest indistinguishability graph handed to the exact coloring search.")
    parser.add_argument("--threads", action="store", type=_positive_int, default=default(ConsoleDefaults.THREADS),
                        help="upper bound on worker threads used by subdivision, simulation and coloring.")
    parser.add_argument("--seed", action="store", type=int, default=default(ConsoleDefaults.SEED),
                        help="seed for anything randomized.")
    parser.add_argument("--format", action="store", choices=ConsoleDefaults.OUTPUT_FORMATS,
                        default=default(ConsoleDefaults.OUTPUT_FORMAT), help="output format.")
    parser.add_argument("--debug", action="store_true", default=default(False),
                        help="log debug output to stderr.")
    parser.add_argument("--log-file", action="store", default=default(None),
                        help="also write a debug log to this file.")
    parser.add_argument("--config-file", action="store", default=default(ConsoleDefaults.USER_CONFIG_FILE),
                        help="path to user configuration file.")
    parser.add_argument("--version", action="store_true", default=default(False), help="display version")
    return parser


def _add_rounds(parser, default=None, minimum=0):
    parser.add_argument("--rounds", "-r", action="store", type=int, required=default is None, default=default,
                        help="number of rounds (at least %d)." % minimum)


def create_bitsnap_parser():
    common = create_global_parser(suppress=True)
    parser = argparse.ArgumentParser(prog="bitsnap", parents=[common],
                                     description="Subdivide chromatic complexes, synthesize bounded encodings and "
                                                 "simulate iterated immediate snapshot protocols")
    commands = parser.add_subparsers(dest="command", metavar="command")

    subdivide = commands.add_parser("subdivide", parents=[common], help="write Ch^r of a complex")
    subdivide.add_argument("input", help="complex document")
    _add_rounds(subdivide)
    subdivide.add_argument("--output", "-o", action="store", default=None, help="write here instead of stdout.")

    fvector = commands.add_parser("fvector", parents=[common], help="f-vector of Ch^r of a complex")
    fvector.add_argument("input", help="complex document")
    _add_rounds(fvector, default=1)
    modes = fvector.add_mutually_exclusive_group()
    modes.add_argument("--recurrence", dest="mode", action="store_const", const="recurrence",
                       help="count faces from the f-vector of the input alone.")
    modes.add_argument("--direct", dest="mode", action="store_const", const="direct",
                       help="count faces of the built subdivision.")
    modes.add_argument("--both", dest="mode", action="store_const", const="both",
                       help="do both and fail if they differ (default).")
    fvector.set_defaults(mode="both")

    graph = commands.add_parser("indist-graph", parents=[common], help="edges of an indistinguishability graph")
    graph.add_argument("input", help="complex document")
    graph.add_argument("--color", "-c", action="store", type=int, required=True, help="process color.")
    _add_rounds(graph, default=0)

    encode = commands.add_parser("encode", parents=[common], help="synthesize an encoding schedule")
    encode.add_argument("input", help="complex document")
    _add_rounds(encode, minimum=1)
    encode.add_argument("--exact", action="store_true", help="color small graphs optimally.")
    encode.add_argument("--order-policy", action="store", default="largest_first",
                        choices=("largest_first", "dsatur", "canonical"), help="greedy coloring order.")
    encode.add_argument("--output", "-o", action="store", default=None, help="write the schedule document here.")

    verify = commands.add_parser("verify", parents=[common], help="check an encoding against a complex")
    verify.add_argument("input", help="complex document")
    verify.add_argument("--encoding", "-e", action="store", required=True, help="encoding document.")

    simulate = commands.add_parser("simulate", parents=[common], help="build the protocol complex after r rounds")
    simulate.add_argument("input", help="complex document")
    _add_rounds(simulate)
    simulate.add_argument("--bounded", action="store", default=None,
                          help="schedule document; run the bounded protocol with its encodings.")
    simulate.add_argument("--trace", action="store_true", help="print every execution.")

    iso = commands.add_parser("iso", parents=[common], help="decide chromatic isomorphism of two complexes")
    iso.add_argument("first", help="complex document")
    iso.add_argument("second", help="complex document")

    agree = commands.add_parser("agree", parents=[common], help="verify the two-bit approximate agreement protocol")
    _add_rounds(agree, minimum=1)
    agree.add_argument("--trace", action="store_true", help="print every execution.")

    ratios = commands.add_parser("ratios", parents=[common], help="star face counts against their bound")
    ratios.add_argument("--k", "-k", action="store", type=_non_negative_int, required=True, help="face dimension.")
    ratios.add_argument("--n-max", action="store", type=_non_negative_int, required=True, help="largest n.")

    fubini = commands.add_parser("fubini", parents=[common], help="ordered Bell numbers two ways")
    fubini.add_argument("--n-max", action="store", type=_non_negative_int, required=True, help="largest n.")

    return parser


def get_user_config_file(args):
    """Helper function to get specified (or default) user config file.
    :return Filename which is the path to the config file.
    """
    parsed, _ = create_global_parser().parse_known_args(args)
    return os.path.expanduser(parsed.config_file)


def config_file_to_args_list(config_file):
    """Parse in contents of config file, and return a list of global options.

    Skip whitespace lines and comments (lines prefixed by "#")
    """
    if config_file is None:
        raise RuntimeError("config_file is None")

    with open(config_file) as fp:
        config_lines = [line for line in fp.readlines() if (len(line.strip()) > 0 and line.lstrip()[0] != '#')]

    return list(itertools.chain(*[line.split() for line in config_lines]))


def parse_non_default_args(parser: argparse.ArgumentParser, defaults: dict, args: list) -> dict:
    """
    Parse and remove default args from a list of args, and return the dict of the parsed args.
    """
    parsed_args = vars(parser.parse_args(args))

    # remove defaults
    for key, value in defaults.items():
        if parsed_args[key] == value:
            del parsed_args[key]

    return parsed_args


def environment_args(environ, parser=None):
    """BITSNAP_* overrides, checked like the matching command-line options.

    A bad value goes through ``parser.error``, so it exits with status 2 just as a bad flag does.
    """
    parser = create_global_parser() if parser is None else parser
    parsed = {}
    for variable, option in ConsoleDefaults.ENV_OPTIONS.items():
        value = environ.get(variable, "").strip()
        if not value:
            continue
        try:
            parsed[option] = ENV_CONVERTERS[option](value)
        except (argparse.ArgumentTypeError, ValueError) as e:
            parser.error("environment variable %s: %s" % (variable, e))
    return parsed


def parse_args(args, environ=None):
    """Parse in command-line, environment and config file options.

    Command line arguments have the highest priority, then BITSNAP_* environment variables, then user configs
    specified in ~/.bitsnap/config, and finally project configs specified in <bitsnap_dir>/config.
    """
    environ = os.environ if environ is None else environ
    parser = create_bitsnap_parser()

    if len(args) == 0:
        # Show help if there are no arguments
        parser.print_help()
        sys.exit(0)

    global_parser = create_global_parser()
    defaults = vars(global_parser.parse_args([]))
    parsed_args_list = []

    project_config_file = ConsoleDefaults.PROJECT_CONFIG_FILE
    if os.path.exists(project_config_file):
        parsed_args_list.append(
            parse_non_default_args(global_parser, defaults, config_file_to_args_list(project_config_file)))

    user_config_file = get_user_config_file(args)
    if os.path.exists(user_config_file):
        parsed_args_list.append(
            parse_non_default_args(global_parser, defaults, config_file_to_args_list(user_config_file)))

    parsed_args_list.append(environment_args(environ, global_parser))

    # global options given on the command line are the only ones present here
    parsed_args_list.append(vars(parser.parse_args(args)))

    parsed_args_dict = dict(defaults)
    for parsed_args in parsed_args_list:
        parsed_args_dict.update(parsed_args)

    if parsed_args_dict["version"]:
        print(bitsnap_version())
        sys.exit(0)
    if parsed_args_dict.get("command") is None:
        parser.print_help()
        sys.exit(0)
    return parsed_args_dict


@dataclass(frozen=True)
class RunConfig(object):
    """Everything a command needs; equal configs produce identical output."""
    command: str
    max_facets: int = ConsoleDefaults.MAX_FACETS
    exact_node_limit: int = ConsoleDefaults.EXACT_NODE_LIMIT
    threads: int = ConsoleDefaults.THREADS
    seed: int = ConsoleDefaults.SEED
    output_format: str = ConsoleDefaults.OUTPUT_FORMAT
    debug: bool = False
    log_file: Optional[str] = None
    arguments: Mapping[str, object] = field(default_factory=dict)

    @classmethod
    def from_args(cls, args_dict):
        arguments = {k: v for k, v in args_dict.items() if k not in GLOBAL_OPTIONS and k != "command"}
        return cls(command=args_dict["command"], max_facets=args_dict["max_facets"],
                   exact_node_limit=args_dict["exact_node_limit"], threads=args_dict["threads"],
                   seed=args_dict["seed"], output_format=args_dict["format"], debug=args_dict["debug"],
                   log_file=args_dict["log_file"], arguments=MappingProxyType(dict(arguments)))

    def __getitem__(self, name):
        return self.arguments[name]

    def get(self, name, default=None):
        return self.arguments.get(name, default)

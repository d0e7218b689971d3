"""``conebarrel-verify``: run a named suite and print its report on stdout.

Exit status: 0 when the suite meets its expectation, 1 on any violation
(or an unexpected error), 2 on bad usage or configuration.
"""
import argparse
import os
import sys

import yaml
from loguru import logger

from .config import SampleConfig
from .errors import ConfigError, ParseError
from .report import emit_report
from .suites import run_suite, suite_names
from .utils import setup_logger

__all__ = ['make_parser', 'build_config', 'main']

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def make_parser():
    parser = argparse.ArgumentParser("conebarrel-verify")
    parser.add_argument(
        "-s", "--suite", type=str, default="all",
        help="one of: {}".format(", ".join(suite_names())),
    )
    parser.add_argument("--seed", type=int, default=None, help="base seed of every sampler")
    parser.add_argument("-n", "--samples", type=int, default=None, help="samples per law")
    parser.add_argument("--w", type=str, default=None, help="barrel radius w as p/q")
    parser.add_argument("--max-index", type=int, default=None, help="largest sampled index")
    parser.add_argument("--max-value", type=int, default=None,
                        help="largest numerator and denominator of sampled rationals")
    parser.add_argument("--max-denominator", type=int, default=None,
                        help="largest denominator, overrides --max-value")
    parser.add_argument("--workers", type=int, default=None,
                        help="law checks evaluated in parallel")
    parser.add_argument("-f", "--config", type=str, default=None,
                        help="yaml file with config overrides")
    parser.add_argument(
        "--json",
        dest="json",
        default=False,
        action="store_true",
        help="print the report as json instead of a table.",
    )
    parser.add_argument(
        "--timing",
        dest="timing",
        default=False,
        action="store_true",
        help="record wall-clock duration (reports are then no longer byte-identical).",
    )
    parser.add_argument(
        "-q", "--quiet",
        dest="quiet",
        default=False,
        action="store_true",
        help="no progress bars.",
    )
    parser.add_argument("--log-file", type=str, default=None, help="also log to this file")
    parser.add_argument("--log-level", type=str, default="INFO", help="stderr log level")
    parser.add_argument(
        "opts",
        help="Modify config options using the command-line",
        default=None,
        nargs=argparse.REMAINDER,
    )
    return parser


def build_config(args, environ=None) -> SampleConfig:
    """defaults < yaml file < environment < flags < trailing opts."""
    cfg = SampleConfig()
    if args.config:
        cfg.merge_file(args.config)
    cfg.merge_env(environ)
    flags = []
    for key, value in (('seed', args.seed), ('sample_count', args.samples), ('w', args.w),
                       ('max_index', args.max_index), ('max_value', args.max_value),
                       ('max_denominator', args.max_denominator), ('workers', args.workers)):
        if value is not None:
            flags.extend([key, value])
    if args.timing:
        flags.extend(['record_timing', True])
    cfg.merge(flags)
    cfg.merge(args.opts or [])
    cfg.quiet = args.quiet or not sys.stderr.isatty()
    return cfg.validate()


@logger.catch(default=EXIT_FAIL)
def main(argv=None, environ=None) -> int:
    args = make_parser().parse_args(argv)
    save_dir, filename = None, "verify_log.txt"
    if args.log_file:
        save_dir, filename = os.path.split(os.path.abspath(args.log_file))
    setup_logger(save_dir, filename=filename, level=args.log_level.upper())

    try:
        cfg = build_config(args, environ)
        logger.debug("config:\n{}", cfg)
        report = run_suite(args.suite, cfg)
    except (ConfigError, ParseError, OSError, yaml.YAMLError) as e:
        logger.error("{}", e)
        return EXIT_USAGE

    sys.stdout.write(emit_report(report, "json" if args.json else "text") + "\n")
    sys.stdout.flush()
    return EXIT_PASS if report.ok else EXIT_FAIL

#!/usr/bin/env python3
"""
Command-line entry point.

    python -m cli check-theorem --genus 5 --qdeg 20 --format json
    python -m cli bernoulli --n 4
    python -m cli gv-check --input classes.json --alpha a
"""
import argparse
import logging
import sys
from typing import List, Optional

from cli.commands import EXIT_USAGE, run
from cli.run_config import COMMANDS, FORMATS, RunConfig
from errors import GWDiffError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gwdiff",
        description="Exact series for the resolved-conifold GW potential and checks of its difference equations",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--genus", type=int, dest="genus_cut", help="genus cut G (default 6)")
    parser.add_argument("--qdeg", type=int, dest="q_cut", help="q-degree cut N (default 20)")
    parser.add_argument("--kdeg", type=int, dest="k_cut", help="multicover cut K (default 20)")
    parser.add_argument("--order", type=int, help="polylogarithm order s")
    parser.add_argument("--n", type=int, dest="index", help="Bernoulli index")
    parser.add_argument("--alpha", help="class label giving the shift direction for gv-check")
    parser.add_argument("--input", dest="input_path", help="GV dataset JSON (default: standard input)")
    parser.add_argument("--closed", action="store_true", default=None,
                        help="print the closed rational form of Li_s for s <= 0")
    parser.add_argument("--format", dest="output_format", choices=FORMATS)
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    overrides = vars(args)
    command = overrides.pop("command")
    overrides.pop("verbose")
    try:
        config = RunConfig.from_env(command).with_overrides(**overrides)
    except GWDiffError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    result = run(config)
    print(result.output)
    return result.status


if __name__ == "__main__":
    sys.exit(main())

import json
import logging
import sys
from dataclasses import dataclass
from typing import IO, Any, Dict, Optional

from arith.exact_arith import bernoulli, format_rational
from checks.check_report import CheckReport
from checks.difference_checker import DifferenceChecker
from cli.run_config import RunConfig
from conifold.gw_conifold import potential, sin_expansion
from errors import GWDiffError
from gv.gv_resummation import GVResummation, load_gv_dataset, load_gv_dataset_file
from polylog.polylog_series import polylog_negative_closed, polylog_series
from series.q_series import QSeries

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class CommandResult:
    status: int
    output: str


def _series_dict(series: QSeries) -> Dict[str, str]:
    return {str(n): format_rational(c) for n, c in series.items()}


def _report_result(report: CheckReport, config: RunConfig) -> CommandResult:
    output = report.to_json() if config.output_format == "json" else report.render()
    return CommandResult(EXIT_OK if report.passed else EXIT_CHECK_FAILED, output)


def _emit(config: RunConfig, payload: Any, table: str) -> CommandResult:
    if config.output_format == "json":
        return CommandResult(EXIT_OK, json.dumps(payload))
    return CommandResult(EXIT_OK, table)


def _load_dataset(config: RunConfig, stdin: Optional[IO]):
    if config.input_path:
        return load_gv_dataset_file(config.input_path)
    stream = stdin if stdin is not None else sys.stdin.buffer
    return load_gv_dataset(stream)


def _dispatch(config: RunConfig, stdin: Optional[IO]) -> CommandResult:
    command = config.command
    checker = DifferenceChecker()

    if command == "bernoulli":
        value = format_rational(bernoulli(config.index))
        return _emit(config, {"n": config.index, "bernoulli": value}, value)

    if command == "polylog":
        if config.closed:
            closed = polylog_negative_closed(-config.order)
            return _emit(config, {"order": config.order, "closed_form": str(closed.as_expr())}, closed.render())
        series = polylog_series(config.order, config.q_cut)
        return _emit(config, {"order": config.order, "coeffs": _series_dict(series)}, series.render())

    if command == "potential":
        pot = potential(config.genus_cut, config.q_cut)
        return _emit(config, pot.to_dict(), pot.render_table())

    if command == "sin-expansion":
        expansion = sin_expansion(2 * config.genus_cut - 2)
        payload = {str(e): format_rational(c) for e, c in expansion.terms()}
        return _emit(config, payload, expansion.render())

    if command == "check-identity":
        return _report_result(checker.check_generating_identity(2 * config.genus_cut), config)

    if command == "check-theorem":
        return _report_result(checker.check_theorem(config.genus_cut, config.q_cut), config)

    if command == "check-recursion":
        return _report_result(checker.check_recursion_range(config.genus_cut, config.q_cut), config)

    if command == "solve-recursion":
        solved = checker.solve_recursion(config.genus_cut, config.q_cut)
        payload = {str(g): _series_dict(s) for g, s in solved.items()}
        table = "\n".join(f"[genus {g}]\n{s.render()}" for g, s in solved.items())
        return _emit(config, payload, table)

    if command == "gv-resum":
        resummation = GVResummation(_load_dataset(config, stdin))
        result = resummation.resum_genus0(config.genus_cut, config.k_cut)
        return _emit(config, result.to_dict(), result.render())

    if command == "gv-check":
        resummation = GVResummation(_load_dataset(config, stdin))
        report = resummation.check_corollary(config.alpha, config.genus_cut, config.k_cut)
        return _report_result(report, config)

    raise GWDiffError(f"no handler for command {config.command!r}")


def run(config: RunConfig, stdin: Optional[IO] = None) -> CommandResult:
    """
    Execute one command. Exit statuses: 0 pass, 1 check failed, 2 usage or input error.
    """
    try:
        config.validate()
        return _dispatch(config, stdin)
    except GWDiffError as e:
        logger.error(f"Error running {config.command}: {e}")
        body = json.dumps({"error": str(e), "command": config.command})
        return CommandResult(EXIT_USAGE, body if config.output_format == "json" else f"❌ {e}")

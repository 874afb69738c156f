"""
.. The command-line interface

Every command reads a :py:class:`~ternary_codes.config.RunConfig` built from the
options, runs inside its budget and returns an exit code:

* ``0``: success
* ``1``: a verification or internal consistency failure
* ``2``: invalid input
* ``3``: refused by a budget cap
"""

from __future__ import annotations

__all__ = ("main",)

import csv
import io
import json
import logging
import sys
from argparse import ArgumentParser, Namespace
from collections.abc import Callable, Sequence

from typing_extensions import Any

from . import __version__
from .certificates import LemmaTag, sweep
from .code import (
    CodeSpec,
    cwe_brute,
    cwe_closed,
    parameters,
    weight_distribution_brute,
    weight_distribution_closed,
)
from .config import RunConfig
from .exceptions import (
    BudgetExceededError,
    InconsistencyError,
    LinearFunctionError,
    ParameterRangeError,
)
from .functions import Family, WeightClassFunction, make
from .matrix import (
    format_generator_matrix,
    read_generator_matrix,
    span_weight_distribution,
    write_generator_matrix,
)
from .minimality import ab_report, is_minimal_brute, is_minimal_spectral
from .utils import check_budget
from .verification import ITEMS, run_battery

logger = logging.getLogger(__name__)

Handler = Callable[[RunConfig, Namespace], int]


def main(argv: Sequence[str] | None = None) -> int:
    """Runs a command and returns its exit code."""
    parser = _make_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    try:
        config = RunConfig.from_args(args)
        with config.budget():
            return args.handler(config, args)
    except BudgetExceededError as e:
        _report(e)
        return BUDGET_REFUSED
    except InconsistencyError as e:
        _report(e)
        return FAILURE
    except (ValueError, LinearFunctionError, OSError) as e:
        _report(e)
        return INVALID_INPUT


# Commands =====================================================================


def cmd_cwe(config: RunConfig, args: Namespace) -> int:
    fn = config.function()
    cwe = cwe_closed(fn)
    if config.brute:
        if cwe_brute(fn) != cwe:
            raise InconsistencyError(
                f"{fn.label}: closed-form and enumerated enumerators differ"
            )
        logger.info("Closed-form enumerator of %s matches enumeration", fn.label)

    if config.format == "json":
        _emit_json(config, cwe.to_dict(fn))
    else:
        _emit(config, f"{fn.label}:\n{cwe.to_polynomial()}\n")
    return SUCCESS


def cmd_export_gen(config: RunConfig, args: Namespace) -> int:
    fn = config.function()
    if config.output is None:
        sys.stdout.write(format_generator_matrix(fn))
    else:
        write_generator_matrix(fn, config.output)
    return SUCCESS


def cmd_inequalities(config: RunConfig, args: Namespace) -> int:
    m_max = config.m_max or _INEQUALITIES_M_MAX
    reports = [sweep(m_max, tag) for tag in LemmaTag]

    if config.format == "json":
        _emit_json(config, [report.to_dict() for report in reports])
    else:
        lines = []
        for report in reports:
            first, last = report.m_range
            lines.append(
                f"{report.tag.value}: m = {first}..{last}, "
                f"{len(report.failures)} failures, min slack {report.min_slack}"
            )
            if report.failures:
                lines.append(f"  fails at {', '.join(map(str, report.failures))}")
        _emit(config, "\n".join(lines) + "\n")

    return SUCCESS if all(report.holds for report in reports) else FAILURE


def cmd_minimality(config: RunConfig, args: Namespace) -> int:
    fn = config.function()
    spectral = is_minimal_spectral(fn)

    brute = None
    try:
        check_budget("minimality_max_m", fn.m)
    except BudgetExceededError:
        if config.brute:
            raise
        logger.info("Skipping the covering search: %s", fn.label)
    else:
        brute = is_minimal_brute(fn)
        if brute.minimal != spectral.minimal:
            raise InconsistencyError(
                f"{fn.label}: covering search says minimal={brute.minimal}, "
                f"spectral criterion says minimal={spectral.minimal}"
            )

    ab = ab_report(weight_distribution_closed(fn))
    if config.format == "json":
        _emit_json(
            config,
            {
                **fn.to_dict(),
                "spectral": spectral.to_dict(ab),
                "brute": None if brute is None else brute.to_dict(),
            },
        )
    else:
        lines = [
            f"{fn.label}: {'minimal' if spectral.minimal else 'not minimal'}",
            f"spectral: {_describe_verdict(spectral.to_dict())}",
            "brute: "
            + ("skipped" if brute is None else _describe_verdict(brute.to_dict())),
            f"AB: {'violated' if ab.violates_ab else 'satisfied'} "
            f"(w_min = {ab.w_min}, w_max = {ab.w_max})",
        ]
        _emit(config, "\n".join(lines) + "\n")
    return SUCCESS


def cmd_params(config: RunConfig, args: Namespace) -> int:
    fn = config.function()
    spec = _parameters(config, fn)
    ab = ab_report(weight_distribution_closed(fn))

    if config.format == "json":
        _emit_json(config, {**spec.to_dict(), **ab.to_dict()})
    else:
        verdict = "violated" if ab.violates_ab else "satisfied"
        _emit(
            config,
            f"{fn.label}: {spec}\n"
            f"w_min = {ab.w_min}\n"
            f"w_max = {ab.w_max}\n"
            f"AB: {verdict} (3*w_min {'<=' if ab.violates_ab else '>'} 2*w_max)\n",
        )
    return SUCCESS


def cmd_scan(config: RunConfig, args: Namespace) -> int:
    m_max = config.m_max or _SCAN_M_MAX
    classes = (1,) if config.S is None else config.S
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(_SCAN_COLUMNS)

    for family in config.families:
        for m in range(max(config.m_min, 5), m_max + 1):
            for k in range(2, (m - 1) // 2 + 1):
                S = classes if family is Family.F else ()
                if S and max(S) > k:
                    continue
                fn = make(family, m, k, S)
                spec = parameters(fn)
                ab = ab_report(weight_distribution_closed(fn))
                writer.writerow(
                    (
                        family.value,
                        m,
                        k,
                        spec.n,
                        spec.dim,
                        spec.d,
                        ab.w_min,
                        ab.w_max,
                        str(ab.violates_ab).lower(),
                        str(is_minimal_spectral(fn).minimal).lower(),
                    )
                )
        logger.info("Scanned family %s up to m = %d", family.value, m_max)

    _emit(config, buffer.getvalue())
    return SUCCESS


def cmd_verify_paper(config: RunConfig, args: Namespace) -> int:
    ledger = run_battery(args.items)

    if config.format == "json":
        _emit_json(config, ledger.to_dict())
    else:
        _emit(config, ledger.format_table() + "\n")
    return SUCCESS if ledger.passed else FAILURE


def cmd_wdist(config: RunConfig, args: Namespace) -> int:
    if args.matrix is not None:
        header, G = read_generator_matrix(args.matrix)
        dist = span_weight_distribution(G, header.m)
        label = str(args.matrix)
        data = dist.to_dict()
    else:
        fn = config.function()
        dist = weight_distribution_closed(fn)
        if config.brute:
            if weight_distribution_brute(fn) != dist:
                raise InconsistencyError(
                    f"{fn.label}: closed-form and enumerated distributions differ"
                )
            logger.info("Closed-form distribution of %s matches enumeration", fn.label)
        label = fn.label
        data = dist.to_dict(fn)

    if config.format == "json":
        _emit_json(config, data)
    else:
        rows = "\n".join(f"{w:>8}  {count}" for w, count in dist.items())
        _emit(
            config,
            f"{label}:\n{dist.to_polynomial()}\n\n  weight  count\n{rows}\n",
        )
    return SUCCESS


# Helpers ======================================================================


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level)


def _describe_verdict(data: dict[str, Any]) -> str:
    text = "minimal" if data["minimal"] else "not minimal"
    if data.get("vacuous"):
        text += " (vacuous)"
    if data.get("witness"):
        (u, v), (u_, v_) = data["witness"]
        text += f", ({u}, #{v}) covers ({u_}, #{v_})"
    if data.get("violation"):
        violation = data["violation"]
        text += (
            f", fails at {violation['w1']}, {violation['w2']}, {violation['w3']}: "
            f"{violation['condition']}"
        )
    return text


def _emit(config: RunConfig, text: str) -> None:
    if config.output is None:
        sys.stdout.write(text)
    else:
        with open(config.output, "w", encoding="utf-8") as file:
            file.write(text)
        logger.info("Wrote %s", config.output)


def _emit_json(config: RunConfig, data: Any) -> None:
    _emit(config, json.dumps(data, indent=2) + "\n")


def _parameters(config: RunConfig, fn: WeightClassFunction) -> CodeSpec:
    """Returns :py:func:`~ternary_codes.code.parameters`, or the values read off
    the distribution for unchecked parameters outside the theorem range.
    """
    try:
        return parameters(fn)
    except ParameterRangeError:
        if not config.unchecked:
            raise
    dist = weight_distribution_closed(fn)
    return CodeSpec(
        fn, 3**fn.m - 1, fn.m + 1, dist.min_nonzero_weight, dist.max_weight
    )


def _report(error: Exception) -> None:
    logger.debug("Command failed", exc_info=True)
    print(f"{_PROG}: error: {error}", file=sys.stderr)


def _make_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress to stderr (-v: INFO, -vv: DEBUG)",
    )
    common.add_argument(
        "--config", metavar="PATH", help="JSON file of option defaults"
    )
    common.add_argument(
        "--format", choices=("json", "table"), help="Output format [table]"
    )
    common.add_argument(
        "-o", "--output", metavar="PATH", help="Output file [standard output]"
    )
    common.add_argument(
        "--jobs", type=int, metavar="N", help="Worker processes [1]"
    )
    for cap in ("brute-force-max-m", "minimality-max-m", "spectrum-max-m"):
        common.add_argument(
            f"--{cap}", type=int, metavar="M", help=f"Override the {cap} cap"
        )

    function = ArgumentParser(add_help=False)
    function.add_argument(
        "--family",
        choices=[family.value for family in Family if family is not Family.CUSTOM],
        help="Function family [g]",
    )
    function.add_argument("-m", type=int, help="Dimension [5]")
    function.add_argument("-k", type=int, help="Family parameter [2]")
    function.add_argument(
        "-S", metavar="CLASSES", help="Weight classes of family f, e.g. 1,2 [1]"
    )
    function.add_argument(
        "--unchecked",
        action="store_const",
        const=True,
        help="Accept (m, k) outside the theorem range, with a warning",
    )
    brute = ArgumentParser(add_help=False)
    brute.add_argument(
        "--brute",
        action="store_const",
        const=True,
        help="Cross-check against exhaustive enumeration",
    )

    parser = ArgumentParser(
        prog=_PROG,
        description="Minimal ternary linear codes from weight-class functions",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    subparsers = parser.add_subparsers(dest="cmd", required=True)

    def add(
        name: str, handler: Handler, summary: str, *parents: ArgumentParser
    ) -> Any:
        sub = subparsers.add_parser(
            name, parents=[common, *parents], help=summary, description=summary
        )
        sub.set_defaults(handler=handler)
        return sub

    add("params", cmd_params, "Code parameters and the AB verdict", function)
    wdist = add("wdist", cmd_wdist, "Weight distribution", function, brute)
    wdist.add_argument(
        "--matrix",
        metavar="PATH",
        help="Derive the distribution from an exported generator matrix instead",
    )
    add("cwe", cmd_cwe, "Complete weight enumerator", function, brute)
    add(
        "minimality",
        cmd_minimality,
        "Minimality by the spectral criterion and, within budget, covering search",
        function,
        brute,
    )
    verify = add("verify-paper", cmd_verify_paper, "Run the acceptance battery")
    verify.add_argument(
        "--item",
        dest="items",
        action="append",
        choices=[item.name for item in ITEMS],
        help="Run only this item (repeatable)",
    )
    add("export-gen", cmd_export_gen, "Export the generator matrix", function)
    inequalities = add(
        "inequalities", cmd_inequalities, "Certify the binomial inequalities"
    )
    inequalities.add_argument(
        "--m-max", type=int, metavar="M", help=f"Largest m [{_INEQUALITIES_M_MAX}]"
    )
    scan = add("scan", cmd_scan, "Parameters and verdicts over a grid, as CSV")
    scan.add_argument("--m-min", type=int, metavar="M", help="Smallest m [5]")
    scan.add_argument(
        "--m-max", type=int, metavar="M", help=f"Largest m [{_SCAN_M_MAX}]"
    )
    scan.add_argument(
        "--families", metavar="LIST", help="Comma-separated families [g,gbar,f]"
    )
    scan.add_argument(
        "-S", metavar="CLASSES", help="Weight classes of family f [1]"
    )

    return parser


# Variables ====================================================================

_PROG = "ternary-codes"

# Exit codes
SUCCESS = 0
FAILURE = 1
INVALID_INPUT = 2
BUDGET_REFUSED = 3

_INEQUALITIES_M_MAX = 50

_SCAN_M_MAX = 12

_SCAN_COLUMNS = (
    "family",
    "m",
    "k",
    "n",
    "dim",
    "d",
    "w_min",
    "w_max",
    "violates_ab",
    "minimal_spectral",
)

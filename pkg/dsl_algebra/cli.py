import argparse
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, Tuple

import pandas as pd
from rich.console import Console
from rich.logging import RichHandler

from dsl_algebra.algebra.harmonic import delta_w
from dsl_algebra.algebra.inertia import lie_theta, push
from dsl_algebra.algebra.lie import ihara_bracket
from dsl_algebra.algebra.series import Series
from dsl_algebra.analyzers.component_analyzer import COMPONENT_ALPHABETS, compute_component
from dsl_algebra.analyzers.report_builder import print_report, print_rich_table, summary_dataframe
from dsl_algebra.analyzers.unified_analyzer import unified_verification
from dsl_algebra.exceptions import InputFormatError, NotInertError, NotWAdmissibleError
from dsl_algebra.models.config_models import SUITES
from dsl_algebra.utils.cache import BasisCache
from dsl_algebra.utils.config_loader import load_settings
from dsl_algebra.utils.serialization import dumps, loads, series_from_dict, series_to_dict, tensor_to_dict

logger = logging.getLogger("dsl_algebra")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
APPLY_MAPS = ("push", "theta", "ihara", "delta_w")


def setup_logging(verbose: bool = False, debug: bool = False):
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    handler = RichHandler(console=Console(stderr=True), show_path=False)
    logger.handlers = [handler]
    logger.setLevel(level)
    logger.propagate = False


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", type=int, help="Largest degree a suite works in")
    common.add_argument("--cache-dir", type=str, help="Directory for cached subspaces (overrides DSL_CACHE)")
    common.add_argument("--seed", type=int, help="Seed for random checks (overrides DSL_SEED)")
    common.add_argument("--out", choices=["json", "table"], default="json", help="Output format")
    common.add_argument("--config", type=str, help="YAML file overriding the packaged defaults")
    common.add_argument("--jobs", type=int, help="Worker processes for `verify all`")
    common.add_argument("--verbose", action="store_true", help="Show progress on stderr")
    common.add_argument("--debug", action="store_true", help="Show debug information on stderr")

    parser = argparse.ArgumentParser(prog="dsl-algebra", description="Exact double shuffle and inertia computations")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", parents=[common], help="Dimension and basis of a degree component")
    compute.add_argument("object", choices=sorted(COMPONENT_ALPHABETS), help="Component to compute")
    compute.add_argument("--degree", type=int, required=True, help="Degree n >= 2")

    verify = sub.add_parser("verify", parents=[common], help="Run a verification suite")
    verify.add_argument("suite", choices=list(SUITES) + ["all"], help="Suite to run")

    apply = sub.add_parser("apply", parents=[common], help="Apply a map to a serialized series")
    apply.add_argument("map", choices=APPLY_MAPS, help="Map to apply")
    apply.add_argument("input", type=str, help="JSON file with the series, or - for stdin")
    apply.add_argument("--second", type=str, help="JSON file with the second argument of ihara")
    return parser


def _read_json(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(f"cannot read {path}: {e}") from None
    except UnicodeDecodeError as e:
        raise InputFormatError(f"{path} is not UTF-8: {e}") from None
    return loads(text)


def _apply_inputs(args) -> Tuple[Series, Optional[Series]]:
    data = _read_json(args.input)
    if args.map != "ihara":
        return series_from_dict(data), None
    if args.second:
        return series_from_dict(data), series_from_dict(_read_json(args.second))
    if isinstance(data, dict) and set(data) == {"a", "b"}:
        return series_from_dict(data["a"]), series_from_dict(data["b"])
    raise InputFormatError("ihara needs --second or an object {\"a\": ..., \"b\": ...}")


def _terms_dataframe(terms) -> pd.DataFrame:
    return pd.DataFrame([{"Term": k, "Coefficient": v} for k, v in terms.items()], columns=["Term", "Coefficient"])


def cmd_compute(args, settings) -> int:
    if args.degree < 2:
        raise InputFormatError("--degree must be at least 2")
    result = compute_component(args.object, args.degree, BasisCache(settings.cache_dir))
    if args.out == "table":
        df = pd.DataFrame(result["basis"] or None, columns=result["lyndon_words"])
        print_rich_table(df, title=f"{args.object} in degree {args.degree}: dim {result['dim']}")
    else:
        sys.stdout.write(dumps(result))
    return EXIT_OK


def cmd_verify(args, settings) -> int:
    if settings.max_degree < 2:
        raise InputFormatError("--max-degree must be at least 2")
    report, reports = unified_verification(args.suite, settings)
    if args.out == "table":
        console = Console()
        for single in reports:
            print_report(single, console=console)
        if args.suite == "all":
            print_rich_table(summary_dataframe(reports), title="Summary", console=console)
    else:
        sys.stdout.write(dumps(report.model_dump()))
    if not report.passed:
        for entry in report.failures():
            logger.warning("failed: %s (degree %s): expected %s, got %s",
                           entry.name, entry.degree, entry.expected, entry.actual)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_apply(args, settings) -> int:
    a, b = _apply_inputs(args)
    if args.map == "push":
        payload = series_to_dict(push(a))
    elif args.map == "theta":
        payload = series_to_dict(lie_theta(a))
    elif args.map == "ihara":
        payload = series_to_dict(ihara_bracket(a, b))
    else:
        payload = tensor_to_dict(delta_w(a))
    if args.out == "table":
        print_rich_table(_terms_dataframe(payload["terms"]), title=args.map)
    else:
        sys.stdout.write(dumps(payload))
    return EXIT_OK


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "apply": cmd_apply}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose, args.debug)

    try:
        settings = load_settings(args.config, overrides={
            "seed": args.seed,
            "max_degree": args.max_degree,
            "cache_dir": args.cache_dir,
            "jobs": args.jobs,
        })
        return COMMANDS[args.command](args, settings)
    except (InputFormatError, NotWAdmissibleError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except NotInertError as e:
        logger.error("not inert: %s", e)
        return EXIT_FAIL
    except ValueError as e:
        logger.error("%s", e)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

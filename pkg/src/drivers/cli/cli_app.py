import argparse
from pathlib import Path

import numba
from pydantic import ValidationError

from adapters.cli.cli_controllers import CliControllers
from catch_exceptions import catch_exceptions, one_line
from configuration import DEFAULT_LEARNING_RATE, service_logger
from domain.RunConfig import RunConfig
from drivers.cli.dependency_injection import setup_dependencies
from exceptions import UsageError


class CliArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def integer_list(value: str) -> list[int]:
    try:
        return [int(token) for token in value.split(",") if token.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}")


def label_list(value: str) -> list[str]:
    return [token.strip() for token in value.split(",") if token.strip()]


def create_parser() -> CliArgumentParser:
    common = CliArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed of every random choice of the command")
    common.add_argument("--threads", type=int, help="numba worker threads, all cores by default")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default="INFO")
    common.add_argument("--quiet", action="store_true", help="hide progress bars")

    parser = CliArgumentParser(prog="dtw-som", description="Self-organizing maps of time series motifs under DTW")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    synth = subparsers.add_parser("synth", parents=[common], help="generate labeled synthetic motif centers")
    synth.add_argument("--count", type=int, default=180)
    synth.add_argument("--out", type=Path, required=True)

    extract = subparsers.add_parser("extract", parents=[common], help="extract motifs from a UCR file")
    extract.add_argument("--input", type=Path, required=True)
    extract.add_argument("--window", type=int, required=True)
    extract.add_argument("--max-motifs", type=int, default=1000)
    extract.add_argument("--exclude", type=label_list, default=[], help="comma-separated class labels to drop")
    extract.add_argument("--sample", type=int, help="number of sequences drawn without replacement")
    extract.add_argument("--out", type=Path, required=True)

    train = subparsers.add_parser("train", parents=[common], help="train a network on motif centers")
    train.add_argument("--motifs", type=Path, required=True)
    train.add_argument("--rows", type=int, default=3)
    train.add_argument("--cols", type=int, default=3)
    train.add_argument("--epochs", type=int, default=30)
    train.add_argument("--init", choices=["random", "anchor"], default="random")
    train.add_argument("--anchors", type=integer_list, help="comma-separated pattern indices")
    train.add_argument("--anchor-count", type=int, help="use the first k patterns as anchors")
    train.add_argument("--learning-rate", type=float, default=DEFAULT_LEARNING_RATE)
    train.add_argument("--radius", type=float, help="initial radius, max(rows, cols) / 2 by default")
    train.add_argument("--window", type=int, help="Sakoe-Chiba band width, unconstrained by default")
    train.add_argument("--out", type=Path, required=True)

    report = subparsers.add_parser("report", parents=[common], help="write maps and unit shapes of a model")
    report.add_argument("--model", type=Path, required=True)
    report.add_argument("--motifs", type=Path, required=True)
    report.add_argument("--out-dir", type=Path, required=True)

    return parser


def parse_run_config(argv: list[str] | None = None) -> RunConfig:
    arguments = create_parser().parse_args(argv)
    try:
        return RunConfig(**{name: value for name, value in vars(arguments).items() if value is not None})
    except ValidationError as error:
        raise UsageError(one_line(error))


def configure_runtime(run_config: RunConfig):
    service_logger.setLevel(run_config.log_level)
    if run_config.threads is None:
        return

    threads = run_config.threads
    if threads > numba.config.NUMBA_NUM_THREADS:
        service_logger.warning(f"Only {numba.config.NUMBA_NUM_THREADS} threads available, {threads} requested")
        threads = numba.config.NUMBA_NUM_THREADS
    numba.set_num_threads(threads)


@catch_exceptions
def run(argv: list[str] | None = None, controllers: CliControllers | None = None) -> int:
    run_config = parse_run_config(argv)
    configure_runtime(run_config)

    controllers = controllers or setup_dependencies()
    return controllers.run(run_config)

"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │         MAIN ENTRY POINT            │
 *  └─────────────────────────────────────┘
 *  Command-line entry point for the WSN clustering simulator
 *
 *  Commands:
 *  - run        one simulation, writes <protocol>_<seed>.csv
 *  - compare    protocols x seeds on shared deployments
 *  - sweep-c    DE-LEACH over a list of c values
 *  - sweep-n    protocols over a list of node counts
 *  - optimal    analytic optimal cluster count
 *  - topology   dump the seed's deployment as CSV
 *
 *  Returns:
 *  - Exit status 0 on success, 1 with a one-line diagnostic on
 *    any error (2 for usage errors)
 *
 *  Notes:
 *  - Every config key is also a --<key> VALUE flag overriding
 *    the --config file
 */
"""

import argparse
import sys
from typing import Any, Dict, List, Optional, Sequence

from config import (
    APP_NAME,
    DEFAULT_C_VALUES,
    DEFAULT_N_VALUES,
    DEFAULT_PROTOCOLS,
    DEFAULT_SEEDS,
    OUTPUT_DIR,
    TASK_WORKER_COUNT
)
from core import CONFIG_KEYS, ConfigError, Protocol, SimConfig, load_config
from data import ResultsRepository
from debugger import debugger
from services import ExperimentService


def _format(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def print_summary_lines(values: Dict[str, Any]) -> None:
    """Print key=value lines on stdout"""
    for key, value in values.items():
        print(f"{key}={_format(value)}")


def parse_protocols(text: str) -> List[Protocol]:
    return [Protocol.parse(part) for part in text.split(",") if part.strip()]


def parse_numbers(text: str, cast=float) -> List[Any]:
    try:
        return [cast(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise ValueError(f"bad number list: {text}") from e


def _service(out_dir: str, workers: int) -> ExperimentService:
    return ExperimentService(ResultsRepository(out_dir), workers=workers)


def cmd_run(config: SimConfig, out_dir: str = OUTPUT_DIR, workers: int = TASK_WORKER_COUNT,
            topology_path: Optional[str] = None) -> int:
    """
     ┌─────────────────────────────────────┐
     │             CMD_RUN                 │
     └─────────────────────────────────────┘
     Run one simulation and print its milestones

     Parameters:
     - config: effective config
     - out_dir: output directory for <protocol>_<seed>.csv
     - workers: worker count
     - topology_path: optional deployment CSV to use instead
       of the generated one

     Returns:
     - Exit status
    """
    service = _service(out_dir, workers)
    topology = service.load_topology(topology_path, config) if topology_path else None
    result = service.run_single(config, topology)
    summary = result['summary']
    print_summary_lines({**summary.to_dict(), 'csv': result['path']})
    return 0


def cmd_compare(config: SimConfig, protocols: Sequence[Protocol], seeds: int,
                out_dir: str = OUTPUT_DIR, workers: int = TASK_WORKER_COUNT) -> int:
    """Compare protocols over shared per-seed deployments"""
    result = _service(out_dir, workers).compare(config, protocols, seeds)
    for stats in result['aggregates']:
        print_summary_lines({
            f"{stats.protocol.value}.fnd_mean": stats.fnd_mean,
            f"{stats.protocol.value}.hnd_mean": stats.hnd_mean,
            f"{stats.protocol.value}.lnd_mean": stats.lnd_mean,
            f"{stats.protocol.value}.packets_mean": stats.packets_mean
        })
    print_summary_lines({'aggregate_csv': result['paths'][-1]})
    return 0


def cmd_sweep_c(config: SimConfig, c_values: Sequence[float], seeds: int,
                out_dir: str = OUTPUT_DIR, workers: int = TASK_WORKER_COUNT) -> int:
    """Sweep DE-LEACH's c and print the best value by mean lnd"""
    result = _service(out_dir, workers).sweep_c(config, c_values, seeds)
    sys.stdout.write(result['csv'])
    print(f"best_c={result['best_c']:g}")
    return 0


def cmd_sweep_n(config: SimConfig, n_values: Sequence[int], seeds: int,
                protocols: Sequence[Protocol], out_dir: str = OUTPUT_DIR,
                workers: int = TASK_WORKER_COUNT) -> int:
    """Sweep the node count for each protocol"""
    result = _service(out_dir, workers).sweep_nodes(config, n_values, seeds, protocols)
    sys.stdout.write(result['csv'])
    return 0


def cmd_optimal(config: SimConfig, d_bs: Optional[float] = None) -> int:
    """Print the analytic optimal cluster count"""
    result = _service(OUTPUT_DIR, 1).optimal_report(config, d_bs)
    print_summary_lines({key: value for key, value in result.items() if key not in ('success', 'message')})
    return 0


def cmd_topology(config: SimConfig, out_dir: str = OUTPUT_DIR) -> int:
    """Dump the deployment of config.seed"""
    result = _service(out_dir, 1).save_topology(config)
    print_summary_lines({'nodes': result['topology'].n, 'd_avg': result['topology'].d_avg, 'csv': result['path']})
    return 0


def build_parser() -> argparse.ArgumentParser:
    """
     ┌─────────────────────────────────────┐
     │          BUILD_PARSER               │
     └─────────────────────────────────────┘
     Argument parser with one subcommand per experiment
    """
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--config", metavar="PATH", help="flat key = value config file")
    common.add_argument("--out", default=OUTPUT_DIR, metavar="DIR", help="output directory")
    common.add_argument("--workers", type=int, default=TASK_WORKER_COUNT, help="parallel simulation workers")
    common.add_argument("--quiet", action="store_true", help="only log warnings and errors")
    for key in CONFIG_KEYS:
        common.add_argument(f"--{key}", dest=key, metavar="VALUE", default=None)

    parser = argparse.ArgumentParser(prog=APP_NAME, description="LEACH-family WSN round simulator",
                                     allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[common], allow_abbrev=False, help="run one simulation")
    run.add_argument("--topology", metavar="PATH", help="deployment CSV to use")

    compare = sub.add_parser("compare", parents=[common], allow_abbrev=False, help="compare protocols")
    compare.add_argument("--seeds", type=int, default=DEFAULT_SEEDS)
    compare.add_argument("--protocols", default=",".join(DEFAULT_PROTOCOLS))

    sweep_c = sub.add_parser("sweep-c", parents=[common], allow_abbrev=False, help="sweep DE-LEACH c")
    sweep_c.add_argument("--seeds", type=int, default=DEFAULT_SEEDS)
    sweep_c.add_argument("--c-values", dest="c_values", default=",".join(str(c) for c in DEFAULT_C_VALUES))

    sweep_n = sub.add_parser("sweep-n", parents=[common], allow_abbrev=False, help="sweep node count")
    sweep_n.add_argument("--seeds", type=int, default=DEFAULT_SEEDS)
    sweep_n.add_argument("--n-values", dest="n_values", default=",".join(str(n) for n in DEFAULT_N_VALUES))
    sweep_n.add_argument("--protocols", default=",".join(DEFAULT_PROTOCOLS))

    optimal = sub.add_parser("optimal", parents=[common], allow_abbrev=False, help="analytic cluster count")
    optimal.add_argument("--d-bs", dest="d_bs", type=float, default=None)

    sub.add_parser("topology", parents=[common], allow_abbrev=False, help="dump the deployment CSV")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, load the config and dispatch the command"""
    args = build_parser().parse_args(argv)
    if args.quiet:
        debugger.set_level("WARNING")

    try:
        overrides = {key: getattr(args, key) for key in CONFIG_KEYS}
        config = load_config(args.config, overrides)

        if args.command == "run":
            return cmd_run(config, args.out, args.workers, args.topology)
        if args.command == "compare":
            return cmd_compare(config, parse_protocols(args.protocols), args.seeds, args.out, args.workers)
        if args.command == "sweep-c":
            return cmd_sweep_c(config, parse_numbers(args.c_values), args.seeds, args.out, args.workers)
        if args.command == "sweep-n":
            return cmd_sweep_n(config, parse_numbers(args.n_values, int), args.seeds,
                               parse_protocols(args.protocols), args.out, args.workers)
        if args.command == "optimal":
            return cmd_optimal(config, args.d_bs)
        return cmd_topology(config, args.out)

    except (ConfigError, ValueError, OSError, RuntimeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

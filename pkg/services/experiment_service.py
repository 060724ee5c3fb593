"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │       EXPERIMENT SERVICE            │
 *  └─────────────────────────────────────┘
 *  Business logic for simulation experiments
 *
 *  Single runs, shared-topology protocol comparisons, the c
 *  sweep, the node-count sweep and the analytic cluster-count
 *  report.
 *
 *  Parameters:
 *  - results_repo: ResultsRepository for output files
 *  - workers: worker count for batch runs
 *
 *  Returns:
 *  - ExperimentService instance
 *
 *  Notes:
 *  - Seeds are config.seed, config.seed + 1, ...
 *  - Protocols share one deployment per seed but draw from
 *    independent election streams
 *  - Results are merged in submission order
 */
"""

from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

from config import OUTPUT_DIR, TASK_WORKER_COUNT
from core.models import AggregateStats, Protocol, RunSummary, Topology
from core.params import SimConfig
from core.radio import (
    crossover_distance,
    grid_optimal_cluster_count,
    optimal_cluster_count,
    optimal_probability
)
from core.topology import dump_topology_csv, generate_topology, load_topology_csv
from data import ResultsRepository
from debugger import debug_info, debug_success
from metrics import aggregate_runs, export_aggregate_csv, write_rows
from tasks import TaskQueue, WorkerPool

T = TypeVar("T")


SWEEP_C_HEADER = ["c", "fnd_mean", "lnd_mean", "packets_mean"]
SWEEP_N_HEADER = ["protocol", "num_nodes", "fnd_mean", "hnd_mean", "lnd_mean", "packets_mean"]

AGGREGATE_FILENAME = "aggregate.csv"
SWEEP_C_FILENAME = "sweep_c.csv"
SWEEP_N_FILENAME = "sweep_n.csv"


def seed_list(config: SimConfig, seeds: int) -> List[int]:
    """The experiment's seeds, starting at config.seed"""
    if seeds < 1:
        raise ValueError("seeds must be >= 1")
    return [config.seed + offset for offset in range(seeds)]


def deployment_for(config: SimConfig, seed: int) -> Topology:
    """The shared deployment used by every protocol for this seed"""
    return generate_topology(
        config.num_nodes,
        config.region_side,
        config.bs_offset,
        seed,
        config.radio.initial_energy
    )


def _fmt(value: Optional[float]) -> str:
    return "" if value is None else repr(float(value))


def unique(values: Iterable[T]) -> List[T]:
    """Drop repeats, keeping first-seen order"""
    return list(dict.fromkeys(values))


def best_c(rows: Sequence[Tuple[float, AggregateStats]]) -> float:
    """c with the highest mean lnd; ties go to the lowest c"""
    best_value, best_lnd = None, None
    for c, stats in sorted(rows, key=lambda row: row[0]):
        lnd = stats.lnd_mean if stats.lnd_mean is not None else float("-inf")
        if best_lnd is None or lnd > best_lnd:
            best_value, best_lnd = c, lnd
    return best_value


class ExperimentService:
    """
     ┌─────────────────────────────────────┐
     │       EXPERIMENTSERVICE             │
     └─────────────────────────────────────┘
     Service for running and persisting experiments

     Every public method returns a result dictionary with a
     'success' flag, like the other services.
    """

    def __init__(self, results_repo: Optional[ResultsRepository] = None,
                 workers: int = TASK_WORKER_COUNT):
        self.results_repo = results_repo or ResultsRepository(OUTPUT_DIR)
        self.workers = workers

    def run_batch(self, jobs: Sequence[Tuple[SimConfig, Topology]]) -> List[RunSummary]:
        """
         ┌─────────────────────────────────────┐
         │           RUN_BATCH                 │
         └─────────────────────────────────────┘
         Run (config, topology) jobs through the worker pool

         Parameters:
         - jobs: one entry per simulation

         Returns:
         - RunSummary list in job order

         Notes:
         - Raises RuntimeError if any run failed
        """
        queue = TaskQueue()
        for config, topology in jobs:
            queue.add_simulation({'config': config, 'topology': topology})
        WorkerPool(self.workers).run(queue)

        failed = queue.failed_tasks()
        if failed:
            raise RuntimeError(f"{len(failed)} simulation run(s) failed: {failed[0].error}")
        return queue.results()

    def run_single(self, config: SimConfig, topology: Optional[Topology] = None,
                   save: bool = True) -> Dict[str, Any]:
        """
         ┌─────────────────────────────────────┐
         │           RUN_SINGLE                │
         └─────────────────────────────────────┘
         Run one simulation and write <protocol>_<seed>.csv

         Parameters:
         - config: effective config
         - topology: optional explicit deployment (default:
           generated from config.seed)
         - save: write the metrics CSV
        """
        if save:
            self.results_repo.ensure_dir()
        topology = topology or deployment_for(config, config.seed)
        summary = self.run_batch([(config, topology)])[0]
        path = self.results_repo.save_run(summary) if save else None
        return {
            'success': True,
            'message': f"Simulated {summary.rounds_simulated} rounds",
            'summary': summary,
            'path': path
        }

    def compare(self, config: SimConfig, protocols: Sequence[Protocol],
                seeds: int, save: bool = True) -> Dict[str, Any]:
        """
         ┌─────────────────────────────────────┐
         │            COMPARE                  │
         └─────────────────────────────────────┘
         Every protocol x seed on shared per-seed deployments

         Parameters:
         - config: base config (protocol field is overridden)
         - protocols: protocols to compare
         - seeds: number of seeds

         Returns:
         - Dictionary with summaries per protocol, aggregates
           and written paths

         Notes:
         - Writes one CSV per run plus aggregate.csv
        """
        protocols = unique(protocols)
        if not protocols:
            raise ValueError("at least one protocol is required")
        if save:
            self.results_repo.ensure_dir()

        jobs = []
        for seed in seed_list(config, seeds):
            topology = deployment_for(config, seed)
            for protocol in protocols:
                jobs.append((config.with_updates(protocol=protocol, seed=seed), topology))
        summaries = self.run_batch(jobs)

        by_protocol: Dict[Protocol, List[RunSummary]] = {protocol: [] for protocol in protocols}
        for summary in summaries:
            by_protocol[summary.protocol].append(summary)
        aggregates = [aggregate_runs(by_protocol[protocol]) for protocol in protocols]

        paths: List[str] = []
        if save:
            paths = self.results_repo.save_runs(summaries)
            paths.append(self.results_repo.write_text(AGGREGATE_FILENAME, export_aggregate_csv(aggregates)))

        debug_success(f"Compared {', '.join(p.value for p in protocols)} over {seeds} seed(s)")
        return {
            'success': True,
            'message': f"{len(summaries)} runs completed",
            'summaries': by_protocol,
            'aggregates': aggregates,
            'paths': paths
        }

    def sweep_c(self, config: SimConfig, c_values: Sequence[float],
                seeds: int, save: bool = True) -> Dict[str, Any]:
        """
         ┌─────────────────────────────────────┐
         │            SWEEP_C                  │
         └─────────────────────────────────────┘
         DE-LEACH for each c x seed

         Returns:
         - Dictionary with per-c aggregates, the sweep CSV text
           and the best c by mean lnd (ties: lowest c)
        """
        c_values = unique(float(c) for c in c_values)
        if not c_values:
            raise ValueError("c_values must not be empty")
        if save:
            self.results_repo.ensure_dir()

        seed_values = seed_list(config, seeds)
        topologies = {seed: deployment_for(config, seed) for seed in seed_values}
        jobs = [
            (config.with_updates(protocol=Protocol.DE_LEACH, seed=seed, c=float(c)), topologies[seed])
            for c in c_values
            for seed in seed_values
        ]
        summaries = self.run_batch(jobs)

        rows: List[Tuple[float, AggregateStats]] = []
        for i, c in enumerate(c_values):
            chunk = summaries[i * len(seed_values):(i + 1) * len(seed_values)]
            rows.append((float(c), aggregate_runs(chunk)))

        text = write_rows(SWEEP_C_HEADER, [
            [f"{c:g}", _fmt(stats.fnd_mean), _fmt(stats.lnd_mean), _fmt(stats.packets_mean)]
            for c, stats in rows
        ])
        path = self.results_repo.write_text(SWEEP_C_FILENAME, text) if save else None
        chosen = best_c(rows)
        debug_info(f"c sweep over {len(c_values)} values: best c = {chosen:g}")
        return {
            'success': True,
            'message': f"{len(summaries)} runs completed",
            'rows': rows,
            'best_c': chosen,
            'csv': text,
            'path': path
        }

    def sweep_nodes(self, config: SimConfig, n_values: Sequence[int],
                    seeds: int, protocols: Sequence[Protocol],
                    save: bool = True) -> Dict[str, Any]:
        """
         ┌─────────────────────────────────────┐
         │          SWEEP_NODES                │
         └─────────────────────────────────────┘
         Every protocol x node count x seed

         Deployments are shared across protocols for each
         (node count, seed) pair.
        """
        n_values = unique(int(n) for n in n_values)
        protocols = unique(protocols)
        if not n_values:
            raise ValueError("n_values must not be empty")
        if not protocols:
            raise ValueError("at least one protocol is required")
        if save:
            self.results_repo.ensure_dir()

        seed_values = seed_list(config, seeds)
        jobs = []
        keys = []
        for n in n_values:
            sized = config.with_updates(num_nodes=int(n))
            for seed in seed_values:
                topology = deployment_for(sized, seed)
                for protocol in protocols:
                    jobs.append((sized.with_updates(protocol=protocol, seed=seed), topology))
                    keys.append((protocol, int(n)))
        summaries = self.run_batch(jobs)

        grouped: Dict[Tuple[Protocol, int], List[RunSummary]] = {}
        for key, summary in zip(keys, summaries):
            grouped.setdefault(key, []).append(summary)

        rows = []
        aggregates = {}
        for protocol in protocols:
            for n in n_values:
                stats = aggregate_runs(grouped[(protocol, int(n))])
                aggregates[(protocol, int(n))] = stats
                rows.append([protocol.value, int(n), _fmt(stats.fnd_mean), _fmt(stats.hnd_mean),
                             _fmt(stats.lnd_mean), _fmt(stats.packets_mean)])
        text = write_rows(SWEEP_N_HEADER, rows)
        path = self.results_repo.write_text(SWEEP_N_FILENAME, text) if save else None
        return {
            'success': True,
            'message': f"{len(summaries)} runs completed",
            'aggregates': aggregates,
            'csv': text,
            'path': path
        }

    def optimal_report(self, config: SimConfig, d_bs: Optional[float] = None) -> Dict[str, Any]:
        """
         ┌─────────────────────────────────────┐
         │         OPTIMAL_REPORT              │
         └─────────────────────────────────────┘
         Analytic cluster count for the configured network

         Parameters:
         - config: network and radio parameters
         - d_bs: BS distance; defaults to d_avg of the seed's
           deployment
        """
        if d_bs is None:
            d_bs = deployment_for(config, config.seed).d_avg
        if not d_bs > 0:
            raise ValueError("d_bs must be > 0")
        n = config.num_nodes
        k_opt = optimal_cluster_count(n, config.region_side, d_bs, config.radio)
        return {
            'success': True,
            'message': "Analytic optimum computed",
            'd_bs': d_bs,
            'k_opt': k_opt,
            'k_opt_grid': grid_optimal_cluster_count(n, config.region_side, d_bs, config.radio),
            'p_opt': optimal_probability(n, k_opt),
            'crossover_distance': crossover_distance(config.radio),
            'd0': config.radio.d0
        }

    def save_topology(self, config: SimConfig) -> Dict[str, Any]:
        """Write the seed's deployment as topology_<seed>.csv"""
        topology = deployment_for(config, config.seed)
        path = self.results_repo.write_text(f"topology_{config.seed}.csv", dump_topology_csv(topology))
        return {
            'success': True,
            'message': f"Wrote {topology.n} nodes",
            'topology': topology,
            'path': path
        }

    @staticmethod
    def load_topology(path: str, config: SimConfig) -> Topology:
        """Read a topology CSV written by save_topology"""
        with open(path, encoding="utf-8") as handle:
            return load_topology_csv(handle.read(), config.radio.initial_energy)

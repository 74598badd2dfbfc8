"""Seeded Monte Carlo experiments over random graphs.

Three studies: depletion (remove random nodes until the first disconnection),
paired per-strategy replacement-cost comparison, and full depletion with
repair (every removal is answered by a replacement sequence, down to a single
node).  Trials are embarrassingly parallel; each trial derives its own random
stream from (master_seed, trial_index) and each strategy within a trial from
(master_seed, trial_index, strategy_index), so output is identical for any
worker count.
"""

from __future__ import annotations

import dataclasses
import json
import logging
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import partial

import numpy as np

from . import __version__
from .criticality import articulation_points, compute_criticality
from .generators import GenerationError, GeneratorSpec
from .graph import Graph, GraphError
from .rng import derive_rng
from .strategies import Strategy, run_removal

log = logging.getLogger(__name__)


class ExperimentKind(Enum):
    DEPLETION = "depletion"
    COST_COMPARISON = "cost_comparison"
    FULL_DEPLETION_WITH_REPAIR = "full_depletion_with_repair"


@dataclass(frozen=True)
class StrategySpec:
    """Strategy plus its delta, parseable from tokens like ``dmps:2``."""

    strategy: Strategy
    delta: int | None = None

    def __post_init__(self):
        if self.strategy is Strategy.DELTA_MPS:
            if self.delta is None or self.delta < 1:
                raise ValueError("dmps requires a delta >= 1")
        elif self.delta is not None:
            raise ValueError(f"{self.strategy.value} does not take a delta")

    @classmethod
    def parse(cls, token: str) -> "StrategySpec":
        name, sep, arg = token.strip().partition(":")
        try:
            strategy = Strategy(name)
        except ValueError:
            known = ", ".join(s.value for s in Strategy)
            raise ValueError(f"unknown strategy {token!r}; known: {known}") from None
        if not sep:
            return cls(strategy)
        try:
            delta = int(arg)
        except ValueError:
            raise ValueError(f"bad delta in strategy token {token!r}") from None
        return cls(strategy, delta)

    @property
    def label(self) -> str:
        if self.strategy is Strategy.DELTA_MPS:
            return f"{self.strategy.value}:{self.delta}"
        return self.strategy.value


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: ExperimentKind
    generator: GeneratorSpec
    trials: int
    master_seed: int
    strategies: tuple[StrategySpec, ...] = ()
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.experiment is not ExperimentKind.DEPLETION and not self.strategies:
            raise ValueError(f"{self.experiment.value} needs at least one strategy")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class GraphStats:
    diameter: int
    mean_degree: float


@dataclass(frozen=True)
class TrialResult:
    trial_index: int
    i_dis: int | None = None
    censored: bool = False
    costs: tuple[int, ...] = ()
    critical_terminals: int = 0
    violation: bool = False
    stats: GraphStats | None = None
    error: str | None = None


def _graph_stats(graph: Graph) -> GraphStats:
    return GraphStats(graph.diameter(), graph.degree_stats().mean_degree)


def _pick_live(graph: Graph, rng) -> int:
    live = graph.live_nodes()
    return live[int(rng.integers(len(live)))]


def _depletion_trial(cfg: ExperimentConfig, index: int) -> TrialResult:
    rng = derive_rng(cfg.master_seed, index)
    try:
        graph = cfg.generator.build(rng)
    except GenerationError as exc:
        log.warning("trial %d: %s", index, exc)
        return TrialResult(index, error=str(exc))
    stats = _graph_stats(graph)
    iteration = 0
    while graph.live_count > 1:
        graph = graph.remove_node(_pick_live(graph, rng))
        iteration += 1
        if not graph.is_connected():
            return TrialResult(index, i_dis=iteration, stats=stats)
    return TrialResult(index, censored=True, stats=stats)


def _comparison_trial(cfg: ExperimentConfig, index: int) -> TrialResult:
    rng = derive_rng(cfg.master_seed, index)
    try:
        graph = cfg.generator.build(rng)
    except GenerationError as exc:
        log.warning("trial %d: %s", index, exc)
        return TrialResult(index, error=str(exc))
    stats = _graph_stats(graph)
    p0 = _pick_live(graph, rng)
    crit_by_delta = {}
    costs = []
    for s_index, spec in enumerate(cfg.strategies):
        crit = None
        if spec.strategy is Strategy.DELTA_MPS:
            if spec.delta not in crit_by_delta:
                crit_by_delta[spec.delta] = compute_criticality(graph, spec.delta)
            crit = crit_by_delta[spec.delta]
        outcome = run_removal(
            graph,
            p0,
            spec.strategy,
            rng=derive_rng(cfg.master_seed, index, s_index),
            delta=spec.delta,
            crit=crit,
        )
        costs.append(outcome.message_hops)
    return TrialResult(index, costs=tuple(costs), stats=stats)


def _full_depletion_trial(cfg: ExperimentConfig, index: int) -> TrialResult:
    rng = derive_rng(cfg.master_seed, index)
    try:
        start = cfg.generator.build(rng)
    except GenerationError as exc:
        log.warning("trial %d: %s", index, exc)
        return TrialResult(index, error=str(exc))
    stats = _graph_stats(start)
    totals = []
    critical_terminals = 0
    for s_index, spec in enumerate(cfg.strategies):
        srng = derive_rng(cfg.master_seed, index, s_index)
        graph = start
        total = 0
        while graph.live_count > 1:
            p0 = _pick_live(graph, srng)
            cut_before = articulation_points(graph)
            # run_removal raises ConnectivityViolation on a disconnecting
            # repair, which is a hard failure of the whole batch.
            outcome = run_removal(graph, p0, spec.strategy, rng=srng, delta=spec.delta)
            if outcome.sequence.terminal in cut_before:
                critical_terminals += 1
            total += outcome.message_hops
            graph = outcome.final_graph
        totals.append(total)
    return TrialResult(
        index,
        costs=tuple(totals),
        critical_terminals=critical_terminals,
        stats=stats,
    )


_TRIAL_FUNCTIONS = {
    ExperimentKind.DEPLETION: _depletion_trial,
    ExperimentKind.COST_COMPARISON: _comparison_trial,
    ExperimentKind.FULL_DEPLETION_WITH_REPAIR: _full_depletion_trial,
}


def _run(cfg: ExperimentConfig) -> list[TrialResult]:
    trial = partial(_TRIAL_FUNCTIONS[cfg.experiment], cfg)
    if cfg.workers == 1:
        return [trial(i) for i in range(cfg.trials)]
    chunk = max(1, cfg.trials // (cfg.workers * 8))
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        return list(pool.map(trial, range(cfg.trials), chunksize=chunk))


def run_depletion(cfg: ExperimentConfig) -> list[TrialResult]:
    if cfg.experiment is not ExperimentKind.DEPLETION:
        raise ValueError("config is not a depletion experiment")
    return _run(cfg)


def run_cost_comparison(cfg: ExperimentConfig) -> list[TrialResult]:
    if cfg.experiment is not ExperimentKind.COST_COMPARISON:
        raise ValueError("config is not a cost comparison experiment")
    return _run(cfg)


def run_full_depletion_with_repair(cfg: ExperimentConfig) -> list[TrialResult]:
    if cfg.experiment is not ExperimentKind.FULL_DEPLETION_WITH_REPAIR:
        raise ValueError("config is not a full depletion experiment")
    return _run(cfg)


# -- summaries ---------------------------------------------------------------


@dataclass(frozen=True)
class SummaryStats:
    means: dict[str, float]
    stds: dict[str, float]
    ecdf: dict[str, list[tuple[float, float]]]
    censored_count: int


def ecdf_points(samples) -> list[tuple[float, float]]:
    """(x, fraction of samples <= x) at each distinct sample value."""
    xs = sorted(samples)
    n = len(xs)
    points = []
    for i, x in enumerate(xs):
        if i + 1 == n or xs[i + 1] != x:
            points.append((float(x), (i + 1) / n))
    return points


def summarize(results: list[TrialResult], cfg: ExperimentConfig) -> SummaryStats:
    clean = [r for r in results if r.error is None]
    if not clean:
        raise GraphError("no successful trials to summarize")
    means: dict[str, float] = {}
    stds: dict[str, float] = {}
    ecdf: dict[str, list[tuple[float, float]]] = {}
    censored = sum(1 for r in clean if r.censored)
    if cfg.experiment is ExperimentKind.DEPLETION:
        observed = [r.i_dis for r in clean if r.i_dis is not None]
        if observed:
            means["i_dis"] = statistics.fmean(observed)
            stds["i_dis"] = statistics.pstdev(observed)
            ecdf["i_dis"] = ecdf_points(observed)
    else:
        for column, spec in enumerate(cfg.strategies):
            costs = [r.costs[column] for r in clean]
            means[spec.label] = statistics.fmean(costs)
            stds[spec.label] = statistics.pstdev(costs)
            ecdf[spec.label] = ecdf_points(costs)
    means["diameter"] = statistics.fmean(r.stats.diameter for r in clean)
    means["mean_degree"] = statistics.fmean(r.stats.mean_degree for r in clean)
    return SummaryStats(means, stds, ecdf, censored)


def bootstrap_mean_gap(
    baseline,
    other,
    n_boot: int = 2000,
    alpha: float = 0.05,
    seed: int = 0,
) -> tuple[float, float]:
    """Percentile CI for mean(other) - mean(baseline) under paired resampling.

    The gap is significant at level alpha when the interval excludes zero.
    """
    a = np.asarray(baseline, dtype=float)
    b = np.asarray(other, dtype=float)
    if a.shape != b.shape or a.size == 0:
        raise ValueError("paired bootstrap needs equal-length non-empty samples")
    diffs = b - a
    rng = derive_rng(seed, 0xB007)
    idx = rng.integers(0, diffs.size, size=(n_boot, diffs.size))
    means = diffs[idx].mean(axis=1)
    lo, hi = np.quantile(means, [alpha / 2, 1 - alpha / 2])
    return float(lo), float(hi)


# -- CSV / JSON output -------------------------------------------------------


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, float):
        return f"{x:.6g}"
    if x is None:
        return ""
    return str(x)


def _round6(x: float) -> float:
    return float(f"{x:.6g}")


def depletion_csv(results: list[TrialResult]) -> str:
    lines = ["trial,i_dis,censored,diameter,mean_degree"]
    for r in results:
        if r.error is not None:
            continue
        lines.append(
            ",".join(
                _fmt(f)
                for f in (r.trial_index, r.i_dis, r.censored, r.stats.diameter, r.stats.mean_degree)
            )
        )
    return "\n".join(lines) + "\n"


def comparison_csv(results: list[TrialResult], cfg: ExperimentConfig) -> str:
    lines = ["trial,strategy,delta,cost,diameter,mean_degree"]
    for r in results:
        if r.error is not None:
            continue
        for column, spec in enumerate(cfg.strategies):
            lines.append(
                ",".join(
                    _fmt(f)
                    for f in (
                        r.trial_index,
                        spec.strategy.value,
                        spec.delta,
                        r.costs[column],
                        r.stats.diameter,
                        r.stats.mean_degree,
                    )
                )
            )
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, Enum):
        return value.value
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {k: _jsonable(v) for k, v in dataclasses.asdict(value).items()}
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, float):
        return _round6(value)
    return value


def summary_json(summary: SummaryStats, cfg: ExperimentConfig) -> str:
    payload = {
        "config": _jsonable(cfg),
        "means": _jsonable(summary.means),
        "stds": _jsonable(summary.stds),
        "ecdf": _jsonable(summary.ecdf),
        "censored_count": summary.censored_count,
        "version": __version__,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"

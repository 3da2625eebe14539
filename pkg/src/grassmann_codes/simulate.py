"""Seeded Monte-Carlo trials of the orbit-projection decoder.

Randomness contract: trial i draws from numpy's PCG64 seeded with
SeedSequence([seed, i]); within a trial the draws are, in order, the message
(k symbols), the error support (a uniform w-subset of the n positions) and the
nonzero error values.  Parallel runs therefore reproduce serial ones exactly.
"""
from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .pipeline import Decoder, build, decode

CSV_COLUMNS = ["trial", "weight", "success", "winner_orbit", "winner_b", "total_candidates", "wall_ms"]


@dataclass(frozen=True)
class SimulationConfig:
    q: int = 2
    m: int = 4
    trials: int = 100
    weight: int = 0
    seed: int = 0
    fast: bool = False
    workers: int = 1
    timing: bool = True


@dataclass
class TrialResult:
    trial: int
    weight: int
    success: bool
    reported_failure: bool
    winner_orbit: int | None
    winner_b: int | None
    total_candidates: int
    wall_ms: float


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def random_error(rng: np.random.Generator, n: int, q: int, weight: int) -> np.ndarray:
    e = np.zeros(n, dtype=np.int64)
    support = rng.choice(n, size=weight, replace=False)
    e[support] = rng.integers(1, q, size=weight)
    return e


def draw_trial(dec: Decoder, seed: int, trial: int, weight: int):
    """(message, codeword, received) for one trial."""
    code = dec.code
    rng = trial_rng(seed, trial)
    msg = rng.integers(0, code.q, size=code.k)
    c = code.encode(msg)
    e = random_error(rng, code.n, code.q, weight)
    return msg, c, (c + e) % code.q


def run_trial(dec: Decoder, cfg: SimulationConfig, trial: int) -> TrialResult:
    _, c, r = draw_trial(dec, cfg.seed, trial, cfg.weight)
    start = time.perf_counter()
    res = decode(dec, r, fast=cfg.fast)
    elapsed = (time.perf_counter() - start) * 1000
    ok = res.codeword is not None and bool(np.array_equal(res.codeword, c))
    return TrialResult(trial, cfg.weight, ok and res.success, not res.success,
                       res.winner_orbit, res.winner_b, res.total_candidates, elapsed)


_worker_decoder: Decoder | None = None


def _init_worker(q: int, m: int):
    global _worker_decoder
    _worker_decoder = build(q, m)


def _run_chunk(args):
    cfg, trials = args
    return [run_trial(_worker_decoder, cfg, t) for t in trials]


def run_simulation(cfg: SimulationConfig, dec: Decoder | None = None) -> list[TrialResult]:
    if cfg.workers <= 1:
        dec = dec or build(cfg.q, cfg.m)
        if not 0 <= cfg.weight <= dec.code.n:
            raise ValueError(f"weight {cfg.weight} outside [0, n={dec.code.n}]")
        return [run_trial(dec, cfg, t) for t in range(cfg.trials)]
    chunks = [list(range(cfg.trials))[i::cfg.workers] for i in range(cfg.workers)]
    with ProcessPoolExecutor(cfg.workers, initializer=_init_worker, initargs=(cfg.q, cfg.m)) as ex:
        results = [r for part in ex.map(_run_chunk, [(cfg, ch) for ch in chunks]) for r in part]
    return sorted(results, key=lambda r: r.trial)


def summarize(results: list[TrialResult]) -> dict:
    n = len(results)
    return {
        "trials": n,
        "success_rate": sum(r.success for r in results) / n if n else 1.0,
        "reported_failures": sum(r.reported_failure for r in results),
        "miscorrections": sum(not r.success and not r.reported_failure for r in results),
        "mean_candidates": float(np.mean([r.total_candidates for r in results])) if n else 0.0,
        "winner_orbits": {str(k): v for k, v in sorted(_count(r.winner_orbit for r in results).items())},
    }


def _count(values):
    out: dict = {}
    for v in values:
        if v is not None:
            out[v] = out.get(v, 0) + 1
    return out


def to_csv(results: list[TrialResult], timing: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in results:
        w.writerow([r.trial, r.weight, int(r.success),
                    "" if r.winner_orbit is None else r.winner_orbit,
                    "" if r.winner_b is None else r.winner_b,
                    r.total_candidates,
                    f"{r.wall_ms:.2f}" if timing else ""])
    return buf.getvalue()

"""Running registry entries over universes, with deterministic parallel merge."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Optional

import numpy as np

from ..formats import to_jsonable
from .context import Context, show
from .theorems import REGISTRY, Theorem, get, registry_ids
from .universe import Universe, parse_universe

COUNTEREXAMPLE_LIMIT = 50


class TierMismatch(ValueError):
    pass


@dataclass
class Instance:
    """A tuple that failed (or disagreed with an oracle), with its trace."""

    index: int
    values: list
    failures: list
    disagreements: list = field(default_factory=list)


@dataclass
class TheoremReport:
    theorem: str
    statement: str
    universe: dict
    tier: str
    sampled: bool
    total_tuples: int
    instances_checked: int
    skipped: int
    counterexamples: list
    oracle_disagreements: list
    seed: int
    elapsed: float = 0.0

    @property
    def applicable(self) -> int:
        return self.instances_checked - self.skipped

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.oracle_disagreements

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "statement": self.statement,
            "universe": self.universe,
            "tier": self.tier,
            "sampled": self.sampled,
            "total_tuples": self.total_tuples,
            "instances_checked": self.instances_checked,
            "skipped": self.skipped,
            "applicable": self.applicable,
            "counterexamples": [to_jsonable(c) for c in self.counterexamples],
            "oracle_disagreements": [to_jsonable(c) for c in self.oracle_disagreements],
            "seed": self.seed,
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


def check_applicable(th: Theorem, universe: Universe) -> None:
    if th.tier == "ring" and universe.tier != "ring":
        raise TierMismatch(f"{th.id} needs a ring carrier; {universe.spec} is a monoid universe")
    if th.star and not universe.has_star:
        raise TierMismatch(f"{th.id} uses the involution but {universe.spec} has no star table")


def _run_indices(th: Theorem, universe: Universe, indices, ctx: Optional[Context] = None) -> tuple:
    ctx = ctx or Context(universe)
    skipped = 0
    failed, disagreed = [], []
    for idx in indices:
        values = universe.tuple_at(int(idx), th.arity, th.generate)
        chk = th.evaluate(ctx, values)
        skipped += chk.skipped
        if chk.failures or chk.disagreements:
            inst = Instance(int(idx), [show(v) for v in values], list(chk.failures), list(chk.disagreements))
            (failed if chk.failures else disagreed).append(inst)
    return skipped, failed, disagreed


# worker state for the process pool
_WORKER: dict = {}


def _init_worker(spec, samples, seed, cap):
    _WORKER["universe"] = parse_universe(spec, samples, seed, cap)
    _WORKER["contexts"] = {}


def _worker_chunk(tid: str, indices) -> tuple:
    u = _WORKER["universe"]
    ctx = _WORKER["contexts"].setdefault(tid, Context(u))
    return _run_indices(get(tid), u, indices, ctx)


def _chunks(indices: np.ndarray, jobs: int) -> list:
    n = max(1, min(len(indices), jobs * 4))
    return [c for c in np.array_split(indices, n) if len(c)]


def verify_theorem(tid: str, universe: Universe, jobs: int = 1, pool=None) -> TheoremReport:
    """Evaluate one registry entry over every (or every sampled) tuple of ``universe``."""
    th = get(tid)
    check_applicable(th, universe)
    start = time.perf_counter()
    indices, total, sampled = universe.indices(th.arity)
    if pool is None or jobs <= 1 or len(indices) < 64:
        skipped, failed, disagreed = _run_indices(th, universe, indices)
    else:
        skipped, failed, disagreed = 0, [], []
        futures = [pool.submit(_worker_chunk, tid, c) for c in _chunks(indices, jobs)]
        for f in futures:
            s, fl, dg = f.result()
            skipped += s
            failed += fl
            disagreed += dg
    failed.sort(key=lambda c: c.index)
    disagreed.sort(key=lambda c: c.index)
    return TheoremReport(
        theorem=th.id,
        statement=th.statement,
        universe=universe.describe(),
        tier=th.tier,
        sampled=sampled,
        total_tuples=int(total),
        instances_checked=int(len(indices)),
        skipped=int(skipped),
        counterexamples=failed[:COUNTEREXAMPLE_LIMIT],
        oracle_disagreements=disagreed[:COUNTEREXAMPLE_LIMIT],
        seed=universe.seed,
        elapsed=time.perf_counter() - start,
    )


def make_pool(universe: Universe, jobs: int, cap: Optional[int] = None):
    """A process pool whose workers rebuild ``universe`` from its spec."""
    if jobs <= 1 or universe.kind == "explicit":
        return None
    method = "fork" if "fork" in _start_methods() else "spawn"
    return ProcessPoolExecutor(max_workers=jobs, mp_context=get_context(method), initializer=_init_worker,
                               initargs=(universe.spec, universe.samples, universe.seed, cap))


def _start_methods() -> list:
    import multiprocessing
    return multiprocessing.get_all_start_methods()


def applicable_ids(universe: Universe) -> list:
    out = []
    for tid in registry_ids():
        try:
            check_applicable(REGISTRY[tid], universe)
        except TierMismatch:
            continue
        out.append(tid)
    return out


def verify_all(universe: Universe, jobs: int = 1, ids=None, cap: Optional[int] = None) -> list:
    ids = applicable_ids(universe) if ids is None else list(ids)
    pool = make_pool(universe, jobs, cap)
    try:
        return [verify_theorem(t, universe, jobs, pool) for t in ids]
    finally:
        if pool is not None:
            pool.shutdown()


def recheck(tid: str, values: tuple, universe: Optional[Universe] = None) -> list:
    """Re-evaluate a tuple from scratch; returns its failures (empty if it passes)."""
    th = get(tid)
    u = universe if universe is not None else _explicit(values)
    chk = th.evaluate(Context(u), tuple(values))
    return list(chk.failures)


def _explicit(values) -> Universe:
    from .universe import singleton_universe
    return singleton_universe(tuple(values))


def default_jobs() -> int:
    return max(1, (os.cpu_count() or 1))

"""Evidence gathering: Cline's formula along d, and one-sided units along 1."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .context import Check, Context, show
from .runner import _WORKER, _chunks, make_pool
from .universe import Universe

LISTING_LIMIT = 20

CLINE_NOTE = ("evidence only: no characterization of when (ab)^||d = a((ba)^||d)^2 b holds is claimed; "
              "the question is open")
REMARK_NOTE = ("in a finite monoid a one-sided unit is a unit, so ab invertible along 1 forces ba to be; "
               "an instance needs an infinite monoid, which no supported carrier is")


@dataclass
class ClineInstance:
    index: int
    a: str
    b: str
    d: str
    ab_along: str
    ba_along: str
    formula: str
    holds: bool


@dataclass
class ClineReport:
    universe: dict
    scanned: int
    both_exist: int
    holds_count: int
    fails_count: int
    holds: list
    fails: list
    oracle_disagreements: list = field(default_factory=list)
    note: str = CLINE_NOTE


def cline_instance(ctx: Context, chk: Check, index: int, a, b, d) -> Optional[ClineInstance]:
    """Classify one triple; None unless both (ab)^||d and (ba)^||d exist."""
    ab = ctx.along(chk, a @ b, d)
    ba = ctx.along(chk, b @ a, d)
    if ab is None or ba is None:
        return None
    formula = a @ ba @ ba @ b
    return ClineInstance(index, str(a), str(b), str(d), str(ab), str(ba), str(formula), formula == ab)


def _cline_indices(universe: Universe, indices, ctx: Optional[Context] = None) -> tuple:
    ctx = ctx or Context(universe)
    both, holds, fails, notes = 0, [], [], []
    for idx in indices:
        a, b, d = universe.tuple_at(int(idx), 3)
        chk = Check()
        inst = cline_instance(ctx, chk, int(idx), a, b, d)
        if chk.disagreements:
            notes.append({"index": int(idx), "tuple": [show(a), show(b), show(d)],
                          "disagreements": chk.disagreements})
        if inst is None:
            continue
        both += 1
        (holds if inst.holds else fails).append(inst)
    return both, holds, fails, notes


def _cline_chunk(indices) -> tuple:
    u = _WORKER["universe"]
    ctx = _WORKER["contexts"].setdefault("cline", Context(u))
    return _cline_indices(u, indices, ctx)


def search_cline(universe: Universe, jobs: int = 1, limit: int = LISTING_LIMIT,
                 cap: Optional[int] = None) -> ClineReport:
    """Classify every (or every sampled) triple where both inverses along d exist."""
    indices, _, _ = universe.indices(3)
    pool = make_pool(universe, jobs, cap) if len(indices) >= 64 else None
    if pool is None:
        both, holds, fails, notes = _cline_indices(universe, indices)
    else:
        both, holds, fails, notes = 0, [], [], []
        try:
            for f in [pool.submit(_cline_chunk, c) for c in _chunks(indices, jobs)]:
                bo, h, fl, n = f.result()
                both += bo
                holds += h
                fails += fl
                notes += n
        finally:
            pool.shutdown()
    holds.sort(key=lambda i: i.index)
    fails.sort(key=lambda i: i.index)
    return ClineReport(universe.describe(), int(len(indices)), both, len(holds), len(fails),
                       holds[:limit], fails[:limit], notes[:limit])


def search_cline_explicit(a, b, d) -> ClineReport:
    """The same classification for one given triple."""
    from .universe import singleton_universe
    u = singleton_universe((a, b, d))
    ctx = Context(u)
    chk = Check()
    inst = cline_instance(ctx, chk, 0, a, b, d)
    holds = [inst] if inst is not None and inst.holds else []
    fails = [inst] if inst is not None and not inst.holds else []
    notes = [{"index": 0, "disagreements": chk.disagreements}] if chk.disagreements else []
    return ClineReport({"spec": "explicit", "kind": "explicit"}, 1, int(inst is not None),
                       len(holds), len(fails), holds, fails, notes)


@dataclass
class UnitAlongOneReport:
    universe: dict
    pairs_scanned: int
    instances: list
    oracle_disagreements: list
    note: str = REMARK_NOTE


def remark_420_scan(universe: Universe, limit: int = LISTING_LIMIT) -> UnitAlongOneReport:
    """All pairs with ab invertible along 1 and ba not (expected: none)."""
    if universe.elements is None:
        raise ValueError("the scan needs a finite universe (gf:p:n or table:FILE)")
    ctx = Context(universe)
    els = universe.elements
    one = els[0].one()
    found, notes = [], []
    for i, a in enumerate(els):
        for j, b in enumerate(els):
            chk = Check()
            ab = ctx.along(chk, a @ b, one)
            ba = ctx.along(chk, b @ a, one)
            if (ab is None) != (ba is None):
                found.append({"a": show(a), "b": show(b), "ab_along_1": show(ab), "ba_along_1": show(ba)})
            if chk.disagreements:
                notes.append({"a": show(a), "b": show(b), "disagreements": chk.disagreements})
    return UnitAlongOneReport(universe.describe(), len(els) ** 2, found[:limit], notes[:limit])

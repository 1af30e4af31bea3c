"""Per-universe evaluation context.

Every query runs the artifact's criterion route *and* the oracle. The
oracle's answer is what theorem predicates see for existence questions
(the definitional side); any mismatch is logged on the :class:`Check` as an
oracle disagreement, which is an artifact bug and is kept apart from
theorem counterexamples.
"""

from __future__ import annotations

from typing import Any, Callable

from ..inverses import (ConsistencyError, gmp_check, group_of, invert_along, moore_penrose,
                        one_sided_along, sample_inner_inverses)
from ..matrix import inner_inverse, try_invert
from .oracle import RankOracle, TableOracle
from .universe import Universe

INNER_SAMPLES = 5
_MEMO_LIMIT = 400_000


class Skip(Exception):
    """The tuple fails a standing hypothesis of the theorem."""


class Check:
    """Collects failures for one tuple."""

    __slots__ = ("failures", "disagreements", "skipped")

    def __init__(self):
        self.failures: list = []
        self.disagreements: list = []
        self.skipped = False

    def require(self, ok: bool, message: str) -> None:
        if not ok:
            self.failures.append(message)

    def agree(self, ok: bool, message: str) -> None:
        if not ok:
            self.disagreements.append(message)

    @staticmethod
    def hypothesis(ok: bool, why: str) -> None:
        if not ok:
            raise Skip(why)


def show(x) -> str:
    return "none" if x is None else str(x)


class Context:
    def __init__(self, universe: Universe):
        self.universe = universe
        self.ring = universe.tier == "ring"
        self.exhaustive = universe.monoid is not None
        if self.exhaustive:
            self.oracle = TableOracle(universe.monoid, universe.elements)
        else:
            self.oracle = RankOracle()
        self._memo: dict = {}

    def _cached(self, chk: Check, key: tuple, compute: Callable[[], tuple]) -> Any:
        hit = self._memo.get(key)
        if hit is None:
            if len(self._memo) > _MEMO_LIMIT:
                self._memo.clear()
            hit = self._memo[key] = compute()
        value, notes = hit
        if notes:
            chk.disagreements.extend(notes)
        return value

    # -- Green preorders --------------------------------------------------------

    def leq(self, chk: Check, a, b, relation: str) -> bool:
        """Criterion decision (rref or witness table), checked against the oracle."""
        def compute():
            w = a.green_leq(b, relation)
            notes = []
            if w.holds and not w.verify(a, b):
                notes.append(f"Green witness for {show(a)} <={relation} {show(b)} does not verify")
            if w.holds != self.oracle.leq(a, b, relation):
                notes.append(f"{show(a)} <={relation} {show(b)}: criterion {w.holds}, oracle {not w.holds}")
            return w.holds, notes
        return self._cached(chk, ("leq", relation, a, b), compute)

    def left_factors(self, target, m) -> list:
        """All ``x`` with ``x m = target`` (exhaustive) or the canonical one."""
        if self.exhaustive:
            return self.oracle.left_factors(target, m)
        w = target.green_leq(m, "L")
        return [w.x] if w.holds else []

    def right_factors(self, target, m) -> list:
        if self.exhaustive:
            return self.oracle.right_factors(target, m)
        w = target.green_leq(m, "R")
        return [w.y] if w.holds else []

    # -- inverses along an element -----------------------------------------------

    def along(self, chk: Check, a, d):
        """``a^{||d}`` or None; the criterion route is compared with the oracle."""
        def compute():
            notes = []
            truth = self.oracle.along(a, d)
            try:
                crit = invert_along(a, d).b
            except ConsistencyError as exc:
                notes.append(f"criterion routes inconsistent: {exc}")
                crit = truth
            if crit != truth:
                notes.append(f"{show(a)} along {show(d)}: criterion {show(crit)}, oracle {show(truth)}")
            return truth, notes
        return self._cached(chk, ("along", a, d), compute)

    def one_sided(self, chk: Check, a, d, side: str):
        """A ``side`` inverse of ``a`` along ``d`` or None (existence from the oracle)."""
        def compute():
            notes = []
            truth = self.oracle.along(a, d, side)
            try:
                w = one_sided_along(a, d, side)
                crit = w.b
            except ConsistencyError as exc:
                notes.append(f"{side} along route inconsistent: {exc}")
                crit = None
            if (crit is None) != (truth is None):
                notes.append(f"{side} inverse of {show(a)} along {show(d)}: "
                             f"criterion {crit is not None}, oracle {truth is not None}")
                crit = truth
            elif crit is not None:
                rel = "L" if side == "left" else "R"
                ok_eq = (crit @ a @ d == d) if side == "left" else (d @ a @ crit == d)
                if not (ok_eq and self.oracle.leq(crit, d, rel)):
                    notes.append(f"{side} inverse witness {show(crit)} fails its equations")
            return crit, notes
        return self._cached(chk, ("one", side, a, d), compute)

    # -- MP, group, g-MP -----------------------------------------------------------

    def mp(self, chk: Check, a):
        def compute():
            notes = []
            truth = self.oracle.mp(a)
            try:
                crit = moore_penrose(a).mp
            except ConsistencyError as exc:
                notes.append(str(exc))
                crit = truth
            if crit != truth:
                notes.append(f"MP of {show(a)}: criterion {show(crit)}, oracle {show(truth)}")
            return truth, notes
        return self._cached(chk, ("mp", a), compute)

    def group(self, chk: Check, a):
        def compute():
            notes = []
            truth = self.oracle.group(a)
            try:
                crit = group_of(a)
            except ConsistencyError as exc:
                notes.append(str(exc))
                crit = truth
            if crit != truth:
                notes.append(f"group inverse of {show(a)}: criterion {show(crit)}, oracle {show(truth)}")
            return truth, notes
        return self._cached(chk, ("group", a), compute)

    def gmp(self, chk: Check, a, side: str) -> bool:
        def compute():
            notes = []
            truth = self.oracle.gmp(a, side)
            try:
                crit = gmp_check(a, side).holds
            except ConsistencyError as exc:
                notes.append(str(exc))
                crit = truth
            if crit != truth:
                notes.append(f"{side} g-MP of {show(a)}: criterion {crit}, oracle {truth}")
            return truth, notes
        return self._cached(chk, ("gmp", side, a), compute)

    def exists_bounded(self, chk: Check, a, m, side: str) -> bool:
        """Left: some ``b`` with ``b m = a``, ``b <=_L a``. Right: ``m c = a``, ``c <=_R a``."""
        if side == "left":
            return self._cached(chk, ("bnd", side, a, m), lambda: (self.oracle.exists_bounded(a, m), ()))
        return self._cached(chk, ("bnd", side, a, m), lambda: (self.oracle.exists_bounded_right(a, m), ()))

    # -- ring tier -----------------------------------------------------------------

    def unit(self, chk: Check, x):
        """Two-sided inverse of ``x`` or None."""
        def compute():
            truth = self.oracle.unit(x)
            crit = try_invert(x)
            notes = [] if crit == truth else [f"inverse of {show(x)}: rref {show(crit)}, oracle {show(truth)}"]
            return truth, notes
        return self._cached(chk, ("unit", x), compute)

    def inners(self, d) -> list:
        """Inner inverses of ``d``: all of them on finite carriers, else the
        canonical one plus a seeded sample of the parametric family."""
        key = ("inners", d)
        hit = self._memo.get(key)
        if hit is None:
            if self.exhaustive:
                found = self.oracle.inners(d)
            else:
                g = inner_inverse(d)
                found = [g] + [x for x in sample_inner_inverses(d, INNER_SAMPLES, self.universe.seed) if x != g]
                found = list(dict.fromkeys(found))
            hit = self._memo[key] = (found, ())
        return hit[0]

"""Seeded property suite over random matrices: MP against the full-rank
factorization, the two unit formulas for a^||d, and invariance of the
triple-product formula under sampled inner inverses."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from ..inverses import inverse_along, mp_inverse, penrose_failures, sample_inner_inverses
from ..matrix import inner_inverse, random_rank_matrix, try_invert
from ..scalars import QI, Domain
from .oracle import RankOracle, frf_pseudoinverse

MAX_ATTEMPTS_FACTOR = 20


@dataclass
class PropertyReport:
    domain: str
    n: int
    seed: int
    samples: int
    mp_checked: int = 0
    along_pairs: int = 0
    along_attempts: int = 0
    triple_checked: int = 0
    triple_skipped: int = 0
    inner_samples: int = 5
    failures: list = field(default_factory=list)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out

    @property
    def ok(self) -> bool:
        return not self.failures and self.along_pairs == self.samples


def property_suite(samples: int = 200, seed: int = 0, n: int = 3, domain: Domain = QI,
                   inner_samples: int = 5) -> PropertyReport:
    rep = PropertyReport(domain.name, n, seed, samples, inner_samples=inner_samples)
    for i in range(samples):
        a = random_rank_matrix(np.random.default_rng([seed, 0, i]), domain, n)
        r = mp_inverse(a)
        frf = frf_pseudoinverse(a)
        rep.mp_checked += 1
        if r.mp != frf or (r.mp is not None and penrose_failures(a, r.mp)):
            rep.failures.append({"check": "mp", "index": i, "a": str(a), "mp": str(r.mp), "oracle": str(frf)})

    oracle = RankOracle()
    j = 0
    while rep.along_pairs < samples and j < samples * MAX_ATTEMPTS_FACTOR:
        rng = np.random.default_rng([seed, 1, j])
        j += 1
        a, d, b = (random_rank_matrix(rng, domain, n) for _ in range(3))
        g = inner_inverse(d)
        one = d.one()
        ui, vi = try_invert(d @ a + one - d @ g), try_invert(a @ d + one - g @ d)
        truth = oracle.along(a, d)
        exists = truth is not None
        if ui is None or vi is None:
            if (ui is None) != (vi is None) or exists:
                rep.failures.append({"check": "unit criteria", "index": j - 1, "a": str(a), "d": str(d)})
            continue
        rep.along_pairs += 1
        left, right = ui @ d, d @ vi
        if left != right or left != truth or left @ a @ d != d or d @ a @ left != d:
            rep.failures.append({"check": "along formulas", "index": j - 1, "a": str(a), "d": str(d),
                                 "left": str(left), "right": str(right)})
            continue
        q = inverse_along(b, d).b
        adb, bda = inverse_along(a @ d @ b, d).b, inverse_along(b @ d @ a, d).b
        if q is None:
            rep.triple_skipped += 1
            if adb is not None or bda is not None:
                rep.failures.append({"check": "triple existence", "index": j - 1,
                                     "a": str(a), "b": str(b), "d": str(d)})
            continue
        rep.triple_checked += 1
        for k, h in enumerate(sample_inner_inverses(d, inner_samples, seed=int(rng.integers(1 << 30)))):
            if q @ h @ left != adb or left @ h @ q != bda:
                rep.failures.append({"check": "triple invariance", "index": j - 1, "inner": k,
                                     "a": str(a), "b": str(b), "d": str(d)})
    rep.along_attempts = j
    return rep

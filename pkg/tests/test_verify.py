import itertools
import json

import pytest

from geninv import GF, QI, SquareMatrix, try_invert
from geninv.formats import dumps
from geninv.monoid import all_matrices
from geninv.verify import (LABELS, OUT_OF_SCOPE, REGISTRY, TierMismatch, UniverseError, parse_universe, recheck,
                           registry_ids, remark_420_scan, search_cline, singleton_universe, verify_all,
                           verify_theorem)
from geninv.verify.search import search_cline_explicit
from geninv.verify.suite import property_suite
from geninv.verify.theorems import Theorem

from conftest import M

F2, F3 = GF(2), GF(3)

CRITERION_IDS = ["T2.5", "T2.6", "C2.7", "L2.8", "L2.9", "T2.10", "T2.11", "T2.12", "L2.13", "T2.14", "T2.15",
                 "T2.16", "L2.17", "L2.18", "T2.19", "C2.21", "C2.22", "C2.23", "L3.1", "L3.2", "T3.3", "C3.4",
                 "C3.5", "C3.6", "T3.7", "C3.8", "C3.9"]


class TestRegistry:
    def test_every_label_is_covered_once(self):
        covered = set(REGISTRY) | set(OUT_OF_SCOPE)
        assert covered == set(LABELS)
        assert not set(REGISTRY) & set(OUT_OF_SCOPE)
        assert len(LABELS) == len(set(LABELS))

    def test_listed_entries_present(self):
        assert set(CRITERION_IDS) <= set(registry_ids())

    def test_entries_well_formed(self):
        for tid in registry_ids():
            th = REGISTRY[tid]
            assert th.arity in (1, 2, 3) and th.tier in ("monoid", "ring") and th.statement


@pytest.fixture
def false_theorem(monkeypatch):
    def idempotent_check(ctx, chk, a):
        chk.require(a @ a == a, f"{a} is not idempotent")
    th = Theorem("X0.1", 1, "monoid", False, "every element is idempotent", idempotent_check)
    monkeypatch.setitem(REGISTRY, "X0.1", th)
    return th


class TestRunner:
    def test_counterexamples_refail(self, false_theorem):
        u = parse_universe("gf:2:2")
        rep = verify_theorem("X0.1", u)
        assert not rep.ok
        idem = sum(1 for m in u.elements if m @ m == m)
        assert len(rep.counterexamples) == 16 - idem
        for c in rep.counterexamples:
            values = u.tuple_at(c.index, 1)
            assert recheck("X0.1", values, u)
            assert recheck("X0.1", values)  # fresh explicit universe

    def test_passing_tuple_rechecks_clean(self):
        assert recheck("T2.19", (M([[1, 0], [1, 0]]), SquareMatrix.identity(QI, 2), M([[1, 1], [0, 0]]))) == []

    def test_tier_mismatch(self, tmp_path):
        path = tmp_path / "two.json"
        path.write_text('{"k": 2, "identity": 0, "mul": [[0, 1], [1, 1]]}')
        u = parse_universe(f"table:{path}")
        with pytest.raises(TierMismatch):
            verify_theorem("L3.1", u)
        with pytest.raises(TierMismatch):
            verify_theorem("T2.5", u)  # needs the involution
        assert verify_theorem("L2.4", u).ok

    def test_t219_exhaustive_counts(self):
        rep = verify_theorem("T2.19", parse_universe("gf:2:2"))
        assert rep.instances_checked == 4096 and rep.total_tuples == 4096 and not rep.sampled
        assert rep.ok and rep.skipped > 0 and rep.applicable > 0

    def test_l31_random(self):
        rep = verify_theorem("L3.1", parse_universe("qi:3:random", samples=500, seed=7))
        assert rep.instances_checked == 500 and rep.ok

    def test_l213_commuting_generator(self):
        rep = verify_theorem("L2.13", parse_universe("qi:3:random", samples=60, seed=2))
        assert rep.ok and rep.applicable > 0

    def test_hypothesis_skips_visible(self):
        rep = verify_theorem("C2.21", parse_universe("gf:2:2"))
        assert rep.ok and 0 < rep.skipped < rep.instances_checked

    def test_determinism_across_jobs(self):
        u = parse_universe("gf:2:2")
        a = [r.to_dict() for r in verify_all(u, 1, ["T2.19", "L2.18", "T2.5"])]
        b = [r.to_dict() for r in verify_all(u, 2, ["T2.19", "L2.18", "T2.5"])]
        assert dumps(a) == dumps(b)
        r = parse_universe("qi:3:random", samples=80, seed=4)
        a = [x.to_dict() for x in verify_all(r, 1, ["L3.2", "C3.8"])]
        b = [x.to_dict() for x in verify_all(r, 2, ["L3.2", "C3.8"])]
        assert dumps(a) == dumps(b)

    def test_counterexample_order_across_jobs(self, false_theorem):
        u = parse_universe("gf:2:2", samples=None)
        one = verify_all(u, 1, ["X0.1"])[0]
        two = verify_all(u, 3, ["X0.1"])[0]
        assert [c.index for c in one.counterexamples] == [c.index for c in two.counterexamples]

    def test_timing_only_on_request(self):
        rep = verify_theorem("T2.5", parse_universe("gf:2:2"))
        assert "elapsed_seconds" not in rep.to_dict()
        assert "elapsed_seconds" in rep.to_dict(timing=True)


class TestUniverse:
    @pytest.mark.parametrize("spec", ["gf:4:2", "gf:x:2", "qi:3", "zz:1", "table:", "gf:2:0"])
    def test_bad_specs(self, spec):
        with pytest.raises((UniverseError, ValueError)):
            parse_universe(spec)

    def test_random_needs_samples(self):
        with pytest.raises(UniverseError):
            parse_universe("qi:3:random")

    def test_cap(self):
        with pytest.raises(UniverseError):
            parse_universe("gf:3:3")  # 19683 elements
        with pytest.raises(UniverseError):
            parse_universe("gf:2:3", cap=100)
        assert parse_universe("gf:2:3", cap=1000).size == 512

    def test_sampled_exhaustive(self):
        u = parse_universe("gf:3:2", samples=1000, seed=9)
        idx, total, sampled = u.indices(3)
        assert total == 81 ** 3 and sampled and len(idx) == 1000
        assert list(idx) == sorted(set(idx))
        idx2, _, sampled2 = u.indices(1)
        assert not sampled2 and len(idx2) == 81
        again, _, _ = parse_universe("gf:3:2", samples=1000, seed=9).indices(3)
        assert list(idx) == list(again)

    def test_tuple_decoding(self):
        u = parse_universe("gf:2:2")
        assert u.tuple_at(16 * 3 + 5, 2) == (u.elements[3], u.elements[5])

    def test_random_tuples_seeded(self):
        u = parse_universe("qi:2:random", samples=5, seed=3)
        v = parse_universe("qi:2:random", samples=5, seed=3)
        assert u.tuple_at(4, 3) == v.tuple_at(4, 3)
        desc = u.describe()
        assert (desc["spec"], desc["kind"], desc["samples"], desc["seed"]) == ("qi:2:random", "random", 5, 3)

    def test_singleton(self):
        u = singleton_universe((M([[1, 0], [1, 0]]),))
        assert u.kind == "explicit" and u.monoid is None


class TestCline:
    def test_worked_counterexample(self):
        a, d = M([[1, 0], [1, 0]]), M([[1, 1], [0, 0]])
        rep = search_cline_explicit(a, SquareMatrix.identity(QI, 2), d)
        assert rep.fails_count == 1 and rep.holds_count == 0
        inst = rep.fails[0]
        assert inst.formula == "[[1/4, 1/4], [1/4, 1/4]]" and inst.ab_along == "[[1/2, 1/2], [0, 0]]"

    def test_reduced_mod_three(self):
        a, d = M([[1, 0], [1, 0]], F3), M([[1, 1], [0, 0]], F3)
        rep = search_cline_explicit(a, SquareMatrix.identity(F3, 2), d)
        assert rep.fails_count == 1
        assert rep.fails[0].ab_along == str(M([[2, 2], [0, 0]], F3))

    def test_units_along_one(self):
        units = [m for m in all_matrices(F2, 2) if try_invert(m) is not None]
        one = SquareMatrix.identity(F2, 2)
        for a, b in itertools.product(units, repeat=2):
            rep = search_cline_explicit(a, b, one)
            assert rep.holds_count == 1

    def test_universe_scan(self):
        rep = search_cline(parse_universe("gf:2:2"))
        assert rep.scanned == 4096
        assert rep.holds_count + rep.fails_count == rep.both_exist
        assert rep.fails_count > 0 and rep.holds_count > 0
        assert rep.oracle_disagreements == []
        assert "open" in rep.note

    def test_scan_deterministic_across_jobs(self):
        u = parse_universe("gf:2:2")
        a, b = search_cline(u, 1), search_cline(u, 2)
        assert dumps(a) == dumps(b)


class TestUnitAlongOneScan:
    def test_needs_finite_universe(self):
        with pytest.raises(ValueError):
            remark_420_scan(parse_universe("qi:2:random", samples=3))


class TestPropertySuite:
    def test_small_run(self):
        rep = property_suite(samples=25, seed=11)
        assert rep.ok and rep.mp_checked == 25 and rep.along_pairs == 25
        assert rep.triple_checked + rep.triple_skipped == 25

    def test_gf_domain(self):
        rep = property_suite(samples=20, seed=1, n=2, domain=F3)
        assert rep.failures == [] and rep.mp_checked == 20

    def test_deterministic(self):
        assert dumps(property_suite(samples=10, seed=5).to_dict()) == dumps(property_suite(samples=10, seed=5).to_dict())

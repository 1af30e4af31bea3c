import itertools

import numpy as np
import pytest

from geninv import GF, SquareMatrix, closure, exhaustive_green, exhaustive_solutions, load_monoid
from geninv.monoid import CapExceeded, MonoidError, all_matrices, full_matrix_monoid, table_from_matrices
from geninv.verify import parse_universe, remark_420_scan

from conftest import M

F2, F3 = GF(2), GF(3)


@pytest.fixture(scope="module")
def m2():
    return full_matrix_monoid(2, 2)


def eid(mon, rows, dom=F2):
    return mon.index[M(rows, dom)]


class TestLoad:
    def test_two_element(self):
        mon = load_monoid({"k": 2, "identity": 0, "mul": [[0, 1], [1, 1]], "star": [0, 1]})
        assert mon.k == 2 and list(mon.star) == [0, 1]

    def test_associativity_violation_reported(self):
        # 1*1 = 2, 2*1 = 1, 1*2 = 2: (1*1)*1 = 1 but 1*(1*1) = 2
        mul = [[0, 1, 2], [1, 2, 2], [2, 1, 2]]
        with pytest.raises(MonoidError) as err:
            load_monoid({"k": 3, "identity": 0, "mul": mul})
        a, b, c = err.value.witness
        assert mul[mul[a][b]][c] != mul[a][mul[b][c]]

    def test_identity_not_neutral(self):
        with pytest.raises(MonoidError):
            load_monoid({"k": 2, "identity": 1, "mul": [[0, 1], [1, 1]]})

    def test_bad_star(self):
        # star swapping 0 and 1 moves the identity: not an anti-automorphism
        with pytest.raises(MonoidError):
            load_monoid({"k": 2, "identity": 0, "mul": [[0, 1], [1, 1]], "star": [1, 0]})

    def test_malformed(self):
        with pytest.raises(MonoidError):
            load_monoid({"k": 2, "identity": 0, "mul": [[0, 1]]})
        with pytest.raises(MonoidError):
            load_monoid({"identity": 0})

    def test_round_trip(self, m2):
        again = load_monoid(m2.to_dict())
        assert np.array_equal(again.mul, m2.mul) and np.array_equal(again.star, m2.star)

    def test_full_gf2_has_transpose(self, m2):
        assert m2.k == 16
        for i, m in enumerate(m2.elements):
            assert m2.elements[m2.star[i]] == m.transpose()


class TestClosure:
    def test_identity_only(self):
        assert closure([SquareMatrix.identity(F2, 2)]).k == 1

    def test_all_sixteen(self):
        mon = closure(all_matrices(F2, 2))
        assert mon.k == 16 and mon.star is not None

    def test_cyclic_order_three(self):
        mon = closure([M([[1, 1], [0, 1]], F3)])
        assert mon.k == 3
        assert mon.identity == 0

    def test_cap(self):
        with pytest.raises(CapExceeded):
            closure(all_matrices(F2, 2), cap=4)

    def test_not_closed(self):
        with pytest.raises(MonoidError):
            table_from_matrices([SquareMatrix.identity(F2, 2), M([[0, 1], [0, 0]], F2)])


class TestScans:
    def test_mp_of_identity(self, m2):
        assert exhaustive_solutions(m2, "mp", m2.identity).solutions == (m2.identity,)

    def test_no_mp_over_gf2(self, m2):
        assert len(exhaustive_solutions(m2, "mp", eid(m2, [[1, 1], [0, 0]]))) == 0

    def test_one_along_idempotent(self, m2):
        d = eid(m2, [[1, 0], [0, 0]])
        assert exhaustive_solutions(m2, "along", m2.identity, d).solutions == (d,)

    def test_green_examples(self, m2):
        a, b = eid(m2, [[1, 0], [1, 0]]), eid(m2, [[1, 1], [0, 0]])
        zero = eid(m2, [[0, 0], [0, 0]])
        w = exhaustive_green(m2, a, a, "L")
        assert w.holds
        assert not exhaustive_green(m2, a, b, "L").holds
        assert exhaustive_green(m2, zero, b, "L").holds
        assert exhaustive_green(m2, zero, b, "L").x == zero

    def test_along_unique_and_two_sided_is_both(self, m2):
        for a, d in itertools.product(range(m2.k), repeat=2):
            both = exhaustive_solutions(m2, "along", a, d).solutions
            left = set(exhaustive_solutions(m2, "left-along", a, d).solutions)
            right = set(exhaustive_solutions(m2, "right-along", a, d).solutions)
            assert len(both) <= 1
            assert set(both) == left & right

    def test_kernel_tables_match_scans(self, m2):
        left, right, both = m2.along
        for a, d in itertools.product(range(m2.k), repeat=2):
            for tag, tab in (("left-along", left), ("right-along", right), ("along", both)):
                sols = exhaustive_solutions(m2, tag, a, d).solutions
                assert tab[a, d] == (sols[0] if sols else -1)

    def test_penrose_masks_match_scans(self, m2):
        from geninv._kernels import EQ_INNER
        for a in range(m2.k):
            inner = exhaustive_solutions(m2, "inner", a).solutions
            assert tuple(np.flatnonzero(m2.penrose[a] & EQ_INNER)) == inner

    def test_literal_right_reading_differs(self, m2):
        differs = 0
        for a, d in itertools.product(range(m2.k), repeat=2):
            plain = exhaustive_solutions(m2, "right-along", a, d).solutions
            literal = exhaustive_solutions(m2, "right-along", a, d, literal_right=True).solutions
            differs += plain != literal
        assert differs > 0

    def test_bad_subjects(self, m2):
        with pytest.raises(ValueError):
            exhaustive_solutions(m2, "mp", 99)
        with pytest.raises(ValueError):
            exhaustive_solutions(m2, "nope", 0)
        with pytest.raises(ValueError):
            exhaustive_solutions(m2, "along", 0)

    def test_star_tag_needs_star(self):
        mon = closure([M([[1, 1], [0, 1]], F3)])
        if mon.star is None:
            with pytest.raises(MonoidError):
                exhaustive_solutions(mon, "mp", 0)

    def test_scan_cap(self, m2, monkeypatch):
        monkeypatch.setenv("GENINV_CAP_MONOID", "8")
        with pytest.raises(CapExceeded):
            exhaustive_solutions(m2, "inner", 0)


class TestElements:
    def test_operations(self, m2):
        x, y = m2.element(eid(m2, [[1, 0], [1, 0]])), m2.element(eid(m2, [[1, 1], [0, 0]]))
        assert m2.elements[(x @ y).id] == m2.elements[x.id] @ m2.elements[y.id]
        assert m2.elements[x.star().id] == m2.elements[x.id].transpose()
        assert x.one().id == m2.identity
        g = x.inner_inverse()
        assert x @ g @ x == x

    def test_green_leq_matches_matrices(self, m2):
        for a, b in itertools.product(m2.all_elements(), repeat=2):
            for rel in "LRH":
                assert a.green_leq(b, rel).holds == m2.elements[a.id].green_leq(m2.elements[b.id], rel).holds


class TestUnitAlongOneScan:
    def test_gf2(self):
        rep = remark_420_scan(parse_universe("gf:2:2"))
        assert rep.pairs_scanned == 256 and rep.instances == [] and rep.oracle_disagreements == []

    def test_trivial_monoid(self, tmp_path):
        path = tmp_path / "one.json"
        path.write_text('{"k": 1, "identity": 0, "mul": [[0]], "star": [0]}')
        rep = remark_420_scan(parse_universe(f"table:{path}"))
        assert rep.pairs_scanned == 1 and rep.instances == []

    @pytest.mark.slow
    def test_gf3(self):
        rep = remark_420_scan(parse_universe("gf:3:2"))
        assert rep.pairs_scanned == 81 ** 2 and rep.instances == [] and rep.oracle_disagreements == []

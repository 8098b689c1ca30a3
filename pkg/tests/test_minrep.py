import pytest
from hypothesis import given, settings, strategies as st

from helpers import orbit_of, sweep_orbits
from minflag.minrep import (
    ONE,
    Poly,
    PolyMatrix,
    Q,
    ZERO,
    cartan_action,
    char_poly,
    commutator,
    lowering_matrix,
    psi_raising_matrix,
    quantum_operator,
    raising_matrix,
    verify_rep_relations,
)
from minflag.rootsys import pair
from minflag.weylorbit import length


def _m(rows):
    n = len(rows)
    return PolyMatrix(n, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)})


polys = st.dictionaries(st.integers(0, 5), st.integers(-9, 9), max_size=4).map(Poly)


# -- Poly ----------------------------------------------------------------------


def test_poly_basics():
    p = Poly({0: 1, 2: 3})
    assert p.coeff(0) == 1 and p.coeff(2) == 3 and p.coeff(1) == 0
    assert str(p) == "3*q^2 + 1"
    assert str(ZERO) == "0"
    assert str(Q) == "q"
    assert str(Poly({1: -1, 0: 2})) == "-q + 2"
    assert Poly({3: 0}) == ZERO  # zero coefficients are dropped
    assert Q * Q == Poly({2: 1})
    assert (Q + 1) * (Q - 1) == Poly({2: 1, 0: -1})
    assert Poly.const(5) == 5
    assert Q.q_scaled(-1) == -Q


def test_poly_rejects_negative_exponents():
    with pytest.raises(ValueError):
        Poly({-1: 1})


@settings(max_examples=100, deadline=None)
@given(a=polys, b=polys, c=polys)
def test_poly_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


# -- generator matrices --------------------------------------------------------


def test_lowering_a1():
    assert lowering_matrix(orbit_of("A", 1, 1), 1) == _m([[0, 0], [1, 0]])


def test_lowering_sum_is_chain_shift_on_a2():
    orb = orbit_of("A", 2, 1)
    total = lowering_matrix(orb, 1) + lowering_matrix(orb, 2)
    assert total == _m([[0, 0, 0], [1, 0, 0], [0, 1, 0]])


def test_lowering_matrices_are_nilpotent_of_order_two():
    for orb in sweep_orbits():
        for j in range(1, orb.rs.rank + 1):
            e = lowering_matrix(orb, j)
            assert (e * e).is_zero()


def test_raising_a1():
    assert raising_matrix(orbit_of("A", 1, 1), 1) == _m([[0, 1], [0, 0]])


def test_raising_is_transpose_of_lowering():
    for orb in sweep_orbits():
        for j in range(1, orb.rs.rank + 1):
            assert raising_matrix(orb, j) == lowering_matrix(orb, j).transpose()


def test_raising_kills_highest_weight_vector():
    for orb in sweep_orbits():
        for j in range(1, orb.rs.rank + 1):
            col = [raising_matrix(orb, j).entry(i, 0) for i in range(orb.size)]
            assert all(p == ZERO for p in col)


def test_cartan_action_a1():
    assert cartan_action(orbit_of("A", 1, 1), 1) == _m([[1, 0], [0, -1]])


def test_cartan_action_traceless_on_a2():
    orb = orbit_of("A", 2, 1)
    for j in (1, 2):
        h = cartan_action(orb, j)
        assert sum(int(h.entry(i, i).coeff(0)) for i in range(3)) == 0


def test_generator_entries_are_zero_or_one():
    for orb in sweep_orbits():
        mats = [psi_raising_matrix(orb)]
        for j in range(1, orb.rs.rank + 1):
            mats.append(lowering_matrix(orb, j))
            mats.append(raising_matrix(orb, j))
        for m in mats:
            assert all(p == ONE for _i, _j, p in m.nonzero())
        h_entries = {
            int(p.coeff(0))
            for j in range(1, orb.rs.rank + 1)
            for _i, _k, p in cartan_action(orb, j).nonzero()
        }
        assert h_entries <= {-1, 1}


def test_psi_raising_a1():
    assert psi_raising_matrix(orbit_of("A", 1, 1)) == _m([[0, 1], [0, 0]])


def test_psi_raising_a2_single_edge_lowest_to_highest():
    orb = orbit_of("A", 2, 1)
    m = psi_raising_matrix(orb)
    assert m.nonzero() == [(0, 2, ONE)]


def test_psi_raising_d4_has_two_edges():
    # brute force over the 8 vector-representation weights: the highest
    # coroot pairs to -1 at lengths 5 and 6, so the quadric gets two
    # q-edges (lengths jump by -(s-1) = -5 in both)
    orb = orbit_of("D", 4, 1)
    rs = orb.rs
    brute = [el.weight for el in orb.elements if pair(rs, el.weight, rs.highest_root) == -1]
    assert len(brute) == 2
    m = psi_raising_matrix(orb)
    assert len(m.nonzero()) == 2
    assert sorted(length(orb, w) for w in brute) == [5, 6]


def test_operator_support_counts_a3_k2():
    orb = orbit_of("A", 3, 2)
    assert len(quantum_operator(orb).nonzero()) == 8  # 6 classical + 2 quantum


def test_grading_shifts_of_generators():
    for orb in sweep_orbits():
        s = orb.rs.coxeter_number
        lengths = [length(orb, el.weight) for el in orb.elements]
        for j in range(1, orb.rs.rank + 1):
            for (i, k, _p) in lowering_matrix(orb, j).nonzero():
                assert lengths[i] == lengths[k] + 1
        for (i, k, _p) in psi_raising_matrix(orb).nonzero():
            assert lengths[i] == lengths[k] - (s - 1)


def test_quantum_operator_a1():
    assert quantum_operator(orbit_of("A", 1, 1)) == _m([[0, Q], [1, 0]])


# -- characteristic polynomial ---------------------------------------------------


def test_char_poly_known_small_matrices():
    two = Poly.const(2)
    assert char_poly(_m([[two]])) == (ONE, Poly.const(-2))
    # diagonal: (x - 1)(x - 2) = x^2 - 3x + 2
    assert char_poly(_m([[1, 0], [0, 2]])) == (ONE, Poly.const(-3), Poly.const(2))
    # nilpotent 3-chain: x^3
    assert char_poly(_m([[0, 0, 0], [1, 0, 0], [0, 1, 0]])) == (ONE, ZERO, ZERO, ZERO)
    assert char_poly(_m([[0, Q], [1, 0]])) == (ONE, ZERO, -Q)


@pytest.mark.parametrize("n", range(1, 7))
def test_char_poly_projective_series(n):
    cp = char_poly(quantum_operator(orbit_of("A", n, 1)))
    assert cp == (ONE,) + (ZERO,) * n + (-Q,)


@pytest.mark.parametrize("n", range(2, 6))
def test_char_poly_long_chain_series(n):
    cp = char_poly(quantum_operator(orbit_of("C", n, 1)))
    assert cp == (ONE,) + (ZERO,) * (2 * n - 1) + (-Q,)


# -- structural relations ----------------------------------------------------------


@pytest.mark.parametrize("case", [("A", 1, 1), ("E", 6, 1), ("B", 4, 4)])
def test_rep_relations_explicit_cases(case):
    report = verify_rep_relations(orbit_of(*case))
    assert report.ok, report.failure
    assert report.checks > 0


def test_rep_relations_brackets_spotcheck():
    orb = orbit_of("A", 3, 2)
    for j in (1, 2, 3):
        assert commutator(raising_matrix(orb, j), lowering_matrix(orb, j)) == cartan_action(orb, j)

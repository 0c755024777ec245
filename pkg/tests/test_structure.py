import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fgunits import (
    AlgebraElement,
    NotNormalized,
    apply_involution,
    build_u_alpha,
    diagonalize,
    enumerate_L,
    invariants_symmetric,
    invariants_unitary,
    mul,
    predicted_unit_order,
    psi1,
    psi2,
    structure_report,
    symmetric_basis,
    unit_order,
    unitary_basis,
)
from fgunits.structure import L0, L1, L2, expected_order_multiset

from conftest import DESK_CONFIGS, config_id, make, random_element, random_involution


def diag(p, orders, kind="canonical"):
    return diagonalize(make(p, orders, kind)[1])


def alphas(L, cls=None):
    return [a.alpha[0] for a in L if cls is None or a.cls == cls]


def test_enumerate_L_C9():
    L = enumerate_L(diag(3, (9,)))
    assert alphas(L) == [1, 2, 4, 5, 7, 8]
    assert alphas(L, L1) == [1, 5, 7]
    assert alphas(L, L2) == [2, 4, 8]
    assert alphas(L, L0) == []


def test_enumerate_L_identity_and_trivial():
    L = enumerate_L(diag(3, (3,), "identity"))
    assert alphas(L) == [1, 2] and all(a.cls == L0 for a in L)
    assert enumerate_L(diag(3, ())) == []


def test_index_class_fields():
    d = diag(3, (3, 3), "swap")
    for a in enumerate_L(d):
        assert a.weight == sum(a.alpha)
        assert a.head == sum(a.alpha[: d.l])


def _partition_sizes(d):
    L = enumerate_L(d)
    fix0, full0 = d.fixed_subgroup_orders(0)
    fix1, full1 = d.fixed_subgroup_orders(1)
    n1 = sum(a.cls == L1 for a in L)
    n02 = sum(a.cls != L1 for a in L)
    return len(L), n1, n02, (full0, full1, fix0, fix1)


def test_partition_cardinalities(rng):
    ds = [diag(*c) for c in DESK_CONFIGS] + [diagonalize(random_involution(rng)) for _ in range(15)]
    for d in ds:
        n, n1, n02, (g, gp, h, hp) = _partition_sizes(d)
        assert n == g - gp
        assert 2 * n1 == g - gp - h + hp
        assert 2 * n02 == g - gp + h - hp


def test_build_u_alpha_examples():
    d = diag(3, (3,))
    G = d.original
    assert build_u_alpha((1,), d) == AlgebraElement.basis(G, (1,))
    assert build_u_alpha((2,), d) == AlgebraElement(G, np.array([2, 1, 1]))
    with pytest.raises(ValueError):
        build_u_alpha((3,), diag(3, (9,)))


def test_psi_examples():
    d = diag(3, (3,))
    G, eta = d.original, d.eta
    a = AlgebraElement.basis(G, (1,))
    one = AlgebraElement.one(G)
    sigma = AlgebraElement(G, np.array([1, 1, 1]))
    assert psi1(a, eta) == a
    assert psi1(one, eta) == one and psi2(one, eta) == one
    assert psi2(one + sigma, eta) == one + 2 * sigma
    with pytest.raises(NotNormalized):
        psi1(2 * one, eta)


def test_bases_C3_canonical():
    d = diag(3, (3,))
    G = d.original
    sigma = AlgebraElement(G, np.array([1, 1, 1]))
    one = AlgebraElement.one(G)
    assert [x for _, x in unitary_basis(d)] == [AlgebraElement.basis(G, (1,))]
    assert [x for _, x in symmetric_basis(d)] == [one + 2 * sigma]


def test_bases_C9_canonical():
    d = diag(3, (9,))
    U = unitary_basis(d)
    S = symmetric_basis(d)
    assert [a.alpha for a, _ in U] == [(1,), (5,), (7,)]
    assert [unit_order(x) for _, x in U] == [9, 3, 3]
    assert [a.alpha for a, _ in S] == [(2,), (4,), (8,)]
    assert [unit_order(x) for _, x in S] == [9, 3, 3]


def test_identity_involution_bases():
    d = diag(3, (3,), "identity")
    assert unitary_basis(d) == []
    S = symmetric_basis(d)
    assert [a.cls for a, _ in S] == [L0, L0]
    assert [x for _, x in S] == [build_u_alpha((1,), d), build_u_alpha((2,), d)]


def test_invariant_formula_examples():
    d = diag(3, (9,))
    assert [invariants_unitary(d, i) for i in (1, 2, 3)] == [2, 1, 0]
    assert [invariants_symmetric(d, i) for i in (1, 2, 3)] == [2, 1, 0]
    t = diag(3, ())
    assert invariants_unitary(t, 1) == invariants_symmetric(t, 1) == 0
    c3 = diag(3, (3,))
    assert invariants_symmetric(c3, 1) == invariants_unitary(c3, 1) == 1
    with pytest.raises(ValueError):
        invariants_unitary(c3, 0)


def test_predicted_unit_order_examples():
    assert predicted_unit_order((1,), diag(3, (9,))) == 9
    assert predicted_unit_order((5,), diag(3, (9,))) == 3
    assert predicted_unit_order((1, 1), diag(3, (3, 3))) == 3


def test_predicted_matches_actual(rng):
    ds = [diag(*c) for c in DESK_CONFIGS] + [diagonalize(random_involution(rng)) for _ in range(10)]
    for d in ds:
        for a in enumerate_L(d):
            assert predicted_unit_order(a, d) == unit_order(build_u_alpha(a, d))


@pytest.mark.parametrize("cfg", DESK_CONFIGS + [(3, (27,), "canonical"), (3, (3, 9), "canonical")], ids=config_id)
def test_basis_elements_land_in_right_subgroup(cfg):
    d = diag(*cfg)
    eta = d.eta
    for _, y in unitary_basis(d):
        assert mul(y, apply_involution(y, eta)) == AlgebraElement.one(d.original)
    for _, y in symmetric_basis(d):
        assert apply_involution(y, eta) == y


@pytest.mark.parametrize("cfg", DESK_CONFIGS + [(3, (27,), "canonical"), (3, (3, 9), "identity")], ids=config_id)
def test_structure_report_consistent(cfg):
    r = structure_report(diag(*cfg))
    assert r.check() == []
    assert r.log_order_V == r.size_G - 1
    assert r.rank_unitary == len(r.unitary)
    assert r.rank_symmetric == len(r.symmetric)


def test_structure_report_examples():
    r = structure_report(diag(3, (3,)))
    assert (r.log_order_V, r.log_order_S, r.log_order_U) == (2, 1, 1)
    assert (r.f_symmetric, r.f_unitary) == ((1,), (1,))
    r = structure_report(diag(3, (9,)))
    assert 3**r.log_order_V == 6561 and 3**r.log_order_S == 81 and 3**r.log_order_U == 81
    assert (r.f_symmetric, r.f_unitary) == ((2, 1), (2, 1))
    r = structure_report(diag(3, ()))
    assert (r.log_order_V, r.f_symmetric, r.f_unitary, r.symmetric, r.unitary) == (0, (), (), (), ())


def test_expected_order_multiset():
    assert expected_order_multiset(3, (2, 1)) == [3, 3, 9]


def test_report_check_flags_corruption():
    import dataclasses

    r = structure_report(diag(3, (9,)))
    bad = dataclasses.replace(r, f_unitary=(1, 1))
    assert bad.check()


SAMPLE_DIAGS = [diag(*c) for c in DESK_CONFIGS] + [diag(3, (27,)), diag(3, (3, 9)), diag(3, (3, 3, 3), "identity")]


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(SAMPLE_DIAGS), st.randoms(use_true_random=False))
def test_psi_maps_land_in_subgroups(d, r):
    x = random_element(d.original, r, normalized=True)
    eta = d.eta
    one = AlgebraElement.one(d.original)
    y1 = psi1(x, eta)
    assert mul(y1, apply_involution(y1, eta)) == one
    y2 = psi2(x, eta)
    assert apply_involution(y2, eta) == y2

import pytest

from fgunits import GroupSpec, GroupMismatch, InvalidGroup, TooLarge, group_mul


def test_group_mul_examples():
    assert group_mul(GroupSpec(3, (3, 3)), (1, 2), (2, 2)) == (0, 1)
    assert group_mul(GroupSpec(3, (9,)), (7,), (4,)) == (2,)
    G = GroupSpec(3, (3, 9))
    for b in G.elements():
        assert group_mul(G, G.identity, b) == b


def test_group_mul_mismatch():
    with pytest.raises(GroupMismatch):
        group_mul(GroupSpec(3, (3, 3)), (1,), (1, 2))


def test_derived_quantities():
    G = GroupSpec(3, (3, 9, 1))
    assert G.size == 27
    assert G.exponent == 9
    assert G.nilpotency_bound == 2 + 8 + 0


def test_mixed_radix_first_component_fastest():
    G = GroupSpec(3, (3, 9))
    assert G.element(1) == (1, 0)
    assert G.element(3) == (0, 1)
    assert [G.index(G.element(i)) for i in range(G.size)] == list(range(G.size))


@pytest.mark.parametrize("p, orders", [(2, (2,)), (9, (9,)), (3, (6,)), (3, (0,)), (1, ())])
def test_rejects_invalid(p, orders):
    with pytest.raises(InvalidGroup):
        GroupSpec(p, orders)


def test_size_guard():
    with pytest.raises(TooLarge):
        GroupSpec(3, (3,) * 9)
    assert GroupSpec(3, (3,) * 9, max_size=3**9).size == 3**9


def test_power_subgroup_order():
    G = GroupSpec(3, (27, 3))
    assert [G.power_subgroup_order(i) for i in range(4)] == [81, 9, 3, 1]

import pytest

from c2quadrics.noneq import InvalidSizeError, NoneqQuadricRing


def test_odd_quadric_basis_counts():
    # one basis element in each even degree from 0 to 2(2p-1)
    for n in range(3, 13, 2):
        p = n // 2
        ring = NoneqQuadricRing(n, "B")
        degs = [d for _, d in ring.basis()]
        assert degs == list(range(0, 2 * (2 * p - 1) + 1, 2))


def test_even_quadric_basis_counts():
    # doubled middle degree 2(p-1), one element in every other even degree
    for n in range(4, 13, 2):
        p = n // 2
        ring = NoneqQuadricRing(n, "D")
        degs = [d for _, d in ring.basis()]
        assert len(degs) == 2 * p
        assert degs.count(2 * (p - 1)) == 2
        for d in range(0, 2 * (2 * p - 2) + 1, 2):
            assert degs.count(d) >= 1


def test_q5_basis():
    ring = NoneqQuadricRing(5)
    assert [(k, d) for k, d in ring.basis()] == [
        ((0, 0), 0), ((1, 0), 2), ((0, 1), 4), ((1, 1), 6)
    ]


def test_q4_y_squared_vanishes():
    ring = NoneqQuadricRing(4)
    assert ring.mul(ring.y(), ring.y()) == {}
    # but c^2 = 2cy
    assert ring.c(2) == {(1, 1): 2}


def test_q6_y_squared():
    ring = NoneqQuadricRing(6)  # p = 3 odd: y^2 = c^2 y
    assert ring.mul(ring.y(), ring.y()) == {(2, 1): 1}


def test_two_points_idempotents():
    ring = NoneqQuadricRing(2)
    y = ring.y()
    one_minus_y = ring.add(ring.one(), ring.scale(y, -1))
    assert ring.mul(y, y) == y
    assert ring.mul(one_minus_y, one_minus_y) == one_minus_y
    assert ring.mul(y, one_minus_y) == {}
    assert ring.c() == {}


def test_q3_hyperplane_is_twice_point():
    ring = NoneqQuadricRing(3)  # p = 1: c = 2y
    assert ring.c() == {(0, 1): 2}
    assert ring.mul(ring.c(), ring.c()) == {}


def test_empty_quadric_is_zero_ring():
    ring = NoneqQuadricRing(1)
    assert ring.one() == {}
    assert ring.basis() == []


def test_t_action():
    ring = NoneqQuadricRing(6)  # type D: t swaps the rulings
    y = ring.y()
    ty = ring.t_act(y)
    assert ty == {(2, 0): 1, (0, 1): -1}  # c^{p-1} - y
    assert ring.t_act(ty) == y
    # cy is t-invariant
    cy = ring.mul(ring.c(), y)
    assert ring.t_act(cy) == cy
    # type B: t fixes y
    ringb = NoneqQuadricRing(5)
    assert ringb.t_act(ringb.y()) == ringb.y()


def test_invalid_sizes():
    with pytest.raises(InvalidSizeError):
        NoneqQuadricRing(4, "B")
    with pytest.raises(InvalidSizeError):
        NoneqQuadricRing(5, "D")
    with pytest.raises(InvalidSizeError):
        NoneqQuadricRing(-1)

import pytest

from c2quadrics.catalog import make_bu1, make_quadric
from c2quadrics.expressions import ExprError, parse_expression


import warnings

from c2quadrics.catalog import RestrictedGradingWarning

warnings.simplefilter("ignore", RestrictedGradingWarning)


def test_basic_reduction():
    Q = make_quadric(3, 3)
    assert parse_expression(Q, "x*x").is_zero()
    assert parse_expression(Q, "1") == Q.scalar(1)


def test_unit_expression():
    Q = make_quadric(2, 2)
    val = parse_expression(Q, "(1 - e^-2*k*x)^2")
    assert val == Q.scalar(1)


def test_transfer_expression():
    B = make_bu1()
    val = parse_expression(B, "t(iota^-2)*z0*cw - t(iota^-2)*z1*cx")
    assert val.is_zero()


def test_negative_zeta_powers():
    Q = make_quadric(5, 3)
    v = parse_expression(Q, "z0^-1*divw")
    assert not v.is_zero()
    assert (parse_expression(Q, "z0*z0^-1*divw - divw")).is_zero()


def test_levele_symbols():
    Q = make_quadric(3, 3)
    v = parse_expression(Q, "iota^2*zeta*c*y")
    assert v.level == "e"
    # rho(x) = iota^4 zeta^0 c y at p = q = 1
    assert (Q.rho(Q.gen("x")) - parse_expression(Q, "iota^4*c*y")).is_zero()


def test_parse_errors():
    Q = make_quadric(3, 3)
    with pytest.raises(ExprError):
        parse_expression(Q, "e^-2*x")  # e^-n needs k
    with pytest.raises(ExprError):
        parse_expression(Q, "cw^-1")
    with pytest.raises(ExprError):
        parse_expression(Q, "foo*bar")
    with pytest.raises(ExprError):
        parse_expression(Q, "t(x)")


def test_print_parse_round_trip():
    Q = make_quadric(5, 3)
    exprs = [
        "cw^2*cx",
        "divw*divx",
        "(1+g)*x",
        "t(iota^2*zeta*y) + e^-2*k*x",
        "z1*cw - cx",
    ]
    for text in exprs:
        val = parse_expression(Q, text)
        back = parse_expression(Q, str(val))
        assert (val - back).is_zero(), text


def test_round_trip_other_decks():
    for m, n in [(4, 3), (2, 2), (3, 4), (1, 1)]:
        Q = make_quadric(m, n)
        for text in ["x", "cw*cx", "2*x - x"]:
            val = parse_expression(Q, text)
            back = parse_expression(Q, str(val))
            assert (val - back).is_zero(), (m, n, text)

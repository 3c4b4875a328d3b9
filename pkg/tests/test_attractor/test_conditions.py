import math

import pytest

from dnse.attractor import (BallSpec, check_cond1, check_cond2,
                            check_contraction_conditions,
                            continuous_endpoint_bound, find_radius,
                            rho_radius, scan_viscosity)


def test_rho_radius():
    assert rho_radius(10., 1., 0.1, 1.) == pytest.approx(
        math.sqrt(0.08 * math.exp(0.5)))
    assert rho_radius(10., 1., 0.1, 1.)**2 == pytest.approx(0.13190, abs=1e-5)
    assert rho_radius(10., 1., 0.1, 0.) == 0.
    # rho grows linearly with the forcing
    assert rho_radius(10., 1., 0.1, 3.) == pytest.approx(
        3 * rho_radius(10., 1., 0.1, 1.))
    with pytest.raises(ValueError):
        rho_radius(0., 1., 0.1, 1.)
    with pytest.raises(ValueError):
        rho_radius(10., 1., 0.1, -1.)


def test_ball_conditions():
    assert check_cond1(100., 1., 0.1, 1., 1.)
    assert not check_cond1(10., 1., 0.1, 1., 1.)
    # rho^2 * bracket is about 115 against R^2 / 2 = 0.5
    assert not check_cond2(1., 1., 1., 1., 1., 1.)
    # without forcing rho vanishes and cond2 is trivial
    assert check_cond2(1., 1., 1., 1., 1., 0.)


def test_find_radius():
    R = find_radius(100., 1., 0.1, 1., 1.)
    # cond2 needs R >= 0.0695, the grid has 20 points per decade
    assert 0.0695 <= R <= 0.0695 * 1.13
    assert R == pytest.approx(10**-1.15, rel=1e-9)
    assert check_cond1(100., 1., 0.1, 1., R)
    assert check_cond2(100., 1., 0.1, 1., R, 1.)

    assert find_radius(100., 1., 0.1, 1., 0.) == pytest.approx(1e-6)
    # cond1 cannot hold below nu = 2 ln 2 / (lam mu)
    assert find_radius(8., 1., 0.1, 1., 1.) is None
    assert find_radius(100., 1., 0.1, 1., 1., search_budget=1) is None


def test_contraction_conditions():
    out = check_contraction_conditions(100., 1., 0.1, 1., 0.07, 0.34)
    assert out['lhs1'] == pytest.approx(0.01 + math.exp(-10.), rel=1e-3)
    assert out['lhs2'] < 1e-4
    assert out['holds1'] and out['holds2'] and out['holds']

    strict = check_contraction_conditions(
        100., 1., 0.1, 1., 0.07, 0.34, reading='e_nu_sq')
    assert strict['holds']
    assert strict['lhs1'] <= out['lhs1']
    assert strict['lhs2'] == out['lhs2']

    # the 1/nu term alone reaches 1
    low = check_contraction_conditions(1., 1., 0.1, 1., 0.07, 0.34)
    assert low['lhs1'] >= 1. and not low['holds']

    with pytest.raises(ValueError):
        check_contraction_conditions(100., 1., 0.1, 1., 0.07, 0.34, 'e_mu')


def test_continuous_endpoint_bound():
    # rho^2 e^{-0.5 + 0.05} + 0.04 e^{0.05}
    assert continuous_endpoint_bound(10., 1., 0.1, 1., 1., 1.) == \
        pytest.approx(0.12 * math.exp(0.05))
    assert continuous_endpoint_bound(10., 1., 0.1, 1., 1., 0.) == 0.


def test_scan_viscosity():
    scan = scan_viscosity(1., 1., 0.1, 1., 1.)
    assert scan.nu == 16.
    assert scan.doublings == 4
    assert isinstance(scan.ball, BallSpec)
    assert scan.ball.c == 1. and scan.ball.lam == 1.
    assert scan.ball.rho == pytest.approx(rho_radius(16., 1., 0.1, 1.))
    assert scan.contraction['holds']
    assert [entry['nu'] for entry in scan.history] == [1., 2., 4., 8., 16.]
    assert all(entry['R'] is None for entry in scan.history[:4])

    # a starting viscosity that already qualifies is kept
    assert scan_viscosity(100., 1., 0.1, 1., 1.).doublings == 0
    assert scan_viscosity(1., 1., 0.1, 1., 1., max_doublings=3) is None


def test_ball_spec():
    with pytest.raises(AssertionError):
        BallSpec(-1., 0., 1., 1.)


def test_endpoint_bound_in_time():
    args = (10., 1., 0.1, 1., 1., 1.)
    rho_sq = rho_radius(10., 1., 0.1, 1.)**2
    # at t = 0 the bound covers the initial endpoint
    assert continuous_endpoint_bound(*args, t=0.) >= rho_sq
    assert continuous_endpoint_bound(*args, t=0.1) == \
        continuous_endpoint_bound(*args)
    assert continuous_endpoint_bound(*args, t=0.05) > \
        continuous_endpoint_bound(*args, t=0.1)

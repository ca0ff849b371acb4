"""Monte-Carlo hedge-error runs: draws, terminal prices, summaries."""

import numpy as np
import pytest

from dualpricer import (
    HedgeScheme,
    PricingError,
    SimConfig,
    gbm_terminal,
    normal_draws,
    run_hedge_sim,
    solve_weights,
    true_error,
)
from dualpricer.tables import DEFAULT_HEDGE

HORIZON = DEFAULT_HEDGE.horizon


def sim(spot=50.0, drift=0.04, paths=2000, seed=42, scheme=HedgeScheme.BSM_DUAL):
    return SimConfig(
        spot=spot,
        drift=drift,
        paths=paths,
        seed=seed,
        hedge=DEFAULT_HEDGE,
        scheme=scheme,
    )


def test_gbm_frozen_values():
    assert gbm_terminal(50.0, 0.04, 0.20, HORIZON, 0.0) == pytest.approx(
        50.06968321563362, rel=1e-12
    )
    assert gbm_terminal(50.0, 0.04, 0.20, HORIZON, 1.0) == pytest.approx(
        52.78317453923997, rel=1e-12
    )


def test_gbm_limits():
    # zero vol removes the draw; zero horizon removes everything
    assert gbm_terminal(100.0, 0.05, 0.0, 1.0, 3.0) == pytest.approx(
        100.0 * np.exp(0.05), rel=1e-12
    )
    assert gbm_terminal(100.0, 0.05, 0.3, 0.0, 3.0) == pytest.approx(100.0)


def test_gbm_vectorizes_over_draws():
    z = np.array([-1.0, 0.0, 2.5])
    out = gbm_terminal(50.0, 0.04, 0.2, HORIZON, z)
    assert out.shape == z.shape
    for zi, oi in zip(z, out):
        assert oi == pytest.approx(gbm_terminal(50.0, 0.04, 0.2, HORIZON, zi))
    assert np.all(np.diff(out) > 0)


def test_normal_draws_seeded_and_plausible():
    a = normal_draws(777, 50_000)
    b = normal_draws(777, 50_000)
    c = normal_draws(778, 50_000)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert abs(a.mean()) < 0.02
    assert abs(a.std() - 1.0) < 0.02
    assert np.isfinite(a).all()


def test_run_is_deterministic():
    first = run_hedge_sim(sim())
    second = run_hedge_sim(sim())
    assert first == second
    assert first.paths == 2000


def test_single_zero_draw_reduces_to_known_spot_report():
    cfg = sim(paths=1)
    summary = run_hedge_sim(cfg, draws=np.array([0.0]))
    terminal = float(gbm_terminal(cfg.spot, cfg.drift, DEFAULT_HEDGE.vol, HORIZON, 0.0))
    weights = solve_weights(DEFAULT_HEDGE, cfg.scheme)
    report = true_error(DEFAULT_HEDGE, weights, cfg.spot, terminal)
    assert summary.mhe_pct == pytest.approx(report.true_error_pct, abs=1e-10)
    assert summary.mae_pct == pytest.approx(abs(report.true_error_pct), abs=1e-10)
    assert summary.rmse == pytest.approx(abs(report.true_error), abs=1e-12)


def test_mean_absolute_bounds_mean():
    summary = run_hedge_sim(sim(spot=48.0, paths=5000))
    assert summary.mae_pct >= abs(summary.mhe_pct)
    assert summary.rmse > 0


def test_full_scheme_beats_zero_rate_scheme_on_rmse():
    draws = normal_draws(42, 4000)
    kw = dict(spot=50.0, drift=0.04, paths=4000, seed=42)
    full = run_hedge_sim(sim(scheme=HedgeScheme.BSM_DUAL, **kw), draws=draws)
    special = run_hedge_sim(sim(scheme=HedgeScheme.WU_ZHU, **kw), draws=draws)
    assert full.rmse < special.rmse


def test_mhe_dispersion_shrinks_with_more_paths():
    seeds = range(10)
    few = np.array([run_hedge_sim(sim(paths=500, seed=s)).mhe_pct for s in seeds])
    many = np.array([run_hedge_sim(sim(paths=20_000, seed=s)).mhe_pct for s in seeds])
    assert many.std() < few.std()


def test_draw_override_shape_is_checked():
    with pytest.raises(PricingError):
        run_hedge_sim(sim(paths=4), draws=np.zeros(3))
    with pytest.raises(PricingError):
        run_hedge_sim(sim(paths=4), draws=np.zeros((2, 2)))


def test_config_validation():
    with pytest.raises(PricingError):
        sim(paths=0)
    with pytest.raises(PricingError):
        sim(spot=-1.0)

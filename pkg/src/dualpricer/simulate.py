"""Monte-Carlo evaluation of static-hedge performance.

Terminal spots are lognormal under a physical drift; each draw yields one
true hedge error, and the run is summarized by the mean percentage error
(MHE), the mean absolute percentage error (MAE), and the currency RMSE.

Draws come from a counter-based generator (Philox) through the inverse
normal CDF, so a seed pins the full stream independently of platform and
path count ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .errors import PricingError
from .hedge import HedgeConfig, HedgeScheme, solve_weights, true_errors

__all__ = ["SimConfig", "SimSummary", "gbm_terminal", "normal_draws", "run_hedge_sim"]


@dataclass(frozen=True)
class SimConfig:
    """One simulation run: market start, drift, path count, seed, hedge."""

    spot: float
    drift: float
    paths: int
    seed: int
    hedge: HedgeConfig
    scheme: HedgeScheme

    def __post_init__(self):
        if self.paths < 1:
            raise PricingError(f"paths must be >= 1, got {self.paths}")
        if not self.spot > 0:
            raise PricingError(f"spot must be positive, got {self.spot}")


@dataclass(frozen=True)
class SimSummary:
    mhe_pct: float
    mae_pct: float
    rmse: float
    paths: int


def gbm_terminal(spot, drift, vol, horizon, z):
    """Lognormal terminal price S exp((mu - sigma^2/2) h + sigma sqrt(h) z)."""
    return spot * np.exp((drift - 0.5 * vol**2) * horizon + vol * np.sqrt(horizon) * z)


def normal_draws(seed: int, count: int) -> np.ndarray:
    """Deterministic standard-normal draws for a given seed.

    Uniforms are taken as k / 2^53 with k in [1, 2^53), which keeps the
    inverse CDF finite on both tails.
    """
    rng = np.random.Generator(np.random.Philox(seed))
    uniforms = rng.integers(1, 1 << 53, size=count) / float(1 << 53)
    return ndtri(uniforms)


def run_hedge_sim(cfg: SimConfig, draws=None) -> SimSummary:
    """Simulate true hedge errors and aggregate them.

    ``draws`` overrides the seeded normal draws (length must equal
    ``cfg.paths``); it exists for degenerate-path tests and for sharing
    one shock set across schemes.
    """
    if draws is None:
        z = normal_draws(cfg.seed, cfg.paths)
    else:
        z = np.asarray(draws, dtype=float)
        if z.shape != (cfg.paths,):
            raise PricingError(
                f"draws must have shape ({cfg.paths},), got {z.shape}"
            )
    weights = solve_weights(cfg.hedge, cfg.scheme)
    terminal = gbm_terminal(cfg.spot, cfg.drift, cfg.hedge.vol, cfg.hedge.horizon, z)
    errors, hedged_price = true_errors(cfg.hedge, weights, cfg.spot, terminal)
    ratios = errors / hedged_price
    return SimSummary(
        mhe_pct=float(100.0 * np.mean(ratios)),
        mae_pct=float(100.0 * np.mean(np.abs(ratios))),
        rmse=float(np.sqrt(np.mean(errors**2))),
        paths=cfg.paths,
    )

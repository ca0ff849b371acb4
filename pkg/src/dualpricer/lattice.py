"""Recombining binomial-tree pricing of American and European options.

Tree Greeks are read off the step-1 and step-2 nodes and quoted at time 0,
which is the convention the rest of the package validates against.  The
induction kernel is compiled when the extension built from
``_crr_core.pyx`` is importable; otherwise the numpy fallback is used.
Set ``DUALPRICER_NO_EXTENSION=1`` to force the fallback.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .analytic import ExerciseStyle, MarketState, OptionRight, OptionSpec
from .errors import NoArbitrageError, PricingError

if os.environ.get("DUALPRICER_NO_EXTENSION"):
    from . import _crr_numpy as _kernel
else:
    try:
        from . import _crr_core as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _crr_numpy as _kernel

BACKEND = _kernel.NAME

__all__ = [
    "BACKEND",
    "LatticeParams",
    "ExerciseHint",
    "build_lattice",
    "lattice_price",
    "lattice_delta",
    "lattice_gamma",
    "early_exercise_hint",
]


@dataclass(frozen=True)
class LatticeParams:
    """Per-step tree parameters: u d = 1 and d < e^{(r-q) dt} < u."""

    steps: int
    up: float
    down: float
    prob_up: float
    dt: float


def build_lattice(mkt: MarketState, maturity: float, steps: int) -> LatticeParams:
    """Size the tree: dt = T/steps, u = e^{sigma sqrt(dt)}, d = 1/u.

    The risk-neutral up-probability is (e^{(r-q) dt} - d)/(u - d); it must
    land strictly inside (0, 1) or the step admits arbitrage.
    """
    if steps < 1:
        raise PricingError(f"steps must be >= 1, got {steps}")
    if not maturity > 0:
        raise PricingError(f"maturity must be positive, got {maturity}")
    dt = maturity / steps
    up = math.exp(mkt.vol * math.sqrt(dt))
    down = 1.0 / up
    growth = math.exp((mkt.rate - mkt.dividend_yield) * dt)
    if not down < growth < up:
        raise NoArbitrageError(
            f"no-arbitrage violation: e^((r-q) dt) = {growth:.6f} outside "
            f"(d, u) = ({down:.6f}, {up:.6f}); vol too small for |r-q| at this dt"
        )
    prob_up = (growth - down) / (up - down)
    return LatticeParams(steps, up, down, prob_up, dt)


def _induct(spec: OptionSpec, mkt: MarketState, steps: int):
    params = build_lattice(mkt, spec.maturity, steps)
    discount = math.exp(-mkt.rate * params.dt)
    return _kernel.induct(
        mkt.spot,
        spec.strike,
        params.up,
        params.prob_up,
        discount,
        params.steps,
        spec.right is OptionRight.CALL,
        spec.style is ExerciseStyle.AMERICAN,
    )


def lattice_price(spec: OptionSpec, mkt: MarketState, steps: int) -> float:
    """Tree price by backward induction; American compares hold to intrinsic."""
    return _induct(spec, mkt, steps)[0]


def lattice_delta(spec: OptionSpec, mkt: MarketState, steps: int) -> float:
    """First difference of the two step-1 node values, quoted at time 0."""
    if steps < 2:
        raise PricingError(f"tree Greeks need steps >= 2, got {steps}")
    _, v10, v11, _, _, _ = _induct(spec, mkt, steps)
    params = build_lattice(mkt, spec.maturity, steps)
    return (v11 - v10) / (mkt.spot * params.up - mkt.spot * params.down)


def lattice_gamma(spec: OptionSpec, mkt: MarketState, steps: int) -> float:
    """Central second difference of the three step-2 node values."""
    if steps < 2:
        raise PricingError(f"tree Greeks need steps >= 2, got {steps}")
    _, _, _, v20, v21, v22 = _induct(spec, mkt, steps)
    params = build_lattice(mkt, spec.maturity, steps)
    s_up = mkt.spot * params.up**2
    s_dn = mkt.spot * params.down**2
    slope_up = (v22 - v21) / (s_up - mkt.spot)
    slope_dn = (v21 - v20) / (mkt.spot - s_dn)
    return (slope_up - slope_dn) / (0.5 * (s_up - s_dn))


class ExerciseHint:
    HOLD_LIKELY = "hold-likely"
    EXERCISE_LIKELY = "exercise-likely"


def early_exercise_hint(spot: float, strike: float, rate: float, dividend_yield: float) -> str:
    """Coarse American-call guidance: holding is favored while S q <= K r."""
    if not (spot > 0 and strike > 0):
        raise PricingError("spot and strike must be positive")
    if spot * dividend_yield > strike * rate:
        return ExerciseHint.EXERCISE_LIKELY
    return ExerciseHint.HOLD_LIKELY

"""Canned report tables.

Seven studies wired to a fixed parameter set: t1-t3 cross-check direct and
swapped-problem tree pricing (prices, Greeks, and the currency-put
approximation), t4-t6 tabulate static-hedge errors for both weighting
schemes, and t7 summarizes the Monte-Carlo hedge-error run.  The builders
return plain data; rendering to aligned text or CSV lives here too so the
CLI stays thin.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass

from .analytic import (
    ExerciseStyle,
    MarketState,
    OptionRight,
    OptionSpec,
    call_price,
)
from .duality import (
    LatticeEngine,
    delta_via_dual,
    gamma_via_dual,
    price_currency_put_approx,
    price_via_dual,
    to_dual,
)
from .hedge import (
    HedgeConfig,
    HedgeScheme,
    gross_error,
    net_cost,
    solve_weights,
    true_error,
)
from .lattice import lattice_delta, lattice_gamma, lattice_price
from .simulate import SimConfig, normal_draws, run_hedge_sim

__all__ = [
    "TableData",
    "DEFAULT_HEDGE",
    "TABLE_BUILDERS",
    "render_text",
    "render_csv",
]

DEFAULT_HEDGE = HedgeConfig(
    target_strike=50.0,
    target_maturity=0.5,
    strike_low=40.0,
    strike_mid=50.0,
    strike_high=60.0,
    wing_maturity=1.0 / 12.0,
    mid_maturity=2.0 / 12.0,
    horizon=1.0 / 12.0 - 5.0 / 365.0,
    vol=0.20,
    rate=0.05,
    dividend_yield=0.01,
)

_PRICING_SPOTS = (36.0, 38.0, 40.0, 42.0, 44.0)
_PRICING_STRIKE = 40.0
_PRICING_VOL = 0.40
_PRICING_MATURITY = 1.0


@dataclass(frozen=True)
class TableData:
    name: str
    title: str
    headers: tuple[str, ...]
    formats: tuple[str, ...]
    rows: tuple[tuple, ...]


def _american(right: OptionRight) -> OptionSpec:
    return OptionSpec(
        right=right,
        style=ExerciseStyle.AMERICAN,
        strike=_PRICING_STRIKE,
        maturity=_PRICING_MATURITY,
    )


def table1(steps: int = 365) -> TableData:
    """American put prices next to their swapped-problem call prices."""
    spec = _american(OptionRight.PUT)
    engine = LatticeEngine(steps)
    rows = []
    for spot in _PRICING_SPOTS:
        mkt = MarketState(spot, 0.06, 0.0, _PRICING_VOL)
        direct = lattice_price(spec, mkt, steps)
        dual = price_via_dual(spec, mkt, engine)
        rows.append(
            (
                spot,
                spec.strike,
                float(direct),
                spec.strike,
                spot,
                float(dual),
                100.0 * (dual - direct) / direct,
            )
        )
    return TableData(
        name="t1",
        title="American put vs dual call, tree with daily steps",
        headers=(
            "put_spot",
            "put_strike",
            "put_price",
            "call_spot",
            "call_strike",
            "call_price",
            "error_pct",
        ),
        formats=("g", "g", ".3f", "g", "g", ".3f", ".3f"),
        rows=tuple(rows),
    )


def table2(steps: int = 365) -> TableData:
    """Tree delta and gamma of American puts, direct and via the dual call."""
    spec = _american(OptionRight.PUT)
    engine = LatticeEngine(steps)
    rows = []
    for label, direct_fn, via_fn, engine_greek in (
        ("delta", lattice_delta, delta_via_dual, engine.delta),
        ("gamma", lattice_gamma, gamma_via_dual, engine.gamma),
    ):
        for spot in _PRICING_SPOTS:
            mkt = MarketState(spot, 0.06, 0.0, _PRICING_VOL)
            direct = direct_fn(spec, mkt, steps)
            dual_spec, dual_mkt = to_dual(spec, mkt).dual
            dual_tree = engine_greek(dual_spec, dual_mkt)
            via = via_fn(spec, mkt, engine)
            rows.append(
                (
                    label,
                    spot,
                    spec.strike,
                    float(direct),
                    float(dual_tree),
                    float(via),
                    100.0 * (via - direct) / direct,
                )
            )
    return TableData(
        name="t2",
        title="American put Greeks, direct tree vs dual-call recovery",
        headers=(
            "greek",
            "spot",
            "strike",
            "direct",
            "dual_tree",
            "via_dual",
            "error_pct",
        ),
        formats=("s", "g", "g", ".4f", ".4f", ".4f", ".3f"),
        rows=tuple(rows),
    )


def table3(steps: int = 365) -> TableData:
    """American currency puts against the closed-form approximation."""
    spec = _american(OptionRight.PUT)
    rows = []
    for rate in (0.0, 0.03, 0.05):
        for spot in _PRICING_SPOTS:
            mkt = MarketState(spot, rate, 0.06, _PRICING_VOL)
            american = lattice_price(spec, mkt, steps)
            approx, tag = price_currency_put_approx(spec, mkt)
            rows.append(
                (
                    rate,
                    spot,
                    float(american),
                    float(approx),
                    tag.value,
                    100.0 * (approx - american) / american,
                )
            )
    return TableData(
        name="t3",
        title="American currency put vs closed-form approximation, foreign rate 6%",
        headers=(
            "rate",
            "spot",
            "american_put",
            "approx_price",
            "exactness",
            "error_pct",
        ),
        formats=("g", "g", ".3f", ".3f", "s", ".3f"),
        rows=tuple(rows),
    )


_HEDGE_SPOTS = tuple(float(s) for s in range(35, 90, 5))
_TRUE_ERROR_SPOTS = (45.0, 50.0, 55.0)


def _schemes(scheme: HedgeScheme | None):
    wanted = (
        (HedgeScheme.BSM_DUAL, HedgeScheme.WU_ZHU) if scheme is None else (scheme,)
    )
    return [(s, solve_weights(DEFAULT_HEDGE, s)) for s in wanted]


def _scheme_key(scheme: HedgeScheme) -> str:
    return scheme.value.replace("-", "_")


def table4(scheme: HedgeScheme | None = None) -> TableData:
    """Gross hedge error across horizon spots."""
    cfg = DEFAULT_HEDGE
    pairs = _schemes(scheme)
    headers = ["spot_at_horizon", "hedged_call"]
    formats = ["g", ".3f"]
    for s, _ in pairs:
        headers += [f"{_scheme_key(s)}_gross", f"{_scheme_key(s)}_gross_pct"]
        formats += [".3f", ".2f"]
    rows = []
    for spot in _HEDGE_SPOTS:
        hedged = float(
            call_price(
                spot,
                cfg.target_strike,
                cfg.rate,
                cfg.dividend_yield,
                cfg.vol,
                cfg.target_maturity - cfg.horizon,
            )
        )
        row = [spot, hedged]
        for _, w in pairs:
            eps, pct = gross_error(cfg, w, spot)
            row += [eps, pct]
        rows.append(tuple(row))
    return TableData(
        name="t4",
        title="Gross hedge errors at the end of the hedge period",
        headers=tuple(headers),
        formats=tuple(formats),
        rows=tuple(rows),
    )


def table5(scheme: HedgeScheme | None = None) -> TableData:
    """Net cost of the hedge at setup across starting spots."""
    cfg = DEFAULT_HEDGE
    pairs = _schemes(scheme)
    headers = ["spot_at_0", "hedged_call"]
    formats = ["g", ".3f"]
    for s, _ in pairs:
        headers += [f"{_scheme_key(s)}_cost", f"{_scheme_key(s)}_cost_pct"]
        formats += [".3f", ".2f"]
    rows = []
    for spot in _HEDGE_SPOTS:
        hedged = float(
            call_price(
                spot,
                cfg.target_strike,
                cfg.rate,
                cfg.dividend_yield,
                cfg.vol,
                cfg.target_maturity,
            )
        )
        row = [spot, hedged]
        for _, w in pairs:
            cost, pct = net_cost(cfg, w, spot)
            row += [cost, pct]
        rows.append(tuple(row))
    return TableData(
        name="t5",
        title="Net costs of the hedge at setup",
        headers=tuple(headers),
        formats=tuple(formats),
        rows=tuple(rows),
    )


def table6(scheme: HedgeScheme | None = None) -> TableData:
    """True hedge errors for known start and horizon spots."""
    cfg = DEFAULT_HEDGE
    pairs = _schemes(scheme)
    headers = ["spot_at_0", "spot_at_horizon"]
    formats = ["g", "g"]
    for s, _ in pairs:
        headers += [f"{_scheme_key(s)}_true", f"{_scheme_key(s)}_true_pct"]
        formats += [".3f", ".2f"]
    rows = []
    for s0, sh in itertools.product(_TRUE_ERROR_SPOTS, _TRUE_ERROR_SPOTS):
        row = [s0, sh]
        for _, w in pairs:
            report = true_error(cfg, w, s0, sh)
            row += [report.true_error, report.true_error_pct]
        rows.append(tuple(row))
    return TableData(
        name="t6",
        title="True hedge errors with known start and horizon spots",
        headers=tuple(headers),
        formats=tuple(formats),
        rows=tuple(rows),
    )


def table7(seed: int = 42, paths: int = 10_000) -> TableData:
    """Simulated true hedge errors; both schemes see the same draws."""
    draws = normal_draws(seed, paths)
    headers = ["drift", "spot_0"]
    formats = ["g", "g"]
    for s in (HedgeScheme.BSM_DUAL, HedgeScheme.WU_ZHU):
        key = _scheme_key(s)
        headers += [f"{key}_mhe_pct", f"{key}_mae_pct", f"{key}_rmse"]
        formats += [".2f", ".2f", ".3f"]
    rows = []
    for drift in (0.04, 0.08):
        for spot in (46.0, 48.0, 50.0, 52.0, 54.0):
            row = [drift, spot]
            for s in (HedgeScheme.BSM_DUAL, HedgeScheme.WU_ZHU):
                cfg = SimConfig(
                    spot=spot,
                    drift=drift,
                    paths=paths,
                    seed=seed,
                    hedge=DEFAULT_HEDGE,
                    scheme=s,
                )
                summary = run_hedge_sim(cfg, draws=draws)
                row += [summary.mhe_pct, summary.mae_pct, summary.rmse]
            rows.append(tuple(row))
    return TableData(
        name="t7",
        title=f"Simulated true hedge errors ({paths} paths, seed {seed})",
        headers=tuple(headers),
        formats=tuple(formats),
        rows=tuple(rows),
    )


TABLE_BUILDERS = {
    "t1": table1,
    "t2": table2,
    "t3": table3,
    "t4": table4,
    "t5": table5,
    "t6": table6,
    "t7": table7,
}


def _cells(table: TableData):
    for row in table.rows:
        yield [
            value if fmt == "s" else format(value, fmt)
            for value, fmt in zip(row, table.formats)
        ]


def render_text(table: TableData) -> str:
    """Aligned fixed-precision view for eyeballing."""
    body = list(_cells(table))
    widths = [
        max(len(h), *(len(r[i]) for r in body)) if body else len(h)
        for i, h in enumerate(table.headers)
    ]
    lines = [table.title]
    lines.append("  ".join(h.rjust(w) for h, w in zip(table.headers, widths)))
    for row in body:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def render_csv(table: TableData) -> str:
    """Full-precision comma-separated view."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.headers)
    for row in table.rows:
        writer.writerow(row)
    return buf.getvalue()

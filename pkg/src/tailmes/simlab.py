"""Monte Carlo laboratory: data generation, per-replication pipeline, metrics,
comparison estimators, and independent oracles for the true innovation MES."""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass, field, asdict
from typing import Optional

import numpy as np
from scipy import integrate, optimize, special, stats

from .distributions import (
    BurrParams,
    InnovationSpec,
    TCopulaParams,
    burr_quantile,
    sample_innovations,
    sample_t_copula,
    symmetrized_quantile,
    tail_copula_R,
)
from .evt import TailConfig, assemble_forecast, hill, k_rule, mes_np, mes_within, mes_extrapolate
from .garch import GarchParams, ResidualPanel, filter_and_residualize, qmle_fit, simulate_ccc

__all__ = [
    "SimConfig",
    "SimResult",
    "SimRow",
    "TrueMes",
    "RepRecord",
    "true_theta_oracle",
    "rejection_theta_oracle",
    "mes_limit_integral",
    "ml_estimator",
    "run_replication",
    "run_study",
]

_ORACLE_CACHE: dict = {}


@dataclass(frozen=True)
class SimConfig:
    """Simulation design; defaults mirror the standard bivariate study setup."""

    n: int = 1000
    ell_n: int = 10
    p_grid: tuple = (0.01, 0.005, 0.001, 0.0005, 0.0001, 0.00005, 0.00001)
    nu: float = 3.0
    rho: float = 0.95
    burr: BurrParams = field(default_factory=lambda: BurrParams(a=0.25, b=20.0))
    replications: int = 1000
    base_seed: int = 1
    garch_x: GarchParams = field(default_factory=lambda: GarchParams(0.001, 0.2, 0.75))
    garch_y: GarchParams = field(default_factory=lambda: GarchParams(0.001, 0.1, 0.85))
    iota: float = 0.05
    burn_in: int = 500
    oracle_draws: int = 10_000_000
    ml_draws: int = 100_000

    def __post_init__(self) -> None:
        if self.replications < 1:
            raise ValueError("replications must be at least 1")
        object.__setattr__(self, "p_grid", tuple(float(p) for p in self.p_grid))
        k = k_rule(self.n)
        for p in self.p_grid:
            if not 0.0 < p < 1.0:
                raise ValueError(f"risk level p={p} must lie in (0, 1)")
            if k / (self.n * p) < 1.0:
                raise ValueError(
                    f"p={p} violates the extrapolation requirement k/(n*p) >= 1 "
                    f"for n={self.n} (k={k})"
                )


@dataclass
class TrueMes:
    """True innovation MES at level p from a Monte Carlo oracle."""

    theta_p: float
    method: str
    mc_error: float


@dataclass
class RepRecord:
    """Outcome of one replication at one risk level."""

    rep_index: int
    p: float
    theta_true: float = np.nan
    theta_hat: Optional[float] = None
    ci_lower: Optional[float] = None
    ci_upper: Optional[float] = None
    gamma_hat: Optional[float] = None
    theta_ml: Optional[float] = None
    theta_np: Optional[float] = None
    hit: Optional[bool] = None
    failed: bool = False
    fail_reason: Optional[str] = None
    ml_failed: bool = False
    qmle_converged: bool = True


@dataclass
class SimRow:
    """Aggregated metrics for one risk level; error metrics scaled by 100."""

    p: float
    bias: float
    rmse: float
    rmse_ml: float
    rmse_np: float
    mean_length: float
    coverage: float
    n_used: int
    n_failed: int
    n_ml_failed: int


@dataclass
class SimResult:
    rows: list
    config: SimConfig
    diagnostics: dict

    def row_for(self, p: float) -> SimRow:
        for row in self.rows:
            if abs(row.p - p) <= 1e-12 * max(p, 1e-300):
                return row
        raise KeyError(f"no results for p={p}")

    def write_csv(self, path) -> None:
        cols = ["p", "bias", "rmse", "rmse_ml", "rmse_np", "length", "coverage",
                "n_used", "n_failed", "n_ml_failed",
                "bias_tab", "rmse_tab", "rmse_ml_tab", "rmse_np_tab", "length_tab",
                "coverage_tab"]
        lines = [",".join(cols)]
        for r in self.rows:
            vals = [repr(r.p), repr(r.bias), repr(r.rmse), repr(r.rmse_ml),
                    repr(r.rmse_np), repr(r.mean_length), repr(r.coverage),
                    str(r.n_used), str(r.n_failed), str(r.n_ml_failed),
                    f"{r.bias:.1f}", f"{r.rmse:.1f}", f"{r.rmse_ml:.1f}",
                    f"{r.rmse_np:.1f}", f"{r.mean_length:.1f}", f"{r.coverage:.1f}"]
            lines.append(",".join(vals))
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")


def _stable_seed(*parts) -> int:
    """Deterministic 64-bit seed from arbitrary hashable numeric parts."""
    payload = b"".join(struct.pack("<d", float(x)) for x in parts)
    return int.from_bytes(hashlib.sha256(payload).digest()[:8], "little")


def _tail_t_quantiles(p: float, v: np.ndarray, nu: float) -> np.ndarray:
    """t_nu upper-tail quantiles isf(p * v) for v in (0, 1], via log-log interpolation.

    Valid for p <= 0.1 where the quantile stays positive; relative error is
    far below Monte Carlo noise (checked in tests against scipy's exact isf).
    """
    if p > 0.1:
        return stats.t.isf(p * v, nu)
    log_v = np.log(v)
    lo, hi = float(log_v.min()), 0.0
    if hi - lo < 1e-12:
        return stats.t.isf(p * v, nu)
    grid = np.linspace(lo, hi, 4096)
    log_q = np.log(stats.t.isf(p * np.exp(grid), nu))
    return np.exp(np.interp(log_v, grid, log_q))


def _conditional_tail_draws(nu: float, rho: float, burr: BurrParams, p: float,
                            draws: int, rng: np.random.Generator) -> np.ndarray:
    """Draws of eps_Y given U_X > 1 - p via the exact conditional t-copula."""
    v = rng.uniform(size=draws)
    t1 = _tail_t_quantiles(p, np.clip(v, 1e-300, 1.0), nu)
    scale = np.sqrt((nu + t1 * t1) * (1.0 - rho * rho) / (nu + 1.0))
    t2 = rho * t1 + scale * rng.standard_t(nu + 1.0, size=draws)
    u_y = np.clip(stats.t.cdf(t2, nu), 1e-15, 1.0 - 1e-15)
    return symmetrized_quantile(u_y, burr)


def true_theta_oracle(nu: float, rho: float, burr: BurrParams, p: float,
                      draws: int, rng_seed) -> TrueMes:
    """Conditional Monte Carlo oracle for theta_p = E[eps_Y | eps_X > VaR_p]."""
    if draws < 10**6:
        raise ValueError("oracle requires at least 1e6 draws")
    rng = np.random.default_rng(rng_seed)
    total = 0.0
    total_sq = 0.0
    done = 0
    chunk = 2_000_000
    while done < draws:
        m = min(chunk, draws - done)
        eps = _conditional_tail_draws(nu, rho, burr, p, m, rng)
        total += float(eps.sum())
        total_sq += float((eps * eps).sum())
        done += m
    mean = total / draws
    var = max(total_sq / draws - mean * mean, 0.0)
    return TrueMes(theta_p=mean, method="conditional-mc",
                   mc_error=float(np.sqrt(var / draws)))


def rejection_theta_oracle(nu: float, rho: float, burr: BurrParams, p: float,
                           draws: int, rng_seed) -> TrueMes:
    """Second, independent oracle: rejection sampling of full copula pairs."""
    rng = np.random.default_rng(rng_seed)
    copula = TCopulaParams.bivariate(nu, rho)
    total = 0.0
    total_sq = 0.0
    kept = 0
    done = 0
    chunk = 2_000_000
    while done < draws:
        m = min(chunk, draws - done)
        u = sample_t_copula(copula, m, rng)
        sel = u[:, 0] > 1.0 - p
        if np.any(sel):
            u_y = np.clip(u[sel, 1], 1e-15, 1.0 - 1e-15)
            eps = symmetrized_quantile(u_y, burr)
            eps = np.atleast_1d(eps)
            total += float(eps.sum())
            total_sq += float((eps * eps).sum())
            kept += int(eps.shape[0])
        done += m
    if kept < 100:
        raise ValueError(f"only {kept} exceedances kept; increase draws or p")
    mean = total / kept
    var = max(total_sq / kept - mean * mean, 0.0)
    return TrueMes(theta_p=mean, method="rejection-mc",
                   mc_error=float(np.sqrt(var / kept)))


def cached_true_theta(nu: float, rho: float, burr: BurrParams, p: float,
                      draws: int) -> TrueMes:
    """Memoized truth oracle with a seed derived deterministically from the key."""
    key = (round(nu, 12), round(rho, 12), round(burr.a, 12), round(burr.b, 12),
           p, draws)
    if key not in _ORACLE_CACHE:
        seed = _stable_seed(nu, rho, burr.a, burr.b, p, draws)
        _ORACLE_CACHE[key] = true_theta_oracle(nu, rho, burr, p, draws, seed)
    return _ORACLE_CACHE[key]


def theta_quadrature(nu: float, rho: float, burr: BurrParams, p: float,
                     nodes: int = 200, positive_part: bool = False) -> float:
    """Deterministic tensor quadrature for theta_p, free of Monte Carlo noise.

    theta_p = int_0^1 E[eps_Y | U_X = 1 - p*t] dt; the outer endpoint and both
    inner copula endpoints carry algebraic singularities, tamed by the power
    substitution x = s^5 before Gauss-Legendre integration.

    With positive_part=True the conditional mean of max(eps_Y, 0) is returned;
    this is the quantity whose ratio to the extreme marginal quantile converges
    to the tail-copula integral (the raw mean keeps an opposite-tail term of
    the same asymptotic order, so its ratio settles slightly below the limit).
    """
    s_nodes, s_weights = np.polynomial.legendre.leggauss(nodes)

    def unit_rule(upper):
        x = 0.5 * upper * (s_nodes + 1.0)
        w = 0.5 * upper * s_weights
        return x, w

    # outer variable t = s^5 over (0, 1)
    s, ws = unit_rule(1.0)
    t1 = stats.t.isf(p * s**5, nu)
    outer_w = ws * 5.0 * s**4
    loc = rho * t1
    scale = np.sqrt((nu + t1 * t1) * (1.0 - rho * rho) / (nu + 1.0))

    # inner variable v split at 1/2; each half uses v = z^5 resp. v = 1 - z^5
    half = 0.5 ** 0.2
    z, wz = unit_rule(half)
    inner_w = wz * 5.0 * z**4
    v_grid = np.concatenate([z**5, 1.0 - z**5])
    v_weights = np.concatenate([inner_w, inner_w])
    base = stats.t.ppf(np.clip(v_grid, 1e-300, 1.0 - 1e-16), nu + 1.0)

    t2 = loc[:, None] + scale[:, None] * base[None, :]
    u_y = np.clip(stats.t.cdf(t2, nu), 1e-15, 1.0 - 1e-15)
    eps = symmetrized_quantile(u_y.ravel(), burr).reshape(t2.shape)
    if positive_part:
        eps = np.maximum(eps, 0.0)
    cond_mean = eps @ v_weights
    return float(outer_w @ cond_mean)


def mes_limit_integral(nu: float, rho: float, gamma: float) -> float:
    """Limit of theta_p / U_1(1/p) as p -> 0: integral of R(1, y^(-1/gamma)) dy."""
    if not 0.0 < gamma < 1.0:
        raise ValueError("gamma must lie in (0, 1)")
    # substitute z = y^(-1/gamma): integral of gamma * z^(-gamma-1) * R(1, z) dz
    def integrand(z):
        return gamma * z ** (-gamma - 1.0) * tail_copula_R(1.0, z, nu, rho)

    val, _ = integrate.quad(integrand, 0.0, np.inf, limit=400)
    return float(val)


def innovation_upper_quantile(p: float, burr: BurrParams) -> float:
    """U_1(1/p): the (1-p)-quantile of the symmetrized standardized Burr margin."""
    if not 0.0 < p < 0.5:
        raise ValueError("p must lie in (0, 1/2) for the upper tail")
    return burr_quantile(1.0 - 2.0 * p, burr) / burr.std_constant


# ---------------------------------------------------------------------------
# parametric ML comparison estimator
# ---------------------------------------------------------------------------


@dataclass
class MlFit:
    burr: BurrParams
    nu: float
    rho: float


def _burr_ml_negloglik(log_a: float, log_b: float, mags: np.ndarray) -> float:
    a, b = np.exp(log_a), np.exp(log_b)
    if a * b <= 2.02 or a > 1e4 or b > 1e4:
        return np.inf
    params = BurrParams(a=a, b=b)
    c = params.std_constant
    x = c * mags
    log_x = np.log(x)
    ll = (np.log(c) + np.log(a) + np.log(b) + (b - 1.0) * log_x
          - (a + 1.0) * np.logaddexp(0.0, b * log_x))
    return -float(np.sum(ll))


def fit_burr_ml(magnitudes) -> BurrParams:
    """ML fit of Burr(a, b) to magnitudes of symmetrized standardized draws."""
    mags = np.asarray(magnitudes, dtype=float)
    mags = mags[mags > 0]
    if mags.shape[0] < 100:
        raise ValueError("too few positive magnitudes for a Burr ML fit")
    gamma0 = max(hill(mags, max(k_rule(mags.shape[0]), 5)), 1e-3)
    ab0 = max(1.0 / gamma0, 2.5)
    best = None
    for b0 in (5.0, 12.0, 25.0):
        a0 = max(ab0 / b0, 2.05 / b0 * 1.05)
        x0 = np.array([np.log(a0), np.log(b0)])
        res = optimize.minimize(lambda x: _burr_ml_negloglik(x[0], x[1], mags), x0,
                                method="Nelder-Mead",
                                options={"xatol": 1e-7, "fatol": 1e-9, "maxiter": 400})
        if np.isfinite(res.fun) and (best is None or res.fun < best.fun):
            best = res
    if best is None or not np.isfinite(best.fun):
        raise RuntimeError("Burr ML fit did not converge")
    return BurrParams(a=float(np.exp(best.x[0])), b=float(np.exp(best.x[1])))


def _tcopula_negloglik_given_t(x: np.ndarray, y: np.ndarray, nu: float,
                               rho: float) -> float:
    if not -0.9999 < rho < 0.9999:
        return np.inf
    one_m = 1.0 - rho * rho
    q = (x * x - 2.0 * rho * x * y + y * y) / one_m
    log_f2 = (special.gammaln((nu + 2.0) / 2.0) - special.gammaln(nu / 2.0)
              - np.log(nu * np.pi) - 0.5 * np.log(one_m)
              - (nu + 2.0) / 2.0 * np.log1p(q / nu))
    log_f1 = (special.gammaln((nu + 1.0) / 2.0) - special.gammaln(nu / 2.0)
              - 0.5 * np.log(nu * np.pi))
    log_fx = log_f1 - (nu + 1.0) / 2.0 * np.log1p(x * x / nu)
    log_fy = log_f1 - (nu + 1.0) / 2.0 * np.log1p(y * y / nu)
    return -float(np.sum(log_f2 - log_fx - log_fy))


def fit_tcopula_ml(u, v, nu_bounds=(1.2, 60.0)):
    """Profile-likelihood ML fit of a bivariate t-copula on pseudo-observations."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)

    def profile(log_nu):
        nu = float(np.exp(log_nu))
        x = stats.t.ppf(u, nu)
        y = stats.t.ppf(v, nu)
        inner = optimize.minimize_scalar(
            lambda r: _tcopula_negloglik_given_t(x, y, nu, r),
            bounds=(-0.999, 0.999), method="bounded",
            options={"xatol": 1e-5})
        return inner.fun, inner.x

    outer = optimize.minimize_scalar(lambda ln: profile(ln)[0],
                                     bounds=(np.log(nu_bounds[0]), np.log(nu_bounds[1])),
                                     method="bounded", options={"xatol": 5e-3})
    nu_hat = float(np.exp(outer.x))
    _, rho_hat = profile(outer.x)
    return nu_hat, float(rho_hat)


def _fit_ml(residuals: ResidualPanel) -> MlFit:
    """Marginal Burr + t-copula ML fit on a bivariate residual panel."""
    if residuals.n < 200:
        raise ValueError("ML estimator requires at least 200 residuals")
    res_x = residuals.column(0)
    res_y = residuals.column(1)
    burr_y = fit_burr_ml(np.abs(res_y))
    n = residuals.n
    u = stats.rankdata(res_x) / (n + 1.0)
    v = stats.rankdata(res_y) / (n + 1.0)
    nu_hat, rho_hat = fit_tcopula_ml(u, v)
    return MlFit(burr=burr_y, nu=nu_hat, rho=rho_hat)


def ml_estimator(residuals: ResidualPanel, p: float, draws: int = 100_000,
                 rng_seed=None) -> float:
    """Parametric ML comparison estimate of theta_p.

    Fits the marginal Burr and copula parameters by ML, then evaluates the
    implied MES with the conditional Monte Carlo oracle at the fitted values.
    """
    fit = _fit_ml(residuals)
    if rng_seed is None:
        rng_seed = _stable_seed(fit.nu, fit.rho, fit.burr.a, fit.burr.b, p)
    rng = np.random.default_rng(rng_seed)
    eps = _conditional_tail_draws(fit.nu, fit.rho, fit.burr, p, draws, rng)
    return float(np.mean(eps))


# ---------------------------------------------------------------------------
# replication pipeline
# ---------------------------------------------------------------------------


def _simulate_panel(config: SimConfig, rep_index: int):
    """One simulated (X, Y) window of length n + ell_n with true volatilities."""
    spec = InnovationSpec.homogeneous(
        config.burr, TCopulaParams.bivariate(config.nu, config.rho))
    total = config.burn_in + config.n + config.ell_n
    seed_seq = np.random.SeedSequence(entropy=config.base_seed,
                                      spawn_key=(int(rep_index),))
    rng = np.random.default_rng(seed_seq)
    eps = sample_innovations(spec, total, rng)
    params = [config.garch_x, config.garch_y]
    sigma0 = [np.sqrt(p.stationary_variance) for p in params]
    losses, sigmas = simulate_ccc(params, eps, sigma0, return_volatility=True)
    keep = config.burn_in
    return losses[keep:], sigmas[keep:]


def _true_sigma_forecast(losses_col: np.ndarray, sigma_col: np.ndarray,
                         params: GarchParams) -> float:
    s2 = params.omega + params.alpha * losses_col[-1] ** 2 + params.beta * sigma_col[-1] ** 2
    return float(np.sqrt(s2))


def _run_rep_all_p(config: SimConfig, ps, rep_index: int, true_thetas: dict) -> list:
    losses, sigmas = _simulate_panel(config, rep_index)
    records = []

    try:
        fit_x = qmle_fit(losses[:, 0])
        fit_y = qmle_fit(losses[:, 1])
        residuals = filter_and_residualize(losses, [fit_x, fit_y], config.ell_n,
                                           margin_ids=("X", "Y"))
    except Exception as exc:  # noqa: BLE001 - failure is data, not control flow
        for p in ps:
            records.append(RepRecord(rep_index=rep_index, p=p, failed=True,
                                     fail_reason=f"qmle: {exc}"))
        return records

    sigma_true_fc = _true_sigma_forecast(losses[:, 1], sigmas[:, 1], config.garch_y)
    res_x = residuals.column(0)
    res_y = residuals.column(1)
    n_eff = residuals.n
    k = k_rule(n_eff)
    qmle_ok = fit_x.converged and fit_y.converged

    try:
        gamma_hat = hill(res_y, k)
        theta_within = mes_within(res_x, res_y, k)
    except Exception as exc:  # noqa: BLE001
        for p in ps:
            records.append(RepRecord(rep_index=rep_index, p=p, failed=True,
                                     fail_reason=f"evt: {exc}",
                                     qmle_converged=qmle_ok))
        return records

    try:
        ml_fit = _fit_ml(residuals)
    except Exception:  # noqa: BLE001
        ml_fit = None

    for p_idx, p in enumerate(ps):
        theta_true = true_thetas[p].theta_p * sigma_true_fc
        cfg = TailConfig(k=k, k1=k, p=p, n=n_eff)
        theta_p_hat = mes_extrapolate(theta_within, gamma_hat, cfg)
        forecast = assemble_forecast(fit_y.vol_forecast, theta_p_hat, gamma_hat,
                                     cfg, config.iota)
        theta_np = mes_np(res_x, res_y, p) * fit_y.vol_forecast

        theta_ml = None
        ml_failed = ml_fit is None
        if ml_fit is not None:
            seed = _stable_seed(config.base_seed, rep_index, p, 7.0)
            rng = np.random.default_rng(seed)
            eps = _conditional_tail_draws(ml_fit.nu, ml_fit.rho, ml_fit.burr, p,
                                          config.ml_draws, rng)
            theta_ml = float(np.mean(eps)) * fit_y.vol_forecast

        records.append(RepRecord(
            rep_index=rep_index, p=p, theta_true=theta_true,
            theta_hat=forecast.theta_hat_np_level,
            ci_lower=forecast.ci_lower, ci_upper=forecast.ci_upper,
            gamma_hat=gamma_hat, theta_ml=theta_ml, theta_np=theta_np,
            hit=bool(forecast.ci_lower <= theta_true <= forecast.ci_upper),
            ml_failed=ml_failed, qmle_converged=qmle_ok,
        ))
    return records


def run_replication(config: SimConfig, p: float, rep_index: int) -> RepRecord:
    """Full pipeline for a single replication at a single risk level."""
    theta = cached_true_theta(config.nu, config.rho, config.burr, p,
                              config.oracle_draws)
    return _run_rep_all_p(config, [p], rep_index, {p: theta})[0]


def _aggregate(records: list, p: float, config: SimConfig) -> SimRow:
    recs = [r for r in records if abs(r.p - p) <= 1e-15 and not r.failed]
    n_failed = sum(1 for r in records if abs(r.p - p) <= 1e-15 and r.failed)
    if not recs:
        raise RuntimeError(f"all replications failed at p={p}")
    err = np.array([r.theta_hat - r.theta_true for r in recs])
    lengths = np.array([r.ci_upper - r.ci_lower for r in recs])
    hits = np.array([r.hit for r in recs], dtype=float)
    np_err = np.array([r.theta_np - r.theta_true for r in recs])
    ml_recs = [r for r in recs if not r.ml_failed]
    if ml_recs:
        ml_err = np.array([r.theta_ml - r.theta_true for r in ml_recs])
        rmse_ml = float(np.sqrt(np.mean(ml_err**2))) * 100.0
    else:
        rmse_ml = np.nan
    return SimRow(
        p=p,
        bias=float(np.mean(err)) * 100.0,
        rmse=float(np.sqrt(np.mean(err**2))) * 100.0,
        rmse_ml=rmse_ml,
        rmse_np=float(np.sqrt(np.mean(np_err**2))) * 100.0,
        mean_length=float(np.mean(lengths)) * 100.0,
        coverage=float(np.mean(hits)) * 100.0,
        n_used=len(recs),
        n_failed=n_failed,
        n_ml_failed=len(recs) - len(ml_recs),
    )


def _study_worker(args):
    config, ps, rep_index, thetas = args
    return _run_rep_all_p(config, ps, rep_index, thetas)


def run_study(config: SimConfig, threads: int = 1, progress=None) -> SimResult:
    """Run the full Monte Carlo study and aggregate Table-style metrics per p."""
    ps = list(config.p_grid)
    thetas = {p: cached_true_theta(config.nu, config.rho, config.burr, p,
                                   config.oracle_draws)
              for p in ps}
    all_records: list = []
    if threads and threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            jobs = [(config, ps, rep, thetas) for rep in range(config.replications)]
            for recs in pool.map(_study_worker, jobs, chunksize=8):
                all_records.extend(recs)
                if progress:
                    progress(len(all_records) // len(ps))
    else:
        for rep in range(config.replications):
            all_records.extend(_run_rep_all_p(config, ps, rep, thetas))
            if progress:
                progress(rep + 1)

    all_records.sort(key=lambda r: (r.rep_index, r.p))
    rows = [_aggregate(all_records, p, config) for p in ps]
    diagnostics = {
        "replications": config.replications,
        "qmle_nonconverged": sum(1 for r in all_records
                                 if not r.failed and not r.qmle_converged) // len(ps),
        "failed": sum(1 for r in all_records if r.failed) // len(ps),
        "true_theta": {p: asdict(thetas[p]) for p in ps},
    }
    return SimResult(rows=rows, config=config, diagnostics=diagnostics)

import numpy as np
import pytest

from tailmes.distributions import BurrParams, InnovationSpec, TCopulaParams, sample_innovations
from tailmes.garch import (
    GarchParams,
    filter_and_residualize,
    qmle_fit,
    simulate_ccc,
)

X_PARAMS = GarchParams(omega=0.001, alpha=0.2, beta=0.75)


def _simulate_margin(params, n, seed, burn=500):
    rng = np.random.default_rng(seed)
    eps = rng.standard_normal((burn + n, 1))
    y = simulate_ccc([params], eps, [np.sqrt(params.stationary_variance)])
    return y[burn:, 0]


class TestGarchParams:
    def test_stationary_variance(self):
        assert X_PARAMS.stationary_variance == pytest.approx(0.001 / 0.05)

    def test_invalid(self):
        with pytest.raises(ValueError):
            GarchParams(omega=0.0, alpha=0.1, beta=0.1)
        with pytest.raises(ValueError):
            GarchParams(omega=1.0, alpha=-0.1, beta=0.1)


class TestSimulate:
    def test_degenerate_recursion(self):
        eps = np.random.default_rng(0).standard_normal((200, 1))
        y = simulate_ccc([GarchParams(4.0, 0.0, 0.0)], eps, [2.0])
        assert np.allclose(y[:, 0], 2.0 * eps[:, 0])

    def test_one_step_by_hand(self):
        # omega=1, alpha=beta=0.5, sigma0^2=1, eps=(1,-1):
        # y0 = 1, sigma1^2 = 1 + 0.5*1 + 0.5*1 = 2, y1 = -sqrt(2)
        eps = np.array([[1.0], [-1.0]])
        y, sig = simulate_ccc([GarchParams(1.0, 0.5, 0.5)], eps, [1.0],
                              return_volatility=True)
        assert y[0, 0] == 1.0
        assert sig[1, 0] == pytest.approx(np.sqrt(2.0))
        assert y[1, 0] == pytest.approx(-np.sqrt(2.0))

    def test_long_run_variance(self):
        y = _simulate_margin(X_PARAMS, 1_000_000, seed=1)
        assert np.var(y) == pytest.approx(X_PARAMS.stationary_variance, rel=0.05)

    def test_dimension_mismatch(self):
        eps = np.zeros((10, 2))
        with pytest.raises(ValueError):
            simulate_ccc([X_PARAMS], eps, [1.0, 1.0])


class TestQmleFit:
    def test_iid_gaussian(self):
        c = 4.0
        y = np.sqrt(c) * np.random.default_rng(2).standard_normal(100_000)
        fit = qmle_fit(y)
        sigma2 = fit.vol_path**2
        assert np.median(sigma2) == pytest.approx(c, rel=0.10)
        assert fit.params.alpha < 0.02

    def test_consistency_on_simulated_data(self):
        y = _simulate_margin(X_PARAMS, 100_000, seed=3)
        fit = qmle_fit(y)
        assert fit.params.omega == pytest.approx(X_PARAMS.omega, rel=0.5)
        assert fit.params.alpha == pytest.approx(X_PARAMS.alpha, rel=0.15)
        assert fit.params.beta == pytest.approx(X_PARAMS.beta, rel=0.10)
        assert fit.converged

    def test_deterministic(self):
        y = _simulate_margin(X_PARAMS, 2000, seed=4)
        f1, f2 = qmle_fit(y), qmle_fit(y)
        assert f1.params == f2.params
        assert f1.loglik == f2.loglik

    def test_scale_equivariance(self):
        y = _simulate_margin(X_PARAMS, 2000, seed=5)
        c = 37.0
        base = qmle_fit(y)
        scaled = qmle_fit(c * y)
        assert scaled.params.omega == pytest.approx(c**2 * base.params.omega, rel=1e-5)
        assert scaled.params.alpha == pytest.approx(base.params.alpha, abs=1e-5)
        assert scaled.params.beta == pytest.approx(base.params.beta, abs=1e-5)
        res_base = y / base.vol_path
        res_scaled = (c * y) / scaled.vol_path
        assert np.max(np.abs(res_base - res_scaled)) < 1e-6

    def test_forecast_identity_and_positivity(self):
        y = _simulate_margin(X_PARAMS, 1500, seed=6)
        fit = qmle_fit(y)
        p = fit.params
        expected = np.sqrt(p.omega + p.alpha * y[-1] ** 2 + p.beta * fit.vol_path[-1] ** 2)
        assert fit.vol_forecast == pytest.approx(expected, rel=1e-12)
        assert fit.vol_forecast > 0
        assert np.all(fit.vol_path > 0)

    def test_loglik_beats_truth_usually(self):
        # optimizer quality gate: fitted likelihood >= truth's on >= 95% of fits
        wins = 0
        reps = 20
        for rep in range(reps):
            y = _simulate_margin(X_PARAMS, 1000, seed=100 + rep)
            fit = qmle_fit(y)
            y_sq = y**2
            from tailmes.garch import _neg_quasi_loglik

            truth = -_neg_quasi_loglik(y, y_sq, X_PARAMS.omega, X_PARAMS.alpha,
                                       X_PARAMS.beta, float(np.var(y)))
            fitted = -_neg_quasi_loglik(y, y_sq, fit.params.omega, fit.params.alpha,
                                        fit.params.beta, float(np.var(y)))
            wins += fitted >= truth - 1e-9
        assert wins >= 0.95 * reps

    def test_residual_variance_near_one(self):
        spec = InnovationSpec.homogeneous(BurrParams(0.25, 20.0),
                                          TCopulaParams.bivariate(3.0, 0.95))
        eps = sample_innovations(spec, 1510, 7)
        y = simulate_ccc([X_PARAMS, GarchParams(0.001, 0.1, 0.85)], eps,
                         [0.15, 0.1])
        fits = [qmle_fit(y[:, j]) for j in range(2)]
        panel = filter_and_residualize(y, fits, 10)
        for j in range(2):
            assert 0.8 <= np.var(panel.column(j)) <= 1.2

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            qmle_fit(np.ones(1000))
        with pytest.raises(ValueError):
            qmle_fit(np.arange(10.0))
        bad = np.random.default_rng(8).standard_normal(100)
        bad[50] = np.nan
        with pytest.raises(ValueError):
            qmle_fit(bad)


class TestResidualize:
    def test_division(self):
        class FakeFit:
            vol_path = np.array([2.0, 2.0])

        panel = filter_and_residualize(np.array([[4.0], [-2.0]]), [FakeFit()], 0)
        assert np.allclose(panel.residuals[:, 0], [2.0, -1.0])

    def test_clipping(self):
        class FakeFit:
            vol_path = np.ones(20)

        y = np.arange(20.0).reshape(-1, 1)
        assert filter_and_residualize(y, [FakeFit()], 0).n == 20
        panel = filter_and_residualize(y, [FakeFit()], 10)
        assert panel.n == 10
        assert panel.residuals[0, 0] == 10.0

    def test_filtration_consistency(self):
        # filtered residuals approach the true innovations as the window grows
        rng = np.random.default_rng(9)
        errs = []
        for n in (1000, 20_000):
            eps = rng.standard_normal((500 + n, 1))
            y, sig = simulate_ccc([X_PARAMS], eps,
                                  [np.sqrt(X_PARAMS.stationary_variance)],
                                  return_volatility=True)
            y, sig, eps_kept = y[500:], sig[500:], eps[500:]
            fit = qmle_fit(y[:, 0])
            panel = filter_and_residualize(y, [fit], 10)
            errs.append(np.mean((panel.column(0) - eps_kept[10:, 0]) ** 2))
        assert errs[1] < errs[0]
        assert errs[1] < 0.01

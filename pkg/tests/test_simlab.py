import numpy as np
import pytest
from scipy import stats

from tailmes.distributions import (
    BurrParams,
    InnovationSpec,
    TCopulaParams,
    sample_innovations,
)
from tailmes.garch import GarchParams
from tailmes.simlab import (
    SimConfig,
    _tail_t_quantiles,
    fit_burr_ml,
    fit_tcopula_ml,
    innovation_upper_quantile,
    mes_limit_integral,
    ml_estimator,
    rejection_theta_oracle,
    run_replication,
    run_study,
    theta_quadrature,
    true_theta_oracle,
)

BURR = BurrParams(a=0.25, b=20.0)


class TestSimConfig:
    def test_defaults(self):
        cfg = SimConfig()
        assert cfg.n == 1000 and cfg.ell_n == 10
        assert cfg.garch_x == GarchParams(0.001, 0.2, 0.75)
        assert cfg.garch_y == GarchParams(0.001, 0.1, 0.85)
        assert cfg.rho == 0.95

    def test_rejects_anti_extrapolation(self):
        with pytest.raises(ValueError):
            SimConfig(n=1000, p_grid=(0.5,))

    def test_rejects_bad_p(self):
        with pytest.raises(ValueError):
            SimConfig(p_grid=(0.0,))


class TestTailTQuantiles:
    @pytest.mark.parametrize("nu", [3.0, 4.0, 5.0])
    @pytest.mark.parametrize("p", [0.05, 0.001, 1e-5])
    def test_matches_exact_isf(self, nu, p):
        v = np.concatenate([[1e-9, 1e-6, 1.0],
                            np.random.default_rng(1).uniform(1e-8, 1.0, 200)])
        approx = _tail_t_quantiles(p, v, nu)
        exact = stats.t.isf(p * v, nu)
        assert np.max(np.abs(approx / exact - 1.0)) < 1e-6


class TestTrueThetaOracle:
    def test_near_independence_is_near_zero(self):
        # heavy-ish draws, but weak dependence: conditional mean collapses to 0
        o = true_theta_oracle(1e6, 0.0, BURR, 0.05, 2_000_000, 5)
        assert abs(o.theta_p) < 4 * o.mc_error

    def test_oracles_cross_validate(self):
        p = 0.01
        cond = true_theta_oracle(3.0, 0.95, BURR, p, 2_000_000, 6)
        rej = rejection_theta_oracle(3.0, 0.95, BURR, p, 20_000_000, 7)
        joint_se = np.hypot(cond.mc_error, rej.mc_error)
        assert abs(cond.theta_p - rej.theta_p) < 3 * joint_se

    def test_draw_floor(self):
        with pytest.raises(ValueError):
            true_theta_oracle(3.0, 0.95, BURR, 0.01, 1000, 1)

    def test_quadrature_matches_oracle(self):
        o = true_theta_oracle(3.0, 0.95, BURR, 0.01, 4_000_000, 17)
        quad = theta_quadrature(3.0, 0.95, BURR, 0.01)
        assert abs(quad - o.theta_p) < 3 * o.mc_error

    def test_limit_integral(self):
        # theta_p^+ / U1(1/p) approaches the tail-copula integral as p shrinks
        limit = mes_limit_integral(3.0, 0.95, BURR.gamma)
        gaps = []
        for p in (1e-2, 1e-3, 1e-4):
            theta = theta_quadrature(3.0, 0.95, BURR, p, positive_part=True)
            ratio = theta / innovation_upper_quantile(p, BURR)
            gaps.append(abs(ratio - limit))
        assert gaps[0] > gaps[1] > gaps[2]


@pytest.fixture(scope="module")
def big_sample():
    spec = InnovationSpec.homogeneous(BURR, TCopulaParams.bivariate(3.0, 0.95))
    return sample_innovations(spec, 100_000, 2024)


class TestMlFits:

    def test_burr_ml_consistency(self, big_sample):
        fit = fit_burr_ml(np.abs(big_sample[:, 1]))
        assert fit.a == pytest.approx(BURR.a, rel=0.10)
        assert fit.b == pytest.approx(BURR.b, rel=0.10)

    def test_tcopula_ml_consistency(self, big_sample):
        n = big_sample.shape[0]
        u = stats.rankdata(big_sample[:, 0]) / (n + 1)
        v = stats.rankdata(big_sample[:, 1]) / (n + 1)
        nu_hat, rho_hat = fit_tcopula_ml(u, v)
        assert nu_hat == pytest.approx(3.0, rel=0.10)
        assert rho_hat == pytest.approx(0.95, rel=0.10)


class TestRunReplication:
    CFG = SimConfig(replications=2, oracle_draws=1_000_000, base_seed=33)

    def test_bit_identical_records(self):
        r1 = run_replication(self.CFG, 0.001, 0)
        r2 = run_replication(self.CFG, 0.001, 0)
        assert r1 == r2

    def test_different_reps_differ(self):
        r1 = run_replication(self.CFG, 0.001, 0)
        r2 = run_replication(self.CFG, 0.001, 1)
        assert r1.theta_hat != r2.theta_hat

    def test_hit_definition(self):
        r = run_replication(self.CFG, 0.001, 0)
        assert r.hit == (r.ci_lower <= r.theta_true <= r.ci_upper)

    def test_degenerate_garch_isolates_evt_error(self):
        # alpha = beta = 0: sigma is flat at sqrt(omega), so the volatility
        # forecast carries no estimation noise beyond omega-hat itself
        cfg = SimConfig(replications=1, oracle_draws=1_000_000, base_seed=9,
                        garch_x=GarchParams(0.04, 0.0, 0.0),
                        garch_y=GarchParams(0.09, 0.0, 0.0))
        r = run_replication(cfg, 0.001, 0)
        theta_innov_true = r.theta_true / 0.3  # sigma_{n+1,Y} = sqrt(0.09)
        assert not r.failed
        # the forecast divided by the fitted sigma should land near the
        # innovation-level truth (pure EVT error, well within a factor 2)
        assert 0.5 < (r.theta_hat / r.theta_true) < 2.0
        assert theta_innov_true > 0


class TestMlEstimator:
    def test_implied_theta_at_true_parameters(self):
        # at the true parameters the implied value is the oracle itself
        spec = InnovationSpec.homogeneous(BURR, TCopulaParams.bivariate(3.0, 0.95))
        draws = sample_innovations(spec, 50_000, 3)
        from tailmes.garch import GarchFit  # noqa: F401  (documentation import)
        from tailmes.garch import ResidualPanel

        panel = ResidualPanel(residuals=draws, clipped=0, margin_ids=("X", "Y"))
        est = ml_estimator(panel, 0.01, draws=400_000, rng_seed=4)
        oracle = true_theta_oracle(3.0, 0.95, BURR, 0.01, 2_000_000, 5)
        # ML noise at n = 5e4 plus MC noise; generous but informative band
        assert est == pytest.approx(oracle.theta_p, rel=0.10)

    def test_too_few_residuals(self):
        from tailmes.garch import ResidualPanel

        panel = ResidualPanel(residuals=np.random.default_rng(1).standard_normal((100, 2)),
                              clipped=0, margin_ids=("X", "Y"))
        with pytest.raises(ValueError):
            ml_estimator(panel, 0.01)


class TestRunStudy:
    def test_single_replication_identities(self):
        cfg = SimConfig(replications=1, p_grid=(0.001,), oracle_draws=1_000_000,
                        base_seed=21)
        res = run_study(cfg)
        row = res.row_for(0.001)
        assert row.rmse == pytest.approx(abs(row.bias), rel=1e-12)
        assert row.coverage in (0.0, 100.0)

    def test_small_study_metrics(self, tmp_path):
        cfg = SimConfig(replications=4, p_grid=(0.01, 0.001), oracle_draws=1_000_000,
                        base_seed=22)
        res = run_study(cfg)
        assert len(res.rows) == 2
        for row in res.rows:
            assert 0.0 <= row.coverage <= 100.0
            assert row.rmse >= abs(row.bias) - 1e-12
        out = tmp_path / "study.csv"
        res.write_csv(out)
        text = out.read_text().splitlines()
        assert text[0].startswith("p,bias,rmse,rmse_ml,rmse_np,length,coverage")
        assert len(text) == 3

"""Empirical tail-copula estimates and the joint asymptotic covariance matrix."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["TailCovariance", "r_hat_pair", "sigma_hat"]


@dataclass
class TailCovariance:
    """Estimated asymptotic covariance of the joint log-MES forecast errors.

    sigma is D x D with diagonal gamma_d^2; r_values maps (i, j) with i < j to
    the pair (R_hat(q_i, q_j), R_hat(q_j, q_i)).
    """

    sigma: np.ndarray
    gammas: np.ndarray
    ks: np.ndarray
    k: int
    r_values: dict

    @property
    def dim(self) -> int:
        return self.sigma.shape[0]


def r_hat_pair(res_i, res_j, k: int, k_i: int, k_j: int):
    """Empirical tail copula at (q_i, q_j) and with thresholds swapped.

    First component: (1/k) * #{t: res_i[t] > i_(k_i+1), res_j[t] > j_(k_j+1)}.
    Second component thresholds each series at the other series' order index.
    Strict inequalities; ties at the threshold are excluded.
    """
    x = np.asarray(res_i, dtype=float)
    y = np.asarray(res_j, dtype=float)
    if x.shape != y.shape:
        raise ValueError("res_i and res_j must be aligned")
    n = x.shape[0]
    if k_i + 1 > n or k_j + 1 > n:
        raise ValueError("order-statistic index exceeds the sample size")
    if k < 1:
        raise ValueError("k must be positive")
    x_desc = np.sort(x)[::-1]
    y_desc = np.sort(y)[::-1]
    first = np.count_nonzero((x > x_desc[k_i]) & (y > y_desc[k_j])) / k
    second = np.count_nonzero((x > x_desc[k_j]) & (y > y_desc[k_i])) / k
    return float(first), float(second)


def sigma_hat(gammas, ks, k: int, r_pairs: dict) -> TailCovariance:
    """Covariance estimate: sigma_ij = k * g_i g_j / sqrt(k_i k_j) * mean of the
    two R_hat values; the diagonal is gamma_d^2 by construction and is set exactly."""
    gammas = np.asarray(gammas, dtype=float)
    ks = np.asarray(ks, dtype=int)
    d = gammas.shape[0]
    if ks.shape[0] != d:
        raise ValueError("gammas and ks must have the same length")
    if k < 1 or np.any(ks < 1):
        raise ValueError("exceedance counts must be positive")
    sigma = np.empty((d, d))
    r_values = {}
    for i in range(d):
        sigma[i, i] = gammas[i] ** 2
        r_values[(i, i)] = (ks[i] / k, ks[i] / k)
        for j in range(i + 1, d):
            if (i, j) not in r_pairs:
                raise ValueError(f"missing R_hat values for pair {(i, j)}")
            r_ij, r_ji = r_pairs[(i, j)]
            val = k * gammas[i] * gammas[j] / np.sqrt(ks[i] * ks[j]) * (r_ij + r_ji) / 2.0
            sigma[i, j] = sigma[j, i] = val
            r_values[(i, j)] = (float(r_ij), float(r_ji))
    return TailCovariance(sigma=sigma, gammas=gammas, ks=ks, k=k, r_values=r_values)


def sigma_hat_from_residuals(residual_columns, gammas, ks, k: int) -> TailCovariance:
    """Convenience wrapper computing all pairwise R_hat values from residual series."""
    cols = [np.asarray(c, dtype=float) for c in residual_columns]
    d = len(cols)
    ks = np.asarray(ks, dtype=int)
    r_pairs = {}
    for i in range(d):
        for j in range(i + 1, d):
            r_pairs[(i, j)] = r_hat_pair(cols[i], cols[j], k, int(ks[i]), int(ks[j]))
    return sigma_hat(gammas, ks, k, r_pairs)

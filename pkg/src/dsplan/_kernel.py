"""Compiled scan kernels for the grid-search optimizer.

The optimizer evaluates the threshold part of the Bayes risk over dense
(tau, zeta[, r]) grids; scipy's incomplete beta is far too slow for the
billions of evaluations involved, so the kernels below recompute it with the
finite series valid for an integer first parameter,

    I_x(m, beta) = 1 - (1-x)^beta * sum_{i<m} Gamma(beta+i)/(Gamma(beta) i!) x^i,

whose terms are all positive.  Small x switches to the complementary tail
series (also positive) so tiny values keep relative accuracy.  Agreement
with the scipy-backed single-plan formulas is asserted by the test suite.

The hybrid kernel shares work across the failure budget r: the m < r mixture
block is a prefix sum over m, so one pass prices every r at once.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit, prange

__all__ = ["inc_beta_int_arr", "type1_scan", "hybrid_scan"]


@njit(cache=True)
def _inc_beta_int(m: int, beta: float, x: float) -> float:
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    if x < 0.25:
        t = 1.0
        for i in range(m):
            t *= x * (beta + i) / (i + 1)
        s = t
        i = m
        while t > 1e-17 * s and i < 100000:
            t *= x * (beta + i) / (i + 1)
            s += t
            i += 1
        return math.exp(beta * math.log1p(-x)) * s
    s = 1.0
    t = 1.0
    for i in range(1, m):
        t *= x * (beta + i - 1.0) / i
        s += t
    return 1.0 - math.exp(beta * math.log1p(-x)) * s


@njit(cache=True, parallel=True)
def inc_beta_int_arr(ms, beta, xs, out):
    """Vectorized I_x(m, beta) for integer m; test hook for the series."""
    for k in prange(xs.size):
        out[k] = _inc_beta_int(int(ms[k]), beta, xs[k])


@njit(cache=True, parallel=True)
def type1_scan(n, taus, zetas, zstart, b, betas, cfull, binom, bases, out_risk, out_zidx):
    """Minimum over the zeta grid of the Type-I risk, per tau.

    ``betas[l] = a + p_l``; ``cfull[l]`` carries C_l * b^a/Gamma(a) *
    Gamma(a+p_l); ``bases[t]`` is the zeta-independent part of the risk.
    ``zstart[t]`` is the first admissible zeta index (the scan excludes
    thresholds at or below the estimator's support floor 1/(n tau)).
    Writes the per-tau minimum and the index of the first zeta attaining it.
    """
    T = taus.shape[0]
    Z = zetas.shape[0]
    L = betas.shape[0]
    P = n * (n + 3) // 2
    for t in prange(T):
        tau = taus[t]
        if zstart[t] >= Z:
            out_risk[t] = np.inf
            out_zidx[t] = -1
            continue
        inv_floor = 1.0 / (n * tau)
        wt = np.empty((P, L))
        ms = np.empty(P, np.int64)
        stau = np.empty(P)
        idx = 0
        for m in range(1, n + 1):
            for j in range(m + 1):
                s = n - m + j
                sign = -1.0 if (j & 1) else 1.0
                b2 = binom[n, m] * binom[m, j] * sign
                lc = math.log(b + s * tau)
                for l in range(L):
                    wt[idx, l] = cfull[l] * b2 * math.exp(-betas[l] * lc)
                ms[idx] = m
                stau[idx] = s * tau
                idx += 1
        best = np.inf
        bz = -1
        for z in range(zstart[t], Z):
            invz = 1.0 / zetas[z]
            thr = 0.0
            for p in range(P):
                w = ms[p] * invz - stau[p]
                if w <= 0.0:
                    continue
                cst = w / (b + stau[p])
                sst = cst / (1.0 + cst)
                mp = int(ms[p])
                for l in range(L):
                    thr += wt[p, l] * _inc_beta_int(mp, betas[l], sst)
            risk = bases[t] + thr
            if risk < best:
                best = risk
                bz = z
        out_risk[t] = best
        out_zidx[t] = bz


@njit(cache=True, parallel=True)
def hybrid_scan(n, taus, zetas, zstart, b, betas, cfull, binom, bases, out_risk, out_zidx):
    """Minimum over the zeta grid of the hybrid risk, per (tau, r).

    ``bases[t, r-1]`` holds the zeta-independent risk part for budget r at
    tau_t, with +inf marking (tau, r) cells pruned by the caller's lower
    bound; pruned cells are skipped and reported as +inf.  ``zstart[t]`` is
    the first zeta index above the support floor 1/(n tau); smaller
    thresholds are not admissible plans.

    Per zeta the kernel accumulates, for each row m, the shared mixture
    contribution sh[m] (used by every r > m) and the budget-specific
    contribution sp[m] (zero-offset member plus the order-statistic
    correction for r = m), then reads off every r from the prefix sums.
    """
    T = taus.shape[0]
    Z = zetas.shape[0]
    L = betas.shape[0]
    R = bases.shape[1]
    for t in prange(T):
        tau = taus[t]
        rmax = 0
        for r in range(1, R + 1):
            if bases[t, r - 1] < np.inf:
                rmax = r
        for r in range(R):
            out_risk[t, r] = np.inf
            out_zidx[t, r] = -1
        if rmax == 0 or zstart[t] >= Z:
            continue

        # unique (m, s) pairs: s = 0 plus s = max(1, n-m)..n, for m = 1..rmax
        P = 0
        for m in range(1, rmax + 1):
            P += (n - max(1, n - m) + 1) + 1
        ms = np.empty(P, np.int64)
        stau = np.empty(P)
        wsh = np.zeros((P, L))
        wsp = np.zeros((P, L))
        idx = 0
        for m in range(1, rmax + 1):
            lo = max(1, n - m)
            # zero-offset member of the r = m group
            for l in range(L):
                wsp[idx, l] = cfull[l] * math.exp(-betas[l] * math.log(b))
            ms[idx] = m
            stau[idx] = 0.0
            idx += 1
            for s in range(lo, n + 1):
                lc = math.log(b + s * tau)
                j = s - (n - m)
                if m <= rmax - 1 and 0 <= j <= m:
                    sign = -1.0 if (j & 1) else 1.0
                    b2 = binom[n, m] * binom[m, j] * sign
                    for l in range(L):
                        wsh[idx, l] = cfull[l] * b2 * math.exp(-betas[l] * lc)
                k = s - (n - m)
                if 1 <= k <= m:
                    sign = -1.0 if (k & 1) else 1.0
                    b2 = binom[n, m] * binom[m - 1, k - 1] * sign * m / s
                    for l in range(L):
                        wsp[idx, l] = cfull[l] * b2 * math.exp(-betas[l] * lc)
                ms[idx] = m
                stau[idx] = s * tau
                idx += 1

        sh = np.empty(rmax + 1)
        sp = np.empty(rmax + 1)
        best = np.full(R, np.inf)
        bz = np.full(R, -1, np.int64)
        for z in range(zstart[t], Z):
            invz = 1.0 / zetas[z]
            for m in range(rmax + 1):
                sh[m] = 0.0
                sp[m] = 0.0
            for p in range(P):
                w = ms[p] * invz - stau[p]
                if w <= 0.0:
                    continue
                cst = w / (b + stau[p])
                sst = cst / (1.0 + cst)
                mp = int(ms[p])
                for l in range(L):
                    iv = _inc_beta_int(mp, betas[l], sst)
                    sh[mp] += wsh[p, l] * iv
                    sp[mp] += wsp[p, l] * iv
            cum = 0.0
            for r in range(1, rmax + 1):
                if bases[t, r - 1] < np.inf:
                    risk = bases[t, r - 1] + cum + sp[r]
                    if risk < best[r - 1]:
                        best[r - 1] = risk
                        bz[r - 1] = z
                cum += sh[r]
        for r in range(R):
            out_risk[t, r] = best[r]
            out_zidx[t, r] = bz[r]

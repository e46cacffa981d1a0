"""Bounded grid search for optimum sampling plans.

The scan follows the published algorithm: minimize over zeta for fixed
(n, tau) (and r in the hybrid case), then over tau, then over the discrete
design sizes, always comparing against the two no-sampling actions
r(0,0,0) = Cr and r(0,0,inf) = E g(lambda).  Finiteness comes from the
cost-ratio bounds on n and tau plus the tau_alpha range rule; on top of
those the scan prunes with the exact lower bound

    risk >= n (Cs - rs) + E(M) rs + E(tau*) Ctau + E min(g(lambda), Cr),

whose last term is the perfect-information floor.  Pruning only skips cells
that provably cannot beat the incumbent, so the returned plan is the true
grid minimizer.  Ties are broken toward the cheaper experiment: smaller n,
then r, then tau, then zeta, which the scan order realizes by strict
improvement.

Thresholds at or below the estimator's support floor 1/(n tau) are not
admissible scan points: every such zeta encodes the same degenerate
"accept only on zero failures" rule, and the published optima range over
the continuous support only (their n = 1 rows report the first grid point
above the floor).  The two no-sampling actions are still always compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from . import _kernel
from .model import AcceptanceCost, CostModel, HybridPlan, Type1Plan
from .risk_hybrid import bayes_risk_hybrid
from .risk_type1 import MAX_SAMPLE_SIZE, bayes_risk_type1, threshold_weights
from .specfun import GammaPrior, prior_moment

__all__ = [
    "GridSpec",
    "SearchBounds",
    "ScanEntry",
    "OptimumReport",
    "tau_alpha",
    "bounds_type1",
    "optimize_type1",
    "optimize_hybrid",
]


@dataclass(frozen=True)
class GridSpec:
    """Grid geometry and the tau-range tail probability alpha."""

    zeta_step: float = 0.0125
    tau_step: float = 0.0125
    zeta_cap: float = 6.0
    alpha: float = 0.01

    def __post_init__(self) -> None:
        if not (self.zeta_step > 0 and self.tau_step > 0):
            raise ValueError("grid steps must be positive")
        if not self.zeta_cap > 0:
            raise ValueError("zeta_cap must be positive")
        if not 0 < self.alpha < 1:
            raise ValueError("alpha must be in (0, 1)")

    def zeta_points(self) -> np.ndarray:
        k = int(math.floor(self.zeta_cap / self.zeta_step + 1e-9))
        return np.arange(1, k + 1) * self.zeta_step

    def tau_points(self, tau_max: float) -> np.ndarray:
        k = int(math.floor(tau_max / self.tau_step + 1e-9))
        return np.arange(1, k + 1) * self.tau_step


@dataclass(frozen=True)
class SearchBounds:
    """Finite search ranges: n_max items, tau_max censoring time, zeta cap."""

    n_max: int
    tau_max: float
    zeta_max: float


@dataclass(frozen=True)
class ScanEntry:
    """Best risk found for one (n[, r]) slice of the scan."""

    n: int
    r: int | None
    tau: float
    zeta: float
    risk: float


@dataclass(frozen=True)
class OptimumReport:
    plan: Type1Plan | HybridPlan
    risk: float
    runner_ups: tuple[ScanEntry, ...]
    scan_log: tuple[ScanEntry, ...]
    notes: tuple[str, ...] = field(default=())


def tau_alpha(prior: GammaPrior, alpha: float) -> float:
    """Time by which a fresh item fails with marginal probability 1 - alpha:
    the inversion of the marginal survival (b/(b+t))^a."""
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    return prior.b * (alpha ** (-1.0 / prior.a) - 1.0)


def bounds_type1(
    costs: CostModel,
    g: AcceptanceCost,
    prior: GammaPrior,
    probe_risk: float = math.inf,
    grid: GridSpec = GridSpec(),
) -> SearchBounds:
    """Finiteness bounds on the optimal Type-I design.

    n_max = floor(min{Cr, E g, probe} / (Cs - rs)); the tau bound divides the
    same cap by Ctau, falling back to tau_alpha when time is free.
    """
    if costs.c_sample <= costs.salvage:
        raise ValueError("sample-size bound requires c_sample > salvage")
    cap = min(costs.c_reject, g.expectation(prior), probe_risk)
    n_max = int(math.floor(cap / (costs.c_sample - costs.salvage)))
    if costs.c_time > 0:
        tau_max = cap / costs.c_time
    else:
        tau_max = tau_alpha(prior, grid.alpha)
    return SearchBounds(n_max=n_max, tau_max=tau_max, zeta_max=grid.zeta_cap)


def perfect_information_floor(costs: CostModel, g: AcceptanceCost, prior: GammaPrior) -> float:
    """E min(g(lambda), Cr): what an oracle deciding from lambda itself would
    pay.  Every plan's decision term is bounded below by this."""
    cr = costs.c_reject
    if g.constant >= cr:
        return cr
    if len(g.terms) == 1:
        return g.constant
    hi = 1.0
    while g(hi) < cr:
        hi *= 2.0
        if hi > 1e300:
            return g.expectation(prior)
    lo = 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g(mid) < cr:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12 * max(1.0, hi):
            break
    lam_star = 0.5 * (lo + hi)
    a, b = prior.a, prior.b
    acc = math.fsum(
        c * prior_moment(prior, p) * special.gammainc(a + p, b * lam_star)
        for c, p in g.terms
    )
    return acc + cr * float(special.gammaincc(a, b * lam_star))


def _cfull_betas(costs, g, prior):
    """Per-exponent constants for the kernels: beta_l and the folded
    C_l b^a Gamma(a+p_l) / Gamma(a) prefactor."""
    a, b = prior.a, prior.b
    cl = threshold_weights(costs, g)
    betas = np.array([a + p for _, p in g.terms])
    log_norm = a * math.log(b) - special.gammaln(a)
    cfull = np.array(
        [c * math.exp(log_norm + special.gammaln(bt)) for c, bt in zip(cl, betas)]
    )
    return betas, cfull


def _binom_table(n: int) -> np.ndarray:
    t = np.zeros((n + 1, n + 1))
    for i in range(n + 1):
        for k in range(i + 1):
            t[i, k] = math.comb(i, k)
    return t


def _no_sampling_candidates(costs, g, prior, hybrid: bool):
    mu_g = g.expectation(prior)
    cr = costs.c_reject
    if hybrid:
        reject = HybridPlan(0, 0, 0.0, 0.0)
        accept = HybridPlan(0, 0, 0.0, math.inf)
    else:
        reject = Type1Plan(0, 0.0, 0.0)
        accept = Type1Plan(0, 0.0, math.inf)
    # reject listed first so equal risks prefer the zeta = 0 action
    return [(reject, cr), (accept, mu_g)]


def _type1_em_grid(n: int, taus: np.ndarray, prior: GammaPrior) -> np.ndarray:
    return n * (1.0 - (prior.b / (prior.b + taus)) ** prior.a)


def _pm_weight_matrix(n: int) -> np.ndarray:
    """Integer weights: P(M_I = k) = sum_s W[k, s] (b/(b+s tau))^a."""
    w = np.zeros((n + 1, n + 1))
    for k in range(n + 1):
        cnk = math.comb(n, k)
        for j in range(k + 1):
            w[k, n - k + j] += (-1.0) ** j * cnk * math.comb(k, j)
    return w


def _hybrid_moment_grids(n, taus, prior):
    """E(M) and E(tau*) for all budgets r = 1..n over the tau grid.

    Returns arrays of shape (len(taus), n); column r-1 holds budget r.
    Matches the per-plan formulas in risk_hybrid to rounding error.
    """
    a, b = prior.a, prior.b
    s = np.arange(0, n + 1)
    q = (b / (b + np.outer(taus, s))) ** a          # (T, n+1)
    pm = q @ _pm_weight_matrix(n).T                 # (T, n+1): P(M_I = k)
    cum_pm = np.cumsum(pm, axis=1)
    cum_mpm = np.cumsum(np.arange(n + 1) * pm, axis=1)
    rs = np.arange(1, n + 1)
    em = cum_mpm[:, :-1] + rs * (1.0 - cum_pm[:, :-1])

    d = (n - np.arange(n)).astype(float)            # n - j for j = 0..n-1
    big = b + np.outer(taus, d)                     # (T, n)
    if a == 1.0:
        w = np.log(big / b)
    else:
        w = -np.expm1((a - 1.0) * np.log(b / big)) / (a - 1.0)
    tj = b * w / d**2 - taus[:, None] * (b / big) ** a / d
    fw = np.zeros((n, n))
    for r in range(1, n + 1):
        cnr = math.comb(n, r)
        for j in range(r):
            fw[r - 1, j] = r * cnr * math.comb(r - 1, j) * (-1.0) ** (r - 1 - j)
    etau = tj @ fw.T + taus[:, None] * cum_pm[:, :-1]
    return em, etau


def _check_postconditions(report, costs, g, prior, hybrid):
    mu_g = g.expectation(prior)
    cap = min(costs.c_reject, mu_g)
    if report.risk > cap + 1e-9:
        raise RuntimeError(
            f"optimizer postcondition failed: risk {report.risk} exceeds "
            f"the no-sampling cap {cap}"
        )
    plan = report.plan
    # type-I spends tau * Ctau deterministically; hybrid time spend is only
    # bounded by E(tau*) <= tau, so check the guaranteed part
    spent = plan.n * (costs.c_sample - costs.salvage) + (
        0.0 if hybrid else plan.tau * costs.c_time
    )
    if spent > report.risk + 1e-9:
        raise RuntimeError("optimizer postcondition failed: fixed spend exceeds risk")
    if hybrid and plan.n >= 1 and plan.r > plan.n:
        raise RuntimeError("optimizer postcondition failed: r0 > n0")


def optimize_type1(
    costs: CostModel,
    g: AcceptanceCost,
    prior: GammaPrior,
    grid: GridSpec = GridSpec(),
) -> OptimumReport:
    """Global grid minimizer of the Type-I Bayes risk."""
    zetas = grid.zeta_points()
    mu_g = g.expectation(prior)
    cr = costs.c_reject
    cs_net = costs.c_sample - costs.salvage
    candidates = _no_sampling_candidates(costs, g, prior, hybrid=False)
    best_plan, best_risk = min(candidates, key=lambda c: c[1])

    emin = perfect_information_floor(costs, g, prior)
    talpha = tau_alpha(prior, grid.alpha)
    cap = min(cr, mu_g)
    tau_theorem = cap / costs.c_time if costs.c_time > 0 else math.inf
    tau_hi = min(tau_theorem, talpha)
    if cs_net > 0:
        n_cap = min(bounds_type1(costs, g, prior, grid=grid).n_max, MAX_SAMPLE_SIZE)
    else:
        n_cap = MAX_SAMPLE_SIZE
    taus_all = grid.tau_points(tau_hi)

    betas, cfull = _cfull_betas(costs, g, prior)
    scan_log: list[ScanEntry] = []
    notes: list[str] = []
    floor_pruned = False

    for n in range(1, n_cap + 1):
        if n * cs_net + emin >= best_risk:
            floor_pruned = True
            break
        taus = taus_all
        if costs.c_time > 0:
            t_lim = (best_risk - n * cs_net - emin) / costs.c_time
            taus = taus_all[taus_all <= t_lim + 1e-12]
        if taus.size == 0:
            floor_pruned = True
            break
        bases = n * cs_net + _type1_em_grid(n, taus, prior) * costs.salvage \
            + taus * costs.c_time + mu_g
        zstart = np.searchsorted(zetas, 1.0 / (n * taus), side="right")
        out_risk = np.empty(taus.size)
        out_zidx = np.empty(taus.size, np.int64)
        _kernel.type1_scan(
            n, taus, zetas, zstart, prior.b, betas, cfull, _binom_table(n), bases,
            out_risk, out_zidx,
        )
        ti = int(np.argmin(out_risk))
        if not math.isfinite(out_risk[ti]):
            continue
        entry = ScanEntry(
            n, None, float(taus[ti]), float(zetas[out_zidx[ti]]), float(out_risk[ti])
        )
        scan_log.append(entry)
        if entry.risk < best_risk:
            best_risk = entry.risk
            best_plan = Type1Plan(n, entry.tau, entry.zeta)

    theorem_open = cs_net == 0 or math.floor(min(cr, mu_g) / cs_net) > MAX_SAMPLE_SIZE
    capped = not floor_pruned and n_cap == MAX_SAMPLE_SIZE and theorem_open
    return _finalize(
        best_plan, best_risk, scan_log, notes, candidates, costs, g, prior,
        grid, taus_all, capped, hybrid=False,
    )


def optimize_hybrid(
    costs: CostModel,
    g: AcceptanceCost,
    prior: GammaPrior,
    grid: GridSpec = GridSpec(),
) -> OptimumReport:
    """Global grid minimizer of the hybrid Bayes risk (extra budget loop
    r = 1..n; tau ranges over (0, tau_alpha])."""
    zetas = grid.zeta_points()
    mu_g = g.expectation(prior)
    cr = costs.c_reject
    cs_net = costs.c_sample - costs.salvage
    candidates = _no_sampling_candidates(costs, g, prior, hybrid=True)
    best_plan, best_risk = min(candidates, key=lambda c: c[1])

    emin = perfect_information_floor(costs, g, prior)
    taus = grid.tau_points(tau_alpha(prior, grid.alpha))
    if cs_net > 0:
        n_cap = min(
            int(math.floor(min(cr, mu_g) / cs_net)),
            MAX_SAMPLE_SIZE,
        )
    else:
        n_cap = MAX_SAMPLE_SIZE

    betas, cfull = _cfull_betas(costs, g, prior)
    scan_log: list[ScanEntry] = []
    notes: list[str] = []
    floor_pruned = False

    for n in range(1, n_cap + 1):
        if n * cs_net + emin >= best_risk:
            floor_pruned = True
            break
        if taus.size == 0:
            break
        em, etau = _hybrid_moment_grids(n, taus, prior)
        bases = n * cs_net + em * costs.salvage + etau * costs.c_time + mu_g
        lower = bases - mu_g + emin
        bases = np.where(lower >= best_risk, np.inf, bases)
        keep = np.where(np.isfinite(bases).any(axis=1))[0]
        if keep.size == 0:
            continue
        t_last = int(keep[-1]) + 1
        taus_n = taus[:t_last]
        bases_n = bases[:t_last]
        zstart = np.searchsorted(zetas, 1.0 / (n * taus_n), side="right")
        out_risk = np.full((taus_n.size, n), np.inf)
        out_zidx = np.full((taus_n.size, n), -1, np.int64)
        _kernel.hybrid_scan(
            n, taus_n, zetas, zstart, prior.b, betas, cfull, _binom_table(n), bases_n,
            out_risk, out_zidx,
        )
        for r in range(1, n + 1):
            col = out_risk[:, r - 1]
            ti = int(np.argmin(col))
            if not math.isfinite(col[ti]):
                continue
            entry = ScanEntry(
                n, r, float(taus_n[ti]), float(zetas[out_zidx[ti, r - 1]]), float(col[ti])
            )
            scan_log.append(entry)
            if entry.risk < best_risk:
                best_risk = entry.risk
                best_plan = HybridPlan(n, r, entry.tau, entry.zeta)

    theorem_open = cs_net == 0 or math.floor(min(cr, mu_g) / cs_net) > MAX_SAMPLE_SIZE
    capped = not floor_pruned and n_cap == MAX_SAMPLE_SIZE and theorem_open
    return _finalize(
        best_plan, best_risk, scan_log, notes, candidates, costs, g, prior,
        grid, taus, capped, hybrid=True,
    )


def _finalize(
    best_plan, best_risk, scan_log, notes, candidates, costs, g, prior, grid,
    taus_all, capped, *, hybrid,
):
    if hybrid:
        exact = bayes_risk_hybrid(best_plan, costs, g, prior).total
    else:
        exact = bayes_risk_type1(best_plan, costs, g, prior).total
    if abs(exact - best_risk) > 1e-6 * max(1.0, abs(exact)):
        raise RuntimeError(
            f"scan kernel disagrees with the closed form at the optimum: "
            f"{best_risk} vs {exact}"
        )
    if capped:
        notes.append(
            f"sample-size scan truncated at the stability cap {MAX_SAMPLE_SIZE}"
        )
    if best_plan.n >= 1 and taus_all.size and abs(best_plan.tau - taus_all[-1]) < 1e-12:
        notes.append("optimum sits on the tau scan boundary")

    ns_entries = [
        ScanEntry(p.n, getattr(p, "r", None), p.tau, p.zeta, risk)
        for p, risk in candidates
    ]
    pool = sorted(
        scan_log + ns_entries,
        key=lambda e: (e.risk, e.n, e.r if e.r is not None else -1, e.tau, e.zeta),
    )
    best_key = (best_plan.n, getattr(best_plan, "r", None), best_plan.tau, best_plan.zeta)
    runner_ups = tuple(
        e for e in pool if (e.n, e.r, e.tau, e.zeta) != best_key
    )[:5]

    report = OptimumReport(
        plan=best_plan,
        risk=exact,
        runner_ups=runner_ups,
        scan_log=tuple(scan_log),
        notes=tuple(notes),
    )
    _check_postconditions(report, costs, g, prior, hybrid)
    return report

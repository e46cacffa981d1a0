"""Catalog of the published comparison tables.

Each entry pins one table's experiment settings (prior, costs, acceptance
cost) per row, together with the published optimum and any published
comparison rows (earlier sampling plans, simulated Bayesian-plan risks).
``reproduce`` recomputes every DSP row from scratch; the published numbers
ride along as ``source=paper`` columns so the output is self-checking.

Published table IDs T3..T19 cover four study sections; where the source
splits one sweep across two physical tables they are cataloged as a single
ID with a ``varying`` column (see README for the exact map).
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import AcceptanceCost, CostModel
from .specfun import GammaPrior

__all__ = ["PaperRow", "TableRow", "TableSpec", "TABLES", "table_ids"]


@dataclass(frozen=True)
class PaperRow:
    """A non-DSP comparison row echoed verbatim from the source."""

    label: str
    risk: float
    plan: tuple | None = None


@dataclass(frozen=True)
class TableRow:
    label: str
    varying: str
    prior: GammaPrior
    costs: CostModel
    g: AcceptanceCost
    paper_risk: float
    paper_plan: tuple
    comparisons: tuple[PaperRow, ...] = ()


@dataclass(frozen=True)
class TableSpec:
    table_id: str
    scheme: str  # "type1" | "hybrid"
    description: str
    rows: tuple[TableRow, ...]


QUADRATIC = AcceptanceCost.polynomial([2.0, 2.0, 2.0])
QUINTIC = AcceptanceCost.polynomial([2.0] * 6)
FRACTIONAL = AcceptanceCost(((2.0, 0.0), (2.0, 1.0), (2.0, 2.5)))


def _quintic_with(**kw) -> AcceptanceCost:
    coef = [2.0] * 6
    for key, v in kw.items():
        coef[int(key[1])] = v
    return AcceptanceCost.polynomial(coef)


def _frac_with(**kw) -> AcceptanceCost:
    coef = {"a0": 2.0, "a1": 2.0, "a2": 2.0}
    coef.update(kw)
    return AcceptanceCost(((coef["a0"], 0.0), (coef["a1"], 1.0), (coef["a2"], 2.5)))


def _t1() -> TableSpec:
    costs = CostModel(0.5, 0.0, 30.0, 0.0)
    data = [
        (2.5, 0.8, 24.8419, (4, 1.3125, 3.0475),
         (24.9367, (3, 0.7077, 0.3539)), (24.9893, (4, 0.6808, 0.3404))),
        (1.5, 0.8, 16.5825, (3, 0.7000, 4.2862),
         (16.6233, (3, 0.5262, 0.2631)), (16.7533, (3, 0.5262, 0.2631))),
        (2.5, 1.0, 21.7081, (4, 1.1125, 3.5950),
         (21.7640, (3, 0.5483, 0.2742)), (21.8515, (4, 0.5819, 0.2910))),
        (2.0, 0.8, 21.1398, (4, 1.1625, 3.4500),
         (21.2153, (3, 0.6051, 0.3026)), (21.2875, (4, 0.6051, 0.3026))),
        (3.0, 0.8, 27.5581, (3, 1.1625, 2.5875),
         (27.6136, (3, 0.8170, 0.4085)), (27.6521, (3, 0.8170, 0.4085))),
        (2.5, 0.6, 27.7267, (3, 1.2125, 2.4863),
         (27.7834, (3, 0.8537, 0.4268)), (29.8193, (3, 0.8537, 0.4268))),
        (3.5, 0.8, 29.2789, (2, 1.0125, 1.9875),
         (29.2789, (2, 1.0037, 0.5019)), (29.3642, (2, 1.0037, 0.5019))),
        (10.0, 3.0, 29.5166, (2, 0.8000, 2.5187),
         (29.5166, (2, 0.7928, 0.3964)), (29.5959, (2, 0.8194, 0.4097))),
    ]
    rows = tuple(
        TableRow(
            label=f"a={a}, b={b}",
            varying="a,b",
            prior=GammaPrior(a, b),
            costs=costs,
            g=QUADRATIC,
            paper_risk=risk,
            paper_plan=plan,
            comparisons=(
                PaperRow("LAM", lam[0], lam[1]),
                PaperRow("Lin et al. (2010)", lin[0], lin[1]),
            ),
        )
        for a, b, risk, plan, lam, lin in data
    )
    return TableSpec(
        "T1", "type1",
        "Type-I, quadratic loss, time cost 0: comparison with earlier plans",
        rows,
    )


def _rows_t2_type1() -> tuple[TableRow, ...]:
    base_prior = GammaPrior(2.5, 0.8)

    def costs(cs=0.5, ct=0.5, cr=30.0):
        return CostModel(cs, ct, cr, 0.0)

    data = [
        ("a=2.5, b=0.8", "a,b", GammaPrior(2.5, 0.8), costs(), 25.2777,
         (3, 0.7250, 2.9750), 25.2777),
        ("a=2.5, b=1.0", "a,b", GammaPrior(2.5, 1.0), costs(), 22.0361,
         (3, 0.5625, 3.7250), 22.0361),
        ("a=3.5, b=0.8", "a,b", GammaPrior(3.5, 0.8), costs(), 29.7131,
         (2, 0.8125, 1.9875), 29.7131),
        ("Cs=0.50", "Cs", base_prior, costs(cs=0.5), 25.2777,
         (3, 0.7250, 2.9750), 25.2777),
        ("Cs=1.00", "Cs", base_prior, costs(cs=1.0), 26.5396,
         (2, 0.5875, 2.8625), 26.5396),
        ("Cs=2.00", "Cs", base_prior, costs(cs=2.0), 27.9542,
         (1, 0.3750, 2.6750), 27.9542),
        ("Ct=0.50", "Ctau", base_prior, costs(ct=0.5), 25.2777,
         (3, 0.7250, 2.9750), 25.2777),
        ("Ct=1.00", "Ctau", base_prior, costs(ct=1.0), 25.6238,
         (3, 0.6625, 2.9750), 25.6238),
        ("Ct=2.00", "Ctau", base_prior, costs(ct=2.0), 26.1439,
         (4, 0.3875, 2.9750), 26.1439),
        ("Cr=20", "Cr", base_prior, costs(cr=20.0), 19.3293,
         (2, 0.8750, 1.7750), 19.3293),
        ("Cr=30", "Cr", base_prior, costs(cr=30.0), 25.2777,
         (3, 0.7250, 2.9750), 25.2777),
        ("Cr=50", "Cr", base_prior, costs(cr=50.0), 32.2092,
         (5, 0.5625, 5.0500), 32.2092),
    ]
    return tuple(
        TableRow(
            label=label, varying=var, prior=prior, costs=c, g=QUADRATIC,
            paper_risk=risk, paper_plan=plan,
            comparisons=(PaperRow("BSP", bsp),),
        )
        for label, var, prior, c, risk, plan, bsp in data
    )


def _rows_t2_hybrid() -> tuple[TableRow, ...]:
    base_prior = GammaPrior(2.5, 0.8)

    def costs(cs=0.5, ct=5.0, cr=30.0):
        return CostModel(cs, ct, cr, 0.3)

    data = [
        ("a=2.5, b=0.8", "a,b", GammaPrior(2.5, 0.8), costs(), 26.0338,
         (6, 3, 0.2000, 2.9750), 26.0319),
        ("a=2.5, b=1.0", "a,b", GammaPrior(2.5, 1.0), costs(), 22.6437,
         (5, 3, 0.1875, 3.7200), 22.6430),
        ("a=3.0, b=0.8", "a,b", GammaPrior(3.0, 0.8), costs(), 28.7889,
         (4, 2, 0.2375, 2.3445), 28.7885),
        ("Cs=0.30", "Cs", base_prior, costs(cs=0.3), 24.3341,
         (10, 4, 0.1500, 3.0500), 24.3326),
        ("Cs=0.50", "Cs", base_prior, costs(cs=0.5), 26.0338,
         (6, 3, 0.2000, 2.9750), 26.0319),
        ("Cs=0.70", "Cs", base_prior, costs(cs=0.7), 26.9114,
         (3, 2, 0.2750, 2.8625), 26.9106),
        ("Ct=0", "Ctau", base_prior, costs(ct=0.0), 24.6754,
         (4, 4, 0.8750, 3.0500), 24.6354),
        ("Ct=8", "Ctau", base_prior, costs(ct=8.0), 26.4672,
         (7, 3, 0.1625, 2.9750), 26.4662),
        ("Ct=16", "Ctau", base_prior, costs(ct=16.0), 27.2513,
         (7, 2, 0.1000, 1.9625), 27.2513),
        ("Cr=25", "Cr", base_prior, costs(cr=25.0), 23.3581,
         (4, 2, 0.2375, 2.2875), 23.3583),
        ("Cr=30", "Cr", base_prior, costs(cr=30.0), 26.0338,
         (6, 3, 0.2000, 2.9750), 26.0319),
        ("Cr=40", "Cr", base_prior, costs(cr=40.0), 30.0069,
         (7, 4, 0.1750, 4.0750), 30.0072),
    ]
    return tuple(
        TableRow(
            label=label, varying=var, prior=prior, costs=c, g=QUADRATIC,
            paper_risk=risk, paper_plan=plan,
            comparisons=(PaperRow("BSP", bsp),),
        )
        for label, var, prior, c, risk, plan, bsp in data
    )


def _sweep_rows(scheme_costs, prior, g_of, data) -> tuple[TableRow, ...]:
    """Rows for single-parameter sweeps: data = (varying, value, risk, plan)."""
    rows = []
    for var, value, risk, plan in data:
        if var.startswith("a") and var[1:].isdigit():
            g = g_of(**{var: value})
            costs = scheme_costs()
            prior_row = prior
        elif var in ("Cs", "Ctau", "Cr", "rs"):
            g = g_of()
            costs = scheme_costs(**{var: value})
            prior_row = prior
        else:  # prior sweep: value = (a, b)
            g = g_of()
            costs = scheme_costs()
            prior_row = GammaPrior(*value)
        label = f"a={value[0]}, b={value[1]}" if var == "prior" else f"{var}={value}"
        rows.append(
            TableRow(
                label=label, varying=var if var != "prior" else "a,b",
                prior=prior_row, costs=costs, g=g,
                paper_risk=risk, paper_plan=plan,
            )
        )
    return tuple(rows)


def _hybrid5_costs(Cs=0.5, Ctau=0.5, Cr=30.0, rs=0.3):
    return CostModel(Cs, Ctau, Cr, rs)


def _type1_5_costs(Cs=0.5, Ctau=0.5, Cr=30.0, rs=0.0):
    return CostModel(Cs, Ctau, Cr, rs)


def _nh_costs(Cs=0.5, Ctau=5.0, Cr=30.0, rs=0.3):
    return CostModel(Cs, Ctau, Cr, rs)


def _nt_costs(Cs=0.5, Ctau=0.5, Cr=30.0, rs=0.0):
    return CostModel(Cs, Ctau, Cr, rs)


_T3_DATA = [
    ("prior", (0.2, 0.2), 12.1795, (5, 4, 1.2625, 0.9750)),
    ("prior", (1.5, 0.4), 29.6469, (2, 2, 2.9125, 0.6250)),
    ("prior", (1.5, 0.8), 26.2983, (5, 4, 1.6375, 0.9250)),
    ("prior", (2.5, 1.5), 27.8324, (5, 4, 1.6750, 0.9250)),
    ("prior", (3.0, 1.5), 29.9061, (4, 3, 1.7000, 0.7500)),
]

_T4_DATA = [
    ("a0", 0.5, 25.8251, (6, 5, 1.6625, 1.0000)),
    ("a0", 1.0, 25.9891, (5, 4, 1.6250, 0.9375)),
    ("a0", 1.5, 26.1444, (5, 4, 1.6375, 0.9375)),
    ("a0", 2.0, 26.2983, (5, 4, 1.6375, 0.9250)),
    ("a0", 2.5, 26.4515, (5, 4, 1.6500, 0.9250)),
    ("a1", 0.5, 26.0091, (6, 5, 1.6625, 1.0000)),
    ("a1", 1.0, 26.1080, (5, 4, 1.6250, 0.9375)),
    ("a1", 1.5, 26.2038, (5, 4, 1.6375, 0.9375)),
    ("a1", 2.0, 26.2983, (5, 4, 1.6375, 0.9250)),
    ("a1", 2.5, 26.3919, (5, 4, 1.6500, 0.9250)),
]

_T5_DATA = [
    ("a2", 0.5, 26.0403, (6, 5, 1.6625, 1.0125)),
    ("a2", 1.0, 26.1284, (5, 4, 1.6250, 0.9375)),
    ("a2", 1.5, 26.2141, (5, 4, 1.6250, 0.9375)),
    ("a2", 2.0, 26.2983, (5, 4, 1.6375, 0.9250)),
    ("a2", 2.5, 26.3810, (5, 4, 1.6500, 0.9250)),
    ("a3", 0.5, 25.9983, (6, 5, 1.6250, 1.0125)),
    ("a3", 1.0, 26.1027, (5, 4, 1.6125, 0.9500)),
    ("a3", 1.5, 26.2022, (5, 4, 1.6250, 0.9375)),
    ("a3", 2.0, 26.2983, (5, 4, 1.6375, 0.9250)),
    ("a3", 2.5, 26.3911, (5, 4, 1.6500, 0.9125)),
]

_T6_DATA = [
    ("a4", 0.5, 25.8618, (6, 5, 1.5875, 1.0500)),
    ("a4", 1.0, 26.0212, (5, 4, 1.5750, 0.9625)),
    ("a4", 1.5, 26.1656, (5, 4, 1.6125, 0.9500)),
    ("a4", 2.0, 26.2983, (5, 4, 1.6375, 0.9250)),
    ("a4", 2.5, 26.4212, (5, 4, 1.6750, 0.9125)),
    ("a5", 0.5, 25.4497, (5, 4, 1.4125, 1.0750)),
    ("a5", 1.0, 25.8046, (5, 4, 1.5000, 1.0125)),
    ("a5", 1.5, 26.0771, (5, 4, 1.5750, 0.9625)),
    ("a5", 2.0, 26.2983, (5, 4, 1.6375, 0.9250)),
    ("a5", 2.5, 26.4838, (5, 4, 1.7000, 0.9000)),
]

_T7_DATA = [
    ("Cs", 0.4, 25.6655, (7, 5, 1.2375, 0.9875)),
    ("Cs", 0.5, 26.2983, (5, 4, 1.6375, 0.9250)),
    ("Cs", 0.8, 27.4684, (3, 3, 2.8000, 0.8375)),
    ("Cs", 1.0, 27.9656, (2, 2, 2.5125, 0.7125)),
    ("Cs", 1.5, 28.9099, (1, 1, 2.0375, 0.0125)),
    ("Ctau", 0.2, 25.9954, (4, 4, 3.1375, 0.9250)),
    ("Ctau", 0.5, 26.2983, (5, 4, 1.6375, 0.9250)),
    ("Ctau", 0.8, 26.5453, (6, 4, 1.1375, 0.9250)),
    ("Ctau", 1.2, 26.8039, (6, 4, 1.1125, 0.9250)),
    ("Ctau", 1.5, 26.9779, (7, 4, 0.8625, 0.9250)),
    ("Cr", 25.0, 22.7787, (4, 3, 1.5750, 0.7875)),
    ("Cr", 35.0, 29.6324, (6, 5, 1.6375, 1.0375)),
    ("Cr", 50.0, 38.8182, (8, 7, 1.5375, 1.2500)),
    ("Cr", 65.0, 47.1201, (10, 9, 1.4500, 1.4125)),
    ("Cr", 85.0, 57.2562, (12, 11, 1.3750, 1.5625)),
    ("rs", 0.05, 26.5544, (4, 4, 3.0250, 0.9250)),
    ("rs", 0.10, 26.5352, (4, 4, 3.0000, 0.9250)),
    ("rs", 0.20, 26.4478, (5, 4, 1.6625, 0.9250)),
    ("rs", 0.30, 26.2983, (5, 4, 1.6375, 0.9250)),
    ("rs", 0.35, 26.2220, (6, 4, 1.1375, 0.9250)),
]

_T8_DATA = [
    ("prior", (1.5, 0.8), 27.0038, (5, 1.7000, 0.9375)),
    ("prior", (1.5, 1.2), 22.9851, (6, 1.6875, 1.0750)),
    ("prior", (2.5, 2.5), 21.1783, (6, 1.6125, 1.2250)),
    ("prior", (3.0, 2.5), 24.8622, (6, 1.7000, 1.1250)),
    ("prior", (3.0, 3.0), 21.4133, (6, 1.5750, 1.2625)),
]

_T9_DATA = [
    ("a0", 0.5, 26.5210, (5, 1.7125, 0.9500)),
    ("a0", 1.0, 26.6833, (5, 1.7000, 0.9375)),
    ("a0", 1.5, 26.8436, (5, 1.7000, 0.9375)),
    ("a0", 2.0, 27.0038, (5, 1.7000, 0.9375)),
    ("a0", 2.5, 27.1626, (5, 1.6875, 0.9250)),
    ("a1", 0.5, 26.7003, (5, 1.7000, 0.9500)),
    ("a1", 1.0, 26.8029, (5, 1.7000, 0.9500)),
    ("a1", 1.5, 26.9035, (5, 1.7000, 0.9375)),
    ("a1", 2.0, 27.0038, (5, 1.7000, 0.9375)),
    ("a1", 2.5, 27.1026, (5, 1.7000, 0.9250)),
    ("a2", 0.5, 26.7282, (5, 1.6875, 0.9500)),
    ("a2", 1.0, 26.8216, (5, 1.6875, 0.9500)),
    ("a2", 1.5, 26.9135, (5, 1.6875, 0.9375)),
    ("a2", 2.0, 27.0038, (5, 1.7000, 0.9375)),
    ("a2", 2.5, 27.0919, (5, 1.7000, 0.9250)),
    ("a3", 0.5, 26.6814, (5, 1.6750, 0.9625)),
    ("a3", 1.0, 26.7930, (5, 1.6750, 0.9500)),
    ("a3", 1.5, 26.9006, (5, 1.6875, 0.9375)),
    ("a3", 2.0, 27.0038, (5, 1.7000, 0.9375)),
    ("a3", 2.5, 27.1033, (5, 1.7000, 0.9250)),
]

_T10_DATA = [
    ("a4", 0.5, 26.5349, (5, 1.6375, 0.9875)),
    ("a4", 1.0, 26.7044, (5, 1.6625, 0.9750)),
    ("a4", 1.5, 26.8598, (5, 1.6750, 0.9500)),
    ("a4", 2.0, 27.0038, (5, 1.7000, 0.9375)),
    ("a4", 2.5, 27.1370, (5, 1.7125, 0.9125)),
    ("a5", 0.5, 26.0954, (5, 1.5375, 1.0750)),
    ("a5", 1.0, 26.4724, (5, 1.6000, 1.0125)),
    ("a5", 1.5, 26.7653, (5, 1.6500, 0.9625)),
    ("a5", 2.0, 27.0038, (5, 1.7000, 0.9375)),
    ("a5", 2.5, 27.2053, (5, 1.7375, 0.9000)),
]

_T11_DATA = [
    ("Cs", 0.2, 25.0552, (9, 1.4750, 1.0750)),
    ("Cs", 0.3, 25.8550, (7, 1.6375, 1.0250)),
    ("Cs", 0.5, 27.0038, (5, 1.7000, 0.9375)),
    ("Cs", 0.8, 28.2251, (3, 2.5250, 0.8375)),
    ("Cs", 1.2, 29.0845, (2, 2.3000, 0.7125)),
    ("Ctau", 0.2, 26.3960, (5, 2.5500, 0.9750)),
    ("Ctau", 0.5, 27.0038, (5, 1.7000, 0.9375)),
    ("Ctau", 0.8, 27.4884, (5, 1.5500, 0.9250)),
    ("Ctau", 1.2, 28.0462, (6, 1.1250, 0.9250)),
    ("Ctau", 1.5, 28.3763, (6, 1.0750, 0.9250)),
    ("Cr", 25.0, 23.4949, (4, 1.5875, 0.7875)),
    ("Cr", 50.0, 39.5495, (7, 1.8250, 1.2250)),
    ("Cr", 85.0, 58.1138, (11, 1.7875, 1.5625)),
    ("Cr", 100.0, 65.2465, (12, 1.7750, 1.6500)),
    ("Cr", 125.0, 76.3677, (14, 1.7500, 1.7875)),
    ("rs", 0.05, 26.9583, (5, 1.6750, 0.9375)),
    ("rs", 0.10, 26.9121, (5, 1.6625, 0.9375)),
    ("rs", 0.20, 26.8185, (5, 1.6250, 0.9375)),
    ("rs", 0.30, 26.7229, (5, 1.6000, 0.9250)),
    ("rs", 0.40, 26.6071, (6, 1.2625, 0.9375)),
]

_T12_DATA = [
    ("prior", (0.2, 0.2), 10.5326, (5, 2, 0.1750, 2.3125)),
    ("prior", (1.5, 0.4), 27.4453, (6, 3, 0.3125, 1.9375)),
    ("prior", (1.5, 0.8), 20.2414, (8, 4, 0.2250, 2.6125)),
    ("prior", (2.5, 0.8), 28.4481, (6, 3, 0.3125, 1.9625)),
    ("prior", (3.0, 1.5), 22.6152, (6, 3, 0.1875, 2.9500)),
]

_T13_DATA = [
    ("a0", 0.5, 27.9446, (6, 3, 0.3000, 2.0375)),
    ("a0", 1.0, 28.1152, (6, 3, 0.3000, 2.0125)),
    ("a0", 1.5, 28.2840, (6, 3, 0.3125, 1.9875)),
    ("a0", 2.0, 28.4481, (6, 3, 0.3125, 1.9625)),
    ("a0", 2.5, 28.6111, (6, 3, 0.3125, 1.9375)),
    ("a1", 0.5, 27.5833, (6, 3, 0.2875, 2.1375)),
    ("a1", 1.0, 27.8877, (6, 3, 0.3000, 2.0750)),
    ("a1", 1.5, 28.1737, (6, 3, 0.3000, 2.0250)),
    ("a1", 2.0, 28.4481, (6, 3, 0.3125, 1.9625)),
    ("a1", 2.5, 28.7106, (6, 3, 0.3250, 1.9125)),
]

_T14_DATA = [
    ("a2", 0.5, 21.4982, (5, 3, 0.1500, 1.5750)),
    ("a2", 1.0, 25.4359, (6, 3, 0.2000, 2.9750)),
    ("a2", 1.5, 27.3171, (6, 3, 0.2625, 2.3125)),
    ("a2", 2.0, 28.4481, (6, 3, 0.3125, 1.9625)),
    ("a2", 2.5, 29.1885, (5, 2, 0.2875, 1.5250)),
    ("Ctau", 0.5, 27.2156, (4, 4, 1.3000, 2.1000)),
    ("Ctau", 1.5, 27.6168, (4, 3, 0.6000, 1.9625)),
    ("Ctau", 3.0, 28.0288, (5, 3, 0.4125, 1.9625)),
    ("Ctau", 4.0, 28.2477, (6, 3, 0.3125, 1.9625)),
    ("Ctau", 5.0, 28.4481, (6, 3, 0.3125, 1.9625)),
]

_T15_DATA = [
    ("Cs", 0.4, 27.7042, (10, 4, 0.2250, 2.1000)),
    ("Cs", 0.5, 28.4481, (6, 3, 0.3125, 1.9625)),
    ("Cs", 0.6, 28.9501, (4, 2, 0.3250, 1.7375)),
    ("Cs", 0.7, 29.3501, (4, 2, 0.3250, 1.7375)),
    ("Cs", 0.8, 29.6455, (2, 1, 0.3625, 0.0125)),
    ("Cr", 25.0, 24.8091, (5, 2, 0.2875, 1.5125)),
    ("Cr", 35.0, 31.6670, (8, 4, 0.2750, 2.3250)),
    ("Cr", 50.0, 39.5133, (10, 6, 0.2750, 3.1000)),
    ("Cr", 65.0, 45.5177, (11, 7, 0.2625, 3.6875)),
    ("Cr", 85.0, 51.6634, (12, 8, 0.2375, 4.3625)),
]

_T16_DATA = [
    ("rs", 0.05, 29.1184, (3, 2, 0.4750, 1.7375)),
    ("rs", 0.10, 29.0215, (4, 2, 0.3375, 1.7375)),
    ("rs", 0.20, 28.7866, (4, 2, 0.3375, 1.7375)),
    ("rs", 0.30, 28.4481, (6, 3, 0.3125, 1.9625)),
    ("rs", 0.40, 27.9798, (8, 3, 0.2125, 1.9625)),
]

_T17_DATA = [
    ("prior", (1.5, 0.4), 26.6262, (3, 1.1125, 1.9375)),
    ("prior", (1.5, 0.8), 19.4142, (4, 0.9000, 2.6125)),
    ("prior", (2.5, 0.8), 27.5603, (4, 1.0750, 2.0625)),
    ("prior", (2.5, 1.2), 22.2069, (4, 0.8875, 2.6500)),
    ("prior", (3.0, 1.5), 21.8535, (4, 0.8250, 2.8750)),
]

_T18_DATA = [
    ("a0", 0.5, 27.0238, (4, 1.0750, 2.1375)),
    ("a0", 1.0, 27.2050, (4, 1.0750, 2.1125)),
    ("a0", 1.5, 27.3838, (4, 1.0750, 2.0875)),
    ("a0", 2.0, 27.5603, (4, 1.0750, 2.0625)),
    ("a0", 2.5, 27.7262, (3, 1.1125, 1.9375)),
    ("a1", 0.5, 26.6463, (4, 1.0375, 2.2500)),
    ("a1", 1.0, 26.9657, (4, 1.0500, 2.1750)),
    ("a1", 1.5, 27.2702, (4, 1.0625, 2.1125)),
    ("a1", 2.0, 27.5603, (4, 1.0750, 2.0625)),
    ("a1", 2.5, 27.8216, (3, 1.1250, 1.9125)),
    ("a2", 0.5, 20.9985, (4, 0.5375, 4.7375)),
    ("a2", 1.0, 24.5967, (4, 0.8000, 3.0500)),
    ("a2", 1.5, 26.4246, (4, 0.9625, 2.4125)),
    ("a2", 2.0, 27.5603, (4, 1.0750, 2.0625)),
    ("a2", 2.5, 28.3162, (3, 1.2250, 1.7375)),
]

_T19_DATA = [
    ("Cs", 0.2, 25.9956, (8, 0.8750, 2.3000)),
    ("Cs", 0.3, 26.6479, (6, 0.9250, 2.2000)),
    ("Cs", 0.5, 27.5603, (4, 1.0750, 2.0625)),
    ("Cs", 0.8, 28.3770, (2, 0.9500, 1.7375)),
    ("Cs", 1.2, 29.1411, (1, 0.7250, 0.6000)),
    ("Ctau", 0.2, 27.2069, (4, 1.3000, 2.0875)),
    ("Ctau", 0.5, 27.5603, (4, 1.0750, 2.0625)),
    ("Ctau", 0.7, 27.7625, (4, 0.9500, 2.0250)),
    ("Ctau", 1.0, 28.0240, (4, 0.7875, 1.9875)),
    ("Ctau", 1.5, 28.3421, (4, 0.6000, 1.9625)),
    ("Cr", 25.0, 24.0664, (2, 1.0625, 1.5125)),
    ("Cr", 35.0, 30.6915, (4, 1.0500, 2.3125)),
    ("Cr", 50.0, 38.4988, (6, 0.9250, 3.0875)),
    ("Cr", 65.0, 44.6010, (7, 0.8500, 3.6875)),
    ("Cr", 85.0, 50.9093, (8, 0.7750, 4.3625)),
    ("rs", 0.05, 27.5361, (4, 1.0500, 2.0500)),
    ("rs", 0.10, 27.5112, (4, 1.0375, 2.0500)),
    ("rs", 0.20, 27.4589, (4, 0.9875, 2.0375)),
    ("rs", 0.30, 27.4025, (4, 0.9125, 2.0125)),
    ("rs", 0.40, 27.3100, (5, 0.6875, 2.1000)),
]


def _build_tables() -> dict[str, TableSpec]:
    t = {}
    t["T1"] = _t1()
    t["T2-type1"] = TableSpec(
        "T2-type1", "type1",
        "Type-I, quadratic loss: DSP vs simulated BSP", _rows_t2_type1(),
    )
    t["T2-hybrid"] = TableSpec(
        "T2-hybrid", "hybrid",
        "Hybrid, quadratic loss: DSP vs simulated BSP", _rows_t2_hybrid(),
    )

    hy5_prior = GammaPrior(1.5, 0.8)
    t15_prior = GammaPrior(1.5, 0.8)
    nh_prior = GammaPrior(2.5, 0.8)
    nt_prior = GammaPrior(2.5, 0.8)

    def spec(tid, scheme, desc, costs_fn, prior, g_of, data):
        return TableSpec(
            tid, scheme, desc, _sweep_rows(costs_fn, prior, g_of, data)
        )

    t["T3"] = spec("T3", "hybrid", "Hybrid, fifth-degree loss: prior sweep",
                   _hybrid5_costs, hy5_prior, _quintic_with, _T3_DATA)
    t["T4"] = spec("T4", "hybrid", "Hybrid, fifth-degree loss: a0/a1 sweep",
                   _hybrid5_costs, hy5_prior, _quintic_with, _T4_DATA)
    t["T5"] = spec("T5", "hybrid", "Hybrid, fifth-degree loss: a2/a3 sweep",
                   _hybrid5_costs, hy5_prior, _quintic_with, _T5_DATA)
    t["T6"] = spec("T6", "hybrid", "Hybrid, fifth-degree loss: a4/a5 sweep",
                   _hybrid5_costs, hy5_prior, _quintic_with, _T6_DATA)
    t["T7"] = spec("T7", "hybrid", "Hybrid, fifth-degree loss: cost sweeps",
                   _hybrid5_costs, hy5_prior, _quintic_with, _T7_DATA)
    t["T8"] = spec("T8", "type1", "Type-I, fifth-degree loss: prior sweep",
                   _type1_5_costs, t15_prior, _quintic_with, _T8_DATA)
    t["T9"] = spec("T9", "type1", "Type-I, fifth-degree loss: a0..a3 sweep",
                   _type1_5_costs, t15_prior, _quintic_with, _T9_DATA)
    t["T10"] = spec("T10", "type1", "Type-I, fifth-degree loss: a4/a5 sweep",
                    _type1_5_costs, t15_prior, _quintic_with, _T10_DATA)
    t["T11"] = spec("T11", "type1", "Type-I, fifth-degree loss: cost sweeps",
                    _type1_5_costs, t15_prior, _quintic_with, _T11_DATA)
    t["T12"] = spec("T12", "hybrid", "Hybrid, fractional-power loss: prior sweep",
                    _nh_costs, nh_prior, _frac_with, _T12_DATA)
    t["T13"] = spec("T13", "hybrid", "Hybrid, fractional-power loss: a0/a1 sweep",
                    _nh_costs, nh_prior, _frac_with, _T13_DATA)
    t["T14"] = spec("T14", "hybrid", "Hybrid, fractional-power loss: a2/Ctau sweep",
                    _nh_costs, nh_prior, _frac_with, _T14_DATA)
    t["T15"] = spec("T15", "hybrid", "Hybrid, fractional-power loss: Cs/Cr sweep",
                    _nh_costs, nh_prior, _frac_with, _T15_DATA)
    t["T16"] = spec("T16", "hybrid", "Hybrid, fractional-power loss: salvage sweep",
                    _nh_costs, nh_prior, _frac_with, _T16_DATA)
    t["T17"] = spec("T17", "type1", "Type-I, fractional-power loss: prior sweep",
                    _nt_costs, nt_prior, _frac_with, _T17_DATA)
    t["T18"] = spec("T18", "type1", "Type-I, fractional-power loss: a0/a1/a2 sweep",
                    _nt_costs, nt_prior, _frac_with, _T18_DATA)
    t["T19"] = spec("T19", "type1", "Type-I, fractional-power loss: cost sweeps",
                    _nt_costs, nt_prior, _frac_with, _T19_DATA)
    return t


TABLES: dict[str, TableSpec] = _build_tables()


def table_ids() -> tuple[str, ...]:
    return tuple(TABLES.keys())

"""Eigenvalue moment identities and energy / spectral-radius bounds.

Each check reports the formula as printed next to the value forced by
the matrix definition, so that discrepancies are recorded rather than
hidden. ``audit_graph`` turns all of them into ledger rows.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import DisconnectedGraphError, Graph, all_pairs_distances, diameter, wiener_index
from .roman import RomanDominatingFunction, min_domination, min_roman_domination
from .spectral import DEFAULT_TOL, MRDDMatrix, Spectrum, build_mrdd, char_poly, eigenvalues

FORMULA_IDS = (
    "S4_i",
    "S4_ii_printed",
    "S4_ii_forced",
    "S4_cor",
    "S5_mcclelland_printed",
    "S5_mcclelland_2n",
    "S5_cor",
    "S5_rho1_wiener",
    "S5_rho1_diam2",
)

# relative slack for inequalities that can be tight
BOUND_RTOL = 1e-9


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class GraphInvariants:
    n: int
    m: int
    gamma: int
    gamma_r: int
    n1: int
    n2: int
    W: int | None
    M: int
    P: int
    diameter: int | None

    @property
    def connected(self) -> bool:
        return self.W is not None

    @property
    def trace(self) -> int:
        return 2 * self.n2 + self.n1

    @property
    def diag_sq(self) -> int:
        return 4 * self.n2 + self.n1


def compute_invariants(
    g: Graph, f: RomanDominatingFunction | None = None, matrix: MRDDMatrix | None = None
) -> GraphInvariants:
    """Exact invariants of ``g`` under the RDF ``f`` (canonical if omitted).

    W and diameter are None for disconnected graphs. M sums squared
    distances over non-adjacent reachable pairs.
    """
    gamma_r, canonical = min_roman_domination(g)
    f = f or canonical
    dm = all_pairs_distances(g)
    a = matrix if matrix is not None else build_mrdd(dm, f, g)
    d = dm.d
    upper = d[np.triu_indices(g.n, 1)]
    M = int(sum(int(x) ** 2 for x in upper if x > 1))
    W = wiener_index(dm) if dm.connected else None
    diam = diameter(dm) if dm.connected else None
    gamma, _ = min_domination(g)
    P = abs(char_poly(a).coefficients[0])
    return GraphInvariants(g.n, g.m, gamma, gamma_r, len(f.v1), len(f.v2), W, M, P, diam)


# ---------------------------------------------------------------------------
# moment identities


@dataclass(frozen=True)
class MomentReport:
    n: int
    sum_rho: float
    sum_rho_sq: float
    gamma_r: int
    printed_sq: int  # gamma_R + 2m + 2M
    forced_sq: int  # 4 n2 + n1 + 2m + 2M
    tol: float

    @property
    def first_gap(self) -> float:
        return self.sum_rho - self.gamma_r

    @property
    def printed_gap(self) -> float:
        return self.sum_rho_sq - self.printed_sq

    @property
    def forced_gap(self) -> float:
        return self.sum_rho_sq - self.forced_sq

    @property
    def first_ok(self) -> bool:
        return abs(self.first_gap) < self.n * self.tol

    @property
    def printed_ok(self) -> bool:
        return abs(self.printed_gap) < self.n * self.tol

    @property
    def forced_ok(self) -> bool:
        return abs(self.forced_gap) < self.n * self.tol


def moment_identities(inv: GraphInvariants, s: Spectrum, tol: float = 1e-8) -> MomentReport:
    base = 2 * inv.m + 2 * inv.M
    return MomentReport(
        inv.n, s.moment(1), s.moment(2), inv.gamma_r, inv.gamma_r + base, inv.diag_sq + base, tol
    )


@dataclass(frozen=True)
class Diameter2Report:
    n: int
    sum_rho_sq: float
    printed: int  # gamma_R + 2(2n^2 - 2n - 3m)
    corrected: int  # 4 n2 + n1 + 2(2n^2 - 2n - 3m)
    tol: float

    @property
    def printed_gap(self) -> float:
        return self.sum_rho_sq - self.printed

    @property
    def corrected_gap(self) -> float:
        return self.sum_rho_sq - self.corrected

    @property
    def printed_ok(self) -> bool:
        return abs(self.printed_gap) < self.n * self.tol

    @property
    def corrected_ok(self) -> bool:
        return abs(self.corrected_gap) < self.n * self.tol


def diameter2_identity(inv: GraphInvariants, s: Spectrum, tol: float = 1e-8) -> Diameter2Report:
    if inv.diameter != 2:
        raise PreconditionError(f"needs diameter 2, got {inv.diameter}")
    off = 2 * (2 * inv.n**2 - 2 * inv.n - 3 * inv.m)
    return Diameter2Report(inv.n, s.moment(2), inv.gamma_r + off, inv.diag_sq + off, tol)


# ---------------------------------------------------------------------------
# energy bounds


def _det_term(n: int, P: int, exponent: float) -> float:
    """n(n-1) P**exponent, inf on overflow."""
    if P == 0 or n < 2:
        return 0.0
    log = math.log(n * (n - 1)) + exponent * math.log(P)
    return math.inf if log > 700 else math.exp(log)


def _le(a: float, b: float) -> bool:
    return a <= b + BOUND_RTOL * max(1.0, abs(b))


@dataclass(frozen=True)
class McClellandReport:
    energy: float
    lower_printed: float  # determinant term with P**(n/2)
    lower_2n: float  # determinant term with P**(2/n)
    upper: float  # sqrt(n (2m + 2M + gamma_R))
    lower_cor: float  # gamma in place of gamma_R, P**(n/2)
    upper_cor: float  # sqrt(n (2m + 2M + 2 gamma))
    upper_forced: float  # sqrt(n * sum rho^2) from the forced second moment

    @property
    def printed_ok(self) -> bool:
        return _le(self.lower_printed, self.energy) and self.upper_ok

    @property
    def exponent_2n_ok(self) -> bool:
        return _le(self.lower_2n, self.energy) and self.upper_ok

    @property
    def upper_ok(self) -> bool:
        return _le(self.energy, self.upper)

    @property
    def cor_ok(self) -> bool:
        return _le(self.lower_cor, self.energy) and _le(self.energy, self.upper_cor)


def mcclelland_bounds(inv: GraphInvariants, energy: float) -> McClellandReport:
    n, base = inv.n, 2 * inv.m + 2 * inv.M
    s_printed = base + inv.gamma_r
    s_cor = base + inv.gamma
    return McClellandReport(
        energy,
        math.sqrt(s_printed + _det_term(n, inv.P, n / 2)),
        math.sqrt(s_printed + _det_term(n, inv.P, 2 / n)) if n else 0.0,
        math.sqrt(n * s_printed),
        math.sqrt(s_cor + _det_term(n, inv.P, n / 2)),
        math.sqrt(n * (base + 2 * inv.gamma)),
        math.sqrt(n * (base + inv.diag_sq)),
    )


@dataclass(frozen=True)
class RadiusReport:
    rho1: float
    wiener_bound: float
    diam2_bound: float | None

    @property
    def wiener_ok(self) -> bool:
        return _le(self.wiener_bound, self.rho1)

    @property
    def diam2_ok(self) -> bool | None:
        return None if self.diam2_bound is None else _le(self.diam2_bound, self.rho1)


def spectral_radius_bounds(inv: GraphInvariants, s: Spectrum) -> RadiusReport:
    if not inv.connected:
        raise DisconnectedGraphError("spectral radius bounds need a connected graph")
    n = inv.n
    diam2 = None
    if inv.diameter == 2:
        diam2 = (2 * n * n - 2 * inv.m - 2 * n + inv.gamma_r) / n
    return RadiusReport(s.spectral_radius, (2 * inv.W + inv.gamma_r) / n, diam2)


def spider_remark_row(label: str, n: int, inv: GraphInvariants) -> LedgerRow:
    """Compare the healthy-spider remark (M formula and upper bound) with computed values."""
    from .families import spider_remark_m, spider_remark_upper

    upper = math.sqrt(inv.n * (2 * inv.m + 2 * inv.M + inv.gamma_r))
    target = 6 * n * n - 4 * n - 16
    return LedgerRow(
        label,
        "S5_remark_spider",
        float(inv.M),
        float(spider_remark_m(n)),
        float(inv.M),
        upper - target,
        inv.M == spider_remark_m(n),
        f"remark upper {spider_remark_upper(n):.6f}, recomputed upper {upper:.6f}, "
        f"6n^2-4n-16 = {target}",
    )


# ---------------------------------------------------------------------------
# ledger


@dataclass(frozen=True)
class LedgerRow:
    """One (graph, formula) comparison.

    ``printed`` is the formula as stated, ``corrected`` the variant forced
    by the matrix definition (either may be a [lower, upper] pair).
    ``slack`` is the signed margin of the statement judged by ``holds``:
    minus the absolute gap for identities, distance inside the interval
    for bounds.
    """

    graph: str
    formula_id: str
    computed: float
    printed: float | list[float] | None
    corrected: float | list[float] | None
    slack: float
    holds: bool
    note: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=False, allow_nan=True)


def _inside(x: float, lo: float, hi: float) -> float:
    return min(x - lo, hi - x)


def audit_graph(
    g: Graph,
    label: str = "G",
    f: RomanDominatingFunction | None = None,
    tol: float = DEFAULT_TOL,
    moment_tol: float = 1e-8,
) -> list[LedgerRow]:
    """Every moment identity and bound for ``g`` as ledger rows."""
    gamma_r, canonical = min_roman_domination(g)
    f = f or canonical
    a = build_mrdd(all_pairs_distances(g), f, g)
    inv = compute_invariants(g, f, a)
    s = eigenvalues(a, tol)
    rows = []

    mr = moment_identities(inv, s, moment_tol)
    rows.append(LedgerRow(label, "S4_i", mr.sum_rho, float(gamma_r), float(inv.trace),
                          -abs(mr.first_gap), mr.first_ok))
    rows.append(LedgerRow(label, "S4_ii_printed", mr.sum_rho_sq, float(mr.printed_sq),
                          float(mr.forced_sq), -abs(mr.printed_gap), mr.printed_ok,
                          f"gap {mr.printed_gap:.6f}, 2*n2 = {2 * inv.n2}"))
    rows.append(LedgerRow(label, "S4_ii_forced", mr.sum_rho_sq, float(mr.printed_sq),
                          float(mr.forced_sq), -abs(mr.forced_gap), mr.forced_ok))
    if inv.diameter == 2:
        d2 = diameter2_identity(inv, s, moment_tol)
        rows.append(LedgerRow(label, "S4_cor", d2.sum_rho_sq, float(d2.printed), float(d2.corrected),
                              -abs(d2.printed_gap), d2.printed_ok,
                              f"corrected gap {d2.corrected_gap:.6f}"))

    mc = mcclelland_bounds(inv, s.energy)
    rows.append(LedgerRow(label, "S5_mcclelland_printed", s.energy, [mc.lower_printed, mc.upper],
                          [mc.lower_2n, mc.upper_forced],
                          _inside(s.energy, mc.lower_printed, mc.upper), mc.printed_ok,
                          f"upper holds: {mc.upper_ok}"))
    rows.append(LedgerRow(label, "S5_mcclelland_2n", s.energy, [mc.lower_2n, mc.upper],
                          [mc.lower_2n, mc.upper_forced],
                          _inside(s.energy, mc.lower_2n, mc.upper), mc.exponent_2n_ok))
    rows.append(LedgerRow(label, "S5_cor", s.energy, [mc.lower_cor, mc.upper_cor], None,
                          _inside(s.energy, mc.lower_cor, mc.upper_cor), mc.cor_ok))

    if inv.connected:
        rb = spectral_radius_bounds(inv, s)
        rows.append(LedgerRow(label, "S5_rho1_wiener", rb.rho1, rb.wiener_bound,
                              (2 * inv.W + inv.trace) / inv.n, rb.rho1 - rb.wiener_bound,
                              rb.wiener_ok))
        if rb.diam2_bound is not None:
            rows.append(LedgerRow(label, "S5_rho1_diam2", rb.rho1, rb.diam2_bound, None,
                                  rb.rho1 - rb.diam2_bound, bool(rb.diam2_ok)))
    return rows


def to_jsonl(rows: Iterable[LedgerRow]) -> str:
    return "".join(r.to_json() + "\n" for r in rows)


def failures(rows: Sequence[LedgerRow]) -> list[LedgerRow]:
    return [r for r in rows if not r.holds]

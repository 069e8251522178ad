"""The minimum Roman dominating distance matrix and its spectrum.

Two independent routes are provided: an exact integer characteristic
polynomial (Faddeev-LeVerrier over rationals) and a floating cyclic
Jacobi eigensolver. ``poly_roots_check`` ties them together.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import UNREACHABLE, DistanceMatrix, Graph, all_pairs_distances
from .roman import RomanDominatingFunction, rdf_violation

DEFAULT_TOL = 1e-10
DEFAULT_MAX_SWEEPS = 100
MAX_CHARPOLY_DIM = 64


class SpectralError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class MRDDMatrix:
    entries: np.ndarray
    rdf_weight: int

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def trace(self) -> int:
        return int(np.trace(self.entries))

    def frobenius_sq(self) -> int:
        return int((self.entries.astype(object) ** 2).sum()) if self.n else 0

    def to_list(self) -> list[list[int]]:
        return self.entries.tolist()


def build_mrdd(dm: DistanceMatrix, f: RomanDominatingFunction, g: Graph | None = None) -> MRDDMatrix:
    """Distance matrix with the diagonal replaced by the RDF labels.

    Unreachable pairs become 0, giving the block-diagonal form of a
    disjoint union. Pass ``g`` to have ``f`` checked as an RDF of it.
    """
    if f.n != dm.n:
        raise SpectralError(f"RDF covers {f.n} vertices, distance matrix has {dm.n}")
    if g is not None:
        if g.n != dm.n:
            raise SpectralError("graph and distance matrix sizes differ")
        reason = rdf_violation(g, f)
        if reason:
            raise SpectralError(f"not a Roman dominating function ({reason})")
    a = np.where(dm.d == UNREACHABLE, 0, dm.d).astype(np.int64)
    a[np.diag_indices(dm.n)] = f.labels()
    a.setflags(write=False)
    return MRDDMatrix(a, f.weight)


def mrdd_for(g: Graph, f: RomanDominatingFunction) -> MRDDMatrix:
    return build_mrdd(all_pairs_distances(g), f, g)


# ---------------------------------------------------------------------------
# exact characteristic polynomial


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial, ``coefficients[k]`` multiplies rho**k."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __mul__(self, other: CharPoly) -> CharPoly:
        return CharPoly(tuple(poly_mul(self.coefficients, other.coefficients)))

    def descending(self) -> list[int]:
        return list(reversed(self.coefficients))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coefficients]

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0 and k != self.degree:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and k) else str(mag)
            if k:
                body += "x" if k == 1 else f"x^{k}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        return text + "".join(f" {s} {b}" for s, b in terms[1:])


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def char_poly(a: MRDDMatrix | np.ndarray, max_dim: int = MAX_CHARPOLY_DIM) -> CharPoly:
    """det(rho I - A) by the Faddeev-LeVerrier recurrence in exact arithmetic.

    M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
    """
    entries = a.entries if isinstance(a, MRDDMatrix) else np.asarray(a)
    n = entries.shape[0]
    if n > max_dim:
        raise SpectralError(f"characteristic polynomial limited to n <= {max_dim}")
    mat = [[int(x) for x in row] for row in entries]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = _matmul(mat, m)
        c = Fraction(-sum(am[i][i] for i in range(n)), k)
        assert c.denominator == 1, "non-integer characteristic coefficient"
        coeffs[n - k] = int(c)
        if k < n:
            for i in range(n):
                am[i][i] += coeffs[n - k]
            m = am
    return CharPoly(tuple(coeffs))


def _matmul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*y))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in x]


# ---------------------------------------------------------------------------
# Jacobi eigenvalues


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]
    energy: float
    residual: float
    sweeps: int = 0

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def spectral_radius(self) -> float:
        return self.eigenvalues[0]

    def moment(self, k: int) -> float:
        return math.fsum(x**k for x in self.eigenvalues)

    def to_json(self) -> dict:
        return {"eigenvalues": list(self.eigenvalues), "energy": self.energy, "residual": self.residual}


def jacobi_eigenvalues(
    a: np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = DEFAULT_MAX_SWEEPS
) -> tuple[np.ndarray, float, int]:
    """Cyclic Jacobi on a symmetric matrix.

    Stops once the off-diagonal Frobenius norm drops below ``tol`` times
    the initial Frobenius norm. Returns (diagonal, relative residual,
    sweeps used); raises ConvergenceError after ``max_sweeps``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    w = np.array(a, dtype=np.float64)
    n = w.shape[0]
    if w.shape != (n, n) or not np.array_equal(w, w.T):
        raise SpectralError("Jacobi needs a square symmetric matrix")
    scale = float(np.linalg.norm(w))

    offdiag = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        return float(np.linalg.norm(w[offdiag]))

    if scale == 0.0:
        return np.diag(w).copy(), 0.0, 0
    off = off_norm()
    sweeps = 0
    while off >= tol * scale:
        if sweeps == max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (relative off-norm {off / scale:.3e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = w[p, q]
                if apq == 0.0:
                    continue
                theta = (w[q, q] - w[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J on rows/columns p and q
                rp, rq = w[p, :].copy(), w[q, :].copy()
                w[p, :] = c * rp - s * rq
                w[q, :] = s * rp + c * rq
                cp, cq = w[:, p].copy(), w[:, q].copy()
                w[:, p] = c * cp - s * cq
                w[:, q] = s * cp + c * cq
                w[p, q] = w[q, p] = 0.0
        off = off_norm()
    return np.diag(w).copy(), off / scale, sweeps


def energy(s: Spectrum | Sequence[float]) -> float:
    values = s.eigenvalues if isinstance(s, Spectrum) else s
    return math.fsum(abs(x) for x in values)


def eigenvalues(
    a: MRDDMatrix | np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = DEFAULT_MAX_SWEEPS
) -> Spectrum:
    entries = a.entries if isinstance(a, MRDDMatrix) else np.asarray(a)
    diag, residual, sweeps = jacobi_eigenvalues(entries, tol, max_sweeps)
    # stable sort keeps discovery order among ties
    order = sorted(range(len(diag)), key=lambda i: -diag[i])
    values = tuple(float(diag[i]) for i in order)
    return Spectrum(values, energy(values), residual, sweeps)


@dataclass(frozen=True)
class RootCheck:
    """Per-eigenvalue residuals of the exact polynomial.

    ``residuals`` use the fixed coefficient-norm scaling; the absolute
    value of p grows like |rho|**n, so for large n even correctly rounded
    roots exceed small tolerances. ``backward_errors`` are normwise,
    |p(rho)| / (||c|| ||(1, rho, ..., rho**n)||), and stay near machine
    precision for a backward-stable eigensolver.
    """

    residuals: tuple[float, ...]
    tol: float
    backward_errors: tuple[float, ...] = ()

    @property
    def passed(self) -> tuple[bool, ...]:
        return tuple(r < self.tol for r in self.residuals)

    @property
    def ok(self) -> bool:
        return all(self.passed)

    @property
    def worst(self) -> float:
        return max(self.residuals, default=0.0)


def poly_roots_check(p: CharPoly, s: Spectrum, tol: float = 1e-6) -> RootCheck:
    """|p(rho)| / (1 + ||c||_2) for every computed eigenvalue."""
    if p.degree != s.n:
        raise SpectralError(f"polynomial degree {p.degree} != spectrum size {s.n}")
    norm = math.sqrt(math.fsum(float(c) ** 2 for c in p.coefficients))
    values = [abs(_horner_exact(p, x)) for x in s.eigenvalues]
    res = tuple(v / (1.0 + norm) for v in values)
    backward = []
    for v, x in zip(values, s.eigenvalues):
        powers = math.sqrt(math.fsum(x ** (2 * k) for k in range(p.degree + 1)))
        backward.append(v / (norm * powers))
    backward = tuple(backward)
    return RootCheck(res, tol, backward)


def _horner_exact(p: CharPoly, x: float) -> float:
    # exact rational evaluation at the float point, rounded once
    xf = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * xf + c
    return float(acc)

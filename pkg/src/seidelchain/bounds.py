"""Closed-form energy and eigenvalue bounds for chain graphs, compared against computed values."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .chain import ChainSpec, parse_chain_string
from .poly import InconsistencyError, Poly, charpoly_seidel, det_quotient
from .spectra import Spectrum, distinct_count, seidel_energy, seidel_spectrum

__all__ = [
    "TIGHT_TOL",
    "BoundCheck",
    "BoundsReport",
    "EnergyBounds",
    "GammaClosedForm",
    "SymmetricClosedForm",
    "haemers_interval",
    "lambda1_bounds",
    "energy_bound_suite",
    "gamma2_closed_forms",
    "symmetric_chain_closed_forms",
    "bisect_negative_root",
    "bounds_report",
]

TIGHT_TOL = 1e-9


def haemers_interval(n: int) -> tuple[float, float]:
    if n < 1:
        raise ValueError("n must be positive")
    return 2.0 * (n - 1), n * math.sqrt(n - 1)


def lambda1_bounds(n: int, k: int) -> tuple[float, float]:
    if k < 1 or 2 * k > n:
        raise ValueError("need 1 <= k and 2k <= n")
    return n / 2 + 1 - 2 * k / n, float(n - 1)


@dataclass(frozen=True)
class EnergyBounds:
    trace_upper: float
    det_lower: float
    sqrt_k_upper: float


def energy_bound_suite(spec: ChainSpec, det_q: int | None = None) -> EnergyBounds:
    """The quotient-trace upper bound, the quotient-determinant lower bound and ``n(3+sqrt k)-2``."""
    n, k = spec.n, spec.k
    det_q = det_quotient(spec) if det_q is None else det_q
    trace_sq = n * n - 2 * n + 2 * k
    return EnergyBounds(
        trace_upper=n - 2 * k + math.sqrt(2 * k * trace_sq),
        det_lower=n - 2 * k + math.sqrt(trace_sq + 2 * k * (2 * k - 1) * abs(det_q) ** (1 / k)),
        sqrt_k_upper=n * (3 + math.sqrt(k)) - 2,
    )


@dataclass(frozen=True)
class BoundCheck:
    name: str
    value: float
    computed: float
    kind: str  # "lower": computed >= value; "upper": computed <= value

    @property
    def satisfied(self) -> bool:
        if self.kind == "lower":
            return self.computed >= self.value - TIGHT_TOL
        return self.computed <= self.value + TIGHT_TOL

    @property
    def tight(self) -> bool:
        return abs(self.computed - self.value) <= TIGHT_TOL

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "computed": self.computed,
            "satisfied": self.satisfied,
            "tight": self.tight,
        }


@dataclass(frozen=True)
class BoundsReport:
    binary: str
    checks: tuple[BoundCheck, ...]
    # dominance of the chain-graph bounds over the general-graph interval;
    # reported, not guaranteed for every chain graph
    comparisons: tuple[BoundCheck, ...] = ()

    def __getitem__(self, name: str) -> BoundCheck:
        for c in self.checks + self.comparisons:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def all_satisfied(self) -> bool:
        return all(c.satisfied for c in self.checks)

    @property
    def violations(self) -> list[str]:
        return [c.name for c in self.checks if not c.satisfied]

    def to_json(self) -> dict:
        return {
            "binary": self.binary,
            "bounds": [c.to_json() for c in self.checks],
            "comparisons": [c.to_json() for c in self.comparisons],
        }


def bounds_report(
    spec: ChainSpec,
    spectrum: Spectrum | None = None,
    energy: float | None = None,
    distinct: int | None = None,
    det_q: int | None = None,
) -> BoundsReport:
    n, k = spec.n, spec.k
    spectrum = spectrum or seidel_spectrum(spec)
    energy = seidel_energy(spec, spectrum) if energy is None else energy
    distinct = distinct_count(spec, spectrum) if distinct is None else distinct
    eb = energy_bound_suite(spec, det_q)
    h_lo, h_hi = haemers_interval(n)
    l_lo, l_hi = lambda1_bounds(n, k)
    lam1 = spectrum.largest
    checks = (
        BoundCheck("haemers_lower", h_lo, energy, "lower"),
        BoundCheck("haemers_upper", h_hi, energy, "upper"),
        BoundCheck("trace_upper", eb.trace_upper, energy, "upper"),
        BoundCheck("det_lower", eb.det_lower, energy, "lower"),
        BoundCheck("sqrt_k_upper", eb.sqrt_k_upper, energy, "upper"),
        BoundCheck("lambda1_lower", l_lo, lam1, "lower"),
        BoundCheck("lambda1_upper", l_hi, lam1, "upper"),
        BoundCheck("distinct_lower", float(k + 1), float(distinct), "lower"),
        BoundCheck("distinct_upper", float(2 * k), float(distinct), "upper"),
    )
    comparisons = (
        BoundCheck("trace_upper_vs_haemers", h_hi, eb.trace_upper, "upper"),
        BoundCheck("det_lower_vs_haemers", h_lo, eb.det_lower, "lower"),
    )
    return BoundsReport(str(spec), checks, comparisons)


@dataclass(frozen=True)
class GammaClosedForm:
    n: int
    spectrum: Spectrum
    energy: float


def gamma2_closed_forms(n: int) -> GammaClosedForm:
    """Spectrum and energy shared by every member of the ``k = 2`` minimal family."""
    if n < 4:
        raise ValueError("the k=2 family needs n >= 4")
    root = math.sqrt(n * n + 4 * n - 12)
    pairs = [((n - 4 + root) / 2, 1), (1.0, 1), (-1.0, n - 3), ((n - 4 - root) / 2, 1)]
    pairs.sort(key=lambda p: -p[0])
    return GammaClosedForm(n, Spectrum(tuple(pairs)), n - 2 + root)


def bisect_negative_root(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    for _ in range(400):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        if mid in (lo, hi):  # interval at float resolution
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class SymmetricClosedForm:
    p: int
    k: int
    charpoly: Poly
    energy_formula: float
    energy_computed: float
    alpha: float | None = None

    @property
    def discrepancy(self) -> float:
        return self.energy_computed - self.energy_formula


def symmetric_chain_closed_forms(p: int, k: int) -> SymmetricClosedForm:
    """Closed forms for ``0^p 1^p`` repeated ``k`` times, ``k`` in 1..3.

    The closed-form ``k = 2`` energy expression ``2(3+sqrt5)p - 6`` does not
    agree with the listed eigenvalues, and the gap is exposed as ``discrepancy``.
    """
    if p < 1 or k not in (1, 2, 3):
        raise ValueError("need p >= 1 and k in {1, 2, 3}")
    y = Poly([1, 1])  # x + 1
    quad = y * y - 2 * p * y - 4 * p * p
    alpha = None
    if k == 1:
        psi = y ** (2 * p - 1) * (y - 2 * p)
        formula = 2.0 * (2 * p - 1)
    elif k == 2:
        psi = y ** (4 * p - 3) * (y - 2 * p) * quad
        formula = 2 * (3 + math.sqrt(5)) * p - 6
    else:
        cubic = y ** 3 - 4 * p * y * y - 4 * p * p * y + 8 * p ** 3
        psi = y ** (6 * p - 5) * quad * cubic

        def alpha_cubic(x):
            return x ** 3 - 4 * p * x ** 2 - 4 * p ** 2 * x + 8 * p ** 3

        bracket = -(1 + 4 * p + 4 * p ** 2 + 8 * p ** 3)
        alpha = bisect_negative_root(alpha_cubic, float(bracket), 0.0, 1e-12)
        formula = (10 + 2 * math.sqrt(5)) * p - 6 - 2 * alpha

    spec = parse_chain_string(" ".join(["0^%d 1^%d" % (p, p)] * k))
    exact = charpoly_seidel(spec)
    if psi != exact:
        raise InconsistencyError(f"closed-form charpoly for p={p}, k={k} disagrees: {psi} vs {exact}")
    return SymmetricClosedForm(p, k, psi, formula, seidel_energy(spec), alpha)

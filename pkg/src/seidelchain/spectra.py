"""Numeric Seidel spectra of chain graphs, cross-checked against exact polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np

from .chain import ChainSpec
from .poly import (
    Poly,
    charpoly_quotient,
    charpoly_seidel,
    distinct_root_count_exact,
    multiplicity_profile,
    real_root_signs,
    root_multiplicity_exact,
)
from .quotient import cell_sign, symmetrized_quotient

__all__ = [
    "Spectrum",
    "SignProfile",
    "ConvergenceError",
    "SpectrumMismatchError",
    "MAX_SWEEPS",
    "MERGE_TOL",
    "ZERO_TOL",
    "eig_symmetric",
    "quotient_spectrum",
    "seidel_spectrum",
    "seidel_energy",
    "sign_profile",
    "distinct_count",
    "energy_high_precision",
]

MAX_SWEEPS = 100
MERGE_TOL = 1e-7
ZERO_TOL = 1e-9


class ConvergenceError(RuntimeError):
    pass


class SpectrumMismatchError(RuntimeError):
    """Numeric clustering disagrees with exact multiplicities."""


def eig_symmetric(m, tol: float = 1e-12, max_sweeps: int = MAX_SWEEPS) -> list[float]:
    """All eigenvalues of a real symmetric matrix, descending, by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius mass drops below
    ``tol * (1 + ||m||_F)``.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if a.size and np.max(np.abs(a - a.T)) > 1e-10:
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2
    n = a.shape[0]
    threshold = tol * (1.0 + np.linalg.norm(a))

    off = ~np.eye(n, dtype=bool)

    def off_mass():
        return float(np.linalg.norm(a[off]))

    sweeps = 0
    while off_mass() >= threshold:
        if sweeps >= max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
        sweeps += 1
    return sorted((float(x) for x in np.diag(a)), reverse=True)


@lru_cache(maxsize=8192)
def _quotient_eigs(spec: ChainSpec) -> tuple[float, ...]:
    return tuple(eig_symmetric(symmetrized_quotient(spec), tol=1e-12))


def quotient_spectrum(spec: ChainSpec) -> list[float]:
    return list(_quotient_eigs(spec))


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues with multiplicities, sorted by decreasing value."""

    pairs: tuple[tuple[float, int], ...]

    @property
    def order(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def values(self) -> list[float]:
        return [v for v, m in self.pairs for _ in range(m)]

    @property
    def largest(self) -> float:
        return self.pairs[0][0]

    def multiplicity_of(self, value: float, tol: float = MERGE_TOL) -> int:
        return sum(m for v, m in self.pairs if abs(v - value) <= tol)

    def energy(self) -> float:
        return math.fsum(abs(v) * m for v, m in self.pairs)

    def to_json(self) -> list[dict]:
        return [{"value": v, "multiplicity": m} for v, m in self.pairs]


def _cluster(values, tol):
    groups: list[list[float]] = []
    for v in sorted(values, reverse=True):
        if groups and groups[-1][-1] - v <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return [(math.fsum(g) / len(g), len(g)) for g in groups]


def seidel_spectrum(spec: ChainSpec, merge_tol: float = MERGE_TOL) -> Spectrum:
    """Quotient eigenvalues plus ``n - 2k`` extra copies of -1, merged within ``merge_tol``.

    Cluster sizes are validated against the exact multiplicity structure of
    the characteristic polynomial.
    """
    n, k = spec.n, spec.k
    values = quotient_spectrum(spec) + [-1.0] * (n - 2 * k)
    pairs = []
    for value, mult in _cluster(values, merge_tol):
        if abs(value + 1.0) <= merge_tol:
            value = -1.0
        pairs.append((value, mult))

    psi = charpoly_seidel(spec)
    exact_neg_one = root_multiplicity_exact(psi, -1)
    numeric_neg_one = sum(m for v, m in pairs if v == -1.0)
    if exact_neg_one != numeric_neg_one:
        raise SpectrumMismatchError(
            f"{spec}: -1 has exact multiplicity {exact_neg_one}, numeric {numeric_neg_one}"
        )
    profile = multiplicity_profile(psi)
    numeric_profile: dict[int, int] = {}
    for _, m in pairs:
        numeric_profile[m] = numeric_profile.get(m, 0) + 1
    if profile != numeric_profile:
        raise SpectrumMismatchError(
            f"{spec}: exact multiplicity profile {profile}, numeric {numeric_profile}"
        )
    return Spectrum(tuple(pairs))


def seidel_energy(spec: ChainSpec, spectrum: Spectrum | None = None) -> float:
    spectrum = spectrum or seidel_spectrum(spec)
    full = spectrum.energy()
    split = spec.n - 2 * spec.k + math.fsum(abs(v) for v in quotient_spectrum(spec))
    if abs(full - split) > 1e-8:
        raise SpectrumMismatchError(f"{spec}: energy {full} vs quotient form {split}")
    return full


@dataclass(frozen=True)
class SignProfile:
    positive: int
    negative: int
    zero: int

    def to_json(self) -> dict:
        return {"positive": self.positive, "negative": self.negative, "zero": self.zero}


def sign_profile(spec: ChainSpec, zero_tol: float = ZERO_TOL, values=None) -> SignProfile:
    """Sign counts of the quotient eigenvalues (with multiplicity)."""
    values = quotient_spectrum(spec) if values is None else values
    pos = sum(1 for v in values if v > zero_tol)
    neg = sum(1 for v in values if v < -zero_tol)
    profile = SignProfile(pos, neg, len(values) - pos - neg)
    exact = real_root_signs(charpoly_quotient(spec))
    if (profile.positive, profile.negative, profile.zero) != exact:
        raise SpectrumMismatchError(f"{spec}: numeric signs {profile} vs exact {exact}")
    return profile


def distinct_count(spec: ChainSpec, spectrum: Spectrum | None = None, psi: Poly | None = None) -> int:
    psi = psi or charpoly_seidel(spec)
    exact = distinct_root_count_exact(psi)
    numeric = len((spectrum or seidel_spectrum(spec)).pairs)
    if exact != numeric:
        raise SpectrumMismatchError(f"{spec}: {exact} distinct eigenvalues exactly, {numeric} numerically")
    return exact


def energy_high_precision(spec: ChainSpec, dps: int = 50):
    """Seidel energy as an ``mpmath`` number, from the symmetrized quotient at ``dps`` digits."""
    sizes = spec.sizes
    m = len(sizes)
    with mpmath.workdps(dps):
        mat = mpmath.matrix(m, m)
        for a in range(m):
            for b in range(m):
                mat[a, b] = (
                    sizes[a] - 1 if a == b else cell_sign(a, b) * mpmath.sqrt(sizes[a] * sizes[b])
                )
        eigs = mpmath.eigsy(mat, eigvals_only=True)
        return spec.n - 2 * spec.k + mpmath.fsum(abs(e) for e in eigs)

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seidelchain.chain import parse_chain_string, seidel_matrix
from seidelchain.spectra import (
    ConvergenceError,
    SpectrumMismatchError,
    distinct_count,
    eig_symmetric,
    energy_high_precision,
    quotient_spectrum,
    seidel_energy,
    seidel_spectrum,
    sign_profile,
)

from conftest import chain_specs

G1 = "0^1 1^2 0^1 1^1"


def full_eigs(spec):
    # independent oracle: LAPACK on the whole n x n Seidel matrix
    return np.sort(np.linalg.eigvalsh(seidel_matrix(spec).astype(float)))[::-1]


@given(st.integers(1, 9), st.integers(0, 2**32 - 1))
@settings(max_examples=40)
def test_jacobi_vs_lapack(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n)) * 10
    a = a + a.T
    ours = eig_symmetric(a)
    assert np.allclose(ours, np.sort(np.linalg.eigvalsh(a))[::-1], atol=1e-9)


def test_jacobi_edge_cases():
    assert eig_symmetric(np.zeros((0, 0))) == []
    assert eig_symmetric([[4.0]]) == [4.0]
    assert eig_symmetric(np.diag([1.0, 3.0, 2.0])) == [3.0, 2.0, 1.0]
    # huge dynamic range exercises the large-angle branch
    assert np.allclose(eig_symmetric([[1e200, 1.0], [1.0, -1e200]]), [1e200, -1e200])
    with pytest.raises(ValueError):
        eig_symmetric([[0.0, 1.0], [2.0, 0.0]])
    with pytest.raises(ValueError):
        eig_symmetric([[1.0, 2.0]])
    with pytest.raises(ConvergenceError):
        eig_symmetric([[0.0, 1.0], [1.0, 0.0]], max_sweeps=0)


@given(chain_specs())
@settings(deadline=None)
def test_spectrum_vs_full_matrix(spec):
    sp = seidel_spectrum(spec)
    assert sp.order == spec.n
    assert np.allclose(sp.values, full_eigs(spec), atol=1e-8)
    assert math.isclose(seidel_energy(spec, sp), float(np.abs(full_eigs(spec)).sum()), abs_tol=1e-8)
    assert sp.multiplicity_of(-1.0) == spec.n - 2 * spec.k + 1


@given(chain_specs())
@settings(deadline=None)
def test_sign_and_distinct_counts(spec):
    q = quotient_spectrum(spec)
    prof = sign_profile(spec)
    assert prof.positive + prof.negative + prof.zero == 2 * spec.k
    assert prof.positive == sum(v > 1e-9 for v in q)
    m = distinct_count(spec)
    eigs = full_eigs(spec)
    numeric = 1 + int(np.sum(np.diff(eigs[::-1]) > 1e-6))
    assert m == numeric


def test_g1_spectrum():
    sp = seidel_spectrum(parse_chain_string(G1))
    vals = [v for v, _ in sp.pairs]
    mults = [m for _, m in sp.pairs]
    r17 = math.sqrt(17)
    assert np.allclose(vals, [3, (-1 + r17) / 2, -1, (-1 - r17) / 2], atol=1e-10)
    assert mults == [1, 1, 2, 1]
    assert math.isclose(sp.energy(), 5 + r17, abs_tol=1e-10)


def test_energy_high_precision_agrees():
    for text in [G1, "0^1 1^2 0^2 1^3", "0^3 1^1 0^2 1^2 0^1 1^1"]:
        spec = parse_chain_string(text)
        assert abs(float(energy_high_precision(spec)) - seidel_energy(spec)) < 1e-10


def test_merge_tolerance_too_coarse_is_detected():
    # merging distinct eigenvalues contradicts the exact multiplicity profile
    with pytest.raises(SpectrumMismatchError):
        seidel_spectrum(parse_chain_string(G1), merge_tol=10.0)


def test_spectrum_json():
    sp = seidel_spectrum(parse_chain_string("0^2 1^1"))
    assert sp.to_json() == [{"value": sp.pairs[0][0], "multiplicity": 1}, {"value": -1.0, "multiplicity": 2}]
    assert math.isclose(sp.largest, 2.0)

import numpy as np
from hypothesis import given

from seidelchain.chain import parse_chain_string, seidel_matrix
from seidelchain.quotient import (
    cell_sign,
    characteristic_matrix,
    equitable_partition,
    quotient_matrix,
    symmetrized_quotient,
    verify_trace_identities,
)

from conftest import chain_specs


def test_partition_cells_are_blocks():
    spec = parse_chain_string("0^1 1^2 0^2 1^3")
    assert equitable_partition(spec) == [(0,), (1, 2), (3, 4), (5, 6, 7)]


@given(chain_specs())
def test_quotient_is_row_sum_oracle(spec):
    # entry (a, b) is the constant row sum of S over cell b, read off any vertex of cell a
    s = seidel_matrix(spec)
    cells = equitable_partition(spec)
    q = quotient_matrix(spec)
    for a, ca in enumerate(cells):
        for b, cb in enumerate(cells):
            sums = {int(s[v, list(cb)].sum()) for v in ca}
            assert sums == {int(q[a, b])}


@given(chain_specs())
def test_cell_sign_matches_seidel_entries(spec):
    s = seidel_matrix(spec)
    cells = equitable_partition(spec)
    for a, ca in enumerate(cells):
        for b, cb in enumerate(cells):
            if a != b:
                assert s[ca[0], cb[0]] == cell_sign(a, b)


@given(chain_specs())
def test_sp_equals_pq(spec):
    s, p, q = seidel_matrix(spec), characteristic_matrix(spec), quotient_matrix(spec)
    assert p.shape == (spec.n, 2 * spec.k)
    assert np.array_equal(s @ p, p @ q)
    assert np.array_equal(p.sum(axis=1), np.ones(spec.n))


@given(chain_specs())
def test_trace_identities(spec):
    tc = verify_trace_identities(spec)
    n, k = spec.n, spec.k
    assert tc.ok
    assert tc.trace == n - 2 * k
    assert tc.trace_sq == n * n - 2 * n + 2 * k


@given(chain_specs())
def test_quotient_neg_one_vector(spec):
    q = quotient_matrix(spec)
    x = np.zeros(2 * spec.k, dtype=np.int64)
    x[0], x[-1] = spec.t[-1], spec.s[0]
    assert np.array_equal(q @ x, -x)


@given(chain_specs())
def test_symmetrized_quotient_similar(spec):
    m = symmetrized_quotient(spec)
    assert np.allclose(m, m.T)
    a = np.sort(np.linalg.eigvals(quotient_matrix(spec).astype(float)).real)
    b = np.sort(np.linalg.eigvalsh(m))
    assert np.allclose(a, b, atol=1e-8)

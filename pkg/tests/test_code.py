import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassmann_codes import linalg
from grassmann_codes.code import (build_code, code_parameters, matrix_from_json, matrix_to_json,
                                  minor_indices, word_from_str)
from grassmann_codes.field import build_field
from grassmann_codes.orbits import enumerate_grassmannian, orbit_decompose
from conftest import bundle_for


def test_linalg_basics():
    A = np.array([[1, 2, 0], [2, 4, 1]])
    assert linalg.rank(A, 3) == 2
    N = linalg.nullspace(A, 3)
    assert N.shape == (1, 3) and not np.any((A @ N.T) % 3)
    M = np.array([[1, 1], [0, 1]])
    assert np.array_equal((M @ linalg.inverse(M, 2)) % 2, np.eye(2, dtype=int))
    with pytest.raises(np.linalg.LinAlgError):
        linalg.inverse(np.array([[1, 1], [1, 1]]), 2)


def test_minor_index_order():
    assert minor_indices(4) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("q,m,n,k,d", [(2, 4, 35, 6, 16), (2, 5, 155, 10, 64), (3, 4, 130, 6, 81)])
def test_parameters_and_shape(q, m, n, k, d):
    code = bundle_for(q, m).code
    assert code_parameters(q, m) == (n, k, d)
    assert code.G.shape == (k, n)
    assert linalg.rank(code.G, q) == k
    assert not np.any((code.G @ code.parity.T) % q)
    assert code.parity.shape == (n - k, n)
    assert np.all(np.any(code.G, axis=0))          # no zero column


def test_column_order_is_orbit_order(b24):
    flat = [P for o in b24.orbits for P in o.points]
    assert b24.code.coordinate_index == flat


def test_columns_from_other_bases_differ_by_a_scalar(b34):
    F, code = b34.ctx, b34.code
    rng = np.random.default_rng(0)
    for pos in rng.integers(0, code.n, 20).tolist():
        P = code.coordinate_index[pos]
        a, b = P.alpha, P.beta
        # change of basis [[1, 2], [2, 2]] has determinant 1*2 - 2*2 = 1 mod 3
        a2, b2 = F.add(a, F.mul(2, b)), F.add(F.mul(2, a), F.mul(2, b))
        x, y = F.fq_coordinates(a2), F.fq_coordinates(b2)
        col = np.array([(x[i] * y[j] - x[j] * y[i]) % 3 for i, j in minor_indices(F.m)])
        det = (1 * 2 - 2 * 2) % 3
        assert np.array_equal(col, (det * code.G[:, pos]) % 3)


def test_minors_equal_trace_determinantal_functions(b24):
    F, code = b24.ctx, b24.code
    theta = F.dual_basis
    for pos, P in enumerate(code.coordinate_index):
        for row, (i, j) in enumerate(minor_indices(F.m)):
            tr = lambda u, v: F.trace(F.mul(u, v))
            val = (tr(theta[i], P.alpha) * tr(theta[j], P.beta)
                   - tr(theta[i], P.beta) * tr(theta[j], P.alpha)) % F.q
            assert val == code.G[row, pos]


def test_encode_zero_and_linearity(b24):
    code = b24.code
    assert not np.any(code.encode(np.zeros(6, dtype=int)))
    with pytest.raises(ValueError):
        code.encode([1, 0, 1])
    a, b = np.array([1, 0, 1, 1, 0, 0]), np.array([0, 1, 1, 0, 0, 1])
    assert np.array_equal(code.encode((a + b) % 2), (code.encode(a) + code.encode(b)) % 2)


def test_single_minor_weight_by_plane_count(f16, b24):
    # planes whose (0, 1) Plucker coordinate is nonzero, counted straight from the Grassmannian
    count = 0
    for P in enumerate_grassmannian(f16):
        x, y = f16.fq_coordinates(P.alpha), f16.fq_coordinates(P.beta)
        count += (x[0] * y[1] - x[1] * y[0]) % 2 != 0
    assert count == 16
    e12 = np.eye(6, dtype=int)[0]
    assert np.count_nonzero(b24.code.encode(e12)) == 16


@pytest.mark.parametrize("q,m,d", [(2, 4, 16), (2, 5, 64), (3, 4, 81)])
def test_brute_force_min_distance(q, m, d):
    assert bundle_for(q, m).code.brute_force_min_distance() == d


def test_min_distance_limit():
    code = bundle_for(2, 4).code
    with pytest.raises(ValueError):
        code.all_codewords(limit=10)


def test_information_sets(b24, b25):
    code = b24.code
    info = code.find_information_set(range(code.n))
    assert info is not None and len(info) == 6
    assert linalg.rank(code.G[:, info], 2) == 6
    small = b24.orbit_codes[2]
    assert small.N == 5 and code.find_information_set(small.columns) is None
    for oc in b25.orbit_codes:
        I = b25.code.find_information_set(oc.columns)
        assert I is not None and set(I) <= set(oc.columns)
        assert I == sorted(I)


def test_information_set_first_pivots(b24):
    code = b24.code
    info = code.find_information_set(range(code.n))
    # greedy reference: keep a column iff it raises the rank
    kept = []
    for c in range(code.n):
        if linalg.rank(code.G[:, kept + [c]], 2) > len(kept):
            kept.append(c)
        if len(kept) == code.k:
            break
    assert info == kept


def test_reencode_zero_and_errors(b24):
    code = b24.code
    I = code.find_information_set(range(code.n))
    assert not np.any(code.reencode_from_info_set(I, np.zeros(6, dtype=int)))
    with pytest.raises(ValueError):
        code.reencode_from_info_set([I[0]] * 6, np.zeros(6, dtype=int))
    with pytest.raises(ValueError):
        code.reencode_from_info_set(I[:5], np.zeros(5, dtype=int))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=6, max_size=6))
def test_reencode_roundtrip_c24(msg):
    code = bundle_for(2, 4).code
    c = code.encode(msg)
    for oc_cols in (range(code.n), bundle_for(2, 4).orbit_codes[1].columns):
        I = code.find_information_set(oc_cols)
        assert np.array_equal(code.reencode_from_info_set(I, c[I]), c)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=10, max_size=10), st.integers(0, 4))
def test_reencode_roundtrip_c25(msg, orbit):
    b = bundle_for(2, 5)
    c = b.code.encode(msg)
    I = b.code.find_information_set(b.orbit_codes[orbit].columns)
    assert np.array_equal(b.code.reencode_from_info_set(I, c[I]), c)


def test_exhaustive_weight_enumeration_c24(b24):
    words = b24.code.all_codewords()
    weights = np.count_nonzero(words, axis=1)
    assert sorted(set(weights.tolist())) == [0, 16, 20]
    assert weights[weights > 0].min() == 16


def test_matrix_serialisation_roundtrip(b24, b34):
    for b in (b24, b34):
        G = b.code.G
        assert np.array_equal(matrix_from_json(matrix_to_json(G, b.ctx.q), b.ctx.q, G.shape[1]), G)


def test_word_parsing():
    assert list(word_from_str("0120\n", 3)) == [0, 1, 2, 0]
    for bad in ("012", "01a", ""):
        with pytest.raises(ValueError):
            word_from_str(bad, 2)

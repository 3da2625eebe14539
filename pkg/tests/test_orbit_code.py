import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassmann_codes import linalg
from grassmann_codes.field import build_field
from grassmann_codes.orbit_code import (SparsePoly, allowed_exponent_set, eval_on_orbit, expand_f,
                                        projected_dimension)
from grassmann_codes.rs import gf_rref
from conftest import bundle_for


def test_expand_f_example(f16):
    g = f16.gamma
    f = expand_f(f16, 1, g, g)
    assert f16.add(f16.exp(2), g) == f16.exp(5)
    assert f.terms[3] == f16.exp(10) == f16.mul(f16.exp(5), f16.exp(5))


def test_expand_f_alternating_and_antisymmetric(f16):
    g = f16.gamma
    for a, b in [(1, g), (f16.exp(3), f16.exp(7)), (5, 9)]:
        assert expand_f(f16, a, a, g).is_zero()
        fab, fba = expand_f(f16, a, b, g), expand_f(f16, b, a, g)
        assert fab.support == fba.support
        for e in fab.terms:
            assert fba.terms[e] == f16.neg(fab.terms[e])


def test_expand_f_matches_trace_form_on_orbit(f16):
    # f(T) = Tr(aT)Tr(b delta T) - Tr(a delta T)Tr(bT), evaluated directly
    a, b, delta = 3, f16.exp(11), f16.exp(2)
    f = expand_f(f16, a, b, delta)
    for x in f16.nonzero():
        x = int(x)
        tr = lambda u: f16.trace(f16.mul(u, x))
        direct = (tr(a) * tr(f16.mul(b, delta)) - tr(f16.mul(a, delta)) * tr(b)) % 2
        assert int(f.evaluate(f16, [x])[0]) == direct


def test_allowed_exponent_sets(b24, b25):
    F = b24.ctx
    assert allowed_exponent_set(F, F.gamma) == {3, 5, 6, 9, 10, 12}
    assert allowed_exponent_set(F, F.exp(5)) == {3, 6, 9, 12}
    G = b25.ctx
    assert allowed_exponent_set(G, G.gamma) == {2 ** i + 2 ** j for i, j in itertools.combinations(range(5), 2)}
    with pytest.raises(ValueError):
        allowed_exponent_set(F, 1)
    for o in b24.orbits:
        S = allowed_exponent_set(F, o.delta)
        assert len(S) == projected_dimension(4, o.d)
        assert 2 ** 3 + 2 ** 2 in S


def test_projected_dimension_formula():
    assert projected_dimension(4, 4) == 6
    assert projected_dimension(4, 2) == 4
    assert projected_dimension(6, 3) == 12
    assert projected_dimension(6, 2) == 9
    assert projected_dimension(5, 5) == 10


@pytest.mark.parametrize("q,m,dims", [(2, 4, [6, 6, 4]), (2, 5, [10] * 5), (3, 4, [6, 6, 6, 4])])
def test_orbit_code_dimensions(q, m, dims):
    b = bundle_for(q, m)
    got = [oc.dim for oc in b.orbit_codes]
    assert sorted(got, reverse=True) == dims
    for oc in b.orbit_codes:
        assert oc.dim == projected_dimension(m, oc.d) == linalg.rank(b.code.G[:, oc.columns], q)
        assert oc.dim <= min(b.code.k, oc.N)
        assert np.array_equal(oc.Gproj, b.code.G[:, oc.columns])


def test_eval_on_orbit(b24):
    F = b24.ctx
    o = b24.orbits[0]
    assert not np.any(eval_on_orbit(F, SparsePoly(), o))
    vals = eval_on_orbit(F, expand_f(F, 1, F.gamma, F.gamma), o)
    assert len(vals) == 15 and np.all(vals < 2)
    small = b24.orbits[2]
    with pytest.raises(ValueError):
        eval_on_orbit(F, SparsePoly({5: 1}), small)


@pytest.mark.parametrize("q,m", [(2, 4), (2, 5), (3, 4), (2, 6)])
def test_message_poly_evaluates_to_scaled_projection(q, m):
    b = bundle_for(q, m)
    rng = np.random.default_rng(q + m)
    for _ in range(5):
        msg = rng.integers(0, q, b.code.k)
        c = b.code.encode(msg)
        for oc in b.orbit_codes:
            poly = oc.message_poly(msg)
            vals = eval_on_orbit(b.ctx, poly, oc.orbit)
            assert np.array_equal(vals, oc.word_to_values(c[oc.columns]))
            assert np.array_equal(oc.values_to_word(vals), c[oc.columns])
            assert oc.is_codeword(c[oc.columns])


def test_zero_count_bound_exhaustive_c24(b24):
    F = b24.ctx
    bound = 8 + 4 - 2 - 1
    pts = F.nonzero()
    for oc in b24.orbit_codes[:2]:
        for msg in itertools.product(range(2), repeat=6):
            if not any(msg):
                continue
            vals = oc.message_poly(msg).evaluate(F, pts)
            assert np.count_nonzero(vals == 0) <= bound


def _spanned_by_monomials(ctx, oc, values):
    pts = ctx.exp(np.arange(oc.N))
    M = np.stack([np.asarray(ctx.power(pts, e)) for e in sorted(oc.allowed_exponents)], axis=1)
    _, p1 = gf_rref(ctx, M)
    _, p2 = gf_rref(ctx, np.hstack([M, np.asarray(values)[:, None]]))
    return len(p1) == len(p2)


@pytest.mark.parametrize("q,m", [(2, 4), (2, 5)])
def test_span_containment(q, m):
    b = bundle_for(q, m)
    for oc in b.orbit_codes:
        for row in b.code.G:
            assert _spanned_by_monomials(b.ctx, oc, oc.word_to_values(row[oc.columns]))
        # a word off the code is generally not in the span
        junk = np.zeros(oc.N, dtype=np.int64)
        junk[0] = 1
        if oc.N > len(oc.allowed_exponents):
            assert not _spanned_by_monomials(b.ctx, oc, junk)


def test_orbit_scales_nonzero(b34):
    for oc in b34.orbit_codes:
        assert np.all((oc.scales > 0) & (oc.scales < 3))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 31), st.integers(0, 31), st.integers(2, 31))
def test_expand_f_divisible_and_bounded(a, b, delta):
    F = build_field(2, 5)
    f = expand_f(F, a, b, delta)
    if not f.is_zero():
        assert f.min_exponent >= 3
        assert f.degree <= 16 + 8
    assert f.support <= allowed_exponent_set(F, delta)

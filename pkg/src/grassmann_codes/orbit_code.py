"""Projection of C(2, m) onto one orbit, and its sparse-polynomial description.

On the orbit of <1, delta> the point gamma^i * <1, delta> has the basis
(gamma^i, gamma^i delta), and a codeword becomes the evaluation at gamma^i of

    sum_{i<j} (a^{q^i} b^{q^j} - b^{q^i} a^{q^j}) (delta^{q^j} - delta^{q^i}) T^{q^i + q^j}

summed over minors.  The generator matrix uses the RREF basis of each plane
instead, which differs from (gamma^i, gamma^i delta) by a 2x2 change of basis;
`scales[i]` is its determinant, so  poly(gamma^i) = scales[i] * codeword[i].
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import linalg
from .code import LinearCode, minor_indices, plucker
from .field import BigFieldCtx
from .orbits import Orbit


class SparsePoly:
    """Polynomial over F_{q^m} stored as {exponent: nonzero coefficient}."""

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = {int(e): int(c) for e, c in (terms or {}).items() if c}

    @property
    def support(self) -> set[int]:
        return set(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max(self.terms) if self.terms else -1

    @property
    def min_exponent(self) -> int:
        return min(self.terms) if self.terms else -1

    def add(self, ctx: BigFieldCtx, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = ctx.add(out.get(e, 0), c)
        return SparsePoly(out)

    def scale(self, ctx: BigFieldCtx, a: int) -> "SparsePoly":
        return SparsePoly({e: ctx.mul(c, a) for e, c in self.terms.items()})

    def evaluate(self, ctx: BigFieldCtx, points) -> np.ndarray:
        points = np.asarray(points, dtype=np.int64)
        acc = np.zeros_like(points)
        for e, c in self.terms.items():
            acc = np.asarray(ctx.add(acc, ctx.mul(c, ctx.power(points, e))))
        return acc

    def __eq__(self, other):
        return isinstance(other, SparsePoly) and self.terms == other.terms

    def __repr__(self):
        body = " + ".join(f"{c:#x}*T^{e}" for e, c in sorted(self.terms.items()))
        return f"SparsePoly({body or '0'})"


def expand_f(ctx: BigFieldCtx, alpha: int, beta: int, delta: int) -> SparsePoly:
    """Tr(alpha T) Tr(beta delta T) - Tr(alpha delta T) Tr(beta T) as a polynomial in T."""
    q, m = ctx.q, ctx.m
    fa = [ctx.frobenius(alpha, i) for i in range(m)]
    fb = [ctx.frobenius(beta, i) for i in range(m)]
    fd = [ctx.frobenius(delta, i) for i in range(m)]
    terms = {}
    for i, j in minor_indices(m):
        left = ctx.sub(ctx.mul(fa[i], fb[j]), ctx.mul(fb[i], fa[j]))
        right = ctx.sub(fd[j], fd[i])
        terms[q ** i + q ** j] = ctx.mul(left, right)
    return SparsePoly(terms)


def allowed_exponent_set(ctx: BigFieldCtx, delta: int) -> set[int]:
    if delta == 0 or ctx.in_prime_subfield(delta):
        raise ValueError("delta must lie outside F_q")
    d = ctx.subfield_degree(delta)
    q = ctx.q
    return {q ** i + q ** j for i, j in minor_indices(ctx.m) if (j - i) % d}


def projected_dimension(m: int, d: int) -> int:
    return comb(m, 2) - comb(m // d, 2) * d


def eval_on_orbit(ctx: BigFieldCtx, poly: SparsePoly, orbit: Orbit) -> np.ndarray:
    allowed = allowed_exponent_set(ctx, orbit.delta)
    if not poly.support <= allowed:
        raise ValueError(f"exponents {sorted(poly.support - allowed)} are not allowed on this orbit")
    return poly.evaluate(ctx, ctx.exp(np.arange(orbit.size)))


@dataclass
class OrbitCode:
    ctx: BigFieldCtx = field(repr=False)
    orbit: Orbit = field(repr=False)
    columns: list[int]                  # global coordinate positions of the orbit
    Gproj: np.ndarray = field(repr=False)
    scales: np.ndarray = field(repr=False)
    allowed_exponents: set[int]
    dim: int = field(init=False)
    parity_proj: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        q = self.ctx.q
        self.dim = linalg.rank(self.Gproj, q)
        self.parity_proj = linalg.nullspace(self.Gproj, q)
        self._inv_scales = np.array([pow(int(s), -1, q) for s in self.scales], dtype=np.int64)

    @property
    def N(self) -> int:
        return len(self.columns)

    @property
    def d(self) -> int:
        return self.orbit.d

    def is_full(self) -> bool:
        q, m = self.ctx.q, self.ctx.m
        return self.N == (q ** m - 1) // (q - 1)

    def is_codeword(self, word) -> bool:
        return not np.any((self.parity_proj @ np.asarray(word, dtype=np.int64)) % self.ctx.q)

    def word_to_values(self, word) -> np.ndarray:
        """Codeword coordinates -> polynomial values at gamma^0..gamma^{N-1}."""
        return (np.asarray(word, dtype=np.int64) * self.scales) % self.ctx.q

    def values_to_word(self, values) -> np.ndarray:
        values = np.asarray(values, dtype=np.int64)
        if np.any(values >= self.ctx.q):
            raise ValueError("values do not lie in F_q")
        return (values * self._inv_scales) % self.ctx.q

    def message_poly(self, msg) -> SparsePoly:
        """Sparse polynomial whose orbit evaluation is the scaled projection of msg * G."""
        ctx = self.ctx
        theta = ctx.dual_basis
        acc = SparsePoly()
        for coeff, (i, j) in zip(np.asarray(msg).tolist(), minor_indices(ctx.m)):
            if coeff % ctx.q:
                f = expand_f(ctx, theta[i], theta[j], self.orbit.delta)
                acc = acc.add(ctx, f.scale(ctx, coeff % ctx.q))
        return acc

    def to_json(self) -> dict:
        return {
            "delta_log": self.orbit.delta_log,
            "dim": self.dim,
            "allowed_exponents": sorted(self.allowed_exponents),
            "scales": "".join(str(int(s)) for s in self.scales),
        }


def orbit_scales(ctx: BigFieldCtx, orbit: Orbit) -> np.ndarray:
    """Determinant taking the RREF basis of each orbit point to (gamma^i, gamma^i delta)."""
    out = np.zeros(orbit.size, dtype=np.int64)
    for i, P in enumerate(orbit.points):
        g = ctx.exp(i)
        natural = plucker(ctx, g, ctx.mul(g, orbit.delta))
        canon = plucker(ctx, P.alpha, P.beta)
        c = int(np.nonzero(canon)[0][0])
        out[i] = (natural[c] * pow(int(canon[c]), -1, ctx.q)) % ctx.q
        if np.any((canon * out[i] - natural) % ctx.q):
            raise AssertionError("orbit point does not match gamma^i * <1, delta>")
    return out


def build_orbit_code(ctx: BigFieldCtx, parent: LinearCode, orbit: Orbit) -> OrbitCode:
    """Projection of `parent` onto the columns of `orbit`."""
    index = {P: pos for pos, P in enumerate(parent.coordinate_index)}
    columns = [index[P] for P in orbit.points]
    allowed = allowed_exponent_set(ctx, orbit.delta)
    return OrbitCode(ctx, orbit, columns, parent.G[:, columns].copy(),
                     orbit_scales(ctx, orbit), allowed)

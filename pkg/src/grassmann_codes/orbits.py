"""Planes of G(2, m) inside F_{q^m} and their orbits under multiplication by gamma."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .field import BigFieldCtx


def gaussian_binomial(m: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^m."""
    if k < 0 or k > m:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@dataclass(frozen=True, eq=False)
class Plane:
    """A 2-dimensional F_q-subspace <alpha, beta> of F_{q^m}.

    alpha and beta are the rows of the reduced row-echelon form of the 2 x m
    coordinate matrix; canon_key packs those rows as base-q integers.  Equality
    and hashing use canon_key only.
    """
    alpha: int
    beta: int
    canon_key: tuple[int, int]

    def __eq__(self, other):
        return isinstance(other, Plane) and self.canon_key == other.canon_key

    def __hash__(self):
        return hash(self.canon_key)

    def __repr__(self):
        return f"Plane<{self.alpha:#x}, {self.beta:#x}>"


class PlaneFactory:
    """Canonicalisation and the gamma-action for one field, with python-level
    lookup tables (these loops dominate enumeration time)."""

    def __init__(self, ctx: BigFieldCtx):
        self.ctx = ctx
        self.q = ctx.q
        self.m = ctx.m
        self._coords = [tuple(r) for r in ctx.fq_coordinates(ctx.elements()).tolist()]
        self._exp = ctx.exp_table.tolist()
        self._log = ctx.log_table.tolist()
        self._order = ctx.order
        self._pack_w = [self.q ** i for i in range(self.m)]
        self._from_packed = [0] * ctx.size
        for a, row in enumerate(self._coords):
            self._from_packed[self._pack(row)] = a

    def _pack(self, row) -> int:
        return sum(c * w for c, w in zip(row, self._pack_w))

    def _mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def canonical_rows(self, a: int, b: int):
        """RREF rows (as coordinate lists) of the span of a, b; None if rank < 2."""
        q, m = self.q, self.m
        r0 = list(self._coords[a])
        r1 = list(self._coords[b])
        c0 = next((c for c in range(m) if r0[c] or r1[c]), None)
        if c0 is None:
            return None
        if r0[c0] == 0:
            r0, r1 = r1, r0
        s = pow(r0[c0], -1, q)
        r0 = [(x * s) % q for x in r0]
        f = r1[c0]
        if f:
            r1 = [(y - f * x) % q for x, y in zip(r0, r1)]
        c1 = next((c for c in range(c0 + 1, m) if r1[c]), None)
        if c1 is None:
            return None
        s = pow(r1[c1], -1, q)
        r1 = [(x * s) % q for x in r1]
        f = r0[c1]
        if f:
            r0 = [(x - f * y) % q for x, y in zip(r0, r1)]
        return r0, r1

    def plane(self, a: int, b: int) -> Plane:
        rows = self.canonical_rows(int(a), int(b))
        if rows is None:
            raise ValueError(f"{a:#x} and {b:#x} are F_q-dependent")
        k0, k1 = self._pack(rows[0]), self._pack(rows[1])
        return Plane(self._from_packed[k0], self._from_packed[k1], (k0, k1))

    def act(self, g: int, P: Plane) -> Plane:
        if g == 0:
            raise ValueError("the action is only defined for nonzero multipliers")
        return self.plane(self._mul(g, P.alpha), self._mul(g, P.beta))

    def act_gamma_power(self, i: int, P: Plane) -> Plane:
        return self.act(self._exp[i % self._order], P)


def factory(ctx: BigFieldCtx) -> PlaneFactory:
    f = getattr(ctx, "_plane_factory", None)
    if f is None:
        f = ctx._plane_factory = PlaneFactory(ctx)
    return f


def make_plane(ctx: BigFieldCtx, a: int, b: int) -> Plane:
    return factory(ctx).plane(a, b)


def act(ctx: BigFieldCtx, g: int, P: Plane) -> Plane:
    return factory(ctx).act(int(g), P)


def enumerate_grassmannian(ctx: BigFieldCtx) -> list[Plane]:
    """All planes, generated directly as RREF matrices (pivot columns c0 < c1)."""
    q, m = ctx.q, ctx.m
    fac = factory(ctx)
    out = []
    for c0, c1 in itertools.combinations(range(m), 2):
        free0 = [c for c in range(c0 + 1, m) if c != c1]
        free1 = list(range(c1 + 1, m))
        for v0 in itertools.product(range(q), repeat=len(free0)):
            r0 = [0] * m
            r0[c0] = 1
            for c, x in zip(free0, v0):
                r0[c] = x
            for v1 in itertools.product(range(q), repeat=len(free1)):
                r1 = [0] * m
                r1[c1] = 1
                for c, x in zip(free1, v1):
                    r1[c] = x
                k0, k1 = fac._pack(r0), fac._pack(r1)
                out.append(Plane(fac._from_packed[k0], fac._from_packed[k1], (k0, k1)))
    return out


def stabilizer_size(ctx: BigFieldCtx, P: Plane) -> int:
    fac = factory(ctx)
    return sum(1 for g in ctx.nonzero().tolist() if fac.act(g, P) == P)


@dataclass
class Orbit:
    delta: int
    delta_log: int
    d: int
    points: list[Plane] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {
            "delta_log": self.delta_log,
            "delta": format(self.delta, "x"),
            "d": self.d,
            "size": self.size,
            "points": [list(P.canon_key) for P in self.points],
        }


def orbit_decompose(ctx: BigFieldCtx) -> list[Orbit]:
    """Partition G(2, m) into gamma-orbits by direct iteration of the action.

    Representatives are <1, delta> with delta of least discrete log, orbits are
    sorted by that log and points[i] = gamma^i * <1, delta>.
    """
    fac = factory(ctx)
    total = gaussian_binomial(ctx.m, 2, ctx.q)
    gamma = ctx.gamma
    visited: set[Plane] = set()
    orbits = []
    for l in range(1, ctx.order):
        if len(visited) == total:
            break
        delta = int(ctx.exp(l))
        if delta < ctx.q:           # delta in F_q: <1, delta> is not a plane
            continue
        start = fac.plane(1, delta)
        if start in visited:
            continue
        points = [start]
        cur = fac.act(gamma, start)
        while cur != start:
            points.append(cur)
            cur = fac.act(gamma, cur)
        visited.update(points)
        orbits.append(Orbit(delta, l, ctx.subfield_degree(delta), points))
    if len(visited) != total:
        raise AssertionError(f"orbits cover {len(visited)} planes, expected {total}")
    return orbits


def expected_orbit_sizes(q: int, m: int) -> list[int]:
    """Orbit sizes predicted by orbit-stabilizer (sorted descending)."""
    full = (q ** m - 1) // (q - 1)
    if m % 2:
        return [full] * ((q ** (m - 1) - 1) // (q * q - 1))
    n_full = q * (q ** (m - 2) - 1) // (q * q - 1)
    return [full] * n_full + [(q ** m - 1) // (q * q - 1)]


def count_nonsubfield_elements(ctx: BigFieldCtx) -> int:
    """Elements of F_{q^m} lying in no proper subfield that contains F_q."""
    if ctx.m < 3:
        raise ValueError("defined for m >= 3")
    a = ctx.elements()
    inside = np.zeros(ctx.size, dtype=bool)
    for d in range(1, ctx.m):
        if ctx.m % d == 0:
            inside |= np.asarray(ctx.frobenius(a, d)) == a
    return int(np.count_nonzero(~inside))

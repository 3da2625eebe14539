"""Bounded-distance decoding of evaluation codes over F_{q^m} (Welch-Berlekamp).

Works for any set of distinct evaluation points: one linear system
W(x_i) y_i = Q(x_i), deg W <= t, deg Q < k + t, solved by Gaussian
elimination, followed by an exact division Q / W.  Cost is cubic in N.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .field import BigFieldCtx


def poly_eval_batch(ctx: BigFieldCtx, coeffs, points) -> np.ndarray:
    """Horner evaluation; coeffs are listed from the constant term up."""
    points = np.asarray(points, dtype=np.int64)
    acc = np.zeros_like(points)
    for c in reversed(list(coeffs)):
        acc = np.asarray(ctx.add(ctx.mul(acc, points), c))
    return acc


def gf_rref(ctx: BigFieldCtx, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over F_{q^m}, pivots chosen left to right."""
    R = np.array(A, dtype=np.int64)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r, c:] = ctx.mul(R[r, c:], ctx.inv(int(R[r, c])))
        factors = R[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            R[np.ix_(hit, range(c, cols))] = ctx.sub(
                R[np.ix_(hit, range(c, cols))], ctx.mul(factors[hit, None], R[r, c:][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def _poly_divmod(ctx: BigFieldCtx, num: list[int], den: list[int]):
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    lead_inv = ctx.inv(den[-1])
    dq = len(num) - len(den) + 1
    if dq <= 0:
        return [], num
    quot = [0] * dq
    for i in range(dq - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c:
            c = ctx.mul(c, lead_inv)
            quot[i] = c
            for j, dj in enumerate(den):
                if dj:
                    num[i + j] = ctx.sub(num[i + j], ctx.mul(c, dj))
    return quot, num[:len(den) - 1]


@dataclass
class RsInstance:
    """Evaluation points, dimension k and radius t of one decoding problem.

    The columns of the key-equation system that belong to Q form a Vandermonde
    block that does not depend on the received word, so it is row-reduced once
    here: `_left` is the invertible transform with _left @ V = [I; 0].
    """
    ctx: BigFieldCtx = field(repr=False)
    points: np.ndarray = field(repr=False)
    k: int
    t: int

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=np.int64)
        N = len(self.points)
        if len(set(self.points.tolist())) != N:
            raise ValueError("evaluation points must be distinct")
        if self.k < 1 or self.t < 0 or 2 * self.t > N - self.k:
            raise ValueError(f"radius t={self.t} too large for an [{N}, {self.k}] code")
        # columns x_i^0 .. x_i^{k+t-1}
        V = np.zeros((N, self.k + self.t), dtype=np.int64)
        V[:, 0] = 1
        for j in range(1, V.shape[1]):
            V[:, j] = self.ctx.mul(V[:, j - 1], self.points)
        self._vander = V
        nq = V.shape[1]
        R, piv = gf_rref(self.ctx, np.hstack([V, np.eye(N, dtype=np.int64)]))
        assert piv[:nq] == list(range(nq)), "Vandermonde block must have full column rank"
        self._left = R[:, nq:]

    @property
    def N(self) -> int:
        return len(self.points)

    def key_equation_system(self, y) -> np.ndarray:
        """The full matrix [V_Q | -y * V_W] whose kernel holds (Q, W)."""
        y = np.asarray(y, dtype=np.int64)
        ctx, nq = self.ctx, self.k + self.t
        return np.hstack([self._vander, ctx.neg(ctx.mul(y[:, None], self._vander[:, :self.t + 1]))])

    def reduce_w_block(self, y) -> np.ndarray:
        """_left @ (-y * V_W); affine in y, which the list decoder exploits."""
        ctx = self.ctx
        B = ctx.neg(ctx.mul(np.asarray(y, dtype=np.int64)[:, None], self._vander[:, :self.t + 1]))
        return ctx.matmul(self._left, B)


def solve_reduced(inst: RsInstance, LB: np.ndarray, y) -> list[int] | None:
    """Finish a decode given the reduced W-block LB = _left @ (-y V_W).

    The kernel vector taken is the one with the first free column set to 1 and
    the other free columns 0, exactly as from a full RREF of the system.
    """
    ctx, k, t = inst.ctx, inst.k, inst.t
    nq = k + t
    S, spiv = gf_rref(ctx, LB[nq:])
    free = next((c for c in range(t + 1) if c not in set(spiv)), None)
    if free is None:
        return None
    w = np.zeros(t + 1, dtype=np.int64)
    w[free] = 1
    for row, pc in enumerate(spiv):
        if pc < free:
            w[pc] = ctx.neg(int(S[row, free]))
    Q = ctx.neg(ctx.sum(ctx.mul(LB[:nq], w[None, :]), axis=1)).tolist()
    quot, rem = _poly_divmod(ctx, Q, w.tolist())
    if any(rem) or any(quot[k:]):
        return None
    f = (quot + [0] * k)[:k]
    y = np.asarray(y, dtype=np.int64)
    dist = int(np.count_nonzero(poly_eval_batch(ctx, f, inst.points) != y))
    if dist > t:
        return None
    return f


def rs_decode(inst: RsInstance, y) -> list[int] | None:
    """Message polynomial (k coefficients, constant term first) within distance
    t of y, or None if there is none."""
    y = np.asarray(y, dtype=np.int64)
    if len(y) != inst.N:
        raise ValueError("received word has the wrong length")
    return solve_reduced(inst, inst.reduce_w_block(y), y)


def rs_decode_direct(inst: RsInstance, y) -> list[int] | None:
    """Same contract as rs_decode, by eliminating the whole key-equation system."""
    ctx, k, t = inst.ctx, inst.k, inst.t
    y = np.asarray(y, dtype=np.int64)
    A = inst.key_equation_system(y)
    R, pivots = gf_rref(ctx, A)
    pivset = set(pivots)
    free = next((c for c in range(A.shape[1]) if c not in pivset), None)
    if free is None:
        return None
    sol = np.zeros(A.shape[1], dtype=np.int64)
    sol[free] = 1
    for row, pc in enumerate(pivots):
        if pc < free:
            sol[pc] = ctx.neg(int(R[row, free]))
    W = sol[k + t:].tolist()
    if not any(W):
        return None
    quot, rem = _poly_divmod(ctx, sol[:k + t].tolist(), W)
    if any(rem) or any(quot[k:]):
        return None
    f = (quot + [0] * k)[:k]
    if np.count_nonzero(poly_eval_batch(ctx, f, inst.points) != y) > t:
        return None
    return f

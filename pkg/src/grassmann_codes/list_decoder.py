"""List decoding of one orbit code by q^m shifted Reed-Solomon decodes.

Codewords on a full orbit are evaluations of T^{q+1} g(T), where g has one
isolated top term b T^E (E = q^{m-1} + q^{m-2} - q - 1) and otherwise degree
< k_RS = q^{m-1} + q^{m-3} - q.  Dividing the received values by
gamma^{(q+1) i} and subtracting every possible top term leaves a word of the
smaller RS code for the right b.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .field import BigFieldCtx
from .orbit_code import OrbitCode, SparsePoly
from .rs import RsInstance, solve_reduced


def twist(ctx: BigFieldCtx, r, direction: int = 1) -> np.ndarray:
    """Entry i times gamma^(-(q+1) i) (direction=1) or gamma^((q+1) i) (direction=-1)."""
    r = np.asarray(r, dtype=np.int64)
    if direction not in (1, -1):
        raise ValueError("direction is 1 (divide) or -1 (multiply)")
    i = np.arange(len(r))
    return np.asarray(ctx.mul(r, ctx.exp(-direction * (ctx.q + 1) * i)))


def list_parameters(q: int, m: int) -> dict:
    N = (q ** m - 1) // (q - 1)
    k_rs = q ** (m - 1) + q ** (m - 3) - q
    return {
        "N": N,
        "k_rs": k_rs,
        "top_exponent": q ** (m - 1) + q ** (m - 2) - q - 1,
        "t": (N - k_rs) // 2,
    }


@dataclass
class OrbitDecodeResult:
    candidates: list[tuple[np.ndarray, SparsePoly]] = field(default_factory=list)
    b_hits: list[int] = field(default_factory=list)
    rejected: int = 0               # RS successes dropped by the codeword filters

    def __len__(self):
        return len(self.candidates)


class OrbitListDecoder:
    def __init__(self, oc: OrbitCode):
        ctx = oc.ctx
        if ctx.m < 3:
            raise ValueError("orbit list decoding needs m >= 3")
        if not oc.is_full():
            raise ValueError(f"orbit of size {oc.N} is deficient; list decoding refused")
        params = list_parameters(ctx.q, ctx.m)
        if ctx.q ** (ctx.m - 1) + ctx.q ** (ctx.m - 2) not in oc.allowed_exponents:
            raise ValueError("top exponent missing from the orbit's allowed set")
        self.oc = oc
        self.ctx = ctx
        self.top = params["top_exponent"]
        self.k_rs = params["k_rs"]
        self.t = params["t"]
        points = ctx.exp(np.arange(oc.N))
        self.inst = RsInstance(ctx, points, self.k_rs, self.t)
        self._top_vals = np.asarray(ctx.power(points, self.top))
        # reduced W-block contribution of one unit of b
        self._unit_b = self.inst.reduce_w_block(ctx.neg(self._top_vals))

    def decode(self, r) -> OrbitDecodeResult:
        ctx, oc = self.ctx, self.oc
        r = np.asarray(r, dtype=np.int64)
        if len(r) != oc.N:
            raise ValueError(f"word length {len(r)} != orbit size {oc.N}")
        y_hat = twist(ctx, oc.word_to_values(r))
        base = self.inst.reduce_w_block(y_hat)
        shift = ctx.q + 1
        out = OrbitDecodeResult()
        for b in range(ctx.size):
            LB = ctx.add(base, ctx.mul(b, self._unit_b)) if b else base
            y_b = ctx.sub(y_hat, ctx.mul(b, self._top_vals)) if b else y_hat
            g = solve_reduced(self.inst, LB, y_b)
            if g is None:
                continue
            terms = {shift + j: c for j, c in enumerate(g)}
            terms[shift + self.top] = b
            poly = SparsePoly(terms)
            word = self._accept(poly)
            if word is None:
                out.rejected += 1
                continue
            out.candidates.append((word, poly))
            out.b_hits.append(b)
        return out

    def _accept(self, poly: SparsePoly):
        oc = self.oc
        if not poly.support <= oc.allowed_exponents:
            return None
        vals = poly.evaluate(self.ctx, self.inst.points)
        if np.any(vals >= self.ctx.q):
            return None
        word = oc.values_to_word(vals)
        if not oc.is_codeword(word):
            return None
        return word


def orbit_list_decode(oc: OrbitCode, r) -> OrbitDecodeResult:
    return OrbitListDecoder(oc).decode(r)

"""The Grassmann code C(2, m): generator matrix, encoding, information sets."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import linalg
from .field import BigFieldCtx
from .orbits import Orbit, Plane, gaussian_binomial


def minor_indices(m: int) -> list[tuple[int, int]]:
    """Pairs (i, j), 0 <= i < j < m, in lexicographic order."""
    return list(itertools.combinations(range(m), 2))


def plucker(ctx: BigFieldCtx, a: int, b: int) -> np.ndarray:
    """2x2 minors x_i y_j - x_j y_i of the coordinate rows of a and b."""
    x = ctx.fq_coordinates(a)
    y = ctx.fq_coordinates(b)
    i, j = np.array(minor_indices(ctx.m), dtype=np.int64).reshape(-1, 2).T
    return (x[i] * y[j] - x[j] * y[i]) % ctx.q


def code_parameters(q: int, m: int) -> tuple[int, int, int]:
    """(n, k, d) of C(2, m)."""
    return gaussian_binomial(m, 2, q), comb(m, 2), q ** (2 * (m - 2))


@dataclass
class LinearCode:
    q: int
    G: np.ndarray
    coordinate_index: list[Plane] = field(default_factory=list, repr=False)
    parity: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.G = np.asarray(self.G, dtype=np.int64) % self.q
        self.parity = linalg.nullspace(self.G, self.q)

    @property
    def n(self) -> int:
        return self.G.shape[1]

    @property
    def k(self) -> int:
        return self.G.shape[0]

    def encode(self, msg) -> np.ndarray:
        msg = np.asarray(msg, dtype=np.int64)
        if msg.shape[-1] != self.k:
            raise ValueError(f"message length {msg.shape[-1]} != k = {self.k}")
        return (msg @ self.G) % self.q

    def is_codeword(self, c) -> bool:
        c = np.asarray(c, dtype=np.int64)
        return not np.any((self.parity @ c) % self.q)

    def find_information_set(self, positions) -> list[int] | None:
        """First k pivot positions of G restricted to `positions` (scanned in
        ascending coordinate order), or None if those columns have rank < k."""
        cols = sorted(set(int(p) for p in positions))
        _, piv = linalg.rref(self.G[:, cols], self.q)
        if len(piv) < self.k:
            return None
        return [cols[c] for c in piv]

    def reencode_from_info_set(self, info_set, values) -> np.ndarray:
        """The unique codeword agreeing with `values` on `info_set`."""
        info_set = list(info_set)
        if len(info_set) != self.k:
            raise ValueError("an information set has exactly k positions")
        try:
            inv = linalg.inverse(self.G[:, info_set], self.q)
        except np.linalg.LinAlgError:
            raise ValueError("positions are not an information set") from None
        msg = (np.asarray(values, dtype=np.int64) @ inv) % self.q
        return self.encode(msg)

    def all_codewords(self, limit: int = 2 ** 20) -> np.ndarray:
        if self.q ** self.k > limit:
            raise ValueError(f"q^k = {self.q ** self.k} exceeds the enumeration limit {limit}")
        msgs = np.array(list(itertools.product(range(self.q), repeat=self.k)), dtype=np.int64)
        return (msgs @ self.G) % self.q

    def brute_force_min_distance(self) -> int:
        words = self.all_codewords()
        weights = np.count_nonzero(words, axis=1)
        return int(weights[weights > 0].min())

    def nearest_codewords(self, r) -> tuple[int, np.ndarray]:
        """Exhaustive nearest-codeword search: (distance, all codewords at it)."""
        words = self.all_codewords()
        dist = np.count_nonzero(words != np.asarray(r)[None, :], axis=1)
        best = int(dist.min())
        return best, words[dist == best]

    def to_json(self) -> dict:
        return {
            "generator": matrix_to_json(self.G, self.q),
            "parity": matrix_to_json(self.parity, self.q),
        }


def build_code(ctx: BigFieldCtx, orbits: list[Orbit]) -> LinearCode:
    """Generator matrix of C(2, m) with columns in orbit-major order."""
    planes = [P for orb in orbits for P in orb.points]
    alphas = np.array([P.alpha for P in planes], dtype=np.int64)
    betas = np.array([P.beta for P in planes], dtype=np.int64)
    x = ctx.fq_coordinates(alphas)
    y = ctx.fq_coordinates(betas)
    rows = [(x[:, i] * y[:, j] - x[:, j] * y[:, i]) % ctx.q for i, j in minor_indices(ctx.m)]
    G = np.array(rows, dtype=np.int64).reshape(len(rows), len(planes))
    return LinearCode(ctx.q, G, planes)


# -- serialisation: q = 2 rows as bitmask ints (bit i = column i), else digit strings

def word_to_str(word) -> str:
    return "".join(str(int(v)) for v in word)


def word_from_str(s: str, q: int) -> np.ndarray:
    s = s.strip()
    if not s or any(not ch.isdigit() or int(ch) >= q for ch in s):
        raise ValueError(f"not a word over F_{q}: {s[:40]!r}")
    return np.array([int(ch) for ch in s], dtype=np.int64)


def matrix_to_json(M: np.ndarray, q: int) -> list:
    if q == 2:
        return [int(sum(1 << i for i, v in enumerate(row) if v)) for row in M.tolist()]
    return [word_to_str(row) for row in M.tolist()]


def matrix_from_json(rows: list, q: int, n: int) -> np.ndarray:
    if q == 2:
        return np.array([[(r >> i) & 1 for i in range(n)] for r in rows], dtype=np.int64).reshape(len(rows), n)
    return np.array([word_from_str(r, q) for r in rows], dtype=np.int64).reshape(len(rows), n)

"""Table-driven arithmetic in F_{q^m} for prime q.

Elements are plain integers in [0, q^m): the base-p digits (little-endian) are
the coefficients of the element in the polynomial basis 1, x, x^2, ...  The
modulus is taken from an embedded table of primitive polynomials, so the
generator gamma is always x and discrete logs are reproducible.

Every arithmetic method accepts either Python ints or numpy integer arrays and
returns the same kind.
"""
from __future__ import annotations

from functools import cached_property

import numpy as np

from ._primitive_table import PRIMITIVE_POLYS
from . import linalg

MAX_FIELD_SIZE = 2 ** 24


class UnsupportedParameters(ValueError):
    """Raised for (q, m) pairs outside what the tables cover."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _digits(v: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        out.append(v % p)
        v //= p
    return out


def _scalar_or_array(res):
    if isinstance(res, np.ndarray) and res.ndim == 0:
        return int(res)
    return res


class BigFieldCtx:
    """Arithmetic context for F_{q^m} over F_q (q prime).

    Immutable after construction; all methods are pure.
    """

    def __init__(self, q: int, m: int):
        if m < 1:
            raise UnsupportedParameters(f"extension degree must be positive, got m={m}")
        if not _is_prime(q):
            raise UnsupportedParameters(
                f"q={q} is not prime; prime-power subfields are not supported")
        if q ** m > MAX_FIELD_SIZE:
            raise UnsupportedParameters(f"q^m = {q ** m} exceeds the table bound 2^24")
        if (q, m) not in PRIMITIVE_POLYS:
            raise UnsupportedParameters(f"no primitive polynomial stored for (q, m)=({q}, {m})")
        self.p = q
        self.q = q
        self.m = m
        self.modulus = PRIMITIVE_POLYS[(q, m)]
        self.size = q ** m
        self.order = self.size - 1

        self._pow_p = np.array([q ** i for i in range(m)], dtype=np.int64)
        # digit table: row a holds the base-p digits of a
        idx = np.arange(self.size, dtype=np.int64)
        self.digit_table = (idx[:, None] // self._pow_p[None, :]) % q
        self.neg_table = ((-self.digit_table) % q) @ self._pow_p

        self.exp_table, self.log_table = self._build_tables()
        self.basis = self._greedy_basis()
        basis_digits = self.digit_table[self.basis]          # rows: basis elements
        self._coord_inv = linalg.inverse(basis_digits, q)    # digits -> coordinates

    # ------------------------------------------------------------------ tables
    def _build_tables(self):
        q, m, order = self.q, self.m, self.order
        mod_digits = _digits(self.modulus, q, m + 1)
        # reduction of x^m: x^m = -sum(mod_digits[i] x^i)
        xm = [(-c) % q for c in mod_digits[:m]]
        exp = np.zeros(2 * order if order else 2, dtype=np.int64)
        log = np.full(self.size, -1, dtype=np.int64)
        coeffs = [1] + [0] * (m - 1)
        if m == 1:
            gen = xm[0]
        for i in range(order):
            v = 0
            for c in reversed(coeffs):
                v = v * q + c
            exp[i] = v
            if log[v] != -1:
                raise AssertionError("modulus is not primitive")
            log[v] = i
            if m == 1:
                coeffs = [(coeffs[0] * gen) % q]
            else:
                top = coeffs[-1]
                coeffs = [0] + coeffs[:-1]
                if top:
                    coeffs = [(c + top * r) % q for c, r in zip(coeffs, xm)]
        if order:
            exp[order:] = exp[:order]
        return exp, log

    def _greedy_basis(self) -> list[int]:
        kept: list[int] = []
        rows: list[list[int]] = []
        i = 0
        while len(kept) < self.m:
            g = int(self.exp_table[i % self.order]) if self.order else 1
            trial = rows + [list(self.digit_table[g])]
            if linalg.rank(np.array(trial, dtype=np.int64), self.p) == len(trial):
                kept.append(g)
                rows = trial
            i += 1
        return kept

    # ------------------------------------------------------------- properties
    @property
    def gamma(self) -> int:
        return self.exp(1)

    @cached_property
    def prime_subfield(self) -> np.ndarray:
        """Elements a with a^q = a, i.e. F_q inside F_{q^m}."""
        return np.arange(self.q, dtype=np.int64)

    def __repr__(self):
        return f"BigFieldCtx(q={self.q}, m={self.m}, modulus={self.modulus:#x})"

    # ------------------------------------------------------------- arithmetic
    def add(self, a, b):
        if self.p == 2:
            return _scalar_or_array(np.bitwise_xor(a, b))
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        s = (self.digit_table[a] + self.digit_table[b]) % self.p
        return _scalar_or_array(s @ self._pow_p)

    def sum(self, a, axis=None):
        """Field sum of an array, over everything or along one axis."""
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return _scalar_or_array(np.bitwise_xor.reduce(a, axis=axis))
        digits = self.digit_table[a]             # trailing axis holds the digits
        if axis is None:
            s = digits.reshape(-1, self.m).sum(axis=0)
        else:
            s = digits.sum(axis=axis - 1 if axis < 0 else axis)
        return _scalar_or_array((s % self.p) @ self._pow_p)

    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        return self.sum(self.mul(A[..., :, :, None], B[..., None, :, :]), axis=-2)

    def neg(self, a):
        if self.p == 2:
            return a
        return _scalar_or_array(self.neg_table[np.asarray(a, dtype=np.int64)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la = self.log_table[a]
        lb = self.log_table[b]
        res = self.exp_table[la + lb]
        res = np.where((a == 0) | (b == 0), 0, res)
        return _scalar_or_array(res)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in F_{q^m}")
        return _scalar_or_array(self.exp_table[(-self.log_table[a]) % self.order])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e < 0:
            a = np.asarray(self.inv(a))
            e = -e
        if e == 0:
            return _scalar_or_array(np.ones_like(a))
        res = self.exp_table[(self.log_table[a] * e) % self.order]
        return _scalar_or_array(np.where(a == 0, 0, res))

    def exp(self, i):
        """gamma^i for any integer (array) exponent."""
        return _scalar_or_array(self.exp_table[np.asarray(i, dtype=np.int64) % self.order])

    def log(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("log of zero")
        return _scalar_or_array(self.log_table[a])

    # ------------------------------------------------------- structure maps
    def frobenius(self, a, i: int = 1):
        """a^(q^i)."""
        return self.power(a, self.q ** (i % self.m))

    def trace(self, a):
        """Absolute trace to F_q: sum of a^(q^i) for i < m."""
        acc = a
        for i in range(1, self.m):
            acc = self.add(acc, self.frobenius(a, i))
        return acc

    def subfield_degree(self, a: int) -> int:
        if a == 0:
            raise ValueError("subfield degree of zero is undefined")
        for d in range(1, self.m + 1):
            if self.m % d == 0 and self.frobenius(a, d) == a:
                return d
        raise AssertionError("unreachable: a^(q^m) = a for every a")

    def in_prime_subfield(self, a):
        return _scalar_or_array(np.asarray(a) < self.q)

    @cached_property
    def dual_basis(self) -> list[int]:
        """theta_i with Tr(theta_i * b_j) = [i == j], so coordinate i of x is Tr(theta_i x)."""
        b = np.array(self.basis, dtype=np.int64)
        gram = np.asarray(self.trace(self.mul(b[:, None], b[None, :])), dtype=np.int64)
        inv = linalg.inverse(gram, self.p)
        return [int(self.from_coordinates(row)) for row in inv]

    def fq_coordinates(self, a):
        """Coordinates of a in the greedy F_q-basis (shape (..., m))."""
        d = self.digit_table[np.asarray(a, dtype=np.int64)]
        return (d @ self._coord_inv) % self.p

    def from_coordinates(self, coords):
        coords = np.asarray(coords, dtype=np.int64) % self.p
        digits = (coords @ self.digit_table[self.basis]) % self.p
        return _scalar_or_array(digits @ self._pow_p)

    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)

    def nonzero(self) -> np.ndarray:
        """Nonzero elements in ascending discrete-log order."""
        return self.exp_table[:self.order].copy()

    def to_hex(self, a: int) -> str:
        return format(int(a), "x")

    def from_hex(self, s: str) -> int:
        v = int(s, 16)
        if not 0 <= v < self.size:
            raise ValueError(f"element {s!r} out of range for F_{self.size}")
        return v


def build_field(q: int, m: int) -> BigFieldCtx:
    return BigFieldCtx(q, m)

"""Truncated Dirichlet series as exact coefficient streams.

An ArithSeq holds the first N coefficients a(1), ..., a(N) of a Dirichlet
series.  Multiplying two series corresponds to Dirichlet convolution of the
streams, which is computed with the divisor-loop schedule in O(N log N); an
int64 numpy fast path covers the (overwhelmingly common) small-integer case
and falls back to exact Python integers on overflow risk.  Truncation bounds
propagate as the minimum over operands and reading past the bound is an
error, never a silent zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

import numpy as np


class OutOfRangeError(IndexError):
    """Requested a coefficient or partial sum beyond the truncation bound."""


# int64 convolution is overflow-safe when every |coefficient| < 2^20: each
# output entry sums at most a few hundred products, each below 2^40
_INT64_SAFE = 1 << 20


class ArithSeq:
    """Coefficients a(1..N) of a truncated Dirichlet series; 1-based access."""

    __slots__ = ("N", "_v")

    def __init__(self, values: Sequence, N: int | None = None):
        v = list(values)
        if N is not None and len(v) != N:
            raise ValueError("length does not match declared bound")
        if not v:
            raise ValueError("empty coefficient stream")
        self._v = v
        self.N = len(v)

    @staticmethod
    def from_function(f: Callable[[int], int], N: int) -> "ArithSeq":
        return ArithSeq([f(n) for n in range(1, N + 1)])

    def __getitem__(self, n: int):
        if not 1 <= n <= self.N:
            raise OutOfRangeError(f"index {n} outside [1, {self.N}]")
        return self._v[n - 1]

    def __len__(self):
        return self.N

    def __iter__(self):
        return iter(self._v)

    def __eq__(self, other):
        if not isinstance(other, ArithSeq):
            return NotImplemented
        n = min(self.N, other.N)
        return self._v[:n] == other._v[:n] and self.N == other.N

    def __repr__(self):
        head = ", ".join(str(x) for x in self._v[:8])
        return f"ArithSeq(N={self.N}: {head}{', ...' if self.N > 8 else ''})"

    def truncate(self, N: int) -> "ArithSeq":
        if N > self.N:
            raise OutOfRangeError(f"cannot extend {self.N} to {N}")
        return ArithSeq(self._v[:N])

    def scale(self, factor) -> "ArithSeq":
        return ArithSeq([factor * x for x in self._v])

    def __add__(self, other: "ArithSeq") -> "ArithSeq":
        n = min(self.N, other.N)
        return ArithSeq([a + b for a, b in zip(self._v[:n], other._v[:n])])

    def __sub__(self, other: "ArithSeq") -> "ArithSeq":
        n = min(self.N, other.N)
        return ArithSeq([a - b for a, b in zip(self._v[:n], other._v[:n])])

    def summatory(self, x: int):
        """Partial sum A(x) = a(1) + ... + a(x)."""
        if not 1 <= x <= self.N:
            raise OutOfRangeError(f"summatory bound {x} outside [1, {self.N}]")
        return sum(self._v[:x])

    def summatory_all(self) -> list:
        """Prefix sums A(1), ..., A(N)."""
        out = []
        acc = 0
        for v in self._v:
            acc += v
            out.append(acc)
        return out

    def _ints_within(self, bound: int) -> bool:
        return all(isinstance(v, int) and -bound < v < bound for v in self._v)


def convolve(f: ArithSeq, g: ArithSeq) -> ArithSeq:
    """Dirichlet convolution (f*g)(n) = sum over de=n of f(d) g(e)."""
    N = min(f.N, g.N)
    if f._ints_within(_INT64_SAFE) and g._ints_within(_INT64_SAFE):
        fa = np.asarray(f._v[:N], dtype=np.int64)
        ga = np.asarray(g._v[:N], dtype=np.int64)
        out = np.zeros(N + 1, dtype=np.int64)
        for d in range(1, N + 1):
            fd = fa[d - 1]
            if fd:
                out[d::d] += fd * ga[: N // d]
        return ArithSeq([int(v) for v in out[1:]])
    out = [0] * (N + 1)
    for d in range(1, N + 1):
        fd = f._v[d - 1]
        if fd:
            for j, e in enumerate(range(d, N + 1, d), start=1):
                out[e] += fd * g._v[j - 1]
    return ArithSeq(out[1:])


def delta_seq(N: int) -> ArithSeq:
    """Convolution identity (1, 0, 0, ...)."""
    return ArithSeq([1] + [0] * (N - 1))


def ones_seq(N: int) -> ArithSeq:
    """Coefficients of zeta(s)."""
    return ArithSeq([1] * N)


class DirichletCharacter:
    """Periodic totally multiplicative sign table."""

    def __init__(self, modulus: int, table: Sequence[int]):
        if len(table) != modulus:
            raise ValueError("table length must equal the modulus")
        self.modulus = modulus
        # table[r] is the value at n with n % modulus == r
        self.table = tuple(table)

    def __call__(self, n: int) -> int:
        return self.table[n % self.modulus]


# quadratic characters mod 4 and mod 3
CHI_MINUS4 = DirichletCharacter(4, (0, 1, 0, -1))
CHI_MINUS3 = DirichletCharacter(3, (0, 1, -1))


def character_seq(chi: DirichletCharacter, N: int) -> ArithSeq:
    return ArithSeq([chi(n) for n in range(1, N + 1)])


def moebius_seq(N: int) -> ArithSeq:
    """Moebius function by sieve (coefficients of 1/zeta(s))."""
    mu = np.ones(N + 1, dtype=np.int64)
    primes = []
    is_comp = np.zeros(N + 1, dtype=bool)
    lp = np.zeros(N + 1, dtype=np.int64)
    for i in range(2, N + 1):
        if not is_comp[i]:
            primes.append(i)
            lp[i] = i
            mu[i] = -1
        for p in primes:
            if p * i > N or p > lp[i]:
                break
            is_comp[p * i] = True
            lp[p * i] = p
            mu[p * i] = 0 if i % p == 0 else -mu[i]
    return ArithSeq([int(v) for v in mu[1:]])


def inv_zeta_2s(N: int) -> ArithSeq:
    """Coefficients of 1/zeta(2s): mu(sqrt(n)) at perfect squares, else 0."""
    import math

    mu = moebius_seq(math.isqrt(N))
    out = [0] * N
    for r in range(1, mu.N + 1):
        out[r * r - 1] = mu[r]
    return ArithSeq(out)


def alt_euler_factor(m: int, N: int) -> ArithSeq:
    """Coefficients of 1/(1 + m^{-s}): (-1)^j at n = m^j."""
    if m < 2:
        raise ValueError("base must be at least 2")
    out = [0] * N
    power, sign = 1, 1
    while power <= N:
        out[power - 1] = sign
        power *= m
        sign = -sign
    return ArithSeq(out)


def shift_support(f: ArithSeq, m: int) -> ArithSeq:
    """Multiplication by m^{-s}: value f(n/m) when m | n, else 0."""
    if m < 1:
        raise ValueError("shift base must be positive")
    if m == 1:
        return f
    out = [0] * f.N
    for j in range(1, f.N // m + 1):
        out[m * j - 1] = f[j]
    return ArithSeq(out)


def summatory(f: ArithSeq, x: int):
    return f.summatory(x)


def evaluate(f: ArithSeq, s: float) -> float:
    """Float value of the truncated series sum a(n) / n^s."""
    n = np.arange(1, f.N + 1, dtype=np.float64)
    a = np.asarray([float(v) for v in f._v], dtype=np.float64)
    return float(np.sum(a * n ** (-s)))


def to_fraction_seq(f: ArithSeq) -> ArithSeq:
    return ArithSeq([Fraction(v) for v in f._v])

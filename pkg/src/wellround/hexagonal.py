"""Counting sublattices of the hexagonal lattice by geometric type.

Similar sublattices of the Eisenstein integers are counted by the divisor
sum of the quadratic character mod 3.  Well-rounded sublattices decompose
into the hexagonal ones (exactly the similar sublattices here; square type
is impossible) and rhombic ones parametrized by p, q of equal parity with
p < q < 3p and a primitive generator z, giving index pq|z|^2 (even case
scaled by 4) with a three-fold orientation multiplicity.  The parameter
pairs (p, q, z) and (3q, p, w) describe the same sublattice, which is
absorbed by restricting z away from the ramified prime, the 1/(1 + 3^{-s})
factor below.
"""

from __future__ import annotations

from .dirichlet import (
    CHI_MINUS3,
    ArithSeq,
    alt_euler_factor,
    character_seq,
    convolve,
    inv_zeta_2s,
    ones_seq,
    shift_support,
)


def b_hex(N: int) -> ArithSeq:
    """Similar sublattices of the hexagonal lattice by index."""
    return convolve(ones_seq(N), character_seq(CHI_MINUS3, N))


def b_hex_primitive(N: int) -> ArithSeq:
    return convolve(inv_zeta_2s(N), b_hex(N))


def _pairs_band(N: int) -> ArithSeq:
    """w(n) = number of factorizations n = p*q with p < q < 3p."""
    out = [0] * N
    p = 1
    while p * (p + 1) <= N:
        for q in range(p + 1, min(3 * p - 1, N // p) + 1):
            out[p * q - 1] += 1
        p += 1
    return ArithSeq(out)


def _pairs_odd_band(N: int) -> ArithSeq:
    """Odd analogue at n = (2k+1)(2l+1) with 1 <= k < l <= 3k."""
    out = [0] * N
    k = 1
    while (2 * k + 1) * (2 * k + 3) <= N:
        p = 2 * k + 1
        for l in range(k + 1, 3 * k + 1):
            q = 2 * l + 1
            if p * q > N:
                break
            out[p * q - 1] += 1
        k += 1
    return ArithSeq(out)


def hex_pair_counts(parity: str, N: int) -> ArithSeq:
    if parity == "any":
        return _pairs_band(N)
    if parity == "odd":
        return _pairs_odd_band(N)
    raise ValueError(f"unknown parity {parity!r}")


def a_hex(N: int) -> ArithSeq:
    """Well-rounded sublattices of the hexagonal lattice by index."""
    bpr_off_ramified = convolve(alt_euler_factor(3, N), b_hex_primitive(N))
    even = shift_support(convolve(_pairs_band(N), bpr_off_ramified), 4).scale(3)
    odd = convolve(_pairs_odd_band(N), bpr_off_ramified).scale(3)
    return b_hex(N) + even + odd

"""Numeric layer: constants, growth models, tail bounds, Epstein zeta sums.

This is the only module that touches floating point.  Everything exact
(coefficient streams, censuses, window counts) lives elsewhere; here those
streams are compared against the closed-form constants and the truncated
analytic objects that describe their growth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, log, pi, sqrt

import mpmath
import numpy as np

from .dirichlet import ArithSeq


class UnsupportedDiscriminantError(ValueError):
    pass


class DomainError(ValueError):
    pass


LOG3 = log(3.0)
ZETA2 = pi * pi / 6.0


def euler_gamma(N: int = 100_000) -> float:
    """Euler-Mascheroni constant by Euler-Maclaurin corrected harmonic sum."""
    H = float(np.sum(1.0 / np.arange(1, N + 1, dtype=np.float64)))
    n = float(N)
    return H - log(n) - 1.0 / (2 * n) + 1.0 / (12 * n * n) - 1.0 / (120 * n**4)


def zeta_prime_2_over_zeta_2(N: int = 1_000_000) -> float:
    """zeta'(2)/zeta(2) from the log-weighted sum with an integral tail."""
    n = np.arange(1, N + 1, dtype=np.float64)
    partial = float(np.sum(np.log(n) / (n * n)))
    x = float(N)
    tail = (log(x) + 1.0) / x - log(x) / (2 * x * x) - (1.0 - 2 * log(x)) / (12 * x**3)
    return -(partial + tail) / ZETA2


_CHI = {-4: (0, 1, 0, -1), -3: (0, 1, -1)}


def _chi(D: int, n: int) -> int:
    if D not in _CHI:
        raise UnsupportedDiscriminantError(f"discriminant {D} not supported")
    table = _CHI[D]
    return table[n % len(table)]


def L_at_one(D: int) -> float:
    """L(1, chi_D) from the finite character sum."""
    if D not in (-4, -3):
        raise UnsupportedDiscriminantError(f"discriminant {D} not supported")
    q = abs(D)
    total = sum(n * _chi(D, n) for n in range(1, q))
    return -pi / q ** 1.5 * total


def _agm(x: float, y: float) -> float:
    while abs(x - y) > 1e-16 * abs(x):
        x, y = (x + y) / 2.0, sqrt(x * y)
    return (x + y) / 2.0


def L_prime_over_L(D: int) -> float:
    """Logarithmic derivative L'(1, chi_D)/L(1, chi_D), AGM closed form."""
    g = euler_gamma()
    if D == -4:
        return log(_agm(1.0, sqrt(2.0)) ** 2 * math.exp(g) / 2.0)
    if D == -3:
        # exponent 4/3: agm(1, cos(pi/12)) = 2^{4/3} pi^2 / (3^{1/4} Gamma(1/3)^3)
        return log(2.0 ** (4.0 / 3.0) * _agm(1.0, math.cos(pi / 12.0)) ** 2 * math.exp(g) / 3.0)
    raise UnsupportedDiscriminantError(f"discriminant {D} not supported")


def L_prime_over_L_gamma_form(D: int) -> float:
    """Same quantity through Gamma-function identities (consistency check)."""
    g = euler_gamma()
    if D == -4:
        return log(math.gamma(0.75) ** 4 * math.exp(g) / pi)
    if D == -3:
        return log(2.0**4 * pi**4 * math.exp(g) / (3.0**1.5 * math.gamma(1.0 / 3.0) ** 6))
    raise UnsupportedDiscriminantError(f"discriminant {D} not supported")


# -- the two lattice constants ------------------------------------------------


def _harmonic_prefix(n: int) -> np.ndarray:
    # H[k] = 1 + 1/2 + ... + 1/k, H[0] = 0
    out = np.empty(n + 1, dtype=np.float64)
    out[0] = 0.0
    np.cumsum(1.0 / np.arange(1, n + 1, dtype=np.float64), out=out[1:])
    return out


def _odd_harmonic_prefix(n: int) -> np.ndarray:
    # OH[k] = 1 + 1/3 + ... + 1/(2k+1)
    out = np.cumsum(1.0 / (2.0 * np.arange(0, n + 1, dtype=np.float64) + 1.0))
    return out


def _floor_sqrt3_times(p: np.ndarray) -> np.ndarray:
    """Largest integer q with q^2 < 3 p^2, elementwise and exactly."""
    q = np.floor(np.sqrt(3.0) * p.astype(np.float64)).astype(np.int64)
    q += (q + 1) ** 2 < 3 * p * p
    q -= q * q >= 3 * p * p
    return q


def _band_gap_sum_square(P: int) -> float:
    """sum_p (1/p)(log3/2 - sum_{p<q<sqrt(3)p} 1/q), truncated at P terms."""
    p = np.arange(1, P + 1, dtype=np.int64)
    qmax = _floor_sqrt3_times(p)
    H = _harmonic_prefix(int(qmax[-1]))
    inner = H[qmax] - H[p]
    return float(np.sum((LOG3 / 2.0 - inner) / p))


def _band_gap_sum_square_odd(P: int) -> float:
    """sum_k (1/(2k+1))(log3/4 - sum_window 1/(2l+1)) over 0 <= k < P."""
    k = np.arange(0, P, dtype=np.int64)
    pp = 2 * k + 1
    qmax = _floor_sqrt3_times(pp)
    lmax = (qmax - 1) // 2
    OH = _odd_harmonic_prefix(int(lmax[-1]))
    inner = OH[lmax] - OH[k]
    return float(np.sum((LOG3 / 4.0 - inner) / pp))


def _band_gap_sum_hex(P: int) -> float:
    """sum_p (1/p)(log3 - sum_{p<q<=3p-1} 1/q), truncated at P terms."""
    p = np.arange(1, P + 1, dtype=np.int64)
    H = _harmonic_prefix(3 * P)
    inner = H[3 * p - 1] - H[p]
    return float(np.sum((LOG3 - inner) / p))


def _band_gap_sum_hex_odd(P: int) -> float:
    """sum_k (4/(2k+1))(log3/2 - sum_{k<l<=3k} 1/(2l+1)) over 0 <= k < P."""
    k = np.arange(0, P, dtype=np.int64)
    OH = _odd_harmonic_prefix(3 * (P - 1) if P > 1 else 0)
    inner = OH[3 * k] - OH[k]
    return float(np.sum(4.0 * (LOG3 / 2.0 - inner) / (2 * k + 1)))


def _richardson(term, P: int) -> float:
    # partial sums approach the limit like A/P; eliminate the leading tail
    return 2.0 * term(2 * P) - term(P)


def c_square_eval(P: int = 400_000) -> tuple[float, float]:
    """Linear-term constant of the square lattice growth law, with error estimate."""
    g = euler_gamma()
    L = L_at_one(-4)
    lpl = L_prime_over_L(-4)
    zp = zeta_prime_2_over_zeta_2()
    s1 = _richardson(_band_gap_sum_square, P)
    s2 = _richardson(_band_gap_sum_square_odd, P)
    bracket = (
        ZETA2
        + (LOG3 / 3.0) * (lpl + g - 2.0 * zp)
        + (LOG3 / 3.0) * (2.0 * g - LOG3 / 4.0 - log(2.0) / 6.0)
        - s1
        - (4.0 / 3.0) * s2
    )
    err = abs(
        _richardson(_band_gap_sum_square, P // 2) - s1
    ) + 4.0 / 3.0 * abs(_richardson(_band_gap_sum_square_odd, P // 2) - s2)
    return L / ZETA2 * bracket, L / ZETA2 * err + 1e-9


def c_triangle_eval(P: int = 400_000) -> tuple[float, float]:
    """Linear-term constant of the hexagonal lattice growth law, with error estimate."""
    g = euler_gamma()
    L = L_at_one(-3)
    lpl = L_prime_over_L(-3)
    zp = zeta_prime_2_over_zeta_2()
    t1 = _richardson(_band_gap_sum_hex, P)
    t2 = _richardson(_band_gap_sum_hex_odd, P)
    # the band-gap sums enter without the log 3 factor carried by the
    # constant part of the bracket
    bracket = LOG3 * ((g + lpl - 2.0 * zp) + 2.0 * g - LOG3 / 4.0) - t1 - t2
    scale = 9.0 * L / (16.0 * ZETA2)
    err = scale * (
        abs(_richardson(_band_gap_sum_hex, P // 2) - t1)
        + abs(_richardson(_band_gap_sum_hex_odd, P // 2) - t2)
    )
    return L + scale * bracket, err + 1e-9


# -- growth models ------------------------------------------------------------


@dataclass(frozen=True)
class AsymptoticModel:
    c1: float
    c2: float
    error_exponent: float = 0.75
    description: str = ""

    def __post_init__(self):
        if self.c1 < 0:
            raise ValueError("x log x coefficient must be nonnegative")

    def __call__(self, x: float) -> float:
        return self.c1 * x * log(x) + self.c2 * x


def square_model() -> AsymptoticModel:
    c1 = LOG3 / (2.0 * pi)
    return AsymptoticModel(c1, c_square_eval()[0] - c1, 0.75, "square lattice")


def hexagonal_model() -> AsymptoticModel:
    c1 = 3.0 * sqrt(3.0) * LOG3 / (8.0 * pi)
    return AsymptoticModel(c1, c_triangle_eval()[0] - c1, 0.75, "hexagonal lattice")


def model_report(counts: ArithSeq, model: AsymptoticModel, checkpoints) -> list[dict]:
    """Residual table of the summatory counts against c1 x log x + c2 x."""
    rows = []
    prefix = counts.summatory_all()
    for x in checkpoints:
        if x > counts.N:
            from .dirichlet import OutOfRangeError

            raise OutOfRangeError(f"checkpoint {x} beyond bound {counts.N}")
        A = prefix[x - 1]
        m = model(x)
        resid = A - m
        rows.append(
            {
                "x": x,
                "A": A,
                "model": m,
                "residual": resid,
                "residual_over_x_power": resid / (x**model.error_exponent * log(x)),
                "residual_over_sqrt_x": resid / sqrt(x),
            }
        )
    return rows


@dataclass(frozen=True)
class ConstantsTable:
    L1_chi4: float
    L1_chi3: float
    Lp_over_L_chi4: float
    Lp_over_L_chi3: float
    euler_gamma: float
    zeta2: float
    zetap2_over_zeta2: float
    c_square: float
    c_triangle: float
    errors: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        def entry(v, e):
            return {"value": v, "abs_error": e}

        e = self.errors
        return {
            "L1_chi4": entry(self.L1_chi4, 1e-14),
            "L1_chi3": entry(self.L1_chi3, 1e-14),
            "Lp_over_L_chi4": entry(self.Lp_over_L_chi4, 1e-10),
            "Lp_over_L_chi3": entry(self.Lp_over_L_chi3, 1e-10),
            "euler_gamma": entry(self.euler_gamma, 1e-12),
            "zeta2": entry(self.zeta2, 1e-15),
            "zetap2_over_zeta2": entry(self.zetap2_over_zeta2, 1e-10),
            "c_square": entry(self.c_square, e.get("c_square", 1e-5)),
            "c_triangle": entry(self.c_triangle, e.get("c_triangle", 1e-5)),
        }


def constants_table() -> ConstantsTable:
    csq, esq = c_square_eval()
    ctr, etr = c_triangle_eval()
    return ConstantsTable(
        L1_chi4=L_at_one(-4),
        L1_chi3=L_at_one(-3),
        Lp_over_L_chi4=L_prime_over_L(-4),
        Lp_over_L_chi3=L_prime_over_L(-3),
        euler_gamma=euler_gamma(),
        zeta2=ZETA2,
        zetap2_over_zeta2=zeta_prime_2_over_zeta_2(),
        c_square=csq,
        c_triangle=ctr,
        errors={"c_square": esq, "c_triangle": etr},
    )


# -- interval tail bounds -----------------------------------------------------


def interval_sum_bounds(l: int, alpha: float, beta: float, gamma: float, s: float):
    """Bounds straddling sum over l < n < alpha*l + beta of 1/(n+gamma)^s.

    Returns (lower, upper, exact) with lower < exact < upper, where upper is
    the integral of (x+gamma)^(-s) over [l, alpha*l+beta] and lower is that
    integral minus the first summand bound.
    """
    if l < 1 or alpha <= 1 or beta < 0 or not 0 <= gamma < 1 or s < 0:
        raise DomainError("parameters outside the valid range")
    top = alpha * l + beta
    if s == 1.0:
        integral = log((top + gamma) / (l + gamma))
    else:
        integral = ((top + gamma) ** (1 - s) - (l + gamma) ** (1 - s)) / (1 - s)
    exact = 0.0
    n = l + 1
    while n < top:
        exact += (n + gamma) ** (-s)
        n += 1
    return integral - (l + gamma) ** (-s), integral, exact


# -- truncated Dirichlet evaluation and sandwiches ----------------------------


def L_chi(D: int, s: float) -> float:
    """L(s, chi_D) through Hurwitz zeta values."""
    if D == -4:
        return float(4.0**-s * (mpmath.zeta(s, Fraction(1, 4)) - mpmath.zeta(s, Fraction(3, 4))))
    if D == -3:
        return float(3.0**-s * (mpmath.zeta(s, Fraction(1, 3)) - mpmath.zeta(s, Fraction(2, 3))))
    raise UnsupportedDiscriminantError(f"discriminant {D} not supported")


def zeta(s: float) -> float:
    return float(mpmath.zeta(s))


def dirichlet_value(f: ArithSeq, s: float) -> float:
    from .dirichlet import evaluate

    return evaluate(f, s)


def D_square(s: float) -> float:
    return (
        (2.0 + 2.0**s)
        / (1.0 + 2.0**s)
        * (1.0 - sqrt(3.0) ** (1.0 - s))
        / (s - 1.0)
        * L_chi(-4, s)
        / zeta(2 * s)
        * zeta(s)
        * zeta(2 * s - 1.0)
    )


def phi_square(s: float) -> float:
    return zeta(s) * L_chi(-4, s)


def D_hex(s: float) -> float:
    return (
        0.5
        * 3.0
        / (1.0 + 3.0**-s)
        * (1.0 - 3.0 ** (1.0 - s))
        / (s - 1.0)
        * L_chi(-3, s)
        / zeta(2 * s)
        * zeta(s)
        * zeta(2 * s - 1.0)
    )


def E_hex(s: float) -> float:
    return 3.0 / (1.0 + 3.0**-s) * L_chi(-3, s) * zeta(s)


def _truncated_with_error(series_fn, s: float, N: int) -> tuple[float, float]:
    full = dirichlet_value(series_fn(N), s)
    half = dirichlet_value(series_fn(N // 2), s)
    return full, 2.0 * abs(full - half) + 1e-12


def sandwich_check_square(s: float, N: int = 50_000) -> bool:
    """Strict two-sided bound on the well-rounded series of the square lattice."""
    from .square import a_square

    phi_wr, err = _truncated_with_error(a_square, s, N)
    lower = D_square(s) - phi_square(s)
    upper = D_square(s) + phi_square(s)
    return lower < phi_wr + err and phi_wr - err < upper


def sandwich_check_hex(s: float, N: int = 50_000) -> bool:
    """Two-sided bound on the well-rounded series of the hexagonal lattice.

    The interval-sum lemma bounds the rhombic contribution between
    D - E and D, so the full series (rhombic plus similar sublattices)
    sits strictly between phi + D - E and phi + D with phi = zeta * L.
    """
    from .hexagonal import a_hex

    phi_wr, err = _truncated_with_error(a_hex, s, N)
    phi = zeta(s) * L_chi(-3, s)
    lower = phi + D_hex(s) - E_hex(s)
    upper = phi + D_hex(s)
    return lower < phi_wr + err and phi_wr - err < upper


# -- Epstein zeta sums --------------------------------------------------------


def _form_floats(Q) -> tuple[float, float, float]:
    a, b, c = (float(v) for v in Q)
    if a <= 0 or a * c - b * b <= 0:
        raise DomainError("form must be positive definite")
    return a, b, c


def _grid_values(Q, bound: int) -> np.ndarray:
    a, b, c = _form_floats(Q)
    m = np.arange(-bound, bound + 1, dtype=np.float64)
    M, Nn = np.meshgrid(m, m, indexing="ij")
    return a * M * M + 2.0 * b * M * Nn + c * Nn * Nn


def _bound_for_radius(Q, R: float) -> int:
    a, b, c = _form_floats(Q)
    lam_min = ((a + c) - sqrt((a - c) ** 2 + 4 * b * b)) / 2.0
    return isqrt(int(R / lam_min)) + 2


def epstein_truncated(Q, s: float, R: float, tail: bool = True) -> float:
    """Lattice sum of Q(m,n)^(-s) over 0 < Q <= R, plus an integral tail."""
    if s <= 1:
        raise DomainError("need s > 1")
    vals = _grid_values(Q, _bound_for_radius(Q, R))
    mask = (vals > 0) & (vals <= R)
    total = float(np.sum(vals[mask] ** (-s)))
    if tail:
        a, b, c = _form_floats(Q)
        d = a * c - b * b
        total += pi / sqrt(d) * R ** (1.0 - s) / (s - 1.0)
    return total


def epstein_residue_estimate(Q, depth: int = 7, R0: float = 4.0e5) -> float:
    """Residue of the Epstein zeta function at s=1 via a Richardson ladder."""
    values = []
    for j in range(1, depth + 1):
        s = 1.0 + 2.0**-j
        values.append((s - 1.0) * epstein_truncated(Q, s, R0))
    # one extrapolation step: error linear in (s - 1)
    return 2.0 * values[-1] - values[-2]


def epstein_primitive_truncated(Q, s: float, R: float) -> float:
    """Sum over coprime (m, n) with 0 < Q <= R (no tail term)."""
    bound = _bound_for_radius(Q, R)
    m = np.arange(-bound, bound + 1)
    M, Nn = np.meshgrid(m, m, indexing="ij")
    vals = _grid_values(Q, bound)
    mask = (vals > 0) & (vals <= R) & (np.gcd(M, Nn) == 1)
    return float(np.sum(vals[mask] ** (-s)))


def epstein_restricted(Q, s: float, k: int, l: int, C: int, D: int, R: float) -> float:
    """Direct sum over coprime (m, n) with gcd(m, D) = k and gcd(n, C) = l,
    truncated at Q(m, n) <= R."""
    bound = _bound_for_radius(Q, R)
    m = np.arange(-bound, bound + 1)
    M, Nn = np.meshgrid(m, m, indexing="ij")
    vals = _grid_values(Q, bound)
    mask = (
        (vals > 0)
        & (vals <= R)
        & (np.gcd(M, Nn) == 1)
        & (np.gcd(M, D) == k)
        & (np.gcd(Nn, C) == l)
    )
    return float(np.sum(vals[mask] ** (-s)))


def _phi_Q(Q, a_cond: int, k: int, l: int, s: float, R: float) -> float:
    """Sum over coprime (m, n), gcd(n, a_cond) = 1, of Q(k m, l n)^(-s),
    truncated at Q(k m, l n) <= R."""
    qa, qb, qc = _form_floats(Q)
    scaled = (qa * k * k, qb * k * l, qc * l * l)
    bound = _bound_for_radius(scaled, R)
    m = np.arange(-bound, bound + 1)
    M, Nn = np.meshgrid(m, m, indexing="ij")
    vals = _grid_values(scaled, bound)
    mask = (vals > 0) & (vals <= R) & (np.gcd(M, Nn) == 1) & (np.gcd(Nn, a_cond) == 1)
    return float(np.sum(vals[mask] ** (-s)))


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(out + [n // d for d in out]))


def _mu(n: int) -> int:
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    if n > 1:
        out = -out
    return out


def epstein_restricted_moebius(Q, s: float, k: int, l: int, C: int, D: int, R: float) -> float:
    """The same restricted sum assembled from unrestricted pieces by Moebius
    inversion over the divisors of l D / k; must agree with the direct sum."""
    if D % k or C % l or (l * D) % k:
        raise DomainError("need k | D and l | C")
    total = 0.0
    for c in _divisors(l * D // k):
        mu = _mu(c)
        if mu == 0:
            continue
        total += mu * _phi_Q(Q, c * k * C // l, c * k, l, s, R)
    return total

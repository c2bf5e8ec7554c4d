"""Named Dirichlet-series constructors for the module families we count.

Each constructor returns the exact coefficient table of a submodule
counting function:

* zeta_q_tau      -- ideals of Z[tau] by index (Dedekind zeta of Q(tau))
* zeta_q_itau     -- ideals of Z[i,tau] by index (Dedekind zeta of Q(i*tau))
* zeta_q_xi8      -- ideals of the 8th cyclotomic ring Z[xi_8] by norm
* zeta_zi_sqrt2   -- principal ideals of the non-maximal order Z[i,sqrt2]
* phi_c           -- 1/24 of the SO(3, Q(tau)) rotation count by
                     denominator norm
* f_cubic         -- similarity submodules of the rank-3 module Z[tau]^3
                     by index
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .dirichlet import (
    CoeffSeries,
    EulerFactor,
    convolve,
    dirichlet_inverse,
    dirichlet_polynomial,
    divisors,
    expand_euler,
    scale_argument,
    shift,
)

# Common local-factor denominators, as polynomials in t = p^(-s).
_GEOM = (1, -1)            # 1/(1-t)
_GEOM_SQ = (1, -2, 1)      # 1/(1-t)^2
_GEOM_T2 = (1, 0, -1)      # 1/(1-t^2)
_GEOM_4TH = (1, -4, 6, -4, 1)    # 1/(1-t)^4
_GEOM_T2_SQ = (1, 0, -2, 0, 1)   # 1/(1-t^2)^2


class SeriesName(Enum):
    ZETA_Q_TAU = "zeta-qtau"
    ZETA_Q_ITAU = "zeta-qitau"
    ZETA_ZI_SQRT2 = "zeta-zisqrt2"
    ZETA_Q_XI8 = "zeta-qxi8"
    PHI_C = "phi-c"
    F_CUBIC = "f-cubic"
    RIEMANN_ZETA = "riemann-zeta"


@dataclass(frozen=True)
class CatalogEntry:
    name: SeriesName
    series: CoeffSeries
    note: str

    def __post_init__(self):
        if self.series.coeffs[0] != 1:
            raise ValueError("catalog series must start with a(1) = 1")
        if not self.series.multiplicative:
            raise ValueError("catalog series must be multiplicative by construction")


def riemann_zeta(limit: int) -> CoeffSeries:
    """All coefficients 1: every index m gives exactly the ideal mZ."""
    return expand_euler(lambda p: EulerFactor((1,), _GEOM), limit)


def zeta_q_tau(limit: int) -> CoeffSeries:
    """Ideal count of Z[tau]: 5 ramifies, +-1 mod 5 splits, +-2 mod 5 inert."""
    def factor(p: int) -> EulerFactor:
        if p == 5:
            return EulerFactor((1,), _GEOM)
        if p % 5 in (1, 4):
            return EulerFactor((1,), _GEOM_SQ)
        return EulerFactor((1,), _GEOM_T2)
    return expand_euler(factor, limit)


def zeta_q_itau(limit: int) -> CoeffSeries:
    """Ideal count of Z[i,tau].

    2 has a single prime of norm 4; 5 ramifies into a square of a split
    pair; 1, 9 mod 20 split completely; other odd primes have two primes
    of norm p^2.
    """
    def factor(p: int) -> EulerFactor:
        if p == 2:
            return EulerFactor((1,), _GEOM_T2)
        if p == 5:
            return EulerFactor((1,), _GEOM_SQ)
        if p % 20 in (1, 9):
            return EulerFactor((1,), _GEOM_4TH)
        return EulerFactor((1,), _GEOM_T2_SQ)
    return expand_euler(factor, limit)


def zeta_q_xi8(limit: int) -> CoeffSeries:
    """Ideal count of Z[xi_8]: 2 totally ramified, 1 mod 8 split, else f=2."""
    def factor(p: int) -> EulerFactor:
        if p == 2:
            return EulerFactor((1,), _GEOM)
        if p % 8 == 1:
            return EulerFactor((1,), _GEOM_4TH)
        return EulerFactor((1,), _GEOM_T2_SQ)
    return expand_euler(factor, limit)


def zeta_zi_sqrt2(limit: int) -> CoeffSeries:
    """Principal ideals of Z[i,sqrt2] by index.

    Odd indices match Z[xi_8] one-to-one; indices 2(2l+1) disappear and
    all other even ones double, which is the polynomial prefactor
    1 - 2^-s + 2*4^-s.
    """
    pre = {m: c for m, c in {1: 1, 2: -1, 4: 2}.items() if m <= limit}
    return convolve(dirichlet_polynomial(pre, limit), zeta_q_xi8(limit))


def phi_c(limit: int) -> CoeffSeries:
    """Rotation generating function for Z[tau]^3, divided by 24.

    (1 + 4*4^-s)/(1 + 4^-s) times zeta(s) zeta(s-1) / zeta(2s), all taken
    for the golden-ratio ring.
    """
    num = {m: c for m, c in {1: 1, 4: 4}.items() if m <= limit}
    den = {m: c for m, c in {1: 1, 4: 1}.items() if m <= limit}
    pre = convolve(dirichlet_polynomial(num, limit),
                   dirichlet_inverse(dirichlet_polynomial(den, limit)))
    zt = zeta_q_tau(limit)
    core = convolve(zt, shift(zt, 1))
    core = convolve(core, dirichlet_inverse(scale_argument(zt, 2)))
    return convolve(pre, core)


def f_cubic(limit: int) -> CoeffSeries:
    """Similarity submodule count of Z[tau]^3; supported on cubes."""
    return convolve(scale_argument(zeta_q_tau(limit), 3),
                    scale_argument(phi_c(limit), 3))


def sigma1(m: int) -> int:
    """Divisor sum; counts the rank-2 sublattices of index m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return sum(divisors(m))


_BUILDERS = {
    SeriesName.ZETA_Q_TAU: (zeta_q_tau, "Euler product over rational primes split by residue mod 5"),
    SeriesName.ZETA_Q_ITAU: (zeta_q_itau, "Euler product split by residue mod 20"),
    SeriesName.ZETA_ZI_SQRT2: (zeta_zi_sqrt2, "prefactor (1 - 2^-s + 2*4^-s) times the xi_8 zeta"),
    SeriesName.ZETA_Q_XI8: (zeta_q_xi8, "Euler product split by residue mod 8"),
    SeriesName.PHI_C: (phi_c, "(1+4^(1-s))/(1+4^-s) * zeta(s) zeta(s-1) / zeta(2s) over Q(tau)"),
    SeriesName.F_CUBIC: (f_cubic, "zeta_q_tau(3s) * phi_c(3s)"),
    SeriesName.RIEMANN_ZETA: (riemann_zeta, "all-ones coefficients"),
}

# Stable identifiers accepted on the command line.
CLI_SERIES = ("zeta-qtau", "zeta-qitau", "zeta-zisqrt2", "zeta-qxi8",
              "phi-c", "f-cubic")


def catalog_entry(name: str | SeriesName, limit: int) -> CatalogEntry:
    key = name if isinstance(name, SeriesName) else SeriesName(name)
    builder, note = _BUILDERS[key]
    return CatalogEntry(key, builder(limit), note)

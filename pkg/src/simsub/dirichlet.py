"""Coefficient tables of Dirichlet series over exact integers.

A CoeffSeries holds a(1..N) for a fixed limit N.  All binary operations
insist on equal limits so that truncation mismatches cannot pass
silently, and no floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start::p] = bytearray(len(range(start, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def smallest_prime_factors(n: int) -> list[int]:
    """spf[m] = least prime factor of m, for 0 <= m <= n (spf[0..1] unused)."""
    spf = list(range(n + 1))
    for p in range(2, math.isqrt(n) + 1):
        if spf[p] == p:
            for m in range(p * p, n + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


@dataclass(frozen=True)
class CoeffSeries:
    """Exact coefficients a(1..limit) of a Dirichlet series.

    `multiplicative` records that the series is known multiplicative by
    construction (e.g. it came from an Euler product); it is a promise
    that check_multiplicative verifies, not something inferred from the
    table.
    """

    limit: int
    coeffs: tuple[int, ...]
    multiplicative: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.limit < 1:
            raise ValueError("limit must be >= 1")
        if len(self.coeffs) != self.limit:
            raise ValueError("coefficient table length must equal the limit")

    def a(self, m: int) -> int:
        if not 1 <= m <= self.limit:
            raise IndexError(f"index {m} outside 1..{self.limit}")
        return self.coeffs[m - 1]

    __getitem__ = a

    def nonzero(self) -> Iterator[tuple[int, int]]:
        for m, c in enumerate(self.coeffs, start=1):
            if c:
                yield m, c

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.limit > 8 else ""
        return f"CoeffSeries(N={self.limit}: {head}{tail})"


def epsilon(limit: int) -> CoeffSeries:
    """The identity under Dirichlet convolution: indicator of m = 1."""
    return CoeffSeries(limit, (1,) + (0,) * (limit - 1), multiplicative=True)


@dataclass(frozen=True)
class EulerFactor:
    """Local factor num(t)/den(t) at a prime, t the formal p^(-s).

    den must have constant term 1 so the ratio expands as an integer
    power series.
    """

    num: tuple[int, ...]
    den: tuple[int, ...] = (1,)

    def __post_init__(self):
        if not self.den or self.den[0] != 1:
            raise ValueError("local factor is not expandable: "
                             "denominator constant term must be 1")

    def expand(self, n_terms: int) -> list[int]:
        """First n_terms coefficients of num/den by long division."""
        out = []
        for k in range(n_terms):
            c = self.num[k] if k < len(self.num) else 0
            for j in range(1, min(k, len(self.den) - 1) + 1):
                c -= self.den[j] * out[k - j]
            out.append(c)
        return out


ONE_FACTOR = EulerFactor((1,), (1,))


def poly_mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def poly_pow(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    out = (1,)
    for _ in range(k):
        out = poly_mul(out, p)
    return out


def expand_euler(local_factor: Callable[[int], EulerFactor], limit: int) -> CoeffSeries:
    """Multiplicative series from per-prime local factors.

    a(m) is the product over p^e || m of the t^e coefficient of the local
    expansion at p.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    spf = smallest_prime_factors(limit)
    expansions: dict[int, list[int]] = {}
    for p in primes_up_to(limit):
        e_max = 0
        q = p
        while q <= limit:
            e_max += 1
            q *= p
        expansions[p] = local_factor(p).expand(e_max + 1)
    coeffs = [0] * (limit + 1)
    coeffs[1] = 1
    for m in range(2, limit + 1):
        p = spf[m]
        e, rest = 0, m
        while rest % p == 0:
            rest //= p
            e += 1
        coeffs[m] = coeffs[rest] * expansions[p][e]
    return CoeffSeries(limit, tuple(coeffs[1:]), multiplicative=True)


def _require_same_limit(a: CoeffSeries, b: CoeffSeries) -> int:
    if a.limit != b.limit:
        raise ValueError(f"limit mismatch: {a.limit} != {b.limit}")
    return a.limit


def convolve(a: CoeffSeries, b: CoeffSeries) -> CoeffSeries:
    """Dirichlet convolution c(m) = sum over d|m of a(d) b(m/d)."""
    n = _require_same_limit(a, b)
    ca, cb = a.coeffs, b.coeffs
    out = [0] * (n + 1)
    for d in range(1, n + 1):
        ad = ca[d - 1]
        if not ad:
            continue
        for q in range(1, n // d + 1):
            bq = cb[q - 1]
            if bq:
                out[d * q] += ad * bq
    return CoeffSeries(n, tuple(out[1:]),
                       multiplicative=a.multiplicative and b.multiplicative)


def dirichlet_inverse(a: CoeffSeries) -> CoeffSeries:
    """Two-sided inverse under convolution; needs a(1) = 1."""
    if a.coeffs[0] != 1:
        raise ValueError("series is not invertible: a(1) must be 1")
    n = a.limit
    ca = a.coeffs
    divs = [[] for _ in range(n + 1)]
    for d in range(2, n + 1):
        for m in range(d, n + 1, d):
            divs[m].append(d)
    inv = [0] * (n + 1)
    inv[1] = 1
    for m in range(2, n + 1):
        s = 0
        for d in divs[m]:
            s += ca[d - 1] * inv[m // d]
        inv[m] = -s
    return CoeffSeries(n, tuple(inv[1:]), multiplicative=a.multiplicative)


def scale_argument(a: CoeffSeries, k: int) -> CoeffSeries:
    """Substitute s -> k*s: coefficient a(r) moves to index r^k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return a
    n = a.limit
    out = [0] * (n + 1)
    r = 1
    while r ** k <= n:
        out[r ** k] = a.coeffs[r - 1]
        r += 1
    return CoeffSeries(n, tuple(out[1:]), multiplicative=a.multiplicative)


def shift(a: CoeffSeries, k: int) -> CoeffSeries:
    """Substitute s -> s - k: coefficient a(m) becomes m^k a(m)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return a
    out = tuple(m ** k * c for m, c in enumerate(a.coeffs, start=1))
    return CoeffSeries(a.limit, out, multiplicative=a.multiplicative)


def dirichlet_polynomial(terms: Mapping[int, int], limit: int) -> CoeffSeries:
    """Finite Dirichlet polynomial with exactly the given support."""
    out = [0] * (limit + 1)
    for m, c in terms.items():
        if not 1 <= m <= limit:
            raise ValueError(f"term index {m} outside 1..{limit}")
        out[m] = c
    # A polynomial supported on powers of a single prime (with a(1) = 1)
    # is multiplicative; anything else gets no promise.
    mult = out[1] == 1 and _single_prime_support(terms)
    return CoeffSeries(limit, tuple(out[1:]), multiplicative=mult)


def _single_prime_support(terms: Mapping[int, int]) -> bool:
    support = sorted(m for m, c in terms.items() if c and m > 1)
    if not support:
        return True
    p = next(d for d in range(2, support[0] + 1) if support[0] % d == 0)
    for m in support:
        while m % p == 0:
            m //= p
        if m != 1:
            return False
    return True


def summatory(a: CoeffSeries, x: int) -> int:
    """Partial sum of coefficients up to x."""
    if not 1 <= x <= a.limit:
        raise ValueError(f"summatory point {x} outside 1..{a.limit}")
    return sum(a.coeffs[:x])


def check_multiplicative(a: CoeffSeries) -> bool:
    """True iff a(1) = 1 and a(mn) = a(m) a(n) for all coprime m, n <= N."""
    if a.coeffs[0] != 1:
        return False
    n = a.limit
    c = a.coeffs
    for m in range(2, n + 1):
        for k in range(2, n // m + 1):
            if math.gcd(m, k) == 1 and c[m * k - 1] != c[m - 1] * c[k - 1]:
                return False
    return True

"""Exact arithmetic in the real quadratic rings Z[tau] and Z[sqrt(2)].

Elements are integer pairs a + b*w where w satisfies w^2 = c1*w + c0,
with (c1, c0) = (1, 1) for the golden ratio tau and (0, 2) for sqrt(2).
Everything is exact: comparisons of real embeddings go through integer
sign tests, never through floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


class QuadRing:
    """One of the two supported real quadratic rings.

    Only the golden-ratio ring (c1=1, c0=1) and the root-two ring
    (c1=0, c0=2) are constructible; both are norm-Euclidean, which the
    gcd below relies on.
    """

    _ALLOWED = {(1, 1): "tau", (0, 2): "sqrt2"}

    __slots__ = ("c1", "c0", "name", "_fund", "_fund_inv", "_fund_sq",
                 "_fund_inv_sq", "_fund_pow4")

    def __init__(self, c1: int, c0: int) -> None:
        try:
            self.name = self._ALLOWED[(c1, c0)]
        except KeyError:
            raise ValueError(f"unsupported quadratic ring: w^2 = {c1}*w + {c0}")
        self.c1 = c1
        self.c0 = c0
        fund = QuadInt(0, 1, self) if self.name == "tau" else QuadInt(1, 1, self)
        self._fund = fund
        self._fund_inv = unit_inverse(fund)
        self._fund_sq = fund * fund
        self._fund_inv_sq = self._fund_inv * self._fund_inv
        self._fund_pow4 = self._fund_sq * self._fund_sq

    @property
    def discriminant(self) -> int:
        return self.c1 * self.c1 + 4 * self.c0

    @property
    def fundamental_unit(self) -> QuadInt:
        return self._fund

    @property
    def omega_float(self) -> float:
        # larger root of x^2 = c1*x + c0
        return (self.c1 + math.sqrt(self.discriminant)) / 2.0

    @property
    def omega_conj_float(self) -> float:
        return (self.c1 - math.sqrt(self.discriminant)) / 2.0

    def zero(self) -> QuadInt:
        return QuadInt(0, 0, self)

    def one(self) -> QuadInt:
        return QuadInt(1, 0, self)

    def omega(self) -> QuadInt:
        return QuadInt(0, 1, self)

    def from_int(self, n: int) -> QuadInt:
        return QuadInt(n, 0, self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuadRing) and (self.c1, self.c0) == (other.c1, other.c0)

    def __hash__(self) -> int:
        return hash((self.c1, self.c0))

    def __repr__(self) -> str:
        return f"QuadRing({self.name})"


def _round_half_up(num: int, den: int) -> int:
    """floor(num/den + 1/2) for den > 0; deterministic at ties."""
    return (2 * num + den) // (2 * den)


@dataclass(frozen=True)
class QuadInt:
    """a + b*w in a QuadRing, exact."""

    a: int
    b: int
    ring: QuadRing

    def _coerce(self, other):
        if isinstance(other, int):
            return QuadInt(other, 0, self.ring)
        if isinstance(other, QuadInt):
            if other.ring != self.ring:
                raise ValueError("mixed-ring operands")
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadInt(self.a + o.a, self.b + o.b, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.a, -self.b, self.ring)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadInt(self.a - o.a, self.b - o.b, self.ring)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b w)(c + d w) with w^2 = c1 w + c0
        a, b, c, d = self.a, self.b, o.a, o.b
        return QuadInt(a * c + self.ring.c0 * b * d,
                       a * d + b * c + self.ring.c1 * b * d,
                       self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return unit_inverse(self) ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        """Nearest-quotient division; |norm(remainder)| < |norm(divisor)|."""
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.a == 0 and o.b == 0:
            raise ZeroDivisionError("division by zero in quadratic ring")
        num = self * o.conj()
        nd = o.norm()
        if nd < 0:
            num, nd = -num, -nd
        q = QuadInt(_round_half_up(num.a, nd), _round_half_up(num.b, nd), self.ring)
        return q, self - q * o

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def norm(self) -> int:
        a, b = self.a, self.b
        return a * a + self.ring.c1 * a * b - self.ring.c0 * b * b

    def conj(self) -> QuadInt:
        return QuadInt(self.a + self.ring.c1 * self.b, -self.b, self.ring)

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def embedding_float(self) -> float:
        return self.a + self.b * self.ring.omega_float

    def conj_embedding_float(self) -> float:
        return self.a + self.b * self.ring.omega_conj_float

    def __repr__(self) -> str:
        w = "tau" if self.ring.name == "tau" else "sqrt2"
        return f"({self.a}{self.b:+}*{w})"


def norm(x: QuadInt) -> int:
    return x.norm()


def conj(x: QuadInt) -> QuadInt:
    return x.conj()


def is_unit(x: QuadInt) -> bool:
    return x.is_unit()


def unit_inverse(u: QuadInt) -> QuadInt:
    """Inverse of a unit: conj(u)/norm(u) with norm(u) = +-1."""
    n = u.norm()
    if abs(n) != 1:
        raise ValueError(f"not a unit: {u!r}")
    c = u.conj()
    return c if n == 1 else -c


def sign_embedding(x: QuadInt) -> int:
    """Sign of the real embedding a + b*w (w the positive root), exactly.

    Writes 2(a + b w) = s + b*sqrt(D) with s = 2a + b*c1 and compares
    s^2 against D*b^2; D is a non-square so ties cannot occur.
    """
    s = 2 * x.a + x.b * x.ring.c1
    b = x.b
    if b == 0:
        return (s > 0) - (s < 0)
    if s == 0:
        return 1 if b > 0 else -1
    if s > 0 and b > 0:
        return 1
    if s < 0 and b < 0:
        return -1
    d = s * s - x.ring.discriminant * b * b
    assert d != 0, "non-square discriminant cannot give a tie"
    if s > 0:  # b < 0
        return 1 if d > 0 else -1
    return -1 if d > 0 else 1


def is_totally_positive(x: QuadInt) -> bool:
    return sign_embedding(x) > 0 and sign_embedding(x.conj()) > 0


def is_canonical_associate(x: QuadInt) -> bool:
    """Totally positive with embedding ratio in [1, u^2).

    u = fund^2 is the totally positive fundamental unit; multiplying by u
    scales the embedding ratio by u^2, so exactly one associate of any
    nonzero element lands in the window.
    """
    if not x:
        return False
    if x.norm() <= 0 or sign_embedding(x) <= 0:
        return False
    c = x.conj()
    if sign_embedding(x - c) < 0:  # ratio < 1
        return False
    return sign_embedding(x.ring._fund_pow4 * c - x) > 0  # ratio < fund^4


def canonical_associate(x: QuadInt) -> QuadInt:
    """The distinguished unit multiple of x (see is_canonical_associate)."""
    if not x:
        return x
    ring = x.ring
    if x.norm() < 0:
        x = x * ring._fund
    if sign_embedding(x) < 0:
        x = -x
    for _ in range(100_000):
        c = x.conj()
        if sign_embedding(x - c) < 0:
            x = x * ring._fund_sq
        elif sign_embedding(ring._fund_pow4 * c - x) <= 0:
            x = x * ring._fund_inv_sq
        else:
            return x
    raise RuntimeError("canonical associate normalization did not converge")


def is_associate(x: QuadInt, y: QuadInt) -> bool:
    if not x or not y:
        return (not x) and (not y)
    return canonical_associate(x) == canonical_associate(y)


def unit_normal_form(u: QuadInt) -> tuple[int, int]:
    """Write a unit as sign * fund^exponent, returning (sign, exponent).

    Walks the exact embedding toward 1; the walk must terminate on +-1
    because the embedding is injective and |emb| changes monotonically.
    """
    if not u.is_unit():
        raise ValueError(f"not a unit: {u!r}")
    ring = u.ring
    one = ring.one()
    v, e = u, 0
    for _ in range(100_000):
        if v == one:
            return 1, e
        if v == -one:
            return -1, e
        # |emb(v)| > 1 iff v > 1 or v < -1
        if sign_embedding(v - one) > 0 or sign_embedding(v + one) < 0:
            v = v * ring._fund_inv
            e += 1
        else:
            v = v * ring._fund
            e -= 1
    raise RuntimeError(f"unit normal form did not terminate for {u!r}")


def unit_from_normal_form(ring: QuadRing, sign: int, exponent: int) -> QuadInt:
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    u = ring._fund ** exponent if exponent >= 0 else ring._fund_inv ** (-exponent)
    return u if sign == 1 else -u


def gcd(x: QuadInt, y: QuadInt) -> QuadInt:
    """Greatest common divisor, normalized to the canonical associate.

    Euclidean descent with nearest-integer quotients; both rings satisfy
    |norm(x mod y)| < |norm(y)| under that rounding.
    """
    if x.ring != y.ring:
        raise ValueError("mixed-ring operands")
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    while y:
        x, y = y, x % y
    return canonical_associate(x)


def exact_div(x: QuadInt, y: QuadInt) -> QuadInt:
    q, r = divmod(x, y)
    if r:
        raise ValueError(f"{y!r} does not divide {x!r}")
    return q


def divides(d: QuadInt, x: QuadInt) -> bool:
    return not (x % d)


class SplittingClass(Enum):
    RAMIFIED = "ramified"
    SPLIT = "split"
    INERT = "inert"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def splitting_class(p: int, ring: QuadRing) -> SplittingClass:
    """How the rational prime p factors in the ring.

    Golden ratio: 5 ramifies, p = +-1 (mod 5) splits, p = +-2 (mod 5) is
    inert.  Root two: 2 ramifies, p = +-1 (mod 8) splits, else inert.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if ring.name == "tau":
        if p == 5:
            return SplittingClass.RAMIFIED
        return SplittingClass.SPLIT if p % 5 in (1, 4) else SplittingClass.INERT
    if p == 2:
        return SplittingClass.RAMIFIED
    return SplittingClass.SPLIT if p % 8 in (1, 7) else SplittingClass.INERT


def elements_in_embedding_box(ring: QuadRing, bound1: float, bound2: float):
    """All x with |emb(x)| <= bound1 and |emb'(x)| <= bound2, a bit padded.

    The box is computed with floats and widened by one unit in each
    integer coordinate, so it may over-include but never under-include;
    callers apply their own exact filters.
    """
    w1 = ring.omega_float
    w2 = ring.omega_conj_float
    bmax = int((bound1 + bound2) / (w1 - w2)) + 1
    out = []
    for b in range(-bmax, bmax + 1):
        lo = max(-bound1 - b * w1, -bound2 - b * w2)
        hi = min(bound1 - b * w1, bound2 - b * w2)
        if hi < lo - 1:
            continue
        for a in range(math.floor(lo) - 1, math.ceil(hi) + 2):
            out.append(QuadInt(a, b, ring))
    return out


@lru_cache(maxsize=None)
def norm_equation(ring: QuadRing, n: int) -> tuple[QuadInt, ...]:
    """Canonical associates with norm exactly n (n >= 1).

    One entry per association class of solutions of |norm| = n; the
    canonical associate always has positive norm.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    f = ring._fund.embedding_float()
    root = math.sqrt(n)
    hits = [x for x in elements_in_embedding_box(ring, root * f * f * 1.001, root * 1.001)
            if x.norm() == n and is_canonical_associate(x)]
    hits.sort(key=lambda x: (x.a, x.b))
    return tuple(hits)


def units_up_to_height(ring: QuadRing, height: int) -> list[QuadInt]:
    """All units with |a|, |b| <= height (exhaustive coefficient scan)."""
    out = []
    for a in range(-height, height + 1):
        for b in range(-height, height + 1):
            x = QuadInt(a, b, ring)
            if x and x.is_unit():
                out.append(x)
    return out


def prime_factors(x: QuadInt) -> list[tuple[QuadInt, int]]:
    """Prime factorization of a nonzero element, primes as canonical associates."""
    if not x:
        raise ValueError("cannot factor zero")
    ring = x.ring
    n = abs(x.norm())
    out = []
    rest = x
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            rest, found = _strip_primes_above(rest, p, ring)
            out.extend(found)
        p += 1
    if n > 1:
        rest, found = _strip_primes_above(rest, n, ring)
        out.extend(found)
    assert rest.is_unit()
    return out


def _strip_primes_above(x: QuadInt, p: int, ring: QuadRing):
    cls = splitting_class(p, ring)
    if cls is SplittingClass.INERT:
        candidates = [ring.from_int(p)]
    else:
        candidates = list(norm_equation(ring, p))
    found = []
    for pi in candidates:
        mult = 0
        while divides(pi, x):
            x = exact_div(x, pi)
            mult += 1
        if mult:
            found.append((canonical_associate(pi), mult))
    return x, found


TAU = QuadRing(1, 1)
SQRT2 = QuadRing(0, 2)

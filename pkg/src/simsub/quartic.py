"""Exact arithmetic in the rank-4 rings Z[i,tau] and Z[i,sqrt(2)].

Elements are integer 4-vectors over the basis {1, i, w, i*w} with
i^2 = -1 and w the real quadratic generator.  An element is handled as
P + i*Q with P, Q in the underlying real quadratic ring, which keeps the
multiplication and norms exact and cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quadratic import (
    QuadInt,
    QuadRing,
    SQRT2,
    TAU,
    sign_embedding,
    unit_inverse,
)


class QuarticRing:
    """Z[i,w] for w = tau or sqrt(2), as structure constants over {1,i,w,iw}."""

    __slots__ = ("quad", "name", "mu", "mu_inv")

    def __init__(self, quad: QuadRing) -> None:
        self.quad = quad
        self.name = "itau" if quad.name == "tau" else "isqrt2"
        # mu is the infinite-order unit used in unit normal forms:
        # tau itself, or lambda = 1 + sqrt(2).
        self.mu = QuarticInt.from_parts(quad.fundamental_unit, quad.zero(), self)
        self.mu_inv = QuarticInt.from_parts(unit_inverse(quad.fundamental_unit),
                                            quad.zero(), self)
        self._check_structure_constants()

    def zero(self) -> QuarticInt:
        return QuarticInt((0, 0, 0, 0), self)

    def one(self) -> QuarticInt:
        return QuarticInt((1, 0, 0, 0), self)

    def i(self) -> QuarticInt:
        return QuarticInt((0, 1, 0, 0), self)

    def omega(self) -> QuarticInt:
        return QuarticInt((0, 0, 1, 0), self)

    def from_int(self, n: int) -> QuarticInt:
        return QuarticInt((n, 0, 0, 0), self)

    def basis(self) -> tuple[QuarticInt, ...]:
        return (self.one(), self.i(), self.omega(),
                QuarticInt((0, 0, 0, 1), self))

    def _check_structure_constants(self) -> None:
        # The multiplication table must be commutative and associative;
        # checking it on basis triples is enough by bilinearity.
        es = self.basis()
        for x in es:
            for y in es:
                if x * y != y * x:
                    raise AssertionError("multiplication table not commutative")
                for z in es:
                    if (x * y) * z != x * (y * z):
                        raise AssertionError("multiplication table not associative")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuarticRing) and self.name == getattr(other, "name", None)

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"QuarticRing({self.name})"


@dataclass(frozen=True)
class QuarticInt:
    """coeffs = (x0, x1, x2, x3) meaning x0 + x1*i + x2*w + x3*i*w."""

    coeffs: tuple[int, int, int, int]
    ring: QuarticRing

    @classmethod
    def from_parts(cls, re: QuadInt, im: QuadInt, ring: QuarticRing) -> QuarticInt:
        return cls((re.a, im.a, re.b, im.b), ring)

    @property
    def re_part(self) -> QuadInt:
        return QuadInt(self.coeffs[0], self.coeffs[2], self.ring.quad)

    @property
    def im_part(self) -> QuadInt:
        return QuadInt(self.coeffs[1], self.coeffs[3], self.ring.quad)

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ring.from_int(other)
        if isinstance(other, QuarticInt):
            if other.ring != self.ring:
                raise ValueError("mixed-ring operands")
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuarticInt(tuple(s + t for s, t in zip(self.coeffs, o.coeffs)), self.ring)

    __radd__ = __add__

    def __neg__(self):
        return QuarticInt(tuple(-c for c in self.coeffs), self.ring)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuarticInt(tuple(s - t for s, t in zip(self.coeffs, o.coeffs)), self.ring)

    def __mul__(self, other):
        if isinstance(other, QuadInt):
            return QuarticInt.from_parts(self.re_part * other, self.im_part * other,
                                         self.ring)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p, q = self.re_part, self.im_part
        r, s = o.re_part, o.im_part
        return QuarticInt.from_parts(p * r - q * s, p * s + q * r, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers not supported here")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def complex_conj(self) -> QuarticInt:
        return QuarticInt.from_parts(self.re_part, -self.im_part, self.ring)

    def rel_norm(self) -> QuadInt:
        """Norm down to the real quadratic subring: P^2 + Q^2."""
        p, q = self.re_part, self.im_part
        return p * p + q * q

    def abs_norm(self) -> int:
        """|norm to Z|; equals |det(regular_rep)| and the index [M : xM]."""
        return abs(self.rel_norm().norm())

    def __repr__(self) -> str:
        return f"QuarticInt({self.coeffs}, {self.ring.name})"


def qmul(x: QuarticInt, y: QuarticInt) -> QuarticInt:
    return x * y


def regular_rep(x: QuarticInt) -> tuple[tuple[int, ...], ...]:
    """4x4 integer matrix of multiplication by x; columns are x * basis_j."""
    cols = [(x * e).coeffs for e in x.ring.basis()]
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def det4(m) -> int:
    """Determinant of a 4x4 integer matrix by cofactor expansion."""
    def det3(a, b, c, d, e, f, g, h, i):
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    (m00, m01, m02, m03), (m10, m11, m12, m13), \
        (m20, m21, m22, m23), (m30, m31, m32, m33) = m
    return (m00 * det3(m11, m12, m13, m21, m22, m23, m31, m32, m33)
            - m01 * det3(m10, m12, m13, m20, m22, m23, m30, m32, m33)
            + m02 * det3(m10, m11, m13, m20, m21, m23, m30, m31, m33)
            - m03 * det3(m10, m11, m12, m20, m21, m22, m30, m31, m32))


def abs_norm(x: QuarticInt) -> int:
    return x.abs_norm()


class UnitDecompositionError(ArithmeticError):
    """A unit failed to factor as i^k * mu^l.

    Raising this would exhibit a counterexample to the expected unit-group
    structure of these rings; it must never trigger.
    """


def quartic_unit_normal_form(u: QuarticInt) -> tuple[int, int]:
    """Write a unit as i^k * mu^l with k in {0,1,2,3}; returns (k, l).

    Strips the mu-power by walking |emb(u)|^2 = emb(P^2 + Q^2) toward 1
    with exact sign tests; the residue must then be one of 1, i, -1, -i.
    """
    if u.abs_norm() != 1:
        raise ValueError(f"not a unit: {u!r}")
    ring = u.ring
    one = ring.quad.one()
    v, ell = u, 0
    prev = 0
    for _ in range(100_000):
        rel = v.rel_norm()
        cmp = sign_embedding(rel - one)
        if cmp == 0:
            break
        if prev and cmp != prev:
            # crossed 1 without landing on it: not of the form i^k mu^l
            raise UnitDecompositionError(f"unit {u!r} is not i^k * mu^l")
        prev = cmp
        if cmp > 0:
            v = v * ring.mu_inv
            ell += 1
        else:
            v = v * ring.mu
            ell -= 1
    else:
        raise RuntimeError(f"unit decomposition did not terminate for {u!r}")
    for k, w in enumerate(_i_powers(ring)):
        if v == w:
            return k, ell
    raise UnitDecompositionError(f"unit {u!r} is not i^k * mu^l")


def _i_powers(ring: QuarticRing):
    one, i = ring.one(), ring.i()
    return (one, i, -one, -i)


def unit_from_normal_form(ring: QuarticRing, k: int, ell: int) -> QuarticInt:
    base = _i_powers(ring)[k % 4]
    if ell >= 0:
        return base * ring.mu ** ell
    return base * ring.mu_inv ** (-ell)


def units_up_to_height(ring: QuarticRing, height: int) -> list[QuarticInt]:
    """All units with every coefficient bounded by height, by full scan."""
    out = []
    rng = range(-height, height + 1)
    for x0 in rng:
        for x1 in rng:
            for x2 in rng:
                for x3 in rng:
                    x = QuarticInt((x0, x1, x2, x3), ring)
                    if x and x.abs_norm() == 1:
                        out.append(x)
    return out


ITAU = QuarticRing(TAU)
ISQRT2 = QuarticRing(SQRT2)

"""The rank-3 module Z[tau]^3: exact rotations, denominators, and counts.

Rotations over the fraction field of Z[tau] are produced from quaternions
with Z[tau] components through the Euler-Rodrigues quadratic forms.  A
rotation R gets a denominator den(R), the canonical associate of the
least beta with beta*R integral, and a scaled map alpha*den(R)*R has
integer index |N(alpha)|^3 * |N(den R)|^3.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .dirichlet import divisors
from .lattice import Ambient, EnumerationBudgetExceeded, Submodule
from .quadratic import (
    QuadInt,
    TAU,
    canonical_associate,
    exact_div,
    gcd as qgcd,
    norm_equation,
    prime_factors,
    sign_embedding,
    unit_inverse,
)

DEFAULT_SCAN_FACTOR = 16
DEFAULT_MAX_LEAVES = 10_000_000


class RotationScanShortfall(RuntimeError):
    """Rotation counts stayed short of the expected profile after rescans."""


class QuadRat:
    """Fraction of two golden-ratio (or root-two) integers, in lowest terms.

    The denominator is normalized to its canonical associate, so equality
    and hashing are structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: QuadInt, den: QuadInt | None = None):
        if den is None:
            den = num.ring.one()
        if num.ring != den.ring:
            raise ValueError("mixed-ring operands")
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = num.ring.one()
        else:
            g = qgcd(num, den)
            num = exact_div(num, g)
            den = exact_div(den, g)
            dc = canonical_associate(den)
            num = num * unit_inverse(exact_div(den, dc))
            den = dc
        self.num = num
        self.den = den

    @classmethod
    def from_int(cls, n: int, ring) -> QuadRat:
        return cls(ring.from_int(n))

    def _coerce(self, other):
        if isinstance(other, QuadRat):
            return other
        if isinstance(other, QuadInt):
            return QuadRat(other)
        if isinstance(other, int):
            return QuadRat(self.num.ring.from_int(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError
        return QuadRat(self.num * o.den, self.den * o.num)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_integral(self) -> bool:
        return self.den == self.num.ring.one()

    def to_quadint(self) -> QuadInt:
        if not self.is_integral():
            raise ValueError(f"{self!r} is not integral")
        return self.num

    def __repr__(self):
        return f"QuadRat({self.num!r}/{self.den!r})"


class Rotation3:
    """3x3 orthogonal matrix with exact golden-ratio-rational entries."""

    __slots__ = ("rows", "det_sign")

    def __init__(self, rows: Sequence[Sequence[QuadRat]]):
        rows = tuple(tuple(row) for row in rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("need a 3x3 matrix")
        self.rows = rows
        ring = rows[0][0].num.ring
        one = QuadRat(ring.one())
        zero = QuadRat(ring.zero())
        for i in range(3):
            for j in range(i, 3):
                dot = sum((rows[i][k] * rows[j][k] for k in range(3)), zero)
                if dot != (one if i == j else zero):
                    raise ValueError("matrix is not orthogonal")
        det = self._det()
        if det == one:
            self.det_sign = 1
        elif det == -one:
            self.det_sign = -1
        else:
            raise AssertionError("orthogonal matrix must have determinant +-1")

    def _det(self) -> QuadRat:
        r = self.rows
        return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))

    @classmethod
    def identity(cls, ring=TAU) -> Rotation3:
        return cls.from_int_rows(((1, 0, 0), (0, 1, 0), (0, 0, 1)), ring)

    @classmethod
    def from_int_rows(cls, rows, ring=TAU) -> Rotation3:
        return cls(tuple(tuple(QuadRat.from_int(v, ring) for v in row) for row in rows))

    def key(self):
        return tuple((e.num.a, e.num.b, e.den.a, e.den.b)
                     for row in self.rows for e in row)

    def __eq__(self, other):
        return isinstance(other, Rotation3) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __matmul__(self, other: Rotation3) -> Rotation3:
        ring = self.rows[0][0].num.ring
        zero = QuadRat(ring.zero())
        rows = tuple(tuple(sum((self.rows[i][k] * other.rows[k][j] for k in range(3)),
                               zero)
                           for j in range(3)) for i in range(3))
        return Rotation3(rows)

    def apply(self, vector):
        ring = self.rows[0][0].num.ring
        zero = QuadRat(ring.zero())
        return tuple(sum((self.rows[i][k] * vector[k] for k in range(3)), zero)
                     for i in range(3))

    def is_integral(self) -> bool:
        return all(e.is_integral() for row in self.rows for e in row)

    def is_signed_permutation(self) -> bool:
        ring = self.rows[0][0].num.ring
        one = QuadRat(ring.one())
        for rows in (self.rows, tuple(zip(*self.rows))):
            for row in rows:
                hits = [e for e in row if e]
                if len(hits) != 1 or (hits[0] != one and hits[0] != -one):
                    return False
        return True

    def __repr__(self):
        return f"Rotation3({self.rows!r})"


def signed_permutations(ring=TAU, det_sign: int | None = None):
    """The 48 signed permutation matrices (24 per determinant sign)."""
    for perm in itertools.permutations(range(3)):
        inversions = sum(1 for x in range(3) for y in range(x + 1, 3)
                         if perm[x] > perm[y])
        parity = -1 if inversions % 2 else 1
        for signs in itertools.product((1, -1), repeat=3):
            det = parity * signs[0] * signs[1] * signs[2]
            if det_sign is not None and det != det_sign:
                continue
            rows = [[0, 0, 0] for _ in range(3)]
            for i in range(3):
                rows[i][perm[i]] = signs[i]
            yield Rotation3.from_int_rows(rows, ring)


@dataclass(frozen=True)
class QuatTau:
    """Primitive quaternion with Z[tau] components."""

    components: tuple[QuadInt, QuadInt, QuadInt, QuadInt]

    def __post_init__(self):
        if any(c.ring != TAU for c in self.components):
            raise ValueError("quaternion components must live in the tau ring")
        if not any(self.components):
            raise ValueError("zero quaternion")
        if not self.content().is_unit():
            raise ValueError("quaternion is not primitive")

    def content(self) -> QuadInt:
        g = None
        for c in self.components:
            if c:
                g = c if g is None else qgcd(g, c)
        return canonical_associate(g)

    def norm_sq(self) -> QuadInt:
        return sum((c * c for c in self.components), TAU.zero())


def _euler_rodrigues(a: QuadInt, b: QuadInt, c: QuadInt, d: QuadInt):
    """Unnormalized rotation matrix of a quaternion: divide by |q|^2."""
    two = TAU.from_int(2)
    return (
        (a * a + b * b - c * c - d * d, two * (b * c - a * d), two * (b * d + a * c)),
        (two * (b * c + a * d), a * a - b * b + c * c - d * d, two * (c * d - a * b)),
        (two * (b * d - a * c), two * (c * d + a * b), a * a - b * b - c * c + d * d),
    )


def quat_to_rotation(q: QuatTau) -> Rotation3:
    """Exact Euler-Rodrigues rotation of a primitive quaternion."""
    m = _euler_rodrigues(*q.components)
    s = q.norm_sq()
    rot = Rotation3(tuple(tuple(QuadRat(e, s) for e in row) for row in m))
    assert rot.det_sign == 1
    return rot


def den(rotation: Rotation3) -> QuadInt:
    """Canonical least common denominator of the nine entries.

    den(R) * R is integral and no proper divisor of den(R) clears every
    denominator, because each entry is stored in lowest terms.
    """
    ring = rotation.rows[0][0].num.ring
    d = ring.one()
    for row in rotation.rows:
        for e in row:
            g = qgcd(d, e.den)
            d = exact_div(d * e.den, g)
    return canonical_associate(d)


def _block2(x: QuadInt):
    # multiplication by x on the Z-basis (1, tau)
    return ((x.a, x.b), (x.b, x.a + x.b))


def _int_det(mat) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    m = [list(row) for row in mat]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _integral_matrix(rotation: Rotation3, scale: QuadInt):
    """scale * rotation as a 3x3 QuadInt matrix; scale must clear den(R)."""
    d = den(rotation)
    factor = exact_div(scale, d)
    return tuple(tuple((e.num * factor) * exact_div(d, e.den) for e in row)
                 for row in rotation.rows)


def similarity_index(alpha: QuadInt, rotation: Rotation3) -> int:
    """Index of alpha * den(R) * R on the rank-3 module: |N(alpha)^3 N(den R)^3|.

    Cross-checked against the determinant of the rank-6 integer
    representation of the map on every call.
    """
    if not alpha:
        raise ValueError("alpha must be nonzero")
    d = den(rotation)
    ind = abs(alpha.norm() ** 3 * d.norm() ** 3)
    mat = _integral_matrix(rotation, alpha * d)
    z6 = [[0] * 6 for _ in range(6)]
    for i in range(3):
        for j in range(3):
            blk = _block2(mat[i][j])
            for r in range(2):
                for c in range(2):
                    z6[2 * i + r][2 * j + c] = blk[r][c]
    assert ind == abs(_int_det(z6)), "index formula disagrees with the Z-rank-6 determinant"
    return ind


def is_unit_similarity(alpha: QuadInt, rotation: Rotation3) -> bool:
    """True iff alpha is a unit and R is a signed permutation."""
    d = den(rotation)
    if alpha % d:
        raise ValueError("alpha * R does not map the module into itself")
    return alpha.is_unit() and rotation.is_signed_permutation()


# ---------------------------------------------------------------------------
# quaternion scan


def _component_box(emb1_cap: float, emb2_cap: float):
    """Tau integers whose squares fit under both embedding caps."""
    from .quadratic import elements_in_embedding_box
    out = []
    for x in elements_in_embedding_box(TAU, math.sqrt(emb1_cap) * 1.000001,
                                       math.sqrt(emb2_cap) * 1.000001):
        sq = x * x
        e1 = sq.embedding_float()
        e2 = sq.conj_embedding_float()
        if e1 <= emb1_cap * 1.000001 + 1e-9 and e2 <= emb2_cap * 1.000001 + 1e-9:
            out.append((x, sq, e1, e2))
    out.sort(key=lambda t: (t[0].a, t[0].b))
    return out


def _scan_leaf_estimate(s1cap: float, s2cap: float) -> int:
    # lattice points of Z[tau]^4 in a product of two 4-balls
    vol = (math.pi ** 2 / 2) ** 2 * (s1cap * s2cap) ** 2
    return int(vol / 25.0) + 1


_scan_cache: dict[tuple[int, int], dict] = {}


def _scan_rotations(bound: int, scan_factor: int, max_leaves: int):
    """All rotations with |N(den)| <= bound from one quaternion box scan.

    Scans quaternion tuples whose squared-magnitude embeddings fit a
    fundamental-domain box for |N(|q|^2)| <= scan_factor * bound.  The
    scan factor absorbs the entry content of the quadratic-form matrix,
    which divides 4 (norm up to 16).  Deduplication is by the reduced
    pair (den, den * R).
    """
    key = (bound, scan_factor)
    if key in _scan_cache:
        return _scan_cache[key]
    nb = scan_factor * bound
    tau1 = TAU.fundamental_unit.embedding_float()
    s1cap = math.sqrt(nb) * tau1 * tau1
    s2cap = math.sqrt(nb)
    estimate = _scan_leaf_estimate(s1cap, s2cap)
    if estimate > max_leaves:
        raise EnumerationBudgetExceeded(
            f"quaternion scan estimate {estimate} exceeds ceiling {max_leaves}")
    comps = _component_box(s1cap, s2cap)
    positive = [t for t in comps if sign_embedding(t[0]) > 0]
    eps = 1e-6
    found: dict[tuple, tuple] = {}
    zero = TAU.zero()

    def leaf(c0, c1, c2, c3):
        s = c0[1] + c1[1] + c2[1] + c3[1]
        if not s:
            return
        m = _euler_rodrigues(c0[0], c1[0], c2[0], c3[0])
        g = s
        for row in m:
            for e in row:
                if e:
                    g = qgcd(g, e)
        d0 = exact_div(s, g)
        d = canonical_associate(d0)
        if abs(d.norm()) > bound:
            return
        uinv = unit_inverse(exact_div(d0, d))
        scaled = tuple(tuple(exact_div(e, g) * uinv for e in row) for row in m)
        k = (d.a, d.b) + tuple(x for row in scaled for e in row for x in (e.a, e.b))
        if k not in found:
            found[k] = (d, scaled)

    # first nonzero component constrained to positive embedding: q and -q
    # give the same rotation.
    zero_comp = (zero, zero, 0.0, 0.0)
    for i0, c0 in enumerate([zero_comp] + positive):
        e1_0, e2_0 = c0[2], c0[3]
        first0 = i0 > 0
        for c1 in (comps if first0 else [zero_comp] + positive):
            e1_1 = e1_0 + c1[2]
            e2_1 = e2_0 + c1[3]
            if e1_1 > s1cap + eps or e2_1 > s2cap + eps:
                continue
            first1 = first0 or bool(c1[0])
            for c2 in (comps if first1 else [zero_comp] + positive):
                e1_2 = e1_1 + c2[2]
                e2_2 = e2_1 + c2[3]
                if e1_2 > s1cap + eps or e2_2 > s2cap + eps:
                    continue
                first2 = first1 or bool(c2[0])
                for c3 in (comps if first2 else positive):
                    if e1_2 + c3[2] > s1cap + eps or e2_2 + c3[3] > s2cap + eps:
                        continue
                    leaf(c0, c1, c2, c3)

    records = []
    for d, scaled in found.values():
        rot = Rotation3(tuple(tuple(QuadRat(e, d) for e in row) for row in scaled))
        dd = den(rot)
        assert dd == d, "reduced common denominator must agree with den(R)"
        records.append((rot, d, abs(d.norm())))
    records.sort(key=lambda rec: (rec[2], rec[0].key()))
    result = {"records": records, "bound": bound}
    _scan_cache[key] = result
    return result


def enumerate_rotations(bound: int, scan_factor: int = DEFAULT_SCAN_FACTOR,
                        max_leaves: int = DEFAULT_MAX_LEAVES) -> tuple[Rotation3, ...]:
    """All R in SO(3, Q(tau)) with |N(den R)| <= bound, each exactly once."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    recs = _scan_rotations(bound, scan_factor, max_leaves)["records"]
    return tuple(r[0] for r in recs)


def rotation_counts(bound: int, scan_factor: int = DEFAULT_SCAN_FACTOR,
                    max_leaves: int = DEFAULT_MAX_LEAVES) -> dict[int, int]:
    """Rotation count per denominator norm, for norms up to the bound."""
    recs = _scan_rotations(bound, scan_factor, max_leaves)["records"]
    counts = {m: 0 for m in range(1, bound + 1)}
    for _, _, nd in recs:
        counts[nd] += 1
    return counts


@dataclass(frozen=True)
class RotationCountReport:
    bound: int
    scan_factor: int
    rows: tuple[tuple[int, int, int], ...]  # (norm, found, expected)

    @property
    def mismatches(self):
        return tuple(r for r in self.rows if r[1] != r[2])

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        matched = len(self.rows) - len(self.mismatches)
        text = f"{matched}/{len(self.rows)} match (scan factor {self.scan_factor})"
        if self.mismatches:
            text += "".join(f"\n  |N(den)|={m}: found {got} != expected {want}"
                            for m, got, want in self.mismatches)
        return text


def verify_rotation_counts(bound: int, expected: Mapping[int, int],
                           scan_factor: int = DEFAULT_SCAN_FACTOR,
                           max_doublings: int = 2,
                           max_leaves: int = DEFAULT_MAX_LEAVES) -> RotationCountReport:
    """Compare scan counts to an expected profile, rescanning wider on shortfall.

    A shortfall can mean the quaternion box was too small, so the scan
    factor is doubled up to max_doublings times; a persistent mismatch is
    reported, never hidden.
    """
    factor = scan_factor
    for attempt in range(max_doublings + 1):
        counts = rotation_counts(bound, factor, max_leaves)
        rows = tuple((m, counts.get(m, 0), expected.get(m, 0))
                     for m in range(1, bound + 1))
        report = RotationCountReport(bound, factor, rows)
        shortfall = any(got < want for _, got, want in rows)
        if report.ok or not shortfall or attempt == max_doublings:
            return report
        factor *= 2
    return report


def icbrt(m: int) -> int:
    n = round(m ** (1 / 3))
    while (n + 1) ** 3 <= m:
        n += 1
    while n ** 3 > m:
        n -= 1
    return n


def count_submodules_3d(m: int, scan_factor: int = DEFAULT_SCAN_FACTOR,
                        max_leaves: int = DEFAULT_MAX_LEAVES) -> int:
    """Distinct submodules alpha * den(R) * R * Z[tau]^3 of index m.

    m must be a cube n^3; scales alpha run over canonical associates with
    |N(alpha)| * |N(den R)| = n and deduplication is by the canonical
    Hermite basis over Z[tau].
    """
    n = icbrt(m)
    if n ** 3 != m:
        raise ValueError(f"index {m} is not a cube")
    recs = _scan_rotations(n, scan_factor, max_leaves)["records"]
    by_norm: dict[int, list] = {}
    for rot, d, nd in recs:
        by_norm.setdefault(nd, []).append((rot, d))
    seen = set()
    for dn in divisors(n):
        alphas = norm_equation(TAU, n // dn)
        if not alphas or dn not in by_norm:
            continue
        for rot, d in by_norm[dn]:
            integral = _integral_matrix(rot, d)
            for alpha in alphas:
                cols = [tuple(alpha * integral[i][j] for i in range(3))
                        for j in range(3)]
                sub = hnf_over_ztau(cols)
                assert sub.index == m
                seen.add(sub.basis)
    return len(seen)


def hnf_over_ztau(generators: Sequence[Sequence[QuadInt]]) -> Submodule:
    """Canonical upper-triangular Z[tau]-basis of the span of the generators.

    Diagonal entries are canonical associates; off-diagonal entries are
    the deterministic nearest-quotient remainders mod the diagonal, so
    the result is unique per module.
    """
    cols = [list(g) for g in generators]
    if not cols or any(len(c) != 3 for c in cols):
        raise ValueError("generators must be 3-vectors")
    if any(e.ring != TAU for c in cols for e in c):
        raise ValueError("generators must have golden-ratio entries")
    pivots: list[list | None] = [None] * 3
    active = cols
    for i in range(2, -1, -1):
        live = [c for c in active if c[i]]
        rest = [c for c in active if not c[i]]
        while len(live) > 1:
            live.sort(key=lambda c: (abs(c[i].norm()), c[i].a, c[i].b))
            piv = live[0]
            new_live = [piv]
            for c in live[1:]:
                q, _ = divmod(c[i], piv[i])
                for k in range(3):
                    c[k] = c[k] - q * piv[k]
                (new_live if c[i] else rest).append(c)
            live = new_live
        if not live:
            raise ValueError("generators do not span rank 3")
        piv = live[0]
        uinv = unit_inverse(exact_div(piv[i], canonical_associate(piv[i])))
        pivots[i] = [x * uinv for x in piv]
        active = rest
    for j in range(3):
        col = pivots[j]
        for i in range(j - 1, -1, -1):
            q, _ = divmod(col[i], pivots[i][i])
            if q:
                for k in range(i + 1):
                    col[k] = col[k] - q * pivots[i][k]
    basis = tuple(tuple(pivots[j][i] for j in range(3)) for i in range(3))
    return Submodule(Ambient.Z_TAU3_AS_ZTAU_MODULE, basis)


@dataclass(frozen=True)
class AffineSimilarity:
    """x -> scale * R x + translation, mapping Z[tau]^3 into itself."""

    scale: QuadInt
    rotation: Rotation3
    translation: tuple[QuadInt, QuadInt, QuadInt]

    def __post_init__(self):
        if self.scale % den(self.rotation):
            raise ValueError("scale must be divisible by den(R) "
                             "for the map to preserve the module")

    def linear_matrix(self):
        return _integral_matrix(self.rotation, self.scale)

    def apply(self, vector: Sequence[QuadInt]):
        mat = self.linear_matrix()
        return tuple(sum((mat[i][k] * vector[k] for k in range(3)), TAU.zero())
                     + self.translation[i]
                     for i in range(3))


def identity_affine() -> AffineSimilarity:
    zero = TAU.zero()
    return AffineSimilarity(TAU.one(), Rotation3.identity(), (zero, zero, zero))


def compose_affine(f: AffineSimilarity, g: AffineSimilarity) -> AffineSimilarity:
    """(v1, L1) then (v2, L2) composes to (v1 + L1 v2, L1 L2)."""
    l1 = f.linear_matrix()
    moved = tuple(sum((l1[i][k] * g.translation[k] for k in range(3)), TAU.zero())
                  + f.translation[i]
                  for i in range(3))
    return AffineSimilarity(f.scale * g.scale, f.rotation @ g.rotation, moved)


def den_is_minimal(rotation: Rotation3) -> bool:
    """den(R)/pi fails to clear denominators for every prime pi | den(R)."""
    d = den(rotation)
    if d.is_unit():
        return True
    for pi, _ in prime_factors(d):
        smaller = exact_div(d, pi)
        ok = True
        for row in rotation.rows:
            for e in row:
                if (smaller * e.num) % e.den:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return False
    return True

"""Brute-force sublattice enumeration and the oracle counts.

Full-rank sublattices of Z^r of index m are enumerated through their
column Hermite normal form: upper-triangular basis, positive diagonal
with product m, off-diagonal entries of row i reduced mod the diagonal
entry d_i.  Invariance under ring multiplier actions is tested by exact
triangular solves, vectorized over blocks of candidates with numpy so
the rank-4 scans stay desk-scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

import numpy as np

from . import catalog
from .dirichlet import divisors
from .parallel import map_ordered, worker_count
from .quartic import ISQRT2, ITAU, QuarticInt, regular_rep

DEFAULT_MAX_CANDIDATES = 10_000_000

_CHUNK = 1 << 20


class EnumerationBudgetExceeded(RuntimeError):
    """Predicted candidate count exceeds the configured ceiling."""


class Ambient(Enum):
    """Which module a basis matrix describes."""

    Z_TAU_AS_Z2 = "ztau"           # Z[tau] over basis (1, tau)
    Z_ITAU_AS_Z4 = "zitau"         # Z[i,tau] over basis (1, i, tau, i*tau)
    Z_ISQRT2_AS_Z4 = "zisqrt2"     # Z[i,sqrt2] over basis (1, i, sqrt2, i*sqrt2)
    Z_TAU3_AS_ZTAU_MODULE = "ztau3"  # rank-3 free module over Z[tau]


@dataclass(frozen=True)
class MultiplierAction:
    """Integer matrix of multiplication by a ring generator."""

    name: str
    matrix: tuple[tuple[int, ...], ...]
    minimal_poly: tuple[int, ...]  # low-order-first coefficients

    def __post_init__(self):
        r = len(self.matrix)
        acc = [[0] * r for _ in range(r)]
        power = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
        for c in self.minimal_poly:
            for i in range(r):
                for j in range(r):
                    acc[i][j] += c * power[i][j]
            power = [[sum(self.matrix[i][k] * power[k][j] for k in range(r))
                      for j in range(r)] for i in range(r)]
        if any(v for row in acc for v in row):
            raise ValueError(f"action {self.name} violates its minimal polynomial")


_TAU_ACTION_2 = MultiplierAction(
    "tau", ((0, 1), (1, 1)), minimal_poly=(-1, -1, 1))

_I_ACTION_4 = MultiplierAction(
    "i",
    ((0, -1, 0, 0),
     (1, 0, 0, 0),
     (0, 0, 0, -1),
     (0, 0, 1, 0)),
    minimal_poly=(1, 0, 1))

_TAU_ACTION_4 = MultiplierAction(
    "tau",
    ((0, 0, 1, 0),
     (0, 0, 0, 1),
     (1, 0, 1, 0),
     (0, 1, 0, 1)),
    minimal_poly=(-1, -1, 1))

_SQRT2_ACTION_4 = MultiplierAction(
    "sqrt2",
    ((0, 0, 2, 0),
     (0, 0, 0, 2),
     (1, 0, 0, 0),
     (0, 1, 0, 0)),
    minimal_poly=(-2, 0, 1))

_ACTIONS = {
    Ambient.Z_TAU_AS_Z2: (_TAU_ACTION_2,),
    Ambient.Z_ITAU_AS_Z4: (_TAU_ACTION_4, _I_ACTION_4),
    Ambient.Z_ISQRT2_AS_Z4: (_SQRT2_ACTION_4, _I_ACTION_4),
}

_QUARTIC_RING = {
    Ambient.Z_ITAU_AS_Z4: ITAU,
    Ambient.Z_ISQRT2_AS_Z4: ISQRT2,
}


def ambient_rank(ambient: Ambient) -> int:
    return 2 if ambient is Ambient.Z_TAU_AS_Z2 else 4


def ambient_actions(ambient: Ambient) -> tuple[MultiplierAction, ...]:
    return _ACTIONS[ambient]


@dataclass(frozen=True)
class Submodule:
    """Full-rank submodule in canonical column HNF.

    basis[i][j] is the row-i entry of the j-th basis vector; entries are
    plain integers except for the rank-3 module over Z[tau], where they
    are QuadInt and the diagonal is made of canonical associates.
    """

    ambient: Ambient | None
    basis: tuple[tuple, ...]

    def __post_init__(self):
        r = len(self.basis)
        if any(len(row) != r for row in self.basis):
            raise ValueError("basis must be square")
        if self.ambient is Ambient.Z_TAU3_AS_ZTAU_MODULE:
            self._validate_quad()
        else:
            self._validate_int()

    def _validate_int(self):
        r = len(self.basis)
        for i in range(r):
            if self.basis[i][i] <= 0:
                raise ValueError("diagonal entries must be positive")
            for j in range(r):
                if j < i and self.basis[i][j] != 0:
                    raise ValueError("basis must be upper triangular")
                if j > i and not 0 <= self.basis[i][j] < self.basis[i][i]:
                    raise ValueError("off-diagonal entries must be reduced")

    def _validate_quad(self):
        from .quadratic import is_canonical_associate
        r = len(self.basis)
        for i in range(r):
            if not is_canonical_associate(self.basis[i][i]):
                raise ValueError("diagonal entries must be canonical associates")
            for j in range(i):
                if self.basis[i][j]:
                    raise ValueError("basis must be upper triangular")
            for j in range(i + 1, r):
                if divmod(self.basis[i][j], self.basis[i][i])[0]:
                    raise ValueError("off-diagonal entries must be reduced")

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def index(self) -> int:
        d = self.basis[0][0]
        for i in range(1, self.rank):
            d = d * self.basis[i][i]
        if self.ambient is Ambient.Z_TAU3_AS_ZTAU_MODULE:
            return abs(d.norm())
        return d

    def contains(self, vector: Sequence) -> bool:
        """Exact membership by back substitution on the triangular basis."""
        r = self.rank
        w = list(vector)
        for i in range(r - 1, -1, -1):
            q, rem = divmod(w[i], self.basis[i][i])
            if rem:
                return False
            for i2 in range(i):
                w[i2] = w[i2] - q * self.basis[i2][i]
        return True


def hnf_canonical(columns: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Canonical column HNF of the integer lattice spanned by the columns.

    Input columns must span full rank; returns the unique upper-triangular
    basis with positive diagonal and off-diagonal entries in [0, d_i).
    """
    cols = [list(c) for c in columns]
    r = len(cols[0])
    if any(len(c) != r for c in cols):
        raise ValueError("ragged columns")
    pivots: list[list[int] | None] = [None] * r
    active = cols
    for i in range(r - 1, -1, -1):
        live = [c for c in active if c[i] != 0]
        rest = [c for c in active if c[i] == 0]
        while len(live) > 1:
            live.sort(key=lambda c: abs(c[i]))
            piv = live[0]
            new_live = [piv]
            for c in live[1:]:
                q = c[i] // piv[i]
                if q:
                    for k in range(r):
                        c[k] -= q * piv[k]
                (new_live if c[i] != 0 else rest).append(c)
            live = new_live
            if len(live) == 1:
                break
        if not live:
            raise ValueError("columns do not span full rank")
        piv = live[0]
        if piv[i] < 0:
            piv = [-v for v in piv]
        pivots[i] = piv
        active = rest
    # reduce off-diagonal entries, lower pivot rows first
    for j in range(r):
        col = pivots[j]
        for i in range(j - 1, -1, -1):
            q = col[i] // pivots[i][i]
            if q:
                for k in range(i + 1):
                    col[k] -= q * pivots[i][k]
    return tuple(tuple(pivots[j][i] for j in range(r)) for i in range(r))


def ordered_diagonals(m: int, r: int) -> Iterator[tuple[int, ...]]:
    """All ordered r-tuples of positive integers with product m."""
    if r == 1:
        yield (m,)
        return
    for d in divisors(m):
        for rest in ordered_diagonals(m // d, r - 1):
            yield (d,) + rest


def hnf_candidate_count(rank: int, m: int) -> int:
    """Number of index-m HNF bases of Z^rank (sigma_1(m) for rank 2)."""
    total = 0
    for diag in ordered_diagonals(m, rank):
        block = 1
        for i, d in enumerate(diag):
            block *= d ** (rank - 1 - i)
        total += block
    return total


def _check_budget(predicted: int, max_candidates: int):
    if predicted > max_candidates:
        raise EnumerationBudgetExceeded(
            f"predicted {predicted} HNF candidates exceeds ceiling {max_candidates}; "
            f"raise max_candidates to proceed")


def hnf_sublattices(rank: int, m: int, ambient: Ambient | None = None,
                    max_candidates: int = DEFAULT_MAX_CANDIDATES) -> list[Submodule]:
    """All index-m sublattices of Z^rank, each exactly once, in HNF."""
    if rank not in (1, 2, 4, 6):
        raise ValueError("rank must be one of 1, 2, 4, 6")
    if m < 1:
        raise ValueError("index must be >= 1")
    _check_budget(hnf_candidate_count(rank, m), max_candidates)
    out = []
    for diag in ordered_diagonals(m, rank):
        ranges = [(i, j) for j in range(1, rank) for i in range(j)]
        shape = [diag[i] for i, _ in ranges]

        def fill(pos: int, digits: list[int]):
            if pos == len(ranges):
                basis = [[0] * rank for _ in range(rank)]
                for k in range(rank):
                    basis[k][k] = diag[k]
                for (i, j), v in zip(ranges, digits):
                    basis[i][j] = v
                out.append(Submodule(ambient, tuple(tuple(row) for row in basis)))
                return
            for v in range(shape[pos]):
                fill(pos + 1, digits + [v])

        fill(0, [])
    return out


def is_invariant(sub: Submodule, actions: Sequence[MultiplierAction]) -> bool:
    """True iff every action maps every basis vector back into the lattice."""
    r = sub.rank
    for act in actions:
        if len(act.matrix) != r:
            raise ValueError("action dimension does not match submodule rank")
        for j in range(r):
            col = [sub.basis[i][j] for i in range(r)]
            image = [sum(act.matrix[i][k] * col[k] for k in range(r)) for i in range(r)]
            if not sub.contains(image):
                return False
    return True


# ---------------------------------------------------------------------------
# vectorized invariance kernel


def _stabilizer_mask(diag, digits, action, length):
    """Boolean mask of candidates whose lattice is preserved by the action.

    Candidates share the diagonal; digits maps the strictly-upper
    positions (i, j) to arrays of off-diagonal values.  Membership of
    each transformed basis column is decided by exact back substitution;
    floor divmod keeps the exactness test (remainder == 0) valid for
    negative entries.
    """
    r = len(diag)
    t = action.matrix

    def entry(i, j):
        if i == j:
            return diag[j]
        if i < j:
            return digits[(i, j)]
        return 0

    ok = np.ones(length, dtype=bool)
    for j in range(r):
        w = [sum(t[i][l] * entry(l, j) for l in range(j + 1) if t[i][l])
             for i in range(r)]
        for i in range(r - 1, -1, -1):
            q, rem = np.divmod(w[i], diag[i]) if isinstance(w[i], np.ndarray) \
                else divmod(w[i], diag[i])
            ok = ok & (rem == 0)
            for i2 in range(i):
                e = entry(i2, i)
                if isinstance(e, np.ndarray) or e:
                    w[i2] = w[i2] - q * e
        if not ok.any():
            break
    return ok


def _invariant_for_diagonal(diag, actions, collect):
    """(count, bases) of invariant candidates over one diagonal type."""
    r = len(diag)
    positions = [(i, j) for j in range(1, r) for i in range(j)]
    shape = tuple(diag[i] for i, _ in positions)
    total = 1
    for s in shape:
        total *= s
    count = 0
    bases = []
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        block = np.unravel_index(idx, shape) if positions else ()
        digits = {pos: arr for pos, arr in zip(positions, block)}
        length = hi - lo
        for act in actions:
            mask = _stabilizer_mask(diag, digits, act, length)
            digits = {pos: arr[mask] for pos, arr in digits.items()}
            length = int(mask.sum())
            if length == 0:
                break
        count += length
        if collect and length:
            for k in range(length):
                basis = [[0] * r for _ in range(r)]
                for i in range(r):
                    basis[i][i] = diag[i]
                for pos, arr in digits.items():
                    basis[pos[0]][pos[1]] = int(arr[k])
                bases.append(tuple(tuple(row) for row in basis))
    return count, bases


def _invariant_sublattices(ambient: Ambient, m: int, max_candidates: int,
                           collect: bool):
    r = ambient_rank(ambient)
    _check_budget(hnf_candidate_count(r, m), max_candidates)
    actions = ambient_actions(ambient)
    count = 0
    found = []
    for diag in ordered_diagonals(m, r):
        c, bases = _invariant_for_diagonal(diag, actions, collect)
        count += c
        found.extend(bases)
    return count, [Submodule(ambient, b) for b in found]


def count_ideals(ambient: Ambient, m: int,
                 max_candidates: int = DEFAULT_MAX_CANDIDATES) -> int:
    """Number of index-m sublattices invariant under all ring generators."""
    return _invariant_sublattices(ambient, m, max_candidates, collect=False)[0]


def list_ideals(ambient: Ambient, m: int,
                max_candidates: int = DEFAULT_MAX_CANDIDATES) -> list[Submodule]:
    return _invariant_sublattices(ambient, m, max_candidates, collect=True)[1]


# ---------------------------------------------------------------------------
# principality


def is_principal(sub: Submodule, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> bool:
    """Whether an ideal is generated by a single element.

    A generator must be an ideal element whose absolute norm equals the
    index.  Units i^k mu^l move any generator into the fundamental domain
    where both archimedean square-magnitudes are at most sqrt(index)*mu1;
    we scan that box enlarged by a factor 2 per embedding, so an empty
    scan proves non-principality.
    """
    ring = _QUARTIC_RING.get(sub.ambient)
    if ring is None:
        raise ValueError("principality is defined for the rank-4 ring ambients")
    if not is_invariant(sub, ambient_actions(sub.ambient)):
        raise ValueError("submodule is not an ideal")
    n = sub.index
    mu1 = ring.quad.fundamental_unit.embedding_float()
    cap = 2.0 * math.sqrt(n) * mu1
    side = math.sqrt(cap) * 1.0000001
    pairs = []
    for x in _box_elements(ring.quad, side):
        e1 = x.embedding_float() ** 2
        e2 = x.conj_embedding_float() ** 2
        if e1 <= cap + 1e-9 and e2 <= cap + 1e-9:
            pairs.append((x, e1, e2))
    pairs.sort(key=lambda t: (t[1], t[0].a, t[0].b))
    for re, r1, r2 in pairs:
        for im, s1, s2 in pairs:
            if r1 + s1 > cap + 1e-9 or r2 + s2 > cap + 1e-9:
                continue
            cand = QuarticInt.from_parts(re, im, ring)
            if not cand or cand.abs_norm() != n:
                continue
            if not sub.contains(cand.coeffs):
                continue
            generated = hnf_canonical(list(zip(*regular_rep(cand))))
            if generated == sub.basis:
                return True
    return False


def _box_elements(quad_ring, side: float):
    from .quadratic import elements_in_embedding_box
    return elements_in_embedding_box(quad_ring, side, side)


def count_similarity_submodules(ambient: Ambient, m: int,
                                max_candidates: int = DEFAULT_MAX_CANDIDATES) -> int:
    """Submodules of index m that arise from a multiplication map.

    Z[tau] and Z[i,tau] have class number 1, so every ideal qualifies;
    for Z[i,sqrt2] only the principal ideals do.
    """
    if ambient in (Ambient.Z_TAU_AS_Z2, Ambient.Z_ITAU_AS_Z4):
        return count_ideals(ambient, m, max_candidates)
    if ambient is Ambient.Z_ISQRT2_AS_Z4:
        ideals = list_ideals(ambient, m, max_candidates)
        return sum(1 for s in ideals if is_principal(s, max_candidates))
    raise ValueError(f"no similarity-submodule count for ambient {ambient}")


# ---------------------------------------------------------------------------
# oracle vs. catalog


_EXPECTED_SERIES = {
    Ambient.Z_TAU_AS_Z2: catalog.zeta_q_tau,
    Ambient.Z_ITAU_AS_Z4: catalog.zeta_q_itau,
    Ambient.Z_ISQRT2_AS_Z4: catalog.zeta_zi_sqrt2,
}


@dataclass(frozen=True)
class OracleReport:
    """Outcome of comparing brute-force counts against a coefficient table."""

    ambient: str
    limit: int
    rows: tuple[tuple[int, int, int], ...]  # (m, oracle count, expected)

    @property
    def mismatches(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(r for r in self.rows if r[1] != r[2])

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        matched = len(self.rows) - len(self.mismatches)
        text = f"{matched}/{len(self.rows)} match"
        if self.mismatches:
            text += "".join(f"\n  m={m}: oracle {got} != expected {want}"
                            for m, got, want in self.mismatches)
        return text


def verify_series(ambient: Ambient, limit: int,
                  max_candidates: int = DEFAULT_MAX_CANDIDATES,
                  workers: int | None = None) -> OracleReport:
    """Compare oracle counts with the catalog coefficients for m <= limit."""
    series = _EXPECTED_SERIES[ambient](limit)
    rank = ambient_rank(ambient)
    predicted = sum(hnf_candidate_count(rank, m) for m in range(1, limit + 1))
    _check_budget(predicted, max_candidates)
    if ambient is Ambient.Z_ISQRT2_AS_Z4:
        def counter(m):
            return count_similarity_submodules(ambient, m, max_candidates)
    else:
        def counter(m):
            return count_ideals(ambient, m, max_candidates)
    if workers is None:
        workers = worker_count()
    counts = map_ordered(counter, range(1, limit + 1), workers)
    rows = tuple((m, counts[m - 1], series.a(m)) for m in range(1, limit + 1))
    return OracleReport(ambient.value, limit, rows)

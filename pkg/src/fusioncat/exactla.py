"""Exact rational linear algebra, sized for the problems in this package.

Three tools live here:

* IntSpan, an incremental row-space tracker over Q that also hands back the
  expansion coefficients of a member vector over the inserted basis;
* a sparse reduced row echelon solver for large-ish integer systems (rows stay
  short, a few hundred pivots), kept exact with Fractions;
* a depth-first enumerator of the nonnegative bounded integer points of the
  affine solution space that the echelon form describes.

None of this tries to be a general sparse-linear-algebra library. It is the
minimum that lets the solvers downstream stay exact without paying the dense
Fraction-matrix price.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

__all__ = [
    "IntSpan",
    "coeff_splits",
    "square_split_options",
    "LinearSystem",
    "RrefResult",
    "lattice_points",
]


class IntSpan:
    """Incremental exact row space. Rows are gcd-normalized integer vectors
    kept in echelon order; coords() returns Fractions over the inserted basis
    or None if the probe is outside the span."""

    def __init__(self):
        self.rows = []  # (pivot index, integer object-array)
        self.exprs = []  # coordinates of each stored row over inserted vectors
        self.nbasis = 0

    def _reduce(self, vec):
        v = [Fraction(int(x)) for x in vec]
        combo = [Fraction(0)] * self.nbasis
        for (pivot, row), rexpr in zip(self.rows, self.exprs):
            if v[pivot]:
                f = v[pivot] / row[pivot]
                for i, rv in enumerate(row):
                    if rv:
                        v[i] -= f * rv
                for i, e in enumerate(rexpr):
                    if e:
                        combo[i] += f * e
        return v, combo

    def coords(self, vec):
        v, combo = self._reduce(vec)
        if any(v):
            return None
        return combo

    def add(self, vec) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        v, combo = self._reduce(vec)
        nz = [i for i, x in enumerate(v) if x]
        if not nz:
            return False
        L = 1
        for x in v:
            L = L * x.denominator // gcd(L, x.denominator)
        vi = [int(x * L) for x in v]
        g = 0
        for x in vi:
            g = gcd(g, x)
        vi = np.array([x // g for x in vi], dtype=object)
        scale = Fraction(L, g)
        # stored row = scale * (inserted - sum combo_i * earlier_i)
        expr = [-c * scale for c in combo] + [scale]
        self.rows.append((nz[0], vi))
        for ex in self.exprs:
            ex.append(Fraction(0))
        self.exprs.append(expr)
        self.nbasis += 1
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def coeff_splits(total, sq):
    """Multisets of positive integers with the given sum and sum of squares,
    each returned in weakly decreasing order."""
    out = []

    def rec(rem, sqrem, maxc, cur):
        if rem == 0:
            if sqrem == 0:
                out.append(tuple(cur))
            return
        for c in range(min(rem, maxc), 0, -1):
            if c * c <= sqrem:
                rec(rem - c, sqrem - c * c, c, cur + [c])

    rec(total, sq, total, [])
    return out


def square_split_options(c, parts):
    """All achievable sums of squares when writing c as at most `parts`
    positive integers. {0} when c == 0."""
    if c == 0:
        return {0}
    sqs = set()

    def rec(rem, left, maxc, acc):
        if rem == 0:
            sqs.add(acc)
            return
        if left == 0:
            return
        for cc in range(min(rem, maxc), 0, -1):
            rec(rem - cc, left - 1, cc, acc + cc * cc)

    rec(c, parts, c, 0)
    return sqs


@dataclass
class RrefResult:
    consistent: bool
    ncols: int
    # pivot column -> (row dict over free columns only, rhs); row[pivot] == 1 implied
    pivots: dict = field(default_factory=dict)
    free_cols: list = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.pivots)


class LinearSystem:
    """Sparse exact linear system A x = b over Q, reduced incrementally.

    Rows arrive as {column: coefficient} dicts. The reduced form is
    maintained after every insertion, so rows never blow up as long as the
    system itself is sparse. Inconsistency is detected on insertion and
    reported by rref().
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._pivots = {}  # col -> (rowdict without the pivot col, rhs)
        self._occupancy = {}  # col -> set of pivot cols whose row mentions it
        self._consistent = True

    def add(self, coeffs, rhs=0):
        if not self._consistent:
            return
        row = {c: Fraction(v) for c, v in coeffs.items() if v}
        r = Fraction(rhs)
        # eliminate existing pivot columns; pivot rows carry no other pivots,
        # so one sweep is enough
        for col in [c for c in row if c in self._pivots]:
            f = row.pop(col)
            prow, prhs = self._pivots[col]
            for cc, vv in prow.items():
                nv = row.get(cc, 0) - f * vv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
            r -= f * prhs
        if not row:
            if r != 0:
                self._consistent = False
            return
        pcol = min(row)
        inv = 1 / row.pop(pcol)
        row = {c: v * inv for c, v in row.items()}
        r *= inv
        # back-substitute into every pivot row that mentions pcol
        for other in list(self._occupancy.get(pcol, ())):
            prow, prhs = self._pivots[other]
            f = prow.pop(pcol)
            self._occupancy[pcol].discard(other)
            for cc, vv in row.items():
                nv = prow.get(cc, 0) - f * vv
                if nv:
                    if cc not in prow:
                        self._occupancy.setdefault(cc, set()).add(other)
                    prow[cc] = nv
                else:
                    if cc in prow:
                        del prow[cc]
                        self._occupancy[cc].discard(other)
            self._pivots[other] = (prow, prhs - f * r)
        self._pivots[pcol] = (row, r)
        for cc in row:
            self._occupancy.setdefault(cc, set()).add(pcol)

    def rref(self) -> RrefResult:
        free = [c for c in range(self.ncols) if c not in self._pivots]
        return RrefResult(
            consistent=self._consistent,
            ncols=self.ncols,
            pivots={c: (dict(rw), rh) for c, (rw, rh) in self._pivots.items()},
            free_cols=free,
        )


def lattice_points(res: RrefResult, caps, max_sols=None):
    """Nonnegative integer solutions of the reduced system, with every
    coordinate bounded above by caps[col] inclusive.

    Depth-first over the free columns with interval pruning of every pivot
    expression at each level; pivot integrality is checked at the leaves.
    Returns full-length solution vectors as lists of ints.
    """
    assert res.consistent
    free_cols = res.free_cols
    nf = len(free_cols)
    free_pos = {c: i for i, c in enumerate(free_cols)}
    piv_items = []
    for col, (rowdict, rhs) in sorted(res.pivots.items()):
        cs = [Fraction(0)] * nf
        for cc, vv in rowdict.items():
            cs[free_pos[cc]] = vv
        piv_items.append((col, cs, rhs))

    sols = []
    assign = [0] * nf

    def bounds_ok(depth):
        for col, cs, val in piv_items:
            lo = hi = val
            for idx in range(nf):
                c = cs[idx]
                if not c:
                    continue
                if idx < depth:
                    lo -= c * assign[idx]
                    hi -= c * assign[idx]
                else:
                    top = caps[free_cols[idx]]
                    if c > 0:
                        lo -= c * top
                    else:
                        hi -= c * top
            if hi < 0 or lo > caps[col]:
                return False
        return True

    def dfs(depth):
        if max_sols is not None and len(sols) >= max_sols:
            return
        if depth == nf:
            x = [0] * res.ncols
            for idx, fc in enumerate(free_cols):
                x[fc] = assign[idx]
            for col, cs, rhs in piv_items:
                v = rhs - sum(c * assign[idx] for idx, c in enumerate(cs) if c)
                if v.denominator != 1 or v < 0 or v > caps[col]:
                    return
                x[col] = int(v)
            sols.append(x)
            return
        for val in range(0, caps[free_cols[depth]] + 1):
            assign[depth] = val
            if bounds_ok(depth + 1):
                dfs(depth + 1)
        assign[depth] = 0

    if bounds_ok(0):
        dfs(0)
    return sols

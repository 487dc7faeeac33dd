"""Greedy growth of uniquely-representable lattice point sets.

Starting from a finite set of nonzero initial vectors in Z_{>=0}^d, the
generated set repeatedly adjoins every smallest point (measured by an
admissible size function) that can be written as the sum of two distinct
current members in exactly one way.  A size function f is admissible when
f(u+v) > max(f(u), f(v)) for nonzero u, v and every sublevel set is finite;
the resulting point set does not depend on which admissible f is used, so
the coordinate sum is the canonical choice here (integer levels, exact
arithmetic).

Two independent generators are provided: :func:`generate` (incremental
representation counting, dense numpy grids where possible) and
:func:`generate_reference` (definition-faithful brute force, recounting all
pairwise sums from scratch at every step).  They must agree on every input;
the test suite checks this on many small instances.
"""

from __future__ import annotations

import heapq
import operator
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod

import numpy as np

from .errors import (
    BoundTooSmall,
    DimensionMismatch,
    DuplicateVector,
    EmptyConfig,
    NegativeCoordinate,
    ZeroVector,
)

Point = tuple[int, ...]

# Dense-grid engine limits.  Above _DENSE_CELL_LIMIT cells the exact but
# slower hash-map engine takes over; grids below _SMALL_GRID_CELLS get their
# level decomposition precomputed in one vectorized pass.
_DENSE_CELL_LIMIT = 150_000_000
_SMALL_GRID_CELLS = 2_000_000


@dataclass(frozen=True)
class SizeFunction:
    """Admissible size function on Z_{>=0}^d.

    Kinds: ``coordinate-sum`` (canonical), ``weighted-sum`` with positive
    rational weights, and ``euclidean-norm-squared``.  All three return
    exact values (int or Fraction), so level comparisons never touch
    floating point.
    """

    kind: str
    weights: tuple[Fraction, ...] | None = None

    @staticmethod
    def coordinate_sum() -> "SizeFunction":
        return SizeFunction("coordinate-sum")

    @staticmethod
    def euclidean_norm_squared() -> "SizeFunction":
        return SizeFunction("euclidean-norm-squared")

    @staticmethod
    def weighted_sum(weights) -> "SizeFunction":
        ws = tuple(Fraction(w) for w in weights)
        if not ws or any(w <= 0 for w in ws):
            raise ValueError("weighted-sum requires positive rational weights")
        return SizeFunction("weighted-sum", ws)

    def value(self, p: Point):
        if self.kind == "coordinate-sum":
            return sum(p)
        if self.kind == "euclidean-norm-squared":
            return sum(c * c for c in p)
        if self.kind == "weighted-sum":
            return sum(w * c for w, c in zip(self.weights, p))
        raise ValueError(f"unknown size function kind {self.kind!r}")

    def check_dim(self, dim: int) -> None:
        if self.kind == "weighted-sum" and len(self.weights) != dim:
            raise DimensionMismatch(
                f"{len(self.weights)} weights for dimension {dim}"
            )


@dataclass(frozen=True)
class Bound:
    """Finite truncation of the (always infinite) generated set.

    ``box`` bounds every coordinate, ``level`` bounds the f-value.  Both are
    exact truncations: every summand of an in-bound point is itself in
    bound, so the generated slice equals the infinite set intersected with
    the bound.
    """

    kind: str
    limits: tuple[int, ...] = ()
    cap: object = 0  # int or Fraction

    @classmethod
    def box(cls, limits) -> "Bound":
        lims = tuple(operator.index(c) for c in limits)
        if not lims or any(c < 0 for c in lims):
            raise ValueError("box limits must be nonnegative integers")
        return cls("box", limits=lims)

    @classmethod
    def level(cls, cap) -> "Bound":
        if cap < 0:
            raise ValueError("level cap must be nonnegative")
        return cls("level", cap=cap)

    def contains(self, p: Point, fval=None) -> bool:
        if self.kind == "box":
            return all(c <= l for c, l in zip(p, self.limits))
        return fval <= self.cap


@dataclass(frozen=True)
class InitialConfig:
    """Validated initial vectors: nonzero, distinct, nonnegative, fixed dim."""

    dim: int
    initials: tuple[Point, ...]

    @property
    def k(self) -> int:
        return len(self.initials)


def validate_config(raw, dim: int) -> InitialConfig:
    """Check and freeze a raw list of integer tuples as an initial config."""
    if dim < 1:
        raise DimensionMismatch(f"dimension must be >= 1, got {dim}")
    vectors = list(raw)
    if not vectors:
        raise EmptyConfig("at least one initial vector is required")
    pts: list[Point] = []
    seen: set[Point] = set()
    for v in vectors:
        t = tuple(operator.index(c) for c in v)
        if len(t) != dim:
            raise DimensionMismatch(f"vector {t} does not have dimension {dim}")
        if any(c < 0 for c in t):
            raise NegativeCoordinate(f"vector {t} has a negative coordinate")
        if all(c == 0 for c in t):
            raise ZeroVector("the zero vector is not a valid initial element")
        if t in seen:
            raise DuplicateVector(f"vector {t} appears twice")
        seen.add(t)
        pts.append(t)
    return InitialConfig(dim, tuple(pts))


@dataclass(frozen=True)
class UlamSet:
    """A generated set truncated to a bound.

    ``points`` are sorted by (f-level, lexicographic); ``levels`` holds the
    f-value of each point.  Membership is O(1) via ``in``.
    """

    config: InitialConfig
    sizefn: SizeFunction
    bound: Bound
    points: tuple[Point, ...]
    levels: tuple
    members: frozenset

    def __contains__(self, p) -> bool:
        return tuple(p) in self.members

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return (
            f"UlamSet(k={self.config.k}, dim={self.config.dim}, "
            f"bound={self.bound.kind}, n={len(self.points)})"
        )

    @property
    def dim(self) -> int:
        return self.config.dim


def _assemble(config, sizefn, bound, points, levels) -> UlamSet:
    order = sorted(range(len(points)), key=lambda i: (levels[i], points[i]))
    pts = tuple(points[i] for i in order)
    lvs = tuple(levels[i] for i in order)
    return UlamSet(config, sizefn, bound, pts, lvs, frozenset(pts))


def _check_initials_in_bound(config, bound, sizefn) -> None:
    for v in config.initials:
        if not bound.contains(v, sizefn.value(v)):
            raise BoundTooSmall(f"bound excludes initial vector {v}")


def _check_bound_dim(dim, bound) -> None:
    if bound.kind == "box" and len(bound.limits) != dim:
        raise DimensionMismatch(
            f"box has {len(bound.limits)} limits for dimension {dim}"
        )


def generate(config: InitialConfig, bound: Bound, sizefn: SizeFunction | None = None) -> UlamSet:
    """Generate the set truncated to ``bound``.

    Points are processed in nondecreasing f-level; a point is admitted iff
    its number of representations as a sum of two distinct earlier members
    is exactly one, and all ties at one level are admitted together.  The
    result is exactly the infinite set intersected with the bound.
    """
    sizefn = sizefn or SizeFunction.coordinate_sum()
    sizefn.check_dim(config.dim)
    _check_bound_dim(config.dim, bound)
    _check_initials_in_bound(config, bound, sizefn)
    if sizefn.kind == "coordinate-sum":
        if bound.kind == "box":
            dims = tuple(l + 1 for l in bound.limits)
        else:
            dims = (int(bound.cap) + 1,) * config.dim
        cells = prod(dims)
        if cells <= _DENSE_CELL_LIMIT and (
            config.dim <= 3 or cells <= _SMALL_GRID_CELLS
        ):
            return _generate_dense(config, bound)
    return _generate_sparse(config, bound, sizefn)


# ---------------------------------------------------------------------------
# Dense engine: numpy grids, coordinate-sum levels.


def _ragged_arange(starts: np.ndarray, lens: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Concatenate arange(starts[i], starts[i]+lens[i]); also return owners."""
    total = int(lens.sum())
    owner = np.repeat(np.arange(lens.size), lens)
    base = np.concatenate(([0], np.cumsum(lens)[:-1]))
    offs = np.arange(total) - np.repeat(base, lens)
    return starts[owner] + offs, owner


def _diag_cells(L: int, limits, strides: np.ndarray) -> np.ndarray:
    """Flat indices of all in-box cells with coordinate sum L, in lex order."""
    d = len(limits)
    if d == 1:
        if L > limits[0]:
            return np.empty(0, dtype=np.int64)
        return np.array([L], dtype=np.int64)
    if d == 2:
        xlo = max(0, L - limits[1])
        xhi = min(limits[0], L)
        if xhi < xlo:
            return np.empty(0, dtype=np.int64)
        xs = np.arange(xlo, xhi + 1, dtype=np.int64)
        return xs * strides[0] + (L - xs) * strides[1]
    # d == 3
    xlo = max(0, L - limits[1] - limits[2])
    xhi = min(limits[0], L)
    if xhi < xlo:
        return np.empty(0, dtype=np.int64)
    xs_range = np.arange(xlo, xhi + 1, dtype=np.int64)
    rem = L - xs_range
    ylo = np.maximum(0, rem - limits[2])
    yhi = np.minimum(limits[1], rem)
    ys, owner = _ragged_arange(ylo, yhi - ylo + 1)
    xs = xs_range[owner]
    zs = rem[owner] - ys
    return xs * strides[0] + ys * strides[1] + zs * strides[2]


def _generate_dense(config: InitialConfig, bound: Bound) -> UlamSet:
    d = config.dim
    if bound.kind == "box":
        limits = bound.limits
        lmax = sum(limits)
        cap = None
    else:
        cap = int(bound.cap)
        limits = (cap,) * d
        lmax = cap
    dims = tuple(l + 1 for l in limits)
    cells = prod(dims)
    strides = np.array([prod(dims[i + 1:]) for i in range(d)], dtype=np.int64)
    limits_arr = np.array(limits, dtype=np.int64)

    member = np.zeros(cells, dtype=bool)
    counts = np.zeros(cells, dtype=np.uint32)
    member_nd = member.reshape(dims)  # shared memory views for slice updates
    counts_nd = counts.reshape(dims)

    # member storage in admission order (levels nondecreasing)
    mcap = 1024
    mcoords = np.empty((mcap, d), dtype=np.int64)
    mflats = np.empty(mcap, dtype=np.int64)
    mlevels = np.empty(mcap, dtype=np.int64)
    n = 0

    init_by_level: dict[int, list[int]] = {}
    for v in config.initials:
        fl = int(sum(c * s for c, s in zip(v, strides)))
        init_by_level.setdefault(sum(v), []).append(fl)

    if cells <= _SMALL_GRID_CELLS or d > 3:
        sums = np.indices(dims).reshape(d, -1).sum(axis=0)
        order = np.argsort(sums, kind="stable").astype(np.int64)
        splits = np.searchsorted(sums[order], np.arange(lmax + 2))

        def cells_at(L):
            return order[splits[L]:splits[L + 1]]
    else:

        def cells_at(L):
            return _diag_cells(L, limits, strides)

    out_pts: list[Point] = []
    out_levels: list[int] = []

    for L in range(lmax + 1):
        flats_l = cells_at(L)
        batch: set[int] = set()
        if flats_l.size:
            sel = (counts[flats_l] == 1) & ~member[flats_l]
            if sel.any():
                batch.update(flats_l[sel].tolist())
        batch.update(init_by_level.get(L, ()))
        if not batch:
            continue
        for fl in sorted(batch):  # flat order is lex order (C strides)
            if n == mcap:
                mcap *= 2
                mcoords = np.resize(mcoords, (mcap, d))
                mflats = np.resize(mflats, mcap)
                mlevels = np.resize(mlevels, mcap)
            rest = fl
            w = []
            for s in strides.tolist():
                w.append(rest // s)
                rest %= s
            warr = np.array(w, dtype=np.int64)
            if cap is None:
                # two equivalent updates; pick the cheaper one per point:
                # add the member grid beyond w (cost: remaining box volume)
                # or gather the in-box members (cost: a few passes over n)
                rem_volume = prod(l - c + 1 for l, c in zip(limits, w))
                if rem_volume < 4 * n:
                    wslice = tuple(slice(c, None) for c in w)
                    mslice = tuple(slice(0, l - c + 1) for l, c in zip(limits, w))
                    counts_nd[wslice] += member_nd[mslice]
                else:
                    mask = (mcoords[:n] <= limits_arr - warr).all(axis=1)
                    idx = mflats[:n][mask] + fl
                    if idx.size:
                        counts[idx] += 1  # targets u+w distinct for fixed w
            else:
                pe = int(np.searchsorted(mlevels[:n], cap - L, side="right"))
                idx = mflats[:pe] + fl
                if idx.size:
                    counts[idx] += 1
            member[fl] = True
            mcoords[n] = warr
            mflats[n] = fl
            mlevels[n] = L
            n += 1
            out_pts.append(tuple(w))
            out_levels.append(L)

    return _assemble(config, SizeFunction.coordinate_sum(), bound, out_pts, out_levels)


# ---------------------------------------------------------------------------
# Sparse engine: exact arithmetic, any admissible size function.


def _generate_sparse(config: InitialConfig, bound: Bound, sizefn) -> UlamSet:
    fval = sizefn.value
    if bound.kind == "box":
        limits = bound.limits

        def in_bound(p):
            return all(c <= l for c, l in zip(p, limits))
    else:
        cap = bound.cap

        def in_bound(p):
            return fval(p) <= cap

    init_sorted = sorted(config.initials, key=lambda p: (fval(p), p))
    init_f = [fval(p) for p in init_sorted]

    members: list[Point] = []
    member_set: set[Point] = set()
    counts: dict[Point, int] = {}
    heap: list = []
    out_pts: list[Point] = []
    out_levels: list = []

    def admit(w: Point, fw) -> None:
        for u in members:
            s = tuple(a + b for a, b in zip(u, w))
            if not in_bound(s):
                continue
            c = counts.get(s, 0)
            if c == 0:
                counts[s] = 1
                heapq.heappush(heap, (fval(s), s))
            elif c == 1:
                counts[s] = 2  # saturating: only 0/1/>=2 matters
        members.append(w)
        member_set.add(w)
        out_pts.append(w)
        out_levels.append(fw)

    ii = 0
    while ii < len(init_sorted) or heap:
        if ii < len(init_sorted) and (not heap or init_f[ii] <= heap[0][0]):
            level = init_f[ii]
        else:
            level = heap[0][0]
        batch_init: list[Point] = []
        while ii < len(init_sorted) and init_f[ii] == level:
            batch_init.append(init_sorted[ii])
            ii += 1
        binit = set(batch_init)
        batch_cand: list[Point] = []
        while heap and heap[0][0] == level:
            _, p = heapq.heappop(heap)
            if p in member_set or p in binit:
                continue
            if counts.get(p) == 1:
                batch_cand.append(p)
        for w in sorted(binit | set(batch_cand)):
            admit(w, level)

    return _assemble(config, sizefn, bound, out_pts, out_levels)


# ---------------------------------------------------------------------------
# Brute-force reference generator (independent oracle).


def generate_reference(config: InitialConfig, bound: Bound, sizefn: SizeFunction | None = None) -> UlamSet:
    """Definition-faithful generator for small bounds.

    At every step, re-enumerate all pairwise sums of the current set, count
    every candidate's representations from scratch, and admit the minimal-f
    candidates with exactly one representation.  No state is shared with
    :func:`generate`; this is the oracle the fast engine is tested against.
    """
    sizefn = sizefn or SizeFunction.coordinate_sum()
    sizefn.check_dim(config.dim)
    _check_bound_dim(config.dim, bound)
    _check_initials_in_bound(config, bound, sizefn)
    fval = sizefn.value

    if bound.kind == "box":
        limits = bound.limits

        def in_bound(p):
            return all(c <= l for c, l in zip(p, limits))
    else:

        def in_bound(p):
            return fval(p) <= bound.cap

    current: set[Point] = set(config.initials)
    while True:
        cnt: dict[Point, int] = {}
        for u, v in combinations(current, 2):
            s = tuple(a + b for a, b in zip(u, v))
            if in_bound(s):
                cnt[s] = cnt.get(s, 0) + 1
        best = None
        batch: list[Point] = []
        for s, c in cnt.items():
            if c != 1 or s in current:
                continue
            fs = fval(s)
            if best is None or fs < best:
                best, batch = fs, [s]
            elif fs == best:
                batch.append(s)
        if not batch:
            break
        current.update(batch)

    pts = sorted(current, key=lambda p: (fval(p), p))
    return _assemble(config, sizefn, bound, pts, [fval(p) for p in pts])


def representation_count(p, members) -> int:
    """Number of unordered pairs {u, v} of distinct members with u + v = p."""
    p = tuple(p)
    if all(c == 0 for c in p):
        raise ZeroVector("representation counts are defined for nonzero points")
    mset = members.members if isinstance(members, UlamSet) else frozenset(
        tuple(m) for m in members
    )
    ordered = 0
    for u in mset:
        v = tuple(a - b for a, b in zip(p, u))
        if any(c < 0 for c in v) or v == u:
            continue
        if v in mset:
            ordered += 1
    return ordered // 2

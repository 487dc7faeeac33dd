"""Fast generator for one-dimensional Ulam sequences.

The sequence starts from two or more distinct positive integers; every
subsequent term is the smallest integer expressible as the sum of two
distinct earlier terms in exactly one way.  Representation counts are kept
in a flat array over values and updated incrementally with one vectorized
pass per admitted term, which keeps tens of thousands of terms well under
a second.

All initial terms are members from the very start, so with more than two
initials a new term may be smaller than the largest initial (for initials
1, 2, 5 the next term is 3).  The sweep therefore walks values upward and
merges pending initials in order, rather than scanning past the last
admitted term.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInitials, TooShort

# value-array headroom when growing (factor on the largest needed index)
_GROWTH = 2


@dataclass(frozen=True)
class Sequence1D:
    """A computed prefix of a one-dimensional Ulam sequence."""

    initials: tuple[int, ...]
    terms: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        head = ", ".join(map(str, self.terms[:8]))
        return f"Sequence1D(initials={self.initials}, n={len(self.terms)}, [{head}, ...])"


def ulam_sequence(initials, n_terms: int) -> Sequence1D:
    """First ``n_terms`` terms (in increasing order) of the sequence."""
    inits = tuple(int(a) for a in initials)
    if len(inits) < 2:
        raise InvalidInitials("need at least two initial terms")
    if any(a <= 0 for a in inits):
        raise InvalidInitials("initial terms must be positive")
    if len(set(inits)) != len(inits):
        raise InvalidInitials("initial terms must be distinct")
    if n_terms < len(inits):
        raise InvalidInitials(
            f"n_terms={n_terms} is smaller than the {len(inits)} initial terms"
        )

    inits = tuple(sorted(inits))
    k = len(inits)
    members = np.empty(max(1024, n_terms + k), dtype=np.int64)
    members[:k] = inits
    m = k
    top = inits[-1]  # largest member value so far

    counts = np.zeros(_GROWTH * (2 * top + 1), dtype=np.uint32)
    for i in range(k):
        for j in range(i + 1, k):
            counts[inits[i] + inits[j]] += 1

    out: list[int] = []
    pending = list(inits)  # initials not yet merged into the output
    pi = 0
    lo = 1  # next undecided value

    while len(out) < n_terms:
        next_init = pending[pi] if pi < len(pending) else None
        nxt = -1
        chunk = 64
        scan = lo
        while True:
            hi = counts.size if next_init is None else min(next_init, counts.size)
            hi = min(hi, scan + chunk)
            if scan < hi:
                hits = np.flatnonzero(counts[scan:hi] == 1)
                if hits.size:
                    nxt = scan + int(hits[0])
                    break
            scan = hi
            chunk *= 4
            if next_init is not None and scan >= next_init:
                break
            if scan >= counts.size:
                # the next admissible sum is at most twice the largest
                # member, so growing the array always terminates the scan
                counts = np.concatenate(
                    (counts, np.zeros(counts.size, dtype=np.uint32))
                )
        if nxt < 0:
            # the pending initial comes first; it is already a member
            out.append(next_init)
            pi += 1
            lo = max(lo, next_init + 1)
            continue
        out.append(nxt)
        needed = nxt + top + 1
        if needed >= counts.size:
            counts = np.concatenate(
                (counts, np.zeros(max(counts.size, needed), dtype=np.uint32))
            )
        counts[members[:m] + nxt] += 1  # sums are distinct for a fixed new term
        members[m] = nxt
        m += 1
        top = max(top, nxt)
        lo = nxt + 1

    return Sequence1D(inits, tuple(out))


def consecutive_gaps(seq: Sequence1D) -> list[int]:
    """Differences between successive terms, gaps[i] = terms[i+1] - terms[i]."""
    if len(seq.terms) < 2:
        raise TooShort("need at least two terms to form gaps")
    return np.diff(np.asarray(seq.terms, dtype=np.int64)).tolist()


def fibonacci_bound_check(seq: Sequence1D) -> bool:
    """True iff the n-th term is at most the (n+1)-st Fibonacci number.

    Indexing is 1-based with F_1 = F_2 = 1; the bound holds for the
    sequence seeded by (1, 2).
    """
    a, b = 1, 1  # F_1, F_2; for the n-th term, b holds F_{n+1}
    for t in seq.terms:
        if t > b:
            return False
        a, b = b, a + b
    return True

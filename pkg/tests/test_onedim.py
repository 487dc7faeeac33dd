import pytest

from ulamset import (
    Bound,
    consecutive_gaps,
    fibonacci_bound_check,
    generate,
    ulam_sequence,
    validate_config,
)
from ulamset.errors import InvalidInitials, TooShort

CLASSIC_25 = (
    1, 2, 3, 4, 6, 8, 11, 13, 16, 18, 26, 28, 36, 38, 47, 48, 53, 57, 62,
    69, 72, 77, 82, 87, 97,
)


def brute_force_sequence(initials, n_terms):
    """Definition-faithful oracle: recount all pairwise sums every step.

    Returns the first n_terms members in increasing order (with more than
    two initials a later admission can be smaller than an initial)."""
    terms = sorted(initials)
    have = set(terms)
    while len(terms) < n_terms:
        counts = {}
        for i in range(len(terms)):
            for j in range(i + 1, len(terms)):
                s = terms[i] + terms[j]
                counts[s] = counts.get(s, 0) + 1
        terms.append(min(v for v, c in counts.items() if c == 1 and v not in have))
        have.add(terms[-1])
    return sorted(terms)


def test_classic_prefix():
    assert ulam_sequence((1, 2), 25).terms == CLASSIC_25


def test_first_five_terms():
    assert ulam_sequence((1, 2), 5).terms == (1, 2, 3, 4, 6)  # 5 = 1+4 = 2+3


def test_2_3_matches_brute_force():
    fast = ulam_sequence((2, 3), 10).terms
    assert list(fast) == brute_force_sequence([2, 3], 10)
    assert list(ulam_sequence((1, 3), 14).terms) == brute_force_sequence([1, 3], 14)
    assert list(ulam_sequence((1, 2, 5), 12).terms) == brute_force_sequence(
        [1, 2, 5], 12
    )


def test_invalid_initials():
    for bad in [(1,), (1, 1), (0, 2), (-1, 2)]:
        with pytest.raises(InvalidInitials):
            ulam_sequence(bad, 10)
    with pytest.raises(InvalidInitials):
        ulam_sequence((1, 2), 1)


def test_gaps_basic():
    seq = ulam_sequence((1, 2), 5)
    assert consecutive_gaps(seq) == [1, 1, 1, 2]


def test_gaps_too_short():
    seq = ulam_sequence((1, 2), 2)
    assert consecutive_gaps(seq) == [1]
    with pytest.raises(TooShort):
        consecutive_gaps(type(seq)((1, 2), (1,)))


def test_gaps_positive_and_terms_increasing():
    seq = ulam_sequence((2, 5), 400)
    gaps = consecutive_gaps(seq)
    assert all(g > 0 for g in gaps)
    assert all(a < b for a, b in zip(seq.terms, seq.terms[1:]))


def test_fibonacci_bound_small():
    assert fibonacci_bound_check(ulam_sequence((1, 2), 25))
    # a_5 = 6 <= F_6 = 8
    assert ulam_sequence((1, 2), 5).terms[4] == 6


def test_cross_validation_against_lattice_generator():
    seq = ulam_sequence((1, 2), 200)
    top = seq.terms[-1]
    cfg = validate_config([(1,), (2,)], 1)
    lattice = generate(cfg, Bound.box((top,)))
    assert tuple(p[0] for p in lattice.points) == seq.terms


def test_prefix_consistency():
    long = ulam_sequence((1, 2), 300).terms
    short = ulam_sequence((1, 2), 120).terms
    assert long[:120] == short

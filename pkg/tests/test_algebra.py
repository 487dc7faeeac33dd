import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ulamset import Bound, generate, validate_config
from ulamset.algebra import (
    AxisNormalization,
    PrimeLogReal,
    PrimeProductSize,
    characteristic_lattice,
    embed_integer_lattice,
    embed_one_dimensional,
    is_generic,
    normalize_axes_2d,
    row_hnf,
    structurally_equivalent,
    sym_vector,
)
from ulamset.errors import DegenerateSpan, MismatchedArity, NonPositiveDirection

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT5 = math.sqrt(5.0)
PI = math.pi


# ---------------------------------------------------------------------------
# characteristic lattices


def test_kernel_of_dependent_triple():
    assert characteristic_lattice([(1, 0), (0, 1), (1, 1)]).basis == ((1, 1, -1),)


def test_kernel_trivial_for_unit_vectors():
    assert characteristic_lattice([(1, 0), (0, 1)]).basis == ()


def test_kernel_trivial_with_symbolic_coordinate():
    v1 = sym_vector([1, 0], ("sqrt2",))
    v2 = sym_vector([1, (0, 1)], ("sqrt2",))
    assert characteristic_lattice([v1, v2]).is_trivial()


def test_hnf_canonical_under_generator_shuffle():
    gens = [(2, 4, -6, 0), (1, 1, -1, 1), (3, 5, -7, 1), (0, 2, -4, -2)]
    want = row_hnf(gens)
    rng = random.Random(7)
    for _ in range(20):
        rng.shuffle(gens)
        assert row_hnf(gens) == want


def test_hnf_pivots_positive_and_reduced():
    h = row_hnf([(-2, 1, 0), (0, -3, 6), (4, 1, 2)])
    pivots = []
    for row in h:
        j = next(i for i, c in enumerate(row) if c)
        assert row[j] > 0
        pivots.append(j)
    assert pivots == sorted(pivots)


# ---------------------------------------------------------------------------
# structural equivalence


def test_equivalence_under_scaling():
    assert structurally_equivalent([(1, 0), (0, 1), (1, 1)], [(2, 0), (0, 2), (2, 2)])


def test_inequivalence_of_different_kernels():
    assert not structurally_equivalent(
        [(1, 0), (0, 1), (1, 1)], [(1, 0), (0, 1), (1, 2)]
    )


def test_symbolic_triple_equivalent_to_unit_vectors():
    w1 = sym_vector([1, 0, 0], ("sqrt2", "sqrt3"))
    w2 = sym_vector([1, (0, 1, 0), 0], ("sqrt2", "sqrt3"))
    w3 = sym_vector([1, 1, (0, 0, 1)], ("sqrt2", "sqrt3"))
    assert structurally_equivalent([w1, w2, w3], [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_arity_mismatch():
    with pytest.raises(MismatchedArity):
        structurally_equivalent([(1, 0)], [(1, 0), (0, 1)])


def test_equivalence_is_an_equivalence_relation():
    configs = [
        [(1, 0), (0, 1), (1, 1)],
        [(2, 0), (0, 2), (2, 2)],
        [(1, 1), (2, 0), (3, 1)],
        [(1, 0), (0, 1), (1, 2)],
        [(3, 0), (0, 3), (3, 6)],
    ]
    for a in configs:
        assert structurally_equivalent(a, a)
        for b in configs:
            ab = structurally_equivalent(a, b)
            assert ab == structurally_equivalent(b, a)
            for c in configs:
                if ab and structurally_equivalent(b, c):
                    assert structurally_equivalent(a, c)


def test_kernel_sharing_triple_realizes_same_coefficient_tuples():
    # same kernel span{(1,1,-1)}; membership must agree tuple by tuple
    a = [(1, 0), (0, 1), (1, 1)]
    b = [(1, 1), (2, 0), (3, 1)]
    assert structurally_equivalent(a, b)
    sa = generate(validate_config(a, 2), Bound.level(14))
    sb = generate(validate_config(b, 2), Bound.level(40))
    for a1 in range(7):
        for a2 in range(7):
            for a3 in range(7):
                if a1 == a2 == a3 == 0:
                    continue
                pa = (a1 + a3, a2 + a3)
                pb = (a1 + 2 * a2 + 3 * a3, a1 + a3)
                if sum(pa) > 14 or sum(pb) > 40:
                    continue
                assert (pa in sa) == (pb in sb), (a1, a2, a3)


# ---------------------------------------------------------------------------
# genericity


def test_generic_one_dimensional_symbolic():
    a = sym_vector([3], ("sqrt5", "pi"))
    b = sym_vector([(0, 1, 0)], ("sqrt5", "pi"))
    c = sym_vector([(2, 0, 1)], ("sqrt5", "pi"))
    assert is_generic([a, b, c])


def test_generic_unit_vectors_and_nongeneric_collinear():
    assert is_generic([(1, 0), (0, 1)])
    assert not is_generic([(1, 0), (2, 0), (0, 1)])


# ---------------------------------------------------------------------------
# one-dimensional embedding


def test_prime_log_images():
    images = embed_one_dimensional([(1, 0), (0, 1)])
    assert [f.exponents for f in images] == [(1, 0), (0, 1)]
    assert images[0] < images[1]  # log 2 < log 3
    images = embed_one_dimensional([(2, 0), (3, 0), (0, 1)])
    assert [round(f.value(), 10) for f in images] == [
        round(2 * math.log(2), 10),
        round(3 * math.log(2), 10),
        round(math.log(3), 10),
    ]


def test_prime_log_ordering_is_exact():
    # 2^19 < 3^12 but floats of the logs are close: 19 log 2 = 13.1687...,
    # 12 log 3 = 13.1833...
    assert PrimeLogReal((19, 0)) < PrimeLogReal((0, 12))
    assert not PrimeLogReal((0, 12)) < PrimeLogReal((19, 0))


def test_embedded_order_replays_lattice_generation():
    cfg = validate_config([(1, 0), (0, 1)], 2)
    ordered = generate(cfg, Bound.box((9, 9)), PrimeProductSize(2))
    plain = generate(cfg, Bound.box((9, 9)))
    assert set(ordered.points) == set(plain.points)
    first100 = ordered.points[:100]
    assert list(first100) == sorted(first100, key=lambda p: 2 ** p[0] * 3 ** p[1])


# ---------------------------------------------------------------------------
# integer-lattice embedding


EMBED_CASES = [
    ([sym_vector([1, 0], ("sqrt2",)), sym_vector([1, (0, 1)], ("sqrt2",))],
     {"sqrt2": SQRT2}),
    ([sym_vector([3], ("sqrt5", "pi")), sym_vector([(0, 1, 0)], ("sqrt5", "pi")),
      sym_vector([(2, 0, 1)], ("sqrt5", "pi"))], {"sqrt5": SQRT5, "pi": PI}),
    ([sym_vector([1, 0, 0], ("sqrt2", "sqrt3")),
      sym_vector([1, (0, 1, 0), 0], ("sqrt2", "sqrt3")),
      sym_vector([1, 1, (0, 0, 1)], ("sqrt2", "sqrt3"))],
     {"sqrt2": SQRT2, "sqrt3": SQRT3}),
    ([(2,), (3,), (5,)], None),
    ([(1, 0), (0, 1), (1, 1)], None),
    ([(2, 0), (0, 2), (2, 2)], None),
    ([(1, 2), (2, 1), (3, 3)], None),
    ([(1, 0), (2, 0), (0, 1)], None),
    ([(9, 0), (0, 9), (1, 13)], None),
    ([(2, 5), (3, 1)], None),
    ([(1, 2, 3), (2, 4, 6), (1, 0, 0)], None),
]


@pytest.mark.parametrize("vecs,values", EMBED_CASES)
def test_embed_integer_lattice_preserves_kernel(vecs, values):
    out = embed_integer_lattice(vecs, values)
    assert 1 <= out.dim <= len(vecs)
    assert characteristic_lattice(out).basis == characteristic_lattice(vecs).basis
    assert all(all(c > 0 for c in p) for p in out.initials)


def test_embed_generic_input_gives_trivial_kernel():
    out = embed_integer_lattice(
        [sym_vector([1, 0], ("sqrt2",)), sym_vector([1, (0, 1)], ("sqrt2",))],
        {"sqrt2": SQRT2},
    )
    assert out.dim == 2 and characteristic_lattice(out).is_trivial()


def test_embed_one_dim_family():
    out = embed_integer_lattice([(2,), (3,), (5,)])
    assert out.dim == 1
    assert characteristic_lattice(out).basis == characteristic_lattice(
        [(2,), (3,), (5,)]
    ).basis


def test_embed_rejects_negative_direction():
    with pytest.raises(NonPositiveDirection):
        embed_integer_lattice(
            [sym_vector([(1, -1)], ("sqrt2",)), sym_vector([1], ("sqrt2",))],
            {"sqrt2": SQRT2},
        )


# ---------------------------------------------------------------------------
# axis normalization


def test_normalize_axis_touching_is_fixed():
    res = normalize_axes_2d(validate_config([(1, 0), (0, 1), (2, 3)], 2))
    assert res.config.initials == ((1, 0), (0, 1), (2, 3))


def test_normalize_places_vectors_on_both_axes():
    res = normalize_axes_2d(validate_config([(1, 0), (1, 1), (5, 3)], 2))
    pts = res.config.initials
    assert any(p[1] == 0 and p[0] > 0 for p in pts)
    assert any(p[0] == 0 and p[1] > 0 for p in pts)
    assert characteristic_lattice(pts).basis == characteristic_lattice(
        [(1, 0), (1, 1), (5, 3)]
    ).basis


def test_normalize_degenerate_span():
    with pytest.raises(DegenerateSpan):
        normalize_axes_2d(validate_config([(1, 1), (2, 2)], 2))


def _correspondence(raw, box):
    cfg = validate_config(raw, 2)
    res = normalize_axes_2d(cfg)
    a = generate(cfg, Bound.box((box, box)))
    images = [res.apply(p) for p in a.points]
    bx = max(q[0] for q in images)
    by = max(q[1] for q in images)
    b = generate(res.config, Bound.box((bx, by)))
    for q in images:
        assert q in b
    back = 0
    for q in b.points:
        pre = res.apply_inverse(q)
        if all(c.denominator == 1 and 0 <= c <= box for c in pre):
            back += 1
            assert (int(pre[0]), int(pre[1])) in a
    assert back == len(images)


def test_normalized_sets_correspond_pointwise():
    _correspondence([(2, 5), (3, 1)], 25)
    _correspondence([(1, 0), (1, 1), (5, 3)], 20)

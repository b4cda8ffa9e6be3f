import random
from fractions import Fraction

import pytest

from cliffsys.algebras import (
    OCTONION_LABELS,
    algebra_table,
    block_extension,
    left_mult,
    octonion_conjugate,
    right_mult,
    right_mult_general,
    spin9_symmetric,
)
from cliffsys.exactmat import RationalMatrix, SignedPermMatrix, block2, swap, diag_split

ID4 = SignedPermMatrix.identity(4)
ID8 = SignedPermMatrix.identity(8)
IMAGINARY = OCTONION_LABELS[1:]


def test_right_mult_e_is_half_swap():
    assert right_mult("e", 8) == block2(None, -ID4, ID4, None)


def test_right_mult_unit_is_identity():
    assert right_mult("1", 8) == ID8
    assert left_mult("1", 4) == ID4
    assert left_mult("1", 8) == ID8


def test_right_mult_f_uses_left_quaternionic_block():
    li = left_mult("i", 4)
    assert right_mult("f", 8) == block2(None, li, li, None)


def test_displayed_left_quaternion_multiplications():
    assert left_mult("i", 4) == SignedPermMatrix.from_dense(
        [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    )
    assert left_mult("j", 4) == SignedPermMatrix.from_dense(
        [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]
    )
    assert left_mult("k", 4) == SignedPermMatrix.from_dense(
        [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]
    )


def test_left_mult_on_j_gives_k():
    # column of e_j in L_i is the product i*j = k
    li = left_mult("i", 8)
    target, sign = li.apply(OCTONION_LABELS.index("j"))
    assert (target, sign) == (OCTONION_LABELS.index("k"), 1)


def test_unknown_labels_rejected():
    with pytest.raises(ValueError):
        right_mult("x", 8)
    with pytest.raises(ValueError):
        left_mult("e", 4)
    with pytest.raises(ValueError):
        right_mult("i", 16)


def test_table_unit_and_norm():
    tab = algebra_table(8)
    for a in range(8):
        assert tab.product(0, a) == (a, 1)
        assert tab.product(a, 0) == (a, 1)
    grid = tab.text_grid()
    assert "-1" in grid and grid.count("\n") == 9


def test_imaginary_multiplications_are_skew_complex_structures():
    for u in IMAGINARY:
        for mat in (right_mult(u, 8), left_mult(u, 8)):
            assert mat.is_skew()
            assert mat.mul(mat) == -ID8
    for u in ("i", "j", "k"):
        for mat in (right_mult(u, 4), left_mult(u, 4)):
            assert mat.is_skew()
            assert mat.mul(mat) == -ID4


def test_clifford_relation_for_right_multiplications():
    # R_u R_v + R_v R_u = -2 <u,v> Id for imaginary u, v
    for a in range(7):
        for b in range(a + 1, 7):
            ru, rv = right_mult(IMAGINARY[a], 8), right_mult(IMAGINARY[b], 8)
            assert ru.anticommutes(rv)


def test_table_is_alternative():
    tab = algebra_table(8)

    def mul(x, y):
        c, s = tab.product(x[0], y[0])
        return (c, x[1] * y[1] * s)

    for a in range(8):
        for b in range(8):
            x, y = (a, 1), (b, 1)
            assert mul(mul(x, x), y) == mul(x, mul(x, y))
            assert mul(mul(y, x), x) == mul(y, mul(x, x))


def test_cayley_dickson_cross_check():
    """The table must match quaternion-pair doubling:
    (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))."""
    qt = algebra_table(4)

    def qmul(x, y):
        c, s = qt.product(x[0], y[0])
        return (c, x[1] * y[1] * s)

    def qconj(x):
        return (x[0], x[1] if x[0] == 0 else -x[1])

    tab = algebra_table(8)
    for a in range(8):
        for b in range(8):
            pa, wa = (a % 4, 1), a >= 4
            pb, wb = (b % 4, 1), b >= 4
            # octonion pair components: x = (p, 0) or (0, p)
            if not wa and not wb:
                c, s = qmul(pa, pb)
                expected = (c, s)
            elif not wa and wb:
                # (a,0)(0,d) = (0, d a)
                c, s = qmul(pb, pa)
                expected = (c + 4, s)
            elif wa and not wb:
                # (0,b)(c,0) = (0, b conj(c))
                c, s = qmul(pa, qconj(pb))
                expected = (c + 4, s)
            else:
                # (0,b)(0,d) = (-conj(d) b, 0)
                c, s = qmul(qconj(pb), pa)
                expected = (c, -s)
            assert tab.product(a, b) == expected, (a, b)


def test_block_extensions_match_displayed_forms():
    id32 = SignedPermMatrix.identity(32)
    assert block_extension("e", 64) == block2(None, -id32, id32, None)
    bl = block_extension("k", 32)  # the left quaternionic block
    assert block_extension("h", 64) == block2(None, bl, bl, None)
    assert block_extension("i", 64) == block2(
        block_extension("i", 32), None, None, -block_extension("i", 32)
    )


def test_block_extension_128_e_matches_doubled_system_composition():
    from cliffsys.clifford import build

    c13 = build(13)
    w12 = c13.generators[12]
    inner = block_extension("e", 128)
    from cliffsys.exactmat import antidiag

    assert w12 == antidiag(inner)


def test_block_extension_rejects_unsupported():
    with pytest.raises(ValueError):
        block_extension("f", 64)
    with pytest.raises(ValueError):
        block_extension("i", 16)


def test_spin9_symmetric_basis_points():
    zero = [Fraction(0)] * 8
    u1 = [Fraction(1)] + [Fraction(0)] * 7
    ui = [Fraction(0), Fraction(1)] + [Fraction(0)] * 6
    s8 = spin9_symmetric(zero, Fraction(1))
    assert s8 == diag_split(8).to_rational()
    s0 = spin9_symmetric(u1, Fraction(0))
    assert s0 == swap(8).to_rational()
    from cliffsys.clifford import build

    s1 = build(8).generators[1]
    assert spin9_symmetric(ui, Fraction(0)) == s1.to_rational()


def test_spin9_symmetric_rational_point():
    u = [Fraction(0), Fraction(3, 5)] + [Fraction(0)] * 6
    mat = spin9_symmetric(u, Fraction(4, 5))
    assert mat.is_symmetric()
    assert mat.mul(mat) == RationalMatrix.identity(16)


def test_spin9_symmetric_rejects_non_unit():
    with pytest.raises(ValueError):
        spin9_symmetric([Fraction(1)] + [Fraction(0)] * 7, Fraction(1))


def test_spin9_symmetric_random_unit_points():
    rng = random.Random(99)
    from cliffsys.spheres import random_unit_points

    for point in random_unit_points(9, 100, seed=5):
        u, r = list(point[:8]), point[8]
        mat = spin9_symmetric(u, r)
        assert mat.is_symmetric()
        assert mat.mul(mat) == RationalMatrix.identity(16)


def test_right_mult_general_matches_basis_cases():
    for b, label in enumerate(OCTONION_LABELS):
        coords = [Fraction(1 if i == b else 0) for i in range(8)]
        assert right_mult_general(coords) == right_mult(label, 8).to_rational()


def test_conjugate():
    u = [Fraction(i) for i in range(8)]
    assert octonion_conjugate(u) == [Fraction(0)] + [Fraction(-i) for i in range(1, 8)]

"""Canonical-form reduction and products in the modified q-Weyl algebra."""

import random

import pytest

from qweyl import scalars
from qweyl.expressions import FreeExpr
from qweyl.satake import Variant
from qweyl.scalars import QScalar, from_int, qpow
from qweyl.weyl import (
    EndoSpec,
    WeylElement,
    check_weyl_relations,
    check_well_defined_one,
    generator_letters,
    identity_endo,
    letter_mono,
    mono_word,
    reduce_expr,
    reduce_word,
    relation_instances,
    unit_mono,
)

J2 = Variant("jmath", 2)
J1 = Variant("jmath", 1)
I2 = Variant("imath", 2)

# 1/(q - q^-1)
QD = QScalar((0, 1), (-1, 0, 1))


def elem_of(v, word, coeff=1):
    return reduce_word(v, word, coeff)


def gen(v, name, i):
    return WeylElement.generator(v, name, i)


def test_variant_data():
    assert J2.n == 4 and I2.n == 5
    assert [J2.kappa(i) for i in (1, 2, 3)] == [1, 1, 2]
    assert [I2.kappa(i) for i in (1, 2, 3)] == [1, 1, 1]
    assert list(J2.braid_indices) == [1, 2]
    assert list(I2.braid_indices) == [1, 2, 3]
    assert J2.rho(1) == 4 and I2.rho(3) == 3
    assert J2.k_legal(2) and not I2.k_legal(3)


def test_reduce_single_letters():
    for v in (J2, I2):
        for name, i in generator_letters(v):
            e = reduce_word(v, (((name, i)),))
            assert e.terms == {letter_mono(v, name, i): scalars.ONE}


def test_xd_oracle():
    # x_i d_i = (m_i - m_i^-1)/(q - q^-1), any kappa
    for v in (J2, I2):
        for i in v.weyl_indices:
            e = reduce_word(v, (("x", i), ("d", i)))
            assert e.terms == {
                letter_mono(v, "m", i): QD,
                letter_mono(v, "mi", i): -QD,
            }


def test_dx_oracle():
    # d_i x_i = (q^k m_i - q^-k m_i^-1)/(q - q^-1) with k = kappa(i)
    for v in (J2, I2):
        for i in v.weyl_indices:
            k = v.kappa(i)
            e = reduce_word(v, (("d", i), ("x", i)))
            assert e.terms == {
                letter_mono(v, "m", i): qpow(k) * QD,
                letter_mono(v, "mi", i): -qpow(-k) * QD,
            }


def test_distinct_indices_commute():
    e = reduce_word(J2, (("d", 1), ("x", 2)))
    f = reduce_word(J2, (("x", 2), ("d", 1)))
    assert e == f
    assert len(e.terms) == 1
    ((mono, c),) = e.terms.items()
    assert c == scalars.ONE
    assert mono[0] == (0, 1, 0) and mono[1] == (1, 0, 0)


def test_m_inverse_cancels():
    e = reduce_word(J2, (("m", 1), ("mi", 1), ("d", 2)))
    assert e == gen(J2, "d", 2)
    assert reduce_word(I2, (("mi", 3), ("m", 3))) == WeylElement.unit(I2)


def test_m_past_d_left():
    # m_1 d_1 = q^-1 d_1 m_1 at kappa(1) = 1
    e = gen(J2, "m", 1) * gen(J2, "d", 1)
    expect = reduce_word(J2, (("d", 1), ("m", 1)), qpow(-1))
    assert e == expect


def test_kappa_two_shows_up():
    # jmath top index carries kappa = 2: d m = q^2 m d there
    e = gen(J1, "d", 2) * gen(J1, "m", 2)
    assert e == reduce_word(J1, (("m", 2), ("d", 2)), qpow(2))


def test_mul_matches_word_reduction():
    rng = random.Random(31415)
    for v in (J2, I2, J1):
        letters = generator_letters(v)
        for _ in range(60):
            w1 = tuple(rng.choice(letters) for _ in range(rng.randint(0, 5)))
            w2 = tuple(rng.choice(letters) for _ in range(rng.randint(0, 5)))
            assert reduce_word(v, w1) * reduce_word(v, w2) == reduce_word(v, w1 + w2)


def test_reduction_strategies_agree():
    rng = random.Random(27182)
    for v in (J2, I2, J1, Variant("imath", 1)):
        letters = generator_letters(v)
        for _ in range(125):
            w = tuple(rng.choice(letters) for _ in range(rng.randint(0, 8)))
            assert reduce_word(v, w, strategy="left") == reduce_word(
                v, w, strategy="right"
            )


def _random_elem(rng, v, nwords=2, maxlen=4):
    letters = generator_letters(v)
    out = WeylElement(v, {})
    for _ in range(nwords):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(0, maxlen)))
        out = out + reduce_word(v, w, from_int(rng.randint(-3, 3)))
    return out


def test_ring_axioms_random():
    rng = random.Random(1618)
    for v in (J2, I2):
        for _ in range(12):
            a = _random_elem(rng, v)
            b = _random_elem(rng, v)
            c = _random_elem(rng, v)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c
            assert a * WeylElement.unit(v) == a
            assert WeylElement.unit(v) * a == a


def test_scalar_coercion():
    a = gen(J2, "x", 1)
    assert 2 * a == a + a
    assert a * 2 == a + a
    assert (a + 1) - 1 == a
    assert 1 + (a - 1) == a
    assert (a * qpow(3)) * qpow(-3) == a


def test_relation_suite_passes():
    for v in (J2, I2, J1, Variant("imath", 1)):
        checks = check_weyl_relations(v)
        r = v.rank
        assert len(checks) == 8 * (r + 1) * (r + 1)
        bad = [c for c in checks if c.status != "pass"]
        assert bad == []


def test_relation_ids_unique():
    ids = [rid for rid, _, _, _ in relation_instances(J2)]
    assert len(ids) == len(set(ids))


def test_render_pinned_strings():
    assert str(reduce_word(J2, (("d", 1), ("x", 1)))) == "(q*m1 - q^-1*m1^-1)/(q - q^-1)"
    assert str(reduce_word(J1, (("d", 2), ("x", 2)))) == "(q^2*m2 - q^-2*m2^-1)/(q - q^-1)"
    assert str(reduce_word(J2, (("x", 1), ("d", 1)))) == "(m1 - m1^-1)/(q - q^-1)"
    assert str(WeylElement.unit(J2)) == "1"
    assert str(WeylElement(J2, {})) == "0"
    assert str(gen(J2, "x", 1) * gen(J2, "x", 1)) == "x1^2"
    w = reduce_word(J2, (("x", 1), ("x", 1), ("d", 2), ("mi", 3), ("mi", 3)))
    assert str(w) == "x1^2 d2 m3^-2"
    assert str(gen(J2, "m", 1).scale(qpow(2))) == "q^2*m1"
    assert str(-gen(J2, "d", 2)) == "-d2"


def test_canonical_words_are_fixed_points():
    rng = random.Random(55)
    for v in (J2, I2):
        for _ in range(40):
            mono = _random_elem(rng, v, nwords=1, maxlen=6)
            for m in mono.terms:
                again = reduce_word(v, mono_word(m))
                assert again.terms == {m: scalars.ONE}
                again = reduce_word(v, mono_word(m), strategy="right")
                assert again.terms == {m: scalars.ONE}


def test_reduce_expr_collects():
    d1x1 = FreeExpr.word((("d", 1), ("x", 1)))
    x1d1 = FreeExpr.word((("x", 1), ("d", 1)))
    # d x - x d = (q^k - 1) m/(q - q^-1) + (1 - q^-k) m^-1/(q - q^-1); k = 1
    e = reduce_expr(J2, d1x1 - x1d1)
    mk = letter_mono(J2, "m", 1)
    mik = letter_mono(J2, "mi", 1)
    assert e.terms == {
        mk: (qpow(1) - scalars.ONE) * QD,
        mik: (scalars.ONE - qpow(-1)) * QD,
    }


def test_identity_endo_fixes_everything():
    rng = random.Random(808)
    ident = identity_endo(J2)
    for _ in range(10):
        a = _random_elem(rng, J2)
        assert ident.apply(a) == a


def test_anti_bar_spec_well_defined():
    # x <-> d, m <-> m^-1, words reversed, coefficients bar-twisted
    for v in (J1, I2):
        images = {}
        for i in v.weyl_indices:
            images[("x", i)] = gen(v, "d", i)
            images[("d", i)] = gen(v, "x", i)
            images[("m", i)] = gen(v, "mi", i)
            images[("mi", i)] = gen(v, "m", i)
        spec = EndoSpec(v, images, antimultiplicative=True, bar_twist=True, label="flip")
        checks = check_well_defined_one(spec, "wd/")
        assert all(c.status == "pass" for c in checks)


def test_anti_spec_reverses_products():
    v = J1
    images = {}
    for i in v.weyl_indices:
        images[("x", i)] = gen(v, "d", i)
        images[("d", i)] = gen(v, "x", i)
        images[("m", i)] = gen(v, "mi", i)
        images[("mi", i)] = gen(v, "m", i)
    spec = EndoSpec(v, images, antimultiplicative=True, bar_twist=True)
    rng = random.Random(4242)
    letters = generator_letters(v)
    for _ in range(25):
        w1 = tuple(rng.choice(letters) for _ in range(rng.randint(0, 4)))
        w2 = tuple(rng.choice(letters) for _ in range(rng.randint(0, 4)))
        a, b = reduce_word(v, w1), reduce_word(v, w2)
        assert spec.apply(a * b) == spec.apply(b) * spec.apply(a)


def test_errors():
    with pytest.raises(ValueError, match="index out of range"):
        letter_mono(J2, "x", 4)
    with pytest.raises(ValueError, match="unknown generator"):
        letter_mono(J2, "y", 1)
    with pytest.raises(ValueError, match="variant mismatch"):
        gen(J2, "x", 1) * gen(I2, "x", 1)
    with pytest.raises(ValueError, match="negative power"):
        gen(J2, "x", 1) ** -1
    with pytest.raises(ValueError, match="unknown strategy"):
        reduce_word(J2, (("x", 1),), strategy="middle")
    assert unit_mono(J1) == ((0, 0, 0), (0, 0, 0))

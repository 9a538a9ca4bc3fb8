"""The modified q-Weyl algebra: canonical forms, products, substitutions.

Letters d_i, x_i, m_i, m_i^-1 for i in 1..r+1; distinct indices commute.
With k = kappa(i), the same-index rewrites are

    d_i m_i^s -> q^(sk) m_i^s d_i,    x_i m_i^s -> q^(-sk) m_i^s x_i,
    d_i x_i -> (q^k m_i - q^-k m_i^-1)/(q - q^-1),
    x_i d_i -> (m_i - m_i^-1)/(q - q^-1),    m_i m_i^-1 -> 1.

A canonical monomial stores one (xexp, dexp, mexp) triple per index with
min(xexp, dexp) = 0 and mexp in Z; an element maps monomials to scalars.
"""

from . import scalars
from .expressions import FreeExpr
from .report import equality_check
from .scalars import qpow

WEYL_LETTER_NAMES = ("d", "x", "m", "mi")

# 1/(q - q^-1)
_QD = scalars.QScalar((0, 1), (-1, 0, 1))


def unit_mono(v):
    return ((0, 0, 0),) * (v.rank + 1)


def letter_mono(v, name, idx):
    validate_letter(v, name, idx)
    if name == "d":
        t = (0, 1, 0)
    elif name == "x":
        t = (1, 0, 0)
    elif name == "m":
        t = (0, 0, 1)
    else:
        t = (0, 0, -1)
    return _set_triple(unit_mono(v), idx - 1, t)


def validate_letter(v, name, idx):
    if name not in WEYL_LETTER_NAMES:
        raise ValueError("unknown generator '%s%s'" % (name, idx))
    if not 1 <= idx <= v.rank + 1:
        raise ValueError(
            "index out of range: %s%d (indices run 1..%d)" % (name, idx, v.rank + 1)
        )


def _set_triple(mono, p, triple):
    return mono[:p] + (triple,) + mono[p + 1 :]


def _acc(out, mono, coeff):
    acc = out.get(mono)
    if acc is None:
        if not coeff.is_zero:
            out[mono] = coeff
    else:
        acc = acc + coeff
        if acc.is_zero:
            del out[mono]
        else:
            out[mono] = acc


def _append_right(v, terms, name, idx):
    """All monomials multiplied by one letter on the right."""
    p = idx - 1
    out = {}
    if name == "m" or name == "mi":
        s = 1 if name == "m" else -1
        for mono, coeff in terms.items():
            a, b, c = mono[p]
            _acc(out, _set_triple(mono, p, (a, b, c + s)), coeff)
        return out
    k = v.kappa(idx)
    if name == "x":
        for mono, coeff in terms.items():
            a, b, c = mono[p]
            if b == 0:
                _acc(out, _set_triple(mono, p, (a + 1, 0, c)), coeff * qpow(k * c))
            else:
                f = coeff * _QD
                _acc(out, _set_triple(mono, p, (a, b - 1, c + 1)), f * qpow(k * (c + 1)))
                _acc(out, _set_triple(mono, p, (a, b - 1, c - 1)), -f * qpow(k * (c - 1)))
        return out
    if name == "d":
        for mono, coeff in terms.items():
            a, b, c = mono[p]
            if a == 0:
                _acc(out, _set_triple(mono, p, (0, b + 1, c)), coeff * qpow(-k * c))
            else:
                f = coeff * qpow(-k * c) * _QD
                _acc(out, _set_triple(mono, p, (a - 1, 0, c + 1)), f)
                _acc(out, _set_triple(mono, p, (a - 1, 0, c - 1)), -f)
        return out
    raise ValueError("unknown generator '%s%s'" % (name, idx))


def _append_left(v, terms, name, idx):
    """All monomials multiplied by one letter on the left."""
    p = idx - 1
    out = {}
    if name == "m" or name == "mi":
        s = 1 if name == "m" else -1
        k = v.kappa(idx)
        for mono, coeff in terms.items():
            a, b, c = mono[p]
            _acc(out, _set_triple(mono, p, (a, b, c + s)), coeff * qpow(s * k * (a - b)))
        return out
    k = v.kappa(idx)
    if name == "x":
        for mono, coeff in terms.items():
            a, b, c = mono[p]
            if b == 0:
                _acc(out, _set_triple(mono, p, (a + 1, 0, c)), coeff)
            else:
                f = coeff * _QD
                _acc(out, _set_triple(mono, p, (0, b - 1, c + 1)), f * qpow(-k * (b - 1)))
                _acc(out, _set_triple(mono, p, (0, b - 1, c - 1)), -f * qpow(k * (b - 1)))
        return out
    if name == "d":
        for mono, coeff in terms.items():
            a, b, c = mono[p]
            if a == 0:
                _acc(out, _set_triple(mono, p, (0, b + 1, c)), coeff)
            else:
                f = coeff * _QD
                _acc(out, _set_triple(mono, p, (a - 1, 0, c + 1)), f * qpow(k * a))
                _acc(out, _set_triple(mono, p, (a - 1, 0, c - 1)), -f * qpow(-k * a))
        return out
    raise ValueError("unknown generator '%s%s'" % (name, idx))


def mono_word(mono):
    """Canonical letter word of a monomial: per index x, then d, then m."""
    word = []
    for p, (a, b, c) in enumerate(mono):
        i = p + 1
        word.extend((("x", i),) * a)
        word.extend((("d", i),) * b)
        if c > 0:
            word.extend((("m", i),) * c)
        elif c < 0:
            word.extend((("mi", i),) * (-c))
    return tuple(word)


def _mono_str(mono):
    bits = []
    for p, (a, b, c) in enumerate(mono):
        i = p + 1
        if a:
            bits.append("x%d" % i if a == 1 else "x%d^%d" % (i, a))
        if b:
            bits.append("d%d" % i if b == 1 else "d%d^%d" % (i, b))
        if c:
            bits.append("m%d" % i if c == 1 else "m%d^%d" % (i, c))
    return " ".join(bits)


class WeylElement:
    __slots__ = ("variant", "terms")

    def __init__(self, variant, terms=None):
        self.variant = variant
        self.terms = terms if terms is not None else {}

    @staticmethod
    def unit(v, coeff=scalars.ONE):
        if isinstance(coeff, int):
            coeff = scalars.from_int(coeff)
        if coeff.is_zero:
            return WeylElement(v, {})
        return WeylElement(v, {unit_mono(v): coeff})

    @staticmethod
    def generator(v, name, idx):
        return WeylElement(v, {letter_mono(v, name, idx): scalars.ONE})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self.variant == other.variant and self.terms == other.terms
        return NotImplemented

    def __neg__(self):
        return WeylElement(self.variant, {m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return WeylElement(self.variant, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s):
        if isinstance(s, int):
            s = scalars.from_int(s)
        if s.is_zero:
            return WeylElement(self.variant, {})
        return WeylElement(self.variant, {m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, scalars.QScalar)):
            return self.scale(other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self.variant != other.variant:
            raise ValueError("variant mismatch")
        v = self.variant
        out = {}
        for mono2, c2 in other.terms.items():
            cur = {m1: c1 * c2 for m1, c1 in self.terms.items()}
            for name, idx in mono_word(mono2):
                cur = _append_right(v, cur, name, idx)
            for m, c in cur.items():
                _acc(out, m, c)
        return WeylElement(v, out)

    def __rmul__(self, other):
        if isinstance(other, (int, scalars.QScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of an algebra element")
        out = WeylElement.unit(self.variant)
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, WeylElement):
            if self.variant != other.variant:
                raise ValueError("variant mismatch")
            return other
        if isinstance(other, (int, scalars.QScalar)):
            return WeylElement.unit(self.variant, other)
        return None

    def __str__(self):
        monos = sorted(self.terms, reverse=True)
        return scalars.terms_str([(_mono_str(m), self.terms[m]) for m in monos])

    def __repr__(self):
        return "WeylElement(%s)" % self


def reduce_word(v, word, coeff=scalars.ONE, strategy="left"):
    """Canonical form of coeff * word, rewriting from one chosen end."""
    if isinstance(coeff, int):
        coeff = scalars.from_int(coeff)
    if coeff.is_zero:
        return WeylElement(v, {})
    terms = {unit_mono(v): coeff}
    if strategy == "left":
        for name, idx in word:
            terms = _append_right(v, terms, name, idx)
    elif strategy == "right":
        for name, idx in reversed(word):
            terms = _append_left(v, terms, name, idx)
    else:
        raise ValueError("unknown strategy %r" % (strategy,))
    return WeylElement(v, terms)


def reduce_expr(v, expr, strategy="left"):
    """Canonical form of a free expression over the d/x/m alphabet."""
    for name, idx in expr.letters_used():
        validate_letter(v, name, idx)
    out = {}
    for word, c in expr.terms.items():
        for m, s in reduce_word(v, word, c, strategy).terms.items():
            _acc(out, m, s)
    return WeylElement(v, out)


class EndoSpec:
    """A substitution rule: letter images plus direction and coefficient twist.

    direction "antimultiplicative" reverses each word before multiplying the
    images; coeff_twist "bar" sends every coefficient through q -> q^-1.
    """

    __slots__ = ("variant", "images", "antimultiplicative", "bar_twist", "label")

    def __init__(self, variant, images, antimultiplicative=False, bar_twist=False, label=""):
        self.variant = variant
        self.images = images
        self.antimultiplicative = antimultiplicative
        self.bar_twist = bar_twist
        self.label = label

    def image(self, letter):
        img = self.images.get(letter)
        if img is None:
            raise ValueError("no image for letter %s%d" % letter)
        return img

    def _word_image(self, word, coeff):
        v = self.variant
        if self.bar_twist:
            coeff = coeff.bar()
        acc = WeylElement.unit(v, coeff)
        seq = reversed(word) if self.antimultiplicative else word
        for letter in seq:
            acc = acc * self.image(letter)
        return acc

    def apply(self, elem):
        """Image of a canonical element under the substitution."""
        v = self.variant
        if elem.variant != v:
            raise ValueError("variant mismatch")
        out = {}
        for mono, coeff in elem.terms.items():
            for m, c in self._word_image(mono_word(mono), coeff).terms.items():
                _acc(out, m, c)
        return WeylElement(v, out)

    def apply_free(self, expr):
        """Image of a free expression, one side of a relation check."""
        out = {}
        for word, coeff in expr.terms.items():
            for m, c in self._word_image(word, coeff).terms.items():
                _acc(out, m, c)
        return WeylElement(self.variant, out)


def identity_endo(v):
    images = {}
    for i in v.weyl_indices:
        for name in WEYL_LETTER_NAMES:
            images[(name, i)] = WeylElement.generator(v, name, i)
    return EndoSpec(v, images, label="id")


def generator_letters(v):
    """Deterministic letter order used by every suite."""
    out = []
    for i in v.weyl_indices:
        for name in WEYL_LETTER_NAMES:
            out.append((name, i))
    return out


def relation_instances(v):
    """All defining relations as (id, description, lhs, rhs) free expressions."""
    L = FreeExpr.letter
    rels = []
    for i in v.weyl_indices:
        k = v.kappa(i)
        one = FreeExpr.one()
        m, mi = L("m", i), L("mi", i)
        d, x = L("d", i), L("x", i)
        rels.append(("minv/i=%d" % i, "m%d m%d^-1 = 1" % (i, i), m * mi, one))
        rels.append(("minv-rev/i=%d" % i, "m%d^-1 m%d = 1" % (i, i), mi * m, one))
        rels.append(
            (
                "dm/i=%d" % i,
                "d%d m%d = q^%d m%d d%d" % (i, i, k, i, i),
                d * m,
                (m * d).scale(qpow(k)),
            )
        )
        rels.append(
            (
                "dmi/i=%d" % i,
                "d%d m%d^-1 = q^%d m%d^-1 d%d" % (i, i, -k, i, i),
                d * mi,
                (mi * d).scale(qpow(-k)),
            )
        )
        rels.append(
            (
                "xm/i=%d" % i,
                "x%d m%d = q^%d m%d x%d" % (i, i, -k, i, i),
                x * m,
                (m * x).scale(qpow(k).inv()),
            )
        )
        rels.append(
            (
                "xmi/i=%d" % i,
                "x%d m%d^-1 = q^%d m%d^-1 x%d" % (i, i, k, i, i),
                x * mi,
                (mi * x).scale(qpow(k)),
            )
        )
        rels.append(
            (
                "dx/i=%d" % i,
                "d%d x%d = (q^%d m%d - q^%d m%d^-1)/(q - q^-1)" % (i, i, k, i, -k, i),
                d * x,
                (m.scale(qpow(k)) - mi.scale(qpow(-k))).scale(_QD),
            )
        )
        rels.append(
            (
                "xd/i=%d" % i,
                "x%d d%d = (m%d - m%d^-1)/(q - q^-1)" % (i, i, i, i),
                x * d,
                (m - mi).scale(_QD),
            )
        )
    names = WEYL_LETTER_NAMES
    for i in v.weyl_indices:
        for j in v.weyl_indices:
            if j <= i:
                continue
            for n1 in names:
                for n2 in names:
                    a, b = L(n1, i), L(n2, j)
                    rels.append(
                        (
                            "comm/%s-%s/i=%d,j=%d" % (n1, n2, i, j),
                            "%s%d %s%d = %s%d %s%d" % (n1, i, n2, j, n2, j, n1, i),
                            a * b,
                            b * a,
                        )
                    )
    return rels


def check_weyl_relations(v):
    """Reduce both sides of every defining relation and compare."""
    checks = []
    for rid, desc, lhs, rhs in relation_instances(v):
        checks.append(
            equality_check(
                "weyl-relations/" + rid, desc, reduce_expr(v, lhs), reduce_expr(v, rhs)
            )
        )
    return checks


def check_well_defined_one(spec, prefix):
    """Map relation sides through a substitution's letter images and compare.

    Works on free words, so it is exactly the well-definedness test; an
    antimultiplicative image table reverses the sides on its own.
    """
    checks = []
    v = spec.variant
    for rid, desc, lhs, rhs in relation_instances(v):
        checks.append(
            equality_check(
                prefix + rid,
                "%s preserves %s" % (spec.label, desc),
                spec.apply_free(lhs),
                spec.apply_free(rhs),
            )
        )
    return checks

"""Polynomials in X_1..X_{r+1} as a module over the Weyl algebra.

The letters act by d_i X^a = [kappa(i) a_i] X^(a - e_i), x_i X^a =
X^(a + e_i), m_i^{+-1} X^a = q^{+-kappa(i) a_i} X^a, rightmost letter
first.  tcal builds the braid operators on polynomials; the check_*
suites drive every module-level identity over the full grid of
monomials with entries bounded by a degree parameter.
"""

import itertools
import random

from . import iqg, operators, scalars
from .report import aggregate_check, skipped_check
from .scalars import qint, qpow
from .weyl import WeylElement, generator_letters, reduce_word

TCAL_KINDS = operators.BRAID_KINDS


def _exps_str(exps):
    parts = []
    for p, k in enumerate(exps):
        if k == 0:
            continue
        parts.append("X%d" % (p + 1) if k == 1 else "X%d^%d" % (p + 1, k))
    return " ".join(parts)


class PolyElement:
    """A polynomial with coefficients in the rational functions of q."""

    __slots__ = ("variant", "terms")

    def __init__(self, variant, terms):
        self.variant = variant
        self.terms = terms

    @staticmethod
    def unit(variant):
        return PolyElement(variant, {(0,) * (variant.rank + 1): scalars.ONE})

    @staticmethod
    def monomial(variant, exps, coeff=scalars.ONE):
        exps = tuple(exps)
        if len(exps) != variant.rank + 1:
            raise ValueError(
                "exponent vector has length %d, expected %d"
                % (len(exps), variant.rank + 1)
            )
        if any(k < 0 for k in exps):
            raise ValueError("negative exponent in %r" % (exps,))
        if not coeff:
            return PolyElement(variant, {})
        return PolyElement(variant, {exps: coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, PolyElement):
            if other.variant != self.variant:
                raise ValueError("variant mismatch")
            return other
        if isinstance(other, (int, scalars.QScalar)):
            c = scalars.from_int(other) if isinstance(other, int) else other
            return PolyElement.monomial(self.variant, (0,) * (self.variant.rank + 1), c)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.variant, frozenset(self.terms.items())))

    def __neg__(self):
        return PolyElement(self.variant, {a: -c for a, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for a, c in other.terms.items():
            s = out.get(a)
            s = c if s is None else s + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return PolyElement(self.variant, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return PolyElement(self.variant, {})
        return PolyElement(self.variant, {a: v * c for a, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, scalars.QScalar)):
            return self.scale(
                scalars.from_int(other) if isinstance(other, int) else other
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                ab = tuple(x + y for x, y in zip(a, b))
                s = out.get(ab)
                s = c * d if s is None else s + c * d
                if s:
                    out[ab] = s
                else:
                    out.pop(ab, None)
        return PolyElement(self.variant, out)

    def __rmul__(self, other):
        if isinstance(other, (int, scalars.QScalar)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("negative power of a polynomial")
        out = PolyElement.unit(self.variant)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        monos = sorted(self.terms, reverse=True)
        return scalars.terms_str(
            [(_exps_str(a), self.terms[a]) for a in monos], sep=" "
        )

    def __repr__(self):
        return "PolyElement(%r, %s)" % (self.variant, self)


def act_letter(v, name, idx, poly):
    """One generator letter applied to a polynomial."""
    if poly.variant != v:
        raise ValueError("variant mismatch")
    k = v.kappa(idx)
    p = idx - 1
    out = {}
    for a, c in poly.terms.items():
        if name == "d":
            if a[p] == 0:
                continue
            c = c * qint(k * a[p])
            a = a[:p] + (a[p] - 1,) + a[p + 1 :]
        elif name == "x":
            a = a[:p] + (a[p] + 1,) + a[p + 1 :]
        elif name == "m":
            c = c * qpow(k * a[p])
        elif name == "mi":
            c = c * qpow(-k * a[p])
        else:
            raise ValueError("unknown generator '%s%d'" % (name, idx))
        s = out.get(a)
        s = c if s is None else s + c
        if s:
            out[a] = s
        else:
            out.pop(a, None)
    return PolyElement(v, out)


def act_word(v, word, poly, coeff=scalars.ONE):
    """A letter word applied one letter at a time, rightmost first."""
    for name, idx in reversed(word):
        poly = act_letter(v, name, idx, poly)
    return poly.scale(coeff) if coeff != scalars.ONE else poly


_ACT_CACHE = {}


def _mono_act(v, mono, a):
    """Scalar and exponent image of one canonical monomial on X^a.

    Cached on the entries of a inside the support of the monomial; the
    action never reads the other positions.  Returns None when the
    monomial annihilates X^a.
    """
    support = tuple(p for p, t in enumerate(mono) if t != (0, 0, 0))
    key = (mono, tuple(a[p] for p in support))
    cache = _ACT_CACHE.get(v)
    if cache is None:
        cache = _ACT_CACHE[v] = {}
    hit = cache.get(key)
    if hit is None and key not in cache:
        coeff = scalars.ONE
        new = []
        for p in support:
            al, be, ga = mono[p]
            k = v.kappa(p + 1)
            t = a[p]
            if t < be:
                coeff = None
                break
            if ga:
                coeff = coeff * qpow(ga * k * t)
            for s in range(be):
                coeff = coeff * qint(k * (t - s))
            new.append(t - be + al)
        hit = None if coeff is None else (coeff, tuple(new))
        cache[key] = hit
    if hit is None:
        return None
    coeff, new = hit
    out = list(a)
    for p, t in zip(support, new):
        out[p] = t
    return coeff, tuple(out)


def act(v, elem, poly):
    """A Weyl-algebra element applied to a polynomial."""
    if elem.variant != v or poly.variant != v:
        raise ValueError("variant mismatch")
    out = {}
    for mono, mc in elem.terms.items():
        for a, c in poly.terms.items():
            img = _mono_act(v, mono, a)
            if img is None:
                continue
            w, b = img
            s = out.get(b)
            s = mc * c * w if s is None else s + mc * c * w
            if s:
                out[b] = s
            else:
                out.pop(b, None)
    return PolyElement(v, out)


def _tcal_point(v, i, e, kind, a):
    """Sign, q-exponent and new exponent vector of one tcal on X^a."""
    r = v.rank
    if v.kind == "jmath" and i == r:
        aa, bb = a[r - 1], a[r]
        num = aa * aa + 3 * aa - 2 * bb + 4 * aa * bb
        assert num % 2 == 0, "diagonal exponent must be an integer"
        return 1, e * (num // 2), a
    if v.kind == "imath" and i == r + 1:
        aa = a[r]
        num = aa * aa - aa
        assert num % 2 == 0, "diagonal exponent must be an integer"
        return 1, e * (num // 2), a
    p = i - 1
    aa, bb = a[p], a[p + 1]
    newa = a[:p] + (bb, aa) + a[p + 2 :]
    if kind == "prime":
        return (-1 if bb % 2 else 1), e * bb * (aa + 1), newa
    return (-1 if aa % 2 else 1), e * aa * (bb + 1), newa


def tcal(v, i, e, kind, poly):
    """The braid operator on polynomials with subscripts i and e."""
    if kind not in TCAL_KINDS:
        raise ValueError("unknown kind %r" % (kind,))
    if e not in (1, -1):
        raise ValueError("e must be +1 or -1, got %r" % (e,))
    bmax = (v.n + 1) // 2
    if not 1 <= i <= bmax:
        raise ValueError("braid index out of range: i=%d (range 1..%d)" % (i, bmax))
    if poly.variant != v:
        raise ValueError("variant mismatch")
    out = {}
    for a, c in poly.terms.items():
        sign, k, b = _tcal_point(v, i, e, kind, a)
        w = c * qpow(k)
        if sign < 0:
            w = -w
        s = out.get(b)
        s = w if s is None else s + w
        if s:
            out[b] = s
        else:
            out.pop(b, None)
    return PolyElement(v, out)


def grid(v, bound):
    """All exponent vectors with entries 0..bound, in lexicographic order."""
    return itertools.product(range(bound + 1), repeat=v.rank + 1)


def _wtag(letter):
    name, idx = letter
    return ("m%d^-1" % idx) if name == "mi" else "%s%d" % (name, idx)


def check_module_homomorphism(v, bound):
    """Letter-by-letter action agrees with acting by the normal form."""
    rng = random.Random("module-homomorphism/%s/%d/%d" % (v.kind, v.rank, bound))
    letters = generator_letters(v)
    checks = []
    unit = WeylElement.unit(v)
    checks.append(
        aggregate_check(
            "module-homomorphism/unit",
            "the empty word acts as the identity on the grid",
            (
                ("X^%s" % (a,), act(v, unit, PolyElement.monomial(v, a)), PolyElement.monomial(v, a))
                for a in grid(v, bound)
            ),
        )
    )
    for w in range(10):
        word = tuple(rng.choice(letters) for _ in range(rng.randint(1, 6)))
        elem = reduce_word(v, word)
        checks.append(
            aggregate_check(
                "module-homomorphism/word/%02d" % w,
                "the word %s acts like its normal form on the grid"
                % " ".join(_wtag(l) for l in word),
                (
                    (
                        "X^%s" % (a,),
                        act_word(v, word, PolyElement.monomial(v, a)),
                        act(v, elem, PolyElement.monomial(v, a)),
                    )
                    for a in grid(v, bound)
                ),
            )
        )
    for t in range(6):
        wu = tuple(rng.choice(letters) for _ in range(rng.randint(1, 3)))
        ww = tuple(rng.choice(letters) for _ in range(rng.randint(1, 3)))
        eu = reduce_word(v, wu)
        ew = reduce_word(v, ww)
        prod = eu * ew
        checks.append(
            aggregate_check(
                "module-homomorphism/assoc/%02d" % t,
                "acting by %s * %s equals acting twice on the grid"
                % (
                    " ".join(_wtag(l) for l in wu),
                    " ".join(_wtag(l) for l in ww),
                ),
                (
                    (
                        "X^%s" % (a,),
                        act(v, prod, PolyElement.monomial(v, a)),
                        act(v, eu, act(v, ew, PolyElement.monomial(v, a))),
                    )
                    for a in grid(v, bound)
                ),
            )
        )
    return checks


def check_tcal_suite(v, e, bound):
    """Intertwining with the algebra braid action, inverses, braid moves."""
    checks = []
    letters = generator_letters(v)
    bmax = (v.n + 1) // 2
    pts = list(grid(v, bound))

    def instances(t_op, tc_i, tc_e, tc_kind):
        for name, idx in letters:
            img = t_op.images[(name, idx)]
            for a in pts:
                mono = PolyElement.monomial(v, a)
                lhs = tcal(v, tc_i, tc_e, tc_kind, act_letter(v, name, idx, mono))
                rhs = act(v, img, tcal(v, tc_i, tc_e, tc_kind, mono))
                yield "%s on X^%s" % (_wtag((name, idx)), (a,)), lhs, rhs

    for kind in TCAL_KINDS:
        for i in v.braid_indices:
            t_op = operators.braid_op(v, i, e, kind)
            checks.append(
                aggregate_check(
                    "tcal/intertwine/%s/i=%d" % (kind, i),
                    "moving a generator across the polynomial braid operator"
                    " matches %s" % t_op.label,
                    instances(t_op, i, e, kind),
                )
            )

    def composite(seq, a):
        poly = PolyElement.monomial(v, a)
        for ci, ce, ckind in reversed(seq):
            poly = tcal(v, ci, ce, ckind, poly)
        return poly

    for i in v.braid_indices:
        for cid, seq in (
            ("prime-after-doubleprime", ((i, e, "prime"), (i, -e, "doubleprime"))),
            ("doubleprime-after-prime", ((i, -e, "doubleprime"), (i, e, "prime"))),
        ):
            checks.append(
                aggregate_check(
                    "tcal/inverse/%s/i=%d" % (cid, i),
                    "the two polynomial braid operators at i=%d invert each other"
                    % i,
                    (
                        (
                            "X^%s" % (a,),
                            composite(seq, a),
                            PolyElement.monomial(v, a),
                        )
                        for a in pts
                    ),
                )
            )

    for kind in TCAL_KINDS:
        three = range(2, bmax)
        if not three:
            checks.append(
                skipped_check(
                    "tcal/braid/3-term/%s/none" % kind,
                    "no adjacent pair below the top index at this rank",
                )
            )
        for i in three:
            seq1 = ((i - 1, e, kind), (i, e, kind), (i - 1, e, kind))
            seq2 = ((i, e, kind), (i - 1, e, kind), (i, e, kind))
            checks.append(
                aggregate_check(
                    "tcal/braid/3-term/%s/i=%d" % (kind, i),
                    "the 3-term braid move at i=%d holds on the grid" % i,
                    (
                        ("X^%s" % (a,), composite(seq1, a), composite(seq2, a))
                        for a in pts
                    ),
                )
            )
        if bmax >= 2:
            i = bmax
            seq1 = ((i - 1, e, kind), (i, e, kind)) * 2
            seq2 = ((i, e, kind), (i - 1, e, kind)) * 2
            checks.append(
                aggregate_check(
                    "tcal/braid/4-term/%s/i=%d" % (kind, i),
                    "the 4-term braid move at the top pair holds on the grid",
                    (
                        ("X^%s" % (a,), composite(seq1, a), composite(seq2, a))
                        for a in pts
                    ),
                )
            )
        else:
            checks.append(
                skipped_check(
                    "tcal/braid/4-term/%s/none" % kind,
                    "fewer than two braid generators at this rank",
                )
            )
        pairs = [
            (i, j) for i in v.braid_indices for j in v.braid_indices if j - i >= 2
        ]
        if not pairs:
            checks.append(
                skipped_check(
                    "tcal/braid/commute/%s/none" % kind,
                    "no index pairs at distance >= 2 at this rank",
                )
            )
        for i, j in pairs:
            seq1 = ((i, e, kind), (j, e, kind))
            seq2 = ((j, e, kind), (i, e, kind))
            checks.append(
                aggregate_check(
                    "tcal/braid/commute/%s/i=%d,j=%d" % (kind, i, j),
                    "distant polynomial braid operators commute on the grid",
                    (
                        ("X^%s" % (a,), composite(seq1, a), composite(seq2, a))
                        for a in pts
                    ),
                )
            )
    return checks


def check_iu_module(v, e, bound):
    """The coideal action through phi is braided compatibly with tcal."""
    checks = []
    letters = iqg.iqg_letters(v)
    ph = iqg.phi_spec(v)
    pts = list(grid(v, bound))
    for kind in TCAL_KINDS:
        for i in v.braid_indices:
            s = iqg.tau_subst(v, i, e, kind)
            moved = {u: ph.apply_free(s.image(u)) for u in letters}

            def instances(i=i, kind=kind, moved=moved):
                for u in letters:
                    phi_u = ph.image(u)
                    for a in pts:
                        mono = PolyElement.monomial(v, a)
                        lhs = tcal(v, i, e, kind, act(v, phi_u, mono))
                        rhs = act(v, moved[u], tcal(v, i, e, kind, mono))
                        yield "%s on X^%s" % (iqg._letter_tag(u), (a,)), lhs, rhs

            checks.append(
                aggregate_check(
                    "iu-module/%s/i=%d" % (kind, i),
                    "the coideal letters move across tcal through their tau"
                    " images (kind %s, i=%d)" % (kind, i),
                    instances(),
                )
            )
    return checks

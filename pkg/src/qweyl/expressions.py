"""Elements of a free algebra over Q(q) on an abstract letter alphabet.

A letter is a (name, index) pair; a word is a tuple of letters.  An
expression keeps a dict word -> coefficient with like words collected and
zero coefficients dropped.  No rewriting happens here: this is the layer on
which substitution operators act before anything is reduced.
"""

from . import scalars
from .scalars import QScalar

_INVERSE_NAMES = {"m": "mi", "mi": "m", "K": "Ki", "Ki": "K"}


class FreeExpr:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def zero():
        return FreeExpr({})

    @staticmethod
    def one():
        return FreeExpr({(): scalars.ONE})

    @staticmethod
    def from_scalar(s):
        if isinstance(s, int):
            s = scalars.from_int(s)
        if s.is_zero:
            return FreeExpr({})
        return FreeExpr({(): s})

    @staticmethod
    def letter(name, index):
        return FreeExpr({((name, index),): scalars.ONE})

    @staticmethod
    def word(letters, coeff=scalars.ONE):
        if isinstance(coeff, int):
            coeff = scalars.from_int(coeff)
        if coeff.is_zero:
            return FreeExpr({})
        return FreeExpr({tuple(letters): coeff})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, FreeExpr):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return FreeExpr({w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, QScalar)):
            other = FreeExpr.from_scalar(other)
        if not isinstance(other, FreeExpr):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w)
            if acc is None:
                out[w] = c
            else:
                acc = acc + c
                if acc.is_zero:
                    del out[w]
                else:
                    out[w] = acc
        return FreeExpr(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, QScalar)):
            other = FreeExpr.from_scalar(other)
        if not isinstance(other, FreeExpr):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        if not isinstance(other, FreeExpr):
            return NotImplemented
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                acc = out.get(w)
                if acc is None:
                    if not c.is_zero:
                        out[w] = c
                else:
                    acc = acc + c
                    if acc.is_zero:
                        del out[w]
                    else:
                        out[w] = acc
        return FreeExpr(out)

    def __rmul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        return NotImplemented

    def scale(self, s):
        if isinstance(s, int):
            s = scalars.from_int(s)
        if s.is_zero:
            return FreeExpr({})
        return FreeExpr({w: c * s for w, c in self.terms.items()})

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a free expression")
        out = FreeExpr.one()
        for _ in range(k):
            out = out * self
        return out

    @property
    def is_scalar(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def scalar_value(self):
        if not self.terms:
            return scalars.ZERO
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        raise ValueError("expression is not a scalar")

    def letters_used(self):
        out = set()
        for w in self.terms:
            out.update(w)
        return out

    def __repr__(self):
        if not self.terms:
            return "FreeExpr(0)"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            name = " ".join("%s%d" % l for l in w) if w else "1"
            bits.append("(%s)*%s" % (c, name))
        return "FreeExpr(%s)" % " + ".join(bits)


def qcomm(x, y, e):
    """q-commutator [x, y]_e = x*y - q^e * y*x."""
    return x * y - (y * x).scale(scalars.qpow(e))


def invert_unit(expr):
    """Inverse of a single-term expression whose letters are all invertible."""
    if len(expr.terms) != 1:
        raise ValueError("not an invertible monomial expression")
    ((word, coeff),) = expr.terms.items()
    inv_word = []
    for name, idx in reversed(word):
        flipped = _INVERSE_NAMES.get(name)
        if flipped is None:
            raise ValueError("letter %s%d is not invertible" % (name, idx))
        inv_word.append((flipped, idx))
    return FreeExpr({tuple(inv_word): coeff.inv()})

"""Text syntax for algebra elements and polynomials.

One grammar serves the three contexts (weyl letters d/x/m, coideal
letters B/K, polynomial letters X):

    expr   := '-'? term (('+' | '-') term)*
    term   := factor (('*' | '/')? factor)*
    factor := atom ('^' signedInt)?
    atom   := generator | 'q' | integer | '(' expr ')' | comm
    comm   := '[' expr ',' expr ']_' ('+' | '-')?

Juxtaposition multiplies; '/' divides by a scalar-valued expression;
negative exponents are only meaningful on the invertible letters m and
K.  Rationals are spelled with '/', q-powers as q^k.
"""

from . import iqg, scalars
from .expressions import FreeExpr, qcomm
from .polymod import PolyElement
from .weyl import WeylElement, validate_letter

CONTEXTS = ("weyl", "iqg", "poly")

_GEN_NAMES = {"weyl": "dxm", "iqg": "BK", "poly": "X"}


class ParseError(ValueError):
    """Syntax or validation failure, carrying the offending position."""

    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", text[i:j], i))
            i = j
            continue
        if c.isalpha():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
            continue
        if c in "+-*/^()[],_":
            tokens.append((c, c, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % c, i)
    tokens.append(("END", "", n))
    return tokens


class _Parser:
    def __init__(self, text, context, variant):
        self.tokens = _tokenize(text)
        self.k = 0
        self.context = context
        self.variant = variant

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None):
        tok = self.tokens[self.k]
        if kind is not None and tok[0] != kind:
            raise ParseError(
                "expected %r, found %r" % (kind, tok[1] or "end of input"), tok[2]
            )
        self.k += 1
        return tok

    def unit(self):
        if self.context == "weyl":
            return WeylElement.unit(self.variant)
        if self.context == "iqg":
            return FreeExpr.one()
        return PolyElement.unit(self.variant)

    def from_scalar(self, c):
        if self.context == "weyl":
            return WeylElement.unit(self.variant).scale(c)
        if self.context == "iqg":
            return FreeExpr.from_scalar(c)
        return PolyElement.unit(self.variant).scale(c)

    def scalar_value(self, elem):
        """The scalar an element equals, or None if it is not scalar."""
        if isinstance(elem, scalars.QScalar):
            return elem
        if not elem.terms:
            return scalars.ZERO
        if len(elem.terms) != 1:
            return None
        ((key, c),) = elem.terms.items()
        if self.context == "weyl":
            trivial = all(t == (0, 0, 0) for t in key)
        elif self.context == "iqg":
            trivial = key == ()
        else:
            trivial = all(t == 0 for t in key)
        return c if trivial else None

    def letter(self, name, idx, power, pos):
        """A single generator raised to an integer power."""
        v = self.variant
        if self.context == "poly":
            if power < 0:
                raise ParseError("negative exponent on X%d" % idx, pos)
            if not 1 <= idx <= v.rank + 1:
                raise ParseError(
                    "index out of range: X%d (indices run 1..%d)" % (idx, v.rank + 1),
                    pos,
                )
            exps = [0] * (v.rank + 1)
            exps[idx - 1] = power
            return PolyElement.monomial(v, exps)
        if self.context == "iqg":
            base = name
            if power < 0 and name == "K":
                base = "Ki"
            elif power < 0:
                raise ParseError("negative power of B%d" % idx, pos)
            try:
                iqg.validate_iletter(v, base, idx)
            except ValueError as err:
                raise ParseError(str(err), pos) from None
            out = FreeExpr.one()
            for _ in range(abs(power)):
                out = out * FreeExpr.letter(base, idx)
            return out
        base = name
        if power < 0 and name == "m":
            base = "mi"
        elif power < 0:
            raise ParseError("negative power of %s%d" % (name, idx), pos)
        try:
            validate_letter(v, base, idx)
        except ValueError as err:
            raise ParseError(str(err), pos) from None
        out = WeylElement.unit(v)
        for _ in range(abs(power)):
            out = out * WeylElement.generator(v, base, idx)
        return out

    def parse(self):
        out = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ParseError("unexpected %r" % tok[1], tok[2])
        if isinstance(out, scalars.QScalar):
            out = self.from_scalar(out)
        return out

    def expr(self):
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        out = self.term()
        if negate:
            out = -out
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            out = out - rhs if op == "-" else out + rhs
        return out

    def term(self):
        out = None
        op = "*"
        while True:
            tok = self.peek()
            if tok[0] in ("*", "/"):
                if out is None:
                    raise ParseError("unexpected %r" % tok[1], tok[2])
                op = self.take()[0]
                tok = self.peek()
            elif out is not None:
                op = "*"
            if tok[0] not in ("NAME", "INT", "(", "["):
                if out is None or op != "*":
                    raise ParseError(
                        "expected an expression, found %r"
                        % (tok[1] or "end of input"),
                        tok[2],
                    )
                return out
            factor = self.factor()
            if out is None:
                out = factor
            elif op == "*":
                out = out * factor
            else:
                c = self.scalar_value(factor)
                if c is None:
                    raise ParseError("division by a non-scalar expression", tok[2])
                if not c:
                    raise ParseError("division by zero", tok[2])
                inv = c.inv()
                out = out * inv if isinstance(out, scalars.QScalar) else out.scale(inv)

    def factor(self):
        tok = self.peek()
        if tok[0] == "NAME":
            self.take()
            name, pos = tok[1], tok[2]
            if name == "q":
                power = self.exponent(default=1)
                return scalars.qpow(power)
            head, digits = name[0], name[1:]
            if head not in _GEN_NAMES[self.context] or not digits:
                raise ParseError("unknown generator '%s'" % name, pos)
            power = self.exponent(default=1)
            return self.letter(head, int(digits), power, pos)
        if tok[0] == "INT":
            self.take()
            c = scalars.from_int(int(tok[1]))
            power = self.exponent(default=1)
            if power < 0:
                if not c:
                    raise ParseError("division by zero", tok[2])
                return c.inv() ** (-power)
            return c ** power
        if tok[0] == "(":
            self.take()
            out = self.expr()
            self.take(")")
            return self.apply_power(out, self.exponent(default=1), tok[2])
        if tok[0] == "[":
            self.take()
            lhs = self.expr()
            self.take(",")
            rhs = self.expr()
            self.take("]")
            self.take("_")
            e = 1
            if self.peek()[0] in ("+", "-"):
                e = 1 if self.take()[0] == "+" else -1
            if isinstance(lhs, scalars.QScalar):
                lhs = self.from_scalar(lhs)
            if isinstance(rhs, scalars.QScalar):
                rhs = self.from_scalar(rhs)
            if self.context == "iqg":
                out = qcomm(lhs, rhs, e)
            else:
                out = lhs * rhs - (rhs * lhs).scale(scalars.qpow(e))
            return self.apply_power(out, self.exponent(default=1), tok[2])
        raise ParseError(
            "expected an expression, found %r" % (tok[1] or "end of input"), tok[2]
        )

    def apply_power(self, out, power, pos):
        if power == 1:
            return out
        if isinstance(out, scalars.QScalar):
            if power < 0:
                if not out:
                    raise ParseError("division by zero", pos)
                return out.inv() ** (-power)
            return out ** power
        if power < 0:
            c = self.scalar_value(out)
            if c is None:
                raise ParseError("negative power of a non-scalar expression", pos)
            if not c:
                raise ParseError("division by zero", pos)
            return self.from_scalar(c.inv() ** (-power))
        return out ** power

    def exponent(self, default):
        if self.peek()[0] != "^":
            return default
        self.take()
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = 1 if self.take()[0] == "+" else -1
        tok = self.take("INT")
        return sign * int(tok[1])


def parse(text, context, variant):
    """Parse text into a WeylElement, FreeExpr, or PolyElement."""
    if context not in CONTEXTS:
        raise ValueError("unknown context %r" % (context,))
    return _Parser(text, context, variant).parse()

"""Exact arithmetic in Q(q), the field of rational functions in q.

A scalar is a reduced fraction num/den of integer polynomials, stored as
dense coefficient tuples (index = power of q, no trailing zeros).  Canonical
form: gcd(num, den) = 1 including integer content, den has positive leading
coefficient, zero is ()/(1,).  Negative powers of q fold into whichever side
of the fraction needs them, so Laurent expressions stay exact.
"""

import math

P_ZERO = ()
P_ONE = (1,)


def p_trim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def p_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return p_trim(out)


def p_neg(a):
    return tuple(-c for c in a)


def p_sub(a, b):
    return p_add(a, p_neg(b))


def p_mul(a, b):
    if not a or not b:
        return P_ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return tuple(out)


def p_pow(a, k):
    out = P_ONE
    for _ in range(k):
        out = p_mul(out, a)
    return out


def p_shift(a, k):
    # multiply by q^k, k >= 0
    return ((0,) * k + a) if a else P_ZERO


def p_val(a):
    # q-adic valuation of a nonzero polynomial
    i = 0
    while a[i] == 0:
        i += 1
    return i


def p_content(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _pos(a):
    return a if a[-1] > 0 else p_neg(a)


def _pp(a):
    # primitive part, positive leading coefficient
    c = p_content(a)
    if c != 1:
        a = tuple(x // c for x in a)
    return a if a[-1] > 0 else p_neg(a)


def _prem(a, b):
    # pseudo-remainder: repeatedly scale by lc(b) and subtract shifted b,
    # valid input for a primitive remainder sequence
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    for k in range(len(a) - db - 1, -1, -1):
        lead = r[db + k]
        if lead:
            for i in range(len(r)):
                r[i] *= lb
            for i in range(db + 1):
                r[k + i] -= lead * b[i]
    return p_trim(r[:db])


def p_gcd(a, b):
    """Gcd in Z[q], positive leading coefficient, integer content included."""
    if not a:
        return _pos(b) if b else P_ZERO
    if not b:
        return _pos(a)
    va = p_val(a)
    vb = p_val(b)
    v = min(va, vb)
    sa = a[va:]
    sb = b[vb:]
    c = math.gcd(p_content(sa), p_content(sb))
    A = _pp(sa)
    B = _pp(sb)
    if len(A) < len(B):
        A, B = B, A
    while B:
        if len(B) == 1:
            A = P_ONE
            break
        R = _prem(A, B)
        A, B = B, (_pp(R) if R else P_ZERO)
    g = A if c == 1 else tuple(x * c for x in A)
    return p_shift(g, v)


def p_div_exact(a, b):
    # exact division in Z[q]; b must divide a
    if not a:
        return P_ZERO
    out = [0] * (len(a) - len(b) + 1)
    r = list(a)
    lb = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = r[len(b) - 1 + k]
        qc = c // lb
        assert qc * lb == c, "inexact polynomial division"
        out[k] = qc
        if qc:
            for i, bi in enumerate(b):
                r[k + i] -= qc * bi
    assert not any(r), "inexact polynomial division"
    return p_trim(out)


def p_lcm(a, b):
    if a == P_ONE:
        return _pos(b)
    if b == P_ONE:
        return _pos(a)
    g = p_gcd(a, b)
    return _pos(p_mul(a, p_div_exact(b, g)))


def poly_str(p, shift=0):
    """Render with descending powers of q; shift lets exponents go negative."""
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        e = k + shift
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            qq = "q" if e == 1 else "q^%d" % e
            body = qq if mag == 1 else "%d*%s" % (mag, qq)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


class QScalar:
    __slots__ = ("num", "den")

    def __init__(self, num=P_ZERO, den=P_ONE):
        if isinstance(num, int):
            num = (num,) if num else P_ZERO
        if isinstance(den, int):
            den = (den,) if den else P_ZERO
        num = p_trim(num)
        den = p_trim(den)
        if not den:
            raise ZeroDivisionError("zero divisor")
        if not num:
            self.num = P_ZERO
            self.den = P_ONE
            return
        v = min(p_val(num), p_val(den))
        if v:
            num = num[v:]
            den = den[v:]
        g = p_gcd(num, den)
        if g != P_ONE:
            num = p_div_exact(num, g)
            den = p_div_exact(den, g)
        if den[-1] < 0:
            num = p_neg(num)
            den = p_neg(den)
        self.num = num
        self.den = den

    @staticmethod
    def _raw(num, den):
        # trusted constructor: num/den already canonical
        s = object.__new__(QScalar)
        s.num = num
        s.den = den
        return s

    @property
    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, QScalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return self.den == P_ONE and self.num == ((other,) if other else P_ZERO)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return QScalar._raw(p_neg(self.num), self.den)

    def __add__(self, other):
        other = _wrap(other)
        if other is None:
            return NotImplemented
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        if not n1:
            return other
        if not n2:
            return self
        if d1 == P_ONE and d2 == P_ONE:
            return QScalar._raw(p_add(n1, n2), P_ONE)
        if d1 == d2:
            num = p_add(n1, n2)
            if not num:
                return ZERO
            g = p_gcd(num, d1)
            if g == P_ONE:
                return QScalar._raw(num, d1)
            return QScalar._raw(p_div_exact(num, g), p_div_exact(d1, g))
        return QScalar(p_add(p_mul(n1, d2), p_mul(n2, d1)), p_mul(d1, d2))

    __radd__ = __add__

    def __sub__(self, other):
        other = _wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _wrap(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _wrap(other)
        if other is None:
            return NotImplemented
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        if not n1 or not n2:
            return ZERO
        if n1 == P_ONE and d1 == P_ONE:
            return other
        if n2 == P_ONE and d2 == P_ONE:
            return self
        if d1 == P_ONE and d2 == P_ONE:
            return QScalar._raw(p_mul(n1, n2), P_ONE)
        g1 = p_gcd(n1, d2)
        if g1 != P_ONE:
            n1 = p_div_exact(n1, g1)
            d2 = p_div_exact(d2, g1)
        g2 = p_gcd(n2, d1)
        if g2 != P_ONE:
            n2 = p_div_exact(n2, g2)
            d1 = p_div_exact(d1, g2)
        return QScalar._raw(p_mul(n1, n2), p_mul(d1, d2))

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("zero divisor")
        n, d = self.den, self.num
        if d[-1] < 0:
            n, d = p_neg(n), p_neg(d)
        return QScalar._raw(n, d)

    def __truediv__(self, other):
        other = _wrap(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _wrap(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k):
        if k == 0:
            return ONE
        if k < 0:
            return self.inv() ** (-k)
        return QScalar._raw(p_pow(self.num, k), p_pow(self.den, k))

    def bar(self):
        """The involution q -> q^-1."""
        n, d = self.num, self.den
        if not n:
            return ZERO
        rn = p_trim(tuple(reversed(n)))
        rd = p_trim(tuple(reversed(d)))
        dn = len(n) - 1
        dd = len(d) - 1
        if dd >= dn:
            num, den = p_shift(rn, dd - dn), rd
        else:
            num, den = rn, p_shift(rd, dn - dd)
        if den[-1] < 0:
            num, den = p_neg(num), p_neg(den)
        return QScalar._raw(num, den)

    def __str__(self):
        ns = poly_str(self.num)
        if self.den == P_ONE:
            return ns
        return "(%s)/(%s)" % (ns, poly_str(self.den))

    def __repr__(self):
        return "QScalar(%s)" % self


def _wrap(x):
    if isinstance(x, QScalar):
        return x
    if isinstance(x, int):
        return from_int(x)
    return None


ZERO = QScalar._raw(P_ZERO, P_ONE)
ONE = QScalar._raw(P_ONE, P_ONE)
MINUS_ONE = QScalar._raw((-1,), P_ONE)

_int_cache = {0: ZERO, 1: ONE, -1: MINUS_ONE}
_qpow_cache = {0: ONE}
_qint_cache = {}
_qfact_cache = {0: ONE}
_qdfact_cache = {0: ONE}


def from_int(c):
    s = _int_cache.get(c)
    if s is None:
        s = QScalar._raw((c,), P_ONE)
        _int_cache[c] = s
    return s


def from_frac(a, b):
    return QScalar((a,), (b,))


def qpow(k):
    """q^k as a scalar, for any integer k."""
    s = _qpow_cache.get(k)
    if s is None:
        if k > 0:
            s = QScalar._raw((0,) * k + (1,), P_ONE)
        else:
            s = QScalar._raw(P_ONE, (0,) * (-k) + (1,))
        _qpow_cache[k] = s
    return s


def qint(n):
    """Quantum integer [n] = (q^n - q^-n)/(q - q^-1)."""
    s = _qint_cache.get(n)
    if s is None:
        if n == 0:
            s = ZERO
        elif n < 0:
            s = -qint(-n)
        else:
            num = tuple(1 if i % 2 == 0 else 0 for i in range(2 * n - 1))
            den = (0,) * (n - 1) + (1,) if n > 1 else P_ONE
            s = QScalar._raw(num, den)
        _qint_cache[n] = s
    return s


def qfact(n):
    """[n]! = [n][n-1]...[1]."""
    if n < 0:
        raise ValueError("negative factorial")
    s = _qfact_cache.get(n)
    if s is None:
        s = qfact(n - 1) * qint(n)
        _qfact_cache[n] = s
    return s


def qdoublefact(a):
    """[2a]!! = [2a][2a-2]...[2]."""
    if a < 0:
        raise ValueError("negative factorial")
    s = _qdfact_cache.get(a)
    if s is None:
        s = qdoublefact(a - 1) * qint(2 * a)
        _qdfact_cache[a] = s
    return s


def laurent_parts(s):
    """Split s as q^t * nt/dt with both parts having nonzero constant term."""
    n, d = s.num, s.den
    if not n:
        return 0, P_ZERO, P_ONE
    vn = p_val(n)
    vd = p_val(d)
    return vn - vd, n[vn:], d[vd:]


def laurent_over_common_den(scalars):
    """Express scalars over one balanced common denominator.

    Returns ([(shift, numpoly)], (dshift, denpoly)); each scalar equals
    q^shift * numpoly / (q^dshift * denpoly), and denpoly == (1,) means no
    denominator is needed.  The shift -h centers the denominator so that
    q^2 - 1 is presented as q - q^-1.
    """
    parts = [laurent_parts(s) for s in scalars]
    D = P_ONE
    for _, _, dt in parts:
        if dt != P_ONE:
            D = p_lcm(D, dt)
    h = (len(D) - 1) // 2
    nums = []
    for t, nt, dt in parts:
        f = D if dt == P_ONE else p_div_exact(D, dt)
        nums.append((t - h, p_mul(nt, f) if f != P_ONE else nt))
    return nums, (-h, D)


def terms_str(pairs, sep="*"):
    """Render [(monomial label, coefficient)] over one balanced denominator.

    Labels are attached with sep; coefficients +-1 vanish, single q-powers
    stay inline ("q^-1*m1^-1"), anything longer gets parentheses.
    """
    if not pairs:
        return "0"
    nums, (dshift, dpoly) = laurent_over_common_den([c for _, c in pairs])
    rendered = []
    for (label, _), (shift, npoly) in zip(pairs, nums):
        nz = [k for k, c in enumerate(npoly) if c]
        if len(nz) == 1:
            k = nz[0]
            c = npoly[k]
            e = shift + k
            neg = c < 0
            mag = abs(c)
            factors = []
            if mag != 1:
                factors.append(str(mag))
            if e != 0:
                factors.append("q" if e == 1 else "q^%d" % e)
            head = "*".join(factors)
            if head and label:
                body = head + sep + label
            else:
                body = head or label or "1"
        else:
            neg = False
            inner = poly_str(npoly, shift)
            if label:
                body = "(" + inner + ")" + sep + label
            elif len(pairs) > 1:
                body = "(" + inner + ")"
            else:
                body = inner
        rendered.append((neg, body))
    out = []
    for neg, body in rendered:
        if not out:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    joined = "".join(out)
    if dpoly == P_ONE:
        return joined
    return "(%s)/(%s)" % (joined, poly_str(dpoly, dshift))

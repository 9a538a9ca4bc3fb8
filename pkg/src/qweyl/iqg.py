"""The coideal algebra on letters B_i, K_i^{+-1} and its image in the Weyl algebra.

Expressions in the generators B_i (i in 1..n) and K_i (i with rho(i) != i)
stay free: every identity about them is checked inside the modified q-Weyl
algebra through the homomorphism phi.  tau_subst builds the braid
substitutions tau'_{i,e} / tau''_{i,e}; omega_subst and psi_subst are the
two anti-automorphisms.  Composites such as tau'tau'' or a braid word are
handled by fusing one substitution at a time into a letter -> WeylElement
table, which keeps the work linear in the composite length.
"""

from . import operators
from .expressions import FreeExpr, qcomm
from .report import aggregate_check, equality_check, skipped_check
from .satake import cartan
from .scalars import QScalar, qpow
from .weyl import EndoSpec, WeylElement, reduce_word
from . import scalars

# 1/(q - q^-1)
_QD = QScalar((0, 1), (-1, 0, 1))

BRAID_KINDS = operators.BRAID_KINDS


def validate_iletter(v, name, idx):
    if name == "B":
        if not 1 <= idx <= v.n:
            raise ValueError(
                "index out of range: B%d (nodes run 1..%d)" % (idx, v.n)
            )
    elif name in ("K", "Ki"):
        if not 1 <= idx <= v.n:
            raise ValueError(
                "index out of range: K%d (nodes run 1..%d)" % (idx, v.n)
            )
        if not v.k_legal(idx):
            raise ValueError("K%d illegal: rho fixes node %d" % (idx, idx))
    else:
        raise ValueError("unknown generator '%s%d'" % (name, idx))


def iqg_letters(v):
    """Deterministic list of all legal letters: B's first, then K, K^-1."""
    out = [("B", j) for j in v.node_indices]
    for j in v.node_indices:
        if v.k_legal(j):
            out.append(("K", j))
            out.append(("Ki", j))
    return out


def varsigma(v, i):
    """The parameter attached to node i: 1 at r, q^-1 at r+1, else 0."""
    if not 1 <= i <= v.n:
        raise ValueError("node out of range: %d" % i)
    if i == v.rank:
        return scalars.ONE
    if i == v.rank + 1:
        return qpow(-1)
    return scalars.ZERO


def _letter_tag(letter):
    name, idx = letter
    return ("K%d^-1" % idx) if name == "Ki" else "%s%d" % (name, idx)


def iexpr_str(expr):
    """Render a free expression in B/K letters, K^-1 spelled as a power."""
    words = sorted(expr.terms, reverse=True)
    return scalars.terms_str(
        [(" ".join(_letter_tag(l) for l in w), expr.terms[w]) for w in words],
        sep="*",
    )


def _invert_m_elem(elem):
    """Inverse of a one-term element supported on m-letters only."""
    ((mono, c),) = elem.terms.items()
    inv = []
    for a, b, s in mono:
        if a or b:
            raise ValueError("element is not an invertible monomial")
        inv.append((0, 0, -s))
    return WeylElement(elem.variant, {tuple(inv): c.inv()})


def _phi_letter(v, name, idx):
    r = v.rank
    if name == "B":
        if idx <= r:
            return reduce_word(v, (("x", idx + 1), ("d", idx)))
        if v.kind == "imath" and idx == r + 1:
            return reduce_word(v, (("x", r + 1), ("d", r + 1)))
        t = v.rho(idx)
        return reduce_word(v, (("x", t), ("d", t + 1)))
    if idx <= r:
        qe = -1 if (v.kind == "jmath" and idx == r) else 0
        elem = reduce_word(v, (("m", idx), ("mi", idx + 1)), qpow(qe))
    else:
        t = v.rho(idx)
        qe = 1 if (v.kind == "jmath" and idx == r + 1) else 0
        elem = reduce_word(v, (("mi", t), ("m", t + 1)), qpow(qe))
    if name == "Ki":
        elem = _invert_m_elem(elem)
    return elem


_PHI_CACHE = {}


def phi_table(v):
    tbl = _PHI_CACHE.get(v)
    if tbl is None:
        tbl = {}
        for name, idx in iqg_letters(v):
            tbl[(name, idx)] = _phi_letter(v, name, idx)
        _PHI_CACHE[v] = tbl
    return tbl


def phi_spec(v):
    """The homomorphism into the Weyl algebra, as a letter-image table."""
    return EndoSpec(v, phi_table(v), label="phi")


def phi(v, expr):
    """Evaluate a free expression in B/K letters inside the Weyl algebra."""
    for name, idx in expr.letters_used():
        validate_iletter(v, name, idx)
    return phi_spec(v).apply_free(expr)


class ISubst:
    """A substitution on B/K letters with free-expression images."""

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

    def apply(self, expr):
        """Free composition: substitute every letter, reverse words if anti."""
        out = FreeExpr.zero()
        for word, coeff in expr.terms.items():
            if self.bar_twist:
                coeff = coeff.bar()
            acc = FreeExpr.from_scalar(coeff)
            seq = reversed(word) if self.antimultiplicative else word
            for letter in seq:
                acc = acc * self.image(letter)
            out = out + acc
        return out


def fuse(h, s, label=""):
    """The table of h o s, where h maps letters to Weyl elements.

    Exact on free expressions, so composites of substitutions can be walked
    one factor at a time instead of expanding nested images.
    """
    images = {letter: h.apply_free(s.image(letter)) for letter in h.images}
    return EndoSpec(
        h.variant,
        images,
        antimultiplicative=h.antimultiplicative != s.antimultiplicative,
        bar_twist=h.bar_twist != s.bar_twist,
        label=label or "%s.%s" % (h.label, s.label),
    )


def _kletter(idx, s):
    return ("K", idx) if s == 1 else ("Ki", idx)


def _k_rho_inverse(v, expr):
    """Inverse of a one-word product of K letters, written with plain K's.

    Uses K_a^-1 = K_rho(a), so the result stays inside the K alphabet.
    """
    ((word, coeff),) = expr.terms.items()
    inv = []
    for name, idx in reversed(word):
        inv.append(("K", v.rho(idx) if name == "K" else idx))
    return FreeExpr({tuple(inv): coeff.inv()})


def _tau_k_lower(v, i, j):
    """Image of K_j (j <= r) under any tau at braid index i."""
    pinned = (v.kind == "jmath" and i == v.rank) or (
        v.kind == "imath" and i == v.rank + 1
    )
    if pinned:
        return FreeExpr.letter("K", j)
    if j == i:
        return FreeExpr.letter("K", v.rho(i))
    if abs(i - j) == 1:
        return FreeExpr.word((("K", i), ("K", j)))
    return FreeExpr.letter("K", j)


def _tau_b_image(v, i, e, prime, j):
    r = v.rank
    rho = v.rho

    def bl(a):
        return FreeExpr.letter("B", a)

    if v.kind == "jmath" and i == r:
        if prime:
            if j == r - 1:
                return qcomm(qcomm(bl(r - 1), bl(r), e), bl(r + 1), e).scale(
                    qpow(-e)
                ) - FreeExpr.word((_kletter(r, e), ("B", r - 1)))
            if j == r:
                return FreeExpr.word((_kletter(r, e), ("B", r)))
            if j == r + 1:
                return FreeExpr.word((("B", r + 1), _kletter(r + 1, e)))
            if j == r + 2:
                return qcomm(qcomm(bl(r + 2), bl(r + 1), e), bl(r), e).scale(
                    qpow(-e)
                ) - FreeExpr.word((("B", r + 2), _kletter(r + 1, e)))
        else:
            if j == r - 1:
                return qcomm(bl(r + 1), qcomm(bl(r), bl(r - 1), -e), -e).scale(
                    qpow(e)
                ) - FreeExpr.word((_kletter(r + 1, -e), ("B", r - 1)))
            if j == r:
                return FreeExpr.word((_kletter(r + 1, -e), ("B", r)))
            if j == r + 1:
                return FreeExpr.word((("B", r + 1), _kletter(r, -e)))
            if j == r + 2:
                return qcomm(bl(r), qcomm(bl(r + 1), bl(r + 2), -e), -e).scale(
                    qpow(e)
                ) - FreeExpr.word((("B", r + 2), _kletter(r, -e)))
        return bl(j)

    if v.kind == "imath" and i == r + 1:
        if j == r:
            return qcomm(bl(r + 1), bl(r), -e)
        if j == r + 2:
            return qcomm(bl(r + 2), bl(r + 1), e)
        return bl(j)

    # generic column; the doubly-adjacent row only exists for imath (r, r+1)
    if j == i:
        if prime:
            return -FreeExpr.word((("B", rho(i)), _kletter(rho(i), e)))
        return -FreeExpr.word((_kletter(i, -e), ("B", rho(i))))
    if j == rho(i):
        if prime:
            return -FreeExpr.word((_kletter(i, e), ("B", i)))
        return -FreeExpr.word((("B", i), _kletter(rho(i), -e)))
    near_i = cartan(i, j) == -1
    near_rho = cartan(rho(i), j) == -1
    if near_i and near_rho:
        if prime:
            return qcomm(bl(r), qcomm(bl(r + 1), bl(r + 2), e), -e) + FreeExpr.word(
                (("B", r + 1), _kletter(rho(r), e))
            )
        return qcomm(qcomm(bl(r), bl(r + 1), -e), bl(r + 2), e) + FreeExpr.word(
            (("B", r + 1), _kletter(rho(r), -e))
        )
    if near_i:
        if prime:
            return qcomm(bl(i), bl(j), -e)
        return qcomm(bl(j), bl(i), e)
    if near_rho:
        if prime:
            return qcomm(bl(j), bl(rho(i)), e)
        return qcomm(bl(rho(i)), bl(j), -e)
    return bl(j)


def tau_subst(v, i, e, kind):
    """The substitution tau'_{i,e} (kind "prime") or tau''_{i,e}."""
    if kind not in BRAID_KINDS:
        raise ValueError("unknown kind %r" % (kind,))
    if e not in (1, -1):
        raise ValueError("e must be +1 or -1, got %r" % (e,))
    bmax = (v.n + 1) // 2
    if not 1 <= i <= bmax:
        raise ValueError("braid index out of range: i=%d (range 1..%d)" % (i, bmax))
    prime = kind == "prime"
    images = {}
    for j in v.node_indices:
        images[("B", j)] = _tau_b_image(v, i, e, prime, j)
    for j in v.node_indices:
        if not v.k_legal(j):
            continue
        if j <= v.rank:
            img = _tau_k_lower(v, i, j)
        else:
            img = _k_rho_inverse(v, _tau_k_lower(v, i, v.rho(j)))
        images[("K", j)] = img
        images[("Ki", j)] = _k_rho_inverse(v, img)
    name = "tau'" if prime else "tau''"
    return ISubst(v, images, label="%s_{%d,%+d}" % (name, i, e))


def omega_subst(v):
    """Anti-automorphism with bar twist: B and K letters pushed through rho."""
    images = {}
    for j in v.node_indices:
        images[("B", j)] = FreeExpr.letter("B", v.rho(j))
        if v.k_legal(j):
            images[("K", j)] = FreeExpr.letter("K", v.rho(j))
            images[("Ki", j)] = FreeExpr.letter("Ki", v.rho(j))
    return ISubst(v, images, antimultiplicative=True, bar_twist=True, label="Omega")


def psi_subst(v):
    """Anti-automorphism without twist: B fixed, K sent through rho.

    The q-power on the K image lives on the lower indices; upper-index
    images follow by inverting, using K_a^-1 = K_rho(a).
    """
    images = {}
    twisted = v.kind == "jmath"
    for j in v.node_indices:
        images[("B", j)] = FreeExpr.letter("B", j)
    for j in v.node_indices:
        if not v.k_legal(j):
            continue
        if j <= v.rank:
            c = qpow(-1) if (twisted and j == v.rank) else scalars.ONE
            img = FreeExpr.letter("K", v.rho(j)).scale(c)
        else:
            psi_low = FreeExpr.letter("K", j).scale(
                qpow(-1) if (twisted and v.rho(j) == v.rank) else scalars.ONE
            )
            img = _k_rho_inverse(v, psi_low)
        images[("K", j)] = img
        images[("Ki", j)] = _k_rho_inverse(v, img)
    return ISubst(v, images, antimultiplicative=True, label="Psi")


def iu_relation_instances(v):
    """Defining relations of the coideal algebra, as free-expression pairs."""
    n = v.n
    rho = v.rho
    one = FreeExpr.one()
    zero = FreeExpr.zero()

    def B(j):
        return FreeExpr.letter("B", j)

    def K(j):
        return FreeExpr.letter("K", j)

    rels = []
    for i in v.node_indices:
        if not v.k_legal(i):
            continue
        rels.append(
            ("kk/i=%d" % i, "K%d K%d = 1" % (i, rho(i)), K(i) * K(rho(i)), one)
        )
    for i in v.node_indices:
        if not v.k_legal(i):
            continue
        for j in v.node_indices:
            t = cartan(j, rho(i)) - cartan(j, i)
            rels.append(
                (
                    "kb/i=%d,j=%d" % (i, j),
                    "K%d B%d = q^%d B%d K%d" % (i, j, t, j, i),
                    K(i) * B(j),
                    (B(j) * K(i)).scale(qpow(t)),
                )
            )
    for i in v.node_indices:
        for j in v.node_indices:
            if j <= i or cartan(i, j) != 0:
                continue
            if rho(i) == j:
                rhs = (K(i) - K(rho(i))).scale(_QD)
                desc = "B%d B%d - B%d B%d = (K%d - K%d)/(q - q^-1)" % (
                    j, i, i, j, i, rho(i),
                )
            else:
                rhs = zero
                desc = "B%d B%d = B%d B%d" % (j, i, i, j)
            rels.append(
                ("comm/i=%d,j=%d" % (i, j), desc, B(j) * B(i) - B(i) * B(j), rhs)
            )
    two = qpow(1) + qpow(-1)
    for i in v.node_indices:
        for j in v.node_indices:
            if cartan(i, j) != -1:
                continue
            lhs = B(i) * B(i) * B(j) - (B(i) * B(j) * B(i)).scale(two) + B(j) * B(i) * B(i)
            rhs = zero
            extra = ""
            if rho(i) == i:
                rhs = rhs + B(j)
                extra = " + B%d" % j
            if rho(i) == j:
                corr = K(i).scale(varsigma(v, i) * qpow(-1)) + K(rho(i)).scale(
                    varsigma(v, rho(i)) * qpow(2)
                )
                rhs = rhs - (B(i) * corr).scale(two)
                extra = " - (q + q^-1) B%d (q^-1 vs_%d K%d + q^2 vs_%d K%d)" % (
                    i, i, i, rho(i), rho(i),
                )
            rels.append(
                (
                    "serre/i=%d,j=%d" % (i, j),
                    "B%d^2 B%d - (q + q^-1) B%d B%d B%d + B%d B%d^2 =%s" % (
                        i, j, i, j, i, j, i, extra or " 0",
                    ),
                    lhs,
                    rhs,
                )
            )
    return rels


def check_phi_relations(v):
    """Every defining relation holds inside the Weyl algebra under phi."""
    ph = phi_spec(v)
    checks = []
    for rid, desc, lhs, rhs in iu_relation_instances(v):
        checks.append(
            equality_check(
                "phi-relations/" + rid, desc, ph.apply_free(lhs), ph.apply_free(rhs)
            )
        )
    return checks


def check_intertwine(v, e):
    """The braid and anti-automorphism actions agree across phi."""
    checks = []
    letters = iqg_letters(v)
    ph = phi_spec(v)
    bmax = (v.n + 1) // 2

    for kind in BRAID_KINDS:
        for i in v.braid_indices:
            t = operators.braid_op(v, i, e, kind)
            s = tau_subst(v, i, e, kind)
            checks.append(
                aggregate_check(
                    "intertwine/T-tau/%s/i=%d" % (kind, i),
                    "%s o phi = phi o %s on letters" % (t.label, s.label),
                    (
                        (
                            _letter_tag(l),
                            t.apply(ph.image(l)),
                            ph.apply_free(s.image(l)),
                        )
                        for l in letters
                    ),
                )
            )

    om_w = operators.omega_op(v)
    om_i = omega_subst(v)
    checks.append(
        aggregate_check(
            "intertwine/omega-Omega",
            "omega o phi = phi o Omega on letters",
            (
                (_letter_tag(l), om_w.apply(ph.image(l)), ph.apply_free(om_i.image(l)))
                for l in letters
            ),
        )
    )

    if v.kind == "jmath" and v.rank >= 2:
        r = v.rank
        mname = "m" if e == 1 else "mi"
        lhs = ph.apply_free(tau_subst(v, r, e, "prime").image(("B", r - 1)))
        rhs = reduce_word(
            v, ((mname, r), (mname, r + 1), ("x", r), ("d", r - 1)), qpow(e)
        )
        checks.append(
            equality_check(
                "intertwine/pinned-example",
                "phi(tau'_{%d,%+d}(B%d)) = q^%+d m%d^%+d m%d^%+d x%d d%d"
                % (r, e, r - 1, e, r, e, r + 1, e, r, r - 1),
                lhs,
                rhs,
            )
        )
    else:
        checks.append(
            skipped_check(
                "intertwine/pinned-example",
                "needs the even diagram at rank >= 2",
            )
        )

    for i in v.braid_indices:
        tp = tau_subst(v, i, e, "prime")
        tdp = tau_subst(v, i, -e, "doubleprime")
        for cid, h in (
            ("prime-after-doubleprime", fuse(fuse(ph, tp), tdp)),
            ("doubleprime-after-prime", fuse(fuse(ph, tdp), tp)),
        ):
            checks.append(
                aggregate_check(
                    "intertwine/tau-inverse/%s/i=%d" % (cid, i),
                    "tau composite at i=%d is the identity through phi" % i,
                    ((_letter_tag(l), h.image(l), ph.image(l)) for l in letters),
                )
            )

    for kind in BRAID_KINDS:
        mark = "'" if kind == "prime" else "''"
        subs = {i: tau_subst(v, i, e, kind) for i in v.braid_indices}

        def chain(seq):
            h = ph
            for idx in seq:
                h = fuse(h, subs[idx])
            return h

        three = range(2, bmax)
        if not three:
            checks.append(
                skipped_check(
                    "intertwine/tau-braid/3-term/%s/none" % kind,
                    "no adjacent pair below the top index at this rank",
                )
            )
        for i in three:
            h1 = chain((i - 1, i, i - 1))
            h2 = chain((i, i - 1, i))
            checks.append(
                aggregate_check(
                    "intertwine/tau-braid/3-term/%s/i=%d" % (kind, i),
                    "tau%s_%d tau%s_%d tau%s_%d = tau%s_%d tau%s_%d tau%s_%d through phi"
                    % (mark, i - 1, mark, i, mark, i - 1, mark, i, mark, i - 1, mark, i),
                    ((_letter_tag(l), h1.image(l), h2.image(l)) for l in letters),
                )
            )
        if bmax >= 2:
            i = bmax
            h1 = chain((i - 1, i, i - 1, i))
            h2 = chain((i, i - 1, i, i - 1))
            checks.append(
                aggregate_check(
                    "intertwine/tau-braid/4-term/%s/i=%d" % (kind, i),
                    "the 4-term braid relation at the top pair holds through phi",
                    ((_letter_tag(l), h1.image(l), h2.image(l)) for l in letters),
                )
            )
        else:
            checks.append(
                skipped_check(
                    "intertwine/tau-braid/4-term/%s/none" % kind,
                    "fewer than two braid generators at this rank",
                )
            )
        pairs = [
            (i, j) for i in v.braid_indices for j in v.braid_indices if j - i >= 2
        ]
        if not pairs:
            checks.append(
                skipped_check(
                    "intertwine/tau-braid/commute/%s/none" % kind,
                    "no index pairs at distance >= 2 at this rank",
                )
            )
        for i, j in pairs:
            h1 = chain((i, j))
            h2 = chain((j, i))
            checks.append(
                aggregate_check(
                    "intertwine/tau-braid/commute/%s/i=%d,j=%d" % (kind, i, j),
                    "tau%s_%d and tau%s_%d commute through phi" % (mark, i, mark, j),
                    ((_letter_tag(l), h1.image(l), h2.image(l)) for l in letters),
                )
            )

        for i in v.braid_indices:
            h1 = fuse(fuse(ph, subs[i]), om_i)
            h2 = fuse(fuse(ph, om_i), subs[i])
            checks.append(
                aggregate_check(
                    "intertwine/tau-Omega/%s/i=%d" % (kind, i),
                    "tau%s_%d o Omega = Omega o tau%s_%d through phi"
                    % (mark, i, mark, i),
                    ((_letter_tag(l), h1.image(l), h2.image(l)) for l in letters),
                )
            )

    psi_w = operators.psi_op(v)
    ps = psi_subst(v)
    agree = all(
        psi_w.apply(ph.image(l)) == ph.apply_free(ps.image(l)) for l in letters
    )
    verdict = "holds" if agree else "does not hold"
    checks.append(
        skipped_check(
            "intertwine/psi-Psi",
            "informational: psi o phi = phi o Psi %s on all %d letters"
            % (verdict, len(letters)),
        )
    )
    return checks

"""End-to-end acceptance gate.

One test per criterion, each printing a single verdict line.  Every
comparison is exact equality of canonical forms over the rational
function field in q: the tolerance everywhere is zero.
"""

import io
import json
import random
from contextlib import redirect_stdout

from qweyl import cli, iqg, operators, polymod
from qweyl.report import FAIL, PASS
from qweyl.satake import Variant
from qweyl.weyl import (
    EndoSpec,
    WeylElement,
    check_weyl_relations,
    generator_letters,
    reduce_word,
)

RANKS = (1, 2, 3, 4)
MODULE_RANKS = (1, 2, 3)
DEGREE = 6

ALL_VARIANTS = [Variant(kind, r) for kind in ("jmath", "imath") for r in RANKS]
MODULE_VARIANTS = [
    Variant(kind, r) for kind in ("jmath", "imath") for r in MODULE_RANKS
]


def _verdict(num, ok, detail):
    print("criterion %d: %s (%s)" % (num, "PASS" if ok else "FAIL", detail))
    assert ok, "criterion %d failed: %s" % (num, detail)


def test_criterion_1_weyl_relations():
    checked = failed = 0
    for v in ALL_VARIANTS:
        checks = check_weyl_relations(v)
        assert len(checks) == 8 * (v.rank + 1) ** 2
        checked += len(checks)
        failed += sum(1 for c in checks if c.status != PASS)
    _verdict(1, failed == 0, "%d defining-relation instances, %d failed" % (checked, failed))


def test_criterion_2_confluence_fuzz():
    rng = random.Random(20250825)
    combos = [Variant(kind, r) for kind in ("jmath", "imath") for r in (1, 2, 3)]
    letters = {v: generator_letters(v) for v in combos}
    words = 10000
    mismatches = 0
    for _ in range(words):
        v = combos[rng.randrange(len(combos))]
        word = tuple(
            letters[v][rng.randrange(len(letters[v]))]
            for _ in range(rng.randint(1, 8))
        )
        if reduce_word(v, word, strategy="left") != reduce_word(
            v, word, strategy="right"
        ):
            mismatches += 1
    _verdict(2, mismatches == 0, "%d random words, %d strategy mismatches" % (words, mismatches))


def test_criterion_3_braid_well_defined():
    failed = checked = 0
    for v in ALL_VARIANTS:
        for e in (1, -1):
            checks = operators.check_well_defined(v, e)
            checked += len(checks)
            failed += sum(1 for c in checks if c.status == FAIL)
            for i in v.braid_indices:
                tp = operators.braid_op(v, i, e, "prime")
                tdp = operators.braid_op(v, i, -e, "doubleprime")
                for name, idx in generator_letters(v):
                    g = WeylElement.generator(v, name, idx)
                    checked += 2
                    if tdp.apply(tp.apply(g)) != g:
                        failed += 1
                    if tp.apply(tdp.apply(g)) != g:
                        failed += 1
    _verdict(3, failed == 0, "%d well-definedness and inverse checks, %d failed" % (checked, failed))


def test_criterion_4_braid_relations():
    failed = checked = 0
    for v in ALL_VARIANTS:
        for e in (1, -1):
            checks = operators.check_braid_suite(v, e)
            checked += len(checks)
            failed += sum(1 for c in checks if c.status == FAIL)
    _verdict(4, failed == 0, "%d braid-relation checks, %d failed" % (checked, failed))


def test_criterion_5_phi_relations():
    failed = checked = 0
    for v in ALL_VARIANTS:
        checks = iqg.check_phi_relations(v)
        checked += len(checks)
        failed += sum(1 for c in checks if c.status != PASS)
    _verdict(5, failed == 0, "%d coideal relation instances under phi, %d failed" % (checked, failed))


def test_criterion_6_intertwining():
    failed = checked = 0
    pinned_ok = True
    for v in ALL_VARIANTS:
        for e in (1, -1):
            checks = iqg.check_intertwine(v, e)
            checked += len(checks)
            failed += sum(1 for c in checks if c.status == FAIL)
            if v.kind == "jmath" and v.rank >= 2:
                by_id = {c.id: c for c in checks}
                pinned = by_id["intertwine/pinned-example"]
                if pinned.status != PASS or pinned.lhs != pinned.rhs:
                    pinned_ok = False
    _verdict(
        6,
        failed == 0 and pinned_ok,
        "%d intertwining checks, %d failed, pinned instance %s"
        % (checked, failed, "exact" if pinned_ok else "WRONG"),
    )


def test_criterion_7_omega_commutation():
    failed = checked = 0
    for v in ALL_VARIANTS:
        for e in (1, -1):
            checks = operators.check_omega_commutes(v, e)
            checked += len(checks)
            failed += sum(1 for c in checks if c.status != PASS)
    _verdict(7, failed == 0, "%d omega-commutation checks, %d failed" % (checked, failed))


def test_criterion_8_module_suites():
    failed = checked = 0
    for v in MODULE_VARIANTS:
        checks = list(polymod.check_module_homomorphism(v, DEGREE))
        for e in (1, -1):
            checks.extend(polymod.check_tcal_suite(v, e, DEGREE))
            checks.extend(polymod.check_iu_module(v, e, DEGREE))
        checked += len(checks)
        failed += sum(1 for c in checks if c.status == FAIL)
    _verdict(
        8,
        failed == 0,
        "%d module-suite checks at degree %d, %d failed" % (checked, DEGREE, failed),
    )


def test_criterion_9_cli_determinism_and_mutation(monkeypatch):
    argv = [
        "verify", "all", "--variant", "jmath", "--rank", "2",
        "--e", "1", "--degree", "3", "--format", "json",
    ]
    buf1, buf2 = io.StringIO(), io.StringIO()
    with redirect_stdout(buf1):
        rc1 = cli.main(argv)
    with redirect_stdout(buf2):
        rc2 = cli.main(argv)
    identical = buf1.getvalue() == buf2.getvalue()
    clean = rc1 == 0 and rc2 == 0
    rep = json.loads(buf1.getvalue())
    clean = clean and rep["summary"]["failed"] == 0

    real = operators.braid_op

    def mutated(v, i, e, kind):
        spec = real(v, i, e, kind)
        pinned = (v.kind == "jmath" and i == v.rank) or (
            v.kind == "imath" and i == v.rank + 1
        )
        if kind == "prime" and not pinned:
            images = dict(spec.images)
            images[("d", i + 1)] = -images[("d", i + 1)]
            spec = EndoSpec(v, images, label=spec.label)
        return spec

    monkeypatch.setattr(operators, "braid_op", mutated)
    with redirect_stdout(io.StringIO()):
        rc_wd = cli.main(
            ["verify", "endo-well-defined", "--variant", "jmath", "--rank", "2"]
        )
        rc_it = cli.main(
            ["verify", "intertwine", "--variant", "jmath", "--rank", "2"]
        )
    monkeypatch.undo()
    caught = rc_wd == 1 and rc_it == 1
    _verdict(
        9,
        identical and clean and caught,
        "json determinism %s, clean exit %s, mutation caught %s"
        % (identical, clean, caught),
    )

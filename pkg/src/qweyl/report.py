"""Check records and deterministic verification reports."""

import json

from . import __version__

PASS = "pass"
FAIL = "fail"
SKIP = "skipped"


class Check:
    __slots__ = ("id", "description", "lhs", "rhs", "status")

    def __init__(self, id, description, lhs, rhs, status):
        self.id = id
        self.description = description
        self.lhs = lhs
        self.rhs = rhs
        self.status = status

    def as_dict(self):
        return {
            "id": self.id,
            "description": self.description,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "status": self.status,
        }

    def __repr__(self):
        return "Check(%s: %s)" % (self.id, self.status)


def equality_check(id, description, lhs, rhs):
    """Compare two values with ==; renders both sides into the record."""
    ok = lhs == rhs
    return Check(id, description, str(lhs), str(rhs), PASS if ok else FAIL)


def aggregate_check(id, description, instances):
    """One check over many (tag, lhs, rhs) comparisons.

    Passes when every pair agrees; on the first mismatch the offending
    instance is rendered into the record and the rest are not evaluated.
    """
    n = 0
    for tag, lhs, rhs in instances:
        n += 1
        if lhs != rhs:
            return Check(
                id,
                description,
                "[%s] %s" % (tag, lhs),
                "[%s] %s" % (tag, rhs),
                FAIL,
            )
    msg = "agree on %d instances" % n
    return Check(id, description, msg, msg, PASS)


def skipped_check(id, description):
    return Check(id, description, "", "", SKIP)


def make_report(suite, variant, checks, e=None):
    ids = [c.id for c in checks]
    assert len(ids) == len(set(ids)), "duplicate check ids"
    checks = sorted(checks, key=lambda c: c.id)
    summary = {
        "passed": sum(1 for c in checks if c.status == PASS),
        "failed": sum(1 for c in checks if c.status == FAIL),
        "skipped": sum(1 for c in checks if c.status == SKIP),
    }
    return {
        "suite": suite,
        "variant": variant.kind,
        "rank": variant.rank,
        "e": e,
        "toolVersion": __version__,
        "summary": summary,
        "checks": [c.as_dict() for c in checks],
    }


def report_json(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def report_text(report):
    lines = [
        "suite %s  variant=%s rank=%d%s"
        % (
            report["suite"],
            report["variant"],
            report["rank"],
            "" if report["e"] is None else " e=%+d" % report["e"],
        )
    ]
    for c in report["checks"]:
        line = "[%s] %s  %s" % (c["status"], c["id"], c["description"])
        if c["status"] == FAIL:
            line += "\n    lhs = %s\n    rhs = %s" % (c["lhs"], c["rhs"])
        lines.append(line)
    s = report["summary"]
    lines.append(
        "passed=%d failed=%d skipped=%d" % (s["passed"], s["failed"], s["skipped"])
    )
    return "\n".join(lines) + "\n"


def failed_count(report):
    return report["summary"]["failed"]

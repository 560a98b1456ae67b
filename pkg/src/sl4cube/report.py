"""Verification report plumbing shared by the check suites and the CLI."""

from dataclasses import dataclass, field


PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class Check:
    """Outcome of one verified identity.

    ``anchor`` states the identity being checked in formula form; ``witness``
    is present exactly when the check failed and pins down a failing instance.
    """

    id: str
    anchor: str
    n: int | None
    status: str
    witness: str | None = None

    def as_dict(self):
        d = {"id": self.id, "anchor": self.anchor, "n": self.n, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, id, anchor, n, ok, witness=None):
        if ok:
            self.checks.append(Check(id, anchor, n, PASS))
        else:
            self.checks.append(Check(id, anchor, n, FAIL, witness or "no witness recorded"))

    def skip(self, id, anchor, n, reason):
        self.checks.append(Check(id, f"{anchor} [skipped: {reason}]", n, SKIPPED))

    def extend(self, other):
        self.checks.extend(other.checks)

    @property
    def passed(self):
        return all(c.status != FAIL for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

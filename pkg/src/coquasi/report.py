"""Identity-check reports: every checker returns one instead of raising.

A report lists *all* failed identities, each with the basis witness tuple it
failed on, so hand-entered structure constants can be debugged in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Failure:
    identity: str
    witness: tuple[str, ...]
    detail: str = ""

    def __str__(self) -> str:
        where = ", ".join(self.witness)
        msg = f"FAIL {self.identity} at ({where})"
        if self.detail:
            msg += f": {self.detail}"
        return msg

    def to_json(self) -> dict:
        return {"identity": self.identity, "witness": list(self.witness), "detail": self.detail}


@dataclass
class Report:
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, identity: str, witness: tuple[str, ...], detail: str = "") -> None:
        self.failures.append(Failure(identity, tuple(witness), detail))

    def note(self, message: str) -> None:
        if message not in self.notes:
            self.notes.append(message)

    def merge(self, other: "Report", prefix: str = "") -> None:
        for f in other.failures:
            ident = f"{prefix}{f.identity}" if prefix else f.identity
            self.failures.append(Failure(ident, f.witness, f.detail))
        for n in other.notes:
            self.note(f"{prefix}{n}" if prefix else n)

    def summary(self) -> str:
        lines = []
        if self.ok:
            lines.append("all identities hold")
        else:
            lines.append(f"{len(self.failures)} failed identit"
                         + ("y" if len(self.failures) == 1 else "ies"))
            lines.extend(str(f) for f in self.failures)
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "failures": [f.to_json() for f in self.failures],
            "notes": sorted(self.notes),
        }

    def __str__(self) -> str:
        return self.summary()

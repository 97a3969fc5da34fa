"""Exception types and the violation record shared by all loaders."""

from __future__ import annotations

from dataclasses import dataclass


class Mal2SignError(Exception):
    """Base class for all errors raised by this package."""


class MalformedDocument(Mal2SignError):
    """A document could not be parsed at all, or a required field is absent/mistyped."""

    def __init__(self, location: str, detail: str):
        self.location = location
        self.detail = detail
        super().__init__(f"{location}: {detail}")


class DomainError(Mal2SignError):
    """An argument is outside the contract of a numeric operation."""


class DuplicateRuleId(Mal2SignError):
    def __init__(self, rule_id: str):
        self.rule_id = rule_id
        super().__init__(f"duplicate rule id {rule_id!r}")


class EmptySuffix(Mal2SignError):
    def __init__(self, rule_id: str):
        self.rule_id = rule_id
        super().__init__(f"rule {rule_id!r} has an empty suffix")


class SkeletonMismatch(Mal2SignError):
    def __init__(self, expected: str, found: str):
        self.expected = expected
        self.found = found
        super().__init__(f"skeleton id mismatch: expected {expected!r}, found {found!r}")


class InvariantViolation(Mal2SignError):
    """A parsed document is well-formed but breaks a structural invariant."""

    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(detail)


@dataclass(frozen=True)
class Violation:
    """One validation failure, locatable by entry and keyframe.

    `code` is a stable machine-readable identifier (e.g. "non-increasing-time",
    "norm", "unknown-joint"); `where` names the offending entry or document
    section; `keyframe` is the keyframe index when one applies.
    """

    code: str
    where: str
    message: str
    keyframe: int | None = None

    def __str__(self) -> str:
        loc = self.where if self.keyframe is None else f"{self.where}[{self.keyframe}]"
        return f"{loc}: {self.code}: {self.message}"


class LexiconError(Mal2SignError):
    """Aggregated validation failures from loading a lexicon document."""

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        lines = "\n".join(str(v) for v in self.violations)
        super().__init__(f"{len(self.violations)} lexicon violation(s):\n{lines}")


class ResourceError(Mal2SignError):
    """Aggregated failures from loading the full pipeline resource set."""

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        lines = "\n".join(problems)
        super().__init__(f"{len(self.problems)} resource problem(s):\n{lines}")

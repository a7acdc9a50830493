"""Problem instances, solve options, solutions and verification reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .cnf import CnfFormula, canonicalize, to_cnf
from .formula import And, Formula, Not, Symbol, Vocabulary, atoms, conjoin, parse_formula

__all__ = [
    "KINDS",
    "ProblemInstance",
    "SolveOptions",
    "VerificationReport",
    "Solution",
]

KINDS = ("ce", "gce", "sep", "cce", "cd")

_NEEDS_S = {"ce": True, "gce": False, "sep": False, "cce": True, "cd": True}
_NEEDS_S_PRIME = {"ce": True, "gce": False, "sep": False, "cce": False, "cd": False}


@dataclass(frozen=True)
class ProblemInstance:
    """Tagged union over the five problem kinds and their inputs."""

    kind: str
    phi: Formula
    psi: Formula
    s: tuple[Formula, ...] | None = None
    s_prime: tuple[Formula, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown problem kind {self.kind!r}")
        if (self.s is not None) != _NEEDS_S[self.kind]:
            raise ValueError(f"kind {self.kind!r} {'requires' if _NEEDS_S[self.kind] else 'forbids'} S")
        if (self.s_prime is not None) != _NEEDS_S_PRIME[self.kind]:
            raise ValueError(
                f"kind {self.kind!r} {'requires' if _NEEDS_S_PRIME[self.kind] else 'forbids'} S'"
            )

    @classmethod
    def ce(cls, s: Iterable[Formula], s_prime: Iterable[Formula], phi: Formula, psi: Formula) -> "ProblemInstance":
        return cls("ce", phi, psi, tuple(s), tuple(s_prime))

    @classmethod
    def gce(cls, phi: Formula, psi: Formula) -> "ProblemInstance":
        return cls("gce", phi, psi)

    @classmethod
    def sep(cls, phi: Formula, psi: Formula) -> "ProblemInstance":
        return cls("sep", phi, psi)

    @classmethod
    def cce(cls, s: Iterable[Formula], phi: Formula, psi: Formula) -> "ProblemInstance":
        return cls("cce", phi, psi, tuple(s))

    @classmethod
    def cd(cls, s: Iterable[Formula], phi: Formula, psi: Formula) -> "ProblemInstance":
        return cls("cd", phi, psi, tuple(s))

    def s_formula(self) -> Formula:
        return conjoin(self.s or ())

    def s_prime_formula(self) -> Formula:
        return conjoin(self.s_prime or ())

    @property
    def left_target(self) -> Formula:
        """phi & !psi, what theta & chi must reach."""
        return And(self.phi, Not(self.psi))

    @property
    def right_target(self) -> Formula:
        """!phi & psi, what theta' & chi must reach."""
        return And(Not(self.phi), self.psi)

    def symbols(self) -> tuple[Symbol, ...]:
        occurring: set[Symbol] = set()
        for f in (self.phi, self.psi, *(self.s or ()), *(self.s_prime or ())):
            occurring |= atoms(f)
        return tuple(sorted(occurring, key=lambda sym: sym.id))


@dataclass(frozen=True)
class SolveOptions:
    """Knobs shared by all solvers; defaults match the CLI defaults."""

    shape: str = "cnf"  # "cnf" | "terms"
    max_total: int | None = None
    strategy: str = "auto"  # "auto" | "exhaustive" | "cegar"
    deadline: float | None = None  # seconds of wall clock
    repair: bool = False
    output_vocab: tuple[Symbol, ...] | None = None
    jobs: int = 1
    seed: int = 0

    def __post_init__(self) -> None:
        if self.shape not in ("cnf", "terms"):
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.strategy not in ("auto", "exhaustive", "cegar"):
            raise ValueError(f"unknown strategy {self.strategy!r}")


@dataclass
class VerificationReport:
    """Per-condition booleans plus clause classification tags."""

    conditions: dict[str, bool] = field(default_factory=dict)
    theta_tags: tuple[str, ...] = ()
    theta_prime_tags: tuple[str, ...] = ()
    chi_tags: tuple[str, ...] = ()
    notes: dict[str, bool] = field(default_factory=dict)

    @property
    def all_ok(self) -> bool:
        return bool(self.conditions) and all(self.conditions.values())

    def to_json_dict(self) -> dict:
        return {
            "conditions": dict(self.conditions),
            "theta_tags": list(self.theta_tags),
            "theta_prime_tags": list(self.theta_prime_tags),
            "chi_tags": list(self.chi_tags),
            "notes": dict(self.notes),
        }

    @classmethod
    def from_json_dict(cls, d: Mapping) -> "VerificationReport":
        return cls(
            conditions=dict(d.get("conditions", {})),
            theta_tags=tuple(d.get("theta_tags", ())),
            theta_prime_tags=tuple(d.get("theta_prime_tags", ())),
            chi_tags=tuple(d.get("chi_tags", ())),
            notes=dict(d.get("notes", {})),
        )


def _parse_cnf(text: str | None, vocab: Vocabulary) -> CnfFormula | None:
    if text is None:
        return None
    return canonicalize(to_cnf(parse_formula(text, vocab)))


@dataclass
class Solution:
    """Solver output: a verified triple plus sizes and optimality status."""

    status: str  # "ok" | "error" | "timeout"
    theta: CnfFormula | None = None
    theta_prime: CnfFormula | None = None
    chi: CnfFormula | None = None
    total_size: int | None = None
    chi_size: int | None = None
    optimal: bool = False
    verification: VerificationReport | None = None
    reason: str | None = field(default=None, compare=False)

    @property
    def has_triple(self) -> bool:
        return self.theta is not None

    @property
    def triple(self) -> tuple[CnfFormula, CnfFormula, CnfFormula]:
        if self.theta is None or self.theta_prime is None or self.chi is None:
            raise ValueError("solution carries no triple")
        return (self.theta, self.theta_prime, self.chi)

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "theta": None if self.theta is None else str(self.theta),
            "theta_prime": None if self.theta_prime is None else str(self.theta_prime),
            "chi": None if self.chi is None else str(self.chi),
            "total_size": self.total_size,
            "chi_size": self.chi_size,
            "optimal": self.optimal,
            "verification": None if self.verification is None else self.verification.to_json_dict(),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=False)

    @classmethod
    def from_json_dict(cls, d: Mapping, vocab: Vocabulary) -> "Solution":
        verification = d.get("verification")
        return cls(
            status=d["status"],
            theta=_parse_cnf(d.get("theta"), vocab),
            theta_prime=_parse_cnf(d.get("theta_prime"), vocab),
            chi=_parse_cnf(d.get("chi"), vocab),
            total_size=d.get("total_size"),
            chi_size=d.get("chi_size"),
            optimal=bool(d.get("optimal", False)),
            verification=None if verification is None else VerificationReport.from_json_dict(verification),
        )

    @classmethod
    def from_json(cls, text: str, vocab: Vocabulary) -> "Solution":
        return cls.from_json_dict(json.loads(text), vocab)

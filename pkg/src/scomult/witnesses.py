"""Witness objects for existential claims, with definition-level revalidation.

Every predicate that proves an existential statement returns a `Witness`
recording what was found and against which instance.  A witness can always
be re-checked from scratch: `validate()` re-evaluates the defining
condition directly, without reusing any state from the search that
produced it.  Revalidators are registered next to the predicate they
certify via the `revalidator` decorator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

REVALIDATORS: dict[str, Callable[["Witness"], bool]] = {}

# shape vocabulary for each witness claim
KINDS = {
    "s-prime-submodule": "single-s",
    "s-second": "single-s",
    "s-comultiplication": "single-s",
    "s-comultiplication-def": "s-and-ideal",
    "s-multiplication": "single-s",
    "s-cyclic": "s-and-element",
    "s-finite": "single-s",
    "s-torsion-free": "single-s",
    "s-minimal-step": "single-s",
    "s-zero": "single-s",
    "s-monic": "single-s",
    "s-epic": "single-s",
    "maximal-multiple": "single-s",
    "lemma-pair": "single-s",
    "uniform-multiple": "single-s",
    "kernel-killer": "single-s",
}


def revalidator(claim):
    def deco(fn):
        REVALIDATORS[claim] = fn
        return fn

    return deco


@dataclass(frozen=True)
class Witness:
    claim: str
    bindings: tuple[tuple[str, Any], ...]

    @classmethod
    def make(cls, claim, **named):
        return cls(claim, tuple(named.items()))

    def get(self, name):
        for key, value in self.bindings:
            if key == name:
                return value
        raise KeyError(name)

    @property
    def kind(self):
        return KINDS.get(self.claim, "none")

    def validate(self) -> bool:
        """Re-check the defining condition this witness certifies."""
        return REVALIDATORS[self.claim](self)

    def describe(self) -> str:
        parts = []
        for key, value in self.bindings:
            if isinstance(value, int):
                parts.append(f"{key}={value}")
            elif hasattr(value, "describe"):
                parts.append(f"{key}={value.describe()}")
        return f"{self.claim}({', '.join(parts)})"

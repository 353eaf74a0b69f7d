"""Exception types shared across the pipeline."""

from __future__ import annotations

from typing import Any


class InputError(ValueError):
    """The input graph or file is malformed or inadmissible."""


class StructuralAssumptionError(RuntimeError):
    """A structural property the algorithm relies on failed at runtime.

    Carries a machine-readable witness so callers (and the CLI) can dump
    the offending configuration instead of silently producing garbage.
    """

    def __init__(self, message: str, witness: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.witness: dict[str, Any] = witness or {}

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        base = super().__str__()
        if self.witness:
            return f"{base} (witness: {self.witness!r})"
        return base

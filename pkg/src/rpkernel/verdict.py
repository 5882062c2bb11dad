from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of a yes/no check together with the object that justifies it.

    Truthiness follows ``ok`` so a verdict can be used directly in
    conditions. ``witness`` is a counterexample when ``ok`` is false and,
    for some checks, a certificate (cycle, bipartition, path) when true.
    """

    ok: bool
    witness: Any = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

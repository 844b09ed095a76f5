"""Three-valued, resolution-indexed verdicts.

Semi-decidable memberships are reported honestly: Verified(n) certifies
every finite obstruction living at resolution n or below, Refuted carries
a finite checkable witness, Unknown names the horizon that was exhausted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional


@dataclass(frozen=True)
class Verdict:
    kind: str                       # "verified" | "refuted" | "unknown"
    level: Optional[int] = None     # resolution for verified
    witness: Any = None             # finite witness for refuted
    horizon: Optional[int] = None   # exhausted budget for unknown
    note: str = ""

    @property
    def is_verified(self) -> bool:
        return self.kind == "verified"

    @property
    def is_refuted(self) -> bool:
        return self.kind == "refuted"

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"

    def __str__(self) -> str:
        if self.is_verified:
            return f"Verified({self.level})"
        if self.is_refuted:
            return f"Refuted({self.witness_str()})"
        return f"Unknown(horizon={self.horizon})"

    def witness_str(self) -> str:
        w = self.witness
        if isinstance(w, (set, frozenset)):
            return "{" + ", ".join(map(str, sorted(w))) + "}"
        return str(w)

    def as_dict(self) -> dict:
        out: dict[str, Any] = {"verdict": self.kind}
        if self.level is not None:
            out["level"] = self.level
        if self.horizon is not None:
            out["horizon"] = self.horizon
        if self.witness is not None:
            w = self.witness
            if isinstance(w, (set, frozenset)):
                w = sorted(w)
            out["witness"] = _plain(w)
        if self.note:
            out["note"] = self.note
        return out


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, (set, frozenset)):
        return [_plain(y) for y in sorted(x)]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x


def verified(level: int, note: str = "") -> Verdict:
    return Verdict("verified", level=level, note=note)


def refuted(witness, note: str = "") -> Verdict:
    return Verdict("refuted", witness=witness, note=note)


def unknown(horizon: int, note: str = "") -> Verdict:
    return Verdict("unknown", horizon=horizon, note=note)

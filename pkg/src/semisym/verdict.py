"""Verdicts with re-checkable witnesses, and reports that bundle them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"

# witness components that are integers, not carrier elements
_SCALAR_LABELS = {"n", "k", "j", "exponent", "count", "size"}


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: tuple | None = None
    labels: tuple = ()
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def fails(self) -> bool:
        return self.status == FAILS

    @property
    def inconclusive(self) -> bool:
        return self.status == INCONCLUSIVE

    def render_witness(self, sr=None) -> dict | None:
        if self.witness is None:
            return None
        labels = self.labels or tuple(f"w{i}" for i in range(len(self.witness)))
        out = {}
        for lab, val in zip(labels, self.witness):
            if sr is not None and lab not in _SCALAR_LABELS and isinstance(val, int):
                out[lab] = sr.token(val)
            elif isinstance(val, tuple) and sr is not None and lab == "point":
                out[lab] = [sr.token(v) for v in val]
            else:
                out[lab] = val if not isinstance(val, tuple) else list(val)
        return out

    def to_dict(self, sr=None) -> dict:
        d: dict[str, Any] = {"status": self.status}
        w = self.render_witness(sr)
        if w is not None:
            d["witness"] = w
        if self.note:
            d["note"] = self.note
        return d

    def describe(self, sr=None) -> str:
        text = self.status
        w = self.render_witness(sr)
        if w is not None:
            text += ", witness " + ", ".join(f"{k}={v}" for k, v in w.items())
        if self.note:
            text += f" ({self.note})"
        return text


def holds(note: str = "") -> Verdict:
    return Verdict(HOLDS, note=note)


def fails(witness: tuple, labels: tuple = (), note: str = "") -> Verdict:
    return Verdict(FAILS, tuple(witness), tuple(labels), note)


def inconclusive(reason: str) -> Verdict:
    return Verdict(INCONCLUSIVE, note=reason)


def from_bool(ok: bool, witness: tuple = (), labels: tuple = (), note: str = "") -> Verdict:
    return holds(note) if ok else fails(witness, labels, note)


@dataclass
class PropertyReport:
    """Named verdicts about one semiring."""

    semiring: Any
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    extra: dict[str, Any] = field(default_factory=dict)

    def __getitem__(self, name: str) -> Verdict:
        return self.verdicts[name]

    def __setitem__(self, name: str, v: Verdict) -> None:
        self.verdicts[name] = v

    def __iter__(self):
        return iter(self.verdicts)

    @property
    def any_fails(self) -> bool:
        return any(v.fails for v in self.verdicts.values())

    @property
    def any_inconclusive(self) -> bool:
        return any(v.inconclusive for v in self.verdicts.values())

    def to_dict(self) -> dict:
        sr = self.semiring
        return {
            "semiring": getattr(sr, "name", str(sr)),
            "order": getattr(sr, "order", None),
            "properties": {k: v.to_dict(sr) for k, v in self.verdicts.items()},
            **self.extra,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=str)

    def to_text(self) -> str:
        sr = self.semiring
        lines = [f"semiring {getattr(sr, 'name', sr)} (order {getattr(sr, 'order', '?')})"]
        width = max((len(k) for k in self.verdicts), default=0)
        for k, v in self.verdicts.items():
            lines.append(f"  {k.ljust(width)} : {v.describe(sr)}")
        return "\n".join(lines)


def exit_code(verdicts) -> int:
    """0 all hold, 1 some failure, 3 inconclusive (and nothing failed)."""
    vs = list(verdicts)
    if any(v.fails for v in vs):
        return 1
    if any(v.inconclusive for v in vs):
        return 3
    return 0

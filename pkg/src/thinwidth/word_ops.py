"""Width-monotone rewriting of Morse words.

Two moves never increase width:

* type 1 deletes a minimum at position ``i`` together with a later maximum at
  position ``j``; this is only monotone when no prefix of the word is
  negative (``bab`` -> ``b`` goes from width -4 to -2), so that hypothesis is
  part of the move's legality;
* type 2 exchanges adjacent letters ``i, i+1`` unless they read ``b a``
  (pushing a maximum above a minimum is the only exchange that adds width).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import BadLetter, BadPosition, ExcludedSwap, NotNonnegative, ParseError, WidthError
from .morse_word import MorseWord, Validity, profile

__all__ = [
    "OpStep",
    "type1_delete",
    "type2_swap",
    "type1_drop",
    "apply_sequence",
    "trace_sequence",
    "legal_steps",
    "steps_from_json",
]

TYPE1 = "type1"
TYPE2 = "type2"


@dataclass(frozen=True)
class OpStep:
    kind: str
    i: int
    j: Optional[int] = None

    def __post_init__(self):
        if self.kind not in (TYPE1, TYPE2):
            raise ParseError(f"unknown operation kind {self.kind!r}")
        if self.kind == TYPE1 and self.j is None:
            raise ParseError("type1 step needs both i and j")
        if self.kind == TYPE2 and self.j is not None:
            raise ParseError("type2 step takes only i")

    @classmethod
    def type1(cls, i: int, j: int) -> "OpStep":
        return cls(TYPE1, i, j)

    @classmethod
    def type2(cls, i: int) -> "OpStep":
        return cls(TYPE2, i)

    def apply(self, w: MorseWord) -> MorseWord:
        if self.kind == TYPE1:
            return type1_delete(w, self.i, self.j)
        return type2_swap(w, self.i)

    def to_json(self) -> dict:
        if self.kind == TYPE1:
            return {"kind": TYPE1, "i": self.i, "j": self.j}
        return {"kind": TYPE2, "i": self.i}

    def __str__(self) -> str:
        if self.kind == TYPE1:
            return f"type1@({self.i},{self.j})"
        return f"type2@{self.i}"


def _word(w) -> MorseWord:
    return w if isinstance(w, MorseWord) else MorseWord(w)


def type1_delete(w: MorseWord | str, i: int, j: int, *, strict: bool = True) -> MorseWord:
    """Remove the minimum at ``i`` and the maximum at ``j`` (1-indexed, i < j).

    With ``strict`` (the default) the word must have no negative prefix value,
    otherwise :class:`NotNonnegative` is raised.  ``strict=False`` performs the
    bare deletion, which may increase width.
    """
    w = _word(w)
    t = len(w.text)
    if not (1 <= i < j <= t):
        raise BadPosition(f"type1 needs 1 <= i < j <= {t}, got i={i}, j={j}")
    if w.text[i - 1] != "a":
        raise BadLetter(f"letter at position {i} is {w.text[i - 1]!r}, expected 'a'")
    if w.text[j - 1] != "b":
        raise BadLetter(f"letter at position {j} is {w.text[j - 1]!r}, expected 'b'")
    if strict and not profile(w).is_nonnegative:
        raise NotNonnegative(f"type1 needs a word with no negative prefix; {w.text!r} has one")
    s = w.text
    return MorseWord(s[: i - 1] + s[i:j - 1] + s[j:])


def type1_drop(w: MorseWord | str, i: int, j: int) -> int:
    """Closed-form width lost by ``type1_delete(w, i, j)``.

    The two deleted prefix values disappear and every letter strictly between
    the pair sits two strands lower.
    """
    prefix = profile(w).prefix
    return prefix[i - 1] + prefix[j - 1] + 2 * (j - i - 1)


def type2_swap(w: MorseWord | str, i: int) -> MorseWord:
    """Exchange letters ``i`` and ``i + 1``; equal letters give the same word."""
    w = _word(w)
    t = len(w.text)
    if not (1 <= i <= t - 1):
        raise BadPosition(f"type2 needs 1 <= i <= {t - 1}, got i={i}")
    s = w.text
    pair = s[i - 1 : i + 1]
    if pair == "ba":
        raise ExcludedSwap(f"positions {i},{i + 1} read 'ba'; exchanging them raises width")
    return MorseWord(s[: i - 1] + pair[::-1] + s[i + 1 :])


def trace_sequence(w: MorseWord | str, steps: Iterable[OpStep]) -> list[tuple[OpStep, MorseWord, int, Validity]]:
    """Apply ``steps`` in order, returning ``(step, word, width, validity)`` per step.

    A failing step re-raises its error with ``step`` set to the 1-based index
    of the offending step.
    """
    current = _word(w)
    rows = []
    for k, step in enumerate(steps, start=1):
        try:
            current = step.apply(current)
        except WidthError as exc:
            exc.step = k
            exc.args = (f"step {k} ({step}): {exc}",)
            raise
        prof = profile(current)
        rows.append((step, current, prof.width, prof.validity))
    return rows


def apply_sequence(w: MorseWord | str, steps: Iterable[OpStep]) -> tuple[MorseWord, list[int]]:
    """Final word and the width after each step."""
    rows = trace_sequence(w, steps)
    final = rows[-1][1] if rows else _word(w)
    return final, [r[2] for r in rows]


def legal_steps(w: MorseWord | str) -> list[OpStep]:
    """Every step that is legal on ``w``, type 1 first, in position order."""
    w = _word(w)
    s = w.text
    t = len(s)
    out = []
    if profile(w).is_nonnegative:
        mins = [i for i in range(1, t + 1) if s[i - 1] == "a"]
        maxs = [j for j in range(1, t + 1) if s[j - 1] == "b"]
        out.extend(OpStep.type1(i, j) for i in mins for j in maxs if i < j)
    out.extend(OpStep.type2(i) for i in range(1, t) if s[i - 1 : i + 1] != "ba")
    return out


def steps_from_json(doc) -> list[OpStep]:
    """Decode a JSON array of ``{"kind": "type1", "i", "j"}`` / ``{"kind": "type2", "i"}``."""
    if not isinstance(doc, list):
        raise ParseError("operation sequence must be a JSON array")
    steps = []
    for k, item in enumerate(doc, start=1):
        if not isinstance(item, dict) or "kind" not in item or "i" not in item:
            raise ParseError(f"operation {k} is not an object with 'kind' and 'i'")
        extra = set(item) - {"kind", "i", "j"}
        if extra:
            raise ParseError(f"operation {k} has unexpected keys {sorted(extra)}")
        ints = [item["i"]] + ([item["j"]] if "j" in item else [])
        if any(not isinstance(v, int) or isinstance(v, bool) for v in ints):
            raise ParseError(f"operation {k} positions must be integers")
        steps.append(OpStep(item["kind"], item["i"], item.get("j")))
    return steps

"""Morse words and their width profiles.

A knot in Morse position is recorded bottom to top by its critical points:
``a`` for a local minimum, ``b`` for a local maximum.  The strand count on the
regular level just above the i-th critical point is the i-th prefix sum of the
map a -> +2, b -> -2, and the width is the sum of those prefix values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, Optional

from .errors import InvalidCharacter, NotBalanced, WidthOverflow

__all__ = [
    "Letter",
    "MorseWord",
    "Validity",
    "WidthProfile",
    "parse",
    "format_word",
    "profile",
    "width",
    "bridge_number",
    "check_int64",
]

INT64_MAX = 2**63 - 1


def check_int64(value: int, what: str = "width") -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise WidthOverflow(f"{what} {value} does not fit in a signed 64-bit integer")
    return value


class Letter(enum.Enum):
    MIN = "a"
    MAX = "b"

    @property
    def step(self) -> int:
        return 2 if self is Letter.MIN else -2

    def flipped(self) -> "Letter":
        return Letter.MAX if self is Letter.MIN else Letter.MIN


class Validity(enum.IntEnum):
    """Nested validity tiers; a higher tier implies every lower one."""

    FORMAL = 0
    BALANCED = 1
    NONNEGATIVE = 2
    KNOT = 3

    @property
    def label(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class MorseWord:
    """Immutable word over ``{a, b}``, letters ordered by increasing height.

    Stored as its text; positions in the public operations are 1-indexed.
    """

    text: str = ""

    def __post_init__(self):
        if not isinstance(self.text, str):
            raise TypeError(f"MorseWord text must be str, got {type(self.text).__name__}")
        for idx, ch in enumerate(self.text, start=1):
            if ch != "a" and ch != "b":
                raise InvalidCharacter(idx, ch)

    @classmethod
    def from_letters(cls, letters) -> "MorseWord":
        return cls("".join(Letter(l).value for l in letters))

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter(ch) for ch in self.text)

    def letter(self, pos: int) -> Letter:
        """Letter at 1-indexed position ``pos``."""
        return Letter(self.text[pos - 1])

    def flipped(self) -> "MorseWord":
        """The word of the same knot turned upside down."""
        return MorseWord(self.text[::-1].translate(_SWAP))

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return self.text


_SWAP = str.maketrans("ab", "ba")


@dataclass(frozen=True)
class WidthProfile:
    word: MorseWord
    prefix: tuple[int, ...]
    width: int
    bridge: Optional[int]
    validity: Validity

    @property
    def is_nonnegative(self) -> bool:
        """All prefix values are >= 0 (balance not required)."""
        return all(p >= 0 for p in self.prefix)

    def to_json(self) -> dict:
        return {
            "word": self.word.text,
            "prefix": list(self.prefix),
            "width": self.width,
            "bridge": self.bridge,
            "validity": self.validity.label,
        }


def parse(text: str) -> MorseWord:
    """Parse word text; raises :class:`InvalidCharacter` with a 1-based index."""
    return MorseWord(text)


def format_word(w: MorseWord) -> str:
    return w.text


def _as_word(w) -> MorseWord:
    return w if isinstance(w, MorseWord) else MorseWord(w)


def _classify(prefix: tuple[int, ...]) -> Validity:
    t = len(prefix)
    if t and prefix[-1] != 0:
        return Validity.FORMAL
    if any(p < 0 for p in prefix):
        return Validity.BALANCED
    if t >= 2 and all(p >= 2 for p in prefix[:-1]):
        return Validity.KNOT
    return Validity.NONNEGATIVE


def profile(w: MorseWord | str) -> WidthProfile:
    w = _as_word(w)
    t = len(w.text)
    # |width| <= t(t+1); reject before summing anything that could not be stored
    check_int64(t * (t + 1), "width bound")
    prefix = tuple(accumulate(2 if ch == "a" else -2 for ch in w.text))
    balanced = not prefix or prefix[-1] == 0
    return WidthProfile(
        word=w,
        prefix=prefix,
        width=sum(prefix),
        bridge=t // 2 if balanced else None,
        validity=_classify(prefix),
    )


def width(w: MorseWord | str) -> int:
    return profile(w).width


def bridge_number(w: MorseWord | str) -> int:
    w = _as_word(w)
    if w.text.count("a") != w.text.count("b"):
        raise NotBalanced(f"word {w.text!r} has unequal numbers of minima and maxima")
    return len(w.text) // 2

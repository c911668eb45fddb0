"""Braid-pattern satellites at the level of Morse words.

A braid pattern of winding number ``n`` follows its companion ``n`` times, so
every critical point of the companion word becomes ``n`` consecutive critical
points of the same kind.  For a balanced word this multiplies width by ``n**2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadWinding, NotBalanced
from .morse_word import Letter, MorseWord, Validity, check_int64, profile

__all__ = ["BoundTerm", "BoundReport", "blowup", "lower_bound", "theorem_gap"]


def _word(w) -> MorseWord:
    return w if isinstance(w, MorseWord) else MorseWord(w)


def _check_winding(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise BadWinding(f"winding number must be a positive integer, got {n!r}")
    return n


def _require_balanced(w: MorseWord, role: str = "word"):
    prof = profile(w)
    if prof.validity < Validity.BALANCED:
        raise NotBalanced(f"{role} {w.text!r} is not balanced (final prefix {prof.prefix[-1]})")
    return prof


def blowup(x: MorseWord | str, n: int) -> MorseWord:
    """Repeat each letter of ``x`` in place ``n`` times."""
    x = _word(x)
    _check_winding(n)
    size = n * len(x.text)
    check_int64(size * (size + 1), "blowup width bound")
    return MorseWord("".join(ch * n for ch in x.text))


@dataclass(frozen=True)
class BoundTerm:
    index: int
    kind: Letter
    omega: int
    contribution: int

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "kind": self.kind.name,
            "omega": self.omega,
            "contribution": self.contribution,
        }


@dataclass(frozen=True)
class BoundReport:
    """Per-critical-point accounting of the ``n**2 * width`` lower bound.

    ``omega`` is the strand count just above the critical point.  Minima are
    credited ``n**2 * omega + n(n-1)`` and maxima ``n**2 * omega - n(n-1)``;
    on a balanced word the correction terms cancel.  (Splitting the correction
    the other way round, maxima +, minima -, reproduces the per-block sums of
    ``blowup(loop_word, n)`` exactly; the total is the same either way.)
    """

    n: int
    loop_word: MorseWord
    terms: tuple[BoundTerm, ...]
    total: int
    identity_holds: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "loop_word": self.loop_word.text,
            "terms": [t.to_json() for t in self.terms],
            "total": self.total,
            "identity_holds": self.identity_holds,
        }


def lower_bound(loop_word: MorseWord | str, n: int) -> BoundReport:
    loop_word = _word(loop_word)
    _check_winding(n)
    prof = _require_balanced(loop_word, "loop word")
    sq = n * n
    corr = n * (n - 1)
    terms = []
    for idx, (ch, omega) in enumerate(zip(loop_word.text, prof.prefix), start=1):
        if ch == "a":
            terms.append(BoundTerm(idx, Letter.MIN, omega, sq * omega + corr))
        else:
            terms.append(BoundTerm(idx, Letter.MAX, omega, sq * omega - corr))
    total = check_int64(sum(t.contribution for t in terms), "bound total")
    return BoundReport(
        n=n,
        loop_word=loop_word,
        terms=tuple(terms),
        total=total,
        identity_holds=total == sq * prof.width,
    )


def theorem_gap(satellite_word: MorseWord | str, loop_word: MorseWord | str, n: int) -> int:
    """``width(satellite_word) - n**2 * width(loop_word)``.

    Only reported; nonnegativity is guaranteed only when the satellite word
    really comes from a satellite of the loop's knot type with winding ``n``.
    """
    satellite_word, loop_word = _word(satellite_word), _word(loop_word)
    _check_winding(n)
    sat = _require_balanced(satellite_word, "satellite word")
    loop = _require_balanced(loop_word, "loop word")
    return check_int64(sat.width - n * n * loop.width, "gap")

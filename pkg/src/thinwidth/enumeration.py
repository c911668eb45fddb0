"""Exhaustive enumeration of knot words and brute-force property suites.

The suites here are the oracle side: they recompute widths from scratch by
counting letters instead of trusting :func:`thinwidth.morse_word.profile`, and
they walk every instance in (length, lexicographic) order so the first
counterexample reported is the smallest one.
"""

from __future__ import annotations

import enum
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .errors import ExcludedSwap, LimitExceeded, MultipleLoops, NoLoop, NotNonnegative, UnknownSuite
from .gamma_graph import TubeSpec, find_unique_loop
from .morse_word import MorseWord, Validity, profile
from .satellite import blowup, lower_bound
from .word_ops import type1_delete, type1_drop, type2_swap

__all__ = [
    "DEFAULT_MAX_BRIDGE",
    "MAX_SUITE_LEN",
    "MAX_SUITE_N",
    "MAX_SUITE_VERTICES",
    "EnumerationResult",
    "Suite",
    "SuiteReport",
    "max_bridge",
    "iter_knot_words",
    "enumerate_knot_words",
    "naive_knot_words",
    "min_width_table",
    "reference_width",
    "all_words",
    "slab_graphs",
    "brute_force_cycles",
    "run_property_suite",
]

DEFAULT_MAX_BRIDGE = 14
MAX_SUITE_LEN = 16
MAX_SUITE_N = 10
MAX_SUITE_VERTICES = 8


def max_bridge() -> int:
    raw = os.environ.get("THINWIDTH_MAX_BRIDGE")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_BRIDGE
    try:
        value = int(raw)
    except ValueError:
        raise LimitExceeded(f"THINWIDTH_MAX_BRIDGE={raw!r} is not an integer") from None
    if value < 1:
        raise LimitExceeded(f"THINWIDTH_MAX_BRIDGE must be positive, got {value}")
    return value


def _check_bridge(b: int, limit: Optional[int]) -> int:
    limit = max_bridge() if limit is None else limit
    if isinstance(b, bool) or not isinstance(b, int) or not 1 <= b <= limit:
        raise LimitExceeded(f"bridge number must be in 1..{limit}, got {b!r}")
    return limit


def reference_width(text: str) -> int:
    """Width straight from the definition: strand counts above each critical point."""
    return sum(2 * text[:i].count("a") - 2 * text[:i].count("b") for i in range(1, len(text) + 1))


def _reference_prefix(text: str) -> list[int]:
    return [2 * text[:i].count("a") - 2 * text[:i].count("b") for i in range(1, len(text) + 1)]


# -- knot words -------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationResult:
    bridge: int
    words: tuple[MorseWord, ...]
    count: int
    min_width: int
    witnesses: tuple[MorseWord, ...]

    def to_json(self) -> dict:
        return {
            "bridge": self.bridge,
            "count": self.count,
            "min_width": self.min_width,
            "witnesses": [w.text for w in self.witnesses],
            "words": [w.text for w in self.words],
        }


def iter_knot_words(b: int, prefix: str = "") -> Iterator[str]:
    """Knot words with ``b`` minima, in lexicographic order, starting with ``prefix``.

    Backtracks over strand counts: interior levels stay at >= 2 strands and the
    count must still be able to fall back to 0 in the letters remaining.
    """
    t = 2 * b
    level = 0
    for k, ch in enumerate(prefix, start=1):
        level += 2 if ch == "a" else -2
        if (k < t and level < 2) or level < 0 or level > 2 * (t - k):
            return
    buf = list(prefix)

    def extend(pos: int, level: int) -> Iterator[str]:
        if pos == t:
            if level == 0:
                yield "".join(buf)
            return
        remaining = t - pos - 1
        for ch, step in (("a", 2), ("b", -2)):
            nxt = level + step
            if remaining and nxt < 2:
                continue
            if nxt < 0 or nxt > 2 * remaining:
                continue
            buf.append(ch)
            yield from extend(pos + 1, nxt)
            buf.pop()

    yield from extend(len(prefix), level)


def _enumerate_chunk(args: tuple[int, str]) -> list[str]:
    b, prefix = args
    return list(iter_knot_words(b, prefix))


def enumerate_knot_words(b: int, *, limit: Optional[int] = None, jobs: int = 1) -> EnumerationResult:
    _check_bridge(b, limit)
    if jobs > 1 and b > 3:
        # partition by the first few letters; lexicographic prefixes keep merge order
        depth = min(2 * b - 1, 6)
        prefixes = ["".join(p) for p in itertools.product("ab", repeat=depth)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(_enumerate_chunk, [(b, p) for p in prefixes])
            texts = [w for chunk in chunks for w in chunk]
    else:
        texts = list(iter_knot_words(b))
    words = tuple(MorseWord(s) for s in texts)
    widths = [profile(w).width for w in words]
    best = min(widths)
    return EnumerationResult(
        bridge=b,
        words=words,
        count=len(words),
        min_width=best,
        witnesses=tuple(w for w, wd in zip(words, widths) if wd == best),
    )


def naive_knot_words(b: int) -> list[str]:
    """Filter all ``2**(2b)`` letter sequences; oracle for the backtracking."""
    out = []
    for letters in itertools.product("ab", repeat=2 * b):
        s = "".join(letters)
        pre = _reference_prefix(s)
        if pre[-1] == 0 and all(p >= 2 for p in pre[:-1]):
            out.append(s)
    return out


def min_width_table(b_max: int, *, limit: Optional[int] = None, jobs: int = 1) -> list[tuple[int, int, int, str]]:
    """Rows ``(bridge, count, min_width, first witness)`` for bridge 1..b_max."""
    _check_bridge(b_max, limit)
    rows = []
    for b in range(1, b_max + 1):
        res = enumerate_knot_words(b, limit=limit, jobs=jobs)
        rows.append((b, res.count, res.min_width, res.witnesses[0].text))
    return rows


# -- property suites --------------------------------------------------------


class Suite(enum.Enum):
    LEMMA45 = "lemma45"
    BLOWUP = "blowup"
    BOUND = "bound"
    GRAPH = "graph"

    @classmethod
    def parse(cls, name) -> "Suite":
        if isinstance(name, Suite):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise UnknownSuite(
                f"unknown suite {name!r}; expected one of {[s.value for s in cls]}"
            ) from None


@dataclass(frozen=True)
class SuiteReport:
    suite: Suite
    passed: bool
    checked: int
    counterexample: Optional[str] = None
    limits: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "suite": self.suite.value,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
            "limits": dict(self.limits),
        }


def all_words(max_len: int, min_len: int = 0) -> Iterator[str]:
    """Every word over ``{a, b}`` in (length, lexicographic) order."""
    for t in range(min_len, max_len + 1):
        for letters in itertools.product("ab", repeat=t):
            yield "".join(letters)


def _check_lemma45(text: str, _n: int) -> tuple[int, Optional[str]]:
    w = MorseWord(text)
    base = reference_width(text)
    pre = _reference_prefix(text)
    nonneg = all(p >= 0 for p in pre)
    tier_nonneg = profile(w).validity >= Validity.NONNEGATIVE
    t = len(text)
    checked = 0
    for i in range(1, t + 1):
        if text[i - 1] != "a":
            continue
        for j in range(i + 1, t + 1):
            if text[j - 1] != "b":
                continue
            checked += 1
            raw = type1_delete(w, i, j, strict=False).text
            if base - reference_width(raw) != type1_drop(w, i, j):
                return checked, f"type1({i},{j}) on {text!r} drop {base - reference_width(raw)} != formula {type1_drop(w, i, j)}"
            if not nonneg:
                try:
                    type1_delete(w, i, j)
                except NotNonnegative:
                    continue
                return checked, f"type1({i},{j}) accepted {text!r}, which has a negative prefix"
            out = type1_delete(w, i, j).text
            after = reference_width(out)
            if out != raw:
                return checked, f"type1({i},{j}) on {text!r} gave {out!r}, expected {raw!r}"
            if after > base:
                return checked, f"type1({i},{j}) on {text!r} raises width {base} -> {after}"
            if any(p < 0 for p in _reference_prefix(out)):
                return checked, f"type1({i},{j}) on {text!r} loses nonnegativity"
            if tier_nonneg and profile(out).validity < Validity.NONNEGATIVE:
                return checked, f"type1({i},{j}) on {text!r} leaves the NONNEGATIVE tier"
    for i in range(1, t):
        checked += 1
        if text[i - 1 : i + 1] == "ba":
            try:
                type2_swap(w, i)
            except ExcludedSwap:
                continue
            return checked, f"type2({i}) on {text!r} accepted an excluded 'ba' exchange"
        out = type2_swap(w, i).text
        drop = base - reference_width(out)
        expected = 4 if text[i - 1 : i + 1] == "ab" else 0
        if drop != expected:
            return checked, f"type2({i}) on {text!r} drops {drop}, expected {expected}"
    return checked, None


def _is_balanced(text: str) -> bool:
    return text.count("a") == text.count("b")


def _check_blowup(text: str, max_n: int) -> tuple[int, Optional[str]]:
    if not _is_balanced(text):
        return 0, None
    base = reference_width(text)
    knot = profile(text).validity is Validity.KNOT
    checked = 0
    for n in range(1, max_n + 1):
        checked += 1
        big = blowup(text, n)
        if big.text != "".join(ch * n for ch in text):
            return checked, f"blowup({text!r}, {n}) is not the letter-block word"
        if reference_width(big.text) != n * n * base:
            return checked, f"blowup({text!r}, {n}) width {reference_width(big.text)} != {n}^2*{base}"
        if knot and profile(big).validity is not Validity.KNOT:
            return checked, f"blowup({text!r}, {n}) is not a knot word"
        if len(big) // 2 != n * (len(text) // 2):
            return checked, f"blowup({text!r}, {n}) bridge is not multiplied by {n}"
        for m in range(1, max_n + 1):
            if blowup(big, m) != blowup(text, n * m):
                return checked, f"blowup(blowup({text!r}, {n}), {m}) != blowup({text!r}, {n * m})"
    return checked, None


def _check_bound(text: str, max_n: int) -> tuple[int, Optional[str]]:
    if not _is_balanced(text):
        return 0, None
    base = reference_width(text)
    checked = 0
    for n in range(1, max_n + 1):
        checked += 1
        rep = lower_bound(text, n)
        if not rep.identity_holds or rep.total != n * n * base:
            return checked, f"lower_bound({text!r}, {n}) total {rep.total} != {n}^2*{base}"
        if rep.total != reference_width("".join(ch * n for ch in text)):
            return checked, f"lower_bound({text!r}, {n}) total differs from the blown-up width"
    return checked, None


_WORD_CHECKS: dict[Suite, Callable[[str, int], tuple[int, Optional[str]]]] = {
    Suite.LEMMA45: _check_lemma45,
    Suite.BLOWUP: _check_blowup,
    Suite.BOUND: _check_bound,
}


def _run_word_chunk(args: tuple[str, list[str], int]) -> tuple[int, Optional[tuple[int, str, str]]]:
    suite, words, max_n = args
    check = _WORD_CHECKS[Suite(suite)]
    total = 0
    for w in words:
        checked, failure = check(w, max_n)
        total += checked
        if failure is not None:
            return total, (len(w), w, failure)
    return total, None


# -- slab graphs ------------------------------------------------------------


def _compositions(total: int) -> Iterator[tuple[int, ...]]:
    for cuts in itertools.product((False, True), repeat=total - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def _connected(vertices: list[str], edges: Iterable[tuple[str, str]]) -> bool:
    adj = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        u = stack.pop()
        for v in adj[u] - seen:
            seen.add(v)
            stack.append(v)
    return len(seen) == len(vertices)


def slab_graphs(max_vertices: int) -> Iterator[TubeSpec]:
    """Every connected slab graph on up to ``max_vertices`` vertices.

    Vertices inside a slab are labelled in order (``s0v0``, ``s0v1``, ...);
    slabs occupied are ``0..k-1`` (connectivity forces them contiguous), and
    every subset of the adjacent-slab vertex pairs is tried as the edge set.
    """
    for nv in range(1, max_vertices + 1):
        for sizes in _compositions(nv):
            names = [[f"s{s}v{k}" for k in range(size)] for s, size in enumerate(sizes)]
            slabs = {v: s for s, group in enumerate(names) for v in group}
            vertices = list(slabs)
            candidates = [
                (u, v)
                for s in range(len(sizes) - 1)
                for u in names[s]
                for v in names[s + 1]
            ]
            crit = tuple(float(c) for c in range(1, len(sizes)))
            for mask in range(1 << len(candidates)):
                edges = tuple(e for bit, e in enumerate(candidates) if mask >> bit & 1)
                if len(edges) < nv - 1 or not _connected(vertices, edges):
                    continue
                yield TubeSpec(crit, dict(slabs), edges)


def brute_force_cycles(spec: TubeSpec) -> list[frozenset]:
    """All simple cycles, as edge sets, by extending every simple path."""
    adj = {v: set() for v in spec.slabs}
    for u, v in spec.edges:
        adj[u].add(v)
        adj[v].add(u)
    order = sorted(spec.slabs)
    found = set()

    def walk(start: str, path: list[str]):
        last = path[-1]
        for nxt in adj[last]:
            if nxt == start and len(path) >= 3:
                found.add(frozenset(frozenset(p) for p in zip(path, path[1:] + [start])))
            elif nxt not in path and nxt > start:
                path.append(nxt)
                walk(start, path)
                path.pop()

    for v in order:
        walk(v, [v])
    return sorted(found, key=lambda c: sorted(tuple(sorted(e)) for e in c))


def _check_graph(spec: TubeSpec) -> Optional[str]:
    cycles = brute_force_cycles(spec)
    rank = len(spec.edges) - len(spec.slabs) + 1
    try:
        analysis = find_unique_loop(spec)
    except NoLoop:
        if rank != 0 or cycles:
            return f"NO_LOOP raised but rank={rank}, cycles={len(cycles)}"
        return None
    except MultipleLoops:
        if rank < 2 or len(cycles) < 2:
            return f"MULTIPLE_LOOPS raised but rank={rank}, cycles={len(cycles)}"
        return None
    if rank != 1 or len(cycles) != 1:
        return f"loop returned but rank={rank}, cycles={len(cycles)}"
    loop = analysis.loop
    got = frozenset(frozenset(p) for p in zip(loop, loop[1:] + loop[:1]))
    if got != cycles[0]:
        return f"loop {loop} differs from brute-force cycle"
    if analysis.loop_word.text.count("a") != analysis.loop_word.text.count("b"):
        return f"loop word {analysis.loop_word.text!r} is not balanced"
    return None


def _describe(spec: TubeSpec) -> str:
    verts = ",".join(f"{v}@{s}" for v, s in spec.slabs.items())
    edges = ",".join(f"{u}-{v}" for u, v in spec.edges)
    return f"{{{verts}; {edges}}}"


def _run_graph_suite(max_vertices: int) -> SuiteReport:
    import warnings

    from .gamma_graph import SnapTieWarning

    checked = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SnapTieWarning)
        for spec in slab_graphs(max_vertices):
            checked += 1
            failure = _check_graph(spec)
            if failure is not None:
                return SuiteReport(
                    Suite.GRAPH, False, checked, f"{_describe(spec)}: {failure}",
                    {"max_vertices": max_vertices},
                )
    return SuiteReport(Suite.GRAPH, True, checked, None, {"max_vertices": max_vertices})


def run_property_suite(
    suite,
    *,
    max_len: int = 8,
    max_n: int = 3,
    max_vertices: int = 7,
    jobs: int = 1,
) -> SuiteReport:
    """Exhaustively check one invariant family; report the smallest counterexample."""
    suite = Suite.parse(suite)
    if not 0 <= max_len <= MAX_SUITE_LEN:
        raise LimitExceeded(f"max_len must be in 0..{MAX_SUITE_LEN}, got {max_len}")
    if not 1 <= max_n <= MAX_SUITE_N:
        raise LimitExceeded(f"max_n must be in 1..{MAX_SUITE_N}, got {max_n}")
    if not 1 <= max_vertices <= MAX_SUITE_VERTICES:
        raise LimitExceeded(f"max_vertices must be in 1..{MAX_SUITE_VERTICES}, got {max_vertices}")
    if suite is Suite.GRAPH:
        return _run_graph_suite(max_vertices)

    limits = {"max_len": max_len} if suite is Suite.LEMMA45 else {"max_len": max_len, "max_n": max_n}
    words = list(all_words(max_len))
    if jobs > 1 and len(words) > 1:
        size = -(-len(words) // (jobs * 4))
        chunks = [(suite.value, words[k : k + size], max_n) for k in range(0, len(words), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_word_chunk, chunks))
    else:
        results = [_run_word_chunk((suite.value, words, max_n))]
    failures = [f for _, f in results if f is not None]
    if failures:
        # chunks are contiguous in (length, lex) order; the first failing chunk holds the minimum
        _, _, message = min(failures)
        checked = 0
        for c, f in results:
            checked += c
            if f is not None:
                break
        return SuiteReport(suite, False, checked, message, limits)
    return SuiteReport(suite, True, sum(c for c, _ in results), None, limits)

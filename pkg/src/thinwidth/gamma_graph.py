"""Leveled graphs of a solid torus and their unique loop.

Cutting a solid torus along the level sets through the critical values of its
boundary leaves pieces, each living in a single slab between consecutive
critical values.  Pieces are vertices; two pieces sharing a critical level
component are joined by an edge, so edges only ever join adjacent slabs.  For
a knotted torus this graph has exactly one cycle, whose local extrema give a
Morse word for the core.

The graph is taken as input here (:class:`TubeSpec`); nothing is derived from
an actual embedding.
"""

from __future__ import annotations

import enum
import json
import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import (
    Disconnected,
    DuplicateId,
    MultipleLoops,
    NoLoop,
    NonAdjacentEdge,
    NotACycle,
    ParseError,
)
from .morse_word import MorseWord

__all__ = [
    "VertexClass",
    "TubeSpec",
    "LoopAnalysis",
    "SnapTieWarning",
    "load_spec",
    "cycle_rank",
    "find_unique_loop",
    "classify",
    "loop_word",
]


class SnapTieWarning(UserWarning):
    """Two loop extrema snapped to the same critical value."""


class VertexClass(enum.Enum):
    MINIMAL = "minimal"
    MAXIMAL = "maximal"
    VERTICAL = "vertical"
    IRRELEVANT = "irrelevant"


@dataclass(frozen=True)
class TubeSpec:
    critical_values: tuple[float, ...]
    slabs: Mapping[str, int]
    edges: tuple[tuple[str, str], ...]
    adjacency: Mapping[str, tuple[str, ...]] = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        if self.adjacency is None:
            adj: dict[str, list[str]] = {v: [] for v in self.slabs}
            for u, v in self.edges:
                adj[u].append(v)
                adj[v].append(u)
            object.__setattr__(self, "adjacency", {v: tuple(sorted(n)) for v, n in adj.items()})

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(self.slabs)

    def without(self, drop) -> "TubeSpec":
        """Sub-spec with the vertices in ``drop`` (and their edges) removed."""
        drop = set(drop)
        return TubeSpec(
            self.critical_values,
            {v: s for v, s in self.slabs.items() if v not in drop},
            tuple(e for e in self.edges if e[0] not in drop and e[1] not in drop),
        )

    def to_json(self) -> dict:
        return {
            "critical_values": list(self.critical_values),
            "vertices": [{"id": v, "slab": s} for v, s in self.slabs.items()],
            "edges": [list(e) for e in self.edges],
        }


@dataclass(frozen=True)
class LoopAnalysis:
    spec: TubeSpec
    loop: tuple[str, ...]
    classification: Mapping[str, VertexClass]
    loop_word: MorseWord
    cycle_rank: int
    warnings: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "loop": list(self.loop),
            "classification": {v: c.value for v, c in self.classification.items()},
            "loop_word": self.loop_word.text,
            "cycle_rank": self.cycle_rank,
            "warnings": list(self.warnings),
        }


def _components(vertices, adjacency) -> int:
    seen: set = set()
    count = 0
    for root in vertices:
        if root in seen:
            continue
        count += 1
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return count


def load_spec(document) -> TubeSpec:
    """Validate a tube document (JSON text, bytes, or an already-decoded mapping)."""
    if isinstance(document, (str, bytes, bytearray)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(document, Mapping):
        raise ParseError("tube spec must be a JSON object")
    missing = {"critical_values", "vertices", "edges"} - set(document)
    if missing:
        raise ParseError(f"tube spec is missing {sorted(missing)}")

    crit = document["critical_values"]
    if not isinstance(crit, list) or any(
        isinstance(c, bool) or not isinstance(c, (int, float)) for c in crit
    ):
        raise ParseError("critical_values must be a list of numbers")
    if any(a >= b for a, b in zip(crit, crit[1:])):
        raise ParseError("critical_values must be strictly increasing")
    top = len(crit)

    raw_vertices = document["vertices"]
    if not isinstance(raw_vertices, list):
        raise ParseError("vertices must be a list")
    slabs: dict[str, int] = {}
    for item in raw_vertices:
        if not isinstance(item, Mapping) or not isinstance(item.get("id"), str):
            raise ParseError(f"vertex {item!r} needs a string 'id'")
        slab = item.get("slab")
        if isinstance(slab, bool) or not isinstance(slab, int):
            raise ParseError(f"vertex {item['id']!r} needs an integer 'slab'")
        if not 0 <= slab <= top:
            raise ParseError(f"vertex {item['id']!r} slab {slab} outside 0..{top}")
        if item["id"] in slabs:
            raise DuplicateId(f"vertex id {item['id']!r} appears more than once")
        slabs[item["id"]] = slab
    if not slabs:
        raise ParseError("tube spec has no vertices")

    raw_edges = document["edges"]
    if not isinstance(raw_edges, list):
        raise ParseError("edges must be a list")
    edges = []
    seen_edges = set()
    for pair in raw_edges:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ParseError(f"edge {pair!r} is not a pair of ids")
        u, v = pair
        for x in (u, v):
            if x not in slabs:
                raise ParseError(f"edge {pair!r} names unknown vertex {x!r}")
        if abs(slabs[u] - slabs[v]) != 1:
            raise NonAdjacentEdge(u, v, f"edge {u}-{v} joins slabs {slabs[u]} and {slabs[v]}")
        key = frozenset((u, v))
        if key in seen_edges:
            raise ParseError(f"edge {u}-{v} listed twice")
        seen_edges.add(key)
        edges.append((u, v))

    spec = TubeSpec(tuple(crit), slabs, tuple(edges))
    if _components(spec.vertices, spec.adjacency) != 1:
        raise Disconnected("tube graph is not connected")
    return spec


def cycle_rank(spec: TubeSpec) -> int:
    """First Betti number ``E - V + components``."""
    return len(spec.edges) - len(spec.slabs) + _components(spec.vertices, spec.adjacency)


def _core_cycle(spec: TubeSpec) -> set[str]:
    """Vertices left after repeatedly stripping leaves."""
    degree = {v: len(n) for v, n in spec.adjacency.items()}
    alive = set(spec.slabs)
    leaves = deque(v for v, d in degree.items() if d <= 1)
    while leaves:
        u = leaves.popleft()
        if u not in alive:
            continue
        alive.discard(u)
        for v in spec.adjacency[u]:
            if v in alive:
                degree[v] -= 1
                if degree[v] == 1:
                    leaves.append(v)
    return alive


def _orient(spec: TubeSpec, members: set[str]) -> tuple[str, ...]:
    start = min(members, key=lambda v: (spec.slabs[v], v))
    nbrs = sorted(v for v in spec.adjacency[start] if v in members)
    order = [start]
    prev, cur = start, nbrs[0]
    while cur != start:
        order.append(cur)
        nxt = [v for v in spec.adjacency[cur] if v in members and v != prev]
        prev, cur = cur, nxt[0]
    return tuple(order)


def _check_cycle(spec: TubeSpec, loop: Sequence[str]) -> None:
    if len(loop) < 3 or len(set(loop)) != len(loop):
        raise NotACycle(f"{list(loop)!r} is not a simple cycle of length >= 3")
    for k, u in enumerate(loop):
        v = loop[(k + 1) % len(loop)]
        if u not in spec.adjacency or v not in spec.adjacency[u]:
            raise NotACycle(f"{u}-{v} is not an edge of the tube graph")


def _extremum(spec: TubeSpec, loop: Sequence[str], k: int) -> VertexClass:
    s = spec.slabs[loop[k]]
    before = spec.slabs[loop[k - 1]]
    after = spec.slabs[loop[(k + 1) % len(loop)]]
    # adjacent slabs differ by exactly one, so extrema are always strict
    if before > s and after > s:
        return VertexClass.MINIMAL
    if before < s and after < s:
        return VertexClass.MAXIMAL
    return VertexClass.VERTICAL


def classify(spec: TubeSpec, loop: Sequence[str]) -> dict[str, VertexClass]:
    _check_cycle(spec, loop)
    labels = {v: VertexClass.IRRELEVANT for v in spec.slabs}
    for k, v in enumerate(loop):
        labels[v] = _extremum(spec, loop, k)
    return labels


def _snapped_word(spec: TubeSpec, loop: Sequence[str]) -> tuple[MorseWord, list[str]]:
    """Order loop extrema by the critical value each one is pushed onto.

    A minimum in slab ``s`` rises to the critical value bounding the slab from
    above (index ``s``, 0-based into ``critical_values``); a maximum sinks to
    the one bounding it from below (index ``s - 1``).
    """
    extrema = []
    for k, v in enumerate(loop):
        kind = _extremum(spec, loop, k)
        if kind is VertexClass.MINIMAL:
            extrema.append((spec.slabs[v], v, "a"))
        elif kind is VertexClass.MAXIMAL:
            extrema.append((spec.slabs[v] - 1, v, "b"))
    extrema.sort()
    notes = []
    for (c1, v1, _), (c2, v2, _) in zip(extrema, extrema[1:]):
        if c1 == c2:
            value = spec.critical_values[c1] if 0 <= c1 < len(spec.critical_values) else c1
            notes.append(
                f"extrema {v1} and {v2} both snap to critical value {value}; ordered by id"
            )
    return MorseWord("".join(ch for _, _, ch in extrema)), notes


def loop_word(analysis: LoopAnalysis) -> MorseWord:
    word, _ = _snapped_word(analysis.spec, analysis.loop)
    return word


def find_unique_loop(spec: TubeSpec) -> LoopAnalysis:
    rank = cycle_rank(spec)
    if rank == 0:
        raise NoLoop("tube graph is a tree; it cannot come from a knotted solid torus")
    if rank >= 2:
        raise MultipleLoops(f"tube graph has cycle rank {rank}; expected exactly one loop")
    loop = _orient(spec, _core_cycle(spec))
    word, notes = _snapped_word(spec, loop)
    for note in notes:
        warnings.warn(note, SnapTieWarning, stacklevel=2)
    return LoopAnalysis(
        spec=spec,
        loop=loop,
        classification=classify(spec, loop),
        loop_word=word,
        cycle_rank=rank,
        warnings=tuple(notes),
    )

import json
import warnings

import pytest

from thinwidth.enumeration import brute_force_cycles, slab_graphs
from thinwidth.errors import (
    Disconnected,
    DuplicateId,
    MultipleLoops,
    NoLoop,
    NonAdjacentEdge,
    NotACycle,
    ParseError,
)
from thinwidth.gamma_graph import (
    SnapTieWarning,
    VertexClass,
    classify,
    cycle_rank,
    find_unique_loop,
    load_spec,
    loop_word,
)
from thinwidth.morse_word import Validity, profile

MIN, MAX, VERT, IRR = (
    VertexClass.MINIMAL,
    VertexClass.MAXIMAL,
    VertexClass.VERTICAL,
    VertexClass.IRRELEVANT,
)


def doc(slabs, edges, crit=None):
    top = max(slabs.values())
    return {
        "critical_values": crit if crit is not None else [float(c) for c in range(1, top + 1)],
        "vertices": [{"id": v, "slab": s} for v, s in slabs.items()],
        "edges": [list(e) for e in edges],
    }


DIAMOND = doc({"A": 0, "B": 1, "C": 1, "D": 2}, [("A", "B"), ("A", "C"), ("B", "D"), ("C", "D")])


def cycle_doc(slab_sequence, crit=None):
    names = [f"v{k}" for k in range(len(slab_sequence))]
    edges = [(names[k], names[(k + 1) % len(names)]) for k in range(len(names))]
    return doc(dict(zip(names, slab_sequence)), edges, crit)


class TestLoadSpec:
    def test_diamond(self):
        spec = load_spec(DIAMOND)
        assert spec.vertices == ("A", "B", "C", "D")
        assert spec.critical_values == (1.0, 2.0)
        assert spec.adjacency["A"] == ("B", "C")

    def test_accepts_json_text(self):
        assert load_spec(json.dumps(DIAMOND)) == load_spec(DIAMOND)

    def test_non_adjacent_edge(self):
        bad = doc({"A": 0, "B": 1, "C": 1, "D": 2}, [("A", "B"), ("A", "C"), ("B", "D"), ("C", "D"), ("A", "D")])
        with pytest.raises(NonAdjacentEdge) as excinfo:
            load_spec(bad)
        assert excinfo.value.pair == ("A", "D")

    def test_same_slab_edge_is_non_adjacent(self):
        bad = doc({"A": 0, "B": 1, "C": 1, "D": 2, "E": 1},
                  [("A", "B"), ("A", "C"), ("B", "D"), ("C", "D"), ("E", "B")])
        with pytest.raises(NonAdjacentEdge):
            load_spec(bad)

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            load_spec(doc({"A": 0, "B": 1, "C": 0, "D": 1}, [("A", "B"), ("C", "D")]))

    def test_duplicate_id(self):
        d = doc({"A": 0, "B": 1}, [("A", "B")])
        d["vertices"].append({"id": "A", "slab": 0})
        with pytest.raises(DuplicateId):
            load_spec(d)

    @pytest.mark.parametrize(
        "mutate",
        [
            lambda d: d.pop("edges"),
            lambda d: d.__setitem__("critical_values", [2.0, 1.0]),
            lambda d: d.__setitem__("critical_values", "x"),
            lambda d: d["vertices"].append({"id": "Z", "slab": 7}),
            lambda d: d["vertices"].append({"id": "Z", "slab": 1.5}),
            lambda d: d["vertices"].append({"id": 3, "slab": 1}),
            lambda d: d["edges"].append(["A", "Q"]),
            lambda d: d["edges"].append(["A", "B"]),
            lambda d: d["edges"].append(["A"]),
            lambda d: d.__setitem__("vertices", []),
        ],
    )
    def test_parse_errors(self, mutate):
        d = json.loads(json.dumps(DIAMOND))
        mutate(d)
        with pytest.raises(ParseError):
            load_spec(d)

    def test_bad_json(self):
        with pytest.raises(ParseError):
            load_spec("{not json")
        with pytest.raises(ParseError):
            load_spec("[1, 2]")

    def test_to_json_roundtrip(self):
        spec = load_spec(DIAMOND)
        assert load_spec(spec.to_json()) == spec


class TestFindUniqueLoop:
    def test_diamond(self):
        analysis = find_unique_loop(load_spec(DIAMOND))
        assert analysis.loop == ("A", "B", "D", "C")
        assert analysis.classification == {"A": MIN, "B": VERT, "C": VERT, "D": MAX}
        assert analysis.loop_word.text == "ab"
        assert analysis.cycle_rank == 1
        assert analysis.warnings == ()

    def test_tree(self):
        spec = load_spec(doc({"A": 0, "B": 1, "C": 2}, [("A", "B"), ("B", "C")]))
        assert cycle_rank(spec) == 0
        with pytest.raises(NoLoop):
            find_unique_loop(spec)

    def test_two_loops(self):
        d = doc({"A": 0, "B": 1, "C": 1, "D": 2, "E": 2},
                [("A", "B"), ("A", "C"), ("B", "D"), ("C", "D"), ("B", "E"), ("C", "E")])
        spec = load_spec(d)
        assert cycle_rank(spec) == 2
        with pytest.raises(MultipleLoops):
            find_unique_loop(spec)

    def test_pendant_vertex_is_irrelevant(self):
        d = doc({"A": 0, "B": 1, "C": 1, "D": 2, "E": 2},
                [("A", "B"), ("A", "C"), ("B", "D"), ("C", "D"), ("B", "E")])
        analysis = find_unique_loop(load_spec(d))
        assert analysis.classification == {"A": MIN, "B": VERT, "C": VERT, "D": MAX, "E": IRR}
        assert analysis.loop == ("A", "B", "D", "C")

    def test_canonical_orientation(self):
        # lowest slab first, ties by id, then toward the smaller-id neighbour
        d = doc({"q": 0, "p": 0, "x": 1, "y": 1},
                [("q", "y"), ("q", "x"), ("p", "x"), ("p", "y")])
        with pytest.warns(SnapTieWarning):
            analysis = find_unique_loop(load_spec(d))
        assert analysis.loop == ("p", "x", "q", "y")

    def test_double_wave_snaps_to_aabb(self):
        spec = load_spec(cycle_doc([0, 1, 2, 1, 0, 1, 2, 1]))
        with pytest.warns(SnapTieWarning):
            analysis = find_unique_loop(spec)
        assert analysis.loop_word.text == "aabb"
        assert analysis.loop_word.text == "".join(sorted("abab"))
        assert len(analysis.warnings) == 2
        counts = [c for c in analysis.classification.values()]
        assert counts.count(MIN) == 2 and counts.count(MAX) == 2

    def test_low_maximum_snaps_between_minima(self):
        # extrema: v0 min@0 -> c1, v1 max@1 -> c1, v2 min@0 -> c1, v5 max@3 -> c3
        spec = load_spec(cycle_doc([0, 1, 0, 1, 2, 3, 2, 1]))
        with pytest.warns(SnapTieWarning):
            analysis = find_unique_loop(spec)
        assert analysis.loop_word.text == "abab"
        assert profile(analysis.loop_word).validity >= Validity.BALANCED

    def test_distinct_slabs_follow_slab_order(self):
        # a single min and max never tie
        spec = load_spec(cycle_doc([0, 1, 2, 3, 2, 1]))
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            analysis = find_unique_loop(spec)
        assert analysis.loop_word.text == "ab"
        assert loop_word(analysis) == analysis.loop_word

    def test_critical_values_order_the_snap(self):
        # min v5@0 -> c1, min v0@1 -> c2, max v7@2 -> c2, max v2@3 -> c3
        spec = load_spec(cycle_doc([1, 2, 3, 2, 1, 0, 1, 2], crit=[-5.0, 0.5, 10.0]))
        with pytest.warns(SnapTieWarning, match="0.5"):
            analysis = find_unique_loop(spec)
        kinds = {v: c for v, c in analysis.classification.items() if c in (MIN, MAX)}
        assert kinds == {"v0": MIN, "v2": MAX, "v5": MIN, "v7": MAX}
        assert analysis.loop_word.text == "aabb"
        assert analysis.loop[0] == "v5"

    def test_json(self):
        out = find_unique_loop(load_spec(DIAMOND)).to_json()
        assert out == {
            "loop": ["A", "B", "D", "C"],
            "classification": {"A": "minimal", "B": "vertical", "C": "vertical", "D": "maximal"},
            "loop_word": "ab",
            "cycle_rank": 1,
            "warnings": [],
        }


class TestClassify:
    def test_diamond(self):
        spec = load_spec(DIAMOND)
        assert classify(spec, ["A", "B", "D", "C"]) == {"A": MIN, "B": VERT, "C": VERT, "D": MAX}

    def test_orientation_does_not_matter(self):
        spec = load_spec(DIAMOND)
        assert classify(spec, ["D", "C", "A", "B"]) == classify(spec, ["A", "B", "D", "C"])

    @pytest.mark.parametrize("loop", [["A", "B"], ["A", "B", "A", "C"], ["A", "B", "C", "D"], ["A", "Z", "D", "C"], []])
    def test_not_a_cycle(self, loop):
        with pytest.raises(NotACycle):
            classify(load_spec(DIAMOND), loop)


@pytest.fixture(scope="module")
def unicyclic():
    out = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SnapTieWarning)
        for spec in slab_graphs(6):
            if cycle_rank(spec) == 1:
                out.append((spec, find_unique_loop(spec)))
    return out


class TestInvariantsOverGeneratedGraphs:
    def test_there_are_cases(self, unicyclic):
        assert len(unicyclic) > 100

    def test_partition_and_balance(self, unicyclic):
        for spec, analysis in unicyclic:
            labels = analysis.classification
            assert set(labels) == set(spec.slabs)
            on_loop = {v for v, c in labels.items() if c is not IRR}
            assert on_loop == set(analysis.loop)
            values = list(labels.values())
            assert values.count(MIN) == values.count(MAX) >= 1
            assert profile(analysis.loop_word).validity >= Validity.BALANCED

    def test_matches_brute_force(self, unicyclic):
        for spec, analysis in unicyclic:
            (cycle,) = brute_force_cycles(spec)
            loop = analysis.loop
            assert cycle == frozenset(frozenset(p) for p in zip(loop, loop[1:] + loop[:1]))

    def test_dropping_irrelevant_vertices_changes_nothing(self, unicyclic):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", SnapTieWarning)
            for spec, analysis in unicyclic:
                irrelevant = [v for v, c in analysis.classification.items() if c is IRR]
                again = find_unique_loop(spec.without(irrelevant))
                assert again.loop == analysis.loop
                assert again.loop_word == analysis.loop_word

    def test_extrema_neighbours_are_on_the_loop(self, unicyclic):
        for spec, analysis in unicyclic:
            loop = analysis.loop
            if len(loop) < 4:
                continue
            for k, v in enumerate(loop):
                if analysis.classification[v] in (MIN, MAX):
                    for u in (loop[k - 1], loop[(k + 1) % len(loop)]):
                        assert analysis.classification[u] is not IRR

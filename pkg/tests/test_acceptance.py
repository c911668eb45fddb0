"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary under "acceptance criteria".  All checks are exact integer
equalities; timings are the stated budgets."""

import random
import time
import warnings

import pytest

from thinwidth.enumeration import brute_force_cycles, enumerate_knot_words, slab_graphs
from thinwidth.errors import MultipleLoops, NoLoop, NotNonnegative
from thinwidth.gamma_graph import SnapTieWarning, find_unique_loop
from thinwidth.morse_word import bridge_number, profile, width
from thinwidth.satellite import blowup, lower_bound
from thinwidth.word_ops import apply_sequence, legal_steps, type1_delete, type2_swap

from oracles import catalan, is_knot_word, prefix_width, prefixes, words_up_to


def test_criterion_1_trefoil_anchor(criterion):
    rec = criterion(1, "trefoil width('aabb') = 8, bridge 2")
    start = time.perf_counter()
    ok = width("aabb") == 8 and bridge_number("aabb") == 2
    elapsed = time.perf_counter() - start
    assert rec.check(ok and elapsed < 0.01, f"width={width('aabb')} bridge={bridge_number('aabb')}")


def test_criterion_2_blowup_equality(criterion):
    rec = criterion(2, "width(blowup(x, n)) = n^2 width(x), KNOT words len <= 12, n <= 5")
    start = time.perf_counter()
    bad, count = [], 0
    for x in words_up_to(12):
        if not is_knot_word(x):
            continue
        base = prefix_width(x)
        for n in range(1, 6):
            count += 1
            if prefix_width(blowup(x, n).text) != n * n * base:
                bad.append((x, n))
    elapsed = time.perf_counter() - start
    assert rec.check(not bad and elapsed < 10, f"{count} instances, {len(bad)} failures, {elapsed:.1f}s")


def test_criterion_3_lemma45_exhaustive(criterion):
    rec = criterion(3, "type-1 monotone + keeps nonnegativity; type-2 drop in {0, 4}; formal words len <= 12")
    start = time.perf_counter()
    width_up, nonneg_lost, type2_bad, legal = [], [], [], 0
    for text in words_up_to(12):
        pre = prefixes(text)
        base = sum(pre)
        nonneg = all(p >= 0 for p in pre)
        for i in range(1, len(text) + 1):
            if text[i - 1] != "a":
                continue
            for j in range(i + 1, len(text) + 1):
                if text[j - 1] != "b":
                    continue
                try:
                    out = type1_delete(text, i, j).text
                except NotNonnegative:
                    continue
                legal += 1
                if prefix_width(out) > base:
                    width_up.append((text, i, j))
                if nonneg and any(p < 0 for p in prefixes(out)):
                    nonneg_lost.append((text, i, j))
        for i in range(1, len(text)):
            if text[i - 1 : i + 1] == "ba":
                continue
            if base - prefix_width(type2_swap(text, i).text) not in (0, 4):
                type2_bad.append((text, i))
    elapsed = time.perf_counter() - start
    first = min(nonneg_lost, key=lambda c: (len(c[0]), c)) if nonneg_lost else None
    detail = (
        f"{legal} legal type-1 steps: width increases={len(width_up)}, "
        f"nonnegativity lost={len(nonneg_lost)} (first {first}); "
        f"type-2 bad drops={len(type2_bad)}; {elapsed:.1f}s"
    )
    ok = not width_up and not nonneg_lost and not type2_bad and elapsed < 60
    assert rec.check(ok, detail), detail


def test_criterion_4_bound_identity(criterion):
    rec = criterion(4, "lower_bound total = n^2 width = width(blowup), BALANCED len <= 12, n <= 5")
    start = time.perf_counter()
    bad, count = [], 0
    for x in words_up_to(12):
        if x.count("a") != x.count("b"):
            continue
        base = prefix_width(x)
        for n in range(1, 6):
            count += 1
            rep = lower_bound(x, n)
            if not (rep.total == n * n * base == prefix_width(blowup(x, n).text) and rep.identity_holds):
                bad.append((x, n))
    elapsed = time.perf_counter() - start
    assert rec.check(not bad and elapsed < 10, f"{count} instances, {len(bad)} failures, {elapsed:.1f}s")


def test_criterion_5_unique_loop_oracle(criterion):
    rec = criterion(5, "find_unique_loop succeeds iff E-V+1 = 1 and matches brute force, <= 7 vertices")
    start = time.perf_counter()
    bad, graphs, unicyclic = [], 0, 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SnapTieWarning)
        for spec in slab_graphs(7):
            graphs += 1
            rank = len(spec.edges) - len(spec.slabs) + 1
            cycles = brute_force_cycles(spec)
            try:
                analysis = find_unique_loop(spec)
            except (NoLoop, MultipleLoops):
                if rank == 1 or (rank == 0) != (len(cycles) == 0):
                    bad.append(spec)
                continue
            unicyclic += 1
            loop = analysis.loop
            edges = frozenset(frozenset(p) for p in zip(loop, loop[1:] + loop[:1]))
            if rank != 1 or cycles != [edges]:
                bad.append(spec)
    elapsed = time.perf_counter() - start
    detail = f"{graphs} graphs, {unicyclic} unicyclic, {len(bad)} mismatches, {elapsed:.1f}s"
    assert rec.check(not bad and elapsed < 30, detail)


def test_criterion_6_enumeration_table(criterion):
    rec = criterion(6, "knot-word counts b = 1..8 equal naive filter (Catalan C_{b-1}); min widths 8, 14")
    start = time.perf_counter()
    counts, naive_counts, mins = [], [], {}
    for b in range(1, 9):
        res = enumerate_knot_words(b)
        naive = [w for w in words_up_to(2 * b) if len(w) == 2 * b and is_knot_word(w)]
        counts.append(res.count)
        naive_counts.append(len(naive))
        assert [w.text for w in res.words] == naive
        mins[b] = res.min_width
    elapsed = time.perf_counter() - start
    ok = (
        counts == naive_counts == [catalan(b - 1) for b in range(1, 9)] == [1, 1, 2, 5, 14, 42, 132, 429]
        and mins[2] == 8
        and mins[3] == 14
        and elapsed < 60
    )
    assert rec.check(ok, f"counts={counts} min_width(2)={mins[2]} min_width(3)={mins[3]} {elapsed:.1f}s")


def test_criterion_7_monotone_chains(criterion):
    rec = criterion(7, "10^4 random legal sequences on random words len <= 16 give non-increasing traces")
    rng = random.Random(7)
    start = time.perf_counter()
    bad, steps_total = [], 0
    for _ in range(10_000):
        text = "".join(rng.choice("ab") for _ in range(rng.randint(0, 16)))
        current, steps = profile(text).word, []
        for _ in range(rng.randint(1, 12)):
            options = legal_steps(current)
            if not options:
                break
            step = rng.choice(options)
            steps.append(step)
            current = step.apply(current)
        _, trace = apply_sequence(text, steps)
        steps_total += len(steps)
        widths = [prefix_width(text)] + trace
        if any(a < b for a, b in zip(widths, widths[1:])):
            bad.append((text, steps))
    elapsed = time.perf_counter() - start
    assert rec.check(not bad and elapsed < 30, f"{steps_total} steps, {len(bad)} increasing traces, {elapsed:.1f}s")


def test_criterion_8_general_satellites_not_reproducible(criterion):
    criterion(8, "w(K) >= n^2 w(J) for arbitrary satellites").not_applicable(
        "needs every embedding of a knot type; word-level content is covered by 2-4"
    )
    pytest.skip("no model of all embeddings of a knot type; criteria 2-4 cover the word-level content")

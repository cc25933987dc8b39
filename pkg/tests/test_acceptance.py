"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that pytest prints in an
"acceptance criteria" section at the end of the run.
"""

import random
import time

from nielsen_schreier import (
    Alphabet,
    Graph,
    InfiniteIndex,
    coverings_isomorphic,
    enumerate_reduced,
    euler_rank,
    eval_basis,
    fold_words,
    is_member,
    random_covering,
    random_word,
    reduce,
    rewrite_in_basis,
    spanning_tree,
    subgroup_basis,
)
from nielsen_schreier.counterexample import (
    AB,
    EXPLICIT_BASIS,
    equivariance_violated,
    fixed_words,
    preserves_subgroup,
    theta_covering,
)
from nielsen_schreier.graphs import is_spanning_tree, non_tree_edges
from oracles import naive_reduce, random_connected_graph, random_order_reduce, union_find_components


def test_index_formula(acceptance_log):
    rng = random.Random(1001)
    start = time.perf_counter()
    bad = []
    for _ in range(200):
        n, m = rng.randint(1, 4), rng.randint(1, 8)
        c = random_covering(Alphabet(n), m, rng)
        if subgroup_basis(c).rank != m * (n - 1) + 1:
            bad.append((n, m))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 2.0
    acceptance_log("1 index formula", ok, f"200 coverings, {len(bad)} mismatches, {elapsed:.2f}s (< 2s)")
    assert ok, bad


def test_theta_instance(acceptance_log):
    start = time.perf_counter()
    theta = theta_covering()
    rank = subgroup_basis(theta).rank
    folded = fold_words(AB, [AB.word(s) for s in EXPLICIT_BASIS])
    iso = coverings_isomorphic(folded, theta)
    elapsed = time.perf_counter() - start
    ok = theta.fiber_size == 2 and rank == 3 and iso and elapsed < 0.1
    acceptance_log(
        "2 kernel of F2 -> Z/2",
        ok,
        f"index {theta.fiber_size}, basis size {rank}, {{aa, ab, ab'}} generates it: {iso}, {elapsed * 1000:.1f}ms",
    )
    assert ok


def _members(c, b, rng, count):
    out = []
    while len(out) < count:
        if rng.random() < 0.5:
            w = random_word(c.alphabet, rng.randint(0, 12), rng)
            if is_member(c, w):
                out.append(w)
        else:
            w = c.alphabet.identity()
            for _ in range(rng.randint(0, 4)):
                g = rng.choice(b.generators)
                w = w * (g if rng.random() < 0.5 else ~g)
            out.append(w)
    return out


def test_roundtrip(acceptance_log):
    rng = random.Random(1003)
    start = time.perf_counter()
    failures = 0
    checked = 0
    dual = 0
    for _ in range(20):
        n = rng.randint(1, 3)
        m = rng.randint(1, 6 if n > 1 else 8)
        c = random_covering(Alphabet(n), m, rng)
        b = subgroup_basis(c)
        for w in _members(c, b, rng, 1000):
            checked += 1
            failures += eval_basis(b, rewrite_in_basis(b, c, w)) != w
        for bw in enumerate_reduced(b.alphabet, 3):
            dual += 1
            failures += rewrite_in_basis(b, c, eval_basis(b, bw)) != bw
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 5.0
    acceptance_log(
        "3 rewrite roundtrip",
        ok,
        f"{checked} members + {dual} basis words over 20 coverings, {failures} failures, {elapsed:.2f}s (< 5s)",
    )
    assert ok


def test_freeness(acceptance_log):
    rng = random.Random(1004)
    shapes = [(1, 1), (1, 4), (1, 8), (2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (4, 1), (5, 1)]
    start = time.perf_counter()
    failures = []
    total = 0
    for n, m in shapes * 2:
        c = random_covering(Alphabet(n), m, rng)
        b = subgroup_basis(c)
        assert b.rank <= 5
        images = {}
        for bw in enumerate_reduced(b.alphabet, 3):
            total += 1
            w = eval_basis(b, bw)
            if (w.is_identity() and not bw.is_identity()) or w in images:
                failures.append((n, m, str(bw)))
            images[w] = bw
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 5.0
    acceptance_log(
        "4 freeness at length 3",
        ok,
        f"{total} basis words over {2 * len(shapes)} coverings, {len(failures)} collisions, {elapsed:.2f}s (< 5s)",
    )
    assert ok, failures[:5]


def test_spanning_trees(acceptance_log):
    rng = random.Random(1005)
    failures = 0
    for _ in range(500):
        n = rng.randint(1, 30)
        g = Graph(n, tuple(random_connected_graph(rng, n, rng.randint(0, 45))))
        t = spanning_tree(g, rng.randrange(n))
        reaches_all = len(set(union_find_components(n, [g.edges[i] for i in t.tree_edges]))) == 1
        if not (len(t.tree_edges) == n - 1 and reaches_all and is_spanning_tree(g, t)):
            failures += 1
        if euler_rank(g) != len(g.edges) - n + 1 or euler_rank(g) != len(non_tree_edges(g, t)):
            failures += 1
    acceptance_log("5 spanning trees", failures == 0, f"500 random multigraphs, |V| <= 30, {failures} failures")
    assert failures == 0


def test_fixed_words(acceptance_log):
    start = time.perf_counter()
    scanned = len(enumerate_reduced(AB, 8))
    fixed = fixed_words(8)
    elapsed = time.perf_counter() - start
    ok = scanned == 13121 and fixed == [AB.identity()] and elapsed < 1.0
    acceptance_log(
        "6 only the identity is fixed by the swap",
        ok,
        f"{scanned} reduced words of length <= 8, fixed: {[str(w) for w in fixed]}, {elapsed:.2f}s (< 1s)",
    )
    assert ok


def test_equivariance_failure(acceptance_log):
    theta = theta_covering()
    computed = subgroup_basis(theta).generators
    explicit = [AB.word(s) for s in EXPLICIT_BASIS]
    results = {
        name: (preserves_subgroup(theta, gens), equivariance_violated(theta, gens))
        for name, gens in (("computed basis", computed), ("{aa, ab, ab'}", explicit))
    }
    ok = all(p and v for p, v in results.values())
    acceptance_log(
        "7 equivariance fails",
        ok,
        "; ".join(f"{k}: preserved={p}, moved={v}" for k, (p, v) in results.items()),
    )
    assert ok


def test_word_arithmetic(acceptance_log):
    rng = random.Random(1008)
    failures = 0
    for _ in range(10_000):
        n = rng.randint(1, 4)
        alph = Alphabet(n)
        u, v, w = (random_word(alph, rng.randint(0, 20), rng) for _ in range(3))
        e = alph.identity()
        raw = [(rng.randrange(n), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))]
        r = reduce(alph, raw)
        checks = (
            (u * v) * w == u * (v * w),
            u * e == u == e * u,
            u * ~u == e == ~u * u,
            reduce(alph, r.letters) == r,
            r.letters == naive_reduce(raw) == random_order_reduce(raw, rng),
        )
        failures += not all(checks)
    acceptance_log("8 word arithmetic", failures == 0, f"10000 random cases, {failures} failures")
    assert failures == 0


def test_folding_confluence(acceptance_log):
    rng = random.Random(1009)
    instances = [[AB.word(s) for s in EXPLICIT_BASIS], [AB.word("aba'b'")], list(AB.gens())]
    for _ in range(7):
        c = random_covering(Alphabet(rng.randint(1, 3)), rng.randint(1, 6), rng)
        instances.append(list(subgroup_basis(c).generators))
    for _ in range(5):
        instances.append([random_word(AB, rng.randint(1, 5), rng) for _ in range(rng.randint(1, 5))])

    inconsistent = 0
    finite = infinite = 0
    for gens in instances:
        alph = gens[0].alphabet
        outcomes = []
        for _ in range(50):
            shuffled = gens[:]
            rng.shuffle(shuffled)
            try:
                outcomes.append(fold_words(alph, shuffled))
            except InfiniteIndex:
                outcomes.append(None)
        if all(o is None for o in outcomes):
            infinite += 1
        elif all(o is not None and coverings_isomorphic(o, outcomes[0]) for o in outcomes):
            finite += 1
        else:
            inconsistent += 1
    ok = inconsistent == 0
    acceptance_log(
        "9 folding confluence",
        ok,
        f"{len(instances)} instances x 50 shuffles: {finite} finite index, "
        f"{infinite} infinite index, {inconsistent} inconsistent",
    )
    assert ok

"""Finite-sheeted coverings of a bouquet of circles.

A :class:`Covering` is a fibre ``{0, ..., m-1}``, one permutation per free
generator and a basepoint.  Reading a word left to right moves a point
through the fibre; the words that bring the basepoint back to itself form a
subgroup of index ``m`` (when the covering is connected), and every
finite-index subgroup arises this way.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .errors import (
    AlphabetMismatch,
    InfiniteIndex,
    InvalidPermutation,
    NotConnected,
)
from .graphs import Graph, connected_components
from .words import Alphabet, FiniteGroup, Word


def _is_permutation(p: Sequence[int], m: int) -> bool:
    return len(p) == m and sorted(p) == list(range(m))


@dataclass(frozen=True)
class Covering:
    alphabet: Alphabet
    fiber_size: int
    action: tuple[tuple[int, ...], ...]
    basepoint: int = 0
    metadata: Mapping[str, Any] = field(default_factory=dict, compare=False, repr=False)
    inverse_action: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = self.fiber_size
        if m < 1:
            raise ValueError("fiber_size must be positive")
        action = tuple(tuple(int(y) for y in p) for p in self.action)
        if len(action) != self.alphabet.size:
            raise InvalidPermutation(
                f"{len(action)} permutations given for rank {self.alphabet.size}"
            )
        inverse = []
        for a, p in enumerate(action):
            if not _is_permutation(p, m):
                raise InvalidPermutation(
                    f"action of {self.alphabet.names[a]} is not a permutation of 0..{m - 1}: {list(p)}"
                )
            q = [0] * m
            for x, y in enumerate(p):
                q[y] = x
            inverse.append(tuple(q))
        if not 0 <= self.basepoint < m:
            raise ValueError(f"basepoint {self.basepoint} out of range")
        object.__setattr__(self, "action", action)
        object.__setattr__(self, "inverse_action", tuple(inverse))

    @property
    def rank(self) -> int:
        return self.alphabet.size

    @classmethod
    def trivial(cls, alphabet: Alphabet) -> "Covering":
        """The one-sheeted covering; its subgroup is the whole free group."""
        return cls(alphabet, 1, tuple((0,) for _ in range(alphabet.size)))

    def step(self, x: int, generator: int, sign: int) -> int:
        return (self.action if sign > 0 else self.inverse_action)[generator][x]


@dataclass(frozen=True)
class LabeledGraph:
    """A graph whose edge ``i`` carries ``labels[i] = (generator, source point)``."""

    graph: Graph
    labels: tuple[tuple[int, int], ...]


def schreier_graph(c: Covering) -> LabeledGraph:
    """Edge ``a*m + x`` runs from ``x`` to ``sigma_a(x)``."""
    m = c.fiber_size
    edges, labels = [], []
    for a, perm in enumerate(c.action):
        for x in range(m):
            edges.append((x, perm[x]))
            labels.append((a, x))
    return LabeledGraph(Graph(m, tuple(edges)), tuple(labels))


def trace(c: Covering, w: Word, start: int) -> int:
    if w.alphabet != c.alphabet:
        raise AlphabetMismatch(f"word over {w.alphabet}, covering over {c.alphabet}")
    if not 0 <= start < c.fiber_size:
        raise ValueError(f"start point {start} out of range")
    x = start
    for gen, sign in w.letters:
        x = (c.action if sign > 0 else c.inverse_action)[gen][x]
    return x


def is_member(c: Covering, w: Word) -> bool:
    return trace(c, w, c.basepoint) == c.basepoint


def orbit(c: Covering, start: int) -> list[int]:
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for perms in (c.action, c.inverse_action):
            for p in perms:
                y = p[x]
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
    return order


def is_connected_covering(c: Covering) -> bool:
    return len(orbit(c, c.basepoint)) == c.fiber_size


def require_connected(c: Covering) -> None:
    if not is_connected_covering(c):
        labels = connected_components(schreier_graph(c).graph)
        raise NotConnected(
            f"covering of degree {c.fiber_size} is not connected; "
            f"component labels {list(labels)}",
            labels,
        )


def covering_from_hom(group: FiniteGroup, images: Sequence[int], alphabet: Alphabet) -> Covering:
    """Right-regular action of ``group``; the basepoint stabiliser is the kernel.

    Fibre point ``x`` is group element ``x``; ``metadata["elements"]`` records it.
    """
    if len(images) != alphabet.size:
        raise AlphabetMismatch(f"{len(images)} images for a rank {alphabet.size} alphabet")
    for g in images:
        group.check(g)
    action = tuple(tuple(group.table[x][g] for x in range(group.order)) for g in images)
    return Covering(
        alphabet,
        group.order,
        action,
        group.identity,
        metadata={"elements": tuple(range(group.order)), "images": tuple(images)},
    )


@dataclass(frozen=True)
class FoldedGraph:
    """A folded labelled graph: ``edges[i] = (src, generator, dst)``."""

    alphabet: Alphabet
    num_vertices: int
    edges: tuple[tuple[int, int, int], ...]
    basepoint: int = 0

    def deficient_vertices(self) -> list[int]:
        """Vertices missing an outgoing or incoming edge for some generator."""
        out = {(s, a) for s, a, _ in self.edges}
        inn = {(d, a) for _, a, d in self.edges}
        return [
            v
            for v in range(self.num_vertices)
            if any((v, a) not in out or (v, a) not in inn for a in range(self.alphabet.size))
        ]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[max(x, y)] = min(x, y)


def fold(alphabet: Alphabet, gens: Sequence[Word]) -> FoldedGraph:
    """Stallings folding of the wedge of loops spelling ``gens``.

    Vertices are renumbered breadth-first from the basepoint (which becomes 0)
    scanning generators in order, so the output does not depend on the order
    in which folds happened.
    """
    for w in gens:
        if w.alphabet != alphabet:
            raise AlphabetMismatch(f"generator {w} is not over {alphabet}")
    num = 1
    raw: list[tuple[int, int, int]] = []
    for w in gens:
        if w.is_identity():
            continue
        v = 0
        for i, (gen, sign) in enumerate(w.letters):
            if i == len(w) - 1:
                nxt = 0
            else:
                nxt = num
                num += 1
            raw.append((v, gen, nxt) if sign > 0 else (nxt, gen, v))
            v = nxt

    uf = _UnionFind(num)
    changed = True
    while changed:
        changed = False
        out: dict[tuple[int, int], int] = {}
        inn: dict[tuple[int, int], int] = {}
        for s, a, d in raw:
            s, d = uf.find(s), uf.find(d)
            t = out.setdefault((s, a), d)
            if uf.find(t) != d:
                uf.union(t, d)
                changed = True
                d = uf.find(d)
                s = uf.find(s)
            t = inn.setdefault((d, a), s)
            if uf.find(t) != s:
                uf.union(t, s)
                changed = True

    edges = {(uf.find(s), a, uf.find(d)) for s, a, d in raw}
    succ: dict[tuple[int, int], int] = {}
    pred: dict[tuple[int, int], int] = {}
    for s, a, d in edges:
        succ[(s, a)] = d
        pred[(d, a)] = s
    root = uf.find(0)
    relabel = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for a in range(alphabet.size):
            for nb in (succ.get((v, a)), pred.get((v, a))):
                if nb is not None and nb not in relabel:
                    relabel[nb] = len(relabel)
                    queue.append(nb)
    new_edges = sorted((relabel[s], a, relabel[d]) for s, a, d in edges)
    return FoldedGraph(alphabet, len(relabel), tuple(new_edges), 0)


def fold_words(alphabet: Alphabet, gens: Sequence[Word]) -> Covering:
    """The covering whose subgroup is generated by ``gens``.

    Raises :class:`InfiniteIndex`, carrying the folded graph, when the
    generated subgroup has infinite index.
    """
    core = fold(alphabet, gens)
    m = core.num_vertices
    deficient = core.deficient_vertices()
    if deficient:
        raise InfiniteIndex(
            f"folded graph on {m} vertices is not a covering "
            f"(vertices {deficient} lack edges); the subgroup has infinite index",
            core,
        )
    action = [[0] * m for _ in range(alphabet.size)]
    for s, a, d in core.edges:
        action[a][s] = d
    return Covering(alphabet, m, tuple(map(tuple, action)), 0)


def coverings_isomorphic(c1: Covering, c2: Covering) -> bool:
    """Whether two connected coverings define the same subgroup."""
    if c1.alphabet != c2.alphabet:
        raise AlphabetMismatch(f"coverings over {c1.alphabet} and {c2.alphabet}")
    require_connected(c1)
    require_connected(c2)
    if c1.fiber_size != c2.fiber_size:
        return False
    phi = {c1.basepoint: c2.basepoint}
    queue = deque([c1.basepoint])
    while queue:
        x = queue.popleft()
        y = phi[x]
        for p1, p2 in zip(c1.action + c1.inverse_action, c2.action + c2.inverse_action):
            x2, y2 = p1[x], p2[y]
            if x2 in phi:
                if phi[x2] != y2:
                    return False
            else:
                phi[x2] = y2
                queue.append(x2)
    return len(set(phi.values())) == c1.fiber_size


def random_covering(
    alphabet: Alphabet,
    fiber_size: int,
    rng: random.Random,
    connected: bool = True,
    max_tries: int = 10_000,
) -> Covering:
    """Random permutations; resampled until connected when requested."""
    if alphabet.size == 0 and connected and fiber_size > 1:
        raise ValueError("rank 0 admits no connected covering with more than one sheet")
    for _ in range(max_tries):
        perms = []
        for _ in range(alphabet.size):
            p = list(range(fiber_size))
            rng.shuffle(p)
            perms.append(tuple(p))
        c = Covering(alphabet, fiber_size, tuple(perms), rng.randrange(fiber_size))
        if not connected or is_connected_covering(c):
            return c
    raise RuntimeError(f"no connected covering found in {max_tries} tries")

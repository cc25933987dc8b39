"""Free bases of finite-index subgroups by spanning-tree contraction.

Given a connected covering, take its Schreier graph, grow the breadth-first
spanning tree from the basepoint and collapse it.  Each edge left over
becomes a loop at the basepoint, and those loops freely generate the
subgroup.  The edge ``(a, x)`` gives the word ``w(x) a w(sigma_a x)^-1``,
where ``w(v)`` spells the tree path from the basepoint to ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .covering import Covering, require_connected, schreier_graph, trace
from .errors import AlphabetMismatch, DomainError, NotMember
from .graphs import FORWARD, SpanningTree, spanning_tree, tree_path
from .words import Alphabet, Letter, Word, enumerate_reduced, hom_apply, reduce


@dataclass(frozen=True)
class Basis:
    """Schreier generators of a covering's subgroup, plus the tree that made them."""

    covering_alphabet: Alphabet
    generators: tuple[Word, ...]
    tree: SpanningTree
    vertex_words: tuple[Word, ...]
    edge_index: Mapping[tuple[int, int], int]  # (generator, fibre point) -> basis position
    alphabet: Alphabet  # letters of basis words, one per generator

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def edge_labels(self) -> tuple[tuple[int, int], ...]:
        """The non-tree edge ``(a, x)`` behind each generator, in basis order."""
        inv = {i: label for label, i in self.edge_index.items()}
        return tuple(inv[i] for i in range(len(inv)))


def rank_formula(n: int, m: int) -> int:
    """Rank of an index-``m`` subgroup of the free group of rank ``n``."""
    if m < 1 or n < 0:
        raise DomainError(f"need n >= 0 and m >= 1, got n={n}, m={m}")
    if n == 0:
        if m != 1:
            raise DomainError("the trivial group has no connected covering with m > 1")
        return 0
    return m * (n - 1) + 1


def basis_alphabet(rank: int) -> Alphabet:
    return Alphabet(rank, tuple(f"g{i}" for i in range(rank)))


def subgroup_basis(c: Covering) -> Basis:
    require_connected(c)
    lg = schreier_graph(c)
    tree = spanning_tree(lg.graph, c.basepoint)
    alphabet = c.alphabet

    vertex_words = []
    for v in range(c.fiber_size):
        raw = []
        for e, direction in tree_path(tree, v):
            gen, _ = lg.labels[e]
            raw.append(Letter(gen, 1 if direction == FORWARD else -1))
        vertex_words.append(reduce(alphabet, raw))

    generators = []
    edge_index = {}
    for e, (a, x) in enumerate(lg.labels):
        if e in tree.tree_edges:
            continue
        y = c.action[a][x]
        g = vertex_words[x] * Word(alphabet, (Letter(a, 1),)) * ~vertex_words[y]
        edge_index[(a, x)] = len(generators)
        generators.append(g)

    return Basis(
        alphabet,
        tuple(generators),
        tree,
        tuple(vertex_words),
        edge_index,
        basis_alphabet(len(generators)),
    )


def rewrite_in_basis(b: Basis, c: Covering, w: Word) -> Word:
    """Express a subgroup member as a word in the basis generators."""
    if w.alphabet != c.alphabet or c.alphabet != b.covering_alphabet:
        raise AlphabetMismatch("word, covering and basis must share an alphabet")
    x = c.basepoint
    out = []
    for gen, sign in w.letters:
        if sign > 0:
            i = b.edge_index.get((gen, x))
            x = c.action[gen][x]
        else:
            x = c.inverse_action[gen][x]
            i = b.edge_index.get((gen, x))
        if i is not None:
            out.append(Letter(i, sign))
    if x != c.basepoint:
        raise NotMember(f"{w} ends at fibre point {x}, not the basepoint {c.basepoint}")
    return reduce(b.alphabet, out)


def eval_basis(b: Basis, bw: Word) -> Word:
    if bw.alphabet != b.alphabet:
        raise AlphabetMismatch(f"basis word over {bw.alphabet}, basis has {b.rank} generators")
    return hom_apply(b.generators, bw, b.covering_alphabet)


def freeness_check(b: Basis, max_len: int) -> bool:
    """Injectivity of basis evaluation on all basis words up to ``max_len``."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    seen: dict[Word, Word] = {}
    for bw in enumerate_reduced(b.alphabet, max_len):
        w = eval_basis(b, bw)
        if w in seen:
            return False
        seen[w] = bw
    return True


def check_basis(b: Basis, c: Covering) -> list[str]:
    """Invariant violations of a computed basis (empty when all hold)."""
    problems = []
    expected = rank_formula(c.rank, c.fiber_size)
    if b.rank != expected:
        problems.append(f"rank {b.rank} != m(n-1)+1 = {expected}")
    for i, g in enumerate(b.generators):
        if g.is_identity():
            problems.append(f"generator {i} is trivial")
        elif trace(c, g, c.basepoint) != c.basepoint:
            problems.append(f"generator {i} = {g} is not in the subgroup")
    return problems

"""
From generating words to a covering
===================================

Subgroups are usually given by generators.  Folding the wedge of loops that
spell them produces a graph; when that graph is a full covering the subgroup
has finite index and the covering describes it exactly.
"""

from nielsen_schreier import (
    Alphabet,
    FiniteGroup,
    InfiniteIndex,
    covering_from_hom,
    coverings_isomorphic,
    fold_words,
    subgroup_basis,
)

ab = Alphabet.from_names("ab")
gens = [ab.word(s) for s in ("aa", "ab", "ab'")]
c = fold_words(ab, gens)
print(f"<aa, ab, ab'> has index {c.fiber_size}; action a: {c.action[0]}, b: {c.action[1]}")

kernel = covering_from_hom(FiniteGroup.cyclic(2), (1, 1), ab)
print("same subgroup as the even-length words:", coverings_isomorphic(c, kernel))

###############################################################################
# Different generating sets of the same subgroup fold to isomorphic coverings.

other = [ab.word(s) for s in ("bb", "ba", "ab", "aa")]
print("<bb, ba, ab, aa> is the same subgroup:", coverings_isomorphic(fold_words(ab, other), kernel))
print("the Schreier basis folds back to it too:",
      coverings_isomorphic(fold_words(ab, list(subgroup_basis(kernel).generators)), kernel))

###############################################################################
# The commutator generates an infinite-index subgroup.  The folded graph is
# a square missing edges, and is attached to the error.

try:
    fold_words(ab, [ab.word("aba'b'")])
except InfiniteIndex as exc:
    core = exc.core
    print("infinite index:", core.num_vertices, "vertices, edges",
          [(s, ab.names[a], d) for s, a, d in core.edges])

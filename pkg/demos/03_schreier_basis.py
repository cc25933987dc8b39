"""
Free bases of finite-index subgroups
====================================

A finite-index subgroup of a free group is described by a covering: a
finite fibre with one permutation per generator.  Collapsing a spanning tree
of its Schreier graph leaves m(n-1)+1 loops, and those loops, read as words,
freely generate the subgroup.
"""

import random
from pathlib import Path

from nielsen_schreier import (
    Alphabet,
    FiniteGroup,
    covering_from_hom,
    eval_basis,
    freeness_check,
    is_member,
    random_covering,
    rank_formula,
    rewrite_in_basis,
    subgroup_basis,
)
from nielsen_schreier.serialize import load_covering

ab = Alphabet.from_names("ab")

###############################################################################
# Kernel of F(a, b) -> Z/2 with a, b -> 1: the words of even length.

c = covering_from_hom(FiniteGroup.cyclic(2), (1, 1), ab)
b = subgroup_basis(c)
print(f"index {c.fiber_size}, rank {b.rank} = m(n-1)+1 = {rank_formula(2, c.fiber_size)}")
for (gen, x), g in zip(b.edge_labels, b.generators):
    print(f"  edge {ab.names[gen]} at {x}: {g}")

###############################################################################
# Any member can be rewritten over the basis, and evaluating gives it back.

for text in ["aa", "ab'", "abab", "b'a'ba"]:
    w = ab.word(text)
    bw = rewrite_in_basis(b, c, w)
    print(f"{str(w):>8} = {bw}   (member: {is_member(c, w)}, back: {eval_basis(b, bw)})")

###############################################################################
# The regular covering of S3 has six sheets, so its subgroup has rank 7.

s3 = load_covering((Path(__file__).parent / "data" / "s3_regular.json").read_text())
b = subgroup_basis(s3)
print(f"S3 kernel: rank {b.rank}")
print("  " + ", ".join(str(g) for g in b.generators))
print("  free up to length 2:", freeness_check(b, 2))

###############################################################################
# The formula holds for every connected covering.

rng = random.Random(1)
for _ in range(6):
    n, m = rng.randint(1, 4), rng.randint(1, 8)
    cov = random_covering(Alphabet(n), m, rng)
    print(f"n={n} m={m}: basis has {subgroup_basis(cov).rank} elements, formula gives {rank_formula(n, m)}")

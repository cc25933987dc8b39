"""
Reduced words and homomorphisms
===============================

Elements of a free group are stored as freely reduced words, so equality
is just comparison of letter sequences.
"""

from nielsen_schreier import Alphabet, FiniteGroup, enumerate_reduced, eval_in_group, hom_apply

ab = Alphabet.from_names("ab")
u = ab.word("ab")
v = ab.word("b'a")

# Products reduce at the junction; b b' cancels here.
print(f"({u}) * ({v}) = {u * v}")
w = ab.word("ab'a")
print(f"inverse of {w} is {~w}")
print(f"(ab)^3 = {u ** 3}")

###############################################################################
# A homomorphism out of a free group is fixed by where the generators go.
# Swapping a and b:

a, b = ab.gens()
for text in ["ab'", "aab", "ba'b'"]:
    w = ab.word(text)
    print(f"swap({w}) = {hom_apply((b, a), w)}")

###############################################################################
# Homomorphisms to a finite group, here Z/2 with a, b -> 1, count parity.

z2 = FiniteGroup.cyclic(2)
for text in ["a", "ab", "ab'a'b", "aba"]:
    print(f"theta({text}) = {eval_in_group(z2, (1, 1), ab.word(text))}")

###############################################################################
# There are 2n(2n-1)^(l-1) reduced words of length l.

words = enumerate_reduced(ab, 3)
print(f"{len(words)} reduced words of length <= 3:", " ".join(str(w) for w in words[:9]), "...")

"""Why no free basis of ker(F(a, b) -> Z/2) is stable under swapping a and b.

The subgroup ``H`` of even-length words has index 2, so every free basis of
it has 3 elements.  The automorphism swapping ``a`` and ``b`` maps ``H`` to
itself.  If it also mapped a basis to itself it would act on 3 points as an
involution and fix one of them; but the only word it fixes is the identity,
which is never a basis element.  This module checks each step concretely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .covering import Covering, covering_from_hom, coverings_isomorphic, fold_words, is_member
from .errors import AlphabetMismatch, FreeGroupError, NotMember
from .schreier import rank_formula, subgroup_basis
from .words import Alphabet, FiniteGroup, Word, enumerate_reduced, hom_apply

AB = Alphabet(2, ("a", "b"))
Z2 = FiniteGroup.cyclic(2)
EXPLICIT_BASIS = ("aa", "ab", "ab'")


class GeneratingSet(tuple):
    """A set of non-trivial reduced words, stored sorted by :meth:`Word.sort_key`."""

    def __new__(cls, words: Iterable[Word]):
        words = {w for w in words}
        if any(w.is_identity() for w in words):
            raise FreeGroupError("a free generating set cannot contain the identity")
        return super().__new__(cls, sorted(words, key=Word.sort_key))

    def __str__(self):
        return "{" + ", ".join(str(w) for w in self) + "}"


def theta_covering() -> Covering:
    """Coset action for the kernel of F(a, b) -> Z/2 sending a, b to 1."""
    return covering_from_hom(Z2, (1, 1), AB)


def transposition_lift(w: Word) -> Word:
    if w.alphabet.size != 2:
        raise AlphabetMismatch(f"swapping two generators needs rank 2, got {w.alphabet.size}")
    a, b = w.alphabet.gens()
    return hom_apply((b, a), w)


def fixed_words(max_len: int, alphabet: Alphabet = AB) -> list[Word]:
    return [w for w in enumerate_reduced(alphabet, max_len) if transposition_lift(w) == w]


def preserves_subgroup(c: Covering, gens: Iterable[Word]) -> bool:
    gens = list(gens)
    for g in gens:
        if not is_member(c, g):
            raise NotMember(f"{g} is not in the subgroup")
    return all(is_member(c, transposition_lift(g)) for g in gens)


@dataclass(frozen=True)
class EquivarianceResult:
    violated: bool
    image: GeneratingSet
    # generators the swap leaves fixed; only ever the identity can be fixed
    fixed: tuple[Word, ...]


def check_equivariance(c: Covering, gens: Iterable[Word]) -> EquivarianceResult:
    gens = GeneratingSet(gens)
    if not preserves_subgroup(c, gens):
        raise FreeGroupError("the swap does not preserve the subgroup")
    image = GeneratingSet(transposition_lift(g) for g in gens)
    fixed = tuple(g for g in gens if transposition_lift(g) == g)
    return EquivarianceResult(image != gens, image, fixed)


def equivariance_violated(c: Covering, gens: Iterable[Word]) -> bool:
    return check_equivariance(c, gens).violated


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }

    def __str__(self):
        lines = [f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}" for c in self.checks]
        return "\n".join(lines)


def verify_explicit_basis() -> Report:
    report = Report()
    theta = theta_covering()
    gens = [AB.word(s) for s in EXPLICIT_BASIS]

    for g in gens:
        member = is_member(theta, g)
        report.add(f"{g} in H", member, "fixes the basepoint" if member else "moves the basepoint")

    folded = fold_words(AB, gens)
    iso = coverings_isomorphic(folded, theta)
    report.add(
        "generated subgroup is H",
        iso,
        f"folded covering has {folded.fiber_size} sheets, "
        + ("isomorphic" if iso else "not isomorphic") + " to the kernel covering",
    )

    expected = rank_formula(2, theta.fiber_size)
    report.add("rank", len(gens) == expected == 3, f"|set| = {len(gens)}, m(n-1)+1 = {expected}")

    rank = subgroup_basis(folded).rank
    report.add("free basis size", rank == 3, f"Schreier basis of folded covering has rank {rank}")

    result = check_equivariance(theta, gens)
    report.add(
        "swap moves the set",
        result.violated,
        f"{GeneratingSet(gens)} -> {result.image}",
    )
    return report


def fixed_words_check(max_len: int = 8) -> Check:
    fixed = fixed_words(max_len)
    only_identity = len(fixed) == 1 and fixed[0].is_identity()
    count = len(enumerate_reduced(AB, max_len))
    detail = (
        f"only identity fixed among {count} reduced words of length <= {max_len}"
        if only_identity
        else f"fixed words: {[str(w) for w in fixed]}"
    )
    return Check(f"fixed words up to length {max_len}", only_identity, detail)

"""Reduced words in free groups, homomorphisms, and small finite groups.

A word is stored in free-reduced normal form, so equality of group elements
is equality of letter sequences.  Letters are ``(generator, sign)`` pairs.

Text syntax: a generator name stands for itself and a trailing apostrophe
marks the inverse, e.g. ``ab'a`` is a*b^-1*a.  Letters may be written without
separators when every name is a single character; otherwise separate them by
whitespace (``g0 g1' g0``).  The identity is written ``1`` (or left empty).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    AlphabetMismatch,
    BadElementIndex,
    FreeGroupError,
    InvalidLetter,
    WordSyntaxError,
)

IDENTITY_TOKENS = ("1", "ε")


@dataclass(frozen=True)
class Alphabet:
    """A finite set of free generators, indexed ``0..size-1``."""

    size: int
    names: tuple[str, ...] = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("alphabet size must be non-negative")
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"g{i}" for i in range(self.size)))
        else:
            object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != self.size:
            raise ValueError(f"expected {self.size} names, got {len(self.names)}")
        if len(set(self.names)) != self.size:
            raise ValueError(f"generator names must be distinct: {self.names}")
        for name in self.names:
            if not name or any(c.isspace() or c == "'" for c in name):
                raise ValueError(f"bad generator name {name!r}")

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "Alphabet":
        names = tuple(names)
        return cls(len(names), names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidLetter(f"{name!r} is not a generator of {self}") from None

    def gens(self) -> tuple["Word", ...]:
        return tuple(Word(self, (Letter(i, 1),)) for i in range(self.size))

    def identity(self) -> "Word":
        return Word(self, ())

    def word(self, text: str) -> "Word":
        return parse_word(self, text)

    def __str__(self):
        return "{" + ", ".join(self.names) + "}"


class Letter(NamedTuple):
    generator: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)

    def sort_key(self) -> tuple[int, int]:
        # a < a^-1 < b < b^-1 < ...
        return (self.generator, 0 if self.sign > 0 else 1)


def _check_letters(alphabet: Alphabet, raw: Iterable) -> list[Letter]:
    out = []
    for item in raw:
        gen, sign = item
        if not 0 <= gen < alphabet.size:
            raise InvalidLetter(f"generator index {gen} out of range for rank {alphabet.size}")
        if sign not in (1, -1):
            raise InvalidLetter(f"letter sign must be +1 or -1, got {sign}")
        out.append(Letter(gen, sign))
    return out


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for x in letters:
        if stack and stack[-1].generator == x.generator and stack[-1].sign == -x.sign:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A reduced word; build from arbitrary letter sequences with :func:`reduce`."""

    alphabet: Alphabet
    letters: tuple[Letter, ...] = ()
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        letters = tuple(_check_letters(self.alphabet, self.letters))
        for x, y in zip(letters, letters[1:]):
            if x.generator == y.generator and x.sign == -y.sign:
                raise FreeGroupError(f"letters {letters} are not reduced; use reduce()")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_hash", hash((self.alphabet, letters)))

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def inverse(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else invert(self)
        out = self.alphabet.identity()
        for _ in range(abs(k)):
            out = multiply(out, base)
        return out

    def is_identity(self) -> bool:
        return not self.letters

    def sort_key(self) -> tuple:
        """Length first, then lexicographic with a < a' < b < b' < ..."""
        return (len(self.letters), tuple(x.sort_key() for x in self.letters))

    def __str__(self):
        return format_word(self)


def reduce(alphabet: Alphabet, raw: Iterable) -> Word:
    """Freely reduce a sequence of ``(generator, sign)`` pairs."""
    return Word(alphabet, _free_reduce(_check_letters(alphabet, raw)))


def _same_alphabet(*words: Word) -> Alphabet:
    alphabet = words[0].alphabet
    for w in words[1:]:
        if w.alphabet != alphabet:
            raise AlphabetMismatch(f"words over {alphabet} and {w.alphabet}")
    return alphabet


def multiply(u: Word, v: Word) -> Word:
    alphabet = _same_alphabet(u, v)
    a, b = u.letters, v.letters
    # only the junction can cancel
    k = 0
    while k < len(a) and k < len(b):
        x, y = a[-1 - k], b[k]
        if x.generator != y.generator or x.sign != -y.sign:
            break
        k += 1
    return Word(alphabet, a[: len(a) - k] + b[k:])


def invert(w: Word) -> Word:
    return Word(w.alphabet, tuple(x.inverse() for x in reversed(w.letters)))


def equal(u: Word, v: Word) -> bool:
    _same_alphabet(u, v)
    return u.letters == v.letters


def hom_apply(images: Sequence[Word], w: Word, target: Alphabet | None = None) -> Word:
    """Apply the homomorphism sending generator ``i`` to ``images[i]``.

    ``target`` is only needed when ``images`` is empty (rank-0 source).
    """
    if len(images) != w.alphabet.size:
        raise AlphabetMismatch(
            f"{len(images)} generator images given for a rank {w.alphabet.size} alphabet"
        )
    if images:
        target = _same_alphabet(*images)
    elif target is None:
        raise AlphabetMismatch("target alphabet required when there are no images")
    inverses = [invert(g) for g in images]
    raw: list[Letter] = []
    for x in w.letters:
        raw.extend((images if x.sign > 0 else inverses)[x.generator].letters)
    return Word(target, _free_reduce(raw))


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table on ``0..order-1``."""

    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    inverses: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise ValueError("a group has at least one element")
        if any(len(row) != n for row in table):
            raise ValueError("multiplication table must be square")
        if any(not 0 <= z < n for row in table for z in row):
            raise ValueError("table entries must be element indices")
        e = self.identity
        if not 0 <= e < n:
            raise BadElementIndex(f"identity {e} out of range")
        if any(table[e][x] != x or table[x][e] != x for x in range(n)):
            raise ValueError(f"{e} is not a two-sided identity")
        inverses = []
        for x in range(n):
            ys = [y for y in range(n) if table[x][y] == e and table[y][x] == e]
            if not ys:
                raise ValueError(f"element {x} has no inverse")
            inverses.append(ys[0])
        object.__setattr__(self, "inverses", tuple(inverses))
        for x in range(n):
            for y in range(n):
                xy = table[x][y]
                for z in range(n):
                    if table[xy][z] != table[x][table[y][z]]:
                        raise ValueError(f"not associative at ({x}, {y}, {z})")

    @classmethod
    def cyclic(cls, order: int) -> "FiniteGroup":
        return cls(tuple(tuple((i + j) % order for j in range(order)) for i in range(order)))

    @classmethod
    def from_permutations(cls, perms: Sequence[Sequence[int]]) -> "FiniteGroup":
        """The group of the listed permutations (must be closed, identity first)."""
        perms = [tuple(p) for p in perms]
        pos = {p: i for i, p in enumerate(perms)}
        # (p*q)(x) = q(p(x)): left-to-right, matching the right action on fibres
        table = [[pos[tuple(q[p[x]] for x in range(len(p)))] for q in perms] for p in perms]
        return cls(tuple(map(tuple, table)))

    @property
    def order(self) -> int:
        return len(self.table)

    def check(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise BadElementIndex(f"element {x} not in a group of order {self.order}")
        return x

    def mul(self, x: int, y: int) -> int:
        return self.table[self.check(x)][self.check(y)]

    def inv(self, x: int) -> int:
        return self.inverses[self.check(x)]


def eval_in_group(group: FiniteGroup, images: Sequence[int], w: Word) -> int:
    if len(images) != w.alphabet.size:
        raise AlphabetMismatch(
            f"{len(images)} generator images given for a rank {w.alphabet.size} alphabet"
        )
    for g in images:
        group.check(g)
    inv = [group.inv(g) for g in images]
    acc = group.identity
    for x in w.letters:
        acc = group.table[acc][images[x.generator] if x.sign > 0 else inv[x.generator]]
    return acc


def _letters_in_order(alphabet: Alphabet) -> list[Letter]:
    return [Letter(i, s) for i in range(alphabet.size) for s in (1, -1)]


def enumerate_reduced(alphabet: Alphabet, max_len: int) -> list[Word]:
    """All reduced words of length <= max_len, by length then lexicographically."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    letters = _letters_in_order(alphabet)
    layer: list[tuple[Letter, ...]] = [()]
    out = [Word(alphabet, ())]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for x in letters:
                if w and w[-1].generator == x.generator and w[-1].sign == -x.sign:
                    continue
                nxt.append(w + (x,))
        layer = nxt
        out.extend(Word(alphabet, w) for w in layer)
    return out


def count_reduced(n: int, length: int) -> int:
    if length == 0:
        return 1
    return 2 * n * (2 * n - 1) ** (length - 1)


def random_word(alphabet: Alphabet, length: int, rng: random.Random) -> Word:
    """A uniformly random reduced word of exactly ``length`` letters."""
    if alphabet.size == 0:
        if length:
            raise ValueError("the rank 0 free group has only the empty word")
        return alphabet.identity()
    letters = _letters_in_order(alphabet)
    out: list[Letter] = []
    for _ in range(length):
        choices = letters if not out else [x for x in letters if x != out[-1].inverse()]
        out.append(rng.choice(choices))
    return Word(alphabet, tuple(out))


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse the apostrophe syntax; the result is freely reduced."""
    stripped = text.strip()
    if stripped == "" or (stripped in IDENTITY_TOKENS and stripped not in alphabet.names):
        return alphabet.identity()
    raw: list[Letter] = []
    if all(len(name) == 1 for name in alphabet.names):
        i = 0
        while i < len(text):
            c = text[i]
            if c.isspace():
                i += 1
                continue
            if c == "'":
                raise WordSyntaxError("apostrophe without a generator", i)
            if c not in alphabet.names:
                raise WordSyntaxError(f"unknown generator {c!r}", i)
            sign = 1
            if i + 1 < len(text) and text[i + 1] == "'":
                sign = -1
                i += 1
            raw.append(Letter(alphabet.names.index(c), sign))
            i += 1
    else:
        pos = 0
        for token in text.split():
            start = text.index(token, pos)
            pos = start + len(token)
            name, sign = token, 1
            if token.endswith("'"):
                name, sign = token[:-1], -1
            if name not in alphabet.names:
                raise WordSyntaxError(f"unknown generator {name!r}", start)
            raw.append(Letter(alphabet.names.index(name), sign))
    return Word(alphabet, _free_reduce(raw))


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    names = w.alphabet.names
    parts = [names[x.generator] + ("'" if x.sign < 0 else "") for x in w.letters]
    sep = "" if all(len(name) == 1 for name in names) else " "
    return sep.join(parts)

"""Braid words, permutations and their word-level involutions.

Permutations are position-tracking: ``perm_of(w)`` sends the start
position of a strand to its end position, and appending a letter
post-composes with the transposition of the letter, so
``perm_of(w + σ_i) = s_i ∘ perm_of(w)``. In one-line notation this swaps
the *values* i and i+1.
"""

import random as _random
import re
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import permutations

from ..exceptions import BraidError, BraidParseError

_PERM_SEPARATORS = re.compile(r"[\s,]+")


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..n} in one-line notation.

    Ordering is lexicographic on the image, which is the order used for
    Gram matrix rows and columns.
    """

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise BraidError(f"{list(self.image)} is not a permutation")

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def all(cls, n: int) -> list["Permutation"]:
        """All permutations of {1..n} in lexicographic order."""
        return [cls(p) for p in permutations(range(1, n + 1))]

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse "[3,1,2]", "3,1,2" or "3 1 2".

        Raises:
            BraidParseError: If a token is not an integer or the values do
                not form a permutation.
        """
        body = text.strip().removeprefix("[").removesuffix("]").strip()
        tokens = [t for t in _PERM_SEPARATORS.split(body) if t]
        values = []
        for index, token in enumerate(tokens, start=1):
            try:
                values.append(int(token))
            except ValueError:
                raise BraidParseError(
                    "malformed permutation entry", token, index
                ) from None
        if not values:
            raise BraidParseError("empty permutation", text)
        try:
            return cls(tuple(values))
        except BraidError as e:
            raise BraidParseError(str(e), text) from e

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.image)) + "]"

    def compose(self, other: "Permutation") -> "Permutation":
        """self ∘ other (apply other first)."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.image, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def swap_values(self, i: int) -> "Permutation":
        """s_i ∘ self: exchange the values i and i+1."""
        return Permutation(
            tuple(i + 1 if v == i else i if v == i + 1 else v for v in self.image)
        )

    def inversions(self) -> int:
        """Number of pairs i < j with π(i) > π(j)."""
        img = self.image
        return sum(
            1
            for a in range(len(img))
            for b in range(a + 1, len(img))
            if img[a] > img[b]
        )

    def cycles(self) -> int:
        seen = [False] * self.n
        count = 0
        for start in range(self.n):
            if seen[start]:
                continue
            count += 1
            k = start
            while not seen[k]:
                seen[k] = True
                k = self.image[k] - 1
        return count

    def reduced_word(self) -> tuple[int, ...]:
        """Deterministic reduced word: repeatedly swap the first descent.

        Sorting by adjacent position swaps k1, k2, ... gives
        self = s_km ∘ ... ∘ s_k1, which is perm_of the word (k1 k2 ... km).
        """
        img = list(self.image)
        letters: list[int] = []
        while True:
            for k in range(len(img) - 1):
                if img[k] > img[k + 1]:
                    break
            else:
                return tuple(letters)
            img[k], img[k + 1] = img[k + 1], img[k]
            letters.append(k + 1)


def inversions(pi: Permutation) -> int:
    return pi.inversions()


def reduced_word(pi: Permutation) -> tuple[int, ...]:
    return pi.reduced_word()


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators σ_1..σ_{n-1} and their inverses.

    Attributes:
        n: Strand count.
        letters: Nonzero integers; i is σ_i, -i is σ_i^{-1}.
    """

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise BraidError(f"strand count must be positive, got {self.n}")
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.n:
                raise BraidError(
                    f"letter {letter} out of range for {self.n} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise BraidError(f"strand mismatch: {self.n} vs {other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    @property
    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def star(self) -> "BraidWord":
        """Letters reversed, signs unchanged."""
        return BraidWord(self.n, self.letters[::-1])

    def inverse(self) -> "BraidWord":
        """Letters reversed with signs flipped."""
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def perm(self) -> Permutation:
        pi = Permutation.identity(self.n)
        for letter in self.letters:
            pi = pi.swap_values(abs(letter))
        return pi

    def stabilize(self, sign: int = 1) -> "BraidWord":
        """Markov stabilization: append σ_n^{±1} in B_{n+1}."""
        return BraidWord(self.n + 1, self.letters + (sign * self.n,))

    def conjugate(self, by: "BraidWord") -> "BraidWord":
        """by · self · by^{-1}."""
        return by + self + by.inverse()

    @classmethod
    def from_permutation(cls, pi: Permutation, sign: int = 1) -> "BraidWord":
        """Positive (sign=1) or negative (sign=-1) permutation braid word."""
        return cls(pi.n, tuple(sign * i for i in pi.reduced_word()))

    @classmethod
    def random(
        cls,
        rng: _random.Random,
        n: int,
        max_length: int,
        positive: bool = False,
    ) -> "BraidWord":
        """Seeded random word with length in [0, max_length]."""
        if n < 2:
            return cls(n)
        length = rng.randint(0, max_length)
        letters = []
        for _ in range(length):
            i = rng.randint(1, n - 1)
            letters.append(i if positive or rng.random() < 0.5 else -i)
        return cls(n, tuple(letters))

    @classmethod
    def all_words(
        cls, n: int, max_length: int, positive: bool = False
    ) -> Iterator["BraidWord"]:
        """Every word of length ≤ max_length, shortest first."""
        alphabet: list[int] = list(range(1, n))
        if not positive:
            alphabet += [-i for i in range(1, n)]
        words: list[tuple[int, ...]] = [()]
        for _ in range(max_length + 1):
            yield from (cls(n, w) for w in words)
            words = [w + (a,) for w in words for a in alphabet]


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices.

    Args:
        text: Braid text such as "1 -2 1"; empty text is the trivial braid.
        n: Strand count.

    Returns:
        The parsed BraidWord.

    Raises:
        BraidParseError: If a token is not a nonzero integer or its
            magnitude is not below n.
    """
    if n < 1:
        raise BraidParseError(f"strand count must be positive, got {n}")
    letters = []
    for index, token in enumerate(text.split(), start=1):
        try:
            letter = int(token)
        except ValueError:
            raise BraidParseError("malformed braid letter", token, index) from None
        if letter == 0:
            raise BraidParseError("braid letters must be nonzero", token, index)
        if abs(letter) >= n:
            raise BraidParseError(
                f"letter out of range for {n} strands", token, index
            )
        letters.append(letter)
    return BraidWord(n, tuple(letters))


def star(w: BraidWord) -> BraidWord:
    return w.star()


def inverse(w: BraidWord) -> BraidWord:
    return w.inverse()


def perm_of(w: BraidWord) -> Permutation:
    return w.perm()


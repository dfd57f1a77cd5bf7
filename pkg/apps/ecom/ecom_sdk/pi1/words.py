"""
Words in a Free Group
=====================
A word is a tuple of signed letters: +(i+1) is generator i and -(i+1) its
inverse, so every generator, including generator 0, has an inverse letter.
"""

from typing import Dict, Iterable, List, Mapping, Tuple


def generator_of(letter: int) -> int:
    return abs(letter) - 1


def letter_of(generator: int, inverse: bool = False) -> int:
    return -(generator + 1) if inverse else generator + 1


class Word(tuple):
    """Immutable word; products and inverses are freely reduced."""

    def __new__(cls, letters: Iterable[int] = ()):
        letters = tuple(int(l) for l in letters)
        if any(l == 0 for l in letters):
            raise ValueError("0 is not a letter")
        return super().__new__(cls, letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(tuple(self) + tuple(other)).reduced()

    def __invert__(self) -> "Word":
        return Word(-l for l in reversed(self))

    def __pow__(self, exponent: int) -> "Word":
        base = self if exponent >= 0 else ~self
        return Word(tuple(base) * abs(exponent)).reduced()

    def reduced(self) -> "Word":
        """Free reduction: no letter next to its inverse."""
        stack: List[int] = []
        for l in self:
            if stack and stack[-1] == -l:
                stack.pop()
            else:
                stack.append(l)
        return Word(stack)

    def cyclically_reduced(self) -> "Word":
        w = self.reduced()
        start, end = 0, len(w)
        while end - start >= 2 and w[start] == -w[end - 1]:
            start += 1
            end -= 1
        return Word(w[start:end])

    def rotations(self) -> List["Word"]:
        return [Word(self[i:] + self[:i]) for i in range(max(1, len(self)))]

    def canonical(self) -> Tuple[int, ...]:
        """Least rotation of the word or its inverse; equal for conjugate-or-inverse relators."""
        w = self.cyclically_reduced()
        if not w:
            return ()
        return min(tuple(r) for word in (w, ~w) for r in word.rotations())

    def generators(self) -> List[int]:
        return sorted({generator_of(l) for l in self})

    def occurrences(self, generator: int) -> int:
        return sum(1 for l in self if generator_of(l) == generator)

    def exponent_sums(self, generator_count: int) -> List[int]:
        sums = [0] * generator_count
        for l in self:
            sums[generator_of(l)] += 1 if l > 0 else -1
        return sums

    def substitute(self, images: Mapping[int, "Word"]) -> "Word":
        """Replace generator g by images[g]; other letters are kept."""
        out: List[int] = []
        for l in self:
            g = generator_of(l)
            if g in images:
                image = images[g]
                out.extend(image if l > 0 else ~image)
            else:
                out.append(l)
        return Word(out).reduced()

    def renumber(self, mapping: Dict[int, int]) -> "Word":
        return Word(letter_of(mapping[generator_of(l)], l < 0) for l in self)

    def root(self) -> Tuple["Word", int]:
        """(w, k) with self = w^k and k maximal."""
        n = len(self)
        for size in range(1, n + 1):
            if n % size == 0 and tuple(self) == tuple(self[:size]) * (n // size):
                return Word(self[:size]), n // size
        return self, 1

    def to_list(self) -> List[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"Word({list(self)})"

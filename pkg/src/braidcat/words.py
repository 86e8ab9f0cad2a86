"""Words in a finitely generated group, with a tiny concrete syntax.

A word is a freely reduced sequence of letters, each letter a generator
name together with a sign.  The concrete syntax is character based:

    * a lowercase character that names a generator is a positive letter,
      and the corresponding uppercase character is its inverse;
    * alphabets may also declare uppercase generator names (``S``, ``T``),
      in which case the case-flipped character is the inverse;
    * an optional exponent ``^k`` or ``^-k`` applies to the preceding
      letter, and whitespace between tokens is ignored.

So over the alphabet ``a b c`` the string ``"x y x^2 Y X Y x^-2 y"`` is
rejected, while over ``x y`` it parses to a 10-letter word.  Words
multiply by concatenation followed by free reduction, and a finite map
from generator names to words extends to a homomorphism via
:func:`substitute`.
"""

from __future__ import annotations

import dataclasses
import re
from collections.abc import Iterable, Mapping

__all__ = [
    "Alphabet",
    "Letter",
    "Word",
    "parse",
    "substitute",
    "ALPHABET_ABC",
    "ALPHABET_XY",
    "ALPHABET_ST",
]


@dataclasses.dataclass(frozen=True)
class Alphabet:
    """An ordered tuple of single-character generator names."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for name in self.names:
            if len(name) != 1 or not name.isalpha():
                raise ValueError(f"generator name must be one letter, got {name!r}")
            if name in seen or name.swapcase() in seen:
                raise ValueError(f"ambiguous generator name {name!r}")
            seen.add(name)

    def __contains__(self, name: str) -> bool:
        return name in self.names

    def index(self, name: str) -> int:
        return self.names.index(name)


# (generator name, +1 or -1)
Letter = tuple[str, int]


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for name, sign in letters:
        if stack and stack[-1][0] == name and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((name, sign))
    return tuple(stack)


@dataclasses.dataclass(frozen=True)
class Word:
    """A freely reduced word.  Build with :func:`parse` or from letters."""

    letters: tuple[Letter, ...] = ()

    @staticmethod
    def from_letters(letters: Iterable[Letter]) -> Word:
        return Word(_reduce(letters))

    def __mul__(self, other: Word) -> Word:
        return Word(_reduce(self.letters + other.letters))

    def __pow__(self, n: int) -> Word:
        if n < 0:
            return self.inverse() ** (-n)
        out = Word()
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> Word:
        return Word(tuple((name, -sign) for name, sign in reversed(self.letters)))

    def __invert__(self) -> Word:
        return self.inverse()

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sum(self, name: str) -> int:
        return sum(sign for n, sign in self.letters if n == name)

    def names(self) -> frozenset[str]:
        return frozenset(name for name, _ in self.letters)

    def __str__(self) -> str:
        runs: list[tuple[Letter, int]] = []
        for letter in self.letters:
            if runs and runs[-1][0] == letter:
                runs[-1] = (letter, runs[-1][1] + 1)
            else:
                runs.append((letter, 1))
        tokens = []
        for (name, sign), count in runs:
            head = name if sign > 0 else name.swapcase()
            tokens.append(head if count == 1 else f"{head}^{count}")
        return " ".join(tokens) if tokens else "1"

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


_TOKEN = re.compile(r"\s+|(?P<letter>[A-Za-z])(?:\^\{?(?P<exp>-?\d+)\}?)?|(?P<bad>.)")


def parse(text: str, alphabet: Alphabet | None = None) -> Word:
    """Parse the concrete syntax.  ``"1"`` alone denotes the empty word.

    With no explicit alphabet every lowercase character is taken to name
    a generator; with one, letters must match a declared name up to a
    case flip (the flipped case being the inverse).
    """
    if text.strip() == "1":
        return Word()
    letters: list[Letter] = []
    for match in _TOKEN.finditer(text):
        if match.group("bad"):
            raise ValueError(f"bad character {match.group('bad')!r} in {text!r}")
        ch = match.group("letter")
        if ch is None:
            continue
        if alphabet is None:
            name, sign = (ch, 1) if ch.islower() else (ch.lower(), -1)
        elif ch in alphabet:
            name, sign = ch, 1
        elif ch.swapcase() in alphabet:
            name, sign = ch.swapcase(), -1
        else:
            raise ValueError(f"letter {ch!r} is not in the alphabet {alphabet.names}")
        exp = int(match.group("exp") or 1)
        if exp < 0:
            sign, exp = -sign, -exp
        letters.extend([(name, sign)] * exp)
    return Word(_reduce(letters))


def substitute(word: Word, images: Mapping[str, Word]) -> Word:
    """Apply the homomorphism sending each generator to its image word."""
    out = Word()
    for name, sign in word.letters:
        if name not in images:
            raise KeyError(f"no image given for generator {name!r}")
        image = images[name]
        out = out * (image if sign > 0 else image.inverse())
    return out


ALPHABET_ABC = Alphabet(("a", "b", "c"))
ALPHABET_XY = Alphabet(("x", "y"))
ALPHABET_ST = Alphabet(("S", "T"))

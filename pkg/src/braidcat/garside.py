"""Garside normal form in the braid group on four strands.

The group is generated by ``a``, ``b``, ``c`` (the elementary crossings
in order along the strands) subject to a b a = b a b, b c b = c b c and
a c = c a.  Every element has a unique left-greedy normal form

    D^k p_1 p_2 ... p_m

where D is the positive half twist, each p_i is a simple element
(a permutation braid) other than 1 or D, and each adjacent pair is
left weighted: every generator that can start p_{i+1} must end p_i.
Simple elements biject with permutations of the four strands, and all
the factor bookkeeping happens in that finite quotient.

Permutations are stored in one-line notation on {0, 1, 2, 3}, and
``compose(p, q)`` means "p then q", matching left-to-right reading of
braid words.  Under that convention the generators that can start a
simple element are its descents, and those that can end it are the
descents of its inverse.
"""

from __future__ import annotations

import dataclasses
import itertools
import re

from .words import Word

__all__ = [
    "GENERATOR_NAMES",
    "DELTA",
    "NormalForm",
    "normal_form",
    "parse_normal_form",
    "delta_word",
    "flip_word",
    "equals",
    "equals_mod_center",
    "central_power",
    "is_central",
    "conjugation_orbit",
    "presentation_equalities",
    "check_presentation",
]

Perm = tuple[int, int, int, int]

IDENTITY: Perm = (0, 1, 2, 3)
# One-line form of the longest element, i.e. the half twist D.
DELTA: Perm = (3, 2, 1, 0)

GENERATOR_NAMES = ("a", "b", "c")
GENERATOR_PERMS: tuple[Perm, ...] = ((1, 0, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2))


def compose(p: Perm, q: Perm) -> Perm:
    """p then q: the image of i is q(p(i))."""
    return (q[p[0]], q[p[1]], q[p[2]], q[p[3]])


def invert(p: Perm) -> Perm:
    out = [0, 0, 0, 0]
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)  # type: ignore[return-value]


def inversions(p: Perm) -> int:
    return sum(1 for i, j in itertools.combinations(range(4), 2) if p[i] > p[j])


def starting_set(p: Perm) -> frozenset[int]:
    """Indices i such that the simple element p admits a word starting a_i."""
    return frozenset(i for i in range(3) if p[i] > p[i + 1])


def finishing_set(p: Perm) -> frozenset[int]:
    return starting_set(invert(p))


def simple_word(p: Perm) -> Word:
    """The lexicographically least reduced positive word for a simple element."""
    letters = []
    while p != IDENTITY:
        i = min(starting_set(p))
        letters.append((GENERATOR_NAMES[i], 1))
        p = compose(GENERATOR_PERMS[i], p)
    return Word(tuple(letters))


def _flip(p: Perm) -> Perm:
    # Conjugation by the half twist reverses the strand order.
    return compose(compose(DELTA, p), DELTA)


def _left_weight(p: Perm, q: Perm) -> tuple[Perm, Perm]:
    """Slide generators from the head of q to the tail of p until the
    pair is left weighted.  The product p q is unchanged."""
    while True:
        movable = starting_set(q) - finishing_set(p)
        if not movable:
            return p, q
        i = min(movable)
        s = GENERATOR_PERMS[i]
        p = compose(p, s)
        q = compose(s, q)


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """Left-greedy normal form D^power p_1 ... p_m.

    ``power`` is the infimum (the largest k with D^-k w positive) and
    ``factors`` are the simple factors, none equal to 1 or D, each
    adjacent pair left weighted.
    """

    power: int = 0
    factors: tuple[Perm, ...] = ()

    @property
    def infimum(self) -> int:
        return self.power

    @property
    def supremum(self) -> int:
        return self.power + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def is_identity(self) -> bool:
        return self.power == 0 and not self.factors

    def to_word(self) -> Word:
        out = delta_word() ** self.power
        for p in self.factors:
            out = out * simple_word(p)
        return out

    def __str__(self) -> str:
        parts = [f"D^{self.power}"]
        for p in self.factors:
            parts.append("[" + " ".join(str(v + 1) for v in p) + "]")
        return " | ".join(parts)


def delta_word() -> Word:
    return simple_word(DELTA)


def flip_word(word: Word) -> Word:
    """The image of a word under conjugation by the half twist: a <-> c."""
    swap = {"a": "c", "b": "b", "c": "a"}
    return Word(tuple((swap[name], sign) for name, sign in word.letters))


def normal_form(word: Word) -> NormalForm:
    """Compute the left-greedy normal form of a word in a, b, c.

    Letters are folded in one at a time.  A positive letter becomes a
    new final factor; an inverse letter a_i^-1 rewrites the whole
    element as (D^-1) (flipped factors) (D a_i^-1), using that D a_i^-1
    is simple.  A renormalisation sweep then restores left weighting,
    working from the tail so that each pass pushes material towards the
    front, absorbs full twists into the power, and drops trivial
    factors.
    """
    power = 0
    factors: list[Perm] = []
    for name, sign in word.letters:
        i = GENERATOR_NAMES.index(name)
        if sign > 0:
            factors.append(GENERATOR_PERMS[i])
        else:
            power -= 1
            factors = [_flip(p) for p in factors]
            factors.append(compose(DELTA, GENERATOR_PERMS[i]))
        factors = _normalise(factors)
        while factors and factors[0] == DELTA:
            power += 1
            factors = factors[1:]
    return NormalForm(power, tuple(factors))


def _normalise(factors: list[Perm]) -> list[Perm]:
    """Repeated local moves until every adjacent pair is left weighted.

    Any D produced by the moves migrates to the front because a factor
    equal to D absorbs every generator, so left weighting slides all of
    its successor into it.
    """
    factors = [p for p in factors if p != IDENTITY]
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 2, -1, -1):
            p, q = _left_weight(factors[i], factors[i + 1])
            if (p, q) != (factors[i], factors[i + 1]):
                changed = True
                factors[i : i + 2] = [x for x in (p, q) if x != IDENTITY]
    return factors


_NF_FACTOR = re.compile(r"\[\s*(\d)\s+(\d)\s+(\d)\s+(\d)\s*\]")


def parse_normal_form(text: str) -> NormalForm:
    """Parse the ``D^k | [i1 i2 i3 i4] | ...`` serialisation (1-based)."""
    parts = [part.strip() for part in text.split("|")]
    head = parts[0]
    if not head.startswith("D^"):
        raise ValueError(f"normal form must start with D^k, got {head!r}")
    power = int(head[2:])
    factors = []
    for part in parts[1:]:
        match = _NF_FACTOR.fullmatch(part)
        if match is None:
            raise ValueError(f"bad factor {part!r}")
        perm = tuple(int(g) - 1 for g in match.groups())
        if sorted(perm) != [0, 1, 2, 3]:
            raise ValueError(f"not a permutation: {part!r}")
        factors.append(perm)
    return NormalForm(power, tuple(factors))


def equals(w1: Word, w2: Word) -> bool:
    """Exact equality in the braid group."""
    return normal_form(w1 * w2.inverse()).is_identity


def equals_mod_center(w1: Word, w2: Word) -> bool:
    """Equality modulo the centre, which is generated by D^2."""
    return central_power(w1 * w2.inverse()) is not None


def central_power(word: Word) -> int | None:
    """k if the word equals the k-th power of the full twist D^2, else None."""
    nf = normal_form(word)
    if not nf.factors and nf.power % 2 == 0:
        return nf.power // 2
    return None


def is_central(word: Word) -> bool:
    gens = [Word(((name, 1),)) for name in GENERATOR_NAMES]
    return all(equals(word * g, g * word) for g in gens)


def conjugation_orbit(
    g: Word, seed: Word, max_steps: int = 16, convention: str = "left"
) -> list[Word]:
    """Iterate conjugation by g until the seed recurs, returning the orbit.

    ``convention="left"`` applies w -> g w g^-1 and ``"right"`` applies
    w -> g^-1 w g.  The length of the returned list is the period.
    Raises if the orbit does not close within max_steps.
    """
    if convention not in ("left", "right"):
        raise ValueError(f"unknown convention {convention!r}")
    orbit = [seed]
    current = seed
    for _ in range(max_steps):
        if convention == "left":
            current = g * current * g.inverse()
        else:
            current = g.inverse() * current * g
        if equals(current, seed):
            return orbit
        orbit.append(current)
    raise ValueError(f"orbit did not close within {max_steps} steps")


def presentation_equalities() -> tuple[tuple[str, str, str], ...]:
    """The defining equalities of the six-generator presentation on
    a, b, c, d, e, f, as (label, left word, right word) in that alphabet."""
    return (
        ("ba=ae", "b a", "a e"),
        ("ae=eb", "a e", "e b"),
        ("de=ec", "d e", "e c"),
        ("ec=cd", "e c", "c d"),
        ("bc=cf", "b c", "c f"),
        ("cf=fb", "c f", "f b"),
        ("df=fa", "d f", "f a"),
        ("fa=ad", "f a", "a d"),
        ("ca=ac", "c a", "a c"),
        ("ef=fe", "e f", "f e"),
    )


def check_presentation(e: Word, f: Word, d: Word) -> list[tuple[str, bool]]:
    """Check the six-generator equalities for given expressions of d, e, f
    as words in a, b, c.  Returns one (label, holds) pair per equality."""
    from .words import parse, substitute

    images = {
        "a": parse("a"),
        "b": parse("b"),
        "c": parse("c"),
        "d": d,
        "e": e,
        "f": f,
    }
    results = []
    for label, lhs, rhs in presentation_equalities():
        left = substitute(parse(lhs), images)
        right = substitute(parse(rhs), images)
        results.append((label, equals(left, right)))
    return results

"""Braid words, Conway notation and the Conway-form braid.

Braid words are stored run-length expanded: ``sigma_2^3`` is three unit
letters.  Generators are 1-indexed, ``sigma_i`` crossing strands ``i`` and
``i + 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ConwayParseError, EmptyNotationError, MixedSignsError, ZeroEntryError


@dataclass(frozen=True)
class BraidLetter:
    generator_index: int
    exponent_sign: int

    def __post_init__(self):
        if self.exponent_sign not in (1, -1):
            raise ValueError(f"exponent sign must be +1 or -1, got {self.exponent_sign}")
        if self.generator_index < 1:
            raise ValueError(f"generator index must be positive, got {self.generator_index}")

    def __str__(self):
        return f"s{self.generator_index}" + ("" if self.exponent_sign > 0 else "^-1")


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.strand_count < 2 or self.strand_count % 2:
            raise ValueError(f"plat braids need an even strand count >= 2, got {self.strand_count}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter.generator_index >= self.strand_count:
                raise ValueError(f"{letter} does not fit on {self.strand_count} strands")

    @classmethod
    def from_signed(cls, strand_count: int, gens: Iterable[int]) -> BraidWord:
        """Build from signed generator indices, e.g. ``[2, 2, -1]`` for s2 s2 s1^-1."""
        return cls(strand_count, tuple(BraidLetter(abs(g), 1 if g > 0 else -1) for g in gens))

    @classmethod
    def from_powers(cls, strand_count: int, powers: Iterable[tuple[int, int]]) -> BraidWord:
        """Build from ``(generator, exponent)`` pairs, expanding each power."""
        letters = []
        for gen, k in powers:
            sign = 1 if k > 0 else -1
            letters.extend(BraidLetter(gen, sign) for _ in range(abs(k)))
        return cls(strand_count, tuple(letters))

    @property
    def strand_pairs(self) -> int:
        return self.strand_count // 2

    def signed(self) -> list[int]:
        return [l.generator_index * l.exponent_sign for l in self.letters]

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return f"1 in B_{self.strand_count}"
        # compress runs for display
        parts, run = [], []
        for letter in self.letters:
            if run and run[-1] != letter:
                parts.append(_run_str(run))
                run = []
            run.append(letter)
        parts.append(_run_str(run))
        return " ".join(parts)


def _run_str(run):
    k = len(run) * run[0].exponent_sign
    return f"s{run[0].generator_index}" + ("" if k == 1 else f"^{k}")


@dataclass(frozen=True)
class ConwayNotation:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(b) for b in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise EmptyNotationError("Conway notation needs at least one entry")
        if any(b == 0 for b in entries):
            raise ZeroEntryError(f"zero entry in {list(entries)}")
        if len({b > 0 for b in entries}) > 1:
            raise MixedSignsError(f"entries of {list(entries)} do not share one sign")

    @property
    def sign(self) -> int:
        return 1 if self.entries[0] > 0 else -1

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "[" + ",".join(str(b) for b in self.entries) + "]"

    def text(self) -> str:
        return ",".join(str(b) for b in self.entries)


_INT = re.compile(r"^[+-]?[0-9]+$")


def parse_conway(text: str) -> ConwayNotation:
    """Parse ``"2,1,1"`` (optionally bracketed) into a validated notation."""
    if not text.isascii():
        raise ConwayParseError(f"non-ASCII input {text!r}")
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1].strip()
    if not body:
        raise EmptyNotationError("empty Conway notation")
    entries = []
    for tok in body.split(","):
        tok = tok.strip()
        if not _INT.match(tok):
            raise ConwayParseError(f"not an integer: {tok!r}")
        entries.append(int(tok))
    return ConwayNotation(tuple(entries))


def continued_fraction(c: ConwayNotation | Sequence[int]) -> Fraction:
    """Evaluate ``b1 + 1/(b2 + 1/(... + 1/bk))`` exactly."""
    entries = c.entries if isinstance(c, ConwayNotation) else tuple(c)
    value = Fraction(entries[-1])
    for b in reversed(entries[:-1]):
        # uniform signs keep every tail bounded away from zero
        assert value != 0
        value = b + 1 / value
    return value


def normalize_odd(c: ConwayNotation) -> ConwayNotation:
    """Rewrite an even-length notation to an odd-length one with the same fraction."""
    b = list(c.entries)
    if len(b) % 2:
        return c
    s = c.sign
    if abs(b[-1]) > 1:
        b[-1:] = [b[-1] - s, s]
    else:
        b[-2:] = [b[-2] + s]
    return ConwayNotation(tuple(b))


def conway_to_braid(c: ConwayNotation) -> BraidWord:
    """The 4-strand word ``s2^b1 s1^-b2 s2^b3 ... s2^bk`` whose plat is the Conway form."""
    if len(c) % 2 == 0:
        raise ValueError(f"Conway braid needs odd length, got {c}; use normalize_odd first")
    powers = [(2 if i % 2 == 0 else 1, b if i % 2 == 0 else -b) for i, b in enumerate(c.entries)]
    return BraidWord.from_powers(4, powers)


def exponent_sum(b: BraidWord) -> int:
    return sum(l.exponent_sign for l in b.letters)


def mirror(b: BraidWord) -> BraidWord:
    """Letterwise ``s_i^k -> s_{2n-i}^{-k}``; the plat closure becomes the mirror knot."""
    n2 = b.strand_count
    return BraidWord(n2, tuple(BraidLetter(n2 - l.generator_index, -l.exponent_sign) for l in b.letters))

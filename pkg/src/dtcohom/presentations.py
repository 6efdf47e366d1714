"""Words in twist generators, free reduction and the named relators."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, UnknownGenerator

Letter = tuple[str, int]


@dataclass(frozen=True)
class Word:
    """A word over generator symbols; each letter carries exponent +1 or -1.

    Words are read as group elements acting on the left, so ``Word.parse("a b")``
    applied to ``x`` is ``a(b(x))``.
    """

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((str(g), int(e)) for g, e in self.letters)
        for g, e in letters:
            if e not in (1, -1):
                raise ValueError(f"letter exponent must be +1 or -1, got {g}^{e}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, *symbols: str) -> "Word":
        """``Word.of("a", "b^-1")``."""
        return cls.parse(" ".join(symbols))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``a b a^-1 b^-1``.  ``a^k`` for any integer k is expanded;
        ``1`` or an empty string is the empty word."""
        letters: list[Letter] = []
        for tok in text.split():
            if tok == "1":
                continue
            name, _, power = tok.partition("^")
            if not name or not (name[0].isalpha() or name[0] == "_"):
                raise ParseError(f"bad generator token {tok!r}")
            try:
                k = int(power) if power else 1
            except ValueError:
                raise ParseError(f"bad exponent in {tok!r}") from None
            sign = 1 if k > 0 else -1
            letters.extend([(name, sign)] * abs(k))
        return cls(tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def generators(self) -> set[str]:
        return {g for g, _ in self.letters}

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^-1" for g, e in self.letters)


def free_reduce(w: Word) -> Word:
    out: list[Letter] = []
    for g, e in w.letters:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return Word(tuple(out))


def _distinct(*gens: str):
    if len(set(gens)) != len(gens):
        raise ValueError(f"relator needs distinct generators, got {gens}")


def commuting_relator(a: str, b: str) -> Word:
    """``a b a^-1 b^-1``: twists on disjoint curves commute."""
    _distinct(a, b)
    return Word(((a, 1), (b, 1), (a, -1), (b, -1)))


def braid_relator(a: str, b: str) -> Word:
    """``(a b a)(b a b)^-1`` for twists on curves meeting once."""
    _distinct(a, b)
    return Word(((a, 1), (b, 1), (a, 1), (b, -1), (a, -1), (b, -1)))


def chain_relator(a: str, b: str, c: str, d: str, e: str) -> Word:
    """``(a b c)^4 e^-1 d^-1``, i.e. ``(a b c)^4 = d e`` with d, e the
    boundary twists of the two-holed torus."""
    _distinct(a, b, c, d, e)
    return Word(((a, 1), (b, 1), (c, 1)) * 4 + ((e, -1), (d, -1)))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator symbols must be unique")
        for r in self.relators:
            for g in r.generators():
                if g not in self.generators:
                    raise UnknownGenerator(g)

    def with_relators(self, relators: Iterable[Word]) -> "Presentation":
        return Presentation(self.generators, self.relators + tuple(relators))


def free_presentation(generators: Sequence[str]) -> Presentation:
    return Presentation(tuple(generators))


def commuting_presentation(generators: Sequence[str]) -> Presentation:
    """All pairwise commutators; the relations satisfied by pants twists."""
    gens = tuple(generators)
    rels = tuple(
        commuting_relator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]
    )
    return Presentation(gens, rels)

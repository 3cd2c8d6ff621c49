"""Presentations, letters and syllable words.

Generators are numbered 1..n at every external surface (text, CSV, JSON).
A word is kept in syllable form ``x_{i_1}^{a_1} ... x_{i_t}^{a_t} * D^c``,
where ``D`` stands for the central element ``x_1^{p_1} = ... = x_n^{p_n}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "Presentation",
    "HalfBounds",
    "Reindexing",
    "Letter",
    "SyllableWord",
    "WordSyntaxError",
    "half_bounds",
    "reindex",
    "free_reduce",
    "to_lambda",
    "parse_syllables",
    "parse_letters",
    "letters_of",
    "format_syllables",
]


class WordSyntaxError(ValueError):
    """Raised for unparseable word or exponent-tuple text."""


@dataclass(frozen=True)
class Presentation:
    """The exponent tuple ``(p_1, ..., p_n)``, sorted, all at least 2."""

    p: tuple[int, ...]
    minus: tuple[int, ...] = field(init=False, repr=False, compare=False)
    plus: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        p = tuple(int(x) for x in self.p)
        if len(p) < 2:
            raise ValueError("need at least two generators")
        if any(x < 2 for x in p):
            raise ValueError("every exponent must be at least 2")
        if list(p) != sorted(p):
            raise ValueError("exponents must be sorted non-decreasing")
        object.__setattr__(self, "p", p)
        p1 = p[0]
        object.__setattr__(self, "minus", tuple((pk - p1) // 2 for pk in p))
        object.__setattr__(self, "plus", tuple((p1 + pk - 1) // 2 for pk in p))

    @classmethod
    def parse(cls, text: str) -> Presentation:
        """Parse ``"2,3,7"``."""
        try:
            values = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
            return cls(values)
        except ValueError as exc:
            raise WordSyntaxError(f"bad exponent tuple {text!r}: {exc}") from exc

    @property
    def n(self) -> int:
        return len(self.p)

    @property
    def p1(self) -> int:
        return self.p[0]

    def order(self, k: int) -> int:
        """``p_k`` for a 1-based generator index."""
        return self.p[k - 1]

    def __str__(self) -> str:
        return "G(" + ",".join(map(str, self.p)) + ")"


class HalfBounds(NamedTuple):
    minus: int
    plus: int


def half_bounds(pres: Presentation, k: int) -> HalfBounds:
    """``(floor((p_k - p_1)/2), floor((p_1 + p_k - 1)/2))`` for generator ``k``."""
    if not 1 <= k <= pres.n:
        raise ValueError(f"generator index {k} out of range 1..{pres.n}")
    return HalfBounds(pres.minus[k - 1], pres.plus[k - 1])


@dataclass(frozen=True)
class Reindexing:
    """Generators split by the parity of ``p_k - p_1``.

    ``y_1..y_m`` are the even-difference generators (``q``), ``z_{m+1}..z_n``
    the odd ones (``r``).  Both lists are sorted, ties kept in original order.
    """

    m: int
    q: tuple[int, ...]
    r: tuple[int, ...]
    orig_of_q: tuple[int, ...]
    orig_of_r: tuple[int, ...]
    new_of_orig: tuple[tuple[str, int], ...]

    @property
    def n(self) -> int:
        return self.m + len(self.r)

    def orig(self, k: int) -> int:
        """Original generator index of the new index ``k`` (1-based, y then z)."""
        if 1 <= k <= self.m:
            return self.orig_of_q[k - 1]
        if self.m < k <= self.n:
            return self.orig_of_r[k - self.m - 1]
        raise ValueError(f"new index {k} out of range")

    def is_z(self, k: int) -> bool:
        return k > self.m


def reindex(pres: Presentation) -> Reindexing:
    p1 = pres.p1
    even = sorted((pk, i + 1) for i, pk in enumerate(pres.p) if (pk - p1) % 2 == 0)
    odd = sorted((pk, i + 1) for i, pk in enumerate(pres.p) if (pk - p1) % 2 == 1)
    m = len(even)
    new_of_orig: list[tuple[str, int]] = [("", 0)] * pres.n
    for k, (_, i) in enumerate(even, start=1):
        new_of_orig[i - 1] = ("y", k)
    for k, (_, i) in enumerate(odd, start=m + 1):
        new_of_orig[i - 1] = ("z", k)
    return Reindexing(
        m=m,
        q=tuple(pk for pk, _ in even),
        r=tuple(pk for pk, _ in odd),
        orig_of_q=tuple(i for _, i in even),
        orig_of_r=tuple(i for _, i in odd),
        new_of_orig=tuple(new_of_orig),
    )


class Letter(NamedTuple):
    gen: int
    sign: int

    def inverse(self) -> Letter:
        return Letter(self.gen, -self.sign)

    def __str__(self) -> str:
        return f"x{self.gen}" if self.sign > 0 else f"x{self.gen}^-1"


@dataclass(frozen=True)
class SyllableWord:
    """``x_{i_1}^{a_1} ... x_{i_t}^{a_t} * D^c`` with distinct adjacent generators."""

    syllables: tuple[tuple[int, int], ...] = ()
    delta_pow: int = 0

    def __post_init__(self) -> None:
        syl = tuple((int(g), int(a)) for g, a in self.syllables)
        object.__setattr__(self, "syllables", syl)
        for j, (g, a) in enumerate(syl):
            if g < 1:
                raise ValueError(f"bad generator index {g}")
            if a == 0:
                raise ValueError(f"zero exponent at syllable {j + 1}")
            if j and syl[j - 1][0] == g:
                raise ValueError(f"adjacent syllables {j} and {j + 1} share generator x{g}")

    def __len__(self) -> int:
        return len(self.syllables)

    def length(self, pres: Presentation) -> int:
        """Letter length, counting each ``D^{+-1}`` as ``p_1`` letters."""
        return sum(abs(a) for _, a in self.syllables) + abs(self.delta_pow) * pres.p1

    def inverse(self) -> SyllableWord:
        return SyllableWord(tuple((g, -a) for g, a in reversed(self.syllables)), -self.delta_pow)

    def letters(self, pres: Presentation) -> list[Letter]:
        """Spell out as letters, writing ``D^c`` as ``x_1^{c p_1}`` at the end."""
        out = [Letter(g, 1 if a > 0 else -1) for g, a in self.syllables for _ in range(abs(a))]
        sign = 1 if self.delta_pow > 0 else -1
        out.extend(Letter(1, sign) for _ in range(abs(self.delta_pow) * pres.p1))
        return out

    def __str__(self) -> str:
        return format_syllables(self.syllables, self.delta_pow)

    @classmethod
    def parse(cls, text: str) -> SyllableWord:
        """Parse a word already in syllable form (adjacent generators distinct)."""
        syl, c = parse_syllables(text)
        try:
            return cls(tuple(syl), c)
        except ValueError as exc:
            raise WordSyntaxError(str(exc)) from exc


def format_syllables(syllables: Iterable[tuple[int, int]], delta_pow: int = 0) -> str:
    parts = [f"x{g}" if a == 1 else f"x{g}^{a}" for g, a in syllables]
    if delta_pow:
        parts.append("D" if delta_pow == 1 else f"D^{delta_pow}")
    return " ".join(parts) if parts else "1"


_TOKEN = re.compile(r"^(?:x(\d+)|(D))(?:\^\(?(-?\d+)\)?)?$")


def parse_syllables(text: str) -> tuple[list[tuple[int, int]], int]:
    """Tokenize ``"x1^2 x3^-3 D^-3"`` into raw ``(gen, exp)`` pairs and a D-power.

    Pairs are returned unreduced; ``1`` or an empty string is the identity.
    """
    syl: list[tuple[int, int]] = []
    c = 0
    for tok in text.replace("*", " ").replace("·", " ").split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise WordSyntaxError(f"cannot parse token {tok!r}")
        e = int(m.group(3)) if m.group(3) is not None else 1
        if m.group(2):
            c += e
        else:
            g = int(m.group(1))
            if g < 1:
                raise WordSyntaxError(f"generator index must be >= 1 in {tok!r}")
            if e:
                syl.append((g, e))
    return syl, c


def parse_letters(pres: Presentation, text: str) -> list[Letter]:
    """Parse word text into letters, spelling ``D`` as ``x_1^{p_1}``."""
    syl, c = parse_syllables(text)
    for g, _ in syl:
        if g > pres.n:
            raise WordSyntaxError(f"generator x{g} out of range for {pres}")
    out = [Letter(g, 1 if a > 0 else -1) for g, a in syl for _ in range(abs(a))]
    sign = 1 if c > 0 else -1
    out.extend(Letter(1, sign) for _ in range(abs(c) * pres.p1))
    return out


def letters_of(pres: Presentation, word: SyllableWord | Sequence[Letter] | str) -> list[Letter]:
    if isinstance(word, str):
        return parse_letters(pres, word)
    if isinstance(word, SyllableWord):
        return word.letters(pres)
    return [Letter(*x) for x in word]


def free_reduce(letters: Sequence[Letter]) -> list[Letter]:
    """Cancel adjacent ``s s^-1`` pairs."""
    out: list[Letter] = []
    for x in letters:
        if out and out[-1].gen == x.gen and out[-1].sign == -x.sign:
            out.pop()
        else:
            out.append(Letter(*x))
    return out


def to_lambda(pres: Presentation, letters: SyllableWord | Sequence[Letter] | str) -> SyllableWord:
    """Reduced syllable form with every full power ``x_k^{+-p_k}`` pulled out as ``D^{+-1}``.

    A single left-to-right pass with a syllable stack: merging a letter into
    the top syllable either cancels it, or completes ``x_k^{+-p_k}``, which is
    moved into the central power.  Either way the next letter is compared with
    the new top, so the pass reaches the same fixpoint as alternating free
    reduction and extraction.
    """
    c = 0
    if isinstance(letters, SyllableWord):
        c = letters.delta_pow
        seq: Iterable[tuple[int, int]] = letters.syllables
    else:
        seq = ((x.gen, x.sign) for x in letters_of(pres, letters))
    stack: list[list[int]] = []
    p = pres.p
    for g, a in seq:
        if not 1 <= g <= pres.n:
            raise ValueError(f"generator x{g} out of range for {pres}")
        if stack and stack[-1][0] == g:
            a += stack.pop()[1]
        pk = p[g - 1]
        c += a // pk if a > 0 else -((-a) // pk)
        a = a % pk if a > 0 else -((-a) % pk)
        if a:
            stack.append([g, a])
    return SyllableWord(tuple((g, a) for g, a in stack), c)

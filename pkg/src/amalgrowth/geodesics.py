"""Element types, geodesic length and the spread procedure.

A modified normal form ``nu = ... * D^e`` with ``e < 0`` is shortened by
moving a ``D^-1`` into a syllable ``x^a`` with ``a`` in ``[p^- + 1, p^+]``,
turning it into ``x^(a - p)``.  Each such move saves ``2a + p_1 - p`` letters.
Choosing the moves with the largest total saving gives every geodesic of the
element when no ``D`` power is left over.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import Letter, Presentation, SyllableWord, letters_of
from .normal_forms import ModifiedNF, canonical_key, r_nu

__all__ = [
    "TypeTag",
    "PosNegProfile",
    "CESet",
    "classify",
    "pos_neg",
    "spread_weight",
    "spread",
    "geodesic_length",
    "is_geodesic",
    "enumerate_ce",
    "suitable_spread",
    "type2_by_inversion",
]


class TypeTag(enum.Enum):
    T1 = "type1"
    T2 = "type2"
    T3Plus = "type3p"
    T3MinusNotPlus = "type3m"
    T3Zero = "type30"

    @property
    def is_type3(self) -> bool:
        return self in (TypeTag.T3Plus, TypeTag.T3MinusNotPlus, TypeTag.T3Zero)


@dataclass(frozen=True)
class PosNegProfile:
    """Per generator, the largest positive exponent and the largest negated negative one."""

    pos: dict[int, int]
    neg: dict[int, int]


@dataclass(frozen=True)
class CESet:
    """Maximizing spread choices; ``choices`` is empty when ``complete`` is False."""

    choices: tuple[tuple[int, ...], ...]
    count: int
    complete: bool

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.choices)

    def __len__(self) -> int:
        return self.count


def classify(pres: Presentation, mnf: ModifiedNF) -> TypeTag:
    e = mnf.delta_pow
    if e > 0:
        return TypeTag.T1
    if e == 0:
        return TypeTag.T3Plus
    r = r_nu(pres, mnf).r_nu
    if r < -e:
        return TypeTag.T2
    if r == -e:
        return TypeTag.T3MinusNotPlus
    return TypeTag.T3Zero


def pos_neg(pres: Presentation, word: SyllableWord) -> PosNegProfile:
    if word.delta_pow != 0:
        raise ValueError("pos_neg needs a word without a D power")
    pos = {k: 0 for k in range(1, pres.n + 1)}
    neg = {k: 0 for k in range(1, pres.n + 1)}
    for g, a in word.syllables:
        if a > 0:
            pos[g] = max(pos[g], a)
        else:
            neg[g] = max(neg[g], -a)
    return PosNegProfile(pos, neg)


def spread_weight(pres: Presentation, gen: int, exp: int) -> int:
    """Letters saved by spreading one ``D^-1`` into ``x_gen^exp``."""
    return 2 * exp + pres.p1 - pres.p[gen - 1]


def spread(pres: Presentation, mnf: SyllableWord, positions: Sequence[int]) -> SyllableWord:
    """Apply ``a -> a - p`` at the given 1-based positions, one ``D`` each."""
    chosen = set(positions)
    syl = tuple(
        (g, a - pres.p[g - 1]) if j in chosen else (g, a)
        for j, (g, a) in enumerate(mnf.syllables, start=1)
    )
    return SyllableWord(syl, mnf.delta_pow + len(chosen))


def _ranked(pres: Presentation, mnf: ModifiedNF) -> list[tuple[int, int]]:
    """``(weight, position)`` for every position of R, heaviest first."""
    rs = r_nu(pres, mnf).r_set
    return sorted(
        ((spread_weight(pres, mnf.syllables[j - 1][0], mnf.syllables[j - 1][1]), j) for j in rs),
        key=lambda wj: (-wj[0], wj[1]),
    )


def geodesic_length(pres: Presentation, mnf: ModifiedNF) -> int:
    base = sum(abs(a) for _, a in mnf.syllables)
    e = mnf.delta_pow
    if e >= 0:
        return base + e * pres.p1
    delta = -e
    ranked = _ranked(pres, mnf)
    saving = sum(w for w, _ in ranked[:delta])
    return base + delta * pres.p1 - saving


def is_geodesic(pres: Presentation, word: SyllableWord | Sequence[Letter] | str) -> bool:
    if isinstance(word, SyllableWord):
        length = word.length(pres)
    else:
        word = letters_of(pres, word)
        length = len(word)
    return length == geodesic_length(pres, canonical_key(pres, word))


def _tie_split(pres: Presentation, mnf: ModifiedNF) -> tuple[list[int], list[int], int]:
    """Forced positions, tied positions, and how many tied ones to pick."""
    delta = -mnf.delta_pow
    ranked = _ranked(pres, mnf)
    cut = ranked[delta - 1][0]
    forced = sorted(j for w, j in ranked if w > cut)
    tied = sorted(j for w, j in ranked if w == cut)
    return forced, tied, delta - len(forced)


def enumerate_ce(pres: Presentation, mnf: ModifiedNF, cap: int | None = None) -> CESet:
    """All size-delta subsets of R with maximal total saving.

    With ``cap`` set and more choices than ``cap``, only the count is returned.
    """
    if classify(pres, mnf) is not TypeTag.T3Zero:
        raise ValueError("maximizing spread choices are defined for type 3^0 elements only")
    forced, tied, need = _tie_split(pres, mnf)
    count = math.comb(len(tied), need)
    if cap is not None and count > cap:
        return CESet((), count, False)
    choices = tuple(
        tuple(sorted(forced + list(extra))) for extra in itertools.combinations(tied, need)
    )
    return CESet(tuple(sorted(choices)), count, True)


def suitable_spread(pres: Presentation, mnf: ModifiedNF, cap: int | None = None) -> list[SyllableWord]:
    """The outputs of the spread procedure, sorted by their choice tuples."""
    e = mnf.delta_pow
    if e >= 0:
        return [SyllableWord(mnf.syllables, e)]
    rs = r_nu(pres, mnf)
    if rs.r_nu <= -e:
        return [spread(pres, mnf, sorted(rs.r_set))]
    ce = enumerate_ce(pres, mnf, cap)
    if not ce.complete:
        raise OverflowError(f"{ce.count} geodesics exceed the cap {cap}")
    return [spread(pres, mnf, choice) for choice in ce.choices]


def type2_by_inversion(pres: Presentation, mnf: ModifiedNF) -> SyllableWord:
    """Inverse of the modified normal form of the inverse element.

    For a type 2 element this is a geodesic with a negative D power; it must
    coincide with the spread output.
    """
    inv = canonical_key(pres, SyllableWord(mnf.syllables, mnf.delta_pow).inverse())
    return SyllableWord(inv.syllables, inv.delta_pow).inverse()

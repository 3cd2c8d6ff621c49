"""Garside and modified normal forms.

The Garside normal form writes an element as ``x_{i_1}^{al_1} ... D^d`` with
``1 <= al_j <= p_{i_j} - 1``.  The modified form trades every large exponent
``al_j > p^+`` for ``al_j - p`` and one extra ``D``, giving exponents in
``[-p^-, p^+]``.  The modified form is the canonical key for group elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Letter, Presentation, SyllableWord, letters_of, to_lambda

__all__ = [
    "GarsideNF",
    "ModifiedNF",
    "RNuData",
    "garside_nf",
    "modified_nf",
    "garside_of_modified",
    "r_nu",
    "canonical_key",
    "gnf_mul_letter",
]


@dataclass(frozen=True)
class GarsideNF(SyllableWord):
    """Syllables with exponents in ``[1, p - 1]`` times ``D^d``."""


@dataclass(frozen=True)
class ModifiedNF(SyllableWord):
    """Syllables with exponents in ``[-p^-, p^+] \\ {0}`` times ``D^(d + rho)``."""


@dataclass(frozen=True)
class RNuData:
    """Positions (1-based) whose exponent lies in ``[p^- + 1, p^+]``."""

    r_set: frozenset[int]
    r_nu: int


def _check_lambda(pres: Presentation, lam: SyllableWord) -> None:
    for j, (g, a) in enumerate(lam.syllables, start=1):
        if not 1 <= g <= pres.n:
            raise ValueError(f"generator x{g} out of range for {pres}")
        if not 0 < abs(a) < pres.p[g - 1]:
            raise ValueError(f"syllable {j} exponent {a} outside the reduced range for x{g}")


def garside_nf(pres: Presentation, lam: SyllableWord) -> GarsideNF:
    """Shift each negative exponent ``a`` to ``a + p``, absorbing one ``D^-1``."""
    _check_lambda(pres, lam)
    d = lam.delta_pow
    out = []
    for g, a in lam.syllables:
        if a < 0:
            a += pres.p[g - 1]
            d -= 1
        out.append((g, a))
    return GarsideNF(tuple(out), d)


def modified_nf(pres: Presentation, gnf: GarsideNF) -> ModifiedNF:
    """Replace ``al > p^+`` by ``al - p`` and count the replacements into the D-power."""
    rho = 0
    out = []
    for g, a in gnf.syllables:
        if a >= pres.plus[g - 1] + 1:
            a -= pres.p[g - 1]
            rho += 1
        out.append((g, a))
    return ModifiedNF(tuple(out), gnf.delta_pow + rho)


def garside_of_modified(pres: Presentation, mnf: ModifiedNF) -> GarsideNF:
    """Inverse of :func:`modified_nf`."""
    rho = 0
    out = []
    for g, a in mnf.syllables:
        if a < 0:
            a += pres.p[g - 1]
            rho += 1
        out.append((g, a))
    return GarsideNF(tuple(out), mnf.delta_pow - rho)


def r_nu(pres: Presentation, mnf: ModifiedNF) -> RNuData:
    r_set = frozenset(
        j
        for j, (g, a) in enumerate(mnf.syllables, start=1)
        if pres.minus[g - 1] + 1 <= a <= pres.plus[g - 1]
    )
    return RNuData(r_set, len(r_set))


def canonical_key(pres: Presentation, word: SyllableWord | Sequence[Letter] | str) -> ModifiedNF:
    """Modified normal form of the element spelled by ``word``."""
    if isinstance(word, SyllableWord):
        lam = to_lambda(pres, word)
    else:
        lam = to_lambda(pres, letters_of(pres, word))
    return modified_nf(pres, garside_nf(pres, lam))


def gnf_mul_letter(pres: Presentation, gnf: GarsideNF, letter: Letter) -> GarsideNF:
    """Right multiplication of a Garside normal form by one letter.

    Only the last syllable and the D-power can change.
    """
    g, s = letter
    pk = pres.p[g - 1]
    syl = gnf.syllables
    d = gnf.delta_pow
    if syl and syl[-1][0] == g:
        a = syl[-1][1] + s
        if a == pk:
            return GarsideNF(syl[:-1], d + 1)
        if a == 0:
            return GarsideNF(syl[:-1], d)
        return GarsideNF(syl[:-1] + ((g, a),), d)
    if s > 0:
        return GarsideNF(syl + ((g, 1),), d)
    return GarsideNF(syl + ((g, pk - 1),), d - 1)

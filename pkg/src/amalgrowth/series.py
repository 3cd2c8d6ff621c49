"""Closed-form spherical growth series.

Every canonical geodesic is a syllable word whose exponents stay inside
per-generator windows.  Word sets of that shape have rational generating
functions (:func:`omega`, :func:`omega_K`, :func:`omega_KK`).  The growth
series is the sum of these counts over the element classes:

* positive and negative D-power,
* no D-power with all exponents in the upper or the lower half-window,
* one term per case cell for the remaining elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .canonical import CaseId, case_grid, case_windows
from .core import Presentation, Reindexing, reindex
from .geodesics import TypeTag
from .ratfun import Poly, RationalFunction, _elem_sym_all, f_poly, g_denominator

__all__ = [
    "WindowSpec",
    "omega",
    "omega_K",
    "omega_KK",
    "series_gamma1",
    "series_gamma3",
    "series_gamma30",
    "case_term",
    "class_series",
    "growth_series",
]


@dataclass(frozen=True)
class WindowSpec:
    """Windows ``-A_k <= a <= B_k`` per generator, optionally with a distinguished ``K`` (1-based)."""

    windows: tuple[tuple[int, int], ...]
    K: int | None = None

    def __post_init__(self) -> None:
        w = tuple((int(a), int(b)) for a, b in self.windows)
        if any(a < 0 or b < 0 for a, b in w):
            raise ValueError("window bounds must be nonnegative")
        if self.K is not None and not 1 <= self.K <= len(w):
            raise ValueError(f"K={self.K} out of range")
        object.__setattr__(self, "windows", w)

    def fs(self) -> list[Poly]:
        return [f_poly(a, b) for a, b in self.windows]


def omega(ws: WindowSpec | Sequence[tuple[int, int]]) -> RationalFunction:
    """All syllable words with exponents in the windows."""
    fs = _spec(ws).fs()
    num = Poly.const(1)
    for f in fs:
        num = num * (f + 1)
    return RationalFunction(num, g_denominator(fs))


def omega_K(ws: WindowSpec) -> RationalFunction:
    """Words whose first syllable is not on generator ``K``."""
    fs = ws.fs()
    num = Poly.const(1)
    for i, f in enumerate(fs, start=1):
        if i != ws.K:
            num = num * (f + 1)
    return RationalFunction(num, g_denominator(fs))


def omega_KK(ws: WindowSpec) -> RationalFunction:
    """Nonempty words whose first and last syllables are not on generator ``K``."""
    fs = ws.fs()
    cut = list(fs)
    cut[ws.K - 1] = Poly()
    e = _elem_sym_all(cut)
    num = Poly()
    for i in range(1, len(fs)):
        num = num + e[i] * i
    return RationalFunction(num, g_denominator(fs))


def _spec(ws) -> WindowSpec:
    return ws if isinstance(ws, WindowSpec) else WindowSpec(tuple(ws))


def _geometric_delta(pres: Presentation) -> RationalFunction:
    """``t^{p_1} / (1 - t^{p_1})``: one term per positive power of D."""
    p1 = pres.p1
    return RationalFunction(Poly.monomial(p1), Poly.const(1) - Poly.monomial(p1))


def series_gamma1(pres: Presentation) -> RationalFunction:
    upper = tuple(zip(pres.minus, pres.plus))
    return omega(upper) * _geometric_delta(pres)


def series_gamma3(pres: Presentation) -> tuple[RationalFunction, RationalFunction]:
    """Counts of the upper-window words and of the words in both half-windows."""
    upper = tuple(zip(pres.minus, pres.plus))
    both = tuple(zip(pres.minus, pres.minus))
    return omega(upper), omega(both)


def case_term(pres: Presentation, reidx: Reindexing, case: CaseId) -> RationalFunction:
    cw = case_windows(pres, reidx, case)
    if case.parity == "odd":
        K = cw.boundary
        marks = RationalFunction(Poly.monomial(pres.p[K - 1]))
        return (
            marks
            * omega_K(WindowSpec(cw.first, K))
            * omega_KK(WindowSpec(cw.mid, K))
            * omega_K(WindowSpec(cw.last, K))
        )
    p1, p2, p3, p4 = (omega(w) for w in cw.phi)
    return (p1 - p2) - (p3 - p4)


def series_gamma30(pres: Presentation, reidx: Reindexing | None = None) -> RationalFunction:
    reidx = reidx or reindex(pres)
    total = RationalFunction(0)
    for case, _ in case_grid(pres, reidx):
        total = total + case_term(pres, reidx, case)
    return total


def class_series(pres: Presentation) -> dict[TypeTag, RationalFunction]:
    """Growth series restricted to each element type."""
    s1 = series_gamma1(pres)
    s3p, s3pm = series_gamma3(pres)
    return {
        TypeTag.T1: s1,
        TypeTag.T2: s1,
        TypeTag.T3Plus: s3p,
        TypeTag.T3MinusNotPlus: s3p - s3pm,
        TypeTag.T3Zero: series_gamma30(pres),
    }


def growth_series(pres: Presentation) -> RationalFunction:
    s3p, s3pm = series_gamma3(pres)
    p1 = pres.p1
    lead = s3p * RationalFunction(2, Poly.const(1) - Poly.monomial(p1))
    return lead - s3pm + series_gamma30(pres)

"""Brute-force ground truth from the Cayley graph.

Elements are identified by their Garside normal form: a reduced word in the
free product of the cyclic groups Z/p_k (exponents in ``[1, p_k - 1]``)
together with the power of the central element D.  Right multiplication by
a letter only touches the last syllable, so a breadth-first search needs
nothing but that local rule.  It uses none of the geodesic theory.

:func:`bfs_spheres` packs each element into one int64: the D-power in the
high part, the syllables as mixed-radix digits below it with the last
syllable least significant.  Whole spheres are expanded with numpy, one
D-power slice at a time.  Only the previous and current spheres are kept,
since a neighbour of the sphere of radius ``l`` lies at radius ``l - 1``,
``l`` or ``l + 1``.  The outermost sphere is counted but never stored.

:class:`CayleyBall` is the small dictionary-based variant used for geodesic
enumeration.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import Letter, Presentation, SyllableWord
from .geodesics import TypeTag
from .normal_forms import GarsideNF, ModifiedNF, garside_of_modified, modified_nf

__all__ = [
    "SphereTable",
    "OracleBudgetError",
    "bfs_spheres",
    "CayleyBall",
    "GeodesicSpellings",
    "all_geodesics",
]

_TYPE_ORDER = (
    TypeTag.T1,
    TypeTag.T2,
    TypeTag.T3Plus,
    TypeTag.T3MinusNotPlus,
    TypeTag.T3Zero,
)


@dataclass(frozen=True)
class SphereTable:
    pres: Presentation
    max_len: int
    counts: tuple[int, ...]
    per_type_counts: dict[TypeTag, tuple[int, ...]] | None = None
    complete: bool = True

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["length", "count"]
        if self.per_type_counts is not None:
            header += [t.value for t in _TYPE_ORDER]
        w.writerow(header)
        for l, c in enumerate(self.counts):
            row = [l, c]
            if self.per_type_counts is not None:
                row += [self.per_type_counts[t][l] for t in _TYPE_ORDER]
            w.writerow(row)
        return buf.getvalue()


class OracleBudgetError(MemoryError):
    """The next sphere would exceed the memory budget; ``partial`` holds what was done."""

    def __init__(self, message: str, partial: SphereTable):
        super().__init__(message)
        self.partial = partial


@dataclass
class _Codec:
    """Mixed-radix packing of Garside normal forms into int64 keys.

    ``key = (d + L) * C + code`` where ``code`` holds the syllables as digits
    (last syllable least significant) and ``C = base^L`` bounds every code of
    at most ``L`` syllables.  Sorted key arrays are therefore grouped by the
    D-power ``d``.
    """

    pres: Presentation
    L: int

    def __post_init__(self) -> None:
        p = self.pres.p
        offs = [0]
        for pk in p:
            offs.append(offs[-1] + pk - 1)
        self.base = offs[-1] + 1
        self.offset = np.array(offs[:-1], dtype=np.int64)
        gen_of = [0]
        exp_of = [0]
        for g, pk in enumerate(p, start=1):
            gen_of += [g] * (pk - 1)
            exp_of += list(range(1, pk))
        self.gen_of = np.array(gen_of, dtype=np.int64)
        self.exp_of = np.array(exp_of, dtype=np.int64)
        self.C = self.base ** max(self.L, 1)
        if self.C * (2 * self.L + 2) >= 2**63:
            raise OverflowError(f"{self.pres} at depth {self.L} does not fit 64-bit keys")

    def digit(self, g: int, a: int) -> int:
        return int(self.offset[g - 1]) + a

    def split(self, keys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return keys % self.C, keys // self.C - self.L

    def join(self, code, d):
        return (d + self.L) * self.C + code

    def d_slice(self, keys: np.ndarray, d: int) -> np.ndarray:
        lo, hi = np.searchsorted(keys, [self.join(0, d), self.join(0, d + 1)])
        return keys[lo:hi]

    def decode(self, key: int) -> GarsideNF:
        d, code = divmod(int(key), self.C)
        syl = []
        while code:
            code, dig = divmod(code, self.base)
            syl.append((int(self.gen_of[dig]), int(self.exp_of[dig])))
        return GarsideNF(tuple(reversed(syl)), d - self.L)

    def encode(self, gnf: GarsideNF) -> int:
        code = 0
        for g, a in gnf.syllables:
            code = code * self.base + self.digit(g, a)
        return self.join(code, gnf.delta_pow)


def _neighbours(codec: _Codec, keys: np.ndarray, g: int, s: int) -> tuple[np.ndarray, np.ndarray]:
    """Keys of ``h * x_g^s`` for every ``h`` in ``keys`` (same D-power), and the D shift of each."""
    code = keys % codec.C
    B = codec.base
    last = code % B
    same = codec.gen_of[last] == g
    e = codec.exp_of[last]
    pk = codec.pres.p[g - 1]
    out = keys.copy()
    shift = np.zeros(keys.shape, dtype=np.int8)
    if s > 0:
        drop = same & (e == pk - 1)
        bump = same & ~drop
        app = ~same
        out[drop] += code[drop] // B - code[drop] + codec.C
        shift[drop] = 1
        out[bump] += 1
        out[app] += code[app] * (B - 1) + codec.digit(g, 1)
    else:
        drop = same & (e == 1)
        bump = same & ~drop
        app = ~same
        out[drop] += code[drop] // B - code[drop]
        out[bump] -= 1
        out[app] += code[app] * (B - 1) + codec.digit(g, pk - 1) - codec.C
        shift[app] = -1
    return out, shift


def _in_sorted(values: np.ndarray, sorted_ref: np.ndarray) -> np.ndarray:
    if sorted_ref.size == 0 or values.size == 0:
        return np.zeros(values.shape, dtype=bool)
    idx = np.searchsorted(sorted_ref, values)
    idx[idx == sorted_ref.size] = 0
    return sorted_ref[idx] == values


def _type_counts(codec: _Codec, keys: np.ndarray) -> dict[TypeTag, int]:
    pres = codec.pres
    code, d = codec.split(keys)
    plus = np.array((0,) + pres.plus, dtype=np.int64)
    minus = np.array((0,) + pres.minus, dtype=np.int64)
    rho = np.zeros_like(code)
    rcount = np.zeros_like(code)
    while True:
        live = code > 0
        if not live.any():
            break
        dig = code % codec.base
        g = codec.gen_of[dig]
        a = codec.exp_of[dig]
        rho += live & (a >= plus[g] + 1)
        rcount += live & (a >= minus[g] + 1) & (a <= plus[g])
        code //= codec.base
    e = d + rho
    neg = e < 0
    return {
        TypeTag.T1: int((e > 0).sum()),
        TypeTag.T3Plus: int((e == 0).sum()),
        TypeTag.T2: int((neg & (rcount < -e)).sum()),
        TypeTag.T3MinusNotPlus: int((neg & (rcount == -e)).sum()),
        TypeTag.T3Zero: int((neg & (rcount > -e)).sum()),
    }


def _unique_sorted(chunks: list[np.ndarray]) -> np.ndarray:
    if not chunks:
        return np.empty(0, dtype=np.int64)
    a = np.concatenate(chunks)
    a.sort(kind="stable")
    if a.size:
        keep = np.empty(a.size, dtype=bool)
        keep[0] = True
        np.not_equal(a[1:], a[:-1], out=keep[1:])
        a = a[keep]
    return a


def _next_sphere(codec: _Codec, prev: np.ndarray, cur: np.ndarray, store: bool, with_types: bool,
                 budget_bytes: int):
    """Expand ``cur`` one step, one D-power slice at a time.

    A letter moves the D-power by at most one, so the slice ``d`` of the next
    sphere only needs the slices ``d - 1, d, d + 1`` of ``cur``.
    """
    letters = [(g, s) for g in range(1, codec.pres.n + 1) for s in (1, -1)]
    if cur.size == 0:
        return np.empty(0, dtype=np.int64), 0, {t: 0 for t in _TYPE_ORDER}
    d_lo = int(cur[0] // codec.C) - codec.L
    d_hi = int(cur[-1] // codec.C) - codec.L
    pending: dict[int, list[np.ndarray]] = {}
    stored: list[np.ndarray] = []
    total = 0
    tcounts = {t: 0 for t in _TYPE_ORDER}

    def finish(d: int) -> None:
        nonlocal total
        chunks = pending.pop(d, [])
        size = sum(c.size for c in chunks)
        if 16 * size > budget_bytes:
            raise MemoryError(f"slice D^{d} holds {size} candidates")
        new = _unique_sorted(chunks)
        del chunks
        new = new[~(_in_sorted(new, codec.d_slice(cur, d)) | _in_sorted(new, codec.d_slice(prev, d)))]
        total += int(new.size)
        if with_types:
            for t, c in _type_counts(codec, new).items():
                tcounts[t] += c
        if store:
            stored.append(new)

    for d in range(d_lo, d_hi + 1):
        src = codec.d_slice(cur, d)
        if src.size:
            for g, s in letters:
                nb, shift = _neighbours(codec, src, g, s)
                for delta in (-1, 0, 1):
                    part = nb[shift == delta]
                    if part.size:
                        pending.setdefault(d + delta, []).append(part)
                del nb, shift
        if d - 1 >= d_lo - 1:
            finish(d - 1)
    finish(d_hi)
    finish(d_hi + 1)
    out = np.concatenate(stored) if stored else np.empty(0, dtype=np.int64)
    return out, total, tcounts


def bfs_spheres(
    pres: Presentation,
    L: int,
    with_types: bool = False,
    budget_bytes: int = 4 << 30,
) -> SphereTable:
    """Sphere sizes ``#{g : |g| = l}`` for ``l = 0..L``.

    The last sphere is only counted, never stored as a whole.
    """
    if L < 0:
        raise ValueError("L must be nonnegative")
    codec = _Codec(pres, L)
    prev = np.empty(0, dtype=np.int64)
    cur = np.array([codec.join(0, 0)], dtype=np.int64)
    counts = [1]
    types: dict[TypeTag, list[int]] = {t: [0] for t in _TYPE_ORDER}
    types[TypeTag.T3Plus][0] = 1

    def table(complete: bool) -> SphereTable:
        pt = {t: tuple(v) for t, v in types.items()} if with_types else None
        return SphereTable(pres, len(counts) - 1, tuple(counts), pt, complete)

    for l in range(1, L + 1):
        if 8 * (prev.size + cur.size) * 3 > budget_bytes:
            raise OracleBudgetError(f"spheres at radius {l - 1} exceed the memory budget", table(False))
        try:
            nxt, size, tc = _next_sphere(codec, prev, cur, l < L, with_types, budget_bytes)
        except MemoryError as exc:
            raise OracleBudgetError(f"radius {l}: {exc}", table(False)) from exc
        counts.append(size)
        for t, c in tc.items():
            types[t].append(c)
        prev, cur = cur, nxt
    return table(True)


# ---------------------------------------------------------------------------
# dictionary-based ball for geodesic enumeration

_GKey = tuple  # (syllables, d)


def _mul(p: tuple[int, ...], key: _GKey, g: int, s: int) -> _GKey:
    syl, d = key
    pk = p[g - 1]
    if syl and syl[-1][0] == g:
        a = syl[-1][1] + s
        if a == pk:
            return syl[:-1], d + 1
        if a == 0:
            return syl[:-1], d
        return syl[:-1] + ((g, a),), d
    if s > 0:
        return syl + ((g, 1),), d
    return syl + ((g, pk - 1),), d - 1


class CayleyBall:
    """All elements within distance ``radius`` of the identity, with their distances."""

    def __init__(self, pres: Presentation, radius: int):
        self.pres = pres
        self.radius = radius
        self.letters = [Letter(g, s) for g in range(1, pres.n + 1) for s in (1, -1)]
        start: _GKey = ((), 0)
        self.dist: dict[_GKey, int] = {start: 0}
        frontier = [start]
        for r in range(1, radius + 1):
            nxt = []
            for key in frontier:
                for g, s in self.letters:
                    k2 = _mul(pres.p, key, g, s)
                    if k2 not in self.dist:
                        self.dist[k2] = r
                        nxt.append(k2)
            frontier = nxt

    def __len__(self) -> int:
        return len(self.dist)

    def elements(self, length: int | None = None):
        """Modified normal forms of the ball elements, optionally of one length."""
        for (syl, d), r in self.dist.items():
            if length is None or r == length:
                yield modified_nf(self.pres, GarsideNF(syl, d))

    def distance(self, mnf: ModifiedNF) -> int | None:
        gnf = garside_of_modified(self.pres, mnf)
        return self.dist.get((gnf.syllables, gnf.delta_pow))

    def spellings(self, mnf: ModifiedNF, cap: int | None = None) -> GeodesicSpellings:
        gnf = garside_of_modified(self.pres, mnf)
        target = (gnf.syllables, gnf.delta_pow)
        if target not in self.dist:
            raise ValueError(f"element outside the ball of radius {self.radius}")
        return _backtrack(self.pres, target, self.dist.get, cap)


def _backtrack(pres: Presentation, target: _GKey, dist, cap: int | None) -> GeodesicSpellings:
    """Walk the geodesic DAG from ``target`` back to the identity.

    ``dist`` maps a key to its word length (or None when unknown).  A letter
    ``s`` ends a geodesic of ``target`` exactly when ``target * s^-1`` is one
    step closer to the identity.
    """
    letters = [Letter(g, s) for g in range(1, pres.n + 1) for s in (1, -1)]
    found: list[tuple[Letter, ...]] = []
    truncated = False
    suffix: list[Letter] = []
    p = pres.p

    def back(key: _GKey, r: int) -> None:
        nonlocal truncated
        if truncated:
            return
        if r == 0:
            if cap is not None and len(found) >= cap:
                truncated = True
                return
            found.append(tuple(reversed(suffix)))
            return
        for g, s in letters:
            prev = _mul(p, key, g, -s)
            if dist(prev) == r - 1:
                suffix.append(Letter(g, s))
                back(prev, r - 1)
                suffix.pop()

    D = dist(target)
    back(target, D)
    return GeodesicSpellings(D, tuple(sorted(found)), truncated)


@dataclass(frozen=True)
class GeodesicSpellings:
    length: int
    words: tuple[tuple[Letter, ...], ...]
    truncated: bool

    def syllable_words(self) -> set[SyllableWord]:
        out = set()
        for w in self.words:
            syl: list[list[int]] = []
            for g, s in w:
                if syl and syl[-1][0] == g:
                    syl[-1][1] += s
                else:
                    syl.append([g, s])
            out.add(SyllableWord(tuple((g, a) for g, a in syl), 0))
        return out


def all_geodesics(
    pres: Presentation,
    mnf: ModifiedNF,
    cap: int | None = None,
    ball: CayleyBall | None = None,
    distance: Callable[[ModifiedNF], int] | None = None,
) -> GeodesicSpellings:
    """Every shortest spelling of the element, by search in the Cayley graph.

    By default distances come from a breadth-first ball grown until it
    contains the element.  Elements far from the identity can pass
    ``distance`` instead (for example the closed-form geodesic length); then
    only the geodesic DAG of the element is visited.
    """
    gnf = garside_of_modified(pres, mnf)
    target = (gnf.syllables, gnf.delta_pow)
    if distance is not None:
        memo: dict[_GKey, int] = {}

        def dist(key: _GKey) -> int:
            if key not in memo:
                memo[key] = distance(modified_nf(pres, GarsideNF(*key)))
            return memo[key]

        return _backtrack(pres, target, dist, cap)
    if ball is None:
        r = 0
        ball = CayleyBall(pres, 0)
        while target not in ball.dist:
            r += 1
            ball = CayleyBall(pres, r)
    return ball.spellings(mnf, cap)

"""One canonical geodesic per element.

For a type 3^0 element, the spread candidates are grouped into buckets by
generator and by how far their exponent sits below the top of its window
(the "level").  Candidates are taken level by level.  Within a level, the
odd-difference generators come before the even-difference ones, each group
in descending reindexed order.  Within one bucket, the leftmost positions
go first.  The bucket where the count runs out fixes the case ``(N, M)``.

:func:`gamma_membership` tests the syntactic window conditions that describe
the set of all canonical outputs; the growth series counts exactly that set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import Presentation, Reindexing, SyllableWord, reindex
from .geodesics import TypeTag, classify, spread
from .normal_forms import ModifiedNF, r_nu

__all__ = [
    "Buckets",
    "CaseId",
    "Block",
    "CaseWindows",
    "GammaMembership",
    "compute_buckets",
    "block_order",
    "case_grid",
    "locate_case",
    "canonical_spread",
    "case_windows",
    "gamma_membership",
]

Window = tuple[int, int]


@dataclass(frozen=True)
class Buckets:
    """Spread candidates by (new generator index, level).

    ``Y[(k, l)]``: positions with generator ``y_k`` and exponent ``q_k^+ - l``.
    ``Z[(k, l)]``: positions with generator ``z_k`` and exponent ``r_k^+ - l``.
    """

    Y: dict[tuple[int, int], tuple[int, ...]]
    Z: dict[tuple[int, int], tuple[int, ...]]
    y_count: tuple[int, ...]
    z_count: tuple[int, ...]

    def block(self, kind: str, k: int, level: int) -> tuple[int, ...]:
        return (self.Z if kind == "z" else self.Y).get((k, level), ())


@dataclass(frozen=True)
class CaseId:
    """Case ``(N, 2M+1)`` (``parity="odd"``) or ``(N, 2M+2)`` (``parity="even"``)."""

    N: int
    M: int
    parity: str
    regime: str

    @property
    def slot(self) -> int:
        return 2 * self.M + (1 if self.parity == "odd" else 2)

    def __str__(self) -> str:
        return f"case(N={self.N},slot={self.slot})"


@dataclass(frozen=True)
class Block:
    """One entry of the selection order: level ``N``, step ``M`` within the level."""

    N: int
    M: int
    kind: str
    k: int
    orig: int


def compute_buckets(pres: Presentation, reidx: Reindexing, mnf: ModifiedNF) -> Buckets:
    p1 = pres.p1
    Y: dict[tuple[int, int], list[int]] = {}
    Z: dict[tuple[int, int], list[int]] = {}
    y_count = [0] * max(p1 - 1, 0)
    z_count = [0] * p1
    rs = r_nu(pres, mnf).r_set
    for j, (g, a) in enumerate(mnf.syllables, start=1):
        if j not in rs:
            continue
        kind, k = reidx.new_of_orig[g - 1]
        level = pres.plus[g - 1] - a
        if kind == "y":
            Y.setdefault((k, level), []).append(j)
            y_count[level] += 1
        else:
            Z.setdefault((k, level), []).append(j)
            z_count[level] += 1
    return Buckets(
        {key: tuple(v) for key, v in Y.items()},
        {key: tuple(v) for key, v in Z.items()},
        tuple(y_count),
        tuple(z_count),
    )


@lru_cache(maxsize=64)
def block_order(pres: Presentation, reidx: Reindexing) -> tuple[Block, ...]:
    """Buckets in selection order: by level, z before y, descending index."""
    n, m, p1 = pres.n, reidx.m, pres.p1
    out = []
    for N in range(p1):
        for M in range(n):
            k = n - M
            kind = "z" if k > m else "y"
            if kind == "y" and N > p1 - 2:
                continue
            out.append(Block(N, M, kind, k, reidx.orig(k)))
    return tuple(out)


def _regime(reidx: Reindexing) -> str:
    return "mixed" if reidx.m < reidx.n else "all-even"


@lru_cache(maxsize=64)
def case_grid(pres: Presentation, reidx: Reindexing) -> tuple[tuple[CaseId, Block], ...]:
    """Every case cell: an odd cell per block, an even cell per block but the last."""
    blocks = block_order(pres, reidx)
    regime = _regime(reidx)
    out = []
    for i, b in enumerate(blocks):
        out.append((CaseId(b.N, b.M, "odd", regime), b))
        if i < len(blocks) - 1:
            out.append((CaseId(b.N, b.M, "even", regime), b))
    return tuple(out)


def _selection(pres: Presentation, reidx: Reindexing, buckets: Buckets) -> Iterator[tuple[Block, tuple[int, ...]]]:
    for b in block_order(pres, reidx):
        yield b, buckets.block(b.kind, b.k, b.N)


def locate_case(
    pres: Presentation, reidx: Reindexing, mnf: ModifiedNF
) -> tuple[CaseId, int | None]:
    """Case cell of a type 3^0 element, with the offset into the boundary bucket for odd cells."""
    if classify(pres, mnf) is not TypeTag.T3Zero:
        raise ValueError("case location applies to type 3^0 elements only")
    delta = -mnf.delta_pow
    before = 0
    regime = _regime(reidx)
    for b, positions in _selection(pres, reidx, compute_buckets(pres, reidx, mnf)):
        size = len(positions)
        if before < delta < before + size:
            return CaseId(b.N, b.M, "odd", regime), delta - before
        if size and delta == before + size:
            return CaseId(b.N, b.M, "even", regime), None
        before += size
    raise AssertionError("delta not bracketed by the bucket totals")


def canonical_spread(pres: Presentation, reidx: Reindexing | None, mnf: ModifiedNF) -> SyllableWord:
    """The canonical geodesic of the element with modified normal form ``mnf``."""
    reidx = reidx or reindex(pres)
    tag = classify(pres, mnf)
    if tag in (TypeTag.T1, TypeTag.T3Plus):
        return SyllableWord(mnf.syllables, mnf.delta_pow)
    if tag in (TypeTag.T2, TypeTag.T3MinusNotPlus):
        return spread(pres, mnf, sorted(r_nu(pres, mnf).r_set))
    delta = -mnf.delta_pow
    chosen: list[int] = []
    for _, positions in _selection(pres, reidx, compute_buckets(pres, reidx, mnf)):
        chosen.extend(positions[: delta - len(chosen)])
        if len(chosen) == delta:
            break
    return spread(pres, mnf, chosen)


# ---------------------------------------------------------------------------
# window tables


@dataclass(frozen=True)
class CaseWindows:
    """Exponent windows ``(A, B)`` (meaning ``-A <= a <= B``) per original generator.

    Odd cells: ``first``/``mid``/``last`` are the three segments around the
    two marked syllables of the boundary generator.  Even cells: ``phi[0..3]``
    are the four inclusion-exclusion window sets.
    """

    case: CaseId
    boundary: int
    first: tuple[Window, ...] = ()
    mid: tuple[Window, ...] = ()
    last: tuple[Window, ...] = ()
    phi: tuple[tuple[Window, ...], ...] = ()
    chosen_exp: int = 0
    unchosen_exp: int = 0


@lru_cache(maxsize=1024)
def case_windows(pres: Presentation, reidx: Reindexing, case: CaseId) -> CaseWindows:
    n, N = pres.n, case.N
    b_new = n - case.M
    b = reidx.orig(b_new)
    lo = list(pres.minus)
    hi = list(pres.plus)
    chosen = [False] * n
    for k_new in range(b_new + 1, n + 1):
        chosen[reidx.orig(k_new) - 1] = True

    def base(i: int) -> Window:
        if chosen[i]:
            return (lo[i] + N + 1, hi[i] - N - 1)
        return (lo[i] + N, hi[i] - N)

    common = [base(i) for i in range(n)]
    bi = b - 1

    def with_b(w: Window, table: list[Window] = common) -> tuple[Window, ...]:
        t = list(table)
        t[bi] = w
        return tuple(t)

    chosen_exp = -(lo[bi] + N + 1)
    unchosen_exp = hi[bi] - N
    if case.parity == "odd":
        return CaseWindows(
            case,
            b,
            first=with_b((lo[bi] + N, hi[bi] - N - 1)),
            mid=with_b((lo[bi] + N + 1, hi[bi] - N - 1)),
            last=with_b((lo[bi] + N, hi[bi] - N)),
            chosen_exp=chosen_exp,
            unchosen_exp=unchosen_exp,
        )
    chosen[bi] = True
    phi1 = [base(i) for i in range(n)]
    phi3 = [(base(i)[0], lo[i]) for i in range(n)]
    return CaseWindows(
        case,
        b,
        phi=(
            tuple(phi1),
            with_b((lo[bi] + N, hi[bi] - N - 1), phi1),
            tuple(phi3),
            with_b((lo[bi] + N, lo[bi]), phi3),
        ),
        chosen_exp=chosen_exp,
        unchosen_exp=unchosen_exp,
    )


def _fits(syllables, windows: tuple[Window, ...]) -> bool:
    for g, a in syllables:
        A, B = windows[g - 1]
        if not -A <= a <= B:
            return False
    return True


def _member_odd(word: SyllableWord, cw: CaseWindows) -> bool:
    syl = word.syllables
    b = cw.boundary
    try:
        i1 = next(j for j, (g, a) in enumerate(syl) if g == b and a == cw.chosen_exp)
        i2 = next(j for j in range(i1 + 1, len(syl)) if syl[j] == (b, cw.unchosen_exp))
    except StopIteration:
        return False
    return (
        _fits(syl[:i1], cw.first)
        and _fits(syl[i1 + 1 : i2], cw.mid)
        and _fits(syl[i2 + 1 :], cw.last)
    )


def _member_even(pres: Presentation, word: SyllableWord, cw: CaseWindows) -> bool:
    syl = word.syllables
    if not _fits(syl, cw.phi[0]):
        return False
    if (cw.boundary, cw.chosen_exp) not in syl:
        return False
    # at least one syllable that could still absorb a D^-1
    return any(a > pres.minus[g - 1] for g, a in syl)


@lru_cache(maxsize=64)
def _cell_table(pres: Presentation, reidx: Reindexing) -> tuple[tuple[CaseId, CaseWindows], ...]:
    return tuple((case, case_windows(pres, reidx, case)) for case, _ in case_grid(pres, reidx))


@dataclass(frozen=True)
class GammaMembership:
    gamma1: bool
    gamma2: bool
    gamma3plus: bool
    gamma3minus: bool
    gamma30: tuple[CaseId, ...]

    @property
    def classes(self) -> list[str]:
        out = []
        if self.gamma1:
            out.append("gamma1")
        if self.gamma2:
            out.append("gamma2")
        if self.gamma3plus or self.gamma3minus:
            out.append("gamma3")
        out.extend(f"gamma30:{c}" for c in self.gamma30)
        return out


def gamma_membership(pres: Presentation, reidx: Reindexing | None, word: SyllableWord) -> GammaMembership:
    reidx = reidx or reindex(pres)
    syl, c = word.syllables, word.delta_pow
    if any(not 1 <= g <= pres.n for g, _ in syl):
        raise ValueError(f"generator out of range for {pres}")
    upper = tuple(zip(pres.minus, pres.plus))
    lower = tuple(zip(pres.plus, pres.minus))
    g1 = c > 0 and _fits(syl, upper)
    g2 = c < 0 and _fits(syl, lower)
    g3p = c == 0 and _fits(syl, upper)
    g3m = c == 0 and _fits(syl, lower)
    cases: list[CaseId] = []
    if c == 0:
        present = set(syl)
        for case, cw in _cell_table(pres, reidx):
            # every cell needs the marked syllable of its boundary generator
            if (cw.boundary, cw.chosen_exp) not in present:
                continue
            ok = _member_odd(word, cw) if case.parity == "odd" else _member_even(pres, word, cw)
            if ok:
                cases.append(case)
    return GammaMembership(g1, g2, g3p, g3m, tuple(cases))

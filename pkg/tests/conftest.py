from __future__ import annotations

import random

import pytest
import sympy
from hypothesis import strategies as st

from amalgrowth.core import Letter, Presentation, SyllableWord
from amalgrowth.ratfun import Poly

_T = sympy.Symbol("t")


def poly_from_text(text: str) -> Poly:
    """Integer polynomial from sympy-syntax text in ``t``."""
    coeffs = sympy.Poly(sympy.sympify(text), _T).all_coeffs()
    return Poly(int(c) for c in reversed(coeffs))


def letters_from_ints(pairs) -> list[Letter]:
    return [Letter(g, s) for g, s in pairs]


def random_letters(rng: random.Random, pres: Presentation, length: int) -> list[Letter]:
    return [Letter(rng.randint(1, pres.n), rng.choice((1, -1))) for _ in range(length)]


# The worked (3,6,7) examples are printed in the reindexed alphabet
# y_1 = x_1, y_2 = x_3, z_3 = x_2.
YZ_TO_X = {"y1": 1, "y2": 3, "z3": 2}


def yz_word(text: str, delta_pow: int = 0) -> SyllableWord:
    """Syllable word from ``"z3^2 y2^4 y1 ..."`` in the reindexed alphabet of (3,6,7)."""
    syl = []
    for tok in text.split():
        name, _, exp = tok.partition("^")
        syl.append((YZ_TO_X[name], int(exp) if exp else 1))
    return SyllableWord(tuple(syl), delta_pow)


@st.composite
def presentations(draw, max_n: int = 4, max_p: int = 7):
    n = draw(st.integers(2, max_n))
    p = sorted(draw(st.lists(st.integers(2, max_p), min_size=n, max_size=n)))
    return Presentation(tuple(p))


@st.composite
def pres_and_letters(draw, max_n: int = 4, max_p: int = 7, max_len: int = 30):
    pres = draw(presentations(max_n, max_p))
    word = draw(
        st.lists(
            st.tuples(st.integers(1, pres.n), st.sampled_from((1, -1))),
            max_size=max_len,
        )
    )
    return pres, letters_from_ints(word)


@pytest.fixture
def p367() -> Presentation:
    return Presentation((3, 6, 7))


def random_rewrite(rng: random.Random, pres: Presentation, w: list[Letter]) -> list[Letter]:
    """Apply one elementary rewrite that preserves the group element.

    Insert or delete a pair ``s s^-1``, or swap an occurrence of
    ``x_j^{+-p_j}`` for ``x_k^{+-p_k}``, or insert ``x_j^{p_j} x_k^{-p_k}``.
    """
    w = list(w)
    move = rng.randrange(4)
    if move == 0:
        i = rng.randint(0, len(w))
        s = Letter(rng.randint(1, pres.n), rng.choice((1, -1)))
        return w[:i] + [s, s.inverse()] + w[i:]
    if move == 1:
        pairs = [i for i in range(len(w) - 1) if w[i].gen == w[i + 1].gen and w[i].sign == -w[i + 1].sign]
        if pairs:
            i = rng.choice(pairs)
            return w[:i] + w[i + 2 :]
        return w
    if move == 2:
        spots = []
        for i in range(len(w)):
            pj = pres.p[w[i].gen - 1]
            run = w[i : i + pj]
            if len(run) == pj and all(x == w[i] for x in run):
                spots.append(i)
        if spots:
            i = rng.choice(spots)
            g, s = w[i]
            k = rng.randint(1, pres.n)
            return w[:i] + [Letter(k, s)] * pres.p[k - 1] + w[i + pres.p[g - 1] :]
        return w
    i = rng.randint(0, len(w))
    j, k = rng.randint(1, pres.n), rng.randint(1, pres.n)
    return w[:i] + [Letter(j, 1)] * pres.p[j - 1] + [Letter(k, -1)] * pres.p[k - 1] + w[i:]


def count_window_words(windows, L: int, K: int | None = None, both_ends: bool = False) -> list[int]:
    """Brute-force counts by length of syllable words with exponents in ``[-A_k, B_k]``.

    With ``K`` set, the first syllable avoids generator ``K``; with
    ``both_ends`` the word must also be nonempty and end off ``K``.
    """
    counts = [0] * (L + 1)
    n = len(windows)

    def rec(last: int, first: int, length: int) -> None:
        if both_ends:
            if last and last != K:
                counts[length] += 1
        else:
            counts[length] += 1
        for g in range(1, n + 1):
            if g == last or (not last and K is not None and g == K):
                continue
            A, B = windows[g - 1]
            for a in range(-A, B + 1):
                if a and length + abs(a) <= L:
                    rec(g, first or g, length + abs(a))

    rec(0, 0, 0)
    return counts


# one PASS/FAIL line per acceptance criterion at the end of the run

_ACCEPTANCE: list[tuple[int, str, str, float, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or rep.when != "call":
        return
    number, title = mark.args
    detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
    _ACCEPTANCE.append((number, title, "PASS" if rep.passed else "FAIL", rep.duration, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, secs, detail in sorted(_ACCEPTANCE):
        line = f"{status} [{number}] {title} ({secs:.1f}s)"
        terminalreporter.write_line(line + (f": {detail}" if detail else ""))

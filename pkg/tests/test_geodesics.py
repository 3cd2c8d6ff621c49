from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amalgrowth.core import Letter, Presentation, SyllableWord
from amalgrowth.geodesics import (
    TypeTag,
    classify,
    enumerate_ce,
    geodesic_length,
    is_geodesic,
    pos_neg,
    suitable_spread,
    type2_by_inversion,
)
from amalgrowth.normal_forms import GarsideNF, ModifiedNF, canonical_key, modified_nf
from amalgrowth.oracle import CayleyBall

from conftest import pres_and_letters, presentations
from worked_examples import NU_TEXT, SPREAD_CHOICES, SPREAD_OUTPUTS

P367 = Presentation((3, 6, 7))


def nu(delta: int) -> ModifiedNF:
    w = SyllableWord.parse(NU_TEXT)
    return ModifiedNF(w.syllables, -delta)


def type3_words(pres: Presentation, max_syllables: int):
    """Words without a D power, exponents in ``[-p^+, p^+]``."""
    choices = [(g, a) for g in range(1, pres.n + 1) for a in range(-pres.plus[g - 1], pres.plus[g - 1] + 1) if a]
    out = [SyllableWord()]
    frontier = [()]
    for _ in range(max_syllables):
        nxt = []
        for syl in frontier:
            for g, a in choices:
                if not syl or syl[-1][0] != g:
                    nxt.append(syl + ((g, a),))
        out.extend(SyllableWord(s) for s in nxt)
        frontier = nxt
    return out


def satisfies_necessary(pres: Presentation, word: SyllableWord, strict: bool = False) -> bool:
    prof = pos_neg(pres, word)
    for k, kk in itertools.product(range(1, pres.n + 1), repeat=2):
        lhs, rhs = 2 * (prof.pos[k] + prof.neg[kk]), pres.p[k - 1] + pres.p[kk - 1]
        if lhs > rhs or (strict and lhs == rhs):
            return False
    return True


class TestClassify:
    def test_examples(self):
        assert classify(P367, ModifiedNF()) is TypeTag.T3Plus
        assert classify(P367, nu(4)) is TypeTag.T3Zero
        assert classify(P367, ModifiedNF((), 2)) is TypeTag.T1

    def test_boundaries(self):
        # r = 9 for the worked element
        assert classify(P367, nu(9)) is TypeTag.T3MinusNotPlus
        assert classify(P367, nu(10)) is TypeTag.T2
        assert classify(P367, nu(1)) is TypeTag.T3Zero


class TestPosNeg:
    def test_examples(self):
        pres = Presentation((3, 7))
        prof = pos_neg(pres, SyllableWord(((1, 2), (2, -3))))
        assert prof.pos == {1: 2, 2: 0} and prof.neg == {1: 0, 2: 3}
        prof = pos_neg(pres, SyllableWord(((2, 3), (1, 1), (2, -2))))
        assert prof.pos == {1: 1, 2: 3} and prof.neg == {1: 0, 2: 2}
        prof = pos_neg(pres, SyllableWord())
        assert set(prof.pos.values()) == set(prof.neg.values()) == {0}

    def test_rejects_d_power(self):
        with pytest.raises(ValueError):
            pos_neg(P367, SyllableWord((), 1))


class TestLengthAndGeodesy:
    def test_length_examples(self):
        assert geodesic_length(P367, ModifiedNF()) == 0
        assert geodesic_length(P367, ModifiedNF((), -1)) == 3
        assert geodesic_length(P367, nu(4)) == 26

    def test_is_geodesic_examples(self):
        assert is_geodesic(P367, [Letter(1, 1)] * 3)
        assert not is_geodesic(P367, [Letter(1, 1), Letter(1, -1)])
        first = sorted(SPREAD_OUTPUTS)[0]
        assert is_geodesic(P367, SyllableWord.parse(first))
        assert is_geodesic(P367, first)


class TestSpread:
    def test_worked_choices(self):
        ce = enumerate_ce(P367, nu(4))
        assert set(ce.choices) == SPREAD_CHOICES
        assert len(ce) == 6 and ce.complete

    def test_worked_outputs(self):
        outs = suitable_spread(P367, nu(4))
        assert {str(w) for w in outs} == SPREAD_OUTPUTS
        assert all(w.delta_pow == 0 and w.length(P367) == 26 for w in outs)

    def test_two_ties(self):
        assert len(enumerate_ce(P367, nu(1))) == 2

    def test_single_output(self):
        assert len(suitable_spread(P367, nu(2))) == 1

    def test_four_outputs_when_three_of_four_tie(self):
        assert len(suitable_spread(P367, nu(5))) == 4

    def test_case_one(self):
        key = canonical_key(P367, "x1 x2^2 D^2")
        assert [(w.syllables, w.delta_pow) for w in suitable_spread(P367, key)] == [
            (key.syllables, key.delta_pow)
        ]

    def test_distinct_weights_give_one_choice(self):
        pres = Presentation((2, 3, 5))
        # spread weights 2*1+2-2=2, 2*2+2-5=1 on positions 1 and 2
        mnf = ModifiedNF(((1, 1), (3, 2)), -1)
        assert enumerate_ce(pres, mnf).choices == ((1,),)

    def test_cap(self):
        ce = enumerate_ce(P367, nu(4), cap=3)
        assert not ce.complete and ce.count == 6 and ce.choices == ()
        with pytest.raises(OverflowError):
            suitable_spread(P367, nu(4), cap=3)

    def test_requires_type30(self):
        with pytest.raises(ValueError):
            enumerate_ce(P367, nu(9))


def _equality_on_occurring(pres: Presentation, word: SyllableWord) -> bool:
    prof = pos_neg(pres, word)
    occurring = {g for g, _ in word.syllables}
    return any(
        2 * (prof.pos[k] + prof.neg[kk]) == pres.p[k - 1] + pres.p[kk - 1]
        for k in occurring
        for kk in occurring
    )


@pytest.mark.parametrize("p", [(2, 3), (2, 2, 2), (3, 3, 4), (2, 3, 4, 5)])
def test_ball_consistency(p):
    pres = Presentation(p)
    ball = CayleyBall(pres, 6)
    for (syl, d), r in ball.dist.items():
        mnf = modified_nf(pres, GarsideNF(syl, d))
        assert geodesic_length(pres, mnf) == r
        outs = suitable_spread(pres, mnf)
        assert outs and all(w.length(pres) == r for w in outs)
        assert all(canonical_key(pres, w) == mnf for w in outs)
        tag = classify(pres, mnf)
        if tag is TypeTag.T2:
            inv = type2_by_inversion(pres, mnf)
            assert [(w.syllables, w.delta_pow) for w in outs] == [(inv.syllables, inv.delta_pow)]
        if tag.is_type3:
            for w in outs:
                assert satisfies_necessary(pres, w)
                if satisfies_necessary(pres, w, strict=True):
                    assert len(outs) == 1
                if _equality_on_occurring(pres, w):
                    assert len(outs) >= 2


@given(presentations(max_n=3, max_p=6), st.data())
@settings(max_examples=40, deadline=None)
def test_type3_necessary_and_sufficient(pres, data):
    words = type3_words(pres, 3)
    for w in data.draw(st.lists(st.sampled_from(words), min_size=1, max_size=40)):
        assert is_geodesic(pres, w) == satisfies_necessary(pres, w)


@given(pres_and_letters(max_n=3, max_p=6, max_len=14))
@settings(deadline=None)
def test_spread_outputs_geodesic(pl):
    pres, w = pl
    mnf = canonical_key(pres, w)
    outs = suitable_spread(pres, mnf, cap=200)
    lengths = {o.length(pres) for o in outs}
    assert lengths == {geodesic_length(pres, mnf)}
    assert geodesic_length(pres, mnf) <= len(w)

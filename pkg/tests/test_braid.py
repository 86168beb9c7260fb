import random

import pytest

from taucalc.braid import (
    BraidWord,
    bennequin_genus,
    closure_components,
    closure_permutation,
    mirror_braid,
    parse_braid,
    slice_bennequin_lower,
    tau_positive_braid,
)
from taucalc.errors import (
    BraidSyntaxError,
    LetterRangeError,
    NotAKnotError,
    NotPositiveError,
)

from .util import random_braid_word, random_knot_word, strand_trace_cycles


class TestParse:
    def test_basic(self):
        assert parse_braid("2: 1 1 1") == BraidWord(2, (1, 1, 1))
        assert parse_braid("3: 1 -2 1 -2") == BraidWord(3, (1, -2, 1, -2))

    def test_empty_word(self):
        assert parse_braid("1:") == BraidWord(1, ())
        assert parse_braid("4:  ") == BraidWord(4, ())

    def test_letter_out_of_range(self):
        with pytest.raises(LetterRangeError):
            parse_braid("2: 3")
        with pytest.raises(LetterRangeError):
            parse_braid("3: 1 -3")
        with pytest.raises(LetterRangeError):
            parse_braid("2: 0")

    def test_malformed(self):
        with pytest.raises(BraidSyntaxError):
            parse_braid("no header")
        with pytest.raises(BraidSyntaxError):
            parse_braid("2: 1 x 1")


class TestClosure:
    def test_trefoil_single_cycle(self):
        p = closure_permutation(BraidWord(2, (1, 1, 1)))
        assert p.images == (1, 0)
        assert closure_components(BraidWord(2, (1, 1, 1))) == 1

    def test_two_letter_three_cycle(self):
        p = closure_permutation(BraidWord(3, (1, 2)))
        assert p.cycle_count() == 1
        assert set(p.cycles()[0]) == {0, 1, 2}

    def test_empty_word_identity(self):
        assert closure_permutation(BraidWord(3, ())).images == (0, 1, 2)
        assert closure_components(BraidWord(3, ())) == 3

    def test_multi_component_closures(self):
        # sigma_1^2 in B_3: strands 1 and 2 each close up separately, plus
        # the untouched third strand.
        assert closure_components(BraidWord(3, (1, 1))) == 3
        assert closure_components(BraidWord(2, (1, 1))) == 2

    def test_sign_ignored(self):
        rng = random.Random(1)
        for _ in range(50):
            b = random_braid_word(rng)
            flipped = BraidWord(b.strands, tuple(-l for l in b.letters))
            assert closure_permutation(b) == closure_permutation(flipped)

    def test_strand_tracing_oracle(self):
        rng = random.Random(2)
        for _ in range(300):
            b = random_braid_word(rng)
            assert closure_components(b) == strand_trace_cycles(b)


class TestGenus:
    def test_trefoil(self):
        assert bennequin_genus(BraidWord(2, (1, 1, 1))) == 1

    def test_three_strand_length_ten(self):
        b = BraidWord(3, (1, 1, 1, 2, 1, 1, 1, 2, 2, 2))
        assert closure_components(b) == 1
        assert bennequin_genus(b) == 4

    def test_unknot(self):
        assert bennequin_genus(BraidWord(1, ())) == 0

    def test_rejects_links(self):
        with pytest.raises(NotAKnotError):
            bennequin_genus(BraidWord(3, ()))


class TestTauPositive:
    def test_trefoil(self):
        assert tau_positive_braid(BraidWord(2, (1, 1, 1))) == 1

    def test_length_ten(self):
        assert tau_positive_braid(BraidWord(3, (1, 1, 1, 2, 1, 1, 1, 2, 2, 2))) == 4

    def test_rejects_negative_letters(self):
        with pytest.raises(NotPositiveError):
            tau_positive_braid(BraidWord(2, (1, -1, 1)))

    def test_agrees_with_slice_bennequin(self):
        rng = random.Random(3)
        for _ in range(100):
            b = random_knot_word(rng)
            if not b.is_positive:
                b = BraidWord(b.strands, tuple(abs(l) for l in b.letters))
            assert tau_positive_braid(b) == slice_bennequin_lower(b)


class TestSliceBennequin:
    def test_nine_plus_one_minus(self):
        b = BraidWord(3, (1, 1, 1, -2, 1, 1, 1, 2, 2, 2))
        assert closure_components(b) == 1
        assert slice_bennequin_lower(b) == 3

    def test_nine_plus_two_minus(self):
        b = BraidWord(4, (1, 1, 2, 1, 1, 2, 3, 2, -1, 3, -3))
        assert closure_components(b) == 1
        assert slice_bennequin_lower(b) == 2

    def test_negative_bound(self):
        assert slice_bennequin_lower(BraidWord(3, (1, -2, 1, -2))) == -1

    def test_rejects_links(self):
        with pytest.raises(NotAKnotError):
            slice_bennequin_lower(BraidWord(3, (1,)))


class TestMirror:
    def test_letterwise_negation(self):
        assert mirror_braid(BraidWord(2, (1, 1, 1))).letters == (-1, -1, -1)
        assert mirror_braid(BraidWord(1, ())).letters == ()

    def test_involution_and_counts(self):
        rng = random.Random(4)
        for _ in range(100):
            b = random_braid_word(rng)
            m = mirror_braid(b)
            assert mirror_braid(m) == b
            assert m.strands == b.strands
            assert (m.k_plus, m.k_minus) == (b.k_minus, b.k_plus)
            assert m.writhe == -b.writhe


def test_parity_of_knot_closures():
    rng = random.Random(5)
    for _ in range(300):
        b = random_knot_word(rng)
        assert (b.length - b.strands + 1) % 2 == 0
        assert (b.writhe - b.strands + 1) % 2 == 0
        assert slice_bennequin_lower(b) <= bennequin_genus(b)

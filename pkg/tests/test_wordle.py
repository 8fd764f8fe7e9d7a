import numpy as np
import pytest

from cogsim import filter_dictionary, score_guess
from cogsim.errors import InvalidWord
from cogsim.wordle import (
    ALL_GREEN_CODE,
    GREEN,
    GREY,
    YELLOW,
    code_to_feedback,
    feedback_code,
    feedback_to_str,
    pattern_matrix,
    score_against_all,
    str_to_feedback,
)
from conftest import REAL_WORDS

from collections import Counter


def oracle_score(guess: str, target: str) -> tuple:
    """Brute-force reference: greens first, then per-letter yellow quotas.

    Deliberately structured differently from the production scorer: the
    yellow quota for letter c is count(c in target) minus the greens on c,
    spent left to right across the guess.
    """
    greens = [guess[i] == target[i] for i in range(5)]
    quota = Counter(target)
    for i in range(5):
        if greens[i]:
            quota[guess[i]] -= 1
    colors = []
    for i in range(5):
        if greens[i]:
            colors.append(GREEN)
        elif quota[guess[i]] > 0:
            colors.append(YELLOW)
            quota[guess[i]] -= 1
        else:
            colors.append(GREY)
    return tuple(colors)


def random_word(rng, letters="abcde"):
    # Narrow alphabet to force duplicate-letter cases.
    return "".join(rng.choice(list(letters), size=5))


class TestScoreGuess:
    def test_identity_is_all_green(self):
        assert score_guess("crane", "crane") == (GREEN,) * 5

    def test_duplicate_letter_consumption(self):
        # Greens at 2 and 5 consume two of the target's three e's; the
        # position-4 e takes the last one as yellow; m and l miss.
        assert score_guess("melee", "eerie") == (GREY, GREEN, GREY, YELLOW, GREEN)

    def test_repeated_guess_letter_single_target_occurrence(self):
        # Oracle-derived: 'train' has its only 'a' at position 3, which goes
        # green, leaving no 'a' for the other four guess positions.
        assert oracle_score("aaaaa", "train") == (GREY, GREY, GREEN, GREY, GREY)
        assert score_guess("aaaaa", "train") == (GREY, GREY, GREEN, GREY, GREY)

    def test_all_green_iff_equal(self):
        rng = np.random.default_rng(7)
        for _ in range(300):
            g, t = random_word(rng), random_word(rng)
            fb = score_guess(g, t)
            assert (fb == (GREEN,) * 5) == (g == t)

    def test_matches_oracle_on_random_pairs(self):
        rng = np.random.default_rng(11)
        for _ in range(2000):
            g, t = random_word(rng), random_word(rng)
            assert score_guess(g, t) == oracle_score(g, t), (g, t)

    @pytest.mark.parametrize("bad", ["abcd", "abcdef", "abcd1", "ABCDE", "abc e"])
    def test_rejects_malformed_words(self, bad):
        with pytest.raises(InvalidWord):
            score_guess(bad, "train")
        with pytest.raises(InvalidWord):
            score_guess("train", bad)


class TestFeedbackCodes:
    def test_round_trip(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            fb = tuple(rng.integers(0, 3, size=5).tolist())
            assert code_to_feedback(feedback_code(fb)) == fb

    def test_all_green_code(self):
        assert feedback_code((GREEN,) * 5) == ALL_GREEN_CODE == 242

    def test_string_round_trip(self):
        fb = (GREY, GREEN, GREY, YELLOW, GREEN)
        assert str_to_feedback(feedback_to_str(fb)) == fb
        assert str_to_feedback("-g-yg") == fb


class TestBatchScorer:
    def test_matches_scalar(self, medium_dict):
        rng = np.random.default_rng(5)
        for _ in range(50):
            guess = REAL_WORDS[rng.integers(len(REAL_WORDS))]
            codes = score_against_all(
                medium_dict.codes[medium_dict.index(guess)], medium_dict.codes
            )
            for w, c in zip(medium_dict.words, codes):
                assert feedback_code(score_guess(guess, w)) == c

    def test_pattern_matrix_agrees_and_caches(self, small_dict):
        m1 = pattern_matrix(small_dict)
        m2 = pattern_matrix(small_dict)
        assert m1 is m2
        for gi, g in enumerate(small_dict.words):
            for ti, t in enumerate(small_dict.words):
                assert m1[gi, ti] == feedback_code(score_guess(g, t))


class TestFilterDictionary:
    def test_all_green_keeps_exactly_target(self, medium_dict):
        fb = score_guess("train", "train")
        out = filter_dictionary(medium_dict, "train", fb)
        assert out.words == ("train",)

    def test_guess_removed_target_kept(self, small_dict):
        fb = score_guess("about", "train")
        out = filter_dictionary(small_dict, "about", fb)
        assert "about" not in out
        assert "train" in out

    def test_matches_exhaustive_scan(self, medium_dict):
        rng = np.random.default_rng(13)
        words = list(medium_dict.words)
        for _ in range(100):
            sub = medium_dict.subset(np.sort(rng.choice(len(words), size=50, replace=False)))
            guess = words[rng.integers(len(words))]
            target = sub.words[rng.integers(len(sub))]
            fb = score_guess(guess, target)
            out = filter_dictionary(sub, guess, fb)
            expected = [w for w in sub.words if score_guess(guess, w) == fb]
            assert list(out.words) == expected

    def test_consistency_membership_and_shrinkage(self, medium_dict):
        rng = np.random.default_rng(17)
        for _ in range(200):
            guess = medium_dict.words[rng.integers(len(medium_dict))]
            target = medium_dict.words[rng.integers(len(medium_dict))]
            fb = score_guess(guess, target)
            out = filter_dictionary(medium_dict, guess, fb)
            assert target in out
            if guess != target:
                assert len(out) <= len(medium_dict) - 1
                assert guess not in out

    def test_idempotent(self, medium_dict):
        fb = score_guess("stone", "slate")
        once = filter_dictionary(medium_dict, "stone", fb)
        twice = filter_dictionary(once, "stone", fb)
        assert once.words == twice.words
        np.testing.assert_array_equal(once.freqs, twice.freqs)

    def test_preserves_order_and_raw_frequencies(self, medium_dict):
        fb = score_guess("crane", "query")
        out = filter_dictionary(medium_dict, "crane", fb)
        for w, f in zip(out.words, out.freqs):
            assert f == medium_dict.freqs[medium_dict.index(w)]
        positions = [medium_dict.index(w) for w in out.words]
        assert positions == sorted(positions)

    def test_empty_result_is_legal(self, small_dict):
        # A clue never produced against these words can wipe the whole set.
        fb = str_to_feedback("yyyyy")
        out = filter_dictionary(small_dict, "zzzzz", fb)
        assert len(out) == 0

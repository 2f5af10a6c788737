import numpy as np
import pytest

from namefeat.features import (
    BOUBA_CONSONANTS, BOUBA_VOWELS, FINAL_PREDICTORS, FULL_PREDICTORS, KIKI_CONSONANTS, KIKI_VOWELS,
    TABLE_PREDICTORS, VOWELS, count_syllables, extract, feature_matrix, summarize,
)


def test_extract_anna():
    f = extract("anna")
    assert (f.n_vowels, f.n_consonants, f.n_syllables, f.ends_in_vowel) == (2, 2, 2, 1)
    assert (f.n_bouba_consonants, f.n_bouba_vowels, f.n_kiki_consonants, f.n_kiki_vowels) == (2, 0, 0, 0)
    assert f.vowel_brightness == 0


def test_extract_peter():
    f = extract("peter")
    assert (f.n_vowels, f.n_consonants, f.n_syllables, f.ends_in_vowel) == (2, 3, 2, 0)
    assert (f.n_bouba_consonants, f.n_kiki_consonants, f.n_kiki_vowels) == (0, 2, 2)
    assert f.vowel_brightness == 2


@pytest.mark.parametrize("token, syllables", [
    ("jane", 1), ("lee", 1), ("lynn", 1), ("maria", 2), ("christopher", 3), ("e", 1), ("anne", 1),
])
def test_count_syllables(token, syllables):
    assert count_syllables(token) == syllables


def test_y_is_a_consonant():
    f = extract("lynn")
    assert f.n_vowels == 0
    assert f.n_consonants == 4
    assert f.ends_in_vowel == 0


@pytest.mark.parametrize("bad", ["", "Anna", "an na", "zoë"])
def test_extract_rejects_unnormalized(bad):
    with pytest.raises(ValueError):
        extract(bad)


def test_count_identities_on_random_tokens():
    rng = np.random.default_rng(11)
    letters = list("abcdefghijklmnopqrstuvwxyz")
    for _ in range(1000):
        token = "".join(rng.choice(letters, size=rng.integers(1, 12)))
        f = extract(token)
        assert f.n_vowels + f.n_consonants == len(token)
        assert f.n_bouba_vowels + f.n_kiki_vowels <= f.n_vowels
        assert f.n_bouba_consonants == sum(ch in BOUBA_CONSONANTS for ch in token)
        assert f.n_kiki_consonants == sum(ch in KIKI_CONSONANTS for ch in token)
        assert f.n_bouba_vowels == sum(ch in BOUBA_VOWELS for ch in token)
        assert f.n_kiki_vowels == sum(ch in KIKI_VOWELS for ch in token)
        assert f.ends_in_vowel == int(token[-1] in VOWELS)
        assert 1 <= f.n_syllables <= max(f.n_vowels, 1)


def test_predictor_sets():
    assert len(FULL_PREDICTORS) == 9
    assert "vowel_brightness" not in TABLE_PREDICTORS
    assert set(FINAL_PREDICTORS) == {
        "n_vowels", "ends_in_vowel", "n_bouba_consonants", "n_bouba_vowels", "n_kiki_consonants", "n_kiki_vowels",
    }


def test_feature_matrix_order():
    X = feature_matrix(["anna", "peter"], ["ends_in_vowel", "n_vowels"])
    assert X.tolist() == [[1.0, 2.0], [0.0, 2.0]]
    assert feature_matrix([]).shape == (0, len(FINAL_PREDICTORS))


def test_summarize():
    table = summarize(["anna", "peter", "bob"], ["n_vowels"])
    assert table["n_vowels"]["min"] == 1
    assert table["n_vowels"]["max"] == 2
    assert table["n_vowels"]["mean"] == pytest.approx(5 / 3)
    assert table["n_vowels"]["sd"] == pytest.approx(np.std([2, 2, 1], ddof=1))

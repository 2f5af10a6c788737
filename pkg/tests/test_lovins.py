import pytest

from pipeline.lovins import CONDITIONS, costem, load_tables, lovins_stem, recode, stem_and_costem, strip_ending

STEMS = {
    "papers": "paper", "nationally": "nat", "running": "run", "sitting": "sit",
    "cats": "cat", "boss": "bos", "happiness": "hap", "relational": "rel",
    "sensitivity": "sensit", "magnetic": "magnet", "magnetize": "magnet", "effective": "effect",
    "matrix": "matric", "matrices": "matric", "index": "indic", "indices": "indic",
    "absorption": "absorb", "absorbing": "absorb", "provision": "provis", "provide": "prov",
    "rolling": "rol", "rolled": "rol", "sings": "sing", "singing": "sing",
    "conclude": "conclus", "conclusion": "conclus", "dogs": "dog", "reading": "read",
    "believe": "belief", "belief": "belief", "navigation": "navig", "university": "univers",
    "tables": "tabl", "table": "tabl", "hopeful": "hop", "mechanism": "mechan",
    "flies": "fl", "emission": "emis", "emit": "emis", "a": "a",
}


@pytest.mark.parametrize("word, stem", sorted(STEMS.items()))
def test_lovins_stem(word, stem):
    assert lovins_stem(word) == stem


def test_tables_are_complete():
    tables = load_tables()
    assert len(tables.endings) == 294
    assert tables.max_ending == 11
    assert tables.min_stem == 2
    assert set(tables.endings.values()) <= set(CONDITIONS)
    assert len(CONDITIONS) == 29


def test_minimum_stem_length():
    assert strip_ending("is") == "is"
    assert lovins_stem("on") == "on"


def test_recoding_exception_stops_the_rules():
    # "ul" is not recoded after a, o or i
    assert recode("aul") == "aul"
    assert recode("ful") == "fl"
    assert recode("ment") == "ment"


@pytest.mark.parametrize("word, suffix", [("papered", "ed"), ("papers", "s"), ("run", ""), ("nationally", "ionally")])
def test_costem(word, suffix):
    assert costem(word, strip_ending(word)) == suffix


def test_costem_of_unrelated_stem_is_empty():
    assert costem("paper", "xyz") == ""


def test_stem_and_costem():
    assert stem_and_costem("rolling") == ("rol", "ing")

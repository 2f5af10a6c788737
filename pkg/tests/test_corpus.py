import io

import pytest

from corpus.custom_format import HEADER, parse_custom, serialize_custom
from corpus.census_format import parse_census
from corpus.entries import DictEntry, Gender, GenderCategory, ParseError, Source
from corpus.namdict_format import parse_namdict
from corpus.name_db import build_db, entry_key, lookup
from corpus.registry import detect_format, get_available_formats, load_paths


def namdict_line(code, name, regions=""):
    return f"{code:<3}{name:<26} {regions}\n"


def test_parse_census_assigns_file_gender():
    lines = [b"JAMES          3.318  3.318      1\n", b"\n", b"JOHN           3.271  6.589      2\n"]
    entries = parse_census(lines, Gender.MALE)
    assert [e.name for e in entries] == ["JAMES", "JOHN"]
    assert entries[0].male == pytest.approx(3.318)
    assert entries[0].female == 0.0
    assert all(e.source is Source.CENSUS for e in entries)


def test_parse_census_rejects_wrong_field_count():
    with pytest.raises(ParseError) as err:
        parse_census(["MARY 2.629 2.629 1", "PATRICIA 1.073"], Gender.FEMALE)
    assert err.value.line == 2


def test_parse_census_reports_undecodable_byte_offset():
    lines = [b"JOHN 1.0 1.0 1\n", b"J\xffN 1.0 2.0 2\n"]
    with pytest.raises(ParseError) as err:
        parse_census(lines, Gender.MALE, encoding="ascii")
    assert err.value.line == 2
    assert err.value.offset == 16


def test_parse_namdict_fixed_columns():
    lines = [
        "# comment\n",
        namdict_line("?F", "Andrea", "3"),
        namdict_line("=", "Andrea <-> Andreia"),
        namdict_line("1M", "Hans+Peter"),
        namdict_line("M", 'J<"u>rgen', "  D"),
    ]
    entries = parse_namdict(lines)
    assert [e.name for e in entries] == ["Andrea", "Hans+Peter", "Jurgen"]
    assert entries[0].category is GenderCategory.MOSTLY_FEMALE
    assert entries[0].regions == (("great_britain", 3),)
    assert entries[1].category is GenderCategory.MALE_IF_FIRST_PART
    assert entries[2].regions == (("usa", 13),)


def test_parse_namdict_unknown_code():
    with pytest.raises(ParseError) as err:
        parse_namdict([namdict_line("M", "Otto"), namdict_line("X", "Nobody")])
    assert err.value.line == 2


def test_parse_namdict_accepts_tsv_rows():
    entries = parse_namdict(["name\tcategory\tregions\n", "Lena\tfemale\tgermany:5\n"])
    assert entries[0].source is Source.NAMDICT
    assert entries[0].regions == (("germany", 5),)


def test_parse_custom_requires_header():
    with pytest.raises(ParseError) as err:
        parse_custom(["Lena\tfemale\t\n"])
    assert err.value.line == 1


def test_parse_custom_unknown_category():
    with pytest.raises(ParseError):
        parse_custom([HEADER + "\n", "Lena\tgirlish\t\n"])


def test_serialize_custom_is_lossless_for_census(toy_db):
    out = io.StringIO()
    rows = serialize_custom(toy_db, out)
    reparsed = build_db(parse_custom(out.getvalue().splitlines()))
    assert rows == sum(1 for _ in toy_db.primary_entries())
    assert reparsed.lookup("john")[0].male == toy_db.lookup("john")[0].male
    assert reparsed.summary()["census"] == toy_db.summary()["census"]


def test_census_names_in_both_files_become_unisex(toy_db):
    (john,) = toy_db.lookup("john")
    assert john.category is GenderCategory.UNISEX
    assert john.male == pytest.approx(3.271)
    assert john.female == pytest.approx(0.013)


def test_compound_names_indexed_by_part(toy_db):
    assert toy_db.lookup("anna lena")[0].derived is False
    assert toy_db.lookup("anna")[0].derived is True
    assert toy_db.lookup("lena")[0].category is GenderCategory.FEMALE


def test_keys_are_normalized(toy_db):
    assert entry_key("Jürgen") == "jurgen"
    assert "jurgen" in toy_db
    assert len(toy_db.lookup("andrea")) == 2


def test_module_lookup(toy_db):
    (kim,) = lookup(toy_db, "kim")
    assert kim.category is GenderCategory.UNISEX
    assert lookup(toy_db, "zed") is None


def test_summary_counts(toy_db):
    summary = toy_db.summary()
    assert summary["distinct_names"] == 8
    assert summary["keys"] == 10
    assert summary["derived_records"] == 2
    assert summary["census"] == {"distinct": 3, "both_genders": 2, "male_only": 0, "female_only": 1}
    namdict = summary["sources"]["namdict"]
    assert namdict["total"] == 6
    assert namdict["male"] == 2
    assert namdict["unisex"] == 1


def test_build_db_skips_names_without_letters():
    db = build_db([DictEntry.from_category("李", Source.CUSTOM, GenderCategory.MALE)])
    assert len(db) == 0


def test_registry_discovers_formats():
    assert {"census", "namdict", "custom"} <= set(get_available_formats())


@pytest.mark.parametrize("path, expected", [
    ("data/dist.male.first", "census"),
    ("data/dist.female.first", "census"),
    ("names.tsv", "custom"),
    ("nam_dict.txt", "namdict"),
])
def test_detect_format(path, expected):
    assert detect_format(path) == expected


def test_load_paths_reads_a_directory(tmp_path):
    (tmp_path / "dist.male.first").write_text("JOHN 3.271 3.271 1\nKIM 0.004 3.275 2\n", encoding="ascii")
    (tmp_path / "dist.female.first").write_text("MARY 2.629 2.629 1\nKIM 0.115 2.744 2\n", encoding="ascii")
    db = load_paths([str(tmp_path)])
    assert db.summary()["census"]["both_genders"] == 1
    assert db.lookup("kim")[0].category is GenderCategory.UNISEX


def test_load_paths_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_paths([str(tmp_path / "nope.txt")])

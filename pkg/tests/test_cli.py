import json

import pytest

from cli.app import EXIT_DATA, EXIT_OK, EXIT_USAGE, run
from corpus.custom_format import HEADER


@pytest.fixture
def census_dir(tmp_path):
    d = tmp_path / "census"
    d.mkdir()
    (d / "dist.male.first").write_text("JOHN 3.271 3.271 1\nKIM 0.004 3.275 2\n", encoding="ascii")
    (d / "dist.female.first").write_text("MARY 2.629 2.629 1\nJOHN 0.013 2.642 2\nKIM 0.115 2.757 3\n",
                                         encoding="ascii")
    return d


@pytest.fixture
def custom_tsv(tmp_path):
    path = tmp_path / "names.tsv"
    rows = ["anna\tfemale\t", "maria\tfemale\t", "tom\tmale\t", "kurt\tmale\t"]
    path.write_text("\n".join([HEADER] + rows) + "\n", encoding="utf-8")
    return path


def stdout_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_usage_errors():
    assert run([]) == EXIT_USAGE
    assert run(["name", "score"]) == EXIT_USAGE
    assert run(["dict"]) == EXIT_USAGE
    assert run(["bogus"]) == EXIT_USAGE
    assert run(["pipeline", "train", "--corpus", "x.jsonl", "--tau", "high"]) == EXIT_USAGE
    assert run(["name", "score", "Kim", "--raw", "--model", "m.json"]) == EXIT_USAGE


def test_out_of_range_settings_are_usage_errors(custom_tsv, tmp_path):
    corpus = tmp_path / "users.jsonl"
    corpus.write_text("", encoding="utf-8")
    base = ["pipeline", "train", "--corpus", str(corpus), "--db", str(custom_tsv), "--seed", "0"]
    assert run(base + ["--tau", "1.5"]) == EXIT_USAGE
    assert run(base + ["--k", "0"]) == EXIT_USAGE


def test_missing_dictionary_is_a_data_error(tmp_path):
    assert run(["name", "score", "John", "--db", str(tmp_path / "missing")]) == EXIT_DATA


def test_name_score(census_dir, capsys):
    assert run(["name", "score", "John Smith", "--db", str(census_dir)]) == EXIT_OK
    out = stdout_json(capsys)
    assert out["value"] == pytest.approx((3.271 - 0.013) / 3.284)
    assert out["provenance"] == "dictionary"
    assert out["matched_token"] == "john"


def test_name_score_raw(census_dir, capsys):
    assert run(["name", "score", "Mary!", "--raw", "--db", str(census_dir)]) == EXIT_OK
    assert stdout_json(capsys)["provenance"] == "unscored"


def test_name_features(capsys):
    assert run(["name", "features", "Anna"]) == EXIT_OK
    out = stdout_json(capsys)
    assert out["token"] == "anna"
    assert out["ends_in_vowel"] == 1
    assert out["n_vowels"] == 2
    assert run(["name", "features", "✨"]) == EXIT_DATA


def test_dict_inspect_and_build(census_dir, tmp_path, capsys):
    summary_path = tmp_path / "summary.json"
    assert run(["dict", "inspect", "--db", str(census_dir), "--out", str(summary_path)]) == EXIT_OK
    summary = json.loads(summary_path.read_text(encoding="utf-8"))
    assert summary["census"]["both_genders"] == 2

    merged = tmp_path / "merged.tsv"
    assert run(["dict", "build", "--db", str(census_dir), "--out", str(merged)]) == EXIT_OK
    assert stdout_json(capsys)["keys"] == 3
    assert run(["dict", "inspect", "--db", str(merged)]) == EXIT_OK
    assert stdout_json(capsys)["census"] == summary["census"]


def test_namchar_train_and_predict(custom_tsv, tmp_path, capsys):
    model_path = tmp_path / "namchar.json"
    base = ["namchar", "train", "--db", str(custom_tsv), "--engine", "svm_rbf", "--gamma", "0.5", "--cost", "10"]
    assert run(base + ["--out", str(model_path)]) == EXIT_USAGE   # no seed
    assert run(base + ["--seed", "1", "--out", str(model_path)]) == EXIT_OK
    assert run(["namchar", "predict", "anna", "kurt", "--model", str(model_path)]) == EXIT_OK
    rows = stdout_json(capsys)
    assert [row["label"] for row in rows] == ["female", "male"]


def test_namchar_inspect(custom_tsv, capsys):
    assert run(["namchar", "inspect", "--db", str(custom_tsv)]) == EXIT_OK
    out = stdout_json(capsys)
    assert (out["names"], out["female"], out["male"]) == (4, 2, 2)
    assert set(out["fits"]) == {"full", "table", "final"}
    assert out["variables"]["n_vowels"]["min"] == 1.0


def write_users(path, n=40):
    with open(path, "w", encoding="utf-8") as f:
        for i in range(n):
            female = i % 2 == 1
            record = {
                "user_id": str(i),
                "name": ["Mary", "Lulu"][i % 4 // 2] if female else ["John", "Bob"][i % 4 // 2],
                "tweets": ["shopping lovely #fashion" if female else "football beers #match", "the news today"],
                "profile": {"age_days": 100 + i, "friends": i, "followers": 10},
                "gender": "female" if female else "male",
            }
            f.write(json.dumps(record) + "\n")


def test_pipeline_commands(census_dir, tmp_path, capsys):
    corpus = tmp_path / "users.jsonl"
    write_users(corpus)
    model_path = tmp_path / "pipeline.json"
    report_path = tmp_path / "report.json"
    histogram_path = tmp_path / "scores.csv"
    db = ["--db", str(census_dir)]

    assert run(["pipeline", "train", "--corpus", str(corpus), "--k", "3", "--seed", "0",
                "--out", str(model_path)] + db) == EXIT_OK
    assert json.loads(model_path.read_text(encoding="utf-8"))["kind"] == "threshold_classifier"

    assert run(["pipeline", "classify", "--model", str(model_path), "--corpus", str(corpus),
                "--report", str(report_path), "--histogram", str(histogram_path)] + db) == EXIT_OK
    rows = stdout_json(capsys)
    assert len(rows) == 40
    assert {row["stage"] for row in rows} == {1, 2}
    assert json.loads(report_path.read_text(encoding="utf-8"))["n"] == 40
    assert histogram_path.read_text(encoding="utf-8").startswith("low,high,count\n")

    assert run(["pipeline", "evaluate", "--model", str(model_path), "--corpus", str(corpus)] + db) == EXIT_OK
    assert stdout_json(capsys)["overall"]["n"] == 40

    assert run(["pipeline", "evaluate", "--holdout", "--folds", "2", "--repeats", "1", "--model", str(model_path),
                "--corpus", str(corpus)] + db) == EXIT_OK
    held_out = stdout_json(capsys)
    assert held_out["n"] == 20
    assert held_out["stage1"]["n"] + held_out["stage2"]["n"] == 20


def test_pipeline_train_rejects_bad_jsonl(census_dir, tmp_path):
    corpus = tmp_path / "users.jsonl"
    corpus.write_text('{"user_id": "1", "name": "A"}\n{broken\n', encoding="utf-8")
    args = ["pipeline", "train", "--corpus", str(corpus), "--seed", "0", "--db", str(census_dir)]
    assert run(args) == EXIT_DATA


def test_stats_ttest(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    a.write_text("2\n4\n6\n8\n10\n", encoding="utf-8")
    b.write_text("1\n2\n3\n4\n5\n", encoding="utf-8")
    assert run(["stats", "ttest", "--a", str(a), "--b", str(b)]) == EXIT_OK
    out = stdout_json(capsys)
    assert out["t"] == pytest.approx(4.2426, abs=1e-4)
    assert out["df"] == 4
    b.write_text("1\ntwo\n", encoding="utf-8")
    assert run(["stats", "ttest", "--a", str(a), "--b", str(b)]) == EXIT_DATA

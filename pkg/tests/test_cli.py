"""CLI behavior: subcommands, exit codes, deterministic output, cache."""

import json

import pytest

from w52 import export
from w52.cli import main
from w52.taxonomy import classify_census

CANONICAL_EDGES = [
    ["XII", "IYI", "IIY", "XYY"],
    ["YII", "IXI", "IIY", "YXY"],
    ["YII", "IYI", "IIX", "YYX"],
    ["XII", "IXI", "IIX", "XXX"],
    ["XYY", "YXY", "YYX", "XXX"],
]


@pytest.fixture(scope="session")
def cache_file(tmp_path_factory, space, pentads):
    path = tmp_path_factory.mktemp("cache") / "census.json"
    export.write_cache(path, space, pentads)
    return path


def write_contexts(path, contexts):
    path.write_text(json.dumps({"contexts": contexts}), encoding="utf-8")
    return path


class TestEnumerate:
    def test_points_prints_63(self, capsys):
        assert main(["enumerate", "points"]) == 0
        assert capsys.readouterr().out == "63\n"

    def test_lines_prints_315(self, capsys):
        assert main(["enumerate", "lines"]) == 0
        assert capsys.readouterr().out == "315\n"

    def test_planes_csv_export(self, capsys, tmp_path):
        out = tmp_path / "planes.csv"
        assert main(["enumerate", "planes", "--out", str(out)]) == 0
        assert capsys.readouterr().out == "135\n"
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "id,points,sign,class,b_line"
        assert len(lines) == 136

    def test_points_json_with_coords(self, capsys, tmp_path):
        out = tmp_path / "points.json"
        assert main(["enumerate", "points", "--format", "json", "--coords",
                     "--out", str(out)]) == 0
        rows = json.loads(out.read_text(encoding="utf-8"))
        assert len(rows) == 63
        assert rows[29] == {"id": 30, "word": "XYZ", "type": "C", "coords": "011110"}

    def test_pentads_prints_12096(self, capsys, cache_file):
        assert main(["enumerate", "pentads", "--cache", str(cache_file)]) == 0
        assert capsys.readouterr().out == "12096\n"

    def test_unknown_object_is_usage_error(self, capsys):
        assert main(["enumerate", "hexagons"]) == 2

    def test_unknown_flag_is_usage_error(self, capsys):
        assert main(["enumerate", "points", "--frmt", "json"]) == 2


class TestVerify:
    def test_canonical_pentagram_passes(self, capsys, tmp_path):
        f = write_contexts(tmp_path / "pentagram.json", CANONICAL_EDGES)
        assert main(["verify", str(f)]) == 0
        out = capsys.readouterr().out
        assert "verdict: ValidParityProof" in out
        assert "symbol: 10_2 − 5_4" in out

    def test_json_report(self, capsys, tmp_path):
        f = write_contexts(tmp_path / "pentagram.json", CANONICAL_EDGES)
        assert main(["verify", str(f), "--format", "json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["verdict"] == "ValidParityProof"
        assert obj["negative_count"] == 1
        assert obj["symbol"] == "10_2 − 5_4"

    def test_single_context_fails_as_not_contextual(self, capsys, tmp_path):
        f = write_contexts(tmp_path / "line.json", [["XII", "IXI", "XXI"]])
        assert main(["verify", str(f)]) == 1
        assert "NotContextual" in capsys.readouterr().out

    def test_malformed_word_is_a_parse_error(self, capsys, tmp_path):
        f = write_contexts(tmp_path / "bad.json", [["QXI", "IXI", "XXI"]])
        assert main(["verify", str(f)]) == 2
        assert "error" in capsys.readouterr().err

    def test_missing_file(self, capsys, tmp_path):
        assert main(["verify", str(tmp_path / "nope.json")]) == 2

    def test_non_commuting_context_diagnosed(self, capsys, tmp_path):
        f = write_contexts(tmp_path / "anti.json", [["XII", "YII", "ZII"]])
        assert main(["verify", str(f)]) == 1
        out = capsys.readouterr().out
        assert "MalformedContext" in out
        assert "anticommuting" in out

    def test_non_closed_context_diagnosed(self, capsys, tmp_path):
        f = write_contexts(tmp_path / "open.json", [["XII", "IXI", "IIX"]])
        assert main(["verify", str(f)]) == 1
        out = capsys.readouterr().out
        assert "MalformedContext" in out
        assert "not closed" in out


class TestCensusPipeline:
    def test_census_csv_matches_library(self, capsys, tmp_path, cache_file, census):
        out = tmp_path / "census.csv"
        assert main(["census", "--cache", str(cache_file), "--out", str(out)]) == 0
        assert out.read_text(encoding="utf-8") == export.census_csv(census)

    def test_census_header(self, capsys, cache_file):
        assert main(["census", "--cache", str(cache_file)]) == 0
        first = capsys.readouterr().out.splitlines()[0]
        assert first == "type,count,C-,O_A,O_B,O_C,F-,Fa,Fb,Fc,P_C-,P_OA,P_OB,P_OC,A_on_neg,example_pentad"

    def test_table1_matches(self, capsys, cache_file):
        assert main(["table1", "--cache", str(cache_file)]) == 0
        assert "matches all 47" in capsys.readouterr().out

    def test_laws_hold(self, capsys, cache_file):
        assert main(["laws", "--cache", str(cache_file)]) == 0
        out = capsys.readouterr().out
        assert out.count("satisfied") == 5
        assert "VIOLATED" not in out

    def test_cache_round_trip_reproduces_census(self, space, cache_file, census):
        loaded = export.load_cache(cache_file, space)
        assert classify_census(space, loaded) == census

    def test_cache_rejects_tampering(self, space, tmp_path, cache_file):
        obj = json.loads(cache_file.read_text(encoding="utf-8"))
        obj["records"] = obj["records"][:100]
        bad = tmp_path / "truncated.json"
        bad.write_text(json.dumps(obj), encoding="utf-8")
        with pytest.raises(export.CacheError):
            export.load_cache(bad, space)

    def test_cache_usage_error_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "notjson.json"
        bad.write_text("{", encoding="utf-8")
        assert main(["census", "--cache", str(bad), "--out", str(tmp_path / "c.csv")]) == 2


class TestShow:
    def test_show_config_lists_25_observables_30_contexts(self, capsys, cache_file):
        assert main(["show", "--pentad", "0", "--as", "config",
                     "--cache", str(cache_file)]) == 0
        out = capsys.readouterr().out
        assert "observables (25)" in out
        assert "contexts (30)" in out
        assert out.count("sign") == 30

    def test_show_pentagram(self, capsys, cache_file):
        assert main(["show", "--pentad", "0", "--as", "pentagram",
                     "--cache", str(cache_file)]) == 0
        out = capsys.readouterr().out
        assert out.count("edge ") == 5

    def test_show_planes_with_coords(self, capsys, cache_file):
        assert main(["show", "--pentad", "12095", "--as", "planes", "--coords",
                     "--cache", str(cache_file)]) == 0
        assert "(" in capsys.readouterr().out

    def test_unknown_pentad_id(self, capsys, cache_file):
        assert main(["show", "--pentad", "12096", "--as", "config",
                     "--cache", str(cache_file)]) == 2

import json

from divides import (
    build_report, fixture, render_text, report_from_json_dict, run_corpus,
    zigzag,
)
from divides.cli import main
from divides.report import CSV_HEADER


class TestReport:
    def test_lens_values(self):
        rep = build_report(fixture("LENS"), source="LENS")
        assert rep.lambda_formula == 0
        assert rep.lambda_trace == 0
        assert (rep.mu, rep.e, rep.f) == (3, 2, 0)
        assert rep.chi_body == 1
        assert rep.char_poly == [-1, 1, -1, 1]
        assert rep.signature == 3
        assert rep.slalom is True
        assert rep.lattice_genus == [1, 1]

    def test_fig2a_values(self):
        rep = build_report(fixture("FIG2A"), source="FIG2A")
        assert rep.lambda_formula == 2
        assert rep.cellular is False

    def test_fig2b_values(self):
        rep = build_report(fixture("FIG2B"), source="FIG2B")
        assert rep.lambda_formula == -1
        assert rep.simple is False

    def test_half_integer_lattice_genus(self):
        # two non-crossing chords: mu = 0, r = 2: genus (0 - 2 + 1)/2
        from divides import Chord, ChordSet, from_chords
        from fractions import Fraction as F
        m = from_chords(ChordSet(chords=(Chord(F(-5), F(-2)),
                                         Chord(F(1), F(4)))))
        rep = build_report(m, source="two chords")
        assert rep.lattice_genus == [-1, 2]
        assert rep.lambda_formula == 1    # mu = 0

    def test_json_round_trip(self):
        rep = build_report(zigzag(3), source="zz3", k=8)
        text = json.dumps(rep.to_json_dict())
        back = report_from_json_dict(json.loads(text))
        assert back == rep

    def test_deterministic(self):
        a = build_report(zigzag(4), source="zz", k=10)
        b = build_report(zigzag(4), source="zz", k=10)
        assert json.dumps(a.to_json_dict()) == json.dumps(b.to_json_dict())
        assert render_text(a) == render_text(b)

    def test_text_rendering(self):
        text = render_text(build_report(fixture("LENS"), source="LENS"))
        assert "lefschetz = 0" in text
        assert "mu=3  e=2  f=0" in text
        assert "simple_cellular_lambda_zero: pass" in text


class TestCorpus:
    def test_small_run_clean(self, tmp_path):
        out = tmp_path / "rows.csv"
        with open(out, "w", encoding="utf-8") as fh:
            summary = run_corpus(25, 4, 11, csv_out=fh)
        assert summary.ok()
        assert summary.checks_failed == 0
        lines = out.read_text().splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 26
        assert lines[1].startswith("11,4,")

    def test_trivial_instances(self):
        # n = 1: every instance is a single chord, delta = 0, lambda = 1
        summary = run_corpus(10, 1, 3)
        assert summary.ok()
        assert summary.simple == 0
        assert summary.slalom == 10


class TestCli:
    def write(self, tmp_path, name, payload):
        p = tmp_path / name
        p.write_text(json.dumps(payload), encoding="utf-8")
        return str(p)

    def x1_doc(self):
        return {
            "format": "divide-map/1",
            "endpoints": ["e1", "e2", "e3", "e4"],
            "crossings": ["c1"],
            "edges": [
                {"a": ["e1", 0], "b": ["c1", 0]},
                {"a": ["e2", 0], "b": ["c1", 1]},
                {"a": ["e3", 0], "b": ["c1", 2]},
                {"a": ["e4", 0], "b": ["c1", 3]},
            ],
        }

    def test_validate_ok(self, tmp_path, capsys):
        path = self.write(tmp_path, "x1.json", self.x1_doc())
        assert main(["validate", path]) == 0
        assert "valid" in capsys.readouterr().out

    def test_validate_slot_reuse(self, tmp_path, capsys):
        doc = self.x1_doc()
        doc["edges"][1]["b"] = ["c1", 0]
        path = self.write(tmp_path, "bad.json", doc)
        assert main(["validate", path]) == 1
        assert "slot" in capsys.readouterr().err

    def test_validate_bad_chords(self, tmp_path, capsys):
        doc = {"format": "divide-chords/1",
               "chords": [{"s": [0, 1], "t": [1, 1]},
                          {"s": [1, 1], "t": [2, 1]}]}
        path = self.write(tmp_path, "bad.json", doc)
        assert main(["validate", path]) == 1
        assert "general-position" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["validate", "/nonexistent/file.json"]) == 1

    def test_usage_error(self, capsys):
        assert main(["report"]) == 2
        assert main(["frobnicate"]) == 2

    def test_report_json(self, tmp_path, capsys):
        path = self.write(tmp_path, "x1.json", self.x1_doc())
        assert main(["report", path, "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["mu"] == 1
        assert data["lambda_formula"] == 0

    def test_report_text_on_chords(self, tmp_path, capsys):
        cpath = str(tmp_path / "c.json")
        assert main(["gen-chords", "--n", "3", "--seed", "5",
                     "-o", cpath]) == 0
        capsys.readouterr()
        assert main(["report", cpath]) == 0
        assert "divide report" in capsys.readouterr().out

    def test_gamma_dot(self, tmp_path, capsys):
        path = self.write(tmp_path, "x1.json", self.x1_doc())
        out = str(tmp_path / "g.dot")
        assert main(["gamma", path, "--dot", out]) == 0
        text = open(out).read()
        assert text.startswith("graph gamma")

    def test_render_chords(self, tmp_path, capsys):
        cpath = str(tmp_path / "c.json")
        assert main(["gen-chords", "--n", "2", "--seed", "17",
                     "-o", cpath]) == 0
        out = str(tmp_path / "c.svg")
        assert main(["render", cpath, "--svg", out]) == 0
        assert "<svg" in open(out).read()

    def test_render_rejects_abstract_map(self, tmp_path, capsys):
        path = self.write(tmp_path, "x1.json", self.x1_doc())
        assert main(["render", path, "--svg", str(tmp_path / "x.svg")]) == 1
        assert "no geometry" in capsys.readouterr().err

    def test_gen_families(self, tmp_path, capsys):
        for family in ("zigzag", "coil"):
            out = str(tmp_path / f"{family}.json")
            assert main(["gen", "--family", family, "--k", "3",
                         "-o", out]) == 0
            capsys.readouterr()
            assert main(["validate", out]) == 0

    def test_gen_chords_deterministic(self, tmp_path, capsys):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        main(["gen-chords", "--n", "4", "--seed", "9", "-o", str(a)])
        main(["gen-chords", "--n", "4", "--seed", "9", "-o", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_corpus_cli(self, tmp_path, capsys):
        out = str(tmp_path / "rows.csv")
        assert main(["corpus", "--count", "10", "--n", "3", "--seed", "2",
                     "--csv", out]) == 0
        assert "discrepancies: none" in capsys.readouterr().out
        assert open(out).read().startswith(CSV_HEADER)

    def test_traces_cli(self, tmp_path, capsys):
        path = self.write(tmp_path, "x1.json", self.x1_doc())
        assert main(["traces", path, "--k", "3"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "k,tr_T_k,lefschetz_k,tr_M_k"
        out_file = str(tmp_path / "t.csv")
        assert main(["traces", path, "--k", "3", "--csv", out_file]) == 0
        assert open(out_file).read().splitlines()[1] == "1,1,0,0"

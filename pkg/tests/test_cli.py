import json

import pytest

from multiseg import parse_parameter_file, render_parameter_file
from multiseg.cli import main
from multiseg.paramfile import ParamFileError

GUIDE_FILE = """\
# the four-dimensional worked example
cuspidal rho d=1 eta=+1 chi=+1
block rho 2 1
block rho 1 2
"""


@pytest.fixture
def guide_path(tmp_path):
    p = tmp_path / "psi.txt"
    p.write_text(GUIDE_FILE)
    return str(p)


class TestParameterFile:
    def test_basic_parse(self):
        psi, labels = parse_parameter_file(
            "cuspidal rho d=1 eta=+1 chi=+1\nblock rho 2 1\n")
        assert psi.n == 2
        assert labels["rho"].eta == 1

    def test_guide_file(self):
        psi, _ = parse_parameter_file(GUIDE_FILE)
        assert psi.n == 4

    def test_multiplicity(self):
        psi, _ = parse_parameter_file("cuspidal r\nblock r 2 2 x3\n")
        assert len(psi) == 3 and psi.n == 12

    def test_validation_errors_carry_line_numbers(self):
        with pytest.raises(ParamFileError, match="line 2: a must be >= 1"):
            parse_parameter_file("cuspidal r\nblock r 0 1\n")
        with pytest.raises(ParamFileError, match="line 1: block references"):
            parse_parameter_file("block r 1 1\ncuspidal r\n")
        with pytest.raises(ParamFileError, match="line 3: duplicate"):
            parse_parameter_file("cuspidal r\ncuspidal s\ncuspidal r\n")
        with pytest.raises(ParamFileError, match="line 1"):
            parse_parameter_file("cuspidal r eta=maybe\n")

    def test_round_trip(self):
        psi, _ = parse_parameter_file(
            "cuspidal r d=2 eta=-1 chi=+1\ncuspidal s eta=?\n"
            "block r 2 1 x2\nblock s 3 4\n")
        again, _ = parse_parameter_file(render_parameter_file(psi))
        assert again == psi
        relabels = {b.rho.name: b.rho for b in again.blocks}
        assert relabels["r"].d == 2 and relabels["r"].eta == -1
        assert relabels["s"].eta is None


class TestCommands:
    def test_classify(self, guide_path, capsys):
        assert main(["classify", guide_path]) == 0
        out = capsys.readouterr().out
        assert "n = 4" in out
        assert "discrete diagonal  : False" in out

    def test_classify_json(self, guide_path, capsys):
        assert main(["classify", "--json", guide_path]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["n"] == 4 and data["in_Psi_H"] is True

    def test_dominate(self, guide_path, capsys):
        assert main(["dominate", "--json", guide_path]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["peel"] == [["rho", "3/2"]]
        assert "(rho,4,1)" in data["psi_tilde"]

    def test_signs(self, guide_path, capsys):
        assert main(["signs", "--json", guide_path]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["z_W"] == 1 and data["z_U"] == -1
        assert data["theta_ratio_WU"]["ratio"] == -1

    def test_resolve(self, guide_path, capsys):
        assert main(["resolve", "--json", guide_path]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["n"] == 4
        assert len(data["terms"]) == 1
        (term,) = data["terms"]
        assert term["coeff"] == 1
        assert [a["start"] for a in term["word"]] == ["1/2", "-1/2"]

    def test_jacquet(self, guide_path, capsys):
        assert main(["jacquet", "--json", guide_path,
                     "--rho", "rho", "--x", "1/2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["op"] == "jac_left"

    def test_dual(self, capsys):
        assert main(["dual", "{[2..0]rho}"]) == 0
        out = capsys.readouterr().out.strip()
        assert out == "{[2..2]rho, [1..1]rho, [0..0]rho}"

    def test_dual_bad_input(self, capsys):
        assert main(["dual", "[2..0"]) == 1

    def test_complex_check(self, capsys):
        assert main(["complex-check", "--n", "4"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out and "FAIL" not in out

    def test_verify(self, tmp_path, capsys):
        p = tmp_path / "b.txt"
        p.write_text("cuspidal rho\nblock rho 3 3\n")
        assert main(["verify", str(p)]) == 0
        assert "vanishes" in capsys.readouterr().out

    def test_bad_file_exits_1(self, tmp_path, capsys):
        p = tmp_path / "bad.txt"
        p.write_text("block rho 1 1\n")
        assert main(["classify", str(p)]) == 1
        assert "line 1" in capsys.readouterr().err

    def test_missing_file_exits_1(self, capsys):
        assert main(["classify", "/nonexistent/psi.txt"]) == 1

    def test_unknown_flag_is_fatal(self, guide_path):
        with pytest.raises(SystemExit):
            main(["classify", "--frobnicate", guide_path])

    def test_byte_determinism(self, guide_path, capsys):
        for cmd in (
            ["classify", guide_path],
            ["signs", "--json", guide_path],
            ["resolve", "--json", guide_path],
            ["dominate", guide_path],
            ["complex-check", "--n", "3"],
        ):
            assert main(list(cmd)) == 0
            first = capsys.readouterr().out
            assert main(list(cmd)) == 0
            assert capsys.readouterr().out == first

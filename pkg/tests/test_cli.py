import pytest

from haarcp.cli import main
from haarcp.errors import ParseError
from haarcp.specfmt import parse_group_file, parse_model_file, resolve_group


@pytest.fixture
def o2_file(tmp_path):
    path = tmp_path / "o2.model"
    path.write_text(
        "# circle with reflection\n"
        "torus_rank 1\n"
        "acting_group cyclic 2\n"
        "matrix 1 -1\n"
    )
    return str(path)


class TestGroupSpecs:
    def test_perm_file(self, tmp_path):
        f = tmp_path / "g.group"
        f.write_text("# A5 generators\nperm (1 2 3 4 5)\nperm (1 2 3)\n")
        G = parse_group_file(f)
        assert G.order == 60

    def test_two_generator_file(self, tmp_path):
        f = tmp_path / "g.group"
        f.write_text("perm (1 2 3)(4 5)\nperm (1 2)\n")
        G = parse_group_file(f)
        # brute-force closure of <(1 2 3)(4 5), (1 2)> has 12 elements
        assert G.order == 12

    def test_table_file(self, tmp_path):
        f = tmp_path / "c3.group"
        f.write_text("table 3\n0 1 2\n1 2 0\n2 0 1\n")
        assert parse_group_file(f).order == 3

    def test_product_file(self, tmp_path):
        (tmp_path / "c2.group").write_text("perm (1 2)\n")
        f = tmp_path / "p.group"
        f.write_text("product c2.group c2.group\n")
        assert parse_group_file(f).order == 4

    def test_malformed_cycle(self, tmp_path):
        f = tmp_path / "bad.group"
        f.write_text("perm (1 2\n")
        with pytest.raises(ParseError) as err:
            parse_group_file(f)
        assert "line 1" in str(err.value)

    def test_builtin_names(self):
        assert resolve_group("alternating 5").order == 60
        assert resolve_group("a5").order == 60
        assert resolve_group("q8").order == 8
        assert resolve_group("dihedral 4").order == 8
        assert resolve_group("sl25").order == 120

    def test_unknown_name(self):
        with pytest.raises(ParseError):
            resolve_group("no such group")


class TestModelSpecs:
    def test_o2(self, o2_file):
        m = parse_model_file(o2_file)
        assert m.torus_rank == 1
        assert m.action[1] == ((-1,),)

    def test_bad_determinant(self, tmp_path):
        f = tmp_path / "bad.model"
        f.write_text("torus_rank 1\nacting_group cyclic 2\nmatrix 1 2\n")
        from haarcp.errors import NotUnimodular
        with pytest.raises(NotUnimodular):
            parse_model_file(f)

    def test_missing_rank(self, tmp_path):
        f = tmp_path / "bad.model"
        f.write_text("acting_group cyclic 2\n")
        with pytest.raises(ParseError):
            parse_model_file(f)


class TestCommands:
    def test_cp_a5(self, capsys):
        assert main(["cp", "alternating", "5"]) == 0
        out = capsys.readouterr().out
        assert out.count("1/12") == 3
        assert "PASS" in out

    def test_cp_builtin_short(self, capsys):
        assert main(["cp", "q8"]) == 0
        assert capsys.readouterr().out.count("5/8") == 3

    def test_center(self, capsys):
        assert main(["center", "q8"]) == 0
        assert "center order 2" in capsys.readouterr().out

    def test_classify(self, capsys):
        assert main(["classify", "symmetric", "4"]) == 0
        out = capsys.readouterr().out
        assert "5/24" in out
        assert "SolvableNonabelian" in out

    def test_isoclinic(self, capsys):
        assert main(["isoclinic", "d4", "q8"]) == 0
        out = capsys.readouterr().out
        assert "quotient-map" in out
        assert "derived-map" in out

    def test_isoclinic_none(self, capsys):
        assert main(["isoclinic", "s3", "c6"]) == 0
        assert capsys.readouterr().out.strip() == "none"

    def test_stem(self, capsys):
        assert main(["stem", "--max-order", "16", "c12"]) == 0
        assert "order 1" in capsys.readouterr().out

    def test_fc_and_verify_t1(self, o2_file, capsys):
        assert main(["fc", o2_file]) == 0
        out = capsys.readouterr().out
        assert "FC index 2" in out
        assert main(["verify-t1", o2_file]) == 0
        out = capsys.readouterr().out
        assert "PASS cp equality" in out
        assert "1/4" in out

    def test_verify_t2_group(self, capsys):
        assert main(["verify-t2", "q8"]) == 0
        assert "vacuous" in capsys.readouterr().out

    def test_verify_t2_model_sharpness(self, o2_file, capsys):
        assert main(["verify-t2", o2_file]) == 0
        assert "sharpness" in capsys.readouterr().out

    def test_mc(self, o2_file, capsys):
        assert main(["mc", "--samples", "20000", "--seed", "7", o2_file]) == 0
        out = capsys.readouterr().out
        assert "+-" in out
        assert "exact 1/4" in out

    def test_scan_builtin_names(self, capsys):
        assert main(["scan", "--threshold", "3/40", "a5", "s5", "sl25"]) == 0
        out = capsys.readouterr().out
        assert "A5TimesAbelian" in out

    def test_scan_machine_format(self, capsys):
        assert main(["scan", "--machine", "q8", "d4"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == [
            "d4|8|5/8|1|SolvableNonabelian",
            "q8|8|5/8|1|SolvableNonabelian",
        ]

    def test_scan_directory(self, tmp_path, capsys):
        (tmp_path / "c3.group").write_text("perm (1 2 3)\n")
        (tmp_path / "s3.group").write_text("perm (1 2 3)\nperm (1 2)\n")
        assert main(["scan", str(tmp_path)]) == 0
        out = capsys.readouterr().out
        assert "c3" in out and "s3" in out

    def test_scan_decimal_threshold_rejected(self, capsys):
        assert main(["scan", "--threshold", "0.075", "q8"]) == 2

    def test_input_error_exit_code(self, capsys):
        assert main(["cp", "nonexistent-file.group"]) == 2

    def test_determinism(self, o2_file, capsys):
        main(["mc", "--samples", "5000", "--seed", "3", o2_file])
        first = capsys.readouterr().out
        main(["mc", "--samples", "5000", "--seed", "3", o2_file])
        assert capsys.readouterr().out == first

    def test_cap_env(self, monkeypatch, tmp_path, capsys):
        monkeypatch.setenv("HAARCP_CAP", "2")
        f = tmp_path / "c3.group"
        f.write_text("perm (1 2 3)\n")
        assert main(["cp", str(f)]) == 2

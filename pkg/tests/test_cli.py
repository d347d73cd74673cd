import json

from click.testing import CliRunner

from schubsing.cli import main

W10_TEXT = "5,10,7,2,9,8,1,6,3,4"


def invoke(*args):
    return CliRunner().invoke(main, args)


class TestAnalyze:
    def test_table_nine_rows(self):
        result = invoke("analyze", W10_TEXT)
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert "9 singular component(s)" in lines[0]
        assert len(lines) == 11  # header + column names + 9 rows
        assert "C_{3,3}" in result.output
        assert "K_{5}" in result.output
        assert "1+q+q^2" in result.output

    def test_table_byte_stable(self):
        assert invoke("analyze", W10_TEXT).output == invoke("analyze", W10_TEXT).output

    def test_smooth_table(self):
        result = invoke("analyze", "1,2,3")
        assert result.exit_code == 0
        assert "smooth" in result.output

    def test_space_separated_input(self):
        assert invoke("analyze", "3 4 1 2").exit_code == 0

    def test_parse_failure_exit_2(self):
        assert invoke("analyze", "1,2,x").exit_code == 2
        assert invoke("analyze", "1,1,2").exit_code == 2

    def test_json_schema(self):
        result = invoke("analyze", "--format", "json", "3,4,1,2")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["w"] == [3, 4, 1, 2]
        assert data["smooth"] is False
        (comp,) = data["components"]
        assert comp["v"] == [1, 3, 2, 4]
        assert comp["type"] == "C"
        assert (comp["rows"], comp["cols"]) == (2, 2)
        assert comp["dim"] == comp["codim"] == 3
        assert comp["kl"] == [1, 1]
        assert comp["mult"] == 2
        assert comp["config"]["type"] == "II"
        assert comp["config"]["abcd"] == [1, 2, 3, 4]

    def test_json_round_trip(self):
        a = invoke("analyze", "--format", "json", W10_TEXT).output
        b = invoke("analyze", "--format", "json", W10_TEXT).output
        assert json.loads(a) == json.loads(b)
        assert len(json.loads(a)["components"]) == 9


class TestSmooth:
    def test_smooth(self):
        result = invoke("smooth", "1,2,3")
        assert result.exit_code == 0 and result.output.strip() == "smooth"

    def test_singular(self):
        result = invoke("smooth", "3,4,1,2")
        assert result.exit_code == 0 and result.output.strip() == "singular"


class TestQuasires:
    def test_s8_example(self):
        result = invoke("quasires", "6,7,5,1,8,4,2,3")
        assert result.exit_code == 0
        assert "h = 3" in result.output
        for word in (
            "(3,7,6,1,8,5,2,4)",
            "(4,7,3,1,8,6,2,5)",
            "(5,7,4,1,8,3,2,6)",
            "(1,7,6,5,8,4,2,3)",
            "(2,7,6,1,8,5,4,3)",
            "(6,5,4,1,8,7,2,3)",
            "(6,7,2,1,8,5,4,3)",
            "(6,5,4,1,8,3,2,7)",
            "(6,7,5,1,4,3,2,8)",
        ):
            assert word in result.output

    def test_height_one_example(self):
        result = invoke("quasires", "6,4,2,7,1,5,3")
        assert result.exit_code == 0
        assert "h = 1" in result.output
        assert "(4,3,2,7,1,6,5)" in result.output
        assert "(6,2,1,4,3,7,5)" in result.output

    def test_covexillary_exit_2(self):
        assert invoke("quasires", "1,2,3,4").exit_code == 2


class TestOracle:
    def test_agreement(self):
        result = invoke("oracle", "3,4,1,2")
        assert result.exit_code == 0
        assert "(1,3,2,4)" in result.output
        assert "fast path agrees" in result.output


class TestVerify:
    def test_exhaustive_n4(self):
        result = invoke("verify", "-n", "4")
        assert result.exit_code == 0
        assert "OK" in result.output

    def test_sampled_n6(self):
        result = invoke("verify", "-n", "6", "--sample", "40", "--seed", "2")
        assert result.exit_code == 0

    def test_large_without_sample_rejected(self):
        assert invoke("verify", "-n", "9").exit_code == 2

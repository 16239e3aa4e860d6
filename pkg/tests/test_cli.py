import json
import math

import pytest

from zetakit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


class TestValues:
    def test_riemann_negative(self, capsys):
        code, doc, _ = run_json(capsys, "values", "--model", "riemann", "--n=-1")
        assert code == 0
        assert doc["command"] == "values"
        entry = doc["results"][0]
        assert entry["method"] == "continuation"
        assert entry["value"]["re"] == pytest.approx(-1.0 / 12.0, rel=1e-12)

    def test_airy_range_matches_closed_forms(self, capsys):
        code, doc, _ = run_json(capsys, "values", "--model", "airy", "--n", "1..5")
        assert code == 0
        g = math.gamma
        expect = {
            1: -3 ** (1 / 3) * g(2 / 3) / g(1 / 3),
            2: 3 ** (2 / 3) * g(2 / 3) ** 2 / g(1 / 3) ** 2,
            3: 0.5 - 3 * g(2 / 3) ** 3 / g(1 / 3) ** 3,
            4: 3 ** (4 / 3) * g(2 / 3) ** 4 / g(1 / 3) ** 4
               - g(2 / 3) / (3 ** (2 / 3) * g(1 / 3)),
            5: -3 ** (5 / 3) * g(2 / 3) ** 5 / g(1 / 3) ** 5
               + 1.25 * g(2 / 3) ** 2 / (3 ** (1 / 3) * g(1 / 3) ** 2),
        }
        for entry in doc["results"]:
            assert entry["value"]["re"] == pytest.approx(expect[entry["n"]], rel=1e-11)

    def test_chf_value_with_check(self, capsys):
        code, doc, _ = run_json(capsys, "values", "--model", "chf",
                                "--a", "0.5", "--b", "1.5", "--n", "2", "--check")
        assert code == 0
        entry = doc["results"][0]
        a, b = 0.5, 1.5
        assert entry["value"]["re"] == pytest.approx(a * (a - b) / (b * b * (b + 1)),
                                                     rel=1e-12)
        assert entry["check_discrepancy"] < 1e-9

    def test_pole_row(self, capsys):
        code, doc, _ = run_json(capsys, "values", "--model", "riemann", "--n", "1")
        assert code == 0
        assert doc["results"][0]["method"] == "pole"
        assert doc["results"][0]["residue"]["re"] == pytest.approx(1.0)

    def test_structural_zero_tag(self, capsys):
        code, doc, _ = run_json(capsys, "values", "--model", "airy", "--n=-1")
        assert code == 0
        assert doc["results"][0]["method"] == "structural-zero"
        assert doc["results"][0]["value"]["re"] == 0.0

    def test_inline_json_model_spec(self, capsys):
        code, doc, _ = run_json(capsys, "values", "--model",
                                '{"model": "hurwitz", "a": 0.25}', "--n", "0")
        assert code == 0
        assert doc["results"][0]["value"]["re"] == pytest.approx(0.25)

    def test_usage_error_exit_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["values", "--model", "riemann"])
        assert exc.value.code == 2

    def test_unknown_model_exit_one(self, capsys):
        code, out, err = run(capsys, "values", "--model", "bessel", "--n", "2")
        assert code == 1
        assert "bessel" in err

    def test_partial_failure_lists_items_on_stderr(self, capsys):
        # -25 lies outside the airy table's strip; -1 succeeds
        code, out, err = run(capsys, "values", "--model", "airy", "--n=-25..-24")
        assert code == 1
        assert "-25" in err and "-24" in err
        code2, out2, err2 = run(capsys, "values", "--model", "airy", "--n=-1")
        assert code2 == 0 and err2 == ""


class TestPoles:
    def test_airy_json_schema(self, capsys):
        code, doc, _ = run_json(capsys, "poles", "--model", "airy")
        assert code == 0
        assert set(doc) == {"command", "model", "params", "poles",
                            "zeta0", "zeta_prime0"}
        first = doc["poles"][0]
        assert set(first) == {"location", "order", "residue"}
        assert first["location"] == pytest.approx(1.5)
        assert first["residue"]["re"] == pytest.approx(1 / math.pi, rel=1e-12)
        assert doc["zeta0"]["re"] == pytest.approx(-0.25)

    def test_check_flag(self, capsys):
        code, doc, _ = run_json(capsys, "poles", "--model", "riemann", "--check")
        assert code == 0
        assert doc["poles"][0]["check_discrepancy"] < 1e-3


class TestShift:
    def test_hurwitz_report(self, capsys):
        code, doc, _ = run_json(capsys, "shift", "--model", "riemann",
                                "--A", "1", "--B", "-0.75")
        assert code == 0
        assert doc["zeta0"]["re"] == pytest.approx(0.25)
        ref = -0.5 * math.log(2 * math.pi) + math.lgamma(0.25)
        assert doc["zeta_prime0"]["re"] == pytest.approx(ref, rel=1e-10)
        from zetakit import bernoulli_poly
        for n in range(1, 7):
            got = doc["values"][str(-n)]["re"]
            ref_n = -bernoulli_poly(n + 1, 0.25).real / (n + 1)
            assert got == pytest.approx(ref_n, rel=1e-9, abs=1e-12)
        assert doc["poles"][0]["location"] == pytest.approx(1.0)


class TestPointCommands:
    def test_series(self, capsys):
        code, doc, _ = run_json(capsys, "series", "--model", "riemann",
                                "--s", "2", "--nterms", "2000")
        assert code == 0
        assert doc["value"]["re"] == pytest.approx(math.pi ** 2 / 6, rel=1e-12)

    def test_contour_with_check(self, capsys):
        code, doc, _ = run_json(capsys, "contour", "--model", "airy",
                                "--s", "3", "--R", "1.0", "--check")
        assert code == 0
        assert doc["check_discrepancy"] < 1e-8

    def test_continue_left_of_strip(self, capsys):
        code, doc, _ = run_json(capsys, "continue", "--model", "airy", "--s=-0.5")
        assert code == 0
        assert doc["value"]["re"] == pytest.approx(-0.1394, abs=2e-4)

    def test_continue_at_pole_fails_cleanly(self, capsys):
        code, out, err = run(capsys, "continue", "--model", "airy", "--s", "1.5")
        assert code == 1
        assert "pole" in err

    def test_env_tolerance_override(self, capsys, monkeypatch):
        monkeypatch.setenv("ZETAKIT_QUAD_TOL", "1e-6")
        code, doc, _ = run_json(capsys, "continue", "--model", "airy", "--s", "0")
        assert code == 0
        assert doc["value"]["re"] == pytest.approx(-0.25, abs=1e-4)


class TestAaa:
    def test_reduced_pipeline(self, capsys):
        code, doc, _ = run_json(capsys, "aaa", "--model", "airy",
                                "--npoints", "60", "--nterms", "4000")
        assert code == 0
        assert set(doc) == {"command", "model", "params", "degree",
                            "max_residual", "converged", "features",
                            "verification"}
        assert doc["converged"]
        assert doc["verification"]["zeta0"]["re"] == pytest.approx(-0.25, abs=1e-4)
        assert any(-1.05 <= z <= -0.95 for z in doc["features"]["zeros"])


class TestCatalog:
    def test_lists_models(self, capsys):
        code, doc, _ = run_json(capsys, "catalog")
        assert code == 0
        names = {e["model"] for e in doc["models"]}
        assert names == {"riemann", "hurwitz", "airy", "pcf", "chf"}

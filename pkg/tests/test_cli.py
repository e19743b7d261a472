"""CLI surface: subcommand outputs, wire-format round-trips, exit codes."""

import json
import subprocess
import sys

from interpcat.cli import main

WORKED_P = {"flavor": "S", "top": 3, "bottom": 6, "blocks": [[1, 3, -2], [2, -4, -5], [-1], [-3, -6]]}
WORKED_Q = {"flavor": "S", "top": 6, "bottom": 2, "blocks": [[1, 3], [2, -2], [4, -1], [5], [6]]}


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


class TestCompose:
    def test_worked_example_inline(self, capsys):
        got = run_json(
            capsys, "compose", "--flavor", "S", "-P", json.dumps(WORKED_P), "-Q", json.dumps(WORKED_Q)
        )
        assert got["t_power"] == 1
        assert got["diagram"]["blocks"] == [[1, 3, -2], [2, -1]]

    def test_worked_example_files(self, capsys, tmp_path):
        p = tmp_path / "P.json"
        q = tmp_path / "Q.json"
        p.write_text(json.dumps(WORKED_P))
        q.write_text(json.dumps(WORKED_Q))
        got = run_json(capsys, "compose", "-P", str(p), "-Q", str(q))
        assert got["t_power"] == 1

    def test_at_prefix(self, capsys, tmp_path):
        p = tmp_path / "P.json"
        p.write_text(json.dumps(WORKED_P))
        got = run_json(capsys, "tensor", "-P", f"@{p}", "-Q", f"@{p}")
        assert got["diagram"]["top"] == 6

    def test_mismatch_is_domain_error(self, capsys):
        code, _ = run_cli(capsys, "compose", "-P", json.dumps(WORKED_P), "-Q", json.dumps(WORKED_P))
        assert code == 1

    def test_bad_payload_is_schema_error(self, capsys):
        code, _ = run_cli(capsys, "compose", "-P", '{"flavor":"S"}', "-Q", json.dumps(WORKED_Q))
        assert code == 2

    def test_flavor_mismatch_is_schema_error(self, capsys):
        code, _ = run_cli(
            capsys, "compose", "--flavor", "O", "-P", json.dumps(WORKED_P), "-Q", json.dumps(WORKED_Q)
        )
        assert code == 2


class TestScalarCommands:
    def test_simple_dim_spec_output(self, capsys):
        code, out = run_cli(capsys, "simple-dim", "--flavor", "S", "--lambda", "[2]")
        assert code == 0
        assert out.strip() == '"(t^2 - 3*t)/(2)"'

    def test_gram_spec_values(self, capsys):
        got = run_json(capsys, "gram", "-l", "1", "-m", "1", "--t", "1", "--flavor", "S")
        assert got["rank"] == 1 and got["nullity"] == 1

    def test_gram_symbolic(self, capsys):
        got = run_json(capsys, "gram", "-l", "1", "-m", "1", "--symbolic")
        assert got["gram"][0] == ["(t)/(1)", "(t)/(1)"]
        assert got["t0"] is None

    def test_dim_flavors(self, capsys):
        assert run_json(capsys, "dim", "--flavor", "S", "--m", "3") == {"dimension": "(t^3)/(1)"}
        assert run_json(capsys, "dim", "--flavor", "GL", "--r", "2", "--s", "1") == {
            "dimension": "(t^3)/(1)"
        }
        assert run_json(capsys, "dim", "--flavor", "Sp", "--m", "1") == {"dimension": "(-t)/(1)"}

    def test_lr(self, capsys):
        assert run_json(capsys, "lr", "--lambda", "[3]", "--mu", "[2]", "--nu", "[1]") == {
            "coefficient": 1
        }

    def test_quotient_dim(self, capsys):
        got = run_json(capsys, "quotient-dim", "-l", "2", "-m", "2", "--n", "2")
        assert got == {"dim": 8}

    def test_oracle_check(self, capsys):
        got = run_json(capsys, "oracle-check", "-l", "1", "-m", "1", "-k", "1", "--n", "3")
        assert got["passed"] is True

    def test_char_roundtrip_via_cli(self, capsys):
        moments = run_json(capsys, "char-moments", "--b", "[2]", "--c", "[]", "-K", "6")
        got = run_json(capsys, "char-search", "--moments", json.dumps(moments), "-r", "1", "-s", "0")
        assert got == {"b": [2], "c": []}

    def test_mult_commands(self, capsys):
        assert run_json(
            capsys, "mult-gl", "--lambda", "[1]", "--mu", "[1]", "--nu", "[1]", "--nubar", "[1]"
        ) == {"multiplicity": 1}
        assert run_json(capsys, "mult-osp", "--lambda", "[1]", "--mu", "[1]", "--nu", "[1,1]") == {
            "multiplicity": 1
        }

    def test_hc_stable_with_check(self, capsys):
        got = run_json(
            capsys,
            "hc-stable",
            "--a", "[0]", "--b", "[]", "--gamma", "[]", "--delta", "[]",
            "--nu", "[1]", "--nubar", "[1]", "--check-n", "11",
        )
        assert got["multiplicity"] == 1
        assert got["direct_check"]["multiplicity"] == 1


class TestMorphismCommands:
    def test_young_then_idem_check(self, capsys):
        y = run_json(capsys, "young", "--lambda", "[2,1]")
        got = run_json(capsys, "idem-check", "-f", json.dumps(y))
        assert got == {"idempotent": True}

    def test_young_then_decompose(self, capsys):
        y = run_json(capsys, "young", "--lambda", "[2]")
        got = run_json(capsys, "decompose", "-f", json.dumps(y))
        assert got == {
            "terms": [
                {"lambda": [], "mult": 2},
                {"lambda": [1], "mult": 2},
                {"lambda": [2], "mult": 1},
            ]
        }

    def test_gl_bipartition_path(self, capsys):
        y = run_json(capsys, "young", "--lambda", '{"black":[1],"white":[1]}', "--flavor", "GL")
        got = run_json(capsys, "decompose", "-f", json.dumps(y))
        assert got == {
            "terms": [
                {"lambda": {"black": [], "white": []}, "mult": 1},
                {"lambda": {"black": [1], "white": [1]}, "mult": 1},
            ]
        }
        code, out = run_cli(
            capsys, "simple-dim", "--flavor", "GL", "--lambda", '{"black":[1],"white":[1]}'
        )
        assert code == 0 and out.strip() == '"(t^2 - 1)/(1)"'

    def test_flavor_label_mismatch(self, capsys):
        code, _ = run_cli(capsys, "simple-dim", "--flavor", "GL", "--lambda", "[2]")
        assert code == 2

    def test_promote_then_trace(self, capsys):
        y = run_json(capsys, "young", "--lambda", "[1]")
        lifted = run_json(capsys, "promote", "-f", json.dumps(y))
        got = run_json(capsys, "trace", "-f", json.dumps(lifted))
        assert got == {"trace": "(t)/(1)"}

    def test_basis_change_roundtrip(self, capsys):
        y = run_json(capsys, "young", "--lambda", "[2]")
        delta = run_json(capsys, "basis-change", "--to", "delta", "-f", json.dumps(y))
        assert delta["basis"] == "delta"
        back = run_json(capsys, "basis-change", "--to", "e", "-f", json.dumps(delta))
        assert back["terms"] == y["terms"]

    def test_functor_rank(self, capsys):
        y = run_json(capsys, "young", "--lambda", "[2]")
        got = run_json(capsys, "functor-rank", "-f", json.dumps(y), "--n", "3")
        assert got == {"rank": 6}

    def test_negligible(self, capsys):
        blob = {
            "source": {"flavor": "S", "m": 1},
            "target": {"flavor": "S", "m": 1},
            "terms": [
                {"diagram": {"flavor": "S", "top": 1, "bottom": 1, "blocks": [[1, -1]]}, "coeff": "1"},
                {"diagram": {"flavor": "S", "top": 1, "bottom": 1, "blocks": [[1], [-1]]}, "coeff": "-1"},
            ],
        }
        assert run_json(capsys, "negligible", "-f", json.dumps(blob), "--t", "1") == {
            "negligible": True
        }
        assert run_json(capsys, "negligible", "-f", json.dumps(blob), "--t", "2") == {
            "negligible": False
        }

    def test_emitted_json_reparses(self, capsys):
        # every JSON the CLI emits is accepted back bit-exactly
        y = run_json(capsys, "young", "--lambda", "[2,1]")
        code, out1 = run_cli(capsys, "idem-check", "-f", json.dumps(y))
        code, out2 = run_cli(capsys, "idem-check", "-f", json.dumps(y))
        assert out1 == out2


class TestTripleCommand:
    def test_encode(self, capsys):
        got = run_json(
            capsys, "triple", "--mode", "encode", "--lambda", "[5,4,2,1]", "-k", "1", "-l", "1"
        )
        assert got == {"alpha": [4], "beta": [3], "gamma": [3, 1], "k": 1, "l": 1}

    def test_decode(self, capsys):
        got = run_json(
            capsys,
            "triple", "--mode", "decode",
            "--alpha", "[4]", "--beta", "[3]", "--gamma", "[3,1]", "-k", "1", "-l", "1",
        )
        assert got == {"lambda": [5, 4, 2, 1]}

    def test_decode_missing_field(self, capsys):
        code, _ = run_cli(capsys, "triple", "--mode", "decode", "--alpha", "[4]", "-k", "1", "-l", "1")
        assert code == 2


class TestSelftestCommand:
    def test_quick_passes(self, capsys):
        got = run_json(capsys, "selftest", "--level", "quick", "--seed", "7")
        assert got["counts"]["fail"] == 0
        names = [c["name"] for c in got["checks"]]
        assert "e_delta_roundtrip" in names

    def test_seed_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("INTERPCAT_SEED", "123")
        got = run_json(capsys, "selftest", "--level", "quick")
        assert got["seed"] == 123


class TestSubprocess:
    def test_entry_point_runs(self):
        proc = subprocess.run(
            [sys.executable, "-m", "interpcat", "lr", "--lambda", "[2,1]", "--mu", "[1]", "--nu", "[1,1]"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout) == {"coefficient": 1}

    def test_usage_error_exit_2(self):
        proc = subprocess.run(
            [sys.executable, "-m", "interpcat", "no-such-command"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 2

    def test_domain_error_exit_1(self):
        proc = subprocess.run(
            [sys.executable, "-m", "interpcat", "simple-dim", "--lambda", "[7]"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 1
        assert "budget" in proc.stderr

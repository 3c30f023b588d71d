import json
import math
import subprocess
import sys

import pytest

from superq.cli import FIBONACCI_HEADER, SWEEP_HEADER


class TestGoldenFiles:
    def test_state_json_bytes(self, run_cli, golden_dir):
        code, out, _ = run_cli(
            ["state", "--theta", "0", "--phi", "0", "--zeta-re", "1", "--zeta-im", "0", "--dim", "4"]
        )
        assert code == 0
        assert out == (golden_dir / "state_theta0_zeta1_dim4.json").read_text()

    def test_fibonacci_csv_bytes(self, run_cli, golden_dir):
        code, out, _ = run_cli(["fibonacci", "--n-max", "10", "--dim", "64"])
        assert code == 0
        assert out == (golden_dir / "fibonacci_nmax10_dim64.csv").read_text()


class TestStateEmission:
    def test_json_round_trips_norm(self, run_cli):
        code, out, _ = run_cli(
            [
                "state",
                "--theta", "1.1",
                "--phi", "2.3",
                "--zeta-re", "0.8",
                "--zeta-im", "-0.4",
                "--dim", "16",
            ]
        )
        assert code == 0
        payload = json.loads(out)
        total = sum(re * re + im * im for re, im in payload["psi0"] + payload["psi1"])
        assert math.sqrt(total) == pytest.approx(payload["norm"], abs=1e-12)
        assert payload["dim"] == 16
        assert len(payload["psi0"]) == 16
        assert abs(payload["p0"] + payload["p1"] - 1.0) <= 1e-12

    def test_pole_state_example(self, run_cli):
        code, out, _ = run_cli(
            ["state", "--theta", "0", "--phi", "0", "--zeta-re", "1", "--zeta-im", "0", "--dim", "4"]
        )
        payload = json.loads(out)
        assert payload["psi0"] == [[1, 0], [0, 0], [0, 0], [0, 0]]
        assert all(pair == [0, 0] for pair in payload["psi1"])
        assert payload["norm"] == 1

    def test_zeta_inf_serialization(self, run_cli):
        code, out, _ = run_cli(["state", "--theta", "1.0", "--zeta-inf", "--dim", "8"])
        assert code == 0
        payload = json.loads(out)
        assert payload["params"]["zeta"] == "inf"
        assert payload["concurrence_closed"] == 0

    def test_n_state_emission(self, run_cli):
        code, out, _ = run_cli(["state", "--n", "2", "--zeta-re", "1", "--zeta-im", "0", "--dim", "8"])
        assert code == 0
        payload = json.loads(out)
        assert payload["params"]["n"] == 2
        assert payload["concurrence_closed"] == pytest.approx(1.0, abs=1e-12)
        assert payload["p0"] == pytest.approx(0.5, abs=1e-12)

    def test_coherent_matches_displaced_reference(self, run_cli):
        args = ["--theta", "0.9", "--phi", "0.3", "--zeta-re", "1.2", "--zeta-im", "0.5", "--dim", "48"]
        code, out, _ = run_cli(["coherent", *args, "--alpha-re", "0.7", "--alpha-im", "-0.2"])
        assert code == 0
        payload = json.loads(out)
        reference = json.loads(run_cli(["state", *args])[1])
        assert payload["concurrence_gram"] == pytest.approx(
            reference["concurrence_gram"], abs=1e-8
        )
        assert payload["params"]["alpha"] == [0.7, -0.2]
        assert payload["norm"] == pytest.approx(1.0, abs=1e-10)


class TestAnalysisCommands:
    def test_concurrence_maximal_at_south_pole(self, run_cli):
        code, out, _ = run_cli(
            ["concurrence", "--theta", "3.14159265", "--phi", "0", "--zeta-re", "1", "--zeta-im", "0"]
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["concurrence_closed"] == pytest.approx(1.0, abs=1e-8)
        assert payload["abs_difference"] <= 1e-10

    def test_entropy_geometry(self, run_cli):
        zeta = math.tan(math.pi / 6)
        code, out, _ = run_cli(["entropy", "--zeta-re", str(zeta), "--dim", "16"])
        assert code == 0
        payload = json.loads(out)
        assert payload["z"] == pytest.approx(0.5, abs=1e-12)
        assert payload["p0"] == pytest.approx(0.75, abs=1e-12)
        assert payload["entropy_bits_closed"] == pytest.approx(0.811278124459133, abs=1e-12)
        assert payload["entropy_bits_spectral"] == pytest.approx(
            payload["entropy_bits_closed"], abs=1e-9
        )

    def test_uncertainty_agreement(self, run_cli):
        code, out, _ = run_cli(
            [
                "uncertainty",
                "--theta", "1.0",
                "--phi", "0.5",
                "--zeta-re", "2", "--zeta-im", "0",
                "--alpha-re", "1.3", "--alpha-im", "-0.7",
                "--dim", "96",
            ]
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["max_abs_difference"] <= 1e-8
        assert payload["closed"]["var_x"] == pytest.approx(payload["numeric"]["var_x"], abs=1e-8)


class TestSweep:
    def test_header_and_shape(self, run_cli):
        code, out, _ = run_cli(["sweep", "--zeta-re", "1", "--grid", "3,4", "--dim", "12"])
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == ",".join(SWEEP_HEADER)
        assert len(lines) == 1 + 3 * 4

    def test_default_grid_size(self, run_cli):
        code, out, _ = run_cli(["sweep", "--zeta-re", "0.5", "--dim", "8"])
        assert code == 0
        assert len(out.strip().split("\n")) == 1 + 25 * 25

    def test_byte_identical_reruns(self, run_cli):
        args = ["sweep", "--zeta-re", "0.7", "--zeta-im", "0.1", "--grid", "4,5", "--dim", "16"]
        assert run_cli(args)[1] == run_cli(args)[1]

    def test_bad_grid_rejected(self, run_cli):
        code, _, err = run_cli(["sweep", "--zeta-re", "1", "--grid", "0,5", "--dim", "8"])
        assert code == 2
        assert "grid" in err


class TestFibonacciCommand:
    def test_row_five(self, run_cli):
        code, out, _ = run_cli(["fibonacci", "--n-max", "5", "--dim", "64"])
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == ",".join(FIBONACCI_HEADER)
        row = dict(zip(FIBONACCI_HEADER, lines[-1].split(",")))
        assert (row["n"], row["fib_n"]) == ("5", "5")
        assert (row["zeta_sq_num"], row["zeta_sq_den"]) == ("1", "1")
        assert (row["dispersion_num"], row["dispersion_den"]) == ("5", "8")
        assert float(row["dispersion_numeric"]) == pytest.approx(0.625, abs=1e-8)

    def test_n_max_too_small(self, run_cli):
        code, _, err = run_cli(["fibonacci", "--n-max", "2"])
        assert code == 2


class TestVerifyCommand:
    def test_all_green(self, run_cli):
        code, out, err = run_cli(["verify", "--suite", "all", "--dim", "48", "--n-max", "8"])
        assert code == 0
        payload = json.loads(out)
        assert payload["summary"]["passed"] == payload["summary"]["total"]
        for check in payload["checks"]:
            assert check["pass"] == (check["residual"] <= check["tolerance"])

    def test_failure_exits_one(self, run_cli):
        code, out, err = run_cli(
            ["verify", "--suite", "uncertainty", "--dim", "48", "--tol", "1e-30"]
        )
        assert code == 1
        assert "failed" in err
        payload = json.loads(out)
        assert payload["summary"]["passed"] < payload["summary"]["total"]

    def test_seed_recorded(self, run_cli):
        code, out, _ = run_cli(["verify", "--suite", "fibonacci", "--n-max", "5", "--seed", "7"])
        assert code == 0
        assert json.loads(out)["seed"] == 7

    def test_unknown_suite_exits_two(self, run_cli):
        code, _, err = run_cli(["verify", "--suite", "nope"])
        assert code == 2
        assert "unknown suite" in err

    def test_guard_violation_exits_two(self, run_cli):
        code, _, err = run_cli(["verify", "--suite", "eigen", "--dim", "8", "--tol", "1e-12"])
        assert code == 2
        assert "dim" in err


class TestArgumentHandling:
    def test_zeta_flags_conflict(self, run_cli):
        code, _, err = run_cli(["state", "--theta", "1", "--zeta-re", "1", "--zeta-inf"])
        assert code == 2
        assert "zeta" in err

    def test_zeta_required(self, run_cli):
        code, _, err = run_cli(["state", "--theta", "1"])
        assert code == 2
        assert "zeta" in err

    def test_theta_or_n_required(self, run_cli):
        code, _, err = run_cli(["state", "--zeta-re", "1"])
        assert code == 2

    def test_theta_and_n_conflict(self, run_cli):
        code, _, err = run_cli(["state", "--theta", "1", "--n", "2", "--zeta-re", "1"])
        assert code == 2

    def test_theta_out_of_range(self, run_cli):
        code, _, err = run_cli(["state", "--theta", "9", "--zeta-re", "1"])
        assert code == 2
        assert "theta" in err

    def test_output_mismatch_rejected(self, run_cli):
        code, _, err = run_cli(["state", "--theta", "1", "--zeta-re", "1", "--output", "csv"])
        assert code == 2
        assert "emits" in err

    def test_phi_reduced_mod_two_pi(self, run_cli):
        code, out, _ = run_cli(["state", "--theta", "1.0", "--phi", "7.0", "--zeta-re", "1", "--dim", "4"])
        assert code == 0
        assert json.loads(out)["params"]["phi"] == pytest.approx(7.0 - 2.0 * math.pi)

    def test_unknown_command_exits_two(self, run_cli):
        with pytest.raises(SystemExit) as excinfo:
            run_cli(["teleport"])
        assert excinfo.value.code == 2


class TestEnvironment:
    def test_env_dim_override(self, run_cli, monkeypatch):
        monkeypatch.setenv("SUPERQ_DIM", "6")
        code, out, _ = run_cli(["state", "--theta", "0.5", "--zeta-re", "1"])
        assert code == 0
        assert json.loads(out)["dim"] == 6

    def test_explicit_dim_beats_env(self, run_cli, monkeypatch):
        monkeypatch.setenv("SUPERQ_DIM", "6")
        code, out, _ = run_cli(["state", "--theta", "0.5", "--zeta-re", "1", "--dim", "10"])
        assert code == 0
        assert json.loads(out)["dim"] == 10

    def test_invalid_env_dim_rejected(self, run_cli, monkeypatch):
        monkeypatch.setenv("SUPERQ_DIM", "many")
        code, _, err = run_cli(["state", "--theta", "0.5", "--zeta-re", "1"])
        assert code == 2
        assert "SUPERQ_DIM" in err


def test_module_entry_point_runs():
    completed = subprocess.run(
        [sys.executable, "-m", "superq", "state", "--theta", "0", "--zeta-inf", "--dim", "4"],
        capture_output=True,
        text=True,
    )
    assert completed.returncode == 0
    assert json.loads(completed.stdout)["params"]["zeta"] == "inf"

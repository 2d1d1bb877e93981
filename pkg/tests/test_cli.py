import csv
import math

import numpy as np
import pytest

from equibasis import cli


def run_cli(args):
    return cli.main(args)


def read_csv(path):
    with open(path, newline="") as handle:
        rows = list(csv.reader(handle))
    return rows[0], rows[1:]


def test_figure_output_deterministic(tmp_path):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert run_cli(["figure", "--id", "1", "--out", str(first)]) == 0
    assert run_cli(["figure", "--id", "1", "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_figure_one_shape(tmp_path):
    out = tmp_path / "fig1.csv"
    assert run_cli(["figure", "--id", "1", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["t", "abs_a0", "abs_a1", "abs_a2", "abs_a3", "abs_a4"]
    assert len(rows) == 201
    # product endpoint: only a_0 survives; maximal endpoint: all 1/sqrt(5)
    assert float(rows[0][1]) == pytest.approx(1.0)
    assert all(abs(float(v)) < 1e-12 for v in rows[0][2:])
    assert all(
        float(v) == pytest.approx(1 / math.sqrt(5), abs=1e-12) for v in rows[-1][1:]
    )


def test_figure_three_entropy_endpoints(tmp_path):
    out = tmp_path / "fig3.csv"
    assert run_cli(["figure", "--id", "3", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["t", "entropy_D2", "entropy_D3", "entropy_D5", "entropy_D8", "entropy_D100"]
    for value in rows[0][1:]:
        assert abs(float(value)) < 1e-10
    for value in rows[-1][1:]:
        assert float(value) == pytest.approx(1.0, abs=1e-10)


def test_figure_four_endpoints(tmp_path):
    out = tmp_path / "fig4.csv"
    assert run_cli(["figure", "--id", "4", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["t", "re_a1", "im_a1"]
    assert abs(float(rows[0][1])) < 1e-14 and abs(float(rows[0][2])) < 1e-14
    # closed-form endpoint: (1 - i)/sqrt(102) * e^{i*pi*(1/4 - 1/102)}
    expected = (1 - 1j) / math.sqrt(102) * np.exp(1j * math.pi * (0.25 - 1 / 102))
    assert float(rows[-1][1]) == pytest.approx(expected.real, abs=1e-12)
    assert float(rows[-1][2]) == pytest.approx(expected.imag, abs=1e-12)


def test_figure_eight_qubit_column_is_sine(tmp_path):
    out = tmp_path / "fig8.csv"
    assert run_cli(["figure", "--id", "8", "--D", "2", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["t", "cg_D2"]
    for row in rows:
        t = float(row[0])
        assert float(row[1]) == pytest.approx(math.sin(math.pi * t / 2), abs=1e-12)


def test_figure_five_sqrt_coefficients(tmp_path):
    out = tmp_path / "fig5.csv"
    assert run_cli(["figure", "--id", "5", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header[0] == "t" and len(header) == 6
    assert all(
        float(v) == pytest.approx(1 / math.sqrt(5), abs=1e-10) for v in rows[-1][1:]
    )


def test_figure_bad_id_is_usage_error(tmp_path):
    with pytest.raises(SystemExit) as excinfo:
        run_cli(["figure", "--id", "9", "--out", str(tmp_path / "x.csv")])
    assert excinfo.value.code == 2


def test_figure_bad_dimension_is_config_error(tmp_path):
    code = run_cli(["figure", "--id", "3", "--D", "0", "--out", str(tmp_path / "x.csv")])
    assert code == 2


def test_spectrum_graph_maximal(tmp_path):
    out = tmp_path / "spec.csv"
    assert run_cli(
        ["spectrum", "--construction", "graph", "--D", "5", "--t", "1.0", "--out", str(out)]
    ) == 0
    header, rows = read_csv(out)
    assert header == ["index", "lambda", "sqrt_lambda"]
    assert len(rows) == 7  # 5 coefficients + entropy + g_concurrence
    for row in rows[:5]:
        assert float(row[1]) == pytest.approx(0.2, abs=1e-12)
    assert rows[5][0] == "entropy"
    assert float(rows[5][1]) == pytest.approx(1.0, abs=1e-10)
    assert rows[6][0] == "g_concurrence"
    assert float(rows[6][1]) == pytest.approx(1.0, abs=1e-10)


def test_spectrum_gauss_product(tmp_path):
    out = tmp_path / "spec0.csv"
    assert run_cli(
        ["spectrum", "--construction", "gauss", "--D", "4", "--t", "0.0", "--out", str(out)]
    ) == 0
    _, rows = read_csv(out)
    assert float(rows[0][1]) == pytest.approx(1.0, abs=1e-12)
    assert all(float(r[1]) < 1e-12 for r in rows[1:4])


def test_spectrum_graph_full_rank_interior(tmp_path):
    out = tmp_path / "spec_half.csv"
    assert run_cli(
        ["spectrum", "--construction", "graph", "--D", "8", "--t", "0.5", "--out", str(out)]
    ) == 0
    _, rows = read_csv(out)
    assert all(float(r[1]) > 0.0 for r in rows[:8])


def test_spectrum_config_error(tmp_path):
    code = run_cli(
        ["spectrum", "--construction", "graph", "--D", "4", "--t", "2.0", "--out", str(tmp_path / "x.csv")]
    )
    assert code == 2


def test_ghz_cut_entropies(tmp_path):
    out = tmp_path / "ghz.csv"
    assert run_cli(["ghz", "--sites", "3", "--D", "2", "--t", "1.0", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["cut", "entropy"]
    assert [r[0] for r in rows] == ["site0|rest", "site1|rest", "site2|rest"]
    for row in rows:
        assert float(row[1]) == pytest.approx(1.0, abs=1e-10)


def test_verify_reciprocity_passes():
    assert run_cli(["verify", "--scope", "reciprocity", "--dmax", "8"]) == 0


def test_verify_all_fails_at_absurd_tolerance():
    assert run_cli(["verify", "--scope", "all", "--dmax", "4", "--tol", "1e-30"]) == 1


def test_verify_report_lines(capsys):
    assert run_cli(["verify", "--scope", "multipartite", "--dmax", "3"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "max residual" in out
    assert out.strip().endswith("verification PASSED")


def test_verify_rejects_small_dmax():
    assert run_cli(["verify", "--scope", "gauss", "--dmax", "1"]) == 2


def test_threads_env_validation(tmp_path, monkeypatch):
    monkeypatch.setenv("EQUIBASIS_THREADS", "not-a-number")
    code = run_cli(["figure", "--id", "1", "--out", str(tmp_path / "x.csv")])
    assert code == 2
    monkeypatch.setenv("EQUIBASIS_THREADS", "1")
    assert run_cli(["figure", "--id", "1", "--out", str(tmp_path / "y.csv")]) == 0

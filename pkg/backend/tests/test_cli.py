import json
import math

import pytest

import cli
from core import catalog


def run(capsys, *argv):
    status = cli.run(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_eval_exponential_density_at_origin(capsys):
    status, out, _ = run(capsys, "eval", "--dist", "exponential", "--param", "theta=1", "--x", "0", "--what", "pdf")
    assert status == cli.EXIT_OK
    assert out.strip() == "1"


def test_eval_chi_square_cdf(capsys):
    status, out, _ = run(capsys, "eval", "--dist", "chi-square", "--param", "k=4", "--x", "2", "--what", "cdf")
    assert status == 0
    assert float(out) == pytest.approx(1.0 - 3.0 * math.exp(-1.0), rel=1e-14)


def test_eval_several_points_as_csv(capsys):
    status, out, _ = run(
        capsys, "eval", "--dist", "Gumbel", "--x", "-1", "0", "2.5", "--what", "sf", "--format", "csv"
    )
    lines = out.strip().splitlines()
    assert status == 0
    assert lines[0] == "x,sf"
    assert len(lines) == 4
    assert float(lines[2].split(",")[1]) == pytest.approx(1.0 - math.exp(-1.0), rel=1e-14)


def test_eval_quantile_as_json(capsys):
    status, out, _ = run(capsys, "eval", "--dist", "exponential", "--x", "0.5", "--what", "quantile", "--format", "json")
    document = json.loads(out)
    assert status == 0
    assert document["values"][0] == pytest.approx(math.log(2.0), rel=1e-14)


def test_eval_gumbel_lower_quantile(capsys):
    status, out, _ = run(capsys, "eval", "--dist", "standard gumbel", "--x", "0.05", "--what", "quantile")
    assert status == 0
    assert float(out) == pytest.approx(-math.log(-math.log(0.05)), rel=1e-12)


def test_describe_levy_has_no_moments(capsys):
    status, out, _ = run(capsys, "describe", "--dist", "levy", "--param", "a=0", "c=1", "--format", "json")
    document = json.loads(out)
    assert status == 0
    assert document["distribution"] == "Lévy"
    assert document["mean"] is None
    assert document["variance"] is None
    assert document["family"] == "Amoroso"
    assert document["parameters"] == {"a": 0.0, "theta": 0.5, "alpha": 0.5, "beta": -1.0}
    assert "Lévy" in document["matches"]


def test_describe_text_marks_gated_moments(capsys):
    status, out, _ = run(capsys, "describe", "--dist", "inverse exponential")
    assert status == 0
    assert out.startswith("inverse exponential = Amoroso(a=0, theta=1, alpha=1, beta=-1)")
    assert "undefined" in out
    assert "matches" in out


@pytest.mark.parametrize(
    "name",
    sorted(
        {entry.name for entry in catalog.entries() if entry.constructible}
        | {synonym for synonym, canonical in catalog.synonym_index().items() if catalog.lookup(canonical).constructible}
    ),
)
def test_describe_accepts_every_constructible_name(name, capsys):
    status, out, _ = run(capsys, "describe", "--dist", name)
    assert status == 0
    assert out.startswith(catalog.lookup(name).name)


def test_sample_is_reproducible(capsys):
    argv = ("sample", "--dist", "Weibull", "--param", "beta=1.5", "-n", "5", "--seed", "42")
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    draws = [float(line) for line in first.splitlines()]
    assert len(draws) == 5
    assert all(draw >= 0.0 for draw in draws)


def test_sample_zero_draws(capsys):
    status, out, _ = run(capsys, "sample", "--dist", "gamma", "-n", "0")
    assert status == 0
    assert out == ""


def test_curve_csv(capsys):
    status, out, _ = run(capsys, "curve", "--dist", "exponential", "--from", "0", "--to", "1", "--points", "3", "--what", "pdf,cdf")
    lines = out.strip().splitlines()
    assert status == 0
    assert lines[0] == "x,pdf,cdf"
    assert [line.split(",")[0] for line in lines[1:]] == ["0", "0.5", "1"]
    assert float(lines[3].split(",")[1]) == pytest.approx(math.exp(-1.0), rel=1e-15)


def test_curve_rejects_quantile(capsys):
    status, _, err = run(capsys, "curve", "--dist", "exponential", "--from", "0", "--to", "1", "--what", "quantile")
    assert status == cli.EXIT_REJECTED
    assert "error" in err


def test_catalog_formats(capsys):
    status, out, _ = run(capsys, "catalog", "--format", "json")
    assert status == 0
    assert len(json.loads(out)) == len(catalog.entries())
    status, out, _ = run(capsys, "catalog", "--find", "Vinci")
    assert status == 0
    assert out.splitlines()[0] == "name        inverse gamma"


def test_check_limits_suite(capsys):
    status, out, _ = run(capsys, "check", "--suite", "limits")
    lines = out.strip().splitlines()
    assert status == cli.EXIT_OK
    assert len(lines) == 14
    assert all(line.endswith("PASS") for line in lines)


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "--dist", "gamma", "--param", "alpha", "--x", "1"),
        ("eval", "--dist", "gamma", "--param", "alpha=two", "--x", "1"),
        ("eval", "--x", "1"),
        ("eval", "--dist", "gamma", "--x", "1", "--what", "hazard"),
        ("frobnicate",),
        ("check", "--suite", "limits", "--seed", "-1"),
        ("check", "--suite", "limits", "--seed", "seven"),
    ],
)
def test_usage_errors(argv, capsys):
    status, _, _ = run(capsys, *argv)
    assert status == cli.EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "--dist", "gama", "--x", "1"),
        ("eval", "--dist", "chi-square", "--param", "k=2.5", "--x", "1"),
        ("eval", "--dist", "exponential", "--param", "theta=0", "--x", "1"),
        ("eval", "--dist", "normal", "--x", "1"),
        ("eval", "--dist", "exponential", "--x", "1.5", "--what", "quantile"),
        ("sample", "--dist", "exponential", "--seed", "-1"),
        ("catalog", "--find", "nonesuch"),
    ],
)
def test_rejected_requests(argv, capsys):
    status, _, err = run(capsys, *argv)
    assert status == cli.EXIT_REJECTED
    assert err.startswith("error:") or "error:" in err


def test_unknown_name_suggests_alternatives(capsys):
    _, _, err = run(capsys, "describe", "--dist", "gama")
    assert "gamma" in err


def test_check_rejects_negative_seed_before_running(capsys):
    status, out, err = run(capsys, "check", "--suite", "limits", "--seed", "-1")
    assert status == cli.EXIT_USAGE
    assert out == ""
    assert "seed must be a non-negative integer" in err
    assert "Traceback" not in err

"""Command-line interface: subcommands, initial-state parsing, exit codes."""

import json

import pytest

from filaments.cli import main, parse_initial
from filaments.core import Filament
from filaments.rules import serialize_rule, automaton_ii


# -- initial-state parsing -------------------------------------------------------


def test_parse_initial_plain_digits():
    assert parse_initial("0221", None, 3) == Filament.from_string("0221")
    assert parse_initial("0221", 4, 3) == Filament.from_string("0221")
    with pytest.raises(ValueError):
        parse_initial("0221", 5, 3)
    with pytest.raises(ValueError):
        parse_initial("0321", None, 3)


def test_parse_initial_run_length_patterns():
    assert parse_initial("[0 2^3]", None, 3) == Filament.from_string("0222")
    assert parse_initial("[0 2^{n-1}]", 5, 3) == Filament.from_string("02222")
    assert parse_initial("[0^{n-1} 1]", 4, 3) == Filament.from_string("0001")
    assert parse_initial("[01 1^2]", None, 2) == Filament.from_string("0111")
    # A zero-count token simply contributes nothing.
    assert parse_initial("[0^{n-1} 1]", 1, 3) == Filament.from_string("1")
    with pytest.raises(ValueError):
        parse_initial("[0 2^{n-1}]", None, 3)  # needs a length for n
    with pytest.raises(ValueError):
        parse_initial("[0^{n-1}]", 1, 3)  # denotes an empty filament
    with pytest.raises(ValueError):
        parse_initial("[0^{n-3}]", 2, 3)  # negative repeat count


def test_parse_initial_named_forms():
    assert parse_initial("zeros-then-ones", 4, 3) == Filament.from_string("0001")
    assert parse_initial("uniform:2", 3, 3) == Filament.from_string("222")
    a = parse_initial("random:9", 12, 3)
    b = parse_initial("random:9", 12, 3)
    assert a == b
    assert len(a) == 12
    with pytest.raises(ValueError):
        parse_initial("random:9", None, 3)
    with pytest.raises(ValueError):
        parse_initial("uniform:5", 3, 3)


# -- subcommands ------------------------------------------------------------------


def test_trace_ascii_output(capsys):
    rc = main(["trace", "--rule", "automaton-i", "--init", "[0 2^{n-1}]",
               "--length", "4", "--steps", "3"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out == "0222\n0022\n0002\n0001\n"


def test_trace_pgm_output(capsys, tmp_path):
    path = tmp_path / "trace.pgm"
    rc = main(["trace", "--rule", "automaton-ii", "--init", "zeros-then-ones",
               "--length", "4", "--steps", "2", "--format", "pgm", "--out", str(path)])
    assert rc == 0
    text = path.read_text()
    assert text.startswith("P2\n4 3\n255\n")
    assert capsys.readouterr().out == ""


def test_classify_reports_cycle(capsys):
    rc = main(["classify", "--rule", "automaton-i", "--init", "0222"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == [
        "outcome: cyclic",
        "transient: 0",
        "period: 18",
        "wave: A",
        "k_max: 1",
        "horizon: 300",
    ]


def test_classify_quiescent_prints_settle_time(capsys):
    rc = main(["classify", "--rule", "automaton-ii", "--init", "0000"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "outcome: quiescent" in out
    assert "settle_time: 0" in out


def test_classify_unresolved_exit_code(capsys):
    rc = main(["classify", "--rule", "automaton-i", "--init", "0222", "--horizon", "5"])
    assert rc == 2
    assert "outcome: unresolved" in capsys.readouterr().out


def test_census_output(capsys):
    rc = main(["census", "--rule", "automaton-i", "--n", "6"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "live: 366" in out
    assert "prediction_mismatches: 0" in out


def test_census_respects_budget(capsys):
    rc = main(["census", "--rule", "automaton-i", "--n", "19"])
    assert rc == 1
    assert "budget" in capsys.readouterr().err


def test_population_csv(capsys, tmp_path):
    path = tmp_path / "pop.csv"
    rc = main(["population", "--rule", "automaton-i", "--m", "4", "--ticks", "10",
               "--seed", "0", "--n0", "4", "--growth-interval", "5", "--out", str(path)])
    assert rc == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "tick,population_size,filament_length,live_count,live_fraction,grew"
    assert len(lines) == 11
    # With --out the CSV goes to the file and stdout stays quiet.
    assert capsys.readouterr().out == ""
    # Without --out the same CSV lands on stdout.
    rc = main(["population", "--rule", "automaton-i", "--m", "4", "--ticks", "10",
               "--seed", "0", "--n0", "4", "--growth-interval", "5"])
    assert rc == 0
    assert capsys.readouterr().out == path.read_bytes().decode()


def test_population_requires_seed(capsys):
    rc = main(["population", "--rule", "automaton-i", "--m", "4", "--ticks", "10"])
    assert rc == 1
    assert "--seed" in capsys.readouterr().err


def test_search_two_state_scan(capsys):
    rc = main(["search", "--lengths", "4", "--budget", "8", "--sample-size", "8"])
    assert rc == 2  # sampled coverage is incomplete by construction
    out = capsys.readouterr().out
    assert "coverage: 4=sampled" in out


def test_search_hunt_smoke(capsys):
    rc = main(["search", "--space", "3-state-symmetric-sample", "--budget", "25",
               "--seed", "1", "--hunt-lengths", "4,5"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "candidates_total: 25" in out


def test_rule_info_and_index(capsys):
    rc = main(["rule-info", "--rule", "oblivious-example"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "oblivious: true" in out
    assert "index: 186" in out
    rc = main(["rule-info", "--rule", "bouncer"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "interesting: true" in out
    assert "index:" not in out  # indexing only covers two-state radius-1 rules


def test_rule_fmt_round_trip(capsys, tmp_path):
    path = tmp_path / "aii.rule"
    path.write_text(serialize_rule(automaton_ii()))
    rc = main(["rule-fmt", "--rule", str(path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("states 3\nradius 1\nsymmetric true\n")
    assert "0 | * 1 -> 1" in out


def test_usage_errors_exit_one(capsys):
    assert main([]) == 1
    assert main(["no-such-command"]) == 1
    rc = main(["trace", "--rule", "no-such-rule", "--init", "000"])
    assert rc == 1
    err = capsys.readouterr().err
    assert "automaton-i" in err  # the hint lists known rules


def test_trace_random_needs_length(capsys):
    rc = main(["trace", "--rule", "automaton-i", "--init", "random:3"])
    assert rc == 1
    assert capsys.readouterr().err


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
    assert main(["trace", "--help"]) == 0
    assert "--steps" in capsys.readouterr().out

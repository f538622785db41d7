"""File formats, configuration and report rendering."""
import csv
import io
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supersat.config import RunConfig, load_config
from supersat.fileio import (
    format_family, format_perms, format_spec, parse_family, parse_perms, parse_spec,
)
from supersat.oracle import min_disj_sets
from supersat.permfam import CosetSpec, lex_perm_segment
from supersat.report import emit_report, to_plain
from supersat.setfam import SetFamily, lex_segment


def test_family_format():
    F = parse_family("# header next\n5 2\n1,2\n  \n3, 4 # trailing\n")
    assert F.sets() == [(1, 2), (3, 4)]
    assert parse_family(format_family(F)) == F
    for bad in ("", "5\n1,2\n", "4 2\n1,x\n", "4 2\n1,2,3\n"):
        with pytest.raises(ValueError):
            parse_family(bad)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))).flatmap(
    lambda nk: st.tuples(st.just(nk[0]), st.just(nk[1]), st.integers(0, 30))))
def test_family_round_trip(nks):
    n, k, s = nks
    from supersat.exactcomb import binom
    F = lex_segment(n, k, min(s, binom(n, k)))
    assert parse_family(format_family(F)) == F


def test_perm_and_spec_formats():
    P = lex_perm_segment(4, 9)
    assert parse_perms(format_perms(P)) == P
    with pytest.raises(ValueError):
        parse_perms("3\n1 1 2\n")
    S = parse_spec("# spec\n6\n1 1\n2 3\n")
    assert S == CosetSpec(6, ((1, 1), (2, 3)))
    assert parse_spec(format_spec(S)) == S
    with pytest.raises(ValueError):
        parse_spec("6\n1 2 3\n")


def test_config_layers(tmp_path):
    assert load_config(env={}) == RunConfig()
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"workers": 3, "time_budget": 5}))
    cfg = load_config(str(path), env={"SUPERSAT_WORKERS": "2", "SUPERSAT_PERM_CAP": "7"})
    assert cfg.workers == 2 and cfg.perm_cap == 7 and cfg.time_budget == 5.0
    assert load_config(str(path), env={}, workers=4).workers == 4
    assert RunConfig().budget is None and RunConfig(time_budget=2).budget == 2
    with pytest.raises(ValueError):
        RunConfig(format="yaml")
    with pytest.raises(ValueError):
        RunConfig(zeta_cap=0)
    with pytest.raises(ValueError):
        RunConfig(set_cap=65)


def test_empty_reports():
    assert json.loads(emit_report({}, "json")) == {}
    assert json.loads(emit_report(None, "json")) == {}
    assert json.loads(emit_report([], "json")) == []
    assert emit_report({}, "csv") == ""
    assert emit_report([], "plain") == ""
    with pytest.raises(ValueError):
        emit_report({}, "xml")


def test_big_integers_are_decimal_strings():
    big = 10 ** 5000 + 7
    out = json.loads(emit_report({"count": big, "ratio": Fraction(3, 6), "flag": True}, "json"))
    assert out["count"] == str(big) and out["ratio"] == "1/2" and out["flag"] is True
    assert to_plain(Fraction(4, 2)) == "2"


def test_minimizer_report_json_order():
    rep = min_disj_sets(5, 2, 5)
    out = emit_report(rep, "json")
    data = json.loads(out)
    assert list(data)[:6] == ["params", "minimum", "num_minimizers", "sample_minimizers",
                              "lex_or_T_value", "lex_or_T_optimal"]
    assert data["minimum"] == "2"


def test_csv_rows():
    rows = [{"a": 1, "b": [1, 2]}, {"a": 2, "c": None}]
    got = list(csv.DictReader(io.StringIO(emit_report(rows, "csv"))))
    assert got == [{"a": "1", "b": "[\"1\",\"2\"]", "c": ""}, {"a": "2", "b": "", "c": ""}]


def test_dataclass_rendering_skips_callables():
    F = SetFamily(4, 2, ())
    assert to_plain(F) == {"n": "4", "k": "2", "members": []}

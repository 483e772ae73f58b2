## Tests for the flecklab command line
## Golden records, exit codes, output formats and the scan cursor file.

import io
import json
import os

import argparse
import pytest

from pyFleckLab import cli, harness, settings
from pyFleckLab.cli import dispatch, emit, int_range
from pyFleckLab.exactarith import primes_between

GOLDEN = os.path.join(os.path.dirname(__file__), 'golden')

def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()

def _golden(name):
    with open(os.path.join(GOLDEN, name)) as f:
        return f.read()

## ==== Golden records
def test_eval_fleck_golden():
    code, out, _ = _run(['eval', '--p', '3', '--n', '4', '--r', '0'])
    assert code == 0
    assert out == _golden('eval_fleck.jsonl')

def test_verify_remark_golden():
    code, out, _ = _run(['verify', '--suite', 'remark', '--p', '5', '--select', 'wolstenholme'])
    assert code == 0
    assert out == _golden('verify_remark_wolstenholme.jsonl')

def test_class_golden():
    code, out, _ = _run(['class', '--p', '7'])
    assert code == 0
    assert out == _golden('class_p7.jsonl')

## ==== eval
def test_eval_closed():
    code, out, _ = _run(['eval', '--what', 'closed', '--p', '5', '--n', '13', '--r', '0'])
    assert code == 0
    rec = json.loads(out)
    assert rec['direct'] == rec['digits'] == rec['series'] == rec['recurrence'] == 3
    assert rec['branch'] == 'n0>n1>0'

def test_eval_sequences():
    assert json.loads(_run(['eval', '--what', 'bernoulli', '--n', '12'])[1])['value'] == '-691/2730'
    assert json.loads(_run(['eval', '--what', 'stirling2', '--n', '10', '--k', '3'])[1])['value'] == '9330'
    assert json.loads(_run(['eval', '--what', 'stirling1', '--n', '4', '--k', '2'])[1])['value'] == '11'
    rec = json.loads(_run(['eval', '--what', 'higher-bernoulli', '--n', '3', '--m', '3', '--p', '5'])[1])
    assert rec['value'] == '-9/4' and rec['residue_mod_p'] == 4

def test_eval_generalized():
    rec = json.loads(_run(['eval', '--p', '2', '--a', '2', '--n', '8'])[1])
    assert rec['value'] == '-9' and rec['floor_exponent'] == 3

def test_eval_closed_disagreement(monkeypatch):
    monkeypatch.setattr(cli, 'fleck_mod_p_by_series', lambda p, n, r: 99)
    code, _, err = _run(['eval', '--what', 'closed', '--p', '5', '--n', '13'])
    assert code == 1
    assert 'ERROR (Violation)' in err

## ==== Exit codes
def test_missing_prime_is_usage_error():
    code, out, err = _run(['eval', '--n', '4'])
    assert code == 2 and out == ''
    assert "ERROR (Invalid setting)" in err

def test_bad_arguments_are_usage_errors():
    code, _, err = _run(['verify', '--suite', 'nonsense', '--p', '5'])
    assert code == 2
    assert 'usage: flecklab' in err
    assert _run(['eval', '--p', '4', '--n', '3'])[0] == 2
    assert _run(['frobnicate'])[0] == 2

def test_version(capsys):
    assert _run(['--version'])[0] == 0
    assert capsys.readouterr().out.strip() == '0.1.0'

def test_resource_limit(monkeypatch):
    monkeypatch.setenv(settings.ENV_MAX_N, '10')
    code, _, err = _run(['eval', '--p', '3', '--n', '20'])
    assert code == 3
    assert 'ERROR (Resource limit)' in err

def test_verify_violation(monkeypatch):
    monkeypatch.setattr(cli, 'run_suite',
                        lambda *args, **kw: [harness.make_report('x', {'p': 3}, 1, 0, 2)])
    code, out, _ = _run(['verify', '--suite', 'digits', '--p', '3'])
    assert code == 1
    assert json.loads(out)['holds'] is False

def test_verify_ranges():
    code, out, _ = _run(['verify', '--suite', 'digits', '--p', '3,5', '--n', '0..4', '--r=-1..1'])
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 2 * 5 * 3
    assert records[0]['params'] == {'p': 3, 'n': 0, 'r': -1, 'n0': 0, 'n1': 0}

## ==== scan
def test_scan_cursor_file(tmp_path):
    cursor = str(tmp_path / 'scan.json')
    argv = ['scan', '--p', '2', '--n-max', '10', '--cursor', cursor, '--checkpoint-every', '5']
    code, out, _ = _run(argv)
    assert code == 0
    rec = json.loads(out)
    assert rec['instances_checked'] == 18 and rec['counterexamples'] == []
    with open(cursor) as f:
        saved = json.load(f)
    assert saved['cursor'] == [2, 1, 1, 10, 1] and saved['instances_checked'] == 18
    assert saved['range'] == {'p': [2], 'a': [1], 'b': [1], 'n_max': 10}
    code, again, _ = _run(argv)
    assert code == 0
    assert json.loads(again) == rec

def test_scan_cursor_keeps_counterexamples(tmp_path, monkeypatch):
    monkeypatch.setattr(harness, '_period_holds', lambda *inst, cached=True: inst[3] != 3)
    cursor = str(tmp_path / 'scan.json')
    argv = ['scan', '--p', '2', '--n-max', '4', '--cursor', cursor]
    code, out, _ = _run(argv)
    assert code == 1
    first = json.loads(out)
    assert len(first['counterexamples']) == 2
    code, out, _ = _run(argv)
    assert code == 1
    assert json.loads(out) == first

def test_scan_cursor_from_other_range(tmp_path):
    cursor = str(tmp_path / 'scan.json')
    assert _run(['scan', '--p', '2', '--n-max', '4', '--cursor', cursor])[0] == 0
    code, _, err = _run(['scan', '--p', '3', '--n-max', '4', '--cursor', cursor])
    assert code == 2 and "'resume.range'" in err

def test_scan_conjecture_flag():
    code, out, _ = _run(['scan', '--conjecture', '1.1', '--p', '2', '--n-max', '4'])
    assert code == 0
    assert json.loads(out) == json.loads(_run(['scan', '--p', '2', '--n-max', '4'])[1])
    assert _run(['scan', '--conjecture', '2.1', '--p', '2', '--n-max', '4'])[0] == 2

def test_scan_counterexample_exit(monkeypatch):
    monkeypatch.setattr(harness, '_period_holds', lambda *inst, cached=True: False)
    code, out, _ = _run(['scan', '--p', '2', '--n-max', '2'])
    assert code == 1
    assert len(json.loads(out)['counterexamples']) == 2

## ==== table
def test_table_methods_agree():
    direct = _run(['table', '--p', '5', '--n-max', '30'])[1]
    recur = _run(['table', '--p', '5', '--n-max', '30', '--method', 'recurrence'])[1]
    assert direct == recur
    first = json.loads(direct.splitlines()[4])
    assert first == {'n': 4, 'r0': 1, 'r1': 1, 'r2': 1, 'r3': 1, 'r4': 1}

def test_table_recurrence_needs_a1():
    assert _run(['table', '--p', '3', '--a', '2', '--n-max', '5', '--method', 'recurrence'])[0] == 2

## ==== Output formats
def test_emit_csv_and_human():
    recs = [{'n': 0, 'value': '1', 'ok': True}, {'n': 10, 'value': '-3', 'ok': False}]
    buf = io.StringIO()
    emit(recs, 'csv', buf)
    assert buf.getvalue() == "n,value,ok\n0,1,true\n10,-3,false\n"
    buf = io.StringIO()
    emit(recs, 'human', buf)
    assert buf.getvalue().splitlines() == ["n   value  ok", "0   1      true", "10  -3     false"]
    buf = io.StringIO()
    emit([], 'csv', buf)
    assert buf.getvalue() == ''

def test_int_range():
    assert int_range('1..3') == [1, 2, 3]
    assert int_range('-2..0') == [-2, -1, 0]
    assert int_range('2,5') == [2, 5]
    assert int_range('7') == [7]
    with pytest.raises(argparse.ArgumentTypeError):
        int_range('x..y')

def test_negative_n_is_usage_error():
    code, out, err = _run(['eval', '--p', '3', '--n', '-1'])
    assert code == 2 and out == ''
    assert "'n'=-1" in err

def test_csv_reports_and_round_trip():
    code, out, _ = _run(['verify', '--suite', 'sharpness', '--p', '7', '--n', '1..3', '--format', 'csv'])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[0] == 'check_id,params,lhs,rhs,modulus,holds'
    code, out, _ = _run(['verify', '--suite', 'remark', '--p', '13', '--select', 'bernoulli-tail'])
    for line in out.splitlines():
        rec = json.loads(line)
        assert (int(rec['lhs']) - int(rec['rhs'])) % int(rec['modulus']) == 0

def test_class_default_range():
    code, out, _ = _run(['class'])
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [rec['p'] for rec in records] == primes_between(3, settings.CLASS_PRIME_CEILING)
    assert records[0]['regular'] is None
    by_p = {rec['p']: rec for rec in records}
    assert by_p[229]['class_number'] == 3
    assert by_p[37]['irregular_indices'] == [32]
    assert by_p[13]['u'] == '1' and by_p[13]['v'] == '3'

@pytest.mark.parametrize("alias,name", [('thm11', 'digits'), ('thm12', 'series'), ('thm13', 'lift')])
def test_numbered_suite_names(alias, name):
    code, out, _ = _run(['verify', '--suite', alias, '--p', '3'])
    assert code == 0 and out
    assert out == _run(['verify', '--suite', name, '--p', '3'])[1]

def test_remark_range_is_not_truncated():
    code, out, _ = _run(['verify', '--suite', 'remark', '--p', '7', '--select', 'glaisher', '--n', '2..3'])
    assert code == 0
    assert [json.loads(line)['params']['n'] for line in out.splitlines()] == [2, 3]

def test_higher_bernoulli_needs_prime():
    code, out, err = _run(['eval', '--what', 'higher-bernoulli', '--n', '1', '--m', '1', '--p', '4'])
    assert code == 2 and out == ''
    assert "'p'=4" in err and 'must be a prime' in err

"""
    test_reports
    ~~~~~~~~~~~~

    Tests for the :mod:`~compoundbh.reports` module.
"""
import io
import json

import pandas as pd

from compoundbh import reports, suites


def test_write_json_is_sorted(tmp_path):
    path = tmp_path / 'doc.json'
    written = reports.write_json({'b': 1, 'a': [0.5]}, path)
    text = io.open(path, encoding='utf-8').read()
    assert written == len(text)
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {'a': [0.5], 'b': 1}


def test_records_frame_flattens_rows():
    rows = [suites.Row('sanity', 'uniform', 0.1, 0.09, 0.01, 100, 0, 0.1, None, suites.Verdict.Pass)]
    frame = reports.records_frame(rows)
    assert list(frame.columns[:3]) == ['suite', 'scenario', 'alpha']
    assert frame.loc[0, 'verdict'] == 'pass'


def test_write_csv_keeps_precision(tmp_path):
    path = tmp_path / 'table.csv'
    reports.write_csv(pd.DataFrame({'p': [1 / 3, 0.1]}), path)
    assert pd.read_csv(path)['p'].tolist() == [1 / 3, 0.1]


def test_format_rows():
    assert reports.format_rows(pd.DataFrame()) == '(no rows)'
    assert 'alpha' in reports.format_rows(pd.DataFrame({'alpha': [0.1]}))

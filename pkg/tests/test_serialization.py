from fractions import Fraction

import pytest

from dsl_algebra.algebra.series import Series
from dsl_algebra.algebra.tensor import WTensor
from dsl_algebra.algebra.words import E01, XY
from dsl_algebra.exceptions import InputFormatError
from dsl_algebra.linalg.exact import Subspace
from dsl_algebra.utils.serialization import (dumps, loads, rational_from_str, rational_to_str, series_from_dict,
                                             series_to_dict, subspace_from_record, subspace_to_record,
                                             tensor_to_dict)


def test_rational_strings():
    assert rational_to_str(Fraction(3, 6)) == "1/2"
    assert rational_to_str(Fraction(-4)) == "-4"
    assert rational_from_str("-2/3") == Fraction(-2, 3)
    assert rational_from_str(5) == 5


@pytest.mark.parametrize("bad", ["1/0", "abc", 0.5, True, None, "0.5", "1e3", " 1", "1/-2", "²"])
def test_rational_rejects_inexact_values(bad):
    with pytest.raises(InputFormatError):
        rational_from_str(bad)


def test_series_json():
    a = Series(XY, 3, {b"\x00\x01": Fraction(1, 2), b"\x01\x00": -1})
    data = series_to_dict(a)
    assert data == {"alphabet": ["x", "y"], "max_degree": 3, "terms": {"01": "1/2", "10": "-1"}}
    assert series_from_dict(data) == a


@pytest.mark.parametrize("data", [
    [],
    {"alphabet": ["e0", "e1"], "max_degree": 2},
    {"alphabet": ["e0", "e1"], "max_degree": -1, "terms": {}},
    {"alphabet": ["e0", "e1"], "max_degree": 2, "terms": {"012": "1"}},
    {"alphabet": ["e0", "e1"], "max_degree": 2, "terms": {"02": "1"}},
    {"alphabet": ["e0", "e1"], "max_degree": 2, "terms": {"0a": "1"}},
    {"alphabet": ["e0", "e1"], "max_degree": 2, "terms": {"\u00b2": "1"}},
    {"alphabet": ["e0", "e1"], "max_degree": 2, "terms": {"\u0661": "1"}},
    {"alphabet": ["e0", "e1"], "max_degree": 2, "terms": {"01": 0.5}},
])
def test_series_from_dict_rejects(data):
    with pytest.raises(InputFormatError):
        series_from_dict(data)


def test_tensor_keys():
    t = WTensor(2, {(b"\x01", b""): 1, (b"", b"\x01"): 1})
    assert tensor_to_dict(t) == {"arity": 2, "max_degree": 2, "terms": {"1|": "1", "|1": "1"}}


def test_subspace_record():
    s = Subspace(3, [[2, 0, 1], [0, 3, 0]])
    record = subspace_to_record(s)
    assert record.basis[0] == ["1", "0", "1/2"]
    assert subspace_from_record(record) == s


def test_dumps_is_canonical():
    text = dumps({"b": 1, "a": "e₀"})
    assert text == '{"a": "e₀", "b": 1}\n'
    assert loads(text) == {"a": "e₀", "b": 1}
    with pytest.raises(InputFormatError):
        loads("{not json")
    assert series_to_dict(Series.zero(E01, 0))["terms"] == {}

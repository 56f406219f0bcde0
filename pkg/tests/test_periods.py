"""Tests for period slicing and the participation filter."""

import datetime as dt

import numpy as np
import pytest

from bcall.dataset.periods import PeriodPolicy, filter_low_participation, slice_by_period
from bcall.dataset.schema import PeriodKey, VoteMatrix
from bcall.errors import ConfigError, DataError


def _dated(values, dates):
    return VoteMatrix.from_values(np.array(values, dtype=float), dates=dates)


def test_filter_keeps_boundary_participation():
    # 10 roll calls; L2 votes on exactly one of them (10%).
    values = np.full((3, 10), 1.0)
    values[1, 1:] = np.nan
    values[2, :] = np.nan
    m = VoteMatrix.from_values(values)
    filtered = filter_low_participation(m, 0.10)
    assert filtered.legislator_ids == ["L1", "L2"]
    assert filtered.rollcall_ids == m.rollcall_ids


def test_filter_returns_same_matrix_when_nothing_removed(four_by_three):
    assert filter_low_participation(four_by_three, 0.5) is four_by_three


def test_filter_zero_threshold_keeps_everyone():
    m = VoteMatrix.from_values(np.array([[1.0, 1.0], [np.nan, np.nan]]))
    assert filter_low_participation(m, 0.0).legislator_ids == ["L1", "L2"]


def test_filter_rejects_bad_threshold(four_by_three):
    with pytest.raises(ConfigError):
        filter_low_participation(four_by_three, 1.5)


def test_policy_parse_year():
    assert PeriodPolicy.parse("year").kind == "year"
    assert PeriodPolicy.parse("calendar-year").describe() == "year"


def test_policy_parse_ranges_default_labels():
    policy = PeriodPolicy.parse("ranges=2014-03-11..2014-12-31,2015-01-01..2016-12-31")
    assert [r.label for r in policy.ranges] == ["2014", "2015-2016"]
    assert policy.key_for(dt.date(2016, 5, 1)) == PeriodKey("2015-2016")
    assert policy.key_for(dt.date(2013, 5, 1)) is None


def test_policy_parse_ranges_custom_label():
    policy = PeriodPolicy.parse("ranges=first:2014-01-01..2014-06-30")
    assert policy.describe() == "ranges=first:2014-01-01..2014-06-30"


@pytest.mark.parametrize(
    "spec",
    [
        "monthly",
        "ranges=",
        "ranges=2014-13-01..2014-12-31",
        "ranges=2015-01-01..2014-12-31",
        "ranges=2014-01-01..2014-12-31,2014-06-01..2015-06-01",
        "ranges=a:2014-01-01..2014-02-01,a:2014-03-01..2014-04-01",
    ],
)
def test_policy_parse_rejects(spec):
    with pytest.raises(ConfigError):
        PeriodPolicy.parse(spec)


def test_slice_by_year_sorted_and_drops_inactive():
    m = _dated(
        [[1, 1, -1], [np.nan, np.nan, 1], [-1, -1, np.nan]],
        [dt.date(2015, 3, 1), dt.date(2014, 5, 1), dt.date(2014, 1, 1)],
    )
    slices = slice_by_period(m, PeriodPolicy.parse("year"))
    assert [str(k) for k, _ in slices] == ["2014", "2015"]
    by_label = {str(k): sub for k, sub in slices}
    assert by_label["2014"].rollcall_ids == ["V2", "V3"]
    assert by_label["2015"].legislator_ids == ["L1", "L3"]


def test_slice_by_ranges_keeps_empty_ranges():
    m = _dated([[1, -1], [-1, 1]], [dt.date(2014, 2, 1), dt.date(2014, 3, 1)])
    policy = PeriodPolicy.parse("ranges=a:2014-01-01..2014-06-30,b:2014-07-01..2014-12-31")
    slices = slice_by_period(m, policy)
    assert [str(k) for k, _ in slices] == ["a", "b"]
    assert slices[1][1].shape == (0, 0)


def test_slice_outside_ranges_is_an_error():
    m = _dated([[1], [-1]], [dt.date(2020, 1, 1)])
    with pytest.raises(DataError, match="outside every period range"):
        slice_by_period(m, PeriodPolicy.parse("ranges=2014-01-01..2014-12-31"))


def test_slice_undated_rollcall_is_an_error():
    m = VoteMatrix.from_values(np.array([[1.0], [-1.0]]))
    object.__setattr__(m.rollcalls[0], "date", None)
    with pytest.raises(DataError, match="no parseable date"):
        slice_by_period(m, PeriodPolicy.parse("year"))


def test_filter_is_idempotent():
    rng = np.random.default_rng(8)
    values = rng.choice([-1.0, 0.0, 1.0, np.nan], size=(12, 10), p=[0.2, 0.1, 0.2, 0.5])
    m = VoteMatrix.from_values(values)
    once = filter_low_participation(m, 0.5)
    assert filter_low_participation(once, 0.5) is once


def test_year_slices_partition_the_rollcalls():
    rng = np.random.default_rng(9)
    values = rng.choice([-1.0, 1.0, np.nan], size=(6, 15), p=[0.45, 0.45, 0.1])
    dates = [dt.date(int(rng.integers(2010, 2014)), int(rng.integers(1, 13)), 1) for _ in range(15)]
    m = VoteMatrix.from_values(values, dates=dates)

    slices = slice_by_period(m, PeriodPolicy.parse("year"))

    assert sum(len(s.rollcalls) for _, s in slices) == len(m.rollcalls)
    seen = [rid for _, s in slices for rid in s.rollcall_ids]
    assert sorted(seen) == sorted(m.rollcall_ids)
    for key, s in slices:
        assert {rc.date.year for rc in s.rollcalls} == {int(key.label)}

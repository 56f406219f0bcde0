"""Tests for the synthetic legislature generator."""

import numpy as np
import pytest

from bcall.dataset.schema import Cast
from bcall.errors import ConfigError
from bcall.synth import SynthConfig, generate, generate_panel, yearly_configs


def test_same_seed_same_matrix():
    cfg = SynthConfig.random(20, 30, seed=11, abstain_prob=0.05, absent_prob=0.05)
    a, b = generate(cfg), generate(cfg)
    np.testing.assert_array_equal(a.matrix.values, b.matrix.values)
    assert a.metadata == {"rng": "numpy.PCG64", "seed": 11, "year": 2000}


def test_different_seed_different_matrix():
    a = generate(SynthConfig.random(20, 30, seed=1)).matrix.values
    b = generate(SynthConfig.random(20, 30, seed=2)).matrix.values
    assert not np.array_equal(a, b)


def test_shape_ids_and_dates():
    result = generate(SynthConfig.random(12, 40, seed=0, year=2014))
    m = result.matrix
    assert m.shape == (12, 40)
    assert m.legislator_ids[0] == "L001"
    assert m.rollcall_ids[0] == "2014-V001"
    assert all(rc.date.year == 2014 for rc in m.rollcalls)
    assert list(result.truth_frame().columns) == ["legislator_id", "theta", "sigma", "party", "period"]
    assert (result.truth["period"] == "2014").all()


def test_random_parameters_in_range():
    cfg = SynthConfig.random(200, 2, sigma=(0.1, 0.6), seed=5)
    assert all(-1.0 <= t <= 1.0 for t in cfg.ideology)
    assert all(0.1 <= s <= 0.6 for s in cfg.noise)


def test_noise_free_votes_follow_the_cutpoint_rule():
    result = generate(SynthConfig.blocs(5, 50, theta=0.8, seed=3))
    values = result.matrix.values
    # Each roll call splits the two blocs perfectly.
    assert np.all(values[:5] == values[0])
    assert np.all(values[5:] == -values[0])
    assert result.truth["party"].tolist() == ["L"] * 5 + ["R"] * 5


def test_abstain_and_absent_rates():
    cfg = SynthConfig.random(100, 200, seed=9, abstain_prob=0.1, absent_prob=0.2)
    casts = [c for rc in generate(cfg).matrix.rollcalls for c in rc.casts.values()]
    abstain = sum(c is Cast.ABSTAIN for c in casts) / len(casts)
    absent = sum(c is Cast.ABSENT for c in casts) / len(casts)
    assert abstain == pytest.approx(0.1, abs=0.01)
    assert absent == pytest.approx(0.2, abs=0.01)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"ideology": (0.0,) * 3, "noise": (0.1,) * 3, "n_rollcalls": 10},
        {"ideology": (0.0,) * 4, "noise": (0.1,) * 4, "n_rollcalls": 1},
        {"ideology": (0.0, 0.0, 0.0, 1.5), "noise": (0.1,) * 4, "n_rollcalls": 10},
        {"ideology": (0.0,) * 4, "noise": (0.1, 0.1, 0.1, -0.1), "n_rollcalls": 10},
        {"ideology": (0.0,) * 4, "noise": (0.1,) * 4, "n_rollcalls": 10, "abstain_prob": 0.6, "absent_prob": 0.5},
    ],
)
def test_invalid_config(kwargs):
    with pytest.raises(ConfigError):
        SynthConfig(**kwargs)


def test_panel_stacks_years():
    configs = yearly_configs(SynthConfig.random(10, 20, seed=4, year=2010), 3)
    assert [c.seed for c in configs] == [4, 5, 6]
    panel = generate_panel(configs)
    assert panel.matrix.shape == (10, 60)
    assert sorted({rc.date.year for rc in panel.matrix.rollcalls}) == [2010, 2011, 2012]
    assert panel.metadata["years"] == [2010, 2011, 2012]
    assert len(panel.truth) == 30


def test_panel_rejects_mismatched_sizes():
    with pytest.raises(ConfigError):
        generate_panel([SynthConfig.random(10, 5), SynthConfig.random(12, 5)])
    with pytest.raises(ConfigError):
        generate_panel([])

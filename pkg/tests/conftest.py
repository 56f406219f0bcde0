"""Shared fixtures."""

import numpy as np
import pandas as pd
import pytest

from bcall.dataset.schema import Group, VoteMatrix


@pytest.fixture
def four_by_three() -> VoteMatrix:
    """L1=(1,1,1), L2=(1,1,-1), R1=(-1,-1,-1), R2=(-1,-1,1)."""
    return VoteMatrix.from_values(
        np.array([
            [1, 1, 1],
            [1, 1, -1],
            [-1, -1, -1],
            [-1, -1, 1],
        ]),
        legislator_ids=["L1", "L2", "R1", "R2"],
    )


@pytest.fixture
def four_groups() -> dict[str, Group]:
    return {"L1": Group.LEFT, "L2": Group.LEFT, "R1": Group.RIGHT, "R2": Group.RIGHT}


@pytest.fixture
def write_votes(tmp_path):
    """Write canonical long-format rows to a CSV and return its path."""

    def _write(rows: list[tuple], name: str = "votes.csv"):
        path = tmp_path / name
        pd.DataFrame(
            rows,
            columns=["legislator_id", "legislator_name", "party", "rollcall_id", "date", "cast"],
        ).to_csv(path, index=False)
        return path

    return _write


@pytest.fixture
def noisy_blocs() -> VoteMatrix:
    """Two blocs of 8 voting opposite ways on 40 roll calls, 10% of casts flipped.

    Bloc A is A01..A08, bloc B is B01..B08.
    """
    rng = np.random.default_rng(11)
    line = rng.choice([-1.0, 1.0], size=40)
    values = np.vstack([np.tile(line, (8, 1)), np.tile(-line, (8, 1))])
    flips = rng.random(values.shape) < 0.10
    return VoteMatrix.from_values(
        np.where(flips, -values, values),
        legislator_ids=[f"A{i:02d}" for i in range(1, 9)] + [f"B{i:02d}" for i in range(1, 9)],
    )

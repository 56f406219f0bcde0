"""End-to-end checks against synthetic legislatures with planted parameters."""

import time
from pathlib import Path

import numpy as np
import pytest

from bcall.clustering.distance import centroid_distances
from bcall.clustering.polarity import bipartition
from bcall.dataset.schema import Group, PeriodKey, VoteMatrix
from bcall.evaluation.correlation import pearson, spearman
from bcall.runner import PipelineRunner, RunConfig, run_pipeline
from bcall.scoring.engine import bcall_scores, deviation_matrix, matrix_stats
from bcall.synth import SynthConfig, generate, generate_panel, yearly_configs

PERIOD = PeriodKey("2000")


def _truth_groups(result) -> dict[str, Group]:
    return {
        lid: Group.LEFT if theta < 0 else Group.RIGHT
        for lid, theta in zip(result.matrix.legislator_ids, result.theta, strict=True)
    }


def test_deviations_are_standardized_on_a_large_chamber():
    result = generate(SynthConfig.random(200, 500, seed=0, abstain_prob=0.05, absent_prob=0.05))
    m = result.matrix
    groups = _truth_groups(result)
    _ = m.values  # cached before timing

    start = time.perf_counter()
    stats = matrix_stats(m, groups)
    u = deviation_matrix(m, stats)
    batch = bcall_scores(m, groups, PERIOD)
    elapsed = time.perf_counter() - start

    assert batch.retained > 0
    for j, s in enumerate(stats):
        if s.dropped:
            continue
        col = u[:, j][~np.isnan(u[:, j])]
        assert abs(col.sum()) <= 1e-9
        assert abs(np.std(col) - 1.0) <= 1e-9
    assert elapsed < 1.0


def _untied_random_matrices(count: int):
    rng = np.random.default_rng(2024)
    found = 0
    for _ in range(20 * count):
        values = rng.choice([-1.0, 0.0, 1.0, np.nan], size=(20, 12), p=[0.4, 0.15, 0.35, 0.1])
        m = VoteMatrix.from_values(values)
        left = rng.random(20) < 0.5
        if left.all() or not left.any():
            continue
        groups = {
            lid: Group.LEFT if is_left else Group.RIGHT
            for lid, is_left in zip(m.legislator_ids, left, strict=True)
        }
        if any(s.tied for s in matrix_stats(m, groups)):
            continue
        yield m, groups
        found += 1
        if found == count:
            return
    raise AssertionError(f"only {found} untied matrices generated")


def test_label_swap_and_vote_negation_symmetry():
    for m, groups in _untied_random_matrices(50):
        swapped = {lid: g.other for lid, g in groups.items()}
        original = bcall_scores(m, groups, PERIOD)
        mirrored = bcall_scores(m, swapped, PERIOD)
        d1 = np.array([s.d1 for s in original])
        d2 = np.array([s.d2 for s in original])
        np.testing.assert_allclose(np.array([s.d1 for s in mirrored]), -d1, rtol=0, atol=1e-12)
        np.testing.assert_allclose(np.array([s.d2 for s in mirrored]), d2, rtol=0, atol=1e-12)

        negated = VoteMatrix.from_values(-m.values, legislator_ids=m.legislator_ids)
        u = deviation_matrix(m, matrix_stats(m, groups))
        u_negated = deviation_matrix(negated, matrix_stats(negated, groups))
        np.testing.assert_allclose(u_negated, u, rtol=0, atol=1e-12)


@pytest.mark.parametrize("seed", range(10))
def test_planted_ideology_and_noise_are_recovered(seed):
    result = generate(SynthConfig.random(200, 500, sigma=(0.1, 0.6), seed=seed))
    anchor = result.matrix.legislator_ids[int(np.argmin(result.theta))]
    partition = bipartition(result.matrix, anchor=anchor)
    batch = bcall_scores(result.matrix, partition.assignment, PERIOD)
    assert len(batch) == 200

    d1 = np.array([s.d1 for s in batch])
    d2 = np.array([s.d2 for s in batch])
    rho, _ = spearman(d1, result.theta)
    assert rho >= 0.90

    # Over the whole chamber noise is recovered only weakly (0.31 to 0.54 on
    # these seeds): centrists sit near most cutpoints whatever their sigma.
    rho, _ = spearman(d2, result.sigma)
    assert rho >= 0.25

    extreme = np.abs(result.theta) >= 0.8
    rho, _ = spearman(d2[extreme], result.sigma[extreme])
    assert rho >= 0.60


def test_mean_d2_falls_as_rice_rises_across_periods():
    rng = np.random.default_rng(17)
    theta = tuple(rng.uniform(-1.0, -0.2, 50)) + tuple(rng.uniform(0.2, 1.0, 50))
    party = ("A",) * 50 + ("B",) * 50
    configs = [
        SynthConfig(
            ideology=theta,
            noise=(0.1 + 0.1 * k,) * 50 + (0.3,) * 50,
            n_rollcalls=200,
            seed=k,
            party=party,
            year=2000 + k,
        )
        for k in range(10)
    ]
    panel = generate_panel(configs)
    result = PipelineRunner(RunConfig(input=Path("synthetic.csv"))).run(matrix=panel.matrix)

    assert len(result.periods) == 10
    rows = {(row.scope, row.metric): row.report for row in result.cohesion}
    report = rows[("A", "rice")]
    assert report.n == 10
    assert report.pearson_r <= -0.5

    # Same relation computed by hand from the per-period outputs.
    mean_d2 = [np.mean([s.d2 for s in p.scores if p.parties[s.legislator_id] == "A"]) for p in result.periods]
    rice = [next(s.rice for s in p.indices if s.group == "A") for p in result.periods]
    r, _ = pearson(mean_d2, rice)
    assert r == pytest.approx(report.pearson_r)


@pytest.mark.parametrize("seed", range(20))
def test_noise_free_blocs_are_recovered_exactly(seed):
    result = generate(SynthConfig.blocs(10, 50, seed=seed))
    partition = bipartition(result.matrix)
    labels = [partition.assignment[lid] for lid in result.matrix.legislator_ids]
    planted = result.truth["party"].tolist()
    left_party = planted[labels.index(Group.LEFT)]
    assert all((label is Group.LEFT) == (p == left_party) for label, p in zip(labels, planted, strict=True))

    assert partition.converged
    values = result.matrix.values
    d_left = centroid_distances(values, partition.centroids[0])[0]
    d_right = centroid_distances(values, partition.centroids[1])[0]
    for i, label in enumerate(labels):
        own, other = (d_left[i], d_right[i]) if label is Group.LEFT else (d_right[i], d_left[i])
        assert own <= other + 1e-12


def test_reruns_are_byte_identical(tmp_path):
    configs = yearly_configs(
        SynthConfig.random(30, 60, seed=8, abstain_prob=0.05, absent_prob=0.1, year=2018), 3
    )
    votes = tmp_path / "votes.csv"
    generate_panel(configs).to_frame().to_csv(votes, index=False)

    first, second, threaded = tmp_path / "a", tmp_path / "b", tmp_path / "c"
    run_pipeline(RunConfig(input=votes, output_dir=first, seed=8))
    run_pipeline(RunConfig(input=votes, output_dir=second, seed=8))
    run_pipeline(RunConfig(input=votes, output_dir=threaded, seed=8, parallel=3))

    names = sorted(p.name for p in first.iterdir())
    assert names == sorted(p.name for p in second.iterdir())
    for name in names:
        assert (first / name).read_bytes() == (second / name).read_bytes()
        assert (first / name).read_bytes() == (threaded / name).read_bytes()

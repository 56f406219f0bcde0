"""Run artifacts: CSV tables and the JSON manifest.

Every file is written to a hidden temporary sibling and renamed into place,
so a reader never sees a partial file. Output carries no timestamps; the same
run always produces the same bytes.
"""

import json
import logging
import os
from pathlib import Path

import pandas as pd

from bcall import __version__
from bcall.evaluation.aggregator import ComparisonResult
from bcall.runner.pipeline import PipelineResult

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.6f"

SCORE_COLUMNS = ["legislator_id", "legislator_name", "party", "period", "n_votes", "d1", "d2", "group"]
CLUSTER_COLUMNS = ["legislator_id", "cluster", "period"]
INDEX_COLUMNS = ["group", "period", "n_rollcalls", "rice", "unity", "unity_weighting"]
PLOT_COLUMNS = ["legislator_id", "d1", "d2", "group", "period"]
COHESION_COLUMNS = ["scope", "metric", "r", "se", "rho", "rho_se", "n"]

RUN_ARTIFACTS = ("scores", "clusters", "indices", "plot", "cohesion", "manifest")


def scores_frame(result: PipelineResult) -> pd.DataFrame:
    records = []
    for period in result.periods:
        for s in period.scores:
            records.append({
                "legislator_id": s.legislator_id,
                "legislator_name": period.names.get(s.legislator_id, s.legislator_id),
                "party": period.parties.get(s.legislator_id) or "",
                "period": str(s.period),
                "n_votes": s.n_votes,
                "d1": s.d1,
                "d2": s.d2,
                "group": s.group.value if s.group else "",
            })
    return pd.DataFrame(records, columns=SCORE_COLUMNS)


def clusters_frame(result: PipelineResult) -> pd.DataFrame:
    records = [
        {"legislator_id": lid, "cluster": group.value, "period": str(period.period)}
        for period in result.periods
        if period.resolution is not None
        for lid, group in period.resolution.groups.items()
    ]
    return pd.DataFrame(records, columns=CLUSTER_COLUMNS)


def indices_frame(result: PipelineResult) -> pd.DataFrame:
    return pd.DataFrame(
        [{c: s.to_dict()[c] for c in INDEX_COLUMNS} for s in result.indices],
        columns=INDEX_COLUMNS,
    )


def plot_frame(result: PipelineResult) -> pd.DataFrame:
    return scores_frame(result)[PLOT_COLUMNS]


def cohesion_frame(result: PipelineResult) -> pd.DataFrame:
    return pd.DataFrame([row.to_dict() for row in result.cohesion], columns=COHESION_COLUMNS)


def build_manifest(result: PipelineResult) -> dict:
    """Config echo plus per-period accounting."""
    periods = []
    for period in result.periods:
        entry = {
            "period": str(period.period),
            "status": "skipped" if period.skipped else "scored",
            "legislators": period.n_legislators,
            "removed_low_participation": period.removed,
            "rollcalls": period.n_rollcalls,
            "retained": period.batch.retained if period.batch else 0,
            "dropped": period.batch.dropped if period.batch else period.n_rollcalls,
            "tied": period.batch.tied if period.batch else 0,
            "scored": len(period.scores),
            "warnings": period.warnings,
        }
        partition = period.resolution.partition if period.resolution else None
        if partition is not None:
            entry["refinement"] = {
                "seeds": list(partition.seeds),
                "iterations": partition.iterations,
                "converged": partition.converged,
                "refused_moves": partition.refused_moves,
                "convention": partition.convention,
            }
        periods.append(entry)

    return {
        "version": __version__,
        "config": result.config.to_dict(),
        "input": {
            "legislators": result.n_legislators,
            "rollcalls": result.n_rollcalls,
            "excluded": result.excluded,
        },
        "unity_weighting": result.config.unity_weighting,
        "periods": periods,
        "warnings": result.warnings,
    }


class ArtifactWriter:
    """Writes run and comparison artifacts into one output directory."""

    def __init__(self, output_dir: Path):
        self.output_dir = Path(output_dir)

    def _target(self, name: str) -> tuple[Path, Path]:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        path = self.output_dir / name
        return path, self.output_dir / f".{name}.tmp"

    def write_frame(self, name: str, df: pd.DataFrame) -> Path:
        path, tmp = self._target(name)
        df.to_csv(tmp, index=False, float_format=FLOAT_FORMAT, encoding="utf-8", lineterminator="\n")
        os.replace(tmp, path)
        logger.debug(f"Wrote {len(df)} rows to {path}")
        return path

    def write_json(self, name: str, data: dict) -> Path:
        path, tmp = self._target(name)
        with open(tmp, "w", encoding="utf-8") as f:
            json.dump(data, f, ensure_ascii=False, indent=2, sort_keys=True)
            f.write("\n")
        os.replace(tmp, path)
        return path

    def write_run(self, result: PipelineResult, artifacts: tuple[str, ...] = RUN_ARTIFACTS) -> list[Path]:
        """Write the selected run artifacts.

        Args:
            result: Pipeline result
            artifacts: Subset of scores, clusters, indices, plot, cohesion, manifest

        Returns:
            Written paths
        """
        builders = {
            "scores": lambda: self.write_frame("scores.csv", scores_frame(result)),
            "clusters": lambda: self.write_frame("clusters.csv", clusters_frame(result)),
            "indices": lambda: self.write_frame("indices.csv", indices_frame(result)),
            "plot": lambda: self.write_frame("plot.csv", plot_frame(result)),
            "cohesion": lambda: self.write_frame("cohesion.csv", cohesion_frame(result)),
            "manifest": lambda: self.write_json("manifest.json", build_manifest(result)),
        }
        unknown = [a for a in artifacts if a not in builders]
        if unknown:
            raise ValueError(f"Unknown artifacts: {', '.join(unknown)}")

        paths = [builders[a]() for a in artifacts]
        logger.info(f"Results saved to: {self.output_dir}")
        return paths

    def write_comparison(self, comparison: ComparisonResult) -> list[Path]:
        """comparison.csv (with M and SD rows), comparison.json and discrepancies.csv."""
        paths = [
            self.write_frame("comparison.csv", comparison.summary_frame()),
            self.write_json("comparison.json", comparison.to_dict()),
        ]
        if comparison.discrepancies is not None:
            paths.append(self.write_frame("discrepancies.csv", comparison.discrepancies))
        return paths

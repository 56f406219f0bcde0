"""Synthetic legislatures with planted ideology and cohesion.

Each roll call j draws a polarity s_j in {-1, +1} and a cutpoint c_j; legislator
i votes yea when ``s_j * theta_i - c_j + eps_ij > 0`` with
``eps_ij ~ Normal(0, sigma_i)``, nay otherwise. Abstentions and absences are
then injected at random.

The stream is ``numpy.random.Generator(PCG64(seed))`` and draws, in order:
all polarities, all cutpoints, the (legislators, roll calls) standard normals,
then the (legislators, roll calls) uniforms deciding abstain/absent. Parameter
draws of :meth:`SynthConfig.random` use a child of ``SeedSequence(seed)`` so
they never share the vote stream.
"""

import datetime as dt
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field, replace

import numpy as np
import pandas as pd

from bcall.dataset.loader import to_long_frame
from bcall.dataset.schema import Cast, Legislator, RollCall, VoteMatrix
from bcall.errors import ConfigError

logger = logging.getLogger(__name__)

RNG_NAME = "numpy.PCG64"
DEFAULT_CUTPOINT_RANGE = (-0.5, 0.5)
TRUTH_COLUMNS = ["legislator_id", "theta", "sigma", "party", "period"]


def _ids(prefix: str, n: int) -> list[str]:
    width = max(3, len(str(n)))
    return [f"{prefix}{i + 1:0{width}d}" for i in range(n)]


@dataclass(frozen=True)
class SynthConfig:
    """Parameters of one synthetic period."""

    ideology: tuple[float, ...]
    noise: tuple[float, ...]
    n_rollcalls: int
    abstain_prob: float = 0.0
    absent_prob: float = 0.0
    seed: int = 0
    cutpoint_range: tuple[float, float] = DEFAULT_CUTPOINT_RANGE
    party: tuple[str, ...] | None = None
    year: int = 2000

    def __post_init__(self):
        object.__setattr__(self, "ideology", tuple(float(v) for v in self.ideology))
        object.__setattr__(self, "noise", tuple(float(v) for v in self.noise))
        if self.party is not None:
            object.__setattr__(self, "party", tuple(self.party))
        errors = self.validate()
        if errors:
            raise ConfigError("; ".join(errors))

    @property
    def n_legislators(self) -> int:
        return len(self.ideology)

    def validate(self) -> list[str]:
        errors = []
        if self.n_legislators < 4:
            errors.append(f"n_legislators must be >= 4, got {self.n_legislators}")
        if self.n_rollcalls < 2:
            errors.append(f"n_rollcalls must be >= 2, got {self.n_rollcalls}")
        if len(self.noise) != self.n_legislators:
            errors.append("noise must have one entry per legislator")
        if self.party is not None and len(self.party) != self.n_legislators:
            errors.append("party must have one entry per legislator")
        if any(not -1.0 <= t <= 1.0 for t in self.ideology):
            errors.append("ideology values must lie in [-1, 1]")
        if any(s < 0 for s in self.noise):
            errors.append("noise values must be >= 0")
        for name in ("abstain_prob", "absent_prob"):
            p = getattr(self, name)
            if not 0.0 <= p < 1.0:
                errors.append(f"{name} must lie in [0, 1), got {p}")
        if self.abstain_prob + self.absent_prob >= 1.0:
            errors.append("abstain_prob + absent_prob must be < 1")
        lo, hi = self.cutpoint_range
        if lo > hi:
            errors.append(f"cutpoint range is empty: {self.cutpoint_range}")
        return errors

    @classmethod
    def random(
        cls,
        n_legislators: int,
        n_rollcalls: int,
        sigma: tuple[float, float] = (0.1, 0.6),
        seed: int = 0,
        **kwargs,
    ) -> "SynthConfig":
        """theta ~ U[-1, 1] and sigma ~ U[lo, hi] per legislator."""
        child = np.random.SeedSequence(seed).spawn(1)[0]
        rng = np.random.Generator(np.random.PCG64(child))
        theta = rng.uniform(-1.0, 1.0, size=n_legislators)
        noise = rng.uniform(sigma[0], sigma[1], size=n_legislators)
        return cls(
            ideology=tuple(theta),
            noise=tuple(noise),
            n_rollcalls=n_rollcalls,
            seed=seed,
            **kwargs,
        )

    @classmethod
    def blocs(
        cls,
        per_bloc: int,
        n_rollcalls: int,
        theta: float = 0.8,
        sigma: float = 0.0,
        seed: int = 0,
        **kwargs,
    ) -> "SynthConfig":
        """Two equal blocs at -theta (party "L") and +theta (party "R"), left bloc first."""
        return cls(
            ideology=(-theta,) * per_bloc + (theta,) * per_bloc,
            noise=(sigma,) * (2 * per_bloc),
            n_rollcalls=n_rollcalls,
            seed=seed,
            party=("L",) * per_bloc + ("R",) * per_bloc,
            **kwargs,
        )


@dataclass
class SynthResult:
    """Generated votes plus the planted parameters."""

    matrix: VoteMatrix
    truth: pd.DataFrame
    metadata: dict = field(default_factory=dict)

    @property
    def theta(self) -> np.ndarray:
        return self.truth["theta"].to_numpy()

    @property
    def sigma(self) -> np.ndarray:
        return self.truth["sigma"].to_numpy()

    def truth_frame(self) -> pd.DataFrame:
        """``legislator_id, theta, sigma, party, period`` ground truth."""
        return self.truth[TRUTH_COLUMNS].copy()

    def to_frame(self) -> pd.DataFrame:
        """Votes in the canonical long format."""
        return to_long_frame(self.matrix)


def _dates(year: int, n: int) -> list[dt.date]:
    start = dt.date(year, 1, 1)
    return [start + dt.timedelta(days=j * 365 // n) for j in range(n)]


def generate(cfg: SynthConfig) -> SynthResult:
    """Draw one synthetic vote matrix.

    Identical configs, seed included, give identical matrices.
    """
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    n, r = cfg.n_legislators, cfg.n_rollcalls
    theta = np.asarray(cfg.ideology)
    sigma = np.asarray(cfg.noise)

    polarity = rng.choice(np.array([-1.0, 1.0]), size=r)
    cutpoint = rng.uniform(cfg.cutpoint_range[0], cfg.cutpoint_range[1], size=r)
    eps = rng.standard_normal((n, r)) * sigma[:, np.newaxis]
    u = rng.random((n, r))

    yea = polarity[np.newaxis, :] * theta[:, np.newaxis] - cutpoint[np.newaxis, :] + eps > 0
    abstain = u < cfg.abstain_prob
    absent = ~abstain & (u < cfg.abstain_prob + cfg.absent_prob)

    legislator_ids = _ids("L", n)
    parties = cfg.party or (None,) * n
    legislators = [
        Legislator(id=lid, name=lid, party=party)
        for lid, party in zip(legislator_ids, parties, strict=True)
    ]

    rollcalls = []
    for j, (rid, date) in enumerate(zip(_ids(f"{cfg.year}-V", r), _dates(cfg.year, r), strict=True)):
        casts = {}
        for i, lid in enumerate(legislator_ids):
            if absent[i, j]:
                casts[lid] = Cast.ABSENT
            elif abstain[i, j]:
                casts[lid] = Cast.ABSTAIN
            else:
                casts[lid] = Cast.YEA if yea[i, j] else Cast.NAY
        rollcalls.append(RollCall(id=rid, date=date, casts=casts))

    truth = pd.DataFrame({
        "legislator_id": legislator_ids,
        "theta": theta,
        "sigma": sigma,
        "party": [p or "" for p in parties],
        "period": str(cfg.year),
    })
    logger.debug(f"Generated {n} x {r} synthetic votes for {cfg.year} (seed {cfg.seed})")
    return SynthResult(
        matrix=VoteMatrix(legislators=legislators, rollcalls=rollcalls),
        truth=truth,
        metadata={"rng": RNG_NAME, "seed": cfg.seed, "year": cfg.year},
    )


def generate_panel(configs: Sequence[SynthConfig]) -> SynthResult:
    """Generate several periods over the same legislators and stack them.

    Raises:
        ConfigError: Periods disagree on the number of legislators
    """
    if not configs:
        raise ConfigError("No synthetic periods to generate")
    sizes = {cfg.n_legislators for cfg in configs}
    if len(sizes) != 1:
        raise ConfigError(f"Synthetic periods disagree on legislator count: {sorted(sizes)}")

    results = [generate(cfg) for cfg in configs]
    matrix = VoteMatrix(
        legislators=results[0].matrix.legislators,
        rollcalls=[rc for result in results for rc in result.matrix.rollcalls],
    )
    return SynthResult(
        matrix=matrix,
        truth=pd.concat([result.truth for result in results], ignore_index=True),
        metadata={
            "rng": RNG_NAME,
            "seeds": [cfg.seed for cfg in configs],
            "years": [cfg.year for cfg in configs],
        },
    )


def yearly_configs(cfg: SynthConfig, periods: int) -> list[SynthConfig]:
    """Consecutive years from ``cfg``; period k uses year + k and seed + k."""
    return [replace(cfg, year=cfg.year + k, seed=cfg.seed + k) for k in range(periods)]

"""
Seeded Monte-Carlo runs of the two measurement experiments.

Experiment One sends each system straight to the measurement D and records
j ~ q. Experiment Two first passes it through the reference measurement S,
recording i ~ p, and then through D, recording j ~ R(.|i). Comparing the
j-marginal of Experiment Two with the Born prediction for Experiment One
shows the gap the Law of Total Probability cannot close.

Reproducibility rules:

1. Every run draws from a numpy ``Generator`` over a named bit generator
   (PCG64 by default) seeded with ``SeedSequence([seed, stream, shard])``.
   ``stream`` is fixed per experiment (1 for One, 2 for Two); ``shard`` is
   the shard index, 0 for an unsharded run.
2. Categories are drawn by inverse CDF on the cumulative sums in label
   order (``searchsorted(..., side="right")``), clipped to the last outcome
   with positive probability so round-off in the final cumulative sum can
   never select an impossible outcome. Experiment Two draws i for every
   shot first, then j for the shots sharing each i, in increasing i.
3. Sharded runs split shots as evenly as possible (earlier shards take the
   remainder), sample on a thread pool, and merge counts in shard order.
   A sharded run is reproducible for a fixed shard count; it is not the
   same sample as the unsharded run.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from errors import FileFormatError
from representation import CondMatrix, OutcomeDist, ProbState, born, ltp, ltp_deviation, require_valid

logger = logging.getLogger(__name__)

GENERATORS: Dict[str, Callable] = {
    "PCG64": np.random.PCG64,
    "Philox": np.random.Philox,
}
DEFAULT_GENERATOR = "PCG64"
STREAM_EXPERIMENT_ONE = 1
STREAM_EXPERIMENT_TWO = 2
SAMPLING_BAND = 4.0


@dataclass(frozen=True)
class RunConfig:
    shots: int
    seed: int
    generator: str = DEFAULT_GENERATOR
    shards: int = 1

    def __post_init__(self):
        if int(self.shots) < 1:
            raise ValueError("shots must be at least 1")
        if not 0 <= int(self.seed) < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.generator not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}; choose from {sorted(GENERATORS)}")
        if int(self.shards) < 1:
            raise ValueError("shards must be at least 1")

    @property
    def band(self) -> float:
        """4/sqrt(shots): the elementwise tolerance for comparing frequencies to predictions."""
        return float(SAMPLING_BAND / np.sqrt(self.shots))

    def rng(self, stream: int, shard: int = 0) -> np.random.Generator:
        seq = np.random.SeedSequence([int(self.seed), stream, shard])
        return np.random.Generator(GENERATORS[self.generator](seq))

    def shard_sizes(self) -> List[int]:
        base, extra = divmod(int(self.shots), int(self.shards))
        return [base + (1 if k < extra else 0) for k in range(int(self.shards))]


@dataclass(frozen=True)
class CountTable:
    """Counts per outcome label; ``shape`` is (N, J) for Experiment Two tables."""
    labels: Tuple[str, ...]
    counts: np.ndarray
    total: int
    seed: int
    shape: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        if counts.shape != (len(self.labels),):
            raise ValueError("counts and labels have different lengths")
        if counts.min(initial=0) < 0:
            raise ValueError("counts must be nonnegative")
        if int(counts.sum()) != int(self.total):
            raise ValueError(f"counts sum to {int(counts.sum())}, total says {self.total}")
        if self.shape is not None and self.shape[0] * self.shape[1] != len(self.labels):
            raise ValueError(f"shape {self.shape} does not match {len(self.labels)} labels")
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "labels", tuple(str(l) for l in self.labels))

    @property
    def frequencies(self) -> np.ndarray:
        return self.counts / self.total

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame({"label": list(self.labels), "count": self.counts})
        if self.shape is not None:
            n, m = self.shape
            frame["i"] = np.repeat(np.arange(n), m)
            frame["j"] = np.tile(np.arange(m), n)
        frame["frequency"] = frame["count"] / self.total
        return frame

    def marginal(self) -> "CountTable":
        """j-marginal of an Experiment Two table, labelled like an Experiment One table."""
        if self.shape is None:
            raise ValueError("marginal() needs an (i, j) table from Experiment Two")
        by_j = self.to_frame().groupby("j")["count"].sum().reindex(range(self.shape[1]), fill_value=0)
        return CountTable(labels=outcome_labels(self.shape[1]), counts=by_j.to_numpy(),
                          total=self.total, seed=self.seed)

    def to_dict(self) -> Dict:
        out = {"labels": list(self.labels), "counts": self.counts.tolist(),
               "total": int(self.total), "seed": int(self.seed)}
        if self.shape is not None:
            out["shape"] = list(self.shape)
        return out

    @classmethod
    def from_dict(cls, data: Dict) -> "CountTable":
        from utils import require_field, require_int, require_int_vector
        labels = require_field(data, "labels")
        if not isinstance(labels, list):
            raise FileFormatError("field 'labels' must be a list", field="labels")
        shape = require_int_vector(data, "shape") if "shape" in data else None
        if shape is not None and shape.size != 2:
            raise FileFormatError("field 'shape' must be [N, J]", field="shape")
        return cls(labels=tuple(labels), counts=require_int_vector(data, "counts"),
                   total=require_int(data, "total"), seed=require_int(data, "seed"),
                   shape=tuple(int(s) for s in shape) if shape is not None else None)


def outcome_labels(J: int) -> Tuple[str, ...]:
    return tuple(str(j) for j in range(J))


def pair_labels(N: int, J: int) -> Tuple[str, ...]:
    return tuple(f"{i},{j}" for i in range(N) for j in range(J))


# ----------------------------------------------------------------------
# Categorical sampling
# ----------------------------------------------------------------------
def _last_positive(weights: np.ndarray) -> int:
    return int(weights.size - 1 - np.argmax(weights[::-1] > 0))


def sample_categorical(weights, size: int, rng: np.random.Generator) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    cdf = np.cumsum(w)
    idx = np.searchsorted(cdf, rng.random(size), side="right")
    return np.minimum(idx, _last_positive(w))


def _sample_columns(R: np.ndarray, cols: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """One draw of j ~ R(.|i) for each i in ``cols``.

    Draws are grouped by i and taken in increasing i, so memory stays
    O(shots) whatever the number of outcomes.
    """
    order = np.argsort(cols, kind="stable")
    per_column = np.bincount(cols, minlength=R.shape[1])
    out = np.empty(cols.size, dtype=np.int64)
    start = 0
    for i, n in enumerate(per_column):
        if n:
            out[order[start:start + n]] = sample_categorical(R[:, i], int(n), rng)
        start += n
    return out


# ----------------------------------------------------------------------
# Runs
# ----------------------------------------------------------------------
def _run_sharded(cfg: RunConfig, stream: int, sampler: Callable[[int, np.random.Generator], np.ndarray],
                 n_labels: int) -> np.ndarray:
    sizes = cfg.shard_sizes()

    def run(k: int) -> np.ndarray:
        flat = sampler(sizes[k], cfg.rng(stream, k))
        return np.bincount(flat, minlength=n_labels)

    if len(sizes) == 1:
        return run(0)
    with ThreadPoolExecutor(max_workers=len(sizes)) as pool:
        parts = list(pool.map(run, range(len(sizes))))
    logger.debug("Merged %d shards for stream %d (%s shots)", len(parts), stream, sizes)
    total = np.zeros(n_labels, dtype=np.int64)
    for part in parts:
        total += part
    return total


def sample_experiment_one(q: OutcomeDist, cfg: RunConfig) -> CountTable:
    """Send every system straight to D: j ~ q."""
    require_valid(q, "Experiment One needs a valid outcome distribution")

    def sampler(n: int, rng: np.random.Generator) -> np.ndarray:
        return sample_categorical(q.q, n, rng)

    counts = _run_sharded(cfg, STREAM_EXPERIMENT_ONE, sampler, q.n)
    return CountTable(labels=outcome_labels(q.n), counts=counts, total=cfg.shots, seed=cfg.seed)


def sample_experiment_two(p: ProbState, R: CondMatrix, cfg: RunConfig) -> CountTable:
    """Pass every system through S, then D: i ~ p, j ~ R(.|i). Labels are "i,j", i-major."""
    if R.N != p.n:
        raise ValueError(f"R has {R.N} columns but p has {p.n} entries")
    J = R.J

    def sampler(n: int, rng: np.random.Generator) -> np.ndarray:
        i = sample_categorical(p.p, n, rng)
        j = _sample_columns(R.R, i, rng)
        return i * J + j

    counts = _run_sharded(cfg, STREAM_EXPERIMENT_TWO, sampler, p.n * J)
    return CountTable(labels=pair_labels(p.n, J), counts=counts, total=cfg.shots,
                      seed=cfg.seed, shape=(p.n, J))


def empirical_compare(table: CountTable, predicted: OutcomeDist) -> float:
    """max_j |counts(j)/total - predicted(j)|."""
    if table.labels != outcome_labels(predicted.n):
        raise ValueError(f"label mismatch: table has {list(table.labels)}, "
                         f"prediction has {predicted.n} outcomes")
    return float(np.max(np.abs(table.frequencies - predicted.q)))


@dataclass(frozen=True)
class MarginReport:
    """Experiment Two's j-marginal against both predictions."""
    marginal: CountTable
    ltp: OutcomeDist
    born: OutcomeDist
    deviation_from_ltp: float
    deviation_from_born: float
    ltp_deviation: float
    band: float

    @property
    def matches_ltp(self) -> bool:
        return bool(self.deviation_from_ltp <= self.band)

    @property
    def separated_from_born(self) -> bool:
        return bool(self.deviation_from_born >= self.ltp_deviation - self.band)

    def to_dict(self) -> Dict:
        return {
            "marginal": self.marginal.to_dict(),
            "ltp": self.ltp.q.tolist(),
            "born": self.born.q.tolist(),
            "deviation_from_ltp": self.deviation_from_ltp,
            "deviation_from_born": self.deviation_from_born,
            "ltp_deviation": self.ltp_deviation,
            "band": self.band,
            "matches_ltp": self.matches_ltp,
            "separated_from_born": self.separated_from_born,
        }


def irreducible_margin(p: ProbState, R: CondMatrix, d: int, cfg: RunConfig) -> MarginReport:
    marginal = sample_experiment_two(p, R, cfg).marginal()
    s = ltp(p, R)
    q = born(p, R, d)
    report = MarginReport(marginal=marginal, ltp=s, born=q,
                          deviation_from_ltp=empirical_compare(marginal, s),
                          deviation_from_born=empirical_compare(marginal, q),
                          ltp_deviation=ltp_deviation(p, R, d), band=cfg.band)
    logger.info("Experiment Two marginal: %.4g from LTP, %.4g from Born (gap %.4g, band %.4g)",
                report.deviation_from_ltp, report.deviation_from_born,
                report.ltp_deviation, report.band)
    return report

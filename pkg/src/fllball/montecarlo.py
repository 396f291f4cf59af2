"""Monte-Carlo estimation of |L_1| tail frequencies against the Azuma bounds.

Sample k is drawn from its own generator seeded by ``(seed, k)``, so a run is
a pure function of its configuration no matter how samples are split across
workers.
"""

from __future__ import annotations

import json
import logging
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .analytic import ball_size, expected_ball_size
from .errors import InvalidConfig
from .martingale import deviation_scale, tail_exponent
from .words import Word

logger = logging.getLogger(__name__)

DEFAULT_C_GRID = tuple(round(0.1 * k, 1) for k in range(1, 21))
CSV_COLUMNS = ("c", "lambda", "upper_count", "lower_count", "upper_freq", "lower_freq", "bound_freq")


def default_workers() -> int:
    env = os.environ.get("FLL_WORKERS")
    if env:
        return max(1, int(env))
    return 1


@dataclass(frozen=True)
class SimConfig:
    n: int
    m: int
    samples: int
    seed: int = 0
    thresholds: tuple[float, ...] = DEFAULT_C_GRID
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "thresholds", tuple(float(c) for c in self.thresholds))

    def validate(self):
        if self.n <= 3:
            raise InvalidConfig(f"n must be > 3, got {self.n}")
        if self.m < 2:
            raise InvalidConfig(f"m must be >= 2, got {self.m}")
        if self.samples < 1:
            raise InvalidConfig(f"samples must be >= 1, got {self.samples}")
        if not 0 <= self.seed < 2**64:
            raise InvalidConfig(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if any(c < 0 for c in self.thresholds):
            raise InvalidConfig("thresholds must be nonnegative")
        if list(self.thresholds) != sorted(self.thresholds):
            raise InvalidConfig("thresholds must be sorted ascending")
        if self.workers < 1:
            raise InvalidConfig(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class TailRow:
    c: float
    lam: float
    upper_count: int
    lower_count: int
    upper_freq: float
    lower_freq: float
    bound_freq: float


@dataclass
class TailReport:
    config: SimConfig
    empirical_mean: float
    expected_mean: float
    histogram: dict[int, int] = field(default_factory=dict)
    rows: list[TailRow] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = [",".join(CSV_COLUMNS)]
        for r in self.rows:
            lines.append(
                f"{r.c!r},{r.lam!r},{r.upper_count},{r.lower_count},"
                f"{r.upper_freq!r},{r.lower_freq!r},{r.bound_freq!r}"
            )
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        config = asdict(self.config)
        config["thresholds"] = list(config["thresholds"])
        return {
            "config": config,
            "empirical_mean": self.empirical_mean,
            "expected_mean": self.expected_mean,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "rows": [
                {
                    "c": r.c,
                    "lambda": r.lam,
                    "upper_count": r.upper_count,
                    "lower_count": r.lower_count,
                    "upper_freq": r.upper_freq,
                    "lower_freq": r.lower_freq,
                    "bound_freq": r.bound_freq,
                }
                for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _generator(seed: int, stream_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(stream_index,)))


def _sample_symbols(n: int, m: int, stream_index: int, seed: int) -> tuple[int, ...]:
    return tuple(_generator(seed, stream_index).integers(0, m, size=n).tolist())


def sample_word(n: int, m: int, stream_index: int, seed: int) -> Word:
    """Uniform word of Z_m^n, determined by ``(seed, stream_index)`` alone."""
    return Word(_sample_symbols(n, m, stream_index, seed), m)


def _histogram_chunk(args) -> Counter:
    n, m, seed, start, stop = args
    hist: Counter[int] = Counter()
    for k in range(start, stop):
        hist[ball_size(_sample_symbols(n, m, k, seed), m)] += 1
    return hist


def sample_ball_sizes(n: int, m: int, samples: int, seed: int, workers: int = 1) -> Counter:
    """Histogram of |L_1| over ``samples`` seeded uniform words."""
    if workers <= 1 or samples < 2 * workers:
        return _histogram_chunk((n, m, seed, 0, samples))
    bounds = np.linspace(0, samples, workers + 1).astype(int)
    tasks = [(n, m, seed, int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:])]
    total: Counter[int] = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_histogram_chunk, tasks):
            total.update(part)
    return total


def expected_frequency(n: int, m: int, samples: int, tau: float, tail: str = "upper") -> float:
    """Number of samples the Azuma bound allows beyond threshold tau.

    For the upper tail this is N exp(-2 ((tau - E) / (n sqrt(n-1)))^2) when
    m = 2, and N exp(-c^2 / 2) with c = (tau - E) / ((m + 1/m) n sqrt(n-1))
    otherwise.  Thresholds on the wrong side of the mean give N.
    """
    mean = float(expected_ball_size(n, m))
    if tail == "upper":
        deviation = tau - mean
    elif tail == "lower":
        deviation = mean - tau
    else:
        raise ValueError(f"tail must be 'upper' or 'lower', got {tail!r}")
    if deviation <= 0:
        return float(samples)
    c = deviation / deviation_scale(n, m)
    return samples * math.exp(tail_exponent(c, m))


def tail_rows(histogram: dict[int, int], n: int, m: int, thresholds: Sequence[float]) -> list[TailRow]:
    samples = sum(histogram.values())
    mean = float(expected_ball_size(n, m))
    scale = deviation_scale(n, m)
    sizes = np.array(sorted(histogram), dtype=float)
    counts = np.array([histogram[k] for k in sorted(histogram)], dtype=np.int64)
    rows = []
    for c in thresholds:
        lam = c * scale
        upper = int(counts[sizes - mean >= lam].sum())
        lower = int(counts[sizes - mean <= -lam].sum())
        rows.append(
            TailRow(
                c=c,
                lam=lam,
                upper_count=upper,
                lower_count=lower,
                upper_freq=upper / samples,
                lower_freq=lower / samples,
                bound_freq=samples * math.exp(tail_exponent(c, m)),
            )
        )
    return rows


def run_simulation(config: SimConfig) -> TailReport:
    config.validate()
    n, m = config.n, config.m
    hist = sample_ball_sizes(n, m, config.samples, config.seed, config.workers)
    total = sum(k * v for k, v in hist.items())
    report = TailReport(
        config=config,
        empirical_mean=total / config.samples,
        expected_mean=float(expected_ball_size(n, m)),
        histogram=dict(sorted(hist.items())),
        rows=tail_rows(hist, n, m, config.thresholds),
    )
    logger.debug("simulated n=%d m=%d N=%d mean=%.3f", n, m, config.samples, report.empirical_mean)
    return report

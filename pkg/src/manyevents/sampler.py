"""Uniform sampling over elementary events, one observed event per draw.

Draws never materialize events. Each draw picks an integer uniformly in
``[0, total_events)`` and maps it to the site whose event block contains it.
Draws are split into fixed-size chunks; chunk ``i`` gets its own stream
derived from ``(seed, i)``, so tallies do not depend on how chunks are
distributed over workers.
"""

from __future__ import annotations

import hashlib
import random
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import accumulate

from .core import StateCensus
from .probability import DegenerateDiscretizationError, ProbabilityDistribution, exact_event_probability
from .torus import event_count

CHUNK_SIZE = 1 << 14
MAX_SEED = (1 << 64) - 1


def chunk_seed(seed: int, chunk: int) -> int:
    digest = hashlib.sha256(f"{seed}:{chunk}".encode("ascii")).digest()
    return int.from_bytes(digest[:8], "little")


def _tally_chunk(cumulative: tuple[int, ...], seed: int, chunk: int, draws: int) -> list[int]:
    rng = random.Random(chunk_seed(seed, chunk))
    total = cumulative[-1]
    tally = [0] * len(cumulative)
    for _ in range(draws):
        tally[bisect_right(cumulative, rng.randrange(total))] += 1
    return tally


@dataclass(frozen=True)
class SampleReport:
    seed: int
    n_samples: int
    tallies: tuple[int, ...]
    max_abs_deviation: float

    @property
    def empirical(self) -> tuple[float, ...]:
        return tuple(c / self.n_samples for c in self.tallies)


def frequency_deviation(report: SampleReport, reference: ProbabilityDistribution) -> float:
    """Largest absolute gap between empirical frequency and reference weight."""
    if len(report.tallies) != len(reference):
        raise ValueError("report and reference cover different sites")
    return max(abs(f - float(p)) for f, p in zip(report.empirical, reference.weights))


def sample_events(census: StateCensus, n: int, seed: int, workers: int = 1) -> SampleReport:
    """Tally ``n`` uniform draws from the stationary event multiset of ``census``."""
    if n < 1:
        raise ValueError(f"number of samples must be positive, got {n}")
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    if not any(census.counts):
        raise DegenerateDiscretizationError("degenerate discretization: every state count is zero")

    cumulative = tuple(accumulate(event_count(m) for m in census.counts))
    sizes = [CHUNK_SIZE] * (n // CHUNK_SIZE)
    if n % CHUNK_SIZE:
        sizes.append(n % CHUNK_SIZE)
    jobs = [(cumulative, seed, i, size) for i, size in enumerate(sizes)]

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_tally_chunk, *zip(*jobs)))
    else:
        parts = [_tally_chunk(*job) for job in jobs]

    tallies = tuple(sum(col) for col in zip(*parts))
    reference = exact_event_probability(census.counts)
    deviation = max(abs(c / n - float(p)) for c, p in zip(tallies, reference.weights))
    return SampleReport(seed, n, tallies, deviation)

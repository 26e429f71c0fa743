"""Event-counting probabilities and their distance from the Born rule."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Iterable, Sequence

from .core import MinimumUnit, WaveFunction, as_fraction, census
from .torus import event_count


class DegenerateDiscretizationError(ValueError):
    """Every site quantized to zero states, so no event exists."""


@dataclass(frozen=True)
class ProbabilityDistribution:
    """Weights indexed by site. ``exact`` weights are ``Fraction``s summing to 1."""

    weights: tuple[Fraction | float, ...]
    exact: bool

    def __post_init__(self) -> None:
        if not self.weights:
            raise ValueError("empty distribution")
        if any(not 0 <= p <= 1 for p in self.weights):
            raise ValueError("weights must lie in [0, 1]")
        total = sum(self.weights)
        if self.exact:
            if total != 1:
                raise ValueError(f"exact weights sum to {total}, not 1")
        elif abs(total - 1) > 1e-12:
            raise ValueError(f"weights sum to {total!r}")

    def __getitem__(self, x: int) -> Fraction | float:
        return self.weights[x]

    def __len__(self) -> int:
        return len(self.weights)

    def floats(self) -> tuple[float, ...]:
        return tuple(float(p) for p in self.weights)


@dataclass(frozen=True)
class ConvergenceRecord:
    u: MinimumUnit
    linf_error: float
    l1_error: float
    total_states: int
    total_events: int


def _normalize(weights: Sequence[int | Fraction]) -> ProbabilityDistribution:
    total = sum(weights)
    return ProbabilityDistribution(tuple(Fraction(w, 1) / total for w in weights), exact=True)


def exact_event_probability(counts: Sequence[int]) -> ProbabilityDistribution:
    """Share of elementary events per site with ``m' = m``: ``m_i**2 / sum m_j**2``."""
    if any(m < 0 for m in counts):
        raise ValueError("state counts must be nonnegative")
    if not any(counts):
        raise DegenerateDiscretizationError("degenerate discretization: every state count is zero")
    return _normalize([event_count(m) for m in counts])


def product_event_probability(counts_t: Sequence[int], counts_next: Sequence[int]) -> ProbabilityDistribution:
    if len(counts_t) != len(counts_next):
        raise ValueError("count lists differ in length")
    products = [event_count(m, m2) for m, m2 in zip(counts_t, counts_next)]
    if not any(products):
        raise DegenerateDiscretizationError("degenerate discretization: every event count is zero")
    return _normalize(products)


def born_probability(wf: WaveFunction, exact: bool = False) -> ProbabilityDistribution:
    """``|psi(x)|**2 / sum |psi|**2`` from the moduli.

    Moduli are converted to rationals first, so equal moduli give exactly
    equal weights even in floating mode.
    """
    squares = [as_fraction(r) ** 2 for r in wf.modulus]
    if not any(squares):
        raise ValueError("wave function is zero everywhere")
    dist = _normalize(squares)
    return dist if exact else ProbabilityDistribution(dist.floats(), exact=False)


def event_probability_at(wf: WaveFunction, u: MinimumUnit | Real | str) -> ProbabilityDistribution:
    return exact_event_probability(census(wf, u).counts)


def _distances(p: Iterable[float], q: Iterable[float]) -> tuple[float, float]:
    diffs = [abs(a - b) for a, b in zip(p, q)]
    return max(diffs), sum(diffs)


def discretization_error(wf: WaveFunction, u: MinimumUnit | Real | str) -> ConvergenceRecord:
    unit = u if isinstance(u, MinimumUnit) else MinimumUnit(u)
    counts = census(wf, unit).counts
    event = exact_event_probability(counts)
    linf, l1 = _distances(event.floats(), born_probability(wf).floats())
    return ConvergenceRecord(
        u=unit,
        linf_error=linf,
        l1_error=l1,
        total_states=sum(counts),
        total_events=sum(event_count(m) for m in counts),
    )


def convergence_sweep(wf: WaveFunction, u_values: Sequence[MinimumUnit | Real | str]) -> list[ConvergenceRecord]:
    units = [u if isinstance(u, MinimumUnit) else MinimumUnit(u) for u in u_values]
    if not units:
        raise ValueError("need at least one u value")
    for coarse, fine in zip(units, units[1:]):
        if not fine.value < coarse.value:
            raise ValueError("u values must be strictly decreasing")
    return [discretization_error(wf, unit) for unit in units]

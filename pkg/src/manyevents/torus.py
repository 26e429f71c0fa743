"""Discrete torus of elementary states and the events between time slices."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .core import MinimumUnit, StateCensus

DEFAULT_EVENT_LIMIT = 10**6


class EnumerationLimitError(RuntimeError):
    """Raised when explicit event materialization would exceed its cap."""


@dataclass(frozen=True)
class TorusLattice:
    n_theta: int
    n_x: int
    n_t: int
    unit: MinimumUnit

    def __post_init__(self) -> None:
        for name in ("n_theta", "n_x", "n_t"):
            size = getattr(self, name)
            if not isinstance(size, int) or size < 1:
                raise ValueError(f"{name} must be a positive integer, got {size!r}")

    def wrap_theta(self, theta: int) -> int:
        return theta % self.n_theta

    def wrap_x(self, x: int) -> int:
        return x % self.n_x

    def wrap_t(self, t: int) -> int:
        return t % self.n_t

    def next_t(self, t: int) -> int:
        return (t + 1) % self.n_t

    def point(self, w: int, theta: int, x: int, t: int) -> ElementaryState:
        """State at the given coordinates, with theta, x and t wrapped."""
        if w < 0:
            raise ValueError(f"wave index must be nonnegative, got {w}")
        return ElementaryState(w, self.wrap_theta(theta), self.wrap_x(x), self.wrap_t(t))


def build_lattice(n_theta: int, n_x: int, n_t: int, u: MinimumUnit) -> TorusLattice:
    if not isinstance(u, MinimumUnit):
        u = MinimumUnit(u)
    return TorusLattice(n_theta, n_x, n_t, u)


class ElementaryState(NamedTuple):
    w: int
    theta: int
    x: int
    t: int


class ElementaryEvent(NamedTuple):
    source: ElementaryState
    target: ElementaryState


def canonical_order(state: ElementaryState) -> tuple[int, int, int]:
    return (state.x, state.w, state.theta)


def enumerate_states(
    lattice: TorusLattice,
    census: StateCensus,
    theta_of_x: Mapping[int, int],
    t: int,
) -> frozenset[ElementaryState]:
    """All points ``(w, theta(x), x, t)`` with ``0 <= w < m_x``."""
    if len(census) > lattice.n_x:
        raise ValueError(f"census has {len(census)} sites but the lattice only {lattice.n_x}")
    t = lattice.wrap_t(t)
    states = []
    for x, m in enumerate(census.counts):
        if m == 0:
            continue
        theta = theta_of_x[x]
        if not 0 <= theta < lattice.n_theta:
            raise ValueError(f"theta index {theta} out of range for n_theta={lattice.n_theta}")
        states.extend(ElementaryState(w, theta, x, t) for w in range(m))
    return frozenset(states)


def _single_time(states: Iterable[ElementaryState], label: str) -> int | None:
    times = {s.t for s in states}
    if len(times) > 1:
        raise ValueError(f"{label} mixes time indices {sorted(times)}")
    return times.pop() if times else None


def _fibers(states: Iterable[ElementaryState]) -> dict[int, list[ElementaryState]]:
    fibers: dict[int, list[ElementaryState]] = defaultdict(list)
    for s in states:
        fibers[s.x].append(s)
    return fibers


def _check_slices(
    states_t: Iterable[ElementaryState],
    states_next: Iterable[ElementaryState],
    lattice: TorusLattice | None,
) -> None:
    t = _single_time(states_t, "states_t")
    t_next = _single_time(states_next, "states_next")
    if t is None or t_next is None:
        return
    expected = lattice.next_t(t) if lattice is not None else t + 1
    if t_next != expected:
        raise ValueError(f"states_next at t={t_next} does not follow t={t}")


def count_events(
    states_t: Iterable[ElementaryState],
    states_next: Iterable[ElementaryState],
    lattice: TorusLattice | None = None,
) -> int:
    """Number of events ``enumerate_events`` would produce, without building them."""
    states_t, states_next = list(states_t), list(states_next)
    _check_slices(states_t, states_next, lattice)
    a, b = _fibers(states_t), _fibers(states_next)
    return sum(len(a[x]) * len(b[x]) for x in a.keys() & b.keys())


def enumerate_events(
    states_t: Iterable[ElementaryState],
    states_next: Iterable[ElementaryState],
    lattice: TorusLattice | None = None,
    limit: int = DEFAULT_EVENT_LIMIT,
) -> frozenset[ElementaryEvent]:
    """Every ordered pair of states on adjacent slices sharing a position.

    The phase index may change across the step. Without ``lattice`` the
    next slice must sit at ``t + 1``; with it, time wraps around ``n_t``.
    Raises ``EnumerationLimitError`` beyond ``limit`` events; use
    ``count_events`` or ``event_count`` there.
    """
    states_t, states_next = list(states_t), list(states_next)
    _check_slices(states_t, states_next, lattice)
    a, b = _fibers(states_t), _fibers(states_next)
    shared = sorted(a.keys() & b.keys())
    total = sum(len(a[x]) * len(b[x]) for x in shared)
    if total > limit:
        raise EnumerationLimitError(f"{total} events exceed the enumeration limit of {limit}")
    return frozenset(ElementaryEvent(s, s2) for x in shared for s in a[x] for s2 in b[x])


def event_count(m: int, m_prime: int | None = None) -> int:
    """Events in one position fiber: ``m * m'``, or ``m**2`` when stationary."""
    if m < 0 or (m_prime is not None and m_prime < 0):
        raise ValueError("state counts must be nonnegative")
    return m * (m if m_prime is None else m_prime)


@dataclass(frozen=True)
class EventCensus:
    event_counts: tuple[int, ...]

    def __getitem__(self, x: int) -> int:
        return self.event_counts[x]

    def __len__(self) -> int:
        return len(self.event_counts)

    @property
    def total(self) -> int:
        return sum(self.event_counts)


def event_census(census_t: StateCensus, census_next: StateCensus | None = None) -> EventCensus:
    if census_next is None:
        return EventCensus(tuple(event_count(m) for m in census_t.counts))
    if len(census_t) != len(census_next):
        raise ValueError("censuses cover different numbers of sites")
    return EventCensus(tuple(event_count(m, m2) for m, m2 in zip(census_t.counts, census_next.counts)))

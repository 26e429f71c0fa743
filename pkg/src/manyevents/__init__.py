"""Event counting on a discrete torus and the Born rule it reproduces."""

from .core import (
    MinimumUnit,
    StateCensus,
    WaveFunction,
    census,
    complex_value,
    loop_phase_factor,
    mobius_superposition,
    shift_phase,
    state_count,
    wave_from_cartesian,
    wave_from_polar,
)
from .probability import (
    ConvergenceRecord,
    DegenerateDiscretizationError,
    ProbabilityDistribution,
    born_probability,
    convergence_sweep,
    discretization_error,
    event_probability_at,
    exact_event_probability,
    product_event_probability,
)
from .sampler import SampleReport, frequency_deviation, sample_events
from .torus import (
    ElementaryEvent,
    ElementaryState,
    EnumerationLimitError,
    EventCensus,
    TorusLattice,
    build_lattice,
    count_events,
    enumerate_events,
    enumerate_states,
    event_census,
    event_count,
)

__all__ = [name for name in dir() if not name.startswith("_")]

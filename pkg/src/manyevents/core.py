"""Geometric wave function, minimum unit, state counting and half-angle phase algebra.

A wave function value at a site is ``R_w * exp(i * theta / (2 * R_theta))``.
The half angle makes the phase circle a double cover: one full loop of
``2*pi*R_theta`` flips the sign, two loops close it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Real
from typing import Iterable, Sequence

import mpmath

# Working precision for 2*pi*R_w/u. Ties at .5 only occur for rational inputs
# whose product with pi is rational, which never happens except at zero.
COUNT_DPS = 60


def as_fraction(value: Real | Decimal | str) -> Fraction:
    """Exact rational view of a number; decimal strings parse exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, float) and not math.isfinite(value):
        raise ValueError(f"non-finite value: {value!r}")
    if isinstance(value, (int, float, Decimal, str)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a finite number: {value!r}") from exc
    return Fraction(float(value))


@dataclass(frozen=True)
class MinimumUnit:
    """Quantization step shared by every position quantity."""

    value: Fraction

    def __init__(self, value: Real | Decimal | str) -> None:
        u = as_fraction(value)
        if u <= 0:
            raise ValueError(f"minimum unit must be positive, got {value!r}")
        object.__setattr__(self, "value", u)

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return f"{float(self.value):.12g}"


def _unit(u: MinimumUnit | Real | str) -> MinimumUnit:
    return u if isinstance(u, MinimumUnit) else MinimumUnit(u)


@dataclass(frozen=True)
class WaveFunction:
    """Complex amplitudes on a periodic 1-D ring of ``len(modulus)`` sites.

    ``phase`` lives on the double cover ``[0, 4*pi*phase_radius)``.
    Site indices wrap: site ``L`` is site ``0``.
    """

    modulus: tuple[Real, ...]
    phase: tuple[float, ...]
    phase_radius: Real = 1

    def __post_init__(self) -> None:
        if not self.modulus:
            raise ValueError("wave function needs at least one site")
        if len(self.modulus) != len(self.phase):
            raise ValueError("modulus and phase must have the same length")
        if not self.phase_radius > 0:
            raise ValueError(f"phase radius must be positive, got {self.phase_radius!r}")
        for r in self.modulus:
            if isinstance(r, float) and not math.isfinite(r):
                raise ValueError(f"non-finite modulus: {r!r}")
            if r < 0:
                raise ValueError(f"negative modulus: {r!r}")
        period = self.period
        for theta in self.phase:
            if not 0 <= theta < period:
                raise ValueError(f"phase {theta!r} outside [0, {period})")

    @property
    def period(self) -> float:
        """Length of the double cover, ``4*pi*R_theta``."""
        return 4 * math.pi * float(self.phase_radius)

    @property
    def sites(self) -> range:
        return range(len(self.modulus))

    def __len__(self) -> int:
        return len(self.modulus)

    def site(self, x: int) -> int:
        return x % len(self.modulus)

    def value(self, x: int) -> complex:
        x = self.site(x)
        return complex_value(self.modulus[x], self.phase[x], self.phase_radius)

    def values(self) -> list[complex]:
        return [self.value(x) for x in self.sites]


def complex_value(modulus: Real, phase: float, phase_radius: Real = 1) -> complex:
    return float(modulus) * cmath.exp(0.5j * float(phase) / float(phase_radius))


def reduce_phase(theta: float, phase_radius: Real = 1) -> float:
    period = 4 * math.pi * float(phase_radius)
    reduced = math.fmod(float(theta), period)
    if reduced < 0:
        reduced += period
    # fmod of a tiny negative number can land exactly on the period
    return 0.0 if reduced >= period else reduced


def wave_from_polar(
    modulus: Sequence[Real],
    phase: Sequence[float],
    phase_radius: Real = 1,
) -> WaveFunction:
    if not phase_radius > 0:
        raise ValueError(f"phase radius must be positive, got {phase_radius!r}")
    if len(modulus) != len(phase):
        raise ValueError("modulus and phase must have the same length")
    reduced = tuple(reduce_phase(theta, phase_radius) for theta in phase)
    return WaveFunction(tuple(modulus), reduced, phase_radius)


def wave_from_cartesian(amplitudes: Iterable[complex | tuple[float, float]]) -> WaveFunction:
    """Polar form of complex amplitudes with ``R_theta = 1``.

    The phase is twice the argument, so it lands on the principal sheet
    ``[0, 4*pi)``. Zero amplitudes get phase 0.
    """
    moduli: list[float] = []
    phases: list[float] = []
    for amp in amplitudes:
        z = complex(*amp) if isinstance(amp, tuple) else complex(amp)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError(f"non-finite amplitude: {amp!r}")
        r = abs(z)
        moduli.append(r)
        phases.append(0.0 if r == 0 else reduce_phase(2 * cmath.phase(z)))
    if not moduli:
        raise ValueError("wave function needs at least one site")
    return WaveFunction(tuple(moduli), tuple(phases), 1)


def shift_phase(wf: WaveFunction, delta: float) -> WaveFunction:
    """Rotate every site's phase by ``delta`` (moduli untouched)."""
    return wave_from_polar(wf.modulus, [theta + delta for theta in wf.phase], wf.phase_radius)


def _round_half_even(x: mpmath.mpf) -> int:
    floor = int(mpmath.floor(x))
    frac = x - floor
    if frac > 0.5:
        return floor + 1
    if frac < 0.5:
        return floor
    return floor + (floor & 1)


def state_count(modulus: Real, u: MinimumUnit | Real | str) -> int:
    """Number of elementary states on the wave circle: ``round(2*pi*R_w/u)``.

    Rounding is half-to-even. The product is evaluated at ``COUNT_DPS``
    significant digits from exact rational inputs.
    """
    unit = _unit(u)
    r = as_fraction(modulus)
    if r < 0:
        raise ValueError(f"negative modulus: {modulus!r}")
    if r == 0:
        return 0
    ratio = r / unit.value
    magnitude = max(0, ratio.numerator.bit_length() - ratio.denominator.bit_length())
    dps = COUNT_DPS + int(magnitude * 0.30103) + 1
    with mpmath.workdps(dps):
        x = 2 * mpmath.pi * mpmath.mpf(ratio.numerator) / mpmath.mpf(ratio.denominator)
        return _round_half_even(x)


@dataclass(frozen=True)
class StateCensus:
    """Elementary-state count per site at time index ``time_index``."""

    counts: tuple[int, ...]
    unit: MinimumUnit
    time_index: int = 0

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.counts):
            raise ValueError("state counts must be nonnegative")

    def __getitem__(self, x: int) -> int:
        return self.counts[x]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.counts))


def census(wf: WaveFunction, u: MinimumUnit | Real | str, t: int = 0) -> StateCensus:
    unit = _unit(u)
    return StateCensus(tuple(state_count(r, unit) for r in wf.modulus), unit, t)


def loop_phase_factor(k: int) -> int:
    """Sign picked up after ``k`` full loops of the phase circle: ``(-1)**k``."""
    if k < 0:
        raise ValueError(f"loop count must be nonnegative, got {k}")
    return -1 if k & 1 else 1


def mobius_superposition(base_modulus: Real, loop_counts: Iterable[int]) -> Real:
    """Sum of one path per loop count, each weighted by its loop sign."""
    if base_modulus < 0:
        raise ValueError(f"negative modulus: {base_modulus!r}")
    return base_modulus * sum(loop_phase_factor(k) for k in loop_counts)

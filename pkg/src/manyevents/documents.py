"""Reading wave-function input documents.

A document is JSON::

    {"u": "0.1", "phase_radius": "1",
     "amplitudes": {"polar": {"modulus": ["0.6", "0.8"], "phase": ["0", "0"]}}}

``amplitudes`` may instead hold ``{"cartesian": [[re, im], ...]}``. ``u`` is a
decimal string or a list of them. Decimal strings are read as exact
rationals. An optional ``next`` key holds the amplitudes for the following
time slice, in the same form, for product-mode probabilities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .core import MinimumUnit, WaveFunction, as_fraction, wave_from_cartesian, wave_from_polar


class DocumentError(ValueError):
    pass


@dataclass(frozen=True)
class WaveDocument:
    wave: WaveFunction
    units: tuple[MinimumUnit, ...]
    next_wave: WaveFunction | None = None


def _number(value, what: str) -> Fraction:
    if not isinstance(value, (str, int, float)) or isinstance(value, bool):
        raise DocumentError(f"{what} must be a number or decimal string, got {value!r}")
    try:
        return as_fraction(value)
    except ValueError as exc:
        raise DocumentError(f"{what}: {exc}") from exc


def _list(value, what: str) -> list:
    if not isinstance(value, list):
        raise DocumentError(f"{what} must be a list")
    return value


def parse_amplitudes(spec, phase_radius: Fraction) -> WaveFunction:
    if not isinstance(spec, dict) or len(spec.keys() & {"polar", "cartesian"}) != 1:
        raise DocumentError("amplitudes must hold exactly one of 'polar' or 'cartesian'")
    if "polar" in spec:
        polar = spec["polar"]
        if not isinstance(polar, dict):
            raise DocumentError("polar amplitudes must be an object")
        modulus = [_number(r, "modulus") for r in _list(polar.get("modulus"), "modulus")]
        phase = [float(_number(p, "phase")) for p in _list(polar.get("phase"), "phase")]
        return wave_from_polar(modulus, phase, phase_radius)

    pairs = []
    for pair in _list(spec["cartesian"], "cartesian"):
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentError(f"cartesian entries must be [re, im] pairs, got {pair!r}")
        pairs.append(complex(float(_number(pair[0], "re")), float(_number(pair[1], "im"))))
    wf = wave_from_cartesian(pairs)
    if phase_radius == 1:
        return wf
    return wave_from_polar(wf.modulus, [p * float(phase_radius) for p in wf.phase], phase_radius)


def parse_document(data) -> WaveDocument:
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    if "amplitudes" not in data:
        raise DocumentError("document has no 'amplitudes'")
    phase_radius = _number(data.get("phase_radius", "1"), "phase_radius")
    if phase_radius <= 0:
        raise DocumentError("phase_radius must be positive")

    raw_u = data.get("u", [])
    raw_u = raw_u if isinstance(raw_u, list) else [raw_u]
    try:
        units = tuple(MinimumUnit(_number(u, "u")) for u in raw_u)
        wave = parse_amplitudes(data["amplitudes"], phase_radius)
        next_wave = parse_amplitudes(data["next"], phase_radius) if "next" in data else None
    except DocumentError:
        raise
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    return WaveDocument(wave, units, next_wave)


def load_document(path: str | Path) -> WaveDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})") from exc
    return parse_document(data)

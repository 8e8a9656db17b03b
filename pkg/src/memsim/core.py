"""Shared domain types: drive waveforms, simulation configuration, the device
state container, the uniform time grid, and the simulation result record.

All types are immutable after construction and safe to share between
concurrent workers. Time is SI seconds throughout; no internal unit scaling.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, DomainError

WAVEFORM_KINDS = ("sine", "pulse", "triangle", "sampled")
INTEGRATORS = ("euler", "rk4")
CLAMP_POLICIES = ("hard_clamp", "reflect_none")

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Waveform:
    """Declarative drive signal, evaluated at arbitrary time.

    ``amplitude`` and ``offset`` are volts or amperes depending on the
    controlled quantity of the model the waveform drives.

    Conventions (periodic kinds share the sine phase convention, i.e. the
    cycle position is ``frequency * t + phase / 2pi``):

    * sine:     offset + amplitude * sin(2*pi*frequency*t + phase)
    * pulse:    offset + amplitude while the cycle fraction < duty, else offset
    * triangle: piecewise linear, peak +amplitude at quarter period,
                -amplitude at three quarters
    * sampled:  linear interpolation between the given (t, value) pairs;
                evaluation outside the sample span is an error
    """

    kind: str
    amplitude: float = 0.0
    frequency: float = 0.0
    phase: float = 0.0
    offset: float = 0.0
    duty: float = 0.5
    samples: tuple[tuple[float, float], ...] = field(default=())

    def __post_init__(self):
        if self.kind not in WAVEFORM_KINDS:
            raise ConfigError(f"unknown waveform kind {self.kind!r}")
        if self.kind == "sampled":
            if len(self.samples) < 2:
                raise ConfigError("sampled waveform needs at least 2 samples")
            ts = [t for t, _ in self.samples]
            if any(b <= a for a, b in zip(ts, ts[1:])):
                raise ConfigError("sampled waveform times must be strictly increasing")
        else:
            if not self.frequency > 0.0:
                raise ConfigError(f"frequency must be > 0 for {self.kind} waveform")
            if self.kind == "pulse" and not 0.0 < self.duty < 1.0:
                raise ConfigError("pulse duty must lie in (0, 1)")

    @property
    def period(self) -> float | None:
        """Drive period in seconds; None for sampled waveforms."""
        if self.kind == "sampled":
            return None
        return 1.0 / self.frequency


def _cycle_fraction(w: Waveform, t: float) -> float:
    u = w.frequency * t + w.phase / _TWO_PI
    return u - math.floor(u)


def waveform_eval(w: Waveform, t: float) -> float:
    """Evaluate the drive value at time ``t`` (pure, deterministic).

    Raises DomainError for a sampled waveform queried outside its span.
    """
    if w.kind == "sine":
        return w.offset + w.amplitude * math.sin(_TWO_PI * w.frequency * t + w.phase)
    if w.kind == "pulse":
        return w.offset + w.amplitude if _cycle_fraction(w, t) < w.duty else w.offset
    if w.kind == "triangle":
        u = _cycle_fraction(w, t)
        if u < 0.25:
            g = 4.0 * u
        elif u < 0.75:
            g = 2.0 - 4.0 * u
        else:
            g = 4.0 * u - 4.0
        return w.offset + w.amplitude * g
    # sampled
    ts = w.samples
    if t < ts[0][0] or t > ts[-1][0]:
        raise DomainError(
            f"t={t} outside sampled waveform span [{ts[0][0]}, {ts[-1][0]}]"
        )
    hi = bisect_right([p[0] for p in ts], t)
    if hi == len(ts):
        return ts[-1][1]
    lo = hi - 1
    (t0, v0), (t1, v1) = ts[lo], ts[hi]
    return v0 + (v1 - v0) * ((t - t0) / (t1 - t0))


def waveform_samples(w: Waveform, times: np.ndarray) -> np.ndarray:
    """Vectorized waveform_eval over a time array (float64 in, float64 out)."""
    t = np.asarray(times, dtype=np.float64)
    if w.kind == "sine":
        return w.offset + w.amplitude * np.sin(_TWO_PI * w.frequency * t + w.phase)
    if w.kind in ("pulse", "triangle"):
        u = w.frequency * t + w.phase / _TWO_PI
        u = u - np.floor(u)
        if w.kind == "pulse":
            return np.where(u < w.duty, w.offset + w.amplitude, w.offset)
        g = np.where(
            u < 0.25, 4.0 * u, np.where(u < 0.75, 2.0 - 4.0 * u, 4.0 * u - 4.0)
        )
        return w.offset + w.amplitude * g
    ts = np.array([p[0] for p in w.samples])
    vs = np.array([p[1] for p in w.samples])
    if t.min() < ts[0] or t.max() > ts[-1]:
        raise DomainError("time grid extends outside the sampled waveform span")
    return np.interp(t, ts, vs)


@dataclass(frozen=True)
class SimConfig:
    """Fixed-step simulation window: [t_start, t_end] stepped by dt."""

    t_start: float
    t_end: float
    dt: float
    integrator: str = "rk4"
    clamp_policy: str = "hard_clamp"

    def __post_init__(self):
        problems = []
        if not self.t_end > self.t_start:
            problems.append(f"t_end ({self.t_end}) must exceed t_start ({self.t_start})")
        if not self.dt > 0.0:
            problems.append(f"dt must be > 0, got {self.dt}")
        elif (self.t_end - self.t_start) / self.dt < 2.0:
            problems.append(
                f"(t_end - t_start)/dt must be >= 2, got "
                f"{(self.t_end - self.t_start) / self.dt}"
            )
        if self.integrator not in INTEGRATORS:
            problems.append(f"integrator must be one of {INTEGRATORS}, got {self.integrator!r}")
        if self.clamp_policy not in CLAMP_POLICIES:
            problems.append(
                f"clamp_policy must be one of {CLAMP_POLICIES}, got {self.clamp_policy!r}"
            )
        if problems:
            raise ConfigError("; ".join(problems), errors=problems)

    def grid(self) -> np.ndarray:
        return time_grid(self.t_start, self.t_end, self.dt)


def time_grid(start, end: float | None = None, dt: float | None = None) -> np.ndarray:
    """Uniform grid t_start, t_start+dt, ..., last point <= t_end.

    Point count is floor((t_end - t_start)/dt) + 1; a quotient within 1e-9 of
    the next integer is rounded up so that representable exact spans (e.g.
    1.0 / 0.1) keep their final grid point. Accepts a SimConfig or explicit
    (start, end, dt); the raw form allows a minimum of two points.
    """
    if isinstance(start, SimConfig):
        start, end, dt = start.t_start, start.t_end, start.dt
    if not dt > 0.0:
        raise ConfigError(f"dt must be > 0, got {dt}")
    if not end > start:
        raise ConfigError(f"t_end ({end}) must exceed t_start ({start})")
    ratio = (end - start) / dt
    n = int(math.floor(ratio))
    if ratio - n > 1.0 - 1e-9:
        n += 1
    if n < 1:
        raise ConfigError(
            f"grid [{start}, {end}] with dt={dt} holds fewer than two points"
        )
    return start + np.arange(n + 1, dtype=np.float64) * dt


@dataclass(frozen=True)
class DeviceState:
    """Scalar internal state variable with its admissible bounds.

    Units are meters for the physical models and dimensionless for the
    normalized ones.
    """

    x: float
    x_min: float
    x_max: float

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise ConfigError(f"x_min ({self.x_min}) must be < x_max ({self.x_max})")
        if not self.x_min <= self.x <= self.x_max:
            raise DomainError(
                f"state x={self.x} outside bounds [{self.x_min}, {self.x_max}]"
            )


@dataclass(frozen=True, eq=False)
class SimResult:
    """Uniform time series of (t, v, i, x, r).

    ``r`` is v/i where i is nonzero and the memristance of the state
    otherwise (so pinch points still report a resistance). ``drive_period``
    carries the drive's period for loop extraction; None when the drive was
    aperiodic. The arrays are owned by the result and must not be mutated.
    """

    t: np.ndarray
    v: np.ndarray
    i: np.ndarray
    x: np.ndarray
    r: np.ndarray
    drive_period: float | None = None

    def __post_init__(self):
        n = len(self.t)
        for name in ("v", "i", "x", "r"):
            if len(getattr(self, name)) != n:
                raise ConfigError(f"column {name} length mismatch against t")

    def __len__(self) -> int:
        return len(self.t)

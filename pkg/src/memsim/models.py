"""The five compact memristor models.

Each model contributes a state-derivative law dx/dt(x, drive) and a conduction
law relating voltage and current through the instantaneous state. Linear ion
drift, Simmons tunnel barrier and TEAM are current-controlled; nonlinear ion
drift and VTEAM are voltage-controlled. All operations are pure functions of
(params, state, drive).

Integer exponents are evaluated by repeated multiplication, never via
log/exp, so negative bases (transient overshoot past a threshold) stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ConfigError, DomainError
from .windows import (
    WindowSpec,
    _ipow,
    kvatinsky_window,
    kvatinsky_window_mirrored,
    window_value,
)

CONDUCTION_KINDS = ("linear_resistance", "exponential_resistance")

_NORMALIZED_WINDOWS = ("none", "joglekar", "biolek", "prodromakis")
_BRANCH_WINDOWS = ("none", "kvatinsky")


def _collect(problems):
    if problems:
        raise ConfigError("; ".join(problems), errors=problems)


@dataclass(frozen=True)
class ConductionLaw:
    """Resistance-of-state mapping between r_on and r_off.

    linear_resistance:      R(x) = r_on + (r_off - r_on) * u
    exponential_resistance: R(x) = r_on * exp(lam * u)

    with u = (x - x_lo)/(x_hi - x_lo). ``lam`` defaults to ln(r_off/r_on) so
    that both laws share the same endpoints; an explicit value overrides.
    """

    kind: str = "linear_resistance"
    lam: float | None = None

    def __post_init__(self):
        if self.kind not in CONDUCTION_KINDS:
            raise ConfigError(f"unknown conduction law {self.kind!r}")
        if self.lam is not None and not self.lam > 0.0:
            raise ConfigError(f"conduction lambda must be > 0, got {self.lam}")

    def resistance(self, x, r_on, r_off, x_lo, x_hi):
        u = (x - x_lo) / (x_hi - x_lo)
        if self.kind == "linear_resistance":
            return r_on + (r_off - r_on) * u
        lam = self.lam if self.lam is not None else math.log(r_off / r_on)
        return r_on * math.exp(lam * u)


@dataclass(frozen=True)
class LinearDriftParams:
    """Two series resistors: doped region of width x (conductive, r_on end)
    and undoped remainder (r_off end), uniform field, equal ion mobility."""

    r_on: float          # ohm
    r_off: float         # ohm
    d: float             # m, device length
    mu_v: float          # m^2 s^-1 V^-1, average ion mobility
    window: WindowSpec = field(default_factory=WindowSpec)

    def __post_init__(self):
        problems = []
        if not 0.0 < self.r_on < self.r_off:
            problems.append(f"need 0 < r_on < r_off, got r_on={self.r_on}, r_off={self.r_off}")
        if not self.d > 0.0:
            problems.append(f"d must be > 0, got {self.d}")
        if not self.mu_v > 0.0:
            problems.append(f"mu_v must be > 0, got {self.mu_v}")
        if self.window.kind not in _NORMALIZED_WINDOWS:
            problems.append(f"window {self.window.kind!r} not usable here; "
                            f"expected one of {_NORMALIZED_WINDOWS}")
        _collect(problems)


@dataclass(frozen=True)
class NonlinearDriftParams:
    """Voltage-controlled model with normalized state w in [0, 1]:

    i     = w^n * beta * sinh(alpha*v) + chi * (exp(gamma*v) - 1)
    dw/dt = a * v^m * f(w)

    m odd keeps the state motion sign-coherent with the voltage. chi = 0
    drops the leakage term.
    """

    alpha: float         # 1/V
    beta: float          # A
    gamma: float = 1.0   # 1/V
    chi: float = 0.0     # A
    n: int = 1           # exponent on w
    m: int = 1           # odd exponent on v
    a: float = 1.0       # s^-1 V^-m rate constant
    window: WindowSpec = field(default_factory=WindowSpec)

    def __post_init__(self):
        problems = []
        if not self.beta > 0.0:
            problems.append(f"beta must be > 0, got {self.beta}")
        if not (isinstance(self.n, int) and self.n >= 1):
            problems.append(f"n must be an integer >= 1, got {self.n!r}")
        if not (isinstance(self.m, int) and self.m >= 1 and self.m % 2 == 1):
            problems.append(f"m must be an odd integer >= 1, got {self.m!r}")
        if not self.a > 0.0:
            problems.append(f"a must be > 0, got {self.a}")
        if self.window.kind not in _NORMALIZED_WINDOWS:
            problems.append(f"window {self.window.kind!r} not usable here; "
                            f"expected one of {_NORMALIZED_WINDOWS}")
        _collect(problems)


@dataclass(frozen=True)
class SimmonsParams:
    """Simmons tunnel barrier model: resistor in series with a tunnel barrier
    of width x; exponential, asymmetric dopant motion.

    Off branch (i > 0, barrier widens):
      dx/dt = c_off * sinh(i/i_off) * exp(-exp((x - a_off)/w_c - |i|/b) - x/w_c)
    On branch (i < 0, barrier narrows):
      dx/dt = c_on  * sinh(i/i_on)  * exp(-exp(-(x - a_on)/w_c - |i|/b) - x/w_c)

    Conduction is realized through the shared resistance map with r_on at
    x_min (thin barrier) and r_off at x_max.
    """

    c_off: float         # m/s
    c_on: float          # m/s
    i_off: float         # A, current scale of the off branch
    i_on: float          # A, current scale of the on branch
    a_off: float         # m, off-branch fitting center
    a_on: float          # m, on-branch fitting center
    w_c: float           # m, decay constant
    b: float             # A, current damping scale
    x_min: float         # m
    x_max: float         # m
    r_on: float          # ohm, resistance at x_min
    r_off: float         # ohm, resistance at x_max
    iv: ConductionLaw = field(default_factory=lambda: ConductionLaw("exponential_resistance"))

    def __post_init__(self):
        problems = []
        if not self.w_c > 0.0:
            problems.append(f"w_c must be > 0, got {self.w_c}")
        if not self.b > 0.0:
            problems.append(f"b must be > 0, got {self.b}")
        if not self.x_min < self.x_max:
            problems.append(f"need x_min < x_max, got x_min={self.x_min}, x_max={self.x_max}")
        if not self.c_off > 0.0:
            problems.append(f"c_off must be > 0, got {self.c_off}")
        if not self.c_on > 0.0:
            problems.append(f"c_on must be > 0, got {self.c_on}")
        if not self.i_off > 0.0:
            problems.append(f"i_off must be > 0, got {self.i_off}")
        if not self.i_on > 0.0:
            problems.append(f"i_on must be > 0, got {self.i_on}")
        if not 0.0 < self.r_on < self.r_off:
            problems.append(f"need 0 < r_on < r_off, got r_on={self.r_on}, r_off={self.r_off}")
        _collect(problems)


def _check_team_common(p, problems):
    if not (isinstance(p.alpha_off, int) and p.alpha_off >= 1):
        problems.append(f"alpha_off must be an integer >= 1, got {p.alpha_off!r}")
    if not (isinstance(p.alpha_on, int) and p.alpha_on >= 1):
        problems.append(f"alpha_on must be an integer >= 1, got {p.alpha_on!r}")
    if not p.x_on < p.x_off:
        problems.append(f"need x_on < x_off, got x_on={p.x_on}, x_off={p.x_off}")
    if not 0.0 < p.r_on < p.r_off:
        problems.append(f"need 0 < r_on < r_off, got r_on={p.r_on}, r_off={p.r_off}")
    for name in ("window_off", "window_on"):
        w = getattr(p, name)
        if w.kind not in _BRANCH_WINDOWS:
            problems.append(f"{name} must be kvatinsky or none, got {w.kind!r}")


@dataclass(frozen=True)
class TeamParams:
    """Current-threshold model with polynomial super-threshold kinetics:

    dx/dt = k_off * (i/i_off - 1)^alpha_off * f_off(x)   for i > i_off
          = 0                                            for i_on <= i <= i_off
          = k_on  * (i/i_on - 1)^alpha_on  * f_on(x)     for i < i_on

    Signed conventions: k_on <= 0 <= k_off and i_on < 0 < i_off, stored as
    signed values. x_on is the low-resistance end, x_off the high-resistance
    end of the conduction map.
    """

    k_off: float         # m/s, >= 0
    k_on: float          # m/s, <= 0
    alpha_off: int
    alpha_on: int
    i_off: float         # A, > 0
    i_on: float          # A, < 0
    x_on: float          # m
    x_off: float         # m
    r_on: float          # ohm
    r_off: float         # ohm
    iv: ConductionLaw = field(default_factory=ConductionLaw)
    window_off: WindowSpec = field(default_factory=WindowSpec)
    window_on: WindowSpec = field(default_factory=WindowSpec)

    def __post_init__(self):
        problems = []
        if not self.k_off >= 0.0:
            problems.append(f"k_off must be >= 0, got {self.k_off}")
        if not self.k_on <= 0.0:
            problems.append(f"k_on must be <= 0, got {self.k_on}")
        if not (self.i_on < 0.0 < self.i_off):
            problems.append(f"need i_on < 0 < i_off, got i_on={self.i_on}, i_off={self.i_off}")
        _check_team_common(self, problems)
        _collect(problems)


@dataclass(frozen=True)
class VteamParams:
    """TEAM kinetics driven by a voltage threshold instead of a current one:

    dx/dt = k_off * (v/v_off - 1)^alpha_off * f_off(x)   for v > v_off
          = 0                                            for v_on <= v <= v_off
          = k_on  * (v/v_on - 1)^alpha_on  * f_on(x)     for v < v_on

    The current-voltage relationship is freely chosen through ``iv``.
    """

    k_off: float
    k_on: float
    alpha_off: int
    alpha_on: int
    v_off: float         # V, > 0
    v_on: float          # V, < 0
    x_on: float
    x_off: float
    r_on: float
    r_off: float
    iv: ConductionLaw = field(default_factory=ConductionLaw)
    window_off: WindowSpec = field(default_factory=WindowSpec)
    window_on: WindowSpec = field(default_factory=WindowSpec)

    def __post_init__(self):
        problems = []
        if not self.k_off >= 0.0:
            problems.append(f"k_off must be >= 0, got {self.k_off}")
        if not self.k_on <= 0.0:
            problems.append(f"k_on must be <= 0, got {self.k_on}")
        if not (self.v_on < 0.0 < self.v_off):
            problems.append(f"need v_on < 0 < v_off, got v_on={self.v_on}, v_off={self.v_off}")
        _check_team_common(self, problems)
        _collect(problems)


ModelParams = (
    LinearDriftParams | NonlinearDriftParams | SimmonsParams | TeamParams | VteamParams
)

MODEL_NAMES = {
    LinearDriftParams: "linear_drift",
    NonlinearDriftParams: "nonlinear_drift",
    SimmonsParams: "simmons",
    TeamParams: "team",
    VteamParams: "vteam",
}

VOLTAGE_CONTROLLED = (NonlinearDriftParams, VteamParams)


def model_name(params: ModelParams) -> str:
    return MODEL_NAMES[type(params)]


def controlled_quantity(params: ModelParams) -> str:
    """The native drive quantity: 'voltage' or 'current'."""
    return "voltage" if isinstance(params, VOLTAGE_CONTROLLED) else "current"


def model_bounds(params: ModelParams) -> tuple[float, float]:
    """Admissible (x_min, x_max) of the state variable."""
    if isinstance(params, LinearDriftParams):
        return 0.0, params.d
    if isinstance(params, NonlinearDriftParams):
        return 0.0, 1.0
    if isinstance(params, SimmonsParams):
        return params.x_min, params.x_max
    return params.x_on, params.x_off


def _check_state(x, lo, hi):
    if not lo <= x <= hi:
        raise DomainError(f"state x={x} outside [{lo}, {hi}]")


# ---------------------------------------------------------------------------
# linear ion drift


def linear_drift_derivative(p: LinearDriftParams, x: float, i: float,
                            drive_sign: float | None = None) -> float:
    """dx/dt = mu_v * (r_on/d) * i * f(x/d) in m/s."""
    _check_state(x, 0.0, p.d)
    if drive_sign is None:
        drive_sign = i
    f = window_value(p.window, x / p.d, drive_sign)
    return mu_times_field(p, i) * f


def mu_times_field(p: LinearDriftParams, i: float) -> float:
    """Windowless drift velocity mu_v * (r_on/d) * i."""
    return p.mu_v * (p.r_on / p.d) * i


def linear_drift_voltage(p: LinearDriftParams, x: float, i: float) -> float:
    """v = [r_on * x/d + r_off * (1 - x/d)] * i."""
    _check_state(x, 0.0, p.d)
    return linear_drift_resistance(p, x) * i


def linear_drift_resistance(p: LinearDriftParams, x: float) -> float:
    return p.r_on * (x / p.d) + p.r_off * (1.0 - x / p.d)


# ---------------------------------------------------------------------------
# nonlinear ion drift


def nonlinear_drift_current(p: NonlinearDriftParams, w_norm: float, v: float) -> float:
    """i = w^n * beta * sinh(alpha*v) + chi * (e^(gamma*v) - 1); pinched at v=0."""
    _check_state(w_norm, 0.0, 1.0)
    return _ipow(w_norm, p.n) * p.beta * math.sinh(p.alpha * v) + p.chi * math.expm1(p.gamma * v)


def nonlinear_drift_derivative(p: NonlinearDriftParams, w_norm: float, v: float) -> float:
    """dw/dt = a * v^m * f(w) in 1/s."""
    _check_state(w_norm, 0.0, 1.0)
    f = window_value(p.window, w_norm, v)
    return p.a * _ipow(v, p.m) * f


# ---------------------------------------------------------------------------
# Simmons tunnel barrier


def simmons_derivative(p: SimmonsParams, x: float, i: float) -> float:
    """Asymmetric exponential dopant motion, in m/s; 0 at i = 0."""
    _check_state(x, p.x_min, p.x_max)
    if i == 0.0:
        return 0.0
    if i > 0.0:
        damp = math.exp(-math.exp((x - p.a_off) / p.w_c - abs(i) / p.b) - x / p.w_c)
        return p.c_off * math.sinh(i / p.i_off) * damp
    damp = math.exp(-math.exp(-((x - p.a_on) / p.w_c) - abs(i) / p.b) - x / p.w_c)
    return p.c_on * math.sinh(i / p.i_on) * damp


def simmons_resistance(p: SimmonsParams, x: float) -> float:
    return p.iv.resistance(x, p.r_on, p.r_off, p.x_min, p.x_max)


def simmons_current(p: SimmonsParams, x: float, v: float) -> float:
    """i = v / R(x) through the conduction map."""
    _check_state(x, p.x_min, p.x_max)
    return v / simmons_resistance(p, x)


# ---------------------------------------------------------------------------
# TEAM / VTEAM


def _branch_window_off(spec: WindowSpec, x: float) -> float:
    if spec.kind == "none":
        return 1.0
    return kvatinsky_window(x, spec.a_off, spec.w_c)


def _branch_window_on(spec: WindowSpec, x: float) -> float:
    # Mirrored so the damping acts toward the on-side (lower) boundary.
    if spec.kind == "none":
        return 1.0
    return kvatinsky_window_mirrored(x, spec.a_on, spec.w_c)


def team_derivative(p: TeamParams, x: float, i: float) -> float:
    """Threshold kinetics in i: exactly 0 inside the closed deadzone
    [i_on, i_off], polynomial motion outside it."""
    _check_state(x, p.x_on, p.x_off)
    if i > p.i_off:
        return p.k_off * _ipow(i / p.i_off - 1.0, p.alpha_off) * _branch_window_off(p.window_off, x)
    if i < p.i_on:
        return p.k_on * _ipow(i / p.i_on - 1.0, p.alpha_on) * _branch_window_on(p.window_on, x)
    return 0.0


def team_resistance(p: TeamParams | VteamParams, x: float) -> float:
    return p.iv.resistance(x, p.r_on, p.r_off, p.x_on, p.x_off)


def team_voltage(p: TeamParams, x: float, i: float) -> float:
    """v = R(x) * i with R between r_on (at x_on) and r_off (at x_off)."""
    _check_state(x, p.x_on, p.x_off)
    return team_resistance(p, x) * i


def vteam_derivative(p: VteamParams, x: float, v: float) -> float:
    """Threshold kinetics in v: exactly 0 inside the closed deadzone
    [v_on, v_off], polynomial motion outside it."""
    _check_state(x, p.x_on, p.x_off)
    if v > p.v_off:
        return p.k_off * _ipow(v / p.v_off - 1.0, p.alpha_off) * _branch_window_off(p.window_off, x)
    if v < p.v_on:
        return p.k_on * _ipow(v / p.v_on - 1.0, p.alpha_on) * _branch_window_on(p.window_on, x)
    return 0.0


def vteam_current(p: VteamParams, x: float, v: float) -> float:
    """i = v / R(x); pinched at v = 0."""
    _check_state(x, p.x_on, p.x_off)
    return v / team_resistance(p, x)


# ---------------------------------------------------------------------------
# shared dispatchers


def memristance(params: ModelParams, x: float) -> float:
    """Resistance of the device at state x.

    Resistance-map models use their conduction law. For nonlinear ion drift,
    whose conduction is not a resistance map, this is the small-signal
    resistance at v = 0: 1/(w^n*beta*alpha + chi*gamma) (inf when the device
    conducts nothing there).
    """
    lo, hi = model_bounds(params)
    _check_state(x, lo, hi)
    if isinstance(params, LinearDriftParams):
        return linear_drift_resistance(params, x)
    if isinstance(params, NonlinearDriftParams):
        g = _ipow(x, params.n) * params.beta * params.alpha + params.chi * params.gamma
        return math.inf if g == 0.0 else 1.0 / g
    if isinstance(params, SimmonsParams):
        return simmons_resistance(params, x)
    return team_resistance(params, x)


def state_derivative(params: ModelParams, x: float, drive: float,
                     drive_is_voltage: bool | None = None) -> float:
    """dx/dt for any model under either drive quantity.

    When the drive quantity differs from the model's native one, the
    conduction law converts it (i = v/R(x) or v = R(x)*i). Nonlinear ion
    drift accepts voltage only: its conduction law is not invertible.
    """
    if drive_is_voltage is None:
        drive_is_voltage = controlled_quantity(params) == "voltage"
    if isinstance(params, LinearDriftParams):
        i = drive / linear_drift_resistance(params, x) if drive_is_voltage else drive
        return linear_drift_derivative(params, x, i)
    if isinstance(params, NonlinearDriftParams):
        if not drive_is_voltage:
            raise ConfigError("nonlinear_drift cannot be current-driven")
        return nonlinear_drift_derivative(params, x, drive)
    if isinstance(params, SimmonsParams):
        i = drive / simmons_resistance(params, x) if drive_is_voltage else drive
        return simmons_derivative(params, x, i)
    if isinstance(params, TeamParams):
        i = drive / team_resistance(params, x) if drive_is_voltage else drive
        return team_derivative(params, x, i)
    v = drive if drive_is_voltage else drive * team_resistance(params, x)
    return vteam_derivative(params, x, v)

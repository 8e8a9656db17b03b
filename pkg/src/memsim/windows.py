"""Window functions that multiply the state derivative to shape boundary
behavior.

The joglekar/biolek/prodromakis family operates on a normalized state in
[0, 1]; the kvatinsky window operates on the raw state around a center value.
Window evaluation never clamps its argument: the integrator is the single
clamping authority.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError, DomainError

WINDOW_KINDS = ("none", "joglekar", "biolek", "prodromakis", "kvatinsky")


def _ipow(base: float, n: int) -> float:
    # Repeated multiplication: exact handling of negative bases and the same
    # rounding sequence in every backend.
    r = 1.0
    for _ in range(n):
        r *= base
    return r


def _check_norm(x_norm: float) -> None:
    if not 0.0 <= x_norm <= 1.0:
        raise DomainError(f"normalized state {x_norm} outside [0, 1]")


def joglekar(x_norm: float, p: int = 1) -> float:
    """f(x) = 1 - (2x - 1)^(2p): zero at both boundaries, 1 at the center."""
    _check_norm(x_norm)
    return 1.0 - _ipow(2.0 * x_norm - 1.0, 2 * p)


def biolek(x_norm: float, p: int, drive_sign: float) -> float:
    """Drive-direction window: 1 - x^(2p) while driving up, 1 - (x-1)^(2p)
    while driving down. drive_sign = 0 resolves to the driving-up branch."""
    _check_norm(x_norm)
    if drive_sign >= 0.0:
        return 1.0 - _ipow(x_norm, 2 * p)
    return 1.0 - _ipow(x_norm - 1.0, 2 * p)


def prodromakis(x_norm: float, p: int = 1, j: float = 1.0) -> float:
    """f(x) = j * (1 - ((x - 0.5)^2 + 0.75)^p), peaking at the center."""
    _check_norm(x_norm)
    u = x_norm - 0.5
    return j * (1.0 - _ipow(u * u + 0.75, p))


def kvatinsky_window(x: float, a: float, w_c: float) -> float:
    """f(x) = exp(-exp((x - a)/w_c)): strictly decreasing, 1 far below the
    center a, 0 far above. Used to damp off-switching near the upper bound."""
    if not w_c > 0.0:
        raise DomainError(f"w_c must be > 0, got {w_c}")
    return math.exp(-math.exp((x - a) / w_c))


def kvatinsky_window_mirrored(x: float, a: float, w_c: float) -> float:
    """Mirror image exp(-exp(-(x - a)/w_c)): strictly increasing, damps
    on-switching as x falls toward the lower bound."""
    if not w_c > 0.0:
        raise DomainError(f"w_c must be > 0, got {w_c}")
    return math.exp(-math.exp(-((x - a) / w_c)))


@dataclass(frozen=True)
class WindowSpec:
    """Declarative window selection.

    ``p`` (joglekar/biolek/prodromakis) is the integer exponent, ``j`` the
    prodromakis scale. ``a_on``/``a_off`` center the kvatinsky windows in
    state units and ``w_c`` sets their decay. kind = "none" means f == 1.
    """

    kind: str = "none"
    p: int = 1
    j: float = 1.0
    a_on: float = 0.0
    a_off: float = 0.0
    w_c: float = 1.0

    def __post_init__(self):
        if self.kind not in WINDOW_KINDS:
            raise ConfigError(f"unknown window kind {self.kind!r}")
        problems = []
        if self.kind in ("joglekar", "biolek", "prodromakis"):
            if not (isinstance(self.p, int) and self.p >= 1):
                problems.append(f"window p must be an integer >= 1, got {self.p!r}")
        if self.kind == "prodromakis" and not self.j > 0.0:
            problems.append(f"window j must be > 0, got {self.j}")
        if self.kind == "kvatinsky" and not self.w_c > 0.0:
            problems.append(f"window w_c must be > 0, got {self.w_c}")
        if problems:
            raise ConfigError("; ".join(problems), errors=problems)


NONE = WindowSpec("none")


def window_value(spec: WindowSpec, x_norm: float, drive_sign: float = 1.0) -> float:
    """Evaluate a normalized-state window spec (joglekar family).

    kvatinsky windows are branch-specific and evaluated by the models, not
    through this dispatcher.
    """
    if spec.kind == "none":
        return 1.0
    if spec.kind == "joglekar":
        return joglekar(x_norm, spec.p)
    if spec.kind == "biolek":
        return biolek(x_norm, spec.p, drive_sign)
    if spec.kind == "prodromakis":
        return prodromakis(x_norm, spec.p, spec.j)
    raise ConfigError(f"window kind {spec.kind!r} is not a normalized-state window")

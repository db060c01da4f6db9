"""Electromechanics of the single-ended cantilever selection switch.

The beam is clamped at its anchor and free at the tip, where it carries the
electrical contact. It bends *in-plane* (parallel to the substrate, governed
by ``width_inplane``) toward one of two side electrodes; out-of-plane bending
is governed by ``thickness_outofplane``.

Models used here:

* Euler-Bernoulli clamped-free modes, ``f_i = lambda_i^2/(2 pi) sqrt(EI/(rho A L^4))``.
* Tip-lumped spring ``k = 3EI/L^3`` against a parallel-plate electrostatic
  force ``eps0 A_e V^2 / (2 (g - x)^2)``, which pulls in at ``x = g/3``.
* A single-degree-of-freedom linearization about a DC bias for the small-signal
  frequency response, sharing the same stiffness as the static model.

Displacements follow the sign convention: left actuation negative, right positive.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np
from scipy import optimize

from .constants import EPSILON_0
from .errors import BiasUnstableError, CalibrationError, ValidationError


class Plane(str, enum.Enum):
    IN_PLANE = "in-plane"
    OUT_OF_PLANE = "out-of-plane"


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class CantileverBeam:
    """Rectangular clamped-free beam with side actuation electrodes (SI units).

    ``electrode_overlap_area`` is the parallel-plate area of the left electrode
    and, unless ``electrode_overlap_area_right`` is given, of the right one too.
    """

    length: float
    width_inplane: float
    thickness_outofplane: float
    youngs_modulus: float
    density: float
    gap: float
    electrode_overlap_area: float
    electrode_overlap_area_right: float | None = None

    def __post_init__(self):
        for name in ("length", "width_inplane", "thickness_outofplane", "youngs_modulus",
                     "density", "gap", "electrode_overlap_area"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValidationError(f"{name} must be positive and finite, got {value!r}")
        right = self.electrode_overlap_area_right
        if right is not None and not (right > 0 and math.isfinite(right)):
            raise ValidationError(f"electrode_overlap_area_right must be positive, got {right!r}")
        if not self.gap < self.width_inplane * 1e3:
            raise ValidationError(
                f"gap {self.gap!r} m is over 1000x the beam width; check units"
            )

    @property
    def cross_section(self) -> float:
        return self.width_inplane * self.thickness_outofplane

    def electrode_area(self, side: Side | str = Side.LEFT) -> float:
        if Side(side) is Side.RIGHT and self.electrode_overlap_area_right is not None:
            return self.electrode_overlap_area_right
        return self.electrode_overlap_area


@functools.lru_cache(maxsize=None)
def clamped_free_eigenvalue(order: int) -> float:
    """``order``-th root of ``1 + cos(x) cosh(x) = 0`` (1.8751, 4.6941, 7.8548, ...)."""
    if order < 1:
        raise ValidationError(f"mode order must be >= 1, got {order}")
    # cos(x) + 1/cosh(x) has exactly one root in ((i-1) pi, i pi)
    return optimize.brentq(lambda x: math.cos(x) + 1.0 / math.cosh(x),
                           (order - 1) * math.pi + 1e-9, order * math.pi,
                           xtol=1e-15, rtol=4 * np.finfo(float).eps)


def second_moment(beam: CantileverBeam, plane: Plane | str = Plane.IN_PLANE) -> float:
    w, t = beam.width_inplane, beam.thickness_outofplane
    if Plane(plane) is Plane.IN_PLANE:
        return t * w**3 / 12.0
    return w * t**3 / 12.0


def bending_stiffness(beam: CantileverBeam, plane: Plane | str = Plane.IN_PLANE) -> float:
    """Tip stiffness ``3EI/L^3`` (N/m) for bending in ``plane``."""
    return 3.0 * beam.youngs_modulus * second_moment(beam, plane) / beam.length**3


def effective_mass(beam: CantileverBeam) -> float:
    """Tip-lumped modal mass making ``sqrt(k/m)`` equal the exact fundamental.

    The coefficient is ``3 / lambda_1^4`` (about 0.24267).
    """
    return 3.0 / clamped_free_eigenvalue(1) ** 4 * beam.density * beam.length * beam.cross_section


@dataclass(frozen=True)
class Mode:
    frequency: float
    plane: Plane
    order: int


@dataclass(frozen=True)
class ModeResult:
    modes: tuple[Mode, ...]

    def __iter__(self):
        return iter(self.modes)

    def __len__(self):
        return len(self.modes)

    def __getitem__(self, i):
        return self.modes[i]

    def frequency(self, plane: Plane | str, order: int) -> float:
        plane = Plane(plane)
        for mode in self.modes:
            if mode.plane is plane and mode.order == order:
                return mode.frequency
        raise KeyError((plane.value, order))


def _mode_frequency(beam: CantileverBeam, plane: Plane, order: int) -> float:
    lam = clamped_free_eigenvalue(order)
    return lam**2 / (2 * math.pi) * math.sqrt(
        beam.youngs_modulus * second_moment(beam, plane)
        / (beam.density * beam.cross_section * beam.length**4)
    )


def modal_frequencies(beam: CantileverBeam, max_order: int = 3) -> ModeResult:
    """Bending modes of both planes up to ``max_order``, merged and sorted by frequency."""
    if max_order < 1:
        raise ValidationError(f"max_order must be >= 1, got {max_order}")
    modes = [Mode(_mode_frequency(beam, plane, i), plane, i)
             for plane in Plane for i in range(1, max_order + 1)]
    modes.sort(key=lambda m: (m.frequency, m.plane.value, m.order))
    return ModeResult(tuple(modes))


_DIMENSIONS = ("length", "width_inplane", "thickness_outofplane")


def calibrate_from_fundamental(f1: float, beam: CantileverBeam, unknown: str,
                               plane: Plane | str = Plane.IN_PLANE) -> CantileverBeam:
    """Solve for one beam dimension so the fundamental in ``plane`` equals ``f1``.

    The current value of the ``unknown`` field is ignored. Since
    ``f1 = lambda_1^2/(2 pi L^2) * h * sqrt(E/(12 rho))`` with ``h`` the bending
    dimension of ``plane``, length and the bending dimension have closed forms;
    the other cross-section dimension does not affect ``f1`` and cannot be
    calibrated from it.

    Raises:
        CalibrationError: ``unknown`` does not influence the frequency, or the
            solution is not a valid beam.
    """
    if unknown not in _DIMENSIONS:
        raise ValidationError(f"unknown must be one of {_DIMENSIONS}, got {unknown!r}")
    if not (f1 > 0 and math.isfinite(f1)):
        raise ValidationError(f"target frequency must be positive, got {f1!r}")
    plane = Plane(plane)
    bending = "width_inplane" if plane is Plane.IN_PLANE else "thickness_outofplane"
    c = clamped_free_eigenvalue(1) ** 2 / (2 * math.pi) * math.sqrt(
        beam.youngs_modulus / (12.0 * beam.density))

    if unknown == "length":
        value = math.sqrt(c * getattr(beam, bending) / f1)
    elif unknown == bending:
        value = f1 * beam.length**2 / c
    else:
        raise CalibrationError(f"{unknown} does not affect the {plane.value} fundamental")
    try:
        out = replace(beam, **{unknown: value})
    except ValidationError as exc:
        raise CalibrationError(f"calibrated {unknown}={value!r} is not a valid beam: {exc}") from None
    got = _mode_frequency(out, plane, 1)
    if not math.isclose(got, f1, rel_tol=1e-9):
        raise CalibrationError(f"calibration residual too large ({got!r} vs {f1!r})")
    return out


def pull_in_voltage(beam: CantileverBeam, side: Side | str = Side.LEFT) -> float:
    """Lumped parallel-plate pull-in voltage ``sqrt(8 k g^3 / (27 eps0 A_e))``."""
    k = bending_stiffness(beam, Plane.IN_PLANE)
    return math.sqrt(8.0 * k * beam.gap**3 / (27.0 * EPSILON_0 * beam.electrode_area(side)))


@dataclass(frozen=True)
class DeflectionResult:
    voltage: float
    tip_displacement: float
    stable: bool


def _normalized_deflection(load: float) -> float:
    """Stable root ``u`` in [0, 1/3] of ``u (1-u)^2 = 4 load / 27``, ``load = (V/V_PI)^2 < 1``."""
    target = 4.0 * load / 27.0
    f = lambda u: u * (1.0 - u) ** 2 - target  # noqa: E731
    if f(1.0 / 3.0) <= 0.0:
        return 1.0 / 3.0
    return optimize.bisect(f, 0.0, 1.0 / 3.0, xtol=1e-15, rtol=1e-12, maxiter=200)


def static_deflection(beam: CantileverBeam, voltage: float,
                      side: Side | str = Side.LEFT) -> DeflectionResult:
    """Equilibrium tip displacement under a DC voltage on one side electrode.

    At or above pull-in the result is ``stable=False`` with the displacement at
    the pull-in onset, ``g/3``; this marks switch closure rather than an error.
    """
    if not voltage >= 0:
        raise ValidationError(f"voltage must be >= 0, got {voltage!r}")
    side = Side(side)
    sign = -1.0 if side is Side.LEFT else 1.0
    v_pi = pull_in_voltage(beam, side)
    if voltage >= v_pi:
        return DeflectionResult(voltage, sign * beam.gap / 3.0, False)
    if voltage == 0:
        return DeflectionResult(voltage, 0.0, True)
    u = _normalized_deflection((voltage / v_pi) ** 2)
    return DeflectionResult(voltage, sign * u * beam.gap, True)


@dataclass(frozen=True)
class FrequencyResponse:
    """Small-signal tip response about a DC bias.

    ``amplitude`` is the tip displacement magnitude per volt of AC drive
    superimposed on ``bias`` (m/V). With zero bias the linear gain vanishes, so
    the amplitude is identically zero while ``resonance`` is still meaningful.
    """

    bias: float
    operating_point: float
    effective_stiffness: float
    resonance: float
    q_mech: float
    frequencies: np.ndarray
    amplitude: np.ndarray

    def rows(self) -> list[tuple[float, float]]:
        return list(zip(self.frequencies.tolist(), self.amplitude.tolist()))


def frequency_response(beam: CantileverBeam, bias: float, frequencies: Sequence[float],
                       q_mech: float = 10.0, side: Side | str = Side.LEFT) -> FrequencyResponse:
    """Damped single-mode response linearized about ``bias`` (spring-softened).

    Raises:
        BiasUnstableError: ``bias`` is at or above the pull-in voltage.
    """
    if not q_mech > 0:
        raise ValidationError(f"q_mech must be positive, got {q_mech!r}")
    freqs = np.asarray(frequencies, dtype=float)
    if freqs.ndim != 1 or np.any(~(freqs > 0)):
        raise ValidationError("frequencies must be a 1-D sequence of positive values")
    if not bias >= 0:
        raise ValidationError(f"bias must be >= 0, got {bias!r}")
    if bias >= pull_in_voltage(beam, side):
        raise BiasUnstableError(f"bias {bias!r} V is at or above pull-in")

    area = beam.electrode_area(side)
    x0 = abs(static_deflection(beam, bias, side).tip_displacement)
    d = beam.gap - x0
    k_eff = bending_stiffness(beam, Plane.IN_PLANE) - EPSILON_0 * area * bias**2 / d**3
    if not k_eff > 0:
        raise BiasUnstableError(f"effective stiffness {k_eff!r} is not positive at bias {bias!r} V")
    f_res = math.sqrt(k_eff / effective_mass(beam)) / (2 * math.pi)
    force_per_volt = EPSILON_0 * area * bias / d**2
    r = freqs / f_res
    amplitude = force_per_volt / k_eff / np.sqrt((1 - r**2) ** 2 + (r / q_mech) ** 2)
    return FrequencyResponse(bias, -x0 if Side(side) is Side.LEFT else x0, k_eff, f_res,
                             q_mech, freqs, amplitude)


def actuation_symmetry_check(beam: CantileverBeam, voltage: float) -> bool:
    """True if left and right actuation give mirror-image tip displacements."""
    left = static_deflection(beam, voltage, Side.LEFT).tip_displacement
    right = static_deflection(beam, voltage, Side.RIGHT).tip_displacement
    return math.isclose(-left, right, rel_tol=1e-12, abs_tol=0.0) or left == right == 0.0

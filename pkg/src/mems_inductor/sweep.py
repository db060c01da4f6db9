"""Parameter sweeps over coil, beam and step-table designs.

Parameters use interface units (um, um^2, nH, GPa, V). Each grid point
becomes one flat result row: the point's parameters followed by its outputs,
or an ``error`` message if that point could not be evaluated.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Mapping

from .cantilever import (Plane, bending_stiffness, modal_frequencies, pull_in_voltage,
                         static_deflection)
from .coil import (CoilGeometry, CoreMaterial, MaterialCatalog, lookup_material,
                   quality_factor, solenoid_inductance, wire_resistance)
from .config import BEAM_KEYS, BEAM_OPTIONAL_KEYS, beam_from_mapping
from .constants import KHZ, NH, UM, UM2
from .errors import ValidationError
from .switching import enumerate_steps, step_count

SUBJECT_PARAMETERS = {
    "coil": {"turns", "area_um2", "length_um", "mu_r", "material", "wire_area_um2",
             "perimeter_um", "conductor", "frequency_hz"},
    "beam": {*BEAM_KEYS, *BEAM_OPTIONAL_KEYS, "voltage", "side"},
    "steps": {"n", "unit_l_nh"},
}
REQUIRED_PARAMETERS = {
    "coil": {"turns", "area_um2", "length_um"},
    "beam": set(BEAM_KEYS),
    "steps": {"n"},
}
DEFAULT_MAX_POINTS = 1_000_000


@dataclass(frozen=True)
class SweepSpec:
    subject: str
    grid: Mapping[str, list]
    fixed: Mapping[str, Any] = field(default_factory=dict)
    max_points: int = DEFAULT_MAX_POINTS

    def __post_init__(self):
        if self.subject not in SUBJECT_PARAMETERS:
            raise ValidationError(
                f"unknown sweep subject {self.subject!r}; expected one of {sorted(SUBJECT_PARAMETERS)}")
        if not self.grid:
            raise ValidationError("sweep grid must not be empty")
        object.__setattr__(self, "grid", {k: list(v) for k, v in self.grid.items()})
        object.__setattr__(self, "fixed", dict(self.fixed))
        allowed = SUBJECT_PARAMETERS[self.subject]
        names = [*self.grid, *self.fixed]
        unknown = sorted(set(names) - allowed)
        if unknown:
            raise ValidationError(f"{self.subject} sweep has unknown parameters {unknown}; "
                                  f"allowed: {sorted(allowed)}")
        both = sorted(set(self.grid) & set(self.fixed))
        if both:
            raise ValidationError(f"parameters both swept and fixed: {both}")
        missing = sorted(REQUIRED_PARAMETERS[self.subject] - set(names))
        if missing:
            raise ValidationError(f"{self.subject} sweep is missing required parameters {missing}")
        empty = [k for k, v in self.grid.items() if not v]
        if empty:
            raise ValidationError(f"grid axes without values: {empty}")
        if self.size > self.max_points:
            raise ValidationError(f"sweep has {self.size} points, limit is {self.max_points}")

    @property
    def size(self) -> int:
        return math.prod(len(v) for v in self.grid.values())

    def points(self):
        names = list(self.grid)
        for combo in itertools.product(*self.grid.values()):
            yield {**self.fixed, **dict(zip(names, combo))}

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "SweepSpec":
        unknown = set(data) - {"subject", "grid", "fixed", "max_points"}
        if unknown:
            raise ValidationError(f"unknown sweep keys {sorted(unknown)}")
        if "subject" not in data or "grid" not in data:
            raise ValidationError("sweep needs 'subject' and 'grid'")
        return cls(str(data["subject"]), dict(data["grid"]), dict(data.get("fixed") or {}),
                   int(data.get("max_points", DEFAULT_MAX_POINTS)))


def _eval_coil(p: Mapping[str, Any], catalog: MaterialCatalog | None) -> dict[str, Any]:
    if p.get("mu_r") is not None:
        core = CoreMaterial("custom", float(p["mu_r"]))
    else:
        core = lookup_material(str(p.get("material", "air")), catalog)
    geom = CoilGeometry(int(p["turns"]), float(p["area_um2"]) * UM2, float(p["length_um"]) * UM,
                        wire_area=float(p.get("wire_area_um2", 1.0)) * UM2)
    L = solenoid_inductance(geom, core)
    out: dict[str, Any] = {"mu_r_used": core.mu_r, "inductance_nh": L / NH}
    if p.get("perimeter_um") is not None:
        conductor = lookup_material(str(p.get("conductor", "Cu")), catalog)
        R = wire_resistance(geom, float(p["perimeter_um"]) * UM, conductor)
        out["resistance_ohm"] = R
        if p.get("frequency_hz") is not None:
            out["quality_factor"] = quality_factor(L, R, float(p["frequency_hz"]))
    return out


def _eval_beam(p: Mapping[str, Any], catalog=None) -> dict[str, Any]:
    beam = beam_from_mapping({k: p[k] for k in (*BEAM_KEYS, *BEAM_OPTIONAL_KEYS) if k in p})
    modes = modal_frequencies(beam, 2)
    side = str(p.get("side", "left"))
    out: dict[str, Any] = {
        "stiffness_n_per_m": bending_stiffness(beam, Plane.IN_PLANE),
        "pull_in_v": pull_in_voltage(beam, side),
        "f_inplane1_khz": modes.frequency(Plane.IN_PLANE, 1) / KHZ,
        "f_outofplane1_khz": modes.frequency(Plane.OUT_OF_PLANE, 1) / KHZ,
        "f_inplane2_khz": modes.frequency(Plane.IN_PLANE, 2) / KHZ,
    }
    if p.get("voltage") is not None:
        res = static_deflection(beam, float(p["voltage"]), side)
        out["displacement_um"] = res.tip_displacement / UM
        out["stable"] = res.stable
    return out


def _eval_steps(p: Mapping[str, Any], catalog=None) -> dict[str, Any]:
    n = p["n"]
    if isinstance(n, float) and n.is_integer():
        n = int(n)
    unit = float(p.get("unit_l_nh", 1.0))
    table = enumerate_steps(n, unit * NH)
    return {
        "step_count": step_count(n),
        "enumerated": len(table),
        "min_factor": float(table.factors.min()),
        "max_factor": float(table.factors.max()),
        "min_l_nh": float(table.inductances.min()) / NH,
        "max_l_nh": float(table.inductances.max()) / NH,
    }


_EVALUATORS = {"coil": _eval_coil, "beam": _eval_beam, "steps": _eval_steps}


def evaluate_point(subject: str, point: Mapping[str, Any],
                   catalog: MaterialCatalog | None = None) -> dict[str, Any]:
    """Evaluate one point; failures are recorded in the ``error`` column."""
    row = dict(point)
    try:
        row.update(_EVALUATORS[subject](point, catalog))
        row["error"] = ""
    except (ValueError, ArithmeticError, KeyError, TypeError) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def run_sweep(spec: SweepSpec, catalog: MaterialCatalog | None = None,
              max_workers: int | None = None) -> list[dict[str, Any]]:
    """Evaluate every grid point; rows come back in lexicographic grid order.

    ``max_workers > 1`` evaluates points on a thread pool; the row order and
    contents are the same either way.
    """
    points = list(spec.points())
    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers) as pool:
            return list(pool.map(lambda pt: evaluate_point(spec.subject, pt, catalog), points))
    return [evaluate_point(spec.subject, pt, catalog) for pt in points]

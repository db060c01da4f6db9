"""Closed-form micro-coil physics.

Solenoid inductance from geometry and core permeability, inductance from
stored magnetic energy, winding resistance, quality factor, and a small
catalog of core / winding materials.

All functions take and return strict SI units (henry, metre, joule, ohm).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .constants import MU_0
from .errors import MaterialNotFoundError, ValidationError


@dataclass(frozen=True)
class CoreMaterial:
    """Named magnetic / conductor material.

    Attributes:
        name: Catalog identifier.
        mu_r: Relative permeability (dimensionless, > 0).
        resistivity: Electrical resistivity in ohm*m, or None for materials
            that are never used as a winding (air, generic cores).
    """

    name: str
    mu_r: float
    resistivity: float | None = None

    def __post_init__(self):
        if not self.name:
            raise ValidationError("material name must be non-empty")
        if not (self.mu_r > 0 and math.isfinite(self.mu_r)):
            raise ValidationError(f"mu_r must be positive and finite, got {self.mu_r!r}")
        if self.resistivity is not None and not self.resistivity > 0:
            raise ValidationError(f"resistivity must be positive, got {self.resistivity!r}")


@dataclass(frozen=True)
class CoilGeometry:
    """Solenoid winding geometry in SI units.

    Attributes:
        turns: Number of turns N (>= 0).
        winding_area: Cross-section enclosed by one turn, m^2.
        length: Axial coil length, m.
        wire_area: Conductor cross-section, m^2.
        core_thickness: Core thickness, m. Informational only.
    """

    turns: int
    winding_area: float
    length: float
    wire_area: float = 1e-12
    core_thickness: float = 0.0

    def __post_init__(self):
        if isinstance(self.turns, bool) or int(self.turns) != self.turns or self.turns < 0:
            raise ValidationError(f"turns must be a non-negative integer, got {self.turns!r}")
        for name in ("winding_area", "length", "wire_area"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValidationError(f"{name} must be positive and finite, got {value!r}")
        if not self.core_thickness >= 0:
            raise ValidationError(f"core_thickness must be >= 0, got {self.core_thickness!r}")


def solenoid_inductance(geom: CoilGeometry, mat: CoreMaterial) -> float:
    """Long-solenoid inductance ``mu0 * mu_r * N^2 * A / l`` in henry."""
    return MU_0 * mat.mu_r * geom.turns**2 * geom.winding_area / geom.length


def inductance_from_energy(energy: float, current: float) -> float:
    """Inductance (H) of a single coil storing ``energy`` J at ``current`` A."""
    if current == 0:
        raise ZeroDivisionError("current must be non-zero to infer inductance from energy")
    if energy < 0:
        raise ValidationError(f"magnetic energy must be >= 0, got {energy!r}")
    return 2.0 * energy / current**2


def magnetic_energy(inductance: float, current: float) -> float:
    """Energy (J) stored in an inductance carrying ``current``."""
    if inductance < 0:
        raise ValidationError(f"inductance must be >= 0, got {inductance!r}")
    return 0.5 * inductance * current**2


def wire_resistance(geom: CoilGeometry, core_perimeter: float, conductor: CoreMaterial) -> float:
    """DC winding resistance in ohm.

    The winding is modelled as ``turns`` loops, each as long as the core
    perimeter. Skin effect and contact resistance are ignored.
    """
    if not core_perimeter > 0:
        raise ValidationError(f"core_perimeter must be positive, got {core_perimeter!r}")
    if conductor.resistivity is None:
        raise ValidationError(f"material {conductor.name!r} has no resistivity")
    return conductor.resistivity * geom.turns * core_perimeter / geom.wire_area


def quality_factor(inductance: float, resistance: float, frequency: float) -> float:
    """Series quality factor ``2*pi*f*L/R``."""
    if not resistance > 0:
        raise ValidationError(f"resistance must be positive, got {resistance!r}")
    if not frequency > 0:
        raise ValidationError(f"frequency must be positive, got {frequency!r}")
    return 2.0 * math.pi * frequency * inductance / resistance


# Handbook defaults. The Fe/Ni/NdFeB permeabilities are conventional values,
# not the (unpublished) inputs of any particular simulation; override freely.
BUILTIN_MATERIALS = (
    CoreMaterial("air", 1.0),
    CoreMaterial("Cu", 0.999994, 1.68e-8),
    CoreMaterial("Fe", 4000.0, 9.71e-8),
    CoreMaterial("Ni", 600.0, 6.99e-8),
    CoreMaterial("NdFeB", 1.05, 1.5e-6),
    CoreMaterial("mu30", 30.0),
    CoreMaterial("mu40", 40.0),
    CoreMaterial("mu50", 50.0),
)


@dataclass
class MaterialCatalog:
    """Case-insensitive name -> :class:`CoreMaterial` registry."""

    _entries: dict[str, CoreMaterial] = field(default_factory=dict)

    @classmethod
    def default(cls) -> "MaterialCatalog":
        catalog = cls()
        for mat in BUILTIN_MATERIALS:
            catalog.register(mat)
        return catalog

    def register(self, material: CoreMaterial) -> None:
        """Add or replace an entry (matching is case-insensitive)."""
        self._entries[material.name.casefold()] = material

    def update(self, materials: Iterable[CoreMaterial]) -> None:
        for mat in materials:
            self.register(mat)

    def lookup(self, name: str) -> CoreMaterial:
        try:
            return self._entries[name.casefold()]
        except KeyError:
            raise MaterialNotFoundError(
                f"unknown material {name!r}; available: {', '.join(self.names())}"
            ) from None

    def names(self) -> list[str]:
        return sorted((m.name for m in self._entries.values()), key=str.casefold)

    def __contains__(self, name: str) -> bool:
        return name.casefold() in self._entries

    def __len__(self) -> int:
        return len(self._entries)


_DEFAULT_CATALOG = MaterialCatalog.default()


def lookup_material(name: str, catalog: MaterialCatalog | None = None) -> CoreMaterial:
    """Fetch a material by (case-insensitive) name from ``catalog`` or the built-ins."""
    return (catalog or _DEFAULT_CATALOG).lookup(name)


def materials_from_mapping(entries: Mapping[str, Mapping] | Iterable[Mapping]) -> list[CoreMaterial]:
    """Build materials from config data.

    Accepts either ``{name: {mu_r: ..., resistivity: ...}}`` or a list of
    ``{name: ..., mu_r: ..., resistivity: ...}`` records.
    """
    if isinstance(entries, Mapping):
        records = [{"name": name, **dict(body)} for name, body in entries.items()]
    else:
        records = [dict(rec) for rec in entries]
    out = []
    for rec in records:
        unknown = set(rec) - {"name", "mu_r", "resistivity"}
        if unknown:
            raise ValidationError(f"unknown material keys: {sorted(unknown)}")
        if "name" not in rec or "mu_r" not in rec:
            raise ValidationError(f"material entry needs 'name' and 'mu_r': {rec!r}")
        resistivity = rec.get("resistivity")
        out.append(CoreMaterial(
            str(rec["name"]),
            float(rec["mu_r"]),
            None if resistivity is None else float(resistivity),
        ))
    return out

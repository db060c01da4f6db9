"""Structured configuration files (YAML or JSON).

Top-level keys, all optional::

    materials:            # catalog overrides / additions
      Ni: {mu_r: 600, resistivity: 6.99e-8}
    beam:                 # switch cantilever, interface units
      length_um: 290
      width_um: 2
      thickness_um: 5
      gap_um: 2
      electrode_area_um2: 1000
      youngs_modulus_gpa: 169
      density: 2330            # kg/m^3
      electrode_area_right_um2: 1000   # optional, defaults to electrode_area_um2
    sweep:
      subject: beam            # coil | beam | steps
      grid: {voltage: [1, 2, 3]}
      fixed: {length_um: 290}
      max_points: 1000000
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

import yaml

from .cantilever import CantileverBeam
from .coil import MaterialCatalog, materials_from_mapping
from .constants import GPA, UM, UM2
from .errors import ValidationError

TOP_LEVEL_KEYS = {"materials", "beam", "sweep"}

BEAM_KEYS = ("length_um", "width_um", "thickness_um", "gap_um", "electrode_area_um2",
             "youngs_modulus_gpa", "density")
BEAM_OPTIONAL_KEYS = ("electrode_area_right_um2",)


def load_config(path: str | Path) -> dict[str, Any]:
    with open(path, encoding="utf-8") as fh:
        try:
            # YAML 1.1 reads JSON-style "1e-07" as a string, so JSON goes through json
            data = (json.load(fh) if str(path).lower().endswith(".json")
                    else yaml.safe_load(fh)) or {}
        except (ValueError, yaml.YAMLError) as exc:
            raise ValidationError(f"{path}: cannot parse configuration: {exc}") from None
    if not isinstance(data, Mapping):
        raise ValidationError(f"{path}: configuration must be a mapping at top level")
    unknown = set(data) - TOP_LEVEL_KEYS
    if unknown:
        raise ValidationError(f"{path}: unknown top-level keys {sorted(unknown)}")
    return dict(data)


def catalog_from_config(config: Mapping[str, Any] | None) -> MaterialCatalog:
    """Built-in catalog with the config's ``materials`` entries applied on top."""
    catalog = MaterialCatalog.default()
    if config and config.get("materials"):
        catalog.update(materials_from_mapping(config["materials"]))
    return catalog


def beam_from_mapping(values: Mapping[str, Any]) -> CantileverBeam:
    """Build a beam from interface-unit keys (um, um^2, GPa, kg/m^3)."""
    unknown = set(values) - set(BEAM_KEYS) - set(BEAM_OPTIONAL_KEYS)
    if unknown:
        raise ValidationError(f"unknown beam keys: {sorted(unknown)}")
    missing = [k for k in BEAM_KEYS if values.get(k) is None]
    if missing:
        raise ValidationError(f"missing beam keys: {missing}")
    right = values.get("electrode_area_right_um2")
    return CantileverBeam(
        length=float(values["length_um"]) * UM,
        width_inplane=float(values["width_um"]) * UM,
        thickness_outofplane=float(values["thickness_um"]) * UM,
        youngs_modulus=float(values["youngs_modulus_gpa"]) * GPA,
        density=float(values["density"]),
        gap=float(values["gap_um"]) * UM,
        electrode_overlap_area=float(values["electrode_area_um2"]) * UM2,
        electrode_overlap_area_right=None if right is None else float(right) * UM2,
    )

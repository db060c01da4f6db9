import math

import pytest
from hypothesis import given, strategies as st

from mems_inductor import (CoilGeometry, CoreMaterial, MaterialCatalog, MaterialNotFoundError,
                           ValidationError, inductance_from_energy, lookup_material,
                           magnetic_energy, quality_factor, solenoid_inductance, wire_resistance)
from mems_inductor.coil import materials_from_mapping
from mems_inductor.constants import MU_0


def mu(value):
    return CoreMaterial(f"mu{value}", value)


class TestSolenoidInductance:
    def test_published_row1(self):
        L = solenoid_inductance(CoilGeometry(15, 4e-12, 1e-3), mu(30))
        assert L == pytest.approx(3.39e-11, rel=1e-3)

    def test_published_row3(self):
        L = solenoid_inductance(CoilGeometry(15, 8e-12, 1e-3), mu(50))
        assert L == pytest.approx(1.131e-10, rel=1e-3)

    def test_zero_turns(self):
        assert solenoid_inductance(CoilGeometry(0, 3e-12, 1e-4), mu(40)) == 0.0

    def test_identity_case(self):
        assert solenoid_inductance(CoilGeometry(1, 1.0, 1.0), mu(1)) == MU_0
        assert MU_0 == pytest.approx(1.2566e-6, rel=1e-4)

    @pytest.mark.parametrize("field,value", [("length", 0.0), ("length", -1e-3),
                                             ("winding_area", 0.0), ("wire_area", -1.0)])
    def test_invalid_geometry_names_field(self, field, value):
        kwargs = dict(turns=10, winding_area=1e-12, length=1e-3, wire_area=1e-12)
        kwargs[field] = value
        with pytest.raises(ValidationError, match=field):
            CoilGeometry(**kwargs)

    def test_negative_turns_rejected(self):
        with pytest.raises(ValidationError, match="turns"):
            CoilGeometry(-1, 1e-12, 1e-3)

    @given(st.integers(0, 10_000), st.floats(1e-14, 1e-6), st.floats(1e-6, 1e-1),
           st.floats(1.0, 1e4))
    def test_scaling_laws(self, n, area, length, mu_r):
        base = solenoid_inductance(CoilGeometry(n, area, length), mu(mu_r))
        assert base >= 0
        assert solenoid_inductance(CoilGeometry(2 * n, area, length), mu(mu_r)) == 4 * base
        assert solenoid_inductance(CoilGeometry(n, 2 * area, length), mu(mu_r)) == 2 * base
        assert solenoid_inductance(CoilGeometry(n, area, 2 * length), mu(mu_r)) == base / 2
        assert solenoid_inductance(CoilGeometry(n, area, length), mu(2 * mu_r)) == 2 * base


class TestEnergy:
    def test_fe_row(self):
        assert inductance_from_energy(1.923e-9, 1.0) == pytest.approx(3.846e-9, rel=1e-12)

    def test_ni_row(self):
        assert inductance_from_energy(2.664e-9, 1.0) == pytest.approx(5.328e-9, rel=1e-12)

    def test_zero_energy(self):
        assert inductance_from_energy(0.0, 3.0) == 0.0

    def test_zero_current(self):
        with pytest.raises(ZeroDivisionError):
            inductance_from_energy(1e-9, 0.0)

    def test_negative_energy(self):
        with pytest.raises(ValidationError):
            inductance_from_energy(-1e-9, 1.0)

    def test_inverse(self):
        assert magnetic_energy(3.846e-9, 1.0) == pytest.approx(1.923e-9, rel=1e-12)
        assert magnetic_energy(5e-9, 0.0) == 0.0
        with pytest.raises(ValidationError):
            magnetic_energy(-1.0, 1.0)

    @given(st.floats(1e-15, 1e3), st.floats(1e-6, 1e3) | st.floats(-1e3, -1e-6))
    def test_roundtrip(self, L, current):
        back = inductance_from_energy(magnetic_energy(L, current), current)
        assert back == pytest.approx(L, rel=1e-12)


class TestResistanceAndQ:
    def test_copper_example(self):
        cu = CoreMaterial("Cu", 1.0, 1.68e-8)
        R = wire_resistance(CoilGeometry(10, 1e-10, 1e-4, wire_area=4e-12), 1e-4, cu)
        assert R == pytest.approx(4.2, rel=1e-12)

    def test_zero_turns(self):
        cu = lookup_material("cu")
        assert wire_resistance(CoilGeometry(0, 1e-10, 1e-4), 1e-4, cu) == 0.0

    def test_wire_area_scaling(self):
        cu = lookup_material("Cu")
        a = wire_resistance(CoilGeometry(7, 1e-10, 1e-4, wire_area=3e-12), 2e-4, cu)
        b = wire_resistance(CoilGeometry(7, 1e-10, 1e-4, wire_area=6e-12), 2e-4, cu)
        assert b == pytest.approx(a / 2, rel=1e-15)

    def test_bad_perimeter(self):
        with pytest.raises(ValidationError):
            wire_resistance(CoilGeometry(1, 1e-10, 1e-4), 0.0, lookup_material("Cu"))

    def test_no_resistivity(self):
        with pytest.raises(ValidationError, match="resistivity"):
            wire_resistance(CoilGeometry(1, 1e-10, 1e-4), 1e-4, lookup_material("air"))

    def test_q_identity(self):
        assert quality_factor(1.0, 2 * math.pi, 1.0) == pytest.approx(1.0, rel=1e-15)

    def test_q_table_values(self):
        assert quality_factor(3.845e-9, 3.103, 1e9) == pytest.approx(7.786, abs=5e-4)

    def test_q_linear_in_frequency(self):
        assert quality_factor(2e-9, 1.5, 2e9) == pytest.approx(2 * quality_factor(2e-9, 1.5, 1e9))

    @pytest.mark.parametrize("R,f", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, -5.0)])
    def test_q_invalid(self, R, f):
        with pytest.raises(ValidationError):
            quality_factor(1e-9, R, f)


class TestCatalog:
    def test_air(self):
        assert lookup_material("air").mu_r == 1.0

    @pytest.mark.parametrize("name,value", [("mu30", 30), ("MU40", 40), ("Mu50", 50)])
    def test_generic_entries(self, name, value):
        assert lookup_material(name).mu_r == value

    @pytest.mark.parametrize("name", ["air", "Ni", "Fe", "NdFeB", "Cu", "mu30", "mu40", "mu50"])
    def test_builtins_case_insensitive(self, name):
        assert lookup_material(name.upper()) == lookup_material(name.lower())

    def test_unknown_lists_names(self):
        with pytest.raises(MaterialNotFoundError, match="available: .*NdFeB"):
            lookup_material("unobtainium")

    def test_not_found_is_validation_error(self):
        with pytest.raises(ValidationError):
            lookup_material("unobtainium")

    def test_override_does_not_touch_default(self):
        catalog = MaterialCatalog.default()
        catalog.register(CoreMaterial("ni", 250.0, 7e-8))
        assert lookup_material("Ni", catalog).mu_r == 250.0
        assert lookup_material("Ni").mu_r == 600.0

    def test_from_mapping_forms(self):
        a = materials_from_mapping({"Permalloy": {"mu_r": 8000, "resistivity": 5.5e-7}})
        b = materials_from_mapping([{"name": "Permalloy", "mu_r": 8000, "resistivity": 5.5e-7}])
        assert a == b == [CoreMaterial("Permalloy", 8000.0, 5.5e-7)]

    def test_from_mapping_rejects_unknown_keys(self):
        with pytest.raises(ValidationError):
            materials_from_mapping({"X": {"mu_r": 2, "colour": "red"}})

    @pytest.mark.parametrize("mu_r", [0.0, -1.0, float("nan")])
    def test_invalid_mu_r(self, mu_r):
        with pytest.raises(ValidationError):
            CoreMaterial("bad", mu_r)

import math

import numpy as np
import pytest
from hypothesis import strategies as st

from mems_inductor import CantileverBeam


def log_uniform(lo, hi):
    return st.floats(math.log10(lo), math.log10(hi)).map(lambda e: 10.0**e)


@st.composite
def beams(draw):
    width = draw(log_uniform(0.5e-6, 20e-6))
    return CantileverBeam(
        length=draw(log_uniform(20e-6, 2e-3)),
        width_inplane=width,
        thickness_outofplane=draw(log_uniform(0.5e-6, 50e-6)),
        youngs_modulus=draw(log_uniform(1e9, 500e9)),
        density=draw(log_uniform(1e3, 2e4)),
        gap=draw(log_uniform(0.2e-6, 20e-6)),
        electrode_overlap_area=draw(log_uniform(1e-11, 1e-7)),
    )


def random_beam(rng: np.random.Generator) -> CantileverBeam:
    def lu(lo, hi):
        return float(10.0 ** rng.uniform(math.log10(lo), math.log10(hi)))

    return CantileverBeam(
        length=lu(20e-6, 2e-3),
        width_inplane=lu(0.5e-6, 20e-6),
        thickness_outofplane=lu(0.5e-6, 50e-6),
        youngs_modulus=lu(1e9, 500e9),
        density=lu(1e3, 2e4),
        gap=lu(0.2e-6, 20e-6),
        electrode_overlap_area=lu(1e-11, 1e-7),
    )


@pytest.fixture
def poly_beam():
    """Polysilicon switch beam with an in-plane fundamental near 32.8 kHz."""
    return CantileverBeam(
        length=290e-6,
        width_inplane=2e-6,
        thickness_outofplane=5e-6,
        youngs_modulus=169e9,
        density=2330.0,
        gap=2e-6,
        electrode_overlap_area=1000e-12,
    )

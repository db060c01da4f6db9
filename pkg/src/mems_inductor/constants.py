"""Physical constants and unit conversion factors shared by every module."""

import math

MU_0 = 4.0 * math.pi * 1e-7  # H/m
EPSILON_0 = 8.8541878128e-12  # F/m

# Interface units -> SI
UM = 1e-6
UM2 = 1e-12
NH = 1e-9
KHZ = 1e3
GPA = 1e9

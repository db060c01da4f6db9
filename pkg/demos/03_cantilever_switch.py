# %% [markdown]
# # Cantilever selection switch
#
# The beam geometry is not published, only its mode frequencies. Start from a
# polysilicon beam, fit its length to the 32.772 kHz in-plane fundamental and
# its thickness to the 81.848 kHz out-of-plane mode, then look at the other
# predictions.

# %%
import numpy as np

from mems_inductor import (CantileverBeam, actuation_symmetry_check, calibrate_from_fundamental,
                           frequency_response, modal_frequencies, pull_in_voltage,
                           static_deflection)

beam = CantileverBeam(length=300e-6, width_inplane=2e-6, thickness_outofplane=5e-6,
                      youngs_modulus=169e9, density=2330.0, gap=6e-6,
                      electrode_overlap_area=1000e-12)
beam = calibrate_from_fundamental(32.772e3, beam, "length")
beam = calibrate_from_fundamental(81.848e3, beam, "thickness_outofplane", plane="out-of-plane")
print(f"L = {beam.length * 1e6:.1f} um, w = {beam.width_inplane * 1e6:.2f} um, "
      f"t = {beam.thickness_outofplane * 1e6:.3f} um")

for mode in modal_frequencies(beam, 2):
    print(f"{mode.plane.value:13s} order {mode.order}: {mode.frequency / 1e3:9.3f} kHz")

# %% [markdown]
# Static actuation 1..15 V on the left electrode.

# %%
v_pi = pull_in_voltage(beam)
print(f"pull-in at {v_pi:.2f} V (tip at gap/3 = {beam.gap / 3 * 1e6:.2f} um)")
for v in range(1, 16):
    r = static_deflection(beam, float(v), "left")
    print(f"{v:2d} V: {r.tip_displacement * 1e6:+8.4f} um {'' if r.stable else '(pulled in)'}")
print("left/right mirror symmetric at 10 V:", actuation_symmetry_check(beam, 10.0))

# %% [markdown]
# Small-signal response about a DC bias: the resonance softens as the bias grows.

# %%
for frac in [0.0, 0.5, 0.8, 0.95]:
    resp = frequency_response(beam, frac * v_pi, [1.0])
    print(f"bias {frac * v_pi:6.2f} V: resonance {resp.resonance / 1e3:8.3f} kHz")

bias = 0.5 * v_pi
f0 = frequency_response(beam, bias, [1.0]).resonance
grid = np.linspace(0.8 * f0, 1.2 * f0, 9)
resp = frequency_response(beam, bias, grid, q_mech=10.0)
for f, a in resp.rows():
    print(f"  {f / 1e3:8.3f} kHz  {a * 1e9:10.4f} nm/V")

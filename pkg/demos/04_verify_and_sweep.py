# %% [markdown]
# # Table checks and sweeps written to disk

# %%
import tempfile
from pathlib import Path

from mems_inductor import SweepSpec, emit, run_sweep
from mems_inductor.reports import run_all

for report in run_all():
    print(f"{report.title}: {len(report.rows)} rows, {len(report.mismatches)} mismatches, "
          f"{len(report.flagged)} flagged")

# %%
spec = SweepSpec(
    "beam",
    grid={"voltage": [float(v) for v in range(1, 16)]},
    fixed=dict(length_um=290, width_um=2, thickness_um=5, gap_um=6, electrode_area_um2=1000,
               youngs_modulus_gpa=169, density=2330),
)
rows = run_sweep(spec)
out = Path(tempfile.mkdtemp()) / "deflection.csv"
emit(rows, "csv", out)
print(out.read_text().splitlines()[0])
print(f"wrote {len(rows)} rows to {out}")

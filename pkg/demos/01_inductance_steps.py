# %% [markdown]
# # Digitally selected inductance steps
#
# Five identical coils, each with a parallel switch and a parallel/series
# switch, can be wired as a chain of k series coils followed by a bank of m
# coils in parallel. This script lists every reachable value and cross-checks
# it with a nodal solve of the actual circuit.

# %%
from mems_inductor import (build_network, effective_inductance, enumerate_steps,
                           parse_switch_word, step_count, word_for_config)

UNIT_L = 1e-9  # one coil, 1 nH

table = enumerate_steps(5, UNIT_L)
print(f"{len(table)} steps for 5 coils (n(n+1)/2 = {step_count(5)})")
for i, step in enumerate(table, 1):
    c = step.config
    word = word_for_config(c).to_text()
    print(f"{i:2d}  {word}  k={c.series_count} m={c.parallel_count}  {step.factor:.4f} L")

# %% [markdown]
# Switch words go the other way: one letter per coil, S/P/O.

# %%
for text in ["PPPPP", "SPPPP", "SSSPP", "SOOOO", "SPOOO"]:
    config = parse_switch_word(text)
    solved = effective_inductance(build_network(config, UNIT_L))
    notes = f"  ({'; '.join(config.notes)})" if config.notes else ""
    print(f"{text}: k={config.series_count} m={config.parallel_count} -> {solved / 1e-9:.4f} nH{notes}")

# %% [markdown]
# More coils give quadratically more steps.

# %%
for n in range(1, 11):
    f = enumerate_steps(n).factors
    print(f"n={n:2d}: {len(f):3d} steps, {f.min():.3f} L .. {f.max():.0f} L")

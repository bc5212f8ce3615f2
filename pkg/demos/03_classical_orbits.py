"""Classical mean-field dynamics at the strong-coupling operating point.

Runs the perturbative orbit (Green's functions + first-order corrections)
and the direct nonlinear solve side by side on a moderate window, showing
the non-decaying cavity oscillation, the radiation-pressure-displaced
mirror, and the agreement between the two routes at small g0.
"""

from pathlib import Path

import numpy as np

from nmom import SpectralParams, TimeGrid, detect
from nmom.classical import (
    SystemParams,
    direct_orbit,
    effective_detuning,
    greens_alpha_freq,
    greens_alpha_time,
    perturbative_orbit,
    steady_amplitude,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

cavity = SpectralParams(eta=0.05, cutoff=1100.0, exponent=3.0, kind="cavity")
mech = SpectralParams(eta=0.03, cutoff=11.0, exponent=1.0, kind="mechanical")
params = SystemParams.build(omega_c=100.0, omega_0=98.0, g0=6e-4, drive=0.0,
                            alpha0=120.0, p_m=mech)
bsr = detect(params, cavity)

grid = TimeGrid(dt=2.5e-4, n_steps=60000)  # [0, 15]
pert = perturbative_orbit(params, cavity, mech, grid, bound_state=bsr)
direct = direct_orbit(params, cavity, mech, grid, bound_state=bsr)

# two independent representations of the same Green's function
sub = grid.times[::300]
a_f = greens_alpha_freq(cavity, params, sub, bound_state=bsr)
a_t = greens_alpha_time(cavity, params, grid, bound_state=bsr)
print(f"greens time-vs-frequency sup deviation: "
      f"{np.max(np.abs(a_f - a_t[::300])):.2e}")

np.savetxt(OUT / "orbit_perturbative.csv",
           np.column_stack([grid.times, pert.alpha0.real, pert.alpha0.imag,
                            pert.q0, pert.p0, pert.alpha1.real,
                            pert.alpha1.imag, pert.q1]),
           delimiter=",", comments="",
           header="t,re_alpha0,im_alpha0,q0,p0,re_alpha1,im_alpha1,q1")
np.savetxt(OUT / "orbit_direct.csv",
           np.column_stack([grid.times, direct.alpha0.real, direct.alpha0.imag,
                            direct.q0, direct.p0]),
           delimiter=",", comments="", header="t,re_alpha,im_alpha,q,p")

tail = slice(-len(grid) // 10, None)
print(f"|alpha| late-time mean {np.mean(np.abs(direct.alpha0[tail])):.2f} "
      f"vs residue prediction {bsr.residue * 120:.2f}")
q_eq = np.mean(pert.q0[tail] + params.g0 * pert.q1[tail])
print(f"mirror pushed to displaced equilibrium <q> ~ {q_eq:.3f} "
      f"(initial q(0) = {params.q0:.3f})")
desc = steady_amplitude(params, cavity, bound_state=bsr)
print(f"steady descriptor: |bound| = {abs(desc.bound_amp):.2f}, "
      f"driven part {abs(desc.driven):.3g}")
import warnings

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    dt_eff = effective_detuning(params, pert)
print(f"effective detuning {dt_eff:.4f} vs bare Delta_c = {params.Delta_c} "
      f"(relative shift {abs(dt_eff - params.Delta_c)/params.Delta_c:.2e})")

disc = np.max(np.abs(direct.alpha0 - (pert.alpha0 + params.g0 * pert.alpha1)))
print(f"direct vs zeroth+first order: sup discrepancy {disc:.3f} "
      f"({disc / 120:.2%} of the amplitude, an O(g0^2) effect)")
print("done ->", OUT)

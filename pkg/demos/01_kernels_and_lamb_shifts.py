"""Memory kernels and Lamb shifts of the Ohmic-family baths.

The cavity kernel f_c(t) carries the drive-frame phase e^{i omega0 t} under a
power-law envelope of width 1/cutoff; the mechanical kernel f_m(t) is the
real sine transform of J_m. The Lamb shift K_c is what decides whether a
localized (bound) cavity mode exists: the threshold sits where
omega_c + K_c(-omega0) changes sign.

Writes CSVs next to this script under output/.
"""

from pathlib import Path

import numpy as np

from nmom import SpectralParams, TimeGrid, cavity_kernel, mechanical_kernel
from nmom.spectral import lamb_shift_cavity, lamb_shift_mech, spectral_density

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

cavity = SpectralParams(eta=0.05, cutoff=1100.0, exponent=3.0, kind="cavity")
mech = SpectralParams(eta=0.03, cutoff=11.0, exponent=1.0, kind="mechanical")
omega0 = 98.0

# --- tabulate both kernels over a few envelope widths
grid_c = TimeGrid(dt=2e-5, n_steps=500)
f_c = cavity_kernel(cavity, omega0, grid_c)
print(f"f_c(0) = {f_c.values[0]:.6g}  (eta*cutoff^2*Gamma(s+1) = "
      f"{0.05 * 1100**2 * 6:.6g})")
np.savetxt(OUT / "fc.csv",
           np.column_stack([grid_c.times, f_c.values.real, f_c.values.imag]),
           delimiter=",", header="t,re_f,im_f", comments="")

grid_m = TimeGrid(dt=5e-3, n_steps=400)
f_m = mechanical_kernel(mech, grid_m)
np.savetxt(OUT / "fm.csv",
           np.column_stack([grid_m.times, f_m.values]),
           delimiter=",", header="t,f", comments="")
print(f"f_m peaks at t ~ 1/(sqrt(3) cutoff) = {1/(np.sqrt(3)*11):.4f}; "
      f"max tabulated {np.max(f_m.values):.4f}")

# --- Lamb shift along the rotating-frame axis
w = np.linspace(-350.0, 150.0, 251)
kc = lamb_shift_cavity(w, cavity, omega0)
np.savetxt(OUT / "lamb_shift_cavity.csv", np.column_stack([w, kc]),
           delimiter=",", header="omega,k_c", comments="")
print(f"K_c(-omega0) = {lamb_shift_cavity(-omega0, cavity, omega0):+.4f} "
      f"(closed form -eta*cutoff*Gamma(s) = {-0.05 * 1100 * 2:+.1f})")

km, jt = lamb_shift_mech(np.linspace(0.0, 5.0, 101), mech)
print(f"K_m(0) = {km[0]:+.6f} (closed form {-0.03 * 11:+.2f}); "
      f"Jtilde is odd and negative for omega > 0: Jt(1) = {jt[20]:+.4f}")

# sanity: the density itself vanishes at the origin and for negative omega
assert spectral_density(0.0, cavity) == 0.0
assert spectral_density(-5.0, mech) == 0.0
print("done ->", OUT)

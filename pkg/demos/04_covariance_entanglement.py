"""Quantum-fluctuation covariance propagation on the accurate early window.

Coherent cavity (vacuum fluctuations) times a hot mirror (n ~ 40). The
two-time propagator and the thermal noise double integral fill in V(t); the
uncertainty bound min eig(V + i Omega/2) >= 0 is tracked at every step, and
the optomechanical cross-covariance shows the correlations forming during
the cavity-bath memory time.
"""

from pathlib import Path

import numpy as np

from nmom.classical import direct_orbit
from nmom.entanglement import entanglement_series
from nmom.fluctuations import evolve_covariance
from nmom.scenario import preset_fig3

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

n_m = 1.0 / np.expm1(0.025)
v0 = np.diag([0.5, 0.5, n_m + 0.5, n_m + 0.5])
print(f"initial covariance: vacuum optics x thermal mirror (n = {n_m:.2f})")

for variant in ("a", "b"):
    sc = preset_fig3("entanglement", variant)
    params = sc.system_params()
    grid = sc.grid()
    traj = direct_orbit(params, sc.cavity, sc.mech, grid)
    cov = evolve_covariance(traj, params, sc.cavity, sc.mech,
                            sc.beta_c, sc.beta_m, v0, stride=sc.stride)
    ent = entanglement_series(cov)
    cross = np.linalg.norm(cov.V[:, :2, 2:], axis=(1, 2))
    iu = np.triu_indices(4)
    np.savetxt(OUT / f"covariance_{variant}.csv",
               np.column_stack([cov.times]
                               + [cov.V[:, i, j] for i, j in zip(*iu)]
                               + [cov.min_symplectic_eig]),
               delimiter=",", comments="",
               header="t," + ",".join(f"v{i+1}{j+1}" for i, j in zip(*iu))
               + ",min_symplectic_eig")
    np.savetxt(OUT / f"entanglement_{variant}.csv",
               np.column_stack([ent.times, ent.s_minus, ent.E_p, ent.E_N]),
               delimiter=",", comments="", header="t,s_minus,e_p,e_n")
    print(f"variant {variant} (s_m = {sc.mech.exponent:g}): "
          f"min uncertainty eig {np.min(cov.min_symplectic_eig):+.2e}; "
          f"cross-covariance 0 -> {cross[-1]:.2e}; "
          f"E_p at the bias scale ({np.nanmax(np.abs(ent.E_p)):.1e})")

print("the initial stage is mirror-bath independent, as it should be: the")
print("mirror bath's memory time (1/cutoff_m) is far longer than this window")
print("done ->", OUT)

"""One ensemble, four equivalent evolutions.

The average over a Hamiltonian ensemble can be produced four ways: by summing
the unitary orbits directly, by embedding the ensemble in an explicit
system+environment model (with only classical correlations) and tracing the
environment back out, by Monte Carlo sampling, and by integrating the
time-local master equation built from the dephasing factor.
"""

import numpy as np

from hens import (
    HamiltonianEnsemble,
    HermitianOperator,
    SpectralEnsemble,
    cnot_mixture,
    dilate,
    forward_ft,
    he_average,
    joint_evolve_reduce,
    master_coeffs,
    mc_average,
    propagate_master,
    pure_state,
    spectral_average,
    time_grid,
    trace_distance,
)

plus = pure_state([1.0, 1.0])
rng = np.random.default_rng(1)

# --- a random five-member ensemble and its classical dilation -------------
hams = []
for _ in range(5):
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    hams.append(HermitianOperator(0.5 * (a + a.conj().T)))
p = rng.uniform(0.1, 1.0, 5)
ens = HamiltonianEnsemble(p / p.sum(), tuple(hams))
dil = dilate(ens)

print("ensemble average vs dilation-reduced dynamics (5 random members):")
for t in (0.5, 2.0, 8.0):
    direct = he_average(ens, plus, t)
    reduced, classical = joint_evolve_reduce(dil, plus, t)
    print(f"  t = {t:4.1f}: trace distance = {trace_distance(direct, reduced):.2e}, "
          f"joint state classically correlated: {classical}")

# --- spectral disorder: exact, sampled, and master-equation routes --------
omega = np.linspace(-30.0, 30.0, 4001)
weights = (1.0 + np.abs(omega)) * np.exp(-np.abs(omega)) / 4.0
spec = SpectralEnsemble(omega, weights)

grid = time_grid(64.0, 1 << 14)
series = forward_ft(spec, grid)
t_all, eps, gam = master_coeffs(series)
i0 = int(np.searchsorted(t_all, 0.0))
sub = slice(i0, i0 + 2 * 1024 + 1)
t_out, states = propagate_master(plus, t_all[sub], eps[sub], gam[sub])

print("\nspectral disorder, coherence |rho_du(t)| by three routes:")
print("  t        exact      monte carlo   master eq")
for k in (0, 256, 1024):
    t = t_out[k]
    exact = abs(spectral_average(spec, plus, t).matrix[1, 0])
    sampled, stderr = mc_average(spec, plus, t, 200000, seed=42)
    mc = abs(sampled.matrix[1, 0])
    master = abs(states[k].matrix[1, 0])
    print(f"  {t:6.3f}   {exact:.6f}   {mc:.6f}      {master:.6f}   (mc stderr {stderr:.1e})")

# --- the CNOT mixture, the smallest ensemble of all -----------------------
print("\ncontrol qubit in a classical mixture acting through a CNOT:")
rho0 = pure_state([1.0, 0.0])
for a in (0.0, 0.3, 1.0):
    final = cnot_mixture(a, 1.0, np.pi, rho0)
    print(f"  mixing weight a = {a:3.1f}: populations -> "
          f"({final.matrix[0, 0].real:.2f}, {final.matrix[1, 1].real:.2f})")
print("at t = pi/J the rotation is a full bit flip; the populations mix by a.")

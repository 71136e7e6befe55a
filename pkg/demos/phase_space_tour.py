#!/usr/bin/env python3
# Tour of the spherical phase space: Husimi portraits of the named limit
# cycles and the phase distribution a weak signal imprints on them.
import numpy as np

from spinsync import (
    build_liouvillian,
    equatorial_limit_cycle,
    first_order,
    husimi_q,
    max_shifted_phase,
    phase_distribution_terms,
    semiclassical,
    steady_state,
    vdp_limit_cycle,
)

theta = np.linspace(0.0, np.pi, 91)
phi = np.linspace(0.0, 2 * np.pi, 181)
TH, PH = np.meshgrid(theta, phi, indexing="ij")

cycles = {
    "equatorial": equatorial_limit_cycle(1.0, 10.0),
    "van der Pol (deep quantum)": vdp_limit_cycle(1.0, 100.0),
}

portraits = {}
for name, lc in cycles.items():
    rho0 = steady_state(build_liouvillian(lc))
    portraits[name] = husimi_q(rho0, TH, PH)
    print(f"{name}: populations {np.round(rho0.diagonal().real, 4)}")

# a weak resonant signal localizes the phase through the first-order coherences
lc = cycles["equatorial"]
rho1 = first_order(lc, semiclassical(0.0))
terms = phase_distribution_terms(rho1)
peak, phi_star = max_shifted_phase(terms)
print(f"single-quantum harmonic amp1 = {terms.amp1:.4f}")
print(f"locked phase phi* = {phi_star:.4f} rad, peak height {peak:.4f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 3, figsize=(13, 3.6))
    for ax, (name, q) in zip(axes, portraits.items()):
        im = ax.pcolormesh(phi, theta, q, shading="auto")
        ax.set_title(f"Husimi Q: {name}")
        ax.set_xlabel("phi")
        ax.set_ylabel("theta")
        fig.colorbar(im, ax=ax)
    grid = np.linspace(0, 2 * np.pi, 361)
    axes[2].plot(grid, terms.evaluate(grid))
    axes[2].axvline(phi_star, ls="--", c="k")
    axes[2].set_title("shifted phase distribution of rho1")
    axes[2].set_xlabel("phi")
    fig.tight_layout()
    fig.savefig("phase_space_tour.png", dpi=130)
    print("wrote phase_space_tour.png")
except ImportError:
    print("matplotlib not available; skipped the figure")

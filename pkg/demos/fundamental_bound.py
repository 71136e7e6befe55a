#!/usr/bin/env python3
# The measure factorizes into (norm of the target state) x (peak per norm of
# the correction).  Maximizing both factors independently gives the spin-1
# ceiling ~0.288 eta; a pure equatorial state with a weak extra decay channel
# realizes it asymptotically.
import numpy as np

from spinsync import bound_terms, smax, tightness_scenario
from spinsync.catalog import (
    OPTIMAL_COHERENCE_RATIO,
    BoundParams,
    tightness_sync_closed,
)

eta = 0.1
print(f"spin ceiling:       {smax(eta):.6f}  ({smax(1.0):.5f} eta)")
print(f"oscillator ceiling: {smax(eta, 'oscillator'):.6f}  "
      f"({smax(1.0, 'oscillator'):.5f} eta)")

# the coherence factor peaks at a definite ratio of the two coherences
ratios = np.linspace(0.05, 6.0, 200)
factor = [
    bound_terms(BoundParams(1.0, 0.0, r, 1.0), 1.0)[1] for r in ratios
]
best = ratios[int(np.argmax(factor))]
print(f"\ncoherence factor peaks at |adjacent|/|extremal| = {best:.3f} "
      f"(3 pi / 4 sqrt(2) = {OPTIMAL_COHERENCE_RATIO:.3f})")

# norm factor across the physical triangle of diagonal states
print(f"norm factor: pure state 1.0, uniform mixture {1 / np.sqrt(3):.4f}")

# the asymmetric equatorial cycle walks up to the ceiling as the extra decay
# channel weakens
print("\ngamma_dp/gamma_g   pipeline S/eta   closed form   fraction of ceiling")
for gdp in (0.3, 0.1, 0.03, 0.01, 0.003, 0.001):
    res = tightness_scenario(1.0, 1.0, gdp, eta=eta)
    closed = tightness_sync_closed(1.0, gdp, eta)
    print(
        f"{gdp:16.3f}   {res.value / eta:.6f}        {closed / eta:.6f}"
        f"      {res.value / smax(eta):.6f}"
    )

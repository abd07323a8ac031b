"""Why a ratio test instead of k-sigma?

A single enormous observation inflates the standard deviation enough to
hide itself from the classical |x - mean| > k*s rule.  The ratio test only
compares the two largest magnitudes, so no amount of self-inflation helps.
"""

import numpy as np

import tailratio as tr

data = [0.0, 0.0, 0.0, 10.0]
print(f"data = {data}")
print(f"mean = {np.mean(data)}, population std = {np.std(data):.4f}")

print("\nk-sigma rule:")
for k in (1.0, 2.0, 3.0):
    idx = tr.ksigma_outliers(data, k)
    print(f"  k = {k}: outlier indices = {sorted(idx) or 'none'}")
print("at k = 2 the spike is invisible: |10 - 2.5| = 7.5 <= 2 * 4.33")

print("\nratio test (outlier of order 1/kappa):")
for kappa in (0.25, 0.5, 0.75):
    v = tr.is_outlier(data, kappa)
    print(
        f"  kappa = {kappa}: second/max = {v.ratio:.3f}"
        f" -> outlier = {v.is_outlier}"
    )

print("\nheavy-tailed sample where both largest values are huge:")
fam = tr.make_pareto(0.8, 1.0)
x = fam.sample(20, seed=1)
top = tr.top_two_magnitudes(x)
print(f"  top two magnitudes: {top.max_magnitude:.2f}, {top.second_magnitude:.2f}")
v = tr.is_outlier(x, 0.5)
print(f"  ratio = {v.ratio:.3f} -> outlier of order 2 = {v.is_outlier}")

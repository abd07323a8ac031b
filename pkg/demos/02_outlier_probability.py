"""The probability of a ratio outlier, three ways.

For a density with a power-law tail of index alpha the probability that the
second-largest magnitude is at most kappa times the largest tends to
kappa**alpha as the sample grows.  For Pareto the finite-n probability
already equals the limit at every n; for half-Cauchy (alpha = 1) we watch
the finite-n quadrature converge; for light tails the probability dies.
"""

import tailratio as tr

KAPPA = 0.5

print("Pareto(alpha=1.5): finite-n value vs the limit 0.5**1.5")
limit = tr.limit_probability(KAPPA, 1.5)
fam = tr.make_pareto(1.5, 1.0)
for n in (2, 10, 1000, 10**6):
    r = tr.exact_probability(fam, n, KAPPA)
    print(f"  n = {n:>7}: P = {r.value:.12f}   (limit {limit:.12f})")

print("\nhalf-Cauchy: convergence toward kappa = 0.5")
hc = tr.make_half_cauchy(1.0)
for n in (10, 100, 1000, 10000):
    r = tr.exact_probability(hc, n, KAPPA)
    print(f"  n = {n:>5}: P = {r.value:.10f}   error vs limit {abs(r.value - 0.5):.2e}")

print("\nthree independent routes at n = 6 (half-Cauchy):")
quad = tr.exact_probability(hc, 6, KAPPA)
oracle = tr.joint_oracle_probability(hc, 6, KAPPA)
mc = tr.mc_probability(hc, 6, KAPPA, trials=10**4, seed=42)
print(f"  single-integral quadrature: {quad.value:.8f} +- {quad.error_estimate:.1e}")
print(f"  joint-density double quad:  {oracle.value:.8f} +- {oracle.error_estimate:.1e}")
print(f"  Monte Carlo (1e4 trials):   {mc.value:.4f} in {mc.ci[0]:.4f}..{mc.ci[1]:.4f}")

print("\nlight tails: the event becomes impossible at scale")
for fam in (tr.make_exponential(1.0), tr.make_half_normal(1.0)):
    r = tr.exact_probability(fam, 10**4, KAPPA)
    print(f"  {fam.name:<12} n = 1e4: P = {r.value:.2e}")

print("\nboundary ratio p(x)/(kappa*p(kappa*x)) at x = 200:")
for fam in (tr.make_pareto(1.5, 1.0), hc, tr.make_exponential(1.0)):
    print(f"  {fam.name:<12} {tr.boundary_ratio(fam, KAPPA, 200.0):.6e}")

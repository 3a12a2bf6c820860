"""Closed-form bounds and a Monte Carlo check of a first-moment count.

Color K_N uniformly at random with s colors.  The expected number of
monochromatic K_{m,n} is (number of copies) * s / s^(mn); the labelled count
s*C(N,m+n)*C(m+n,m)/s^(mn) counts each copy twice when m = n.  The
simulation below estimates the true mean.
"""
from degree_ramsey import bounds

print(bounds.bound_star(3, 2).to_line())
print(bounds.bound_tree_upper(2, 3).to_line())

up = bounds.kmn_expected_upper(6, 2, 2, 2)
print(f"\nlabelled count for K_2,2 in K_6, 2 colors: {up.value_text()}")
print(f"exact expectation: {bounds.kmn_expected_count(6, 2, 2, 2)}")
mc = bounds.monte_carlo_kmn(6, 2, 2, 2, trials=10_000, seed=0)
print(f"simulated mean: {mc.mean_count:.4f} +- {mc.count_stderr:.4f} "
      f"(within 3 standard errors: {mc.within()})")

print("\nupper constant C(m, s) against s^m e^(s^2-1):")
for m, s in [(2, 2), (3, 2), (4, 2), (3, 3)]:
    r = bounds.kmn_upper_constant(m, s)
    note = f"  [{'; '.join(r.flags)}]" if r.flags else ""
    print(f"  m={m} s={s}: C = {r.value_text()}, within cap: {r.extras['within_cap']}{note}")

low = bounds.kmn_lower_bound(3, 2, 2)
print(f"\nlower bound at n=3, m=2, s=2: {low.value_text()[:12]}...  ({low.flags[0]})")

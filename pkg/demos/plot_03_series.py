"""
Coordinates of A^{-i} v and their absolute sums
===============================================

A^{-i} v = alpha_i v + beta_i Av. The sums of |alpha_i| and |beta_i| bound
every lattice point of T - T, so they size the oracle's search box.
"""

from selfaffine import Quadratic, alpha_beta, tilde_sums
from selfaffine.series import partial_abs_sums

q = Quadratic(3, 3)  # complex roots at angle pi/6

for i in range(1, 8):
    a, b = alpha_beta(q, i)
    print(f"i={i}: alpha={a}, beta={b}")

# After six steps the recurrence is a scalar, so the sums are exact rationals.
sb = tilde_sums(q)
print("alpha_tilde =", sb.alpha_tilde, " beta_tilde =", sb.beta_tilde)
print("partial sums (n=60):", [float(x) for x in partial_abs_sums(q, 60)])

# Off the special angles only a certified upper bound is available.
sb = tilde_sums(Quadratic(1, 5))
print(sb.exactness.value, float(sb.alpha_tilde), "after", sb.terms, "terms")

"""
Connectedness thresholds for consecutive digits
===============================================

For D = {0, 1, ..., m} the attractor T(A, Dv) is connected exactly when m
reaches a threshold depending only on the characteristic polynomial
x^2 + bx + c of A. This script prints the proven thresholds over a small grid
and confirms each one against the exact lattice oracle.
"""

from selfaffine import Quadratic, classify_consecutive, is_expanding
from selfaffine.criteria import proven_threshold
from selfaffine.neighbors import DifferenceSet, survivor_set

# Walk a grid of polynomials and keep the ones a theorem covers.
rows = []
for b in range(-6, 7):
    for c in range(-12, 13):
        q = Quadratic(b, c)
        if not is_expanding(q):
            continue
        proven = proven_threshold(q)
        if proven is not None:
            rows.append((q, *proven))

# The oracle asks whether v itself lies in T - T; that is the whole test.
def oracle(q, m):
    return (1, 0) in survivor_set(q, DifferenceSet.consecutive(m))

print(f"{'polynomial':<14} {'threshold':>9}  source")
for q, t, source in rows:
    tight = not oracle(q, t - 1) if t > 1 else True
    assert oracle(q, t) and tight
    print(f"{str(q):<14} {t:>9}  {source.value}")

# A single verdict, as the CLI prints it:
print(classify_consecutive(Quadratic(-10, 24), 15))

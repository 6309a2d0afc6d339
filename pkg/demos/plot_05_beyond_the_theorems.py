"""
Where the closed forms stop
===========================

Outside the proven regimes the classifier says Unknown. The conjectured
threshold fills the gap, but the oracle disagrees with it in places:
for x^2 - 5x + 5 it predicts 4, yet m = 3 already connects.
"""

from selfaffine import Quadratic, classify_consecutive, is_expanding
from selfaffine.criteria import HrpExpansion, conjecture_threshold, verify_expansion
from selfaffine.neighbors import DifferenceSet, survivor_set


def oracle_threshold(q, limit=60):
    for m in range(1, limit):
        if (1, 0) in survivor_set(q, DifferenceSet.consecutive(m)):
            return m
    return None


q = Quadratic(-5, 5)
print(classify_consecutive(q, 3))
print(classify_consecutive(q, 3, conjecture=True))
print("oracle threshold:", oracle_threshold(q))

# A witness: v = 3A^{-1}v + 2A^{-2}v + 2A^{-3}v - 3(A^{-4}v + A^{-5}v + ...).
e = HrpExpansion((3, 2, 2), (-3,))
print("expansion verifies:", verify_expansion(q, DifferenceSet.consecutive(3), e))

# Tally every unproven case in a small window.
mismatch = []
for b in range(-10, 11):
    for c in range(-30, 31):
        q = Quadratic(b, c)
        if is_expanding(q) and classify_consecutive(q, 1).source is None:
            t = oracle_threshold(q)
            if t != conjecture_threshold(q).threshold:
                mismatch.append((b, c, conjecture_threshold(q).threshold, t))
print(f"{len(mismatch)} mismatches; first few (b, c, conjectured, oracle):", mismatch[:6])

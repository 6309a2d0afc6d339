"""
Lattice neighbors and the digit graph
=====================================

Lattice points of T - T are the translates T + l touching T. They are found
as the states of a finite automaton that can run forever inside a box.
"""

from selfaffine import CollinearDigitSet, Quadratic
from selfaffine.neighbors import DifferenceSet, digit_graph_edges, survivor_set

q = Quadratic(-4, 4)

# m = 1: only two neighbors, and v is not one of them.
for m in (1, 2):
    surv = survivor_set(q, DifferenceSet.consecutive(m))
    box = surv.box
    print(f"m={m}: box |gamma|<={box.gamma_max} |delta|<={box.delta_max}, "
          f"{len(surv)} survivors after {surv.rounds} rounds")
    print("   ", [tuple(p) for p in surv if p != (0, 0)])

# Pieces for digits a < b meet iff (b - a)v is a survivor. With m = 2 the
# digit graph is a path 0 - 1 - 2, which is enough for connectedness.
print(digit_graph_edges(q, CollinearDigitSet.consecutive(2)))

# Gap digits {0, 1, 2, 5}: nothing reaches 5, so the attractor falls apart.
print(digit_graph_edges(q, [0, 1, 2, 5]))

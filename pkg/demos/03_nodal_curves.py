"""K_-1 of nodal curves from their dual graphs.

Vertices are irreducible components, edges are nodes, loops are
self-nodes.  K_-1 is free abelian of rank equal to the first Betti
number of the graph, and it vanishes exactly on forests.
"""

from kminusone import CurveSpec, DualGraph, GeneralCurvePiece, betti1, \
    curve_k_minus_one, is_tree_of_lines

examples = [
    ("A2 chain of two lines", DualGraph(2, ((0, 1),))),
    ("nodal cubic (one loop)", DualGraph(1, ((0, 0),))),
    ("cycle of four lines", DualGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))),
    ("star of four lines", DualGraph(4, ((0, 1), (0, 2), (0, 3)))),
    ("two disjoint chains", DualGraph(4, ((0, 1), (2, 3)))),
    ("banana: two lines, two nodes", DualGraph(2, ((0, 1), (0, 1)))),
]

for name, graph in examples:
    k = curve_k_minus_one(graph)
    print(f"  {name:<28} betti1 = {betti1(graph)}  K_-1 = {k}  "
          f"tree of lines: {is_tree_of_lines(graph)}")

print()
print("Non-nodal singularities enter through branch data per connected")
print("piece: the rank is br - #Sing - N + 1.")
lines = CurveSpec(pieces=(GeneralCurvePiece(5, (5,)),))
cusp = CurveSpec(pieces=(GeneralCurvePiece(1, (1,)),))
print(f"  five lines through a point: K_-1 = {curve_k_minus_one(lines)}")
print(f"  cuspidal cubic:             K_-1 = {curve_k_minus_one(cusp)}")
print()
print("A connected nodal curve with rational components admits a")
print("Kawamata type decomposition iff its dual graph is a tree; the")
print("Betti number is exactly the K_-1 obstruction rank otherwise.")

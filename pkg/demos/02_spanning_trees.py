"""
Spanning trees and the rank of a graph's fundamental group
==========================================================

Collapsing a spanning tree turns a connected graph into a bouquet of
circles, one circle per edge outside the tree.  So the fundamental group is
free of rank |E| - |V| + 1.
"""

import random

from nielsen_schreier import Graph, euler_rank, find_crossing_edge, spanning_tree, tree_path
from nielsen_schreier.graphs import non_tree_edges

# A square with a diagonal and a loop at vertex 2.
g = Graph(4, ((0, 1), (1, 2), (3, 2), (3, 0), (0, 2), (2, 2)))
t = spanning_tree(g, root=0)
print("tree edges:", sorted(t.tree_edges))
print("loops left after collapsing:", non_tree_edges(g, t))
print("rank:", euler_rank(g))

###############################################################################
# Tree paths record the direction each edge is walked.  Edge 3 points
# 3 -> 0, so reaching vertex 3 from the root uses it backwards ("-").

for v in range(g.num_vertices):
    steps = ["%d%s" % (e, "+" if d > 0 else "-") for e, d in tree_path(t, v)]
    print(f"path to {v}: {' '.join(steps) or '(root)'}")

###############################################################################
# The tree grows one crossing edge at a time.  With {0, 1} on one side and
# {2, 3} on the other, the first edge joining them is:

print("least crossing edge:", find_crossing_edge(g, (0, 0, 1, 1)))

###############################################################################
# Random check: trees always have |V| - 1 edges.

rng = random.Random(0)
for _ in range(5):
    n = rng.randint(2, 12)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    edges += [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 8))]
    rng.shuffle(edges)
    g = Graph(n, tuple(edges))
    t = spanning_tree(g)
    print(f"|V|={n:2d} |E|={len(edges):2d} tree={len(t.tree_edges):2d} rank={euler_rank(g)}")

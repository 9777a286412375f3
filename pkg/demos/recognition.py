"""Recognise h- and t-perfection of complements of line graphs from the root.

    python3 demos/recognition.py
"""
from tperfect.graph6 import encode_graph6
from tperfect.graphs import Graph, co_line_graph, complete_graph, cycle_graph, prism_graph, wheel_graph
from tperfect.recognition import t_perfect_col

roots = {
    "C5": cycle_graph(5),
    "C7": cycle_graph(7),
    "K4": complete_graph(4),
    "K5": complete_graph(5),
    "prism": prism_graph(),
    "W5": wheel_graph(5),
    "C5 + disjoint edge": Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (5, 6)]),
    "three disjoint triangles + edge": Graph(11, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                                  (6, 7), (7, 8), (6, 8), (9, 10)]),
}

for name, h in roots.items():
    g = co_line_graph(h)
    rep = t_perfect_col(g)
    print(f"co-L({name}) = {encode_graph6(g)}  n={g.n}")
    print(f"    root recovered with {rep.root.h.n} vertices, {rep.root.h.m} edges")
    print(f"    h-perfect {rep.h_perfect}, t-perfect {rep.t_perfect}")
    if rep.witness is not None:
        print(f"    witness {rep.witness}")

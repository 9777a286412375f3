"""Colour t-perfect complements of line graphs through covers of the root.

A cover of the edges of h by k stars and triangles is a k-colouring of
co-L(h): two edges of a common star or triangle pairwise meet, so they are
non-adjacent in co-L(h).

    python3 demos/coloring_walkthrough.py
"""
from tperfect.coloring import (
    ceil_chif_coloring, cm_cover, cover_to_coloring, four_color_col, gamma_exact,
    structured_cover, three_color_structured,
)
from tperfect.graphs import Graph, chromatic_number_exact, co_line_graph, line_graph, prism_graph, wheel_graph
from tperfect.polytope import fractional_chromatic_hperfect

h = Graph(7, [(0, 1), (0, 2), (0, 4), (0, 5), (2, 3), (3, 6), (5, 6)])
g = co_line_graph(h)
print("root edges:", " ".join(f"{a}{b}" for a, b in h.sorted_edges))

cm = cm_cover(h, prefer_pieces=True)
print(f"\nweighted cover of value {cm.value}:")
print("  stars:", [str(s) for s in cm.stars])
print("  factor-critical pieces:", cm.fc_pieces)

cover = structured_cover(h, prefer_pieces=True)
print(f"\nstar/triangle cover with {len(cover)} elements:", [str(e) for e in cover.elements])
col = cover_to_coloring(h, cover, g, line_graph(h)[1])
print("colour classes (vertex = root edge):")
for i, cls in enumerate(col.classes()):
    print(f"  {i}: {[h.sorted_edges[v] for v in cls]}")

print("\nthree_color_structured:", three_color_structured(g).num_colors, "colours;",
      "exact chi:", chromatic_number_exact(g)[0])

for name, r in (("prism", prism_graph()), ("W5", wheel_graph(5))):
    cg = co_line_graph(r)
    k, _ = gamma_exact(r)
    print(f"\nco-L({name}): gamma = {k}, chi = {chromatic_number_exact(cg)[0]}, "
          f"chi_f = {fractional_chromatic_hperfect(cg)}, four_color_col uses {four_color_col(cg).num_colors}")

c = ceil_chif_coloring(co_line_graph(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])))
print(f"\nceil(chi_f)-colouring of co-L(C5 + chord): {c.num_colors} colours")

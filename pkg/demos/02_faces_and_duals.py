"""
Faces and planar duals of rooted diagrams
=========================================

A diagram is a weighted multidigraph drawn in a disk with its roots on the
circle.  The drawing is recorded as a rotation system: the clockwise order of
edge ends at every node.  Faces come from walking around that map.
"""
from scaffolds import catalog, dual_diagram, trace_faces
from scaffolds.diagrams import format_dart, match_by_edges, reversed_diagram


def show(d, title):
    print(f"--- {title}: {d.n} nodes, {d.m} edges, roots {list(d.roots)}")
    for e in d.edges:
        print(f"    {e.id}: {e.tail} -> {e.head}  {e.weight}")


tri = catalog.triangle(1, 2, 3)
show(tri, "triangle")

fs = trace_faces(tri)
print("faces (boundary arcs are the integer keys):")
for k, face in enumerate(fs.faces):
    tag = "outer" if k == fs.outer else ("q%d" % (fs.boundary_faces.index(k) + 1) if k in fs.boundary_faces else "")
    print(f"    {k} {tag:5s} {' '.join(format_dart(x) if isinstance(x[0], str) else f'b{x[0] + 1}:{x[1]}' for x in face)}")
print("Euler:", tri.n, "-", tri.m + tri.ell, "+", fs.count, "=", tri.n - tri.m - tri.ell + fs.count)

# each edge turns a quarter clockwise; A_i becomes E_i
star = dual_diagram(tri)
show(star, "dual of the triangle")
print("same as the catalog star:", match_by_edges(star, catalog.star(1, 2, 3)) is not None)

# five roots and one inner node
fig = catalog.fig1()
show(dual_diagram(fig), "dual of the five-root drawing")

# dualizing twice reverses every edge; the root list comes back rotated by one
dd = dual_diagram(dual_diagram(fig))
phi = match_by_edges(dd, reversed_diagram(fig))
print("double dual is the reversal:", phi is not None)
print("root correspondence:", {r: phi[r] for r in dd.roots})

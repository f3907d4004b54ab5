"""Independent oracles and random diagram generators for the test-suite."""
import itertools

import numpy as np

from scaffolds.diagrams import Edge, build_diagram, trace_faces
from scaffolds.schemes import BMElement, bm_to_matrix


def scaffold_by_enumeration(d, s):
    """Pure-python sum over every node assignment; the slowest, plainest oracle."""
    n = s.size
    mats = {e.id: bm_to_matrix(s, e.weight) for e in d.edges}
    out = np.zeros((n,) * d.ell, dtype=complex)
    for sigma in itertools.product(range(n), repeat=d.n):
        at = dict(zip(d.nodes, sigma))
        val = 1.0 + 0j
        for e in d.edges:
            val *= mats[e.id][at[e.tail], at[e.head]]
            if val == 0:
                break
        out[tuple(at[r] for r in d.roots)] += val
    return out


def walk_counts(adjacency_i, adjacency_j, x, y):
    """Number of z with (x, z) in R_i and (z, y) in R_j."""
    return sum(adjacency_i[x, z] * adjacency_j[z, y] for z in range(len(adjacency_i)))


def eigen_oracle(relations):
    """Eigenmatrix P from a numerical eigendecomposition of a generic combination.

    Works for symmetric schemes: diagonalize a random real combination of the
    relation matrices, cluster its eigenvalues, and read each A_i's eigenvalue
    on each eigenspace.  Rows come back sorted by the first eigenvector's
    pattern, so callers compare up to row order.
    """
    rng = np.random.default_rng(7)
    coeffs = rng.normal(size=len(relations))
    M = sum(c * a for c, a in zip(coeffs, relations))
    vals, vecs = np.linalg.eigh(M)
    rows = []
    for k in range(len(vals)):
        v = vecs[:, k]
        rows.append(tuple(round(float(v @ a @ v), 8) for a in relations))
    return sorted(set(rows))


# --- random diagrams -------------------------------------------------------

def random_abstract_diagram(rng, max_nodes=6, max_edges=8, d=2):
    """Random weakly connected multidigraph with loops, random roots, no embedding."""
    n = int(rng.integers(1, max_nodes + 1))
    nodes = [f"v{k}" for k in range(n)]
    edges = []
    for k in range(1, n):
        other = nodes[int(rng.integers(0, k))]
        t, h = (other, nodes[k]) if rng.random() < 0.5 else (nodes[k], other)
        edges.append((t, h))
    extra = int(rng.integers(0, max_edges - len(edges) + 1)) if max_edges > len(edges) else 0
    for _ in range(extra):
        edges.append((nodes[int(rng.integers(0, n))], nodes[int(rng.integers(0, n))]))
    ell = int(rng.integers(0, min(n, 3) + 1))
    roots = [nodes[k] for k in rng.permutation(n)[:ell]]
    weighted = [(f"e{k}", t, h, BMElement.unit("A", int(rng.integers(0, d + 1))))
                for k, (t, h) in enumerate(edges)]
    return build_diagram(nodes, weighted, roots)


def _corners(d, face):
    """Insertion points ``(node, position)`` inside ``face`` of the user rotation lists."""
    out = []
    cyc = face
    if not cyc:
        return [(d.nodes[0], 0)]
    for k, dart in enumerate(cyc):
        nxt = cyc[(k + 1) % len(cyc)]
        key, end = dart
        prev = (key, "h" if end == "t" else "t")  # arrival dart; nxt follows it clockwise
        node = _node_of(d, nxt)
        if isinstance(prev[0], int):
            out.append((node, 0))
        else:
            out.append((node, list(d.rotation[node]).index(prev) + 1))
    return out


def _node_of(d, dart):
    key, end = dart
    if isinstance(key, int):
        return d.roots[key] if end == "t" else d.roots[(key + 1) % d.ell]
    e = d.edge(key)
    return e.tail if end == "t" else e.head


def _insert(rot, node, pos, darts):
    lst = list(rot[node])
    rot[node] = tuple(lst[:pos] + list(darts) + lst[pos:])


def random_planar_diagram(rng, steps=5, d=2, ell0=1, max_nodes=6):
    """Grow a standard planar diagram by random planarity-preserving moves.

    Moves: hang a pendant node in a corner, add a loop, draw a chord across a
    face, subdivide an edge, or (when there are roots) add a new root on a
    boundary arc joined into the adjacent face.  Every intermediate diagram
    goes through ``build_diagram`` and so is re-validated.
    """
    if ell0 == 0:
        dg = build_diagram(["v0"], [], [], {"v0": []})
    else:
        nodes = [f"r{k}" for k in range(ell0)]
        edges, rot = [], {v: () for v in nodes}
        for k in range(1, ell0):
            eid = f"e{len(edges)}"
            edges.append(Edge(eid, nodes[k - 1], nodes[k], BMElement.unit("A", 1)))
        # a rim path r0 -> r1 -> ... ; darts listed clockwise from the outgoing arc
        for k, v in enumerate(nodes):
            darts = []
            if k + 1 < ell0:
                darts.append((f"e{k}", "t"))
            if k > 0:
                darts.append((f"e{k - 1}", "h"))
            rot[v] = tuple(darts)
        dg = build_diagram(nodes, edges, nodes, rot)
    counter = [len(dg.edges), len(dg.nodes)]

    def label():
        return BMElement.unit("A", int(rng.integers(0, d + 1)))

    def new_edge():
        counter[0] += 1
        return f"x{counter[0]}"

    def new_node():
        counter[1] += 1
        return f"u{counter[1]}"

    for _ in range(steps):
        fs = trace_faces(dg)
        face = fs.faces[fs.interior[int(rng.integers(0, len(fs.interior)))]]
        corners = _corners(dg, face)
        move = int(rng.integers(0, 5))
        if len(dg.nodes) >= max_nodes and move in (0, 3, 4):
            move = 2
        rot = dict(dg.rotation)
        nodes, edges, roots = list(dg.nodes), list(dg.edges), list(dg.roots)
        if move == 0:  # pendant
            v, pos = corners[int(rng.integers(0, len(corners)))]
            u, eid = new_node(), new_edge()
            out = rng.random() < 0.5
            edges.append(Edge(eid, v, u, label()) if out else Edge(eid, u, v, label()))
            _insert(rot, v, pos, [(eid, "t" if out else "h")])
            rot[u] = ((eid, "h" if out else "t"),)
            nodes.append(u)
        elif move == 1:  # loop
            v, pos = corners[int(rng.integers(0, len(corners)))]
            eid = new_edge()
            edges.append(Edge(eid, v, v, label()))
            _insert(rot, v, pos, [(eid, "t"), (eid, "h")] if rng.random() < 0.5 else [(eid, "h"), (eid, "t")])
        elif move == 2:  # chord across the face
            a = int(rng.integers(0, len(corners)))
            b = int(rng.integers(0, len(corners)))
            (va, pa), (vb, pb) = corners[a], corners[b]
            eid = new_edge()
            edges.append(Edge(eid, va, vb, label()))
            if va == vb and pa == pb:
                _insert(rot, va, pa, [(eid, "t"), (eid, "h")])
            elif va == vb:
                first, second = sorted([(pa, "t"), (pb, "h")])
                _insert(rot, va, second[0], [(eid, second[1])])
                _insert(rot, va, first[0], [(eid, first[1])])
            else:
                _insert(rot, va, pa, [(eid, "t")])
                _insert(rot, vb, pb, [(eid, "h")])
        elif move == 3 and edges:  # subdivide
            e = edges[int(rng.integers(0, len(edges)))]
            w, eid = new_node(), new_edge()
            forward = rng.random() < 0.5
            edges[edges.index(e)] = Edge(e.id, e.tail, w, e.weight)
            edges.append(Edge(eid, w, e.head, label()) if forward else Edge(eid, e.head, w, label()))
            new_end = (eid, "h" if forward else "t")
            rot[e.head] = tuple(new_end if x == (e.id, "h") else x for x in rot[e.head])
            rot[w] = ((e.id, "h"), (eid, "t" if forward else "h"))
            nodes.append(w)
        elif move == 4 and roots:  # new root on arc b_i, joined into face q_i
            i = int(rng.integers(0, len(roots)))
            qface = fs.faces[fs.boundary_faces[i]]
            cs = _corners(dg, qface)
            v, pos = cs[int(rng.integers(0, len(cs)))]
            z, eid = new_node(), new_edge()
            out = rng.random() < 0.5
            edges.append(Edge(eid, v, z, label()) if out else Edge(eid, z, v, label()))
            _insert(rot, v, pos, [(eid, "t" if out else "h")])
            rot[z] = ((eid, "h" if out else "t"),)
            nodes.append(z)
            roots.insert(i + 1, z)
        else:
            continue
        dg = build_diagram(nodes, edges, roots, rot)
    return dg


# --- acceptance log --------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def criterion(number, ok, detail):
    """Print and record one pass/fail line, then assert."""
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line

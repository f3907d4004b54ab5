"""Rooted, disk-embedded multidigraphs with Bose-Mesner edge weights.

The embedding is a rotation system: for every node, the clockwise cyclic list
of darts (edge ends) at it.  A dart is a pair ``(edge_id, "t")`` or
``(edge_id, "h")``.  Roots sit on the boundary circle in clockwise order
``r_1, ..., r_l``; the boundary arc ``b_i`` runs from ``r_i`` to ``r_{i+1}``.
Arcs are never listed by the caller.  At a root the caller lists its darts
clockwise starting just after the outgoing arc ``b_i`` and ending just before
the incoming arc ``b_{i-1}``.  In other words the list runs over the interior
of the disk, and the exterior sits between ``b_{i-1}`` and ``b_i``.

Internally arcs are edges keyed by the integers ``0..l-1`` (``b_1`` is ``0``),
so they cannot collide with user edge ids, which are strings.

Faces are traced keeping the face on the left: from a dart leaving ``v``, walk
to the other end and continue with the clockwise successor there.  The left
face of an edge is the face of its tail dart, the right face that of its head
dart.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInput, InvalidRewrite, UnsupportedOperation, ValidationError
from .schemes import BMElement, Scheme, bm_hadamard, bm_product

Dart = tuple  # (edge key, "t" | "h")


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str
    weight: BMElement

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True, eq=False)
class Diagram:
    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]
    roots: tuple[str, ...]
    rotation: Mapping[str, tuple[Dart, ...]] | None = None

    @property
    def ell(self) -> int:
        return len(self.roots)

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def embedded(self) -> bool:
        return self.rotation is not None

    def edge(self, eid: str) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise KeyError(eid)

    def degree(self, v: str) -> int:
        return sum((e.tail == v) + (e.head == v) for e in self.edges)

    def relabeled(self, weights: Mapping[str, BMElement]) -> "Diagram":
        """Same diagram with some edge weights replaced (by edge id)."""
        edges = tuple(replace(e, weight=weights.get(e.id, e.weight)) for e in self.edges)
        return replace(self, edges=edges)


@dataclass(frozen=True, eq=False)
class FaceStructure:
    """Faces of the diagram together with its boundary arcs.

    ``faces[k]`` is the dart cycle of face ``k``.  ``outer`` is the face
    outside the disk when ``l > 0``; when ``l = 0`` there are no arcs and
    ``outer`` is the face taken to meet the boundary circle (by convention the
    face of the first dart traced).  ``boundary_faces`` lists ``q_1..q_l``.
    ``interior`` lists every face except the one outside the disk.
    """

    faces: tuple[tuple[Dart, ...], ...]
    face_of: Mapping[Dart, int]
    outer: int
    boundary_faces: tuple[int, ...]
    interior: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.faces)

    def left(self, eid) -> int:
        return self.face_of[(eid, "t")]

    def right(self, eid) -> int:
        return self.face_of[(eid, "h")]


def parse_dart(text: str) -> Dart:
    eid, sep, end = str(text).rpartition(":")
    if not sep or end not in ("t", "h") or not eid:
        raise InvalidInput(f"bad dart {text!r}; expected 'edgeid:t' or 'edgeid:h'")
    return (eid, end)


def format_dart(dart: Dart) -> str:
    return f"{dart[0]}:{dart[1]}"


def _connected(nodes, edges) -> bool:
    adj = {v: set() for v in nodes}
    for e in edges:
        adj[e.tail].add(e.head)
        adj[e.head].add(e.tail)
    start = nodes[0]
    seen = {start}
    todo = deque([start])
    while todo:
        v = todo.popleft()
        for u in adj[v] - seen:
            seen.add(u)
            todo.append(u)
    return len(seen) == len(nodes)


def _full_rotation(d: Diagram) -> dict[str, list[Dart]]:
    """Rotation system of the diagram with its boundary arcs added."""
    rot = {v: list(d.rotation.get(v, ())) for v in d.nodes}
    ell = d.ell
    for i, r in enumerate(d.roots):
        rot[r] = [(i, "t")] + rot[r] + [((i - 1) % ell, "h")]
    return rot


def _dart_node(d: Diagram, edges: Mapping, dart: Dart) -> str:
    key, end = dart
    if isinstance(key, int):
        i = key
        return d.roots[i] if end == "t" else d.roots[(i + 1) % d.ell]
    e = edges[key]
    return e.tail if end == "t" else e.head


def _trace(d: Diagram) -> FaceStructure:
    edges = {e.id: e for e in d.edges}
    rot = _full_rotation(d)
    succ = {}
    for darts in rot.values():
        for k, dart in enumerate(darts):
            succ[dart] = darts[(k + 1) % len(darts)]
    faces: list[tuple[Dart, ...]] = []
    face_of: dict[Dart, int] = {}
    for v in d.nodes:
        if not rot[v]:
            faces.append(())
        for start in rot[v]:
            if start in face_of:
                continue
            cycle = []
            dart = start
            while dart not in face_of:
                face_of[dart] = len(faces)
                cycle.append(dart)
                key, end = dart
                dart = succ[(key, "h" if end == "t" else "t")]
            faces.append(tuple(cycle))
    if d.ell:
        outer = face_of[(0, "t")]
        boundary = tuple(face_of[(i, "h")] for i in range(d.ell))
    else:
        outer = 0
        boundary = (0,)
    interior = tuple(k for k in range(len(faces)) if not (d.ell and k == outer))
    return FaceStructure(tuple(faces), face_of, outer, boundary, interior)


def _check_rotation(d: Diagram) -> list[tuple[str, str]]:
    problems = []
    edges = {e.id: e for e in d.edges}
    unknown = set(d.rotation) - set(d.nodes)
    if unknown:
        problems.append(("rotation-node", f"rotation lists for unknown nodes {sorted(unknown)}"))
    expected = {v: [] for v in d.nodes}
    for e in d.edges:
        expected[e.tail].append((e.id, "t"))
        expected[e.head].append((e.id, "h"))
    seen: dict[Dart, str] = {}
    for v in d.nodes:
        for dart in d.rotation.get(v, ()):
            if dart[0] not in edges:
                problems.append(("dart-unknown", f"node {v} lists dart of unknown edge {dart[0]!r}"))
                continue
            if dart in seen:
                problems.append(("dart-duplicate", f"dart {format_dart(dart)} listed twice"))
                continue
            seen[dart] = v
            if _dart_node(d, edges, dart) != v:
                problems.append(("dart-misplaced", f"dart {format_dart(dart)} listed at {v}"))
        missing = [x for x in expected[v] if x not in seen]
        if missing:
            problems.append(("dart-missing",
                             f"node {v} omits darts {[format_dart(x) for x in missing]}"))
    return problems


def _check_embedding(d: Diagram) -> list[tuple[str, str]]:
    fs = _trace(d)
    n_nodes, n_edges = d.n, d.m + d.ell
    if n_nodes - n_edges + fs.count != 2:
        return [("euler", f"{n_nodes} - {n_edges} + {fs.count} != 2; "
                          "rotation is not a planar disk embedding")]
    if d.ell and (len(set(fs.boundary_faces)) != d.ell or fs.outer in fs.boundary_faces):
        return [("boundary", "boundary arcs do not bound distinct interior faces")]
    for k in fs.interior:
        arcs = [dart for dart in fs.faces[k] if isinstance(dart[0], int)]
        if len(arcs) > 1:
            return [("boundary", f"face {k} meets several boundary arcs")]
    return []


def build_diagram(nodes: Sequence[str], edges: Iterable, roots: Sequence[str] = (),
                  rotation: Mapping[str, Sequence] | None = None) -> Diagram:
    """Validate and assemble a diagram.

    ``edges`` holds :class:`Edge` objects or ``(id, tail, head, weight)``
    tuples.  ``rotation`` maps nodes to clockwise dart lists (darts as tuples
    or ``"id:t"`` strings); omit it for an abstract, unembedded diagram,
    which can be evaluated but not dualized.
    """
    nodes = tuple(str(v) for v in nodes)
    roots = tuple(str(r) for r in roots)
    edge_list = []
    for e in edges:
        if not isinstance(e, Edge):
            eid, t, h, w = e
            e = Edge(str(eid), str(t), str(h), w)
        edge_list.append(e)
    problems = []
    if not nodes:
        raise ValidationError([("empty", "a diagram needs at least one node")])
    if len(set(nodes)) != len(nodes):
        problems.append(("node-duplicate", "node names repeat"))
    ids = [e.id for e in edge_list]
    if len(set(ids)) != len(ids):
        problems.append(("edge-duplicate", "edge ids repeat"))
    node_set = set(nodes)
    for e in edge_list:
        if e.tail not in node_set or e.head not in node_set:
            problems.append(("edge-endpoint", f"edge {e.id} joins unknown nodes"))
        if not isinstance(e.weight, BMElement):
            problems.append(("edge-weight", f"edge {e.id} weight is not a BMElement"))
    if len(set(roots)) != len(roots):
        problems.append(("root-duplicate", f"roots {list(roots)} repeat a node"))
    if not set(roots) <= node_set:
        problems.append(("root-unknown", f"roots {sorted(set(roots) - node_set)} are not nodes"))
    if problems:
        raise ValidationError(problems)
    if not _connected(nodes, edge_list):
        raise ValidationError([("disconnected", "underlying graph is not weakly connected")])
    rot = None
    if rotation is not None:
        rot = {}
        for v, darts in rotation.items():
            rot[str(v)] = tuple(parse_dart(x) if isinstance(x, str) else (str(x[0]), x[1])
                                for x in darts)
    d = Diagram(nodes, tuple(edge_list), roots, rot)
    if rot is not None:
        problems = _check_rotation(d)
        if problems:
            raise ValidationError(problems)
        problems = _check_embedding(d)
        if problems:
            raise ValidationError(problems)
    return d


def trace_faces(d: Diagram) -> FaceStructure:
    if not d.embedded:
        raise UnsupportedOperation("faces need an embedded diagram (rotation system)")
    return _trace(d)


_SWAP = {"A": "E", "E": "A"}


def dual_diagram(d: Diagram) -> Diagram:
    """Planar dual: interior faces become nodes, ``A_i`` and ``E_i`` swap.

    Each dual edge runs from the left face of the original edge to its right
    face (the edge turned a quarter turn clockwise) and keeps its id.  Roots
    are ``q_1..q_l``.  The dual rotation at a face lists the darts around it
    clockwise, i.e. its boundary cycle reversed.
    """
    if not d.embedded:
        raise UnsupportedOperation("dualization needs an embedded diagram")
    kinds = {e.weight.basis for e in d.edges}
    if len(kinds) > 1:
        raise UnsupportedOperation("dualization needs all weights on the same basis")
    for e in d.edges:
        if e.weight.index is None:
            raise UnsupportedOperation(
                f"edge {e.id} weight {e.weight} is not a single basis element")
    fs = _trace(d)
    names: dict[int, str] = {}
    if d.ell:
        for i, k in enumerate(fs.boundary_faces):
            names[k] = f"q{i + 1}"
    count = 0
    for k in fs.interior:
        if k not in names:
            count += 1
            names[k] = f"f{count}"
    rotation: dict[str, tuple[Dart, ...]] = {}
    for k in fs.interior:
        cw = list(reversed(fs.faces[k]))
        if d.ell and k in fs.boundary_faces:
            i = fs.boundary_faces.index(k)
            pos = cw.index((i, "h"))
            cw = cw[pos + 1:] + cw[:pos]
        rotation[names[k]] = tuple(cw)
    edges = tuple(
        Edge(e.id, names[fs.left(e.id)], names[fs.right(e.id)],
             BMElement.unit(_SWAP[e.weight.basis], e.weight.index))
        for e in d.edges)
    nodes = tuple(names[k] for k in fs.interior)
    roots = tuple(names[k] for k in fs.boundary_faces[: d.ell])
    return build_diagram(nodes, edges, roots, rotation)


def reversed_diagram(d: Diagram) -> Diagram:
    """Every edge reversed, the embedding otherwise unchanged."""
    swap = {"t": "h", "h": "t"}
    edges = tuple(Edge(e.id, e.head, e.tail, e.weight) for e in d.edges)
    rot = None
    if d.rotation is not None:
        rot = {v: tuple((k, swap[end]) for k, end in darts) for v, darts in d.rotation.items()}
    return Diagram(d.nodes, edges, d.roots, rot)


def _cyclic_equal(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    s = list(b)
    return any(list(a) == s[k:] + s[:k] for k in range(len(s)))


def same_weight(u: BMElement, v: BMElement) -> bool:
    n = max(len(u.coeffs), len(v.coeffs)) - 1
    return u.basis == v.basis and list(u.padded(n)) == list(v.padded(n))


def match_by_edges(a: Diagram, b: Diagram) -> dict[str, str] | None:
    """Node bijection ``a -> b`` carrying each edge onto the edge with the same id.

    Weights must agree, and when both are embedded the rotation at ``v`` must
    equal the rotation at its image (as cyclic lists at non-roots, exactly at
    roots).  Roots need not correspond.  Returns ``None`` when no match exists.
    """
    if a.n != b.n or {e.id for e in a.edges} != {e.id for e in b.edges}:
        return None
    phi: dict[str, str] = {}
    for e in a.edges:
        f = b.edge(e.id)
        if not same_weight(e.weight, f.weight):
            return None
        for u, v in ((e.tail, f.tail), (e.head, f.head)):
            if phi.setdefault(u, v) != v:
                return None
    if not a.edges:
        phi = {a.nodes[0]: b.nodes[0]}
    if len(set(phi.values())) != len(phi) or len(phi) != a.n:
        return None
    if a.embedded and b.embedded:
        for v in a.nodes:
            ra, rb = a.rotation.get(v, ()), b.rotation.get(phi[v], ())
            if v in a.roots and phi[v] in b.roots:
                if tuple(ra) != tuple(rb):
                    return None
            elif not _cyclic_equal(ra, rb):
                return None
    return phi


def reduce_series(d: Diagram, v: str, s: Scheme) -> Diagram:
    """Replace ``u -A-> v -B-> w`` by ``u -AB-> w``; ``v`` must be a non-root."""
    if v not in d.nodes:
        raise InvalidRewrite(f"unknown node {v!r}")
    if v in d.roots:
        raise InvalidRewrite(f"{v} is a root")
    ins = [e for e in d.edges if e.head == v]
    outs = [e for e in d.edges if e.tail == v]
    if len(ins) != 1 or len(outs) != 1 or ins[0] is outs[0]:
        raise InvalidRewrite(f"{v} needs exactly one incoming and one outgoing edge")
    e1, e2 = ins[0], outs[0]
    if e1.weight.basis != e2.weight.basis:
        raise InvalidRewrite("series weights are written on different bases")
    merged = Edge(e1.id, e1.tail, e2.head, bm_product(s, e1.weight, e2.weight))
    edges = tuple(merged if e is e1 else e for e in d.edges if e is not e2)
    nodes = tuple(x for x in d.nodes if x != v)
    rot = None
    if d.rotation is not None:
        rot = {}
        for x in nodes:
            rot[x] = tuple((e1.id, "h") if dart == (e2.id, "h") else dart
                           for dart in d.rotation.get(x, ()))
    return build_diagram(nodes, edges, d.roots, rot)


def reduce_parallel(d: Diagram, u: str, v: str, s: Scheme) -> Diagram:
    """Merge all edges ``u -> v`` into the first of them, Hadamard-multiplying weights."""
    bundle = [e for e in d.edges if e.tail == u and e.head == v]
    if len(bundle) < 2:
        raise InvalidRewrite(f"fewer than two edges {u} -> {v}")
    w = bundle[0].weight
    for e in bundle[1:]:
        if e.weight.basis != w.basis:
            raise InvalidRewrite("parallel weights are written on different bases")
        w = bm_hadamard(s, w, e.weight)
    drop = {e.id for e in bundle[1:]}
    keep = bundle[0].id
    edges = tuple(replace(e, weight=w) if e.id == keep else e
                  for e in d.edges if e.id not in drop)
    rot = None
    if d.rotation is not None:
        rot = {x: tuple(dart for dart in darts if dart[0] not in drop)
               for x, darts in d.rotation.items()}
    return build_diagram(d.nodes, edges, d.roots, rot)

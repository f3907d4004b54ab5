"""Built-in translation schemes and diagrams.

Diagram builders take class labels; ``A`` weights by default.  Rotation lists
follow the convention in :mod:`scaffolds.diagrams` and were read off drawings
with the roots spaced evenly and clockwise around the circle, ``r_1`` on top.
"""
from __future__ import annotations

from typing import Callable

from .diagrams import Diagram, build_diagram
from .errors import InvalidInput
from .groups import make_abelian_group
from .schemes import BMElement
from .translation import TranslationScheme, translation_scheme


def _cyclic(n: int, classes) -> Callable[[], TranslationScheme]:
    return lambda: translation_scheme(make_abelian_group([n]), [[(x,) for x in c] for c in classes])


SCHEMES: dict[str, Callable[[], TranslationScheme]] = {
    "z3-complete": _cyclic(3, [[0], [1, 2]]),
    "z4-cycle": _cyclic(4, [[0], [1, 3], [2]]),
    "z5-paley": _cyclic(5, [[0], [1, 4], [2, 3]]),
    "z6-cycle": _cyclic(6, [[0], [1, 5], [2, 4], [3]]),
    "z3-directed": _cyclic(3, [[0], [1], [2]]),
    "z7-cubic": _cyclic(7, [[0], [1, 2, 4], [3, 5, 6]]),
    "h22": lambda: translation_scheme(
        make_abelian_group([2, 2]), [[(0, 0)], [(0, 1), (1, 0)], [(1, 1)]]),
}

# the schemes the acceptance suite runs over
CORE_SCHEMES = ("z4-cycle", "h22", "z5-paley", "z6-cycle")


def scheme(name: str) -> TranslationScheme:
    try:
        return SCHEMES[name]()
    except KeyError:
        raise InvalidInput(f"unknown built-in scheme {name!r}; known: {sorted(SCHEMES)}") from None


def _w(basis, k):
    return BMElement.unit(basis, k)


def triangle(i=1, j=1, k=1, basis="A") -> Diagram:
    """Three roots, ``r1 -A_j-> r2 <-A_k- r3 -A_i-> r1``; zero iff ``p_ij^k = 0``."""
    return build_diagram(
        ["r1", "r2", "r3"],
        [("ej", "r1", "r2", _w(basis, j)),
         ("ek", "r3", "r2", _w(basis, k)),
         ("ei", "r3", "r1", _w(basis, i))],
        ["r1", "r2", "r3"],
        {"r1": ["ej:t", "ei:h"], "r2": ["ek:h", "ej:h"], "r3": ["ei:t", "ek:t"]},
    )


def star(i=1, j=1, k=1, basis="E") -> Diagram:
    """Three roots around a centre ``c``: ``q1 -E_j-> c``, ``q3 -E_i-> c``, ``c -E_k-> q2``."""
    return build_diagram(
        ["q1", "q2", "q3", "c"],
        [("ej", "q1", "c", _w(basis, j)),
         ("ek", "c", "q2", _w(basis, k)),
         ("ei", "q3", "c", _w(basis, i))],
        ["q1", "q2", "q3"],
        {"q1": ["ej:t"], "q2": ["ek:h"], "q3": ["ei:t"], "c": ["ej:h", "ek:t", "ei:h"]},
    )


def path2(i=1, j=1, basis="A") -> Diagram:
    """``r1 -A_i-> v -A_j-> r2``."""
    return build_diagram(
        ["r1", "v", "r2"],
        [("a", "r1", "v", _w(basis, i)), ("b", "v", "r2", _w(basis, j))],
        ["r1", "r2"],
        {"r1": ["a:t"], "v": ["a:h", "b:t"], "r2": ["b:h"]},
    )


def parallel2(i=1, j=1, basis="A") -> Diagram:
    """Two edges ``r1 -> r2`` weighted ``A_i`` and ``A_j``."""
    return build_diagram(
        ["r1", "r2"],
        [("a", "r1", "r2", _w(basis, i)), ("b", "r1", "r2", _w(basis, j))],
        ["r1", "r2"],
        {"r1": ["a:t", "b:t"], "r2": ["b:h", "a:h"]},
    )


def edge1(i=1, basis="A") -> Diagram:
    """A single edge ``r1 -> r2``."""
    return build_diagram(["r1", "r2"], [("a", "r1", "r2", _w(basis, i))], ["r1", "r2"],
                         {"r1": ["a:t"], "r2": ["a:h"]})


def point0() -> Diagram:
    return build_diagram(["v"], [], [], {"v": []})


def point1() -> Diagram:
    return build_diagram(["r1"], [], ["r1"], {"r1": []})


def loop0(i=1, basis="A") -> Diagram:
    return build_diagram(["v"], [("a", "v", "v", _w(basis, i))], [], {"v": ["a:t", "a:h"]})


def fig1(labels=(1, 2, 3, 1, 4, 5, 4), basis="A") -> Diagram:
    """Five roots on a path-like rim plus one inner node ``c``.

    Edges in ``labels`` order: ``r1->r2, r2->r3, r3->r4, r1->r5, r1->c,
    r5->c, r3->c``.  The default labels are the ones in the drawing.
    """
    ids = ["e12", "e23", "e34", "e15", "e1c", "e5c", "e3c"]
    ends = [("r1", "r2"), ("r2", "r3"), ("r3", "r4"), ("r1", "r5"),
            ("r1", "c"), ("r5", "c"), ("r3", "c")]
    return build_diagram(
        ["r1", "r2", "r3", "r4", "r5", "c"],
        [(e, t, h, _w(basis, k)) for e, (t, h), k in zip(ids, ends, labels)],
        ["r1", "r2", "r3", "r4", "r5"],
        {"r1": ["e12:t", "e1c:t", "e15:t"], "r2": ["e23:t", "e12:h"],
         "r3": ["e34:t", "e3c:t", "e23:h"], "r4": ["e34:h"], "r5": ["e15:h", "e5c:t"],
         "c": ["e1c:h", "e3c:h", "e5c:h"]},
    )


def fig1_for(d: int) -> Diagram:
    """:func:`fig1` with the drawn labels folded into ``1..d`` (``k -> (k-1) mod d + 1``)."""
    return fig1(tuple((k - 1) % d + 1 for k in (1, 2, 3, 1, 4, 5, 4)))


def ex21_lhs(i=1, j=1) -> Diagram:
    """``r1 -A_0-> v``, ``v -A_i-> r2``, ``v -A_j-> r3``; equals :func:`ex21_rhs`."""
    return build_diagram(
        ["r1", "r2", "r3", "v"],
        [("e0", "r1", "v", _w("A", 0)), ("ei", "v", "r2", _w("A", i)), ("ej", "v", "r3", _w("A", j))],
        ["r1", "r2", "r3"],
        {"r1": ["e0:t"], "r2": ["ei:h"], "r3": ["ej:h"], "v": ["e0:h", "ei:t", "ej:t"]},
    )


def ex21_rhs(i=1, j=1) -> Diagram:
    """``r1 -A_i-> r2`` and ``r1 -A_j-> r3``."""
    return build_diagram(
        ["r1", "r2", "r3"],
        [("ei", "r1", "r2", _w("A", i)), ("ej", "r1", "r3", _w("A", j))],
        ["r1", "r2", "r3"],
        {"r1": ["ei:t", "ej:t"], "r2": ["ei:h"], "r3": ["ej:h"]},
    )


def ex23_lhs(i=1, j=0, k=1) -> Diagram:
    """Path ``r1 -A_i-> r2 -A_j-> r3 -A_k-> r4`` along the rim."""
    return build_diagram(
        ["r1", "r2", "r3", "r4"],
        [("ei", "r1", "r2", _w("A", i)), ("ej", "r2", "r3", _w("A", j)), ("ek", "r3", "r4", _w("A", k))],
        ["r1", "r2", "r3", "r4"],
        {"r1": ["ei:t"], "r2": ["ej:t", "ei:h"], "r3": ["ek:t", "ej:h"], "r4": ["ek:h"]},
    )


def ex23_rhs(i=1, j=0, k=1) -> Diagram:
    """The same path drawn as ``a -> b -> d -> c`` with ``a, b, c, d`` clockwise.

    Its tensor is that of :func:`ex23_lhs` with the last two axes swapped.  As
    a standard planar diagram its roots are in rim order ``a, b, c, d``.
    """
    return build_diagram(
        ["a", "b", "c", "d"],
        [("ei", "a", "b", _w("A", i)), ("ej", "b", "d", _w("A", j)), ("ek", "d", "c", _w("A", k))],
        ["a", "b", "c", "d"],
        {"a": ["ei:t"], "b": ["ej:t", "ei:h"], "c": ["ek:h"], "d": ["ej:h", "ek:t"]},
    )


def loops_side(i=0, j=0) -> Diagram:
    """Two loops side by side at a single root."""
    return build_diagram(["r1"], [("a", "r1", "r1", _w("A", i)), ("b", "r1", "r1", _w("A", j))],
                         ["r1"], {"r1": ["a:t", "a:h", "b:t", "b:h"]})


def loops_nested(i=0, j=0) -> Diagram:
    """Loop ``b`` drawn inside loop ``a`` at a single root."""
    return build_diagram(["r1"], [("a", "r1", "r1", _w("A", i)), ("b", "r1", "r1", _w("A", j))],
                         ["r1"], {"r1": ["a:t", "b:t", "b:h", "a:h"]})


DIAGRAMS: dict[str, Callable[..., Diagram]] = {
    "star": star,
    "triangle": triangle,
    "fig1": fig1,
    "path2": path2,
    "parallel2": parallel2,
    "edge1": edge1,
    "loop0": loop0,
    "point0": point0,
    "point1": point1,
    "ex21-lhs": ex21_lhs,
    "ex21-rhs": ex21_rhs,
    "ex23-lhs": ex23_lhs,
    "ex23-rhs": ex23_rhs,
    "loops-side": loops_side,
    "loops-nested": loops_nested,
}


def diagram(name: str, labels=()) -> Diagram:
    """Built-in diagram by name; ``labels`` are passed positionally to its builder."""
    try:
        build = DIAGRAMS[name]
    except KeyError:
        raise InvalidInput(f"unknown built-in diagram {name!r}; known: {sorted(DIAGRAMS)}") from None
    if name == "fig1" and labels:
        return build(tuple(labels))
    return build(*labels)

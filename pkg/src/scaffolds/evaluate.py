"""Scaffold tensors of weighted diagrams.

The scaffold of a diagram over a scheme on ``X`` is

    S[x_1, ..., x_l] = sum over sigma: V -> X with sigma(r_i) = x_i
                       of prod_e W_e[sigma(tail e), sigma(head e)].

:func:`eval_bruteforce` materializes the full product over ``X^V`` and is kept
as the reference.  :func:`eval_elimination` sums out non-root nodes one at a
time.  Neither looks at the embedding.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .diagrams import Diagram
from .errors import InvalidInput, ResourceLimit
from .schemes import Scheme, bm_to_matrix

DEFAULT_MAX_ENTRIES = 10**7


@dataclass(frozen=True, eq=False)
class ScaffoldTensor:
    """Dense order-``ell`` tensor; axis ``k`` is indexed by root ``r_{k+1}``."""

    ell: int
    base_size: int
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=complex)
        if a.shape != (self.base_size,) * self.ell:
            raise InvalidInput(f"entries of shape {a.shape} for ell={self.ell}, |X|={self.base_size}")
        object.__setattr__(self, "entries", a)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.entries.ravel()))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.entries))) if self.entries.size else 0.0


def _weights(d: Diagram, s: Scheme) -> list[np.ndarray]:
    return [bm_to_matrix(s, e.weight) for e in d.edges]


def eval_bruteforce(d: Diagram, s: Scheme, max_entries: int = DEFAULT_MAX_ENTRIES) -> ScaffoldTensor:
    n = s.size
    total = n ** d.n
    if total > max_entries:
        raise ResourceLimit(f"brute force needs {total} entries (cap {max_entries})", total)
    axis = {v: k for k, v in enumerate(d.nodes)}
    shape = (n,) * d.n
    full = np.ones(shape, dtype=complex)
    for e, W in zip(d.edges, _weights(d, s)):
        t, h = axis[e.tail], axis[e.head]
        view = [1] * d.n
        if t == h:
            view[t] = n
            full = full * np.diag(W).reshape(view)
            continue
        view[t] = view[h] = n
        full = full * (W if t < h else W.T).reshape(view)
    inner = tuple(axis[v] for v in d.nodes if v not in d.roots)
    summed = full.sum(axis=inner) if inner else full
    # remaining axes are the roots in node order
    kept = [v for v in d.nodes if v in d.roots]
    perm = [kept.index(r) for r in d.roots]
    return ScaffoldTensor(d.ell, n, np.transpose(summed, perm) if perm else summed)


def elimination_order(d: Diagram) -> list[str]:
    """Greedy minimum-degree order over the non-root nodes, ties by name."""
    nbrs = {v: set() for v in d.nodes}
    for e in d.edges:
        if e.tail != e.head:
            nbrs[e.tail].add(e.head)
            nbrs[e.head].add(e.tail)
    todo = {v for v in d.nodes if v not in d.roots}
    order = []
    while todo:
        v = min(todo, key=lambda x: (len(nbrs[x]), x))
        order.append(v)
        todo.remove(v)
        for u in nbrs[v]:
            nbrs[u].discard(v)
            nbrs[u] |= nbrs[v] - {u}
        del nbrs[v]
    return order


def eval_elimination(d: Diagram, s: Scheme, order: Sequence[str] | None = None,
                     max_intermediate: int = DEFAULT_MAX_ENTRIES) -> ScaffoldTensor:
    n = s.size
    inner = [v for v in d.nodes if v not in d.roots]
    if order is None:
        order = elimination_order(d)
    elif sorted(order) != sorted(inner):
        raise InvalidInput(f"order {list(order)} is not a permutation of the non-root nodes")
    label = {v: k for k, v in enumerate(d.nodes)}
    factors: list[tuple[tuple[int, ...], np.ndarray]] = []
    for e, W in zip(d.edges, _weights(d, s)):
        t, h = label[e.tail], label[e.head]
        if t == h:
            factors.append(((t,), np.diag(W)))
        else:
            factors.append(((t, h), W))
    scalar = 1.0 + 0j
    for v in order:
        x = label[v]
        touching = [f for f in factors if x in f[0]]
        if not touching:
            scalar *= n
            continue
        factors = [f for f in factors if x not in f[0]]
        out = sorted({y for vars_, _ in touching for y in vars_} - {x})
        size = n ** len(out)
        if size > max_intermediate:
            raise ResourceLimit(
                f"eliminating {v} builds a tensor with {size} entries (cap {max_intermediate})", size)
        args = []
        for vars_, arr in touching:
            args += [arr, list(vars_)]
        factors.append((tuple(out), np.einsum(*args, out, optimize=True)))
    root_vars = [label[r] for r in d.roots]
    if not root_vars:
        value = scalar
        for _, arr in factors:
            value *= complex(arr)
        return ScaffoldTensor(0, n, np.array(value))
    args = []
    for vars_, arr in factors:
        args += [arr, list(vars_)]
    result = np.ones((n,) * d.ell, dtype=complex)
    args += [result, root_vars]
    return ScaffoldTensor(d.ell, n, scalar * np.einsum(*args, root_vars, optimize=True))


def inner_product(t1: ScaffoldTensor, t2: ScaffoldTensor) -> complex:
    """Hermitian inner product, conjugate-linear in the second argument."""
    if t1.ell != t2.ell or t1.base_size != t2.base_size:
        raise InvalidInput("inner product of tensors with different shapes")
    return complex(np.vdot(t2.entries, t1.entries))

"""Character-basis coefficients, the averaging isometry, and duality checks.

For a translation scheme on ``X`` the vectors ``eps^ = |X|^-1/2 sum_x
conj(eps(x)) e_x`` form an orthonormal basis.  A planar scaffold of order
``l`` only has coefficients on tuples ``(eps_1, ..., eps_l)`` whose product is
trivial.  The map ``Psi`` spreads such a coefficient evenly over the ``|X|``
tuples ``eta`` with

    (eta_l eta_1^-1, eta_1 eta_2^-1, ..., eta_{l-1} eta_l^-1) = (eps_1, ..., eps_l)

and sends the scaffold of a diagram with ``n`` nodes to
``|X|^(n - l/2 - 1/2)`` times the scaffold of its dual over the dual scheme.
For ``l = 0`` the two scalars differ by ``|X|^(n-1)``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .diagrams import Diagram, dual_diagram
from .errors import InvalidInput, UnsupportedOperation
from .evaluate import DEFAULT_MAX_ENTRIES, ScaffoldTensor, eval_elimination
from .groups import AbelianGroup
from .translation import TranslationScheme, dual_scheme

DEFAULT_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class CoeffTensor:
    """Coefficients over ``(X*)^ell`` in the basis ``eps_1^ (x) ... (x) eps_l^``."""

    ell: int
    group: AbelianGroup
    entries: np.ndarray

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.entries.ravel()))


def _apply_each_axis(a: np.ndarray, M: np.ndarray) -> np.ndarray:
    for k in range(a.ndim):
        a = np.moveaxis(np.tensordot(M, a, axes=([1], [k])), 0, k)
    return a


def _unitary(g: AbelianGroup) -> np.ndarray:
    # row eps: conj of the basis vector eps^, so U @ v gives <v, eps^>
    return g.character_table / np.sqrt(g.size)


def character_coefficients(t: ScaffoldTensor, g: AbelianGroup) -> CoeffTensor:
    if t.base_size != g.size:
        raise InvalidInput(f"tensor over |X|={t.base_size}, group has {g.size} elements")
    return CoeffTensor(t.ell, g, _apply_each_axis(t.entries, _unitary(g)))


def from_coefficients(c: CoeffTensor) -> ScaffoldTensor:
    """Inverse of :func:`character_coefficients`."""
    U = _unitary(c.group)
    return ScaffoldTensor(c.ell, c.group.size, _apply_each_axis(c.entries, U.conj().T))


def _product_index(g: AbelianGroup, ell: int) -> np.ndarray:
    """Index of ``eps_1 ... eps_l`` for every tuple, shaped ``(|X|,)*l``."""
    n = g.size
    ident = g.index(g.identity)
    inv = g.difference_table[ident]  # inv[b] = index of x_b^-1
    table = g.difference_table[:, inv]  # table[a, b] = index of x_a x_b
    idx = np.indices((n,) * ell)
    prod = idx[0]
    for k in range(1, ell):
        prod = table[prod, idx[k]]
    return prod


def gamma_residual(c: CoeffTensor) -> float:
    """Norm of the coefficients off the product-trivial subgroup."""
    if c.ell == 0:
        raise UnsupportedOperation("the support condition needs at least one root")
    g = c.group
    off = _product_index(g, c.ell) != g.index(g.identity)
    return float(np.linalg.norm(c.entries[off]))


def phi_index(g: AbelianGroup, ell: int) -> tuple[np.ndarray, ...]:
    """Index arrays of ``(eta_l eta_1^-1, eta_1 eta_2^-1, ..., eta_{l-1} eta_l^-1)``."""
    D = g.difference_table
    idx = np.indices((g.size,) * ell)
    return tuple(D[idx[k - 1], idx[k]] for k in range(ell))


def apply_psi(c: CoeffTensor, tol: float = 1e-9) -> CoeffTensor:
    if c.ell == 0:
        raise UnsupportedOperation("the averaging map needs at least one root")
    resid = gamma_residual(c)
    if resid > tol * max(1.0, c.norm):
        raise InvalidInput(f"coefficients leave the product-trivial subgroup (residual {resid:.3e})")
    g = c.group
    out = c.entries[phi_index(g, c.ell)] / np.sqrt(g.size)
    return CoeffTensor(c.ell, g, out)


def scalar_factor(n_nodes: int, ell: int, size: int) -> float:
    if ell == 0:
        return float(size) ** (n_nodes - 1)
    return float(size) ** (n_nodes - ell / 2 - 0.5)


@dataclass
class DualityReport:
    ell: int
    n: int
    scalar: float
    residual: float
    gamma_residual: float | None
    tolerance: float
    passed: bool
    timings: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "ell": self.ell,
            "n": self.n,
            "scalar": self.scalar,
            "residual": self.residual,
            "gamma_residual": self.gamma_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "timings": {k: round(v, 6) for k, v in self.timings.items()},
        }


def duality_sides(d: Diagram, ts: TranslationScheme, dual_ts: TranslationScheme | None = None,
                  max_intermediate: int = DEFAULT_MAX_ENTRIES):
    """Return ``(S, S_dagger)``: the scaffold and its dual's scaffold over the dual scheme."""
    if any(e.weight.basis != "A" for e in d.edges):
        raise InvalidInput("duality is stated for adjacency-matrix weights")
    if dual_ts is None:
        dual_ts = dual_scheme(ts)
    S = eval_elimination(d, ts.scheme, max_intermediate=max_intermediate)
    S_dag = eval_elimination(dual_diagram(d), dual_ts.scheme, max_intermediate=max_intermediate)
    return S, S_dag


def verify_duality(d: Diagram, ts: TranslationScheme, tol: float = DEFAULT_TOL,
                   dual_ts: TranslationScheme | None = None,
                   max_intermediate: int = DEFAULT_MAX_ENTRIES) -> DualityReport:
    """Check the scaffold of ``d`` against its dual's, with the node-count scalar.

    The residual is the max-abs difference divided by ``max(1, max|S_dagger|)``.
    """
    clock = time.perf_counter()
    n = ts.group.size
    if dual_ts is None:
        dual_ts = dual_scheme(ts)
    t0 = time.perf_counter()
    S, S_dag = duality_sides(d, ts, dual_ts, max_intermediate)
    t1 = time.perf_counter()
    scalar = scalar_factor(d.n, d.ell, n)
    scale = max(1.0, S_dag.max_abs())
    if d.ell == 0:
        lhs = S.entries
        gres = None
    else:
        C = character_coefficients(S, ts.group)
        gres = gamma_residual(C)
        lhs = C.entries[phi_index(ts.group, d.ell)] / np.sqrt(n)
    resid = float(np.max(np.abs(lhs - scalar * S_dag.entries))) / scale
    t2 = time.perf_counter()
    ok = resid <= tol and (gres is None or gres <= tol * max(1.0, S.norm))
    return DualityReport(
        ell=d.ell, n=d.n, scalar=scalar, residual=resid, gamma_residual=gres,
        tolerance=tol, passed=bool(ok),
        timings={"dual_scheme": t0 - clock, "evaluate": t1 - t0, "compare": t2 - t1},
    )


def dualize_combination(terms: Sequence[tuple[complex, Diagram]], size: int):
    """Dualize ``sum a S`` term by term as ``sum a |X|^n S_dagger``.

    ``size`` is ``|X|``; ``n`` is the node count of each original diagram.
    Nothing is evaluated.
    """
    terms = list(terms)
    orders = {d.ell for _, d in terms}
    if len(orders) > 1:
        raise InvalidInput(f"terms of different orders {sorted(orders)}")
    return [(complex(a) * size ** d.n, dual_diagram(d)) for a, d in terms]

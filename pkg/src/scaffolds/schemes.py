"""Commutative association schemes and their Bose-Mesner algebras.

A :class:`Scheme` carries the 0/1 relation matrices ``A_0..A_d`` and, when
known, the primitive idempotents ``E_0..E_d`` together with the eigenmatrices
``P`` and ``Q`` linking the two bases::

    A_i = sum_j P[j, i] E_j        E_i = |X|^-1 sum_j Q[j, i] A_j

Eigen data is never computed here for explicit schemes; translation schemes
supply it in closed form (see :mod:`scaffolds.translation`).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInput, UnsupportedOperation, ValidationError

DEFAULT_TOL = 1e-9


def _frozen(a, dtype):
    a = np.array(a, dtype=dtype)
    a.setflags(write=False)
    return a


def max_abs(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


@dataclass(frozen=True, eq=False)
class Scheme:
    size: int
    relations: tuple[np.ndarray, ...]
    idempotents: tuple[np.ndarray, ...] | None = None
    P: np.ndarray | None = None
    Q: np.ndarray | None = None

    @property
    def d(self) -> int:
        return len(self.relations) - 1

    @property
    def has_eigen_data(self) -> bool:
        return self.idempotents is not None

    def reordered(self, a_order=None, e_order=None) -> "Scheme":
        """Relabel the classes: new ``A_k`` is old ``A_{a_order[k]}``, same for ``E``.

        Index 0 must stay fixed in both orders.  The eigenmatrices are permuted
        to match; the result is re-validated.
        """
        n = self.d + 1
        a_order = list(range(n)) if a_order is None else list(a_order)
        e_order = list(range(n)) if e_order is None else list(e_order)
        for order in (a_order, e_order):
            if sorted(order) != list(range(n)) or order[0] != 0:
                raise InvalidInput(f"{order} is not a permutation fixing 0")
        rel = [self.relations[k] for k in a_order]
        if not self.has_eigen_data:
            return scheme_from_relations(rel)
        return _with_eigen_data(
            scheme_from_relations(rel),
            [self.idempotents[k] for k in e_order],
            self.P[np.ix_(e_order, a_order)],
            self.Q[np.ix_(a_order, e_order)],
        )


@dataclass(frozen=True)
class BMElement:
    """An element of the Bose-Mesner algebra as coefficients on one basis.

    ``basis`` is ``"A"`` (adjacency matrices) or ``"E"`` (idempotents).
    Missing trailing coefficients are zero, so ``BMElement.unit("A", 1)``
    is ``A_1`` in any scheme with at least one class.
    """

    basis: str
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        if self.basis not in ("A", "E"):
            raise InvalidInput(f"basis must be 'A' or 'E', got {self.basis!r}")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        if not self.coeffs:
            raise InvalidInput("a Bose-Mesner element needs at least one coefficient")

    @classmethod
    def unit(cls, basis: str, index: int) -> "BMElement":
        if index < 0:
            raise InvalidInput(f"negative class index {index}")
        return cls(basis, (0,) * index + (1,))

    @classmethod
    def ones(cls, basis: str, d: int) -> "BMElement":
        return cls(basis, (1,) * (d + 1))

    @property
    def index(self) -> int | None:
        """Class index if this is a single basis element, else ``None``."""
        nz = [k for k, c in enumerate(self.coeffs) if c != 0]
        if len(nz) == 1 and self.coeffs[nz[0]] == 1:
            return nz[0]
        return None

    def padded(self, d: int) -> np.ndarray:
        c = np.zeros(d + 1, dtype=complex)
        extra = self.coeffs[d + 1:]
        if any(x != 0 for x in extra):
            raise InvalidInput(
                f"{self.basis}-coefficients reach class {len(self.coeffs) - 1}, scheme has d={d}")
        c[:min(len(self.coeffs), d + 1)] = self.coeffs[:d + 1]
        return c

    def __add__(self, other: "BMElement") -> "BMElement":
        if other.basis != self.basis:
            raise InvalidInput("cannot add elements written on different bases")
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return BMElement(self.basis, tuple(x + y for x, y in zip(a, b)))

    def scaled(self, alpha: complex) -> "BMElement":
        return BMElement(self.basis, tuple(alpha * c for c in self.coeffs))

    def __str__(self):
        k = self.index
        if k is not None:
            return f"{self.basis}{k}"
        return f"{self.basis}{list(self.coeffs)}"


@dataclass(frozen=True, eq=False)
class ParameterTensor:
    """Structure constants ``values[i, j, k]`` (``p`` or ``q``)."""

    kind: str
    values: np.ndarray

    def __getitem__(self, ijk):
        return self.values[ijk]


def _relation_violations(mats: list[np.ndarray]) -> list[tuple[str, str]]:
    n = mats[0].shape[0]
    out = []
    if not np.array_equal(mats[0], np.eye(n, dtype=np.int64)):
        out.append(("AS1", "A_0 is not the identity matrix"))
    total = sum(mats)
    if not np.array_equal(total, np.ones((n, n), dtype=np.int64)):
        bad = np.argwhere(total != 1)[0]
        out.append(("AS2", f"relations do not partition X x X (entry {tuple(int(b) for b in bad)} "
                           f"covered {int(total[tuple(bad)])} times)"))
        return out
    for i, a in enumerate(mats):
        if not any(np.array_equal(a.T, b) for b in mats):
            out.append(("AS3", f"transpose of A_{i} is not a relation matrix"))
    labels = sum(k * a for k, a in enumerate(mats))
    for i, a in enumerate(mats):
        for j in range(i, len(mats)):
            prod = a @ mats[j]
            if not np.array_equal(prod, mats[j] @ a):
                out.append(("AS4", f"A_{i} A_{j} != A_{j} A_{i}"))
                continue
            for k in range(len(mats)):
                vals = prod[labels == k]
                if vals.size and np.any(vals != vals[0]):
                    out.append(("AS4", f"A_{i} A_{j} is not constant on R_{k}"))
                    break
    return out


def scheme_from_relations(matrices: Sequence) -> Scheme:
    """Validate (AS1)-(AS4) and return the scheme.

    Raises :class:`ValidationError` listing every violated axiom.
    """
    if len(matrices) == 0:
        raise InvalidInput("need at least one relation matrix")
    mats = [np.asarray(m) for m in matrices]
    n = mats[0].shape[0] if mats[0].ndim == 2 else -1
    for k, m in enumerate(mats):
        if m.ndim != 2 or m.shape != (n, n):
            raise InvalidInput(f"relation {k} has shape {m.shape}, expected ({n}, {n})")
        if not np.all((m == 0) | (m == 1)):
            raise InvalidInput(f"relation {k} has entries outside {{0, 1}}")
    mats = [m.astype(np.int64) for m in mats]
    violations = _relation_violations(mats)
    if violations:
        raise ValidationError(violations)
    return Scheme(size=n, relations=tuple(_frozen(m, np.int64) for m in mats))


def _with_eigen_data(s: Scheme, idempotents, P, Q, tol=DEFAULT_TOL) -> Scheme:
    """Attach eigen data to ``s`` after checking it against the relations."""
    n, d = s.size, s.d
    E = [np.asarray(e, dtype=complex) for e in idempotents]
    P = np.asarray(P, dtype=complex)
    Q = np.asarray(Q, dtype=complex)
    problems = []
    if len(E) != d + 1 or P.shape != (d + 1, d + 1) or Q.shape != (d + 1, d + 1):
        raise InvalidInput("eigen data has the wrong number of classes")
    scale = max(1.0, float(n))
    if max_abs(E[0] - np.ones((n, n)) / n) > tol:
        problems.append(("idempotents", "E_0 != |X|^-1 J"))
    if max_abs(sum(E) - np.eye(n)) > tol:
        problems.append(("idempotents", "sum of E_i != I"))
    for i in range(d + 1):
        for j in range(d + 1):
            target = E[i] if i == j else 0
            if max_abs(E[i] @ E[j] - target) > tol:
                problems.append(("idempotents", f"E_{i} E_{j} != delta E_{i}"))
    for i in range(d + 1):
        if max_abs(sum(P[j, i] * E[j] for j in range(d + 1)) - s.relations[i]) > tol * scale:
            problems.append(("eigenmatrices", f"A_{i} != sum_j P[j,{i}] E_j"))
        if max_abs(sum(Q[j, i] * s.relations[j] for j in range(d + 1)) / n - E[i]) > tol * scale:
            problems.append(("eigenmatrices", f"E_{i} != |X|^-1 sum_j Q[j,{i}] A_j"))
    if problems:
        raise ValidationError(problems)
    return Scheme(
        size=s.size,
        relations=s.relations,
        idempotents=tuple(_frozen(e, complex) for e in E),
        P=_frozen(P, complex),
        Q=_frozen(Q, complex),
    )


def intersection_numbers(s: Scheme) -> ParameterTensor:
    """``p[i, j, k]`` with ``A_i A_j = sum_k p[i, j, k] A_k``.

    Each value is read off one entry of ``A_i A_j`` inside relation ``R_k``,
    so the result is exact in integer arithmetic.
    """
    A = s.relations
    reps = [tuple(np.argwhere(a == 1)[0]) for a in A]
    p = np.zeros((s.d + 1,) * 3, dtype=np.int64)
    for i, ai in enumerate(A):
        for j, aj in enumerate(A):
            prod = ai @ aj
            for k, (x, y) in enumerate(reps):
                p[i, j, k] = prod[x, y]
    return ParameterTensor("p", _frozen(p, np.int64))


def krein_parameters(s: Scheme, tol: float = DEFAULT_TOL) -> ParameterTensor:
    """``q[i, j, k]`` with ``E_i o E_j = |X|^-1 sum_k q[i, j, k] E_k``."""
    if not s.has_eigen_data:
        raise UnsupportedOperation("Krein parameters need the primitive idempotents")
    E, n = s.idempotents, s.size
    mult = [np.trace(e).real for e in E]
    q = np.zeros((s.d + 1,) * 3, dtype=complex)
    for i in range(s.d + 1):
        for j in range(s.d + 1):
            had = E[i] * E[j]
            for k in range(s.d + 1):
                # E_k is an orthogonal projection of rank m_k
                q[i, j, k] = n * np.trace(had @ E[k]) / mult[k]
            resid = max_abs(had - sum(q[i, j, k] * E[k] for k in range(s.d + 1)) / n)
            if resid > tol:
                raise ValidationError([("krein", f"E_{i} o E_{j} not in span of E (residual {resid:.2e})")])
    return ParameterTensor("q", _frozen(q, complex))


def bm_to_matrix(s: Scheme, w: BMElement) -> np.ndarray:
    coeffs = w.padded(s.d)
    if w.basis == "A":
        basis = s.relations
    else:
        if not s.has_eigen_data:
            raise UnsupportedOperation("E-basis weights need the primitive idempotents")
        basis = s.idempotents
    out = np.zeros((s.size, s.size), dtype=complex)
    for c, m in zip(coeffs, basis):
        if c != 0:
            out += c * m
    return out


def bm_product(s: Scheme, u: BMElement, v: BMElement) -> BMElement:
    """Matrix product ``uv``, written on the basis of ``u`` (both must agree)."""
    if u.basis != v.basis:
        raise InvalidInput("product of elements on different bases")
    a, b = u.padded(s.d), v.padded(s.d)
    if u.basis == "E":
        return BMElement("E", tuple(a * b))
    p = intersection_numbers(s).values
    return BMElement("A", tuple(np.einsum("i,j,ijk->k", a, b, p)))


def bm_hadamard(s: Scheme, u: BMElement, v: BMElement) -> BMElement:
    """Entrywise product ``u o v`` on the basis of ``u``."""
    if u.basis != v.basis:
        raise InvalidInput("product of elements on different bases")
    a, b = u.padded(s.d), v.padded(s.d)
    if u.basis == "A":
        return BMElement("A", tuple(a * b))
    q = krein_parameters(s).values
    return BMElement("E", tuple(np.einsum("i,j,ijk->k", a, b, q) / s.size))


def _polynomial_pattern(values: np.ndarray, tol: float) -> bool:
    n = values.shape[0]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                big = max(i, j, k)
                rest = i + j + k - big
                zero = abs(values[i, j, k]) <= tol
                if big > rest and not zero:
                    return False
                if big == rest and zero:
                    return False
    return True


def check_p_polynomial(s: Scheme) -> bool:
    """True if the scheme is metric for the current ordering of its classes."""
    if not all(np.array_equal(a, a.T) for a in s.relations):
        return False
    return _polynomial_pattern(intersection_numbers(s).values, 0)


def check_q_polynomial(s: Scheme, tol: float = DEFAULT_TOL) -> bool:
    """True if the scheme is cometric for the current ordering of its idempotents."""
    if not s.has_eigen_data:
        raise UnsupportedOperation("Q-polynomial check needs the primitive idempotents")
    if any(max_abs(e - e.T) > tol for e in s.idempotents):
        return False
    return _polynomial_pattern(krein_parameters(s, tol).values, tol)

"""Translation schemes over finite abelian groups and their duals.

For connection sets ``N_0 = {1}, N_1, ..., N_d`` partitioning ``X``, the pair
``(x, y)`` lies in ``R_i`` when ``y x^-1`` is in ``N_i``.  The characters are
common eigenvectors, so the eigen data comes in closed form: the eigenvalue of
``A_i`` on the character vector of ``eps`` is ``sum_{z in N_i} conj(eps(z))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInput, ValidationError
from .groups import AbelianGroup, Character, GroupElement, dual_group
from .schemes import DEFAULT_TOL, Scheme, _with_eigen_data, max_abs, scheme_from_relations


@dataclass(frozen=True, eq=False)
class TranslationScheme:
    group: AbelianGroup
    connection_sets: tuple[tuple[GroupElement, ...], ...]
    scheme: Scheme
    eigen_classes: tuple[tuple[Character, ...], ...]

    @property
    def d(self) -> int:
        return self.scheme.d

    @property
    def P(self) -> np.ndarray:
        return self.scheme.P

    @property
    def Q(self) -> np.ndarray:
        return self.scheme.Q


def character_vectors(g: AbelianGroup) -> np.ndarray:
    """Columns are the unit vectors ``|X|^-1/2 sum_x conj(eps(x)) e_x``."""
    return np.conj(g.character_table).T / np.sqrt(g.size)


def _connection_sets(g: AbelianGroup, sets) -> tuple[tuple[GroupElement, ...], ...]:
    problems = []
    canon = []
    for k, s in enumerate(sets):
        try:
            canon.append(tuple(sorted(g.element(x) for x in s)))
        except Exception as exc:  # noqa: BLE001 - reported as a validation failure
            raise InvalidInput(f"class {k}: {exc}") from exc
    seen: dict[GroupElement, int] = {}
    for k, s in enumerate(canon):
        for x in s:
            if x in seen:
                problems.append(("not-a-partition", f"element {list(x)} in classes {seen[x]} and {k}"))
            seen[x] = k
    missing = [x for x in g.elements if x not in seen]
    if missing:
        problems.append(("not-a-partition", f"elements {[list(x) for x in missing]} in no class"))
    if any(len(s) == 0 for s in canon):
        problems.append(("not-a-partition", "empty class"))
    if not canon or canon[0] != (g.identity,):
        problems.append(("identity-class", "class 0 must be exactly {identity}"))
    if problems:
        raise ValidationError(problems)
    return tuple(canon)


def _relations(g: AbelianGroup, sets) -> list[np.ndarray]:
    label = np.empty(g.size, dtype=np.int64)
    for k, s in enumerate(sets):
        for x in s:
            label[g.index(x)] = k
    # R[x, y] = label of y x^-1
    diff = label[g.difference_table.T]
    return [(diff == k).astype(np.int64) for k in range(len(sets))]


def _eigenvalues(g: AbelianGroup, sets) -> np.ndarray:
    """``lam[c, i]``: eigenvalue of ``A_i`` on character number ``c``."""
    K = g.character_table
    lam = np.empty((g.size, len(sets)), dtype=complex)
    for i, s in enumerate(sets):
        cols = [g.index(z) for z in s]
        lam[:, i] = np.conj(K[:, cols]).sum(axis=1)
    return lam


def _group_characters(lam: np.ndarray, tol: float) -> list[list[int]]:
    """Group character indices by eigenvalue vector, first occurrence order."""
    classes: list[list[int]] = []
    keys: list[np.ndarray] = []
    for c, row in enumerate(lam):
        for k, key in enumerate(keys):
            if np.max(np.abs(row - key)) <= tol:
                classes[k].append(c)
                break
        else:
            keys.append(row)
            classes.append([c])
    return classes


def _spectral_data(g: AbelianGroup, s: Scheme, sets, tol, row_targets=None):
    lam = _eigenvalues(g, sets)
    classes = _group_characters(lam, tol)
    d = s.d
    if len(classes) != d + 1:
        raise ValidationError([(
            "eigen-classes",
            f"characters fall into {len(classes)} eigenvalue classes, expected {d + 1}")])
    if row_targets is not None:
        # put class j where its eigenvalue vector equals row j of the target
        order = []
        for target in row_targets:
            hits = [k for k, cls in enumerate(classes) if np.max(np.abs(lam[cls[0]] - target)) <= tol]
            if len(hits) != 1:
                raise ValidationError([("eigen-classes", "dual eigenvalues do not match Q")])
            order.append(hits[0])
        classes = [classes[k] for k in order]
    if classes[0] != [g.index(g.identity)]:
        raise ValidationError([("eigen-classes", "trivial character is not alone in its class")])
    P = np.array([lam[cls[0]] for cls in classes])
    vecs = character_vectors(g)
    E = [vecs[:, cls] @ vecs[:, cls].conj().T for cls in classes]
    chars = tuple(tuple(g.elements[c] for c in cls) for cls in classes)
    return chars, E, P


def eigen_data(ts: TranslationScheme):
    """Return ``(P, Q, idempotents)``."""
    s = ts.scheme
    return s.P, s.Q, s.idempotents


def translation_scheme(g: AbelianGroup, sets: Sequence, tol: float = DEFAULT_TOL,
                       eigen_classes: Sequence | None = None) -> TranslationScheme:
    """Build the translation scheme with the given connection sets.

    Character classes are ordered with the trivial character first, then by
    first occurrence in the lexicographic character enumeration, unless
    ``eigen_classes`` fixes another order (it must be the same partition).
    """
    sets = _connection_sets(g, sets)
    s = scheme_from_relations(_relations(g, sets))
    chars, E, P = _spectral_data(g, s, sets, tol)
    if eigen_classes is not None:
        want = [frozenset(g.element(x) for x in c) for c in eigen_classes]
        have = [frozenset(c) for c in chars]
        if sorted(map(sorted, want)) != sorted(map(sorted, have)) or want[0] != have[0]:
            raise ValidationError([("eigen-classes", "given character classes are not the eigenspace partition")])
        perm = [have.index(c) for c in want]
        chars = tuple(tuple(sorted(c)) for c in want)
        E = [E[k] for k in perm]
        P = P[perm]
    Q = g.size * np.linalg.inv(P)
    s = _with_eigen_data(s, E, P, Q, tol)
    return TranslationScheme(g, sets, s, chars)


def dual_scheme(ts: TranslationScheme, tol: float = DEFAULT_TOL) -> TranslationScheme:
    """The dual scheme on the character group.

    Connection set ``i`` is the character class ``X*_i``.  The idempotents are
    taken as ``E*_i = |X|^-1 sum_j P[j, i] A*_j`` so that ``P* = Q`` and
    ``Q* = P`` index-for-index, then checked to be idempotents.
    """
    g, n = ts.group, ts.group.size
    gd = dual_group(g)
    sets = _connection_sets(gd, ts.eigen_classes)
    s = scheme_from_relations(_relations(gd, sets))
    P, Q = ts.P, ts.Q
    E = [sum(P[j, i] * s.relations[j] for j in range(s.d + 1)) / n for i in range(s.d + 1)]
    chars, E_spec, P_dual = _spectral_data(gd, s, sets, tol, row_targets=Q)
    for i in range(s.d + 1):
        if max_abs(E[i] - E_spec[i]) > tol:
            raise ValidationError([("dual", f"E*_{i} disagrees with its character projector")])
    if max_abs(P_dual - Q) > tol * n:
        raise ValidationError([("dual", "P* != Q")])
    s = _with_eigen_data(s, E, Q, P, tol)
    return TranslationScheme(gd, sets, s, chars)

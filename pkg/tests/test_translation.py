import itertools

import numpy as np
import pytest

from scaffolds import ValidationError, dual_scheme, eigen_data, make_abelian_group, translation_scheme
from scaffolds.groups import multiply
from scaffolds.translation import character_vectors


def z(n, classes):
    return translation_scheme(make_abelian_group([n]), [[(x,) for x in c] for c in classes])


def test_cycle4():
    ts = z(4, [[0], [1, 3], [2]])
    A1 = ts.scheme.relations[1]
    assert np.array_equal(A1 @ A1, 2 * ts.scheme.relations[0] + 2 * ts.scheme.relations[2])
    P, Q, E = eigen_data(ts)
    assert np.max(np.abs(P - [[1, 2, 1], [1, 0, -1], [1, -2, 1]])) < 1e-12
    assert np.max(np.abs(Q - P)) < 1e-9


def test_hamming_22():
    g = make_abelian_group([2, 2])
    ts = translation_scheme(g, [[(0, 0)], [(0, 1), (1, 0)], [(1, 1)]])
    # relation k holds between x and y when they differ in k coordinates
    for a, x in enumerate(g.elements):
        for b, y in enumerate(g.elements):
            dist = sum(u != v for u, v in zip(x, y))
            assert ts.scheme.relations[dist][a, b] == 1


@pytest.mark.parametrize("classes,tag", [
    ([[0], [1], [2, 3]], "AS3"),
    ([[0], [1, 3]], "not-a-partition"),
    ([[0], [1, 3], [2, 3]], "not-a-partition"),
    ([[1], [0, 3], [2]], "identity-class"),
])
def test_bad_connection_sets(classes, tag):
    with pytest.raises(ValidationError) as info:
        z(4, classes)
    assert tag in info.value.tags


def test_fusion_that_is_not_a_scheme():
    # the inverse of 1 is 5, which sits in the other class
    with pytest.raises(ValidationError):
        z(6, [[0], [1, 2], [3, 4, 5]])


def test_translation_invariance(schemes):
    for ts in schemes.values():
        g = ts.group
        for A in ts.scheme.relations:
            for zz in g.elements:
                perm = [g.index(multiply(g, x, zz)) for x in g.elements]
                assert np.array_equal(A[np.ix_(perm, perm)], A)


def test_first_row_is_valencies(schemes):
    for ts in schemes.values():
        assert np.array_equal(ts.P[0].real, [len(s) for s in ts.connection_sets])


def test_p_by_eigenvalue_sum(schemes):
    # apply A_i to each character vector and read off the eigenvalue directly
    for ts in schemes.values():
        vecs = character_vectors(ts.group)
        for j, cls in enumerate(ts.eigen_classes):
            for eps in cls:
                v = vecs[:, ts.group.index(eps)]
                for i, A in enumerate(ts.scheme.relations):
                    assert np.max(np.abs(A @ v - ts.P[j, i] * v)) < 1e-9


def test_eigen_class_order(schemes):
    for ts in schemes.values():
        g = ts.group
        assert ts.eigen_classes[0] == (g.identity,)
        firsts = [g.index(cls[0]) for cls in ts.eigen_classes[1:]]
        assert firsts == sorted(firsts)


def test_multiplicities(schemes):
    for ts in schemes.values():
        for cls, E in zip(ts.eigen_classes, ts.scheme.idempotents):
            assert abs(np.trace(E) - len(cls)) < 1e-9


@pytest.mark.parametrize("name", ["z4-cycle", "h22", "z3-complete"])
def test_self_dual_examples(schemes, duals, name):
    assert np.max(np.abs(duals[name].P - schemes[name].P)) < 1e-9


def test_dual_eigenmatrices(schemes, duals):
    for name, ts in schemes.items():
        du = duals[name]
        assert np.max(np.abs(du.P - ts.Q)) < 1e-9
        assert np.max(np.abs(du.Q - ts.P)) < 1e-9
        E = du.scheme.idempotents
        for i, j in itertools.product(range(du.d + 1), repeat=2):
            assert np.max(np.abs(E[i] @ E[j] - (i == j) * E[i])) < 1e-9


def test_double_dual_parameters(schemes, duals):
    for name, ts in schemes.items():
        dd = dual_scheme(duals[name])
        assert np.max(np.abs(dd.P - ts.P)) < 1e-9


def test_dual_of_nonsymmetric(schemes, duals):
    # z7-cubic has complex eigenvalues; its dual must still satisfy P* = Q
    du = duals["z7-cubic"]
    assert np.max(np.abs(schemes["z7-cubic"].P.imag)) > 0.5
    assert np.max(np.abs(du.P - schemes["z7-cubic"].Q)) < 1e-9


def test_explicit_eigen_class_order(schemes, duals):
    ts = schemes["z6-cycle"]
    classes = [list(c) for c in ts.eigen_classes]
    swapped = [classes[0], classes[2], classes[1], classes[3]]
    other = translation_scheme(ts.group, ts.connection_sets, eigen_classes=swapped)
    assert np.max(np.abs(other.P - ts.P[[0, 2, 1, 3]])) < 1e-12
    du = duals["z7-cubic"]
    again = translation_scheme(du.group, du.connection_sets, eigen_classes=du.eigen_classes)
    assert np.max(np.abs(again.P - du.P)) < 1e-9
    with pytest.raises(ValidationError):
        translation_scheme(ts.group, ts.connection_sets, eigen_classes=[classes[1], classes[0]] + classes[2:])
    with pytest.raises(ValidationError):
        translation_scheme(ts.group, ts.connection_sets, eigen_classes=[[(0,)], [(1,), (2,)], [(3,)], [(4,), (5,)]])

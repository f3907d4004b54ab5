"""
Association schemes from connection sets
========================================

Build the 4-cycle scheme on Z4, look at its parameters, and check that its
dual on the character group has the eigenmatrices swapped.
"""
import numpy as np

from scaffolds import (
    check_p_polynomial,
    check_q_polynomial,
    dual_scheme,
    intersection_numbers,
    krein_parameters,
    make_abelian_group,
    translation_scheme,
)

np.set_printoptions(precision=4, suppress=True)

# R_i holds between x and y when y - x lies in the i-th connection set
z4 = make_abelian_group([4])
ts = translation_scheme(z4, [[(0,)], [(1,), (3,)], [(2,)]])
A0, A1, A2 = ts.scheme.relations
print("A_1 =\n", A1)

# A_1^2 = 2 A_0 + 2 A_2: walks of length two either come back or go across
p = intersection_numbers(ts.scheme)
print("p_11^k for k = 0, 1, 2:", p[1, 1])

# eigenvalues of each A_i on each character class, and the inverse change of basis
print("P =\n", np.round(ts.P.real, 12) + 0.0)
print("Q =\n", np.round(ts.Q.real, 12) + 0.0)
print("PQ =\n", np.round((ts.P @ ts.Q).real, 12) + 0.0)

q = krein_parameters(ts.scheme)
print("q tensor equals p tensor:", np.allclose(q.values, p.values))
print("P-polynomial:", check_p_polynomial(ts.scheme), " Q-polynomial:", check_q_polynomial(ts.scheme))

# swapping A_1 and A_2 breaks the metric ordering
swapped = ts.scheme.reordered([0, 2, 1], [0, 2, 1])
print("after swapping classes 1 and 2:", check_p_polynomial(swapped), check_q_polynomial(swapped))

# the dual lives on characters; its connection sets are the eigenvalue classes
du = dual_scheme(ts)
print("character classes:", du.connection_sets)
print("P* == Q:", np.allclose(du.P, ts.Q), " Q* == P:", np.allclose(du.Q, ts.P))

# a scheme with complex eigenvalues: the cubic residues mod 7
z7 = translation_scheme(make_abelian_group([7]), [[(0,)], [(1,), (2,), (4,)], [(3,), (5,), (6,)]])
print("Z7 cubic residues, P =\n", z7.P)
print("dual P equals Q:", np.allclose(dual_scheme(z7).P, z7.Q))

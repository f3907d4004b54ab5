"""
Why the node-count scalars and the clockwise roots matter
=========================================================

Two small identities between scaffolds.  In the first, an A_0 edge is
contracted away; the duals only agree after weighting each side by |X| to
its number of nodes.  In the second, the same path is drawn with its roots in
two different orders; the primal tensors agree after swapping two axes, but
the duals do not.
"""
import numpy as np

from scaffolds import catalog, dual_diagram, dual_scheme, dualize_combination, eval_elimination

ts = catalog.scheme("h22")
du = dual_scheme(ts)
n = ts.group.size

lhs, rhs = catalog.ex21_lhs(1, 2), catalog.ex21_rhs(1, 2)
S_l, S_r = (eval_elimination(x, ts.scheme).entries for x in (lhs, rhs))
print("primal sides equal:", np.allclose(S_l, S_r))

# dualize S_l - S_r = 0 term by term
(a, dl), (b, dr) = dualize_combination([(1, lhs), (-1, rhs)], n)
print(f"dual coefficients: {a.real:g} and {b.real:g}")
T = a * eval_elimination(dl, du.scheme).entries + b * eval_elimination(dr, du.scheme).entries
print("weighted dual combination vanishes:", np.allclose(T, 0))
T = eval_elimination(dl, du.scheme).entries - eval_elimination(dr, du.scheme).entries
print("without the weights it does not:", not np.allclose(T, 0))

# the same path, roots read in two orders
ts = catalog.scheme("z4-cycle")
du = dual_scheme(ts)
left, right = catalog.ex23_lhs(1, 0, 1), catalog.ex23_rhs(1, 0, 1)
P_l = eval_elimination(left, ts.scheme).entries
P_r = eval_elimination(right, ts.scheme).entries
print("primal tensors agree after swapping the last two axes:", np.array_equal(P_l, P_r.swapaxes(2, 3)))
D_l = eval_elimination(dual_diagram(left), du.scheme).entries
D_r = eval_elimination(dual_diagram(right), du.scheme).entries
print("max difference between the duals:", np.max(np.abs(D_l - D_r)))

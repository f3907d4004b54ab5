"""
The duality for translation schemes, step by step
=================================================

For a planar scaffold S over a translation scheme on X, expand S in the
character basis, spread each coefficient over the |X| tuples that differ by
consecutive quotients, and compare against the dual scaffold evaluated on the
dual scheme.  The two agree up to |X|^(n - l/2 - 1/2).
"""
import numpy as np

from scaffolds import (
    apply_psi,
    catalog,
    character_coefficients,
    dual_diagram,
    dual_scheme,
    eval_elimination,
    gamma_residual,
    verify_duality,
)
from scaffolds.duality import scalar_factor

ts = catalog.scheme("z5-paley")
du = dual_scheme(ts)
d = catalog.fig1_for(ts.d)
n = ts.group.size

S = eval_elimination(d, ts.scheme)
print(f"order {S.ell} scaffold over |X| = {n}, norm {S.norm:.4f}")

# coefficients vanish unless the characters multiply to the trivial one
C = character_coefficients(S, ts.group)
print("mass off the product-trivial tuples:", gamma_residual(C))
print("nonzero coefficients:", np.count_nonzero(np.abs(C.entries) > 1e-9), "of", C.entries.size)

lhs = apply_psi(C)
print("Psi preserves the norm:", np.isclose(lhs.norm, C.norm))

S_dag = eval_elimination(dual_diagram(d), du.scheme)
c = scalar_factor(d.n, d.ell, n)
print(f"scalar |X|^(n - l/2 - 1/2) = {n}^{d.n - d.ell / 2 - 0.5} = {c:g}")
print("max |Psi(S) - c S_dagger| =", np.max(np.abs(lhs.entries - c * S_dag.entries)))

# the same check packaged, over every catalog scheme
for name in catalog.SCHEMES:
    ts = catalog.scheme(name)
    r = verify_duality(catalog.fig1_for(ts.d), ts)
    print(f"{name:12s} pass={r.passed} residual={r.residual:.1e}")

"""Tour of trace forms on the permutation-invariant family.

Run: python3 demos/curvature_tour.py
"""
from fractions import Fraction

import numpy as np

import tracealg as ta

F = Fraction

n = 5
for alpha in (F(0), F(1, 2), F(-1, n - 1), F(1, 3)):
    A = ta.talg(n, alpha)
    tau = A.killing_form()
    ric = A.ricci_form()
    ok_tau, _ = A.is_invariant(tau)
    ok_ric, _ = A.is_invariant(ric)
    p, m, z = ric.inertia()
    print("alpha = %6s  exact=%s  tau-invariant=%s  ric-invariant=%s  "
          "ric inertia (+,-,0) = (%d,%d,%d)"
          % (alpha, A.is_exact(), ok_tau, ok_ric, p, m, z))

# the exact member is the simplicial algebra: constant sectional value
E = ta.simplicial(4)
ok, kappa, err = ta.constant_sect_check(E)
assert ok and err == 0
print("\nsimplicial(4): constant sectional value", kappa)

# its idempotent geometry: 2^n - 1 rays, exact norms
data = ta.simplicial_idempotents(4)
print("idempotent + square-zero rays:", data["count"])
for v in data["idempotents"][:3]:
    v = np.asarray(v)
    print("  |e|^2 =", E.h(v, v))

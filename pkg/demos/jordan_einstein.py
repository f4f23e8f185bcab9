"""Traceless Hermitian Jordan algebras are Einstein: ric = kappa * tau.

Run: python3 demos/jordan_einstein.py
"""
import tracealg as ta
from tracealg.core import einstein_fit

for n, level, label in ((3, 1, "3x3 real"), (4, 1, "4x4 real"),
                        (3, 2, "3x3 complex"), (3, 4, "3x3 quaternion"),
                        (3, 8, "3x3 octonion")):
    A = ta.herm0(n, level)
    kappa, residual = einstein_fit(A)
    assert residual == 0
    print("%-16s dim %2d   kappa = %s" % (label, A.dim, kappa))

# the degenerate small case: vanishing Killing form
from tracealg.linalg import max_abs
import numpy as np
B = ta.herm0(2, 2)
print("\n2x2 complex traceless: max |tau| =",
      max_abs(np.asarray(B.killing_form().gram)))

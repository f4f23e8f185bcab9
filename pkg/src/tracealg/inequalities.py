"""Commutator norm inequalities for matrix algebras and Lie algebras."""
import numpy as np
from scipy import optimize

from . import hurwitz, linalg
from .hurwitz import frobenius, hmat_commutator
from .linalg import RATIONAL, backend_of


def cdk_residual(X, Y, level):
    """Residual of 2 (|X|^2 |Y|^2 - f(X,Y)^2) >= |[X,Y]|^2 for Hermitian
    X, Y in the Frobenius pairing f; nonnegative on the proved domain."""
    C = hmat_commutator(X, Y, level)
    return (2 * (frobenius(X, X) * frobenius(Y, Y) - frobenius(X, Y) ** 2)
            - frobenius(C, C))


bw_residual = cdk_residual


def bw_reduction_check(X, Y, level):
    """Residual of [P, Q] = 2 |X| |Y| [X, Y] for P = |Y|X - |X|Y,
    Q = |Y|X + |X|Y (float)."""
    Xf = linalg.to_float(X)
    Yf = linalg.to_float(Y)
    nx = np.sqrt(float(frobenius(Xf, Xf)))
    ny = np.sqrt(float(frobenius(Yf, Yf)))
    P = ny * Xf - nx * Yf
    Q = ny * Xf + nx * Yf
    lhs = hmat_commutator(P, Q, level)
    rhs = 2 * nx * ny * hmat_commutator(Xf, Yf, level)
    return linalg.max_abs(lhs - rhs)


def bw_lie_estimate(lie_alg, samples=2000, ascent=200, seed=0):
    """Estimate sup -B([x,y],[x,y]) / (B(x,x)B(y,y) - B(x,y)^2) for a Lie
    algebra whose Killing form B is negative definite.

    Random sampling followed by local ascent; returns a BoundEstimate
    dict {"value", "witness", "seed"}."""
    B = lie_alg.killing_form()
    p, m, z = B.inertia()
    assert p == 0 and z == 0, "Killing form must be negative definite"
    n = lie_alg.dim
    mf = linalg.to_float(lie_alg.structure)
    Gf = linalg.to_float(B.gram)
    rng = np.random.default_rng(seed)

    def ratio(zv):
        x, y = zv[:n], zv[n:]
        c = y @ np.tensordot(x, mf, axes=(0, 0))
        bx = x @ Gf @ x
        by = y @ Gf @ y
        den = bx * by - (x @ Gf @ y) ** 2
        # near-degenerate planes amplify cancellation error in den
        if den < 1e-7 * abs(bx * by) or den < 1e-12:
            return 0.0
        return -(c @ Gf @ c) / den

    best_val, best_z = -np.inf, None
    for _ in range(samples):
        zv = rng.standard_normal(2 * n)
        v = ratio(zv)
        if v > best_val:
            best_val, best_z = v, zv
    res = optimize.minimize(lambda zv: -ratio(zv), best_z, method="Powell",
                            options={"maxiter": ascent * 2 * n,
                                     "xtol": 1e-12, "ftol": 1e-14})
    if -res.fun > best_val:
        best_val, best_z = -res.fun, res.x
    return {"value": float(best_val), "witness": best_z.tolist(), "seed": seed}

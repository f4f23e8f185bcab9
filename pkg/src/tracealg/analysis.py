"""Sectional quantities, associativity defects and numeric searches."""
from fractions import Fraction

import numpy as np
from scipy import optimize

from . import linalg
from .core import MetrizedAlgebra
from .catalog import gamma_vectors, triple_embeddings
from .linalg import EPS0, EPS_DEDUP, FLOAT, RATIONAL, is_zero, max_abs, zeros


def make_report(predicate, verdict, residual, witnesses=None, seed=None):
    return {"schema": 1, "predicate": predicate, "verdict": bool(verdict),
            "residual": residual if isinstance(residual, (int, float)) else float(residual),
            "witnesses": witnesses or [], "seed": seed}


def sect(alg, x, y, form=None):
    """Sectional value of the plane spanned by x, y (undefined on
    degenerate planes)."""
    h = alg.form if form is None else form
    num = h.apply(alg.multiply(x, x), alg.multiply(y, y)) \
        - h.norm2(alg.multiply(x, y))
    den = h.norm2(x) * h.norm2(y) - h.apply(x, y) ** 2
    return num / den


def isect(alg, x, y, tau=None):
    """Sectional value w.r.t. the Killing form (scale invariant)."""
    if tau is None:
        tau = alg.killing_form()
    return sect(alg, x, y, form=tau)


def _ric_scal(alg):
    H = alg.gram
    R = alg.ricci_form().gram
    scal = np.trace(linalg.inv(H, alg.backend) @ R)
    return R, scal


def conformal_tensor(alg):
    """Trace-adjusted curvature-type tensor w[i,j,k,l]; identically zero
    iff the algebra is conformally associative (dim > 3)."""
    n = alg.dim
    assert n >= 3
    m, H = alg.structure, alg.gram
    R, scal = _ric_scal(alg)
    hp = np.tensordot(np.tensordot(m, H, axes=(2, 0)), m, axes=(2, 2))
    # hp[i,j,k,l] = h(e_i e_j, e_k e_l)
    w = zeros((n, n, n, n), alg.backend)
    nn = Fraction(n) if alg.backend == RATIONAL else float(n)
    c1 = 1 / (nn - 2)
    c2 = scal / ((nn - 1) * (nn - 2))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    w[i, j, k, l] = (hp[j, k, i, l] - hp[k, i, l, j]
                                     + c1 * (R[i, k] * H[j, l] - R[j, k] * H[i, l]
                                             - R[i, l] * H[j, k] + R[j, l] * H[i, k])
                                     + c2 * (H[i, l] * H[j, k] - H[j, l] * H[i, k]))
    return w


def is_conformally_associative(alg, tol=EPS0):
    """Returns (verdict, max residual); dims <= 3 are conformally
    associative by convention."""
    if alg.dim <= 2:
        return True, 0
    w = conformal_tensor(alg)
    err = max_abs(w)
    if alg.dim == 3:
        return True, err
    ok = err == 0 if alg.backend == RATIONAL else err <= tol * max(1.0, max_abs(alg.gram) ** 2)
    return ok, err


def is_projectively_associative(alg, tol=EPS0):
    """Check [x,y,z] = c(y,z) x - c(x,y) z with c = -ric/(dim-1) on basis
    triples, plus the cyclic commutator identity it implies."""
    n = alg.dim
    denom = Fraction(n - 1) if alg.backend == RATIONAL else float(n - 1)
    C = -alg.ricci_form().gram / denom
    err = 0
    basis = [alg.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = alg.associator(basis[i], basis[j], basis[k])
                rhs = C[j, k] * basis[i] - C[i, j] * basis[k]
                err = max(err, max_abs(lhs - rhs))
    Ls = [alg.left_mult_matrix(b) for b in basis]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                M = (Ls[i] @ Ls[j] - Ls[j] @ Ls[i]) @ Ls[k] \
                    + (Ls[j] @ Ls[k] - Ls[k] @ Ls[j]) @ Ls[i] \
                    + (Ls[k] @ Ls[i] - Ls[i] @ Ls[k]) @ Ls[j]
                err = max(err, max_abs(M))
    ok = err == 0 if alg.backend == RATIONAL else err <= tol * max(1.0, max_abs(alg.structure) ** 3)
    return ok, err


def constant_sect_check(alg, kappa=None, tol=EPS0):
    """Check [x,y,z] = kappa (h(x,y) z - h(y,z) x) on basis triples.

    If kappa is None it is inferred from ric = kappa (dim-1) h at the
    first anisotropic diagonal entry.  Returns (verdict, kappa, residual).
    """
    n = alg.dim
    H = alg.gram
    if kappa is None:
        R = alg.ricci_form().gram
        k0 = next(i for i in range(n) if not is_zero(H[i, i], alg.backend, tol))
        denom = (Fraction(n - 1) if alg.backend == RATIONAL else float(n - 1))
        kappa = R[k0, k0] / (denom * H[k0, k0])
    basis = [alg.basis_vector(i) for i in range(n)]
    err = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = alg.associator(basis[i], basis[j], basis[k])
                rhs = kappa * (H[i, j] * basis[k] - H[j, k] * basis[i])
                err = max(err, max_abs(lhs - rhs))
    ok = err == 0 if alg.backend == RATIONAL else err <= tol * max(1.0, max_abs(H))
    return ok, kappa, err


def talg_idempotents(n, alpha):
    """Closed-form idempotents and square-zero rays of talg(n, alpha)."""
    alpha = Fraction(alpha)
    idems, szeros = [], []
    for mask in range(1, 2 ** n):
        I = [i for i in range(n) if mask >> i & 1]
        eI = zeros(n, RATIONAL)
        for i in I:
            eI[i] = Fraction(1)
        d = 1 - 2 * alpha + 2 * alpha * len(I)
        if d == 0:
            szeros.append(eI)
        else:
            idems.append(eI / d)
    return {"idempotents": idems, "szero_rays": szeros,
            "count": len(idems) + len(szeros)}


def simplicial_idempotents(n):
    """Closed-form nonzero idempotents and square-zero rays of ealg(n).

    sigma_I = (n-1)/(n+1-2|I|) gamma_I over subsets of {0..n} modulo
    complements; subsets with 2|I| = n+1 give square-zero rays.
    """
    gs = gamma_vectors(n)
    idems, szeros = [], []
    seen = set()
    for mask in range(1, 2 ** (n + 1) - 1):
        comp = (2 ** (n + 1) - 1) ^ mask
        if comp in seen:
            continue
        seen.add(mask)
        I = [i for i in range(n + 1) if mask >> i & 1]
        gI = sum(gs[i] for i in I)
        if 2 * len(I) == n + 1:
            szeros.append(gI)
        else:
            idems.append(Fraction(n - 1, n + 1 - 2 * len(I)) * gI)
    return {"idempotents": idems, "szero_rays": szeros,
            "count": len(idems) + len(szeros)}


def _dedup(points, found, tol):
    for p in found:
        if np.max(np.abs(p - points)) <= tol:
            return True
    return False


def newton_idempotents(alg, trials, seed, tol=1e-12, dedup=EPS_DEDUP, radius=3.0):
    """Numeric enumeration of nonzero idempotents (those found; no
    completeness claim)."""
    n = alg.dim
    m = linalg.to_float(alg.structure)
    rng = np.random.default_rng(seed)
    found = []
    I = np.eye(n)
    for _ in range(trials):
        x = rng.uniform(-radius, radius, n)
        for _ in range(60):
            t = np.tensordot(x, m, axes=(0, 0))
            F = x @ t - x
            if np.max(np.abs(F)) < tol:
                break
            J = 2 * t.T - I
            try:
                x = x - np.linalg.solve(J, F)
            except np.linalg.LinAlgError:
                break
            if not np.all(np.isfinite(x)) or np.max(np.abs(x)) > 1e6:
                break
        else:
            continue
        t = np.tensordot(x, m, axes=(0, 0))
        if np.max(np.abs(x @ t - x)) < tol and np.max(np.abs(x)) > 1e-6:
            if not _dedup(x, found, dedup):
                found.append(x.copy())
    return found


def square_zero_rays(alg, trials, seed, tol=1e-10, dedup=EPS_DEDUP):
    """Numeric enumeration of square-zero rays, normalized to unit length
    with the first sizeable coordinate positive."""
    n = alg.dim
    m = linalg.to_float(alg.structure)
    rng = np.random.default_rng(seed)
    found = []
    for _ in range(trials):
        x = rng.standard_normal(n)
        x /= np.linalg.norm(x)
        ok = False
        for _ in range(80):
            t = np.tensordot(x, m, axes=(0, 0))
            F = np.concatenate([x @ t, [x @ x - 1.0]])
            if np.max(np.abs(F)) < tol:
                ok = True
                break
            J = np.vstack([2 * t.T, 2 * x])
            dx, *_ = np.linalg.lstsq(J, F, rcond=None)
            x = x - dx
            if not np.all(np.isfinite(x)):
                break
        if not ok:
            continue
        k = next(i for i in range(n) if abs(x[i]) > 1e-6)
        z = x / np.linalg.norm(x)
        if z[k] < 0:
            z = -z
        if not _dedup(z, found, dedup):
            found.append(z)
    return found


def orth_spectrum(alg, e, tol=EPS0):
    """Eigenvalues of L(e) on the metric-orthocomplement of e, ascending."""
    Ge = linalg.to_float(alg.gram) @ linalg.to_float(e)
    C = linalg.nullspace(Ge.reshape(1, -1), FLOAT, tol)
    L = linalg.to_float(alg.left_mult_matrix(e))
    M, *_ = np.linalg.lstsq(C, L @ C, rcond=None)
    vals, has_complex = linalg.general_real_eigenvalues(M, 1e-7)
    return vals, has_complex


def group_spectrum(vals, tol=1e-6):
    groups = []
    for v in sorted(vals):
        if groups and abs(v - groups[-1][0] * 1.0) <= tol:
            groups[-1][1] += 1
        else:
            groups.append([v, 1])
    return [(v, m) for v, m in groups]


def _sect_objective(mf, Gf, bad=1e9):
    def f(z):
        n = len(z) // 2
        x, y = z[:n], z[n:]
        tx = np.tensordot(x, mf, axes=(0, 0))
        xx = x @ tx
        xy = y @ tx
        yy = y @ np.tensordot(y, mf, axes=(0, 0))
        den = (x @ Gf @ x) * (y @ Gf @ y) - (x @ Gf @ y) ** 2
        scale = max((x @ x) * (y @ y), 1e-300)
        if abs(den) < 1e-9 * scale:
            return bad
        return (xx @ Gf @ yy - xy @ Gf @ xy) / den
    return f


def sect_extremize(alg, seed, n_starts=40, maxiter=4000):
    """Numeric (min, max) estimate of sect over nondegenerate planes.

    Random multistart polished by derivative-free descent; finite
    precision, no global guarantee.  Returns a BoundEstimate dict.
    """
    n = alg.dim
    mf = linalg.to_float(alg.structure)
    Gf = linalg.to_float(alg.gram)
    f = _sect_objective(mf, Gf)
    rng = np.random.default_rng(seed)
    best = {}
    for sign in (1.0, -1.0):
        def obj(z, sign=sign):
            v = f(z)
            # degenerate-plane sentinel must stay penalized in both directions
            return 1e9 if abs(v) >= 1e8 else sign * v
        vals = []
        for _ in range(n_starts):
            z0 = rng.standard_normal(2 * n)
            res = optimize.minimize(obj, z0, method="Powell",
                                    options={"maxiter": maxiter,
                                             "xtol": 1e-12, "ftol": 1e-14})
            if res.fun < 1e8:
                vals.append((res.fun, res.x))
        vals.sort(key=lambda t: t[0])
        best[sign] = vals[0]
    lo = best[1.0]
    hi = best[-1.0]
    return {"lower": lo[0], "upper": -hi[0],
            "witnesses": [lo[1].tolist(), hi[1].tolist()], "seed": seed}


def complexified_special_elements_sect(alg, seed, trials=200, tol=1e-10):
    """Search pairs (a, b) coming from complexified square-zero elements
    (a a = b b, a b = 0) and idempotents (a a - b b = a, 2 a b = b);
    return the sect values of the found planes."""
    n = alg.dim
    mf = linalg.to_float(alg.structure)
    Gf = linalg.to_float(alg.gram)
    rng = np.random.default_rng(seed)
    sec = _sect_objective(mf, Gf)
    out = {"szero": [], "idem": []}

    def solve_system(Ffun, z0):
        z = z0.copy()
        for _ in range(80):
            F, J = Ffun(z)
            if np.max(np.abs(F)) < tol:
                return z
            dz, *_ = np.linalg.lstsq(J, F, rcond=None)
            z = z - dz
            if not np.all(np.isfinite(z)):
                return None
        return None

    def mul(x, y):
        return y @ np.tensordot(x, mf, axes=(0, 0))

    def Lm(x):
        return np.tensordot(x, mf, axes=(0, 0)).T

    for kind in ("szero", "idem"):
        for _ in range(trials):
            z0 = rng.standard_normal(2 * n)

            def Ffun(z):
                a, b = z[:n], z[n:]
                La, Lb = Lm(a), Lm(b)
                if kind == "szero":
                    F = np.concatenate([mul(a, a) - mul(b, b), mul(a, b),
                                        [a @ a - 1.0, b @ b - 1.0]])
                    J = np.block([[2 * La, -2 * Lb], [Lb, La]])
                    J = np.vstack([J, np.concatenate([2 * a, 0 * b]),
                                   np.concatenate([0 * a, 2 * b])])
                else:
                    F = np.concatenate([mul(a, a) - mul(b, b) - a,
                                        2 * mul(a, b) - b])
                    J = np.block([[2 * La - np.eye(n), -2 * Lb],
                                  [2 * Lb, 2 * La - np.eye(n)]])
                return F, J

            z = solve_system(Ffun, z0)
            if z is None:
                continue
            a, b = z[:n], z[n:]
            den = (a @ Gf @ a) * (b @ Gf @ b) - (a @ Gf @ b) ** 2
            if abs(den) < 1e-8 * max(1.0, (a @ a) * (b @ b)):
                continue
            if np.linalg.norm(a) < 1e-6 or np.linalg.norm(b) < 1e-6:
                continue
            out[kind].append(sec(z))
            if len(out[kind]) >= 10:
                break
    return out


def deunit_sect_shift_check(unital_alg, seed, trials=50, tol=EPS0):
    """Check g(e,e) sect_B(x,y) = sect_A(x,y) + 1 for planes in the
    deunitalization A of a unital metrized algebra B; returns max residual."""
    from .core import deunitalization
    A = deunitalization(unital_alg)
    E = linalg.to_float(A.embedding)
    gee = float(unital_alg.h(unital_alg.find_unit(), unital_alg.find_unit()))
    mB = linalg.to_float(unital_alg.structure)
    GB = linalg.to_float(unital_alg.gram)
    mA = linalg.to_float(A.structure)
    GA = linalg.to_float(A.gram)
    fB = _sect_objective(mB, GB)
    fA = _sect_objective(mA, GA)
    rng = np.random.default_rng(seed)
    err = 0.0
    k = A.dim
    for _ in range(trials):
        x = rng.standard_normal(k)
        y = rng.standard_normal(k)
        sA = fA(np.concatenate([x, y]))
        sB = fB(np.concatenate([E @ x, E @ y]))
        if sA > 1e8 or sB > 1e8:
            continue
        err = max(err, abs(gee * sB - (sA + 1.0)))
    return err


def triple_sect_relations_check(base_alg, seed, trials=30):
    """Verify the five sectional-value relations between a metrized algebra
    (with its Killing form) and its triple construction; returns max residual."""
    from .catalog import triple
    tau = base_alg.killing_form()
    T = triple(MetrizedAlgebra(base_alg.structure, tau.gram, base_alg.symmetry,
                               base_alg.backend))
    n = base_alg.dim
    emb = triple_embeddings(n, FLOAT)
    tauT = T.killing_form()
    mT = linalg.to_float(T.structure)
    GT = linalg.to_float(tauT.gram)
    fT = _sect_objective(mT, GT)
    mA = linalg.to_float(base_alg.structure)
    GA = linalg.to_float(tau.gram)
    fA = _sect_objective(mA, GA)
    rng = np.random.default_rng(seed)
    err = 0.0

    def mulA(x, y):
        return y @ np.tensordot(x, mA, axes=(0, 0))

    for _ in range(trials):
        x = rng.standard_normal(n)
        y = rng.standard_normal(n)
        sA = fA(np.concatenate([x, y]))
        if sA > 1e8:
            continue
        x2, y2, xy = mulA(x, x), mulA(y, y), mulA(x, y)
        nx2, ny2 = x @ GA @ x, y @ GA @ y
        txy = x @ GA @ y
        for i in range(3):
            gi = linalg.to_float(emb["gamma"][i + 1])
            ni = linalg.to_float(emb["nabla"][i + 1])
            err = max(err, abs(fT(np.concatenate([gi @ x, gi @ y])) - 2.0 / 3 * sA))
            err = max(err, abs(fT(np.concatenate([ni @ x, ni @ y])) - 0.5 * sA))
        for i, j in ((1, 2), (2, 3), (1, 3)):
            gi = linalg.to_float(emb["gamma"][i])
            gj = linalg.to_float(emb["gamma"][j])
            ni = linalg.to_float(emb["nabla"][i])
            nj = linalg.to_float(emb["nabla"][j])
            pred = -2.0 * ((x2 @ GA @ y2) + xy @ GA @ xy) / \
                (9.0 * nx2 * ny2 - txy ** 2)
            err = max(err, abs(fT(np.concatenate([gi @ x, gj @ y])) - pred))
            pred = -1.5 * (xy @ GA @ xy) / (4.0 * nx2 * ny2 - txy ** 2)
            err = max(err, abs(fT(np.concatenate([ni @ x, nj @ y])) - pred))
        d = linalg.to_float(emb["diag"])
        for i in (1, 2, 3):
            ni = linalg.to_float(emb["nabla"][i])
            pred = -(2.0 * (x2 @ GA @ y2) + xy @ GA @ xy) / (6.0 * nx2 * ny2)
            err = max(err, abs(fT(np.concatenate([d @ x, ni @ y])) - pred))
    return err

"""Finite dimensional commutative / anticommutative algebras with trace forms.

An algebra is a structure tensor m[i,j,k] (e_i e_j = sum_k m[i,j,k] e_k)
over the rational or float backend.  A metrized algebra additionally
carries a nondegenerate invariant symmetric bilinear form.
"""
import json
from fractions import Fraction

import numpy as np

from . import linalg
from .linalg import (EPS0, EPS_RANK, FLOAT, RATIONAL, SymBilinearForm, Subspace,
                     as_backend, backend_of, is_zero, max_abs, zeros)

COMMUTATIVE = "commutative"
ANTICOMMUTATIVE = "anticommutative"


class Algebra:
    def __init__(self, structure, symmetry=COMMUTATIVE, backend=None, name=""):
        if backend is None:
            backend = backend_of(structure)
        self.structure = as_backend(structure, backend)
        self.backend = backend
        self.symmetry = symmetry
        self.name = name
        n = self.structure.shape[0]
        assert self.structure.shape == (n, n, n)
        sign = 1 if symmetry == COMMUTATIVE else -1
        sym_err = max_abs(self.structure - sign * np.swapaxes(self.structure, 0, 1))
        tol = 0 if backend == RATIONAL else EPS0 * max(1.0, max_abs(self.structure))
        assert sym_err <= tol, "structure tensor has the wrong symmetry"

    @property
    def dim(self):
        return self.structure.shape[0]

    def basis_vector(self, i):
        v = zeros(self.dim, self.backend)
        v[i] = Fraction(1) if self.backend == RATIONAL else 1.0
        return v

    def multiply(self, x, y):
        t = np.tensordot(np.asarray(x), self.structure, axes=(0, 0))
        return np.tensordot(np.asarray(y), t, axes=(0, 0))

    def left_mult_matrix(self, x):
        return np.tensordot(np.asarray(x), self.structure, axes=(0, 0)).T

    def trace_linear(self):
        """Vector t with tr L(x) = t . x."""
        return np.trace(self.structure, axis1=1, axis2=2)

    def is_exact(self, tol=EPS0):
        t = self.trace_linear()
        if self.backend == RATIONAL:
            return all(v == 0 for v in t)
        return max_abs(t) <= tol

    def killing_form(self):
        Ls = [self.left_mult_matrix(self.basis_vector(i)) for i in range(self.dim)]
        g = zeros((self.dim, self.dim), self.backend)
        for i in range(self.dim):
            for j in range(i + 1):
                v = np.sum(Ls[i] * Ls[j].T)
                g[i, j] = v
                g[j, i] = v
        return SymBilinearForm(g, self.backend)

    def ricci_form(self):
        """ric(x, y) = tr L(x y) - tau(x, y)."""
        t = self.trace_linear()
        g = np.tensordot(self.structure, t, axes=(2, 0)) - self.killing_form().gram
        return SymBilinearForm(g, self.backend)

    def associator(self, x, y, z):
        return (self.multiply(self.multiply(x, y), z)
                - self.multiply(x, self.multiply(y, z)))

    def is_invariant(self, form, tol=EPS0):
        """Check h(xy, z) = h(x, yz) on basis triples; returns (ok, max violation)."""
        G = form.gram
        A = np.tensordot(self.structure, G, axes=(2, 0))           # h(e_i e_j, e_k)
        B = np.transpose(np.tensordot(self.structure, G, axes=(2, 0)), (2, 0, 1))
        err = max_abs(A - B)
        scale = 1 if self.backend == RATIONAL else max(1.0, max_abs(G), max_abs(self.structure))
        return (err == 0 if self.backend == RATIONAL else err <= tol * scale), err

    def cubic_value(self, form, x):
        """P(x) with 6 P(x) = h(x x, x)."""
        six = Fraction(6) if self.backend == RATIONAL else 6.0
        return form.apply(self.multiply(x, x), x) / six

    def is_ideal(self, S, tol=EPS0):
        for j in range(S.dim):
            b = S.basis[:, j]
            for i in range(self.dim):
                if not S.contains(self.multiply(self.basis_vector(i), b), tol):
                    return False
        return True

    def ideal_closure(self, generators, tol=EPS0):
        S = Subspace.from_spanning(generators, self.backend, tol)
        while True:
            new = [S.basis[:, j] for j in range(S.dim)]
            grew = False
            for j in range(S.dim):
                for i in range(self.dim):
                    p = self.multiply(self.basis_vector(i), S.basis[:, j])
                    if not S.contains(p, tol):
                        new.append(p)
                        grew = True
            if not grew:
                return S
            S = Subspace.from_spanning(new, self.backend, tol)

    def find_unit(self, tol=EPS0):
        """Solve L(e) = Id if possible, else return None."""
        n = self.dim
        A = np.transpose(self.structure, (1, 2, 0)).reshape(n * n, n)
        b = zeros(n * n, self.backend)
        one = Fraction(1) if self.backend == RATIONAL else 1.0
        for j in range(n):
            b[j * n + j] = one
        Af = linalg.to_float(A)
        e, *_ = np.linalg.lstsq(Af, linalg.to_float(b), rcond=None)
        if self.backend == RATIONAL:
            e = np.array([Fraction(float(v)).limit_denominator(10 ** 9) for v in e],
                         dtype=object)
            return e if all(x == y for x, y in zip(A @ e, b)) else None
        resid = max_abs(A @ e - b)
        return e if resid <= tol * max(1.0, max_abs(self.structure)) else None


class MetrizedAlgebra(Algebra):
    def __init__(self, structure, gram, symmetry=COMMUTATIVE, backend=None, name=""):
        super().__init__(structure, symmetry, backend, name)
        self.form = SymBilinearForm(as_backend(gram, self.backend), self.backend)
        assert self.form.dim == self.dim

    @property
    def gram(self):
        return self.form.gram

    def h(self, x, y):
        return self.form.apply(x, y)


def einstein_fit(alg, tol=EPS0):
    """Fit tau = kappa h; kappa from the first basis vector with h(e,e) != 0.

    Returns (kappa, residual) where residual is the max-norm of tau - kappa h.
    """
    tau = alg.killing_form().gram
    G = alg.gram
    k = next((i for i in range(alg.dim)
              if not is_zero(G[i, i], alg.backend, tol)), None)
    if k is None:
        raise ValueError("metric vanishes on the whole diagonal")
    kappa = tau[k, k] / G[k, k]
    return kappa, max_abs(tau - kappa * G)


def direct_sum(a, b):
    assert a.symmetry == b.symmetry and a.backend == b.backend
    n, m = a.dim, b.dim
    s = zeros((n + m, n + m, n + m), a.backend)
    s[:n, :n, :n] = a.structure
    s[n:, n:, n:] = b.structure
    g = zeros((n + m, n + m), a.backend)
    g[:n, :n] = a.gram
    g[n:, n:] = b.gram
    return MetrizedAlgebra(s, g, a.symmetry, a.backend,
                           name="%s(+)%s" % (a.name, b.name))


def tensor_product(a, b):
    """Tensor product algebra; basis e_i (x) f_j in row-major order."""
    assert a.symmetry == b.symmetry, "mixed symmetry tensor product not defined"
    assert a.backend == b.backend
    n, m = a.dim, b.dim
    s = np.multiply.outer(a.structure, b.structure)      # (i1,j1,k1,i2,j2,k2)
    s = np.transpose(s, (0, 3, 1, 4, 2, 5)).reshape(n * m, n * m, n * m)
    g = np.multiply.outer(a.gram, b.gram)
    g = np.transpose(g, (0, 2, 1, 3)).reshape(n * m, n * m)
    return MetrizedAlgebra(s, g, COMMUTATIVE, a.backend,
                           name="%s(x)%s" % (a.name, b.name))


def unitalization(alg, c=None, name=""):
    """Adjoin a unit: (x,a)(y,b) = (xy + a y + b x, a b + c(x,y)).

    c defaults to the metric of alg; the returned metric is c + (last
    coordinates product), which is invariant iff c is.
    """
    if c is None:
        c = alg.form
    n = alg.dim
    s = zeros((n + 1, n + 1, n + 1), alg.backend)
    one = Fraction(1) if alg.backend == RATIONAL else 1.0
    s[:n, :n, :n] = alg.structure
    s[:n, :n, n] = c.gram
    for i in range(n):
        s[i, n, i] = one
        s[n, i, i] = one
    s[n, n, n] = one
    g = zeros((n + 1, n + 1), alg.backend)
    g[:n, :n] = c.gram
    g[n, n] = one
    return MetrizedAlgebra(s, g, COMMUTATIVE, alg.backend,
                           name=name or ("unit(%s)" % alg.name))


def intrinsic_unitalization(alg):
    """Unitalization with c = -ric / (dim - 1)."""
    n = alg.dim
    denom = Fraction(n - 1) if alg.backend == RATIONAL else float(n - 1)
    ric = alg.ricci_form().gram
    c = SymBilinearForm(-ric / denom, alg.backend)
    base = alg if isinstance(alg, MetrizedAlgebra) else \
        MetrizedAlgebra(alg.structure, linalg.eye(n, alg.backend), alg.symmetry,
                        alg.backend, alg.name)
    return unitalization(base, c, name="iunit(%s)" % alg.name)


def retraction(alg, basis, scale=None):
    """Orthogonal-projection algebra on the span of the given basis columns.

    Products: pi(x) pi(y) projected back; metric: restricted Gram, times
    scale if given.  Returns a MetrizedAlgebra in the basis coordinates.
    """
    B = np.asarray(basis)
    n, k = B.shape
    G = alg.gram if scale is None else scale * alg.gram
    M = B.T @ G @ B
    s = zeros((k, k, k), alg.backend)
    for i in range(k):
        for j in range(i + 1):
            p = alg.multiply(B[:, i], B[:, j])
            coords = linalg.solve(M, B.T @ G @ p, alg.backend)
            s[i, j, :] = coords
            s[j, i, :] = coords
    out = MetrizedAlgebra(s, M, COMMUTATIVE, alg.backend)
    out.embedding = B
    return out


def deunitalization(alg, tol=EPS0):
    """Retract a unital metrized algebra onto the orthocomplement of its unit.

    The metric is rescaled by 1/h(e,e).  The result carries `.embedding`
    (columns spanning the complement) and `.unit`.
    """
    e = alg.find_unit(tol)
    if e is None:
        raise ValueError("algebra has no unit")
    gee = alg.h(e, e)
    if is_zero(gee, alg.backend, tol):
        raise ValueError("unit is null for the metric")
    comp = linalg.orthogonal_complement(
        Subspace.from_spanning([e], alg.backend, tol), alg.form, tol)
    inv_gee = 1 / gee
    out = retraction(alg, comp.basis, scale=inv_gee)
    out.unit = e
    out.name = "deunit(%s)" % alg.name
    return out


def verify_homomorphism(psi, a, b, tol=EPS0):
    """Max violation of psi(x y) = psi(x) psi(y) over basis pairs."""
    psi = np.asarray(psi)
    err = 0
    for i in range(a.dim):
        for j in range(i + 1):
            lhs = psi @ a.multiply(a.basis_vector(i), a.basis_vector(j))
            rhs = b.multiply(psi[:, i], psi[:, j])
            err = max(err, max_abs(lhs - rhs))
    return err


def verify_isometric(psi, a, b, tol=EPS0):
    """Max violation over (products, metric pullback)."""
    psi = np.asarray(psi)
    hom = verify_homomorphism(psi, a, b, tol)
    met = max_abs(psi.T @ b.gram @ psi - a.gram)
    return max(hom, met)


def griess_einstein(A, B, gee):
    """Given tau = A g(x,e) g(y,e) + B g(x,y) on a unital algebra with
    |e|^2 = gee, return (dim, kappa) of the deunitalization."""
    A, B, gee = Fraction(A), Fraction(B), Fraction(gee)
    return A * gee ** 2 + B * gee, B * gee - 2


def voa_kappa(c, n):
    """Einstein constant of the deunitalized degree-2 algebra with central
    charge c and dim-of-weight-2-part n."""
    c, n = Fraction(c), Fraction(n)
    return (-5 * c ** 2 + 88 * (n - 2) - 2 * c * (n + 20)) / (4 * (5 * c + 22))


def _restrict_to_ideal(alg, S):
    """Metrized algebra induced on an ideal subspace (basis coordinates)."""
    B = S.basis
    M = B.T @ alg.gram @ B
    k = S.dim
    s = zeros((k, k, k), alg.backend)
    for i in range(k):
        for j in range(i + 1):
            p = alg.multiply(B[:, i], B[:, j])
            coords = linalg.solve(M, B.T @ alg.gram @ p, alg.backend)
            s[i, j, :] = coords
            s[j, i, :] = coords
    sub = MetrizedAlgebra(s, M, alg.symmetry, alg.backend)
    sub.embedding = B
    return sub


def _find_proper_ideal(alg, rng, trials, tol):
    n = alg.dim
    for _ in range(trials):
        if alg.backend == RATIONAL:
            x = np.array([Fraction(int(rng.integers(-9, 10)),
                                   int(rng.integers(1, 4))) for _ in range(n)],
                         dtype=object)
        else:
            x = rng.standard_normal(n)
        L = linalg.to_float(alg.left_mult_matrix(x))
        w, V = np.linalg.eig(L)
        order = np.argsort(w.real)
        for idx in order:
            if abs(w[idx].imag) > 1e-8:
                continue
            v = V[:, idx].real
            v = v / np.max(np.abs(v))
            if alg.backend == RATIONAL:
                vr = np.array([Fraction(float(t)).limit_denominator(10 ** 6)
                               for t in v], dtype=object)
            else:
                vr = v
            try:
                S = alg.ideal_closure([vr], tol)
            except Exception:
                continue
            if 0 < S.dim < n and alg.is_ideal(S, tol):
                return S
    return None


def decompose_ideals(alg, seed, trials=16, tol=EPS0):
    """Probabilistic direct-sum decomposition into ideals.

    Returns (components, verdict): components are (Subspace in original
    coordinates, restricted MetrizedAlgebra) pairs; verdict is
    "decomposed" or "no_proper_ideal_found".  A negative verdict is not
    a proof of simplicity.
    """
    rng = np.random.default_rng(seed)

    def recurse(sub_alg, embed):
        S = _find_proper_ideal(sub_alg, rng, trials, tol)
        if S is None:
            full = Subspace(embed, alg.backend, tol)
            return [(full, sub_alg)], S is not None
        comp = linalg.orthogonal_complement(S, sub_alg.form, tol)
        if not sub_alg.is_ideal(comp, tol):
            full = Subspace(embed, alg.backend, tol)
            return [(full, sub_alg)], False
        parts = []
        for piece in (S, comp):
            piece_alg = _restrict_to_ideal(sub_alg, piece)
            sub_parts, _ = recurse(piece_alg, embed @ piece.basis)
            parts.extend(sub_parts)
        return parts, True

    parts, split = recurse(alg, linalg.eye(alg.dim, alg.backend))
    verdict = "decomposed" if len(parts) > 1 else "no_proper_ideal_found"
    return parts, verdict


def to_json(alg, name=None):
    n = alg.dim
    upper = []
    for i in range(n):
        for j in range(i, n):
            if alg.symmetry == ANTICOMMUTATIVE and i == j:
                continue
            for k in range(n):
                v = alg.structure[i, j, k]
                if not is_zero(v, alg.backend, 0 if alg.backend == RATIONAL else 0.0):
                    upper.append([i, j, k, linalg.scalar_to_json(v)])
    doc = {
        "name": name if name is not None else alg.name,
        "dim": n,
        "symmetry": alg.symmetry,
        "scalar": alg.backend,
        "structure": upper,
    }
    if isinstance(alg, MetrizedAlgebra):
        doc["metric"] = {"gram": [[linalg.scalar_to_json(v) for v in row]
                                  for row in alg.gram]}
    return doc


def from_json(doc):
    n = doc["dim"]
    backend = doc.get("scalar", RATIONAL)
    symmetry = doc.get("symmetry", COMMUTATIVE)
    s = zeros((n, n, n), backend)
    sign = 1 if symmetry == COMMUTATIVE else -1
    for i, j, k, v in doc["structure"]:
        val = linalg.parse_scalar(v)
        if backend == FLOAT:
            val = float(val)
        s[i, j, k] = val
        if i != j:
            s[j, i, k] = sign * val
    if "metric" in doc and doc["metric"] is not None:
        gram = [[linalg.parse_scalar(v) for v in row]
                for row in doc["metric"]["gram"]]
        return MetrizedAlgebra(s, as_backend(gram, backend), symmetry, backend,
                               name=doc.get("name", ""))
    return Algebra(s, symmetry, backend, name=doc.get("name", ""))


def dump_json(alg, path, name=None):
    with open(path, "w") as fh:
        json.dump(to_json(alg, name), fh, indent=1)


def load_json(path):
    with open(path) as fh:
        return from_json(json.load(fh))

"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
import argparse
import json
import sys

import numpy as np

from . import analysis, core, catalog, linalg
from .core import MetrizedAlgebra
from .hurwitz import LEVEL_OF_LETTER
from .linalg import RATIONAL, FLOAT

SUITES = ("exact", "killing-invariant", "ricci-invariant", "nondegenerate",
          "einstein", "proj-assoc", "conf-assoc", "norton", "const-sect",
          "ideals")


def _load(path):
    alg = core.load_json(path)
    return alg


def _metrized(alg):
    if isinstance(alg, MetrizedAlgebra):
        return alg
    tau = alg.killing_form()
    if not tau.is_nondegenerate():
        raise SystemExit(2)
    return MetrizedAlgebra(alg.structure, tau.gram, alg.symmetry, alg.backend,
                           name=alg.name)


def _emit(doc, out):
    text = json.dumps(doc, indent=1, default=str)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_construct(args):
    kw = {}
    if args.n is not None:
        kw["n"] = args.n
    if args.alpha is not None:
        kw["alpha"] = linalg.parse_scalar(args.alpha)
    if args.level is not None:
        kw["level"] = LEVEL_OF_LETTER[args.level]
    if args.scalar is not None:
        kw["backend"] = args.scalar
    if args.base:
        kw["base"] = _load(args.base)
    if args.base2:
        kw["base2"] = _load(args.base2)
    try:
        alg = catalog.build_by_name(args.family, **kw)
    except (KeyError, ValueError, AssertionError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    doc = core.to_json(alg)
    _emit(doc, args.out)
    return 0


def run_suite(alg, suite, seed=0, tol=linalg.EPS0):
    if suite == "exact":
        t = alg.trace_linear()
        err = linalg.max_abs(t)
        return analysis.make_report("trace of every left multiplication vanishes",
                                   alg.is_exact(tol), err, seed=seed)
    if suite == "killing-invariant":
        ok, err = alg.is_invariant(alg.killing_form(), tol)
        return analysis.make_report("killing form is invariant", ok, err, seed=seed)
    if suite == "ricci-invariant":
        ok, err = alg.is_invariant(alg.ricci_form(), tol)
        return analysis.make_report("ricci form is invariant", ok, err, seed=seed)
    if suite == "nondegenerate":
        alg = _metrized(alg)
        p, m, z = alg.form.inertia()
        return analysis.make_report("metric is nondegenerate", z == 0, z,
                                    witnesses=[[p, m, z]], seed=seed)
    if suite == "einstein":
        alg = _metrized(alg)
        kappa, resid = core.einstein_fit(alg, tol)
        ok = resid == 0 if alg.backend == RATIONAL else resid <= tol
        return analysis.make_report("killing form is a multiple of the metric",
                                    ok, resid, witnesses=[str(kappa)], seed=seed)
    if suite == "proj-assoc":
        ok, err = analysis.is_projectively_associative(alg, tol)
        return analysis.make_report("projectively associative", ok, err, seed=seed)
    if suite == "conf-assoc":
        alg = _metrized(alg)
        ok, err = analysis.is_conformally_associative(alg, tol)
        return analysis.make_report("conformally associative", ok, err, seed=seed)
    if suite == "norton":
        alg = _metrized(alg)
        rng = np.random.default_rng(seed)
        mf = linalg.to_float(alg.structure)
        Gf = linalg.to_float(alg.gram)
        worst = np.inf
        for _ in range(500):
            x = rng.standard_normal(alg.dim)
            y = rng.standard_normal(alg.dim)
            tx = np.tensordot(x, mf, axes=(0, 0))
            xx = x @ tx
            xy = y @ tx
            v = y @ np.tensordot(xx, mf, axes=(0, 0)) - xy @ tx  # [x, x, y]
            worst = min(worst, (v @ Gf @ y) / ((x @ x) * (y @ y)))
        return analysis.make_report("h([x,x,y],y) >= 0 on samples",
                                    worst >= -tol, worst, seed=seed)
    if suite == "const-sect":
        alg = _metrized(alg)
        ok, kappa, err = analysis.constant_sect_check(alg, tol=tol)
        return analysis.make_report("constant sectional value", ok, err,
                                    witnesses=[str(kappa)], seed=seed)
    if suite == "ideals":
        alg = _metrized(alg)
        parts, verdict = core.decompose_ideals(alg, seed)
        certified = all(alg.is_ideal(S) for S, _ in parts) if len(parts) > 1 else True
        return analysis.make_report("ideal decomposition certificates",
                                    certified, 0,
                                    witnesses=[verdict] + [S.dim for S, _ in parts],
                                    seed=seed)
    raise SystemExit(2)


def cmd_report(args):
    alg = _load(args.infile)
    rep = run_suite(alg, args.suite, args.seed, args.tol)
    _emit(rep, args.out)
    return 0 if rep["verdict"] else 1


def cmd_idempotents(args):
    alg = _metrized(_load(args.infile))
    idems = analysis.newton_idempotents(alg, args.trials, args.seed)
    szero = analysis.square_zero_rays(alg, max(args.trials // 4, 50), args.seed)
    doc = {"schema": 1, "idempotents": [list(map(float, v)) for v in idems],
           "szero_rays": [list(map(float, v)) for v in szero],
           "count": len(idems) + len(szero), "seed": args.seed}
    _emit(doc, args.out)
    return 0


def cmd_sect(args):
    alg = _metrized(_load(args.infile))
    est = analysis.sect_extremize(alg, args.seed, n_starts=max(args.trials, 8))
    doc = {"schema": 1, "lower": est["lower"], "upper": est["upper"],
           "seed": args.seed}
    _emit(doc, args.out)
    return 0


def cmd_decompose(args):
    alg = _metrized(_load(args.infile))
    parts, verdict = core.decompose_ideals(alg, args.seed, trials=args.trials)
    doc = {"schema": 1, "verdict": verdict,
           "component_dims": [S.dim for S, _ in parts], "seed": args.seed}
    _emit(doc, args.out)
    return 0


def cmd_check(args):
    alg = _load(args.infile)
    reports = {}
    ok = True
    for suite in ("exact", "killing-invariant", "ricci-invariant"):
        rep = run_suite(alg, suite, args.seed, args.tol)
        reports[suite] = rep
    _emit({"schema": 1, "reports": reports}, args.out)
    return 0


def main(argv=None):
    p = argparse.ArgumentParser(prog="tracealg")
    sub = p.add_subparsers(dest="cmd", required=True)

    pc = sub.add_parser("construct", help="build a catalogue algebra")
    pb = sub.add_parser("build", help="alias of construct")
    for q in (pc, pb):
        q.add_argument("family")
        q.add_argument("--n", type=int)
        q.add_argument("--alpha")
        q.add_argument("--level", choices=sorted(LEVEL_OF_LETTER))
        q.add_argument("--scalar", choices=(RATIONAL, FLOAT))
        q.add_argument("--base")
        q.add_argument("--base2")
        q.add_argument("-o", "--out")
        q.set_defaults(func=cmd_construct)

    pr = sub.add_parser("report", help="run a verification suite")
    pr.add_argument("--in", dest="infile", required=True)
    pr.add_argument("--suite", choices=SUITES, required=True)
    pr.set_defaults(func=cmd_report)

    pi = sub.add_parser("idempotents", help="numeric idempotent search")
    pi.set_defaults(func=cmd_idempotents)
    pi.add_argument("--in", dest="infile", required=True)

    ps = sub.add_parser("sect", help="estimate sectional value range")
    ps.set_defaults(func=cmd_sect)
    ps.add_argument("--in", dest="infile", required=True)

    pd = sub.add_parser("decompose", help="probabilistic ideal decomposition")
    pd.set_defaults(func=cmd_decompose)
    pd.add_argument("--in", dest="infile", required=True)

    pk = sub.add_parser("check", help="basic verification battery")
    pk.set_defaults(func=cmd_check)
    pk.add_argument("--in", dest="infile", required=True)

    for q in (pr, pi, ps, pd, pk):
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--trials", type=int, default=200)
        q.add_argument("--tol", type=float, default=linalg.EPS0)
        q.add_argument("-o", "--out")

    args = p.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        raise
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

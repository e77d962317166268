"""``ffiwa`` command line: one subcommand per computed quantity.

Reports are JSON (``"schema": 1``) or a CSV projection of the report
table.  Every numeric field is an object with ``value`` (exact, as a
decimal string), ``paper_ref`` and ``provenance``.
Exit codes: 0 ok, 1 computation error, 2 bad flags or config.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import drinfeld as dr
from . import duality as du
from . import iwasawa as iw
from . import tower as tw
from . import zeta as ze
from .errors import FfiwaError
from .field import GFq
from .parse import parse_int_list, split_list

SCHEMA = 1

REF = {
    "rank": "rank of a Drinfeld module (tau-degree of phi_T)",
    "phi_a": "Drinfeld module as F_q-algebra homomorphism a -> phi_a",
    "bad": "bad reduction places divide the leading coefficient of phi_T",
    "S": "place set S = {pi, inf} with the bad reduction places",
    "reduce": "reduction A -> A_v{tau} -> F_v{tau} and reduced rank",
    "torsion": "torsion phi[pi] isomorphic to (A/pi)^r",
    "h0": "local H^0 dimension: Frobenius-fixed part of phi[pi] at a good place",
    "split": "constant-extension degree formula deg P_n = deg v / gcd(deg v, p^n)",
    "delta": "delta_n = gcd of degrees of places above S; non-increasing, stable value prime to p",
    "inert": "level after which all places above S are totally inert in the tower",
    "lpoly": "L-polynomial of the curve (zeta numerator) from point counts",
    "count": "affine point count plus declared points at infinity",
    "class": "class numbers h_n along the constant tower, e_n' = v_p(h_n)",
    "fit": "Iwasawa growth formula e_n = lambda n + mu p^n + nu",
    "bound": "S-class exponent bound e_n <= e_n' (S-class group is a quotient of the class group)",
    "mulambda": "mu and lambda of a power series via Weierstrass data",
    "growth": "p-exponent of #(E / omega_n E) for an elementary Lambda-module",
    "dual": "Pontryagin dual M^ = Hom(M, F_p/A_p)",
    "torsion_quotient": "duality of torsion and quotients: (M[p^n])^ = N / p^n N",
    "finiteness": "M[p] finite iff dual finitely generated torsion with mu = 0; lambda <= dim M[p]",
    "lambda_bound": "lambda <= dim Sel_0^S(phi[p]) + sum over w in S of dim H^0",
}


class ConfigError(Exception):
    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


def num(value, ref, provenance="computed"):
    return {"value": str(value), "paper_ref": ref, "provenance": provenance}


def seq(values, ref, provenance="computed"):
    return {"value": [str(v) for v in values], "paper_ref": ref, "provenance": provenance}


def text(value):
    return value if isinstance(value, str) else str(value)


def report(command, ref, inputs, results, table=None):
    out = {"schema": SCHEMA, "command": command, "paper_ref": ref, "inputs": inputs, "results": results}
    if table is not None:
        out["table"] = table
    return out


# -- argument helpers ---------------------------------------------------------


def need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise ConfigError(f"missing required field {name!r}", name)


def as_int(args, name):
    v = getattr(args, name)
    try:
        return int(v)
    except (TypeError, ValueError):
        raise ConfigError(f"field {name!r} must be an integer, got {v!r}", name) from None


def _module_from(args):
    phi = dr.DrinfeldModule(as_int(args, "q"), split_list(args.phi_T))
    return phi


def _places(K, text_or_list):
    return [tw.Place.parse(t, K) for t in split_list(text_or_list)]


# -- drinfeld -----------------------------------------------------------------


def cmd_drinfeld_inspect(args):
    need(args, "q", "phi_T")
    phi = _module_from(args)
    results = {
        "rank": num(phi.rank, REF["rank"]),
        "phi_T": phi.phi_T.format(),
        "bad_places": sorted(str(v) for v in dr.bad_reduction_set(phi)),
    }
    if args.a is not None:
        fa = dr.phi_of(phi, args.a)
        results["phi_a"] = fa.format()
        results["phi_a_degree"] = num(fa.degree, REF["phi_a"])
    return report("drinfeld inspect", REF["rank"], phi.config(), results)


def cmd_drinfeld_reduce(args):
    need(args, "q", "phi_T", "place")
    phi = _module_from(args)
    v = phi.place(args.place)
    red, rep = dr.reduce(phi, v)
    results = {
        "place": str(v),
        "reduced_phi_T": red.format(),
        "kind": rep.kind,
        "rank": num(phi.rank, REF["rank"]),
        "reduced_rank": num(rep.reduced_rank, REF["reduce"]),
    }
    return report("drinfeld reduce", REF["reduce"], {**phi.config(), "place": args.place}, results)


def cmd_drinfeld_torsion(args):
    need(args, "q", "phi_T", "pi", "place")
    phi = _module_from(args)
    v, pi = phi.place(args.place), phi.place(args.pi)
    ts = dr.torsion_space(phi, v, pi)
    E = ts.ambient
    results = {
        "ambient": {"p": num(E.p, REF["torsion"]), "degree": num(E.s, REF["torsion"])},
        "splitting_degree": num(ts.splitting_degree, REF["torsion"]),
        "cardinality": num(ts.cardinality, REF["torsion"]),
        "expected_cardinality": num(phi.q ** (phi.rank * pi.degree), REF["torsion"], "bound"),
        "rank": num(ts.rank, REF["torsion"]),
        "basis": [E.format(b) for b in ts.basis],
    }
    inputs = {**phi.config(), "pi": args.pi, "place": args.place}
    return report("drinfeld torsion", REF["torsion"], inputs, results)


def cmd_drinfeld_h0(args):
    need(args, "q", "phi_T", "pi", "place")
    phi = _module_from(args)
    v, pi = phi.place(args.place), phi.place(args.pi)
    fd = dr.frobenius_data(phi, v, pi)
    results = {
        "h0_dim": num(fd.h0_dim, REF["h0"]),
        "rank": num(phi.rank, REF["rank"]),
        "frobenius_matrix": [[p.format() for p in row] for row in fd.matrix_polys],
        "char_poly": [c.format() for c in fd.char_poly_lifted()],
    }
    inputs = {**phi.config(), "pi": args.pi, "place": args.place}
    return report("drinfeld h0", REF["h0"], inputs, results)


def cmd_drinfeld_selmer_set(args):
    need(args, "q", "phi_T", "pi")
    phi = _module_from(args)
    S = sorted(dr.selmer_place_set(phi, phi.place(args.pi)))
    results = {"S": [str(v) for v in S], "size": num(len(S), REF["S"])}
    return report("drinfeld selmer-set", REF["S"], {**phi.config(), "pi": args.pi}, results)


# -- tower --------------------------------------------------------------------


def cmd_tower_split(args):
    need(args, "q", "place", "levels")
    K = GFq(as_int(args, "q"))
    v = tw.Place.parse(args.place, K)
    rows = []
    for n in range(as_int(args, "levels") + 1):
        s = tw.splitting_in_level(v, n)
        row = {"n": num(n, REF["split"], "input"), "count": num(s.count, REF["split"]),
               "degree": num(s.degree, REF["split"])}
        if args.check:
            b = tw.split_by_factoring(v, n)
            row["factored_count"] = num(b.count, REF["split"])
            row["factored_degree"] = num(b.degree, REF["split"])
        rows.append(row)
    inputs = {"q": K.order, "place": str(v), "levels": as_int(args, "levels")}
    return report("tower split", REF["split"], inputs, {"place_degree": num(v.degree, REF["split"])}, rows)


def cmd_tower_delta(args):
    need(args, "q", "S", "levels")
    K = GFq(as_int(args, "q"))
    S = _places(K, args.S)
    ds = tw.delta_sequence(S, as_int(args, "levels"))
    rows = [{"n": num(n, REF["delta"], "input"), "delta": num(d, REF["delta"])} for n, d in enumerate(ds.values)]
    results = {
        "delta": seq(ds.values, REF["delta"]),
        "stabilization_index": num(ds.stabilization_index, REF["delta"]),
        "stable_value": num(ds.stable_value, REF["delta"]),
    }
    inputs = {"q": K.order, "S": [str(v) for v in ds.places], "levels": as_int(args, "levels")}
    return report("tower delta", REF["delta"], inputs, results, rows)


def cmd_tower_inert_level(args):
    need(args, "q", "S")
    K = GFq(as_int(args, "q"))
    S = _places(K, args.S)
    n = tw.totally_inert_level(S)
    inputs = {"q": K.order, "S": [str(v) for v in S]}
    return report("tower inert-level", REF["inert"], inputs, {"level": num(n, REF["inert"])})


# -- zeta -----------------------------------------------------------------------


def _lpoly(args):
    q = as_int(args, "q")
    if getattr(args, "lpoly", None) is not None:
        return ze.LPolynomial(q, tuple(parse_int_list(args.lpoly))), "input"
    if getattr(args, "counts", None) is not None:
        return ze.l_from_point_counts(q, parse_int_list(args.counts)), "computed"
    if getattr(args, "affine", None) is not None:
        need(args, "genus")
        inf = as_int(args, "inf_correction") if args.inf_correction is not None else 0
        return ze.l_from_curve(q, args.affine, inf, as_int(args, "genus")), "computed"
    raise ConfigError("one of 'lpoly', 'counts' or 'affine' (with 'genus') is required", "lpoly")


def cmd_zeta_lpoly(args):
    need(args, "q")
    L, prov = _lpoly(args)
    results = {"genus": num(L.genus, REF["lpoly"]), "coeffs": seq(L.coeffs, REF["lpoly"], prov),
               "h": num(L(1), REF["class"])}
    return report("zeta lpoly", REF["lpoly"], {"q": L.q}, results)


def cmd_zeta_count(args):
    need(args, "q", "affine")
    inf = as_int(args, "inf_correction") if args.inf_correction is not None else 0
    k = as_int(args, "k") if args.k is not None else 1
    n = ze.count_plane_curve(as_int(args, "q"), args.affine, inf, k)
    inputs = {"q": as_int(args, "q"), "affine": args.affine, "inf_correction": inf, "k": k}
    return report("zeta count", REF["count"], inputs, {"N": num(n, REF["count"])})


def _tower(args):
    need(args, "q", "levels")
    L, prov = _lpoly(args)
    p = as_int(args, "p") if args.p is not None else L.p
    levels = as_int(args, "levels")
    if levels < 1:
        raise ConfigError("'levels' must be at least 1", "levels")
    return L, prov, ze.class_tower(L, p, levels - 1)


def _fit_or_none(e, p):
    try:
        f = iw.fit_invariants(e, p)
    except FfiwaError as exc:
        return {"error": {"kind": exc.kind, "message": str(exc)}}
    return {"lambda": num(f.lam, REF["fit"]), "mu": num(f.mu, REF["fit"]), "nu": num(f.nu, REF["fit"]),
            "n0": num(f.n0, REF["fit"])}


def cmd_zeta_tower(args):
    L, prov, t = _tower(args)
    rows = [{"n": num(lv.n, REF["class"], "input"), "h": num(lv.h, REF["class"]), "e": num(lv.e, REF["class"])}
            for lv in t.levels]
    results = {"lpoly": seq(L.coeffs, REF["lpoly"], prov), "h": seq(t.h, REF["class"]), "e": seq(t.e, REF["class"])}
    if len(t.levels) >= 4:
        results["fit"] = _fit_or_none(t.e, t.p)
    inputs = {"q": L.q, "p": t.p, "levels": len(t.levels)}
    return report("zeta tower", REF["class"], inputs, results, rows)


def cmd_zeta_bound(args):
    L, prov, t = _tower(args)
    b = ze.s_class_upper_bound(t)
    rows = [{"n": num(n, REF["bound"], "input"), "e_bound": num(x, REF["bound"], "bound")} for n, x in enumerate(b.values)]
    results = {"e_bound": seq(b.values, REF["bound"], "bound"), "kind": b.kind}
    if len(b.values) >= 4:
        results["fit"] = _fit_or_none(b.values, t.p)
    inputs = {"q": L.q, "p": t.p, "levels": len(t.levels)}
    return report("zeta bound", REF["bound"], inputs, results, rows)


# -- iwasawa --------------------------------------------------------------------


def cmd_iwasawa_mu_lambda(args):
    need(args, "p", "f")
    p = as_int(args, "p")
    digits = as_int(args, "digits") if args.digits is not None else iw.DEFAULT_DIGITS
    terms = as_int(args, "terms") if args.terms is not None else iw.DEFAULT_TERMS
    mu, lam = iw.mu_lambda(iw.IwasawaElement.parse(args.f, p, digits, terms))
    inputs = {"p": p, "f": args.f, "digits": digits, "terms": terms}
    return report("iwasawa mu-lambda", REF["mulambda"], inputs,
                  {"mu": num(mu, REF["mulambda"]), "lambda": num(lam, REF["mulambda"])})


def _elementary(args):
    if args.module is not None:
        cfg = args.module if isinstance(args.module, dict) else _json_field(args.module, "module")
        return iw.ElementaryModule.from_config(cfg)
    need(args, "p")
    mus = parse_int_list(args.mu_parts) if args.mu_parts is not None else []
    lams = split_list(args.lambda_parts) if args.lambda_parts is not None else []
    return iw.ElementaryModule(as_int(args, "p"), tuple(mus), tuple(lams))


def cmd_iwasawa_growth(args):
    need(args, "levels")
    E = _elementary(args)
    levels = as_int(args, "levels")
    if levels < 1:
        raise ConfigError("'levels' must be at least 1", "levels")
    e = iw.growth(E, levels - 1)
    rows = [{"n": num(n, REF["growth"], "input"), "e": num(x, REF["growth"])} for n, x in enumerate(e)]
    results = {"e": seq(e, REF["growth"]), "mu": num(E.mu, REF["growth"], "input"),
               "lambda": num(E.lam, REF["growth"], "input")}
    if len(e) >= 4:
        results["fit"] = _fit_or_none(e, E.p)
    inputs = {"p": E.p, "mu_parts": list(E.mu_parts), "lambda_parts": [list(f) for f in E.lambda_parts],
              "levels": levels}
    return report("iwasawa growth", REF["growth"], inputs, results, rows)


def cmd_iwasawa_fit(args):
    need(args, "p", "e")
    p = as_int(args, "p")
    e = parse_int_list(args.e)
    start = as_int(args, "start") if args.start is not None else 0
    f = iw.fit_invariants(e, p, start)
    rows = [{"n": num(start + i, REF["fit"], "input"), "e": num(x, REF["fit"], "input"),
             "predicted": num(f.predict(start + i, p), REF["fit"]), "match": ok}
            for i, (x, ok) in enumerate(zip(e, f.residuals))]
    results = {"lambda": num(f.lam, REF["fit"]), "mu": num(f.mu, REF["fit"]), "nu": num(f.nu, REF["fit"]),
               "n0": num(f.n0, REF["fit"])}
    return report("iwasawa fit", REF["fit"], {"p": p, "e": e, "start": start}, results, rows)


# -- dual -----------------------------------------------------------------------


def _json_field(raw, name):
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"field {name!r} is not valid JSON: {exc}", name) from None


def _cofin(args):
    need(args, "module")
    cfg = args.module if isinstance(args.module, dict) else _json_field(args.module, "module")
    if not isinstance(cfg, dict):
        raise ConfigError("field 'module' must be a JSON object", "module")
    return du.CofinModule.from_config(cfg)


def _module_json(M, ref):
    return {"residue_size": num(M.residue_size, ref, "input"), "corank": num(M.corank, ref, "input"),
            "factors": seq(M.finite_part.factors, ref, "input")}


def cmd_dual_dual(args):
    M = _cofin(args)
    N = du.dual(M)
    back = du.dual(N)
    results = {"free_rank": num(N.free_rank, REF["dual"]), "torsion_factors": seq(N.torsion.factors, REF["dual"]),
               "double_dual_is_identity": back == M}
    return report("dual dual", REF["dual"], M.config(), results)


def cmd_dual_torsion_quotient(args):
    need(args, "n")
    M = _cofin(args)
    n = as_int(args, "n")
    left, right = du.torsion_vs_quotient(M, n)
    results = {"torsion_factors": seq(left, REF["torsion_quotient"]), "quotient_factors": seq(right, REF["torsion_quotient"]),
               "equal": left == right}
    return report("dual lemma44", REF["torsion_quotient"], {**M.config(), "n": n}, results)


def cmd_dual_finiteness(args):
    M = _cofin(args)
    r = du.finiteness_check(M)
    results = {
        "p_torsion_dim": num(r.p_torsion_dim, REF["finiteness"]),
        "dual_lambda": num(r.dual_lambda, REF["finiteness"]),
        "dual_mu": num(r.dual_mu, REF["finiteness"]),
        "dual_finitely_generated": r.dual_finitely_generated,
        "dual_torsion": r.dual_torsion,
        "equivalence_holds": r.equivalence_holds,
        "inequality_holds": r.inequality_holds,
        "tight": r.tight,
    }
    return report("dual thm46", REF["finiteness"], M.config(), results)


def cmd_dual_lambda_bound(args):
    need(args, "sel_dim")
    sel = as_int(args, "sel_dim")
    terms = [du.H0Term(f"w{i}", d, "input") for i, d in enumerate(parse_int_list(args.h0))] if args.h0 else []
    rank = None
    inputs = {"sel_dim": sel, "h0": args.h0}
    if args.places is not None or args.worst_case is not None:
        need(args, "q", "phi_T", "pi")
        phi = _module_from(args)
        rank = phi.rank
        pi = phi.place(args.pi)
        for v in _places(phi.field, args.places or []):
            fd = dr.frobenius_data(phi, v, pi)
            terms.append(du.H0Term(str(v), fd.h0_dim, "computed"))
        for label in split_list(args.worst_case or []):
            terms.append(du.H0Term(label, phi.rank, "bound"))
        inputs.update({**phi.config(), "pi": args.pi, "places": args.places, "worst_case": args.worst_case})
    rep = du.lambda_bound(sel, terms, rank=rank)
    rows = [{"place": t.place, "h0_dim": num(t.dim, REF["h0"], t.provenance)} for t in rep.h0_terms]
    results = {"sel_dim": num(rep.sel_dim, REF["lambda_bound"], "input"),
               "bound": num(rep.bound, REF["lambda_bound"], "bound"),
               "h0_terms": rows,
               "note": "upper bound only; tightness is not claimed"}
    return report("dual lambda-bound", REF["lambda_bound"], inputs, results, rows)


# -- parser ---------------------------------------------------------------------


def _add(p, *names, **kw):
    """Add a flag accepting both ``--a_b`` and ``--a-b`` spellings."""
    flags = []
    for n in names:
        flags.append(n)
        if "_" in n:
            flags.append(n.replace("_", "-"))
    p.add_argument(*flags, default=None, **kw)


def build_parser():
    top = argparse.ArgumentParser(prog="ffiwa", description=__doc__.splitlines()[0])
    groups = top.add_subparsers(dest="group", required=True)

    def sub(group_parser, name, fn, *flags, help=None):
        sp = group_parser.add_parser(name, help=help)
        sp.set_defaults(fn=fn, command_flags=[f.lstrip("-").replace("-", "_") for f in flags])
        _add(sp, "--config", help="JSON file with the same fields as the flags")
        _add(sp, "--format", choices=["json", "csv"])
        _add(sp, "--seed", type=int, help="recorded in the report; all algorithms are deterministic")
        for f in flags:
            if f == "--check":
                sp.add_argument("--check", action="store_true", default=None,
                                help="cross-check by factoring over the extension")
            else:
                _add(sp, f)
        return sp

    g = groups.add_parser("drinfeld", help="Drinfeld modules over F_q(T)").add_subparsers(dest="cmd", required=True)
    base = ("--q", "--phi_T")
    sub(g, "inspect", cmd_drinfeld_inspect, *base, "--a", help="rank, bad places, optional phi_a")
    sub(g, "reduce", cmd_drinfeld_reduce, *base, "--place")
    sub(g, "torsion", cmd_drinfeld_torsion, *base, "--pi", "--place")
    sub(g, "h0", cmd_drinfeld_h0, *base, "--pi", "--place")
    sub(g, "selmer-set", cmd_drinfeld_selmer_set, *base, "--pi")

    g = groups.add_parser("tower", help="places in the constant Z_p-tower").add_subparsers(dest="cmd", required=True)
    sub(g, "split", cmd_tower_split, "--q", "--place", "--levels", "--check", help="levels n = 0..LEVELS")
    sub(g, "delta", cmd_tower_delta, "--q", "--S", "--levels", help="levels n = 0..LEVELS")
    sub(g, "inert-level", cmd_tower_inert_level, "--q", "--S")

    g = groups.add_parser("zeta", help="L-polynomials and class numbers").add_subparsers(dest="cmd", required=True)
    curve = ("--lpoly", "--counts", "--affine", "--inf_correction", "--genus")
    sub(g, "lpoly", cmd_zeta_lpoly, "--q", *curve)
    sub(g, "count", cmd_zeta_count, "--q", "--affine", "--inf_correction", "--k")
    sub(g, "tower", cmd_zeta_tower, "--q", *curve, "--p", "--levels", help="LEVELS levels: n = 0..LEVELS-1")
    sub(g, "bound", cmd_zeta_bound, "--q", *curve, "--p", "--levels", help="LEVELS levels: n = 0..LEVELS-1")

    g = groups.add_parser("iwasawa", help="Lambda-modules and growth").add_subparsers(dest="cmd", required=True)
    sub(g, "mu-lambda", cmd_iwasawa_mu_lambda, "--p", "--f", "--digits", "--terms")
    sub(g, "growth", cmd_iwasawa_growth, "--module", "--p", "--mu_parts", "--lambda_parts", "--levels",
        help="LEVELS levels: n = 0..LEVELS-1")
    sub(g, "fit", cmd_iwasawa_fit, "--p", "--e", "--start")

    g = groups.add_parser("dual", help="Pontryagin duality and the lambda bound").add_subparsers(dest="cmd", required=True)
    sub(g, "dual", cmd_dual_dual, "--module")
    sub(g, "lemma44", cmd_dual_torsion_quotient, "--module", "--n")
    sub(g, "thm46", cmd_dual_finiteness, "--module")
    sub(g, "lambda-bound", cmd_dual_lambda_bound, "--sel_dim", "--h0", "--q", "--phi_T", "--pi", "--places",
        "--worst_case")
    return top


def _merge_config(args):
    if args.config is None:
        return
    try:
        with open(args.config) as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}", "config") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file is not valid JSON: {exc}", "config") from None
    if not isinstance(cfg, dict):
        raise ConfigError("config file must hold a JSON object", "config")
    allowed = set(args.command_flags) | {"format", "seed"}
    for key, value in cfg.items():
        dest = key.replace("-", "_")
        if dest not in allowed:
            raise ConfigError(f"unknown config field {key!r}", key)
        if getattr(args, dest, None) is None:
            setattr(args, dest, value)


def _csv(rep):
    rows = rep.get("table")
    if rows is None:
        rows = [{k: v for k, v in rep["results"].items() if isinstance(v, (dict, str, bool))}]
    flat = []
    for row in rows:
        out = {}
        for k, v in row.items():
            if isinstance(v, dict) and "value" in v:
                v = v["value"]
            if isinstance(v, list):
                v = " ".join(str(x) for x in v)
            elif isinstance(v, dict):
                v = json.dumps(v, sort_keys=True)
            out[k] = v
        flat.append(out)
    cols = []
    for row in flat:
        for k in row:
            if k not in cols:
                cols.append(k)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    w.writerows(flat)
    return buf.getvalue()


def run(argv):
    """Execute one command; return ``(output_text, exit_code)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return "", int(exc.code or 0)
    try:
        _merge_config(args)
        rep = args.fn(args)
    except ConfigError as exc:
        err = {"schema": SCHEMA, "error": {"kind": "config", "message": str(exc), "input": exc.field}}
        return json.dumps(err, indent=2) + "\n", 2
    except FfiwaError as exc:
        offending = exc.offending if isinstance(exc.offending, (str, int, list, dict)) else text(exc.offending)
        err = {"schema": SCHEMA, "error": {"kind": exc.kind, "message": str(exc), "input": offending}}
        return json.dumps(err, indent=2) + "\n", 1
    if args.seed is not None:
        rep["seed"] = str(args.seed)
    if (args.format or "json") == "csv":
        return _csv(rep), 0
    return json.dumps(rep, indent=2) + "\n", 0


def main(argv=None):
    out, code = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command-line front end.

Every subcommand maps onto one library call.  Output is human-readable by
default; ``--json`` and ``--tsv`` give machine-readable forms.  Exit status
is 0 on success, 1 on a domain error (message on stderr) and 2 on a usage
error.
"""
from __future__ import annotations

import argparse
import contextlib
import difflib
import hashlib
import io
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import affroots, charsums, conductor, grouptuple, parahoric, rootsys
from .parahoric import ParahoricType, format_levi, root_system

DATA = Path(__file__).parent / "data"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing helpers


def _ints(text: str | None) -> list[int]:
    if text is None or text.strip() == "":
        return []
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _rs(args) -> rootsys.RootSystem:
    return root_system(args.type)


def _parahoric(args) -> ParahoricType:
    if (args.keep is None) == (args.remove is None):
        raise UsageError("give exactly one of --keep or --remove")
    if args.keep is not None:
        return ParahoricType.of(args.type, _ints(args.keep))
    return ParahoricType.removing(args.type, _ints(args.remove))


def _frac(x: Fraction) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# rendering


class Result:
    """Payload for --json, lines for humans and rows for --tsv."""

    def __init__(self, payload, lines: Sequence[str] | None = None, rows: Sequence[Sequence] | None = None):
        self.payload = payload
        self.lines = list(lines) if lines is not None else None
        self.rows = [list(r) for r in rows] if rows is not None else None

    def render(self, mode: str) -> str:
        if mode == "json":
            return json.dumps(self.payload, sort_keys=True, separators=(",", ":"))
        if mode == "tsv":
            rows = self.rows
            if rows is None:
                rows = [[k, json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v]
                        for k, v in sorted(self.payload.items())]
            return "\n".join("\t".join(str(c) for c in r) for r in rows)
        if self.lines is not None:
            return "\n".join(self.lines)
        return "\n".join(f"{k}: {v}" for k, v in sorted(self.payload.items()))


# ---------------------------------------------------------------------------
# rootsys


def cmd_roots(args) -> Result:
    rs = _rs(args)
    payload = {
        "type": str(rs.rtype),
        "rank": rs.rank,
        "count": len(rs.roots),
        "positive": len(rs.positive_roots),
        "highest_root": list(rs.highest_root),
        "weyl_order": rs.weyl_order,
        "dim": rs.dim,
        "cartan": [list(r) for r in rs.cartan],
        "roots": [list(r) for r in rs.roots],
    }
    lines = [
        f"type {rs.rtype}: {len(rs.roots)} roots ({len(rs.positive_roots)} positive), |W| = {rs.weyl_order}, dim G = {rs.dim}",
        f"highest root: {list(rs.highest_root)}",
    ]
    if args.list:
        lines += [" ".join(str(c) for c in r) for r in rs.roots]
    rows = [["root"] + [f"c{i + 1}" for i in range(rs.rank)]] + [["root", *r] for r in rs.roots]
    return Result(payload, lines, rows)


def _coweight(args, rs) -> rootsys.Coweight:
    vec = _ints(args.coweight)
    if len(vec) != rs.rank:
        raise UsageError(f"--coweight needs {rs.rank} entries")
    if args.coroot:
        return rs.coroot_to_coweight(vec)
    return rootsys.Coweight(tuple(vec))


def cmd_dominant(args) -> Result:
    rs = _rs(args)
    lam = _coweight(args, rs)
    dom = rootsys.dominant_representative(rs, lam)
    payload = {"type": str(rs.rtype), "input": list(lam.pairings), "dominant": list(dom.pairings)}
    return Result(payload, [" ".join(str(x) for x in dom.pairings)])


def cmd_dim_gr(args) -> Result:
    rs = _rs(args)
    lam = _coweight(args, rs)
    d = rootsys.dim_gr(rs, lam)
    return Result({"type": str(rs.rtype), "coweight": list(lam.pairings), "dim": d}, [str(d)])


# ---------------------------------------------------------------------------
# affine Weyl group


def _affine_element(args, g: affroots.AffineWeyl) -> affroots.AffineWeylElt:
    if args.element:
        try:
            data = json.loads(args.element)
            translation = data.get("translation") or [0] * g.rank
            word = data.get("word", [])
        except (ValueError, AttributeError):
            raise UsageError("--element must be a JSON object with translation and word") from None
    else:
        translation = _ints(args.translation) or [0] * g.rank
        word = _ints(args.word)
    if len(translation) != g.rank:
        raise UsageError(f"translation needs {g.rank} entries")
    return g.from_word(word, translation)


def _aff_root_json(a: affroots.AffineRoot) -> dict:
    return {"gradient": list(a.gradient), "level": a.level}


def cmd_affine(args) -> Result:
    rs = _rs(args)
    g = affroots.affine_weyl(rs)
    u = _affine_element(args, g)
    if args.action == "act":
        grad = _ints(args.root)
        if len(grad) != rs.rank:
            raise UsageError(f"--root needs {rs.rank} entries")
        if any(grad) and not rs.is_root(grad):
            raise rootsys.RootSystemError(f"{grad} is not a root of {rs.rtype}")
        image = g.act(u, affroots.AffineRoot(tuple(grad), args.level))
        return Result(_aff_root_json(image), [str(image)])
    if args.action == "invset":
        inv = g.inversion_set(u)
        payload = {"length": len(inv), "inversions": [_aff_root_json(a) for a in inv]}
        return Result(payload, [str(a) for a in inv] or ["(empty)"],
                      [["gradient", "level"]] + [[",".join(map(str, a.gradient)), a.level] for a in inv])
    if args.action == "length":
        n = g.length(u)
        return Result({"length": n}, [str(n)])
    relevant, witness = affroots.kloosterman_relevant(rs, u)
    payload = {"relevant": relevant, "witness": None if witness is None else _aff_root_json(witness)}
    lines = ["relevant" if relevant else f"irrelevant: witness {witness}"]
    return Result(payload, lines)


# ---------------------------------------------------------------------------
# parahoric


def _grading_payload(pt: ParahoricType, verbose: bool) -> dict:
    gr = parahoric.mp_grading(pt)
    out = {
        "m": gr.m,
        "barycenter": [_frac(x) for x in gr.barycenter],
        "affine_node_value": _frac(gr.affine_node_value),
        "steps": [{"step": f"{i}/{gr.m}", "dim": gr.dim(i)} for i in range(gr.m)],
        "total": gr.total,
    }
    if verbose:
        out["m_kept"] = gr.m_kept
        out["affine_roots"] = {
            f"{i}/{gr.m}": [[list(r), n] for r, n in gr.steps[i][1]] for i in range(gr.m)
        }
    return out


def cmd_parahoric(args) -> Result:
    pt = _parahoric(args)
    factors, torus = parahoric.levi_type(pt)
    reldim = parahoric.relative_dimension(pt)
    grading = _grading_payload(pt, args.verbose)
    payload = {
        "type": str(pt.diagram.base.rtype),
        "keep": sorted(pt.J),
        "removed": sorted(pt.removed),
        "levi": format_levi(factors, torus),
        "levi_factors": [f"{f}{r}" for f, r in factors],
        "central_torus": torus,
        "reldim": reldim,
        "platonic": parahoric.platonic_check(pt),
        "mp": grading,
    }
    lines = [
        f"type {payload['type']}, keep {payload['keep']}, removed {payload['removed']}",
        f"Levi: {payload['levi']}",
        f"relative dimension: {reldim}",
        f"Moy-Prasad period m = {grading['m']}" + (f" (sum over kept nodes: {grading['m_kept']})" if args.verbose else ""),
        "barycenter: " + " ".join(grading["barycenter"]),
    ]
    lines += [f"  V_{s['step']}: dim {s['dim']}" for s in grading["steps"]]
    rows = [["step", "dim"]] + [[s["step"], s["dim"]] for s in grading["steps"]]
    return Result(payload, lines, rows)


def cmd_mp(args) -> Result:
    pt = _parahoric(args)
    grading = _grading_payload(pt, args.verbose)
    lines = [f"m = {grading['m']}", "barycenter: " + " ".join(grading["barycenter"])]
    lines += [f"V_{s['step']}: dim {s['dim']}" for s in grading["steps"]]
    lines.append(f"total: {grading['total']}")
    if args.verbose:
        lines.insert(1, f"sum of marks over kept nodes: {grading['m_kept']}")
    rows = [["step", "dim"]] + [[s["step"], s["dim"]] for s in grading["steps"]]
    return Result(grading, lines, rows)


def cmd_rigidity_search(args) -> Result:
    rs = _rs(args)
    res = parahoric.rigidity_search(rs, args.places, dedupe=not args.no_dedupe, jobs=args.jobs)
    payload = {
        "type": str(rs.rtype),
        "places": args.places,
        "dim": rs.dim,
        "count": len(res),
        "tuples": [t.as_dict() for t in res],
    }
    header = ["reldims", "levis", "keep"]
    rows = [header] + [
        [
            ",".join(map(str, t.reldims)),
            ";".join(t.levis),
            ";".join(",".join(map(str, sorted(p.J))) or "-" for p in t.place_types),
        ]
        for t in res
    ]
    lines = [f"{len(res)} tuples for {rs.rtype} with {args.places} places (dim G = {rs.dim})"]
    lines += [f"({r[0]})  {r[1].replace(';', ' | ')}  keep {r[2].replace(';', ' | ')}" for r in rows[1:]]
    return Result(payload, lines, rows)


def cmd_classify(args) -> Result:
    rs = _rs(args)
    d = parahoric.extended_diagram(rs)
    if (args.keep is None) == (args.remove is None):
        raise UsageError("give exactly one of --keep or --remove")
    nodes = set(_ints(args.keep)) if args.keep is not None else set(range(d.node_count)) - set(_ints(args.remove))
    types = parahoric.classify_subdiagram(d, nodes)
    payload = {"type": str(rs.rtype), "nodes": sorted(nodes), "components": [f"{f}{r}" for f, r in types]}
    return Result(payload, [format_levi(types)])


def cmd_platonic(args) -> Result:
    pt = _parahoric(args)
    n = parahoric.platonic_check(pt)
    return Result({"n": n, "levi": format_levi(*parahoric.levi_type(pt))}, [str(n) if n else "none"])


# ---------------------------------------------------------------------------
# character sums


def _cyc_lines(x: charsums.CycInt) -> list[str]:
    if x.is_rational:
        return [str(x)]
    re, im = x.to_json()["approx"]
    return [f"{x}", f"coeffs {list(x.coeffs)}", f"approx {re:.6f}{im:+.6f}i"]


def cmd_kloosterman(args) -> Result:
    fn = charsums.kloosterman_via_moduli if args.via_moduli else charsums.kloosterman
    val = fn(args.n, args.p, args.a)
    payload = {"n": args.n, "p": args.p, "a": args.a, "via_moduli": args.via_moduli, "value": val.to_json()}
    return Result(payload, _cyc_lines(val), [["k", "coeff"]] + [[k, c] for k, c in enumerate(val.coeffs)])


def cmd_weil(args) -> Result:
    rep = charsums.weil_check(args.n, args.p)
    d = rep.as_dict()
    lines = [f"max |Kl_{args.n}| = {d['max_abs']:.6f} <= {d['bound']:.6f} (ratio {d['max_ratio']:.6f}): "
             + ("pass" if rep.passed else "FAIL")]
    return Result(d, lines)


def cmd_genericity(args) -> Result:
    ok = charsums.genericity_sl2(_ints(args.exponents), args.q)
    return Result({"generic": ok}, [str(ok).lower()])


def cmd_central_char(args) -> Result:
    ok = charsums.central_char_condition(_ints(args.exponents), args.q)
    return Result({"exists": ok}, [str(ok).lower()])


def _random_iplus(rng, p, N):
    b = [rng.randrange(p) for _ in range(N)]
    a = [1] + [rng.randrange(p) for _ in range(N - 1)]
    c = [0] + [rng.randrange(p) for _ in range(N - 1)]
    return charsums.TruncMat.solve_d(p, N, a, b, c)


def _random_airy(rng, p, N):
    b = [rng.randrange(p) for _ in range(N)]
    a = [1] + [rng.randrange(p) for _ in range(N - 1)]
    c = [0, b[0]] + [rng.randrange(p) for _ in range(N - 2)]
    return charsums.TruncMat.solve_d(p, N, a, b, c)


def homomorphism_check(kind: str, p: int, N: int, pairs: int, seed: int) -> dict:
    rng = random.Random(seed)
    failures = 0
    for _ in range(pairs):
        if kind == "kl":
            M, Q = _random_iplus(rng, p, N), _random_iplus(rng, p, N)
            lhs = charsums.kloosterman_projection(M @ Q)
            x, y = charsums.kloosterman_projection(M), charsums.kloosterman_projection(Q)
            rhs = ((x[0] + y[0]) % p, (x[1] + y[1]) % p)
        else:
            M, Q = _random_airy(rng, p, N), _random_airy(rng, p, N)
            lhs = charsums.airy_phi(M @ Q)
            rhs = (charsums.airy_phi(M) + charsums.airy_phi(Q)) % p
        failures += lhs != rhs
    return {"map": kind, "p": p, "N": N, "pairs": pairs, "seed": seed, "failures": failures, "pass": failures == 0}


def cmd_trunc_check(args) -> Result:
    d = homomorphism_check(args.map, args.p, args.N, args.pairs, args.seed)
    return Result(d, [f"{d['map']}: {d['pairs'] - d['failures']}/{d['pairs']} pairs additive"])


# ---------------------------------------------------------------------------
# conductor


def _load_json(path_or_text: str):
    p = Path(path_or_text)
    try:
        if p.exists():
            return json.loads(p.read_text())
        return json.loads(path_or_text)
    except ValueError as exc:
        raise conductor.ConductorError(f"invalid JSON: {exc}") from exc


def cmd_conductor(args) -> Result:
    if args.action == "check":
        inst = conductor.CohRigidityInstance.from_json(_load_json(args.instance))
        v = conductor.coh_rigidity_check(inst)
        d = v.as_dict()
        return Result(d, [f"deficit {d['deficit']}: " + ("rigid" if v.rigid else "not rigid")])
    prof = conductor.SlopeProfile.from_json(_load_json(args.profile))
    if args.action == "swan":
        n = conductor.swan(prof)
        return Result({"swan": n}, [str(n)])
    if args.action == "artin":
        n = conductor.artin(prof)
        return Result({"artin": n}, [str(n)])
    if args.action == "level":
        lam = conductor.slopes_bound_level(prof)
        return Result({"max_slope": str(lam)}, [str(lam)])
    rep = conductor.datum_parameter_match(args.reldim, prof)
    d = rep.as_dict()
    return Result(d, [f"a = {d['artin']}, reldim = {d['reldim']}: a == reldim {d['a_equals_reldim']}, "
                      f"a == 2 reldim {d['a_equals_2reldim']}"])


# ---------------------------------------------------------------------------
# groups

BUILTIN_GROUPS: dict[str, Callable[[], grouptuple.PermGroup]] = {
    "S3": lambda: grouptuple.symmetric_group(3),
    "S4": lambda: grouptuple.symmetric_group(4),
    "S5": lambda: grouptuple.symmetric_group(5),
    "A4": lambda: grouptuple.alternating_group(4),
    "A5": lambda: grouptuple.alternating_group(5),
    "D4": lambda: grouptuple.dihedral_group(4),
    "C2": lambda: grouptuple.cyclic_group(2),
}


def _group(source: str) -> grouptuple.PermGroup:
    p = Path(source)
    if p.exists():
        return grouptuple.PermGroup.from_json(p.read_text())
    if source.upper() in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[source.upper()]()
    raise grouptuple.GroupError(f"no group file or builtin group named {source!r}")


def _classes_payload(H) -> tuple[list, list[str], list[list]]:
    cl = grouptuple.conjugacy_classes(H)
    names = grouptuple.class_labels(cl)
    canon = grouptuple.canonical_labels(cl)
    payload = [
        {
            "label": n,
            "canonical": c,
            "order": k.order,
            "size": k.size,
            "representative": list(k.representative),
            "rational": grouptuple.is_rational_class(H, k),
        }
        for n, c, k in zip(names, canon, cl)
    ]
    lines = [f"{d['label']:>4}  {d['canonical']:<12} size {d['size']:<6} rep {d['representative']}"
             f"{'' if d['rational'] else '  (not rational)'}" for d in payload]
    rows = [["label", "canonical", "order", "size", "rational"]] + [
        [d["label"], d["canonical"], d["order"], d["size"], d["rational"]] for d in payload
    ]
    return payload, lines, rows


def _rigid(H, labels: str) -> Result:
    cl = grouptuple.conjugacy_classes(H)
    chosen = [grouptuple.find_class(cl, x) for x in labels.split(",")]
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rep = grouptuple.is_rigid_tuple(H, chosen)
    d = rep.as_dict()
    d["classes"] = labels.split(",")
    d["group_order"] = H.order
    d["class_algebra_count"] = grouptuple.class_algebra_count(H, chosen)
    lines = [
        f"solutions: {d['solution_count']} (class algebra: {d['class_algebra_count']})",
        f"orbits: {d['orbit_count']}",
        f"all generate: {str(d['all_generate']).lower()}",
        f"rational: {','.join(str(r).lower() for r in d['rational'])}",
        f"rigid: {str(d['rigid']).lower()}",
    ]
    if not rep.trivial_center:
        lines.append("warning: group has non-trivial center")
    return Result(d, lines)


def cmd_group(args) -> Result:
    H = _group(args.group)
    if args.action == "classes":
        payload, lines, rows = _classes_payload(H)
        return Result({"order": H.order, "classes": payload}, [f"|H| = {H.order}"] + lines, rows)
    if args.action == "rigid-tuple":
        if not args.classes:
            raise UsageError("--classes is required")
        return _rigid(H, args.classes)
    if not args.classes:
        raise UsageError("--classes is required")
    cl = grouptuple.conjugacy_classes(H)
    out = {x: grouptuple.is_rational_class(H, grouptuple.find_class(cl, x)) for x in args.classes.split(",")}
    return Result({"rational": out}, [f"{k}: {str(v).lower()}" for k, v in out.items()])


def cmd_rigid_tuple(args) -> Result:
    return _rigid(_group(args.group), args.classes)


# ---------------------------------------------------------------------------
# manifest


def run_capture(argv: Sequence[str]) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def sha256(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def run_manifest(path: str | Path) -> tuple[bool, list[str]]:
    """Run every entry of a manifest; returns (all passed, report lines)."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"manifest {path} not found")
    entries = json.loads(path.read_text())
    lines = []
    ok_all = True
    for k, entry in enumerate(entries):
        argv = entry["argv"]
        code, out, err = run_capture(argv)
        want_code = entry.get("expected_exit", 0)
        ok = code == want_code and sha256(out) == entry["expected_stdout_sha256"]
        tag = entry.get("name", " ".join(argv))
        lines.append(f"{'PASS' if ok else 'FAIL'} [{k}] {tag}")
        if not ok:
            ok_all = False
            if code != want_code:
                lines.append(f"  exit status {code}, expected {want_code}; stderr: {err.strip()}")
            expected = entry.get("expected_stdout")
            if expected is not None:
                diff = difflib.unified_diff(
                    expected.splitlines(keepends=True), out.splitlines(keepends=True), "expected", "actual"
                )
                lines.extend("  " + d.rstrip("\n") for d in diff)
            else:
                lines.append(f"  stdout sha256 {sha256(out)} != {entry['expected_stdout_sha256']}")
    lines.append(f"{sum(1 for l in lines if l.startswith('PASS'))}/{len(entries)} checks passed")
    return ok_all, lines


def record_manifest(entries: list[dict], path: str | Path) -> None:
    """Fill in expected outputs for manifest entries from the current build."""
    out = []
    for entry in entries:
        code, stdout, _ = run_capture(entry["argv"])
        rec = dict(entry)
        rec["expected_exit"] = code
        rec["expected_stdout"] = stdout
        rec["expected_stdout_sha256"] = sha256(stdout)
        out.append(rec)
    Path(path).write_text(json.dumps(out, indent=1) + "\n")


def cmd_manifest(args) -> Result:
    path = args.path or str(DATA / "acceptance_manifest.json")
    ok, lines = run_manifest(path)
    res = Result({"pass": ok, "report": lines}, lines)
    res.exit_code = 0 if ok else 1
    return res


# ---------------------------------------------------------------------------
# argument parser


def _add_output(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="mode", action="store_const", const="json", help="JSON output")
    g.add_argument("--tsv", dest="mode", action="store_const", const="tsv", help="tab-separated output")
    p.set_defaults(mode="human")


def _add_type(p):
    p.add_argument("--type", required=True, help="root system type, e.g. A2, G2, E8")


def _add_nodes(p):
    p.add_argument("--keep", help="extended-diagram nodes kept (the Levi diagram), e.g. 0,2,3")
    p.add_argument("--remove", help="extended-diagram nodes removed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rigidkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("roots", help="root system summary")
    _add_type(p)
    p.add_argument("--list", action="store_true", help="list all roots")
    p.set_defaults(func=cmd_roots)

    for name, func, hlp in [
        ("dominant", cmd_dominant, "dominant representative of a coweight"),
        ("dim-gr", cmd_dim_gr, "<2 rho, lambda> for a dominant coweight"),
    ]:
        p = sub.add_parser(name, help=hlp)
        _add_type(p)
        p.add_argument("--coweight", required=True, help="pairings with the simple roots")
        p.add_argument("--coroot", action="store_true", help="read --coweight in simple-coroot coordinates")
        p.set_defaults(func=func)

    p = sub.add_parser("affine", help="affine Weyl group: act, invset, length, relevant")
    p.add_argument("action", choices=["act", "invset", "length", "relevant"])
    _add_type(p)
    p.add_argument("--translation", help="translation in simple-coroot coordinates")
    p.add_argument("--word", help="word in affine simple reflections 0..r")
    p.add_argument("--element", help='JSON {"translation": [...], "word": [...]}')
    p.add_argument("--root", help="gradient for act (simple-root coordinates)")
    p.add_argument("--level", type=int, default=0)
    p.set_defaults(func=cmd_affine)

    p = sub.add_parser("parahoric", help="Levi type, relative dimension and Moy-Prasad table")
    _add_type(p)
    _add_nodes(p)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_parahoric)

    p = sub.add_parser("mp", help="Moy-Prasad grading of a parahoric")
    _add_type(p)
    _add_nodes(p)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_mp)

    p = sub.add_parser("rigidity-search", help="parahoric tuples with total relative dimension dim G")
    _add_type(p)
    p.add_argument("--places", type=int, default=3)
    p.add_argument("--no-dedupe", action="store_true", help="do not identify diagram automorphisms")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_rigidity_search)

    p = sub.add_parser("classify", help="Dynkin types of an extended-diagram subdiagram")
    _add_type(p)
    _add_nodes(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("platonic", help="n with dim L * n = |Phi|")
    _add_type(p)
    _add_nodes(p)
    p.set_defaults(func=cmd_platonic)

    p = sub.add_parser("kloosterman", help="exact Kloosterman sum Kl_n(p; a)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--via-moduli", action="store_true")
    p.set_defaults(func=cmd_kloosterman)

    p = sub.add_parser("weil", help="check the Weil bound for all a")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_weil)

    for name, func, hlp in [
        ("genericity", cmd_genericity, "genericity of SL2 tame characters"),
        ("central-char", cmd_central_char, "existence of a compatible central character"),
    ]:
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--exponents", required=True, help="character exponents, e.g. 1,1,2")
        p.add_argument("--q", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("trunc-check", help="randomised homomorphism check of the level-group maps")
    p.add_argument("--map", choices=["kl", "airy"], default="kl")
    p.add_argument("--p", type=int, default=5)
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--pairs", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_trunc_check)

    p = sub.add_parser("conductor", help="swan, artin, level, check, match")
    p.add_argument("action", choices=["swan", "artin", "level", "check", "match"])
    p.add_argument("--profile", help="slope profile JSON (file or literal)")
    p.add_argument("--instance", help="rigidity instance JSON (file or literal)")
    p.add_argument("--reldim", type=int, default=0)
    p.set_defaults(func=cmd_conductor)

    p = sub.add_parser("group", help="classes, rigid-tuple, rational")
    p.add_argument("action", choices=["classes", "rigid-tuple", "rational"])
    p.add_argument("--group", required=True, help="group JSON file or builtin name (S3, S4, A4, A5, D4, ...)")
    p.add_argument("--classes", help="comma-separated class labels")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("rigid-tuple", help="rigidity report for a class tuple")
    p.add_argument("--group", required=True)
    p.add_argument("--classes", required=True)
    p.set_defaults(func=cmd_rigid_tuple)

    p = sub.add_parser("manifest", help="run a manifest of commands and compare outputs")
    p.add_argument("path", nargs="?", help="manifest file (default: the shipped acceptance manifest)")
    p.set_defaults(func=cmd_manifest)

    for p in sub.choices.values():
        _add_output(p)
    return parser


DOMAIN_ERRORS = (ValueError, ArithmeticError, FileNotFoundError, KeyError)

# options whose values may start with a minus sign, e.g. --coweight -1,2
VECTOR_OPTIONS = {"--coweight", "--translation", "--root", "--exponents", "--a", "--level"}


def _join_negative_values(argv: list[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok in VECTOR_OPTIONS and nxt[:1] == "-" and nxt[1:2].isdigit():
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        res = args.func(args)
    except UsageError as exc:
        print(f"rigidkit {args.command}: usage error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"rigidkit {args.command}: error: {exc}", file=sys.stderr)
        return 1
    print(res.render(args.mode))
    return getattr(res, "exit_code", 0)


if __name__ == "__main__":
    sys.exit(main())

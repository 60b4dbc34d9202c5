"""Command-line front end.

Exit codes: 0 for a definite verdict (including a definite "no"), 2 for malformed
input, 3 when a bounded search ends with Unknown.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from typing import Any, Sequence

from . import bs, fixtures, gog, quotients, raag, subdirect
from .intlattice import DegenerateEdgeError, abelianization_invariants
from .subdirect import AmbientProduct, Budget, Factor, SubdirectInput
from .words import MalformedWordError

EXIT_OK, EXIT_MALFORMED, EXIT_UNKNOWN = 0, 2, 3


class InputError(ValueError):
    pass


# ---- loading -------------------------------------------------------------------

def _load_json(text: str) -> Any:
    if os.path.exists(text):
        with open(text) as fh:
            return json.load(fh)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not a file or JSON document: {text[:60]!r}") from exc


def _group_from_json(data: dict):
    if "ambient" in data:
        return SubdirectInput.from_json(data)
    if "G1" in data:
        return AmbientProduct.from_json(data)
    if "raag" in data or "gog" in data:
        return Factor.from_json(data)
    if "presentation" in data:
        return quotients.FinitePresentation.from_json(data["presentation"])
    if "generators" in data:
        return quotients.FinitePresentation.from_json(data)
    raise InputError("group JSON needs one of: raag, gog, presentation, G1/G2, ambient")


def _group_to_json(obj) -> dict:
    if isinstance(obj, quotients.FinitePresentation):
        return {"presentation": obj.to_json()}
    return obj.to_json()


def load_group(args):
    if getattr(args, "group", None):
        return _group_from_json(_load_json(args.group))
    name = getattr(args, "fixture", None)
    if not name:
        raise InputError("give --fixture NAME or --group JSON")
    if name in fixtures.SUBDIRECT:
        return fixtures.SUBDIRECT[name]
    if name in fixtures.RAAGS:
        return Factor(fixtures.RAAGS[name])
    try:
        return Factor(fixtures.gog_fixture(name))
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None


def _domain(obj):
    """Something with key / is_trivial / presentation / parse."""
    if isinstance(obj, SubdirectInput):
        return obj.ambient
    return obj


def _presentation(obj) -> quotients.FinitePresentation:
    if isinstance(obj, quotients.FinitePresentation):
        return obj
    return _domain(obj).presentation()


def _factor(obj, kind: str | None = None) -> Factor:
    if not isinstance(obj, Factor) or (kind and obj.kind != kind):
        raise InputError(f"this command needs a {kind or 'RAAG or graph-of-groups'} factor")
    return obj


def _split_list(text: str | None) -> list[str]:
    if not text:
        return []
    return [s.strip() for s in text.split(",") if s.strip()]


def _pair(text: str) -> tuple[str, str]:
    if "|" not in text:
        raise InputError(f"expected 'u | v', got {text!r}")
    a, b = text.split("|", 1)
    return a.strip(), b.strip()


# ---- report ----------------------------------------------------------------------

def make_report(command: str, inputs: dict, verdict: str, certificate: Any = None, budgets: dict | None = None,
                extra: dict | None = None) -> dict:
    digest = hashlib.sha256(json.dumps(inputs, sort_keys=True).encode()).hexdigest()
    rep = {"command": command, "inputs": inputs, "inputs_digest": digest, "verdict": verdict,
           "certificate": certificate, "budgets": budgets or {}}
    if extra:
        rep.update(extra)
    return rep


def _budget(args) -> Budget:
    return Budget(max_length=args.budget_length, max_degree=args.budget_degree, max_steps=args.budget_steps)


def _fmt_words(fmt, ws):
    return [fmt(w) for w in ws]


# ---- commands --------------------------------------------------------------------

def cmd_nf(args):
    if args.bs:
        p = _bs_params(args.bs)
        w = bs.parse(args.word)
        nf = bs.fmt(bs.bs_normal_form(p, w))
        return make_report("nf", {"bs": [p.m, p.n], "word": args.word}, nf)
    G = load_group(args)
    D = _domain(G)
    if isinstance(D, AmbientProduct):
        w = D.parse(args.word)
        a, b = D.split(w)
        nf = D.format(D.embed(D.G1.normal_word(a), D.G2.normal_word(b)))
    else:
        F = _factor(D)
        nf = F.format(F.normal_word(F.parse(args.word)))
    return make_report("nf", {"group": _group_to_json(D), "word": args.word}, nf)


def cmd_wp(args):
    if args.bs:
        p = _bs_params(args.bs)
        triv = bs.bs_word_problem(p, bs.parse(args.word))
        return make_report("wp", {"bs": [p.m, p.n], "word": args.word}, "trivial" if triv else "nontrivial")
    D = _domain(load_group(args))
    if isinstance(D, quotients.FinitePresentation):
        raise InputError("word problem needs a RAAG, graph of groups or product")
    triv = D.is_trivial(D.parse(args.word))
    return make_report("wp", {"group": _group_to_json(D), "word": args.word}, "trivial" if triv else "nontrivial")


def cmd_conj(args):
    F = _factor(load_group(args), "raag")
    P = F.group
    u, v = P.parse(args.u), P.parse(args.v)
    yes = raag.conjugacy_problem(P, u, v)
    cert = {"key_u": P.format(raag.conjugacy_class_key(P, u)), "key_v": P.format(raag.conjugacy_class_key(P, v))}
    return make_report("conj", {"group": F.to_json(), "u": args.u, "v": args.v}, "yes" if yes else "no", cert)


def cmd_multi_conj(args):
    F = _factor(load_group(args), "raag")
    P = F.group
    pairs = [_pair(x) for x in args.pairs]
    res = raag.multiple_conjugacy(P, [(P.parse(a), P.parse(b)) for a, b in pairs], args.budget_length,
                                  args.budget_steps)
    cert = {"witness": P.format(res.witness)} if res.witness is not None else res.obstruction
    return make_report("multi-conj", {"group": F.to_json(), "pairs": [f"{a} | {b}" for a, b in pairs]},
                       res.status, cert, {"radius": args.budget_length, "searched": res.searched})


def cmd_member(args):
    G = load_group(args)
    D = _domain(G)
    H = [D.parse(h) for h in _split_list(args.sub)]
    if not H:
        raise InputError("--sub needs at least one generator")
    g = D.parse(args.word)
    v = subdirect.membership_semidecide(D, H, g, _budget(args))
    cert = None
    if v.status == "yes":
        cert = {"h_word": [list(x) for x in v.witness], "expanded": D.format(v.expanded)}
    elif v.status == "no":
        cert = v.certificate.to_json()
    return make_report("member", {"group": _group_to_json(D), "sub": _split_list(args.sub), "word": args.word},
                       v.status, cert,
                       {"positive_steps": v.positive_steps, "negative_steps": v.negative_steps,
                        "max_steps": args.budget_steps, "max_length": args.budget_length,
                        "max_degree": args.budget_degree})


def _subdirect(args) -> SubdirectInput:
    G = load_group(args)
    if not isinstance(G, SubdirectInput):
        raise InputError("this command needs a subdirect product (fixture or {'ambient':..,'generators':..})")
    return G


def cmd_fiber(args):
    S = _subdirect(args)
    rep = subdirect.fiber_search(S, args.side, args.budget_length)
    F = S.ambient.factor(args.side)
    found = [F.format(p.first if args.side == 1 else p.second) for p in rep.found]
    return make_report("fiber", {"group": S.to_json(), "side": args.side}, "found" if found else "empty",
                       {"found": found, "abstract_words": [S.alphabet.format(w) for w in rep.abstract_words]},
                       {"radius": args.budget_length})


def cmd_classify(args):
    S = _subdirect(args)
    rep = subdirect.classify_structure(S, _budget(args))
    return make_report("classify", {"group": S.to_json()}, rep.bucket, rep.to_json(S),
                       {"radius": args.budget_length, "max_cosets": args.budget_steps})


def cmd_coset_cover(args):
    F = _factor(load_group(args))
    sub = [F.parse(x) for x in _split_list(args.sub)]
    extra = [F.parse(x) for x in _split_list(args.extra)]
    cosets = [F.parse(x) for x in _split_list(args.cosets)] if args.cosets is not None else [()]
    c = F.parse(args.c)
    res = subdirect.coset_cover_check(F, sub, extra, cosets, c, args.radius, args.witness_budget)
    cert = {"element": F.format(res.element) if res.element is not None else None, "decidable": res.decidable,
            "factored": res.factorizations}
    return make_report("coset-cover", {"group": F.to_json(), "sub": args.sub, "extra": args.extra,
                                       "cosets": args.cosets, "c": args.c, "radius": args.radius,
                                       "witness_budget": args.witness_budget}, res.status, cert)


def _bs_params(text) -> bs.BSParams:
    try:
        m, n = (int(x) for x in str(text).split(","))
    except ValueError:
        raise InputError(f"expected m,n; got {text!r}") from None
    return bs.BSParams(m, n)


def cmd_bs_h1(args):
    p = bs.BSParams(args.m, args.n)
    xw = bs.parse_xi(args.xiword)
    val = bs.h1_image(p, xw)
    return make_report("bs-h1", {"m": args.m, "n": args.n, "xiword": [list(x) for x in xw]}, str(val),
                       {"p": val.p, "k": val.k, "base": val.base,
                        "in_commutator_subgroup": val.is_zero()})


def cmd_bs_power_identity(args):
    p = bs.BSParams(args.m, args.n)
    r = bs.conjugation_power_identity(p, args.M, args.k)
    return make_report("bs-power-identity", {"m": args.m, "n": args.n, "M": args.M, "k": args.k},
                       "holds" if r.holds else "fails",
                       {"exponent": r.exponent, "predicted": r.predicted, "literal": r.literal,
                        "literal_holds": r.literal_holds})


def cmd_bs_power_in_n(args):
    p = bs.BSParams(args.m, args.n)
    q = bs.power_in_N_exponent(p, args.M, args.k)
    w, e = bs.power_in_N_witness(p, args.M, args.k)
    return make_report("bs-power-in-n", {"m": args.m, "n": args.n, "M": args.M, "k": args.k}, str(q),
                       {"q": q, "britton_exponent": e, "agrees": e == q})


def _tc(args):
    G = load_group(args)
    P = _presentation(G)
    sub = [P.parse(x) for x in _split_list(args.sub)]
    return G, P, sub, quotients.todd_coxeter(P, sub, max_cosets=args.budget_steps)


def cmd_tc(args):
    G, P, sub, res = _tc(args)
    inputs = {"presentation": P.to_json(), "sub": _split_list(args.sub)}
    if res.status != "closed":
        return make_report("tc", inputs, "unknown", None, {"max_cosets": args.budget_steps,
                                                             "cosets_defined": res.cosets_defined})
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(res.table.to_csv(P.alphabet))
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(res.table.to_dot(P.alphabet))
    return make_report("tc", inputs, f"index {res.index}", {"index": res.index, "table": res.table.rows},
                       {"max_cosets": args.budget_steps, "cosets_defined": res.cosets_defined})


def cmd_rs(args):
    G, P, sub, res = _tc(args)
    inputs = {"presentation": P.to_json(), "sub": _split_list(args.sub)}
    if res.status != "closed":
        return make_report("rs", inputs, "unknown", None, {"max_cosets": args.budget_steps})
    sp = quotients.reidemeister_schreier(P, res)
    rank, torsion = abelianization_invariants(sp.presentation)
    return make_report("rs", inputs, f"{sp.ngens} generators",
                       {"presentation": sp.presentation.to_json(),
                        "generator_words": _fmt_words(P.format, sp.generator_words),
                        "abelianization": {"rank": rank, "torsion": torsion}, "index": res.index},
                       {"max_cosets": args.budget_steps})


def cmd_homs(args):
    P = _presentation(load_group(args))
    out, exhausted = [], False
    for a in quotients.enumerate_homs(P, args.budget_degree, args.budget_steps):
        if a is quotients.BUDGET_EXHAUSTED:
            exhausted = True
            break
        out.append(a.to_json()["perms"])
    verdict = "unknown" if exhausted else f"{len(out)} homomorphisms"
    return make_report("homs", {"presentation": P.to_json(), "degree": args.budget_degree}, verdict,
                       {"assignments": out, "complete": not exhausted}, {"max_nodes": args.budget_steps})


def cmd_separate(args):
    P = _presentation(load_group(args))
    sub = [P.parse(x) for x in _split_list(args.sub)]
    g = P.parse(args.word)
    cert = quotients.separate(P, sub, g, args.budget_degree, args.budget_steps)
    inputs = {"presentation": P.to_json(), "sub": _split_list(args.sub), "word": args.word}
    if cert is None:
        return make_report("separate", inputs, "unknown", None,
                           {"max_degree": args.budget_degree, "max_steps": args.budget_steps})
    return make_report("separate", inputs, "separated", cert.to_json(),
                       {"max_degree": args.budget_degree, "max_steps": args.budget_steps})


def cmd_wpd(args):
    F = _factor(load_group(args), "gog")
    G = F.group
    g = gog.wpd_candidate(G)
    kind = gog.classify_isometry(G, g)
    res = gog.check_relative_wpd(G, g, args.radius)
    return make_report("wpd", {"group": F.to_json(), "radius": args.radius}, res.status,
                       {"candidate": gog.format_element(G, g), "isometry": kind,
                        "counterexample": res.counterexample, "checked": res.checked})


def cmd_kernel(args):
    F = _factor(load_group(args), "gog")
    G = F.group
    res = gog.kernel_of_action(G)
    cert = dict(res.certificate)
    if res.generator is not None:
        cert["generator"] = gog.format_element(G, res.generator)
    if res.vector is not None:
        cert["vector"] = list(res.vector)
    cert["reason"] = res.reason
    return make_report("kernel-of-action", {"group": F.to_json()}, res.status, cert)


def cmd_check_class(args):
    F = _factor(load_group(args))
    if F.kind == "raag":
        X = F.group.graph
        cyc = raag.induced_long_cycle(X)
        cert = {"coherent": raag.check_droms_coherent(X), "dimension": raag.dimension(X),
                "induced_cycle": [F.group.alphabet.names[i] for i in cyc] if cyc else None}
        verdict = "coherent" if cert["coherent"] else "not coherent"
    else:
        G = F.group
        loops = [{"edge": r.edge, "m": r.m, "n": r.n, "unimodular": r.unimodular}
                 for r in gog.unimodular_loop_check(G)]
        cert = {"isolated_edge_groups": gog.has_isolated_edge_groups(G), "loops": loops}
        verdict = "isolated" if cert["isolated_edge_groups"] else "not isolated"
    return make_report("check-class", {"group": F.to_json()}, verdict, cert)


# ---- verify ----------------------------------------------------------------------

def verify_report(rep: dict) -> bool:
    """Re-check the certificate carried by a report without rerunning the search."""
    cmd, inp, cert, verdict = rep["command"], rep["inputs"], rep.get("certificate"), rep["verdict"]
    if cmd == "member":
        D = _domain(_group_from_json(inp["group"]))
        H = [D.parse(h) for h in inp["sub"]]
        g = D.parse(inp["word"])
        if verdict == "yes":
            w = []
            for j, s in cert["h_word"]:
                w.extend(H[j] if s > 0 else tuple((i, -e) for i, e in reversed(H[j])))
            return D.is_trivial(tuple((i, -e) for i, e in reversed(g)) + tuple(w))
        if verdict == "no":
            return quotients.verify_separation(D.presentation(), H, g,
                                               quotients.SeparationCertificate.from_json(cert))
        return False
    if cmd == "separate" and verdict == "separated":
        P = quotients.FinitePresentation.from_json(inp["presentation"])
        return quotients.verify_separation(P, [P.parse(x) for x in inp["sub"]], P.parse(inp["word"]),
                                           quotients.SeparationCertificate.from_json(cert))
    if cmd == "multi-conj" and verdict == "yes":
        F = _group_from_json(inp["group"])
        P = F.group
        g = P.parse(cert["witness"])
        gi = tuple((i, -s) for i, s in reversed(g))
        return all(raag.word_problem(P, g + P.parse(a) + gi + tuple((i, -s) for i, s in reversed(P.parse(b))))
                   for a, b in map(_pair, inp["pairs"]))
    if cmd == "tc" and cert:
        P = quotients.FinitePresentation.from_json(inp["presentation"])
        table = quotients.CosetTable(P.ngens, [list(r) for r in cert["table"]])
        return quotients.validate_table(P, [P.parse(x) for x in inp["sub"]], table)
    if cmd == "homs":
        P = quotients.FinitePresentation.from_json(inp["presentation"])
        perms = [quotients.PermAssignment(inp["degree"], tuple(map(tuple, a))) for a in cert["assignments"]]
        return len(set(perms)) == len(perms) and all(a.is_homomorphism(P) for a in perms)
    if cmd == "kernel-of-action":
        F = _group_from_json(inp["group"])
        G = F.group
        res = gog.kernel_of_action(G)
        return res.status == verdict and gog.verify_kernel(G, res)
    if cmd == "bs-power-in-n":
        p = bs.BSParams(inp["m"], inp["n"])
        return bs.power_in_N_witness(p, inp["M"], inp["k"])[1] == cert["q"]
    if cmd == "bs-power-identity":
        p = bs.BSParams(inp["m"], inp["n"])
        lhs = bs.tpow(-inp["k"]) + bs.xpow(abs(p.m) ** inp["M"] * p.n ** inp["M"]) + bs.tpow(inp["k"])
        return bs.x_power_of(p, lhs) == cert["exponent"]
    if cmd == "bs-h1":
        p = bs.BSParams(inp["m"], inp["n"])
        return str(bs.h1_image(p, bs.parse_xi(inp["xiword"]))) == verdict
    if cmd == "wp":
        if "bs" in inp:
            p = bs.BSParams(*inp["bs"])
            return bs.bs_word_problem(p, bs.parse(inp["word"])) == (verdict == "trivial")
        D = _domain(_group_from_json(inp["group"]))
        return D.is_trivial(D.parse(inp["word"])) == (verdict == "trivial")
    if cmd == "classify":
        S = _group_from_json(inp["group"])
        A = S.ambient
        for f in cert["fibers"]:
            on, off = A.factor(f["side"]), A.factor(3 - f["side"])
            if any(on.is_trivial(on.parse(w)) for w in f["found"]):
                return False
        if verdict == "finite-index":
            return cert["index_in_product"] is not None and None not in cert["quotient_orders"]
        return True
    raise InputError(f"no verifier for command {cmd!r} with verdict {verdict!r}")


def cmd_verify(args):
    rep = _load_json(args.report)
    ok = verify_report(rep)
    return make_report("verify", {"report_digest": rep.get("inputs_digest"), "command": rep.get("command")},
                       "verified" if ok else "rejected")


def cmd_fixtures(args):
    return make_report("fixtures", {}, "listed", fixtures.names())


# ---- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-steps", type=int, default=10_000, help="search steps / coset limit")
    common.add_argument("--budget-degree", type=int, default=3, help="largest symmetric group degree")
    common.add_argument("--budget-length", type=int, default=6, help="word length / ball radius")
    common.add_argument("--json", action="store_true", help="print the machine-readable report")
    common.add_argument("--timing", action="store_true", help="add wall time to the report")
    common.add_argument("--fixture", help="named example group (see the 'fixtures' command)")
    common.add_argument("--group", help="group as JSON text or a path to a JSON file")

    ap = argparse.ArgumentParser(prog="gogroups", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("nf", cmd_nf, "normal form of a word")
    p.add_argument("word")
    p.add_argument("--bs", help="use the dedicated BS(m,n) model, given as m,n")
    p = add("wp", cmd_wp, "word problem")
    p.add_argument("word")
    p.add_argument("--bs", help="use the dedicated BS(m,n) model, given as m,n")
    p = add("conj", cmd_conj, "conjugacy in a RAAG")
    p.add_argument("u")
    p.add_argument("v")
    p = add("multi-conj", cmd_multi_conj, "simultaneous conjugacy 'u | v' pairs in a RAAG")
    p.add_argument("pairs", nargs="+")
    p = add("member", cmd_member, "membership semi-decision")
    p.add_argument("word")
    p.add_argument("--sub", required=True, help="comma-separated subgroup generators")
    p = add("fiber", cmd_fiber, "search the fiber L_side of a subdirect product")
    p.add_argument("--side", type=int, choices=(1, 2), default=1)
    p = add("classify", cmd_classify, "structure evidence for a subdirect product")
    p = add("coset-cover", cmd_coset_cover, "bounded coset-cover check")
    p.add_argument("--sub", default="", help="comma-separated subgroup generators")
    p.add_argument("--extra", default="", help="comma-separated extra generators")
    p.add_argument("--cosets", default=None, help="comma-separated coset representatives (default: 1)")
    p.add_argument("--c", default="1", help="the element c")
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--witness-budget", type=int, default=3)
    p = add("bs-h1", cmd_bs_h1, "image of an x_i-word in Z[1/mn]")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("xiword", help='JSON list [[i, sign], ...]')
    for name, fn in (("bs-power-identity", cmd_bs_power_identity), ("bs-power-in-n", cmd_bs_power_in_n)):
        p = add(name, fn, "exponent identities in BS(m,n)")
        p.add_argument("m", type=int)
        p.add_argument("n", type=int)
        p.add_argument("M", type=int)
        p.add_argument("k", type=int)
    for name, fn in (("tc", cmd_tc), ("rs", cmd_rs)):
        p = add(name, fn, "Todd-Coxeter" if name == "tc" else "Reidemeister-Schreier")
        p.add_argument("--sub", default="", help="comma-separated subgroup generators")
        p.add_argument("--csv", help="write the coset table as CSV")
        p.add_argument("--dot", help="write the coset table as DOT")
    add("homs", cmd_homs, "homomorphisms to S_n, n = --budget-degree")
    p = add("separate", cmd_separate, "find a finite quotient separating a word from a subgroup")
    p.add_argument("word")
    p.add_argument("--sub", required=True)
    p = add("wpd", cmd_wpd, "WPD candidate and bounded relative-WPD check")
    p.add_argument("--radius", type=int, default=4)
    add("kernel-of-action", cmd_kernel, "kernel of the action on the tree")
    add("check-class", cmd_check_class, "coherence/dimension or isolated/unimodular checks")
    p = add("verify", cmd_verify, "re-check the certificate in a JSON report")
    p.add_argument("report", help="path or JSON text")
    add("fixtures", cmd_fixtures, "list the named fixtures")
    return ap


def _human(rep: dict) -> str:
    lines = [f"{rep['command']}: {rep['verdict']}"]
    cert = rep.get("certificate")
    if isinstance(cert, dict):
        for k, v in cert.items():
            if k == "table":
                continue
            lines.append(f"  {k}: {json.dumps(v) if not isinstance(v, str) else v}")
    elif cert is not None:
        lines.append(f"  certificate: {json.dumps(cert)}")
    if rep.get("budgets"):
        lines.append("  budgets: " + ", ".join(f"{k}={v}" for k, v in rep["budgets"].items()))
    if "wall_time" in rep:
        lines.append(f"  wall time: {rep['wall_time']:.3f}s")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    try:
        rep = args.func(args)
    except (InputError, MalformedWordError, DegenerateEdgeError, KeyError, json.JSONDecodeError,
            bs.UnsupportedParameters, bs.NotInNormalClosure, gog.ConstructionUnavailable,
            gog.PreconditionError, ValueError) as exc:
        msg = exc.args[0] if exc.args else type(exc).__name__
        if args.json:
            print(json.dumps({"command": args.command, "error": str(msg), "kind": type(exc).__name__},
                             sort_keys=True))
        else:
            print(f"error: {msg}", file=sys.stderr)
        return EXIT_MALFORMED
    except bs.BudgetExceeded as exc:
        rep = make_report(args.command, {}, "unknown", {"reason": str(exc)})
    if args.timing:
        rep["wall_time"] = time.perf_counter() - t0
    print(json.dumps(rep, sort_keys=True) if args.json else _human(rep))
    if args.command == "verify":
        return EXIT_OK if rep["verdict"] == "verified" else 1
    return EXIT_UNKNOWN if rep["verdict"] == "unknown" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

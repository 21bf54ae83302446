"""Command-line interface: expression and spec-document parsing, report
emitters, and the subcommands

    branches classify curve quiver threefold surface blowup decide snf table

Exit codes: 0 success, 1 input error, 2 unsupported computation
(a branch count that would need an uncertifiable field extension).
Reports go to stdout as text, or as stable-key-ordered JSON with --json.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .blowup import BlowupPipeline, BlowupStep
from .curves import CurveSpec, DualGraph, GeneralCurvePiece, betti1, \
    curve_k_minus_one, is_tree_of_lines
from .errors import ExtensionUnsupported, InputError, KMinusOneError, \
    SpecValidationError
from .exact import BiPoly, FinAbGroup, IntMatrix, cokernel, smith_normal_form
from .germs import BranchReport, branch_count, branch_count_factored
from .localsing import LocalSingularity, ade_germ, ade_labels, ade_lookup, \
    classify_cAn, from_branch_number
from .parsing import parse_polynomial, render_polynomial
from .quiver import AlgebraBasis, QuiverWithRelations, algebra_basis, burban_quiver
from .varieties import EnoughWeil, GlobalReport, SurfaceResolutionSpec, \
    VarietySpec, del_pezzo_table, surface_k_minus_one, threefold_invariants
from .verdicts import Verdict, decide


# ---------------------------------------------------------------------------
# spec documents
# ---------------------------------------------------------------------------

def _check_keys(doc: dict, path: str, allowed, required):
    if not isinstance(doc, dict):
        raise SpecValidationError(path, "expected an object")
    for key in doc:
        if key not in allowed:
            raise SpecValidationError(f"{path}.{key}" if path else key,
                                      "unknown field")
    for key in required:
        if key not in doc:
            raise SpecValidationError(f"{path}.{key}" if path else key,
                                      "required field missing")


def _nat(doc, key, path, minimum=0):
    v = doc[key]
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise SpecValidationError(f"{path}.{key}" if path else key,
                                  f"expected an integer >= {minimum}")
    return v


def _parse_graph(doc, path) -> DualGraph:
    _check_keys(doc, path, {"vertices", "edges", "rational", "smooth_p1"},
                {"vertices"})
    vertices = _nat(doc, "vertices", path, minimum=0)
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise SpecValidationError(f"{path}.edges", "expected a list of pairs")
    pairs = []
    for i, e in enumerate(edges):
        if (not isinstance(e, list)) or len(e) != 2 \
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e):
            raise SpecValidationError(f"{path}.edges[{i}]",
                                      "expected a pair of vertex indices")
        pairs.append((e[0], e[1]))
    flags = {}
    for name in ("rational", "smooth_p1"):
        if name in doc:
            val = doc[name]
            if not isinstance(val, list) or not all(isinstance(x, bool) for x in val):
                raise SpecValidationError(f"{path}.{name}",
                                          "expected a list of booleans")
            flags[name] = tuple(val)
    try:
        return DualGraph(vertices, tuple(pairs),
                         flags.get("rational", ()), flags.get("smooth_p1", ()))
    except ValueError as exc:
        raise SpecValidationError(path, str(exc)) from exc


def _parse_matrix(rows, path) -> IntMatrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SpecValidationError(path, "expected an array of arrays of integers")
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if not isinstance(x, int) or isinstance(x, bool):
                raise SpecValidationError(f"{path}[{i}][{j}]", "expected an integer")
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise SpecValidationError(path, "ragged matrix rows")
    try:
        return IntMatrix.from_rows(rows) if rows else IntMatrix(0, 0, ())
    except ValueError as exc:
        raise SpecValidationError(path, str(exc)) from exc


def parse_curve_document(doc) -> CurveSpec:
    _check_keys(doc, "", {"kind", "graph", "components"}, {"kind"})
    if ("graph" in doc) == ("components" in doc):
        raise SpecValidationError("", "give exactly one of 'graph', 'components'")
    if "graph" in doc:
        return CurveSpec(graph=_parse_graph(doc["graph"], "graph"))
    comps = doc["components"]
    if not isinstance(comps, list) or not comps:
        raise SpecValidationError("components", "expected a nonempty list")
    pieces = []
    for i, c in enumerate(comps):
        path = f"components[{i}]"
        _check_keys(c, path, {"irreducible_components", "branch_numbers"},
                    {"irreducible_components"})
        n = _nat(c, "irreducible_components", path, minimum=1)
        brs = c.get("branch_numbers", [])
        if not isinstance(brs, list) \
                or not all(isinstance(b, int) and not isinstance(b, bool) and b >= 1
                           for b in brs):
            raise SpecValidationError(f"{path}.branch_numbers",
                                      "expected a list of integers >= 1")
        pieces.append(GeneralCurvePiece(n, tuple(brs)))
    return CurveSpec(pieces=tuple(pieces))


def _parse_singularity(entry, path) -> LocalSingularity:
    if not isinstance(entry, dict) or len(entry) != 1:
        raise SpecValidationError(
            path, "expected exactly one of {'ade': ...}, {'germ': ...}, "
            "{'branches': ...}")
    ((key, value),) = entry.items()
    if key == "ade":
        if (not isinstance(value, list)) or len(value) != 2 \
                or not isinstance(value[0], str) \
                or not isinstance(value[1], int) or isinstance(value[1], bool):
            raise SpecValidationError(f"{path}.ade",
                                      "expected [family, index] like ['D', 4]")
        return ade_lookup(value[0], value[1])
    if key == "germ":
        if not isinstance(value, str):
            raise SpecValidationError(f"{path}.germ", "expected an expression string")
        return classify_cAn(parse_polynomial(value))
    if key == "branches":
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise SpecValidationError(f"{path}.branches", "expected an integer >= 1")
        return from_branch_number(value)
    raise SpecValidationError(f"{path}.{key}", "unknown singularity form")


def parse_threefold_document(doc) -> VarietySpec:
    _check_keys(doc, "", {"kind", "label", "pic_rank", "cl_rank", "defect",
                          "singularities", "matrix"},
                {"kind", "pic_rank", "singularities"})
    if ("cl_rank" in doc) == ("defect" in doc):
        raise SpecValidationError("", "give exactly one of 'cl_rank', 'defect'")
    pic = _nat(doc, "pic_rank", "")
    cl = _nat(doc, "cl_rank", "") if "cl_rank" in doc else pic + _nat(doc, "defect", "")
    sings = doc["singularities"]
    if not isinstance(sings, list):
        raise SpecValidationError("singularities", "expected a list")
    singularities = tuple(_parse_singularity(s, f"singularities[{i}]")
                          for i, s in enumerate(sings))
    matrix = _parse_matrix(doc["matrix"], "matrix") if "matrix" in doc else None
    label = doc.get("label", "")
    if not isinstance(label, str):
        raise SpecValidationError("label", "expected a string")
    try:
        return VarietySpec(dimension=3, singularities=singularities,
                           pic_rank=pic, cl_rank=cl,
                           restriction_matrix=matrix, label=label)
    except ValueError as exc:
        raise SpecValidationError("", str(exc)) from exc


def parse_surface_document(doc) -> SurfaceResolutionSpec:
    _check_keys(doc, "", {"kind", "label", "pic_rank", "resolution_pic_rank",
                          "exceptional_components", "toric_gorenstein",
                          "singularity_orders", "matrix"},
                {"kind", "pic_rank", "resolution_pic_rank",
                 "exceptional_components"})
    toric = doc.get("toric_gorenstein", False)
    if not isinstance(toric, bool):
        raise SpecValidationError("toric_gorenstein", "expected a boolean")
    orders = doc.get("singularity_orders", [])
    if not isinstance(orders, list) \
            or not all(isinstance(n, int) and not isinstance(n, bool) and n >= 2
                       for n in orders):
        raise SpecValidationError("singularity_orders",
                                  "expected a list of integers >= 2")
    matrix = _parse_matrix(doc["matrix"], "matrix") if "matrix" in doc else None
    label = doc.get("label", "")
    if not isinstance(label, str):
        raise SpecValidationError("label", "expected a string")
    spec = SurfaceResolutionSpec(
        pic_rank=_nat(doc, "pic_rank", ""),
        resolution_pic_rank=_nat(doc, "resolution_pic_rank", ""),
        exceptional_components=_nat(doc, "exceptional_components", ""),
        toric_gorenstein=toric,
        singularity_orders=tuple(orders),
        restriction_matrix=matrix,
        label=label)
    if toric and not spec.is_smooth and not spec.singularity_orders:
        raise SpecValidationError(
            "singularity_orders",
            "a singular Gorenstein toric surface needs its cyclic quotient orders")
    return spec


def parse_blowup_document(doc) -> BlowupPipeline:
    _check_keys(doc, "", {"kind", "steps"}, {"kind", "steps"})
    steps_doc = doc["steps"]
    if not isinstance(steps_doc, list) or not steps_doc:
        raise SpecValidationError("steps", "expected a nonempty list")
    steps = []
    for i, s in enumerate(steps_doc):
        path = f"steps[{i}]"
        _check_keys(s, path, {"center", "center_germs"}, {"center"})
        center = _parse_graph(s["center"], f"{path}.center")
        germs = ()
        if "center_germs" in s:
            raw = s["center_germs"]
            if not isinstance(raw, list) or not all(isinstance(g, str) for g in raw):
                raise SpecValidationError(f"{path}.center_germs",
                                          "expected a list of expression strings")
            germs = tuple(parse_polynomial(g) for g in raw)
        steps.append(BlowupStep(center=center, center_germs=germs))
    return BlowupPipeline(steps=tuple(steps))


_KIND_PARSERS = {
    "curve": parse_curve_document,
    "quiver": parse_curve_document,
    "threefold": parse_threefold_document,
    "surface": parse_surface_document,
    "blowup": parse_blowup_document,
}


def parse_spec_document(doc):
    """Validate and convert a JSON spec document; the top-level 'kind'
    selects the schema.  Unknown fields are rejected with a field path."""
    if not isinstance(doc, dict):
        raise SpecValidationError("", "expected a JSON object")
    kind = doc.get("kind")
    if kind not in _KIND_PARSERS:
        raise SpecValidationError(
            "kind", "expected one of 'curve', 'threefold', 'surface', "
            "'blowup', 'quiver'")
    return _KIND_PARSERS[kind](doc)


# ---------------------------------------------------------------------------
# report rendering
# ---------------------------------------------------------------------------

def _group_json(g: FinAbGroup):
    return {"rank": g.free_rank, "torsion": list(g.invariant_factors)}


def _matrix_json(m: IntMatrix):
    return {"rows": m.rows, "cols": m.cols, "entries": m.to_rows()}


def _quiver_lines(q: QuiverWithRelations):
    lines = [f"quiver on {q.vertices} vertices"]
    for a in q.arrows:
        lines.append(f"  {a.name}: {a.source + 1} -> {a.target + 1}")
    rels = ", ".join(f"{q.arrows[i].name}·{q.arrows[j].name} = 0"
                     for i, j in q.relations)
    lines.append(f"relations: {rels}" if q.relations else "relations: none")
    return lines


def _quiver_json(q: QuiverWithRelations):
    return {
        "vertices": q.vertices,
        "arrows": [{"name": a.name, "source": a.source + 1, "target": a.target + 1}
                   for a in q.arrows],
        "relations": [[q.arrows[i].name, q.arrows[j].name] for i, j in q.relations],
    }


def render_branch_report(rep: BranchReport, germ_text: str = ""):
    lines = [f"germ: {germ_text}"] if germ_text else []
    lines += [
        f"ord(g) = {rep.order}",
        f"cA index n = {rep.cAn_index}",
        f"branches = {rep.branch_count}",
        f"local Cl rank = {rep.branch_count - 1}",
    ]
    data = {"order": rep.order, "cA_index": rep.cAn_index,
            "branches": rep.branch_count, "local_cl_rank": rep.branch_count - 1}
    if germ_text:
        data["germ"] = germ_text
    return "\n".join(lines), data


def render_local_singularity(sing: LocalSingularity, germ_text: str = ""):
    cl = FinAbGroup.free(sing.cl_rank)
    lines = [f"germ: {germ_text}"] if germ_text else []
    lines += [f"cA index n = {sing.n if sing.n is not None else 'undetermined'}",
              f"branch number br = {sing.br}",
              f"local class group Cl = {cl}"]
    if sing.is_node:
        lines.append("ordinary double point (node)")
    data = {"cA_index": sing.n, "branches": sing.br,
            "local_cl_rank": sing.cl_rank, "node": sing.is_node}
    if germ_text:
        data["germ"] = germ_text
    return "\n".join(lines), data


def render_curve_report(spec: CurveSpec):
    k = curve_k_minus_one(spec)
    lines = []
    data = {"k_minus_one": _group_json(k)}
    if spec.graph is not None:
        g = spec.graph
        lam = betti1(g)
        tree = is_tree_of_lines(g)
        lines.append(f"nodal curve: {g.vertex_count} components, "
                     f"{g.edge_count} nodes")
        lines.append(f"first Betti number of the dual graph = {lam}")
        lines.append(f"tree of projective lines: {'yes' if tree else 'no'}")
        data.update({"components": g.vertex_count, "nodes": g.edge_count,
                     "betti1": lam, "tree_of_lines": tree})
    else:
        n_sing = sum(len(p.branch_numbers) for p in spec.pieces)
        lines.append(f"curve: {len(spec.pieces)} connected pieces, "
                     f"{n_sing} singular points")
        data.update({"pieces": len(spec.pieces), "singular_points": n_sing})
    lines.append(f"K_-1 = {k}")
    return "\n".join(lines), data


def render_quiver_report(q: QuiverWithRelations, basis: AlgebraBasis):
    lines = _quiver_lines(q)
    labels = basis.labels(q)
    lines.append(f"algebra dimension = {basis.dimension}")
    lines.append("basis: " + ", ".join(labels))
    data = {"quiver": _quiver_json(q), "dimension": basis.dimension,
            "basis": labels}
    return "\n".join(lines), data


def render_global_report(rep: GlobalReport, spec: VarietySpec):
    lines = [f"singular points: {len(spec.singularities)}",
             f"L = br(X) - #Sing(X) = {rep.L}",
             f"defect delta = {rep.delta}",
             f"rk K_-1 = {rep.k_minus_one.free_rank}"]
    if rep.exact:
        lines.append(f"K_-1 = {rep.k_minus_one} (exact)")
    else:
        lines.append("K_-1 known by rank only (no restriction matrix)")
    ew_text = {EnoughWeil.YES: "yes", EnoughWeil.NO: "no",
               EnoughWeil.RANK_ZERO_UNVERIFIED: "unverified (rank zero only)"}
    lines.append(f"enough Weil divisors: {ew_text[rep.enough_weil]}")
    if rep.nodal and spec.singularities:
        lines.append(f"maximally nonfactorial: {ew_text[rep.enough_weil]}")
    data = {"label": spec.label, "singular_points": len(spec.singularities),
            "L": rep.L, "delta": rep.delta,
            "k_minus_one": _group_json(rep.k_minus_one), "exact": rep.exact,
            "enough_weil": rep.enough_weil.value, "nodal": rep.nodal}
    return "\n".join(lines), data


def render_surface_report(spec: SurfaceResolutionSpec):
    k, exact = surface_k_minus_one(spec)
    lines = [f"rk Pic(X) = {spec.pic_rank}, "
             f"rk Pic(resolution) = {spec.resolution_pic_rank}, "
             f"exceptional components = {spec.exceptional_components}",
             f"rk K_-1 = {k.free_rank}"]
    if exact:
        lines.append(f"K_-1 = {k} (exact)")
    data = {"pic_rank": spec.pic_rank,
            "resolution_pic_rank": spec.resolution_pic_rank,
            "exceptional_components": spec.exceptional_components,
            "k_minus_one": _group_json(k), "exact": exact,
            "toric_gorenstein": spec.toric_gorenstein}
    return "\n".join(lines), data


def render_blowup_report(pipeline: BlowupPipeline):
    k = pipeline.k_minus_one()
    sings = pipeline.singularities()
    verdict = decide(pipeline)
    lines = [f"blow-up pipeline with {len(pipeline.steps)} step(s)",
             f"K_-1 of the blow-up = {k}",
             f"singular points acquired: {len(sings)}"]
    for s in sings:
        lines.append(f"  cA_{s.n}: br = {s.br}, local Cl rank = {s.cl_rank}")
    vtext, vdata = render_verdict(verdict)
    lines.append(vtext)
    data = {"k_minus_one": _group_json(k),
            "singularities": [{"cA_index": s.n, "branches": s.br,
                               "local_cl_rank": s.cl_rank} for s in sings],
            "verdict": vdata}
    return "\n".join(lines), data


def render_verdict(verdict: Verdict):
    lines = [f"decision: {verdict.decision.value}"]
    data = {"decision": verdict.decision.value}
    if verdict.obstruction is not None:
        lines.append(f"OBSTRUCTED: rk K_-1 = {verdict.obstruction.free_rank}")
        lines.append(f"obstruction group: {verdict.obstruction}")
        data["obstruction"] = _group_json(verdict.obstruction)
    if verdict.certificate is not None:
        cert = verdict.certificate
        lines.append(f"certificate: {cert.kind.value}")
        data["certificate"] = {"kind": cert.kind.value}
        if cert.quiver is not None:
            lines.extend(_quiver_lines(cert.quiver))
            data["certificate"]["quiver"] = _quiver_json(cert.quiver)
        if cert.algebra_orders:
            orders = ", ".join(f"k[z]/(z^{n})" for n in cert.algebra_orders)
            lines.append(f"algebras: {orders}")
            data["certificate"]["algebra_orders"] = list(cert.algebra_orders)
        if cert.parts:
            parts = [p.decision.value for p in cert.parts]
            lines.append("replayed parts: " + ", ".join(parts))
            data["certificate"]["parts"] = [render_verdict(p)[1] for p in cert.parts]
    if verdict.k_minus_one is not None and verdict.obstruction is None:
        lines.append(f"K_-1 = {verdict.k_minus_one}")
        data["k_minus_one"] = _group_json(verdict.k_minus_one)
    for note in verdict.notes:
        lines.append(f"note: {note}")
    if verdict.notes:
        data["notes"] = list(verdict.notes)
    return "\n".join(lines), data


def render_snf_report(m: IntMatrix):
    d, u, v = smith_normal_form(m)
    coker = cokernel(m)
    lines = ["D = U*M*V with unimodular U, V",
             f"D diagonal: {d.diagonal_entries()}",
             f"U = {u.to_rows()}",
             f"V = {v.to_rows()}",
             f"cokernel Z^{m.rows}/im(M) = {coker}"]
    data = {"D": _matrix_json(d), "U": _matrix_json(u), "V": _matrix_json(v),
            "cokernel": _group_json(coker)}
    return "\n".join(lines), data


def render_delpezzo_table():
    rows = del_pezzo_table()
    header = " d | #sing | rk Pic | rk Cl | rk K_-1 | Kawamata decomp."
    sep = "---+-------+--------+-------+---------+------------------"
    lines = [header, sep]
    for r in rows:
        lines.append(f" {r.d} | {r.singular_points:5d} | {r.pic_rank:6d} | "
                     f"{r.cl_rank:5d} | {r.k_rank:7d} | {r.verdict}")
    data = [{"d": r.d, "singular_points": r.singular_points,
             "pic_rank": r.pic_rank, "cl_rank": r.cl_rank,
             "k_rank": r.k_rank, "verdict": r.verdict} for r in rows]
    return "\n".join(lines), data


def render_ade_table(k_values):
    lines = ["type | germ g(z, w)  | br | rk Cl",
             "-----+---------------+----+------"]
    data = []
    for family, index in ade_labels(k_values):
        germ = ade_germ(family, index)
        classified = classify_cAn(germ)
        catalog = ade_lookup(family, index)
        if (classified.br, classified.cl_rank) != (catalog.br, catalog.cl_rank):
            raise KMinusOneError(f"catalog mismatch at {family}{index}")
        germ_text = render_polynomial(germ)
        lines.append(f"{family}{index:<3} | {germ_text:<13} | {catalog.br:2d} "
                     f"| {catalog.cl_rank:5d}")
        data.append({"type": f"{family}{index}", "germ": germ_text,
                     "branches": catalog.br, "cl_rank": catalog.cl_rank})
    return "\n".join(lines), data


def _bare_global_report(rep: GlobalReport):
    lines = [f"L = br(X) - #Sing(X) = {rep.L}",
             f"defect delta = {rep.delta}",
             f"rk K_-1 = {rep.k_minus_one.free_rank}",
             f"K_-1 = {rep.k_minus_one}" + (" (exact)" if rep.exact else
                                            " (rank only)"),
             f"enough Weil divisors: {rep.enough_weil.value}"]
    data = {"L": rep.L, "delta": rep.delta,
            "k_minus_one": _group_json(rep.k_minus_one), "exact": rep.exact,
            "enough_weil": rep.enough_weil.value, "nodal": rep.nodal}
    return "\n".join(lines), data


def _render_any(result):
    if isinstance(result, Verdict):
        return render_verdict(result)
    if isinstance(result, BranchReport):
        return render_branch_report(result)
    if isinstance(result, LocalSingularity):
        return render_local_singularity(result)
    if isinstance(result, GlobalReport):
        return _bare_global_report(result)
    if isinstance(result, FinAbGroup):
        return str(result), _group_json(result)
    if isinstance(result, QuiverWithRelations):
        return "\n".join(_quiver_lines(result)), _quiver_json(result)
    if isinstance(result, IntMatrix):
        return str(result.to_rows()), _matrix_json(result)
    raise TypeError(f"no rendering for {type(result).__name__}")


def emit_report(result, as_json: bool = False) -> str:
    """Deterministic text or JSON rendering.  Accepts either a
    (text, data) pair produced by the render_* helpers or a raw result
    object (Verdict, BranchReport, LocalSingularity, GlobalReport,
    FinAbGroup, QuiverWithRelations, IntMatrix)."""
    if not (isinstance(result, tuple) and len(result) == 2
            and isinstance(result[0], str)):
        result = _render_any(result)
    text, data = result
    if as_json:
        return json.dumps(data, indent=2, sort_keys=True)
    return text


# ---------------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _load_json(path: str):
    try:
        if path == "-":
            raw = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as handle:
                raw = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc


def _load_document(path: str):
    return parse_spec_document(_load_json(path))


def _germ_input(args) -> tuple:
    """(BranchReport-ready germ list or single germ, display text)."""
    factors = None
    if args.factors:
        factors = [parse_polynomial(t) for t in args.factors.split(",") if t.strip()]
        if not factors:
            raise InputError("--factors needs at least one expression")
    if args.expr is None and factors is None:
        raise InputError("give a germ expression or --factors")
    if args.expr is not None:
        germ = parse_polynomial(args.expr)
        if factors is not None:
            product = BiPoly.constant(Fraction(1))
            for f in factors:
                product = product * f
            if product != germ:
                raise InputError(
                    "--factors do not multiply to the given polynomial")
            return factors, args.expr
        return germ, args.expr
    text = " * ".join(f"({render_polynomial(f)})" for f in factors)
    return factors, text


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kminusone",
                     description="K_-1 obstructions and certificates for "
                                 "Kawamata type semiorthogonal decompositions")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json_flag(p):
        # also accepted after the subcommand; SUPPRESS keeps the
        # top-level value when the flag is absent here
        p.add_argument("--json", action="store_true",
                       default=argparse.SUPPRESS,
                       help="machine-readable output")

    def germ_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("expr", nargs="?", help="germ expression in z, w")
        p.add_argument("--factors",
                       help="comma-separated coprime factors (fallback when "
                            "an unsupported field extension is needed)")
        add_json_flag(p)
        return p

    germ_command("branches", "order, Newton data and branch number of a germ")
    germ_command("classify", "classify the threefold germ xy + g(z, w)")

    for name, help_text in [
            ("curve", "K_-1 of a curve from a JSON spec document"),
            ("quiver", "tilting quiver and algebra basis of a tree of lines"),
            ("threefold", "defect, L, K_-1 and enough-Weil-divisors report"),
            ("surface", "surface K_-1 rank from resolution data"),
            ("blowup", "blow-up pipeline report and verdict"),
            ("decide", "three-valued Kawamata decomposition verdict")]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("document", help="JSON spec document path, or - for stdin")
        if name == "threefold":
            p.add_argument("--matrix",
                           help="restriction matrix file (JSON array of arrays)")
        add_json_flag(p)

    p = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    p.add_argument("matrix", help="inline JSON array of arrays, or a file path")
    add_json_flag(p)

    p = sub.add_parser("table", help="built-in tables")
    p.add_argument("which", choices=["delpezzo", "ade"])
    p.add_argument("--k", default="1..3",
                   help="ADE parameter range, e.g. 2 or 1..3 (default 1..3)")
    add_json_flag(p)
    return parser


def _parse_k_range(text: str):
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise InputError(f"bad --k range {text!r}; use N or N..M") from exc
    if lo < 1 or hi < lo:
        raise InputError(f"bad --k range {text!r}; need 1 <= N <= M")
    return range(lo, hi + 1)


def _run(args) -> tuple:
    if args.command == "branches":
        germ, text = _germ_input(args)
        rep = branch_count_factored(germ) if isinstance(germ, list) \
            else branch_count(germ)
        return render_branch_report(rep, text)

    if args.command == "classify":
        germ, text = _germ_input(args)
        if isinstance(germ, list):
            rep = branch_count_factored(germ)
            sing = LocalSingularity(source="germ", n=rep.cAn_index,
                                    br=rep.branch_count,
                                    cl_rank=rep.branch_count - 1)
        else:
            sing = classify_cAn(germ)
        return render_local_singularity(sing, text)

    if args.command == "curve":
        spec = _load_document(args.document)
        if not isinstance(spec, CurveSpec):
            raise InputError("the curve command needs a curve document")
        return render_curve_report(spec)

    if args.command == "quiver":
        spec = _load_document(args.document)
        if not isinstance(spec, CurveSpec) or spec.graph is None:
            raise InputError("the quiver command needs a curve document "
                             "with a dual graph")
        q = burban_quiver(spec.graph)
        return render_quiver_report(q, algebra_basis(q))

    if args.command == "threefold":
        doc = _load_json(args.document)
        if args.matrix is not None:
            if isinstance(doc, dict) and "matrix" in doc:
                raise InputError("matrix given both inline and via --matrix")
            if isinstance(doc, dict):
                doc = dict(doc)
                doc["matrix"] = _load_json(args.matrix)
        spec = parse_spec_document(doc)
        if not isinstance(spec, VarietySpec):
            raise InputError("the threefold command needs a threefold document")
        return render_global_report(threefold_invariants(spec), spec)

    if args.command == "surface":
        spec = _load_document(args.document)
        if not isinstance(spec, SurfaceResolutionSpec):
            raise InputError("the surface command needs a surface document")
        return render_surface_report(spec)

    if args.command == "blowup":
        spec = _load_document(args.document)
        if not isinstance(spec, BlowupPipeline):
            raise InputError("the blowup command needs a blowup document")
        return render_blowup_report(spec)

    if args.command == "decide":
        spec = _load_document(args.document)
        return render_verdict(decide(spec))

    if args.command == "snf":
        raw = args.matrix
        data = json.loads(raw) if raw.lstrip().startswith("[") else _load_json(raw)
        m = _parse_matrix(data, "matrix")
        return render_snf_report(m)

    if args.command == "table":
        if args.which == "delpezzo":
            return render_delpezzo_table()
        return render_ade_table(_parse_k_range(args.k))

    raise InputError(f"unknown command {args.command!r}")


def run_cli(argv=None) -> int:
    """Run one CLI invocation; returns the exit code and prints the report
    to stdout (errors to stderr).  Never raises on malformed input."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = _run(args)
    except ExtensionUnsupported as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KMinusOneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return 1
    print(emit_report(result, as_json=args.json))
    return 0


def main() -> None:
    sys.exit(run_cli())

"""Command line front end.

One subcommand per verification surface, plus ``audit`` to run the whole
catalogue and ``export`` to dump any named fixture.  Every subcommand can
write its result as JSON with ``--json PATH`` (``-`` for stdout); without
it a human-readable rendering goes to stdout.

Exit codes: 0 when every requested check passed (resolved counts as a
pass), 1 when any check failed, 2 when the outcome is inconclusive (a
coset cap was hit) or the invocation itself was invalid.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import fixtures
from .audit import check_identifiers, run_audit
from .complexes import TriComplex, vertex_link
from .cosets import Enumeration, Presentation, enumerate_cosets, verify_table
from .embed import find_embeddings, verify_embedding
from .garside import check_presentation, conjugation_orbit, equals, normal_form
from .metric_graph import INFINITY, MetricGraph, format_length
from .reps import (
    COMPOSITION_CONVENTION,
    IDENTITY_2X2,
    MAT_S,
    MAT_T,
    cycle_type,
    evaluate_matrix,
    evaluate_permutation,
    generated_subgroup,
    mat_inv,
    mat_mul,
    mat_neg,
    modular_assignment,
    stabilizer_of,
    strand_assignment,
)
from .words import ALPHABET_ABC, ALPHABET_ST, ALPHABET_XY, Alphabet, parse

__all__ = ["main"]


class CliError(Exception):
    """Invalid invocation or unknown object; reported on stderr, exit 2."""


# ---------------------------------------------------------------------------
# shared plumbing


def _emit(payload: dict, text: str, json_path: str | None) -> None:
    if json_path is None:
        print(text)
    elif json_path == "-":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        Path(json_path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _graph_json(graph: MetricGraph) -> dict:
    return {
        "nodes": list(graph.nodes),
        "arcs": [[u, v, format_length(length)] for u, v, length in graph.arcs],
    }


def _complex_json(cx: TriComplex) -> dict:
    return {
        "vertices": list(cx.vertices),
        "edges": [[label, src, dst] for label, src, dst in cx.edges],
        "triangles": [
            {
                "sides": [side.token() for side in t.sides],
                "angles": [format_length(a) for a in t.angles],
            }
            for t in cx.triangles
        ],
    }


def _load_graph(name: str) -> MetricGraph:
    if name in fixtures.GRAPH_NAMES:
        return fixtures.graph_fixture(name)
    path = Path(name)
    if path.is_file():
        return MetricGraph.from_lines(path.read_text().splitlines())
    raise CliError(
        f"unknown graph {name!r}: not a fixture ({', '.join(fixtures.GRAPH_NAMES)}) "
        "and not a readable file"
    )


def _load_complex(name: str) -> TriComplex:
    if name in fixtures.COMPLEX_NAMES:
        return fixtures.complex_fixture(name)
    path = Path(name)
    if path.is_file():
        return TriComplex.from_lines(path.read_text().splitlines())
    raise CliError(
        f"unknown complex {name!r}: not a fixture ({', '.join(fixtures.COMPLEX_NAMES)}) "
        "and not a readable file"
    )


def _load_presentation(name: str) -> Presentation:
    """A fixture name, or a file whose first line lists the generators
    and whose remaining nonempty lines are one relator each."""
    if name == "g0":
        return fixtures.g0_presentation()
    if name == "sl2":
        return fixtures.sl2_presentation()
    path = Path(name)
    if not path.is_file():
        raise CliError(f"unknown group {name!r}: not g0, sl2, or a readable file")
    lines = [line.strip() for line in path.read_text().splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise CliError(f"presentation file {name!r} is empty")
    alphabet = Alphabet(tuple(lines[0].split()))
    relators = tuple(parse(text, alphabet) for text in lines[1:])
    return Presentation(alphabet, relators)


def _parse_in(presentation: Presentation, text: str):
    return parse(text, presentation.alphabet)


def _mat_rows(matrix) -> list[list[int]]:
    return [list(row) for row in matrix]


# ---------------------------------------------------------------------------
# garside


def _cmd_garside_nf(args) -> int:
    word = parse(args.word, ALPHABET_ABC)
    nf = normal_form(word)
    payload = {
        "word": str(word),
        "normal_form": str(nf),
        "infimum": nf.infimum,
        "supremum": nf.supremum,
        "canonical_length": nf.canonical_length,
    }
    _emit(payload, str(nf), args.json)
    return 0


def _cmd_garside_eq(args) -> int:
    left, right = parse(args.left, ALPHABET_ABC), parse(args.right, ALPHABET_ABC)
    same = equals(left, right)
    difference = normal_form(left * right.inverse())
    payload = {
        "left": str(left),
        "right": str(right),
        "equal": same,
        "difference_normal_form": str(difference),
    }
    text = "equal" if same else f"different, difference {difference}"
    _emit(payload, text, args.json)
    return 0 if same else 1


def _cmd_garside_orbit(args) -> int:
    conjugator = fixtures.WORDS.get(args.conjugator) or parse(args.conjugator, ALPHABET_ABC)
    seed = fixtures.WORDS.get(args.seed) or parse(args.seed, ALPHABET_ABC)
    try:
        orbit = conjugation_orbit(
            conjugator, seed, max_steps=args.max_steps, convention=args.convention
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    payload = {
        "conjugator": str(conjugator),
        "seed": str(seed),
        "convention": args.convention,
        "period": len(orbit),
        "orbit": [str(w) for w in orbit],
    }
    text = "\n".join(
        [f"period {len(orbit)} under {args.convention} conjugation"]
        + [f"  {w}" for w in orbit]
    )
    _emit(payload, text, args.json)
    return 0


def _cmd_garside_audit_presentation(args) -> int:
    W = fixtures.WORDS
    results = check_presentation(W["e"], W["f"], W["d"])
    payload = {
        "dictionary": {name: str(W[name]) for name in ("e", "f", "d")},
        "equalities": {label: ok for label, ok in results},
    }
    width = max(len(label) for label, _ in results)
    text = "\n".join(
        f"{label:<{width}}  {'pass' if ok else 'fail'}" for label, ok in results
    )
    _emit(payload, text, args.json)
    return 0 if all(ok for _, ok in results) else 1


# ---------------------------------------------------------------------------
# verify


def _cmd_verify_index(args) -> int:
    if args.fixture:
        if args.fixture not in fixtures.SUBGROUPS:
            raise CliError(
                f"unknown subgroup fixture {args.fixture!r}; "
                f"have {', '.join(sorted(fixtures.SUBGROUPS))}"
            )
        factory, subgroup = fixtures.SUBGROUPS[args.fixture]
        presentation = factory()
    else:
        if not (args.group and args.subgroup):
            raise CliError("need either --fixture or both --group and --subgroup")
        presentation = _load_presentation(args.group)
        subgroup = [
            _parse_in(presentation, text) for text in args.subgroup.split(",") if text.strip()
        ]

    strategies = ("hlt", "felsch") if args.strategy == "both" else (args.strategy,)
    runs = {}
    for strategy in strategies:
        runs[strategy] = enumerate_cosets(
            presentation, subgroup, strategy=strategy, cap=args.cap
        )

    payload: dict = {"subgroup": [str(w) for w in subgroup]}
    lines = []
    overflow = False
    counts = set()
    for strategy, result in runs.items():
        if isinstance(result, Enumeration):
            verified = all(ok for _, ok in verify_table(result, presentation, subgroup))
            entry = result.to_json_dict()
            entry["verified"] = verified
            payload[strategy] = entry
            counts.add(result.count)
            lines.append(
                f"{strategy}: index {result.count}, defined {result.defined}, "
                f"table {'verified' if verified else 'BROKEN'}"
            )
        else:
            overflow = True
            payload[strategy] = {"overflow_cap": result.cap}
            lines.append(f"{strategy}: inconclusive, cap {result.cap} hit")
    if len(runs) == 2 and not overflow:
        agree = len(counts) == 1
        payload["agree"] = agree
        lines.append(f"strategies agree: {'yes' if agree else 'NO'}")
    if len(runs) == 1 and not overflow:
        only = payload[strategies[0]]
        payload.update({"count": only["count"], "action": only["action"]})
    _emit(payload, "\n".join(lines), args.json)
    if overflow:
        return 2
    verified_all = all(
        payload[s].get("verified", False) for s in strategies
    ) and len(counts) == 1
    return 0 if verified_all else 1


def _cmd_verify_pi(args) -> int:
    assignment = modular_assignment()
    presentation = fixtures.g0_presentation()
    relator_report = []
    for relator in presentation.relators:
        image = evaluate_matrix(relator, assignment)
        relator_report.append(
            {"relator": str(relator), "image": _mat_rows(image), "identity": image == IDENTITY_2X2}
        )
    st = {"S": MAT_S, "T": MAT_T}
    s4 = evaluate_matrix(parse("S^4", ALPHABET_ST), st)
    st_cubed = evaluate_matrix(parse("S T S T S T", ALPHABET_ST), st)
    s_squared = mat_mul(MAT_S, MAT_S)
    minus_st = mat_neg(mat_mul(MAT_S, MAT_T))
    s_inv_t = mat_mul(mat_inv(MAT_S), MAT_T)
    identities = {
        "S^4 = I": s4 == IDENTITY_2X2,
        "(S T)^3 = S^2": st_cubed == s_squared,
        "-S T = S^-1 T": minus_st == s_inv_t,
    }
    minus_t = evaluate_matrix(parse("x y x^-2", ALPHABET_XY), assignment)
    payload = {
        "assignment": {"x": _mat_rows(assignment["x"]), "y": _mat_rows(assignment["y"])},
        "relators": relator_report,
        "identities": identities,
        "image_of_x_y_x^-2": _mat_rows(minus_t),
        "is_minus_T": minus_t == mat_neg(MAT_T),
    }
    lines = [
        f"{entry['relator']}: {'identity' if entry['identity'] else 'NOT identity'}"
        for entry in relator_report
    ]
    lines += [f"{label}: {'pass' if ok else 'fail'}" for label, ok in identities.items()]
    lines.append(f"x y x^-2 maps to -T: {'pass' if payload['is_minus_T'] else 'fail'}")
    _emit(payload, "\n".join(lines), args.json)
    ok = (
        all(entry["identity"] for entry in relator_report)
        and all(identities.values())
        and payload["is_minus_T"]
    )
    return 0 if ok else 1


def _cmd_verify_perm(args) -> int:
    sa = strand_assignment()
    W = fixtures.WORDS
    px = evaluate_permutation(W["x"], sa)
    py = evaluate_permutation(W["y"], sa)
    subgroup = generated_subgroup([sa["a"], py])
    full = generated_subgroup(list(sa.values()))
    stab = stabilizer_of(3, full)
    checks = {
        "x is a 4-cycle": cycle_type(px) == (4,),
        "y is a 3-cycle fixing 3": cycle_type(py) == (1, 3) and py[3] == 3,
        "order of <a, y-image> is 6": len(subgroup) == 6,
        "<a, y-image> = stabiliser of 3": subgroup == stab,
        "crossings generate all 24": len(full) == 24,
    }
    payload = {
        "composition": COMPOSITION_CONVENTION,
        "images": {name: list(sa[name]) for name in sorted(sa)},
        "x_image": list(px),
        "y_image": list(py),
        "subgroup_order": len(subgroup),
        "checks": checks,
    }
    text = "\n".join(f"{label}: {'pass' if ok else 'fail'}" for label, ok in checks.items())
    _emit(payload, text, args.json)
    return 0 if all(checks.values()) else 1


# ---------------------------------------------------------------------------
# complex


def _cmd_complex_build(args) -> int:
    cx = _load_complex(args.name)
    payload = {
        "vertices": len(cx.vertices),
        "edges": len(cx.edges),
        "triangles": len(cx.triangles),
        "euler_characteristic": cx.euler_characteristic(),
    }
    text = "\n".join(cx.to_lines()) + (
        f"\n# chi = {payload['euler_characteristic']}"
    )
    _emit(payload, text, args.json)
    return 0


def _cmd_complex_link(args) -> int:
    cx = _load_complex(args.name)
    try:
        link = vertex_link(cx, args.vertex)
    except (KeyError, ValueError) as exc:
        raise CliError(str(exc)) from exc
    if args.smooth:
        link = link.smooth()
    payload = _graph_json(link)
    _emit(payload, "\n".join(link.to_lines()), args.json)
    return 0


def _cmd_complex_cat0(args) -> int:
    cx = _load_complex(args.name)
    try:
        link = vertex_link(cx, args.vertex)
    except (KeyError, ValueError) as exc:
        raise CliError(str(exc)) from exc
    by_deletion = link.girth()
    by_enumeration = link.girth_exhaustive()
    flat = by_deletion == by_enumeration == Fraction(2)
    payload = {
        "vertex": args.vertex,
        "link_nodes": len(link.nodes),
        "link_arcs": len(link.arcs),
        "girth_by_deletion": format_length(by_deletion),
        "girth_by_enumeration": format_length(by_enumeration),
        "girth_at_least_two_pi": flat,
    }
    text = (
        f"link of {args.vertex}: {len(link.nodes)} nodes, {len(link.arcs)} arcs\n"
        f"girth {format_length(by_deletion)} pi (deletion) "
        f"= {format_length(by_enumeration)} pi (enumeration)\n"
        f"nonpositively curved at {args.vertex}: {'yes' if flat else 'NO'}"
    )
    _emit(payload, text, args.json)
    return 0 if flat else 1


# ---------------------------------------------------------------------------
# graph


def _cmd_graph_girth(args) -> int:
    graph = _load_graph(args.name)
    by_deletion = graph.girth()
    payload = {"girth": format_length(by_deletion) if by_deletion < INFINITY else None}
    if args.both:
        by_enumeration = graph.girth_exhaustive()
        payload["girth_by_enumeration"] = (
            format_length(by_enumeration) if by_enumeration < INFINITY else None
        )
        payload["agree"] = by_deletion == by_enumeration
    if by_deletion >= INFINITY:
        text = "acyclic (no girth)"
    else:
        text = f"girth {format_length(by_deletion)} pi"
        if args.both:
            text += f", enumeration agrees: {'yes' if payload['agree'] else 'NO'}"
    _emit(payload, text, args.json)
    if args.both and not payload["agree"]:
        return 1
    return 0


def _cmd_graph_dist(args) -> int:
    graph = _load_graph(args.name)
    for node in (args.source, args.dest):
        if node not in graph.nodes:
            raise CliError(f"node {node!r} not in graph")
    d = graph.distance(args.source, args.dest)
    reachable = d < INFINITY
    payload = {
        "from": args.source,
        "to": args.dest,
        "distance": format_length(d) if reachable else None,
    }
    text = f"{format_length(d)} pi" if reachable else "unreachable"
    _emit(payload, text, args.json)
    return 0


# ---------------------------------------------------------------------------
# embed


def _cmd_embed(args) -> int:
    source = _load_graph(args.source)
    target = _load_graph(args.target)
    automorphisms = None
    if args.symmetry:
        node_map = fixtures.link_symmetry(target)
        if not target.is_automorphism(node_map):
            raise CliError("the wing symmetry is not an automorphism of this target")
        automorphisms = [node_map]
    try:
        outcome = find_embeddings(
            source,
            target,
            mode=args.mode,
            automorphisms=automorphisms,
            with_trace=args.trace is not None,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    verified = all(
        all(ok for _, ok in verify_embedding(source, target, emb))
        for emb in outcome.certificates
    )
    payload = {
        "source": args.source,
        "target": args.target,
        "mode": args.mode,
        "symmetry_reduced": bool(automorphisms),
        "found": outcome.found,
        "certificates": len(outcome.certificates),
        "verified": verified,
        "nodes_explored": outcome.nodes_explored,
        "prunes": dict(outcome.prunes),
    }
    if args.certificates:
        payload["certificate_list"] = [
            emb.to_json_dict(source, target) for emb in outcome.certificates
        ]
    if args.trace is not None:
        Path(args.trace).write_text(
            json.dumps(outcome.trace.to_json_dict(), indent=1) + "\n"
        )
        payload["trace_file"] = args.trace
    if outcome.found:
        text = (
            f"{len(outcome.certificates)} embedding(s) found "
            f"({'all verified' if verified else 'VERIFIER REJECTED SOME'}), "
            f"{outcome.nodes_explored} search nodes"
        )
    else:
        text = (
            f"no embedding (exhaustive), {outcome.nodes_explored} search nodes, "
            f"prunes {dict(outcome.prunes)}"
        )
    _emit(payload, text, args.json)
    return 0 if verified else 1


# ---------------------------------------------------------------------------
# audit and export


def _cmd_audit(args) -> int:
    if args.list:
        for ident in check_identifiers():
            print(ident)
        return 0
    try:
        report = run_audit(
            only=args.checks or None, cap=args.cap, convention=args.convention
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    header = "\n".join(
        f"# {key}: {value}" for key, value in sorted(report.meta.items())
    )
    text = header + "\n" + report.to_text()
    payload = report.to_json_dict()
    if args.json is not None:
        _emit(payload, text, args.json)
    else:
        print(text)
    return report.exit_code


_EXPORT_FORMATS = ("text", "json", "dot")


def _export_object(name: str, fmt: str):
    """Returns (payload-or-None, text-or-None); exactly one is set per format."""
    if name in fixtures.GRAPH_NAMES:
        graph = fixtures.graph_fixture(name)
        if fmt == "dot":
            return None, graph.to_dot()
        if fmt == "text":
            return None, "\n".join(graph.to_lines())
        return _graph_json(graph), None
    if name in fixtures.COMPLEX_NAMES:
        cx = fixtures.complex_fixture(name)
        if fmt == "dot":
            raise CliError("dot export is for graphs; export the link instead")
        if fmt == "text":
            return None, "\n".join(cx.to_lines())
        return _complex_json(cx), None
    if name in fixtures.SUBGROUPS:
        factory, subgroup = fixtures.SUBGROUPS[name]
        result = enumerate_cosets(factory(), subgroup, strategy="hlt", cap=100_000)
        if not isinstance(result, Enumeration):
            raise CliError(f"enumeration for {name!r} hit the cap")
        if fmt == "dot":
            raise CliError("dot export is for graphs")
        if fmt == "text":
            rows = [f"index {result.count}"]
            for gen, images in sorted(result.action.items()):
                rows.append(f"{gen}: {' '.join(str(i) for i in images)}")
            return None, "\n".join(rows)
        return result.to_json_dict(), None
    if name == "audit-report":
        report = run_audit()
        if fmt == "dot":
            raise CliError("dot export is for graphs")
        if fmt == "text":
            return None, report.to_text()
        # timing stripped so equal builds export equal bytes
        return report.to_json_dict(include_timing=False), None
    known = (
        list(fixtures.GRAPH_NAMES)
        + list(fixtures.COMPLEX_NAMES)
        + sorted(fixtures.SUBGROUPS)
        + ["audit-report"]
    )
    raise CliError(f"unknown object {name!r}; have {', '.join(known)}")


def _cmd_export(args) -> int:
    payload, text = _export_object(args.object, args.format)
    if text is None:
        text = json.dumps(payload, indent=2, sort_keys=True)
    if args.out is None or args.out == "-":
        print(text)
    else:
        Path(args.out).write_text(text + "\n")
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_json_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--json",
        metavar="PATH",
        help="write the result as JSON to PATH (- for stdout) instead of text",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidcat",
        description="exact verification of the braid-group and link computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    garside = sub.add_parser("garside", help="normal forms and word identities")
    gsub = garside.add_subparsers(dest="subcommand", required=True)

    p = gsub.add_parser("nf", help="left-greedy normal form of a word")
    p.add_argument("word", help="word over a, b, c (uppercase inverts)")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_garside_nf)

    p = gsub.add_parser("eq", help="decide equality of two words (exit 1 if different)")
    p.add_argument("left")
    p.add_argument("right")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_garside_eq)

    p = gsub.add_parser("orbit", help="conjugation orbit of a seed word")
    p.add_argument("conjugator", help="word, or a dictionary name like x or y")
    p.add_argument("seed", help="word, or a dictionary name like a or bhat")
    p.add_argument(
        "--convention",
        choices=("left", "right"),
        default="left",
        help="left: w -> g w g^-1 (default); right: w -> g^-1 w g",
    )
    p.add_argument("--max-steps", type=int, default=16)
    _add_json_flag(p)
    p.set_defaults(func=_cmd_garside_orbit)

    p = gsub.add_parser(
        "audit-presentation",
        help="check the ten defining equalities of the six-generator presentation",
    )
    _add_json_flag(p)
    p.set_defaults(func=_cmd_garside_audit_presentation)

    verify = sub.add_parser("verify", help="index, matrix, and permutation checks")
    vsub = verify.add_subparsers(dest="subcommand", required=True)

    p = vsub.add_parser("index", help="coset enumeration for a subgroup")
    p.add_argument(
        "--fixture",
        help=f"named pair: {', '.join(sorted(fixtures.SUBGROUPS))}",
    )
    p.add_argument("--group", help="g0, sl2, or a presentation file")
    p.add_argument("--subgroup", help="comma-separated generator words")
    p.add_argument(
        "--strategy", choices=("hlt", "felsch", "both"), default="both"
    )
    p.add_argument("--cap", type=int, default=100_000, help="max cosets defined")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_verify_index)

    p = vsub.add_parser("pi", help="the matrix homomorphism kills the relators")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_verify_pi)

    p = vsub.add_parser("perm", help="the strand-permutation images")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_verify_perm)

    cx = sub.add_parser("complex", help="triangle complexes and their links")
    csub = cx.add_subparsers(dest="subcommand", required=True)

    p = csub.add_parser("build", help="build a named complex and print it")
    p.add_argument("name", help=f"fixture ({', '.join(fixtures.COMPLEX_NAMES)}) or file")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_complex_build)

    p = csub.add_parser("link", help="vertex link as a metric graph")
    p.add_argument("name")
    p.add_argument("--vertex", default="o")
    p.add_argument(
        "--smooth", action="store_true", help="suppress degree-two nodes first"
    )
    _add_json_flag(p)
    p.set_defaults(func=_cmd_complex_link)

    p = csub.add_parser(
        "cat0", help="link condition: girth of the vertex link is at least 2 pi"
    )
    p.add_argument("name")
    p.add_argument("--vertex", default="o")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_complex_cat0)

    graph = sub.add_parser("graph", help="metric-graph computations")
    grsub = graph.add_subparsers(dest="subcommand", required=True)

    p = grsub.add_parser("girth", help="length of the shortest cycle")
    p.add_argument("name", help=f"fixture ({', '.join(fixtures.GRAPH_NAMES)}) or file")
    p.add_argument(
        "--both",
        action="store_true",
        help="also run the exhaustive algorithm and compare",
    )
    _add_json_flag(p)
    p.set_defaults(func=_cmd_graph_girth)

    p = grsub.add_parser("dist", help="shortest path length between two nodes")
    p.add_argument("name")
    p.add_argument("source")
    p.add_argument("dest")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_graph_dist)

    p = sub.add_parser(
        "embed", help="search for locally isometric embeddings between graphs"
    )
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--mode", choices=("all", "first"), default="all")
    p.add_argument(
        "--symmetry",
        action="store_true",
        help="reduce root choices by the wing symmetry of the target",
    )
    p.add_argument(
        "--certificates",
        action="store_true",
        help="include every certificate in the JSON payload",
    )
    p.add_argument("--trace", metavar="PATH", help="write the full search tree as JSON")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("audit", help="run the whole claim catalogue")
    p.add_argument(
        "checks",
        nargs="*",
        metavar="CHECK",
        help="check identifiers or prefixes (default: everything)",
    )
    p.add_argument("--list", action="store_true", help="list check identifiers and exit")
    p.add_argument("--cap", type=int, default=100_000)
    p.add_argument(
        "--convention",
        choices=("left", "right"),
        default="left",
        help="conjugation direction for the orbit checks, echoed in the header",
    )
    _add_json_flag(p)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("export", help="dump a named fixture or the audit report")
    p.add_argument("object")
    p.add_argument("--format", choices=_EXPORT_FORMATS, default="text")
    p.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

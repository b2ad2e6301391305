"""Command-line front end.

Exit status: 0 when the answer is yes (holds, member, colorable), 1 when it is
no, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import graph as gr
from . import horn, membership, normal_form, patterns, terms, translate, usemigroup

YES, NO, ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None


def load_graph(source: str) -> tuple[str, gr.Graph]:
    """A graph file, or ``catalog:NAME[:K]``; returns (display name, graph)."""
    if source.startswith("catalog:"):
        parts = source.split(":")[1:]
        try:
            k = int(parts[1]) if len(parts) > 1 else None
            return parts[0] + ("" if k is None else str(k)), gr.catalog(parts[0], k)
        except ValueError as e:
            raise InputError(str(e)) from None
    try:
        return Path(source).stem, gr.parse_graph(_read(source))
    except gr.GraphFormatError as e:
        raise InputError(f"{source}:{e.lineno}: {e}") from None


def load_semigroup(path: str) -> usemigroup.UnarySemigroup:
    try:
        return usemigroup.parse_semigroup(_read(path))
    except usemigroup.SemigroupFormatError as e:
        raise InputError(f"{path}: {e}") from None


def _term(text: str) -> terms.Term:
    try:
        return terms.parse_term(text)
    except terms.TermSyntaxError as e:
        raise InputError(f"term {text!r}: {e}") from None


def _sentence(text: str):
    try:
        return horn.parse_sentence(text)
    except horn.SentenceSyntaxError as e:
        raise InputError(f"sentence {text!r}: {e}") from None


# -- subcommands ----------------------------------------------------------------

def cmd_graph_check(args, out):
    _, g = load_graph(args.file)
    law = horn.LAWS[args.law]
    theta = horn.failing_assignment(g, law)
    if theta is None:
        print(f"holds: {args.law}", file=out)
        return YES
    print(f"fails: {args.law} at " + ", ".join(f"{x}={v}" for x, v in theta.items()), file=out)
    return NO


def cmd_graph_catalog(args, out):
    try:
        g = gr.catalog(args.name, args.k)
    except ValueError as e:
        raise InputError(str(e)) from None
    out.write(gr.serialize_graph(g))
    return YES


def cmd_adj_build(args, out):
    _, g = load_graph(args.file)
    out.write(usemigroup.serialize_semigroup(usemigroup.adjacency_semigroup(g)))
    return YES


def cmd_adj_recognize(args, out):
    s = load_semigroup(args.file)
    try:
        g = usemigroup.recognize_reflexive_adjacency(s)
    except usemigroup.NotApplicable as e:
        print(f"not the adjacency semigroup of a reflexive graph: {e}", file=out)
        return NO
    out.write(gr.serialize_graph(g))
    return YES


def cmd_term_graph(args, out):
    pg = patterns.pattern_graph(_term(args.term), args.mode)
    if args.dot:
        out.write(patterns.pattern_dot(pg))
    else:
        print(pg, file=out)
    return YES


def cmd_term_nf(args, out):
    t = _term(args.term)
    print(normal_form.normalize_ref(t) if args.ref else normal_form.normalize(t), file=out)
    return YES


def cmd_id_decide(args, out):
    ident = terms.Identity(_term(args.u), _term(args.v))
    d = patterns.decide_identity(ident, args.mode)
    if d.holds:
        print("Holds", file=out)
        return YES
    print("Fails", file=out)
    print("countermodel " + d.countermodel.describe(), file=out)
    return NO


def cmd_id_model_check(args, out):
    s = load_semigroup(args.semigroup)
    ident = terms.Identity(_term(args.u), _term(args.v))
    res = usemigroup.check_identity(s, ident)
    if res.holds:
        print("Holds", file=out)
        return YES
    print("Fails at " + ", ".join(f"{x}={s.label(v)}" for x, v in res.witness.items()), file=out)
    return NO


def _compile(text: str, target: str | None):
    sent = _sentence(text)
    if isinstance(sent, horn.NegDisjunction):
        if target is None:
            raise InputError("a sentence of the second kind needs --target")
        try:
            sent = translate.second_kind_to_quasi(sent, load_graph(target)[1])
        except ValueError as e:
            raise InputError(str(e)) from None
    reduced = translate.reduce_quasi_identity(sent)
    return reduced, translate.translate(reduced)


def cmd_uh_translate(args, out):
    reduced, compiled = _compile(args.sentence, args.target)
    print(f"sentence: {reduced}", file=out)
    print(f"case: {compiled.case_tag}", file=out)
    print(f"identity: {compiled.identity.lhs} = {compiled.identity.rhs}", file=out)
    return YES


def cmd_uh_verify(args, out):
    _, g = load_graph(args.file)
    reduced, compiled = _compile(args.sentence, args.target or args.file)
    check = translate.verify_translation(g, reduced)
    print(f"case: {compiled.case_tag}", file=out)
    print(f"graph side: {'holds' if check.graph_side else 'fails'}", file=out)
    print(f"semigroup side: {'holds' if check.semigroup_side else 'fails'}", file=out)
    if not check.agree:
        print("disagreement", file=out)
        return ERROR
    return YES if check.graph_side else NO


def _generators(source: str):
    loaded = [load_graph(item) for item in source.split(",") if item]
    if not loaded:
        raise InputError("--gen needs at least one graph")
    return [n for n, _ in loaded], [g for _, g in loaded]


def cmd_member_uh(args, out):
    _, g = load_graph(args.file)
    names, gens = _generators(args.gen)
    decide = membership.quasivariety_member if args.quasivariety else membership.uh_member
    v = decide(g, gens, jobs=args.jobs)
    record = {"generators": names, **v.to_json()}
    if not v.member:
        record["reason"] = v.reason()
    print(json.dumps(record), file=out)
    return YES if v.member else NO


def cmd_member_variety(args, out):
    _, g = load_graph(args.file)
    names, gens = _generators(args.gen)
    v = membership.uh_member(g, gens, jobs=args.jobs)
    target = "HSP(" + ", ".join(f"A({n})" for n in names) + ")"
    if v.member:
        print(f"A(G) ∈ {target}", file=out)
        return YES
    print(f"A(G) ∉ {target}: {v.reason()}", file=out)
    return NO


def cmd_color(args, out):
    _, g = load_graph(args.file)
    if args.k < 1:
        raise InputError("-k must be at least 1")
    ok = membership.k_colorable(g, args.k)
    print(f"{'' if ok else 'not '}{args.k}-colorable", file=out)
    return YES if ok else NO


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="adjsem", description="Graphs, adjacency semigroups and their identities.")
    sub = p.add_subparsers(dest="group", required=True)

    def group(name, help):
        return sub.add_parser(name, help=help).add_subparsers(dest="command", required=True)

    def command(parent, name, func, help):
        c = parent.add_parser(name, help=help)
        c.set_defaults(func=func)
        return c

    graph = group("graph", "graph files and catalog")
    c = command(graph, "check", cmd_graph_check, "test a standard law")
    c.add_argument("file")
    c.add_argument("--law", required=True, choices=sorted(horn.LAWS))
    c = command(graph, "catalog", cmd_graph_catalog, "print a catalog graph")
    c.add_argument("name")
    c.add_argument("-k", type=int)

    adj = group("adj", "adjacency semigroups")
    command(adj, "build", cmd_adj_build, "emit the adjacency semigroup of a graph").add_argument("file")
    command(adj, "recognize", cmd_adj_recognize, "recover a reflexive graph from its semigroup").add_argument("file")

    term = group("term", "unary terms")
    c = command(term, "graph", cmd_term_graph, "pattern graph of a term")
    c.add_argument("term")
    c.add_argument("--mode", default="plain", choices=["plain", "ref", "symm"])
    c.add_argument("--dot", action="store_true")
    c = command(term, "nf", cmd_term_nf, "normal form of a term")
    c.add_argument("term")
    c.add_argument("--ref", action="store_true")

    ident = group("id", "identities")
    c = command(ident, "decide", cmd_id_decide, "decide an identity over adjacency semigroups")
    c.add_argument("u")
    c.add_argument("v")
    c.add_argument("--mode", default="plain", choices=["plain", "ref", "symm"])
    c = command(ident, "model-check", cmd_id_model_check, "check an identity in a given semigroup")
    c.add_argument("u")
    c.add_argument("v")
    c.add_argument("--semigroup", required=True)

    uh = group("uh", "universal Horn sentences")
    c = command(uh, "translate", cmd_uh_translate, "compile a sentence into an identity")
    c.add_argument("sentence")
    c.add_argument("--target", help="graph on which a sentence of the second kind fails")
    c = command(uh, "verify", cmd_uh_verify, "compare a sentence and its identity on a graph")
    c.add_argument("sentence")
    c.add_argument("file")
    c.add_argument("--target")

    member = group("member", "membership in generated classes")
    for name, func in (("uh", cmd_member_uh), ("variety", cmd_member_variety)):
        c = command(member, name, func, f"{name} membership")
        c.add_argument("file")
        c.add_argument("--gen", required=True, help="comma-separated graph files or catalog:NAME[:K]")
        c.add_argument("--jobs", type=int, default=1)
        if name == "uh":
            c.add_argument("--quasivariety", action="store_true", help="drop the homomorphism requirement")

    c = sub.add_parser("color", help="k-colorability")
    c.set_defaults(func=cmd_color)
    c.add_argument("file")
    c.add_argument("-k", type=int, required=True)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())

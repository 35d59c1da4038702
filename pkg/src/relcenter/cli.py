"""Command-line front end.

Exit status: 0 success, 1 a check failed (or a computation was rejected with a
witness), 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .center import (
    decompose_center,
    induce_center_object,
    simple_objects,
    validate_bundle,
)
from .classring import build_ring, fusion_table, render_entry, verify_ring_axioms
from .errors import AlgebraError, FormNotValid, InputError, MalformedSpec
from .groups import (
    DEFAULT_MAX_ORDER,
    abelian_invariants,
    center_of_group,
    centralizer,
    class_of,
    conjugacy_classes,
)
from .phase import ZERO, Phase
from .pointed import (
    PointedBraidedCategory,
    adjoint_fpdim_check,
    center_fpdim_report,
    mueger_center,
    relative_tensor,
    tilde,
)
from .premetric import (
    antidiagonal,
    descend_form,
    product_premetric,
    radical,
    reverse,
)
from .records import digest, load_form, load_group, load_morphism, read_json
from .verify import ANCHORS, Verdict, all_passed, form_verdicts, run_suite


class Report:
    """Everything a command prints, in a deterministic order."""

    def __init__(self, argv: list[str]):
        self.command = list(argv)
        self.inputs: dict[str, str] = {}
        self.result: dict = {}
        self.lines: list[str] = []
        self.footer: list[str] = []
        self.verdicts: list[Verdict] = []
        self.error: dict | None = None

    def add_input(self, path: str) -> Path:
        try:
            self.inputs[path] = digest(path)
        except OSError as exc:
            raise MalformedSpec(f"{path}: cannot read ({exc.strerror})") from None
        return Path(path)

    def as_dict(self) -> dict:
        return {
            "tool": f"relcenter {__version__}",
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "verdicts": [v.as_dict() for v in self.verdicts],
            "error": self.error,
        }

    def render(self, fmt: str) -> str:
        if fmt == "structured":
            return json.dumps(self.as_dict(), indent=2, sort_keys=True)
        out = list(self.lines)
        out.extend(v.line() for v in self.verdicts)
        out.extend(self.footer)
        if self.error:
            out.append(f"error: {self.error['type']}: {self.error['message']}")
            if self.error.get("witness") is not None:
                out.append(f"witness: {self.error['witness']}")
        return "\n".join(out)


def _load_form(report: Report, path: str, max_order: int):
    p = report.add_input(path)
    return load_form(read_json(p), p.parent, max_order)


def _load_group(report: Report, path: str, max_order: int):
    p = report.add_input(path)
    return load_group(read_json(p), p.parent, max_order)


def _load_morphism(report: Report, path: str, max_order: int):
    p = report.add_input(path)
    return load_morphism(read_json(p), p.parent, max_order)


def _form_lines(M) -> list[str]:
    return [f"  q({lab}) = {v}" for lab, v in M.values_by_label().items()]


def _coset_legend(parent_labels, Q) -> dict[str, list[str]]:
    """Quotient elements are labeled by member indices; spell them out."""
    return {lab: [parent_labels[int(i)] for i in lab.strip("{}").split(",")] for lab in Q.group.labels}


def _legend_lines(legend: dict[str, list[str]]) -> list[str]:
    return ["cosets:"] + [f"  {k} = {{{', '.join(v)}}}" for k, v in legend.items()]


# -- group -------------------------------------------------------------------


def cmd_group_info(args, report: Report) -> int:
    G = _load_group(report, args.group, args.max_order)
    classes = conjugacy_classes(G)
    rows = []
    for c in classes:
        rows.append({
            "representative": G.labels[c.representative],
            "size": c.size,
            "centralizer_order": centralizer(G, c.representative).order,
        })
    Z = center_of_group(G)
    report.result = {
        "order": G.order,
        "abelian": G.is_abelian,
        "classes": rows,
        "center": [G.labels[z] for z in Z.members],
        "abelian_invariants": abelian_invariants(G) if G.is_abelian else None,
    }
    report.lines += [f"order: {G.order}", f"classes: {len(classes)}",
                     "  representative  size  |centralizer|"]
    report.lines += [f"  {r['representative']:<14}  {r['size']:>4}  {r['centralizer_order']:>13}" for r in rows]
    report.lines.append(f"center: {{{', '.join(report.result['center'])}}}")
    if G.is_abelian:
        report.lines.append(f"abelian invariants: {report.result['abelian_invariants']}")
    return 0


# -- premetric ---------------------------------------------------------------


def cmd_premetric(args, report: Report) -> int:
    if args.action == "validate":
        p = report.add_input(args.paths[0])
        try:
            M = load_form(read_json(p), p.parent, args.max_order)
        except FormNotValid as exc:
            report.verdicts.append(Verdict(args.paths[0], "form is a quadratic form",
                                           ANCHORS["quadratic"], False,
                                           f"{type(exc).__name__}: {exc}"))
            return 1
        R = radical(M)
        report.result = {"order": M.order, "values": M.values_by_label(),
                         "radical": [M.group.labels[r] for r in R.members]}
        report.lines += [f"valid quadratic form on a group of order {M.order}"]
        report.lines += _form_lines(M)
        report.lines.append(f"radical: {{{', '.join(report.result['radical'])}}}")
        report.verdicts += form_verdicts(args.paths[0], M)
        return 0 if all_passed(report.verdicts) else 1

    if args.action == "product":
        if len(args.paths) != 2:
            raise MalformedSpec("product needs two form files")
        M1, M2 = (_load_form(report, p, args.max_order) for p in args.paths)
        P = product_premetric(M1, M2)
        report.result = {"order": P.order, "values": P.values_by_label()}
        report.lines.append(f"product form on a group of order {P.order}")
        report.lines += _form_lines(P)
        return 0

    if len(args.paths) != 2:
        raise MalformedSpec("descend needs two morphism files")
    e1, e2 = (_load_morphism(report, p, args.max_order) for p in args.paths)
    P = product_premetric(e1.target, e2.target)
    N = antidiagonal(e1, e2)
    report.result["antidiagonal"] = [P.group.labels[n] for n in N.members]
    try:
        Q = descend_form(P, N)
    except AlgebraError as exc:
        rep = getattr(exc, "report", None)
        if rep is not None:
            report.result["diagnostics"] = rep.as_dict()
            report.lines.append("descent failed")
            report.lines.append(f"  coset witness: {rep.coset_witness}")
            for i, g, x, v in rep.factor_witnesses:
                report.lines.append(f"  b_{i}({g}, {x}) = {v} != 0")
        raise
    legend = _coset_legend(P.group.labels, Q)
    report.result["quotient"] = {"order": Q.order, "values": Q.values_by_label(), "cosets": legend}
    report.lines.append(f"descended form on quotient of order {Q.order}")
    report.lines += _form_lines(Q)
    report.lines += _legend_lines(legend)
    return 0


# -- pointed -----------------------------------------------------------------


def cmd_pointed(args, report: Report) -> int:
    if args.action == "tensor":
        if len(args.paths) != 2:
            raise MalformedSpec("tensor needs two morphism files")
        e1, e2 = (_load_morphism(report, p, args.max_order) for p in args.paths)
        if e1.source != e2.source:
            raise MalformedSpec("both morphisms must start at the same pre-metric group")
        C1, C2 = PointedBraidedCategory(e1.target), PointedBraidedCategory(e2.target)
        C = relative_tensor(C1, C2, e1.source, e1.hom, e2.hom)
        chk = adjoint_fpdim_check(C1, C2, e1.source, e1.hom, e2.hom)
        legend = _coset_legend(product_premetric(C1.data, C2.data).group.labels, C.data)
        report.result = {"fpdim": C.fpdim, "values": C.data.values_by_label(),
                         "cosets": legend, "fpdim_I(1)": chk.i_of_unit_fpdim}
        report.lines.append(f"relative tensor product: fpdim {C.fpdim}")
        report.lines += _form_lines(C.data)
        report.lines += _legend_lines(legend)
        report.verdicts.append(Verdict("tensor", "FPdim(C1 x C2) = FPdim(C1 x_D C2) FPdim(I(1))",
                                       ANCHORS["adjoint"], chk.identity_holds,
                                       f"{chk.deligne_fpdim} = {chk.relative_fpdim} * {chk.i_of_unit_fpdim}"))
        return 0 if chk.identity_holds else 1

    if len(args.paths) != 1:
        raise MalformedSpec(f"{args.action} needs one form file")
    M = _load_form(report, args.paths[0], args.max_order)
    C = PointedBraidedCategory(M)
    if args.action == "center":
        Z = mueger_center(C)
        report.result = {"fpdim": Z.fpdim, "values": Z.data.values_by_label()}
        report.lines.append(f"Mueger center: fpdim {Z.fpdim}")
        report.lines += _form_lines(Z.data)
        return 0
    if args.action == "tilde":
        T = tilde(C)
        P = product_premetric(C.data, reverse(C.data))
        legend = _coset_legend(P.group.labels, T.data)
        report.result = {"fpdim": T.fpdim, "values": T.data.values_by_label(), "cosets": legend}
        report.lines.append(f"C~: fpdim {T.fpdim}")
        report.lines += _form_lines(T.data)
        report.lines += _legend_lines(legend)
        return 0
    rep = center_fpdim_report(C)
    report.result = rep.as_dict()
    report.lines += [f"{k}: {v}" for k, v in rep.as_dict().items()]
    report.verdicts += [
        Verdict(args.paths[0], "FPdim(Z(C)) = FPdim(C~) FPdim(C')", ANCHORS["dimension_split"],
                rep.split_identity),
        Verdict(args.paths[0], "FPdim(R) = |C|^2 (1 - 1/|C'|)",
                ANCHORS["remainder"], rep.remainder_identity),
        Verdict(args.paths[0], "R vanishes iff non-degenerate", ANCHORS["nondeg"],
                rep.remainder_vanishes),
    ]
    return 0 if all_passed(report.verdicts) else 1


# -- center ------------------------------------------------------------------


def _parse_character(G, a: int, items: list[str]) -> dict[int, Phase]:
    Z = centralizer(G, a)
    chi = {z: ZERO for z in Z.members}
    for item in items:
        lab, sep, val = item.rpartition("=")
        if not sep:
            raise MalformedSpec(f"character value {item!r} is not of the form LABEL=a/b")
        idx = G.index(lab)
        if idx not in Z:
            raise MalformedSpec(f"{lab!r} is not in the centralizer of {G.labels[a]!r}")
        try:
            chi[idx] = Phase.parse(val)
        except ValueError as exc:
            raise MalformedSpec(str(exc)) from None
    return chi


def cmd_center(args, report: Report) -> int:
    G = _load_group(report, args.group, args.max_order)
    if args.action == "decompose":
        comps = decompose_center(G)
        rows = [{"representative": G.labels[c.cls.representative], "class_size": c.cls.size,
                 "centralizer_order": c.centralizer.order, "num_simples": c.num_simples,
                 "fpdim": c.fpdim, "role": "Rep(G)" if c.is_unit_copy else "remainder"}
                for c in comps]
        total = sum(c.fpdim for c in comps)
        report.result = {"components": rows, "total_fpdim": total, "order_squared": G.order ** 2}
        report.lines.append("  representative  |class|  |Z(a)|  simples  fpdim  role")
        report.lines += [f"  {r['representative']:<14}  {r['class_size']:>7}  {r['centralizer_order']:>6}  "
                         f"{r['num_simples']:>7}  {r['fpdim']:>5}  {r['role']}" for r in rows]
        report.lines.append(f"total fpdim: {total} = |G|^2 = {G.order ** 2}")
        report.verdicts.append(Verdict(args.group, "component FPdims sum to |G|^2",
                                       ANCHORS["census"], total == G.order ** 2))
        return 0 if total == G.order ** 2 else 1

    if args.action == "simples":
        sims = simple_objects(G, args.seed)
        rows = [{"class": G.labels[s.cls.representative], "irrep": s.irrep_label,
                 "degree": s.irrep_degree, "fpdim": s.fpdim} for s in sims]
        report.result = {"simples": rows, "count": len(rows),
                         "sum_fpdim_squared": sum(s.fpdim ** 2 for s in sims)}
        report.lines.append(f"{len(rows)} simple objects")
        report.lines += [f"  ({r['class']}, rho{r['irrep']}): degree {r['degree']}, fpdim {r['fpdim']}"
                         for r in rows]
        report.lines.append(f"sum of fpdim^2: {report.result['sum_fpdim_squared']}")
        return 0

    if args.action == "induce":
        if args.cls is None:
            raise MalformedSpec("induce needs --class LABEL")
        a = class_of(G, G.index(args.cls)).representative
        chi = _parse_character(G, a, args.chi or [])
        B = induce_center_object(G, a, chi)
        verdict = validate_bundle(B)
        report.result = {
            "class": [G.labels[x] for x in B.support],
            "pi": {f"{G.labels[g]},{G.labels[x]}": str(v) for (g, x), v in sorted(B.pi.items())},
            "valid": verdict.ok,
        }
        report.lines.append(f"rank-one bundle on {{{', '.join(report.result['class'])}}}")
        for x in B.support:
            vals = " ".join(str(B.pi[(g, x)]) for g in G.elements())
            report.lines.append(f"  pi[-, {G.labels[x]}]: {vals}")
        report.verdicts.append(Verdict(args.group, "bundle satisfies the cocycle rule",
                                       ANCHORS["cocycle"], verdict.ok,
                                       None if verdict.ok else f"{verdict.witness} {verdict.message}"))
        return 0 if verdict.ok else 1

    ring = build_ring(G)
    entries = fusion_table(G, ring)
    axioms = verify_ring_axioms(ring)
    report.result = {
        "classes": [G.labels[c.representative] for c in ring.classes],
        "table": [{"left": e.left, "right": e.right,
                   "coefficients": {r: m for r, m in e.terms},
                   "pair_counts": {r: m for r, m in e.pair_counts}} for e in entries],
    }
    report.lines.append("coefficients (class sums):")
    report.lines += ["  " + render_entry(e) for e in entries]
    report.lines.append("pair counts |{(x,y) in a x b : xy in s}|:")
    report.lines += [f"  C[{e.left}] x C[{e.right}]: " + ", ".join(f"{r}: {m}" for r, m in e.pair_counts)
                     for e in entries]
    report.verdicts.append(Verdict(args.group, "class ring axioms", ANCHORS["ring"],
                                   axioms.ok, None if axioms.ok else str(axioms.witnesses)))
    return 0 if axioms.ok else 1


# -- verify ------------------------------------------------------------------


def cmd_verify(args, report: Report) -> int:
    groups, forms = {}, {}
    verdicts: list[Verdict] = []
    for path in args.group or []:
        groups[path] = _load_group(report, path, args.max_order)
    for path in args.form or []:
        p = report.add_input(path)
        try:
            forms[path] = load_form(read_json(p), p.parent, args.max_order)
        except FormNotValid as exc:
            verdicts.append(Verdict(path, "FormNotValid", ANCHORS["form_file"],
                                    False, f"{type(exc).__name__}: {exc}"))
    use_corpus = args.corpus or not (args.group or args.form)
    if use_corpus:
        verdicts = run_suite(seed=args.seed) + verdicts
    verdicts += run_suite(groups, forms, examples=False, seed=args.seed) if (groups or forms) else []
    report.verdicts = verdicts
    passed = sum(v.passed for v in verdicts)
    report.result = {"total": len(verdicts), "passed": passed, "failed": len(verdicts) - passed}
    report.footer.append(f"{passed}/{len(verdicts)} checks passed")
    return 0 if all_passed(verdicts) else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "structured"], default="text")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="relcenter", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"relcenter {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    grp = sub.add_parser("group").add_subparsers(dest="action", required=True)
    p = grp.add_parser("info", parents=[common], help="order, classes, center")
    p.add_argument("group", help="group record (JSON)")
    p.set_defaults(func=cmd_group_info)

    pm = sub.add_parser("premetric").add_subparsers(dest="action", required=True)
    for action, help_ in (("validate", "FORM"), ("product", "FORM FORM"), ("descend", "MORPHISM MORPHISM")):
        p = pm.add_parser(action, parents=[common], help=help_)
        p.add_argument("paths", nargs="+")
        p.set_defaults(func=cmd_premetric)

    pt = sub.add_parser("pointed").add_subparsers(dest="action", required=True)
    for action, help_ in (("center", "FORM"), ("tensor", "MORPHISM MORPHISM"), ("tilde", "FORM"),
                          ("fpdim-report", "FORM")):
        p = pt.add_parser(action, parents=[common], help=help_)
        p.add_argument("paths", nargs="+")
        p.set_defaults(func=cmd_pointed)

    ce = sub.add_parser("center").add_subparsers(dest="action", required=True)
    for action in ("decompose", "simples", "induce", "fuse"):
        p = ce.add_parser(action, parents=[common])
        p.add_argument("group")
        if action == "induce":
            p.add_argument("--class", dest="cls", help="label of an element of the class")
            p.add_argument("--chi", action="append", metavar="LABEL=a/b",
                           help="character value on a centralizer element (default 0)")
        p.set_defaults(func=cmd_center)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--group", action="append", metavar="PATH")
    p.add_argument("--form", action="append", metavar="PATH")
    p.add_argument("--corpus", action="store_true", help="include the built-in corpus")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    report = Report(argv)
    try:
        status = args.func(args, report)
    except InputError as exc:
        report.error = {"type": type(exc).__name__, "message": str(exc), "witness": None}
        status = 2
    except AlgebraError as exc:
        report.error = {"type": type(exc).__name__, "message": str(exc),
                        "witness": None if exc.witness is None else str(exc.witness)}
        status = 1
    text = report.render(args.format)
    print(text, file=sys.stderr if status == 2 and args.format == "text" else sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())

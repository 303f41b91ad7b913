"""Command-line verifier.

Usage: ``omnicolor GROUP COMMAND [FILE | --fixture NAME] [options]``.
Exit status is 0 when every check passes, 1 when a check fails (the report
carries witnesses) and 2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Callable

from .coloralg import (ColorAlgebra, check_leibniz, check_lie_color, check_quadratic,
                       check_representation, jacobi_agreement)
from .errors import (CrossedAxiomFailure, NotDirac, NotLie, NotMaximalIsotropic, NotQuadratic,
                     NotSkeletal, NotSkew, NotStrict, OmniColorError, SchemaError, UnknownCommand)
from .fileformat import AlgebraFile, LieSubspace, dump_algebra_file, dump_document, parse_algebra_file
from .fixtures import FIXTURES, fixture
from .grading import validate_bicharacter
from .gvs import Subspace, Vec
from .lc2 import check_functoriality, check_jacobiator_identity, check_naturality, lc2_roundtrip
from .linf2 import (H_FORMS, I_FORMS, L3_SIGNS, alternating_check, axiom_i_sweep, check_axioms,
                    check_crossed_module, crossed_to_strict, quadruple_to_skeletal, skeletal_to_quadruple,
                    strict_to_crossed, string_from_quadratic, two_term_from_omni)
from .omni import OmniAlgebra
from .suite import run_suite, standard_spaces
from .verdicts import Check, Verdict, render_value

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# raised when a precondition is itself a failed identity: reported as a check failure
PRECONDITION_FAILURES = (NotLie, NotDirac, NotSkew, NotMaximalIsotropic, NotQuadratic,
                         NotSkeletal, NotStrict, CrossedAxiomFailure)


@dataclass
class Report:
    command: str
    source: str | None = None
    digest: str | None = None
    seed: int | None = None
    options: dict = field(default_factory=dict)
    verdicts: list[Verdict] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    error: dict | None = None
    elapsed: float | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(v.passed for v in self.verdicts)

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return EXIT_USAGE if self.error["kind"] == "usage" else EXIT_FAIL
        return EXIT_OK if self.passed else EXIT_FAIL

    def keyed_verdicts(self) -> dict:
        out = {}
        for v in self.verdicts:
            key, n = v.subject, 2
            while key in out:
                key, n = f"{v.subject}#{n}", n + 1
            out[key] = v.to_dict()
        return out

    def to_dict(self) -> dict:
        out = {
            "command": self.command,
            "input": {"source": self.source, "sha256": self.digest},
            "seed": self.seed,
            "options": self.options,
            "passed": self.passed,
            "verdicts": self.keyed_verdicts(),
            "data": render_value(self.data),
        }
        if self.error is not None:
            out["error"] = self.error
        if self.elapsed is not None:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"command: {self.command}"]
        if self.source is not None:
            lines.append(f"input: {self.source} (sha256 {self.digest})")
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        for k in sorted(self.options):
            lines.append(f"option {k}: {self.options[k]}")
        for v in self.verdicts:
            lines.append(v.render_text())
        for k in sorted(d["data"]):
            lines.append(f"{k}: {json.dumps(d['data'][k], sort_keys=True, ensure_ascii=False)}")
        if self.error is not None:
            lines.append(f"error ({self.error['type']}): {self.error['message']}")
        if self.elapsed is not None:
            lines.append(f"elapsed: {d['elapsed_seconds']} s")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


# input ------------------------------------------------------------------------


def load_input(args) -> tuple[AlgebraFile | None, str | None, str | None]:
    """The algebra file named by FILE ('-' for stdin) or --fixture, with its digest."""
    path = getattr(args, "file", None)
    name = getattr(args, "fixture", None)
    if path is not None and name is not None:
        raise SchemaError("input", "give either FILE or --fixture, not both")
    if name is not None:
        text = dump_algebra_file(fixture(name))
        source = f"fixture:{name}"
    elif path is not None:
        if path == "-":
            text, source = sys.stdin.read(), "<stdin>"
        else:
            try:
                with open(path, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise SchemaError("input", f"cannot read {path}: {exc.strerror}") from None
            source = path
    else:
        return None, None, None
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return parse_algebra_file(text), source, digest


def need(f: AlgebraFile | None, section: str):
    if f is None:
        raise SchemaError("input", "this command needs an algebra file (FILE or --fixture)")
    value = getattr(f, section)
    if value is None:
        raise SchemaError(section, "section required by this command is missing")
    return value


def _subspaces(f: AlgebraFile, om: OmniAlgebra, name: str | None) -> dict[str, Subspace]:
    subs = f.subspaces
    names = [name] if name is not None else sorted(k for k, (amb, _) in subs.items() if amb == "omni")
    if not names:
        raise SchemaError("subspaces", "no subspace with ambient 'omni' in the file")
    out = {}
    for n in names:
        if n not in subs:
            raise SchemaError(f"subspaces.{n}", "no such subspace")
        ambient, vectors = subs[n]
        if ambient != "omni":
            raise SchemaError(f"subspaces.{n}.ambient", "expected 'omni'")
        for k, coords in enumerate(vectors):
            if len(coords) != om.E.dim:
                raise SchemaError(f"subspaces.{n}.vectors[{k}]", f"expected {om.E.dim} coordinates")
        out[n] = Subspace(om.E, [Vec.from_coords(om.E, c) for c in vectors])
    return out


def _omni(f: AlgebraFile) -> OmniAlgebra:
    return OmniAlgebra(need(f, "space"), f.bicharacter)


def _equality(name: str, a, b, what: str = "") -> Check:
    ok = a == b
    return Check(name, ok, count=1, violations=0 if ok else 1, note=what)


def _constants(a: ColorAlgebra) -> list:
    return [[a.space.names[i], a.space.names[j], a.space.names[k], c] for i, j, k, c in a.constants]


def _file_data(f: AlgebraFile) -> dict:
    return dump_document(f)


# commands ---------------------------------------------------------------------


def cmd_check_bicharacter(args, f, r: Report):
    if f is None:
        raise SchemaError("input", "this command needs an algebra file (FILE or --fixture)")
    r.verdicts.append(validate_bicharacter(f.bicharacter))


def cmd_check_lie(args, f, r: Report):
    a = need(f, "algebra")
    v = check_lie_color(a)
    r.verdicts.append(v)
    if v["skew"].passed:
        r.verdicts.append(Verdict("jacobi-agreement", [jacobi_agreement(a).check()]))


def cmd_check_leibniz(args, f, r: Report):
    r.verdicts.append(check_leibniz(need(f, "algebra")))


def cmd_check_representation(args, f, r: Report):
    r.verdicts.append(check_representation(need(f, "representation")))


def cmd_check_quadratic(args, f, r: Report):
    r.verdicts.append(check_quadratic(need(f, "quadratic")))


def _omni_targets(args, f):
    if f is not None:
        return [("file", _omni(f))]
    return [(label, OmniAlgebra(V, b)) for label, V, b in standard_spaces(args.max_dim)]


def cmd_omni_leibniz(args, f, r: Report):
    for label, om in _omni_targets(args, f):
        v = om.check_leibniz()
        v.subject = f"leibniz: {label}"
        r.verdicts.append(v)


def cmd_omni_homotopy(args, f, r: Report):
    for label, om in _omni_targets(args, f):
        for v in (om.verify_homotopy(), om.check_decomposition()):
            v.subject = f"{v.subject}: {label}"
            r.verdicts.append(v)


def cmd_omni_dirac(args, f, r: Report):
    om = _omni(f)
    for name, L in _subspaces(f, om, args.subspace).items():
        v = om.is_dirac(L)
        v.subject = f"dirac: {name}"
        r.verdicts.append(v)
        r.data[f"{name}.dim"] = L.dim
        iso = v["isotropic"] if "isotropic" in v else None
        maximal = v["maximal"] if "maximal" in v else None
        if iso is not None and iso.passed and maximal is not None and maximal.passed:
            cp = om.characteristic_pair(L)
            cv = cp.conditions()
            cv.subject = f"characteristic-pair: {name}"
            r.verdicts.append(cv)
            r.data[f"{name}.dim D"] = cp.D.dim
            r.data[f"{name}.dim D0"] = cp.D0.dim


def _lie_subspace(f: AlgebraFile) -> LieSubspace:
    if f is not None and f.lie_subspace is not None:
        return f.lie_subspace
    a = need(f, "algebra")
    if f.space is not None and a.space != f.space:
        raise SchemaError("algebra", "bracket is not defined on the declared space")
    S = a.space
    return LieSubspace([S.basis_vec(i) for i in range(S.dim)], a)


def cmd_omni_dirac_from_lie(args, f, r: Report):
    W = _lie_subspace(f)
    lie = check_lie_color(W.algebra)
    lie.subject = "lie-color: W"
    r.verdicts.append(lie)
    if not lie.passed:
        return
    om = OmniAlgebra(W.basis[0].space if W.basis else need(f, "space"), f.bicharacter)
    L = om.dirac_from_lie(W.basis, W.algebra)
    r.verdicts.append(om.is_dirac(L))
    _, back = om.lie_from_dirac(L, W.basis)
    r.verdicts.append(Verdict("roundtrip", [_equality("structure constants", back.constants,
                                                      W.algebra.constants)]))
    r.data["dim L"] = L.dim
    r.data["L"] = [list(v.coords) for v in L.basis]


def cmd_omni_lie_from_dirac(args, f, r: Report):
    om = _omni(f)
    for name, L in _subspaces(f, om, args.subspace).items():
        v = om.is_dirac(L)
        v.subject = f"dirac: {name}"
        r.verdicts.append(v)
        if not v.passed:
            continue
        basis, a = om.lie_from_dirac(L)
        lv = check_lie_color(a)
        lv.subject = f"lie-color: {name}"
        r.verdicts.append(lv)
        r.data[f"{name}.basis"] = [list(b.coords) for b in basis]
        r.data[f"{name}.bracket"] = _constants(a)


def cmd_omni_derivations(args, f, r: Report):
    a = need(f, "algebra")
    lie = check_lie_color(a)
    r.verdicts.append(lie)
    if not lie.passed:
        return
    rep = OmniAlgebra(a.space, a.bicharacter).derivations(a)
    r.verdicts.append(rep.verdict)
    r.data["dim Der"] = rep.derivations.dim
    r.data["dim N"] = rep.normalizer.dim
    r.data["Der"] = [list(v.coords) for v in rep.derivations.basis]


def _axioms(args, t) -> Verdict:
    return check_axioms(t, h_form=args.h_form, i_form=args.i_form)


def cmd_l2_check(args, f, r: Report):
    r.verdicts.append(_axioms(args, need(f, "two_term")))


def cmd_l2_from_omni(args, f, r: Report):
    om = _omni(f)
    t = two_term_from_omni(om, l3_sign=args.l3_sign)
    r.verdicts.append(_axioms(args, t))
    r.data["file"] = _file_data(AlgebraFile(f.order, f.group, f.bicharacter, space=om.V, two_term=t,
                                            description="2-term algebra from the omni-Lie color algebra"))


def cmd_l2_string(args, f, r: Report):
    q = need(f, "quadratic")
    qv = check_quadratic(q)
    r.verdicts.append(qv)
    if not qv.passed:
        return
    t = string_from_quadratic(q)
    r.verdicts.append(_axioms(args, t))
    r.verdicts.append(Verdict("l3", [alternating_check(t.V0, t.bicharacter, t.l3, "eps-skew")]))
    r.data["file"] = _file_data(AlgebraFile(f.order, f.group, f.bicharacter, two_term=t,
                                            description="string algebra of a quadratic Lie color algebra"))


def cmd_l2_skeletal(args, f, r: Report):
    t = need(f, "two_term")
    q = skeletal_to_quadruple(t)
    r.verdicts.append(q.check())
    r.verdicts.append(Verdict("roundtrip", [_equality("skeletal -> quadruple -> skeletal",
                                                      quadruple_to_skeletal(q), t)]))
    r.data["bracket"] = _constants(q.algebra)


def cmd_l2_strict_to_crossed(args, f, r: Report):
    t = need(f, "two_term")
    c = strict_to_crossed(t)
    r.verdicts.append(check_crossed_module(c))
    r.verdicts.append(Verdict("roundtrip", [_equality("strict -> crossed -> strict",
                                                      crossed_to_strict(c), t)]))
    r.data["file"] = _file_data(AlgebraFile(f.order, f.group, f.bicharacter, crossed_module=c,
                                            description="crossed module of a strict 2-term algebra"))


def cmd_l2_crossed_to_strict(args, f, r: Report):
    c = need(f, "crossed_module")
    cv = check_crossed_module(c)
    r.verdicts.append(cv)
    if not cv.passed:
        return
    t = crossed_to_strict(c)
    r.verdicts.append(_axioms(args, t))
    r.verdicts.append(Verdict("roundtrip", [_equality("crossed -> strict -> crossed",
                                                      strict_to_crossed(t), c)]))
    r.data["file"] = _file_data(AlgebraFile(f.order, f.group, f.bicharacter, two_term=t,
                                            description="strict 2-term algebra of a crossed module"))


def cmd_lc2_jacobiator(args, f, r: Report):
    t = need(f, "two_term")
    jv = check_jacobiator_identity(t)
    r.verdicts += [jv, check_naturality(t), check_functoriality(t)]
    ii = axiom_i_sweep(t, args.i_form).check()
    jc = jv["jacobiator identity"]
    same_witness = (ii.witness is None) == (jc.witness is None) and (
        ii.witness is None or ii.witness.args == jc.witness.args)
    agree = ii.passed == jc.passed and ii.violations == jc.violations and same_witness
    r.verdicts.append(Verdict("agreement with (i)", [Check(
        "same verdict and witness", agree, count=1, violations=0 if agree else 1,
        note=f"(i): {ii.violations} violations; jacobiator: {jc.violations} violations")]))


def cmd_lc2_roundtrip(args, f, r: Report):
    t = need(f, "two_term")
    L, back = lc2_roundtrip(t)
    r.verdicts.append(Verdict("lc2-roundtrip", [_equality("two-term -> lc2 -> two-term", back, t)]))
    r.data["jacobiator entries"] = len(L.jacobiator)


def cmd_suite(args, f, r: Report):
    r.seed = args.seed
    r.verdicts += run_suite(args.seed, max_dim=args.max_dim, samples=args.samples)


COMMANDS: dict[tuple[str, str], Callable] = {
    ("check", "bicharacter"): cmd_check_bicharacter,
    ("check", "lie"): cmd_check_lie,
    ("check", "leibniz"): cmd_check_leibniz,
    ("check", "representation"): cmd_check_representation,
    ("check", "quadratic"): cmd_check_quadratic,
    ("omni", "leibniz"): cmd_omni_leibniz,
    ("omni", "homotopy"): cmd_omni_homotopy,
    ("omni", "dirac"): cmd_omni_dirac,
    ("omni", "dirac-from-lie"): cmd_omni_dirac_from_lie,
    ("omni", "lie-from-dirac"): cmd_omni_lie_from_dirac,
    ("omni", "derivations"): cmd_omni_derivations,
    ("l2", "check"): cmd_l2_check,
    ("l2", "from-omni"): cmd_l2_from_omni,
    ("l2", "string"): cmd_l2_string,
    ("l2", "skeletal"): cmd_l2_skeletal,
    ("l2", "strict-to-crossed"): cmd_l2_strict_to_crossed,
    ("l2", "crossed-to-strict"): cmd_l2_crossed_to_strict,
    ("lc2", "jacobiator"): cmd_lc2_jacobiator,
    ("lc2", "roundtrip"): cmd_lc2_roundtrip,
}

ALIASES = {
    ("omni", "check-leibniz"): ("omni", "leibniz"),
    ("omni", "verify-homotopy"): ("omni", "homotopy"),
    ("lc2", "check-jacobiator"): ("lc2", "jacobiator"),
}

# commands that run without an input file
FILELESS = {("omni", "leibniz"), ("omni", "homotopy")}


# argument parsing -------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so usage errors become exit-2 reports."""

    def error(self, message):
        raise UnknownCommand(message)


def _common(p: argparse.ArgumentParser, with_input: bool = True):
    if with_input:
        p.add_argument("file", nargs="?", help="algebra file (JSON); '-' reads stdin")
        p.add_argument("--fixture", help="use a built-in fixture instead of a file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--h-form", choices=H_FORMS, default="corrected", dest="h_form")
    p.add_argument("--i-form", choices=I_FORMS, default="corrected", dest="i_form")
    p.add_argument("--l3-sign", choices=L3_SIGNS, default="corrected", dest="l3_sign")
    p.add_argument("--max-dim", type=int, default=3, dest="max_dim")
    p.add_argument("--subspace", default=None)
    p.add_argument("--timing", action="store_true", help="include wall-clock time in the report")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="omnicolor", description="Exact checks for color algebra structures.")
    groups = parser.add_subparsers(dest="group", parser_class=_Parser)
    for group in ("check", "omni", "l2", "lc2"):
        gp = groups.add_parser(group)
        cmds = gp.add_subparsers(dest="command", parser_class=_Parser)
        names = [c for g, c in COMMANDS if g == group] + [a for g, a in ALIASES if g == group]
        for name in names:
            _common(cmds.add_parser(name))
    fx = groups.add_parser("fixtures")
    fx.add_argument("name", nargs="?")
    fx.add_argument("--list", action="store_true")
    st = groups.add_parser("suite")
    _common(st, with_input=False)
    st.add_argument("--samples", type=int, default=20)
    st.set_defaults(seed=0, max_dim=2)
    return parser


def _options(args, key) -> dict:
    group, command = key
    opts = {}
    if group == "l2" or key == ("lc2", "jacobiator"):
        opts["i_form"] = args.i_form
    if group == "l2":
        opts["h_form"] = args.h_form
    if key == ("l2", "from-omni"):
        opts["l3_sign"] = args.l3_sign
    if key in FILELESS or group == "suite":
        opts["max_dim"] = args.max_dim
    if group == "suite":
        opts["samples"] = args.samples
    if args.subspace is not None:
        opts["subspace"] = args.subspace
    return opts


def _error(exc: Exception, kind: str) -> dict:
    return {"kind": kind, "type": type(exc).__name__, "message": str(exc).strip("'\"")}


def run(argv: list[str]) -> tuple[Report | None, int, str]:
    """Parse ``argv`` and execute; returns (report, exit code, text to print)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UnknownCommand as exc:
        r = Report(" ".join(argv))
        r.error = _error(exc, "usage")
        return r, EXIT_USAGE, r.to_json()
    if args.group is None:
        return None, EXIT_USAGE, parser.format_help()
    if args.group == "fixtures":
        return _run_fixtures(args)
    if args.group == "suite":
        key = ("suite", "")
        handler = cmd_suite
        r = Report("suite")
    else:
        if args.command is None:
            r = Report(args.group)
            r.error = _error(UnknownCommand(f"missing command for {args.group!r}"), "usage")
            return r, EXIT_USAGE, r.to_json()
        key = ALIASES.get((args.group, args.command), (args.group, args.command))
        handler = COMMANDS[key]
        r = Report(" ".join(key))
    fmt = args.format
    r.seed = args.seed
    r.options = _options(args, key)
    start = time.perf_counter()
    try:
        f = None
        if args.group != "suite":
            f, r.source, r.digest = load_input(args)
            if f is None and key not in FILELESS:
                raise SchemaError("input", "this command needs an algebra file (FILE or --fixture)")
        if args.max_dim < 1:
            raise SchemaError("--max-dim", "must be at least 1")
        handler(args, f, r)
    except PRECONDITION_FAILURES as exc:
        r.error = _error(exc, "failure")
        verdict = getattr(exc, "verdict", None)
        if verdict is not None:
            r.verdicts.append(verdict)
    except OmniColorError as exc:
        r.error = _error(exc, "usage")
    if args.timing:
        r.elapsed = time.perf_counter() - start
    text = r.to_json() if fmt == "json" else r.to_text()
    return r, r.exit_code, text


def _run_fixtures(args) -> tuple[None, int, str]:
    if args.list or args.name is None:
        lines = [f"{name}: {FIXTURES[name]().description}" for name in sorted(FIXTURES)]
        return None, EXIT_OK if args.list else EXIT_USAGE, "\n".join(lines)
    try:
        return None, EXIT_OK, dump_algebra_file(fixture(args.name))
    except OmniColorError as exc:
        return None, EXIT_USAGE, json.dumps({"error": _error(exc, "usage")}, indent=2, sort_keys=True)


def main(argv: list[str] | None = None) -> int:
    _, code, text = run(sys.argv[1:] if argv is None else list(argv))
    out = sys.stdout if code != EXIT_USAGE or text.lstrip().startswith("{") else sys.stderr
    out.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

"""``ringlab`` command line.

Exit status: 0 on success, 1 when a check FAILs or a predicate contradicts
``--expect``, 2 on usage, parse or validation errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import limits
from .constructions import (
    central_regular_localization,
    corner_ring,
    direct_product,
    dorroh_extension,
    identity_endomorphism,
    matrix_ring,
    parse_endomorphism,
    parse_nonunital,
    quotient_ring,
    scalar_plus_strict_upper,
    trivial_extension,
    truncated_skew_power_series,
    upper_triangular_ring,
)
from .corpus import load_corpus
from .errors import InsufficientCorpus, RingLabError
from .expr import parse_expression, search, to_string
from .ideals import generated, idempotents, jacobson_radical, nil_elements, units
from .predicates import PREDICATES, evaluate
from .ring import parse_element, parse_elements, parse_ring, serialize_ring, validate_ring
from .suite import CHECK_IDS, SuiteConfig, run_suite


class UsageError(RingLabError):
    pass


def _read_ring(path, validate=True):
    R = parse_ring(Path(path).read_text())
    if validate:
        rep = validate_ring(R)
        if not rep.ok:
            law, wit = rep.violations[0]
            raise UsageError(f"{path}: invalid ring: {law} at {wit}")
    return R


def cmd_validate(args, out):
    R = _read_ring(args.ring, validate=False)
    rep = validate_ring(R)
    if rep.ok:
        print(f"{R.name}: ok (order {R.order})", file=out)
        return 0
    for law, wit in rep.violations:
        print(f"violation {law} {' '.join(map(str, wit))}", file=out)
    return 2


def cmd_info(args, out):
    R = _read_ring(args.ring)
    print(f"name: {R.name}", file=out)
    print(f"order: {R.order}", file=out)
    print(f"generators: {R.k}", file=out)
    print(f"units: {len(units(R))}", file=out)
    print(f"radical: {len(jacobson_radical(R))}", file=out)
    print(f"nilpotents: {len(nil_elements(R))}", file=out)
    print(f"idempotents: {len(idempotents(R))}", file=out)
    return 0


def cmd_radical(args, out):
    R = _read_ring(args.ring)
    out.write(jacobson_radical(R).serialize())
    return 0


def _parse_expect(text):
    if text is None:
        return None
    if text not in ("true", "false"):
        raise UsageError(f"--expect takes true or false, not {text!r}")
    return text == "true"


def cmd_check(args, out):
    R = _read_ring(args.ring)
    names = [n.strip() for n in args.predicates.split(",") if n.strip()]
    for n in names:
        if n not in PREDICATES:
            raise UsageError(f"unknown predicate {n!r}; known: {', '.join(PREDICATES)}")
    expect = _parse_expect(args.expect)
    status = 0
    for n in names:
        v = evaluate(R, n)
        line = f"{n}: {'true' if v.value else 'false'}"
        if not v.value:
            line += f" witness=({','.join(str(e) for e in v.witness)})"
        print(line, file=out)
        if expect is not None and v.value != expect:
            status = 1
    return status


def _construct(args):
    R = _read_ring(args.ring)
    kind, _, param = args.kind.partition(":")

    def need_int():
        if not param.isdigit() or int(param) < 1:
            raise UsageError(f"construction {kind!r} needs a positive size, e.g. {kind}:2")
        return int(param)

    if kind == "matrix":
        return matrix_ring(R, need_int())
    if kind == "tri":
        return upper_triangular_ring(R, need_int())
    if kind == "scalarupper":
        return scalar_plus_strict_upper(R, need_int())
    if kind == "trivext":
        return trivial_extension(R)
    if kind == "product":
        if not args.extra:
            raise UsageError("product needs a second ring file")
        return direct_product(R, _read_ring(args.extra))
    if kind == "quotient":
        if args.ideal_gens is None:
            raise UsageError("quotient needs --ideal-gens")
        I = generated(R, parse_elements(R, args.ideal_gens), "ideal")
        return quotient_ring(R, I)[0]
    if kind == "corner":
        if args.idem is None:
            raise UsageError("corner needs --idem")
        return corner_ring(R, parse_element(R, args.idem))[0]
    if kind == "powerseries":
        k = need_int()
        f = parse_endomorphism(R, Path(args.endo).read_text()) if args.endo else identity_endomorphism(R)
        return truncated_skew_power_series(R, f, k)
    if kind == "dorroh":
        if not args.extra:
            raise UsageError("dorroh needs a nonunital ring file")
        return dorroh_extension(R, parse_nonunital(Path(args.extra).read_text(), R.k))
    if kind == "localize":
        if args.set is None:
            raise UsageError("localize needs --set")
        return central_regular_localization(R, parse_elements(R, args.set)).ring
    raise UsageError(f"unknown construction {args.kind!r}")


def cmd_construct(args, out):
    S = _construct(args)
    if args.name:
        S = S.renamed(args.name)
    text = serialize_ring(S)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return 0


def _config(args):
    return SuiteConfig(seed=args.seed, samples=args.samples)


def cmd_verify(args, out):
    entries = load_corpus(args.corpus)
    ids = None if args.id == "all" else [args.id]
    try:
        report = run_suite(entries, _config(args), ids=ids)
        status = 1 if report.failed else 0
    except InsufficientCorpus as exc:
        report = exc.report
        print(f"error: {exc}", file=sys.stderr)
        status = 2
    text = report.render()
    if args.report:
        Path(args.report).write_text(text)
        print(text.rstrip("\n").rsplit("\n", 1)[-1], file=out)
    else:
        out.write(text)
    return status


def cmd_search(args, out):
    node = parse_expression(args.where)
    entries = load_corpus(args.corpus)
    skipped = [e for e in entries if not e.ok]
    for e in skipped:
        print(f"warning: skipping {e.source}: {e.problem}", file=sys.stderr)
    hits = search([e.ring for e in entries if e.ok], node)
    print(f"# {to_string(node)}", file=out)
    for R in hits:
        print(R.name, file=out)
    expect = _parse_expect(args.expect)
    if expect is not None and bool(hits) != expect:
        return 1
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=None,
                        help=f"largest ring order to enumerate (env {limits.ENV_MAX_ORDER})")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=200)

    p = argparse.ArgumentParser(prog="ringlab", description="Finite ring toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (("validate", cmd_validate, "check ring axioms"),
                               ("info", cmd_info, "order and distinguished-set sizes"),
                               ("radical", cmd_radical, "print the Jacobson radical")):
        sp = sub.add_parser(name, help=helptext, parents=[common])
        sp.add_argument("ring")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("check", help="evaluate predicates", parents=[common])
    sp.add_argument("ring")
    sp.add_argument("-p", "--predicates", required=True, help="comma-separated names")
    sp.add_argument("--expect", choices=("true", "false"))
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("construct", help="build a ring extension", parents=[common])
    sp.add_argument("kind", help="matrix:n tri:n scalarupper:n trivext product quotient "
                                 "corner powerseries:k dorroh localize")
    sp.add_argument("ring")
    sp.add_argument("extra", nargs="?", help="second ring file (product) or nring file (dorroh)")
    sp.add_argument("--ideal-gens")
    sp.add_argument("--idem")
    sp.add_argument("--endo")
    sp.add_argument("--set")
    sp.add_argument("--name")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="replay theorem checks over a corpus", parents=[common])
    sp.add_argument("id", help="check id or 'all': " + " ".join(CHECK_IDS))
    sp.add_argument("--corpus")
    sp.add_argument("--report")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="rings matching a predicate expression", parents=[common])
    sp.add_argument("--where", required=True)
    sp.add_argument("--corpus")
    sp.add_argument("--expect", choices=("true", "false"), help="expect a nonempty result (true)")
    sp.set_defaults(func=cmd_search)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.max_order is not None:
            with limits.override(max_order=args.max_order):
                return args.func(args, out)
        return args.func(args, out)
    except (RingLabError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()

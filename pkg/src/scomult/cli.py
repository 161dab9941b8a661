"""Command-line front end: check predicates, run the suite, enumerate.

Exit codes are the only machine contract: 0 = true/pass, 1 = false/fail,
2 = precondition failure, 3 = input error.  Human-readable text may change
freely; `verify --report` writes the machine-readable JSON document.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import morphisms as mor
from . import s_theory as st
from .catalog import CatalogParams, generate_catalog
from .errors import (
    DisjointnessFailure,
    InstanceParseError,
    PreconditionUnmet,
    ScomultError,
    UnknownStatement,
)
from .instancefile import parse_instance_file
from .modules import enumerate_submodules, torsion_set
from .mutations import mutation_catalog_params, run_mutation_suite
from .rings import enumerate_ideals, enumerate_mcs, validate_mcs
from .statements import STATEMENTS, verify_all

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_PRECONDITION = 2
EXIT_INPUT = 3

MODULE_PREDICATES = (
    "s-comultiplication", "comultiplication", "multiplication",
    "s-multiplication", "s-cyclic", "cyclic", "torsion", "s-torsion-free",
    "prime-module",
)
SUBMODULE_PREDICATES = ("s-prime", "s-second", "s-minimal", "s-finite")
HOM_PREDICATES = ("s-zero", "s-monic", "s-epic")
ALL_PREDICATES = MODULE_PREDICATES + SUBMODULE_PREDICATES + HOM_PREDICATES


def _parse_mcs_argument(instance, text):
    if text is None:
        return None
    if text in instance.mcs:
        return instance.mcs[text]
    cleaned = text.replace("{", " ").replace("}", " ").replace(",", " ")
    try:
        elements = [int(tok) for tok in cleaned.split()]
    except ValueError:
        raise ScomultError(f"--mcs must name an [mcs] block or list elements, got {text!r}")
    if not elements:
        raise ScomultError("--mcs needs at least one element")
    return validate_mcs(instance.ring, elements)


def _pick(mapping, name, what):
    if name is None:
        if not mapping:
            raise ScomultError(f"instance file defines no {what}")
        return next(iter(mapping.values()))
    if name not in mapping:
        raise ScomultError(f"unknown {what} {name!r}")
    return mapping[name]


def _require_mcs(mcs, predicate):
    if mcs is None:
        raise ScomultError(f"{predicate} needs an m.c.s. (--mcs)")
    return mcs


def _print_witness(w, indent="  "):
    if w is not None:
        print(f"{indent}witness: {w.describe()}")


def cmd_check(args):
    instance = parse_instance_file(args.instance)
    predicate = args.predicate
    if predicate not in ALL_PREDICATES:
        print(f"unknown predicate {predicate!r}; choose from: "
              f"{', '.join(ALL_PREDICATES)}", file=sys.stderr)
        return EXIT_INPUT
    mcs = _parse_mcs_argument(instance, args.mcs)

    if predicate in HOM_PREDICATES:
        hom = _pick(instance.homs, args.hom, "hom")
        mcs = _require_mcs(mcs, predicate)
        fn = {"s-zero": mor.is_s_zero, "s-monic": mor.is_s_monic,
              "s-epic": mor.is_s_epic}[predicate]
        witness = fn(hom, mcs)
        print(f"{predicate}({hom.describe()}, S={mcs.describe()}): "
              f"{witness is not None}")
        _print_witness(witness)
        return EXIT_TRUE if witness is not None else EXIT_FALSE

    module = _pick(instance.modules, args.module, "module")

    if predicate in SUBMODULE_PREDICATES:
        if args.submodule is None:
            raise ScomultError(f"{predicate} needs a submodule (--submodule)")
        _, sub = _pick(instance.submodules, args.submodule, "submodule")
        mcs = _require_mcs(mcs, predicate)
        if predicate == "s-prime":
            witness = st.is_s_prime_submodule(module, sub, mcs)
        elif predicate == "s-second":
            witness = st.is_s_second(module, sub, mcs)
        elif predicate == "s-finite":
            witness = st.is_s_finite(module, sub, mcs)
        else:
            steps = st.is_s_minimal(module, sub, mcs)
            ok = steps is not None
            print(f"{predicate}({sub.describe()}): {ok}")
            if ok:
                for l, w in steps.items():
                    print(f"  {l.describe()}: s={module.ring.label(w.get('s'))}")
            return EXIT_TRUE if ok else EXIT_FALSE
        print(f"{predicate}({sub.describe()}, S={mcs.describe()}): "
              f"{witness is not None}")
        _print_witness(witness)
        return EXIT_TRUE if witness is not None else EXIT_FALSE

    if predicate == "s-comultiplication":
        mcs = _require_mcs(mcs, predicate)
        result = st.is_s_comultiplication(module, mcs)
        print(f"s-comultiplication({module.describe()}, S={mcs.describe()}): "
              f"{result.holds}")
        if result.holds:
            for sub, w in result.witnesses:
                print(f"  {sub.describe()}: s={module.ring.label(w.get('s'))}")
        else:
            print(f"  failing submodule: {result.failing.describe()}")
        return EXIT_TRUE if result.holds else EXIT_FALSE
    if predicate == "s-multiplication":
        mcs = _require_mcs(mcs, predicate)
        result = st.is_s_multiplication(module, mcs)
        print(f"s-multiplication({module.describe()}): {result.holds}")
        if not result.holds:
            print(f"  failing submodule: {result.failing.describe()}")
        return EXIT_TRUE if result.holds else EXIT_FALSE
    if predicate == "comultiplication":
        verdict = st.is_comultiplication(module)
        print(f"comultiplication({module.describe()}): {verdict}")
        if not verdict:
            for n in enumerate_submodules(module):
                from .modules import annihilator_set, zero_colon_set
                if zero_colon_set(module, annihilator_set(module, n.elements)) \
                        != n.elements:
                    print(f"  failing submodule: {n.describe()}")
                    break
        return EXIT_TRUE if verdict else EXIT_FALSE
    if predicate == "multiplication":
        verdict = st.is_multiplication(module)
        print(f"multiplication({module.describe()}): {verdict}")
        return EXIT_TRUE if verdict else EXIT_FALSE
    if predicate == "s-cyclic":
        mcs = _require_mcs(mcs, predicate)
        witness = st.is_s_cyclic(module, mcs)
        print(f"s-cyclic({module.describe()}): {witness is not None}")
        _print_witness(witness)
        return EXIT_TRUE if witness is not None else EXIT_FALSE
    if predicate == "cyclic":
        verdict = st.is_cyclic(module)
        print(f"cyclic({module.describe()}): {verdict}")
        return EXIT_TRUE if verdict else EXIT_FALSE
    if predicate == "torsion":
        verdict = len(torsion_set(module)) == module.size
        print(f"torsion({module.describe()}): {verdict}")
        return EXIT_TRUE if verdict else EXIT_FALSE
    if predicate == "s-torsion-free":
        mcs = _require_mcs(mcs, predicate)
        witness = st.is_s_torsion_free(module, mcs)
        print(f"s-torsion-free({module.describe()}): {witness is not None}")
        _print_witness(witness)
        return EXIT_TRUE if witness is not None else EXIT_FALSE
    verdict = st.is_prime_module(module)
    print(f"prime-module({module.describe()}): {verdict}")
    return EXIT_TRUE if verdict else EXIT_FALSE


def cmd_verify(args):
    statement_ids = None
    if args.statements:
        statement_ids = [tok.strip() for tok in args.statements.split(",") if tok.strip()]
        for statement_id in statement_ids:
            if statement_id not in STATEMENTS:
                raise UnknownStatement(statement_id, STATEMENTS)
    document = {
        "run": {
            "params": {
                "max_ring": args.max_ring,
                "max_module": args.max_module,
                "statements": statement_ids,
                "mutation": args.mutation,
            },
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
        },
        "statements": [],
    }

    if args.mutation:
        params = mutation_catalog_params()
        catalog = generate_catalog(params)
        outcomes = run_mutation_suite(catalog, statement_ids)
        document["mutants"] = []
        for name, failed in outcomes:
            document["mutants"].append({"name": name, "failed": failed})
            marker = "killed" if failed else "ESCAPED"
            print(f"mutant {name}: {marker} ({', '.join(failed) or 'no failures'})")
        if args.report:
            _write_report(args.report, document)
        # statements failed by design, so the exit contract reports failure
        return EXIT_FALSE
    params = CatalogParams(max_ring_order=args.max_ring,
                           max_module_carrier=args.max_module)
    catalog = generate_catalog(params)
    reports = verify_all(catalog, statement_ids)
    fails = 0
    nonvacuous = 0
    for report in reports:
        document["statements"].append(report.to_json())
        line = (f"{report.verdict.upper():8s} {report.statement_id:8s} "
                f"instances={report.instances} ({report.ms:.0f} ms)")
        print(line)
        if report.verdict == "fail":
            fails += 1
            print(f"  counterexample: {json.dumps(report.counterexample)}")
        if report.verdict != "vacuous":
            nonvacuous += 1
    if args.report:
        _write_report(args.report, document)
    if fails == 0 and nonvacuous > 0:
        return EXIT_TRUE
    return EXIT_FALSE


def _write_report(path, document):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(document, handle, indent=2)
        handle.write("\n")


def cmd_enumerate(args):
    instance = parse_instance_file(args.instance)
    ring = instance.ring
    if args.what == "ideals":
        for ideal in enumerate_ideals(ring):
            print(ideal.describe())
    elif args.what == "submodules":
        module = _pick(instance.modules, args.module, "module")
        for sub in enumerate_submodules(module):
            print(sub.describe())
    else:
        for mcs in enumerate_mcs(ring):
            print(mcs.describe())
    return EXIT_TRUE


def build_parser():
    parser = argparse.ArgumentParser(
        prog="scomult",
        description="Finite computational algebra for S-comultiplication "
                    "module theory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="evaluate one predicate on an instance file")
    check.add_argument("instance", help="path to an instance file")
    check.add_argument("predicate", help=f"one of: {', '.join(ALL_PREDICATES)}")
    check.add_argument("--module", help="module name (default: first in file)")
    check.add_argument("--submodule", help="submodule name from the file")
    check.add_argument("--hom", help="hom name (default: first in file)")
    check.add_argument("--mcs", help="mcs name from the file, or elements like '1 3'")
    check.set_defaults(func=cmd_check)

    verify = sub.add_parser("verify", help="run the statement suite over a catalog")
    verify.add_argument("--statements", help="comma-separated statement ids")
    verify.add_argument("--max-ring", type=int, default=12,
                        help="largest ring order in the catalog (default 12)")
    verify.add_argument("--max-module", type=int, default=16,
                        help="largest module carrier (default 16)")
    verify.add_argument("--report", help="write the JSON report document here")
    verify.add_argument("--mutation", action="store_true",
                        help="run the deliberately broken predicate variants")
    verify.set_defaults(func=cmd_verify)

    enum = sub.add_parser("enumerate", help="list ideals, submodules, or m.c.s.")
    enum.add_argument("instance", help="path to an instance file")
    enum.add_argument("what", choices=("ideals", "submodules", "mcs"))
    enum.add_argument("--module", help="module name (default: first in file)")
    enum.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_TRUE
    try:
        return args.func(args)
    except (DisjointnessFailure, PreconditionUnmet) as err:
        print(f"precondition failure: {err}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InstanceParseError as err:
        print(f"input error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except (ScomultError, OSError) as err:
        print(f"input error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

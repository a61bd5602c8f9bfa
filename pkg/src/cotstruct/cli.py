"""Command-line front end.

Exit codes: 0 all checks pass, 1 input error, 2 tower did not terminate,
3 verification failure (the report carries the witness).
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

import numpy as np

from cotstruct import cotstructure as ct
from cotstruct.complexes import cohomology_dims, hom_space, is_contractible, minimal_model
from cotstruct.corpus import random_complex
from cotstruct.formats import (
    FORMAT_VERSION,
    FormatError,
    chain_map_to_dict,
    dumps_report,
    load_algebra,
    load_complex,
    report_to_dict,
    write_complex,
)

EXIT_OK, EXIT_INPUT, EXIT_NONTERMINATING, EXIT_FAILED = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path, algebra=None):
    try:
        return load_complex(path, algebra)
    except FormatError as exc:
        raise InputError(str(exc)) from None


def _load_generators(paths, algebra, generating):
    if not paths:
        raise InputError("at least one --gen file is required")
    gens = [_load(p, algebra) for p in paths]
    for p, g in zip(paths, gens):
        if g.algebra != algebra:
            raise InputError(f"{p}: generator is over a different algebra")
    try:
        return ct.GeneratorSet(gens, generating=generating)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _cohomology(X):
    return {str(n): h for n, h in cohomology_dims(X).items()}


def _emit(doc: dict, args) -> None:
    text = dumps_report(doc)
    if getattr(args, "report", None):
        Path(args.report).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _base(command: str, inputs: dict) -> dict:
    return {"format-version": FORMAT_VERSION, "command": command, "inputs": inputs}


# -- hom -----------------------------------------------------------------------------

def cmd_hom(args) -> int:
    X = _load(args.X)
    Y = _load(args.Y)
    if X.algebra != Y.algebra:
        raise InputError("the two complexes are over different algebras")
    sp = hom_space(X, Y, args.shift)
    doc = _base("hom", {"X": args.X, "Y": args.Y, "shift": args.shift})
    doc["dimensions"] = {
        "hom": sp.dimension,
        "chain_maps": sp.ambient_dimension,
        "null_homotopic": sp.boundary_dimension,
    }
    if args.show_reps:
        doc["representatives"] = [chain_map_to_dict(f) for f in sp.representatives]
    doc["verdict"] = "pass"
    _emit(doc, args)
    return EXIT_OK


# -- decompose -------------------------------------------------------------------------

def decompose_report(X, gens, max_iter=None, samples=None) -> tuple[dict, dict]:
    """Run the decomposition with every lemma-level verification.

    Returns the report document and a dict with the A and B complexes.
    """
    dec = ct.decompose(X, gens, max_iter, check=False)
    if samples is None:
        samples = ct.default_samples(gens, extra=[X])
    reports = []
    tri = ct.Report("triangle")
    for name, ok in dec.triangle.check().items():
        tri.add(f"{name} null-homotopic", ok)
    for n, st in enumerate(dec.tower.steps):
        for name, ok in st.triangle.check().items():
            tri.add(f"step{n} {name} null-homotopic", ok)
    reports.append(tri)
    mem = ct.Report("membership")
    mem.add("B-part in B", dec.b_membership.holds, {"tier": "exact"}, dec.b_membership.witness)
    if dec.a_membership is not None:
        mem.add("A-part in Ā", dec.a_membership.holds, {"tier": "exact"}, dec.a_membership.witness)
    sampled = ct.in_A_sampled(dec.a_part, gens, samples)
    mem.add("A-part passes sampled A-test", sampled.holds, {"tier": "sampled"}, sampled.witness)
    reports.append(mem)
    approx = ct.Report("left_approximation")
    bad = ct.check_left_approximation(dec.g_X, samples)
    approx.add("Hom(g_X, B') surjective", not bad, {"failing_samples": bad})
    reports.append(approx)
    for n in range(len(dec.tower)):
        reports.append(ct.verify_ses(dec.tower, n, gens))
        reports.append(ct.verify_approx_maps(dec.tower, n, gens, samples))
    reports.append(ct.verify_isom(dec, samples))
    if ct.check_setup2(gens).passed:
        reports.append(ct.setup2_iso_diagnostic(dec, gens))
    A_min, B_min = minimal_model(dec.a_part), minimal_model(dec.b_part)
    doc = {
        "tower": {"length": len(dec.tower), "terminated": dec.tower.terminated, "trace": dec.tower.trace()},
        "cohomology": {"X": _cohomology(X), "A": _cohomology(A_min), "B": _cohomology(B_min)},
        "a_part": {"constructed_rank": dec.a_part.rank(), "minimal_terms": {str(n): list(v) for n, v in A_min.terms.items()}},
        "b_part": {"constructed_rank": dec.b_part.rank(), "minimal_terms": {str(n): list(v) for n, v in B_min.terms.items()}},
        "samples": len(samples),
        "reports": [report_to_dict(r) for r in reports],
        "passed": all(r.passed for r in reports),
    }
    return doc, {"A": A_min, "B": B_min}


def cmd_decompose(args) -> int:
    X = _load(args.X)
    gens = _load_generators(args.gen, X.algebra, args.generating)
    doc = _base("decompose", {"X": args.X, "generators": list(args.gen), "max_iter": args.max_iter,
                              "generating": args.generating})
    start = time.perf_counter()
    try:
        body, parts = decompose_report(X, gens, args.max_iter)
    except ct.NonTerminating as exc:
        doc.update({"verdict": "nonterminating", "error": str(exc),
                    "tower": {"length": len(exc.tower), "terminated": False, "trace": exc.tower.trace()}})
        _emit(doc, args)
        return EXIT_NONTERMINATING
    doc.update(body)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = Path(args.X).stem
    for label, C in parts.items():
        write_complex(out / f"{stem}.{label}.toml", C)
    doc["outputs"] = {label: f"{stem}.{label}.toml" for label in parts}
    doc["verdict"] = "pass" if body["passed"] else "fail"
    if args.timing:
        doc["timing_seconds"] = round(time.perf_counter() - start, 3)
    _emit(doc, args)
    return EXIT_OK if body["passed"] else EXIT_FAILED


# -- verify --------------------------------------------------------------------------------

def verify_corpus(gens, corpus, max_iter=None) -> dict:
    """All checks over a corpus; returns the report body (``passed`` is the aggregate)."""
    reports, notes = [], {}
    setup2 = ct.check_setup2(gens)
    setup2_ok = setup2.passed
    setup2.info["conditions_hold"] = setup2_ok
    for c in setup2.checks:
        c.informational = True
    reports.append(setup2)
    for g, S in enumerate(gens):
        r = ct.check_connected_corigid(S)
        r.name = f"check_connected_corigid[{g}]"
        r.info["conditions_hold"] = r.passed
        for c in r.checks:
            c.informational = True
        reports.append(r)
    reports.append(ct.verify_axioms(gens, corpus, max_iter))
    if gens.generating:
        if setup2_ok:
            samples = ct.default_samples(gens, max_iter)
            reports.append(ct.membership_equality_suite(gens, corpus, samples, max_iter))
        else:
            notes["membership_equality_suite"] = "skipped: Setup-2 conditions fail"
    gd = ct.generating_diagnostic(gens, corpus)
    for c in gd.checks:
        c.informational = not gens.generating
    reports.append(gd)
    nondeg = ct.Report("nondegeneracy_window")
    for t, X in enumerate(corpus):
        if X.is_zero() or is_contractible(X):
            continue
        r = ct.nondegeneracy_window(gens, X)
        for c in r.checks:
            c.name = f"object{t} {c.name}"
            c.informational = not gens.generating
        nondeg.checks.extend(r.checks)
    reports.append(nondeg)
    reports.append(ct.adjacency_report(gens, corpus, max_iter))
    return {
        "reports": [report_to_dict(r) for r in reports],
        "notes": notes,
        "passed": all(r.passed for r in reports),
    }


def cmd_verify(args) -> int:
    corpus_dir = Path(args.corpus)
    files = sorted(corpus_dir.glob("*.toml")) if corpus_dir.is_dir() else []
    objects, names = [], []
    for f in files:
        try:
            objects.append(load_complex(f))
        except FormatError as exc:
            raise InputError(str(exc)) from None
        names.append(f.name)
    if not objects:
        raise InputError("empty corpus")
    alg = objects[0].algebra
    for n, X in zip(names, objects):
        if X.algebra != alg:
            raise InputError(f"{n}: corpus objects are over different algebras")
    gens = _load_generators(args.gen, alg, args.generating)
    doc = _base("verify", {"generators": list(args.gen), "corpus": names, "max_iter": args.max_iter,
                           "generating": args.generating})
    start = time.perf_counter()
    try:
        body = verify_corpus(gens, objects, args.max_iter)
    except ct.NonTerminating as exc:
        doc.update({"verdict": "nonterminating", "error": str(exc)})
        _emit(doc, args)
        return EXIT_NONTERMINATING
    doc.update(body)
    doc["verdict"] = "pass" if body["passed"] else "fail"
    if args.timing:
        doc["timing_seconds"] = round(time.perf_counter() - start, 3)
    _emit(doc, args)
    return EXIT_OK if body["passed"] else EXIT_FAILED


# -- random --------------------------------------------------------------------------------

def cmd_random(args) -> int:
    for name in ("degree_span", "max_rank", "count"):
        if getattr(args, name) < 1:
            raise InputError(f"--{name.replace('_', '-')} must be positive")
    try:
        alg = load_algebra(args.algebra)
    except FormatError as exc:
        raise InputError(str(exc)) from None
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(args.seed)
    ref = os.path.relpath(Path(args.algebra).resolve(), out.resolve())
    written = []
    for i in range(args.count):
        X = random_complex(alg, rng, args.degree_span, args.max_rank)
        target = out / f"random_{args.seed}_{i:03d}.toml"
        write_complex(target, X, Path(ref).as_posix())
        written.append(target.name)
    doc = _base("random", {"algebra": args.algebra, "seed": args.seed, "degree_span": args.degree_span,
                           "max_rank": args.max_rank, "count": args.count})
    doc["outputs"] = written
    doc["verdict"] = "pass"
    _emit(doc, args)
    return EXIT_OK


# -- entry point ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cotstruct", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hom", help="dimension of Hom(X, Σ^n Y) in the homotopy category")
    h.add_argument("X")
    h.add_argument("Y")
    h.add_argument("--shift", "-n", type=int, default=0)
    h.add_argument("--show-reps", action="store_true")
    h.set_defaults(func=cmd_hom)

    d = sub.add_parser("decompose", help="decomposition triangle A -> X -> B with verification")
    d.add_argument("X")
    d.add_argument("--gen", action="append", default=[], help="generator complex file (repeatable)")
    d.add_argument("--max-iter", type=int, default=None)
    d.add_argument("--generating", action="store_true", help="assert the shifts of the generators generate")
    d.add_argument("--out-dir", default=".")
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="run every axiom and lemma check over a corpus directory")
    v.add_argument("corpus")
    v.add_argument("--gen", action="append", default=[])
    v.add_argument("--max-iter", type=int, default=None)
    v.add_argument("--generating", action="store_true")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("random", help="write seeded random complexes")
    r.add_argument("--algebra", required=True)
    r.add_argument("--seed", type=int, default=1)
    r.add_argument("--degree-span", type=int, default=7)
    r.add_argument("--max-rank", type=int, default=3)
    r.add_argument("--count", type=int, default=1)
    r.add_argument("--out-dir", default=".")
    r.set_defaults(func=cmd_random)

    for sp in (h, d, v, r):
        sp.add_argument("--report", help="write the JSON report here instead of stdout")
        sp.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

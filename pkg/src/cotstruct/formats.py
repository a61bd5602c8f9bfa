"""Algebra, complex and report files.

Algebra and complex files are TOML; reports are JSON with sorted keys. Every
file carries a mandatory ``format-version``. See ``docs/formats.md`` for the
grammar.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np
import tomli_w

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from cotstruct.algebra import AlgebraElement, PathAlgebra, Quiver, format_element
from cotstruct.complexes import ChainMap, Complex
from cotstruct.cotstructure import Check, Membership, Report
from cotstruct.linalg import FIELD_ENV, default_field, make_field

FORMAT_VERSION = 1


class FormatError(ValueError):
    pass


def _check_keys(table: dict, allowed: set, where: str) -> None:
    unknown = sorted(set(table) - allowed)
    if unknown:
        raise FormatError(f"{where}: unknown key(s) {', '.join(unknown)}")


def _check_version(doc: dict, where: str) -> None:
    if "format-version" not in doc:
        raise FormatError(f"{where}: missing format-version")
    if doc["format-version"] != FORMAT_VERSION:
        raise FormatError(f"{where}: unsupported format-version {doc['format-version']!r}")


def _read_toml(path) -> dict:
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except tomllib.TOMLDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


# -- algebras ---------------------------------------------------------------------------

def algebra_from_dict(doc: dict, where: str = "algebra") -> PathAlgebra:
    _check_keys(doc, {"format-version", "field", "quiver"}, where)
    if "quiver" not in doc:
        raise FormatError(f"{where}: missing [quiver] section")
    q = doc["quiver"]
    _check_keys(q, {"vertices", "arrows"}, f"{where}.quiver")
    arrows = []
    for i, a in enumerate(q.get("arrows", [])):
        if isinstance(a, dict):
            _check_keys(a, {"label", "source", "target"}, f"{where}.quiver.arrows[{i}]")
            try:
                arrows.append((a["label"], a["source"], a["target"]))
            except KeyError as exc:
                raise FormatError(f"{where}.quiver.arrows[{i}]: missing {exc.args[0]}") from None
        else:
            if len(a) != 3:
                raise FormatError(f"{where}.quiver.arrows[{i}]: expected [label, source, target]")
            arrows.append(tuple(a))
    try:
        field = make_field(doc["field"]) if "field" in doc else default_field()
        quiver = Quiver(q.get("vertices", []), arrows)
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None
    return PathAlgebra(quiver, field)


def algebra_to_dict(alg: PathAlgebra) -> dict:
    field = alg.field.p if alg.field.characteristic else "rational"
    return {
        "format-version": FORMAT_VERSION,
        "field": field,
        "quiver": {
            "vertices": list(alg.vertices),
            "arrows": [{"label": a.label, "source": a.source, "target": a.target} for a in alg.quiver.arrows],
        },
    }


def load_algebra(path) -> PathAlgebra:
    doc = _read_toml(path)
    _check_version(doc, str(path))
    return algebra_from_dict(doc, str(path))


def dump_algebra(alg: PathAlgebra) -> str:
    return tomli_w.dumps(algebra_to_dict(alg))


# -- complexes ----------------------------------------------------------------------------

def complex_from_dict(doc: dict, algebra: PathAlgebra, where: str = "complex") -> Complex:
    _check_keys(doc, {"format-version", "algebra", "terms", "differentials"}, where)
    terms, diffs = {}, {}
    for key, vs in doc.get("terms", {}).items():
        try:
            n = int(key)
        except ValueError:
            raise FormatError(f"{where}: terms.{key}: degree must be an integer") from None
        if not isinstance(vs, list):
            raise FormatError(f"{where}: terms.{key}: expected a list of vertex labels")
        terms[n] = [str(v) for v in vs]
    for key, rows in doc.get("differentials", {}).items():
        try:
            n = int(key)
        except ValueError:
            raise FormatError(f"{where}: differentials.{key}: degree must be an integer") from None
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise FormatError(f"{where}: differentials.{key}: expected a list of rows")
        diffs[n] = [[str(e) for e in row] for row in rows]
    try:
        return Complex(algebra, terms, diffs)
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None


def complex_to_dict(X: Complex, algebra_ref: str | None = None) -> dict:
    doc: dict = {"format-version": FORMAT_VERSION}
    if algebra_ref is None:
        doc["algebra"] = {k: v for k, v in algebra_to_dict(X.algebra).items() if k != "format-version"}
    else:
        doc["algebra"] = algebra_ref
    doc["terms"] = {str(n): list(vs) for n, vs in X.terms.items()}
    doc["differentials"] = {
        str(n): [[format_element(X.entry(n, r, c)) for c in range(d.shape[1])] for r in range(d.shape[0])]
        for n, d in X.diffs.items()
    }
    return doc


def load_complex(path, algebra: PathAlgebra | None = None) -> Complex:
    """Read a complex file; its ``algebra`` key is a path (relative to the file) or an inline table."""
    path = Path(path)
    doc = _read_toml(path)
    _check_version(doc, str(path))
    if algebra is None:
        ref = doc.get("algebra")
        if ref is None:
            raise FormatError(f"{path}: missing algebra")
        if isinstance(ref, dict):
            algebra = algebra_from_dict({"format-version": FORMAT_VERSION, **ref}, f"{path}: algebra")
        else:
            algebra = load_algebra(path.parent / ref)
    return complex_from_dict(doc, algebra, str(path))


def dump_complex(X: Complex, algebra_ref: str | None = None) -> str:
    return tomli_w.dumps(complex_to_dict(X, algebra_ref))


def write_complex(path, X: Complex, algebra_ref: str | None = None) -> None:
    Path(path).write_text(dump_complex(X, algebra_ref), encoding="utf-8")


# -- reports ------------------------------------------------------------------------------

def summarize_complex(X: Complex) -> dict:
    return {"terms": {str(n): list(vs) for n, vs in X.terms.items()}, "rank": X.rank()}


def chain_map_to_dict(f: ChainMap) -> dict:
    alg = f.algebra
    comps = {}
    for k, arr in f.components.items():
        comps[str(k)] = [
            [format_element(AlgebraElement.from_vector(alg, arr[r, c])) for c in range(arr.shape[1])]
            for r in range(arr.shape[0])
        ]
    return {
        "source": summarize_complex(f.source),
        "target": summarize_complex(f.target),
        "shift": f.shift,
        "components": comps,
    }


def to_jsonable(obj):
    if isinstance(obj, ChainMap):
        return chain_map_to_dict(obj)
    if isinstance(obj, Complex):
        return summarize_complex(obj)
    if isinstance(obj, Report):
        return report_to_dict(obj)
    if isinstance(obj, Check):
        out = {"name": obj.name, "status": obj.status, "detail": to_jsonable(obj.detail)}
        if obj.informational:
            out["informational"] = True
        if obj.witness is not None:
            out["witness"] = to_jsonable(obj.witness)
        return out
    if isinstance(obj, Membership):
        return {"holds": obj.holds, "tier": obj.tier,
                "witness": None if obj.witness is None else to_jsonable(obj.witness)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)


def report_to_dict(rep: Report) -> dict:
    return {
        "name": rep.name,
        "passed": rep.passed,
        "checks": [to_jsonable(c) for c in rep.checks],
        "info": to_jsonable(rep.info),
    }


def dumps_report(doc: dict) -> str:
    return json.dumps(to_jsonable(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def schema_path() -> Path:
    return Path(__file__).with_name("report_schema.json")


__all__ = [
    "FIELD_ENV",
    "FORMAT_VERSION",
    "FormatError",
    "algebra_from_dict",
    "algebra_to_dict",
    "chain_map_to_dict",
    "complex_from_dict",
    "complex_to_dict",
    "dump_algebra",
    "dump_complex",
    "dumps_report",
    "load_algebra",
    "load_complex",
    "report_to_dict",
    "schema_path",
    "write_complex",
]

"""Seeded random bounded complexes for property tests and corpora."""
from __future__ import annotations

import numpy as np

from cotstruct.algebra import PathAlgebra
from cotstruct.complexes import Complex, _allowed_mask, _right_operator
from cotstruct.linalg import kernel_array


def _random_differential(alg: PathAlgebra, rng, src, tgt, prev):
    """A random d: src -> tgt with d ∘ prev = 0 (prev: earlier term -> src, or None)."""
    fld = alg.field
    mask = _allowed_mask(alg, tgt, src)
    sel = np.flatnonzero(mask.reshape(-1))
    if sel.size == 0:
        return None
    if prev is None or prev.shape[1] == 0:
        basis = np.eye(sel.size, dtype=np.int64)
    else:
        op = _right_operator(alg, prev, len(tgt))  # d -> d ∘ prev
        basis = kernel_array(fld, fld.reduce(op[:, sel]))
    if basis.shape[1] == 0:
        return None
    keep = rng.random(basis.shape[1]) < 0.5
    if not keep.any():
        return None
    p = fld.p if fld.characteristic else 7
    coeffs = rng.integers(1, p, size=basis.shape[1]) * keep
    vec = fld.reduce(basis @ fld.array(coeffs))
    flat = fld.zeros(mask.size)
    flat[sel] = vec
    return flat.reshape(mask.shape)


def random_complex(alg: PathAlgebra, rng, degree_span: int = 7, max_rank: int = 3) -> Complex:
    """One random complex living in at most ``degree_span`` consecutive degrees.

    Degrees are placed inside a window centred on 0. Each differential is a
    random element of the space of maps killing the previous differential, so
    d² = 0 holds by construction.
    """
    span = int(rng.integers(1, degree_span + 1))
    base = -(degree_span // 2)
    lo = base + int(rng.integers(0, degree_span - span + 1))
    verts = list(alg.vertices)
    terms = {}
    for n in range(lo, lo + span):
        rank = int(rng.integers(0, max_rank + 1))
        terms[n] = [verts[int(i)] for i in rng.integers(0, len(verts), size=rank)]
    if not any(terms.values()):
        terms[lo] = [verts[int(rng.integers(0, len(verts)))]]
    diffs = {}
    prev = None
    for n in range(lo, lo + span - 1):
        src, tgt = terms[n], terms[n + 1]
        d = None
        if src and tgt:
            d = _random_differential(alg, rng, src, tgt, prev)
        if d is not None:
            diffs[n] = d
        prev = d if d is not None else alg.field.zeros((len(tgt), len(src), alg.dim))
    return Complex(alg, terms, diffs)


def random_corpus(alg: PathAlgebra, seed: int, count: int, degree_span: int = 7, max_rank: int = 3) -> list[Complex]:
    rng = np.random.default_rng(seed)
    return [random_complex(alg, rng, degree_span, max_rank) for _ in range(count)]

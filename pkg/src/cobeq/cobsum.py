"""Formal sums of cobordisms: finite multisets with a common type.

The empty multiset is the zero arrow.  Addition is multiset union,
composition and tensor act on all pairs of members, so cardinalities
multiply.  Multiplicities are plain non-negative integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cobordism as cob
from .cobordism import GCob, ObjectSeq, TypeMismatch
from .freegroup import Alphabet, DEFAULT_ALPHABET


@dataclass(frozen=True)
class CobSum:
    src: ObjectSeq
    tgt: ObjectSeq
    terms: tuple[tuple[GCob, int], ...]


def cobsum(src, tgt, members) -> CobSum:
    """Multiset of cobordisms; members is an iterable of GCob or
    (GCob, multiplicity) pairs."""
    src = tuple(src)
    tgt = tuple(tgt)
    counts: dict[GCob, int] = {}
    for member in members:
        g, k = member if isinstance(member, tuple) else (member, 1)
        if k < 0:
            raise ValueError("multiplicities are non-negative")
        if k == 0:
            continue
        if g.src != src or g.tgt != tgt:
            raise TypeMismatch(f"member typed {g.src}->{g.tgt}, expected {src}->{tgt}")
        counts[g] = counts.get(g, 0) + k
    terms = tuple(sorted(counts.items(), key=lambda kv: cob.sort_key(kv[0])))
    return CobSum(src, tgt, terms)


def zero(a: ObjectSeq, b: ObjectSeq) -> CobSum:
    return CobSum(tuple(a), tuple(b), ())


def single(g: GCob) -> CobSum:
    return cobsum(g.src, g.tgt, [g])


def is_zero(x: CobSum) -> bool:
    return not x.terms


def size(x: CobSum) -> int:
    """Cardinality of the multiset, counting multiplicities."""
    return sum(k for _, k in x.terms)


def add(x: CobSum, y: CobSum) -> CobSum:
    if x.src != y.src or x.tgt != y.tgt:
        raise TypeMismatch("sum of differently typed multisets")
    return cobsum(x.src, x.tgt, x.terms + y.terms)


def compose(x: CobSum, y: CobSum) -> CobSum:
    """All pairwise gluings of x: a -> b with y: b -> c."""
    if x.tgt != y.src:
        raise TypeMismatch(f"cannot glue {x.tgt} with {y.src}")
    members = []
    for g1, k1 in x.terms:
        for g2, k2 in y.terms:
            members.append((cob.compose(g1, g2), k1 * k2))
    return cobsum(x.src, y.tgt, members)


def tensor(x: CobSum, y: CobSum) -> CobSum:
    members = []
    for g1, k1 in x.terms:
        for g2, k2 in y.terms:
            members.append((cob.tensor(g1, g2), k1 * k2))
    return cobsum(x.src + y.src, x.tgt + y.tgt, members)


def dagger(x: CobSum) -> CobSum:
    return cobsum(x.tgt, x.src, [(cob.dagger(g), k) for g, k in x.terms])


def star(x: CobSum) -> CobSum:
    """Elementwise transpose, typed b* -> a*."""
    return cobsum(
        cob.dual_object(x.tgt),
        cob.dual_object(x.src),
        [(cob.transpose_star(g), k) for g, k in x.terms],
    )


def to_jsonable(x: CobSum, alphabet: Alphabet = DEFAULT_ALPHABET) -> dict:
    return {
        "src": ["+" if s == cob.PLUS else "-" for s in x.src],
        "tgt": ["+" if s == cob.PLUS else "-" for s in x.tgt],
        "terms": [
            {"cobordism": cob.to_jsonable(g, alphabet), "multiplicity": k}
            for g, k in x.terms
        ],
    }

"""Evaluation of arrow terms into the cobordism matrix category.

The interpretation maps the object letter p to a single positive point, I
to the empty point sequence, 0 to the empty object list, and preserves
tensor, direct sum and dual strictly.  On arrows it sends each structural
primitive to its matrix-category counterpart, with the associativity and
unit isomorphisms landing on identity matrices.  By the coherence of the
model, comparing the resulting canonical matrices decides equality of
terms, and the matrix form generalizes this to entries between the
sum-free components of the endpoint objects.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import matcat as mc
from .freegroup import Alphabet, DEFAULT_ALPHABET, gen
from .matcat import MatArrow, ObjList
from . import cobordism as cob
from . import cobsum as cs
from . import syntax as sx
from .syntax import (
    Alpha,
    AlphaInv,
    Comp,
    Dagger,
    Direct,
    Eps,
    Eta,
    Gen,
    GenInv,
    Id,
    Iota1,
    Iota2,
    Lam,
    LamInv,
    Obj,
    ObjI,
    ObjP,
    ObjZero,
    OplusO,
    Pi1,
    Pi2,
    Plus,
    SigmaT,
    Star,
    Tens,
    TensorO,
    Term,
    ZeroT,
)

QUBIT_SEQ: cob.ObjectSeq = (cob.PLUS,)


# ---------------------------------------------------------------------------
# objects

_OBJ_CACHE: dict[Obj, ObjList] = {}


def interp_object(a: Obj) -> ObjList:
    """Object list denoted by an object formula."""
    hit = _OBJ_CACHE.get(a)
    if hit is not None:
        return hit
    match a:
        case ObjP():
            result: ObjList = (QUBIT_SEQ,)
        case ObjI():
            result = mc.UNIT
        case ObjZero():
            result = mc.ZERO_OBJ
        case Star(arg):
            result = mc.dual_obj(interp_object(arg))
        case TensorO(left, right):
            result = mc.tensor_obj(interp_object(left), interp_object(right))
        case OplusO(left, right):
            result = mc.oplus_obj(interp_object(left), interp_object(right))
        case _:
            raise ValueError(f"not an object formula: {a!r}")
    _OBJ_CACHE[a] = result
    return result


# ---------------------------------------------------------------------------
# injections and projections of an object formula


@dataclass(frozen=True)
class InjProjFamily:
    obj: Obj
    components: tuple[Obj, ...]
    injections: tuple[Term, ...]
    projections: tuple[Term, ...]


_INJ_CACHE: dict[Obj, InjProjFamily] = {}


def inj_proj(a: Obj) -> InjProjFamily:
    """Sum-free components of a with their injection and projection terms.

    Defined by induction on a: leaves are their own single component; a
    tensor has the componentwise tensors in lexicographic order; a dual has
    the transposed projections as injections and vice versa; a direct sum
    concatenates, composed with the binary injections or projections.
    """
    hit = _INJ_CACHE.get(a)
    if hit is not None:
        return hit
    match a:
        case ObjP() | ObjI() | ObjZero():
            fam = InjProjFamily(a, (a,), (Id(a),), (Id(a),))
        case TensorO(a1, a2):
            f1, f2 = inj_proj(a1), inj_proj(a2)
            n2 = len(f2.components)
            comps, injs, projs = [], [], []
            for i in range(len(f1.components) * n2):
                i1, i2 = divmod(i, n2)
                comps.append(TensorO(f1.components[i1], f2.components[i2]))
                injs.append(Tens(f1.injections[i1], f2.injections[i2]))
                projs.append(Tens(f1.projections[i1], f2.projections[i2]))
            fam = InjProjFamily(a, tuple(comps), tuple(injs), tuple(projs))
        case Star(a1):
            f1 = inj_proj(a1)
            comps = tuple(Star(c) for c in f1.components)
            injs = tuple(sx.star_term(p) for p in f1.projections)
            projs = tuple(sx.star_term(i) for i in f1.injections)
            fam = InjProjFamily(a, comps, injs, projs)
        case OplusO(a1, a2):
            f1, f2 = inj_proj(a1), inj_proj(a2)
            comps = f1.components + f2.components
            injs = tuple(Comp(Iota1(a1, a2), i) for i in f1.injections)
            injs += tuple(Comp(Iota2(a1, a2), i) for i in f2.injections)
            projs = tuple(Comp(p, Pi1(a1, a2)) for p in f1.projections)
            projs += tuple(Comp(p, Pi2(a1, a2)) for p in f2.projections)
            fam = InjProjFamily(a, comps, injs, projs)
        case _:
            raise ValueError(f"not an object formula: {a!r}")
    _INJ_CACHE[a] = fam
    return fam


# ---------------------------------------------------------------------------
# the interpretation functor


_H_CACHE: dict[tuple, MatArrow] = {}


def H(t: Term, alphabet: Alphabet = DEFAULT_ALPHABET) -> MatArrow:
    """Canonical matrix denoted by a well-typed term."""
    key = (t, alphabet.names)
    hit = _H_CACHE.get(key)
    if hit is not None:
        return hit
    result = _eval(t, alphabet)
    src, tgt = sx.typecheck(t, alphabet)
    assert result.src == interp_object(src) and result.tgt == interp_object(tgt)
    _H_CACHE[key] = result
    return result


def _generator_matrix(name: str, alphabet: Alphabet, exponent: int) -> MatArrow:
    label = gen(alphabet.index(name), exponent)
    segment = cob.Segment((cob.SRC, 0), (cob.TGT, 0), label)
    g = cob.gcob(QUBIT_SEQ, QUBIT_SEQ, [segment])
    return mc.matarrow((QUBIT_SEQ,), (QUBIT_SEQ,), [[cs.single(g)]])


def _eval(t: Term, alphabet: Alphabet) -> MatArrow:
    match t:
        case Gen(name):
            return _generator_matrix(name, alphabet, 1)
        case GenInv(name):
            return _generator_matrix(name, alphabet, -1)
        case Id(a):
            return mc.identity(interp_object(a))
        case Alpha(a, b, c) | AlphaInv(a, b, c):
            src, _ = sx.typecheck(t, alphabet)
            return mc.identity(interp_object(src))
        case Lam(a) | LamInv(a):
            return mc.identity(interp_object(a))
        case SigmaT(a, b):
            return mc.sigma(interp_object(a), interp_object(b))
        case Eta(a):
            return mc.eta(interp_object(a))
        case Eps(a):
            return mc.eps(interp_object(a))
        case Pi1(a, b):
            return mc.pi1(interp_object(a), interp_object(b))
        case Pi2(a, b):
            return mc.pi2(interp_object(a), interp_object(b))
        case Iota1(a, b):
            return mc.iota1(interp_object(a), interp_object(b))
        case Iota2(a, b):
            return mc.iota2(interp_object(a), interp_object(b))
        case ZeroT(a, b):
            return mc.zero(interp_object(a), interp_object(b))
        case Dagger(body):
            return mc.dagger(H(body, alphabet))
        case Tens(left, right):
            return mc.tensor(H(left, alphabet), H(right, alphabet))
        case Direct(left, right):
            return mc.oplus(H(left, alphabet), H(right, alphabet))
        case Plus(left, right):
            return mc.add(H(left, alphabet), H(right, alphabet))
        case Comp(after, before):
            return mc.compose(H(after, alphabet), H(before, alphabet))
    raise ValueError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# matrix form


@dataclass(frozen=True)
class MatrixForm:
    row_components: tuple[Obj, ...]
    col_components: tuple[Obj, ...]
    entries: tuple[tuple[MatArrow, ...], ...]


def matrix_form(u: Term, alphabet: Alphabet = DEFAULT_ALPHABET) -> MatrixForm:
    """The grid of values of proj_i o u o inj_j over the sum-free
    components of u's endpoints."""
    src, tgt = sx.typecheck(u, alphabet)
    fam_a = inj_proj(src)
    fam_b = inj_proj(tgt)
    rows = []
    for i in range(len(fam_b.components)):
        row = []
        for j in range(len(fam_a.components)):
            entry = Comp(fam_b.projections[i], Comp(u, fam_a.injections[j]))
            row.append(H(entry, alphabet))
        rows.append(tuple(row))
    return MatrixForm(fam_b.components, fam_a.components, tuple(rows))


def mf_compose(x: MatrixForm, y: MatrixForm) -> MatrixForm:
    """Grid composition with entrywise matrix composition and sum."""
    if x.col_components != y.row_components:
        raise cob.TypeMismatch("grid middle components differ")
    rows = []
    for i in range(len(x.row_components)):
        row = []
        for j in range(len(y.col_components)):
            acc = mc.zero(interp_object(y.col_components[j]),
                          interp_object(x.row_components[i]))
            for k in range(len(x.col_components)):
                acc = mc.add(acc, mc.compose(x.entries[i][k], y.entries[k][j]))
            row.append(acc)
        rows.append(tuple(row))
    return MatrixForm(x.row_components, y.col_components, tuple(rows))


def mf_tensor(x: MatrixForm, y: MatrixForm) -> MatrixForm:
    rows_c = tuple(TensorO(b, d) for b in x.row_components for d in y.row_components)
    cols_c = tuple(TensorO(a, c) for a in x.col_components for c in y.col_components)
    rows = []
    for i in range(len(x.row_components)):
        for i2 in range(len(y.row_components)):
            row = []
            for j in range(len(x.col_components)):
                for j2 in range(len(y.col_components)):
                    row.append(mc.tensor(x.entries[i][j], y.entries[i2][j2]))
            rows.append(tuple(row))
    return MatrixForm(rows_c, cols_c, tuple(rows))


def mf_oplus(x: MatrixForm, y: MatrixForm) -> MatrixForm:
    rows_c = x.row_components + y.row_components
    cols_c = x.col_components + y.col_components
    rows = []
    for i in range(len(x.row_components)):
        pad = [mc.zero(interp_object(c), interp_object(x.row_components[i]))
               for c in y.col_components]
        rows.append(tuple(x.entries[i]) + tuple(pad))
    for i in range(len(y.row_components)):
        pad = [mc.zero(interp_object(c), interp_object(y.row_components[i]))
               for c in x.col_components]
        rows.append(tuple(pad) + tuple(y.entries[i]))
    return MatrixForm(rows_c, cols_c, tuple(rows))


def mf_add(x: MatrixForm, y: MatrixForm) -> MatrixForm:
    if x.row_components != y.row_components or x.col_components != y.col_components:
        raise cob.TypeMismatch("grid sum of different types")
    rows = tuple(
        tuple(mc.add(x.entries[i][j], y.entries[i][j])
              for j in range(len(x.col_components)))
        for i in range(len(x.row_components))
    )
    return MatrixForm(x.row_components, x.col_components, rows)


# ---------------------------------------------------------------------------
# the decision procedure


@dataclass(frozen=True)
class Verdict:
    equal: bool
    source: Obj
    target: Obj
    value: MatArrow | None = None
    diff_at: tuple[int, int] | None = None
    left_entry: cs.CobSum | None = None
    right_entry: cs.CobSum | None = None


def equal(f: Term, g: Term, alphabet: Alphabet = DEFAULT_ALPHABET) -> Verdict:
    """Decide equality of two terms with identical endpoints by comparing
    their canonical matrices; on failure report the first differing entry."""
    fs, ft = sx.typecheck(f, alphabet)
    gs, gt = sx.typecheck(g, alphabet)
    if (fs, ft) != (gs, gt):
        raise sx.TypeCheckError(
            f"endpoint mismatch: {sx.print_obj(fs)} -> {sx.print_obj(ft)} "
            f"vs {sx.print_obj(gs)} -> {sx.print_obj(gt)}")
    hf = H(f, alphabet)
    hg = H(g, alphabet)
    if hf == hg:
        return Verdict(True, fs, ft, value=hf)
    for i, (row_f, row_g) in enumerate(zip(hf.entries, hg.entries)):
        for j, (ef, eg) in enumerate(zip(row_f, row_g)):
            if ef != eg:
                return Verdict(False, fs, ft, diff_at=(i, j),
                               left_entry=ef, right_entry=eg)
    raise AssertionError("matrices differ but all entries equal")

"""Independent numeric semantics in finite-dimensional complex linear algebra.

Terms evaluate to dense complex matrices: the object letter maps to a two
dimensional space, I to dimension one, 0 to dimension zero, tensor to the
Kronecker product and direct sum to block diagonals.  Units and counits are
the unnormalized cup and cap, so scalar-free diagram equalities transfer
exactly.  The default generator assignment is the Bell-base one: identity,
the two real Pauli matrices, and -i times the imaginary one.
"""

from __future__ import annotations

import numpy as np

from . import cobsum as cs
from . import syntax as sx
from .cobordism import GCob
from .freegroup import Alphabet, DEFAULT_ALPHABET, GroupWord
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

Assignment = dict[str, np.ndarray]

_SIGMA_0 = np.eye(2, dtype=complex)
_SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
_SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)

PAULI_ASSIGNMENT: Assignment = {
    "b1": _SIGMA_0,
    "b2": _SIGMA_1,
    "b3": _SIGMA_3,
    "b4": -1j * _SIGMA_2,
}


def dim_of(a: Obj) -> int:
    match a:
        case ObjP():
            return 2
        case ObjI():
            return 1
        case ObjZero():
            return 0
        case Star(arg):
            return dim_of(arg)
        case TensorO(left, right):
            return dim_of(left) * dim_of(right)
        case OplusO(left, right):
            return dim_of(left) + dim_of(right)
    raise ValueError(f"not an object formula: {a!r}")


def _swap_matrix(d1: int, d2: int) -> np.ndarray:
    s = np.zeros((d2 * d1, d1 * d2), dtype=complex)
    for v in range(d1):
        for w in range(d2):
            s[w * d1 + v, v * d2 + w] = 1.0
    return s


def _cup(d: int) -> np.ndarray:
    return np.eye(d, dtype=complex).reshape(d * d, 1)


def _block_diag(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    out = np.zeros((x.shape[0] + y.shape[0], x.shape[1] + y.shape[1]), dtype=complex)
    out[:x.shape[0], :x.shape[1]] = x
    out[x.shape[0]:, x.shape[1]:] = y
    return out


def eval_numeric(t: Term, assignment: Assignment | None = None,
                 alphabet: Alphabet = DEFAULT_ALPHABET) -> np.ndarray:
    """Dense matrix of a well-typed term under a generator assignment.

    Assignment values must be invertible 2x2 matrices; for terms containing
    daggers they must be unitary, since generator daggers denote inverses.
    """
    if assignment is None:
        assignment = PAULI_ASSIGNMENT
    for name, mat in assignment.items():
        if mat.shape != (2, 2):
            raise ValueError(f"assignment for {name!r} is not 2x2")
        if abs(np.linalg.det(mat)) < 1e-12:
            raise ValueError(f"assignment for {name!r} is not invertible")
    sx.typecheck(t, alphabet)
    return _eval(t, assignment, alphabet)


def _eval(t: Term, assignment: Assignment, alphabet: Alphabet) -> np.ndarray:
    match t:
        case Gen(name):
            return assignment[name]
        case GenInv(name):
            return np.linalg.inv(assignment[name])
        case Id(a):
            return np.eye(dim_of(a), dtype=complex)
        case Alpha(a, b, c) | AlphaInv(a, b, c):
            return np.eye(dim_of(a) * dim_of(b) * dim_of(c), dtype=complex)
        case Lam(a) | LamInv(a):
            return np.eye(dim_of(a), dtype=complex)
        case SigmaT(a, b):
            return _swap_matrix(dim_of(a), dim_of(b))
        case Eta(a):
            return _cup(dim_of(a))
        case Eps(a):
            return _cup(dim_of(a)).T
        case Pi1(a, b):
            da, db = dim_of(a), dim_of(b)
            return np.hstack([np.eye(da, dtype=complex),
                              np.zeros((da, db), dtype=complex)])
        case Pi2(a, b):
            da, db = dim_of(a), dim_of(b)
            return np.hstack([np.zeros((db, da), dtype=complex),
                              np.eye(db, dtype=complex)])
        case Iota1(a, b):
            return _eval(Pi1(a, b), assignment, alphabet).T
        case Iota2(a, b):
            return _eval(Pi2(a, b), assignment, alphabet).T
        case ZeroT(a, b):
            return np.zeros((dim_of(b), dim_of(a)), dtype=complex)
        case Dagger(body):
            return _eval(body, assignment, alphabet).conj().T
        case Tens(left, right):
            return np.kron(_eval(left, assignment, alphabet),
                           _eval(right, assignment, alphabet))
        case Direct(left, right):
            return _block_diag(_eval(left, assignment, alphabet),
                               _eval(right, assignment, alphabet))
        case Plus(left, right):
            return (_eval(left, assignment, alphabet)
                    + _eval(right, assignment, alphabet))
        case Comp(after, before):
            return _eval(after, assignment, alphabet) @ _eval(before, assignment, alphabet)
    raise ValueError(f"not a term: {t!r}")


def agree(f: Term, g: Term, tol: float = 1e-9,
          assignment: Assignment | None = None,
          alphabet: Alphabet = DEFAULT_ALPHABET) -> bool:
    """Whether f and g evaluate to numerically equal matrices."""
    fs, ft = sx.typecheck(f, alphabet)
    gs, gt = sx.typecheck(g, alphabet)
    if (fs, ft) != (gs, gt):
        raise sx.TypeCheckError("endpoint mismatch")
    diff = eval_numeric(f, assignment, alphabet) - eval_numeric(g, assignment, alphabet)
    if diff.size == 0:
        return True
    return float(np.max(np.abs(diff))) <= tol


def random_unitary_assignment(rng, alphabet: Alphabet = DEFAULT_ALPHABET) -> Assignment:
    """Random unitary generators, obtained by orthonormalizing random
    complex matrices."""
    out: Assignment = {}
    for name in alphabet.names:
        raw = np.array([[complex(rng.gauss(0, 1), rng.gauss(0, 1))
                         for _ in range(2)] for _ in range(2)])
        q, _ = np.linalg.qr(raw)
        out[name] = q
    return out


def word_matrix(w: GroupWord, assignment: Assignment | None = None,
                alphabet: Alphabet = DEFAULT_ALPHABET) -> np.ndarray:
    """Product of assignment matrices along a group word."""
    if assignment is None:
        assignment = PAULI_ASSIGNMENT
    out = np.eye(2, dtype=complex)
    for index, exponent in w.letters:
        mat = assignment[alphabet.name(index)]
        out = out @ (mat if exponent > 0 else np.linalg.inv(mat))
    return out


def gcob_scalar(g: GCob, assignment: Assignment | None = None,
                alphabet: Alphabet = DEFAULT_ALPHABET) -> complex:
    """Numeric value of a closed cobordism: each circle contributes the
    trace of its label word, multiplicatively."""
    if g.src or g.tgt:
        raise ValueError("scalar value needs a closed cobordism")
    value = complex(1.0)
    for circle in g.circles:
        value *= complex(np.trace(word_matrix(circle.rep, assignment, alphabet)))
    return value


def cobsum_scalar(x: cs.CobSum, assignment: Assignment | None = None,
                  alphabet: Alphabet = DEFAULT_ALPHABET) -> complex:
    """Numeric value of a closed multiset: members add, multiplicities count."""
    return sum((k * gcob_scalar(g, assignment, alphabet) for g, k in x.terms),
               complex(0.0))

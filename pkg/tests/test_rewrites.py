"""Soundness of the decision procedure against the equational theory.

Random well-typed terms are rewritten by one randomly chosen sound step
(unit laws, associativity, interchange, dagger pushing, symmetry
involution, additive laws) at a random position; the verdict must stay
EQUAL.  This exercises the evaluator through the congruence rather than
through the matrix algebra directly.
"""

import random

from cobeq import interp
from cobeq import syntax as sx
from cobeq.syntax import Comp, Dagger, Direct, Id, Plus, SigmaT, Tens, ZeroT

import genlib as gl
from conftest import SEED


def _rw_unit_right(t):
    if isinstance(t, Comp) and isinstance(t.before, Id):
        return t.after
    return None


def _rw_unit_left(t):
    if isinstance(t, Comp) and isinstance(t.after, Id):
        return t.before
    return None


def _rw_add_unit(t):
    src, tgt = sx.typecheck(t)
    return Comp(t, Id(src))


def _rw_comp_assoc(t):
    if isinstance(t, Comp) and isinstance(t.before, Comp):
        return Comp(Comp(t.after, t.before.after), t.before.before)
    if isinstance(t, Comp) and isinstance(t.after, Comp):
        return Comp(t.after.after, Comp(t.after.before, t.before))
    return None


def _rw_double_dagger(t):
    if isinstance(t, Dagger) and isinstance(t.body, Dagger):
        return t.body.body
    return None


def _rw_add_double_dagger(t):
    return Dagger(Dagger(t))


def _rw_dagger_comp(t):
    if isinstance(t, Dagger) and isinstance(t.body, Comp):
        return Comp(Dagger(t.body.before), Dagger(t.body.after))
    return None


def _rw_dagger_tensor(t):
    if isinstance(t, Dagger) and isinstance(t.body, Tens):
        return Tens(Dagger(t.body.left), Dagger(t.body.right))
    return None


def _rw_interchange(t):
    # (f (x) g) o (h (x) k)  ->  (f o h) (x) (g o k)
    if (isinstance(t, Comp) and isinstance(t.after, Tens)
            and isinstance(t.before, Tens)):
        f, g = t.after.left, t.after.right
        h, k = t.before.left, t.before.right
        if (sx.typecheck(h)[1] == sx.typecheck(f)[0]
                and sx.typecheck(k)[1] == sx.typecheck(g)[0]):
            return Tens(Comp(f, h), Comp(g, k))
    return None


def _rw_oplus_interchange(t):
    if (isinstance(t, Comp) and isinstance(t.after, Direct)
            and isinstance(t.before, Direct)):
        f, g = t.after.left, t.after.right
        h, k = t.before.left, t.before.right
        if (sx.typecheck(h)[1] == sx.typecheck(f)[0]
                and sx.typecheck(k)[1] == sx.typecheck(g)[0]):
            return Direct(Comp(f, h), Comp(g, k))
    return None


def _rw_plus_comm(t):
    if isinstance(t, Plus):
        return Plus(t.right, t.left)
    return None


def _rw_plus_zero(t):
    src, tgt = sx.typecheck(t)
    return Plus(t, ZeroT(src, tgt))


def _rw_sigma_involution(t):
    src, tgt = sx.typecheck(t)
    if isinstance(tgt, sx.TensorO):
        swap = SigmaT(tgt.left, tgt.right)
        unswap = SigmaT(tgt.right, tgt.left)
        return Comp(unswap, Comp(swap, t))
    return None


def _rw_eliminate(t):
    return sx.eliminate_dagger(t)


_REWRITES = [
    _rw_unit_right, _rw_unit_left, _rw_add_unit, _rw_comp_assoc,
    _rw_double_dagger, _rw_add_double_dagger, _rw_dagger_comp,
    _rw_dagger_tensor, _rw_interchange, _rw_oplus_interchange,
    _rw_plus_comm, _rw_plus_zero, _rw_sigma_involution, _rw_eliminate,
]


def _subterms(t, path=()):
    yield path, t
    match t:
        case Tens(f, g) | Direct(f, g) | Plus(f, g) | Comp(f, g):
            yield from _subterms(f, path + (0,))
            yield from _subterms(g, path + (1,))
        case Dagger(f):
            yield from _subterms(f, path + (0,))


def _replace(t, path, new):
    if not path:
        return new
    head, rest = path[0], path[1:]
    match t:
        case Tens(f, g):
            return Tens(_replace(f, rest, new), g) if head == 0 else Tens(f, _replace(g, rest, new))
        case Direct(f, g):
            return Direct(_replace(f, rest, new), g) if head == 0 else Direct(f, _replace(g, rest, new))
        case Plus(f, g):
            return Plus(_replace(f, rest, new), g) if head == 0 else Plus(f, _replace(g, rest, new))
        case Comp(f, g):
            return Comp(_replace(f, rest, new), g) if head == 0 else Comp(f, _replace(g, rest, new))
        case Dagger(f):
            return Dagger(_replace(f, rest, new))
    raise AssertionError("path walks off the term")


def _random_sound_step(rng, t):
    positions = list(_subterms(t))
    rng.shuffle(positions)
    rules = list(_REWRITES)
    rng.shuffle(rules)
    for path, sub in positions:
        for rule in rules:
            replacement = rule(sub)
            if replacement is not None and replacement != sub:
                return _replace(t, path, replacement)
    return None


def test_random_rewrites_preserve_value():
    rng = random.Random(SEED + 40)
    checked = 0
    while checked < 150:
        t = gl.rand_any_term(rng, depth=4)
        rewritten = _random_sound_step(rng, t)
        if rewritten is None:
            continue
        assert sx.typecheck(rewritten) == sx.typecheck(t)
        verdict = interp.equal(t, rewritten)
        assert verdict.equal, (sx.print_term(t), sx.print_term(rewritten))
        checked += 1


def test_rewrite_chains_preserve_value():
    rng = random.Random(SEED + 41)
    checked = 0
    while checked < 40:
        t = gl.rand_any_term(rng, depth=3)
        current = t
        for _ in range(5):
            step = _random_sound_step(rng, current)
            if step is None:
                break
            current = step
        if current == t:
            continue
        assert interp.equal(t, current).equal
        checked += 1

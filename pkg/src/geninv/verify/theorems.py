"""Theorem registry: each labeled result as an executable predicate.

A predicate receives the context, a :class:`Check` and the tuple. It raises
:class:`Skip` when a standing hypothesis fails, and records failures with
``chk.require``. Biconditionals compare the definitional side (oracle
backed, see :class:`Context`) with the criterion side computed by the
library; formulas are compared against independently computed inverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from ..inverses import (ConsistencyError, PreconditionError, along_triple, corner_unit_check, is_ep, jacobson,
                        mp_inverse, one_sided_along_triple, shift_conjugation_check)
from ..matrix import SquareMatrix, random_matrix, try_invert
from .context import Check, Context, Skip, show

LABELS = (
    "D2.1", "E2.2", "D2.3", "L2.4", "T2.5", "T2.6", "C2.7", "L2.8", "L2.9", "T2.10", "T2.11", "T2.12",
    "L2.13", "T2.14", "T2.15", "T2.16", "L2.17", "L2.18", "T2.19", "R2.20", "C2.21", "C2.22", "C2.23",
    "L3.1", "L3.2", "T3.3", "C3.4", "C3.5", "C3.6", "T3.7", "C3.8", "C3.9",
)

OUT_OF_SCOPE = {
    "D2.1": "definition of left g-MP invertibility; decided by gmp_check and exercised by T2.10 and T2.12",
    "E2.2": "worked examples; pinned as exact golden tests",
    "D2.3": "definition of right g-MP invertibility; decided by gmp_check and exercised by T2.11 and T2.12",
    "R2.20": "needs an infinite monoid; every finite carrier has one-sided units two-sided, "
             "so the phenomenon is absent (see remark-420 scan)",
}


@dataclass(frozen=True)
class Theorem:
    id: str
    arity: int
    tier: str  # "monoid" or "ring"
    star: bool
    statement: str
    check: Callable
    generate: Optional[Callable] = None

    def evaluate(self, ctx: Context, values: tuple) -> Check:
        chk = Check()
        try:
            self.check(ctx, chk, *values)
        except Skip:
            chk.skipped = True
        except (ConsistencyError, PreconditionError) as exc:
            chk.disagreements.append(f"library raised {type(exc).__name__}: {exc}")
        return chk


REGISTRY: dict = {}


def theorem(tid: str, arity: int, tier: str, statement: str, star: bool = False, generate=None):
    def wrap(fn):
        if tid in REGISTRY:
            raise ValueError(f"duplicate registry id {tid}")
        REGISTRY[tid] = Theorem(tid, arity, tier, star, statement, fn, generate)
        return fn
    return wrap


def registry_ids() -> list:
    return [t for t in LABELS if t in REGISTRY]


# -- random generators for hypotheses that uniform sampling rarely meets ------


def _scalar(rng, domain):
    return random_matrix(rng, domain, 1, density=0.2).rows[0][0]


def _poly_in(rng, d: SquareMatrix) -> SquareMatrix:
    one = d.one()
    c0, c1, c2 = (_scalar(rng, d.domain) for _ in range(3))
    return one.scale(c0) + d.scale(c1) + (d @ d).scale(c2)


def _random_unit(rng, domain, n) -> tuple:
    while True:
        p = random_matrix(rng, domain, n, density=0.2)
        q = try_invert(p)
        if q is not None:
            return p, q


def _random_idempotent(rng, domain, n) -> SquareMatrix:
    p, q = _random_unit(rng, domain, n)
    r = int(rng.integers(0, n + 1))
    return p @ SquareMatrix.leading_ones(domain, n, r) @ q


def gen_commuting_pair(rng, u):
    d = u.random_element(rng)
    return _poly_in(rng, d), d


def gen_commuting_triple(rng, u):
    d = u.random_element(rng)
    return _poly_in(rng, d), u.random_element(rng), d


def gen_idempotent_pair(rng, u):
    a = u.random_element(rng)
    return a, _random_idempotent(rng, u.domain, u.n)


# -- Green characterizations of one-sided inverses along d ----------------------


@theorem("L2.4", 2, "monoid", "left (right) inverse of a along d exists iff d <=_L dad (d <=_R dad)")
def _l24(ctx, chk, a, d):
    dad = d @ a @ d
    for side, rel in (("left", "L"), ("right", "R")):
        exists = ctx.one_sided(chk, a, d, side) is not None
        chk.require(exists == ctx.leq(chk, d, dad, rel), f"{side}: existence {exists} vs d <={rel} dad")


@theorem("T2.5", 1, "monoid", "Sa = Saa*a iff a* is left invertible along a", star=True)
def _t25(ctx, chk, a):
    aa = a @ a.star() @ a
    lhs = ctx.leq(chk, a, aa, "L") and ctx.leq(chk, aa, a, "L")
    rhs = ctx.one_sided(chk, a.star(), a, "left") is not None
    chk.require(lhs == rhs, f"Sa = Saa*a is {lhs} but left invertibility of a* along a is {rhs}")


@theorem("T2.6", 1, "monoid", "aS = aa*aS iff a* is right invertible along a", star=True)
def _t26(ctx, chk, a):
    aa = a @ a.star() @ a
    lhs = ctx.leq(chk, a, aa, "R") and ctx.leq(chk, aa, a, "R")
    rhs = ctx.one_sided(chk, a.star(), a, "right") is not None
    chk.require(lhs == rhs, f"aS = aa*aS is {lhs} but right invertibility of a* along a is {rhs}")


@theorem("C2.7", 1, "monoid", "MP invertible iff a* left (right) invertible along a; (a+)* is such an "
         "inverse; a^||a* = a+, (a*)^||a = (a+)*; group inverse = a^||a, 1^||a = aa#", star=True)
def _c27(ctx, chk, a):
    st = a.star()
    m = ctx.mp(chk, a)
    left = ctx.one_sided(chk, st, a, "left") is not None
    right = ctx.one_sided(chk, st, a, "right") is not None
    chk.require((m is not None) == left == right,
                f"MP exists {m is not None}, left {left}, right {right}")
    if m is not None:
        ms = m.star()
        chk.require(ms @ st @ a == a and ctx.leq(chk, ms, a, "L"), "(a+)* is not a left inverse of a* along a")
        chk.require(a @ st @ ms == a and ctx.leq(chk, ms, a, "R"), "(a+)* is not a right inverse of a* along a")
    chk.require(ctx.along(chk, a, st) == m, f"a^||a* = {show(ctx.along(chk, a, st))} but a+ = {show(m)}")
    sa = ctx.along(chk, st, a)
    chk.require(sa == (None if m is None else m.star()), f"(a*)^||a = {show(sa)} differs from (a+)*")
    g = ctx.group(chk, a)
    chk.require(ctx.along(chk, a, a) == g, "a^||a differs from the group inverse")
    one = ctx.along(chk, a.one(), a)
    chk.require(one == (None if g is None else a @ g), f"1^||a = {show(one)} differs from aa#")


def _check_mp_from(ctx, chk, a, t, label):
    if a @ t @ a != a or (a @ t).star() != a @ t:
        chk.require(False, f"({label})* = {show(t)} is not a {{1,3}}-inverse")
    if (t @ a).star() != t @ a:
        chk.require(False, f"({label})* = {show(t)} is not a {{1,4}}-inverse")
    m = ctx.mp(chk, a)
    chk.require(m == t @ a @ t, f"({label})* a ({label})* = {show(t @ a @ t)} but a+ = {show(m)}")


@theorem("L2.8", 1, "monoid", "a = xaa*a gives (xa)* as {1,3} and {1,4}-inverse and a+ = (xa)*a(xa)*", star=True)
def _l28(ctx, chk, a):
    xs = ctx.left_factors(a, a @ a.star() @ a)
    chk.hypothesis(bool(xs), "a is not in Saa*a")
    for t in {(x @ a).star() for x in xs}:
        _check_mp_from(ctx, chk, a, t, "xa")


@theorem("L2.9", 1, "monoid", "a = aa*ay gives (ay)* as {1,3} and {1,4}-inverse and a+ = (ay)*a(ay)*", star=True)
def _l29(ctx, chk, a):
    ys = ctx.right_factors(a, a @ a.star() @ a)
    chk.hypothesis(bool(ys), "a is not in aa*aS")
    for t in {(a @ y).star() for y in ys}:
        _check_mp_from(ctx, chk, a, t, "ay")


@theorem("T2.10", 1, "monoid", "left g-MP iff aa* left invertible along a iff some b has baa*a = a, Sb in Sa; "
         "then yxa and baa*b are left inverses of aa* along a", star=True)
def _t210(ctx, chk, a):
    st = a.star()
    aa = a @ st @ a
    i = ctx.gmp(chk, a, "left")
    ii = ctx.one_sided(chk, a @ st, a, "left") is not None
    iii = ctx.exists_bounded(chk, a, aa, "left")
    chk.require(i == ii == iii, f"(i) {i}, (ii) {ii}, (iii) {iii}")
    if not i:
        return
    m = a @ st
    cands = {y @ x @ a for x in ctx.left_factors(a, a @ a) for y in ctx.left_factors(a, aa)}
    bs = [b for b in ctx.left_factors(a, aa) if ctx.leq(chk, b, a, "L")]
    cands |= {b @ m @ b for b in bs}
    chk.require(bool(cands), "no witnesses produced although a is left g-MP")
    for z in cands:
        chk.require(z @ m @ a == a and ctx.leq(chk, z, a, "L"),
                    f"{show(z)} is not a left inverse of aa* along a")


@theorem("T2.11", 1, "monoid", "right g-MP iff a*a right invertible along a iff some c has aa*ac = a, cS in aS; "
         "then ast and ca*ac are right inverses of a*a along a", star=True)
def _t211(ctx, chk, a):
    st = a.star()
    aa = a @ st @ a
    i = ctx.gmp(chk, a, "right")
    ii = ctx.one_sided(chk, st @ a, a, "right") is not None
    iii = ctx.exists_bounded(chk, a, aa, "right")
    chk.require(i == ii == iii, f"(i) {i}, (ii) {ii}, (iii) {iii}")
    if not i:
        return
    m = st @ a
    cands = {a @ s @ t for s in ctx.right_factors(a, a @ a) for t in ctx.right_factors(a, aa)}
    cs = [c for c in ctx.right_factors(a, aa) if ctx.leq(chk, c, a, "R")]
    cands |= {c @ m @ c for c in cs}
    chk.require(bool(cands), "no witnesses produced although a is right g-MP")
    for z in cands:
        chk.require(a @ m @ z == a and ctx.leq(chk, z, a, "R"),
                    f"{show(z)} is not a right inverse of a*a along a")


@theorem("T2.12", 1, "monoid", "EP iff left g-MP with aS = a*S iff right g-MP with aS = a*S", star=True)
def _t212(ctx, chk, a):
    st = a.star()
    m, g = ctx.mp(chk, a), ctx.group(chk, a)
    ep = m is not None and a @ m == m @ a
    chk.require(ep == (m is not None and m == g), "aa+ = a+a disagrees with a# = a+")
    same = ctx.leq(chk, a, st, "R") and ctx.leq(chk, st, a, "R")
    ii = ctx.gmp(chk, a, "left") and same
    iii = ctx.gmp(chk, a, "right") and same
    chk.require(ep == ii == iii, f"EP {ep}, (ii) {ii}, (iii) {iii}")
    r = is_ep(a)
    chk.agree(r.consistent and r.holds == ep, f"is_ep routes: {r.holds}, {r.via_left}, {r.via_right}")


# -- commuting reverse order laws -------------------------------------------------


@theorem("L2.13", 2, "monoid", "ad = da and a^||d exists imply a^||d commutes with a and d",
         generate=gen_commuting_pair)
def _l213(ctx, chk, a, d):
    chk.hypothesis(a @ d == d @ a, "ad != da")
    p = ctx.along(chk, a, d)
    chk.hypothesis(p is not None, "a not invertible along d")
    chk.require(p @ a == a @ p, f"a^||d = {show(p)} does not commute with a")
    chk.require(p @ d == d @ p, f"a^||d = {show(p)} does not commute with d")


@theorem("T2.14", 3, "monoid", "ad = da with a^||d, b^||d existing: (ab)^||d = b^||d a^||d, "
         "(ba)^||d = a^||d b^||d", generate=gen_commuting_triple)
def _t214(ctx, chk, a, b, d):
    chk.hypothesis(a @ d == d @ a, "ad != da")
    p, q = ctx.along(chk, a, d), ctx.along(chk, b, d)
    chk.hypothesis(p is not None and q is not None, "a or b not invertible along d")
    ab, ba = ctx.along(chk, a @ b, d), ctx.along(chk, b @ a, d)
    chk.require(ab == q @ p, f"(ab)^||d = {show(ab)} but b^||d a^||d = {show(q @ p)}")
    chk.require(ba == p @ q, f"(ba)^||d = {show(ba)} but a^||d b^||d = {show(p @ q)}")


# -- one-sided triple products ------------------------------------------------------


@theorem("T2.15", 3, "monoid", "a left invertible along d: b left invertible along d iff adb is; "
         "then b_l b y a_l is a left inverse of adb along d whenever d = ydbd")
def _t215(ctx, chk, a, b, d):
    al = ctx.one_sided(chk, a, d, "left")
    chk.hypothesis(al is not None, "a not left invertible along d")
    bl = ctx.one_sided(chk, b, d, "left")
    p = a @ d @ b
    pl = ctx.one_sided(chk, p, d, "left")
    chk.require((bl is None) == (pl is None), f"b left along d {bl is not None}, adb {pl is not None}")
    if bl is None:
        return
    als, bls = [al], [bl]
    if ctx.exhaustive:
        als += [x for x in ctx.oracle.along_solutions(a, d, "left")[:2] if x != al]
        bls += [x for x in ctx.oracle.along_solutions(b, d, "left")[:2] if x != bl]
    ys = ctx.left_factors(d, d @ b @ d)
    chk.require(bool(ys), "no y with d = ydbd although b is left invertible along d")
    for z in {u @ b @ y @ v for y in ys for u in bls for v in als}:
        chk.require(z @ p @ d == d and ctx.leq(chk, z, d, "L"),
                    f"{show(z)} is not a left inverse of adb along d")
    r = one_sided_along_triple(a, b, d, "left")
    chk.agree(r.consistent, "one_sided_along_triple(left) is inconsistent")


@theorem("T2.16", 3, "monoid", "a right invertible along d: b right invertible along d iff bda is; "
         "then a_r t b b_r is a right inverse of bda along d whenever d = dbdt")
def _t216(ctx, chk, a, b, d):
    ar = ctx.one_sided(chk, a, d, "right")
    chk.hypothesis(ar is not None, "a not right invertible along d")
    br = ctx.one_sided(chk, b, d, "right")
    p = b @ d @ a
    pr = ctx.one_sided(chk, p, d, "right")
    chk.require((br is None) == (pr is None), f"b right along d {br is not None}, bda {pr is not None}")
    if br is None:
        return
    ars, brs = [ar], [br]
    if ctx.exhaustive:
        ars += [x for x in ctx.oracle.along_solutions(a, d, "right")[:2] if x != ar]
        brs += [x for x in ctx.oracle.along_solutions(b, d, "right")[:2] if x != br]
    ts = ctx.right_factors(d, d @ b @ d)
    chk.require(bool(ts), "no t with d = dbdt although b is right invertible along d")
    for z in {v @ t @ b @ u for t in ts for u in brs for v in ars}:
        chk.require(d @ p @ z == d and ctx.leq(chk, z, d, "R"),
                    f"{show(z)} is not a right inverse of bda along d")
    r = one_sided_along_triple(a, b, d, "right")
    chk.agree(r.consistent, "one_sided_along_triple(right) is inconsistent")


# -- corners, shifts and two-sided triple products -------------------------------------


@theorem("L2.17", 2, "monoid", "for e = e^2: a invertible along e iff eae is a unit of eSe",
         generate=gen_idempotent_pair)
def _l217(ctx, chk, a, e):
    chk.hypothesis(e @ e == e, "e is not idempotent")
    lhs = ctx.along(chk, a, e)
    eae = e @ a @ e
    try:
        r = corner_unit_check(a, e)
        rhs, w = r.holds, r.w
    except ConsistencyError as exc:
        chk.agree(False, f"corner routine: {exc}")
        rhs, w = None, None
    if ctx.exhaustive:
        # the corner scanned directly
        hits = [x for x in ctx.oracle.elements if e @ x @ e == x and eae @ x == e and x @ eae == e]
        chk.agree(rhs == bool(hits), f"corner routine says {rhs}, scan finds {len(hits)} inverses")
        rhs, w = bool(hits), (hits[0] if hits else None)
    chk.require(not rhs or lhs == w, f"corner inverse {show(w)} vs a^||e {show(lhs)}")
    chk.require((lhs is not None) == rhs, f"a^||e exists {lhs is not None}, eae corner unit {rhs}")


@theorem("L2.18", 2, "monoid", "d regular: a invertible along d iff da along dd(1) iff ad along d(1)d")
def _l218(ctx, chk, a, d):
    gs = ctx.inners(d)
    chk.hypothesis(bool(gs), "d is not regular")
    i = ctx.along(chk, a, d) is not None
    for g in gs:
        e, f = d @ g, g @ d
        ii = ctx.along(chk, d @ a, e) is not None
        iii = ctx.along(chk, a @ d, f) is not None
        chk.require(i == ii == iii, f"d(1) = {show(g)}: (i) {i}, (ii) {ii}, (iii) {iii}")
    if not ctx.exhaustive:
        r = shift_conjugation_check(a, d)
        chk.agree(r.consistent and r.along == i, f"shift_conjugation_check: {r.as_tuple()}")


def _triple_common(ctx, chk, a, b, d):
    p = ctx.along(chk, a, d)
    chk.hypothesis(p is not None, "a not invertible along d")
    q = ctx.along(chk, b, d)
    adb = ctx.along(chk, a @ d @ b, d)
    bda = ctx.along(chk, b @ d @ a, d)
    chk.require((q is None) == (adb is None) == (bda is None),
                f"b {q is not None}, adb {adb is not None}, bda {bda is not None}")
    return p, q, adb, bda


@theorem("T2.19", 3, "monoid", "a^||d exists: b, adb, bda invertible along d together; "
         "(adb)^||d = b^||d d(1) a^||d and (bda)^||d = a^||d d(1) b^||d for every d(1)")
def _t219(ctx, chk, a, b, d):
    p, q, adb, bda = _triple_common(ctx, chk, a, b, d)
    if q is None:
        return
    for g in ctx.inners(d):
        chk.require(q @ g @ p == adb, f"d(1) = {show(g)}: b^||d d(1) a^||d = {show(q @ g @ p)} != {show(adb)}")
        chk.require(p @ g @ q == bda, f"d(1) = {show(g)}: a^||d d(1) b^||d = {show(p @ g @ q)} != {show(bda)}")
    if ctx.ring and not ctx.exhaustive:
        r = along_triple(a, b, d, inners=ctx.inners(d)[1:])
        chk.agree(r.consistent, "along_triple routes disagree")


@theorem("C2.21", 3, "monoid", "a^||d exists and d in S#: (adb)^||d = b^||d d^||d a^||d, "
         "(bda)^||d = a^||d d^||d b^||d")
def _c221(ctx, chk, a, b, d):
    chk.hypothesis(ctx.group(chk, d) is not None, "d not group invertible")
    p, q, adb, bda = _triple_common(ctx, chk, a, b, d)
    dd = ctx.along(chk, d, d)
    chk.require(dd == ctx.group(chk, d), "d^||d differs from d#")
    if q is None:
        return
    chk.require(adb == q @ dd @ p, f"(adb)^||d = {show(adb)} but b^||d d^||d a^||d = {show(q @ dd @ p)}")
    chk.require(bda == p @ dd @ q, f"(bda)^||d = {show(bda)} but a^||d d^||d b^||d = {show(p @ dd @ q)}")


@theorem("C2.22", 2, "monoid", "d in S#: b, bd, db invertible along d together; (bd)^||d = d^||d b^||d, "
         "(db)^||d = b^||d d^||d")
def _c222(ctx, chk, b, d):
    dd = ctx.group(chk, d)
    chk.hypothesis(dd is not None, "d not group invertible")
    chk.require(ctx.along(chk, d, d) == dd, "d^||d differs from d#")
    q = ctx.along(chk, b, d)
    bd, db = ctx.along(chk, b @ d, d), ctx.along(chk, d @ b, d)
    chk.require((q is None) == (bd is None) == (db is None),
                f"b {q is not None}, bd {bd is not None}, db {db is not None}")
    if q is None:
        return
    chk.require(bd == dd @ q, f"(bd)^||d = {show(bd)} but d^||d b^||d = {show(dd @ q)}")
    chk.require(db == q @ dd, f"(db)^||d = {show(db)} but b^||d d^||d = {show(q @ dd)}")


@theorem("C2.23", 2, "monoid", "d in S+: b, d*db, bdd* invertible along d together; "
         "(d*db)^||d = b^||d d^||d* (d*)^||d, (bdd*)^||d = (d*)^||d d^||d* b^||d", star=True)
def _c223(ctx, chk, b, d):
    chk.hypothesis(ctx.mp(chk, d) is not None, "d not MP invertible")
    ds = d.star()
    sd = ctx.along(chk, ds, d)       # (d*)^||d
    dsd = ctx.along(chk, d, ds)      # d^||d*
    chk.require(sd is not None and dsd is not None, "(d*)^||d or d^||d* missing although d+ exists")
    q = ctx.along(chk, b, d)
    x, y = ctx.along(chk, ds @ d @ b, d), ctx.along(chk, b @ d @ ds, d)
    chk.require((q is None) == (x is None) == (y is None),
                f"b {q is not None}, d*db {x is not None}, bdd* {y is not None}")
    if q is None or sd is None or dsd is None:
        return
    chk.require(x == q @ dsd @ sd, f"(d*db)^||d = {show(x)} but formula gives {show(q @ dsd @ sd)}")
    chk.require(y == sd @ dsd @ q, f"(bdd*)^||d = {show(y)} but formula gives {show(sd @ dsd @ q)}")


# -- ring tier ---------------------------------------------------------------------------


@theorem("L3.1", 2, "ring", "(1 + ab)x = 1 gives (1 + ba)(1 - bxa) = 1, and dually; Jacobson's lemma")
def _l31(ctx, chk, a, b):
    one = a.one()
    x = ctx.unit(chk, one + a @ b)
    y = ctx.unit(chk, one + b @ a)
    chk.require((x is None) == (y is None), f"1+ab unit {x is not None}, 1+ba unit {y is not None}")
    if x is None:
        return
    t = one - b @ x @ a
    chk.require((one + b @ a) @ t == one, "(1+ba)(1-bxa) != 1")
    chk.require(t @ (one + b @ a) == one, "(1-bya)(1+ba) != 1")
    chk.require(t == y, f"1 - b(1+ab)^-1 a = {show(t)} but (1+ba)^-1 = {show(y)}")
    chk.agree(jacobson(a, b) == y, "jacobson() differs from the direct inverse")


@theorem("L3.2", 2, "ring", "m regular: a (left, right) invertible along m iff u = ma + 1 - mm(1) is "
         "iff v = am + 1 - m(1)m is; also a# exists iff a + 1 - aa(1) is a unit")
def _l32(ctx, chk, a, m):
    one = a.one()
    e = ctx.along(chk, a, m)
    left = ctx.one_sided(chk, a, m, "left") is not None
    right = ctx.one_sided(chk, a, m, "right") is not None
    chk.require(left == right == (e is not None), f"left {left}, right {right}, two-sided {e is not None}")
    for g in ctx.inners(m):
        ui = ctx.unit(chk, m @ a + one - m @ g)
        vi = ctx.unit(chk, a @ m + one - g @ m)
        chk.require((ui is None) == (vi is None) == (e is None),
                    f"m(1) = {show(g)}: u unit {ui is not None}, v unit {vi is not None}, along {e is not None}")
        if e is not None and ui is not None and vi is not None:
            chk.require(ui @ m == e and m @ vi == e, f"m(1) = {show(g)}: u^-1 m, m v^-1 differ from a^||m")
    sharp = ctx.group(chk, a)
    for g in ctx.inners(a)[:4]:
        w = ctx.unit(chk, a + one - a @ g)
        w2 = ctx.unit(chk, a + one - g @ a)
        chk.require((w is None) == (w2 is None) == (sharp is None),
                    f"a(1) = {show(g)}: group criterion units {w is not None}, {w2 is not None}, "
                    f"a# {sharp is not None}")


def _mp_units(ctx, chk, a, use_library: bool):
    st, one = a.star(), a.one()
    m = ctx.mp(chk, a)
    for g in ctx.inners(a):
        u = a @ st + one - a @ g
        v = st @ a + one - g @ a
        ui, vi = ctx.unit(chk, u), ctx.unit(chk, v)
        chk.require((ui is None) == (vi is None) == (m is None),
                    f"a(1) = {show(g)}: u unit {ui is not None}, v unit {vi is not None}, a+ {m is not None}")
        if m is None or ui is None or vi is None:
            continue
        if use_library:
            for route in ("u", "v"):
                r = mp_inverse(a, g, route)
                chk.require(r.mp == m, f"mp_inverse route {route} with a(1) = {show(g)} gives {show(r.mp)}")
        else:
            tu, tv = (ui @ a).star(), (a @ vi).star()
            chk.require(tu @ a @ tu == m, f"(u^-1 a)* a (u^-1 a)* = {show(tu @ a @ tu)} != a+")
            chk.require(tv @ a @ tv == m, f"(a v^-1)* a (a v^-1)* = {show(tv @ a @ tv)} != a+")


@theorem("T3.3", 1, "ring", "a+ exists iff u = aa* + 1 - aa(1) is left (right) invertible iff "
         "v = a*a + 1 - a(1)a is; a+ = (u^-1 a)* a (u^-1 a)* = (a v^-1)* a (a v^-1)*", star=True)
def _t33(ctx, chk, a):
    _mp_units(ctx, chk, a, use_library=False)


@theorem("C3.4", 1, "ring", "a+ exists iff u = aa* + 1 - aa(1) is invertible iff v = a*a + 1 - a(1)a is; "
         "MP formulas through both units", star=True)
def _c34(ctx, chk, a):
    _mp_units(ctx, chk, a, use_library=True)


@theorem("C3.5", 1, "ring", "left g-MP iff a^2a* + 1 - aa(1) is left invertible iff aa*a + 1 - a(1)a is",
         star=True)
def _c35(ctx, chk, a):
    st, one = a.star(), a.one()
    lg = ctx.gmp(chk, a, "left")
    for g in ctx.inners(a):
        u1 = ctx.unit(chk, a @ a @ st + one - a @ g)
        u2 = ctx.unit(chk, a @ st @ a + one - g @ a)
        chk.require((u1 is not None) == (u2 is not None) == lg,
                    f"a(1) = {show(g)}: units {u1 is not None}, {u2 is not None}, left g-MP {lg}")


@theorem("C3.6", 1, "ring", "right g-MP iff a*a^2 + 1 - a(1)a is right invertible iff aa*a + 1 - aa(1) is",
         star=True)
def _c36(ctx, chk, a):
    st, one = a.star(), a.one()
    rg = ctx.gmp(chk, a, "right")
    for g in ctx.inners(a):
        u1 = ctx.unit(chk, st @ a @ a + one - g @ a)
        u2 = ctx.unit(chk, a @ st @ a + one - a @ g)
        chk.require((u1 is not None) == (u2 is not None) == rg,
                    f"a(1) = {show(g)}: units {u1 is not None}, {u2 is not None}, right g-MP {rg}")


@theorem("T3.7", 1, "ring", "left and right g-MP iff aa*a + 1 - aa(1) is a unit iff aa*a + 1 - a(1)a is",
         star=True)
def _t37(ctx, chk, a):
    st, one = a.star(), a.one()
    both = ctx.gmp(chk, a, "left") and ctx.gmp(chk, a, "right")
    chk.require(both == (ctx.group(chk, a) is not None and ctx.mp(chk, a) is not None),
                "two-sided g-MP differs from a in S# and S+")
    aa = a @ st @ a
    for g in ctx.inners(a):
        u = ctx.unit(chk, aa + one - a @ g)
        v = ctx.unit(chk, aa + one - g @ a)
        chk.require((u is not None) == (v is not None) == both,
                    f"a(1) = {show(g)}: u unit {u is not None}, v unit {v is not None}, both g-MP {both}")


@theorem("C3.8", 3, "ring", "a^||d exists: (adb)^||d = b^||d v^-1 and (bda)^||d = u^-1 b^||d with "
         "u = da + 1 - dd(1), v = ad + 1 - d(1)d")
def _c38(ctx, chk, a, b, d):
    p, q, adb, bda = _triple_common(ctx, chk, a, b, d)
    if q is None:
        return
    one = d.one()
    for g in ctx.inners(d):
        ui = ctx.unit(chk, d @ a + one - d @ g)
        vi = ctx.unit(chk, a @ d + one - g @ d)
        chk.require(ui is not None and vi is not None, f"d(1) = {show(g)}: u or v singular although a^||d exists")
        if ui is None or vi is None:
            continue
        chk.require(q @ vi == adb, f"d(1) = {show(g)}: b^||d v^-1 = {show(q @ vi)} != {show(adb)}")
        chk.require(ui @ q == bda, f"d(1) = {show(g)}: u^-1 b^||d = {show(ui @ q)} != {show(bda)}")


@theorem("C3.9", 3, "ring", "a^||d exists: b^||d exists iff u = dadb + 1 - dd(1) is a unit; then b^||d = u^-1 dad")
def _c39(ctx, chk, a, b, d):
    p = ctx.along(chk, a, d)
    chk.hypothesis(p is not None, "a not invertible along d")
    q = ctx.along(chk, b, d)
    one = d.one()
    dad = d @ a @ d
    for g in ctx.inners(d):
        ui = ctx.unit(chk, dad @ b + one - d @ g)
        chk.require((ui is None) == (q is None), f"d(1) = {show(g)}: u unit {ui is not None}, b^||d {q is not None}")
        if ui is not None and q is not None:
            chk.require(ui @ dad == q, f"d(1) = {show(g)}: u^-1 dad = {show(ui @ dad)} != {show(q)}")


def get(tid: str) -> Theorem:
    try:
        return REGISTRY[tid]
    except KeyError:
        raise KeyError(f"unknown theorem id {tid!r}; known: {', '.join(registry_ids())}") from None

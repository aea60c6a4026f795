"""Necessary conditions on the minimal summand of a connected etale algebra.

A nontrivial summand (l, m) of such an algebra A must have trivial twist
and lie in the root lattice.  If it is the minimal summand (smallest norm),
then every summand (s, t) of source (x) (l, m) with 2 norm(s, t) < norm(l, m)
generates a free simple A-module inside source (x) A, which bounds the sum of
their quantum dimensions by dim(source).  The containment claims below name
explicit summands used to turn that dimension bound into a level bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .catdata import dim_factors, in_root_lattice, twist_is_trivial
from .fusion import tensor_product
from .lie import AlgebraId, Weight, enumerate_alcove, get_algebra, in_alcove
from .qnum import QValue, context_for, decide_leq, qprod


def summand_norm(algebra, w) -> Fraction:
    """l + m (sl3, so5), l + 3m/2 (g2), l (sl2)."""
    alg = get_algebra(algebra)
    if alg is AlgebraId.A1:
        return Fraction(w[0])
    if alg is AlgebraId.G2:
        return w[0] + Fraction(3, 2) * w[1]
    return Fraction(w[0] + w[1])


def simple_free_test(algebra, minimal, probe) -> bool:
    """2 norm(probe) < norm(minimal): probe (x) A is then a simple A-module."""
    return 2 * summand_norm(algebra, probe) < summand_norm(algebra, minimal)


def aux_x(algebra, w) -> int:
    """Largest n with (n, 0) simple-free relative to w (the sl2 analogue uses (n))."""
    return math.ceil(summand_norm(algebra, w) / 2) - 1


def aux_y(w) -> int:
    """g2 only: largest n with (0, n) simple-free relative to w."""
    return math.ceil((Fraction(2, 3) * w[0] + w[1]) / 2) - 1


@dataclass(frozen=True)
class GoalResult:
    consistent: bool
    witnesses: tuple[Weight, ...]
    lhs: float
    rhs: float

    def __bool__(self):
        return self.consistent


def corollary_goal_test(algebra, level: int, source, minimal, precision: str = "double") -> GoalResult:
    """Check sum dim'(w) <= dim'(source) over simple-free summands w of source (x) minimal."""
    alg = get_algebra(algebra)
    source, minimal = tuple(source), tuple(minimal)
    prod = tensor_product(alg, level, source, minimal)
    free = tuple(w for w in sorted(prod) if simple_free_test(alg, minimal, w))
    if not any(minimal) or not free:
        return GoalResult(True, free, 0.0, 0.0)

    def build(ctx):
        total = QValue(0.0, 0.0, ctx.unit)
        for w in free:
            total = total + qprod(ctx, dim_factors(alg, w))
        return total, qprod(ctx, dim_factors(alg, source))

    ctx = context_for(alg, level, precision)
    ok = decide_leq(ctx, build)
    lhs, rhs = build(ctx)
    return GoalResult(ok, free, float(lhs.value), float(rhs.value))


def faulhaber_sum_cubes(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return (n * (n + 1) // 2) ** 2


# --- containment claims ---------------------------------------------------

@dataclass(frozen=True)
class Claim:
    """source (x) minimal is claimed to contain the listed summands.

    With ``at_least`` set, the claim is instead that at least that many
    distinct summands satisfy ``predicate`` for one of the ``sources``.
    """
    algebra: AlgebraId
    level: int
    sources: tuple[Weight, ...]
    minimal: Weight
    summands: tuple[Weight, ...] = ()
    predicate: Optional[Callable[[Weight], bool]] = field(default=None, compare=False)
    at_least: int = 0


class HypothesisError(ValueError):
    pass


def _require(cond, msg):
    if not cond:
        raise HypothesisError(msg)


def _a2_diagonal(k, ell, m):
    _require(0 <= m <= ell and 2 * ell <= k, "need m <= l <= k/2")
    x = aux_x(AlgebraId.A2, (ell, m))
    return Claim(AlgebraId.A2, k, ((m, ell),), (ell, m),
                 tuple((i, i) for i in range(x // 2 + 1)) if x >= 0 else ())


def _b2_m0(k, ell):
    _require(5 <= ell < k - 1, "need 5 <= l < k-1")
    x = aux_x(AlgebraId.B2, (ell, 0))
    lam = ell - x + 2
    return Claim(AlgebraId.B2, k, ((lam, 0),), (ell, 0), ((ell - lam, 0), (ell - lam, 2)))


def _b2_lowm(k, ell, m):
    x = aux_x(AlgebraId.B2, (ell, m))
    _require(m % 2 == 0 and 2 <= m <= x + 2, "need m even and 2 <= m <= x+2")
    _require(x >= 2, "need x >= 2")
    return Claim(AlgebraId.B2, k, ((ell + m - x, 0),), (ell, m), ((x, 0), (x - 2, 2)))


def _b2_l0(k, m):
    _require(m % 2 == 0 and 4 <= m < k, "need m even and 4 <= m < k")
    x = aux_x(AlgebraId.B2, (0, m))
    return Claim(AlgebraId.B2, k, ((0, m),), (0, m), tuple((i, 0) for i in range(x)))


def _b2_highm(k, ell, m):
    x = aux_x(AlgebraId.B2, (ell, m))
    _require(m % 2 == 0 and 0 < ell <= x < m - 2, "need m even and 0 < l <= x < m-2")
    lam = ell + m - x + 1
    return Claim(AlgebraId.B2, k, ((0, lam),), (ell, m),
                 ((ell + 1, m - lam), (ell - 1, m - lam + 2)))


def _g2_small_l(ell0):
    # the source (ell0, lam) is paired with the minimal summand (ell0, m) itself
    def build(k, m):
        _require(4 < m and 2 * m <= k, "need 4 < m <= k/2")
        y = aux_y((ell0, m))
        lam = m - y + 1
        return Claim(AlgebraId.G2, k, ((ell0, lam),), (ell0, m), ((0, y - 1), (3, y - 2)))
    return build


def _g2_m0(k, ell):
    _require(4 < ell <= k, "need 4 < l <= k")
    x = aux_x(AlgebraId.G2, (ell, 0))
    return Claim(AlgebraId.G2, k, ((ell - x + 1, 0),), (ell, 0), ((x - 1, 0), (x - 2, 1)))


def _g2_mid(r):
    def build(k, ell, m):
        x = aux_x(AlgebraId.G2, (ell, m))
        _require(ell % 3 == r and 3 <= ell <= x + 3, f"need l = {r} mod 3 and 3 <= l <= x+3")
        y = aux_y((ell, m))
        lam = Fraction(2, 3) * (ell - r) + m - y
        assert lam.denominator == 1
        tail = (3, y) if r == 2 else (3, y - 2)
        return Claim(AlgebraId.G2, k, ((r, int(lam)),), (ell, m), ((0, y), tail))
    return build


def _g2_highl(k, ell, m):
    x = aux_x(AlgebraId.G2, (ell, m))
    _require(ell > x + 3 and m != 0, "need l > x+3 and m != 0")
    return Claim(AlgebraId.G2, k, tuple((lam, 0) for lam in (x + 1, x + 2, x + 3)), (ell, m),
                 predicate=lambda w, x=x: w[0] + Fraction(3, 2) * w[1] == x, at_least=2)


# claim id -> (builder, parameter names)
CLAIMS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "A2-diag": (_a2_diagonal, ("ell", "m")),
    "B2-m0": (_b2_m0, ("ell",)),
    "B2-lowm": (_b2_lowm, ("ell", "m")),
    "B2-l0": (_b2_l0, ("m",)),
    "B2-highm": (_b2_highm, ("ell", "m")),
    "G2-l0": (_g2_small_l(0), ("m",)),
    "G2-l1": (_g2_small_l(1), ("m",)),
    "G2-l2": (_g2_small_l(2), ("m",)),
    "G2-m0": (_g2_m0, ("ell",)),
    "G2-midl-r0": (_g2_mid(0), ("ell", "m")),
    "G2-midl-r1": (_g2_mid(1), ("ell", "m")),
    "G2-midl-r2": (_g2_mid(2), ("ell", "m")),
    "G2-highl": (_g2_highl, ("ell", "m")),
}


def build_claim(claim_id: str, level: int, **params) -> Claim:
    """Instantiate a claim; raises HypothesisError outside its hypotheses."""
    try:
        builder, names = CLAIMS[claim_id]
    except KeyError:
        raise ValueError(f"unknown claim {claim_id!r}") from None
    if set(params) != set(names):
        raise ValueError(f"{claim_id} takes parameters {names}, got {tuple(params)}")
    claim = builder(level, **params)
    for w in claim.sources + (claim.minimal,):
        _require(in_alcove(claim.algebra, level, w), f"{w} is outside the level-{level} alcove")
    for w in claim.summands:
        _require(min(w) >= 0, f"claimed summand {w} is not a dominant weight")
    return claim


def evaluate_claim(claim: Claim) -> bool:
    alg, k = claim.algebra, claim.level
    if claim.at_least:
        for src in claim.sources:
            prod = tensor_product(alg, k, src, claim.minimal)
            if sum(1 for w in prod if claim.predicate(w)) >= claim.at_least:
                return True
        return False
    prod = tensor_product(alg, k, claim.sources[0], claim.minimal)
    return all(prod.get(w, 0) >= 1 for w in claim.summands)


def containment_check(claim_id: str, level: int, **params) -> bool:
    return evaluate_claim(build_claim(claim_id, level, **params))


def claim_instances(claim_id: str, level: int):
    """All in-hypothesis parameter sets of a claim at one level."""
    _, names = CLAIMS[claim_id]
    alg = get_algebra(claim_id.split("-")[0])
    seen = set()
    for w in enumerate_alcove(alg, level):
        params = {"ell": w[0], "m": w[1]} if len(w) == 2 else {"ell": w[0]}
        params = {n: params[n] for n in names}
        key = tuple(params.values())
        if key in seen:
            continue
        seen.add(key)
        try:
            yield params, build_claim(claim_id, level, **params)
        except HypothesisError:
            continue


# largest level swept for each claim; so5 low-m and high-m are extra
SWEEP_LEVELS = {
    "A2-diag": 16,
    "B2-m0": 25, "B2-l0": 25, "B2-lowm": 25, "B2-highm": 25,
    "G2-l0": 20, "G2-l1": 20, "G2-l2": 20, "G2-m0": 20,
    "G2-midl-r0": 20, "G2-midl-r1": 20, "G2-midl-r2": 20, "G2-highl": 20,
}


@dataclass(frozen=True)
class SweepResult:
    claim_id: str
    max_level: int
    instances: int
    failures: tuple  # (level, params) pairs, params as sorted item tuples

    @property
    def ok(self) -> bool:
        return not self.failures


def sweep_claim(claim_id: str, max_level: Optional[int] = None) -> SweepResult:
    """Evaluate a claim on every in-hypothesis instance for levels 1..max_level."""
    top = SWEEP_LEVELS[claim_id] if max_level is None else max_level
    count, bad = 0, []
    for k in range(1, top + 1):
        for params, claim in claim_instances(claim_id, k):
            count += 1
            if not evaluate_claim(claim):
                bad.append((k, tuple(sorted(params.items()))))
    return SweepResult(claim_id, top, count, tuple(bad))


# --- level scans -----------------------------------------------------------

def goal_sources(algebra, level: int, w) -> tuple[Weight, ...]:
    """Source objects the case analysis pairs with a candidate minimal summand w."""
    alg = get_algebra(algebra)
    k = level
    if alg is AlgebraId.A1:
        half = w[0] // 2
        return ((half + 3,),) if w[0] % 2 == 0 and half >= 3 else ()
    if alg is AlgebraId.A2:
        return ((w[1], w[0]),)
    ell, m = w
    x = aux_x(alg, w)
    if alg is AlgebraId.B2:
        if m == 0:
            return ((ell - x + 2, 0),) if 5 <= ell < k - 1 else ()
        if 2 <= m <= x + 2:
            return ((ell + m - x, 0),)
        if ell == 0:
            return ((0, m),) if 4 <= m < k else ()
        if 0 < ell <= x < m - 2:
            return ((0, ell + m - x + 1),)
        return ()
    y = aux_y(w)
    if m == 0:
        return ((ell - x + 1, 0),) if 4 < ell <= k else ()
    if ell <= 2:
        return ((ell, m - y + 1),) if 4 < m else ()
    if ell <= x + 3:
        r = ell % 3
        return ((r, int(Fraction(2, 3) * (ell - r) + m - y)),)
    return tuple((lam, 0) for lam in (x + 1, x + 2, x + 3))


@dataclass(frozen=True)
class CandidateSummand:
    algebra: AlgebraId
    level: int
    weight: Weight
    norm: Fraction
    twist_trivial: bool
    in_root_lattice: bool
    tests: tuple = ()  # (source, witnesses) pairs that were checked


FILTERS = ("twist", "root_lattice", "goal")


def check_candidate(algebra, level: int, w, filters=FILTERS, precision: str = "double"):
    """CandidateSummand if w passes the requested filters, else None."""
    alg = get_algebra(algebra)
    w = tuple(w)
    tt = twist_is_trivial(alg, level, w)
    rl = in_root_lattice(alg, w)
    if ("twist" in filters and not tt) or ("root_lattice" in filters and not rl):
        return None
    tests = []
    if "goal" in filters:
        for src in goal_sources(alg, level, w):
            if not in_alcove(alg, level, src):
                continue
            res = corollary_goal_test(alg, level, src, w, precision)
            if not res.consistent:
                return None
            tests.append((src, res.witnesses))
    return CandidateSummand(alg, level, w, summand_norm(alg, w), tt, rl, tuple(tests))


def scan_level(algebra, level: int, filters=FILTERS, precision: str = "double") -> list[CandidateSummand]:
    """Nontrivial alcove weights passing every necessary condition, in alcove order."""
    alg = get_algebra(algebra)
    out = []
    for w in enumerate_alcove(alg, level):
        if not any(w):
            continue
        c = check_candidate(alg, level, w, filters, precision)
        if c is not None:
            out.append(c)
    return out

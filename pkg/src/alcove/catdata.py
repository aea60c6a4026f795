"""Quantum dimensions, twists, root-lattice tests and sl3 conjugacy classes."""
from __future__ import annotations

from fractions import Fraction

from .fusion import tensor_product
from .lie import AlgebraId, Weight, algebra_data, get_algebra, in_alcove
from .qnum import QValue, context_for, decide_leq, qprod


def _check(alg, level, w):
    if not in_alcove(alg, level, w):
        raise ValueError(f"{tuple(w)} is not in the level-{level} alcove of {alg.value}")


def dim_factors(algebra, w) -> tuple[int, ...]:
    """Integers n with dim'(w) = prod [n]: one factor <alpha, w + rho> per positive root."""
    d = algebra_data(algebra)
    wr = tuple(x + 1 for x in w)
    return tuple(int(d.inner(a, wr)) for a in d.positive_roots)


def qdim_numerator(algebra, level: int, w, precision: str = "double") -> QValue:
    """dim'(w), the numerator of the quantum Weyl dimension formula."""
    alg = get_algebra(algebra)
    w = tuple(w)
    _check(alg, level, w)
    return qprod(context_for(alg, level, precision), dim_factors(alg, w))


def qdim(algebra, level: int, w, precision: str = "double") -> QValue:
    alg = get_algebra(algebra)
    w = tuple(w)
    _check(alg, level, w)
    ctx = context_for(alg, level, precision)
    num = qprod(ctx, dim_factors(alg, w))
    den = qprod(ctx, dim_factors(alg, (0,) * len(w)))
    v = num.value / den.value
    # relative errors add under division
    m = num.margin / abs(den.value) + abs(v) * den.margin / abs(den.value) + ctx.unit * abs(v)
    return QValue(v, m, ctx.unit)


def twist_arg(algebra, level: int, w) -> Fraction:
    """r with theta(w) = exp(2 pi i r), from the per-algebra closed forms."""
    alg = get_algebra(algebra)
    w = tuple(w)
    _check(alg, level, w)
    k = level
    if alg is AlgebraId.A1:
        (s,) = w
        return Fraction(s * (s + 2), 4 * (k + 2))
    s, t = w
    if alg is AlgebraId.A2:
        return Fraction(s * s + 3 * s + s * t + 3 * t + t * t, 3 * (k + 3))
    if alg is AlgebraId.B2:
        return Fraction(2 * s * s + 2 * s * t + 6 * s + t * t + 4 * t, 4 * (k + 3))
    return Fraction(s * s + 3 * s * t + 5 * s + 3 * t * t + 9 * t, 3 * (k + 4))


def twist_arg_from_form(algebra, level: int, w) -> Fraction:
    """<w, w + 2 rho> / (2 eps), computed from the invariant form."""
    d = algebra_data(algebra)
    w2 = tuple(x + 2 for x in w)
    return d.inner(w, w2) / (2 * d.q_denominator(level))


def twist_is_trivial(algebra, level: int, w) -> bool:
    return twist_arg(algebra, level, w).denominator == 1


def twist_is_third_root(algebra, level: int, w) -> bool:
    return (3 * twist_arg(algebra, level, w)).denominator == 1


def in_root_lattice(algebra, w) -> bool:
    d = algebra_data(algebra)
    return all(c.denominator == 1 for c in d.root_coords(tuple(w)))


def simple_current_rotation(level: int, w) -> Weight:
    """The unique summand of (0, k) (x) w in C(sl3, k)."""
    prod = tensor_product(AlgebraId.A2, level, (0, level), w)
    if len(prod) != 1 or next(iter(prod.values())) != 1:
        raise RuntimeError(f"(0,{level}) is not invertible: {prod}")
    return next(iter(prod))


def a2_orbit(level: int, w) -> list[Weight]:
    """Orbit of w under duality and the (0, k) rotation, sorted."""
    w = tuple(w)
    _check(AlgebraId.A2, level, w)
    seen = {w}
    todo = [w]
    while todo:
        u = todo.pop()
        for v in ((u[1], u[0]), simple_current_rotation(level, u)):
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return sorted(seen)


def a2_normalize(level: int, w) -> Weight:
    """Orbit representative (l', m') with m' <= l' <= k/2, lexicographically least."""
    reps = [u for u in a2_orbit(level, w) if u[1] <= u[0] and 2 * u[0] <= level]
    if not reps:
        raise RuntimeError(f"no normalised conjugate for {w} at level {level}")
    return reps[0]


def _convexity_violations(alg, level, pairs, precision):
    ctx = context_for(alg, level, precision)
    bad = []
    for small, w in pairs:
        ok = decide_leq(ctx, lambda c, a=small, b=w: (qprod(c, dim_factors(alg, a)),
                                                       qprod(c, dim_factors(alg, b))))
        if not ok:
            bad.append((small, w))
    return bad


def so5_convexity_violations(level: int, precision: str = "double") -> list:
    """Pairs ((0,x), (s,x-s)) with 0 <= x < k/2 and dim'(0,x) > dim'(s,x-s)."""
    pairs = [((0, x), (s, x - s)) for x in range((level + 1) // 2) for s in range(x + 1)]
    return _convexity_violations(AlgebraId.B2, level, pairs, precision)


def g2_convexity_violations(level: int, precision: str = "double") -> list:
    """Pairs ((x,0), (s,t)) with s + 3t/2 = x < k/2 and dim'(x,0) > dim'(s,t)."""
    pairs = [((x, 0), (x - 3 * t // 2, t)) for x in range((level + 1) // 2)
             for t in range(0, 2 * x // 3 + 1, 2)]
    return _convexity_violations(AlgebraId.G2, level, pairs, precision)

"""q-integers [n] = sin(n pi / eps) / sin(pi / eps) with forward-error margins.

Values are computed in double precision alongside an absolute error bound.
A comparison whose operands sit within the combined bound is redone with
mpmath at EXTENDED_DPS digits; if it is still unresolved the two sides are
treated as equal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

import mpmath
import numpy as np

U_DOUBLE = 2.0 ** -53
EXTENDED_DPS = 40
_MP = mpmath.MPContext()
_MP.dps = EXTENDED_DPS
U_EXTENDED = _MP.mpf(10) ** (-(EXTENDED_DPS - 2))

PRECISIONS = ("double", "extended")


@dataclass(frozen=True)
class QContext:
    epsilon: int
    precision: str = "double"

    def __post_init__(self):
        if self.epsilon < 3:
            raise ValueError(f"epsilon must be >= 3, got {self.epsilon}")
        if self.precision not in PRECISIONS:
            raise ValueError(f"precision must be one of {PRECISIONS}")

    @property
    def unit(self):
        return U_DOUBLE if self.precision == "double" else U_EXTENDED

    def extended(self) -> "QContext":
        return replace(self, precision="extended")


def context_for(algebra, level: int, precision: str = "double") -> QContext:
    from .lie import algebra_data
    return QContext(algebra_data(algebra).q_denominator(level), precision)


@dataclass(frozen=True)
class QValue:
    """A real number together with an absolute error bound."""
    value: object
    margin: object = 0.0
    unit: object = U_DOUBLE

    def _lift(self, other):
        if isinstance(other, QValue):
            return other
        return QValue(other, 0.0, self.unit)

    def __add__(self, other):
        o = self._lift(other)
        v = self.value + o.value
        return QValue(v, self.margin + o.margin + self.unit * abs(v), self.unit)

    __radd__ = __add__

    def __neg__(self):
        return QValue(-self.value, self.margin, self.unit)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        v = self.value * o.value
        m = (abs(self.value) * o.margin + abs(o.value) * self.margin
             + self.margin * o.margin + self.unit * abs(v))
        return QValue(v, m, self.unit)

    __rmul__ = __mul__

    def __float__(self):
        return float(self.value)

    def separation(self, other) -> int | None:
        """-1 / +1 when self is certainly below / above other, None if unresolved."""
        o = self._lift(other)
        diff = self.value - o.value
        slack = self.margin + o.margin
        if diff < -slack:
            return -1
        if diff > slack:
            return 1
        return None


def qint(ctx: QContext, n: int) -> QValue:
    if n < 0:
        raise ValueError("qint needs n >= 0")
    eps = ctx.epsilon
    if n % eps == 0:
        return QValue(0.0 if ctx.precision == "double" else _MP.mpf(0), 0.0, ctx.unit)
    if n % (2 * eps) == 1:
        return QValue(1.0 if ctx.precision == "double" else _MP.mpf(1), 0.0, ctx.unit)
    sign, r = _reduce(n, eps)
    u = ctx.unit
    if ctx.precision == "double":
        den = math.sin(math.pi / eps)
        v = sign * math.sin(math.pi * r / eps) / den
    else:
        den = _MP.sin(_MP.pi / eps)
        v = sign * _MP.sin(_MP.pi * r / eps) / den
    return QValue(v, 8 * u / den + 4 * u * abs(v), u)


def _reduce(n, eps):
    """Return (sign, r) with sin(n pi/eps) = sign * sin(r pi/eps) and 0 <= r <= eps/2."""
    r = n % (2 * eps)
    sign = 1
    if r > eps:
        r -= eps
        sign = -1
    return sign, min(r, eps - r)


def qprod(ctx: QContext, factors) -> QValue:
    out = QValue(1.0 if ctx.precision == "double" else _MP.mpf(1), 0.0, ctx.unit)
    for n in factors:
        out = out * qint(ctx, n)
    return out


def decide_leq(ctx: QContext, build: Callable[[QContext], tuple], strict: bool = False) -> bool:
    """Decide lhs <= rhs (or lhs < rhs) where build(ctx) returns (lhs, rhs).

    Unresolved comparisons are retried in extended precision; a remaining
    tie counts as equality.
    """
    lhs, rhs = build(ctx)
    sep = lhs.separation(rhs)
    if sep is None and ctx.precision == "double":
        lhs, rhs = build(ctx.extended())
        sep = lhs.separation(rhs)
    if sep is None:
        return not strict
    return sep < 0


def check_quantum_triangle(ctx: QContext, n: int, m: int) -> bool:
    """[n+m] <= [n] + m."""
    if n < 1 or m < 1:
        raise ValueError("need n, m >= 1")
    return decide_leq(ctx, lambda c: (qint(c, n + m), qint(c, n) + m))


def check_quantum_bound(ctx: QContext, n: int) -> bool:
    """[n] <= n."""
    if n < 1:
        raise ValueError("need n >= 1")
    return decide_leq(ctx, lambda c: (qint(c, n), QValue(n, 0.0, c.unit)))


def check_lower_bound(ctx: QContext, n: int) -> bool:
    """[n] >= n/2, valid for 1 <= n <= eps/2."""
    if n < 1 or 2 * n > ctx.epsilon:
        raise ValueError(f"lower bound needs 1 <= n <= eps/2 (n={n}, eps={ctx.epsilon})")
    return decide_leq(ctx, lambda c: (QValue(n / 2 if c.precision == "double" else _MP.mpf(n) / 2,
                                             0.0, c.unit), qint(c, n)))


# --- vectorised sweeps -------------------------------------------------------

def qint_table(eps: int, nmax: int) -> tuple[np.ndarray, np.ndarray]:
    """[n] for n = 0..nmax with per-entry error bounds, as numpy arrays."""
    n = np.arange(nmax + 1)
    den = math.sin(math.pi / eps)
    r = n % (2 * eps)
    sign = np.where(r > eps, -1.0, 1.0)
    r = np.where(r > eps, r - eps, r)
    r = np.minimum(r, eps - r)
    vals = sign * np.sin(np.pi * r / eps) / den
    vals[n % eps == 0] = 0.0
    vals[n % (2 * eps) == 1] = 1.0
    marg = 8 * U_DOUBLE / den + 4 * U_DOUBLE * np.abs(vals)
    return vals, marg


def _resolve(lhs, rhs, slack, fallback) -> list[int]:
    """Indices where lhs <= rhs fails; ambiguous entries go to fallback(i)."""
    diff = lhs - rhs
    bad = np.nonzero(diff > slack)[0].tolist()
    unsure = np.nonzero(np.abs(diff) <= slack)[0]
    bad += [int(i) for i in unsure if not fallback(int(i))]
    return sorted(bad)


def triangle_counterexamples(eps: int) -> list[tuple[int, int]]:
    """All (n, m) with n, m >= 1, n + m <= 2 eps violating [n+m] <= [n] + m."""
    vals, marg = qint_table(eps, 2 * eps)
    top = 2 * eps
    nn, mm = np.meshgrid(np.arange(1, top), np.arange(1, top), indexing="ij")
    keep = nn + mm <= top
    nn, mm = nn[keep], mm[keep]
    lhs = vals[nn + mm]
    rhs = vals[nn] + mm
    slack = marg[nn + mm] + marg[nn] + 4 * U_DOUBLE * np.abs(rhs)
    ctx = QContext(eps)
    bad = _resolve(lhs, rhs, slack, lambda i: check_quantum_triangle(ctx, int(nn[i]), int(mm[i])))
    return [(int(nn[i]), int(mm[i])) for i in bad]


def upper_bound_counterexamples(eps: int) -> list[int]:
    """n in 1..2 eps with [n] > n."""
    vals, marg = qint_table(eps, 2 * eps)
    n = np.arange(1, 2 * eps + 1)
    ctx = QContext(eps)
    bad = _resolve(vals[n], n.astype(float), marg[n], lambda i: check_quantum_bound(ctx, int(n[i])))
    return [int(n[i]) for i in bad]


def lower_bound_counterexamples(eps: int) -> list[int]:
    """n in 1..eps/2 with [n] < n/2."""
    vals, marg = qint_table(eps, eps)
    n = np.arange(1, eps // 2 + 1)
    ctx = QContext(eps)
    bad = _resolve(n / 2.0, vals[n], marg[n], lambda i: check_lower_bound(ctx, int(n[i])))
    return [int(n[i]) for i in bad]

"""Classical weight multiplicities via Freudenthal's recursion."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod

from .lie import Weight, algebra_data, get_algebra


@dataclass(frozen=True)
class DominantChar:
    highest: Weight
    mult: dict  # dominant weight -> multiplicity

    def dimension(self, algebra) -> int:
        d = algebra_data(algebra)
        return sum(m * len(d.orbit(mu)) for mu, m in self.mult.items())


@dataclass(frozen=True)
class WeightDiagram:
    center: Weight
    support: dict  # weight (shifted by center) -> multiplicity


def _scaled_form(d):
    scale = lcm(*(x.denominator for row in d.form for x in row))
    return tuple(tuple(int(x * scale) for x in row) for row in d.form)


def _ip(g, v, w):
    r = len(v)
    return sum(v[i] * g[i][j] * w[j] for i in range(r) for j in range(r))


@lru_cache(maxsize=None)
def _dominant_mults(algebra, lam: Weight) -> tuple:
    d = algebra_data(algebra)
    g = _scaled_form(d)
    pos = d.positive_roots

    # dominant weights below lam: lam minus sums of positive roots, kept dominant
    seen = {lam}
    todo = [lam]
    while todo:
        mu = todo.pop()
        for a in pos:
            nu = tuple(x - y for x, y in zip(mu, a))
            if nu not in seen and d.is_dominant(nu):
                seen.add(nu)
                todo.append(nu)

    def shifted_norm(mu):
        v = tuple(x + 1 for x in mu)
        return _ip(g, v, v)

    top = shifted_norm(lam)
    order = sorted(seen, key=lambda mu: (-shifted_norm(mu), mu))
    mult = {lam: 1}
    for mu in order[1:]:
        acc = 0
        for a in pos:
            j = 1
            while True:
                nu = tuple(x + j * y for x, y in zip(mu, a))
                dom, _ = d.to_dominant(nu)
                m = mult.get(dom, 0)
                if m == 0 and dom not in seen:
                    break
                acc += m * _ip(g, nu, a)
                j += 1
        den = top - shifted_norm(mu)
        q, r = divmod(2 * acc, den)
        assert r == 0, (lam, mu)
        if q:
            mult[mu] = q
    return tuple(sorted(mult.items()))


def dominant_character(algebra, lam) -> DominantChar:
    lam = tuple(lam)
    if any(x < 0 for x in lam):
        raise ValueError(f"{lam} is not dominant")
    return DominantChar(lam, dict(_dominant_mults(get_algebra(algebra), lam)))


@lru_cache(maxsize=4096)
def _diagram(algebra, lam: Weight) -> tuple:
    d = algebra_data(algebra)
    out = []
    for mu, m in _dominant_mults(algebra, lam):
        out.extend((nu, m) for nu in d.orbit(mu))
    return tuple(sorted(out))


def weight_diagram(algebra, lam, shift=None) -> WeightDiagram:
    """Full weight diagram of V(lam), translated by shift."""
    alg = get_algebra(algebra)
    lam = tuple(lam)
    shift = tuple(shift) if shift is not None else tuple(0 for _ in lam)
    supp = {tuple(a + b for a, b in zip(nu, shift)): m for nu, m in _diagram(alg, lam)}
    return WeightDiagram(shift, supp)


def mult_at(algebra, lam, mu) -> int:
    alg = get_algebra(algebra)
    dom, _ = algebra_data(alg).to_dominant(tuple(mu))
    return dict(_dominant_mults(alg, tuple(lam))).get(dom, 0)


def weyl_dimension(algebra, lam) -> int:
    """Classical Weyl dimension formula, evaluated exactly."""
    d = algebra_data(algebra)
    lr = tuple(x + 1 for x in lam)
    val = prod((Fraction(d.inner(a, lr)) / d.inner(a, d.rho) for a in d.positive_roots), start=Fraction(1))
    assert val.denominator == 1
    return int(val)

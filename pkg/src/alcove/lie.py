"""Root-system data for the rank <= 2 algebras sl2, sl3, so5 and g2.

Weights are integer tuples in the fundamental-weight basis.  Everything here
is exact: the invariant form is stored as a matrix of Fractions, scaled so
that short roots have squared length 2.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Weight = tuple[int, ...]


class AlgebraId(str, enum.Enum):
    A1 = "sl2"
    A2 = "sl3"
    B2 = "so5"
    G2 = "g2"

    @property
    def cartan_label(self) -> str:
        return self.name


def get_algebra(name: "str | AlgebraId") -> AlgebraId:
    """Accept either a Lie-algebra name (``so5``) or a Cartan label (``B2``)."""
    if isinstance(name, AlgebraId):
        return name
    key = str(name).strip()
    for alg in AlgebraId:
        if key.lower() == alg.value or key.upper() == alg.name:
            return alg
    raise ValueError(f"unknown algebra {name!r}; expected one of "
                     + ", ".join(a.value for a in AlgebraId))


# Cartan matrix A[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in the
# fundamental-weight basis.  The form is the Gram matrix <omega_i, omega_j>.
_RAW = {
    AlgebraId.A1: ([[2]], [[Fraction(1, 2)]]),
    AlgebraId.A2: ([[2, -1], [-1, 2]],
                   [[Fraction(2, 3), Fraction(1, 3)], [Fraction(1, 3), Fraction(2, 3)]]),
    AlgebraId.B2: ([[2, -2], [-1, 2]], [[2, 1], [1, 1]]),
    AlgebraId.G2: ([[2, -1], [-3, 2]], [[2, 3], [3, 6]]),
}


@dataclass(frozen=True)
class LieData:
    algebra: AlgebraId
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    form: tuple[tuple[Fraction, ...], ...]
    simple_roots: tuple[Weight, ...]
    fundamental_weights: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    rho: Weight
    highest_root: Weight
    comarks: tuple[int, ...]
    dual_coxeter: int
    long_root_sq: int

    def inner(self, v, w) -> Fraction:
        return sum((Fraction(v[i]) * self.form[i][j] * w[j]
                    for i in range(self.rank) for j in range(self.rank)), Fraction(0))

    def level_pairing(self, v) -> int:
        """<v, theta^vee>, the quantity bounded by the level."""
        return sum(a * x for a, x in zip(self.comarks, v))

    def q_denominator(self, level: int) -> int:
        """epsilon(g, k): q = exp(pi i / epsilon)."""
        return (level + self.dual_coxeter) * self.long_root_sq // 2

    def reflect(self, i: int, v) -> Weight:
        a = self.simple_roots[i]
        c = v[i]
        return tuple(x - c * y for x, y in zip(v, a))

    def to_dominant(self, v) -> tuple[Weight, int]:
        """Conjugate v into the dominant chamber; returns (weight, #reflections)."""
        v = tuple(v)
        n = 0
        while True:
            for i in range(self.rank):
                if v[i] < 0:
                    v = self.reflect(i, v)
                    n += 1
                    break
            else:
                return v, n

    def orbit(self, v) -> frozenset[Weight]:
        seen = {tuple(v)}
        todo = [tuple(v)]
        while todo:
            u = todo.pop()
            for i in range(self.rank):
                r = self.reflect(i, u)
                if r not in seen:
                    seen.add(r)
                    todo.append(r)
        return frozenset(seen)

    def is_dominant(self, v) -> bool:
        return all(x >= 0 for x in v)

    def root_coords(self, v) -> tuple[Fraction, ...]:
        """Coordinates of v in the simple-root basis."""
        # solve c . A = v
        if self.rank == 1:
            return (Fraction(v[0], 2),)
        (a, b), (c, d) = self.cartan
        det = a * d - b * c
        return (Fraction(v[0] * d - v[1] * c, det), Fraction(-v[0] * b + v[1] * a, det))


def _build(alg: AlgebraId) -> LieData:
    cartan, form = _RAW[alg]
    rank = len(cartan)
    cartan = tuple(tuple(r) for r in cartan)
    form = tuple(tuple(Fraction(x) for x in r) for r in form)
    simple = tuple(tuple(r) for r in cartan)
    fund = tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
    rho = tuple(1 for _ in range(rank))
    proto = LieData(alg, rank, cartan, form, simple, fund, (), rho, (), (), 0, 0)

    roots = set()
    for a in simple:
        roots |= proto.orbit(a)
    positive = sorted((r for r in roots if all(c >= 0 for c in proto.root_coords(r))),
                      key=lambda r: (sum(proto.root_coords(r)), r))
    theta = positive[-1]
    theta_sq = proto.inner(theta, theta)
    comarks = []
    for i in range(rank):
        c = 2 * proto.inner(fund[i], theta) / theta_sq
        assert c.denominator == 1
        comarks.append(int(c))
    hv = 1 + sum(comarks)
    return LieData(alg, rank, cartan, form, simple, fund, tuple(positive), rho, theta,
                   tuple(comarks), hv, int(theta_sq))


@lru_cache(maxsize=None)
def algebra_data(algebra) -> LieData:
    return _build(get_algebra(algebra))


def inner(algebra, v, w) -> Fraction:
    return algebra_data(algebra).inner(v, w)


def in_alcove(algebra, level: int, w) -> bool:
    d = algebra_data(algebra)
    return (len(w) == d.rank and all(isinstance(x, int) and x >= 0 for x in w)
            and d.level_pairing(w) <= level)


def enumerate_alcove(algebra, level: int) -> list[Weight]:
    """All level-k integrable weights, sorted lexicographically."""
    if level < 1:
        raise ValueError("level must be >= 1")
    d = algebra_data(algebra)
    if d.rank == 1:
        return [(s,) for s in range(level + 1)]
    a, b = d.comarks
    return [(s, t) for s in range(level // a + 1) for t in range((level - a * s) // b + 1)]


def dual_weight(algebra, level: int, w) -> Weight:
    w = tuple(w)
    if get_algebra(algebra) is AlgebraId.A2:
        return (w[1], w[0])
    return w


def parse_weight(text: str) -> Weight:
    text = text.strip().strip("()")
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}; expected e.g. '3,4'") from None


def format_weight(w) -> str:
    return ",".join(str(x) for x in w)

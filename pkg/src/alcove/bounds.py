"""Exact evaluation of the per-case polynomial inequalities and level bounds.

Each proof case ends with a polynomial inequality LHS(n) <= RHS(n) (or <) in
an auxiliary integer n (x or y).  ``max_param`` finds the largest n for which
it holds.  The n-bound confines the minimal summand (l, m) to a region; twist
integrality then gives k <= P(l, m)/c - h^vee, maximised over that region.

Cases are named by their hypotheses:

========================  ====================================================
A1                        sl2, minimal summand (2m)
A2-even / A2-odd          sl3, parity of x
B2-m0-*                   so5, m = 0, parity of l
B2-lowm-*                 so5, 2 <= m <= x + 2, parity of l
B2-l0                     so5, l = 0
B2-highm-*                so5, 0 < l <= x < m - 2, parity of l
G2-l0-*, G2-l1-*, G2-l2-*  g2, l = 0, 1, 2, parity of m
G2-m0-*                   g2, m = 0, parity of l
G2-midl-r0/r1/r2          g2, 3 <= l <= x + 3, l mod 3
G2-highl                  g2, l > x + 3, m > 0
========================  ====================================================
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

F = Fraction


@dataclass(frozen=True)
class InequalityCase:
    case_id: str
    section: str
    variable: str
    lhs: Callable[[int], Fraction]
    rhs: Callable[[int], Fraction]
    lhs_text: str
    rhs_text: str
    strict: bool = False
    parity: Optional[int] = None  # restrict the variable itself to this parity
    reference_max: Optional[int] = None

    def holds(self, n: int) -> bool:
        a, b = F(self.lhs(n)), F(self.rhs(n))
        return a < b if self.strict else a <= b


def _g2_l0(y):
    return F(27, 8) * (y - 1) * (y + 3) * (y + 1) * (3 * y + 1) * (3 * y + 5)


def _g2_l12(y):
    return F(27, 32) * y * (y + 1) * (2 * y + 1) * (3 * y + 1) * (3 * y + 2)


def _so5_low(x):
    return F(3, 4) * (x - 1) * (2 * x + 1) * (x + 2)


def _so5_high(x):
    return F(1, 4) * (x + 1) * (x + 2) * (x + 3)


_G2L0 = "(27/8)(y-1)(y+3)(y+1)(3y+1)(3y+5)"
_G2L12 = "(27/32)y(y+1)(2y+1)(3y+1)(3y+2)"
_B2LOW = "(3/4)(x-1)(2x+1)(x+2)"
_B2HIGH = "(1/4)(x+1)(x+2)(x+3)"

CASES: tuple[InequalityCase, ...] = (
    InequalityCase("A1", "A1", "m", lambda m: F(m - 2, 2), lambda m: 4,
                   "(1/2)(m-2)", "4", strict=True, reference_max=9),
    InequalityCase("A2-even", "A2", "x", lambda x: F((x + 2) ** 2 * (x + 4) ** 2, 256),
                   lambda x: (2 * x + 2) * (x + 2) * (2 * x + 4),
                   "(1/256)(x+2)^2(x+4)^2", "(2x+2)(x+2)(2x+4)", parity=0, reference_max=1016),
    InequalityCase("A2-odd", "A2", "x", lambda x: F((x + 1) ** 2 * (x + 3) ** 2, 256),
                   lambda x: (2 * x + 2) * (x + 2) * (2 * x + 4),
                   "(1/256)(x+1)^2(x+3)^2", "(2x+2)(x+2)(2x+4)", parity=1, reference_max=1019),
    InequalityCase("B2-m0-even", "B2-m0", "x", _so5_low, lambda x: 24 * (6 * x * x + 30 * x + 55),
                   _B2LOW, "24(6x^2+30x+55)", reference_max=98),
    InequalityCase("B2-m0-odd", "B2-m0", "x", _so5_low, lambda x: 120 * (x * x + 4 * x + 6),
                   _B2LOW, "120(x^2+4x+6)", reference_max=81),
    InequalityCase("B2-lowm-odd", "B2-lowm", "x", _so5_low, lambda x: 24 * (x + 2) ** 2,
                   _B2LOW, "24(x+2)^2", reference_max=18),
    InequalityCase("B2-lowm-even", "B2-lowm", "x", _so5_low,
                   lambda x: 24 * (2 * x * x + 10 * x + 13), _B2LOW, "24(2x^2+10x+13)", reference_max=35),
    InequalityCase("B2-l0", "B2-l0", "x", lambda x: F(x * x * (x + 1) ** 2, 4),
                   lambda x: 4 * (2 * x + 3) * (2 * x + 4) * (2 * x + 5),
                   "(1/4)x^2(x+1)^2", "4(2x+3)(2x+4)(2x+5)", reference_max=131),
    InequalityCase("B2-highm-even", "B2-highm", "x", _so5_high,
                   lambda x: 6 * (3 * x * x + 21 * x + 38), _B2HIGH, "6(3x^2+21x+38)", reference_max=72),
    InequalityCase("B2-highm-odd", "B2-highm", "x", _so5_high, lambda x: 12 * (x + 3) ** 2,
                   _B2HIGH, "12(x+3)^2"),
    InequalityCase("G2-l0-even", "G2-l0", "y", _g2_l0,
                   lambda y: 3240 * (3 * y ** 4 + 30 * y ** 3 + 136 * y * y + 305 * y + 273),
                   _G2L0, "3240(3y^4+30y^3+136y^2+305y+273)", reference_max=324),
    InequalityCase("G2-l0-odd", "G2-l0", "y", _g2_l0,
                   lambda y: 810 * (9 * y ** 4 + 72 * y ** 3 + 255 * y * y + 444 * y + 308),
                   _G2L0, "810(9y^4+72y^3+255y^2+444y+308)", strict=True, reference_max=242),
    InequalityCase("G2-l1-even", "G2-l1", "y", _g2_l12,
                   lambda y: 324 * (54 * y ** 4 + 613 * y ** 3 + 2861 * y * y + 6427 * y + 5725),
                   _G2L12, "324(54y^4+613y^3+2861y^2+6427y+5725)", reference_max=1160),
    InequalityCase("G2-l1-odd", "G2-l1", "y", _g2_l12,
                   lambda y: 1620 * (y + 3) * (9 * y ** 3 + 65 * y * y + 183 * y + 191),
                   _G2L12, "1620(y+3)(9y^3+65y^2+183y+191)", reference_max=967),
    InequalityCase("G2-l2-even", "G2-l2", "y", _g2_l12,
                   lambda y: 81 * (399 * y ** 4 + 5171 * y ** 3 + 28239 * y * y + 74821 * y + 78570),
                   _G2L12, "81(399y^4+5171y^3+28239y^2+74821y+78570)", reference_max=2138),
    InequalityCase("G2-l2-odd", "G2-l2", "y", _g2_l12,
                   lambda y: 2835 * (y + 3) * (9 * y ** 3 + 73 * y * y + 234 * y + 278),
                   _G2L12, "2835(y+3)(9y^3+73y^2+234y+278)", reference_max=1688),
    InequalityCase("G2-m0-even", "G2-m0", "x",
                   lambda x: F(27, 16) * (x - 1) * (x + 2) ** 2 * (x + 3) * (x + 5),
                   lambda x: 1080 * (x ** 4 + 14 * x ** 3 + 80 * x * x + 217 * x + 231),
                   "(27/16)(x-1)(x+2)(x+3)(x+5)(x+2)", "1080(x^4+14x^3+80x^2+217x+231)",
                   reference_max=642),
    InequalityCase("G2-m0-odd", "G2-m0", "x",
                   lambda x: F(27, 16) * (x - 1) * (x + 2) ** 2 * (x + 3) * (x + 5),
                   lambda x: 810 * (x + 3) ** 2 * (x * x + 6 * x + 12),
                   "(27/16)(x-1)(x+2)(x+3)(x+5)(x+2)", "810(x+3)^2(x^2+6x+12)", reference_max=481),
    InequalityCase("G2-midl-r0", "G2-midl-r0", "y", _g2_l0,
                   lambda y: 1620 * (y * y + 5 * y + 8) * (3 * y * y + 15 * y + 19),
                   _G2L0, "1620(y^2+5y+8)(3y^2+15y+19)", reference_max=164),
    InequalityCase("G2-midl-r1", "G2-midl-r1", "y", _g2_l0,
                   lambda y: 648 * (y + 3) * (12 * y ** 3 - 20 * y * y - 282 * y - 425),
                   _G2L0, "648(y+3)(12y^3-20y^2-282y-425)", reference_max=252),
    InequalityCase("G2-midl-r2", "G2-midl-r2", "y", _g2_l0,
                   lambda y: 540 * (y + 3) * (y + 1) * (27 * y * y + 88 * y + 74),
                   _G2L0, "540(y+3)(y+1)(27y^2+88y+74)", reference_max=962),
    InequalityCase("G2-highl", "G2-highl", "x",
                   lambda x: F(27, 64) * (x + 1) * (x + 2) * (x + 3) * (x + 4) * (2 * x + 5),
                   lambda x: 810 * (x + 4) ** 2 * (x * x + 8 * x + 19),
                   "(27/64)(x+1)(x+2)(x+3)(x+4)(2x+5)", "810(x+4)^2(x^2+8x+19)",
                   strict=True, reference_max=963),
)

CASE_BY_ID = {c.case_id: c for c in CASES}


def get_case(case_id: str) -> InequalityCase:
    try:
        return CASE_BY_ID[case_id]
    except KeyError:
        raise ValueError(f"unknown case {case_id!r}") from None


def case_inequality(case_id: str, param: int) -> bool:
    if param < 0:
        raise ValueError("param must be >= 0")
    return get_case(case_id).holds(param)


def scan_case(case_id: str) -> tuple[int, list[int]]:
    """(largest n satisfying the inequality, values below it where it fails).

    Scans upward in exact arithmetic until n exceeds twice the last true
    value plus a fixed horizon; every polynomial has a dominant LHS so the
    tail is false from there on.
    """
    case = get_case(case_id)
    step = 1 if case.parity is None else 2
    n = 0 if case.parity in (None, 0) else 1
    last = -1
    while n <= 2 * max(last, 0) + 64:
        if case.holds(n):
            last = n
        n += step
    if last < 0:
        raise RuntimeError(f"{case_id}: inequality never holds")
    gaps = [m for m in range(n % step if step == 2 else 0, last, step) if not case.holds(m)]
    return last, gaps


def max_param(case_id: str) -> int:
    return scan_case(case_id)[0]


# --- level bounds ------------------------------------------------------------

def _grid(lmax, mmax):
    ell, m = np.meshgrid(np.arange(lmax + 1, dtype=np.int64),
                         np.arange(mmax + 1, dtype=np.int64), indexing="ij")
    return ell.ravel(), m.ravel()


def _p_a1(ell, m):
    return ell * (ell + 2)


def _p_a2(ell, m):
    return ell * ell + 3 * ell + ell * m + 3 * m + m * m


def _p_b2(ell, m):
    return 2 * ell * ell + 2 * ell * m + 6 * ell + m * m + 4 * m


def _p_g2(ell, m):
    return ell * ell + 3 * ell * m + 5 * ell + 3 * m * m + 9 * m


def _fixed(ell0=None, m0=None):
    """Region builders with one coordinate fixed and the other bounded by c['max']."""
    def build(c):
        free = np.arange(c["max"] + 1, dtype=np.int64)
        if ell0 is not None:
            return np.full_like(free, ell0), free
        return free, np.full_like(free, m0)
    return build


def _region_a1(c):
    m = np.arange(1, c["m_max"] + 1, dtype=np.int64)
    return 2 * m, np.zeros_like(m)


def _region_a2(c):
    s = c["sum_max"]
    ell, m = _grid(s, s)
    keep = (m <= ell) & (ell + m <= s)
    return ell[keep], m[keep]


def _region_b2_m0(c):
    ell = np.arange(max(c["even_max"], c["odd_max"]) + 1, dtype=np.int64)
    keep = np.where(ell % 2 == 0, ell <= c["even_max"], ell <= c["odd_max"])
    ell = ell[keep]
    return ell, np.zeros_like(ell)


def _region_b2_lowm(c):
    ell, m = _grid(c["sum_max"], c["m_max"])
    keep = (m >= c["m_min"]) & (ell + m <= c["sum_max"])
    return ell[keep], m[keep]


def _region_box(c):
    ell, m = _grid(c["l_max"], c["m_max"])
    keep = (ell >= c.get("l_min", 0)) & (m >= c.get("m_min", 0))
    return ell[keep], m[keep]


def _region_g2_norm(c):
    # l + (3/2) m <= norm_max
    b = 2 * c["norm_max"]
    ell, m = _grid(b // 2, b // 3)
    keep = 2 * ell + 3 * m <= b
    return ell[keep], m[keep]


def _mx(maxes, *ids):
    return max(maxes[i] for i in ids)


@dataclass(frozen=True)
class BoundSection:
    section: str
    algebra: str
    poly: Callable
    poly_text: str
    divisor: int
    dual_coxeter: int
    region: Callable
    reference_region: dict
    chained_region: Callable[[dict], dict]
    reference_level: int
    reference_relation: str = "<="  # how the level is quoted: "<=" or "<"
    region_text: str = ""

    def level_sup(self, consts: dict) -> tuple[Fraction, tuple[int, int]]:
        ell, m = self.region(consts)
        vals = self.poly(ell, m)
        i = int(np.argmax(vals))
        return F(int(vals[i]), self.divisor) - self.dual_coxeter, (int(ell[i]), int(m[i]))


_B2 = ("(2l^2+2lm+6l+m^2+4m)", 4, 3)
_G2 = ("(l^2+3lm+5l+3m^2+9m)", 3, 4)

SECTIONS: tuple[BoundSection, ...] = (
    BoundSection("A1", "sl2", _p_a1, "l(l+2)", 4, 2, _region_a1, {"m_max": 9},
                 lambda mx: {"m_max": mx["A1"]}, 88, region_text="l = 2m, 1 <= m <= m_max"),
    BoundSection("A2", "sl3", _p_a2, "(l^2+3l+lm+3m+m^2)", 1, 3, _region_a2, {"sum_max": 2038},
                 lambda mx: {"sum_max": 2 * _mx(mx, "A2-even", "A2-odd") + 2}, 3121194,
                 region_text="0 <= m <= l, l + m <= sum_max"),
    BoundSection("B2-m0", "so5", _p_b2, *_B2, _region_b2_m0, {"even_max": 198, "odd_max": 198},
                 lambda mx: {"even_max": 2 * mx["B2-m0-even"] + 2, "odd_max": 2 * mx["B2-m0-odd"] + 1},
                 19896, region_text="m = 0, l <= even_max (l even) or odd_max (l odd)"),
    BoundSection("B2-lowm", "so5", _p_b2, *_B2, _region_b2_lowm,
                 {"m_min": 2, "m_max": 37, "sum_max": 72},
                 lambda mx: {"m_min": 2, "m_max": _mx(mx, "B2-lowm-odd", "B2-lowm-even") + 2,
                             "sum_max": 2 * _mx(mx, "B2-lowm-odd", "B2-lowm-even") + 2},
                 2625, region_text="m_min <= m <= m_max, l + m <= sum_max"),
    BoundSection("B2-l0", "so5", _p_b2, *_B2, _fixed(ell0=0), {"max": 264},
                 lambda mx: {"max": 2 * mx["B2-l0"] + 2}, 17685, region_text="l = 0, m <= max"),
    BoundSection("B2-highm", "so5", _p_b2, *_B2, _region_box,
                 {"l_min": 1, "l_max": 72, "m_min": 75, "m_max": 145},
                 lambda mx: (lambda x: {"l_min": 1, "l_max": x, "m_min": x + 3, "m_max": 2 * x + 1})(
                     _mx(mx, "B2-highm-even", "B2-highm-odd")),
                 13319, region_text="l_min <= l <= l_max, m_min <= m <= m_max"),
    BoundSection("G2-l0", "g2", _p_g2, *_G2, _fixed(ell0=0), {"max": 650},
                 lambda mx: {"max": 2 * _mx(mx, "G2-l0-even", "G2-l0-odd") + 2}, 424446,
                 region_text="l = 0, m <= max"),
    BoundSection("G2-l1", "g2", _p_g2, *_G2, _fixed(ell0=1), {"max": 2322},
                 lambda mx: {"max": 2 * _mx(mx, "G2-l1-even", "G2-l1-odd") + 2}, 5400970,
                 region_text="l = 1, m <= max"),
    BoundSection("G2-l2", "g2", _p_g2, *_G2, _fixed(ell0=2), {"max": 4272},
                 lambda mx: {"max": 2 * _mx(mx, "G2-l2-even", "G2-l2-odd") + 2}, 18271135, "<",
                 region_text="l = 2, m <= max"),
    BoundSection("G2-m0", "g2", _p_g2, *_G2, _fixed(m0=0), {"max": 1286},
                 lambda mx: {"max": 2 * _mx(mx, "G2-m0-even", "G2-m0-odd") + 2}, 553405, "<",
                 region_text="m = 0, l <= max"),
    BoundSection("G2-midl-r0", "g2", _p_g2, *_G2, _region_g2_norm, {"norm_max": 495},
                 lambda mx: {"norm_max": 3 * mx["G2-midl-r0"] + 3}, 109886,
                 region_text="l + (3/2)m <= norm_max"),
    BoundSection("G2-midl-r1", "g2", _p_g2, *_G2, _region_g2_norm, {"norm_max": 1933},
                 lambda mx: {"norm_max": 3 * mx["G2-midl-r1"] + 3}, 1664094,
                 region_text="l + (3/2)m <= norm_max"),
    BoundSection("G2-midl-r2", "g2", _p_g2, *_G2, _region_g2_norm, {"norm_max": 2889},
                 lambda mx: {"norm_max": 3 * mx["G2-midl-r2"] + 3}, 3715250,
                 region_text="l + (3/2)m <= norm_max"),
    BoundSection("G2-highl", "g2", _p_g2, *_G2, _region_box,
                 {"l_max": 1926, "m_min": 1, "m_max": 963},
                 lambda mx: {"l_max": 2 * mx["G2-highl"], "m_min": 1, "m_max": mx["G2-highl"]},
                 4023089, region_text="l <= l_max, m_min <= m <= m_max"),
)

SECTION_BY_ID = {s.section: s for s in SECTIONS}


def get_section(case_or_section: str) -> BoundSection:
    if case_or_section in SECTION_BY_ID:
        return SECTION_BY_ID[case_or_section]
    return SECTION_BY_ID[get_case(case_or_section).section]


def level_sup(case_or_section: str, consts: Optional[dict] = None) -> Fraction:
    sec = get_section(case_or_section)
    return sec.level_sup(consts if consts is not None else sec.reference_region)[0]


def level_bound(case_or_section: str, consts: Optional[dict] = None) -> int:
    """Smallest integer not exceeded by any admissible level (ceiling of the supremum)."""
    return math.ceil(level_sup(case_or_section, consts))


@dataclass
class CaseBoundReport:
    case_id: str
    section: str
    algebra: str
    variable: str
    lhs: str
    relation: str
    rhs: str
    max_param: int
    reference_max_param: Optional[int]
    fails_below_max: list
    region: str
    region_constants: dict
    level_sup: Fraction
    level_bound: int
    max_admissible_level: int
    maximiser: tuple
    reference_level_bound: int
    reference_level_relation: str
    chained_region_constants: dict
    chained_level_bound: int
    max_param_matches: Optional[bool] = field(default=None)
    level_bound_matches: bool = field(default=False)


def all_max_params() -> dict:
    return {c.case_id: max_param(c.case_id) for c in CASES}


def case_reports(maxes: Optional[dict] = None) -> list[CaseBoundReport]:
    maxes = maxes or all_max_params()
    out = []
    sec_cache = {}
    for case in CASES:
        sec = SECTION_BY_ID[case.section]
        if sec.section not in sec_cache:
            sup, arg = sec.level_sup(sec.reference_region)
            chained = sec.chained_region(maxes)
            sec_cache[sec.section] = (sup, arg, chained, math.ceil(sec.level_sup(chained)[0]))
        sup, arg, chained, chained_bound = sec_cache[sec.section]
        top, gaps = scan_case(case.case_id)
        bound = math.ceil(sup)
        out.append(CaseBoundReport(
            case.case_id, sec.section, sec.algebra, case.variable, case.lhs_text,
            "<" if case.strict else "<=", case.rhs_text, top, case.reference_max, gaps,
            sec.region_text, dict(sec.reference_region), sup, bound, math.floor(sup), arg,
            sec.reference_level, sec.reference_relation, chained, chained_bound,
            None if case.reference_max is None else top == case.reference_max,
            bound == sec.reference_level))
    return out

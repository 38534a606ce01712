"""Invariant meridians and parallels, with multiplicities.

A meridian plane is a*x + b*y = 0; its two meridians are invariant exactly
when the plane polynomial divides the extactic polynomial of the span of
x and y, which for a field (P, Q, R) is Q*x - P*y.  A parallel plane
z - k = 0 (|k| <= 1) is invariant exactly when z - k divides R.

Candidate slopes come from the common roots of the t-polynomials obtained
by substituting y = t*x, rational ones pinned down exactly, irrational ones
isolated over floats.  A plane is only reported after an independent
invariance verification, and multiplicity is the largest power of the plane
polynomial dividing the extactic (or R).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .poly import (MultiPoly, NotDivisible, UniPoly, X, Y, Z, divide_exact,
                   divide_exact_z, restrict_to_line, unipoly_gcd)
from .roots import (IllConditioned, cauchy_bound, dense_scan_roots, real_roots)
from .scalars import Scalar
from .vfield import VectorField, plane_residual
from .families import CubicParams

RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class MeridianPlane:
    """Plane a*x + b*y = 0 with a^2 + b^2 = 1 and first nonzero >= 0."""

    a: float
    b: float
    exact: bool
    exact_pair: tuple[Scalar, Scalar] | None = None

    def angle(self) -> float:
        """Angle of the meridian pair in [0, pi)."""
        theta = math.atan2(self.a, -self.b) % math.pi
        return 0.0 if abs(theta - math.pi) < 1e-12 else theta

    def polynomial(self) -> MultiPoly | None:
        if self.exact_pair is None:
            return None
        a, b = self.exact_pair
        return X * a + Y * b


@dataclass(frozen=True)
class ParallelPlane:
    """Plane z = k with -1 <= k <= 1."""

    k: float
    exact: bool
    exact_k: Fraction | None = None

    def is_boundary(self) -> bool:
        if self.exact_k is not None:
            return abs(self.exact_k) == 1
        return abs(abs(self.k) - 1.0) < 1e-9


@dataclass
class MeridianSet:
    infinite: bool
    planes: list[tuple[MeridianPlane, int]] = dc_field(default_factory=list)
    fallback_scan: bool = False

    def plane_multiplicity_total(self) -> int:
        return sum(mult for _, mult in self.planes)

    def meridian_count(self) -> int | float:
        if self.infinite:
            return math.inf
        return 2 * self.plane_multiplicity_total()


@dataclass
class ParallelSet:
    infinite: bool
    planes: list[tuple[ParallelPlane, int]] = dc_field(default_factory=list)
    fallback_scan: bool = False

    def plane_multiplicity_total(self) -> int:
        return sum(mult for _, mult in self.planes)

    def parallel_count(self) -> int | float:
        if self.infinite:
            return math.inf
        return sum((1 if plane.is_boundary() else 2) * mult
                   for plane, mult in self.planes)


def extactic_xy(field: VectorField) -> MultiPoly:
    """Extactic polynomial of the field for the span of x and y: Q*x - P*y."""
    return field.Q * X - field.P * Y


# -- linear-factor machinery ---------------------------------------------------


@dataclass(frozen=True)
class LinearFactor:
    """A factor a*x + b*y of some polynomial, with its multiplicity there."""

    slope: Fraction | float | None   # t0 of y - t0*x; None means the plane x = 0
    exact: bool
    multiplicity: int


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return out


def _rational_root_candidates(g: UniPoly) -> set[Fraction]:
    shadow = [c.p for c in g.coeffs]
    if all(v == 0 for v in shadow):
        shadow = [c.q for c in g.coeffs]
    denom = math.lcm(*(v.denominator for v in shadow))
    ints = [int(v * denom) for v in shadow]
    candidates: set[Fraction] = set()
    low = 0
    while low < len(ints) and ints[low] == 0:
        low += 1
    if low > 0:
        candidates.add(Fraction(0))
    if low >= len(ints) - 1:
        return candidates
    a0, an = ints[low], ints[-1]
    if abs(a0) > 10**6 or abs(an) > 10**6:
        return candidates
    for num in _divisors(a0):
        for den in _divisors(an):
            candidates.add(Fraction(num, den))
            candidates.add(Fraction(-num, den))
    return candidates


def _slope_divisor(t0: Fraction) -> MultiPoly:
    return MultiPoly({(0, 1, 0): Scalar(1), (1, 0, 0): Scalar(-t0)})


def _exact_multiplicity(p: MultiPoly, divisor: MultiPoly, var: str) -> int:
    count = 0
    current = p
    while True:
        try:
            current = divide_exact(current, divisor, var)
            count += 1
        except NotDivisible:
            return count


def linear_xy_factors(p: MultiPoly) -> tuple[list[LinearFactor], bool]:
    """All factors of p of the form a*x + b*y, with multiplicities.

    Returns (factors, fallback_scan_used).  Rational slopes are certified
    exactly; irrational ones carry float slopes validated by residual.
    """
    if p.is_zero():
        raise ValueError("linear factors of the zero polynomial")
    factors: list[LinearFactor] = []
    x_mult = p.min_var_exponent("x")
    if x_mult >= 1:
        factors.append(LinearFactor(None, True, x_mult))

    tpolys = restrict_to_line(p)
    try:
        g = unipoly_gcd(tpolys)
        exact_g = True
    except ZeroDivisionError:
        exact_g = False
        fc = None
        from .roots import float_gcd

        for tp in tpolys:
            cs = tp.to_floats()
            fc = cs if fc is None else float_gcd(fc, cs)
        g = UniPoly([Fraction(c) for c in (fc or [])])
    if g.degree < 1:
        return factors, False

    exact_slopes: list[Fraction] = []
    if exact_g:
        for cand in sorted(_rational_root_candidates(g)):
            if all(tp.eval(cand).is_zero() for tp in tpolys):
                exact_slopes.append(cand)
    for t0 in exact_slopes:
        mult = _exact_multiplicity(p, _slope_divisor(t0), "y")
        if mult >= 1:
            factors.append(LinearFactor(t0, True, mult))

    fallback = False
    bound = cauchy_bound(g)
    try:
        float_roots = real_roots(g, (-bound, bound))
    except IllConditioned:
        float_roots = dense_scan_roots(g, (-bound, bound))
        fallback = True
    for r, mult in float_roots:
        if any(abs(r - float(t0)) < 1e-7 for t0 in exact_slopes):
            continue
        if _tpoly_residual(tpolys, r) < RESIDUAL_TOL:
            factors.append(LinearFactor(r, False, mult))
    return factors, fallback


def _tpoly_residual(tpolys: list[UniPoly], t0: float) -> float:
    worst = 0.0
    for tp in tpolys:
        coeffs = tp.to_floats()
        scale = max(abs(c) * max(1.0, abs(t0)) ** i for i, c in enumerate(coeffs))
        value = 0.0
        for c in reversed(coeffs):
            value = value * t0 + c
        worst = max(worst, abs(value) / max(scale, 1e-300))
    return worst


def plane_from_factor(factor: LinearFactor) -> MeridianPlane:
    if factor.slope is None:
        return MeridianPlane(1.0, 0.0, True, (Scalar(1), Scalar(0)))
    if factor.exact:
        t0 = factor.slope
        a, b = -t0, Fraction(1)
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        scale = a.denominator if a else b.denominator
        pair = (Scalar(a * scale), Scalar(b * scale))
        h = math.hypot(float(a), float(b))
        return MeridianPlane(float(a) / h, float(b) / h, True, pair)
    t0 = float(factor.slope)
    a, b = -t0, 1.0
    if a < 0:
        a, b = -a, -b
    h = math.hypot(a, b)
    return MeridianPlane(a / h, b / h, False)


def invariant_meridians(field: VectorField) -> MeridianSet:
    """Every invariant meridian plane, or the infinite verdict."""
    ext = extactic_xy(field)
    if ext.is_zero():
        return MeridianSet(infinite=True)
    factors, fallback = linear_xy_factors(ext)
    planes: list[tuple[MeridianPlane, int]] = []
    for factor in factors:
        if not _meridian_invariant(field, factor):
            continue
        planes.append((plane_from_factor(factor), factor.multiplicity))
    planes.sort(key=lambda pm: pm[0].angle())
    return MeridianSet(False, planes, fallback)


def _meridian_invariant(field: VectorField, factor: LinearFactor) -> bool:
    if factor.slope is None:
        return field.P.is_zero() or field.P.min_var_exponent("x") >= 1
    if factor.exact:
        ell = field.Q - field.P * Scalar(factor.slope)
        if ell.is_zero():
            return True
        try:
            divide_exact(ell, _slope_divisor(factor.slope), "y")
            return True
        except NotDivisible:
            return False
    t0 = float(factor.slope)
    return plane_residual(field, -t0, 1.0) < RESIDUAL_TOL


def _z_profiles(r: MultiPoly) -> list[UniPoly]:
    """One polynomial in z per x^i y^j monomial group of R."""
    groups: dict[tuple[int, int], dict[int, Scalar]] = {}
    for (i, j, k), coeff in r.terms.items():
        groups.setdefault((i, j), {})[k] = coeff
    out = []
    for key in sorted(groups):
        slot = groups[key]
        coeffs = [slot.get(d, Scalar(0)) for d in range(max(slot) + 1)]
        out.append(UniPoly(coeffs))
    return out


def invariant_parallels(field: VectorField) -> ParallelSet:
    """Every invariant parallel plane z = k with |k| <= 1."""
    if field.R.is_zero():
        return ParallelSet(infinite=True)
    profiles = _z_profiles(field.R)
    try:
        g = unipoly_gcd(profiles)
        exact_g = True
    except ZeroDivisionError:
        exact_g = False
        from .roots import float_gcd

        fc = None
        for tp in profiles:
            cs = tp.to_floats()
            fc = cs if fc is None else float_gcd(fc, cs)
        g = UniPoly([Fraction(c) for c in (fc or [])])

    planes: list[tuple[ParallelPlane, int]] = []
    fallback = False
    if g.degree >= 1:
        exact_ks: list[Fraction] = []
        if exact_g:
            for cand in sorted(_rational_root_candidates(g)):
                if abs(cand) <= 1 and all(tp.eval(cand).is_zero() for tp in profiles):
                    exact_ks.append(cand)
        for k in exact_ks:
            divisor = Z - MultiPoly.constant(Fraction(k))
            mult = _exact_multiplicity(field.R, divisor, "z")
            if mult >= 1:
                planes.append((ParallelPlane(float(k), True, k), mult))
        try:
            float_roots = real_roots(g, (-1.0, 1.0))
        except IllConditioned:
            float_roots = dense_scan_roots(g, (-1.0, 1.0))
            fallback = True
        for r, mult in float_roots:
            if any(abs(r - float(k)) < 1e-7 for k in exact_ks):
                continue
            if _tpoly_residual(profiles, r) < RESIDUAL_TOL:
                planes.append((ParallelPlane(r, False), mult))
    planes.sort(key=lambda pm: pm[0].k)
    return ParallelSet(False, planes, fallback)


def check_four_meridian_criterion(params: CubicParams) -> bool:
    """Exactly four meridians (with multiplicity) for a cubic field.

    Holds precisely when beta = gamma = 0 and f is a nonzero binary
    quadratic in x, y splitting into two real linear forms.
    """
    if not params.beta.is_zero() or not params.gamma.is_zero():
        return False
    f = params.f
    if f.degree != 2 or not set(f.terms) <= {(2, 0, 0), (1, 1, 0), (0, 2, 0)}:
        return False
    a = f.coefficient((2, 0, 0))
    b = f.coefficient((1, 1, 0))
    c = f.coefficient((0, 2, 0))
    disc = b * b - a * c * 4
    return disc.sign() >= 0

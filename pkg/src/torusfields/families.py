"""Constructors and recognizers for the classified torus vector fields.

Every cubic field on the torus is built from a pair (K', f) plus two reals
(beta, gamma); the specialized families fix parts of that data:

* degree one      -- (c*y, -c*x, 0), a rigid rotation
* quadratic       -- K' = alpha constant, f linear, beta = gamma = 0
* Kolmogorov      -- x | P, y | Q, z | R; forces K' = c2*z, f = c1*x*y
* two-parallel    -- K' = 2*(p*x + q*y), beta = -m*p/2, gamma = -m*q/2,
                     R = (p*x + q*y)*(z^2 - 1)
* pseudo-type-n   -- (A*y, -A*x, 0) with A homogeneous of degree n - 1

Recognition extracts parameters by exact coefficient matching: the cofactor
determines K, the pure-z coefficients of P and Q give beta and gamma, and f
is the exact quotient (P - K*x/4 - beta*z) / y.  No fitting, exact or fail.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .poly import (MultiPoly, NotDivisible, X, Y, Z, divide_exact)
from .scalars import Scalar
from .vfield import (CofactorResult, RationalFn, TorusSurface, VectorField,
                     check_first_integral, cofactor_on_torus, torus_polynomial)


class DegreeViolation(ValueError):
    """Family parameters exceed the degree bounds of their closed form."""


class NoKnownIntegral(LookupError):
    """No closed-form first integral is catalogued for this family."""


class Family(enum.Enum):
    DEGREE_ONE = "degree-one"
    QUADRATIC = "quadratic"
    KOLMOGOROV = "kolmogorov"
    TWO_PARALLEL = "two-parallel"
    PSEUDO_TYPE = "pseudo-type"
    CUBIC = "cubic"
    UNCLASSIFIED = "unclassified"
    NOT_ON_TORUS = "not-on-torus"


@dataclass(frozen=True)
class CubicParams:
    Kprime: MultiPoly            # degree <= 1; cofactor is K'*z
    f: MultiPoly                 # degree <= 2
    beta: Scalar
    gamma: Scalar


@dataclass(frozen=True)
class KolmogorovParams:
    c1: Scalar
    c2: Scalar


@dataclass(frozen=True)
class QuadraticParams:
    alpha: Scalar
    f: MultiPoly                 # degree <= 1


@dataclass(frozen=True)
class DegreeOneParams:
    c: Scalar


@dataclass(frozen=True)
class PseudoTypeParams:
    n: int                       # field degree, >= 1
    A: MultiPoly                 # homogeneous of degree n - 1


@dataclass(frozen=True)
class TwoParallelParams:
    p: Scalar
    q: Scalar
    f: MultiPoly                 # degree <= 2


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    params: object | None
    matches: tuple[Family, ...] = ()


def _radial_bowl(m: Fraction) -> MultiPoly:
    """-m*(x^2 + y^2) + z^2 + m^2 - 1, the recurring R building block."""
    m = Fraction(m)
    return MultiPoly({(2, 0, 0): Scalar(-m), (0, 2, 0): Scalar(-m),
                      (0, 0, 2): Scalar(1), (0, 0, 0): Scalar(m * m - 1)})


def build_cubic(params: CubicParams, m: Fraction) -> VectorField:
    """The general cubic field on the torus with cofactor K'*z."""
    if params.Kprime.degree > 1:
        raise DegreeViolation(f"deg K' = {params.Kprime.degree} exceeds 1")
    if params.f.degree > 2:
        raise DegreeViolation(f"deg f = {params.f.degree} exceeds 2")
    m = Fraction(m)
    quarter_k = params.Kprime * Z * Fraction(1, 4)
    p = quarter_k * X + params.f * Y + Z * params.beta
    q = quarter_k * Y - params.f * X + Z * params.gamma
    ring = MultiPoly({(2, 0, 0): Scalar(1), (0, 2, 0): Scalar(1),
                      (0, 0, 0): Scalar(-m)})
    r = (params.Kprime * _radial_bowl(m) * Fraction(1, 2)
         - (X * params.beta + Y * params.gamma) * ring * 2)
    return VectorField(p, q, r)


def build_quadratic(params: QuadraticParams, m: Fraction) -> VectorField:
    if params.f.degree > 1:
        raise DegreeViolation(f"deg f = {params.f.degree} exceeds 1")
    cubic = CubicParams(Kprime=MultiPoly.constant(params.alpha), f=params.f,
                        beta=Scalar(0), gamma=Scalar(0))
    return build_cubic(cubic, m)


def build_kolmogorov(params: KolmogorovParams, m: Fraction) -> VectorField:
    cubic = CubicParams(Kprime=Z * params.c2,
                        f=X * Y * params.c1,
                        beta=Scalar(0), gamma=Scalar(0))
    return build_cubic(cubic, m)


def build_two_parallel(params: TwoParallelParams, m: Fraction) -> VectorField:
    if params.f.degree > 2:
        raise DegreeViolation(f"deg f = {params.f.degree} exceeds 2")
    m = Fraction(m)
    half_m = Fraction(m, 2)
    cubic = CubicParams(Kprime=(X * params.p + Y * params.q) * 2,
                        f=params.f,
                        beta=-(params.p * Scalar(half_m)),
                        gamma=-(params.q * Scalar(half_m)))
    return build_cubic(cubic, m)


def build_pseudo_type(params: PseudoTypeParams, m: Fraction | None = None) -> VectorField:
    if params.n < 1:
        raise DegreeViolation("pseudo-type order must be at least 1")
    if not params.A.is_homogeneous() or (
            not params.A.is_zero() and params.A.degree != params.n - 1):
        raise DegreeViolation(
            f"A must be homogeneous of degree {params.n - 1}")
    return VectorField(params.A * Y, -(params.A * X), MultiPoly.zero())


# -- recognition ------------------------------------------------------------


def _try_divide(p: MultiPoly, divisor: MultiPoly, var: str) -> MultiPoly | None:
    try:
        return divide_exact(p, divisor, var)
    except NotDivisible:
        return None


def _match_degree_one(field: VectorField, m: Fraction,
                      cof: CofactorResult) -> DegreeOneParams | None:
    if field.degree > 1:
        return None
    c = field.P.coefficient((0, 1, 0))
    if field.P == Y * c and field.Q == -(X * c) and field.R.is_zero():
        return DegreeOneParams(c)
    return None


def _match_quadratic(field: VectorField, m: Fraction,
                     cof: CofactorResult) -> QuadraticParams | None:
    if field.degree > 2:
        return None
    k = cof.K
    if not set(k.terms) <= {(0, 0, 1)}:
        return None
    alpha = k.coefficient((0, 0, 1))
    f = _try_divide(field.P - X * Z * (alpha * Fraction(1, 4)), Y, "y")
    if f is None or f.degree > 1:
        return None
    params = QuadraticParams(alpha=alpha, f=f)
    if build_quadratic(params, m) == field:
        return params
    return None


def _match_kolmogorov(field: VectorField, m: Fraction,
                      cof: CofactorResult) -> KolmogorovParams | None:
    if field.degree > 3:
        return None
    for component, var in ((field.P, "x"), (field.Q, "y"), (field.R, "z")):
        if not component.is_zero() and component.min_var_exponent(var) < 1:
            return None
    k = cof.K
    if not set(k.terms) <= {(0, 0, 2)}:
        return None
    c2 = k.coefficient((0, 0, 2))
    rest = field.P - X * Z * Z * (c2 * Fraction(1, 4))
    if not set(rest.terms) <= {(1, 2, 0)}:
        return None
    c1 = rest.coefficient((1, 2, 0))
    params = KolmogorovParams(c1=c1, c2=c2)
    if build_kolmogorov(params, m) == field:
        return params
    return None


def _match_two_parallel(field: VectorField, m: Fraction,
                        cof: CofactorResult) -> TwoParallelParams | None:
    if field.degree > 3:
        return None
    p = field.R.coefficient((1, 0, 2))
    q = field.R.coefficient((0, 1, 2))
    if p.is_zero() and q.is_zero():
        return None
    m = Fraction(m)
    lead = (X * p + Y * q) * Z * Fraction(1, 2)
    f = _try_divide(field.P - lead * X + Z * (p * Scalar(Fraction(m, 2))), Y, "y")
    if f is None or f.degree > 2:
        return None
    params = TwoParallelParams(p=p, q=q, f=f)
    if build_two_parallel(params, m) == field:
        return params
    return None


def _match_pseudo_type(field: VectorField, m: Fraction,
                       cof: CofactorResult) -> PseudoTypeParams | None:
    if not field.R.is_zero() or field.P.is_zero() or field.Q.is_zero():
        return None
    if not (field.P.is_homogeneous() and field.Q.is_homogeneous()):
        return None
    n = field.P.degree
    if field.Q.degree != n:
        return None
    a = _try_divide(field.P, Y, "y")
    if a is None or field.Q != -(a * X):
        return None
    return PseudoTypeParams(n=n, A=a)


def _match_cubic(field: VectorField, m: Fraction,
                 cof: CofactorResult) -> CubicParams | None:
    if field.degree > 3:
        return None
    kprime = _try_divide(cof.K, Z, "z") if not cof.K.is_zero() else MultiPoly.zero()
    if kprime is None or kprime.degree > 1:
        return None
    beta = field.P.coefficient((0, 0, 1))
    gamma = field.Q.coefficient((0, 0, 1))
    f = _try_divide(field.P - X * Z * kprime * Fraction(1, 4) - Z * beta, Y, "y")
    if f is None or f.degree > 2:
        return None
    params = CubicParams(Kprime=kprime, f=f, beta=beta, gamma=gamma)
    if build_cubic(params, m) == field:
        return params
    return None


_MATCHERS = (
    (Family.DEGREE_ONE, _match_degree_one),
    (Family.QUADRATIC, _match_quadratic),
    (Family.KOLMOGOROV, _match_kolmogorov),
    (Family.TWO_PARALLEL, _match_two_parallel),
    (Family.PSEUDO_TYPE, _match_pseudo_type),
    (Family.CUBIC, _match_cubic),
)


def recognize(field: VectorField, m: Fraction) -> FamilyTag:
    """Most specific family tag, with every other matching family recorded."""
    surface = TorusSurface(m)
    cof = cofactor_on_torus(field, surface)
    if not cof.on_torus:
        return FamilyTag(Family.NOT_ON_TORUS, None)
    hits: list[tuple[Family, object]] = []
    for family, matcher in _MATCHERS:
        params = matcher(field, Fraction(m), cof)
        if params is not None:
            hits.append((family, params))
    if not hits:
        return FamilyTag(Family.UNCLASSIFIED, None)
    family, params = hits[0]
    return FamilyTag(family, params, tuple(f for f, _ in hits))


def canonical_first_integrals(tag: FamilyTag, m: Fraction) -> list[RationalFn]:
    """Closed-form first integrals known for the tagged family.

    Kolmogorov and quadratic fields conserve F / (x^2 + y^2)^2; pseudo-type
    and degree-one fields conserve both x^2 + y^2 and z.
    """
    radial = X * X + Y * Y
    if tag.family in (Family.KOLMOGOROV, Family.QUADRATIC):
        return [RationalFn(torus_polynomial(Fraction(m)), radial * radial)]
    if tag.family in (Family.PSEUDO_TYPE, Family.DEGREE_ONE):
        one = MultiPoly.constant(1)
        return [RationalFn(radial, one), RationalFn(Z, one)]
    raise NoKnownIntegral(f"no catalogued first integral for {tag.family.value}")


def verified_first_integrals(field: VectorField, tag: FamilyTag,
                             m: Fraction) -> list[tuple[RationalFn, bool]]:
    try:
        integrals = canonical_first_integrals(tag, m)
    except NoKnownIntegral:
        return []
    return [(h, check_first_integral(field, h)) for h in integrals]

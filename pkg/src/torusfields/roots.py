"""Real root isolation for univariate restrictions.

Roots are located with a Sturm sequence built over float-embedded
coefficients, bisected down to 1e-12, and assigned multiplicities through
the repeated-gcd-with-derivative chain (gcds computed over floats with a
coefficient-drop tolerance of 1e-9).

The Sturm walk refuses to guess: if a chain value sits within 1e-9 of zero
where a sign is needed, :class:`IllConditioned` is raised and the caller is
expected to fall back to a dense scan.
"""

from __future__ import annotations

from .poly import UniPoly

REFINE_TOL = 1e-12
DROP_TOL = 1e-9
SIGN_TOL = 1e-9


class IllConditioned(ArithmeticError):
    """Sturm signs too close to zero to trust; caller should dense-scan."""


def _normalize(coeffs: list[float]) -> list[float]:
    scale = max((abs(c) for c in coeffs), default=0.0)
    if scale == 0.0:
        return []
    return [c / scale for c in coeffs]


def _trim(coeffs: list[float], tol: float = 0.0) -> list[float]:
    out = list(coeffs)
    while out and abs(out[-1]) <= tol:
        out.pop()
    return out


def _eval(coeffs: list[float], t: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _derivative(coeffs: list[float]) -> list[float]:
    return [c * i for i, c in enumerate(coeffs)][1:]


def _divmod(a: list[float], b: list[float]) -> tuple[list[float], list[float]]:
    rem = list(a)
    d = len(b) - 1
    lead = b[-1]
    quot = [0.0] * max(len(rem) - d, 0)
    while len(rem) - 1 >= d and rem:
        c = rem[-1] / lead
        k = len(rem) - 1 - d
        quot[k] = c
        for i, bc in enumerate(b):
            rem[k + i] -= c * bc
        rem = _trim(rem, tol=DROP_TOL * max(abs(x) for x in a))
    return quot, rem


def float_gcd(a: list[float], b: list[float]) -> list[float]:
    """Euclidean gcd with the coefficient-drop tolerance, monic result."""
    a = _normalize(_trim(a, 0.0))
    b = _normalize(_trim(b, 0.0))
    while b:
        _, r = _divmod(a, b)
        a, b = b, _normalize(r)
    if not a:
        return []
    return [c / a[-1] for c in a]


def sturm_chain(coeffs: list[float]) -> list[list[float]]:
    chain = [list(coeffs), _derivative(coeffs)]
    while chain[-1] and len(chain[-1]) > 1:
        _, r = _divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in _normalize(r)])
    return [c for c in chain if c]


def _sign_variations(chain: list[list[float]], t: float) -> int:
    signs = []
    for depth, poly in enumerate(chain):
        scale = max(abs(c) * max(1.0, abs(t)) ** i for i, c in enumerate(poly))
        v = _eval(poly, t)
        if scale > 0 and abs(v) < SIGN_TOL * scale:
            if depth == 0:
                # ambiguous sign of the polynomial itself flips root counts
                raise IllConditioned(f"Sturm value {v:.3e} ~ 0 at t={t}")
            continue  # a vanishing chain entry is skipped by convention
        if v != 0.0:
            signs.append(1 if v > 0 else -1)
    changes = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            changes += 1
    return changes


def _bisect_root(coeffs: list[float], lo: float, hi: float) -> float:
    flo = _eval(coeffs, lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo < REFINE_TOL:
            return mid
        fmid = _eval(coeffs, mid)
        if fmid == 0.0:
            return mid
        if (flo < 0) != (fmid < 0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def _newton_polish(coeffs: list[float], r: float, lo: float, hi: float) -> float:
    deriv = _derivative(coeffs)
    for _ in range(5):
        d = _eval(deriv, r)
        if d == 0.0:
            break
        step = _eval(coeffs, r) / d
        nxt = r - step
        if not (lo - 1e-9 <= nxt <= hi + 1e-9):
            break
        r = nxt
    return r


def gcd_chain(coeffs: list[float]) -> list[list[float]]:
    """g0 = p, g_{i+1} = gcd(g_i, g_i'); stops at a constant."""
    chain = [_normalize(coeffs)]
    while len(chain[-1]) > 1:
        g = float_gcd(chain[-1], _derivative(chain[-1]))
        if len(g) == len(chain[-1]):
            break
        chain.append(g)
    return chain


def _multiplicity(chain: list[list[float]], root: float) -> int:
    mult = 0
    for poly in chain:
        if len(poly) <= 1:
            break
        scale = max(abs(c) * max(1.0, abs(root)) ** i for i, c in enumerate(poly))
        if abs(_eval(poly, root)) < 1e-6 * max(scale, 1e-300):
            mult += 1
        else:
            break
    return max(mult, 1)


def real_roots(u: UniPoly, interval: tuple[float, float]) -> list[tuple[float, int]]:
    """All real roots of u in [lo, hi] with multiplicities.

    Raises IllConditioned when the Sturm walk cannot commit to signs.
    """
    if u.is_zero():
        raise ValueError("real_roots of the zero polynomial")
    lo, hi = interval
    coeffs = _normalize(u.to_floats())
    if len(coeffs) <= 1:
        return []
    chain_g = gcd_chain(coeffs)
    square_free, rem = _divmod(coeffs, chain_g[1]) if len(chain_g) > 1 else (coeffs, [])
    square_free = _normalize(_trim(square_free, 0.0))
    if len(square_free) <= 1:
        square_free = coeffs
    chain = sturm_chain(square_free)

    width = max(hi - lo, 1.0)
    roots: list[float] = []

    def variations_near(t: float, span: float,
                        direction: int = 0) -> tuple[float, int]:
        # shift off roots of the chain head; direction limits the nudge side
        for k in (0.0, 0.0137, -0.0229, 0.0419, -0.0571, 0.0683, -0.0797):
            if direction and k * direction < 0:
                continue
            try:
                return t + k * span, _sign_variations(chain, t + k * span)
            except IllConditioned:
                continue
        raise IllConditioned(f"no trustworthy Sturm signs near t={t}")

    def isolate(a: float, b: float, va: int, vb: int) -> None:
        count = va - vb
        if count <= 0:
            return
        if count == 1:
            fa = _eval(square_free, a)
            fb = _eval(square_free, b)
            if (fa < 0) != (fb < 0) or fa == 0.0 or fb == 0.0:
                r = _bisect_root(square_free, a, b)
                roots.append(_newton_polish(square_free, r, a, b))
                return
            # fall through: subdivide until the sign change shows up
        if b - a < REFINE_TOL:
            roots.append(0.5 * (a + b))
            return
        mid, vm = variations_near(0.5 * (a + b), 0.25 * (b - a))
        isolate(a, mid, va, vm)
        isolate(mid, b, vm, vb)

    pad = 1e-12 * width
    a, va = variations_near(lo - pad, 0.05 * width, direction=-1)
    b, vb = variations_near(hi + pad, 0.05 * width, direction=1)
    isolate(a, b, va, vb)

    slack = 1e-9 * width
    out = []
    for r in sorted(roots):
        if r < lo - slack or r > hi + slack:
            continue
        r = min(max(r, lo), hi)
        out.append((r, _multiplicity(chain_g, r)))
    return out


def dense_scan_roots(u: UniPoly, interval: tuple[float, float],
                     samples: int = 4096) -> list[tuple[float, int]]:
    """Sign-change scan fallback when the Sturm walk is ill-conditioned."""
    lo, hi = interval
    coeffs = _normalize(u.to_floats())
    if len(coeffs) <= 1:
        return []
    step = (hi - lo) / samples
    roots = []
    prev_t, prev_v = lo, _eval(coeffs, lo)
    for i in range(1, samples + 1):
        t = lo + i * step
        v = _eval(coeffs, t)
        if prev_v == 0.0:
            roots.append(prev_t)
        elif (prev_v < 0) != (v < 0):
            roots.append(_bisect_root(coeffs, prev_t, t))
        prev_t, prev_v = t, v
    if prev_v == 0.0:
        roots.append(prev_t)
    chain_g = gcd_chain(coeffs)
    deduped: list[float] = []
    for r in sorted(roots):
        if not deduped or abs(r - deduped[-1]) > 1e-9:
            deduped.append(r)
    return [(r, _multiplicity(chain_g, r)) for r in deduped]


def cauchy_bound(u: UniPoly) -> float:
    """All real roots of u lie in [-B, B]."""
    coeffs = u.to_floats()
    lead = abs(coeffs[-1])
    if lead == 0.0:
        return 1.0
    return 1.0 + max(abs(c) for c in coeffs[:-1]) / lead if len(coeffs) > 1 else 1.0

"""A one-parameter deformation of the polynomial product on Q[x, z].

For a rational parameter t, the star product is the finite bidifferential
sum

    f star_t g = sum over multi-indices a, b of
                 (-t)^(|a|+|b|) / (a! b!) * (dxi^b dz^a f) * (dz^b dxi^a g),

which is commutative and associative, and reduces to the ordinary product
at t = 0.  The cross-Laplacian

    L = sum_i dxi_i dz_i

is locally nilpotent, so its flow phi_t = exp(t L) is a well-defined linear
bijection of Q[x, z]; it is in fact an algebra isomorphism from the star_t
product to the ordinary product, with exact inverse phi_{-t}.

The module also provides the analogue of evaluation at x = 0 for the star
algebra (``star_ev0``, an algebra homomorphism onto Q[z]) and the unique
star-Taylor expansion f = sum_a (1/a!) x^a star_t c_a(z).

Everything here is pure and exact; a StarContext (n, t) pins the algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .poly import (
    MultiIndex,
    Poly,
    grlex_key,
    mi_factorial,
    mi_le,
    mi_sub,
    mi_sum,
    mi_zero,
)


@dataclass(frozen=True)
class StarContext:
    """Fixes the algebra: dimension n >= 1 and rational deformation parameter t."""

    n: int
    t: Fraction

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        object.__setattr__(self, "t", Fraction(self.t))

    def check(self, *polys: Poly) -> None:
        for p in polys:
            if p.n != self.n:
                raise ValueError(f"dimension mismatch: polynomial has n={p.n}, context n={self.n}")


def cross_laplacian(f: Poly) -> Poly:
    """sum_i dxi_i dz_i f; drops both the x-degree and z-degree of each term."""
    total = Poly.zero(f.n)
    for i in range(1, f.n + 1):
        total = total + f.d_z(i).d_xi(i)
    return total


def phi(ctx: StarContext, f: Poly) -> Poly:
    """exp(t * cross_laplacian) applied to f.

    The series terminates after at most min(deg_x f, deg_z f) + 1 terms
    because each cross_laplacian application kills a matched x/z pair.
    phi with parameter -t is the exact inverse.
    """
    ctx.check(f)
    if ctx.t == 0:
        return f
    acc = f
    cur = f
    weight = Fraction(1)
    m = 1
    while True:
        cur = cross_laplacian(cur)
        if cur.is_zero():
            return acc
        weight *= Fraction(ctx.t, m)  # t^m / m!
        acc = acc + cur * weight
        m += 1


def _partial_closure(f: Poly, kind: str) -> dict[MultiIndex, Poly]:
    """All nonzero iterated partials of f: maps a -> d^a f (kind 'z' or 'xi').

    Every ancestor of a nonzero derivative is nonzero, so breadth-first
    growth from f reaches exactly the nonzero ones.
    """
    step = Poly.d_z if kind == "z" else Poly.d_xi
    out: dict[MultiIndex, Poly] = {mi_zero(f.n): f}
    frontier = [mi_zero(f.n)]
    while frontier:
        fresh = []
        for a in frontier:
            g = out[a]
            for i in range(1, f.n + 1):
                b = a[:i - 1] + (a[i - 1] + 1,) + a[i:]
                if b in out:
                    continue
                h = step(g, i)
                if not h.is_zero():
                    out[b] = h
                    fresh.append(b)
        frontier = fresh
    return out


def star(ctx: StarContext, f: Poly, g: Poly) -> Poly:
    """The star_t product of f and g.

    The double sum is finite: a is bounded by the z-degree of f and the
    x-degree of g, b by the x-degree of f and the z-degree of g.
    """
    ctx.check(f, g)
    if ctx.t == 0:
        return f * g
    dz_f = _partial_closure(f, "z")     # a -> dz^a f
    dxi_g = _partial_closure(g, "xi")   # a -> dxi^a g
    total = Poly.zero(ctx.n)
    for a in sorted(dz_f.keys() & dxi_g.keys()):
        inner_f = _partial_closure(dz_f[a], "xi")   # b -> dxi^b dz^a f
        inner_g = _partial_closure(dxi_g[a], "z")   # b -> dz^b dxi^a g
        fact_a = mi_factorial(a)
        for b in sorted(inner_f.keys() & inner_g.keys()):
            c = Fraction((-ctx.t) ** (mi_sum(a) + mi_sum(b)), fact_a * mi_factorial(b))
            total = total + inner_f[b] * inner_g[b] * c
    return total


def star_via_subst_xi(ctx: StarContext, lam: Poly, g: Poly) -> Poly:
    """lam(x) star_t g computed as the operator substitution lam(x - t*dz).

    Requires lam to involve only the x variables.  The operators x_i - t*dz_i
    commute, so applying them factor by factor is well-defined.  Serves as an
    independent oracle for ``star`` on these inputs.
    """
    ctx.check(lam, g)
    if not lam.is_xi_only():
        raise ValueError("first factor must be a polynomial in the x variables only")
    total = Poly.zero(ctx.n)
    for (alpha, _), c in lam.sorted_terms():
        h = g
        for i in range(1, ctx.n + 1):
            for _ in range(alpha[i - 1]):
                h = Poly.xi_var(ctx.n, i) * h - h.d_z(i) * ctx.t
        total = total + h * c
    return total


def star_via_subst_z(ctx: StarContext, p: Poly, g: Poly) -> Poly:
    """p(z) star_t g computed as the operator substitution p(z - t*dxi).

    Requires p to involve only the z variables; the z-side analogue of
    ``star_via_subst_xi``.
    """
    ctx.check(p, g)
    if not p.is_z_only():
        raise ValueError("first factor must be a polynomial in the z variables only")
    total = Poly.zero(ctx.n)
    for (_, beta), c in p.sorted_terms():
        h = g
        for i in range(1, ctx.n + 1):
            for _ in range(beta[i - 1]):
                h = Poly.z_var(ctx.n, i) * h - h.d_xi(i) * ctx.t
        total = total + h * c
    return total


def star_monomial(ctx: StarContext, alpha: MultiIndex, beta: MultiIndex) -> Poly:
    """x^alpha star_t z^beta, via the closed binomial sum.

    Independent of the generic ``star`` path: equals star(x^alpha, z^beta)
    and also phi_{-t}(x^alpha z^beta).
    """
    if len(alpha) != ctx.n or len(beta) != ctx.n:
        raise ValueError(f"multi-index length != dimension {ctx.n}")
    terms = {}
    for gamma in _boxed(tuple(min(a, b) for a, b in zip(alpha, beta))):
        c = Fraction((-ctx.t) ** mi_sum(gamma), mi_factorial(gamma))
        c *= Fraction(mi_factorial(alpha), mi_factorial(mi_sub(alpha, gamma)))
        c *= Fraction(mi_factorial(beta), mi_factorial(mi_sub(beta, gamma)))
        terms[(mi_sub(alpha, gamma), mi_sub(beta, gamma))] = c
    return Poly(ctx.n, terms)


def _boxed(bound: MultiIndex) -> Iterator[MultiIndex]:
    """All multi-indices g with g <= bound componentwise."""
    if not bound:
        yield ()
        return
    for head in range(bound[0] + 1):
        for tail in _boxed(bound[1:]):
            yield (head,) + tail


def star_pow(ctx: StarContext, f: Poly, m: int) -> Poly:
    """m-fold star_t power of f; m = 0 yields the constant 1."""
    ctx.check(f)
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"power must be a non-negative integer, got {m!r}")
    result = Poly.const(ctx.n, 1)
    for _ in range(m):
        result = star(ctx, result, f)
    return result


def star_ev0(ctx: StarContext, f: Poly) -> Poly:
    """The star-algebra analogue of evaluation at x = 0.

    Termwise, x^b z^g maps to t^|b| * dz^b(z^g), extended linearly.  The
    result lies in Q[z], and the map is an algebra homomorphism from the
    star_t product to the ordinary product on Q[z]; it also factors as
    evaluate(phi(f), x=0).
    """
    ctx.check(f)
    out: dict = {}
    zero = mi_zero(ctx.n)
    for (xe, ze), c in f.terms.items():
        if not mi_le(xe, ze):
            continue  # dz^xe z^ze vanishes
        coeff = c * ctx.t ** mi_sum(xe)
        coeff *= Fraction(mi_factorial(ze), mi_factorial(mi_sub(ze, xe)))
        key = (zero, mi_sub(ze, xe))
        out[key] = out.get(key, Fraction(0)) + coeff
    return Poly(ctx.n, out)


@dataclass(frozen=True)
class StarTaylor:
    """The expansion f = sum_a (1/a!) x^a star_t coefficients[a](z).

    Only multi-indices with a nonzero coefficient polynomial are stored;
    each coefficient lies in Q[z].  The expansion is unique.
    """

    n: int
    t: Fraction
    coefficients: dict[MultiIndex, Poly]

    def reconstruct(self) -> Poly:
        """Re-assemble the source polynomial exactly."""
        ctx = StarContext(self.n, self.t)
        total = Poly.zero(self.n)
        for alpha in sorted(self.coefficients, key=lambda a: grlex_key((a, mi_zero(self.n)))):
            xa = Poly.xi_monomial(self.n, alpha)
            total = total + star(ctx, xa, self.coefficients[alpha]) / mi_factorial(alpha)
        return total


def star_taylor(ctx: StarContext, f: Poly) -> StarTaylor:
    """Expand f in star-Taylor form: coefficient a equals star_ev0(dxi^a f)."""
    ctx.check(f)
    coeffs = {}
    for alpha, deriv in _partial_closure(f, "xi").items():
        c = star_ev0(ctx, deriv)
        if not c.is_zero():
            coeffs[alpha] = c
    return StarTaylor(ctx.n, ctx.t, coeffs)

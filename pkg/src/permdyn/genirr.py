"""Iterated generation of degree-k irreducibles f_i = P*f_{i-1} with period bounds."""

import json
import math
from fractions import Fraction

from .context import make_field_ctx
from .dynamics import star
from .errors import InternalCheckError, PreconditionError
from .numth import factorint, is_prime, mult_order_int
from .orders import poly_order
from .permgroup import certify_perm
from .polys import Poly, count_irreducibles, is_irreducible, poly_gcd, q_associate

__all__ = [
    "GenReport",
    "iterate_generation",
    "bound_monomial",
    "bound_linearized",
    "tau",
    "choose_LH",
]


class GenReport:
    """Record of one run of the star iteration f_i = P*f_{i-1}."""

    __slots__ = ("seed", "P", "produced", "period", "bound_claimed")

    def __init__(self, seed, P, produced, period, bound_claimed=None):
        self.seed = seed
        self.P = P
        self.produced = list(produced)
        self.period = period
        self.bound_claimed = bound_claimed

    def to_json(self):
        """JSON text with the seed, permutation, produced list, period, and bound."""
        return json.dumps({
            "seed": str(self.seed),
            "perm": str(self.P),
            "produced": [str(f) for f in self.produced],
            "period": self.period,
            "bound": None if self.bound_claimed is None else str(self.bound_claimed),
        })


def iterate_generation(ctx, P, f0, max_steps=None, bound_claimed=None):
    """Iterate f -> P*f from f0 until the seed recurs or max_steps star steps.

    On closure the report period equals the I_k-cycle length of f0; otherwise
    the period is None and produced holds the distinct prefix seen so far.
    """
    if max_steps is None:
        max_steps = count_irreducibles(ctx.q, ctx.k) + 1
    produced = [f0]
    period = None
    cur = f0
    for step in range(1, max_steps + 1):
        cur = star(ctx, P, cur)
        if cur == f0:
            period = step
            break
        produced.append(cur)
    if period is not None and bound_claimed is not None and period < math.ceil(bound_claimed):
        raise InternalCheckError("period fell below the claimed lower bound")
    return GenReport(f0, P, produced, period, bound_claimed)


def bound_monomial(q, k, n):
    """Period lower bound ord_r(n)/k for P = x^n, with r = (q^k - 1)/(q - 1) prime."""
    r = (q ** k - 1) // (q - 1)
    if not is_prime(r):
        raise PreconditionError("(q^k - 1)/(q - 1) must be prime")
    if math.gcd(n, q ** k - 1) != 1:
        raise PreconditionError("n must be coprime to q^k - 1")
    return Fraction(mult_order_int(n, r), k)


def bound_linearized(q, k, g):
    """Period lower bound O(g, E_k)/k for the q-associate map of g, E_k irreducible."""
    field = g.field
    if field.order != q:
        raise PreconditionError("g must lie over F_q")
    one = Poly.one(field)
    xk1 = one.shift(k) - one
    Ek = xk1 // (Poly.x(field) - one)
    if Ek.degree < 1 or not is_irreducible(Ek):
        raise PreconditionError("(x^k - 1)/(x - 1) must be irreducible over F_q")
    if g.is_zero or poly_gcd(g, xk1).degree != 0:
        raise PreconditionError("g must be coprime to x^k - 1")
    return Fraction(poly_order(g, Ek), k)


def tau(p, k):
    """Explicit lower bound on the order of x + a modulo E_k, by characteristic."""
    if k < 2:
        raise PreconditionError("tau needs k >= 2")
    if p == 2:
        return 2.0 ** (math.sqrt(2 * (k - 2)) - 2)
    if p == 3:
        return 3.0 ** (math.sqrt(3 * (k - 2)) - 2)
    return 5.0 ** (math.sqrt((k - 2) / 2) - 2)


def choose_LH(q, k):
    """Certified generator permutation L_H for prime k with q primitive mod k.

    For q = 2 take H = (x^k - 1)/(x - 1) + x + 1; otherwise H = x - a for the
    smallest a with encoding >= 2 and a^k != 1.
    """
    fac = factorint(q)
    if len(fac) != 1:
        raise PreconditionError("q must be a prime power")
    p = next(iter(fac))
    if not is_prime(k):
        raise PreconditionError("k must be prime")
    try:
        primitive = mult_order_int(q, k) == k - 1
    except ValueError:
        primitive = False
    if not primitive:
        raise PreconditionError("q must be a primitive root modulo k")
    ctx = make_field_ctx(p, fac[p], k)
    field = ctx.Fq
    one = Poly.one(field)
    xk1 = one.shift(k) - one
    if q == 2:
        H = xk1 // (Poly.x(field) - one) + Poly.x(field) + one
        if H(1) == 0:
            raise InternalCheckError("H(1) vanished in the q = 2 construction")
    else:
        a = next((c for c in range(2, q) if field.pow(c, k) != 1), None)
        if a is None:
            raise PreconditionError("no a with encoding >= 2 and a^k != 1 exists in F_q")
        H = Poly.x(field) - Poly.const(field, a)
    if poly_gcd(H, xk1).degree != 0:
        raise InternalCheckError("H is not coprime to x^k - 1")
    return certify_perm(ctx, q_associate(H))

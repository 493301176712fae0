"""Orders attached to irreducible polynomials and their roots.

Covers the multiplicative order of a root, the F_q-order (the minimal monic
divisor h of x^k - 1 whose linearized associate annihilates a root), the
polynomial Euler function Phi_q, the order O(f, g) of f modulo g, and norm
and trace. Every order computation factors the relevant group order and
strips primes rather than searching incrementally.
"""

from . import numth
from .context import distinguished_root, frobenius
from .errors import InternalCheckError, PreconditionError
from .polys import Poly, factor, is_irreducible, poly_gcd, powmod


class OrderFactoring:
    """A positive integer carried together with its prime factorization."""

    def __init__(self, n):
        self.n = n
        self.factors = numth.factorint(n)

    def __repr__(self):
        return "OrderFactoring(%d)" % self.n


def mult_order(ctx, f):
    """Order of the roots of an irreducible f: least e with x^e = 1 mod f."""
    if not is_irreducible(f):
        raise PreconditionError("mult_order needs an irreducible polynomial")
    if f.degree == 1 and f.coeff(0) == 0:
        raise PreconditionError("mult_order is undefined for f = x")
    k = f.degree
    x = Poly.x(f.field)
    one = Poly.one(f.field)
    e = f.field.order ** k - 1
    for prime in OrderFactoring(e).factors:
        while e % prime == 0 and powmod(x, e // prime, f) == one:
            e //= prime
    return e


def _linearized_mod(h, f):
    """L_h mod f, via the Frobenius iterates x^(q^i) mod f."""
    q = f.field.order
    acc = Poly.zero(f.field)
    t = Poly.x(f.field) % f
    for i in range(h.degree + 1):
        c = h.coeff(i)
        if c:
            acc = acc + t.scale(c)
        if i < h.degree:
            t = powmod(t, q, f)
    return acc


def fq_order(ctx, f):
    """The F_q-order of an irreducible f: the least-degree monic h | x^k - 1
    with L_h vanishing on the roots of f.

    Divisibility f | L_h replaces root evaluation, so no extension-field
    arithmetic is needed. Computed by stripping irreducible factors from
    x^k - 1.
    """
    if not is_irreducible(f):
        raise PreconditionError("fq_order needs an irreducible polynomial")
    field = f.field
    k = ctx.k
    xk1 = Poly(field, [field.neg(1)] + [0] * (k - 1) + [1])
    h = xk1
    for g, mult in factor(xk1):
        for _ in range(mult):
            cand = h // g
            if _linearized_mod(cand, f).is_zero:
                h = cand
            else:
                break
    if not _linearized_mod(h, f).is_zero:
        raise InternalCheckError("F_q-order candidate does not annihilate f")
    return h


def phi_q(g):
    """Polynomial Euler function: the number of units mod g."""
    if g.is_zero or g.degree < 1:
        raise PreconditionError("phi_q needs degree >= 1")
    q = g.field.order
    total = 1
    for h, s in factor(g):
        d = h.degree
        total *= q ** ((s - 1) * d) * (q ** d - 1)
    return total


def poly_order(f, g):
    """O(f, g): least j with f^j = 1 mod g (requires gcd(f, g) = 1)."""
    if g.degree < 1:
        raise PreconditionError("poly_order needs deg(g) >= 1")
    if poly_gcd(f, g).degree != 0:
        raise PreconditionError("poly_order needs gcd(f, g) = 1")
    one = Poly.one(f.field)
    e = phi_q(g)
    for prime in OrderFactoring(e).factors:
        while e % prime == 0 and powmod(f, e // prime, g) == one:
            e //= prime
    return e


def norm_of(ctx, f):
    """Norm of an irreducible f of degree k: the conjugate product of a root."""
    alpha = _root_for(ctx, f)
    out = ctx.Fqk.pow(alpha, (ctx.Q - 1) // (ctx.q - 1)) if alpha else 0
    if out >= ctx.q:
        raise InternalCheckError("norm landed outside F_q")
    return out


def trace_of(ctx, f):
    """Trace of an irreducible f of degree k: the conjugate sum of a root."""
    alpha = _root_for(ctx, f)
    out = 0
    cur = alpha
    for _ in range(ctx.k):
        out = ctx.Fqk.add(out, cur)
        cur = frobenius(ctx, cur)
    if out >= ctx.q:
        raise InternalCheckError("trace landed outside F_q")
    return out


def _root_for(ctx, f):
    if not is_irreducible(f):
        raise PreconditionError("norm/trace need an irreducible polynomial")
    if f.degree != ctx.k:
        raise PreconditionError("polynomial degree %d does not match k = %d"
                                % (f.degree, ctx.k))
    return distinguished_root(ctx, f)

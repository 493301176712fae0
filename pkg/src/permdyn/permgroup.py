"""The group G_k of permutation polynomials of F_{q^k} with coefficients
in F_q: certification, composition and inversion modulo x^Q - x (Q = q^k),
Frobenius stability, realization of arbitrary permutations of I_k by
interpolation, Moebius-map representatives, and the degree-preserving form.
"""

import numpy as np

from . import numth
from .context import (distinguished_root, embed_poly, enumerate_Ck, frobenius,
                      make_field_ctx, restrict_poly)
from .errors import InternalCheckError, PreconditionError
from .polys import Poly, enumerate_irreducibles, fold_mod, poly_gcd

__all__ = [
    "PermPoly", "Matrix2", "certify_perm", "perm_table", "gk_compose",
    "gk_inverse", "frobenius_stable", "lagrange_interpolate_all",
    "realize_permutation", "moebius_poly_rep", "moebius_eval", "pgl2_order",
    "is_degree_preserving_form", "check_degree_preserving",
]


class PermPoly:
    """A certified element of G_k: reduced poly over F_q plus its context key."""

    __slots__ = ("poly", "ctx_key")

    def __init__(self, poly, ctx_key):
        self.poly = poly
        self.ctx_key = ctx_key

    def __eq__(self, other):
        return (isinstance(other, PermPoly) and self.ctx_key == other.ctx_key
                and self.poly == other.poly)

    def __hash__(self):
        return hash((self.ctx_key, self.poly))

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return "PermPoly(%s)" % self.poly


class Matrix2:
    """An element of GL_2 over a base field, stored as four scalars."""

    __slots__ = ("field", "a", "b", "c", "d")

    def __init__(self, field, a, b, c, d):
        for v in (a, b, c, d):
            if not 0 <= v < field.order:
                raise PreconditionError("matrix entry %r outside the field" % v)
        self.field, self.a, self.b, self.c, self.d = field, a, b, c, d
        if self.det() == 0:
            raise PreconditionError("matrix is singular")

    @classmethod
    def identity(cls, field):
        return cls(field, 1, 0, 0, 1)

    def det(self):
        f = self.field
        return f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))

    def __matmul__(self, other):
        f = self.field
        return Matrix2(
            f,
            f.add(f.mul(self.a, other.a), f.mul(self.b, other.c)),
            f.add(f.mul(self.a, other.b), f.mul(self.b, other.d)),
            f.add(f.mul(self.c, other.a), f.mul(self.d, other.c)),
            f.add(f.mul(self.c, other.b), f.mul(self.d, other.d)),
        )

    def is_scalar(self):
        return self.b == 0 and self.c == 0 and self.a == self.d

    def __eq__(self, other):
        return (isinstance(other, Matrix2) and self.field.key == other.field.key
                and (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d))

    def __hash__(self):
        return hash((self.field.key, self.a, self.b, self.c, self.d))

    def __repr__(self):
        return "Matrix2[[%d,%d],[%d,%d]]" % (self.a, self.b, self.c, self.d)


def _coerce_poly(ctx, P):
    if isinstance(P, PermPoly):
        if P.ctx_key != ctx.key:
            raise PreconditionError("permutation polynomial belongs to a different context")
        return P.poly
    return P


def certify_perm(ctx, P):
    """Reduce P mod x^Q - x and accept it into G_k iff it permutes F_{q^k}.

    Coefficients must lie in F_q; the induced map is checked exhaustively.
    """
    P = _coerce_poly(ctx, P)
    P = restrict_poly(ctx, P)
    P = fold_mod(P, ctx.Q)
    vals = embed_poly(ctx, P).eval_many(ctx.Fqk.elements())
    if not np.all(np.bincount(vals, minlength=ctx.Q) == 1):
        raise PreconditionError("polynomial does not permute F_{q^k}")
    return PermPoly(P, ctx.key)


def perm_table(ctx, P):
    """Value table of P on all of F_{q^k}, indexed by element encoding."""
    P = _coerce_poly(ctx, P)
    return embed_poly(ctx, P).eval_many(ctx.Fqk.elements())


def gk_compose(ctx, P, Q):
    """P after Q, reduced mod x^Q - x: the group operation of G_k."""
    p1 = restrict_poly(ctx, _coerce_poly(ctx, P))
    p2 = fold_mod(restrict_poly(ctx, _coerce_poly(ctx, Q)), ctx.Q)
    acc = Poly.zero(ctx.Fq)
    for c in reversed(p1.coeffs):
        acc = fold_mod(acc * p2, ctx.Q) + Poly.const(ctx.Fq, int(c))
    return certify_perm(ctx, acc)


def gk_inverse(ctx, P):
    """The inverse of P in G_k, by interpolating the inverse value table."""
    table = perm_table(ctx, certify_perm(ctx, P).poly)
    inv = np.zeros(ctx.Q, dtype=np.int64)
    inv[table] = ctx.Fqk.elements()
    R = lagrange_interpolate_all(ctx, inv)
    if not frobenius_stable(ctx, R):
        raise InternalCheckError("inverse interpolation left F_q coefficients")
    return certify_perm(ctx, restrict_poly(ctx, R))


def frobenius_stable(ctx, f):
    """Whether f(a^q) = f(a)^q on all of F_{q^k} (the definitional test)."""
    f = embed_poly(ctx, _coerce_poly(ctx, f))
    els = ctx.Fqk.elements()
    vals = f.eval_many(els)
    return bool(np.array_equal(f.eval_many(ctx.Fqk.vpow(els, ctx.q)),
                               ctx.Fqk.vpow(vals, ctx.q)))


def lagrange_interpolate_all(ctx, values):
    """The unique polynomial of degree < Q interpolating encoding -> values[encoding].

    Uses the nodal polynomial x^Q - x, whose derivative is the constant -1,
    so the basis polynomial at node u is the negated synthetic quotient
    (x^Q - x)/(x - u).
    """
    field = ctx.Fqk
    Q = ctx.Q
    values = np.asarray(values, dtype=np.int64)
    if len(values) != Q:
        raise PreconditionError("value table must cover all %d elements" % Q)
    coeffs = np.zeros(Q, dtype=np.int64)
    coeffs[0] = values[0]
    coeffs[Q - 1] = field.neg(int(values[0]))
    us = np.arange(1, Q, dtype=np.int64)
    vs = values[1:]
    pw = np.ones(Q - 1, dtype=np.int64)
    for t in range(Q - 1):
        i = Q - 1 - t
        s = field.vsum(field.vmul(vs, pw))
        coeffs[i] = field.add(int(coeffs[i]), field.neg(s))
        if t < Q - 2:
            pw = field.vmul(pw, us)
    out = Poly(field, coeffs)
    if not np.array_equal(out.eval_many(field.elements()), values):
        raise InternalCheckError("interpolation failed to reproduce its table")
    return out


def _sigma_mapping(sigma, n):
    if isinstance(sigma, dict):
        pairs = sigma.items()
    else:
        sigma = list(sigma)
        if sigma and not hasattr(sigma[0], "__len__"):
            pairs = enumerate(sigma)
        else:
            pairs = [(int(a), int(b)) for a, b in sigma]
    mapping = {}
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n) or a in mapping:
            raise PreconditionError("sigma is not a permutation table of I_k")
        mapping[a] = b
    if len(mapping) != n or sorted(mapping.values()) != list(range(n)):
        raise PreconditionError("sigma is not a permutation table of I_k")
    return mapping


def realize_permutation(ctx, sigma):
    """An element P of G_k inducing a given permutation of I_k.

    sigma maps indices into the lex-ordered I_k (pairs, dict, or image list).
    P sends the j-th Frobenius power of the distinguished root of f_i to the
    j-th Frobenius power of the distinguished root of f_{sigma(i)}, and fixes
    every element outside C_k.
    """
    irr = enumerate_irreducibles(ctx.Fq, ctx.k)
    mapping = _sigma_mapping(sigma, len(irr))
    table = np.arange(ctx.Q, dtype=np.int64)
    for i, j in mapping.items():
        a = distinguished_root(ctx, irr[i])
        b = distinguished_root(ctx, irr[j])
        for _ in range(ctx.k):
            table[a] = b
            a = frobenius(ctx, a)
            b = frobenius(ctx, b)
    P = lagrange_interpolate_all(ctx, table)
    if not frobenius_stable(ctx, P):
        raise InternalCheckError("realized permutation is not Frobenius-stable")
    return certify_perm(ctx, restrict_poly(ctx, P))


def moebius_eval(ctx, A, z):
    """tau_A(z) on F_{q^k} with the pole convention tau_A(-d/c) = a/c."""
    F = ctx.Fqk
    if A.c == 0:
        return F.mul(F.add(F.mul(A.a, z), A.b), F.inv(A.d))
    den = F.add(F.mul(A.c, z), A.d)
    if den == 0:
        return F.mul(A.a, F.inv(A.c))
    return F.mul(F.add(F.mul(A.a, z), A.b), F.inv(den))


def moebius_poly_rep(ctx, A):
    """The element of G_k whose evaluation map is tau_A on F_{q^k}."""
    Fq = ctx.Fq
    if A.field.key != Fq.key:
        raise PreconditionError("matrix entries must lie in F_q of the context")
    Q = ctx.Q
    if A.c == 0:
        dinv = Fq.inv(A.d)
        P = Poly(Fq, [Fq.mul(A.b, dinv), Fq.mul(A.a, dinv)])
    else:
        u = Fq.neg(Fq.mul(A.d, Fq.inv(A.c)))
        eps = Fq.mul(A.a, Fq.inv(A.det()))
        base = Poly(Fq, [A.d, A.c])
        inv_part = Poly.one(Fq)
        sq = base
        e = Q - 2
        while e:
            if e & 1:
                inv_part = fold_mod(inv_part * sq, Q)
            e >>= 1
            if e:
                sq = fold_mod(sq * sq, Q)
        pole = np.zeros(Q, dtype=np.int64)
        if u == 0:
            pole[Q - 1] = 1
            pole[0] = Fq.neg(1)
        else:
            idx = (Q - 1 - np.arange(1, Q, dtype=np.int64)) % (ctx.q - 1)
            pows = np.array([Fq.pow(u, t) for t in range(ctx.q - 1)], dtype=np.int64)
            pole[1:] = pows[idx]
        P = fold_mod(Poly(Fq, [A.b, A.a]) * (inv_part + Poly(Fq, pole).scale(eps)), Q)
    out = certify_perm(ctx, P)
    els = ctx.Fqk.elements()
    expect = np.array([moebius_eval(ctx, A, int(z)) for z in els], dtype=np.int64)
    if not np.array_equal(perm_table(ctx, out), expect):
        raise InternalCheckError("Moebius representative disagrees with tau_A")
    return out


def pgl2_order(A):
    """Order of the class of A in PGL_2: least D >= 1 with A^D scalar."""
    q = A.field.order
    bound = q * (q - 1) * (q + 1)
    cur = A
    D = 1
    while not cur.is_scalar():
        cur = cur @ A
        D += 1
        if D > bound:
            raise InternalCheckError("PGL_2 order exceeded q(q-1)(q+1)")
    return D


def is_degree_preserving_form(F):
    """Whether F has the shape a x^(p^h) + b with a != 0."""
    if F.degree < 1:
        raise PreconditionError("degree-preserving form needs degree >= 1")
    p = F.field.p
    support = [i for i in range(1, F.degree + 1) if F.coeff(i) != 0]
    if len(support) != 1:
        return False
    i = support[0]
    while i % p == 0:
        i //= p
    return i == 1


def _pth_root(F):
    p = F.field.p
    e = p ** (F.field.deg - 1)
    return Poly(F.field, [F.field.pow(F.coeff(p * i), e)
                          for i in range(F.degree // p + 1)])


def check_degree_preserving(F, bound):
    """Empirically test the degree-preserving consequences of F on C_j, j <= bound.

    A fully degree-preserving F restricts to a bijection of every C_j (so a
    degree drop or a collision within C_j refutes it) and every fiber
    F(x) = c consists of a single closure root of full multiplicity (two
    constant shifts of the p-power-reduced F suffice to refute any other
    coefficient pattern). F must be a polynomial over the canonically
    constructed F_q (lex-smallest modulus), since the check builds the
    degree-j extensions itself.
    """
    if F.degree < 1:
        raise PreconditionError("degree-preserving check needs degree >= 1")
    p, m = F.field.p, F.field.deg
    G = F
    while G.derivative().is_zero:
        G = _pth_root(G)
    dG = G.derivative()
    for c in (0, 1):
        H = G - Poly.const(G.field, c)
        if (H // poly_gcd(H, dG)).degree != 1:
            return False
    for j in range(1, bound + 1):
        ctx = make_field_ctx(p, m, j)
        if ctx.Fq.key != F.field.key:
            raise PreconditionError("F is not over the canonical F_q")
        C = enumerate_Ck(ctx)
        vals = ctx.Fqk.keval(F.coeffs, C)
        if len(np.unique(vals)) != len(C):
            return False
        for ell in numth.factorint(j):
            if np.any(ctx.Fqk.vpow(vals, ctx.q ** (j // ell)) == vals):
                return False
    return True

"""Field tower contexts F_p <= F_q <= F_{q^k}.

A FieldCtx bundles the three fields of the tower together with the moduli
that define them. Elements of every level are integer encodings; an element
of a subfield keeps the same encoding in the extension, so subfield
membership is an order comparison.
"""

import numpy as np

from . import numth
from .errors import GuardExceeded, InternalCheckError, PreconditionError
from .fields import GF
from .polys import Poly, first_irreducible, is_irreducible

DEFAULT_GUARD = 1 << 20


class FieldCtx:
    """Immutable tower F_p -> F_q = F_p[z]/(base_modulus) -> F_{q^k} = F_q[y]/(ext_modulus)."""

    __slots__ = ("p", "m", "k", "q", "Q", "Fp", "Fq", "Fqk",
                 "base_modulus", "ext_modulus", "guard", "key")

    def __repr__(self):
        return "FieldCtx(p=%d, m=%d, k=%d)" % (self.p, self.m, self.k)


_CTX_CACHE = {}


def make_field_ctx(p, m, k, ext_modulus=None, guard=DEFAULT_GUARD):
    """Build the tower context for q = p^m and the degree-k extension.

    When ext_modulus is absent the lexicographically smallest monic
    irreducible of degree k over F_q is used (coefficients compared from the
    constant term upward by integer encoding), so construction is
    deterministic. A supplied modulus must be monic, degree k, irreducible.
    """
    if m < 1 or k < 1:
        raise PreconditionError("m and k must be positive")
    q = p ** m
    Q = q ** k
    if Q > guard:
        raise GuardExceeded("q^k = %d exceeds the exhaustive-operation guard %d" % (Q, guard))

    cache_key = (p, m, k,
                 None if ext_modulus is None
                 else tuple(int(c) for c in (ext_modulus.coeffs if isinstance(ext_modulus, Poly)
                                             else np.asarray(ext_modulus, dtype=np.int64))))
    if cache_key in _CTX_CACHE:
        return _CTX_CACHE[cache_key]

    ctx = FieldCtx()
    ctx.p, ctx.m, ctx.k, ctx.q, ctx.Q, ctx.guard = p, m, k, q, Q, guard
    ctx.Fp = GF.prime(p)
    if m == 1:
        ctx.Fq = ctx.Fp
        ctx.base_modulus = None
    else:
        ctx.base_modulus = first_irreducible(ctx.Fp, m)
        ctx.Fq = GF.extension(ctx.Fp, ctx.base_modulus.coeffs)

    if ext_modulus is None:
        ext_modulus = first_irreducible(ctx.Fq, k)
    else:
        if isinstance(ext_modulus, Poly):
            ext_modulus = Poly(ctx.Fq, ext_modulus.coeffs)
        else:
            ext_modulus = Poly(ctx.Fq, ext_modulus)
        if ext_modulus.degree != k or ext_modulus.leading() != 1:
            raise PreconditionError("extension modulus must be monic of degree k")
        if not is_irreducible(ext_modulus):
            raise PreconditionError("extension modulus is reducible over F_q")
    ctx.ext_modulus = ext_modulus
    ctx.Fqk = ctx.Fq if k == 1 else GF.extension(ctx.Fq, ext_modulus.coeffs)
    ctx.key = (p, m, k, tuple(int(c) for c in ext_modulus.coeffs))
    _CTX_CACHE[cache_key] = ctx
    return ctx


def ext_mul(ctx, a, b):
    return ctx.Fqk.mul(a, b)


def ext_inv(ctx, a):
    return ctx.Fqk.inv(a)


def ext_pow(ctx, a, e):
    return ctx.Fqk.pow(a, e)


def frobenius(ctx, a, j=1):
    """a^(q^j) in F_{q^k}."""
    return ctx.Fqk.pow(a, ctx.q ** (j % ctx.k if ctx.k > 1 else 0))


def element_degree(ctx, a):
    """The least s dividing k with a^(q^s) = a."""
    for s in numth.divisors(ctx.k):
        if frobenius(ctx, a, s) == a:
            return s
    raise InternalCheckError("element fixed by no divisor-power of Frobenius")


def conjugates(ctx, a):
    """[a, a^q, ..., a^(q^(d-1))] with d the degree of a."""
    out = [a]
    cur = frobenius(ctx, a)
    while cur != a:
        out.append(cur)
        cur = frobenius(ctx, cur)
    return out


def minimal_poly(ctx, a):
    """Minimal polynomial of a over F_q, as a Poly over F_q."""
    prod = Poly.from_roots(ctx.Fqk, conjugates(ctx, a))
    if np.any(prod.coeffs >= ctx.q):
        raise InternalCheckError("minimal polynomial has a coefficient outside F_q")
    return Poly(ctx.Fq, prod.coeffs)


def enumerate_Ck(ctx):
    """All elements of F_{q^k} of degree exactly k, ascending encodings."""
    els = ctx.Fqk.elements()
    keep = np.ones(ctx.Q, dtype=bool)
    for ell in numth.factorint(ctx.k):
        d = ctx.k // ell
        keep &= ctx.Fqk.vpow(els, ctx.q ** d) != els
    if ctx.k == 1:
        keep[:] = True
    out = els[keep]
    expect = sum(numth.moebius(ctx.k // d) * ctx.q ** d for d in numth.divisors(ctx.k))
    if len(out) != expect:
        raise InternalCheckError("|C_k| = %d, expected %d" % (len(out), expect))
    return out


def roots_in_ext(ctx, f):
    """Ascending encodings of the roots of f in F_{q^k}.

    f is a Poly over F_q; its coefficients embed into F_{q^k} unchanged.
    """
    if f.is_zero:
        raise PreconditionError("zero polynomial has every element as a root")
    vals = ctx.Fqk.keval(f.coeffs, ctx.Fqk.elements())
    return np.nonzero(vals == 0)[0].astype(np.int64)


def distinguished_root(ctx, f):
    """The smallest-encoding root of f in F_{q^k}."""
    roots = roots_in_ext(ctx, f)
    if len(roots) == 0:
        raise PreconditionError("polynomial has no root in F_{q^k}")
    return int(roots[0])


def embed_poly(ctx, f):
    """Reinterpret a Poly over F_q as a Poly over F_{q^k} (same encodings)."""
    if f.field.key == ctx.Fqk.key:
        return f
    return Poly(ctx.Fqk, f.coeffs)


def restrict_poly(ctx, f):
    """Reinterpret a Poly over F_{q^k} with subfield coefficients as over F_q."""
    if f.field.key == ctx.Fq.key:
        return f
    if not f.is_zero and np.any(f.coeffs >= ctx.q):
        raise PreconditionError("polynomial has a coefficient outside F_q")
    return Poly(ctx.Fq, f.coeffs)

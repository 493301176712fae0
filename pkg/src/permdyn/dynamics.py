"""Star and diamond compositions, fixed points, and cycle structure on C_k and I_k."""

import json
import math
from fractions import Fraction

import numpy as np

from .context import distinguished_root, element_degree, embed_poly, enumerate_Ck, minimal_poly
from .errors import InternalCheckError, PreconditionError
from .numth import divisors, euler_phi, is_prime, moebius, mult_order_int
from .orders import fq_order, mult_order, norm_of, phi_q, poly_order, trace_of
from .permgroup import _coerce_poly, pgl2_order
from .polys import (
    Poly,
    compose,
    count_irreducibles,
    enumerate_irreducibles,
    factor,
    is_irreducible,
    poly_gcd,
    powmod,
    psi_d,
)

__all__ = [
    "FunctionalGraph",
    "CycleSpectrum",
    "star",
    "diamond",
    "fixed_points_direct",
    "fixed_count_formula",
    "fixed_count_monomial",
    "fixed_count_linearized",
    "fixed_count_prime_monomial",
    "fixed_count_prime_linearized",
    "graph_Ck",
    "graph_Ik",
    "period_Ck",
    "period_Ik",
    "spectrum_Ck",
    "spectrum_Ik",
    "monomial_cycle_structure",
    "linearized_cycle_structure",
    "moebius_cycle_structure",
    "moebius_star",
    "invariant_report",
]


class FunctionalGraph:
    """Cycle decomposition of a permutation acting on a finite node set."""

    __slots__ = ("nodes", "cycles", "summary")

    def __init__(self, nodes, cycles):
        self.nodes = list(nodes)
        self.cycles = [list(c) for c in cycles]
        counts = {}
        for c in self.cycles:
            counts[len(c)] = counts.get(len(c), 0) + 1
        self.summary = list(counts.items())
        if sum(n * cnt for n, cnt in self.summary) != len(self.nodes):
            raise InternalCheckError("cycles do not partition the node set")

    def to_dot(self):
        """DOT text with one subgraph per cycle and an edge from each node to its image."""
        lines = ["digraph G {"]
        for idx, cyc in enumerate(self.cycles):
            lines.append("  subgraph cluster_%d {" % idx)
            for j, a in enumerate(cyc):
                lines.append('    "%s" -> "%s";' % (a, cyc[(j + 1) % len(cyc)]))
            lines.append("  }")
        lines.append("}")
        return "\n".join(lines)

    def to_json(self):
        """JSON text with the node list, the cycle lists, and the (length, count) summary."""
        return json.dumps({"nodes": self.nodes, "cycles": self.cycles, "summary": self.summary})


class CycleSpectrum:
    """Multiset of cycle lengths with the distinct-length set and its minimum."""

    __slots__ = ("lengths", "S", "mu")

    def __init__(self, lengths):
        if not lengths:
            raise PreconditionError("spectrum of an empty graph is undefined")
        self.lengths = sorted(int(n) for n in lengths)
        self.S = sorted(set(self.lengths))
        self.mu = self.S[0]


def _check_member(ctx, f):
    if f.field.key != ctx.Fq.key:
        raise PreconditionError("polynomial does not lie over F_q of the context")
    if f.degree != ctx.k or f.leading() != 1 or not is_irreducible(f):
        raise PreconditionError("expected a monic irreducible of degree k")


def star(ctx, P, f):
    """P*f = gcd(f(P(x)), x^(q^k) - x), the unique degree-k irreducible factor of f(P)."""
    P = _coerce_poly(ctx, P)
    _check_member(ctx, f)
    g = compose(f, P)
    x = Poly.x(ctx.Fq)
    out = poly_gcd(powmod(x, ctx.Q, g) - x, g).monic()
    if out.degree != ctx.k or not is_irreducible(out):
        raise InternalCheckError("star image is not an irreducible of degree k")
    return out


def diamond(ctx, P, f):
    """Minimal polynomial of P(alpha) for a root alpha of f."""
    P = _coerce_poly(ctx, P)
    _check_member(ctx, f)
    beta = embed_poly(ctx, P)(distinguished_root(ctx, f))
    out = minimal_poly(ctx, beta)
    if out.degree != ctx.k:
        raise InternalCheckError("diamond image does not have degree k")
    return out


def fixed_points_direct(ctx, P):
    """All f in I_k with P*f = f, through the criterion gcd(f, x^(q^i) - P) != 1."""
    P = _coerce_poly(ctx, P)
    x = Poly.x(ctx.Fq)
    out = []
    for f in enumerate_irreducibles(ctx.Fq, ctx.k):
        Pm = P % f
        t = x % f
        for _ in range(ctx.k):
            if poly_gcd(t - Pm, f).degree > 0:
                out.append(f)
                break
            t = powmod(t, ctx.q, f)
    return out


def fixed_count_formula(ctx, P):
    """Number of star-fixed elements of I_k, by the Moebius divisor sum.

    Both the divisor sum and deg gcd(prod_i (x^(q^i) - P), Psi_k) / k are
    evaluated; disagreement is a hard error.
    """
    P = _coerce_poly(ctx, P)
    q, k = ctx.q, ctx.k
    x = Poly.x(ctx.Fq)
    one = Poly.one(ctx.Fq)

    total = Fraction(0)
    for d in divisors(k):
        mu = moebius(k // d)
        if mu == 0:
            continue
        inner = 0
        for i in range(d):
            A = one.shift(q ** i) - P
            if A.is_zero:
                inner += q ** d
                continue
            if A.degree == 0:
                continue
            t = x % A
            for _ in range(d):
                t = powmod(t, q, A)
            inner += poly_gcd(t - x % A, A).degree
        total += Fraction(mu * inner, d)
    if total.denominator != 1 or total < 0:
        raise InternalCheckError("divisor sum is not a nonnegative integer")

    psi = psi_d(ctx.Fq, k)
    R = one
    t = x % psi
    Pm = P % psi
    for _ in range(k):
        R = (R * (t - Pm)) % psi
        t = powmod(t, q, psi)
    if poly_gcd(R, psi).degree != int(total) * k:
        raise InternalCheckError("fixed-point count evaluations disagree")
    return int(total)


def fixed_count_monomial(ctx, n):
    """Fixed-point count of x^n on I_k, by the closed arithmetic form."""
    q, k = ctx.q, ctx.k
    if math.gcd(n, q ** k - 1) != 1:
        raise PreconditionError("n must be coprime to q^k - 1")
    total = Fraction(1 if k == 1 else 0)
    for d in divisors(k):
        mu = moebius(k // d)
        if mu == 0:
            continue
        inner = sum(math.gcd(q ** i - n, q ** d - 1) for i in range(d))
        total += Fraction(mu * inner, d)
    if total.denominator != 1 or total < 0:
        raise InternalCheckError("monomial fixed-point sum is not a nonnegative integer")
    return int(total)


def fixed_count_linearized(ctx, h):
    """Fixed-point count of the q-associate map of h on I_k, by the closed form."""
    q, k = ctx.q, ctx.k
    if h.field.key != ctx.Fq.key:
        raise PreconditionError("h must lie over F_q of the context")
    one = Poly.one(ctx.Fq)
    xk1 = one.shift(k) - one
    if h.is_zero or poly_gcd(h, xk1).degree != 0:
        raise PreconditionError("h must be coprime to x^k - 1")
    h = h % xk1
    total = Fraction(0)
    for d in divisors(k):
        mu = moebius(k // d)
        if mu == 0:
            continue
        xd1 = one.shift(d) - one
        inner = sum(q ** poly_gcd(one.shift(i) - h, xd1).degree for i in range(d))
        total += Fraction(mu * inner, d)
    if total.denominator != 1 or total < 0:
        raise InternalCheckError("linearized fixed-point sum is not a nonnegative integer")
    return int(total)


def fixed_count_prime_monomial(q, k, n):
    """Fixed-point count of x^n on I_k in the case (q^k - 1)/(q - 1) prime."""
    r = (q ** k - 1) // (q - 1)
    if not is_prime(r):
        raise PreconditionError("(q^k - 1)/(q - 1) must be prime")
    if math.gcd(n, q ** k - 1) != 1:
        raise PreconditionError("n must be coprime to q^k - 1")
    if n % r not in {pow(q, i, r) for i in range(k)}:
        return 0
    quo, rem = divmod(r - 1, k)
    if rem:
        raise InternalCheckError("k does not divide r - 1")
    return quo * math.gcd(n - 1, q - 1)


def fixed_count_prime_linearized(q, k, f):
    """Fixed-point count of the q-associate map of f on I_k in the prime-k case."""
    field = f.field
    if field.order != q:
        raise PreconditionError("f must lie over F_q")
    if not is_prime(k):
        raise PreconditionError("k must be prime")
    one = Poly.one(field)
    xk1 = one.shift(k) - one
    T = xk1 // (Poly.x(field) - one)
    if not is_irreducible(T):
        raise PreconditionError("(x^k - 1)/(x - 1) must be irreducible over F_q")
    if f.is_zero or poly_gcd(f, xk1).degree != 0:
        raise PreconditionError("f must be coprime to x^k - 1")
    f = f % xk1
    is_power = np.count_nonzero(f.coeffs) == 1 and f.leading() == 1
    if q % 2 == 0 and k == 2:
        return count_irreducibles(q, k) if is_power else 0
    if is_power:
        return count_irreducibles(q, k)
    for i in range(k):
        g = f - one.shift(i)
        if g.degree == T.degree and g.monic() == T:
            quo, rem = divmod(q ** (k - 1) - 1, k)
            if rem:
                raise InternalCheckError("k does not divide q^(k-1) - 1")
            return quo
    return 0


def _walk_cycles(keys, image):
    index = {a: i for i, a in enumerate(keys)}
    seen = [False] * len(keys)
    cycles = []
    for start, a in enumerate(keys):
        if seen[start]:
            continue
        seen[start] = True
        cyc = [a]
        b = image[a]
        while b != a:
            pos = index.get(b)
            if pos is None or seen[pos]:
                raise InternalCheckError("map is not a permutation of the node set")
            seen[pos] = True
            cyc.append(b)
            b = image[b]
        cycles.append(cyc)
    return cycles


def graph_Ck(ctx, P):
    """Functional graph of the evaluation map of P on C_k."""
    P = _coerce_poly(ctx, P)
    els = enumerate_Ck(ctx)
    imgs = embed_poly(ctx, P).eval_many(els)
    if not np.array_equal(np.sort(imgs), els):
        raise PreconditionError("P does not permute C_k")
    keys = [int(a) for a in els]
    image = dict(zip(keys, (int(b) for b in imgs)))
    return FunctionalGraph(keys, _walk_cycles(keys, image))


def graph_Ik(ctx, P):
    """Functional graph of f -> P*f on I_k."""
    P = _coerce_poly(ctx, P)
    polys = enumerate_irreducibles(ctx.Fq, ctx.k)
    image = {f: star(ctx, P, f) for f in polys}
    if len(set(image.values())) != len(polys):
        raise PreconditionError("P does not act bijectively on I_k")
    cycles = _walk_cycles(polys, image)
    return FunctionalGraph([str(f) for f in polys], [[str(f) for f in c] for c in cycles])


def period_Ck(ctx, P, alpha):
    """Least n >= 1 whose n-th iterate of P fixes alpha."""
    P = _coerce_poly(ctx, P)
    alpha = int(alpha)
    if element_degree(ctx, alpha) != ctx.k:
        raise PreconditionError("alpha does not have degree k over F_q")
    Pe = embed_poly(ctx, P)
    cur = Pe(alpha)
    n = 1
    while cur != alpha:
        cur = Pe(cur)
        n += 1
        if n > ctx.Q:
            raise InternalCheckError("orbit of alpha did not close")
    return n


def period_Ik(ctx, P, f):
    """Least n >= 1 whose n-th star iterate of P fixes f."""
    P = _coerce_poly(ctx, P)
    _check_member(ctx, f)
    cur = star(ctx, P, f)
    n = 1
    while cur != f:
        cur = star(ctx, P, cur)
        n += 1
        if n > ctx.Q:
            raise InternalCheckError("orbit of f did not close")
    return n


def spectrum_Ck(ctx, P):
    """Cycle-length spectrum of the evaluation map of P on C_k."""
    return CycleSpectrum([len(c) for c in graph_Ck(ctx, P).cycles])


def spectrum_Ik(ctx, P):
    """Cycle-length spectrum of the star action of P on I_k."""
    return CycleSpectrum([len(c) for c in graph_Ik(ctx, P).cycles])


def monomial_cycle_structure(q, k, n):
    """Cycle summary of x^n on C_k from orders of n modulo divisors of q^k - 1."""
    if math.gcd(n, q ** k - 1) != 1:
        raise PreconditionError("n must be coprime to q^k - 1")
    agg = {}
    for e in divisors(q ** k - 1):
        if mult_order_int(q, e) != k:
            continue
        o = mult_order_int(n, e)
        agg[o] = agg.get(o, 0) + euler_phi(e) // o
    return sorted(agg.items())


def linearized_cycle_structure(q, k, f):
    """Cycle summary of the q-associate map of f on C_k from divisors of x^k - 1."""
    field = f.field
    if field.order != q:
        raise PreconditionError("f must lie over F_q")
    one = Poly.one(field)
    xk1 = one.shift(k) - one
    if f.is_zero or poly_gcd(f, xk1).degree != 0:
        raise PreconditionError("f must be coprime to x^k - 1")
    x = Poly.x(field)
    agg = {}
    for g in _monic_divisors(xk1):
        if (1 if g.degree == 0 else poly_order(x, g)) != k:
            continue
        o = 1 if g.degree == 0 else poly_order(f, g)
        phi = 1 if g.degree == 0 else phi_q(g)
        agg[o] = agg.get(o, 0) + phi // o
    return sorted(agg.items())


def _monic_divisors(f):
    divs = [Poly.one(f.field)]
    for p, mult in factor(f):
        powers = [Poly.one(f.field)]
        for _ in range(mult):
            powers.append(powers[-1] * p)
        divs = [d * pw for d in divs for pw in powers]
    return divs


def moebius_cycle_structure(q, k, A):
    """Cycle summary [(D, |C_k|/D)] of the Moebius map of A on C_k, for k >= 3."""
    if A.field.order != q:
        raise PreconditionError("matrix entries must lie over F_q")
    if k < 3:
        raise PreconditionError("the Moebius cycle structure needs k >= 3")
    D = pgl2_order(A)
    n_k = sum(moebius(k // d) * q ** d for d in divisors(k))
    quo, rem = divmod(n_k, D)
    if rem:
        raise InternalCheckError("PGL_2 class order does not divide |C_k|")
    return [(D, quo)]


def moebius_star(ctx, A, f):
    """Star action of the Moebius map of A on f, by clearing denominators."""
    if A.field.key != ctx.Fq.key:
        raise PreconditionError("matrix entries must lie in F_q of the context")
    if ctx.k < 2:
        raise PreconditionError("the Moebius star action needs k >= 2")
    _check_member(ctx, f)
    k = ctx.k
    num = Poly(ctx.Fq, [A.b, A.a])
    den = Poly(ctx.Fq, [A.d, A.c])
    denpow = [Poly.one(ctx.Fq)]
    for _ in range(k):
        denpow.append(denpow[-1] * den)
    acc = Poly.zero(ctx.Fq)
    numpow = Poly.one(ctx.Fq)
    for i in range(k + 1):
        c = f.coeff(i)
        if c:
            acc = acc + (numpow * denpow[k - i]).scale(c)
        if i < k:
            numpow = numpow * num
    out = acc.monic()
    if out.degree != k or not is_irreducible(out):
        raise InternalCheckError("Moebius star image is not an irreducible of degree k")
    return out


def _monomial_exponent(P):
    nz = np.flatnonzero(P.coeffs)
    if len(nz) == 1 and nz[0] >= 1 and P.coeff(int(nz[0])) == 1:
        return int(nz[0])
    return None


def _linearized_associate(P):
    q = P.field.order
    if P.is_zero:
        return None
    out = {}
    for e in (int(t) for t in np.flatnonzero(P.coeffs)):
        i, r = 0, e
        while r > 1 and r % q == 0:
            r //= q
            i += 1
        if r != 1:
            return None
        out[i] = P.coeff(e)
    h = np.zeros(max(out) + 1, dtype=np.int64)
    for i, c in out.items():
        h[i] = c
    return Poly(P.field, h)


def invariant_report(ctx, P, f):
    """Check the order, norm, and trace relations that apply to P's family.

    Monomials x^n preserve multiplicative order and send the norm a to
    a^(n0) with n*n0 = 1 mod q^k - 1; q-associate maps of h preserve the
    additive order and send the trace a to h(1)^(-1) a.
    """
    P = _coerce_poly(ctx, P)
    _check_member(ctx, f)
    Pf = star(ctx, P, f)
    report = {
        "ord_preserved": None,
        "fq_order_preserved": None,
        "norm_relation": None,
        "trace_relation": None,
    }
    n = _monomial_exponent(P)
    if n is not None:
        if math.gcd(n, ctx.Q - 1) != 1:
            raise PreconditionError("monomial exponent is not coprime to q^k - 1")
        n0 = pow(n, -1, ctx.Q - 1)
        report["ord_preserved"] = mult_order(ctx, Pf) == mult_order(ctx, f)
        report["norm_relation"] = norm_of(ctx, Pf) == ctx.Fq.pow(norm_of(ctx, f), n0)
        return report
    h = _linearized_associate(P)
    if h is not None:
        c = ctx.Fq.inv(h(1))
        report["fq_order_preserved"] = fq_order(ctx, Pf) == fq_order(ctx, f)
        report["trace_relation"] = trace_of(ctx, Pf) == ctx.Fq.mul(c, trace_of(ctx, f))
        return report
    raise PreconditionError("no invariant proposition applies to this permutation")

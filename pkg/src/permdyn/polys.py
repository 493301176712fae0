"""Dense univariate polynomials over a GF, and the classical algorithms
(gcd, modular exponentiation, irreducibility, factorization) that the rest
of the package builds on.

Coefficients are stored ascending as int64 encodings, so coeffs[i] is the
coefficient of x^i. The zero polynomial has an empty coefficient array and
degree -1.
"""

import random

import numpy as np

from . import numth
from .errors import PreconditionError


class Poly:
    """Polynomial over a GF with ascending integer-encoded coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        arr = np.asarray(coeffs, dtype=np.int64)
        n = len(arr)
        while n > 0 and arr[n - 1] == 0:
            n -= 1
        self.field = field
        self.coeffs = np.array(arr[:n], dtype=np.int64)

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [1])

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def const(cls, field, c):
        return cls(field, [c])

    @classmethod
    def from_roots(cls, field, roots):
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, [field.neg(int(r)), 1])
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return len(self.coeffs) == 0

    def leading(self):
        if self.is_zero:
            raise PreconditionError("zero polynomial has no leading coefficient")
        return int(self.coeffs[-1])

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return int(self.coeffs[i])
        return 0

    def encoding(self):
        """Integer encoding with radix |field|, constant term least significant."""
        enc = 0
        for c in reversed(self.coeffs):
            enc = enc * self.field.order + int(c)
        return enc

    @classmethod
    def from_encoding(cls, field, enc):
        coeffs = []
        while enc:
            coeffs.append(enc % field.order)
            enc //= field.order
        return cls(field, coeffs)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = a.copy()
        if len(b):
            out[:len(b)] = self.field.vadd(a[:len(b)], b)
        return Poly(self.field, out)

    def __neg__(self):
        return Poly(self.field, self.field.vneg(self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        return Poly(self.field, self.field.kconv(self.coeffs, other.coeffs))

    def scale(self, c):
        if c == 0:
            return Poly.zero(self.field)
        return Poly(self.field, self.field.vmul_scalar(self.coeffs, c))

    def shift(self, n):
        """Multiply by x^n."""
        if self.is_zero:
            return self
        return Poly(self.field, np.concatenate([np.zeros(n, dtype=np.int64), self.coeffs]))

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def monic(self):
        if self.is_zero:
            return self
        lead = self.leading()
        if lead == 1:
            return self
        return self.scale(self.field.inv(lead))

    def derivative(self):
        if self.degree < 1:
            return Poly.zero(self.field)
        ks = np.arange(1, len(self.coeffs), dtype=np.int64) % self.field.p
        return Poly(self.field, self.field.vmul(self.coeffs[1:], ks))

    def __call__(self, x):
        if self.is_zero:
            return 0
        return int(self.field.keval(self.coeffs, np.array([x], dtype=np.int64))[0])

    def eval_many(self, xs):
        xs = np.asarray(xs, dtype=np.int64)
        if self.is_zero:
            return np.zeros_like(xs)
        return self.field.keval(self.coeffs, xs)

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field.key == other.field.key
                and self.coeffs.shape == other.coeffs.shape
                and bool(np.all(self.coeffs == other.coeffs)))

    def __hash__(self):
        return hash((self.field.key, tuple(int(c) for c in self.coeffs)))

    def __str__(self):
        from .textio import format_poly
        return format_poly(self)

    def __repr__(self):
        return "Poly(%r, %s)" % (self.field, [int(c) for c in self.coeffs])


def poly_divmod(a, b):
    if b.is_zero:
        raise PreconditionError("polynomial division by zero")
    if a.degree < b.degree:
        return Poly.zero(a.field), a
    if b.degree == 0:
        return a.scale(a.field.inv(b.leading())), Poly.zero(a.field)
    q, r = a.field.kdivmod(a.coeffs, b.coeffs)
    return Poly(a.field, q), Poly(a.field, r)


def poly_gcd(a, b):
    """Monic greatest common divisor."""
    if a.is_zero and b.is_zero:
        raise PreconditionError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def powmod(base, e, mod):
    """base^e reduced mod `mod`, by square and multiply."""
    if mod.degree < 1:
        raise PreconditionError("powmod modulus must have degree >= 1")
    if e < 0:
        raise PreconditionError("powmod exponent must be >= 0")
    acc = Poly.one(base.field)
    sq = base % mod
    while e:
        if e & 1:
            acc = (acc * sq) % mod
        e >>= 1
        if e:
            sq = (sq * sq) % mod
    return acc


def compose(f, g):
    """f(g(x)), unreduced."""
    acc = Poly.zero(f.field)
    for c in reversed(f.coeffs):
        acc = acc * g + Poly.const(f.field, int(c))
    return acc


def compose_mod(f, g, mod):
    """f(g(x)) mod `mod`."""
    acc = Poly.zero(f.field)
    g = g % mod
    for c in reversed(f.coeffs):
        acc = (acc * g) % mod + Poly.const(f.field, int(c))
    return acc % mod


def fold_mod(f, Q=None):
    """Reduce f modulo x^Q - x by exponent folding (Q defaults to |field|).

    Exponent t >= 1 folds to 1 + (t - 1) mod (Q - 1), which preserves the
    induced map on the Q-element field without materializing x^Q - x. An
    explicit Q supports polynomials whose coefficients live in a subfield.
    """
    field = f.field
    if Q is None:
        Q = field.order
    if f.degree < Q:
        return f
    idx = np.arange(len(f.coeffs), dtype=np.int64)
    tgt = np.where(idx == 0, 0, 1 + (idx - 1) % (Q - 1))
    out = np.zeros(Q, dtype=np.int64)
    if field.mode == "prime":
        np.add.at(out, tgt, f.coeffs)
        out %= field.p
    else:
        p = field.p
        for j in range(field.deg):
            plane = np.zeros(Q, dtype=np.int64)
            np.add.at(plane, tgt, f.coeffs // p ** j % p)
            out += plane % p * p ** j
    return Poly(field, out)


def is_irreducible(f):
    """Rabin irreducibility test over the coefficient field."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    field = f.field
    q = field.order
    x = Poly.x(field)
    for ell in numth.factorint(n):
        h = powmod(x, q ** (n // ell), f) - x
        if poly_gcd(h, f).degree != 0:
            return False
    return powmod(x, q ** n, f) == x % f


def first_irreducible(field, k):
    """Monic irreducible of degree k with the smallest coefficient encoding."""
    for enc in range(field.order ** k):
        f = Poly.from_encoding(field, enc + field.order ** k)
        if is_irreducible(f):
            return f
    raise PreconditionError("no irreducible of degree %d found" % k)


def enumerate_irreducibles(field, k):
    """All monic irreducibles of degree k, ascending by coefficient encoding."""
    lead = field.order ** k
    return [f for enc in range(lead)
            for f in [Poly.from_encoding(field, enc + lead)] if is_irreducible(f)]


def count_irreducibles(q, k):
    """Number of monic irreducibles of degree k over a field of q elements."""
    total = sum(numth.moebius(k // d) * q ** d for d in numth.divisors(k))
    return total // k


def psi_d(field, d):
    """Product of all monic irreducibles of degree exactly d over the field."""
    q = field.order
    coeffs = np.zeros(q ** d + 1, dtype=np.int64)
    coeffs[-1] = 1
    coeffs[1] = field.neg(1)
    out = Poly(field, coeffs)
    for e in numth.divisors(d):
        if e == d:
            continue
        quo, rem = poly_divmod(out, psi_d(field, e))
        if not rem.is_zero:
            raise ArithmeticError("splitting polynomial division left a remainder")
        out = quo
    return out


def _squarefree_parts(f):
    """Char-p squarefree decomposition: list of (multiplicity, squarefree factor)."""
    field = f.field
    p = field.p
    out = []
    c = poly_gcd(f, f.derivative())
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((i, z))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        root = np.zeros(c.degree // p + 1, dtype=np.int64)
        for j in range(len(root)):
            root[j] = field.pow(c.coeff(j * p), field.order // p)
        for mult, g in _squarefree_parts(Poly(field, root)):
            out.append((mult * p, g))
    return out


def _distinct_degree(f):
    """(degree, product-of-factors) pairs for a squarefree monic f."""
    field = f.field
    q = field.order
    x = Poly.x(field)
    out = []
    h = x
    cur = f
    i = 0
    while cur.degree > 0:
        i += 1
        if 2 * i > cur.degree:
            out.append((cur.degree, cur))
            break
        h = powmod(h % cur, q, cur)
        g = poly_gcd(h - x, cur)
        if g.degree > 0:
            out.append((i, g))
            cur = cur // g
            h = h % cur
    return out


def _equal_degree(f, d, rng):
    """Cantor-Zassenhaus split of a squarefree product of degree-d irreducibles."""
    if f.degree == d:
        return [f]
    field = f.field
    q = field.order
    while True:
        u = Poly(field, [rng.randrange(q) for _ in range(f.degree)])
        if u.degree < 1:
            continue
        if q % 2 == 1:
            v = powmod(u, (q ** d - 1) // 2, f) - Poly.one(field)
        else:
            e = d * field.deg
            v = u
            sq = u
            for _ in range(e - 1):
                sq = (sq * sq) % f
                v = v + sq
        g = poly_gcd(v, f)
        if 0 < g.degree < f.degree:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def factor(f, seed=0):
    """Monic irreducible factorization as a list of (factor, multiplicity).

    The output is sorted by (degree, coefficient encoding), so it does not
    depend on the seed of the splitting randomness.
    """
    if f.is_zero:
        raise PreconditionError("cannot factor the zero polynomial")
    if f.degree == 0:
        return []
    rng = random.Random(seed)
    found = []
    for mult, g in _squarefree_parts(f.monic()):
        for d, prod in _distinct_degree(g):
            for irr in _equal_degree(prod, d, rng):
                found.append((irr, mult))
    found.sort(key=lambda t: (t[0].degree, t[0].encoding()))
    return found


def q_associate(h):
    """The linearized q-associate L_h = sum h_i x^(q^i) as a dense Poly.

    q is the order of the coefficient field of h.
    """
    if h.is_zero:
        return Poly.zero(h.field)
    q = h.field.order
    out = np.zeros(q ** h.degree + 1, dtype=np.int64)
    for i in range(h.degree + 1):
        out[q ** i] = h.coeff(i)
    return Poly(h.field, out)


def linearized_eval(h, ext, alpha):
    """Evaluate L_h at alpha, an element of the extension field `ext`.

    Coefficients of h embed into ext as initial-segment encodings.
    """
    q = h.field.order
    acc = 0
    for i in range(h.degree + 1):
        c = h.coeff(i)
        if c:
            acc = ext.add(acc, ext.mul(c, ext.pow(alpha, q ** i)))
    return acc

"""Finite fields with integer-encoded elements.

A field of p^n elements stores each element as an integer in [0, p^n): the
base-p digits of the encoding are the coordinates with respect to the
F_p-basis (1, z, ..., z^{n-1}), extended blockwise through tower steps.
Under this encoding a scalar c of the base field of a tower embeds as the
same integer c, so subfield membership of a tower scalar is just c < q.

Fields of prime order compute directly mod p. Proper extensions precompute
exp/log tables over the whole multiplicative group (desk-scale guard keeps
these small), built once by locating a generator and filling its powers
blockwise with matrix doubling.
"""

import numpy as np

from . import _kernels, numth
from .errors import PreconditionError


class GF:
    """A finite field; elements are plain ints in [0, order)."""

    def __init__(self, *, _token=None):
        if _token is not self._TOKEN:
            raise TypeError("use GF.prime(p) or GF.extension(base, modulus)")

    _TOKEN = object()

    @classmethod
    def prime(cls, p):
        """The prime field of p elements."""
        if not numth.is_prime(p):
            raise PreconditionError("%d is not prime" % p)
        self = cls(_token=cls._TOKEN)
        self.p = p
        self.deg = 1
        self.order = p
        self.base = None
        self.modulus = None
        self.mode = "prime"
        self.exp = None
        self.log = None
        self.generator = None
        self.key = ("prime", p)
        return self

    @classmethod
    def extension(cls, base, modulus):
        """Extension of `base` by a monic irreducible `modulus` of degree >= 2.

        `modulus` is an ascending coefficient array of base-field encodings.
        Irreducibility is the caller's responsibility; a reducible modulus is
        detected here only through the failing generator search.
        """
        modulus = np.asarray(modulus, dtype=np.int64)
        r = len(modulus) - 1
        if r < 2:
            raise PreconditionError("extension degree must be >= 2")
        if modulus[-1] != 1:
            raise PreconditionError("modulus must be monic")
        self = cls(_token=cls._TOKEN)
        self.p = base.p
        self.deg = base.deg * r
        self.order = base.order ** r
        self.base = base
        self.modulus = modulus
        self.mode = "table"
        self.key = ("ext", base.key, tuple(int(c) for c in modulus))
        self._build_tables(base, modulus, r)
        return self

    # -- table construction -------------------------------------------------

    def _build_tables(self, base, modulus, r):
        Q = self.order
        p = self.p
        n = self.deg

        def vec_mul(u, v):
            # schoolbook product of length-r vectors over base, reduced mod modulus
            prod = [0] * (2 * r - 1)
            for i, ui in enumerate(u):
                if ui == 0:
                    continue
                for j, vj in enumerate(v):
                    if vj:
                        prod[i + j] = base.add(prod[i + j], base.mul(ui, vj))
            for d in range(2 * r - 2, r - 1, -1):
                c = prod[d]
                if c == 0:
                    continue
                prod[d] = 0
                for j in range(r):
                    mj = modulus[j]
                    if mj:
                        prod[d - r + j] = base.sub(prod[d - r + j], base.mul(c, int(mj)))
            return prod[:r]

        def vec_pow(u, e):
            acc = [1] + [0] * (r - 1)
            sq = list(u)
            while e:
                if e & 1:
                    acc = vec_mul(acc, sq)
                e >>= 1
                if e:
                    sq = vec_mul(sq, sq)
            return acc

        def to_vec(enc):
            out = []
            for _ in range(r):
                out.append(enc % base.order)
                enc //= base.order
            return out

        one = [1] + [0] * (r - 1)
        prime_factors = list(numth.factorint(Q - 1))
        gen_vec = None
        for enc in range(2, Q):
            cand = to_vec(enc)
            if all(vec_pow(cand, (Q - 1) // ell) != one for ell in prime_factors):
                gen_vec = cand
                self.generator = enc
                break
        if gen_vec is None:
            raise ArithmeticError("no multiplicative generator found; modulus reducible?")

        # F_p-matrix of multiplication by the generator, columns indexed by basis digits
        def digits_p(enc):
            out = np.zeros(n, dtype=np.int64)
            for i in range(n):
                out[i] = enc % p
                enc //= p
            return out

        def vec_to_enc(vec):
            enc = 0
            for c in reversed(vec):
                enc = enc * base.order + c
            return enc

        M = np.zeros((n, n), dtype=np.int64)
        for j in range(n):
            basis = [0] * r
            basis[j // base.deg] = base.p ** (j % base.deg)
            M[:, j] = digits_p(vec_to_enc(vec_mul(gen_vec, basis)))

        exp_dig = np.zeros((Q - 1, n), dtype=np.int64)
        exp_dig[0, 0] = 1
        Mcur = M
        filled = 1
        while filled < Q - 1:
            take = min(filled, Q - 1 - filled)
            exp_dig[filled:filled + take] = exp_dig[:take] @ Mcur.T % p
            filled += take
            if filled < Q - 1:
                Mcur = Mcur @ Mcur % p

        pp = p ** np.arange(n, dtype=np.int64)
        exp_enc = exp_dig @ pp
        log = np.zeros(Q, dtype=np.int64)
        log[exp_enc] = np.arange(Q - 1)
        if exp_enc[0] != 1 or len(np.unique(exp_enc)) != Q - 1:
            raise ArithmeticError("exp table degenerate; modulus reducible?")
        self.exp = np.concatenate([exp_enc, exp_enc[:Q - 2]])
        self.log = log

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a, b):
        if self.mode == "prime":
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out, shift = 0, 1
        for _ in range(self.deg):
            out += ((a // shift + b // shift) % self.p) * shift
            shift *= self.p
        return out

    def neg(self, a):
        if self.mode == "prime":
            return (-a) % self.p
        if self.p == 2:
            return a
        out, shift = 0, 1
        for _ in range(self.deg):
            out += ((self.p - a // shift % self.p) % self.p) * shift
            shift *= self.p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.mode == "prime":
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a):
        if a == 0:
            raise PreconditionError("inversion of zero")
        if self.mode == "prime":
            return pow(a, self.p - 2, self.p)
        qm1 = self.order - 1
        return int(self.exp[(qm1 - self.log[a]) % qm1])

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self.mode == "prime":
            return pow(a, e, self.p)
        qm1 = self.order - 1
        return int(self.exp[self.log[a] * (e % qm1) % qm1])

    # -- vectorized arithmetic on encoding arrays ----------------------------

    def vadd(self, xs, ys):
        return _kernels.vadd(xs, ys, self.p, self.deg)

    def vneg(self, xs):
        if self.mode == "prime":
            return (-xs) % self.p
        if self.p == 2:
            return xs
        out = np.zeros_like(xs)
        shift = 1
        for _ in range(self.deg):
            out += ((self.p - xs // shift % self.p) % self.p) * shift
            shift *= self.p
        return out

    def vmul(self, xs, ys):
        if self.mode == "prime":
            return xs * ys % self.p
        nz = (xs != 0) & (ys != 0)
        lx = self.log[np.where(xs != 0, xs, 1)]
        ly = self.log[np.where(ys != 0, ys, 1)]
        return np.where(nz, self.exp[lx + ly], 0)

    def vmul_scalar(self, xs, c):
        if self.mode == "prime":
            return xs * c % self.p
        if c == 0:
            return np.zeros_like(xs)
        nz = xs != 0
        return np.where(nz, self.exp[self.log[np.where(nz, xs, 1)] + self.log[c]], 0)

    def vsum(self, xs):
        """Field sum of an array of encodings."""
        if self.mode == "prime":
            return int(xs.sum() % self.p)
        total = 0
        shift = 1
        for _ in range(self.deg):
            total += int((xs // shift % self.p).sum() % self.p) * shift
            shift *= self.p
        return total

    def vpow(self, xs, e):
        if self.mode == "prime":
            out = np.ones_like(xs)
            base_ = xs % self.p
            ee = e
            while ee:
                if ee & 1:
                    out = out * base_ % self.p
                base_ = base_ * base_ % self.p
                ee >>= 1
            if e > 0:
                out[xs == 0] = 0
            return out
        qm1 = self.order - 1
        nz = xs != 0
        out = self.exp[self.log[np.where(nz, xs, 1)] * (e % qm1) % qm1]
        out = np.where(nz, out, 0)
        if e == 0:
            out = np.ones_like(xs)
        return out

    # -- kernel adapters for dense polynomials over this field ---------------

    def kconv(self, a, b):
        if self.mode == "prime":
            return _kernels.conv_p(a, b, self.p)
        return _kernels.conv_t(a, b, self.exp, self.log, self.p, self.deg)

    def kdivmod(self, a, b):
        inv_lead = self.inv(int(b[-1]))
        if self.mode == "prime":
            return _kernels.divmod_p(a, b, self.p, inv_lead)
        return _kernels.divmod_t(a, b, self.exp, self.log, self.p, self.deg, inv_lead)

    def keval(self, coeffs, xs):
        if self.mode == "prime":
            return _kernels.eval_p(coeffs, xs, self.p)
        return _kernels.eval_t(coeffs, xs, self.exp, self.log, self.p, self.deg)

    # -- encodings ------------------------------------------------------------

    def decompose(self, a):
        """Base-p digit vector (length deg) of an encoding."""
        out = []
        for _ in range(self.deg):
            out.append(a % self.p)
            a //= self.p
        return out

    def compose(self, digits):
        """Encoding of a base-p digit vector."""
        enc = 0
        for d in reversed(list(digits)):
            enc = enc * self.p + d % self.p
        return enc

    def elements(self):
        return np.arange(self.order, dtype=np.int64)

    def __eq__(self, other):
        return isinstance(other, GF) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.mode == "prime":
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.deg)

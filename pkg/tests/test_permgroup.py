import itertools

import numpy as np
import pytest

from permdyn.context import distinguished_root, frobenius, make_field_ctx
from permdyn.errors import InternalCheckError, PreconditionError
from permdyn.permgroup import (
    Matrix2, PermPoly, certify_perm, check_degree_preserving, frobenius_stable,
    gk_compose, gk_inverse, is_degree_preserving_form, lagrange_interpolate_all,
    moebius_eval, moebius_poly_rep, perm_table, pgl2_order, realize_permutation,
)
from permdyn.polys import Poly, enumerate_irreducibles
from permdyn.textio import parse_poly

CTX24 = make_field_ctx(2, 1, 4)
CTX25 = make_field_ctx(2, 1, 5)
CTX33 = make_field_ctx(3, 1, 3)


def P(ctx, text):
    return parse_poly(ctx.Fq, text)


def _mono(ctx, n):
    return Poly.one(ctx.Fq).shift(n)


def test_certify_accepts_coprime_monomials():
    pp = certify_perm(CTX24, _mono(CTX24, 7))
    assert isinstance(pp, PermPoly)
    assert str(pp) == "x^7"
    table = perm_table(CTX24, pp)
    assert sorted(table.tolist()) == list(range(16))


def test_certify_rejects_non_permutation():
    with pytest.raises(PreconditionError):
        certify_perm(CTX24, _mono(CTX24, 3))  # gcd(3, 15) = 3
    with pytest.raises(PreconditionError):
        certify_perm(CTX33, P(CTX33, "x^2"))


def test_certify_folds_high_degree():
    pp = certify_perm(CTX25, _mono(CTX25, 33))
    assert pp.poly == _mono(CTX25, 2)  # x^33 = x^2 on F_32


def test_certify_rejects_foreign_context():
    pp = certify_perm(CTX24, _mono(CTX24, 7))
    with pytest.raises(PreconditionError):
        certify_perm(CTX25, pp)


def test_permpoly_identity_and_equality():
    a = certify_perm(CTX24, _mono(CTX24, 7))
    b = certify_perm(CTX24, _mono(CTX24, 7))
    c = certify_perm(CTX24, _mono(CTX24, 2))
    assert a == b and hash(a) == hash(b)
    assert a != c
    assert len({a, b, c}) == 2


def test_gk_compose_monomials():
    a = certify_perm(CTX24, _mono(CTX24, 2))
    b = certify_perm(CTX24, _mono(CTX24, 4))
    assert gk_compose(CTX24, a, b).poly == _mono(CTX24, 8)
    assert gk_compose(CTX24, a, a).poly == _mono(CTX24, 4)
    # composition matches the value tables
    c = certify_perm(CTX24, P(CTX24, "x^4+x^2+x"))
    comp = gk_compose(CTX24, a, c)
    ta, tc = perm_table(CTX24, a), perm_table(CTX24, c)
    assert np.array_equal(perm_table(CTX24, comp), ta[tc])


def test_gk_inverse():
    a = certify_perm(CTX24, _mono(CTX24, 2))
    inv = gk_inverse(CTX24, a)
    assert inv.poly == _mono(CTX24, 8)  # 2 * 8 = 16 = 1 mod 15
    ident = gk_compose(CTX24, a, inv)
    assert ident.poly == Poly.x(CTX24.Fq)
    b = certify_perm(CTX33, P(CTX33, "x^3+x"))
    binv = gk_inverse(CTX33, b)
    assert gk_compose(CTX33, b, binv).poly == Poly.x(CTX33.Fq)
    assert gk_compose(CTX33, binv, b).poly == Poly.x(CTX33.Fq)


def test_frobenius_stable():
    assert frobenius_stable(CTX24, P(CTX24, "x^7+x^2+1"))
    f = Poly(CTX24.Fqk, [2, 1])  # constant outside F_2
    assert not frobenius_stable(CTX24, f)


def test_lagrange_interpolates_tables():
    ident = lagrange_interpolate_all(CTX24, np.arange(16, dtype=np.int64))
    assert ident == Poly.x(CTX24.Fqk)
    sq = CTX24.Fqk.vpow(CTX24.Fqk.elements(), 2)
    assert lagrange_interpolate_all(CTX24, sq) == Poly(CTX24.Fqk, [0, 0, 1])
    rng = np.random.default_rng(2)
    vals = rng.integers(0, 27, size=27)
    g = lagrange_interpolate_all(CTX33, vals)
    assert np.array_equal(g.eval_many(CTX33.Fqk.elements()), vals)
    with pytest.raises(PreconditionError):
        lagrange_interpolate_all(CTX24, np.arange(15, dtype=np.int64))


def test_realize_identity_and_swap():
    ident = realize_permutation(CTX24, [0, 1, 2])
    assert ident.poly == Poly.x(CTX24.Fq)
    swap = realize_permutation(CTX24, {0: 1, 1: 0, 2: 2})
    irr = enumerate_irreducibles(CTX24.Fq, 4)
    table = perm_table(CTX24, swap)
    a = distinguished_root(CTX24, irr[0])
    b = distinguished_root(CTX24, irr[1])
    for _ in range(4):
        assert table[a] == b
        a, b = frobenius(CTX24, a), frobenius(CTX24, b)
    for c in range(CTX24.q):
        assert table[c] == c


def test_realize_pair_form_matches_list_form():
    via_pairs = realize_permutation(CTX33, [[i, (i + 1) % 8] for i in range(8)])
    via_list = realize_permutation(CTX33, [(i + 1) % 8 for i in range(8)])
    assert via_pairs == via_list


def test_realize_rejects_bad_sigma():
    for bad in ([0, 0, 1], [0, 1], {0: 0, 1: 1}, [[0, 1], [0, 2], [1, 0], [2, 2]],
                [0, 1, 3]):
        with pytest.raises(PreconditionError):
            realize_permutation(CTX24, bad)


def test_matrix2_basics():
    F3 = CTX33.Fq
    A = Matrix2(F3, 1, 2, 1, 1)
    assert A.det() == F3.sub(1, 2) == 2
    assert not A.is_scalar()
    assert Matrix2.identity(F3).is_scalar()
    I = Matrix2.identity(F3)
    assert A @ I == A and I @ A == A
    with pytest.raises(PreconditionError):
        Matrix2(F3, 1, 1, 1, 1)  # singular
    with pytest.raises(PreconditionError):
        Matrix2(F3, 1, 0, 0, 3)  # entry outside field


def test_pgl2_order_pins():
    F3 = CTX33.Fq
    assert pgl2_order(Matrix2.identity(F3)) == 1
    assert pgl2_order(Matrix2(F3, 2, 0, 0, 2)) == 1  # scalar
    assert pgl2_order(Matrix2(F3, 1, 1, 0, 1)) == 3  # unipotent: order p
    assert pgl2_order(Matrix2(F3, 0, 1, 1, 0)) == 2
    F2 = CTX24.Fq
    assert pgl2_order(Matrix2(F2, 0, 1, 1, 1)) == 3


def test_pgl2_order_divides_group_order():
    F3 = CTX33.Fq
    for a, b, c, d in itertools.product(range(3), repeat=4):
        try:
            A = Matrix2(F3, a, b, c, d)
        except PreconditionError:
            continue
        assert 24 % pgl2_order(A) == 0  # |PGL_2(F_3)| = 24


def test_moebius_eval_pole_convention():
    A = Matrix2(CTX33.Fq, 1, 1, 1, 2)  # tau(z) = (z+1)/(z+2)
    F = CTX33.Fqk
    pole = F.neg(F.mul(A.d, F.inv(A.c)))
    assert moebius_eval(CTX33, A, pole) == F.mul(A.a, F.inv(A.c))
    assert moebius_eval(CTX33, A, 0) == F.inv(2)


def test_moebius_eval_is_bijection():
    for A in (Matrix2(CTX24.Fq, 1, 1, 1, 0), Matrix2(CTX33.Fq, 2, 1, 1, 1)):
        ctx = CTX24 if A.field.order == 2 else CTX33
        imgs = sorted(moebius_eval(ctx, A, z) for z in range(ctx.Q))
        assert imgs == list(range(ctx.Q))


def test_moebius_poly_rep_affine_case():
    rep = moebius_poly_rep(CTX24, Matrix2(CTX24.Fq, 1, 1, 0, 1))
    assert rep.poly == P(CTX24, "x+1")


def test_moebius_poly_rep_matches_eval_map():
    for field, ctx in ((CTX24.Fq, CTX24), (CTX33.Fq, CTX33)):
        seen = 0
        for a, b, c, d in itertools.product(range(ctx.q), repeat=4):
            try:
                A = Matrix2(field, a, b, c, d)
            except PreconditionError:
                continue
            seen += 1
            rep = moebius_poly_rep(ctx, A)
            expect = np.array([moebius_eval(ctx, A, z) for z in range(ctx.Q)])
            assert np.array_equal(perm_table(ctx, rep), expect)
            if seen >= 10:
                break
        assert seen


def test_moebius_rep_respects_composition_on_Ck():
    # the pole convention only collapses points of F_q, so the composition
    # law tau_A . tau_B = tau_AB holds verbatim on the degree-k elements
    from permdyn.context import enumerate_Ck
    F2 = CTX24.Fq
    A = Matrix2(F2, 1, 1, 1, 0)
    B = Matrix2(F2, 0, 1, 1, 0)
    tA = perm_table(CTX24, moebius_poly_rep(CTX24, A))
    tB = perm_table(CTX24, moebius_poly_rep(CTX24, B))
    tAB = perm_table(CTX24, moebius_poly_rep(CTX24, A @ B))
    Ck = enumerate_Ck(CTX24)
    assert np.array_equal(tA[tB[Ck]], tAB[Ck])


@pytest.mark.parametrize("text,want", [
    ("x", True), ("x^2", True), ("x^4+1", True), ("x^3", False),
    ("x^2+x", False), ("x^8+1", True), ("x^6", False),
])
def test_is_degree_preserving_form_f2(text, want):
    F = parse_poly(CTX24.Fp, text)
    assert is_degree_preserving_form(F) == want


def test_is_degree_preserving_form_f3():
    F3 = CTX33.Fq
    assert is_degree_preserving_form(parse_poly(F3, "2x^3+2"))
    assert is_degree_preserving_form(parse_poly(F3, "x^9+1"))
    assert not is_degree_preserving_form(parse_poly(F3, "x^6"))
    assert not is_degree_preserving_form(parse_poly(F3, "x^3+x"))
    with pytest.raises(PreconditionError):
        is_degree_preserving_form(Poly.const(F3, 1))


def test_check_degree_preserving():
    F2 = CTX24.Fp
    assert check_degree_preserving(parse_poly(F2, "x^2+1"), 4)
    assert not check_degree_preserving(parse_poly(F2, "x^3"), 4)
    F3 = CTX33.Fq
    assert check_degree_preserving(parse_poly(F3, "2x^3+1"), 3)
    assert not check_degree_preserving(parse_poly(F3, "x^2"), 3)

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from contactlie.coeff import Poly, variables
from contactlie.exterior import (
    DegreeError,
    Dx,
    Form,
    KindError,
    MultiVec,
    apply_vector,
    contract_tilde,
    d,
    dx,
    evaluate,
    flat,
    interior,
    lie_form,
    merge_sign,
    pair,
    schouten,
    sharp,
    sort_sign,
    wedge,
)
from contactlie.sampling import random_form, random_multivec, random_poly

N = 1
x0, x1, x2 = variables(N)
seeds = st.integers(0, 10**6)


# independent oracles


def vec_bracket(X: MultiVec, Y: MultiVec) -> MultiVec:
    """[X, Y]^k = X(Y^k) - Y(X^k), componentwise."""
    n = X.n
    comps = {}
    for k in range(2 * n + 1):
        comps[(k,)] = apply_vector(X, Y.coeff(k)) - apply_vector(Y, X.coeff(k))
    return MultiVec(n, 1, comps)


def wedge_all(vs, n):
    out = MultiVec.one(n)
    for v in vs:
        out = wedge(out, v)
    return out


def decomposable_bracket(xs, ys) -> MultiVec:
    """Sum over i, j of (-1)^(i+j) [X_i, Y_j] ^ (X without i) ^ (Y without j)."""
    n = xs[0].n
    total = MultiVec.zero(n, len(xs) + len(ys) - 1)
    for i, X in enumerate(xs, 1):
        for j, Y in enumerate(ys, 1):
            rest = xs[: i - 1] + xs[i:] + ys[: j - 1] + ys[j:]
            t = wedge(vec_bracket(X, Y), wedge_all(rest, n))
            total = total + (t if (i + j) % 2 == 0 else -t)
    return total


def rvec(rng, deg=2):
    return random_multivec(rng, N, 1, deg)


# sign helpers


def test_merge_and_sort_sign():
    assert merge_sign((1,), (0,)) == (-1, (0, 1))
    assert merge_sign((0, 2), (1,)) == (-1, (0, 1, 2))
    assert merge_sign((0,), (0,)) == (0, None)
    assert sort_sign((2, 1, 0)) == (-1, (0, 1, 2))
    assert sort_sign((1, 2, 0)) == (1, (0, 1, 2))


def test_pairing_is_determinant():
    assert pair(dx(N, 1, 2), Dx(N, 1, 2)) == 1
    assert pair(dx(N, 1, 2), Dx(N, 0, 2)) == 0
    assert evaluate(dx(N, 1, 2), Dx(N, 1), Dx(N, 2)) == 1
    assert evaluate(dx(N, 1, 2), Dx(N, 2), Dx(N, 1)) == -1
    with pytest.raises(DegreeError):
        pair(dx(N, 1), Dx(N, 1, 2))


def test_kind_mismatch():
    with pytest.raises(KindError):
        wedge(dx(N, 1), Dx(N, 2))
    with pytest.raises(KindError):
        dx(N, 1) + Dx(N, 1)


def test_zero_objects_compare_equal():
    assert Form.zero(N, 2) == Form.zero(N, 0)
    assert Form.zero(N, 1) == 0
    assert (dx(N, 1) - dx(N, 1)).is_zero()


def test_d_examples():
    alpha = dx(N, 0) + dx(N, 2).scale(x1)
    assert d(alpha) == dx(N, 1, 2)
    assert d(Form.scalar(x1 * x2)) == dx(N, 1).scale(x2) + dx(N, 2).scale(x1)


def test_contract_tilde_examples():
    w = Dx(N, 0, 1, 2)
    assert contract_tilde(w, dx(N, 0)) == Dx(N, 1, 2)
    assert contract_tilde(w, dx(N, 1)) == -Dx(N, 0, 2)
    assert contract_tilde(w, dx(N, 1, 2)) == Dx(N, 0)
    with pytest.raises(DegreeError):
        contract_tilde(Dx(N, 1), dx(N, 1, 2))


def test_schouten_on_low_degrees():
    X = Dx(N, 1).scale(x2)
    assert schouten(X, MultiVec.scalar(x2 ** 2)) == MultiVec.scalar(Poly.zero(N))
    assert schouten(X, MultiVec.scalar(x1)) == MultiVec.scalar(x2)
    assert schouten(MultiVec.scalar(x1), X) == MultiVec.scalar(-x2)
    assert schouten(MultiVec.scalar(x1), MultiVec.scalar(x2)).is_zero()
    # [x2 D1, D2] = -D1
    assert schouten(X, Dx(N, 2)) == -Dx(N, 1)


@given(seeds)
def test_schouten_restricts_to_vector_bracket(seed):
    rng = random.Random(seed)
    X, Y = rvec(rng), rvec(rng)
    assert schouten(X, Y) == vec_bracket(X, Y)


@given(seeds, st.integers(1, 2), st.integers(1, 2))
def test_schouten_matches_decomposable_formula(seed, p, q):
    rng = random.Random(seed)
    xs = [rvec(rng, 1) for _ in range(p)]
    ys = [rvec(rng, 1) for _ in range(q)]
    assert schouten(wedge_all(xs, N), wedge_all(ys, N)) == decomposable_bracket(xs, ys)


def test_mu_mu_against_decomposable_formula():
    for n in (1, 2):
        x = variables(n)
        pieces = [[Dx(n, 2 * i - 1), Dx(n, 2 * i) - Dx(n, 0).scale(x[2 * i - 1])] for i in range(1, n + 1)]
        mu = MultiVec.zero(n, 2)
        for a, b in pieces:
            mu = mu + wedge(a, b)
        oracle = MultiVec.zero(n, 3)
        for a in pieces:
            for b in pieces:
                oracle = oracle + decomposable_bracket(a, b)
        assert schouten(mu, mu) == oracle
        expected = MultiVec.zero(n, 3)
        for i in range(1, n + 1):
            expected = expected + Dx(n, 2 * i, 2 * i - 1, 0).scale(2)
        assert oracle == expected


@given(seeds, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_schouten_graded_jacobi(seed, p, q, r):
    rng = random.Random(seed)
    u, v, w = (random_multivec(rng, N, k, 2) for k in (p, q, r))
    total = MultiVec.zero(N, max(p + q + r - 2, 0))
    for (a, da), (b, _), (c, dc) in (
        ((u, p), (v, q), (w, r)),
        ((v, q), (w, r), (u, p)),
        ((w, r), (u, p), (v, q)),
    ):
        t = schouten(a, schouten(b, c))
        total = total + (t if ((da - 1) * (dc - 1)) % 2 == 0 else -t)
    assert total.is_zero()


@given(seeds)
def test_koszul_formula_for_d(seed):
    rng = random.Random(seed)
    om = random_form(rng, N, 1, 3)
    X, Y = rvec(rng), rvec(rng)
    lhs = pair(d(om), wedge(X, Y))
    rhs = apply_vector(X, pair(om, Y)) - apply_vector(Y, pair(om, X)) - pair(om, vec_bracket(X, Y))
    assert lhs == rhs


@given(seeds, st.integers(0, 3))
def test_d_squared_and_tensoriality(seed, k):
    rng = random.Random(seed)
    a = random_form(rng, N, k, 3)
    assert d(d(a)).is_zero()
    f = random_poly(rng, N, 2)
    # d(f a) = df ^ a + f da
    assert d(a.scale(f)) == wedge(d(Form.scalar(f)), a) + d(a).scale(f)


@given(seeds, st.integers(1, 3))
def test_interior_antiderivation_and_cartan(seed, k):
    rng = random.Random(seed)
    X, Y = rvec(rng), rvec(rng)
    a = random_form(rng, N, k, 2)
    b = random_form(rng, N, 3 - k, 2) if k < 3 else Form.scalar(random_poly(rng, N, 2))
    lhs = interior(X, wedge(a, b))
    ib = wedge(a, interior(X, b))
    assert lhs == wedge(interior(X, a), b) + (ib if k % 2 == 0 else -ib)
    # [L_X, i_Y] = i_[X,Y]
    assert lie_form(X, interior(Y, a)) - interior(Y, lie_form(X, a)) == interior(vec_bracket(X, Y), a)


@given(seeds)
def test_flat_and_sharp_are_multiplicative(seed):
    rng = random.Random(seed)
    om = dx(N, 1, 2)
    mu = Dx(N, 0, 1).scale(x1) + Dx(N, 1, 2)
    u, v = rvec(rng), random_multivec(rng, N, 2, 2)
    assert flat(om, wedge(u, v)) == wedge(flat(om, u), flat(om, v))
    a, b = random_form(rng, N, 1, 2), random_form(rng, N, 1, 2)
    assert sharp(mu, wedge(a, b)) == wedge(sharp(mu, a), sharp(mu, b))
    # on 1-forms sharp is the contraction with mu
    assert sharp(mu, a) == contract_tilde(mu, a)
    # flat on vectors is i_X omega
    assert flat(om, u) == interior(u, om)


def test_evaluate_scalar_coefficients():
    th = dx(N, 0, 2).scale(Fraction(3, 2))
    assert evaluate(th, Dx(N, 0), Dx(N, 2).scale(x1)) == x1.scale(Fraction(3, 2))


def test_listed_examples():
    mu = Dx(N, 1, 2) - Dx(N, 1, 0).scale(x1)
    om = dx(N, 1, 2)
    alpha = dx(N, 0) + dx(N, 2).scale(x1)
    assert interior(Dx(N, 0), alpha) == 1
    assert interior(Dx(N, 0), om).is_zero()
    assert interior(Dx(N, 1), om) == dx(N, 2)
    assert lie_form(Dx(N, 1), alpha) == dx(N, 2)
    assert lie_form(Dx(N, 0), alpha).is_zero()
    assert schouten(Dx(N, 1), Dx(N, 2).scale(x1)) == Dx(N, 2)
    assert schouten(Dx(N, 0), mu).is_zero()
    assert flat(om, Dx(N, 1)) == dx(N, 2)
    assert flat(om, Dx(N, 2)) == -dx(N, 1)
    assert flat(om, Dx(N, 0)).is_zero()
    assert flat(om, mu) == om
    assert flat(om, MultiVec.one(N)) == 1
    assert sharp(mu, dx(N, 2)) == -Dx(N, 1)
    assert sharp(mu, dx(N, 1)) == Dx(N, 2) - Dx(N, 0).scale(x1)
    assert sharp(mu, Form.one(N)) == 1


@given(seeds)
def test_lie_derivative_identities(seed):
    rng = random.Random(seed)
    X, Y = rvec(rng), rvec(rng)
    f = random_poly(rng, N, 2)
    th = random_form(rng, N, rng.randint(0, 2), 2)
    fX = X.scale(f)
    assert lie_form(fX, th) == lie_form(X, th).scale(f) + wedge(d(Form.scalar(f)), interior(X, th))
    assert lie_form(X, d(th)) == d(lie_form(X, th))
    lhs = lie_form(X, lie_form(Y, th)) - lie_form(Y, lie_form(X, th))
    assert lhs == lie_form(vec_bracket(X, Y), th)
    assert interior(X, interior(X, th)).is_zero()


@given(seeds)
def test_d_is_tensorial_in_koszul_expansion(seed):
    rng = random.Random(seed)
    om = random_form(rng, N, 1, 2)
    X, Y = rvec(rng), rvec(rng)
    f = random_poly(rng, N, 2)

    def koszul(A, B):
        return apply_vector(A, pair(om, B)) - apply_vector(B, pair(om, A)) - pair(om, vec_bracket(A, B))

    assert koszul(X.scale(f), Y) == f * koszul(X, Y)

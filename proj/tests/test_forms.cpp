#include "doctest.h"

#include "edim/error.hpp"
#include "edim/forms.hpp"

#include <random>

using namespace edim;

namespace {

Rat small_rat(std::mt19937_64& rng, long h, bool nonzero = false) {
    long n = 0;
    do {
        n = long(rng() % (2 * h + 1)) - h;
    } while (nonzero && n == 0);
    return Rat(Int(n), Int(long(rng() % 3) + 1));
}

QuaternionElement random_elt(std::mt19937_64& rng, long h) {
    return {{small_rat(rng, h), small_rat(rng, h), small_rat(rng, h), small_rat(rng, h)}};
}

QMatrix random_matrix(const std::size_t n, std::mt19937_64& rng, long h) {
    QMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (rng() % 3) m(r, c) = random_elt(rng, h);
    return m;
}

// A random nondegenerate epsilon-hermitian form: a random congruence of a
// diagonal one, so nondegeneracy is guaranteed without trusting the code.
HermitianForm random_form(const QuaternionAlgebra& Q, int eps, std::size_t n, std::mt19937_64& rng) {
    std::vector<QuaternionElement> d;
    while (d.size() < n) {
        QuaternionElement x = eps == 1 ? QuaternionElement::scalar(small_rat(rng, 6, true))
                                       : pure_part(random_elt(rng, 4));
        if (Q.is_invertible(x)) d.push_back(x);
    }
    // Unipotent upper-triangular change of basis is always invertible.
    QMatrix U = QMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
            if (rng() % 2) U(r, c) = random_elt(rng, 2);
    return HermitianForm::diagonal(Q, eps, d).congruent(U);
}

void check_diagonalization(const HermitianForm& h, const Diagonalization& dz) {
    const auto& Q = h.algebra();
    auto lhs = multiply(Q, multiply(Q, dz.P.conj_transpose(), h.gram()), dz.P);
    CHECK(lhs == dz.form.gram());
    CHECK(multiply(Q, dz.P, dz.P_inv) == QMatrix::identity(h.size()));
    REQUIRE(dz.form.is_diagonal());
    for (auto& x : dz.form.entries()) {
        CHECK(Q.is_invertible(x));
        if (h.epsilon() == 1) CHECK(x.is_scalar());
        else CHECK(x.is_pure());
    }
}

}  // namespace

TEST_CASE("diagonalize examples") {
    QuaternionAlgebra H(Rat(-1), Rat(-1));
    auto d = HermitianForm::diagonal(H, 1, {QuaternionElement::scalar(2), QuaternionElement::scalar(3)});
    auto dz = diagonalize_form(d);
    CHECK(dz.form.gram() == d.gram());
    CHECK(dz.P == QMatrix::identity(2));

    QMatrix g(2);
    g(0, 1) = QuaternionElement::scalar(1);
    g(1, 0) = QuaternionElement::scalar(1);
    HermitianForm hyp(H, 1, g);
    auto dh = diagonalize_form(hyp);
    check_diagonalization(hyp, dh);
    CHECK(dh.form.entries()[0] == QuaternionElement::scalar(2));
    CHECK(dh.form.entries()[1] == QuaternionElement::scalar(Rat::parse("-1/2")));

    auto skew = HermitianForm::diagonal(H, -1, {H.i(), H.j()});
    auto ds = diagonalize_form(skew);
    CHECK(ds.form.gram() == skew.gram());
}

TEST_CASE("form validation") {
    QuaternionAlgebra H(Rat(-1), Rat(-1));
    QMatrix g(2);
    g(0, 0) = H.i();
    CHECK_THROWS_AS(HermitianForm(H, 1, g), AlgebraError);
    QMatrix z(2);
    z(0, 0) = QuaternionElement::scalar(1);
    try {
        HermitianForm(H, 1, z);
        FAIL("expected DEGENERATE_FORM");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == ErrorCode::DegenerateForm);
    }
    // Rank-one off-diagonal block: [[1, i],[-i, 1]] is singular.
    QMatrix s(2);
    s(0, 0) = QuaternionElement::scalar(1);
    s(1, 1) = QuaternionElement::scalar(1);
    s(0, 1) = H.i();
    s(1, 0) = -H.i();
    CHECK_THROWS_AS(HermitianForm(H, 1, s), AlgebraError);
}

TEST_CASE("diagonalization on random forms, division and split algebras") {
    std::mt19937_64 rng(31);
    std::vector<QuaternionAlgebra> algebras = {QuaternionAlgebra(Rat(-1), Rat(-1)), QuaternionAlgebra(Rat(1), Rat(1)),
                                               QuaternionAlgebra(Rat(-2), Rat(5)), QuaternionAlgebra(Rat(3), Rat(-7))};
    for (auto& Q : algebras)
        for (int eps : {1, -1})
            for (std::size_t n : {2u, 3u, 5u})
                for (int it = 0; it < 6; ++it) {
                    auto h = random_form(Q, eps, n, rng);
                    auto dz = diagonalize_form(h, 99);
                    check_diagonalization(h, dz);
                }
    // All-zero diagonal with an isotropic off-diagonal entry over M_2(Q).
    QuaternionAlgebra M(Rat(1), Rat(1));
    QMatrix g(2);
    g(0, 1) = QuaternionElement{{1, 1, 0, 0}};
    g(1, 0) = canonical_involution(g(0, 1));
    g(0, 0) = QuaternionElement::scalar(0);
    QMatrix g2 = g;
    g2(1, 1) = QuaternionElement::scalar(0);
    // 1 + i is a zero divisor in (1,1), so this gram is singular.
    CHECK_THROWS_AS(HermitianForm(M, 1, g2), AlgebraError);
}

TEST_CASE("adjoint involution") {
    std::mt19937_64 rng(37);
    QuaternionAlgebra Q(Rat(-3), Rat(2));
    for (std::size_t n : {2u, 3u, 5u}) {
        auto one = HermitianForm::diagonal(Q, 1, std::vector<QuaternionElement>(n, QuaternionElement::scalar(1)));
        AdjointInvolution s1(one);
        auto m = random_matrix(n, rng, 4);
        CHECK(s1.apply(m) == m.conj_transpose());
        for (int eps : {1, -1}) {
            AdjointInvolution sigma(random_form(Q, eps, n, rng));
            CHECK(sigma.apply(QMatrix::identity(n)) == QMatrix::identity(n));
            int trials = n == 5 ? 20 : 60;
            for (int it = 0; it < trials; ++it) {
                auto a = random_matrix(n, rng, 3), b = random_matrix(n, rng, 3);
                CHECK(sigma.apply(sigma.apply(a)) == a);
                CHECK(sigma.apply(multiply(Q, a, b)) == multiply(Q, sigma.apply(b), sigma.apply(a)));
            }
        }
    }
}

TEST_CASE("adjoint is unchanged by scaling the form") {
    std::mt19937_64 rng(41);
    QuaternionAlgebra Q(Rat(-1), Rat(-7));
    for (int eps : {1, -1}) {
        auto h = random_form(Q, eps, 3, rng);
        AdjointInvolution s(h), s2(h.scaled(Rat(2))), s3(h.scaled(Rat::parse("-5/3")));
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t l = 0; l < 3; ++l)
                for (int b = 0; b < 4; ++b) {
                    QuaternionElement e;
                    e.c[b] = 1;
                    auto E = QMatrix::unit(3, k, l, e);
                    CHECK(s.apply(E) == s2.apply(E));
                    CHECK(s.apply(E) == s3.apply(E));
                }
    }
}

TEST_CASE("involution type of adjoint involutions") {
    std::mt19937_64 rng(43);
    for (auto Q : {QuaternionAlgebra(Rat(-1), Rat(-1)), QuaternionAlgebra(Rat(1), Rat(-1))})
        for (std::size_t n : {1u, 2u, 3u}) {
            auto hp = random_form(Q, 1, n, rng);
            auto hm = random_form(Q, -1, n, rng);
            CHECK(adjoint_sym_dim(hp) == n * (2 * n - 1));
            CHECK(involution_type(hp) == InvolutionType::Symplectic);
            CHECK(involution_type(hm) == InvolutionType::Orthogonal);
        }
    CHECK_THROWS_AS(involution_type_from_sym_dim(5, 4), AlgebraError);
}

TEST_CASE("skew discriminant") {
    QuaternionAlgebra H(Rat(-1), Rat(-1));
    auto h = HermitianForm::diagonal(H, -1, {H.i(), H.j(), H.k()});
    CHECK(disc_skew(h).is_trivial());
    QuaternionAlgebra Q(Rat(-1), Rat(-5));
    auto h2 = HermitianForm::diagonal(Q, -1, {Q.i(), Q.i(), Q.j()});
    CHECK(disc_skew(h2).rep() == 5);
    CHECK(disc_skew(h2.scaled(Rat(7))).rep() == 5);

    std::mt19937_64 rng(47);
    for (int it = 0; it < 50; ++it) {
        std::vector<QuaternionElement> d;
        while (d.size() < 3) {
            auto x = pure_part(random_elt(rng, 4));
            if (Q.is_invertible(x)) d.push_back(x);
        }
        auto base = disc_skew(HermitianForm::diagonal(Q, -1, d));
        auto perm = d;
        std::swap(perm[0], perm[2]);
        CHECK(disc_skew(HermitianForm::diagonal(Q, -1, perm)) == base);
        auto u = random_elt(rng, 3);
        if (!Q.is_invertible(u)) continue;
        perm[1] = Q.mul(u, Q.mul(perm[1], canonical_involution(u)));
        CHECK(disc_skew(HermitianForm::diagonal(Q, -1, perm)) == base);
    }
}

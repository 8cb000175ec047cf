#include "doctest.h"
#include "oracles.hpp"

#include "edim/error.hpp"
#include "edim/etale.hpp"
#include "edim/field.hpp"
#include "edim/quadratic_field.hpp"

#include <random>

using namespace edim;

namespace {

Rat random_rat(std::mt19937_64& rng, long h) {
    long n = 0;
    while (n == 0) n = long(rng() % (2 * h + 1)) - h;
    long d = long(rng() % h) + 1;
    return Rat(Int(n), Int(d));
}

}  // namespace

TEST_CASE("rationals are canonical and round-trip through text") {
    Rat r = Rat::parse("-6/4");
    CHECK(r.str() == "-3/2");
    CHECK(Rat::parse("0/7").str() == "0");
    CHECK(Rat::parse("12").str() == "12");
    CHECK(Rat::parse(r.str()) == r);
    CHECK_THROWS_AS(Rat::parse("1/0"), AlgebraError);
    CHECK_THROWS_AS(Rat::parse("1.5"), AlgebraError);
    CHECK_THROWS_AS(Rat::parse(""), AlgebraError);
    CHECK_THROWS_AS(Rat::parse("3/-4"), AlgebraError);
}

TEST_CASE("square_class examples") {
    CHECK(square_class(Rat(18)).rep() == 2);
    CHECK(square_class(Rat::parse("-4/9")).rep() == -1);
    CHECK(square_class(Rat::parse("50/27")).rep() == 6);
    CHECK(square_class(Rat(1)).is_trivial());
    CHECK_THROWS_AS(square_class(Rat(0)), AlgebraError);
}

TEST_CASE("square_class is invariant under square multiples") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        Rat r = random_rat(rng, 500), s = random_rat(rng, 500);
        CHECK(square_class(r * s * s) == square_class(r));
        CHECK(square_class(r).rep() == oracle::squarefree_part(r.num().get_si() * r.den().get_si()));
    }
}

TEST_CASE("factorization budget is enforced") {
    // Two primes above the trial-division bound.
    Int p("1000000007"), q("998244353");
    Int n = p * q;
    auto f = factorize(n);
    REQUIRE(f.size() == 2);
    CHECK(f[0].prime == q);
    CHECK(f[1].prime == p);
    FactorBudget tiny;
    tiny.rho_iterations = 1;
    try {
        square_class(Rat(n), tiny);
        FAIL("expected FACTORIZATION_LIMIT");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == ErrorCode::FactorizationLimit);
    }
    // A large prime alone needs no rho work.
    CHECK(square_class(Rat(p), tiny).rep() == p);
}

TEST_CASE("rational_sqrt") {
    CHECK(*rational_sqrt(Rat::parse("49/4")) == Rat::parse("7/2"));
    CHECK_FALSE(rational_sqrt(Rat(2)).has_value());
    CHECK(*rational_sqrt(Rat::parse("15241383936/25")) == Rat::parse("123456/5"));
    CHECK_FALSE(rational_sqrt(Rat(-4)).has_value());
    CHECK(*rational_sqrt(Rat(0)) == Rat(0));
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        Rat r = random_rat(rng, 1000);
        if (auto s = rational_sqrt(r)) {
            CHECK(*s * *s == r);
        }
        if (!square_class(r).is_trivial()) CHECK_FALSE(rational_sqrt(r).has_value());
        auto t = rational_sqrt(r * r);
        REQUIRE(t.has_value());
        CHECK(*t == r.abs());
    }
}

TEST_CASE("hilbert_symbol examples") {
    auto inf = Place::infinite();
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), inf) == -1);
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::prime(Int(2))) == -1);
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::prime(Int(3))) == 1);
    for (long b : {-7L, -1L, 2L, 3L, 10L})
        for (long p : {2L, 3L, 5L, 7L})
            CHECK(hilbert_symbol(Rat(1), Rat(b), Place::prime(Int(p))) == 1);
    CHECK_THROWS_AS(Place::prime(Int(15)), AlgebraError);
    CHECK(Place::parse("inf") == inf);
    CHECK(Place::parse("7") == Place::prime(Int(7)));
}

TEST_CASE("hilbert_symbol agrees with brute-force solvability on a small box") {
    for (long a = -12; a <= 12; ++a)
        for (long b = -12; b <= 12; ++b) {
            if (a == 0 || b == 0) continue;
            for (long p : {2L, 3L, 5L, 7L, 11L})
                CHECK(hilbert_symbol(Rat(a), Rat(b), Place::prime(Int(p))) == oracle::hilbert_bruteforce(a, b, p));
            CHECK(hilbert_symbol(Rat(a), Rat(b), Place::infinite()) == oracle::hilbert_real(a, b));
        }
}

TEST_CASE("hilbert_symbol properties on rationals") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        Rat a = random_rat(rng, 60), b = random_rat(rng, 60);
        int product = 1;
        for (auto& v : relevant_places(a, b)) {
            int s = hilbert_symbol(a, b, v);
            product *= s;
            CHECK(s == hilbert_symbol(b, a, v));
            CHECK(hilbert_symbol(a, -a, v) == 1);
        }
        CHECK(product == 1);
    }
}

TEST_CASE("etale arithmetic") {
    EtaleQuadratic L(Rat(5));
    CHECK(L.shape() == EtaleQuadratic::Shape::Field);
    CHECK(L.norm({Rat(2), Rat(1)}) == Rat(-1));
    EtaleQuadratic L2(Rat(2));
    EtaleElement u{Rat(3), Rat(7)};
    CHECK(L2.conj(L2.conj(u)) == u);

    EtaleQuadratic S(Rat(9));
    CHECK(S.is_split());
    CHECK(S.root() == Rat(3));
    EtaleElement w{Rat(1), Rat(1)};
    auto [c1, c2] = S.components(w);
    CHECK(c1 == Rat(4));
    CHECK(c2 == Rat(-2));
    CHECK(S.norm(w) == Rat(-8));
    CHECK(S.norm(w) == c1 * c2);
    CHECK(S.from_components(c1, c2) == w);

    // 3 + sqrt 9 has components (6, 0): a zero divisor.
    CHECK_THROWS_AS(S.inv({Rat(3), Rat(1)}), AlgebraError);
    CHECK_THROWS_AS(L.inv({Rat(0), Rat(0)}), AlgebraError);
    EtaleElement v{Rat(2), Rat(1)};
    auto vi = L.inv(v);
    CHECK(L.mul(v, vi) == EtaleElement{Rat(1), Rat(0)});

    std::mt19937_64 rng(9);
    for (int it = 0; it < 100; ++it) {
        EtaleQuadratic E(random_rat(rng, 30));
        EtaleElement x{random_rat(rng, 20), random_rat(rng, 20)}, y{random_rat(rng, 20), random_rat(rng, 20)};
        CHECK(E.norm(E.mul(x, y)) == E.norm(x) * E.norm(y));
    }
}

TEST_CASE("quadratic field symbols restrict correctly from Q") {
    // For rational a, b: split places see the Q_p symbol, non-split finite
    // places are trivial (local degree 2), real places see the real symbol.
    std::mt19937_64 rng(21);
    for (long d : {-1L, 2L, 3L, 5L, -7L, 17L, 33L, -15L}) {
        QuadraticField K{Int(d)};
        for (int it = 0; it < 25; ++it) {
            Rat a = random_rat(rng, 40), b = random_rat(rng, 40);
            EtaleElement A{a, Rat(0)}, B{b, Rat(0)};
            auto ram = K.ramification(A, B);
            CHECK(ram.size() % 2 == 0);
            for (auto& v : relevant_places(a, b)) {
                Int p = v.is_infinite() ? Int(0) : v.p();
                for (auto& w : K.places_over(p)) {
                    int expected = (w.real || w.branch != 0) ? hilbert_symbol(a, b, v) : 1;
                    bool in_ram = std::find(ram.begin(), ram.end(), w) != ram.end();
                    CHECK(in_ram == (expected < 0));
                }
            }
        }
    }
}

TEST_CASE("quadratic field symbols: norms split, reciprocity, multiplicativity") {
    std::mt19937_64 rng(23);
    for (long d : {2L, -1L, 5L, -3L, 13L, 6L, 41L}) {
        QuadraticField K{Int(d)};
        Rat dd(d);
        auto mul = [&](const EtaleElement& u, const EtaleElement& v) {
            return EtaleElement{u.x * v.x + dd * u.y * v.y, u.x * v.y + u.y * v.x};
        };
        auto rand_elt = [&] { return EtaleElement{random_rat(rng, 15), random_rat(rng, 15)}; };
        for (int it = 0; it < 20; ++it) {
            EtaleElement alpha = rand_elt(), x = rand_elt(), y = rand_elt();
            // beta = x^2 - alpha y^2 is a norm from K(sqrt alpha).
            EtaleElement beta = mul(x, x);
            EtaleElement ay2 = mul(alpha, mul(y, y));
            beta = {beta.x - ay2.x, beta.y - ay2.y};
            if ((beta.x * beta.x - dd * beta.y * beta.y).is_zero()) continue;
            if ((alpha.x * alpha.x - dd * alpha.y * alpha.y).is_zero()) continue;
            CHECK(K.ramification(alpha, beta).empty());

            EtaleElement b1 = rand_elt(), b2 = rand_elt();
            auto r1 = K.ramification(alpha, b1);
            auto r2 = K.ramification(alpha, b2);
            auto r12 = K.ramification(alpha, mul(b1, b2));
            CHECK(r1.size() % 2 == 0);
            std::vector<QuadraticPlace> sym;
            std::set_symmetric_difference(r1.begin(), r1.end(), r2.begin(), r2.end(), std::back_inserter(sym));
            CHECK(sym == r12);
        }
    }
}

TEST_CASE("sqrt_mod_prime") {
    for (long p : {3L, 5L, 7L, 13L, 17L, 97L, 1009L}) {
        for (long n = 1; n < p; ++n) {
            Int s = sqrt_mod_prime(Int(n), Int(p));
            bool residue = false;
            for (long z = 1; z < p; ++z)
                if ((z * z) % p == n) residue = true;
            if (residue) {
                CHECK((s * s - n) % p == 0);
            } else {
                CHECK(s == -1);
            }
        }
    }
}

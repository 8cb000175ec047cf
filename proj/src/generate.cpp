#include "edim/generate.hpp"

#include "edim/error.hpp"

#include <algorithm>
#include <random>

namespace edim {

namespace {

class Sampler {
public:
    Sampler(std::uint64_t seed, long height) : rng_(seed), h_(std::max(height, 1L)) {}

    long uniform(long lo, long hi) { return lo + long(rng_() % std::uint64_t(hi - lo + 1)); }
    long nonzero(long h) {
        long v = uniform(-h + 1, h);
        return v <= 0 ? v - 1 : v;
    }
    bool chance(int percent) { return uniform(0, 99) < percent; }

    Rat rat_nonzero() { return Rat(Int(nonzero(h_)), Int(uniform(1, 5))); }
    Rat symbol_entry() { return Rat(nonzero(h_)); }

    QuaternionElement pure(long h) {
        QuaternionElement x;
        for (int k = 1; k < 4; ++k) x.c[k] = Rat(uniform(-h, h));
        return x;
    }
    QuaternionElement pure_invertible(const QuaternionAlgebra& Q, long h) {
        for (;;) {
            auto x = pure(h);
            if (Q.is_invertible(x)) return x;
        }
    }
    QuaternionElement small(long h) {
        QuaternionElement x;
        for (auto& c : x.c) c = Rat(uniform(-h, h));
        return x;
    }
    QuaternionElement invertible(const QuaternionAlgebra& Q, long h) {
        for (;;) {
            auto x = small(h);
            if (Q.is_invertible(x)) return x;
        }
    }

    // Unit upper-triangular, entries with coordinates in {-1,0,1}.
    QMatrix unipotent(std::size_t n) {
        QMatrix U = QMatrix::identity(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c)
                if (chance(50)) U(r, c) = small(1);
        return U;
    }

    // Basis change on a 4-dimensional algebra keeping e_0 = 1.
    RatMatrix unipotent4() {
        RatMatrix B = RatMatrix::identity(4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = std::max<std::size_t>(r + 1, 1); c < 4; ++c) B(r, c) = Rat(uniform(-1, 1));
        return B;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[std::size_t(uniform(0, long(k) - 1))]);
    }

    QuaternionAlgebra symbol() { return QuaternionAlgebra(symbol_entry(), symbol_entry()); }

private:
    std::mt19937_64 rng_;
    long h_;
};

HermitianForm hermitian(Sampler& s, std::size_t n) {
    auto Q = s.symbol();
    std::vector<QuaternionElement> d;
    for (std::size_t k = 0; k < n; ++k) d.push_back(QuaternionElement::scalar(s.rat_nonzero()));
    return HermitianForm::diagonal(Q, 1, d).congruent(s.unipotent(n));
}

HermitianForm skew(Sampler& s, std::size_t n) {
    auto Q = s.symbol();
    std::vector<QuaternionElement> d;
    for (std::size_t k = 0; k < n; ++k) d.push_back(s.pure_invertible(Q, 2));
    // Occasionally a dependent second entry, exercising the repair path.
    if (s.chance(10)) d[1] = d[0] * Rat(2);
    return HermitianForm::diagonal(Q, -1, d).congruent(s.unipotent(n));
}

HermitianForm skew_disc1(Sampler& s, std::size_t n) {
    auto Q = s.symbol();
    std::vector<QuaternionElement> d;
    // <p, q, pq> with p, q anticommuting: Nrd(p) Nrd(q) Nrd(pq) is a square.
    for (;;) {
        auto p = s.pure_invertible(Q, 2);
        auto q0 = s.pure(2);
        QuaternionElement q;
        try {
            q = q0 - anticommutation_shift(Q, p, q0) * p;
        } catch (const AlgebraError&) {
            continue;
        }
        if (!Q.is_invertible(q)) continue;
        d = {p, q, Q.mul(p, q)};
        break;
    }
    // <r, u r gamma(u)>: Nrd(r)^2 Nrd(u)^2.
    while (d.size() < n) {
        auto r = s.pure_invertible(Q, 2);
        auto u = s.invertible(Q, 1);
        d.push_back(r);
        d.push_back(Q.mul(u, Q.mul(r, canonical_involution(u))));
    }
    s.shuffle(d);
    return HermitianForm::diagonal(Q, -1, d).congruent(s.unipotent(n));
}

EtaleElement etale_invertible(Sampler& s, const EtaleQuadratic& L, bool rational) {
    for (;;) {
        EtaleElement x{s.rat_nonzero(), rational ? Rat(0) : Rat(s.nonzero(5))};
        if (L.is_invertible(x)) return x;
    }
}

Payload pgo4(Sampler& s) {
    if (s.chance(75)) {
        for (;;) {
            EtaleQuadratic L(s.symbol_entry());
            if (L.is_split()) continue;
            bool ra = s.chance(25), rb = s.chance(25);
            return EtaleQuaternionAlgebra{L, etale_invertible(s, L, ra), etale_invertible(s, L, rb)};
        }
    }
    auto Q1 = s.symbol();
    auto Q2 = s.chance(20) ? QuaternionAlgebra(s.symbol_entry(), Q1.b()) : s.symbol();
    return QuaternionPair{Q1, Q2};
}

InvolutiveAlgebra presented(Sampler& s, const QuaternionAlgebra& Q, const RatMatrix& sigma) {
    auto A = quaternion_structure(Q);
    InvolutiveAlgebra ia{A, LinearInvolution(A, sigma)};
    return change_basis(ia, s.unipotent4());
}

InvolutiveAlgebra c2(Sampler& s) {
    QuaternionAlgebra Q1 = s.chance(20) ? QuaternionAlgebra(Rat(1), s.symbol_entry()) : s.symbol();
    auto u = s.pure_invertible(Q1, 2);
    auto f1 = presented(s, Q1, orthogonal_involution_matrix(Q1, u));
    auto f2 = presented(s, s.symbol(), canonical_involution_matrix());
    return tensor_with_involutions(f1.algebra, f1.involution, f2.algebra, f2.involution);
}

}  // namespace

std::vector<Instance> generate(const GenerateOptions& opt) {
    bool form = opt.category == Category::QHPlus || opt.category == Category::QHMinus ||
                opt.category == Category::QHMinusDisc1;
    if (form && opt.n < 3) throw AlgebraError(ErrorCode::InvalidInput, "n must be at least 3");
    if (opt.category == Category::QHMinusDisc1 && opt.n % 2 == 0)
        throw AlgebraError(ErrorCode::InvalidInput, "QH-disc1 needs odd n");
    Sampler s(opt.seed, opt.height);
    std::vector<Instance> out;
    for (std::size_t k = 0; k < opt.count; ++k) {
        switch (opt.category) {
            case Category::QHPlus: out.push_back({opt.category, hermitian(s, opt.n)}); break;
            case Category::QHMinus: out.push_back({opt.category, skew(s, opt.n)}); break;
            case Category::QHMinusDisc1: out.push_back({opt.category, skew_disc1(s, opt.n)}); break;
            case Category::A12: out.push_back({opt.category, pgo4(s)}); break;
            case Category::C2: out.push_back({opt.category, c2(s)}); break;
            case Category::C1:
                if (s.chance(50)) {
                    out.push_back({opt.category, s.symbol()});
                } else {
                    out.push_back({opt.category, presented(s, s.symbol(), canonical_involution_matrix())});
                }
                break;
        }
    }
    return out;
}

}  // namespace edim

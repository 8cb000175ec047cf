#include "edim/encoders.hpp"

#include "edim/error.hpp"
#include "edim/quadratic_field.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace edim {

namespace {

std::string qstr(const QuaternionElement& x) {
    return "(" + x.c[0].str() + "," + x.c[1].str() + "," + x.c[2].str() + "," + x.c[3].str() + ")";
}

std::string vstr(const RatVector& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
    return s + "]";
}

QuaternionElement phi(const QuaternionAlgebra& Q, const QuaternionElement& x, const QuaternionElement& p,
                      const QuaternionElement& q) {
    return x.c[0] * QuaternionElement::scalar(1) + x.c[1] * p + x.c[2] * q + x.c[3] * Q.mul(p, q);
}

QMatrix permutation(const std::vector<std::size_t>& order) {
    QMatrix m(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) m(order[k], k) = QuaternionElement::scalar(1);
    return m;
}

QMatrix elementary(std::size_t n, std::size_t a, std::size_t b, const QuaternionElement& lambda) {
    // e_a <- e_a + e_b lambda
    QMatrix m = QMatrix::identity(n);
    m(b, a) = lambda;
    return m;
}

QMatrix congruence_image(const QuaternionAlgebra& Q, const QMatrix& P, const QMatrix& G) {
    return multiply(Q, multiply(Q, P.conj_transpose(), G), P);
}

// p, q' from two diagonal entries, or nullopt when q is dependent on p or
// q - cp is isotropic.
std::optional<std::pair<Rat, QuaternionElement>> shift_pair(const QuaternionAlgebra& Q, const QuaternionElement& p,
                                                            const QuaternionElement& q) {
    Rat c;
    try {
        c = anticommutation_shift(Q, p, q);
    } catch (const AlgebraError&) {
        return std::nullopt;
    }
    auto qp = q - c * p;
    if (Q.pure_square(qp).is_zero()) return std::nullopt;
    return std::make_pair(c, qp);
}

std::optional<std::vector<std::size_t>> good_order(const QuaternionAlgebra& Q,
                                                   const std::vector<QuaternionElement>& e) {
    std::size_t n = e.size();
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t s = 0; s < n; ++s) {
            if (s == f || !shift_pair(Q, e[f], e[s])) continue;
            std::vector<std::size_t> order{f, s};
            for (std::size_t k = 0; k < n; ++k)
                if (k != f && k != s) order.push_back(k);
            return order;
        }
    return std::nullopt;
}

std::vector<QuaternionElement> skew_entries(const Rat& c, const std::vector<Rat>& t) {
    std::vector<QuaternionElement> out{QuaternionElement::pure(1, 0, 0), QuaternionElement::pure(c, 1, 0)};
    for (std::size_t k = 0; 3 * k + 2 < t.size(); ++k)
        out.push_back(QuaternionElement::pure(t[3 * k], t[3 * k + 1], t[3 * k + 2]));
    return out;
}

Rat trinomial(const Rat& a, const Rat& b, const Rat& t1, const Rat& t2, const Rat& t3) {
    return a * t1 * t1 + b * t2 * t2 - a * b * t3 * t3;
}

void variety_skew(Certificate& cert, const Rat& a, const Rat& b, const Rat& c, const std::vector<Rat>& t) {
    bool ok = !a.is_zero() && !b.is_zero() && !(a * c * c + b).is_zero();
    for (std::size_t k = 0; 3 * k + 2 < t.size(); ++k)
        ok = ok && !trinomial(a, b, t[3 * k], t[3 * k + 1], t[3 * k + 2]).is_zero();
    cert.holds("variety_inequations", ok);
}

// Both sides of -a(ac^2+b) prod_{k<m} N_k = prod_{k>=m} N_k, n = 2m+1.
std::pair<Rat, Rat> disc_relation(const Rat& a, const Rat& b, const Rat& c, const std::vector<Rat>& t, std::size_t n) {
    std::size_t m = (n - 1) / 2;
    Rat lhs = -a * (a * c * c + b), rhs(1);
    for (std::size_t k = 1; k + 2 <= n; ++k) {
        Rat N = trinomial(a, b, t[3 * (k - 1)], t[3 * (k - 1) + 1], t[3 * (k - 1) + 2]);
        if (k < m) lhs *= N;
        else rhs *= N;
    }
    return {lhs, rhs};
}

[[noreturn]] void invalid_witness(const std::string& what) { throw AlgebraError(ErrorCode::WitnessInvalid, what); }

std::vector<RatVector> sweep(const std::vector<RatVector>& basis, std::mt19937_64& rng, int random_count) {
    std::vector<RatVector> out = basis;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            out.push_back(add(basis[a], basis[b]));
            out.push_back(sub(basis[a], basis[b]));
        }
    for (int it = 0; it < random_count && !basis.empty(); ++it) {
        RatVector v(basis[0].size());
        for (auto& b : basis) v = add(v, scale(b, Rat(long(rng() % 7) - 3)));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

SkewNormalForm skew_normal_form(const HermitianForm& h, std::uint64_t seed) {
    if (h.epsilon() != -1) throw AlgebraError(ErrorCode::InvalidInput, "skew encoder needs epsilon = -1");
    const auto& Q = h.algebra();
    std::size_t n = h.size();
    if (n < 2) throw AlgebraError(ErrorCode::InvalidInput, "skew encoder needs n >= 2");

    auto dz = diagonalize_form(h, seed);
    QMatrix P = dz.P;
    std::vector<QuaternionElement> diag = dz.form.entries();
    std::string repair = "none";
    int attempts = 0;

    auto order = good_order(Q, diag);
    if (order && ((*order)[0] != 0 || (*order)[1] != 1)) repair = "permutation";

    auto try_congruence = [&](std::size_t l, const QuaternionElement& lambda) {
        auto E = elementary(n, 1, l, lambda);
        if (!is_invertible(Q, E)) return false;
        HermitianForm moved(Q, -1, congruence_image(Q, E, dz.form.gram()));
        auto d2 = diagonalize_form(moved, seed);
        auto o = good_order(Q, d2.form.entries());
        if (!o) return false;
        P = multiply(Q, multiply(Q, dz.P, E), d2.P);
        diag = d2.form.entries();
        order = o;
        return true;
    };

    if (!order) {
        repair = "congruence";
        const std::vector<QuaternionElement> lambdas = {QuaternionElement::scalar(1), Q.i(), Q.j(), Q.k(),
                                                        QuaternionElement{{1, 1, 0, 0}}, QuaternionElement{{1, 0, 1, 0}}};
        for (std::size_t l = 0; l < n && !order; ++l) {
            if (l == 1) continue;
            for (auto& lambda : lambdas) {
                ++attempts;
                if (try_congruence(l, lambda)) break;
            }
        }
    }
    if (!order) {
        repair = "random";
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        for (int it = 0; it < 64 && !order; ++it) {
            std::size_t l = rng() % (n - 1);
            if (l >= 1) ++l;
            QuaternionElement lambda;
            for (auto& x : lambda.c) x = Rat(long(rng() % 7) - 3);
            ++attempts;
            try_congruence(l, lambda);
        }
    }
    if (!order)
        throw AlgebraError(ErrorCode::LinearlyDependent,
                           "no anticommuting anisotropic pair after repairs, seed " + std::to_string(seed));

    P = multiply(Q, P, permutation(*order));
    std::vector<QuaternionElement> entries;
    for (auto k : *order) entries.push_back(diag[k]);

    SkewNormalForm out;
    out.P = std::move(P);
    out.entries = entries;
    auto [c, qp] = *shift_pair(Q, entries[0], entries[1]);
    out.c = c;
    out.q_prime = qp;
    out.a = Q.pure_square(entries[0]);
    out.b = Q.pure_square(qp);
    for (std::size_t k = 2; k < n; ++k) {
        auto t = rebase_pure(Q, entries[k], entries[0], qp);
        out.t.insert(out.t.end(), t.begin(), t.end());
    }
    out.repair = repair;
    out.attempts = attempts;
    return out;
}

EncodeResult encode_hermitian(const HermitianForm& h, const EncodeOptions& opt) {
    if (h.epsilon() != 1) throw AlgebraError(ErrorCode::InvalidInput, "hermitian encoder needs epsilon = +1");
    const auto& Q = h.algebra();
    std::size_t n = h.size();
    auto dz = diagonalize_form(h, opt.seed);
    const auto& d = dz.form.entries();
    Rat t1 = d[0].c[0];
    if (t1.is_zero()) throw AlgebraError(ErrorCode::FirstEntryZero, "first diagonal entry is zero");

    Witness w{Category::QHPlus, n, {Q.a(), Q.b()}, {}};
    for (std::size_t k = 1; k < n; ++k) w.params.push_back(d[k].c[0] / t1);

    Certificate cert;
    cert.seed = opt.seed;
    cert.holds("congruence", congruence_image(Q, dz.P, h.gram()) == dz.form.gram());
    for (auto& x : d) cert.holds("diagonal_scalar", x.is_scalar());
    auto decoded = std::get<HermitianForm>(decode(w).payload);
    cert.holds("scaled_congruence", dz.form.gram() == decoded.gram().scaled(t1));

    // sigma_decoded = Int(P^{-1}) o sigma_h o Int(P), checked on generators
    // of M_n(Q).
    AdjointInvolution sh(h), sd(decoded);
    std::vector<QMatrix> gens{QMatrix::unit(n, 0, 0, Q.i()), QMatrix::unit(n, 0, 0, Q.j())};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        gens.push_back(QMatrix::unit(n, k, k + 1, QuaternionElement::scalar(1)));
        gens.push_back(QMatrix::unit(n, k + 1, k, QuaternionElement::scalar(1)));
    }
    bool adj = true;
    for (auto& g : gens) {
        auto inner = multiply(Q, multiply(Q, dz.P, g), dz.P_inv);
        adj = adj && sd.apply(g) == multiply(Q, multiply(Q, dz.P_inv, sh.apply(inner)), dz.P);
    }
    cert.holds("adjoint_on_generators", adj);
    bool nonzero = true;
    for (auto& p : w.params) nonzero = nonzero && !p.is_zero();
    cert.holds("variety_inequations", nonzero);
    cert.require();
    return {std::move(w), std::move(cert)};
}

namespace {

void skew_checks(Certificate& cert, const HermitianForm& h, const SkewNormalForm& nf, const QuaternionAlgebra& Q,
                 const FactorBudget& budget) {
    const auto& p = nf.entries[0];
    const auto& qp = nf.q_prime;
    cert.holds("congruence", congruence_image(Q, nf.P, h.gram()) == QMatrix::diagonal(nf.entries));
    cert.equal("anticommute", qstr(Q.mul(p, qp) + Q.mul(qp, p)), qstr(QuaternionElement{}));
    for (std::size_t k = 2; k < nf.entries.size(); ++k) {
        const Rat* t = &nf.t[3 * (k - 2)];
        auto expansion = t[0] * p + t[1] * qp + t[2] * Q.mul(p, qp);
        cert.equal("rebase_r" + std::to_string(k - 1), qstr(expansion), qstr(nf.entries[k]));
    }
    QuaternionAlgebra symbol(nf.a, nf.b);
    cert.equal("brauer", ramification_set(Q, budget).str(), ramification_set(symbol, budget).str());
}

}  // namespace

EncodeResult encode_skew(const HermitianForm& h, const EncodeOptions& opt) {
    const auto& Q = h.algebra();
    std::size_t n = h.size();
    auto nf = skew_normal_form(h, opt.seed);

    Witness w{Category::QHMinus, n, {nf.a, nf.b, nf.c}, {{"repair", nf.repair}}};
    w.params.insert(w.params.end(), nf.t.begin(), nf.t.end());

    Certificate cert;
    cert.seed = opt.seed;
    skew_checks(cert, h, nf, Q, opt.budget);
    // i -> p, j -> q' carries the decoded diagonal onto the computed one.
    auto decoded = std::get<HermitianForm>(decode(w).payload);
    bool mapped = true;
    for (std::size_t k = 0; k < n; ++k)
        mapped = mapped && phi(Q, decoded.entries()[k], nf.entries[0], nf.q_prime) == nf.entries[k];
    cert.holds("embedding", mapped);
    variety_skew(cert, nf.a, nf.b, nf.c, nf.t);
    cert.require();
    return {std::move(w), std::move(cert)};
}

EncodeResult encode_skew_trivial_disc(const HermitianForm& h, const EncodeOptions& opt) {
    const auto& Q = h.algebra();
    std::size_t n = h.size();
    if (n % 2 == 0 || n < 3) throw AlgebraError(ErrorCode::InvalidInput, "trivial-discriminant encoder needs odd n >= 3");
    auto nf = skew_normal_form(h, opt.seed);
    auto disc = disc_skew(HermitianForm::diagonal(Q, -1, nf.entries), opt.budget);
    if (!disc.is_trivial())
        throw AlgebraError(ErrorCode::DiscNotTrivial, "discriminant class " + disc.str());

    // R = prod_{k>=m} r_k^2, d^2 = -p^2 q^2 prod_{k<m} r_k^2 * R; scaling by
    // f = R/d turns the relation into -p^2 q^2 prod_{k<m} r_k^2 = R.
    std::size_t m = (n - 1) / 2;
    Rat S = -Q.pure_square(nf.entries[0]) * Q.pure_square(nf.entries[1]), R(1);
    for (std::size_t k = 1; k + 2 <= n; ++k) {
        Rat sq = Q.pure_square(nf.entries[k + 1]);
        if (k < m) S *= sq;
        else R *= sq;
    }
    auto d = rational_sqrt(S * R);
    if (!d) throw AlgebraError(ErrorCode::DiscNotTrivial, "relation has no square root");
    Rat f = R / *d;
    const auto& p = nf.entries[0];
    for (auto& x : p.c)
        if (!x.is_zero()) {
            if ((x * f).sign() < 0) f = -f;
            break;
        }

    SkewNormalForm scaled = nf;
    for (auto& e : scaled.entries) e *= f;
    scaled.q_prime *= f;
    scaled.a = nf.a * f * f;
    scaled.b = nf.b * f * f;
    for (std::size_t k = 2; k < scaled.t.size(); k += 3) scaled.t[k] = nf.t[k] / f;
    HermitianForm hf = h.scaled(f);

    Witness w{Category::QHMinusDisc1, n, {scaled.a, scaled.b, scaled.c}, {{"repair", nf.repair}}};
    w.params.insert(w.params.end(), scaled.t.begin(), scaled.t.end() - 1);
    w.meta["t_last"] = scaled.t.back().str();

    Certificate cert;
    cert.seed = opt.seed;
    skew_checks(cert, hf, scaled, Q, opt.budget);
    auto [lhs, rhs] = disc_relation(scaled.a, scaled.b, scaled.c, scaled.t, n);
    cert.equal("disc_relation", lhs.str(), rhs.str());
    auto decoded = std::get<HermitianForm>(decode(w).payload);
    bool mapped = true;
    for (std::size_t k = 0; k < n; ++k)
        mapped = mapped && phi(Q, decoded.entries()[k], scaled.entries[0], scaled.q_prime) == scaled.entries[k];
    cert.holds("embedding", mapped);
    variety_skew(cert, scaled.a, scaled.b, scaled.c, scaled.t);
    cert.require();
    return {std::move(w), std::move(cert)};
}

namespace {

struct FieldRamification {
    QuadraticField K;
    Rat scale;
};

FieldRamification field_for(const Rat& e, const FactorBudget& budget) {
    Rat scale;
    auto K = QuadraticField::from_parameter(e, &scale, budget);
    return {K, scale};
}

std::string field_ramification(const Rat& e, const EtaleElement& alpha, const EtaleElement& beta,
                               const FactorBudget& budget) {
    auto F = field_for(e, budget);
    auto ram = F.K.ramification({alpha.x, alpha.y * F.scale}, {beta.x, beta.y * F.scale}, budget);
    std::string s = "{";
    for (std::size_t k = 0; k < ram.size(); ++k) s += (k ? "," : "") + ram[k].str();
    return s + "}";
}

}  // namespace

EncodeResult encode_pgo4(const EtaleQuaternionAlgebra& q, const EncodeOptions& opt) {
    const auto& L = q.base;
    if (!L.is_invertible(q.alpha) || !L.is_invertible(q.beta))
        throw AlgebraError(ErrorCode::NotInvertible, "symbol entries must be invertible");
    if (L.is_split()) {
        auto [a1, a2] = L.components(q.alpha);
        auto [b1, b2] = L.components(q.beta);
        return encode_pgo4(QuaternionPair{QuaternionAlgebra(a1, b1), QuaternionAlgebra(a2, b2)}, opt);
    }
    const Rat& e = L.e();
    EtaleElement alpha = q.alpha, beta = q.beta;
    std::string route = "direct";
    Certificate cert;
    cert.seed = opt.seed;
    if (beta.y.is_zero()) {
        if (!alpha.y.is_zero()) {
            std::swap(alpha, beta);
            route = "swap";
        } else {
            // (1 + sqrt e)^2 - a is a norm from L(sqrt a), so (a, beta N) = (a, beta).
            EtaleElement N{Rat(1) + e - alpha.x, Rat(2)};
            EtaleElement u{Rat(1), Rat(1)};
            auto expected = L.sub(L.mul(u, u), {alpha.x, Rat(0)});
            cert.equal("norm_factor", N.x.str() + "+" + N.y.str(), expected.x.str() + "+" + expected.y.str());
            beta = L.mul(beta, N);
            route = "norm";
        }
    }
    Rat d = beta.y;
    Rat e2 = e * d * d, b2 = alpha.y / d;
    // The decoder reads sqrt(e2) as |d| sqrt(e): for d < 0 it returns the
    // Galois conjugate, which is isomorphic as an algebra over an etale
    // quadratic extension.
    bool conjugated = d.sign() < 0;
    Witness w{Category::A12, 2, {alpha.x, b2, beta.x, e2},
              {{"shape", "FIELD"}, {"route", route}, {"galois", conjugated ? "conjugate" : "identity"}}};
    EtaleElement a0 = conjugated ? L.conj(q.alpha) : q.alpha, b0 = conjugated ? L.conj(q.beta) : q.beta;

    cert.equal("alpha", (alpha.x.str() + "+" + (b2 * d).str()), alpha.x.str() + "+" + alpha.y.str());
    cert.equal("beta", beta.x.str() + "+" + d.str(), beta.x.str() + "+" + beta.y.str());
    cert.equal("ramification", field_ramification(e, a0, b0, opt.budget),
               field_ramification(e2, {alpha.x, b2}, {beta.x, Rat(1)}, opt.budget));
    Rat a = alpha.x, c = beta.x;
    cert.holds("variety_inequations", !(e2 * (a * a - b2 * b2 * e2) * (c * c - e2)).is_zero());
    cert.require();
    return {std::move(w), std::move(cert)};
}

EncodeResult encode_pgo4(const QuaternionPair& q, const EncodeOptions& opt) {
    Rat a1 = q.first.a(), b1 = q.first.b(), a2 = q.second.a(), b2 = q.second.b();
    std::string route = "direct";
    if (b1 == b2) {
        b2 *= Rat(4);
        route = "rescale";
    }
    bool swapped = false;
    if (b1 < b2) {
        std::swap(a1, a2);
        std::swap(b1, b2);
        swapped = true;
    }
    Rat s = (b1 - b2) / Rat(2);
    Rat c = (b1 + b2) / Rat(2), a = (a1 + a2) / Rat(2), b = (a1 - a2) / (Rat(2) * s);
    Witness w{Category::A12, 2, {a, b, c, s * s}, {{"shape", "SPLIT"}, {"route", route}}};

    Certificate cert;
    cert.seed = opt.seed;
    const auto& first = swapped ? q.second : q.first;
    const auto& second = swapped ? q.first : q.second;
    cert.equal("first_factor", ramification_set(QuaternionAlgebra(a + b * s, c + s), opt.budget).str(),
               ramification_set(first, opt.budget).str());
    cert.equal("second_factor", ramification_set(QuaternionAlgebra(a - b * s, c - s), opt.budget).str(),
               ramification_set(second, opt.budget).str());
    Rat e = s * s;
    cert.holds("variety_inequations", !(e * (a * a - b * b * e) * (c * c - e)).is_zero());
    cert.require();
    return {std::move(w), std::move(cert)};
}

std::string branch_name(SymplecticDecomposition::Branch b) {
    return b == SymplecticDecomposition::Branch::Division ? "DIVISION" : "SPLIT";
}

std::optional<std::pair<RatVector, RatVector>> anticommuting_pair(const StructureAlgebra& A,
                                                                  const std::vector<RatVector>& candidates,
                                                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto list = sweep(candidates, rng, 64);
    for (auto& z : list) {
        auto z2 = A.mul(z, z);
        if (!A.is_scalar(z2) || A.scalar_value(z2).is_zero()) continue;
        Rat zz = A.scalar_value(z2);
        for (auto& w0 : list) {
            auto anti = add(A.mul(z, w0), A.mul(w0, z));
            if (!A.is_scalar(anti)) continue;
            auto w = sub(w0, scale(z, A.scalar_value(anti) / (Rat(2) * zz)));
            if (is_zero(w)) continue;
            auto w2 = A.mul(w, w);
            if (!A.is_scalar(w2) || A.scalar_value(w2).is_zero()) continue;
            if (!is_zero(add(A.mul(z, w), A.mul(w, z)))) continue;
            return std::make_pair(z, w);
        }
    }
    return std::nullopt;
}

namespace {

// Vectors v in span(space) with f(v) = 0 for a linear map f.
std::vector<RatVector> kernel_within(const std::vector<RatVector>& space,
                                     const std::function<RatVector(const RatVector&)>& f) {
    std::vector<RatVector> images;
    for (auto& v : space) images.push_back(f(v));
    auto K = kernel(RatMatrix::from_columns(images, images[0].size()));
    std::vector<RatVector> out;
    for (auto& c : K) {
        RatVector v(space[0].size());
        for (std::size_t k = 0; k < space.size(); ++k) v = add(v, scale(space[k], c[k]));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<RatVector> standard_basis(const StructureAlgebra& A) {
    std::vector<RatVector> out;
    for (std::size_t k = 0; k < A.dim(); ++k) out.push_back(A.basis(k));
    return out;
}

// When A is written in a 4x4 product basis (index 4a + b) whose blocks
// {0,1,2,3} or {0,4,8,12} are sigma-stable quaternion subalgebras, the
// block with orthogonal restriction (or the centralizer of the block with
// canonical restriction). The decomposition then follows the presentation.
std::optional<std::vector<RatVector>> product_basis_factor(const StructureAlgebra& A, const LinearInvolution& sigma) {
    for (auto idx : {std::array<std::size_t, 4>{0, 1, 2, 3}, std::array<std::size_t, 4>{0, 4, 8, 12}}) {
        std::vector<RatVector> block;
        for (auto k : idx) block.push_back(A.basis(k));
        bool closed = coordinates(block, A.unit()).has_value();
        bool canonical = true;
        for (auto& u : block) {
            auto su = sigma.apply(u);
            closed = closed && coordinates(block, su).has_value();
            canonical = canonical && A.is_scalar(add(u, su));
            for (auto& v : block) closed = closed && coordinates(block, A.mul(u, v)).has_value();
        }
        if (!closed) continue;
        auto C = centralizer(A, block);
        if (C.basis.size() != 4) continue;
        return canonical ? C.basis : block;
    }
    return std::nullopt;
}

// One attempt with i0 built from x and j searched in span(space).
std::optional<SymplecticDecomposition> decompose_with(const StructureAlgebra& A, const LinearInvolution& sigma,
                                                      const RatVector& x, const std::vector<RatVector>& space,
                                                      std::mt19937_64& rng, const EncodeOptions& opt) {
    const std::size_t n = A.dim();
    auto coords = coordinates({A.unit(), x}, A.mul(x, x));
    if (!coords) return std::nullopt;
    auto i0 = sub(x, A.scalar((*coords)[1] / Rat(2)));
    auto i2 = A.mul(i0, i0);
    if (!A.is_scalar(i2) || A.scalar_value(i2).is_zero()) return std::nullopt;

    // sigma(j) = j and j i0 + i0 j = 0, with j in the search space
    auto K = kernel_within(space, [&](const RatVector& v) {
        auto out = sub(sigma.apply(v), v);
        auto anti = add(A.mul(v, i0), A.mul(i0, v));
        out.insert(out.end(), anti.begin(), anti.end());
        return out;
    });
    if (K.empty()) return std::nullopt;
    std::optional<RatVector> j;
    for (auto& cand : sweep(K, rng, 64)) {
        if (is_zero(cand)) continue;
        auto j2 = A.mul(cand, cand);
        if (A.is_scalar(j2) && !A.scalar_value(j2).is_zero()) {
            j = cand;
            break;
        }
    }
    if (!j) return std::nullopt;

    auto C = centralizer(A, {i0, *j});
    if (C.basis.size() != 4)
        throw AlgebraError(ErrorCode::InvalidInput,
                           "centralizer has dimension " + std::to_string(C.basis.size()) +
                               "; algebra is not central simple");
    std::vector<RatVector> pure;
    for (std::size_t k = 1; k < 4; ++k) pure.push_back(scale(sub(C.basis[k], sigma.apply(C.basis[k])), Rat(1, 2)));
    auto zw = anticommuting_pair(A, pure, opt.seed);
    if (!zw) return std::nullopt;

    SymplecticDecomposition out;
    out.i0 = i0;
    out.j = *j;
    out.x = A.scalar_value(i2);
    out.y = A.scalar_value(A.mul(*j, *j));
    out.z = zw->first;
    out.w = zw->second;
    out.z2 = A.scalar_value(A.mul(out.z, out.z));
    out.w2 = A.scalar_value(A.mul(out.w, out.w));
    out.q_prime_basis = C.basis;

    auto& cert = out.certificate;
    cert.seed = opt.seed;
    auto ij = A.mul(i0, *j);
    auto zw_prod = A.mul(out.z, out.w);
    cert.equal("sigma(i0)=i0", vstr(sigma.apply(i0)), vstr(i0));
    cert.equal("sigma(j)=j", vstr(sigma.apply(*j)), vstr(*j));
    cert.equal("sigma(i0j)=-i0j", vstr(sigma.apply(ij)), vstr(scale(ij, Rat(-1))));
    cert.equal("i0j=-ji0", vstr(ij), vstr(scale(A.mul(*j, i0), Rat(-1))));
    bool central = true;
    for (auto* u : {&out.z, &out.w})
        for (auto* v : {&i0, &*j}) central = central && is_zero(A.commutator(*u, *v));
    for (auto& u : C.basis)
        for (auto* v : {&i0, &*j}) central = central && is_zero(A.commutator(u, *v));
    cert.holds("Q'_centralizes_Q", central);
    bool canonical = true;
    for (auto& u : C.basis) canonical = canonical && A.is_scalar(add(u, sigma.apply(u)));
    canonical = canonical && sigma.apply(out.z) == scale(out.z, Rat(-1)) &&
                sigma.apply(out.w) == scale(out.w, Rat(-1)) &&
                sigma.apply(zw_prod) == scale(zw_prod, Rat(-1));
    cert.holds("sigma|Q'=gamma", canonical);
    cert.equal("zw=-wz", vstr(zw_prod), vstr(scale(A.mul(out.w, out.z), Rat(-1))));
    std::vector<RatVector> products;
    for (auto& u : {A.unit(), i0, *j, ij})
        for (auto& v : {A.unit(), out.z, out.w, zw_prod}) products.push_back(A.mul(u, v));
    cert.equal("tensor_span", std::to_string(rank(RatMatrix::from_columns(products, n))), "16");

    QuaternionAlgebra Q(out.x, out.y);
    if (ramification_set(Q, opt.budget).empty()) {
        out.branch = SymplecticDecomposition::Branch::Split;
        out.zero_divisor = split_point(Q, SplitSearch{10'000, opt.budget});
        if (!out.zero_divisor) throw std::logic_error("split algebra without split point");
        const auto& u = out.zero_divisor->c;
        auto image = add(add(A.scalar(u[0]), scale(i0, u[1])), add(scale(*j, u[2]), scale(ij, u[3])));
        cert.holds("zero_divisor", !is_zero(image) && is_zero(A.mul(image, image)),
                   qstr(*out.zero_divisor));
    }
    cert.require();
    return out;
}

}  // namespace

SymplecticDecomposition decompose_symplectic_deg4(const InvolutiveAlgebra& IA, const EncodeOptions& opt) {
    const auto& A = IA.algebra;
    const auto& sigma = IA.involution;
    if (A.dim() != 16) throw AlgebraError(ErrorCode::NotSymplectic, "algebra is not of degree 4");
    std::size_t symdim = sym_space(sigma).size();
    if (symdim != 6) throw AlgebraError(ErrorCode::NotSymplectic, "dim Sym = " + std::to_string(symdim));

    std::mt19937_64 rng(opt.seed);
    if (auto Q = product_basis_factor(A, sigma)) {
        auto sym = kernel_within(*Q, [&](const RatVector& v) { return sub(sigma.apply(v), v); });
        for (auto& x : sweep(sym, rng, 16)) {
            if (A.is_scalar(x)) continue;
            if (auto out = decompose_with(A, sigma, x, *Q, rng, opt)) return *out;
        }
    }
    auto all = standard_basis(A);
    for (auto& x : sweep(sym_space(sigma), rng, 256)) {
        if (A.is_scalar(x)) continue;
        if (auto out = decompose_with(A, sigma, x, all, rng, opt)) return *out;
    }
    throw AlgebraError(ErrorCode::SearchLimit, "no quadratic symmetric element found, seed " + std::to_string(opt.seed));
}

EncodeResult encode_c2(const InvolutiveAlgebra& a, const EncodeOptions& opt) {
    auto dec = decompose_symplectic_deg4(a, opt);
    Witness w{Category::C2, 4, {}, {{"branch", branch_name(dec.branch)}}};
    Certificate cert = dec.certificate;
    if (dec.branch == SymplecticDecomposition::Branch::Division) {
        w.params = {dec.x, dec.y, dec.z2, dec.w2};
    } else {
        // Split Q: (Q, sigma|Q) is determined by the class of k^2 = -xy.
        Rat y2(square_class(dec.x * dec.y, opt.budget).rep());
        w.params = {Rat(1), y2, dec.z2, dec.w2};
        w.meta["x"] = "1";
        cert.equal("split_class", square_class(Rat(-1) * y2, opt.budget).str(),
                   square_class(-dec.x * dec.y, opt.budget).str());
    }
    auto R = ramification_set(QuaternionAlgebra(dec.x, dec.y), opt.budget) ^
             ramification_set(QuaternionAlgebra(dec.z2, dec.w2), opt.budget);
    auto Rw = ramification_set(QuaternionAlgebra(w.params[0], w.params[1]), opt.budget) ^
              ramification_set(QuaternionAlgebra(w.params[2], w.params[3]), opt.budget);
    cert.equal("brauer", Rw.str(), R.str());
    cert.require();
    return {std::move(w), std::move(cert)};
}

EncodeResult encode_c1(const QuaternionAlgebra& q, const EncodeOptions& opt) {
    Witness w{Category::C1, 2, {q.a(), q.b()}, {}};
    Certificate cert;
    cert.seed = opt.seed;
    cert.holds("variety_inequations", !q.a().is_zero() && !q.b().is_zero());
    cert.require();
    return {std::move(w), std::move(cert)};
}

EncodeResult encode_c1(const InvolutiveAlgebra& ia, const EncodeOptions& opt) {
    const auto& A = ia.algebra;
    const auto& sigma = ia.involution;
    if (A.dim() != 4) throw AlgebraError(ErrorCode::InvalidInput, "C1 algebra must be 4-dimensional");
    for (std::size_t k = 0; k < 4; ++k)
        if (!A.is_scalar(add(A.basis(k), sigma.apply(A.basis(k)))))
            throw AlgebraError(ErrorCode::InvalidInput, "involution is not the canonical one");
    std::vector<RatVector> pure;
    for (std::size_t k = 0; k < 4; ++k) {
        auto p = scale(sub(A.basis(k), sigma.apply(A.basis(k))), Rat(1, 2));
        if (!is_zero(p)) pure.push_back(p);
    }
    auto zw = anticommuting_pair(A, pure, opt.seed);
    if (!zw) throw AlgebraError(ErrorCode::SearchLimit, "no anticommuting generators, seed " + std::to_string(opt.seed));
    auto [z, w] = *zw;
    Rat z2 = A.scalar_value(A.mul(z, z)), w2 = A.scalar_value(A.mul(w, w));
    Witness wit{Category::C1, 2, {z2, w2}, {}};
    Certificate cert;
    cert.seed = opt.seed;
    auto zw_prod = A.mul(z, w);
    cert.equal("zw=-wz", vstr(zw_prod), vstr(scale(A.mul(w, z), Rat(-1))));
    cert.equal("span", std::to_string(rank(RatMatrix::from_columns({A.unit(), z, w, zw_prod}, 4))), "4");
    cert.holds("variety_inequations", !z2.is_zero() && !w2.is_zero());
    cert.require();
    return {std::move(wit), std::move(cert)};
}

EncodeResult encode(const Instance& inst, const EncodeOptions& opt) {
    validate_instance(inst);
    switch (inst.category) {
        case Category::QHPlus: return encode_hermitian(std::get<HermitianForm>(inst.payload), opt);
        case Category::QHMinus: return encode_skew(std::get<HermitianForm>(inst.payload), opt);
        case Category::QHMinusDisc1: return encode_skew_trivial_disc(std::get<HermitianForm>(inst.payload), opt);
        case Category::A12:
            if (auto* q = std::get_if<EtaleQuaternionAlgebra>(&inst.payload)) return encode_pgo4(*q, opt);
            return encode_pgo4(std::get<QuaternionPair>(inst.payload), opt);
        case Category::C2: return encode_c2(std::get<InvolutiveAlgebra>(inst.payload), opt);
        case Category::C1:
            if (auto* q = std::get_if<QuaternionAlgebra>(&inst.payload)) return encode_c1(*q, opt);
            return encode_c1(std::get<InvolutiveAlgebra>(inst.payload), opt);
    }
    throw std::logic_error("unhandled category");
}

Instance decode(const Witness& w) {
    if (w.params.size() != witness_length(w.category, w.n))
        invalid_witness("expected " + std::to_string(witness_length(w.category, w.n)) + " parameters, got " +
                        std::to_string(w.params.size()));
    const auto& x = w.params;
    auto nonzero = [&](std::size_t k) {
        if (x[k].is_zero()) invalid_witness("parameter " + std::to_string(k) + " must be nonzero");
    };
    switch (w.category) {
        case Category::QHPlus: {
            if (w.n < 1) invalid_witness("n must be positive");
            for (std::size_t k = 0; k < x.size(); ++k) nonzero(k);
            QuaternionAlgebra Q(x[0], x[1]);
            std::vector<QuaternionElement> d{QuaternionElement::scalar(1)};
            for (std::size_t k = 2; k < x.size(); ++k) d.push_back(QuaternionElement::scalar(x[k]));
            return {w.category, HermitianForm::diagonal(Q, 1, d)};
        }
        case Category::QHMinus:
        case Category::QHMinusDisc1: {
            if (w.n < 2) invalid_witness("n must be at least 2");
            std::vector<Rat> t(x.begin() + 3, x.end());
            if (w.category == Category::QHMinusDisc1) {
                if (w.n % 2 == 0) invalid_witness("n must be odd");
                auto it = w.meta.find("t_last");
                if (it == w.meta.end()) invalid_witness("missing meta t_last");
                try {
                    t.push_back(Rat::parse(it->second));
                } catch (const AlgebraError&) {
                    invalid_witness("meta t_last is not a rational");
                }
            }
            const Rat &a = x[0], &b = x[1], &c = x[2];
            if (a.is_zero() || b.is_zero() || (a * c * c + b).is_zero())
                invalid_witness("inequations a, b, ac^2+b != 0 fail");
            for (std::size_t k = 0; 3 * k + 2 < t.size(); ++k)
                if (trinomial(a, b, t[3 * k], t[3 * k + 1], t[3 * k + 2]).is_zero())
                    invalid_witness("inequation a t^2 + b t^2 - ab t^2 != 0 fails");
            if (w.category == Category::QHMinusDisc1) {
                auto [lhs, rhs] = disc_relation(a, b, c, t, w.n);
                if (lhs != rhs) invalid_witness("discriminant relation fails: " + lhs.str() + " != " + rhs.str());
            }
            QuaternionAlgebra Q(a, b);
            return {w.category, HermitianForm::diagonal(Q, -1, skew_entries(c, t))};
        }
        case Category::A12: {
            const Rat &a = x[0], &b = x[1], &c = x[2], &e = x[3];
            if ((e * (a * a - b * b * e) * (c * c - e)).is_zero()) invalid_witness("e(a^2-b^2e)(c^2-e) = 0");
            EtaleQuadratic L(e);
            if (L.is_split()) {
                Rat s = L.root();
                return {w.category, QuaternionPair{QuaternionAlgebra(a + b * s, c + s), QuaternionAlgebra(a - b * s, c - s)}};
            }
            return {w.category, EtaleQuaternionAlgebra{L, {a, b}, {c, Rat(1)}}};
        }
        case Category::C2: {
            for (std::size_t k = 0; k < 4; ++k) nonzero(k);
            QuaternionAlgebra Q1(x[0], x[1]), Q2(x[2], x[3]);
            auto A1 = quaternion_structure(Q1);
            auto A2 = quaternion_structure(Q2);
            return {w.category, tensor_with_involutions(A1, LinearInvolution(A1, orthogonal_involution_matrix(Q1, Q1.k())),
                                                        A2, LinearInvolution(A2, canonical_involution_matrix()))};
        }
        case Category::C1:
            nonzero(0);
            nonzero(1);
            return {w.category, QuaternionAlgebra(x[0], x[1])};
    }
    throw std::logic_error("unhandled category");
}

}  // namespace edim

#include "edim/quaternion.hpp"

#include "edim/error.hpp"
#include "edim/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace edim {

QuaternionElement& QuaternionElement::operator+=(const QuaternionElement& o) {
    for (int t = 0; t < 4; ++t) c[t] += o.c[t];
    return *this;
}

QuaternionElement& QuaternionElement::operator-=(const QuaternionElement& o) {
    for (int t = 0; t < 4; ++t) c[t] -= o.c[t];
    return *this;
}

QuaternionElement& QuaternionElement::operator*=(const Rat& s) {
    for (auto& x : c) x *= s;
    return *this;
}

QuaternionElement canonical_involution(const QuaternionElement& x) { return {{x.c[0], -x.c[1], -x.c[2], -x.c[3]}}; }

QuaternionElement pure_part(const QuaternionElement& x) { return {{0, x.c[1], x.c[2], x.c[3]}}; }

RamificationSet::RamificationSet(std::vector<Place> places) : places_(std::move(places)) {
    std::sort(places_.begin(), places_.end());
    places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
    if (places_.size() % 2 != 0)
        throw std::logic_error("ramification set of odd cardinality " + str());
}

bool RamificationSet::contains(const Place& v) const {
    return std::binary_search(places_.begin(), places_.end(), v);
}

std::string RamificationSet::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < places_.size(); ++i) {
        if (i) s += ",";
        s += places_[i].str();
    }
    return s + "}";
}

RamificationSet RamificationSet::operator^(const RamificationSet& other) const {
    std::vector<Place> out;
    std::set_symmetric_difference(places_.begin(), places_.end(), other.places_.begin(), other.places_.end(),
                                  std::back_inserter(out));
    return RamificationSet(std::move(out));
}

QuaternionAlgebra::QuaternionAlgebra(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero() || b_.is_zero())
        throw AlgebraError(ErrorCode::InvalidInput, "quaternion symbol entries must be nonzero");
}

QuaternionElement QuaternionAlgebra::mul(const QuaternionElement& x, const QuaternionElement& y) const {
    const auto& [x0, x1, x2, x3] = x.c;
    const auto& [y0, y1, y2, y3] = y.c;
    Rat ab = a_ * b_;
    QuaternionElement r;
    r.c[0] = x0 * y0 + a_ * x1 * y1 + b_ * x2 * y2 - ab * x3 * y3;
    r.c[1] = x0 * y1 + x1 * y0 - b_ * x2 * y3 + b_ * x3 * y2;
    r.c[2] = x0 * y2 + x2 * y0 + a_ * x1 * y3 - a_ * x3 * y1;
    r.c[3] = x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1;
    return r;
}

Rat QuaternionAlgebra::nrd(const QuaternionElement& x) const {
    const auto& [x0, x1, x2, x3] = x.c;
    return x0 * x0 - a_ * x1 * x1 - b_ * x2 * x2 + a_ * b_ * x3 * x3;
}

QuaternionElement QuaternionAlgebra::inverse(const QuaternionElement& x) const {
    Rat n = nrd(x);
    if (n.is_zero()) throw AlgebraError(ErrorCode::NotInvertible, "quaternion has zero reduced norm");
    return canonical_involution(x) * n.inverse();
}

Rat QuaternionAlgebra::pure_square(const QuaternionElement& x) const { return -nrd(pure_part(x)); }

Rat anticommutation_shift(const QuaternionAlgebra& Q, const QuaternionElement& p, const QuaternionElement& q) {
    if (!p.is_pure() || !q.is_pure()) throw AlgebraError(ErrorCode::InvalidInput, "anticommutation_shift needs pure elements");
    Rat p2 = Q.pure_square(p);
    if (p2.is_zero()) throw AlgebraError(ErrorCode::IsotropicEntry, "p^2 = 0");
    // q in Q*p iff the 2x3 coordinate matrix has rank 1.
    bool dependent = true;
    for (int s = 1; s < 4 && dependent; ++s)
        for (int t = s + 1; t < 4; ++t)
            if (p.c[s] * q.c[t] != p.c[t] * q.c[s]) {
                dependent = false;
                break;
            }
    if (dependent) throw AlgebraError(ErrorCode::LinearlyDependent, "q is a scalar multiple of p");
    return Q.trd(Q.mul(p, q)) / (Rat(2) * p2);
}

std::array<Rat, 3> rebase_pure(const QuaternionAlgebra& Q, const QuaternionElement& r, const QuaternionElement& p,
                               const QuaternionElement& q_prime) {
    QuaternionElement pq = Q.mul(p, q_prime);
    RatMatrix m(3, 3);
    for (int row = 0; row < 3; ++row) {
        m(row, 0) = p.c[row + 1];
        m(row, 1) = q_prime.c[row + 1];
        m(row, 2) = pq.c[row + 1];
    }
    if (!pq.is_pure()) throw AlgebraError(ErrorCode::SingularBasis, "p and q' do not anticommute");
    auto sol = solve(m, {r.c[1], r.c[2], r.c[3]});
    if (!sol || rank(m) < 3) throw AlgebraError(ErrorCode::SingularBasis, "{p, q', pq'} does not span the pure part");
    return {(*sol)[0], (*sol)[1], (*sol)[2]};
}

RamificationSet ramification_set(const QuaternionAlgebra& Q, const FactorBudget& budget) {
    std::vector<Place> out;
    for (const auto& v : relevant_places(Q.a(), Q.b(), budget))
        if (hilbert_symbol(Q.a(), Q.b(), v) < 0) out.push_back(v);
    return RamificationSet(std::move(out));
}

bool quaternion_isomorphic(const QuaternionAlgebra& Q1, const QuaternionAlgebra& Q2, const FactorBudget& budget) {
    return ramification_set(Q1, budget) == ramification_set(Q2, budget);
}

namespace {

// Search A x^2 + B y^2 - AB z^2 = 0 with (y, z) != 0, ordered by
// max(|y|, |z|) and then lexicographically. Machine arithmetic path.
std::optional<std::array<std::int64_t, 3>> search_small(std::int64_t A, std::int64_t B, std::int64_t bound) {
    using i128 = __int128;
    auto isqrt = [](i128 n) -> std::optional<std::int64_t> {
        if (n < 0) return std::nullopt;
        Int big;
        mpz_import(big.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0,
                   std::array<std::uint64_t, 2>{std::uint64_t(n), std::uint64_t(n >> 64)}.data());
        auto r = integer_sqrt(big);
        if (!r) return std::nullopt;
        return r->get_si();
    };
    for (std::int64_t h = 1; h <= bound; ++h) {
        for (std::int64_t y = -h; y <= h; ++y) {
            bool edge_y = (y == h || y == -h);
            for (std::int64_t z = -h; z <= h; ++z) {
                if (!edge_y && z != -h && z != h) continue;
                // A x^2 = AB z^2 - B y^2
                i128 rhs = i128(A) * B * z * z - i128(B) * y * y;
                if (rhs % A != 0) continue;
                auto x = isqrt(rhs / A);
                if (x) return std::array<std::int64_t, 3>{*x, y, z};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<QuaternionElement> split_point(const QuaternionAlgebra& Q, const SplitSearch& search) {
    if (!ramification_set(Q, search.budget).empty()) return std::nullopt;
    // Rescale generators to squarefree squares: i' = i/r, j' = j/s.
    SquareClass ca = square_class(Q.a(), search.budget);
    SquareClass cb = square_class(Q.b(), search.budget);
    Rat r = *rational_sqrt(Q.a() / Rat(ca.rep()));
    Rat s = *rational_sqrt(Q.b() / Rat(cb.rep()));
    if (!ca.rep().fits_slong_p() || !cb.rep().fits_slong_p() || abs(ca.rep()) > (Int(1) << 40) ||
        abs(cb.rep()) > (Int(1) << 40))
        throw AlgebraError(ErrorCode::SearchLimit, "split_point: coefficients too large for the bounded search");
    auto sol = search_small(ca.rep().get_si(), cb.rep().get_si(), search.height_bound);
    if (!sol)
        throw AlgebraError(ErrorCode::SearchLimit,
                           "no isotropic vector up to height " + std::to_string(search.height_bound));
    auto [x, y, z] = *sol;
    QuaternionElement u = QuaternionElement::pure(Rat(Int(x)) / r, Rat(Int(y)) / s, Rat(Int(z)) / (r * s));
    if (u.is_zero() || !Q.pure_square(u).is_zero()) throw std::logic_error("split_point: bad isotropic vector");
    return u;
}

}  // namespace edim

#ifndef EDIM_QUATERNION_HPP
#define EDIM_QUATERNION_HPP

#include "edim/field.hpp"
#include "edim/rat.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edim {

// Coordinates over the basis 1, i, j, k = ij.
struct QuaternionElement {
    std::array<Rat, 4> c{};

    static QuaternionElement scalar(const Rat& s) { return {{s, 0, 0, 0}}; }
    static QuaternionElement pure(const Rat& x, const Rat& y, const Rat& z) { return {{0, x, y, z}}; }

    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero(); }
    bool is_scalar() const { return c[1].is_zero() && c[2].is_zero() && c[3].is_zero(); }
    bool is_pure() const { return c[0].is_zero(); }

    QuaternionElement& operator+=(const QuaternionElement& o);
    QuaternionElement& operator-=(const QuaternionElement& o);
    QuaternionElement& operator*=(const Rat& s);

    friend QuaternionElement operator+(QuaternionElement a, const QuaternionElement& b) { return a += b; }
    friend QuaternionElement operator-(QuaternionElement a, const QuaternionElement& b) { return a -= b; }
    friend QuaternionElement operator*(QuaternionElement a, const Rat& s) { return a *= s; }
    friend QuaternionElement operator*(const Rat& s, QuaternionElement a) { return a *= s; }
    friend QuaternionElement operator-(QuaternionElement a) { return a *= Rat(-1); }
    friend bool operator==(const QuaternionElement&, const QuaternionElement&) = default;
};

// The canonical involution x -> trd(x) - x.
QuaternionElement canonical_involution(const QuaternionElement& x);
// x - trd(x)/2.
QuaternionElement pure_part(const QuaternionElement& x);

// Even set of places where a quaternion algebra over Q ramifies.
class RamificationSet {
public:
    RamificationSet() = default;
    explicit RamificationSet(std::vector<Place> places);

    const std::vector<Place>& places() const { return places_; }
    bool empty() const { return places_.empty(); }
    bool contains(const Place& v) const;
    // "{2,inf}"
    std::string str() const;
    // Brauer sum: symmetric difference.
    RamificationSet operator^(const RamificationSet& other) const;

    friend bool operator==(const RamificationSet&, const RamificationSet&) = default;

private:
    std::vector<Place> places_;
};

// The symbol algebra (a,b) over Q: i^2 = a, j^2 = b, ij = -ji = k.
class QuaternionAlgebra {
public:
    QuaternionAlgebra(Rat a, Rat b);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    QuaternionElement mul(const QuaternionElement& x, const QuaternionElement& y) const;
    QuaternionElement square(const QuaternionElement& x) const { return mul(x, x); }
    Rat trd(const QuaternionElement& x) const { return Rat(2) * x.c[0]; }
    // x0^2 - a x1^2 - b x2^2 + ab x3^2
    Rat nrd(const QuaternionElement& x) const;
    bool is_invertible(const QuaternionElement& x) const { return !nrd(x).is_zero(); }
    // Throws NOT_INVERTIBLE for zero divisors.
    QuaternionElement inverse(const QuaternionElement& x) const;
    // For pure x, x^2 as a scalar (equal to -nrd(x)).
    Rat pure_square(const QuaternionElement& x) const;

    QuaternionElement i() const { return {{0, 1, 0, 0}}; }
    QuaternionElement j() const { return {{0, 0, 1, 0}}; }
    QuaternionElement k() const { return {{0, 0, 0, 1}}; }

    friend bool operator==(const QuaternionAlgebra&, const QuaternionAlgebra&) = default;

private:
    Rat a_;
    Rat b_;
};

// c with p(q - cp) + (q - cp)p = 0, i.e. trd(pq) / (2 p^2).
// ISOTROPIC_ENTRY if p^2 = 0, LINEARLY_DEPENDENT if q lies in Q p.
Rat anticommutation_shift(const QuaternionAlgebra& Q, const QuaternionElement& p, const QuaternionElement& q);

// Coordinates (t1, t2, t3) of the pure element r in the basis {p, q', p q'}.
std::array<Rat, 3> rebase_pure(const QuaternionAlgebra& Q, const QuaternionElement& r, const QuaternionElement& p,
                               const QuaternionElement& q_prime);

RamificationSet ramification_set(const QuaternionAlgebra& Q, const FactorBudget& budget = {});
bool quaternion_isomorphic(const QuaternionAlgebra& Q1, const QuaternionAlgebra& Q2, const FactorBudget& budget = {});

struct SplitSearch {
    std::int64_t height_bound = 10'000;
    FactorBudget budget{};
};

// Nonzero pure u with u^2 = 0 when Q is split, nullopt when it ramifies.
// Raises SEARCH_LIMIT if the height bound is exhausted on a split algebra.
std::optional<QuaternionElement> split_point(const QuaternionAlgebra& Q, const SplitSearch& search = {});

}  // namespace edim

#endif

#ifndef EDIM_FIELD_HPP
#define EDIM_FIELD_HPP

#include "edim/factor.hpp"
#include "edim/rat.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace edim {

// Image of a nonzero rational in Q^x / Q^x^2, represented by the unique
// squarefree integer of the class (sign included).
class SquareClass {
public:
    explicit SquareClass(Int squarefree_rep);

    const Int& rep() const { return rep_; }
    bool is_trivial() const { return rep_ == 1; }
    std::string str() const { return rep_.get_str(); }

    friend bool operator==(const SquareClass&, const SquareClass&) = default;
    friend auto operator<=>(const SquareClass& a, const SquareClass& b) {
        int c = cmp(a.rep_, b.rep_);
        return c <=> 0;
    }

private:
    Int rep_;
};

SquareClass square_class(const Rat& r, const FactorBudget& budget = {});

// Nonnegative s with s^2 = r, or nullopt when r is not a rational square.
std::optional<Rat> rational_sqrt(const Rat& r);

// Integer square root check for a nonnegative integer.
std::optional<Int> integer_sqrt(const Int& n);

// A place of Q: a finite prime or the real place.
class Place {
public:
    static Place infinite() { return Place(Int(0)); }
    static Place prime(const Int& p);

    bool is_infinite() const { return p_ == 0; }
    const Int& p() const { return p_; }
    // "inf" or the prime in decimal.
    std::string str() const;
    static Place parse(const std::string& text);

    friend bool operator==(const Place&, const Place&) = default;
    // Finite primes in increasing order, then the real place.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b);

private:
    explicit Place(Int p) : p_(std::move(p)) {}
    Int p_;  // 0 encodes the real place
};

// Hilbert symbol (a,b)_v in {+1,-1}: +1 iff z^2 = a x^2 + b y^2 has a
// nontrivial solution over the completion at v. Closed forms: sign rule at
// the real place, Legendre symbols at odd p, the mod-8 formula at 2.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Places where (a,b)_v might be -1: the real place and primes dividing 2ab.
std::vector<Place> relevant_places(const Rat& a, const Rat& b, const FactorBudget& budget = {});

}  // namespace edim

#endif

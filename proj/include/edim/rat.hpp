#ifndef EDIM_RAT_HPP
#define EDIM_RAT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace edim {

using Int = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Zero is 0/1.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    Rat(const Int& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(const Int& num, const Int& den);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "n" or "n/d" with optional leading sign; rejects anything else.
    static Rat parse(std::string_view text);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat abs() const { return Rat(::abs(v_)); }
    Rat inverse() const;

    // "num/den", den omitted when 1.
    std::string str() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_{0};
};

Rat pow(const Rat& base, long exponent);

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Bit length of the larger of |num| and den; used as a size heuristic.
std::size_t height_bits(const Rat& r);

}  // namespace edim

#endif

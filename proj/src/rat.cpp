#include "edim/rat.hpp"

#include "edim/error.hpp"

#include <ostream>

namespace edim {

Rat::Rat(const Int& num, const Int& den) {
    if (den == 0) throw AlgebraError(ErrorCode::NotInvertible, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    if (!valid_integer_text(num_text, true))
        throw AlgebraError(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    if (num_text[0] == '+') num_text.remove_prefix(1);
    Int num(std::string(num_text), 10);
    Int den = 1;
    if (slash != std::string_view::npos) {
        std::string_view den_text = text.substr(slash + 1);
        if (!valid_integer_text(den_text, false))
            throw AlgebraError(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
        den = Int(std::string(den_text), 10);
        if (den == 0) throw AlgebraError(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rat(num, den);
}

Rat Rat::inverse() const {
    if (is_zero()) throw AlgebraError(ErrorCode::NotInvertible, "inverse of zero");
    return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw AlgebraError(ErrorCode::NotInvertible, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat pow(const Rat& base, long exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rat(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::size_t height_bits(const Rat& r) {
    std::size_t a = mpz_sizeinbase(r.raw().get_num_mpz_t(), 2);
    std::size_t b = mpz_sizeinbase(r.raw().get_den_mpz_t(), 2);
    return a > b ? a : b;
}

}  // namespace edim

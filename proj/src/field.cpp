#include "edim/field.hpp"

#include "edim/error.hpp"

#include <set>

namespace edim {

SquareClass::SquareClass(Int squarefree_rep) : rep_(std::move(squarefree_rep)) {
    if (rep_ == 0) throw AlgebraError(ErrorCode::InvalidInput, "square class of zero");
}

SquareClass square_class(const Rat& r, const FactorBudget& budget) {
    if (r.is_zero()) throw AlgebraError(ErrorCode::InvalidInput, "square class of zero");
    // num/den and num*den differ by the square den^2.
    Int m = r.num() * r.den();
    Int rep = r.sign() < 0 ? -1 : 1;
    for (const auto& pp : factorize(m, budget))
        if (pp.exponent % 2 == 1) rep *= pp.prime;
    return SquareClass(rep);
}

std::optional<Int> integer_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    auto n = integer_sqrt(r.num());
    if (!n) return std::nullopt;
    auto d = integer_sqrt(r.den());
    if (!d) return std::nullopt;
    return Rat(*n, *d);
}

Place Place::prime(const Int& p) {
    if (p < 2 || !is_probable_prime(p))
        throw AlgebraError(ErrorCode::InvalidInput, "place must be a prime, got " + p.get_str());
    return Place(p);
}

std::string Place::str() const { return is_infinite() ? std::string("inf") : p_.get_str(); }

Place Place::parse(const std::string& text) {
    if (text == "inf") return infinite();
    Rat r = Rat::parse(text);
    if (!r.is_integer()) throw AlgebraError(ErrorCode::ParseError, "bad place '" + text + "'");
    return prime(r.num());
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(a.p_, b.p_);
    return c <=> 0;
}

namespace {

// Strip the p-part: n = p^v * u with p not dividing u.
unsigned split_p(Int& n, const Int& p) {
    unsigned v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

unsigned long mod8(const Int& u) { return mpz_fdiv_ui(u.get_mpz_t(), 8); }

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a.is_zero() || b.is_zero()) throw AlgebraError(ErrorCode::InvalidInput, "Hilbert symbol of zero");
    if (v.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;

    // Same square classes as a and b, but integral.
    Int u = a.num() * a.den();
    Int w = b.num() * b.den();
    const Int& p = v.p();
    unsigned alpha = split_p(u, p);
    unsigned beta = split_p(w, p);

    if (p == 2) {
        unsigned long um = mod8(u), wm = mod8(w);
        unsigned long eps_u = ((um - 1) / 2) % 2, eps_w = ((wm - 1) / 2) % 2;
        unsigned long om_u = ((um * um - 1) / 8) % 2, om_w = ((wm * wm - 1) / 8) % 2;
        unsigned long e = eps_u * eps_w + alpha * om_w + beta * om_u;
        return (e % 2 == 0) ? 1 : -1;
    }

    int result = 1;
    // (-1)^(alpha*beta*(p-1)/2)
    if ((alpha * beta) % 2 == 1 && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) result = -result;
    if (beta % 2 == 1) result *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
    if (alpha % 2 == 1) result *= mpz_legendre(w.get_mpz_t(), p.get_mpz_t());
    return result;
}

std::vector<Place> relevant_places(const Rat& a, const Rat& b, const FactorBudget& budget) {
    std::set<Int> primes{Int(2)};
    for (const Int& n : {a.num(), a.den(), b.num(), b.den()})
        for (auto& p : prime_divisors(n, budget)) primes.insert(p);
    std::vector<Place> out;
    for (auto& p : primes) out.push_back(Place::prime(p));
    out.push_back(Place::infinite());
    return out;
}

}  // namespace edim

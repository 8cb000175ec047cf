#include "edim/factor.hpp"

#include "edim/error.hpp"

#include <algorithm>
#include <map>

namespace edim {

namespace {

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n, or 0 when the shared iteration budget runs out.
Int rho_factor(const Int& n, std::uint64_t& remaining) {
    for (unsigned long c = 1; remaining > 0; ++c) {
        Int y = 2, x, g = 1, q = 1, ys;
        std::uint64_t r = 1;
        constexpr std::uint64_t batch = 128;
        while (g == 1 && remaining > 0) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            std::uint64_t k = 0;
            while (k < r && g == 1 && remaining > 0) {
                ys = y;
                std::uint64_t steps = std::min(batch, r - k);
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                remaining = remaining > steps ? remaining - steps : 0;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += steps;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time from the saved state.
            do {
                ys = (ys * ys + c) % n;
                Int diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

void split_large(const Int& n, std::map<Int, unsigned>& out, std::uint64_t& remaining) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int f = rho_factor(n, remaining);
    if (f == 0)
        throw AlgebraError(ErrorCode::FactorizationLimit,
                           "Pollard-rho budget exhausted on " + n.get_str());
    split_large(f, out, remaining);
    split_large(Int(n / f), out, remaining);
}

}  // namespace

bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

unsigned valuation(const Int& n, const Int& p) {
    if (n == 0) throw AlgebraError(ErrorCode::InvalidInput, "valuation of zero");
    Int m = abs(n);
    unsigned v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

std::vector<PrimePower> factorize(const Int& n, const FactorBudget& budget) {
    if (n == 0) throw AlgebraError(ErrorCode::InvalidInput, "factorization of zero");
    Int m = abs(n);
    std::map<Int, unsigned> found;
    for (std::uint32_t p : small_primes()) {
        if (p >= budget.trial_limit) break;
        if (Int(p) * p > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            found[Int(p)] = e;
        }
    }
    if (m != 1) {
        std::uint64_t remaining = budget.rho_iterations;
        split_large(m, found, remaining);
    }
    std::vector<PrimePower> out;
    out.reserve(found.size());
    for (auto& [p, e] : found) out.push_back({p, e});
    return out;
}

std::vector<Int> prime_divisors(const Int& n, const FactorBudget& budget) {
    std::vector<Int> out;
    for (auto& pp : factorize(n, budget)) out.push_back(pp.prime);
    return out;
}

}  // namespace edim

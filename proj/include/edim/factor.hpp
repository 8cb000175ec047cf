#ifndef EDIM_FACTOR_HPP
#define EDIM_FACTOR_HPP

#include "edim/rat.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace edim {

// Limits for integer factorization. Trial division by every prime below
// trial_limit, then Pollard-rho (Brent) sharing rho_iterations across the
// whole factorization. Exhaustion raises FACTORIZATION_LIMIT.
struct FactorBudget {
    std::uint64_t trial_limit = 1'000'000;
    std::uint64_t rho_iterations = 2'000'000;
};

struct PrimePower {
    Int prime;
    unsigned exponent;
};

// Factorization of |n| (n != 0) into sorted prime powers. |n| = 1 gives {}.
std::vector<PrimePower> factorize(const Int& n, const FactorBudget& budget = {});

// Sorted distinct primes dividing |n|.
std::vector<Int> prime_divisors(const Int& n, const FactorBudget& budget = {});

// p-adic valuation of a nonzero integer.
unsigned valuation(const Int& n, const Int& p);

bool is_probable_prime(const Int& n);

}  // namespace edim

#endif

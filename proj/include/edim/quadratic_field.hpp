#ifndef EDIM_QUADRATIC_FIELD_HPP
#define EDIM_QUADRATIC_FIELD_HPP

#include "edim/etale.hpp"
#include "edim/factor.hpp"

#include <compare>
#include <string>
#include <vector>

namespace edim {

// Place of K = Q(sqrt D), D squarefree and not 0 or 1.
//   real places (D > 0): branch +1 / -1 according to sqrt D -> +-|sqrt D|
//   finite places over p: branch 0 when p is inert or ramified, +1 / -1 when
//   p splits. For odd split p the "+" place sends sqrt D to the p-adic root
//   whose residue lies in [1, (p-1)/2]; for p = 2 the root that is 1 mod 4.
struct QuadraticPlace {
    bool real = false;
    Int p;  // 0 for real places
    int branch = 0;

    std::string str() const;
    QuadraticPlace conjugate() const { return {real, p, -branch}; }

    friend bool operator==(const QuadraticPlace&, const QuadraticPlace&) = default;
    friend std::strong_ordering operator<=>(const QuadraticPlace& a, const QuadraticPlace& b);
};

class QuadraticField {
public:
    // Q(sqrt d) for squarefree d != 0, 1.
    explicit QuadraticField(Int d);
    // The field Q(sqrt e) for a non-square e, with sqrt e = scale * sqrt d.
    static QuadraticField from_parameter(const Rat& e, Rat* scale, const FactorBudget& budget = {});

    const Int& d() const { return d_; }

    // Hilbert symbol (alpha, beta)_v; elements are in sqrt(d) coordinates.
    int hilbert_symbol(const EtaleElement& alpha, const EtaleElement& beta, const QuadraticPlace& v,
                       const FactorBudget& budget = {}) const;

    // Places where the quaternion algebra (alpha, beta) over K ramifies,
    // sorted. The dyadic symbol at a non-split 2 comes from the product
    // formula; when 2 splits the formula is asserted instead.
    std::vector<QuadraticPlace> ramification(const EtaleElement& alpha, const EtaleElement& beta,
                                             const FactorBudget& budget = {}) const;

    // Places above the rational prime p (or the real/complex places if p == 0).
    std::vector<QuadraticPlace> places_over(const Int& p) const;

private:
    Int d_;
};

// Square root of n modulo the odd prime p, or -1 when n is a non-residue.
Int sqrt_mod_prime(const Int& n, const Int& p);

}  // namespace edim

#endif

#ifndef EDIM_ENCODERS_HPP
#define EDIM_ENCODERS_HPP

#include "edim/instance.hpp"
#include "edim/witness.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace edim {

struct EncodeOptions {
    std::uint64_t seed = 0;
    FactorBudget budget{};
};

struct EncodeResult {
    Witness witness;
    Certificate certificate;
};

// Diagonal skew form <p, q, r_1, ..., r_{n-2}> with p and q' = q - c p
// anticommuting and anisotropic, reached from h by the congruence P.
struct SkewNormalForm {
    QMatrix P;
    std::vector<QuaternionElement> entries;
    Rat c;
    QuaternionElement q_prime;
    Rat a;  // p^2
    Rat b;  // q'^2
    std::vector<Rat> t;  // 3(n-2) rebased coordinates
    std::string repair;  // "none", "permutation", "congruence" or "random"
    int attempts = 0;
};

SkewNormalForm skew_normal_form(const HermitianForm& h, std::uint64_t seed);

EncodeResult encode_hermitian(const HermitianForm& h, const EncodeOptions& opt = {});
EncodeResult encode_skew(const HermitianForm& h, const EncodeOptions& opt = {});
// DISC_NOT_TRIVIAL unless disc_skew of the diagonalization is trivial.
EncodeResult encode_skew_trivial_disc(const HermitianForm& h, const EncodeOptions& opt = {});
EncodeResult encode_pgo4(const EtaleQuaternionAlgebra& q, const EncodeOptions& opt = {});
EncodeResult encode_pgo4(const QuaternionPair& q, const EncodeOptions& opt = {});
EncodeResult encode_c2(const InvolutiveAlgebra& a, const EncodeOptions& opt = {});
EncodeResult encode_c1(const QuaternionAlgebra& q, const EncodeOptions& opt = {});
EncodeResult encode_c1(const InvolutiveAlgebra& a, const EncodeOptions& opt = {});

// Dispatches on the category. Throws CERTIFICATE_FAILED rather than return
// a witness whose certificate has a failing check.
EncodeResult encode(const Instance& inst, const EncodeOptions& opt = {});

// Materializes the instance a witness parametrizes. WITNESS_INVALID if the
// parameter count, meta data or variety inequations are wrong.
Instance decode(const Witness& w);

// Decomposition (A, sigma) = (Q, sigma|Q) (x) (Q', gamma) of a
// degree-4 algebra with symplectic involution.
struct SymplecticDecomposition {
    enum class Branch { Division, Split };

    RatVector i0, j;  // sigma(i0) = i0, sigma(j) = j, i0 j = -j i0
    Rat x, y;         // i0^2, j^2
    RatVector z, w;   // pure anticommuting generators of Q' = C_A(Q)
    Rat z2, w2;
    std::vector<RatVector> q_prime_basis;
    Branch branch = Branch::Division;
    std::optional<QuaternionElement> zero_divisor;  // in (x, y), Split only
    Certificate certificate;
};

std::string branch_name(SymplecticDecomposition::Branch b);

// NOT_SYMPLECTIC for orthogonal involutions or dimension != 16,
// SEARCH_LIMIT if the bounded searches fail.
SymplecticDecomposition decompose_symplectic_deg4(const InvolutiveAlgebra& A, const EncodeOptions& opt = {});

// Anticommuting z, w among (combinations of) the candidates with z^2, w^2
// nonzero scalars; candidates are pure elements of a quaternion subalgebra.
std::optional<std::pair<RatVector, RatVector>> anticommuting_pair(const StructureAlgebra& A,
                                                                  const std::vector<RatVector>& candidates,
                                                                  std::uint64_t seed);

}  // namespace edim

#endif

#ifndef EDIM_INSTANCE_HPP
#define EDIM_INSTANCE_HPP

#include "edim/etale.hpp"
#include "edim/forms.hpp"
#include "edim/structure_algebra.hpp"
#include "edim/witness.hpp"

#include <variant>

namespace edim {

// (alpha, beta) over the etale algebra Q(sqrt e).
struct EtaleQuaternionAlgebra {
    EtaleQuadratic base;
    EtaleElement alpha;
    EtaleElement beta;
};

// Q1 x Q2 over Q x Q.
struct QuaternionPair {
    QuaternionAlgebra first;
    QuaternionAlgebra second;
};

// QH+, QH-, QH-disc1: HermitianForm
// A12: EtaleQuaternionAlgebra or QuaternionPair
// C2: InvolutiveAlgebra of dimension 16
// C1: QuaternionAlgebra (with its canonical involution) or InvolutiveAlgebra of dimension 4
using Payload = std::variant<HermitianForm, EtaleQuaternionAlgebra, QuaternionPair, InvolutiveAlgebra, QuaternionAlgebra>;

struct Instance {
    Category category;
    Payload payload;

    // Matrix size for the form categories, 2 for A12, 1 otherwise.
    std::size_t n() const;
};

// Checks that the payload kind and shape fit the category (INVALID_INPUT).
void validate_instance(const Instance& inst);

}  // namespace edim

#endif

#ifndef EDIM_INVARIANTS_HPP
#define EDIM_INVARIANTS_HPP

#include "edim/encoders.hpp"
#include "edim/instance.hpp"

#include <string>
#include <vector>

namespace edim {

struct Invariant {
    std::string name;
    std::string value;
};

// Isomorphism invariants tracked per category:
//   QH+      degree, brauer, involution_type, abs_signature
//   QH-      degree, brauer, involution_type, disc_class
//   QH-disc1 the QH- set and disc_trivial
//   A12      shape, center, ramification
//   C2       degree, brauer, involution_type
//   C1       degree, brauer, involution_type
std::vector<Invariant> instance_invariants(const Instance& inst, const EncodeOptions& opt = {});

// One check per invariant name, lhs from `expected`, rhs from `actual`,
// plus a category check.
Certificate compare_invariants(const Instance& expected, const Instance& actual, const EncodeOptions& opt = {});

}  // namespace edim

#endif

#ifndef EDIM_GENERATE_HPP
#define EDIM_GENERATE_HPP

#include "edim/instance.hpp"

#include <cstdint>
#include <vector>

namespace edim {

struct GenerateOptions {
    Category category = Category::QHPlus;
    std::size_t n = 3;  // matrix size, used by the form categories
    std::size_t count = 1;
    std::uint64_t seed = 0;
    long height = 20;  // coefficient bound
};

// Deterministic for fixed options. Form instances are random diagonal forms
// moved by a random unipotent congruence; QH-disc1 forms are assembled from
// a triple <p, q, pq> and pairs <r, u r gamma(u)>; C2 instances are tensors
// of randomly presented quaternion algebras with involutions.
std::vector<Instance> generate(const GenerateOptions& opt);

}  // namespace edim

#endif

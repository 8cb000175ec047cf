#ifndef EDIM_WITNESS_HPP
#define EDIM_WITNESS_HPP

#include "edim/rat.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace edim {

enum class Category { QHPlus, QHMinus, QHMinusDisc1, A12, C2, C1 };

// "QH+", "QH-", "QH-disc1", "A12", "C2", "C1"
std::string category_tag(Category c);
// Also accepts U+2212 in place of '-'. PARSE_ERROR on unknown tags.
Category parse_category(const std::string& tag);

// Number of parameters a witness of the category carries.
std::size_t witness_length(Category c, std::size_t n);

struct Witness {
    Category category = Category::C1;
    std::size_t n = 0;
    std::vector<Rat> params;
    std::map<std::string, std::string> meta;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Check {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct Certificate {
    std::vector<Check> checks;
    std::uint64_t seed = 0;

    void add(std::string name, std::string lhs, std::string rhs, bool pass);
    // lhs == rhs on the rendered strings.
    void equal(std::string name, std::string lhs, std::string rhs);
    void holds(std::string name, bool pass, std::string detail = "true");
    bool all_pass() const;
    // First failing check, or nullptr.
    const Check* first_failure() const;
    // CERTIFICATE_FAILED naming the first failing check, if any.
    void require() const;
};

}  // namespace edim

#endif

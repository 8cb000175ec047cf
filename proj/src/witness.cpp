#include "edim/witness.hpp"

#include "edim/error.hpp"

namespace edim {

std::string category_tag(Category c) {
    switch (c) {
        case Category::QHPlus: return "QH+";
        case Category::QHMinus: return "QH-";
        case Category::QHMinusDisc1: return "QH-disc1";
        case Category::A12: return "A12";
        case Category::C2: return "C2";
        case Category::C1: return "C1";
    }
    return "?";
}

Category parse_category(const std::string& tag) {
    std::string t = tag;
    const std::string minus = "−";
    for (auto pos = t.find(minus); pos != std::string::npos; pos = t.find(minus)) t.replace(pos, minus.size(), "-");
    for (auto c : {Category::QHPlus, Category::QHMinus, Category::QHMinusDisc1, Category::A12, Category::C2,
                   Category::C1})
        if (category_tag(c) == t) return c;
    throw AlgebraError(ErrorCode::ParseError, "unknown category '" + tag + "'");
}

std::size_t witness_length(Category c, std::size_t n) {
    switch (c) {
        case Category::QHPlus: return n + 1;
        case Category::QHMinus: return 3 * n - 3;
        case Category::QHMinusDisc1: return 3 * n - 4;
        case Category::A12: return 4;
        case Category::C2: return 4;
        case Category::C1: return 2;
    }
    return 0;
}

void Certificate::add(std::string name, std::string lhs, std::string rhs, bool pass) {
    checks.push_back({std::move(name), std::move(lhs), std::move(rhs), pass});
}

void Certificate::equal(std::string name, std::string lhs, std::string rhs) {
    bool pass = lhs == rhs;
    add(std::move(name), std::move(lhs), std::move(rhs), pass);
}

void Certificate::holds(std::string name, bool pass, std::string detail) {
    add(std::move(name), pass ? detail : "false", detail, pass);
}

bool Certificate::all_pass() const { return first_failure() == nullptr; }

const Check* Certificate::first_failure() const {
    for (auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

void Certificate::require() const {
    if (auto* f = first_failure())
        throw AlgebraError(ErrorCode::CertificateFailed, f->name + ": " + f->lhs + " != " + f->rhs);
}

}  // namespace edim

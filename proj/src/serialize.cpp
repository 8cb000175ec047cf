#include "edim/serialize.hpp"

#include "edim/error.hpp"

namespace edim {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw AlgebraError(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) parse_error(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) parse_error(std::string("missing field '") + key + "'");
    return *it;
}

const Json& array(const Json& j, std::size_t size, const char* what) {
    if (!j.is_array()) parse_error(std::string(what) + " must be an array");
    if (size != std::size_t(-1) && j.size() != size)
        parse_error(std::string(what) + " must have " + std::to_string(size) + " entries");
    return j;
}

Json vector_to_json(const RatVector& v) {
    Json out = Json::array();
    for (auto& x : v) out.push_back(rat_to_json(x));
    return out;
}

RatVector vector_from_json(const Json& j, std::size_t size, const char* what) {
    RatVector out;
    for (auto& x : array(j, size, what)) out.push_back(rat_from_json(x));
    return out;
}

Json matrix_to_json(const RatMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_json(m(r, c)));
        out.push_back(row);
    }
    return out;
}

RatMatrix matrix_from_json(const Json& j, std::size_t n) {
    RatMatrix m(n, n);
    array(j, n, "involution");
    for (std::size_t r = 0; r < n; ++r) {
        auto row = vector_from_json(j[r], n, "involution row");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
    }
    return m;
}

Json quaternion_to_json(const QuaternionElement& x) {
    return Json::array({rat_to_json(x.c[0]), rat_to_json(x.c[1]), rat_to_json(x.c[2]), rat_to_json(x.c[3])});
}

QuaternionElement quaternion_from_json(const Json& j) {
    auto v = vector_from_json(j, 4, "quaternion element");
    return {{v[0], v[1], v[2], v[3]}};
}

Json etale_to_json(const EtaleElement& x) { return Json::array({rat_to_json(x.x), rat_to_json(x.y)}); }

EtaleElement etale_from_json(const Json& j) {
    auto v = vector_from_json(j, 2, "etale element");
    return {v[0], v[1]};
}

Json algebra_to_json(const QuaternionAlgebra& Q) {
    return {{"a", rat_to_json(Q.a())}, {"b", rat_to_json(Q.b())}, {"base", "Q"}};
}

QuaternionAlgebra algebra_from_json(const Json& j) {
    const auto& base = field(j, "base");
    if (base != "Q") parse_error("expected a quaternion algebra over Q");
    return QuaternionAlgebra(rat_from_json(field(j, "a")), rat_from_json(field(j, "b")));
}

Json payload_to_json(const Payload& p) {
    struct Visitor {
        Json operator()(const HermitianForm& h) const {
            Json gram = Json::array();
            for (std::size_t r = 0; r < h.size(); ++r) {
                Json row = Json::array();
                for (std::size_t c = 0; c < h.size(); ++c) row.push_back(quaternion_to_json(h.gram()(r, c)));
                gram.push_back(row);
            }
            return {{"algebra", algebra_to_json(h.algebra())}, {"epsilon", h.epsilon() == 1 ? "+1" : "-1"},
                    {"gram", gram}};
        }
        Json operator()(const EtaleQuaternionAlgebra& q) const {
            return {{"algebra",
                     {{"a", etale_to_json(q.alpha)}, {"b", etale_to_json(q.beta)},
                      {"base", {{"e", rat_to_json(q.base.e())}}}}}};
        }
        Json operator()(const QuaternionPair& q) const {
            return {{"pair", Json::array({algebra_to_json(q.first), algebra_to_json(q.second)})}};
        }
        Json operator()(const InvolutiveAlgebra& a) const {
            const auto& A = a.algebra;
            Json mult = Json::array();
            for (std::size_t x = 0; x < A.dim(); ++x) {
                Json row = Json::array();
                for (std::size_t y = 0; y < A.dim(); ++y) row.push_back(vector_to_json(A.product(x, y)));
                mult.push_back(row);
            }
            return {{"structure", {{"dim", A.dim()}, {"mult", mult}, {"unit", vector_to_json(A.unit())}}},
                    {"involution", matrix_to_json(a.involution.matrix())}};
        }
        Json operator()(const QuaternionAlgebra& q) const { return {{"algebra", algebra_to_json(q)}}; }
    };
    return std::visit(Visitor{}, p);
}

Payload payload_from_json(Category cat, const Json& j) {
    if (!j.is_object()) parse_error("payload must be an object");
    switch (cat) {
        case Category::QHPlus:
        case Category::QHMinus:
        case Category::QHMinusDisc1: {
            auto Q = algebra_from_json(field(j, "algebra"));
            const auto& eps = field(j, "epsilon");
            if (eps != "+1" && eps != "-1") parse_error("epsilon must be \"+1\" or \"-1\"");
            const auto& g = array(field(j, "gram"), std::size_t(-1), "gram");
            std::size_t n = g.size();
            QMatrix m(n);
            for (std::size_t r = 0; r < n; ++r) {
                array(g[r], n, "gram row");
                for (std::size_t c = 0; c < n; ++c) m(r, c) = quaternion_from_json(g[r][c]);
            }
            return HermitianForm(Q, eps == "+1" ? 1 : -1, m);
        }
        case Category::A12: {
            if (j.contains("pair")) {
                const auto& p = array(j["pair"], 2, "pair");
                return QuaternionPair{algebra_from_json(p[0]), algebra_from_json(p[1])};
            }
            const auto& a = field(j, "algebra");
            EtaleQuadratic L(rat_from_json(field(field(a, "base"), "e")));
            return EtaleQuaternionAlgebra{L, etale_from_json(field(a, "a")), etale_from_json(field(a, "b"))};
        }
        case Category::C2:
        case Category::C1: {
            if (cat == Category::C1 && j.contains("algebra")) return algebra_from_json(j["algebra"]);
            const auto& s = field(j, "structure");
            const auto& dim_j = field(s, "dim");
            if (!dim_j.is_number_unsigned() || dim_j.get<std::size_t>() == 0 || dim_j.get<std::size_t>() > 64)
                parse_error("dim must be a positive integer up to 64");
            auto n = dim_j.get<std::size_t>();
            const auto& mult = array(field(s, "mult"), n, "mult");
            StructureAlgebra::Table t(n, std::vector<RatVector>(n));
            for (std::size_t x = 0; x < n; ++x) {
                array(mult[x], n, "mult row");
                for (std::size_t y = 0; y < n; ++y) t[x][y] = vector_from_json(mult[x][y], n, "structure constants");
            }
            StructureAlgebra A(std::move(t), vector_from_json(field(s, "unit"), n, "unit"));
            LinearInvolution sigma(A, matrix_from_json(field(j, "involution"), n));
            return InvolutiveAlgebra{std::move(A), std::move(sigma)};
        }
    }
    parse_error("unknown category");
}

std::size_t size_from_json(const Json& j) {
    if (!j.is_number_unsigned()) parse_error("n must be a non-negative integer");
    return j.get<std::size_t>();
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        parse_error(e.what());
    }
}

}  // namespace

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) parse_error("rationals are encoded as strings");
    return Rat::parse(j.get<std::string>());
}

Json instance_to_json(const Instance& inst) {
    return {{"version", kFormatVersion},
            {"category", category_tag(inst.category)},
            {"n", inst.n()},
            {"payload", payload_to_json(inst.payload)}};
}

Instance instance_from_json(const Json& j) {
    return guarded([&] {
        const auto& version = field(j, "version");
        if (version != kFormatVersion) parse_error("unsupported version " + version.dump());
        const auto& tag = field(j, "category");
        if (!tag.is_string()) parse_error("category must be a string");
        auto cat = parse_category(tag.get<std::string>());
        auto n = size_from_json(field(j, "n"));
        Instance inst{cat, payload_from_json(cat, field(j, "payload"))};
        if (inst.n() != n) parse_error("n does not match the payload");
        return inst;
    });
}

Json witness_to_json(const Witness& w) {
    Json params = Json::array();
    for (auto& p : w.params) params.push_back(rat_to_json(p));
    Json meta = Json::object();
    for (auto& [k, v] : w.meta) meta[k] = v;
    return {{"category", category_tag(w.category)}, {"n", w.n}, {"params", params}, {"meta", meta}};
}

Witness witness_from_json(const Json& j) {
    return guarded([&] {
        const auto& tag = field(j, "category");
        if (!tag.is_string()) parse_error("category must be a string");
        Witness w;
        w.category = parse_category(tag.get<std::string>());
        w.n = size_from_json(field(j, "n"));
        for (auto& p : array(field(j, "params"), std::size_t(-1), "params")) w.params.push_back(rat_from_json(p));
        if (j.contains("meta")) {
            if (!j["meta"].is_object()) parse_error("meta must be an object");
            for (auto& [k, v] : j["meta"].items()) {
                if (!v.is_string()) parse_error("meta values are strings");
                w.meta[k] = v.get<std::string>();
            }
        }
        return w;
    });
}

Json certificate_to_json(const Certificate& c) {
    Json checks = Json::array();
    for (auto& k : c.checks) checks.push_back({{"check", k.name}, {"lhs", k.lhs}, {"rhs", k.rhs}, {"pass", k.pass}});
    return {{"checks", checks}, {"seed", c.seed}};
}

Certificate certificate_from_json(const Json& j) {
    return guarded([&] {
        Certificate c;
        const auto& seed = field(j, "seed");
        if (!seed.is_number_unsigned()) parse_error("seed must be an unsigned integer");
        c.seed = seed.get<std::uint64_t>();
        for (auto& k : array(field(j, "checks"), std::size_t(-1), "checks"))
            c.add(field(k, "check").get<std::string>(), field(k, "lhs").get<std::string>(),
                  field(k, "rhs").get<std::string>(), field(k, "pass").get<bool>());
        return c;
    });
}

Json encode_result_to_json(const EncodeResult& r) {
    return {{"witness", witness_to_json(r.witness)}, {"certificate", certificate_to_json(r.certificate)}};
}

std::string dump_line(const Json& j) { return j.dump(); }

Json parse_line(const std::string& line) {
    try {
        return Json::parse(line);
    } catch (const Json::exception& e) {
        parse_error(e.what());
    }
}

}  // namespace edim

#include "edim/invariants.hpp"

#include "edim/error.hpp"
#include "edim/quadratic_field.hpp"

#include <algorithm>

namespace edim {

namespace {

std::string places_str(const std::vector<QuadraticPlace>& ram) {
    std::string s = "{";
    for (std::size_t k = 0; k < ram.size(); ++k) s += (k ? "," : "") + ram[k].str();
    return s + "}";
}

// Ramification over Q(sqrt e), canonical up to the Galois action.
std::string field_class(const EtaleQuaternionAlgebra& q, const FactorBudget& budget) {
    Rat scale;
    auto K = QuadraticField::from_parameter(q.base.e(), &scale, budget);
    auto ram = K.ramification({q.alpha.x, q.alpha.y * scale}, {q.beta.x, q.beta.y * scale}, budget);
    auto conj = ram;
    for (auto& v : conj) v = v.conjugate();
    std::sort(conj.begin(), conj.end());
    return std::min(places_str(ram), places_str(conj));
}

std::string pair_class(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2, const FactorBudget& budget) {
    auto r1 = ramification_set(q1, budget).str(), r2 = ramification_set(q2, budget).str();
    if (r2 < r1) std::swap(r1, r2);
    return r1 + "|" + r2;
}

void form_invariants(std::vector<Invariant>& out, const Instance& inst, const HermitianForm& h,
                     const EncodeOptions& opt) {
    const auto& Q = h.algebra();
    auto ram = ramification_set(Q, opt.budget);
    HermitianForm diag = h.is_diagonal() ? h : diagonalize_form(h, opt.seed).form;
    out.push_back({"degree", std::to_string(2 * h.size())});
    out.push_back({"brauer", ram.str()});
    out.push_back({"involution_type", involution_type_name(involution_type(diag))});
    if (inst.category == Category::QHPlus) {
        std::string sig = "-";
        if (ram.contains(Place::infinite())) {
            long s = 0;
            for (auto& t : diag.entries()) s += t.c[0].sign();
            sig = std::to_string(s < 0 ? -s : s);
        }
        out.push_back({"abs_signature", sig});
        return;
    }
    Rat prod(1);
    for (auto& q : diag.entries()) prod *= Q.nrd(q);
    auto cls = square_class(prod, opt.budget);
    out.push_back({"disc_class", cls.str()});
    if (inst.category == Category::QHMinusDisc1) out.push_back({"disc_trivial", cls.is_trivial() ? "true" : "false"});
}

}  // namespace

std::vector<Invariant> instance_invariants(const Instance& inst, const EncodeOptions& opt) {
    validate_instance(inst);
    std::vector<Invariant> out;
    switch (inst.category) {
        case Category::QHPlus:
        case Category::QHMinus:
        case Category::QHMinusDisc1:
            form_invariants(out, inst, std::get<HermitianForm>(inst.payload), opt);
            break;
        case Category::A12:
            if (auto* q = std::get_if<EtaleQuaternionAlgebra>(&inst.payload); q && !q->base.is_split()) {
                out.push_back({"shape", "FIELD"});
                out.push_back({"center", square_class(q->base.e(), opt.budget).str()});
                out.push_back({"ramification", field_class(*q, opt.budget)});
            } else {
                QuaternionPair pair = q ? QuaternionPair{QuaternionAlgebra(q->base.components(q->alpha).first,
                                                                           q->base.components(q->beta).first),
                                                         QuaternionAlgebra(q->base.components(q->alpha).second,
                                                                           q->base.components(q->beta).second)}
                                        : std::get<QuaternionPair>(inst.payload);
                out.push_back({"shape", "SPLIT"});
                out.push_back({"center", "1"});
                out.push_back({"ramification", pair_class(pair.first, pair.second, opt.budget)});
            }
            break;
        case Category::C2: {
            const auto& a = std::get<InvolutiveAlgebra>(inst.payload);
            out.push_back({"degree", "4"});
            auto dec = decompose_symplectic_deg4(a, opt);
            auto brauer = ramification_set(QuaternionAlgebra(dec.x, dec.y), opt.budget) ^
                          ramification_set(QuaternionAlgebra(dec.z2, dec.w2), opt.budget);
            out.push_back({"brauer", brauer.str()});
            out.push_back({"involution_type", involution_type_name(involution_type(a.algebra, a.involution))});
            break;
        }
        case Category::C1:
            out.push_back({"degree", "2"});
            if (auto* q = std::get_if<QuaternionAlgebra>(&inst.payload)) {
                out.push_back({"brauer", ramification_set(*q, opt.budget).str()});
                out.push_back({"involution_type", "SYMPLECTIC"});
            } else {
                const auto& a = std::get<InvolutiveAlgebra>(inst.payload);
                auto w = encode_c1(a, opt).witness;
                out.push_back({"brauer", ramification_set(QuaternionAlgebra(w.params[0], w.params[1]), opt.budget).str()});
                out.push_back({"involution_type", involution_type_name(involution_type(a.algebra, a.involution))});
            }
            break;
    }
    return out;
}

Certificate compare_invariants(const Instance& expected, const Instance& actual, const EncodeOptions& opt) {
    Certificate cert;
    cert.seed = opt.seed;
    cert.equal("category", category_tag(expected.category), category_tag(actual.category));
    if (expected.category != actual.category) return cert;
    auto a = instance_invariants(expected, opt);
    auto b = instance_invariants(actual, opt);
    for (std::size_t k = 0; k < a.size(); ++k) {
        std::string rhs = k < b.size() && b[k].name == a[k].name ? b[k].value : "<missing>";
        cert.equal(a[k].name, a[k].value, rhs);
    }
    return cert;
}

}  // namespace edim

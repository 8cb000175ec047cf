#include "edim/instance.hpp"

#include "edim/error.hpp"

namespace edim {

std::size_t Instance::n() const {
    if (auto* h = std::get_if<HermitianForm>(&payload)) return h->size();
    switch (category) {
        case Category::C2: return 4;
        default: return 2;
    }
}

void validate_instance(const Instance& inst) {
    auto bad = [&](const std::string& what) {
        throw AlgebraError(ErrorCode::InvalidInput, category_tag(inst.category) + ": " + what);
    };
    switch (inst.category) {
        case Category::QHPlus:
        case Category::QHMinus:
        case Category::QHMinusDisc1: {
            auto* h = std::get_if<HermitianForm>(&inst.payload);
            if (!h) bad("payload must be a hermitian form");
            int eps = inst.category == Category::QHPlus ? 1 : -1;
            if (h->epsilon() != eps) bad("wrong epsilon");
            if (h->size() < 3) bad("n must be at least 3");
            if (inst.category == Category::QHMinusDisc1 && h->size() % 2 == 0) bad("n must be odd");
            return;
        }
        case Category::A12:
            if (auto* q = std::get_if<EtaleQuaternionAlgebra>(&inst.payload)) {
                if (!q->base.is_invertible(q->alpha) || !q->base.is_invertible(q->beta))
                    throw AlgebraError(ErrorCode::NotInvertible, "symbol entries must be invertible");
                return;
            }
            if (!std::holds_alternative<QuaternionPair>(inst.payload)) bad("payload must be an etale quaternion algebra");
            return;
        case Category::C2: {
            auto* a = std::get_if<InvolutiveAlgebra>(&inst.payload);
            if (!a || a->algebra.dim() != 16) bad("payload must be a 16-dimensional algebra with involution");
            return;
        }
        case Category::C1: {
            if (std::holds_alternative<QuaternionAlgebra>(inst.payload)) return;
            auto* a = std::get_if<InvolutiveAlgebra>(&inst.payload);
            if (!a || a->algebra.dim() != 4) bad("payload must be a quaternion algebra");
            return;
        }
    }
}

}  // namespace edim

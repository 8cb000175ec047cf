#include "edim/etale.hpp"

#include "edim/error.hpp"
#include "edim/field.hpp"

namespace edim {

EtaleQuadratic::EtaleQuadratic(Rat e) : e_(std::move(e)) {
    if (e_.is_zero()) throw AlgebraError(ErrorCode::InvalidInput, "etale parameter e must be nonzero");
    root_ = rational_sqrt(e_);
    shape_ = root_ ? Shape::Split : Shape::Field;
}

const Rat& EtaleQuadratic::root() const {
    if (!root_) throw AlgebraError(ErrorCode::InvalidInput, "root() on a field-shaped etale algebra");
    return *root_;
}

EtaleElement EtaleQuadratic::add(const EtaleElement& u, const EtaleElement& v) const {
    return {u.x + v.x, u.y + v.y};
}

EtaleElement EtaleQuadratic::sub(const EtaleElement& u, const EtaleElement& v) const {
    return {u.x - v.x, u.y - v.y};
}

EtaleElement EtaleQuadratic::mul(const EtaleElement& u, const EtaleElement& v) const {
    return {u.x * v.x + e_ * u.y * v.y, u.x * v.y + u.y * v.x};
}

EtaleElement EtaleQuadratic::conj(const EtaleElement& u) const { return {u.x, -u.y}; }

Rat EtaleQuadratic::norm(const EtaleElement& u) const { return u.x * u.x - e_ * u.y * u.y; }

bool EtaleQuadratic::is_invertible(const EtaleElement& u) const {
    // In SPLIT shape the norm is the product of the two components.
    return !norm(u).is_zero();
}

EtaleElement EtaleQuadratic::inv(const EtaleElement& u) const {
    Rat n = norm(u);
    if (n.is_zero()) throw AlgebraError(ErrorCode::NotInvertible, "etale element has zero norm");
    return {u.x / n, -u.y / n};
}

std::pair<Rat, Rat> EtaleQuadratic::components(const EtaleElement& u) const {
    const Rat& s = root();
    return {u.x + u.y * s, u.x - u.y * s};
}

EtaleElement EtaleQuadratic::from_components(const Rat& first, const Rat& second) const {
    const Rat& s = root();
    return {(first + second) / Rat(2), (first - second) / (Rat(2) * s)};
}

std::string shape_name(EtaleQuadratic::Shape shape) {
    return shape == EtaleQuadratic::Shape::Field ? "FIELD" : "SPLIT";
}

}  // namespace edim

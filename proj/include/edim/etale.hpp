#ifndef EDIM_ETALE_HPP
#define EDIM_ETALE_HPP

#include "edim/rat.hpp"

#include <optional>
#include <string>
#include <utility>

namespace edim {

// x + y*sqrt(e) in an etale quadratic algebra over Q.
struct EtaleElement {
    Rat x;
    Rat y;

    friend bool operator==(const EtaleElement&, const EtaleElement&) = default;
};

// Q(sqrt e) when e is a non-square (FIELD), Q x Q when e = s^2 (SPLIT),
// with sqrt(e) -> (s, -s) and s > 0.
class EtaleQuadratic {
public:
    enum class Shape { Field, Split };

    explicit EtaleQuadratic(Rat e);

    const Rat& e() const { return e_; }
    Shape shape() const { return shape_; }
    bool is_split() const { return shape_ == Shape::Split; }
    // Positive square root of e; only in SPLIT shape.
    const Rat& root() const;

    EtaleElement add(const EtaleElement& u, const EtaleElement& v) const;
    EtaleElement sub(const EtaleElement& u, const EtaleElement& v) const;
    EtaleElement mul(const EtaleElement& u, const EtaleElement& v) const;
    EtaleElement conj(const EtaleElement& u) const;
    Rat norm(const EtaleElement& u) const;
    bool is_invertible(const EtaleElement& u) const;
    // Throws NOT_INVERTIBLE.
    EtaleElement inv(const EtaleElement& u) const;

    // SPLIT only: images under sqrt(e) -> s and sqrt(e) -> -s.
    std::pair<Rat, Rat> components(const EtaleElement& u) const;
    // SPLIT only: the element with the given component pair.
    EtaleElement from_components(const Rat& first, const Rat& second) const;

    friend bool operator==(const EtaleQuadratic& a, const EtaleQuadratic& b) { return a.e_ == b.e_; }

private:
    Rat e_;
    Shape shape_;
    std::optional<Rat> root_;
};

std::string shape_name(EtaleQuadratic::Shape shape);

}  // namespace edim

#endif

#ifndef EDIM_STRUCTURE_ALGEBRA_HPP
#define EDIM_STRUCTURE_ALGEBRA_HPP

#include "edim/forms.hpp"
#include "edim/linalg.hpp"
#include "edim/quaternion.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace edim {

struct InvolutiveAlgebra;
class LinearInvolution;

// Finite-dimensional algebra over Q given by structure constants:
// e_a e_b = sum_t table[a][b][t] e_t. Elements are coordinate vectors.
class StructureAlgebra {
public:
    using Table = std::vector<std::vector<RatVector>>;

    // Validates shape, associativity on all basis triples and the unit law;
    // INVALID_INPUT otherwise.
    StructureAlgebra(Table table, RatVector unit);

    std::size_t dim() const { return dim_; }
    const RatVector& unit() const { return unit_; }
    RatVector basis(std::size_t a) const;
    const RatVector& product(std::size_t a, std::size_t b) const { return table_[a][b]; }
    Table table() const { return table_; }

    RatVector mul(const RatVector& x, const RatVector& y) const;
    RatVector scalar(const Rat& s) const { return scale(unit_, s); }
    // xy - yx
    RatVector commutator(const RatVector& x, const RatVector& y) const;
    bool is_scalar(const RatVector& x) const;
    // s with x = s * 1, only meaningful when is_scalar(x).
    Rat scalar_value(const RatVector& x) const;

    // Matrix of y -> x y.
    RatMatrix left_mult(const RatVector& x) const;

    bool is_associative() const;
    bool has_unit_law() const;

private:
    struct Term {
        std::size_t index;
        Rat coeff;
    };

    struct Trusted {};
    StructureAlgebra(Table table, RatVector unit, Trusted);
    void build_sparse();

    std::size_t dim_ = 0;
    Table table_;
    std::vector<std::vector<std::vector<Term>>> sparse_;
    RatVector unit_;
    std::size_t unit_index_ = 0;

    friend InvolutiveAlgebra tensor_with_involutions(const StructureAlgebra&, const LinearInvolution&,
                                                     const StructureAlgebra&, const LinearInvolution&);
};

// Q-linear involution given by its matrix on the basis.
class LinearInvolution {
public:
    // Validates sigma^2 = 1, sigma(1) = 1 and sigma(e_a e_b) = sigma(e_b) sigma(e_a);
    // INVALID_INPUT otherwise.
    LinearInvolution(const StructureAlgebra& A, RatMatrix matrix);

    const RatMatrix& matrix() const { return m_; }
    RatVector apply(const RatVector& x) const { return m_.apply(x); }

private:
    RatMatrix m_;
};

// The symbol algebra (a,b) on the basis 1, i, j, k.
StructureAlgebra quaternion_structure(const QuaternionAlgebra& Q);
RatVector to_vector(const QuaternionElement& x);
QuaternionElement to_quaternion(const RatVector& v);
// gamma on the basis 1, i, j, k.
RatMatrix canonical_involution_matrix();
// x -> u gamma(x) u^{-1} for pure invertible u, an orthogonal involution.
// u = k gives x0 + x1 i + x2 j + x3 k -> x0 + x1 i + x2 j - x3 k.
RatMatrix orthogonal_involution_matrix(const QuaternionAlgebra& Q, const QuaternionElement& u);

struct InvolutiveAlgebra {
    StructureAlgebra algebra;
    LinearInvolution involution;
};

// A1 (x) A2 on the product basis e_a (x) f_b (index a * dim2 + b) with
// involution sigma1 (x) sigma2. The factors are already validated, so the
// product table is not re-checked.
InvolutiveAlgebra tensor_with_involutions(const StructureAlgebra& A1, const LinearInvolution& s1,
                                          const StructureAlgebra& A2, const LinearInvolution& s2);

// Smallest d with 1, x, ..., x^d linearly dependent.
std::size_t min_poly_degree(const StructureAlgebra& A, const RatVector& x);

std::vector<RatVector> sym_space(const LinearInvolution& sigma);
std::vector<RatVector> skew_space(const LinearInvolution& sigma);

// dim Sym classified at degree sqrt(dim A).
InvolutionType involution_type(const StructureAlgebra& A, const LinearInvolution& sigma);

struct Subalgebra {
    std::vector<RatVector> basis;  // in coordinates of the ambient algebra, basis[0] = 1
    StructureAlgebra algebra;      // induced structure constants
};

// Coordinates of v in the given independent vectors; nullopt if v is not
// in their span.
std::optional<RatVector> coordinates(const std::vector<RatVector>& basis, const RatVector& v);

// Subalgebra spanned by the given vectors, which must contain 1 and be
// closed under multiplication (INVALID_INPUT otherwise). The unit is moved
// to the front.
Subalgebra subalgebra(const StructureAlgebra& A, std::vector<RatVector> basis);

// {x : x s = s x for all s in S}
Subalgebra centralizer(const StructureAlgebra& A, const std::vector<RatVector>& S);

bool is_invertible(const StructureAlgebra& A, const RatVector& x);

// Same algebra on the basis given by the columns of B (INVALID_INPUT if
// B is singular).
StructureAlgebra change_basis(const StructureAlgebra& A, const RatMatrix& B);
InvolutiveAlgebra change_basis(const InvolutiveAlgebra& A, const RatMatrix& B);

}  // namespace edim

#endif

#ifndef EDIM_FORMS_HPP
#define EDIM_FORMS_HPP

#include "edim/field.hpp"
#include "edim/quaternion.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace edim {

// Square matrix with quaternion entries, row-major.
class QMatrix {
public:
    QMatrix() = default;
    explicit QMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static QMatrix identity(std::size_t n);
    static QMatrix diagonal(const std::vector<QuaternionElement>& entries);
    // E_{kl} * x
    static QMatrix unit(std::size_t n, std::size_t k, std::size_t l, const QuaternionElement& x);

    std::size_t size() const { return n_; }
    QuaternionElement& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const QuaternionElement& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    bool is_diagonal() const;
    bool is_zero() const;
    // gamma applied entrywise, then transposed.
    QMatrix conj_transpose() const;
    QMatrix scaled(const Rat& s) const;

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<QuaternionElement> data_;
};

// Product over Q, skipping zero entries.
QMatrix multiply(const QuaternionAlgebra& Q, const QMatrix& a, const QMatrix& b);

enum class InvolutionType { Orthogonal, Symplectic };
const char* involution_type_name(InvolutionType t);

// Classifies an involution of the first kind on a central simple algebra
// of degree m from the dimension of its symmetric elements.
// TYPE_UNDETERMINED if the dimension fits neither type.
InvolutionType involution_type_from_sym_dim(std::size_t sym_dim, std::size_t degree);

// epsilon-hermitian form h(x,y) = gamma(x)^T G y over (a,b).
class HermitianForm {
public:
    // Checks gamma(G)^T = epsilon G (INVALID_INPUT otherwise) and that G is
    // invertible (DEGENERATE_FORM otherwise).
    HermitianForm(QuaternionAlgebra Q, int epsilon, QMatrix gram);
    static HermitianForm diagonal(const QuaternionAlgebra& Q, int epsilon, const std::vector<QuaternionElement>& d);

    const QuaternionAlgebra& algebra() const { return Q_; }
    int epsilon() const { return epsilon_; }
    const QMatrix& gram() const { return gram_; }
    std::size_t size() const { return gram_.size(); }

    bool is_diagonal() const { return !diag_.empty(); }
    // Diagonal entries; empty unless the gram matrix is diagonal.
    const std::vector<QuaternionElement>& entries() const { return diag_; }

    HermitianForm scaled(const Rat& s) const;
    // gamma(P)^T G P
    HermitianForm congruent(const QMatrix& P) const;

private:
    HermitianForm(QuaternionAlgebra Q, int epsilon, QMatrix gram, bool trusted);

    QuaternionAlgebra Q_;
    int epsilon_;
    QMatrix gram_;
    std::vector<QuaternionElement> diag_;
};

// Invertibility of a quaternion matrix as a Q-linear map on Q^{4n}.
bool is_invertible(const QuaternionAlgebra& Q, const QMatrix& m);

struct Diagonalization {
    HermitianForm form;  // diagonal, gamma(P)^T G P
    QMatrix P;
    QMatrix P_inv;
    std::uint64_t seed = 0;
    int random_repairs = 0;
};

// Congruence diagonalization with invertible pivots. Zero or isotropic
// pivots are repaired by e_k <- e_k + e_l lambda for lambda in
// {1, i, j, ij, 1+i, 1+j}, then by seeded random lambda.
Diagonalization diagonalize_form(const HermitianForm& h, std::uint64_t seed = 0);

// m -> G^{-1} gamma(m)^T G.
class AdjointInvolution {
public:
    explicit AdjointInvolution(HermitianForm h);

    const HermitianForm& form() const { return h_; }
    const QMatrix& gram_inverse() const { return gram_inv_; }
    QMatrix apply(const QMatrix& m) const;

private:
    HermitianForm h_;
    QMatrix gram_inv_;
};

QMatrix adjoint_apply(const AdjointInvolution& sigma, const QMatrix& m);

// dim Sym(M_n(Q), sigma_h) over Q.
std::size_t adjoint_sym_dim(const HermitianForm& h);
InvolutionType involution_type(const HermitianForm& h);

// Square class of the product of reduced norms of the diagonal entries of
// a skew-hermitian form of odd size. ISOTROPIC_ENTRY for a zero norm.
SquareClass disc_skew(const HermitianForm& h, const FactorBudget& budget = {});

}  // namespace edim

#endif

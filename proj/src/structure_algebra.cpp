#include "edim/structure_algebra.hpp"

#include "edim/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace edim {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw AlgebraError(ErrorCode::InvalidInput, what); }

}  // namespace

StructureAlgebra::StructureAlgebra(Table table, RatVector unit, Trusted)
    : dim_(table.size()), table_(std::move(table)), unit_(std::move(unit)) {
    build_sparse();
}

StructureAlgebra::StructureAlgebra(Table table, RatVector unit) : dim_(table.size()), table_(std::move(table)),
                                                                   unit_(std::move(unit)) {
    if (dim_ == 0) invalid("structure algebra of dimension 0");
    if (unit_.size() != dim_) invalid("unit has wrong length");
    for (auto& row : table_) {
        if (row.size() != dim_) invalid("structure table is not square");
        for (auto& v : row)
            if (v.size() != dim_) invalid("structure constant vector has wrong length");
    }
    build_sparse();
    if (!has_unit_law()) invalid("unit law fails");
    if (!is_associative()) invalid("associativity fails");
}

bool StructureAlgebra::has_unit_law() const {
    for (std::size_t a = 0; a < dim_; ++a) {
        auto e = basis(a);
        if (mul(unit_, e) != e || mul(e, unit_) != e) return false;
    }
    return true;
}

bool StructureAlgebra::is_associative() const {
    RatVector left(dim_), right(dim_);
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
            for (std::size_t c = 0; c < dim_; ++c) {
                std::fill(left.begin(), left.end(), Rat());
                std::fill(right.begin(), right.end(), Rat());
                for (auto& t : sparse_[a][b])
                    for (auto& s : sparse_[t.index][c]) left[s.index] += t.coeff * s.coeff;
                for (auto& t : sparse_[b][c])
                    for (auto& s : sparse_[a][t.index]) right[s.index] += t.coeff * s.coeff;
                if (left != right) return false;
            }
    return true;
}

void StructureAlgebra::build_sparse() {
    sparse_.assign(dim_, std::vector<std::vector<Term>>(dim_));
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
            for (std::size_t t = 0; t < dim_; ++t)
                if (!table_[a][b][t].is_zero()) sparse_[a][b].push_back({t, table_[a][b][t]});
    unit_index_ = 0;
    while (unit_index_ < dim_ && unit_[unit_index_].is_zero()) ++unit_index_;
    if (unit_index_ == dim_) invalid("unit is zero");
}

RatVector StructureAlgebra::basis(std::size_t a) const {
    RatVector e(dim_);
    e[a] = 1;
    return e;
}

RatVector StructureAlgebra::mul(const RatVector& x, const RatVector& y) const {
    RatVector out(dim_);
    for (std::size_t a = 0; a < dim_; ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < dim_; ++b) {
            if (y[b].is_zero()) continue;
            Rat xy = x[a] * y[b];
            for (auto& t : sparse_[a][b]) out[t.index] += xy * t.coeff;
        }
    }
    return out;
}

RatVector StructureAlgebra::commutator(const RatVector& x, const RatVector& y) const {
    return sub(mul(x, y), mul(y, x));
}

bool StructureAlgebra::is_scalar(const RatVector& x) const { return x == scale(unit_, scalar_value(x)); }

Rat StructureAlgebra::scalar_value(const RatVector& x) const { return x[unit_index_] / unit_[unit_index_]; }

RatMatrix StructureAlgebra::left_mult(const RatVector& x) const {
    std::vector<RatVector> cols;
    for (std::size_t b = 0; b < dim_; ++b) cols.push_back(mul(x, basis(b)));
    return RatMatrix::from_columns(cols, dim_);
}

LinearInvolution::LinearInvolution(const StructureAlgebra& A, RatMatrix matrix) : m_(std::move(matrix)) {
    std::size_t n = A.dim();
    if (m_.rows() != n || m_.cols() != n) invalid("involution matrix has wrong shape");
    if (!(m_ * m_).is_identity()) invalid("involution does not square to the identity");
    if (apply(A.unit()) != A.unit()) invalid("involution moves the unit");
    std::vector<RatVector> images;
    for (std::size_t a = 0; a < n; ++a) images.push_back(m_.column(a));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (apply(A.product(a, b)) != A.mul(images[b], images[a]))
                invalid("involution is not an anti-automorphism on (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
}

StructureAlgebra quaternion_structure(const QuaternionAlgebra& Q) {
    StructureAlgebra::Table t(4, std::vector<RatVector>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            QuaternionElement x, y;
            x.c[a] = 1;
            y.c[b] = 1;
            t[a][b] = to_vector(Q.mul(x, y));
        }
    return StructureAlgebra(std::move(t), to_vector(QuaternionElement::scalar(1)));
}

RatVector to_vector(const QuaternionElement& x) { return {x.c[0], x.c[1], x.c[2], x.c[3]}; }

QuaternionElement to_quaternion(const RatVector& v) {
    if (v.size() != 4) invalid("quaternion coordinates need length 4");
    return {{v[0], v[1], v[2], v[3]}};
}

RatMatrix canonical_involution_matrix() {
    RatMatrix m(4, 4);
    m(0, 0) = 1;
    m(1, 1) = -1;
    m(2, 2) = -1;
    m(3, 3) = -1;
    return m;
}

RatMatrix orthogonal_involution_matrix(const QuaternionAlgebra& Q, const QuaternionElement& u) {
    if (!u.is_pure() || !Q.is_invertible(u)) invalid("orthogonal involution needs a pure invertible element");
    auto uinv = Q.inverse(u);
    std::vector<RatVector> cols;
    for (int b = 0; b < 4; ++b) {
        QuaternionElement e;
        e.c[b] = 1;
        cols.push_back(to_vector(Q.mul(u, Q.mul(canonical_involution(e), uinv))));
    }
    return RatMatrix::from_columns(cols, 4);
}

InvolutiveAlgebra tensor_with_involutions(const StructureAlgebra& A1, const LinearInvolution& s1,
                                          const StructureAlgebra& A2, const LinearInvolution& s2) {
    std::size_t n1 = A1.dim(), n2 = A2.dim(), n = n1 * n2;
    StructureAlgebra::Table t(n, std::vector<RatVector>(n, RatVector(n)));
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b)
            for (std::size_t c = 0; c < n1; ++c)
                for (std::size_t d = 0; d < n2; ++d) {
                    const auto& x = A1.product(a, c);
                    const auto& y = A2.product(b, d);
                    auto& out = t[a * n2 + b][c * n2 + d];
                    for (std::size_t s = 0; s < n1; ++s) {
                        if (x[s].is_zero()) continue;
                        for (std::size_t r = 0; r < n2; ++r)
                            if (!y[r].is_zero()) out[s * n2 + r] = x[s] * y[r];
                    }
                }
    RatVector unit(n);
    for (std::size_t s = 0; s < n1; ++s)
        for (std::size_t r = 0; r < n2; ++r) unit[s * n2 + r] = A1.unit()[s] * A2.unit()[r];
    RatMatrix m(n, n);
    const auto& m1 = s1.matrix();
    const auto& m2 = s2.matrix();
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b)
            for (std::size_t c = 0; c < n1; ++c)
                for (std::size_t d = 0; d < n2; ++d)
                    if (!m1(a, c).is_zero() && !m2(b, d).is_zero()) m(a * n2 + b, c * n2 + d) = m1(a, c) * m2(b, d);
    StructureAlgebra A(std::move(t), std::move(unit), StructureAlgebra::Trusted{});
    LinearInvolution sigma(A, std::move(m));
    return {std::move(A), std::move(sigma)};
}

std::size_t min_poly_degree(const StructureAlgebra& A, const RatVector& x) {
    std::vector<RatVector> powers{A.unit()};
    for (std::size_t d = 1; d <= A.dim(); ++d) {
        powers.push_back(A.mul(powers.back(), x));
        if (rank(RatMatrix::from_columns(powers, A.dim())) < powers.size()) return d;
    }
    return A.dim();
}

std::vector<RatVector> sym_space(const LinearInvolution& sigma) {
    const auto& m = sigma.matrix();
    return kernel(m - RatMatrix::identity(m.rows()));
}

std::vector<RatVector> skew_space(const LinearInvolution& sigma) {
    const auto& m = sigma.matrix();
    return kernel(m + RatMatrix::identity(m.rows()));
}

InvolutionType involution_type(const StructureAlgebra& A, const LinearInvolution& sigma) {
    auto degree = static_cast<std::size_t>(std::lround(std::sqrt(double(A.dim()))));
    if (degree * degree != A.dim())
        throw AlgebraError(ErrorCode::TypeUndetermined, "dimension " + std::to_string(A.dim()) + " is not a square");
    return involution_type_from_sym_dim(sym_space(sigma).size(), degree);
}

std::optional<RatVector> coordinates(const std::vector<RatVector>& basis, const RatVector& v) {
    return solve(RatMatrix::from_columns(basis, v.size()), v);
}

Subalgebra subalgebra(const StructureAlgebra& A, std::vector<RatVector> basis) {
    std::vector<RatVector> b{A.unit()};
    for (auto& v : basis) {
        b.push_back(v);
        if (rank(RatMatrix::from_columns(b, A.dim())) < b.size()) b.pop_back();
    }
    if (b.size() != basis.size()) invalid("subalgebra basis does not contain 1 or is dependent");
    std::size_t n = b.size();
    StructureAlgebra::Table t(n, std::vector<RatVector>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto c = coordinates(b, A.mul(b[x], b[y]));
            if (!c) invalid("span is not closed under multiplication");
            t[x][y] = std::move(*c);
        }
    RatVector unit(n);
    unit[0] = 1;
    return Subalgebra{b, StructureAlgebra(std::move(t), std::move(unit))};
}

Subalgebra centralizer(const StructureAlgebra& A, const std::vector<RatVector>& S) {
    std::size_t n = A.dim();
    RatMatrix m(n * std::max<std::size_t>(S.size(), 1), n);
    for (std::size_t s = 0; s < S.size(); ++s)
        for (std::size_t a = 0; a < n; ++a) {
            auto c = A.commutator(A.basis(a), S[s]);
            for (std::size_t r = 0; r < n; ++r) m(s * n + r, a) = c[r];
        }
    return subalgebra(A, kernel(m));
}

bool is_invertible(const StructureAlgebra& A, const RatVector& x) { return !determinant(A.left_mult(x)).is_zero(); }

StructureAlgebra change_basis(const StructureAlgebra& A, const RatMatrix& B) {
    auto inv = inverse(B);
    if (!inv) invalid("change of basis is singular");
    std::size_t n = A.dim();
    StructureAlgebra::Table t(n, std::vector<RatVector>(n));
    std::vector<RatVector> cols;
    for (std::size_t a = 0; a < n; ++a) cols.push_back(B.column(a));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = inv->apply(A.mul(cols[a], cols[b]));
    return StructureAlgebra(std::move(t), inv->apply(A.unit()));
}

InvolutiveAlgebra change_basis(const InvolutiveAlgebra& A, const RatMatrix& B) {
    auto inv = inverse(B);
    if (!inv) invalid("change of basis is singular");
    auto algebra = change_basis(A.algebra, B);
    LinearInvolution sigma(algebra, *inv * A.involution.matrix() * B);
    return {std::move(algebra), std::move(sigma)};
}

}  // namespace edim

#include "edim/linalg.hpp"

#include "edim/error.hpp"

#include <stdexcept>

namespace edim {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& columns, std::size_t rows) {
    RatMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw AlgebraError(ErrorCode::InvalidInput, "column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

RatVector RatMatrix::column(std::size_t c) const {
    RatVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

RatVector RatMatrix::apply(const RatVector& v) const {
    if (v.size() != cols_) throw AlgebraError(ErrorCode::InvalidInput, "matrix-vector shape mismatch");
    RatVector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rat& m = (*this)(r, c);
            if (!m.is_zero()) out[r] += m * v[c];
        }
    }
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool RatMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != Rat(r == c ? 1 : 0)) return false;
    return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw AlgebraError(ErrorCode::InvalidInput, "matrix product shape mismatch");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rat& y = b(k, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AlgebraError(ErrorCode::InvalidInput, "shape mismatch");
    RatMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AlgebraError(ErrorCode::InvalidInput, "shape mismatch");
    RatMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

namespace {

using IntRow = std::vector<Int>;

IntRow primitive_row(const RatMatrix& a, std::size_t r) {
    Int l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        const Rat& x = a(r, c);
        if (x.is_zero()) continue;
        Int d = x.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    IntRow row(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        const Rat& x = a(r, c);
        if (!x.is_zero()) row[c] = x.num() * (l / x.den());
    }
    return row;
}

void remove_content(IntRow& row) {
    Int g = 0;
    for (auto& x : row) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& x : row)
            if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

struct Echelon {
    std::vector<IntRow> rows;
    std::vector<std::size_t> pivot_cols;  // pivot column of rows[i] for i < rank
};

// Row echelon form; with full = true also clears entries above each pivot.
Echelon reduce(const RatMatrix& a, bool full) {
    Echelon e;
    e.rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) e.rows.push_back(primitive_row(a, r));
    std::size_t m = e.rows.size();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < a.cols() && pr < m; ++c) {
        std::size_t best = m;
        std::size_t best_bits = 0;
        for (std::size_t i = pr; i < m; ++i) {
            const Int& x = e.rows[i][c];
            if (x == 0) continue;
            std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
            if (best == m || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == m) continue;
        std::swap(e.rows[pr], e.rows[best]);
        const IntRow& piv = e.rows[pr];
        std::size_t start = full ? 0 : pr + 1;
        for (std::size_t i = start; i < m; ++i) {
            if (i == pr) continue;
            IntRow& row = e.rows[i];
            if (row[c] == 0) continue;
            Int g;
            mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), row[c].get_mpz_t());
            Int fp = row[c] / g;  // multiplier for the pivot row
            Int fr = piv[c] / g;  // multiplier for this row
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (piv[j] == 0) {
                    if (row[j] != 0) row[j] *= fr;
                } else {
                    row[j] = fr * row[j] - fp * piv[j];
                }
            }
            remove_content(row);
        }
        e.pivot_cols.push_back(c);
        ++pr;
    }
    e.rows.resize(m);
    return e;
}

}  // namespace

std::size_t rank(const RatMatrix& a) { return reduce(a, false).pivot_cols.size(); }

std::vector<RatVector> kernel(const RatMatrix& a) {
    Echelon e = reduce(a, true);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(a.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
            const Int& num = e.rows[i][f];
            if (num == 0) continue;
            v[e.pivot_cols[i]] = -Rat(num, e.rows[i][e.pivot_cols[i]]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
    if (b.size() != a.rows()) throw AlgebraError(ErrorCode::InvalidInput, "solve: rhs length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    Echelon e = reduce(aug, true);
    RatVector x(a.cols());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        std::size_t pc = e.pivot_cols[i];
        if (pc == a.cols()) return std::nullopt;
        x[pc] = Rat(e.rows[i][a.cols()], e.rows[i][pc]);
    }
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw AlgebraError(ErrorCode::InvalidInput, "inverse of non-square matrix");
    std::size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = 1;
    }
    Echelon e = reduce(aug, true);
    if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Int& piv = e.rows[i][i];
        for (std::size_t c = 0; c < n; ++c)
            if (e.rows[i][n + c] != 0) inv(i, c) = Rat(e.rows[i][n + c], piv);
    }
    return inv;
}

Rat determinant(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw AlgebraError(ErrorCode::InvalidInput, "determinant of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    std::vector<IntRow> m;
    Int denom = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Int l = 1;
        for (std::size_t c = 0; c < n; ++c) {
            Int d = a(r, c).den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        IntRow row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = a(r, c).num() * (l / a(r, c).den());
        denom *= l;
        m.push_back(std::move(row));
    }
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return Rat(Int(sign * m[n - 1][n - 1]), denom);
}

bool is_zero(const RatVector& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

RatVector add(const RatVector& a, const RatVector& b) {
    RatVector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

RatVector sub(const RatVector& a, const RatVector& b) {
    RatVector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

RatVector scale(const RatVector& a, const Rat& s) {
    RatVector out = a;
    for (auto& x : out) x *= s;
    return out;
}

}  // namespace edim

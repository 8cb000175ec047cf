#ifndef EDIM_LINALG_HPP
#define EDIM_LINALG_HPP

#include "edim/rat.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace edim {

using RatVector = std::vector<Rat>;

// Dense row-major matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    // Matrix whose columns are the given vectors (all of equal length).
    static RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatVector column(std::size_t c) const;
    RatVector apply(const RatVector& v) const;
    RatMatrix transpose() const;
    bool is_identity() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

// Exact elimination. Rows are scaled to primitive integer vectors and
// reduced fraction-free, dividing every updated row by its content; the
// pivot in each column is the candidate of smallest bit size.
std::size_t rank(const RatMatrix& a);

// Basis of {x : a x = 0}, one vector per free column, in column order.
std::vector<RatVector> kernel(const RatMatrix& a);

// Some x with a x = b, or nullopt if the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

std::optional<RatMatrix> inverse(const RatMatrix& a);

// Bareiss determinant of a square matrix.
Rat determinant(const RatMatrix& a);

bool is_zero(const RatVector& v);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const RatVector& a, const Rat& s);

}  // namespace edim

#endif

#pragma once

#include "homalg/field.hpp"

#include <vector>
#include <optional>
#include <cstddef>

namespace homalg {

using Vec = std::vector<Scalar>;

Vec vec_add(const Field& F, const Vec& a, const Vec& b);
Vec vec_sub(const Field& F, const Vec& a, const Vec& b);
Vec vec_scale(const Field& F, const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);
Vec vec_zero(std::size_t n);

/* Dense matrix over a fixed field, row-major. Immutable use is intended:
 * operations return new matrices. */
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(const Field& F, std::size_t rows, std::size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

    static Matrix identity(const Field& F, std::size_t n);
    static Matrix from_rows(const Field& F, const std::vector<Vec>& rows, std::size_t cols);

    const Field& field() const { return F_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Scalar& v) { a_[i * cols_ + j] = F_.reduce(v); }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    /* v * A for a row vector v of length rows(). */
    Vec apply_row(const Vec& v) const;
    /* A * x for a column vector x of length cols(). */
    Vec apply_col(const Vec& x) const;

    std::string describe() const;

private:
    Field F_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/* Reduced row echelon form. Pivot choice: first nonzero entry scanning
 * left-to-right, top-to-bottom, so results are deterministic. */
struct Echelon {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

Echelon rref(const Matrix& A);

std::size_t rank(const Matrix& A);

/* Basis of {x : A x = 0} (column vectors of length cols(A)). */
std::vector<Vec> kernel_basis(const Matrix& A);

/* Exact solution of A x = b. Returns (particular solution, kernel basis)
 * when consistent. */
std::optional<std::pair<Vec, std::vector<Vec>>> solve_linear(const Matrix& A, const Vec& b);

/* Row-vector variants used by module maps (v maps to v * A). */
std::vector<Vec> left_kernel_basis(const Matrix& A);
std::optional<Vec> solve_row(const Matrix& A, const Vec& target); // x * A = target

/* Echelonized row span of a list of vectors; the workhorse for subspace
 * arithmetic (membership, dimension, canonical bases, quotients). */
class RowSpan {
public:
    RowSpan(const Field& F, std::size_t width) : F_(F), width_(width) {}

    const Field& field() const { return F_; }
    std::size_t width() const { return width_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }
    /* Columns that are not pivots; unit vectors there descend to a basis of
     * the quotient by the span, and reduce() lands exactly on them. */
    std::vector<std::size_t> complement_cols() const;

    /* Returns true if the vector enlarged the span. */
    bool add(const Vec& v);
    void add_all(const std::vector<Vec>& vs);
    bool contains(const Vec& v) const;
    /* Residue of v modulo the span (deterministic canonical form). */
    Vec reduce(const Vec& v) const;
    /* Coordinates of v in the stored basis, if v lies in the span. */
    std::optional<Vec> coordinates(const Vec& v) const;

private:
    Field F_;
    std::size_t width_;
    std::vector<Vec> rows_;              // reduced echelon rows
    std::vector<std::size_t> pivots_;    // pivot column per row
};

} // namespace homalg

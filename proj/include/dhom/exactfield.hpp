#pragma once
// Exact linear algebra over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dhom {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// Dense row-major matrix of exact rationals.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols);
    static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec column(std::size_t c) const;
    Vec row(std::size_t r) const;
    std::vector<Vec> columns() const;

    Mat transpose() const;
    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Mat& m);
    /// Keeps the listed columns, in order.
    Mat select_columns(const std::vector<std::size_t>& idx) const;
    Mat select_rows(const std::vector<std::size_t>& idx) const;

    bool is_zero() const;
    bool operator==(const Mat& o) const;

    Mat operator*(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Scalar& s) const;
    Mat& operator+=(const Mat& o);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);
Mat direct_sum(const Mat& a, const Mat& b);

struct Echelon {
    Mat reduced;                      // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Basis of the right null space {x : m x = 0}.
std::vector<Vec> kernel_basis(const Mat& m);
/// Same basis packed as the columns of a cols(m) x k matrix.
Mat kernel_matrix(const Mat& m);
/// A particular solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);
/// Solves m X = b column by column.
std::optional<Mat> solve(const Mat& m, const Mat& b);
/// Columns of m forming a basis of its column space (pivot columns).
Mat column_space(const Mat& m);
/// Rows r with r m = 0, packed as the rows of the result.
Mat left_kernel_matrix(const Mat& m);
/// Indices of a maximal independent prefix-greedy subset of the columns.
std::vector<std::size_t> independent_columns(const Mat& m);

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Scalar& s);
Vec concat(const Vec& a, const Vec& b);
std::string to_string(const Scalar& s);

}  // namespace dhom
